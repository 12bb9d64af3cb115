#include "detlab/detmethod.hpp"

namespace detlab {

int multiplicity_at(const MPoly<GFElem>& g, const std::vector<GFElem>& P0) {
  if (g.is_zero()) throw DomainError("multiplicity of the zero polynomial");
  int n = g.nvars();
  if (static_cast<int>(P0.size()) != n) throw DomainError("point has the wrong length");
  int i0 = -1;
  for (int i = 0; i < n; ++i)
    if (!P0[static_cast<std::size_t>(i)].is_zero()) {
      i0 = i;
      break;
    }
  if (i0 < 0) throw DomainError("the zero vector is not a projective point");
  GFElem inv = P0[static_cast<std::size_t>(i0)].inverse();
  std::vector<MPoly<GFElem>> subs;
  for (int j = 0; j < n; ++j) {
    GFElem pj = P0[static_cast<std::size_t>(j)] * inv;
    if (j == i0)
      subs.push_back(MPoly<GFElem>::constant(n, GFElem(1)));
    else
      subs.push_back(MPoly<GFElem>::variable(n, j) + MPoly<GFElem>::constant(n, pj));
  }
  MPoly<GFElem> t = g.compose(subs);
  if (t.is_zero()) throw DomainError("the dehomogenized polynomial vanishes identically");
  int mu = -1;
  for (const auto& [e, c] : t.terms()) {
    int td = total_degree(e);
    if (mu < 0 || td < mu) mu = td;
  }
  return mu;
}

}  // namespace detlab
