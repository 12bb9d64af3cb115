#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "detlab/badprimes.hpp"
#include "detlab/constants.hpp"
#include "detlab/detmethod.hpp"
#include "detlab/enumeration.hpp"
#include "detlab/heights.hpp"
#include "detlab/hilbert.hpp"
#include "detlab/linalg.hpp"
#include "detlab/poly_io.hpp"
#include "detlab/presets.hpp"
#include "detlab/primesums.hpp"

using namespace detlab;
using json = nlohmann::ordered_json;

namespace {

struct Opts {
  std::string field = "Q";
  bool json_out = false;
  unsigned threads = 0;
  double budget = constants::kEnumerationBudget;
  std::string constants_version = constants::kConstantsVersion;

  std::string point, poly, gens, order = "grevlex", prime, residue_point, points_file, forms, matrix_file, lines_file;
  std::string base, dir, preset, bounds_text, upto_text = "1000";
  std::vector<std::string> constrain;
  std::string bound = "10", cutoff = "100", tail;
  bool affine = false, proj = false, fit = false, raw = false, window = false, chebyshev = false, sigma = false;
  bool reduce = false, global = false;
  int nvars = 0, k = 6, max_degree = constants::kAuxMaxDegree;
  std::size_t s_cap = 12;
  double kappa = constants::kPiXKappa, kappa2 = constants::kPiXKappaPrime;
};

Opts o;

std::string hex64(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Collects tables, JSON documents and assertions; prints CSV or one JSON document.
class Report {
 public:
  void table(std::vector<std::string> header) {
    header.push_back("constants");
    tables_.push_back({std::move(header), {}});
  }
  void row(std::vector<std::string> cells) {
    cells.push_back(constants::kConstantsVersion);
    auto& t = tables_.back();
    json rec;
    for (std::size_t i = 0; i < cells.size() && i < t.header.size(); ++i) rec[t.header[i]] = cells[i];
    records_.push_back(rec);
    t.rows.push_back(std::move(cells));
  }
  void document(json doc) {
    doc["constants"] = constants::kConstantsVersion;
    records_.push_back(std::move(doc));
    document_mode_ = true;
  }
  void assertion(const std::string& name, bool pass, const std::string& detail = "") {
    assertions_.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    failed_ = failed_ || !pass;
  }
  bool failed() const { return failed_; }

  void print(const std::string& command, const json& config, double seconds) const {
    if (o.json_out || document_mode_) {
      json doc;
      doc["command"] = command;
      doc["constants_version"] = constants::kConstantsVersion;
      doc["config"] = config;
      // Output format and worker count do not change the records.
      json inputs = config;
      inputs.erase("json");
      inputs.erase("threads");
      doc["input_hash"] = hex64(fnv1a(command + "\n" + inputs.dump()));
      doc["records"] = records_;
      doc["assertions"] = assertions_;
      doc["seconds"] = seconds;
      std::cout << doc.dump(2) << "\n";
      return;
    }
    bool first = true;
    for (const auto& t : tables_) {
      if (!first) std::cout << "\n";
      first = false;
      for (std::size_t i = 0; i < t.header.size(); ++i) std::cout << (i ? "," : "") << t.header[i];
      std::cout << "\n";
      for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << csv_cell(r[i]);
        std::cout << "\n";
      }
    }
    for (const auto& a : assertions_)
      if (!a["pass"].get<bool>())
        std::cerr << "assertion failed: " << a["name"].get<std::string>() << " " << a["detail"].get<std::string>() << "\n";
  }

 private:
  struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
  };
  std::vector<Table> tables_;
  json records_ = json::array();
  json assertions_ = json::array();
  bool document_mode_ = false;
  bool failed_ = false;
};

Int parse_int(const std::string& s, const char* what) {
  Int v;
  if (s.empty() || v.set_str(s, 10) != 0) throw ParseError(std::string("expected an integer for ") + what + ", got '" + s + "'");
  return v;
}

std::vector<Int> parse_int_list(const std::string& s, const char* what) {
  std::vector<Int> out;
  for (const auto& part : split_top_level(s, ",")) out.push_back(parse_int(part, what));
  return out;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    auto b = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(a, b - a + 1));
  }
  return out;
}

template <class C>
MPoly<C> shift_up(const MPoly<C>& f) {
  std::vector<MPoly<C>> subs;
  for (int i = 0; i < f.nvars(); ++i) subs.push_back(MPoly<C>::variable(f.nvars() + 1, i + 1));
  return f.with_nvars(f.nvars()).compose(subs);
}

// Affine polynomials are stored with coordinate i as variable i and printed as x_{i+1}.
template <class C>
std::string poly_text(const MPoly<C>& f, bool projective) {
  return projective ? to_text(f) : to_text(shift_up(f));
}

template <class Field>
MPoly<typename Field::Elem> read_poly(const Field& F, bool projective) {
  if (o.poly.empty()) throw ParseError("--poly is required");
  return projective ? parse_poly(F, o.poly) : parse_affine_poly(F, o.poly, o.nvars);
}

template <class Field>
typename Field::Elem parse_integral(const Field& F, const std::string& text) {
  auto x = parse_elem(F, text);
  if (!x.is_integral()) throw ParseError("expected an integral element, got '" + text + "'");
  return x.as_integral();
}

template <class Field>
PrimeId<typename Field::Elem> parse_prime(const Field& F, const std::string& text) {
  return F.prime_of(parse_integral(F, text));
}

template <class Field>
std::vector<GFElem> parse_residue_point(const Field& F, const PrimeId<typename Field::Elem>& p, const std::string& text) {
  auto R = F.residue(p);
  std::vector<GFElem> out;
  for (const auto& part : split_top_level(text, ":,")) out.push_back(R.reduce(parse_integral(F, part)).in(R.field));
  return out;
}

// "p:a,b,c": points must reduce to (a:b:c) (or the affine point) modulo p.
template <class Field>
std::vector<Constraint<typename Field::Elem>> read_constraints(const Field& F) {
  std::vector<Constraint<typename Field::Elem>> out;
  for (const auto& c : o.constrain) {
    auto colon = split_top_level(c, ":");
    if (colon.size() < 2) throw ParseError("constraint must look like p:a,b,c, got '" + c + "'");
    std::string rest = c.substr(colon[0].size() + 1);
    Constraint<typename Field::Elem> k;
    k.prime = parse_prime(F, colon[0]);
    k.point = parse_residue_point(F, k.prime, rest);
    out.push_back(std::move(k));
  }
  return out;
}

template <class Field>
std::vector<typename Field::Elem> parse_integral_point(const Field& F, const std::string& text) {
  std::vector<typename Field::Elem> out;
  for (const auto& part : split_top_level(text, ":,")) out.push_back(parse_integral(F, part));
  return out;
}

template <class E>
std::string vec_text(const std::vector<E>& v, const char* sep = ":") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + RingOps<E>::to_string(v[i]);
  return s;
}

template <class E>
json vec_json(const std::vector<E>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(RingOps<E>::to_string(x));
  return a;
}

json gf_json(const std::vector<GFElem>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

template <class E>
std::string prime_list(const std::vector<PrimeId<E>>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? " " : "") + prime_label(ps[i]);
  return s;
}

CountOptions count_options() {
  CountOptions c;
  c.threads = o.threads;
  c.budget = o.budget;
  return c;
}

// ------------------------------------------------------------ commands

template <class Field>
void cmd_height(const Field& F, Report& rep) {
  rep.table({"field", "object", "input", "hk", "h"});
  if (!o.point.empty()) {
    auto h = relative_height_proj(F, parse_point(F, o.point));
    rep.row({F.name(), "point", o.point, h.hk.get_str(), fmt_double(h.h)});
  }
  if (!o.poly.empty()) {
    bool proj = !o.affine;
    auto f = proj ? parse_poly_k(F, o.poly) : affine_variables(parse_poly_k(F, o.poly));
    auto h = poly_height(F, f, proj ? HeightMode::Projective : HeightMode::Affine);
    rep.row({F.name(), proj ? "poly" : "poly-affine", o.poly, h.hk.get_str(), fmt_double(h.h)});
  }
  if (o.point.empty() && o.poly.empty()) throw ParseError("height needs --point or --poly");
}

template <class E>
std::vector<std::string> count_row(const CountRecord<E>& r) {
  return {r.field, hex64(fnv1a(r.poly)), r.B.get_str(), mode_name(r.mode), r.N.get_str(), fmt_double(r.seconds), hex64(r.checksum)};
}

const std::vector<std::string> kCountHeader{"field", "poly_hash", "B", "mode", "N", "seconds", "checksum"};

template <class Field>
void cmd_count(const Field& F, Report& rep) {
  auto f = read_poly(F, o.proj);
  auto rec = count_points(F, f, parse_int(o.bound, "--bound"), o.proj ? CountMode::Projective : CountMode::Affine,
                          read_constraints(F), count_options());
  rep.table(kCountHeader);
  rep.row(count_row(rec));
}

template <class Field>
void cmd_scan(const Field& F, Report& rep) {
  auto f = read_poly(F, o.proj);
  if (o.bounds_text.empty()) throw ParseError("scan needs --bounds");
  auto cons = read_constraints(F);
  std::vector<std::pair<double, double>> data;
  rep.table(kCountHeader);
  for (const auto& B : parse_int_list(o.bounds_text, "--bounds")) {
    auto rec = count_points(F, f, B, o.proj ? CountMode::Projective : CountMode::Affine, cons, count_options());
    rep.row(count_row(rec));
    data.emplace_back(B.get_d(), rec.N.get_d());
  }
  if (o.fit) {
    auto fit = fit_exponent(data);
    rep.table({"slope", "intercept", "residual", "points"});
    rep.row({fmt_double(fit.slope), fmt_double(fit.intercept), fmt_double(fit.residual), std::to_string(fit.points)});
  }
}

template <class Field>
void cmd_aux(const Field& F, Report& rep) {
  auto f = read_poly(F, o.proj);
  AuxOptions ao;
  ao.max_degree = o.max_degree;
  ao.count = count_options();
  Int B = parse_int(o.bound, "--bound");
  auto cons = read_constraints(F);
  auto a = o.proj ? aux_polynomial_proj(F, f, B, cons, ao) : aux_polynomial_aff(F, f, B, cons, ao);
  json doc;
  doc["field"] = F.name();
  doc["poly"] = poly_text(f, o.proj);
  doc["B"] = B.get_str();
  doc["mode"] = o.proj ? "proj" : "aff";
  doc["M"] = a.M;
  doc["g"] = poly_text(a.g, o.proj);
  doc["s"] = a.s;
  json pts = json::array();
  for (const auto& x : a.points) pts.push_back(vec_json(x));
  doc["points"] = pts;
  doc["kernel_dim"] = a.kernel_dim;
  doc["excluded_dim"] = to_string(a.excluded_dim);
  doc["rank"] = a.rank;
  doc["vanishes"] = a.vanishes;
  doc["f_divides_g"] = a.f_divides_g;
  doc["absolutely_irreducible"] = a.absolutely_irreducible;
  doc["b_f"] = a.b_f;
  doc["b_computed"] = a.b_computed;
  doc["bound"] = a.bound;
  doc["below_bound"] = a.below_bound;
  doc["note"] = a.note;
  rep.document(doc);
  rep.assertion("g vanishes on the points", a.vanishes);
  rep.assertion("f does not divide g", !a.f_divides_g);
}

template <class Field>
void cmd_detval(const Field& F, Report& rep) {
  using E = typename Field::Elem;
  auto f = read_poly(F, true);
  if (o.global) {
    auto g = global_valuation_experiment(F, f, parse_int(o.bound, "--bound"), o.s_cap);
    json doc;
    doc["field"] = F.name();
    doc["poly"] = to_text(f);
    doc["s"] = g.s;
    doc["degree_D"] = g.degree_D;
    doc["det"] = RingOps<E>::to_string(g.det);
    json ps = json::array();
    for (const auto& p : g.primes)
      ps.push_back({{"prime", prime_label(p.prime)}, {"e", p.e}, {"local_floor", p.local_floor.get_str()}, {"good", p.good}, {"ok", p.ok}});
    doc["primes"] = ps;
    doc["weighted_sum"] = g.weighted_sum;
    doc["main_term"] = g.main_term;
    rep.document(doc);
    rep.assertion("local valuation floors", g.all_local_ok);
    return;
  }
  if (o.prime.empty() || o.residue_point.empty() || o.points_file.empty())
    throw ParseError("detval needs --prime, --residue-point and --points (or --global)");
  auto p = parse_prime(F, o.prime);
  auto P = parse_residue_point(F, p, o.residue_point);
  std::vector<std::vector<E>> pts;
  for (const auto& line : read_lines(o.points_file)) pts.push_back(primitive_lift(parse_point(F, line)));
  std::vector<MPoly<E>> forms;
  int v = f.nvars();
  if (!o.forms.empty()) {
    for (const auto& t : split_top_level(o.forms, ";")) forms.push_back(parse_poly(F, t, v));
  } else {
    // Monomials of the smallest degree with enough of them.
    int D = 0;
    while (monomial_basis(v, D).size() < pts.size()) ++D;
    auto basis = monomial_basis(v, D);
    for (std::size_t j = 0; j < pts.size(); ++j) forms.push_back(MPoly<E>::monomial(basis[j], E(1)));
  }
  auto c = local_det_check(F, f, p, P, pts, forms);
  json doc;
  doc["field"] = F.name();
  doc["poly"] = to_text(f);
  doc["prime"] = prime_label(c.prime);
  doc["residue_point"] = gf_json(c.residue_point);
  json jp = json::array();
  for (const auto& x : c.points) jp.push_back(vec_json(x));
  doc["points"] = jp;
  doc["forms"] = c.forms;
  doc["det"] = RingOps<E>::to_string(c.det);
  doc["ord"] = c.ord ? json(*c.ord) : json(nullptr);
  doc["mu"] = c.mu;
  doc["r"] = c.r;
  doc["A"] = c.A.get_str();
  doc["ok"] = c.ok;
  rep.document(doc);
  rep.assertion("ord(det) >= A(s)", c.ok);
}

template <class Field>
void cmd_badprimes(const Field& F, Report& rep) {
  auto f = read_poly(F, !o.affine);
  auto r = bad_primes(F, f, parse_int(o.cutoff, "--cutoff"), constants::kBadPrimeLemmaC);
  rep.table({"field", "poly_hash", "prime", "norm", "filtered"});
  for (const auto& p : r.raw) {
    bool filtered = false;
    for (const auto& q : r.filtered) filtered = filtered || (q.gen == p.gen);
    if (o.raw || filtered) rep.row({F.name(), hex64(fnv1a(r.poly)), prime_label(p), p.norm.get_str(), filtered ? "1" : "0"});
  }
}

template <class Field>
void cmd_bfactor(const Field& F, Report& rep) {
  auto f = read_poly(F, !o.affine);
  auto r = bad_primes(F, f, parse_int(o.cutoff, "--cutoff"), constants::kBadPrimeLemmaC);
  rep.table({"field", "poly_hash", "cutoff", "degree", "beta", "raw", "filtered", "log_b", "b", "log_height", "lemma_bound", "lemma_ok"});
  rep.row({F.name(), hex64(fnv1a(r.poly)), r.cutoff.get_str(), std::to_string(r.degree), fmt_double(r.selector.beta()),
           std::to_string(r.raw.size()), std::to_string(r.filtered.size()), fmt_double(r.log_b), fmt_double(r.b),
           fmt_double(r.log_height), fmt_double(r.lemma_bound), r.lemma_ok ? "1" : "0"});
}

template <class Field>
void cmd_pix(const Field& F, Report& rep) {
  auto f = read_poly(F, true);
  Int cutoff = parse_int(o.cutoff, "--cutoff");
  if (o.point.empty()) {
    auto ps = pi_X(F, f, cutoff);
    rep.table({"field", "poly_hash", "cutoff", "primes"});
    rep.row({F.name(), hex64(fnv1a(to_text(f))), cutoff.get_str(), prime_list(ps)});
    return;
  }
  auto r = pi_x(F, f, parse_point(F, o.point), cutoff, o.kappa, o.kappa2);
  rep.table({"field", "poly_hash", "point", "cutoff", "primes", "sum_log", "bound", "ok"});
  rep.row({F.name(), hex64(fnv1a(to_text(f))), vec_text(r.point), cutoff.get_str(), prime_list(r.primes), fmt_double(r.sum_log),
           fmt_double(r.bound), r.ok ? "1" : "0"});
}

template <class Field>
void cmd_primesums(const Field& F, Report& rep) {
  rep.table({"field", "kind", "Q", "sum", "reference", "deviation"});
  for (const auto& Q : parse_int_list(o.upto_text, "--upto")) {
    PrimeSumReport r;
    std::string kind;
    if (!o.tail.empty()) {
      r = tail_three_halves(F, Q, parse_int(o.tail, "--tail"));
      kind = "tail";
    } else if (o.window) {
      r = bertrand_window(F, Q);
      kind = "window";
    } else if (o.chebyshev) {
      r = chebyshev_sum(F, Q);
      kind = "chebyshev";
    } else {
      r = mertens_sum(F, Q);
      kind = "mertens";
    }
    rep.row({r.field, kind, r.Q.get_str(), fmt_double(r.sum), fmt_double(r.reference), fmt_double(r.deviation)});
  }
}

void cmd_hilbert(Report& rep) {
  if (o.gens.empty()) throw ParseError("hilbert needs --gens");
  RationalField Q;
  std::vector<MPoly<Frac<Int>>> raw;
  int v = o.nvars;
  for (const auto& t : split_top_level(o.gens, ",")) {
    raw.push_back(parse_poly_k(Q, t));
    v = std::max(v, raw.back().nvars());
  }
  std::vector<MPoly<Rat>> gens;
  for (const auto& g : raw) gens.push_back(g.with_nvars(v).map_coeffs<Rat>([](const Frac<Int>& c) { return Rat(c.num, c.den); }));
  MonomialOrder ord{parse_order(o.order), v};
  auto I = leading_ideal(groebner_basis(gens, ord), ord);
  auto hr = hilbert_report(I, o.k);
  std::vector<std::string> header{"k", "h"};
  if (o.sigma) {
    for (int m = 0; m < v; ++m) header.push_back("sigma_" + std::to_string(m));
    for (int m = 0; m < v; ++m) header.push_back("ratio_" + std::to_string(m));
  }
  rep.table(header);
  for (const auto& row : hr.rows) {
    std::vector<std::string> cells{std::to_string(row.k), row.h.get_str()};
    if (o.sigma) {
      for (const auto& s : row.sigma) cells.push_back(s.get_str());
      for (int m = 0; m < v; ++m)
        cells.push_back(row.ratio.empty() ? "" : fmt_double(row.ratio[static_cast<std::size_t>(m)]));
    }
    rep.row(cells);
  }
}

template <class Field>
void cmd_kernel(const Field& F, Report& rep) {
  using E = typename Field::Elem;
  using K = typename Field::K;
  if (o.matrix_file.empty()) throw ParseError("kernel needs --matrix");
  std::ifstream in(o.matrix_file);
  if (!in) throw ParseError("cannot open '" + o.matrix_file + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("matrix file: ") + e.what());
  }
  if (j.is_object()) j = j.at("rows");
  std::vector<std::vector<K>> rows;
  for (const auto& r : j) {
    std::vector<K> row;
    for (const auto& x : r) row.push_back(parse_elem(F, x.is_string() ? x.get<std::string>() : x.dump()));
    rows.push_back(std::move(row));
  }
  auto A = Matrix<K>::from_rows(rows);
  auto kb = rank_kernel(F, A);
  json doc;
  doc["field"] = F.name();
  doc["rows"] = A.rows;
  doc["cols"] = A.cols;
  doc["rank"] = kb.rank;
  json basis = json::array(), heights = json::array();
  for (const auto& v : kb.basis) basis.push_back(vec_json(v));
  for (const auto& h : kb.heights) heights.push_back(h.get_str());
  doc["basis"] = basis;
  doc["heights"] = heights;
  doc["height_product"] = kb.height_product.get_str();
  try {
    doc["arakelov_height_sq"] = arakelov_height_sq(integral_rows(A)).get_str();
  } catch (const DomainError& e) {
    doc["arakelov_height_sq"] = nullptr;
  }
  if (o.reduce && kb.rank < A.cols) {
    auto s = small_kernel_solution(F, A, Rat(constants::kSmallSolutionC));
    json sj;
    sj["vector"] = vec_json<E>(s.vector);
    sj["height"] = s.height.get_str();
    sj["height_of_matrix"] = s.height_of_matrix.get_str();
    sj["C"] = s.C.get_str();
    sj["ok"] = s.ok;
    json rb = json::array();
    for (const auto& v : s.reduced_basis) rb.push_back(vec_json(v));
    sj["reduced_basis"] = rb;
    doc["small_solution"] = sj;
    rep.assertion("small solution bound", s.ok);
  }
  rep.document(doc);
}

template <class Field>
void cmd_lines(const Field& F, Report& rep) {
  using E = typename Field::Elem;
  Int B = parse_int(o.bound, "--bound");
  if (!o.lines_file.empty()) {
    auto f = read_poly(F, false);
    std::vector<std::pair<std::vector<E>, std::vector<E>>> lines;
    for (const auto& line : read_lines(o.lines_file)) {
      auto parts = split_top_level(line, ";");
      if (parts.size() != 2) throw ParseError("line entries look like a1,a2,a3;w1,w2,w3, got '" + line + "'");
      lines.emplace_back(parse_integral_point(F, parts[0]), parse_integral_point(F, parts[1]));
    }
    auto r = lines_on_surface(F, f, lines, B);
    rep.table({"field", "poly_hash", "B", "lines", "union", "bound", "on_surface", "ok"});
    rep.row({F.name(), hex64(fnv1a(to_text(f))), B.get_str(), std::to_string(r.lines), r.union_count.get_str(), fmt_double(r.bound),
             r.all_on_surface ? "1" : "0", r.ok ? "1" : "0"});
    rep.assertion("union count within c d^6 B + |I|", r.ok);
    return;
  }
  if (o.base.empty() || o.dir.empty()) throw ParseError("lines needs --lines with --poly, or --base and --dir");
  auto a = parse_integral_point(F, o.base);
  auto w = parse_integral_point(F, o.dir);
  auto r = line_count(F, a, w, B);
  rep.table({"field", "base", "dir", "B", "count", "height_w", "bound", "ok"});
  rep.row({F.name(), vec_text(a, ","), vec_text(w, ","), B.get_str(), r.count.get_str(), r.height_w.get_str(), fmt_double(r.bound),
           r.ok ? "1" : "0"});
  rep.assertion("count within c B / H(w) + 1", r.ok);
}

template <class Field>
void cmd_growth(const Field& F, Report& rep) {
  using E = typename Field::Elem;
  auto f = read_poly(F, false);
  auto g = dimension_growth_count(F, f, parse_int(o.bound, "--bound"), count_options());
  rep.table({"field", "poly_hash", "B", "N", "sliced", "direction", "gate", "degree", "exponent", "ratio", "target"});
  rep.row({F.name(), hex64(fnv1a(g.direct.poly)), g.direct.B.get_str(), g.direct.N.get_str(), g.trace.sliced_total.get_str(),
           vec_text<E>(g.trace.direction, ","), g.trace.gate_passed ? "1" : "0", std::to_string(g.degree), std::to_string(g.exponent),
           fmt_double(g.ratio), fmt_double(g.target)});
  rep.assertion("sliced recount equals direct count", g.trace.sliced_total == g.direct.N);
}

void cmd_preset(Report& rep) {
  rep.table({"preset", "id", "check", "result", "detail"});
  for (const auto& r : run_preset(o.preset, o.threads)) {
    rep.row({o.preset, std::to_string(r.id), r.name, r.pass ? "PASS" : "FAIL", r.detail});
    rep.assertion(r.name, r.pass, r.detail);
  }
}

json config_echo(const CLI::App* sub) {
  json c = json::object();
  for (const auto* opt : sub->get_options()) {
    if (opt->get_lnames().empty() || opt->get_lnames()[0] == "help" || opt->get_lnames()[0] == "config") continue;
    if (opt->count() == 0) continue;
    auto res = opt->reduced_results();
    if (res.size() == 1)
      c[opt->get_lnames()[0]] = res[0];
    else
      c[opt->get_lnames()[0]] = res;
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"detlab: determinant-method experiments over Q, F_q(T) and Q(i)"};
  app.set_config("--config", "", "TOML/INI file with option values; flags win");
  app.require_subcommand(1);

  auto common = [](CLI::App* s) {
    s->add_option("--field", o.field, "Q, Qi or Fq(T):q=<p>");
    s->add_flag("--json", o.json_out, "emit one JSON document instead of CSV");
    s->add_option("--threads", o.threads, "worker count (default DETLAB_THREADS or hardware)");
    s->add_option("--budget", o.budget, "largest enumeration size")->check(CLI::PositiveNumber);
    s->add_option("--constants", o.constants_version, "expected pinned-constant table version");
  };
  auto poly_opts = [](CLI::App* s) {
    s->add_option("--poly", o.poly, "polynomial in x0..x9");
    s->add_option("--nvars", o.nvars, "number of affine variables (for degenerate inputs)");
  };

  auto* height = app.add_subcommand("height", "height of a point or polynomial");
  common(height);
  height->add_option("--point", o.point, "projective point a:b:c");
  height->add_option("--poly", o.poly, "polynomial");
  height->add_flag("--affine", o.affine, "affine polynomial height");

  auto* count = app.add_subcommand("count", "count zeros of bounded height");
  common(count);
  poly_opts(count);
  count->add_option("--bound", o.bound, "height bound B")->required();
  count->add_flag("--proj", o.proj, "projective points (default affine box)");
  count->add_option("--constrain", o.constrain, "p:a,b,c residue constraint (repeatable)");

  auto* scan = app.add_subcommand("scan", "counts over several bounds");
  common(scan);
  poly_opts(scan);
  scan->add_option("--bounds", o.bounds_text, "comma separated bounds")->required();
  scan->add_flag("--proj", o.proj, "projective points");
  scan->add_flag("--fit", o.fit, "least-squares exponent of N against B");
  scan->add_option("--constrain", o.constrain, "p:a,b,c residue constraint (repeatable)");

  auto* aux = app.add_subcommand("aux", "auxiliary polynomial through all points");
  common(aux);
  poly_opts(aux);
  aux->add_option("--bound", o.bound, "height bound B")->required();
  aux->add_flag("--proj", o.proj, "projective variety");
  aux->add_option("--constrain", o.constrain, "p:a,b,c residue constraint (repeatable)");
  aux->add_option("--max-degree", o.max_degree, "largest degree tried");

  auto* detval = app.add_subcommand("detval", "local determinant valuation certificate");
  common(detval);
  detval->add_option("--poly", o.poly, "form defining X");
  detval->add_option("--prime", o.prime, "prime generator");
  detval->add_option("--residue-point", o.residue_point, "residue point a,b,c");
  detval->add_option("--points", o.points_file, "file with one point a:b:c per line");
  detval->add_option("--forms", o.forms, "forms separated by ';' (default: monomials)");
  detval->add_flag("--global", o.global, "global valuation experiment on the points of height <= B");
  detval->add_option("--bound", o.bound, "height bound for --global");
  detval->add_option("--s", o.s_cap, "number of points for --global");

  auto* bad = app.add_subcommand("badprimes", "primes of bad reduction of a plane curve");
  common(bad);
  poly_opts(bad);
  bad->add_option("--cutoff", o.cutoff, "largest norm tested");
  bad->add_flag("--raw", o.raw, "list the raw bad set, not only the filtered one");
  bad->add_flag("--affine", o.affine, "the polynomial is affine");

  auto* bfac = app.add_subcommand("bfactor", "b(f) from the filtered bad primes");
  common(bfac);
  poly_opts(bfac);
  bfac->add_option("--cutoff", o.cutoff, "largest norm tested");
  bfac->add_flag("--affine", o.affine, "the polynomial is affine");

  auto* pix = app.add_subcommand("pix", "primes where a point or the curve reduces badly");
  common(pix);
  pix->add_option("--poly", o.poly, "form");
  pix->add_option("--point", o.point, "point a,b,c (omit for the variety)");
  pix->add_option("--cutoff", o.cutoff, "largest norm tested");
  pix->add_option("--kappa", o.kappa, "slope of the log bound");
  pix->add_option("--kappa2", o.kappa2, "offset of the log bound");

  auto* ps = app.add_subcommand("primesums", "Mertens, Chebyshev, Bertrand and tail sums");
  common(ps);
  ps->add_option("--upto", o.upto_text, "cutoff Q (comma separated list allowed)");
  ps->add_flag("--window", o.window, "sum over Q <= N(p) <= 2Q");
  ps->add_option("--tail", o.tail, "tail sum up to this cutoff");
  ps->add_flag("--chebyshev", o.chebyshev, "sum of log N(p)");

  auto* hil = app.add_subcommand("hilbert", "Hilbert function of a leading-term ideal");
  common(hil);
  hil->add_option("--gens", o.gens, "generators separated by commas")->required();
  hil->add_option("--order", o.order, "grlex or grevlex");
  hil->add_option("--k", o.k, "largest degree");
  hil->add_option("--nvars", o.nvars, "number of variables");
  hil->add_flag("--sigma", o.sigma, "exponent sums and ratios");

  auto* ker = app.add_subcommand("kernel", "kernel basis, heights and a small solution");
  common(ker);
  ker->add_option("--matrix", o.matrix_file, "JSON file with row-major entries")->required();
  ker->add_flag("--reduce", o.reduce, "size-reduced small kernel vector");

  auto* lines = app.add_subcommand("lines", "points on lines");
  common(lines);
  poly_opts(lines);
  lines->add_option("--lines", o.lines_file, "file with a1,a2,a3;w1,w2,w3 per line");
  lines->add_option("--base", o.base, "base point of a single line");
  lines->add_option("--dir", o.dir, "direction of a single line");
  lines->add_option("--bound", o.bound, "box bound B");

  auto* growth = app.add_subcommand("growth", "affine surface count with slicing recount");
  common(growth);
  poly_opts(growth);
  growth->add_option("--bound", o.bound, "box bound B")->required();

  auto* preset = app.add_subcommand("preset", "named batch of checks");
  common(preset);
  preset->add_option("name", o.preset, "curves, primes, detval, hilbert, growth or all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  std::string name = sub->get_name();
  Report rep;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (o.constants_version != constants::kConstantsVersion)
      throw ParseError("constant table version '" + o.constants_version + "' does not match " + constants::kConstantsVersion);
    FieldSpec spec = make_field(o.field);
    auto run = [&](const auto& F) {
      if (name == "height") cmd_height(F, rep);
      else if (name == "count") cmd_count(F, rep);
      else if (name == "scan") cmd_scan(F, rep);
      else if (name == "aux") cmd_aux(F, rep);
      else if (name == "detval") cmd_detval(F, rep);
      else if (name == "badprimes") cmd_badprimes(F, rep);
      else if (name == "bfactor") cmd_bfactor(F, rep);
      else if (name == "pix") cmd_pix(F, rep);
      else if (name == "primesums") cmd_primesums(F, rep);
      else if (name == "kernel") cmd_kernel(F, rep);
      else if (name == "lines") cmd_lines(F, rep);
      else if (name == "growth") cmd_growth(F, rep);
      else if (name == "hilbert") cmd_hilbert(rep);
      else if (name == "preset") cmd_preset(rep);
    };
    dispatch(spec, run);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 4;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json config = config_echo(sub);
  config["field"] = o.field;
  rep.print(name, config, seconds);
  return rep.failed() ? 3 : 0;
}
