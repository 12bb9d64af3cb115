#pragma once

#include <string>

#include "detlab/gf.hpp"
#include "detlab/mpoly.hpp"

namespace detlab {

enum class IrredMethod { Ruppert, ExtensionFactor };

IrredMethod parse_irred_method(const std::string& s);

/// Absolute irreducibility of a polynomial over the finite field `field`.
/// Forms in at most 3 variables are plane curves (padded with unused
/// variables); non-homogeneous input in at most 2 variables is homogenized.
///
/// ExtensionFactor: irreducibility over F_{Q^d} (absolute factors of an
/// irreducible form are conjugate and defined over F_{Q^e} with e | d),
/// decided by Hensel lifting a squarefree specialization and recombining.
/// Ruppert: the dimension of the space of solutions of
/// d/dy(g/f) = d/dx(h/f) counts the absolutely irreducible factors; needs
/// char > d(d-1).
bool abs_irreducible(const GFContext* field, const MPoly<GFElem>& f, IrredMethod method, int max_degree = 8);

/// Number of absolutely irreducible factors from the Ruppert system (for
/// squarefree f with char > d(d-1)).
int ruppert_factor_count(const GFContext* field, const MPoly<GFElem>& f);

}  // namespace detlab
