#pragma once

#include <string>

#include "tms/laurent.hpp"

namespace tms {

/// The two sides of the non-abelian Hodge correspondence the identities
/// are checked on.
enum class Side { dolbeault, betti };

std::string to_string(Side side);
Side side_from_string(const std::string& name);

/// Identifiers for every closed-form invariant the library knows.
/// docs/formulas.md lists the formula behind each one.
enum class FormulaId {
    ie_dol_sl2_kappa,
    ie_betti_sl2_kappa,
    e_betti_sl2_kappa_ordinary,
    ie_dol_fixed_quotient,
    ie_betti_fixed_quotient,
    pie_dol_sl2_kappa,
    pie_fixed_quotient,
    fermionic_shift,
    total_dimension,
};

std::string to_string(FormulaId id);
FormulaId formula_from_string(const std::string& name);

/// Human-readable derivation note for a formula, printed by the CLI
/// under --show-provenance.
std::string provenance(FormulaId id);

// Closed forms, genus g >= 2 throughout (smaller genus is rejected with
// std::invalid_argument: the fixed loci degenerate below g = 2).

/// IE(M_Dol(SL2))_kappa for nontrivial kappa:
/// (1/2)(uv)^(3g-3) ((u+1)^(g-1)(v+1)^(g-1) + (u-1)^(g-1)(v-1)^(g-1)).
LaurentPoly ie_dol_sl2_kappa(int g);

/// IE(M_B(SL2))_kappa for nontrivial kappa:
/// (1/2)(uv)^(2g-2) ((uv+1)^(2g-2) + (uv-1)^(2g-2)).
LaurentPoly ie_betti_sl2_kappa(int g);

/// Ordinary-cohomology E-polynomial of the same isotypic piece, with
/// q = uv: (1/2)(uv)^(2g-2) ((uv+1)^(2g-2) + (uv-1)^(2g-2) - 2).
LaurentPoly e_betti_sl2_kappa_ordinary(int g);

/// IE of the fixed-locus quotient. Dolbeault side:
/// (uv)^(g-1) * (1/2)((u+1)^(g-1)(v+1)^(g-1) + (u-1)^(g-1)(v-1)^(g-1));
/// Betti side: (1/2)((uv+1)^(2g-2) + (uv-1)^(2g-2)).
LaurentPoly ie_fixed_quotient(int g, Side side);

/// Fermionic shift F(gamma): 0 for the trivial element, 2g-2 otherwise
/// (half the codimension of the fixed locus, gamma being an involution).
int fermionic_shift(int g, bool gamma_is_trivial);

/// dim M(SL_r) = 2(r^2-1)(g-1).
int total_dimension(int r, int g);

/// Perverse refinement of ie_dol_sl2_kappa: every monomial u^a v^b
/// carries q^(a+b-2g+2) (the isotypic piece of IH^d sits in perverse
/// degree d-2g+2, and the formulas are pure, so d = a+b).
LaurentPoly pie_dol_sl2_kappa(int g);

/// Perverse refinement of the Dolbeault fixed-quotient IE: every
/// monomial u^a v^b carries q^(a+b) (perverse degree concentrated in d).
LaurentPoly pie_fixed_quotient(int g);

}  // namespace tms
