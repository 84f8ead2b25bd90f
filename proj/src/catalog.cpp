#include "tms/catalog.hpp"

#include <stdexcept>

namespace tms {

namespace {

void require_genus(int g, const char* who) {
    if (g < 2) {
        throw std::invalid_argument(std::string(who) + ": genus must be >= 2, got " +
                                    std::to_string(g));
    }
}

const mpq_class kHalf(1, 2);

LaurentPoly one_plus_u() { return LaurentPoly::u() + LaurentPoly(1); }
LaurentPoly one_plus_v() { return LaurentPoly::v() + LaurentPoly(1); }
LaurentPoly u_minus_one() { return LaurentPoly::u() - LaurentPoly(1); }
LaurentPoly v_minus_one() { return LaurentPoly::v() - LaurentPoly(1); }

/// (1/2)((u+1)^n (v+1)^n + (u-1)^n (v-1)^n): the even part of
/// (u+1)^n (v+1)^n, which is the inversion-invariant half of the
/// cohomology of an n-dimensional abelian variety.
LaurentPoly abelian_even_part(unsigned n) {
    LaurentPoly plus = pow(one_plus_u(), n) * pow(one_plus_v(), n);
    LaurentPoly minus = pow(u_minus_one(), n) * pow(v_minus_one(), n);
    return LaurentPoly(kHalf) * (plus + minus);
}

/// (1/2)((uv+1)^n + (uv-1)^n): the inversion-invariant half of
/// H*_c((C*)^n), as a polynomial in uv.
LaurentPoly torus_even_part(unsigned n) {
    LaurentPoly x = LaurentPoly::uv();
    LaurentPoly plus = pow(x + LaurentPoly(1), n);
    LaurentPoly minus = pow(x - LaurentPoly(1), n);
    return LaurentPoly(kHalf) * (plus + minus);
}

}  // namespace

std::string to_string(Side side) {
    return side == Side::dolbeault ? "dolbeault" : "betti";
}

Side side_from_string(const std::string& name) {
    if (name == "dolbeault") return Side::dolbeault;
    if (name == "betti") return Side::betti;
    throw std::invalid_argument("unknown side '" + name + "' (expected dolbeault or betti)");
}

std::string to_string(FormulaId id) {
    switch (id) {
        case FormulaId::ie_dol_sl2_kappa: return "ie_dol_sl2_kappa";
        case FormulaId::ie_betti_sl2_kappa: return "ie_betti_sl2_kappa";
        case FormulaId::e_betti_sl2_kappa_ordinary: return "e_betti_sl2_kappa_ordinary";
        case FormulaId::ie_dol_fixed_quotient: return "ie_dol_fixed_quotient";
        case FormulaId::ie_betti_fixed_quotient: return "ie_betti_fixed_quotient";
        case FormulaId::pie_dol_sl2_kappa: return "pie_dol_sl2_kappa";
        case FormulaId::pie_fixed_quotient: return "pie_fixed_quotient";
        case FormulaId::fermionic_shift: return "fermionic_shift";
        case FormulaId::total_dimension: return "total_dimension";
    }
    throw std::logic_error("unreachable");
}

FormulaId formula_from_string(const std::string& name) {
    for (FormulaId id : {FormulaId::ie_dol_sl2_kappa, FormulaId::ie_betti_sl2_kappa,
                         FormulaId::e_betti_sl2_kappa_ordinary, FormulaId::ie_dol_fixed_quotient,
                         FormulaId::ie_betti_fixed_quotient, FormulaId::pie_dol_sl2_kappa,
                         FormulaId::pie_fixed_quotient, FormulaId::fermionic_shift,
                         FormulaId::total_dimension}) {
        if (to_string(id) == name) return id;
    }
    throw std::invalid_argument("unknown formula '" + name + "'");
}

std::string provenance(FormulaId id) {
    switch (id) {
        case FormulaId::ie_dol_sl2_kappa:
            return "kappa-isotypic intersection E-polynomial of the SL2 Dolbeault moduli "
                   "space, kappa nontrivial: (1/2)(uv)^(3g-3)((u+1)^(g-1)(v+1)^(g-1) + "
                   "(u-1)^(g-1)(v-1)^(g-1))";
        case FormulaId::ie_betti_sl2_kappa:
            return "kappa-isotypic intersection E-polynomial of the SL2 Betti moduli space, "
                   "kappa nontrivial: (1/2)(uv)^(2g-2)((uv+1)^(2g-2) + (uv-1)^(2g-2))";
        case FormulaId::e_betti_sl2_kappa_ordinary:
            return "ordinary-cohomology E-polynomial of the same Betti isotypic piece, q = uv: "
                   "(1/2)q^(2g-2)((q+1)^(2g-2) + (q-1)^(2g-2) - 2); differs from the "
                   "intersection-cohomology value by (uv)^(2g-2)";
        case FormulaId::ie_dol_fixed_quotient:
            return "IE of the Dolbeault fixed-locus quotient, the inversion quotient of the "
                   "cotangent bundle of a (g-1)-dimensional abelian variety: "
                   "(uv)^(g-1)(1/2)((u+1)^(g-1)(v+1)^(g-1) + (u-1)^(g-1)(v-1)^(g-1))";
        case FormulaId::ie_betti_fixed_quotient:
            return "IE of the Betti fixed-locus quotient (C*)^(2g-2)/inversion: "
                   "(1/2)((uv+1)^(2g-2) + (uv-1)^(2g-2))";
        case FormulaId::pie_dol_sl2_kappa:
            return "perverse refinement of ie_dol_sl2_kappa: the isotypic piece of IH^d is "
                   "concentrated in perverse degree d-2g+2, so each monomial u^a v^b carries "
                   "q^(a+b-2g+2)";
        case FormulaId::pie_fixed_quotient:
            return "perverse refinement of ie_dol_fixed_quotient: the Hitchin map restricted "
                   "to the fixed locus is the projection T*Prym -> C^(g-1) up to inversion, "
                   "whose perverse filtration is concentrated in degree d, so each monomial "
                   "u^a v^b carries q^(a+b)";
        case FormulaId::fermionic_shift:
            return "Fermionic shift F(gamma) = sum of the eigenvalue weights of gamma on the "
                   "normal bundle of its fixed locus; gamma is an involution, so F equals half "
                   "the codimension: 0 for gamma = 0, else 2g-2";
        case FormulaId::total_dimension:
            return "complex dimension of M(SL_r): 2(r^2-1)(g-1)";
    }
    throw std::logic_error("unreachable");
}

LaurentPoly ie_dol_sl2_kappa(int g) {
    require_genus(g, "ie_dol_sl2_kappa");
    unsigned n = static_cast<unsigned>(g - 1);
    return LaurentPoly::uv(3 * g - 3) * abelian_even_part(n);
}

LaurentPoly ie_betti_sl2_kappa(int g) {
    require_genus(g, "ie_betti_sl2_kappa");
    return LaurentPoly::uv(2 * g - 2) * torus_even_part(static_cast<unsigned>(2 * g - 2));
}

LaurentPoly e_betti_sl2_kappa_ordinary(int g) {
    require_genus(g, "e_betti_sl2_kappa_ordinary");
    // The "-2" knocks out one copy of (uv)^0 inside the even part.
    return LaurentPoly::uv(2 * g - 2) *
           (torus_even_part(static_cast<unsigned>(2 * g - 2)) - LaurentPoly(1));
}

LaurentPoly ie_fixed_quotient(int g, Side side) {
    require_genus(g, "ie_fixed_quotient");
    if (side == Side::dolbeault) {
        return LaurentPoly::uv(g - 1) * abelian_even_part(static_cast<unsigned>(g - 1));
    }
    return torus_even_part(static_cast<unsigned>(2 * g - 2));
}

int fermionic_shift(int g, bool gamma_is_trivial) {
    require_genus(g, "fermionic_shift");
    return gamma_is_trivial ? 0 : 2 * g - 2;
}

int total_dimension(int r, int g) {
    if (r < 2) throw std::invalid_argument("total_dimension: rank must be >= 2");
    require_genus(g, "total_dimension");
    return 2 * (r * r - 1) * (g - 1);
}

LaurentPoly pie_dol_sl2_kappa(int g) {
    require_genus(g, "pie_dol_sl2_kappa");
    return LaurentPoly::q(-(2 * g - 2)) *
           substitute_scaled(ie_dol_sl2_kappa(g), true, true);
}

LaurentPoly pie_fixed_quotient(int g) {
    require_genus(g, "pie_fixed_quotient");
    return substitute_scaled(ie_fixed_quotient(g, Side::dolbeault), true, true);
}

}  // namespace tms
