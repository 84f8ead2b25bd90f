#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <string>

#include "tms/catalog.hpp"

using namespace tms;

namespace {

LaurentPoly mono(long coeff, int a, int b, int c) {
    return LaurentPoly::monomial(mpq_class(coeff), {a, b, c});
}

// Golden files are produced independently by tests/oracle/gen_golden.py.
std::string golden(const std::string& name) {
    std::ifstream in(std::string(TMS_GOLDEN_DIR) + "/" + name);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
    std::string line;
    std::getline(in, line);
    return line;
}

}  // namespace

TEST_CASE("ie_dol_sl2_kappa") {
    CHECK(ie_dol_sl2_kappa(2) == LaurentPoly::uv(4) + LaurentPoly::uv(3));
    CHECK(ie_dol_sl2_kappa(2).to_canonical_string() == golden("ie_dol_sl2_kappa_g2.txt"));
    for (int g = 3; g <= 5; ++g) {
        CHECK(ie_dol_sl2_kappa(g).to_canonical_string() ==
              golden("ie_dol_sl2_kappa_g" + std::to_string(g) + ".txt"));
    }
    // Only the all-plus branch survives at u = v = 1.
    for (int g = 2; g <= 8; ++g) {
        CHECK(evaluate(ie_dol_sl2_kappa(g), 1, 1, 1) == mpq_class(mpz_class(1) << (2 * g - 3)));
    }
    CHECK_THROWS_AS(ie_dol_sl2_kappa(1), std::invalid_argument);
}

TEST_CASE("ie_betti_sl2_kappa") {
    CHECK(ie_betti_sl2_kappa(2) == LaurentPoly::uv(4) + LaurentPoly::uv(2));
    CHECK(ie_betti_sl2_kappa(3) ==
          LaurentPoly::uv(4) * (LaurentPoly::uv(4) + mono(6, 2, 2, 0) + LaurentPoly(1)));
    for (int g = 2; g <= 5; ++g) {
        CHECK(ie_betti_sl2_kappa(g).to_canonical_string() ==
              golden("ie_betti_sl2_kappa_g" + std::to_string(g) + ".txt"));
    }
    // The formula is a polynomial in uv: only diagonal monomials.
    for (int g = 2; g <= 10; ++g) {
        for (const auto& [e, c] : ie_betti_sl2_kappa(g).terms()) {
            CHECK(e.u == e.v);
            CHECK(e.q == 0);
        }
    }
    CHECK_THROWS_AS(ie_betti_sl2_kappa(0), std::invalid_argument);
}

TEST_CASE("e_betti_sl2_kappa_ordinary and the gap") {
    CHECK(e_betti_sl2_kappa_ordinary(2) == LaurentPoly::uv(4));
    CHECK(e_betti_sl2_kappa_ordinary(3) == LaurentPoly::uv(8) + mono(6, 6, 6, 0));
    for (int g = 2; g <= 5; ++g) {
        CHECK(e_betti_sl2_kappa_ordinary(g).to_canonical_string() ==
              golden("e_betti_sl2_kappa_ordinary_g" + std::to_string(g) + ".txt"));
    }
    for (int g = 2; g <= 10; ++g) {
        CHECK(ie_betti_sl2_kappa(g) - e_betti_sl2_kappa_ordinary(g) == LaurentPoly::uv(2 * g - 2));
    }
}

TEST_CASE("ie_fixed_quotient") {
    CHECK(ie_fixed_quotient(2, Side::dolbeault) == LaurentPoly::uv() + LaurentPoly::uv(2));
    CHECK(ie_fixed_quotient(2, Side::betti) == LaurentPoly::uv(2) + LaurentPoly(1));
    for (int g = 2; g <= 5; ++g) {
        CHECK(ie_fixed_quotient(g, Side::dolbeault).to_canonical_string() ==
              golden("ie_dol_fixed_quotient_g" + std::to_string(g) + ".txt"));
        CHECK(ie_fixed_quotient(g, Side::betti).to_canonical_string() ==
              golden("ie_betti_fixed_quotient_g" + std::to_string(g) + ".txt"));
    }
    // The defining relation to the kappa formulas.
    for (int g = 2; g <= 10; ++g) {
        CHECK(ie_fixed_quotient(g, Side::dolbeault) * LaurentPoly::uv(2 * g - 2) ==
              ie_dol_sl2_kappa(g));
        CHECK(ie_fixed_quotient(g, Side::betti) * LaurentPoly::uv(2 * g - 2) ==
              ie_betti_sl2_kappa(g));
    }
}

TEST_CASE("fermionic shift and total dimension") {
    CHECK(fermionic_shift(2, false) == 2);
    CHECK(fermionic_shift(5, false) == 8);
    for (int g = 2; g <= 12; ++g) CHECK(fermionic_shift(g, true) == 0);

    CHECK(total_dimension(2, 2) == 6);
    CHECK(total_dimension(2, 3) == 12);
    CHECK(total_dimension(3, 2) == 16);
    CHECK_THROWS_AS(total_dimension(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(fermionic_shift(1, false), std::invalid_argument);
}

TEST_CASE("pie_dol_sl2_kappa") {
    CHECK(pie_dol_sl2_kappa(2) == mono(1, 4, 4, 6) + mono(1, 3, 3, 4));
    for (int g = 2; g <= 5; ++g) {
        CHECK(pie_dol_sl2_kappa(g).to_canonical_string() ==
              golden("pie_dol_sl2_kappa_g" + std::to_string(g) + ".txt"));
    }
    // q-weight of every monomial is a+b-2g+2.
    for (int g = 2; g <= 8; ++g) {
        for (const auto& [e, c] : pie_dol_sl2_kappa(g).terms()) {
            CHECK(e.q == e.u + e.v - 2 * g + 2);
        }
        CHECK(specialize_q1(pie_dol_sl2_kappa(g)) == ie_dol_sl2_kappa(g));
    }
}

TEST_CASE("pie_fixed_quotient") {
    CHECK(pie_fixed_quotient(2) == mono(1, 1, 1, 2) + mono(1, 2, 2, 4));
    for (int g = 2; g <= 5; ++g) {
        CHECK(pie_fixed_quotient(g).to_canonical_string() ==
              golden("pie_fixed_quotient_g" + std::to_string(g) + ".txt"));
    }
    for (int g = 2; g <= 8; ++g) {
        CHECK(specialize_q1(pie_fixed_quotient(g)) == ie_fixed_quotient(g, Side::dolbeault));
    }
}

TEST_CASE("kappa formulas have non-negative integer coefficients") {
    for (int g = 2; g <= 10; ++g) {
        for (const LaurentPoly& p :
             {ie_dol_sl2_kappa(g), ie_betti_sl2_kappa(g), e_betti_sl2_kappa_ordinary(g),
              ie_fixed_quotient(g, Side::dolbeault), ie_fixed_quotient(g, Side::betti),
              pie_dol_sl2_kappa(g), pie_fixed_quotient(g)}) {
            for (const auto& [e, c] : p.terms()) {
                CHECK(c > 0);
                CHECK(c.get_den() == 1);
            }
        }
    }
}

TEST_CASE("formula ids round trip and carry provenance") {
    for (FormulaId id : {FormulaId::ie_dol_sl2_kappa, FormulaId::ie_betti_sl2_kappa,
                         FormulaId::e_betti_sl2_kappa_ordinary, FormulaId::ie_dol_fixed_quotient,
                         FormulaId::ie_betti_fixed_quotient, FormulaId::pie_dol_sl2_kappa,
                         FormulaId::pie_fixed_quotient, FormulaId::fermionic_shift,
                         FormulaId::total_dimension}) {
        CHECK(formula_from_string(to_string(id)) == id);
        CHECK(!provenance(id).empty());
    }
    CHECK_THROWS_AS(formula_from_string("no_such_formula"), std::invalid_argument);
    CHECK(side_from_string("betti") == Side::betti);
    CHECK_THROWS_AS(side_from_string("derham"), std::invalid_argument);
}
