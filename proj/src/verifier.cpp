#include "tms/verifier.hpp"

#include <chrono>

#include "json.hpp"

#include "tms/hodge_oracle.hpp"

namespace tms {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void finalize(VerificationReport& report, const LaurentPoly& lhs, Clock::time_point start) {
    report.passed = report.difference.is_zero() && report.opaque_delta == 0;
    report.lhs_terms = lhs.term_count();
    report.lhs_max_degree = lhs.max_total_degree();
    report.elapsed_ms = ms_since(start);
}

}  // namespace

std::string VerificationReport::to_json_string(bool include_timing) const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    j["genus"] = genus;
    j["side"] = side ? nlohmann::ordered_json(to_string(*side)) : nlohmann::ordered_json(nullptr);
    j["passed"] = passed;
    j["difference"] = difference.to_canonical_string();
    if (opaque_delta != 0) j["opaque_delta"] = opaque_delta;
    if (gap) j["gap"] = gap->to_canonical_string();
    j["lhs_terms"] = lhs_terms;
    j["lhs_max_degree"] = lhs_max_degree;
    j["elapsed_ms"] = include_timing ? elapsed_ms : 0.0;
    j["provenance"] = provenance;
    return j.dump();
}

VerificationReport check_tms_kappa(int g, Side side) {
    auto start = Clock::now();
    VerificationReport report;
    report.identity = "tms-kappa";
    report.genus = g;
    report.side = side;
    report.provenance =
        "per-kappa topological mirror symmetry: the kappa-isotypic IE of the SL2 space "
        "equals IE of the fixed-locus quotient times (uv)^F(gamma)";

    LaurentPoly lhs = side == Side::dolbeault ? ie_dol_sl2_kappa(g) : ie_betti_sl2_kappa(g);
    BigradedSpace model = side == Side::dolbeault ? dolbeault_fixed_model(g) : betti_fixed_model(g);
    LaurentPoly rhs =
        e_polynomial(model) * LaurentPoly::uv(fermionic_shift(g, /*gamma_is_trivial=*/false));

    report.difference = lhs - rhs;
    finalize(report, lhs, start);
    return report;
}

VerificationReport check_tms_total(int g, Side side, SumMode mode, int enumerate_bound_bits) {
    auto start = Clock::now();
    VerificationReport report;
    report.identity = "tms-total";
    report.genus = g;
    report.side = side;
    report.provenance =
        "total topological mirror symmetry: IE of the SL2 space (sum over characters) "
        "equals the stringy IE of the PGL2 space (sum over group elements); the two "
        "opaque trivial terms cancel structurally";

    OpaqueSum lhs = isotypic_sum(g, side);
    OpaqueSum rhs = stringy_sum(g, side, mode, {}, enumerate_bound_bits);

    report.difference = lhs.known - rhs.known;
    report.opaque_delta = lhs.opaque_multiplicity - rhs.opaque_multiplicity;
    finalize(report, lhs.known, start);
    return report;
}

VerificationReport check_ordinary_failure(int g) {
    auto start = Clock::now();
    VerificationReport report;
    report.identity = "ordinary-failure";
    report.genus = g;
    report.side = Side::betti;
    report.provenance =
        "failure of mirror symmetry for ordinary cohomology: the stringy term exceeds "
        "the ordinary E-polynomial by exactly (uv)^(2g-2); the check passes when that "
        "predicted gap is reproduced";

    LaurentPoly ordinary = e_betti_sl2_kappa_ordinary(g);
    LaurentPoly stringy_term = ie_fixed_quotient(g, Side::betti) *
                               LaurentPoly::uv(fermionic_shift(g, /*gamma_is_trivial=*/false));
    LaurentPoly observed_gap = stringy_term - ordinary;
    LaurentPoly predicted_gap = LaurentPoly::uv(2 * g - 2);

    report.gap = observed_gap;
    report.difference = observed_gap - predicted_gap;
    finalize(report, ordinary, start);
    return report;
}

VerificationReport check_perverse_kappa(int g) {
    auto start = Clock::now();
    VerificationReport report;
    report.identity = "perverse-kappa";
    report.genus = g;
    report.side = Side::dolbeault;
    report.provenance =
        "per-kappa perverse mirror symmetry: the perverse refinement of the isotypic IE "
        "equals the perverse fixed-quotient polynomial times (uvq)^F(gamma)";

    LaurentPoly lhs = pie_dol_sl2_kappa(g);
    int shift = fermionic_shift(g, /*gamma_is_trivial=*/false);
    LaurentPoly uvq_shift = LaurentPoly::monomial(1, {shift, shift, shift});
    LaurentPoly rhs = pie_fixed_quotient(g) * uvq_shift;

    report.difference = lhs - rhs;
    finalize(report, lhs, start);
    return report;
}

VerificationReport check_rhl_symmetry(const LaurentPoly& p, unsigned dim) {
    auto start = Clock::now();
    VerificationReport report;
    report.identity = "rhl-symmetry";
    report.genus = 0;
    report.provenance =
        "relative hard Lefschetz symmetry: the polynomial is fixed by "
        "p |-> (uvq)^dim p(u, v, 1/(uvq))";

    report.difference = rhl_transform(p, dim) - p;
    finalize(report, p, start);
    return report;
}

VerificationReport check_rhl_kappa(int g) {
    LaurentPoly p = pie_dol_sl2_kappa(g);
    unsigned dim = static_cast<unsigned>(total_dimension(2, g));
    VerificationReport report = check_rhl_symmetry(p, dim);
    report.identity = "rhl-kappa";
    report.genus = g;
    report.side = Side::dolbeault;
    report.provenance =
        "relative hard Lefschetz applied to the isotypic piece alone: observed not to "
        "hold per kappa (the symmetry involves the opaque trivial component), so a "
        "failure here is the expected outcome";
    return report;
}

VerificationReport check_q1_specialization(int g) {
    auto start = Clock::now();
    VerificationReport report;
    report.identity = "q1-specialization";
    report.genus = g;
    report.side = Side::dolbeault;
    report.provenance =
        "q = 1 erasure: the perverse polynomials specialize to their unrefined "
        "counterparts";

    LaurentPoly lhs = pie_dol_sl2_kappa(g);
    LaurentPoly d1 = specialize_q1(lhs) - ie_dol_sl2_kappa(g);
    LaurentPoly d2 = specialize_q1(pie_fixed_quotient(g)) - ie_fixed_quotient(g, Side::dolbeault);

    // First failing deviation; zero iff both specializations hold.
    report.difference = d1.is_zero() ? d2 : d1;
    finalize(report, lhs, start);
    return report;
}

}  // namespace tms
