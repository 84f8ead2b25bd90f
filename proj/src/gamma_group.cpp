#include "tms/gamma_group.hpp"

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tms {

namespace {

void require_even_length(int two_g, const char* who) {
    if (two_g < 2 || two_g % 2 != 0) {
        throw std::invalid_argument(std::string(who) + ": bit length must be even and >= 2");
    }
}

void require_genus(int g, const char* who) {
    if (g < 2) {
        throw std::invalid_argument(std::string(who) + ": genus must be >= 2, got " +
                                    std::to_string(g));
    }
}

}  // namespace

GroupElement GroupElement::zero(int two_g) {
    require_even_length(two_g, "GroupElement::zero");
    return {std::vector<std::uint8_t>(static_cast<std::size_t>(two_g), 0)};
}

GroupElement GroupElement::from_index(std::uint64_t index, int two_g) {
    require_even_length(two_g, "GroupElement::from_index");
    if (two_g > 63) throw std::invalid_argument("GroupElement::from_index: length > 63");
    GroupElement e = zero(two_g);
    for (int i = 0; i < two_g; ++i) {
        e.bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((index >> i) & 1u);
    }
    return e;
}

bool GroupElement::is_zero() const {
    for (auto b : bits) {
        if (b) return false;
    }
    return true;
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
    if (bits.size() != other.bits.size()) {
        throw std::invalid_argument("GroupElement::operator+: length mismatch");
    }
    GroupElement r = *this;
    for (std::size_t i = 0; i < bits.size(); ++i) r.bits[i] ^= other.bits[i];
    return r;
}

GroupCharacter GroupCharacter::trivial(int two_g) {
    require_even_length(two_g, "GroupCharacter::trivial");
    return {std::vector<std::uint8_t>(static_cast<std::size_t>(two_g), 0)};
}

bool GroupCharacter::is_trivial() const {
    for (auto b : bits) {
        if (b) return false;
    }
    return true;
}

int GroupCharacter::evaluate(const GroupElement& x) const {
    if (bits.size() != x.bits.size()) {
        throw std::invalid_argument("GroupCharacter::evaluate: length mismatch");
    }
    int acc = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) acc ^= (bits[i] & x.bits[i]);
    return acc;
}

GroupCharacter GroupCharacter::operator+(const GroupCharacter& other) const {
    if (bits.size() != other.bits.size()) {
        throw std::invalid_argument("GroupCharacter::operator+: length mismatch");
    }
    GroupCharacter r = *this;
    for (std::size_t i = 0; i < bits.size(); ++i) r.bits[i] ^= other.bits[i];
    return r;
}

int weil_pairing(const GroupElement& a, const GroupElement& b) {
    if (a.bits.size() != b.bits.size()) {
        throw std::invalid_argument("weil_pairing: length mismatch");
    }
    require_even_length(a.two_g(), "weil_pairing");
    std::size_t g = a.bits.size() / 2;
    int acc = 0;
    for (std::size_t i = 0; i < g; ++i) {
        acc ^= (a.bits[i] & b.bits[g + i]) ^ (a.bits[g + i] & b.bits[i]);
    }
    return acc;
}

GroupCharacter element_to_character(const GroupElement& gamma) {
    require_even_length(gamma.two_g(), "element_to_character");
    // weil_pairing(gamma, x) as a functional of x: the coefficient of x_i
    // is gamma_{g+i}, and of x_{g+i} is gamma_i. Swapping the halves
    // therefore realizes w.
    std::size_t g = gamma.bits.size() / 2;
    GroupCharacter kappa = GroupCharacter::trivial(gamma.two_g());
    for (std::size_t i = 0; i < g; ++i) {
        kappa.bits[i] = gamma.bits[g + i];
        kappa.bits[g + i] = gamma.bits[i];
    }
    return kappa;
}

GroupElement character_to_element(const GroupCharacter& kappa) {
    require_even_length(kappa.two_g(), "character_to_element");
    std::size_t g = kappa.bits.size() / 2;
    GroupElement gamma = GroupElement::zero(kappa.two_g());
    for (std::size_t i = 0; i < g; ++i) {
        gamma.bits[i] = kappa.bits[g + i];
        gamma.bits[g + i] = kappa.bits[i];
    }
    return gamma;
}

OpaqueSum& OpaqueSum::operator+=(const OpaqueSum& rhs) {
    known += rhs.known;
    opaque_multiplicity += rhs.opaque_multiplicity;
    return *this;
}

std::string OpaqueSum::to_string() const {
    std::ostringstream os;
    os << known.to_canonical_string();
    if (opaque_multiplicity != 0) os << " + " << opaque_multiplicity << " T";
    return os.str();
}

SumMode sum_mode_from_string(const std::string& name) {
    if (name == "closed_form") return SumMode::closed_form;
    if (name == "enumerate") return SumMode::enumerate;
    throw std::invalid_argument("unknown mode '" + name +
                                "' (expected closed_form or enumerate)");
}

std::string to_string(SumMode mode) {
    return mode == SumMode::closed_form ? "closed_form" : "enumerate";
}

OpaqueSum enumerate_sum_serial(int two_g, const ElementTerm& term) {
    require_even_length(two_g, "enumerate_sum_serial");
    const std::uint64_t count = std::uint64_t{1} << two_g;
    OpaqueSum acc;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        GroupElement gamma = GroupElement::from_index(idx, two_g);
        if (gamma.is_zero()) {
            acc.opaque_multiplicity += 1;
        } else {
            acc.known += term(gamma);
        }
    }
    return acc;
}

OpaqueSum enumerate_sum_parallel(int two_g, const ElementTerm& term) {
    require_even_length(two_g, "enumerate_sum_parallel");
    const std::uint64_t count = std::uint64_t{1} << two_g;
#ifdef _OPENMP
    int num_threads = 1;
#pragma omp parallel
    {
#pragma omp single
        num_threads = omp_get_num_threads();
    }
    std::vector<OpaqueSum> partial(static_cast<std::size_t>(num_threads));
#pragma omp parallel
    {
        OpaqueSum local;
#pragma omp for schedule(static) nowait
        for (std::int64_t signed_idx = 0; signed_idx < static_cast<std::int64_t>(count);
             ++signed_idx) {
            std::uint64_t idx = static_cast<std::uint64_t>(signed_idx);
            GroupElement gamma = GroupElement::from_index(idx, two_g);
            if (gamma.is_zero()) {
                local.opaque_multiplicity += 1;
            } else {
                local.known += term(gamma);
            }
        }
        partial[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
    }
    // Merge in thread order. Exact addition is associative and
    // commutative, so any schedule yields the identical sum.
    OpaqueSum acc;
    for (auto& p : partial) acc += p;
    return acc;
#else
    return enumerate_sum_serial(two_g, term);
#endif
}

ElementTerm stringy_element_term(int g, Side side) {
    require_genus(g, "stringy_element_term");
    // The fixed-locus quotient IE is the same for every nontrivial gamma;
    // precompute it once and let each element pay only the shift lookup.
    LaurentPoly fixed = ie_fixed_quotient(g, side);
    return [g, fixed](const GroupElement& gamma) {
        int shift = fermionic_shift(g, gamma.is_zero());
        return fixed * LaurentPoly::uv(shift);
    };
}

OpaqueSum stringy_sum(int g, Side side, SumMode mode, const ElementTerm& per_element_term,
                      int enumerate_bound_bits) {
    require_genus(g, "stringy_sum");
    ElementTerm term = per_element_term ? per_element_term : stringy_element_term(g, side);
    const int two_g = 2 * g;
    if (mode == SumMode::enumerate) {
        if (two_g > enumerate_bound_bits) {
            throw EnumerationBoundError(
                "stringy_sum: enumerating 2^" + std::to_string(two_g) +
                " elements exceeds the bound 2^" + std::to_string(enumerate_bound_bits) +
                "; use closed_form mode or raise the bound");
        }
        return enumerate_sum_parallel(two_g, term);
    }
    // Closed form: one representative nontrivial element, counted
    // 2^(2g) - 1 times, plus the opaque gamma = 0 term.
    GroupElement representative = GroupElement::from_index(1, two_g);
    mpq_class count = mpq_class(mpz_class(1) << two_g) - 1;
    OpaqueSum acc;
    acc.known = LaurentPoly(count) * term(representative);
    acc.opaque_multiplicity = 1;
    return acc;
}

OpaqueSum isotypic_sum(int g, Side side) {
    require_genus(g, "isotypic_sum");
    LaurentPoly kappa_term =
        side == Side::dolbeault ? ie_dol_sl2_kappa(g) : ie_betti_sl2_kappa(g);
    mpq_class count = mpq_class(mpz_class(1) << (2 * g)) - 1;
    OpaqueSum acc;
    acc.known = LaurentPoly(count) * kappa_term;
    acc.opaque_multiplicity = 1;
    return acc;
}

}  // namespace tms
