#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tms/catalog.hpp"
#include "tms/laurent.hpp"

namespace tms {

/// Element of Gamma = (Z/2Z)^(2g): a length-2g bit vector under
/// componentwise XOR. Every element is an involution.
struct GroupElement {
    std::vector<std::uint8_t> bits;

    static GroupElement zero(int two_g);
    /// Bits of `index`, lowest bit first; requires two_g <= 63.
    static GroupElement from_index(std::uint64_t index, int two_g);

    int two_g() const { return static_cast<int>(bits.size()); }
    bool is_zero() const;

    GroupElement operator+(const GroupElement& other) const;  // XOR
    bool operator==(const GroupElement&) const = default;
};

/// Character of Gamma, stored as the bit vector of a mod-2 linear
/// functional: evaluation is the dot product mod 2.
struct GroupCharacter {
    std::vector<std::uint8_t> bits;

    static GroupCharacter trivial(int two_g);

    int two_g() const { return static_cast<int>(bits.size()); }
    bool is_trivial() const;

    int evaluate(const GroupElement& x) const;

    GroupCharacter operator+(const GroupCharacter& other) const;
    bool operator==(const GroupCharacter&) const = default;
};

/// Standard symplectic form on (Z/2Z)^(2g):
/// sum_{i=1}^{g} (a_i b_{g+i} + a_{g+i} b_i) mod 2.
/// Throws std::invalid_argument on length mismatch or odd length.
int weil_pairing(const GroupElement& a, const GroupElement& b);

/// The isomorphism w: Gamma -> dual(Gamma), gamma |-> weil_pairing(gamma, .).
GroupCharacter element_to_character(const GroupElement& gamma);

/// Inverse of w: the unique gamma whose pairing functional is kappa.
GroupElement character_to_element(const GroupCharacter& kappa);

/// A Laurent polynomial plus an integer multiple of the opaque symbol T,
/// the trivial-isotypic term IE(M(SL2)/Gamma) that has no closed form
/// here. Equality requires both parts to match, so the unknown is never
/// silently dropped.
struct OpaqueSum {
    LaurentPoly known;
    long opaque_multiplicity = 0;

    OpaqueSum& operator+=(const OpaqueSum& rhs);
    bool operator==(const OpaqueSum&) const = default;

    /// e.g. "15 * u^4 v^4 + 15 * u^2 v^2 + 1 T"
    std::string to_string() const;
};

enum class SumMode { closed_form, enumerate };

SumMode sum_mode_from_string(const std::string& name);
std::string to_string(SumMode mode);

/// Raised when enumerate mode would iterate more than 2^bound elements;
/// the caller should fall back to closed_form.
class EnumerationBoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr int kDefaultEnumerateBoundBits = 24;

/// Per-element contribution to a stringy sum, called for every
/// nontrivial group element.
using ElementTerm = std::function<LaurentPoly(const GroupElement&)>;

/// Serial reference kernel: accumulates term(gamma) over all 2^two_g
/// elements, counting the trivial element into the opaque multiplicity.
OpaqueSum enumerate_sum_serial(int two_g, const ElementTerm& term);

/// OpenMP kernel: identical contract and identical result (exact
/// addition is associative and commutative, and per-thread partial sums
/// are merged in thread order).
OpaqueSum enumerate_sum_parallel(int two_g, const ElementTerm& term);

/// The standard stringy term for nontrivial gamma:
/// ie_fixed_quotient(g, side) * (uv)^F(gamma).
ElementTerm stringy_element_term(int g, Side side);

/// Stringy sum over Gamma: the gamma = 0 term is the opaque unknown,
/// every nontrivial gamma contributes per_element_term(gamma).
/// closed_form multiplies one representative term by 2^(2g)-1; enumerate
/// iterates all elements (requires 2g <= enumerate_bound_bits).
OpaqueSum stringy_sum(int g, Side side, SumMode mode, const ElementTerm& per_element_term = {},
                      int enumerate_bound_bits = kDefaultEnumerateBoundBits);

/// Isotypic sum over the character group: the kappa = 1 term is the same
/// opaque unknown, every nontrivial kappa contributes the isotypic
/// closed form of its side.
OpaqueSum isotypic_sum(int g, Side side);

}  // namespace tms
