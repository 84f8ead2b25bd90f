#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tms/laurent.hpp"

namespace tms {

/// One bigraded cohomology class with multiplicity: Hodge type (p,q),
/// compactly supported degree d, optional perverse degree k, and the
/// character (+1 or -1) of the inversion involution on it.
struct CohClass {
    int p = 0;
    int q = 0;
    int d = 0;
    std::optional<int> k;
    int sign = +1;  // +1 or -1
    std::uint64_t mult = 1;

    auto key() const { return std::tie(p, q, d, k, sign); }
};

/// A finite multiset of cohomology classes, the brute-force model of
/// H*_c of a fixed-locus space. Classes with equal (p,q,d,k,sign) are
/// merged, so the class list is canonical.
class BigradedSpace {
public:
    BigradedSpace() = default;
    explicit BigradedSpace(std::string label) : label_(std::move(label)) {}

    void add(const CohClass& c);

    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    /// Classes in canonical (p,q,d,k,sign) order.
    std::vector<CohClass> classes() const;

    /// Sum of multiplicities.
    std::uint64_t total_dimension() const;

    bool operator==(const BigradedSpace& other) const { return classes_ == other.classes_; }

    /// Diagnostic JSON: one {p,q,d,k,sign,mult} row per class.
    std::string to_json() const;

private:
    using Key = std::tuple<int, int, int, std::optional<int>, int>;
    std::map<Key, std::uint64_t> classes_;
    std::string label_;
};

/// H*_c((C*)^n): classes indexed by subsets S of {1..n}, Hodge type
/// (|S|,|S|), degree n+|S|, multiplicity binom(n,|S|), inversion sign
/// (-1)^(n-|S|) since inversion negates each degree-1 generator.
BigradedSpace torus_cohomology(unsigned n);

/// H*(A) for an abelian variety of dimension n: type (r,s) with
/// multiplicity binom(n,r)*binom(n,s), degree r+s, inversion sign
/// (-1)^(r+s).
BigradedSpace abelian_variety_cohomology(unsigned n);

/// Tensor with H*_c(C^m): every class shifts by (m, m, 2m); signs and
/// multiplicities unchanged.
BigradedSpace tate_twist(const BigradedSpace& s, unsigned m);

/// Keeps exactly the classes with sign +1. Intersection cohomology of a
/// quotient with only quotient singularities is the invariant part of
/// the cover's cohomology, which is how the fixed-locus quotients are
/// modelled here.
BigradedSpace invariant_part(const BigradedSpace& s);

/// Keeps exactly the classes with sign -1.
BigradedSpace anti_invariant_part(const BigradedSpace& s);

/// Kunneth product: classes combine by adding (p,q,d) and perverse
/// degrees, multiplying signs and multiplicities.
BigradedSpace kunneth_product(const BigradedSpace& a, const BigradedSpace& b);

/// E-polynomial: sum of mult * (-1)^d * u^p v^q over all classes.
LaurentPoly e_polynomial(const BigradedSpace& s);

/// Perverse-degree assignment rule k = d - offset.
struct PerverseRule {
    int degree_offset = 0;

    static PerverseRule k_equals_d() { return {0}; }
    static PerverseRule k_equals_d_minus(int c) { return {c}; }
};

BigradedSpace assign_perverse(const BigradedSpace& s, PerverseRule rule);

/// Perverse E-polynomial: sum of mult * (-1)^d * u^p v^q q^k. Throws
/// std::logic_error if any class has no perverse degree assigned.
LaurentPoly pie_polynomial(const BigradedSpace& s);

/// Model of the Dolbeault fixed-locus quotient for genus g >= 2:
/// invariant part of the (g-1)-Tate-twisted cohomology of an abelian
/// variety of dimension g-1 (the cotangent bundle of an abelian variety,
/// quotiented by inversion).
BigradedSpace dolbeault_fixed_model(int g);

/// Model of the Betti fixed-locus quotient for genus g >= 2: invariant
/// part of H*_c((C*)^(2g-2)) under coordinatewise inversion.
BigradedSpace betti_fixed_model(int g);

}  // namespace tms
