#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace tms {

/// Exponent triple (e_u, e_v, e_q) of a monomial u^a v^b q^k.
/// Exponents may be negative. The ordering is lexicographic on
/// (e_u, e_v, e_q); it fixes the canonical term order used everywhere
/// (equality, serialization, golden files).
struct Exponent {
    int u = 0;
    int v = 0;
    int q = 0;

    auto operator<=>(const Exponent&) const = default;

    int total_degree() const { return u + v + q; }
};

/// Sparse Laurent polynomial in u, v, q over exact arbitrary-precision
/// rationals.
///
/// Canonical sparse form: no stored coefficient is zero, terms keyed by
/// exponent in lexicographic order. Two polynomials are equal iff their
/// term maps are identical. All operations return new values; a
/// constructed polynomial is never mutated through shared references,
/// so values are safe to share across threads.
class LaurentPoly {
public:
    using TermMap = std::map<Exponent, mpq_class>;

    LaurentPoly() = default;
    explicit LaurentPoly(long constant);
    explicit LaurentPoly(const mpq_class& constant);

    static LaurentPoly monomial(const mpq_class& coeff, Exponent e);

    // The three variables, for building formulas.
    static LaurentPoly u(int power = 1);
    static LaurentPoly v(int power = 1);
    static LaurentPoly q(int power = 1);
    static LaurentPoly uv(int power = 1);  // (uv)^power

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Largest e_u + e_v + e_q over all terms; 0 for the zero polynomial.
    int max_total_degree() const;

    /// Coefficient of the given exponent, zero if absent.
    mpq_class coefficient(Exponent e) const;

    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    /// Canonical text form, the golden-file contract: terms in descending
    /// lexicographic order, each rendered as `c * u^a v^b q^k` with the
    /// coefficient always present (`n` or `n/d`) and only nonzero
    /// exponents listed, joined by ` + ` / ` - `. The zero polynomial is
    /// "0".
    std::string to_canonical_string() const;

    /// Human-oriented form: unit coefficients and `^1` omitted,
    /// e.g. "u^4 v^4 + u^3 v^3" or "u^2 v^2 - 2 u v + 1".
    std::string to_pretty_string() const;

private:
    void insert_term(Exponent e, const mpq_class& c);

    TermMap terms_;
};

/// a^n by repeated squaring; pow(a, 0) = 1.
LaurentPoly pow(const LaurentPoly& a, unsigned n);

/// Sends u^a v^b q^c to u^a v^b q^(c + a*scale_u + b*scale_v), i.e. the
/// substitutions u -> uq and/or v -> vq.
LaurentPoly substitute_scaled(const LaurentPoly& p, bool scale_u_by_q, bool scale_v_by_q);

/// The transform p |-> (uvq)^dim * p(u, v, 1/(uvq)): term u^a v^b q^c
/// maps to u^(dim+a-c) v^(dim+b-c) q^(dim-c). Note that applying it
/// twice multiplies by (uv)^dim rather than returning p; only dim = 0
/// gives an involution.
LaurentPoly rhl_transform(const LaurentPoly& p, unsigned dim);

/// Substitutes q = 1, keeping u and v symbolic.
LaurentPoly specialize_q1(const LaurentPoly& p);

/// Exact evaluation. Throws std::domain_error when a variable with a
/// negative exponent is given the value zero.
mpq_class evaluate(const LaurentPoly& p, const mpq_class& u0, const mpq_class& v0,
                   const mpq_class& q0);

/// Parses the canonical text form (also accepts the pretty form).
/// Throws std::invalid_argument on malformed input.
LaurentPoly parse_poly(const std::string& text);

}  // namespace tms
