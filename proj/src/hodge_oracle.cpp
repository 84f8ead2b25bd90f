#include "tms/hodge_oracle.hpp"

#include <sstream>
#include <stdexcept>

namespace tms {

namespace {

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

void require_genus(int g, const char* who) {
    if (g < 2) {
        throw std::invalid_argument(std::string(who) + ": genus must be >= 2, got " +
                                    std::to_string(g));
    }
}

}  // namespace

void BigradedSpace::add(const CohClass& c) {
    if (c.mult == 0) return;
    if (c.sign != 1 && c.sign != -1) {
        throw std::invalid_argument("BigradedSpace::add: sign must be +1 or -1");
    }
    classes_[Key{c.p, c.q, c.d, c.k, c.sign}] += c.mult;
}

std::vector<CohClass> BigradedSpace::classes() const {
    std::vector<CohClass> out;
    out.reserve(classes_.size());
    for (const auto& [key, mult] : classes_) {
        const auto& [p, q, d, k, sign] = key;
        out.push_back({p, q, d, k, sign, mult});
    }
    return out;
}

std::uint64_t BigradedSpace::total_dimension() const {
    std::uint64_t total = 0;
    for (const auto& [key, mult] : classes_) total += mult;
    return total;
}

std::string BigradedSpace::to_json() const {
    std::ostringstream os;
    os << "{\"label\":\"" << label_ << "\",\"classes\":[";
    bool first = true;
    for (const auto& c : classes()) {
        if (!first) os << ",";
        os << "{\"p\":" << c.p << ",\"q\":" << c.q << ",\"d\":" << c.d << ",\"k\":";
        if (c.k) os << *c.k;
        else os << "null";
        os << ",\"sign\":" << c.sign << ",\"mult\":" << c.mult << "}";
        first = false;
    }
    os << "]}";
    return os.str();
}

BigradedSpace torus_cohomology(unsigned n) {
    BigradedSpace s("torus(" + std::to_string(n) + ")");
    for (unsigned j = 0; j <= n; ++j) {
        int sign = ((n - j) % 2 == 0) ? +1 : -1;
        s.add({static_cast<int>(j), static_cast<int>(j), static_cast<int>(n + j),
               std::nullopt, sign, binomial(n, j)});
    }
    return s;
}

BigradedSpace abelian_variety_cohomology(unsigned n) {
    BigradedSpace s("abelian(" + std::to_string(n) + ")");
    for (unsigned r = 0; r <= n; ++r) {
        for (unsigned c = 0; c <= n; ++c) {
            int sign = ((r + c) % 2 == 0) ? +1 : -1;
            s.add({static_cast<int>(r), static_cast<int>(c), static_cast<int>(r + c),
                   std::nullopt, sign, binomial(n, r) * binomial(n, c)});
        }
    }
    return s;
}

BigradedSpace tate_twist(const BigradedSpace& s, unsigned m) {
    if (m == 0) return s;
    BigradedSpace out(s.label() + " (" + std::to_string(m) + ")-twisted");
    int shift = static_cast<int>(m);
    for (CohClass c : s.classes()) {
        c.p += shift;
        c.q += shift;
        c.d += 2 * shift;
        if (c.k) c.k = *c.k + 2 * shift;
        out.add(c);
    }
    return out;
}

BigradedSpace invariant_part(const BigradedSpace& s) {
    BigradedSpace out(s.label() + " invariants");
    for (const CohClass& c : s.classes()) {
        if (c.sign == +1) out.add(c);
    }
    return out;
}

BigradedSpace anti_invariant_part(const BigradedSpace& s) {
    BigradedSpace out(s.label() + " anti-invariants");
    for (const CohClass& c : s.classes()) {
        if (c.sign == -1) out.add(c);
    }
    return out;
}

BigradedSpace kunneth_product(const BigradedSpace& a, const BigradedSpace& b) {
    BigradedSpace out(a.label() + " x " + b.label());
    for (const CohClass& ca : a.classes()) {
        for (const CohClass& cb : b.classes()) {
            CohClass c;
            c.p = ca.p + cb.p;
            c.q = ca.q + cb.q;
            c.d = ca.d + cb.d;
            if (ca.k && cb.k) c.k = *ca.k + *cb.k;
            c.sign = ca.sign * cb.sign;
            c.mult = ca.mult * cb.mult;
            out.add(c);
        }
    }
    return out;
}

LaurentPoly e_polynomial(const BigradedSpace& s) {
    LaurentPoly e;
    for (const CohClass& c : s.classes()) {
        mpq_class coeff(c.mult);
        if (c.d % 2 != 0) coeff = -coeff;
        e += LaurentPoly::monomial(coeff, {c.p, c.q, 0});
    }
    return e;
}

BigradedSpace assign_perverse(const BigradedSpace& s, PerverseRule rule) {
    BigradedSpace out(s.label());
    for (CohClass c : s.classes()) {
        c.k = c.d - rule.degree_offset;
        out.add(c);
    }
    return out;
}

LaurentPoly pie_polynomial(const BigradedSpace& s) {
    LaurentPoly e;
    for (const CohClass& c : s.classes()) {
        if (!c.k) {
            throw std::logic_error("pie_polynomial: class (" + std::to_string(c.p) + "," +
                                   std::to_string(c.q) + ") in degree " + std::to_string(c.d) +
                                   " has no perverse degree assigned");
        }
        mpq_class coeff(c.mult);
        if (c.d % 2 != 0) coeff = -coeff;
        e += LaurentPoly::monomial(coeff, {c.p, c.q, *c.k});
    }
    return e;
}

BigradedSpace dolbeault_fixed_model(int g) {
    require_genus(g, "dolbeault_fixed_model");
    unsigned n = static_cast<unsigned>(g - 1);
    BigradedSpace model = invariant_part(tate_twist(abelian_variety_cohomology(n), n));
    model.set_label("dolbeault_fixed_model(g=" + std::to_string(g) + ")");
    return model;
}

BigradedSpace betti_fixed_model(int g) {
    require_genus(g, "betti_fixed_model");
    BigradedSpace model = invariant_part(torus_cohomology(static_cast<unsigned>(2 * g - 2)));
    model.set_label("betti_fixed_model(g=" + std::to_string(g) + ")");
    return model;
}

}  // namespace tms
