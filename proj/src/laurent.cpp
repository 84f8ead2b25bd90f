#include "tms/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tms {

LaurentPoly::LaurentPoly(long constant) {
    if (constant != 0) terms_.emplace(Exponent{}, mpq_class(constant));
}

LaurentPoly::LaurentPoly(const mpq_class& constant) {
    if (constant != 0) terms_.emplace(Exponent{}, constant);
}

LaurentPoly LaurentPoly::monomial(const mpq_class& coeff, Exponent e) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace(e, coeff);
    return p;
}

LaurentPoly LaurentPoly::u(int power) { return monomial(1, {power, 0, 0}); }
LaurentPoly LaurentPoly::v(int power) { return monomial(1, {0, power, 0}); }
LaurentPoly LaurentPoly::q(int power) { return monomial(1, {0, 0, power}); }
LaurentPoly LaurentPoly::uv(int power) { return monomial(1, {power, power, 0}); }

int LaurentPoly::max_total_degree() const {
    int best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        int d = e.total_degree();
        if (first || d > best) best = d;
        first = false;
    }
    return best;
}

mpq_class LaurentPoly::coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void LaurentPoly::insert_term(Exponent e, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) insert_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) insert_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            r.insert_term({ea.u + eb.u, ea.v + eb.v, ea.q + eb.q}, ca * cb);
        }
    }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly pow(const LaurentPoly& a, unsigned n) {
    LaurentPoly result(1);
    LaurentPoly base = a;
    while (n > 0) {
        if (n & 1u) result *= base;
        n >>= 1u;
        if (n > 0) base *= base;
    }
    return result;
}

LaurentPoly substitute_scaled(const LaurentPoly& p, bool scale_u_by_q, bool scale_v_by_q) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) {
        int k = e.q + (scale_u_by_q ? e.u : 0) + (scale_v_by_q ? e.v : 0);
        r += LaurentPoly::monomial(c, {e.u, e.v, k});
    }
    return r;
}

LaurentPoly rhl_transform(const LaurentPoly& p, unsigned dim) {
    const int d = static_cast<int>(dim);
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) {
        r += LaurentPoly::monomial(c, {d + e.u - e.q, d + e.v - e.q, d - e.q});
    }
    return r;
}

LaurentPoly specialize_q1(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) {
        r += LaurentPoly::monomial(c, {e.u, e.v, 0});
    }
    return r;
}

namespace {

mpq_class rational_pow(const mpq_class& base, int e) {
    if (e == 0) return 1;
    if (base == 0) {
        if (e < 0) throw std::domain_error("evaluate: zero value raised to a negative exponent");
        return 0;
    }
    mpq_class r;
    unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), n);
    if (e < 0) {
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    }
    r.canonicalize();
    return r;
}

}  // namespace

mpq_class evaluate(const LaurentPoly& p, const mpq_class& u0, const mpq_class& v0,
                   const mpq_class& q0) {
    mpq_class total = 0;
    for (const auto& [e, c] : p.terms()) {
        total += c * rational_pow(u0, e.u) * rational_pow(v0, e.v) * rational_pow(q0, e.q);
    }
    return total;
}

namespace {

void append_factors(std::ostringstream& os, Exponent e) {
    if (e.u != 0) os << " u^" << e.u;
    if (e.v != 0) os << " v^" << e.v;
    if (e.q != 0) os << " q^" << e.q;
}

}  // namespace

std::string LaurentPoly::to_canonical_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const mpq_class& c = it->second;
        bool negative = c < 0;
        mpq_class mag = negative ? mpq_class(-c) : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        if (it->first == Exponent{}) {
            os << mag.get_str();
        } else {
            os << mag.get_str() << " *";
            append_factors(os, it->first);
        }
        first = false;
    }
    return os.str();
}

std::string LaurentPoly::to_pretty_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const mpq_class& c = it->second;
        bool negative = c < 0;
        mpq_class mag = negative ? mpq_class(-c) : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        Exponent e = it->first;
        bool constant = (e == Exponent{});
        bool wrote_coeff = constant || mag != 1;
        if (wrote_coeff) os << mag.get_str();
        bool first_factor = true;
        auto put = [&](const char* name, int exp) {
            if (exp == 0) return;
            if (wrote_coeff || !first_factor) os << " ";
            os << name;
            if (exp != 1) os << "^" << exp;
            first_factor = false;
        };
        put("u", e.u);
        put("v", e.v);
        put("q", e.q);
        first = false;
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eof() {
        skip_ws();
        return i >= s.size();
    }

    char peek() { return s[i]; }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse_poly: " + what + " at position " +
                                    std::to_string(i) + " in \"" + s + "\"");
    }

    std::string read_digits() {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected digits");
        return s.substr(start, i - start);
    }

    int read_signed_int() {
        skip_ws();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = (s[i] == '-');
            ++i;
        }
        long value = std::stol(read_digits());
        return static_cast<int>(neg ? -value : value);
    }

    mpq_class read_rational() {
        std::string num = read_digits();
        std::string den = "1";
        if (i < s.size() && s[i] == '/') {
            ++i;
            den = read_digits();
        }
        mpq_class r{mpz_class(num), mpz_class(den)};
        r.canonicalize();
        return r;
    }

    // One term: [coefficient] ['*'] {factor}, where factor is u|v|q['^' int].
    LaurentPoly read_term() {
        skip_ws();
        mpq_class coeff = 1;
        bool saw_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = read_rational();
            saw_coeff = true;
        }
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            if (!saw_coeff) fail("unexpected '*'");
            ++i;
        }
        Exponent e;
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (i >= s.size()) break;
            char c = s[i];
            if (c != 'u' && c != 'v' && c != 'q') break;
            ++i;
            int exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                exp = read_signed_int();
            }
            if (c == 'u') e.u += exp;
            else if (c == 'v') e.v += exp;
            else e.q += exp;
            saw_factor = true;
        }
        if (!saw_coeff && !saw_factor) fail("expected a term");
        return LaurentPoly::monomial(coeff, e);
    }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text) {
    Parser p(text);
    if (p.eof()) throw std::invalid_argument("parse_poly: empty input");
    LaurentPoly result;
    int sign = 1;
    if (p.peek() == '-') {
        sign = -1;
        ++p.i;
    } else if (p.peek() == '+') {
        ++p.i;
    }
    while (true) {
        LaurentPoly term = p.read_term();
        result += (sign < 0) ? -term : term;
        if (p.eof()) break;
        char c = p.peek();
        if (c == '+') sign = 1;
        else if (c == '-') sign = -1;
        else p.fail("expected '+' or '-'");
        ++p.i;
    }
    return result;
}

}  // namespace tms
