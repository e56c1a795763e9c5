// Sparse multivariate polynomials over the rationals in generators t1, t2, ...
//
// Monomials are exponent vectors with trailing zeros trimmed, ordered by
// dominance: a higher generator index outweighs everything below it (each
// generator is taken positive and infinitely large over the field generated
// by the previous ones, so the dominant term of a polynomial decides its
// sign). The gcd is computed with the primitive pseudo-remainder sequence,
// recursing on the highest generator.
#pragma once

#include "svr/rational.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace svr {

using Mono = std::vector<unsigned>; // exponents; index j <-> generator t_{j+1}

inline void mono_trim(Mono& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

// Dominance comparison: highest generator index first.
inline int mono_cmp(const Mono& a, const Mono& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = n; i-- > 0;) {
        unsigned ea = i < a.size() ? a[i] : 0;
        unsigned eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const { return mono_cmp(a, b) < 0; }
};

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    mono_trim(r);
    return r;
}

// a / b; throws if b does not divide a.
inline Mono mono_div(const Mono& a, const Mono& b) {
    Mono r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        unsigned ea = i < a.size() ? a[i] : 0;
        unsigned eb = i < b.size() ? b[i] : 0;
        if (ea < eb) throw std::domain_error("monomial division is not exact");
        r[i] = ea - eb;
    }
    mono_trim(r);
    return r;
}

class MPoly {
public:
    using Terms = std::map<Mono, Rational, MonoLess>;

    MPoly() = default;
    explicit MPoly(const Rational& c) {
        if (sign_of(c) != 0) terms_[Mono{}] = c;
    }
    explicit MPoly(long c) : MPoly(Rational(c)) {}

    static MPoly generator(int j) { // t_j, 1-based
        if (j < 1) throw std::invalid_argument("generator index must be >= 1");
        MPoly p;
        Mono m(static_cast<size_t>(j), 0);
        m[static_cast<size_t>(j) - 1] = 1;
        p.terms_[m] = Rational(1);
        return p;
    }

    static MPoly term(Mono m, const Rational& c) {
        MPoly p;
        if (sign_of(c) != 0) {
            mono_trim(m);
            p.terms_[std::move(m)] = c;
        }
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::domain_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    const Terms& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    // Highest generator index occurring (1-based); 0 for constants.
    int top_var() const {
        size_t v = 0;
        for (const auto& [m, c] : terms_) v = std::max(v, m.size());
        return static_cast<int>(v);
    }

    // Dominant term under the ordering t_m >> t_{m-1} >> ... >> Q.
    const Mono& lead_mono() const {
        if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
        return terms_.rbegin()->first;
    }
    const Rational& lead_coeff() const {
        if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
        return terms_.rbegin()->second;
    }

    // Sign in the ordered field Q(t1,...,tm): sign of the dominant coefficient.
    int sign() const { return terms_.empty() ? 0 : sign_of(terms_.rbegin()->second); }

    MPoly operator-() const {
        MPoly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    MPoly& operator+=(const MPoly& o) {
        for (const auto& [m, c] : o.terms_) {
            auto it = terms_.find(m);
            if (it == terms_.end()) {
                terms_[m] = c;
            } else {
                it->second += c;
                if (sign_of(it->second) == 0) terms_.erase(it);
            }
        }
        return *this;
    }
    MPoly operator+(const MPoly& o) const { MPoly r = *this; r += o; return r; }
    MPoly operator-(const MPoly& o) const { MPoly r = *this; r += -o; return r; }
    MPoly& operator-=(const MPoly& o) { return *this += -o; }

    MPoly operator*(const MPoly& o) const {
        MPoly r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                Mono m = mono_mul(ma, mb);
                auto it = r.terms_.find(m);
                if (it == r.terms_.end()) {
                    Rational c = ca * cb;
                    if (sign_of(c) != 0) r.terms_.emplace(std::move(m), std::move(c));
                } else {
                    it->second += ca * cb;
                    if (sign_of(it->second) == 0) r.terms_.erase(it);
                }
            }
        return r;
    }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

    MPoly scaled(const Rational& c) const {
        MPoly r;
        if (sign_of(c) == 0) return r;
        for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
        return r;
    }

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly pow(unsigned e) const {
        MPoly r(Rational(1));
        MPoly b = *this;
        while (e) {
            if (e & 1) r *= b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    Rational eval(const std::vector<Rational>& vals) const {
        Rational acc(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (i >= vals.size()) throw std::invalid_argument("missing generator value");
                Rational p(1);
                for (unsigned k = 0; k < m[i]; ++k) p *= vals[i];
                t *= p;
            }
            acc += t;
        }
        return acc;
    }

    // Degree in generator j (1-based); -1 for the zero polynomial.
    int degree_in(int j) const {
        int d = is_zero() ? -1 : 0;
        size_t idx = static_cast<size_t>(j) - 1;
        for (const auto& [m, c] : terms_) {
            int e = idx < m.size() ? static_cast<int>(m[idx]) : 0;
            d = std::max(d, e);
        }
        return d;
    }

    // Coefficient of t_j^e as a polynomial in the remaining generators.
    MPoly coeff_in(int j, int e) const {
        MPoly r;
        size_t idx = static_cast<size_t>(j) - 1;
        for (const auto& [m, c] : terms_) {
            int me = idx < m.size() ? static_cast<int>(m[idx]) : 0;
            if (me != e) continue;
            Mono s = m;
            if (idx < s.size()) s[idx] = 0;
            mono_trim(s);
            r.terms_[std::move(s)] = c;
        }
        return r;
    }

    // *this multiplied by t_j^e.
    MPoly shifted_in(int j, int e) const {
        MPoly r;
        size_t idx = static_cast<size_t>(j) - 1;
        for (const auto& [m, c] : terms_) {
            Mono s = m;
            if (s.size() <= idx) s.resize(idx + 1, 0);
            s[idx] += static_cast<unsigned>(e);
            r.terms_[std::move(s)] = c;
        }
        return r;
    }

    std::string str(const std::string& gen = "t") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // Print dominant terms first.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational a = c;
            if (first) {
                if (sign_of(a) < 0) { os << "-"; a = -a; }
            } else {
                os << (sign_of(a) < 0 ? " - " : " + ");
                if (sign_of(a) < 0) a = -a;
            }
            first = false;
            bool unit = (a == 1);
            bool has_vars = !m.empty();
            if (!unit || !has_vars) os << to_string(a);
            if (!unit && has_vars) os << "*";
            bool star = false;
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (star) os << "*";
                os << gen << (i + 1);
                if (m[i] > 1) os << "^" << m[i];
                star = true;
            }
        }
        return os.str();
    }

private:
    Terms terms_;
};

// --- gcd machinery (primitive pseudo-remainder sequence) -------------------

namespace detail {

// Rational content: gcd of numerators over lcm of denominators, signed so
// that dividing by it leaves an integer-primitive polynomial with positive
// dominant coefficient.
inline Rational signed_rational_content(const MPoly& p) {
    if (p.is_zero()) return Rational(1);
    mpz_class g(0), l(1);
    for (const auto& [m, c] : p.terms()) {
        mpz_class num = c.get_num();
        mpz_class den = c.get_den();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    Rational r(g, l);
    r.canonicalize();
    if (p.sign() < 0) r = -r;
    return r;
}

} // namespace detail

MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

// Exact division; throws if not exact (internal misuse).
inline MPoly mpoly_exact_div(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    MPoly r = a, q;
    while (!r.is_zero()) {
        Mono m = mono_div(r.lead_mono(), b.lead_mono());
        Rational c = r.lead_coeff() / b.lead_coeff();
        MPoly t = MPoly::term(std::move(m), c);
        q += t;
        r -= t * b;
    }
    return q;
}

// Scale to integer-primitive with positive dominant coefficient.
inline MPoly mpoly_canonical(const MPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rational(1) / detail::signed_rational_content(p));
}

namespace detail {

// Content of p as a univariate polynomial in t_j: gcd of its coefficients.
inline MPoly content_in(const MPoly& p, int j) {
    MPoly g;
    for (int e = 0; e <= p.degree_in(j); ++e) {
        MPoly c = p.coeff_in(j, e);
        if (!c.is_zero()) g = mpoly_gcd(g, c);
    }
    return g;
}

// Pseudo-remainder of a by b in the variable t_j (deg_j(b) >= 0, b != 0).
inline MPoly prem_in(const MPoly& a, const MPoly& b, int j) {
    int db = b.degree_in(j);
    MPoly lb = b.coeff_in(j, db);
    MPoly r = a;
    while (!r.is_zero()) {
        int dr = r.degree_in(j);
        if (dr < db) break;
        MPoly lr = r.coeff_in(j, dr);
        r = r * lb - b * lr.shifted_in(j, dr - db);
    }
    return r;
}

} // namespace detail

inline MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return mpoly_canonical(b);
    if (b.is_zero()) return mpoly_canonical(a);
    int j = std::max(a.top_var(), b.top_var());
    if (j == 0) return MPoly(Rational(1));

    MPoly ca = detail::content_in(a, j);
    MPoly cb = detail::content_in(b, j);
    MPoly u = mpoly_exact_div(a, ca);
    MPoly v = mpoly_exact_div(b, cb);
    if (u.degree_in(j) < v.degree_in(j)) std::swap(u, v);
    while (!v.is_zero()) {
        MPoly r = detail::prem_in(u, v, j);
        u = std::move(v);
        if (r.is_zero()) {
            v = MPoly();
        } else {
            v = mpoly_exact_div(r, detail::content_in(r, j));
        }
    }
    return mpoly_canonical(mpoly_gcd(ca, cb) * u);
}

} // namespace svr
