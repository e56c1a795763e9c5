// The coefficient field Q(t1,...,tm): reduced fractions of multivariate
// polynomials. Each generator is positive and infinitely large over the
// field generated by the previous ones, so sign is decided by the dominant
// coefficient of the numerator (the denominator is normalized positive).
#pragma once

#include "svr/mpoly.hpp"

#include <stdexcept>
#include <string>

namespace svr {

class Scalar {
public:
    Scalar() : num_(), den_(Rational(1)) {}
    explicit Scalar(const Rational& q) : num_(q), den_(Rational(1)) {}
    explicit Scalar(long n) : num_(Rational(n)), den_(Rational(1)) {}
    Scalar(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static Scalar generator(int j) { return Scalar(MPoly::generator(j), MPoly(Rational(1))); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rational as_rational() const { return num_.constant_value() / den_.constant_value(); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    int max_generator() const { return std::max(num_.top_var(), den_.top_var()); }

    // Denominator is normalized with positive dominant coefficient, so the
    // sign of the fraction is the sign of the numerator's dominant term.
    int sign() const { return num_.sign(); }

    Scalar operator-() const { return raw(-num_, den_); }
    Scalar operator+(const Scalar& o) const {
        return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Scalar operator-(const Scalar& o) const {
        return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Scalar operator*(const Scalar& o) const { return Scalar(num_ * o.num_, den_ * o.den_); }
    Scalar operator/(const Scalar& o) const {
        if (o.is_zero()) throw std::domain_error("scalar division by zero");
        return Scalar(num_ * o.den_, den_ * o.num_);
    }
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("scalar inverse of zero");
        return Scalar(den_, num_);
    }

    // Fractions are kept reduced and the denominator is pinned, so structural
    // equality is field equality.
    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    int cmp(const Scalar& o) const { return (*this - o).sign(); }
    bool operator<(const Scalar& o) const { return cmp(o) < 0; }
    bool operator>(const Scalar& o) const { return cmp(o) > 0; }

    Rational eval(const std::vector<Rational>& tvals) const {
        Rational d = den_.eval(tvals);
        if (sign_of(d) == 0) throw std::domain_error("denominator vanishes at sample point");
        return num_.eval(tvals) / d;
    }

    std::string str() const {
        if (den_ == MPoly(Rational(1))) return num_.str();
        std::string n = num_.terms().size() > 1 ? "(" + num_.str() + ")" : num_.str();
        std::string d = den_.terms().size() > 1 ? "(" + den_.str() + ")" : den_.str();
        return n + "/" + d;
    }

private:
    static Scalar raw(MPoly n, MPoly d) {
        Scalar s;
        s.num_ = std::move(n);
        s.den_ = std::move(d);
        return s;
    }

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("scalar with zero denominator");
        if (num_.is_zero()) {
            den_ = MPoly(Rational(1));
            return;
        }
        MPoly g = mpoly_gcd(num_, den_);
        if (!(g == MPoly(Rational(1)))) {
            num_ = mpoly_exact_div(num_, g);
            den_ = mpoly_exact_div(den_, g);
        }
        // Pin the representative: denominator integer-primitive, positive lead.
        Rational s = detail::signed_rational_content(den_);
        Rational inv = Rational(1) / s;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }

    MPoly num_, den_;
};

} // namespace svr
