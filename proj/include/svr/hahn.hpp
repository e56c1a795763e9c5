// Exact arithmetic in K_d, the fraction field of the group algebra of Q^d
// (lexicographic) over the scalar field: finitely supported generalized
// polynomials sum c * x^gamma, their Cauchy products, the valuation
// nu = min(supp), the induced total order (sign of the coefficient at nu),
// the valuation ring V_d = { nu >= 0 }, its chain of primes p_e = { nu_e > 0 }
// indexed by prefix depth, and the residue maps onto K_{d-e} with their
// canonical sections.
#pragma once

#include "svr/group_element.hpp"
#include "svr/scalar.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace svr {

class GenPoly {
public:
    using Terms = std::map<GroupElement, Scalar, GroupLexLess>;

    explicit GenPoly(int dim) : dim_(dim) {
        if (dim < 0) throw std::invalid_argument("negative dimension");
    }

    static GenPoly constant(int dim, const Scalar& c) {
        GenPoly p(dim);
        if (!c.is_zero()) p.terms_[GroupElement::zero(dim)] = c;
        return p;
    }
    static GenPoly monomial(const GroupElement& g, const Scalar& c = Scalar(1)) {
        GenPoly p(g.dim());
        if (!c.is_zero()) p.terms_[g] = c;
        return p;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    // nu(P) = lexicographic minimum of the support; nullopt encodes infinity.
    std::optional<GroupElement> val() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first;
    }
    // Coefficient at nu(P).
    const Scalar& lead_coeff() const {
        if (terms_.empty()) throw std::domain_error("zero has no leading coefficient");
        return terms_.begin()->second;
    }
    int sign() const { return terms_.empty() ? 0 : terms_.begin()->second.sign(); }

    Scalar coeff(const GroupElement& g) const {
        auto it = terms_.find(g);
        return it == terms_.end() ? Scalar() : it->second;
    }

    GenPoly operator-() const {
        GenPoly r(dim_);
        for (const auto& [g, c] : terms_) r.terms_[g] = -c;
        return r;
    }
    GenPoly& operator+=(const GenPoly& o) {
        check_dim(o);
        for (const auto& [g, c] : o.terms_) {
            auto it = terms_.find(g);
            if (it == terms_.end()) {
                terms_[g] = c;
            } else {
                it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }
    GenPoly operator+(const GenPoly& o) const { GenPoly r = *this; r += o; return r; }
    GenPoly operator-(const GenPoly& o) const { GenPoly r = *this; r += -o; return r; }

    // Cauchy product; supports are finite so this is the plain convolution.
    GenPoly operator*(const GenPoly& o) const {
        check_dim(o);
        GenPoly r(dim_);
        for (const auto& [ga, ca] : terms_)
            for (const auto& [gb, cb] : o.terms_) {
                GroupElement g = ga + gb;
                auto it = r.terms_.find(g);
                if (it == r.terms_.end()) {
                    Scalar c = ca * cb;
                    if (!c.is_zero()) r.terms_.emplace(std::move(g), std::move(c));
                } else {
                    it->second += ca * cb;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        return r;
    }

    GenPoly scaled(const Scalar& c) const {
        GenPoly r(dim_);
        if (c.is_zero()) return r;
        for (const auto& [g, k] : terms_) r.terms_[g] = k * c;
        return r;
    }

    // Multiply by x^g (shift every exponent).
    GenPoly shifted(const GroupElement& g) const {
        GenPoly r(dim_);
        for (const auto& [h, c] : terms_) r.terms_[h + g] = c;
        return r;
    }

    bool operator==(const GenPoly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
    bool operator!=(const GenPoly& o) const { return !(*this == o); }

    // Terms whose first e exponent coordinates vanish, with those coordinates
    // dropped: the residue representative at prefix depth e.
    GenPoly prefix_zero_part(int e) const {
        if (e < 0 || e > dim_) throw std::invalid_argument("bad residue depth");
        GenPoly r(dim_ - e);
        for (const auto& [g, c] : terms_) {
            if (lex_sign(g.prefix(e)) == 0) r.terms_[g.drop_prefix(e)] = c;
        }
        return r;
    }
    GenPoly pad_prefix(int e) const {
        GenPoly r(dim_ + e);
        for (const auto& [g, c] : terms_) r.terms_[g.pad_prefix(e)] = c;
        return r;
    }
    GenPoly pad_suffix(int e) const {
        GenPoly r(dim_ + e);
        for (const auto& [g, c] : terms_) r.terms_[g.pad_suffix(e)] = c;
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [g, c] : terms_) {
            bool neg = c.is_rational() && c.sign() < 0;
            Scalar a = neg ? -c : c;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            bool is_const_term = g.is_zero();
            std::string cs = a.is_rational() ? to_string(a.as_rational()) : "(" + a.str() + ")";
            if (is_const_term) {
                os << cs;
            } else {
                if (!(a.is_rational() && a.as_rational() == 1)) os << cs << "*";
                os << "x^" << g.str();
            }
        }
        return os.str();
    }

private:
    void check_dim(const GenPoly& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("generalized polynomial dimension mismatch");
    }

    int dim_;
    Terms terms_;
};

// An element of K_d as a reduced-form fraction of generalized polynomials.
// Canonical form: nu(den) = 0 with leading coefficient 1 (the zero element
// is 0/1), so nu(num/den) = nu(num). Equality is decided by cross
// multiplication.
class ValElt {
public:
    explicit ValElt(int dim) : num_(dim), den_(GenPoly::constant(dim, Scalar(1))) {}
    ValElt(GenPoly num, GenPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.dim() != den_.dim()) throw std::invalid_argument("fraction dimension mismatch");
        canonicalize();
    }

    static ValElt zero(int dim) { return ValElt(dim); }
    static ValElt one(int dim) { return constant(dim, Scalar(1)); }
    static ValElt constant(int dim, const Scalar& c) {
        return ValElt(GenPoly::constant(dim, c), GenPoly::constant(dim, Scalar(1)));
    }
    static ValElt monomial(const GroupElement& g, const Scalar& c = Scalar(1)) {
        return ValElt(GenPoly::monomial(g, c), GenPoly::constant(g.dim(), Scalar(1)));
    }

    int dim() const { return num_.dim(); }
    const GenPoly& num() const { return num_; }
    const GenPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    // nu extended to fractions: nu(P/Q) = nu(P) - nu(Q) = nu(P) in canonical
    // form. nullopt encodes infinity (the zero element).
    std::optional<GroupElement> val() const { return num_.val(); }

    // Sign of the leading coefficient (Hahn order).
    int sign() const { return num_.sign(); }

    ValElt operator-() const { return raw(-num_, den_); }
    ValElt operator+(const ValElt& o) const {
        check_dim(o);
        return ValElt(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    ValElt operator-(const ValElt& o) const { return *this + (-o); }
    ValElt operator*(const ValElt& o) const {
        check_dim(o);
        return ValElt(num_ * o.num_, den_ * o.den_);
    }
    ValElt operator/(const ValElt& o) const {
        check_dim(o);
        if (o.is_zero()) throw std::domain_error("division by zero");
        return ValElt(num_ * o.den_, den_ * o.num_);
    }
    ValElt& operator+=(const ValElt& o) { *this = *this + o; return *this; }
    ValElt& operator-=(const ValElt& o) { *this = *this - o; return *this; }
    ValElt& operator*=(const ValElt& o) { *this = *this * o; return *this; }

    ValElt inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return ValElt(den_, num_);
    }

    bool operator==(const ValElt& o) const {
        check_dim(o);
        return num_ * o.den_ == o.num_ * den_;
    }
    bool operator!=(const ValElt& o) const { return !(*this == o); }

    int cmp(const ValElt& o) const { return (*this - o).sign(); }
    bool operator<(const ValElt& o) const { return cmp(o) < 0; }
    bool operator>(const ValElt& o) const { return cmp(o) > 0; }

    // Membership in V_d = { nu >= 0 }.
    bool in_valuation_ring() const {
        return is_zero() || lex_sign(*val()) >= 0;
    }
    // Unit of V_d: nu = 0.
    bool is_unit() const { return !is_zero() && lex_sign(*val()) == 0; }

    // Membership in the prime p_e = { nu_e > 0 } (first e coordinates of nu
    // positive lexicographically); p_d is the maximal ideal of V_d.
    bool in_prime(int e) const {
        if (e < 1 || e > dim()) throw std::invalid_argument("prime depth out of range");
        if (is_zero()) return true;
        return lex_sign(val()->prefix(e)) > 0;
    }

    // nu_e: the first e coordinates of nu.
    std::optional<GroupElement> val_prefix(int e) const {
        if (is_zero()) return std::nullopt;
        return val()->prefix(e);
    }

    // Residue at prefix depth e, an element of K_{d-e}. Defined for
    // nu_e >= 0; the image is 0 exactly when nu_e > 0. For e = d this is the
    // residue-field map onto the scalars (as dimension-0 elements).
    ValElt residue(int e) const {
        if (e < 0 || e > dim()) throw std::invalid_argument("bad residue depth");
        if (is_zero()) return ValElt(dim() - e);
        int s = lex_sign(val()->prefix(e));
        if (s < 0) throw std::domain_error("element outside the local ring of p_e");
        if (s > 0) return ValElt(dim() - e);
        return raw(num_.prefix_zero_part(e), den_.prefix_zero_part(e));
    }

    // Canonical section K_{d} -> K_{d+e}: pad every exponent with e leading
    // zeros. residue(section(a), e) = a.
    ValElt section(int e) const { return raw(num_.pad_prefix(e), den_.pad_prefix(e)); }

    // Trailing-coordinate embedding K_d -> K_{d+e} (fresh infinitesimal value
    // coordinates below everything in Q^d).
    ValElt pad_suffix(int e) const { return raw(num_.pad_suffix(e), den_.pad_suffix(e)); }

    // Residue of a unit-or-better at full depth, as a scalar.
    Scalar residue_scalar() const {
        ValElt r = residue(dim());
        if (r.is_zero()) return Scalar();
        return r.num_.lead_coeff() / r.den_.lead_coeff();
    }

    std::string str() const {
        if (den_ == GenPoly::constant(dim(), Scalar(1))) {
            return num_.str();
        }
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    static ValElt raw(GenPoly n, GenPoly d) {
        ValElt v(n.dim());
        v.num_ = std::move(n);
        v.den_ = std::move(d);
        return v;
    }

    void check_dim(const ValElt& o) const {
        if (dim() != o.dim()) throw std::invalid_argument("dimension mismatch");
    }

    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("fraction with zero denominator");
        if (num_.is_zero()) {
            den_ = GenPoly::constant(dim(), Scalar(1));
            return;
        }
        GroupElement nd = *den_.val();
        if (!nd.is_zero()) {
            GroupElement shift = -nd;
            num_ = num_.shifted(shift);
            den_ = den_.shifted(shift);
        }
        Scalar lc = den_.lead_coeff();
        if (!lc.is_one()) {
            Scalar inv = lc.inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    GenPoly num_, den_;
};

// Divisibility in V_d with constructive quotient: a | b iff b = 0 or
// (a != 0 and nu(a) <= nu(b)); on success the quotient q = b / a lies in V_d
// and satisfies a * q = b exactly.
inline std::optional<ValElt> divides(const ValElt& a, const ValElt& b) {
    if (!a.in_valuation_ring() || !b.in_valuation_ring())
        throw std::invalid_argument("divides: arguments must lie in the valuation ring");
    if (b.is_zero()) return ValElt::zero(a.dim());
    if (a.is_zero()) return std::nullopt;
    if (lex_cmp(*a.val(), *b.val()) <= 0) return b / a;
    return std::nullopt;
}

} // namespace svr
