// Elements of the value group Q^d with the lexicographic order: the first
// differing coordinate decides. The group is divisible (division by nonzero
// integers is exact), which is what fresh-coordinate extensions rely on.
#pragma once

#include "svr/rational.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace svr {

class GroupElement {
public:
    GroupElement() = default;
    explicit GroupElement(std::vector<Rational> coords) : coords_(std::move(coords)) {}

    static GroupElement zero(int dim) {
        return GroupElement(std::vector<Rational>(static_cast<size_t>(dim), Rational(0)));
    }
    // Unit vector with a single nonzero coordinate.
    static GroupElement axis(int dim, int i, const Rational& q = Rational(1)) {
        GroupElement g = zero(dim);
        g.coords_[static_cast<size_t>(i)] = q;
        return g;
    }

    int dim() const { return static_cast<int>(coords_.size()); }
    const Rational& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (sign_of(c) != 0) return false;
        return true;
    }

    GroupElement operator+(const GroupElement& o) const {
        check_dim(o);
        std::vector<Rational> r(coords_);
        for (size_t i = 0; i < r.size(); ++i) r[i] += o.coords_[i];
        return GroupElement(std::move(r));
    }
    GroupElement operator-() const {
        std::vector<Rational> r(coords_);
        for (auto& c : r) c = -c;
        return GroupElement(std::move(r));
    }
    GroupElement operator-(const GroupElement& o) const { return *this + (-o); }

    // Total division: the group is divisible.
    GroupElement scaled(const Rational& q) const {
        std::vector<Rational> r(coords_);
        for (auto& c : r) c *= q;
        return GroupElement(std::move(r));
    }

    GroupElement pad_prefix(int e) const {
        if (e < 0) throw std::invalid_argument("pad_prefix: negative count");
        std::vector<Rational> r(static_cast<size_t>(e), Rational(0));
        r.insert(r.end(), coords_.begin(), coords_.end());
        return GroupElement(std::move(r));
    }
    GroupElement pad_suffix(int e) const {
        if (e < 0) throw std::invalid_argument("pad_suffix: negative count");
        std::vector<Rational> r(coords_);
        r.insert(r.end(), static_cast<size_t>(e), Rational(0));
        return GroupElement(std::move(r));
    }
    GroupElement drop_prefix(int e) const {
        if (e < 0 || e > dim()) throw std::invalid_argument("drop_prefix: bad count");
        return GroupElement(std::vector<Rational>(coords_.begin() + e, coords_.end()));
    }
    GroupElement prefix(int e) const {
        if (e < 0 || e > dim()) throw std::invalid_argument("prefix: bad count");
        return GroupElement(std::vector<Rational>(coords_.begin(), coords_.begin() + e));
    }
    GroupElement append(const Rational& q) const {
        std::vector<Rational> r(coords_);
        r.push_back(q);
        return GroupElement(std::move(r));
    }

    bool operator==(const GroupElement& o) const { return coords_ == o.coords_; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (size_t i = 0; i < coords_.size(); ++i) {
            if (i) os << ",";
            os << coords_[i];
        }
        os << ")";
        return os.str();
    }

private:
    void check_dim(const GroupElement& o) const {
        if (dim() != o.dim()) throw std::invalid_argument("value-group dimension mismatch");
    }

    std::vector<Rational> coords_;
    friend int lex_cmp(const GroupElement&, const GroupElement&);
};

// -1, 0, 1 per the first differing coordinate.
inline int lex_cmp(const GroupElement& a, const GroupElement& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("value-group dimension mismatch");
    for (size_t i = 0; i < a.coords_.size(); ++i) {
        int c = cmp(a.coords_[i], b.coords_[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

// Sign of g under the lexicographic order: sign of its first nonzero coordinate.
inline int lex_sign(const GroupElement& g) {
    for (int i = 0; i < g.dim(); ++i) {
        int s = sign_of(g[i]);
        if (s != 0) return s;
    }
    return 0;
}

struct GroupLexLess {
    bool operator()(const GroupElement& a, const GroupElement& b) const {
        return lex_cmp(a, b) < 0;
    }
};

} // namespace svr
