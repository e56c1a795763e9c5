// Seeded random generation of scalars, valuation-ring elements, ring
// elements, and small posets. All randomness flows through an explicit
// engine so runs are reproducible; bounded draws avoid std::distribution
// types to keep sequences stable.
#pragma once

#include "svr/ring_spec.hpp"

#include <functional>
#include <random>

namespace svr {

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t raw() { return eng_(); }
    // Uniform in [lo, hi].
    long range(long lo, long hi) {
        if (hi < lo) throw std::invalid_argument("empty range");
        return lo + static_cast<long>(eng_() % static_cast<uint64_t>(hi - lo + 1));
    }
    bool chance(int num, int den) { return range(0, den - 1) < num; }

    Rational rational(long bound = 6) {
        Rational q(range(-bound, bound), range(1, bound));
        q.canonicalize();
        return q;
    }
    Rational nonzero_rational(long bound = 6) {
        for (;;) {
            Rational q = rational(bound);
            if (sign_of(q) != 0) return q;
        }
    }
    Rational positive_rational(long bound = 6) {
        Rational q(range(1, bound), range(1, bound));
        q.canonicalize();
        return q;
    }
    Rational nonneg_rational(long bound = 6) {
        Rational q(range(0, bound), range(1, bound));
        q.canonicalize();
        return q;
    }

private:
    std::mt19937_64 eng_;
};

// A lexicographically nonnegative exponent: zeros up to a pivot, a positive
// pivot coordinate, arbitrary small coordinates after it (or all zeros).
inline GroupElement random_exponent_nonneg(Rng& rng, int dim) {
    std::vector<Rational> c(static_cast<size_t>(dim), Rational(0));
    int pivot = static_cast<int>(rng.range(0, dim)); // == dim gives the zero vector
    if (pivot < dim) {
        c[static_cast<size_t>(pivot)] = rng.positive_rational();
        for (int i = pivot + 1; i < dim; ++i)
            if (rng.chance(1, 2)) c[static_cast<size_t>(i)] = rng.rational();
    }
    return GroupElement(std::move(c));
}

// Exponent whose first e coordinates are lexicographically positive (an
// element of the prime p_e), with nonnegative tail.
inline GroupElement random_exponent_prefix_positive(Rng& rng, int dim, int e) {
    if (e < 1 || e > dim) throw std::invalid_argument("bad prefix depth");
    std::vector<Rational> c(static_cast<size_t>(dim), Rational(0));
    int pivot = static_cast<int>(rng.range(0, e - 1));
    c[static_cast<size_t>(pivot)] = rng.positive_rational();
    for (int i = pivot + 1; i < dim; ++i)
        if (rng.chance(1, 2)) c[static_cast<size_t>(i)] = rng.nonneg_rational();
    return GroupElement(std::move(c));
}

inline Scalar random_scalar(Rng& rng, int generators = 0, int size = 2) {
    if (generators == 0) return Scalar(rng.rational());
    MPoly num(rng.rational());
    for (int t = 0; t < size; ++t) {
        Mono m(static_cast<size_t>(generators), 0);
        for (int j = 0; j < generators; ++j)
            m[static_cast<size_t>(j)] = static_cast<unsigned>(rng.range(0, 2));
        num += MPoly::term(std::move(m), rng.rational());
    }
    if (num.is_zero()) num = MPoly(rng.nonzero_rational());
    return Scalar(num, MPoly(Rational(1)));
}

inline Scalar random_nonzero_scalar(Rng& rng, int generators = 0, int size = 2) {
    for (;;) {
        Scalar s = random_scalar(rng, generators, size);
        if (!s.is_zero()) return s;
    }
}

// Nonzero generalized polynomial supported in nu >= 0.
inline GenPoly random_genpoly_V(Rng& rng, int dim, int terms, int scalar_generators = 0) {
    GenPoly p(dim);
    for (int t = 0; t < terms; ++t)
        p += GenPoly::monomial(random_exponent_nonneg(rng, dim),
                               random_scalar(rng, scalar_generators));
    if (p.is_zero())
        p += GenPoly::monomial(random_exponent_nonneg(rng, dim), Scalar(rng.nonzero_rational()));
    return p;
}

// Random element of V_dim: numerator with nu >= 0, denominator a unit.
inline ValElt random_in_V(Rng& rng, int dim, int size = 2, int scalar_generators = 0) {
    if (dim == 0) return ValElt::constant(0, random_nonzero_scalar(rng, scalar_generators));
    GenPoly num = random_genpoly_V(rng, dim, std::max(1, size), scalar_generators);
    GenPoly den = GenPoly::constant(dim, Scalar(1));
    if (size > 0 && rng.chance(1, 2)) {
        for (int t = 0; t < 1 + static_cast<int>(rng.range(0, size - 1)); ++t) {
            GroupElement g = random_exponent_nonneg(rng, dim);
            if (g.is_zero()) continue;
            den += GenPoly::monomial(g, random_scalar(rng, scalar_generators));
        }
        if (den.is_zero() || lex_sign(*den.val()) != 0)
            den = GenPoly::constant(dim, Scalar(1));
    }
    return ValElt(num, den);
}

inline ValElt random_nonzero_in_V(Rng& rng, int dim, int size = 2, int scalar_generators = 0) {
    for (;;) {
        ValElt v = random_in_V(rng, dim, size, scalar_generators);
        if (!v.is_zero()) return v;
    }
}

// Random element of K_dim (possibly outside the valuation ring).
inline ValElt random_in_K(Rng& rng, int dim, int size = 2, int scalar_generators = 0) {
    ValElt v = random_in_V(rng, dim, size, scalar_generators);
    if (dim > 0 && rng.chance(1, 3)) {
        GroupElement shift = -random_exponent_nonneg(rng, dim);
        v = v * ValElt::monomial(shift);
    }
    return v;
}

inline ValElt random_nonzero_in_K(Rng& rng, int dim, int size = 2, int scalar_generators = 0) {
    for (;;) {
        ValElt v = random_in_K(rng, dim, size, scalar_generators);
        if (!v.is_zero()) return v;
    }
}

// Random element of V_dim vanishing at residue depth e (nu_e > 0), i.e. in
// the prime p_e.
inline ValElt random_in_kernel_depth(Rng& rng, int dim, int e, int size = 2) {
    ValElt mono = ValElt::monomial(random_exponent_prefix_positive(rng, dim, e));
    return mono * random_in_V(rng, dim, size);
}

// Random unit of V_dim (nu = 0).
inline ValElt random_unit(Rng& rng, int dim, int size = 2) {
    ValElt u = ValElt::constant(dim, Scalar(rng.nonzero_rational()));
    if (dim == 0) return u;
    return u + random_in_kernel_depth(rng, dim, 1, size);
}

// Random element per the tree recipe: draw a value at the top cofactor
// level, lift via sections to every leaf, then add independent kernel
// contributions per subtree, recursing down. Always compatible.
inline TupleElt sample_tuple(const RingSpec& s, Rng& rng, int size = 2) {
    std::vector<ValElt> acc;
    for (int i = 0; i < s.leaf_count(); ++i) acc.push_back(ValElt::zero(s.leaf_depth(i)));

    auto add_for_subtree = [&](int node, const ValElt& r) {
        int c = s.level(node);
        for (int i : s.leaves_below(node))
            acc[static_cast<size_t>(i)] += r.section(s.leaf_depth(i) - c);
    };

    std::function<void(int, int)> rec = [&](int node, int parent_level) {
        int c = s.level(node);
        ValElt r(c);
        if (parent_level < 0) {
            r = (size == 0) ? ValElt::constant(c, Scalar(rng.rational()))
                            : random_in_V(rng, c, size);
        } else if (c > 0) {
            r = random_in_kernel_depth(rng, c, c - parent_level, size);
        }
        add_for_subtree(node, r);
        if (size == 0) return;
        for (auto& [a, b] : s.tree().hasse_covers())
            if (b == node) rec(a, c);
    };
    rec(s.top_node(), -1);

    TupleElt t = s.make_element(std::move(acc));
    return t;
}

inline TupleElt sample_nonzero_tuple(const RingSpec& s, Rng& rng, int size = 2) {
    for (;;) {
        TupleElt t = sample_tuple(s, rng, size);
        if (!t.is_zero()) return t;
    }
}

// Random labeled rooted tree poset with up to max_elems elements.
inline RootPoset random_root(Rng& rng, int max_elems) {
    int n = static_cast<int>(rng.range(1, max_elems));
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i < n; ++i) ids.push_back("r" + std::to_string(i));
    for (int i = 1; i < n; ++i) {
        int p = static_cast<int>(rng.range(0, i - 1));
        covers.emplace_back(ids[static_cast<size_t>(i)], ids[static_cast<size_t>(p)]);
    }
    return RootPoset::build(ids, covers);
}

} // namespace svr
