// The constructive correspondence between finite roots and ring specs:
// spec_poset computes the full prime spectrum of a ring spec (leaf chains
// glued from their joins upward, with a shared stem up to the maximal
// ideal), realize builds a ring spec whose spectrum is isomorphic to a given
// finite root, and phi_root_check evaluates the semantic content of the
// branching-spectrum sentence.
#pragma once

#include "svr/analysis.hpp"

namespace svr {

struct SpecPrimeTag {
    int leaf;  // representative leaf position
    int depth; // e: the prime p_e on that leaf's chain (0 = the minimal prime)
};

struct SpecPosetResult {
    RootPoset poset;
    std::vector<SpecPrimeTag> tags; // by poset element index
};

// Membership of a ring element in the spectrum element described by a tag.
inline bool in_spec_prime(const TupleElt& a, const SpecPrimeTag& tag) {
    const ValElt& comp = a[tag.leaf];
    if (tag.depth == 0) return comp.is_zero();
    return comp.is_zero() || comp.in_prime(tag.depth);
}

// The full spectrum: leaf i contributes the chain of colevels d_i..0 (its
// valuation-ring primes); two chain entries at colevel c are identified
// exactly when c <= c(join) of the leaves. Colevel 0 is always the shared
// maximal ideal.
inline SpecPosetResult spec_poset(const RingSpec& s) {
    int n = s.leaf_count();
    // Representative of the class of (leaf, colevel): smallest related leaf.
    auto related = [&](int i, int j, int c) {
        return i == j || s.join_level(i, j) >= c;
    };
    auto rep = [&](int i, int c) {
        for (int k = 0; k < n; ++k)
            if (s.leaf_depth(k) >= c && related(k, i, c)) return k;
        return i;
    };
    std::vector<std::pair<int, int>> elems; // (rep leaf, colevel)
    for (int i = 0; i < n; ++i)
        for (int c = s.leaf_depth(i); c >= 0; --c)
            if (rep(i, c) == i) elems.emplace_back(i, c);

    int m = static_cast<int>(elems.size());
    std::vector<std::vector<bool>> leq(static_cast<size_t>(m), std::vector<bool>(static_cast<size_t>(m), false));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            auto [ia, ca] = elems[static_cast<size_t>(a)];
            auto [ib, cb] = elems[static_cast<size_t>(b)];
            // (ia, ca) <= (ib, cb): the shallower element sits on the same
            // glued chain: ca >= cb and the leaves are related at level cb.
            leq[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                (ca >= cb) && related(ia, ib, cb);
        }

    std::vector<std::string> ids;
    std::vector<SpecPrimeTag> tags;
    for (auto& [i, c] : elems) {
        ids.push_back(s.tree().id(s.leaf_node(i)) + "@" + std::to_string(c));
        tags.push_back({i, s.leaf_depth(i) - c});
    }
    std::vector<std::pair<std::string, std::string>> covers;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b || !leq[static_cast<size_t>(a)][static_cast<size_t>(b)]) continue;
            bool cover = true;
            for (int c = 0; c < m && cover; ++c)
                if (c != a && c != b && leq[static_cast<size_t>(a)][static_cast<size_t>(c)] &&
                    leq[static_cast<size_t>(c)][static_cast<size_t>(b)])
                    cover = false;
            if (cover) covers.emplace_back(ids[static_cast<size_t>(a)], ids[static_cast<size_t>(b)]);
        }
    return {RootPoset::build(ids, covers), tags};
}

// Build a ring spec whose spectrum realizes the finite root P: the tree is
// the branching root of P (with a non-branching top absorbed into the level
// of the highest branching point), depths are chain lengths below the
// minimal elements, levels are chain lengths above each branching point.
inline RingSpec realize(const RootPoset& p) {
    p.require_root();
    if (p.size() < 2)
        throw std::invalid_argument("single-point posets (field spectra) are outside the ring model");
    auto mins = p.minimal_elements();
    if (mins.size() == 1) {
        // A chain: a bare valuation ring.
        return RingSpec::single(p.id(mins[0]), p.size() - 1);
    }
    auto bps = p.branching_points();
    std::set<int> keep(mins.begin(), mins.end());
    for (int b : bps) keep.insert(b);
    RootPoset tree = p.subposet(std::vector<int>(keep.begin(), keep.end()));
    std::map<std::string, int> depths, levels;
    for (int m : mins) depths[p.id(m)] = p.up_set_size(m) - 1;
    for (int b : bps) levels[p.id(b)] = p.up_set_size(b) - 1;
    return RingSpec::make(tree, depths, levels);
}

// Semantic content of the branching-spectrum sentence: the branching
// spectrum of the spec is order-isomorphic to P, and the ingredient facts
// hold on the canonical orthogonals and on samples (annihilator primes,
// pairwise sums as branching primes, and the non-unit zero-divisor
// splitting exactly when the top of P is a branching point).
inline CheckOutcome phi_root_check(const RingSpec& s, const RootPoset& p, int trials, Rng& rng) {
    RootPoset b = brspec(s);
    if (!poset_iso(b, p))
        return CheckOutcome::fail("branching spectrum is not isomorphic to the given root");
    CheckOutcome r = rank_check(s, trials, rng);
    if (!r.pass) return r;
    if (s.leaf_count() >= 2) {
        r = verify_branching_nodes(s, trials, rng);
        if (!r.pass) return r;
        bool top_branches_in_p = false;
        for (int q : p.branching_points())
            if (q == *p.top()) top_branches_in_p = true;
        if (top_branches_in_p != s.top_is_max_ideal())
            return CheckOutcome::fail("maximal-ideal branching disagrees with the root's top");
        r = max_ideal_branching_check(s, trials, rng);
        if (!r.pass) return r;
    }
    return {};
}

} // namespace svr
