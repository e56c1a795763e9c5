// Executable structural predicates over ring specs: rank via orthogonal
// witnesses, the survaluation property via componentwise divisibility with
// lifted quotients, branching ideals and the branching spectrum, sums of
// minimal primes with constructive splittings, maximal-ideal branching,
// type classification, the two-factor decomposition checks, leaf
// automorphisms, and the homogenization / saturation embeddings.
#pragma once

#include "svr/sample.hpp"

#include <functional>
#include <sstream>

namespace svr {

struct CheckOutcome {
    bool pass = true;
    std::string detail;
    static CheckOutcome fail(std::string why) { return {false, std::move(why)}; }
};

enum class RingType { TypeN1, TypeN2, Other };

inline std::string ring_type_name(RingType t, int n) {
    switch (t) {
        case RingType::TypeN1: return "(" + std::to_string(n) + ",1)";
        case RingType::TypeN2: return "(" + std::to_string(n) + ",2)";
        default: return "other";
    }
}

// Rank = number of leaves, certified by the canonical orthogonal family:
// the e_i are nonzero and pairwise orthogonal, and no sampled nonzero b
// annihilates all of them.
inline CheckOutcome rank_check(const RingSpec& s, int trials, Rng& rng) {
    auto es = canonical_orthogonals(s);
    for (size_t i = 0; i < es.size(); ++i) {
        if (es[i].is_zero()) return CheckOutcome::fail("orthogonal witness e_" + std::to_string(i + 1) + " is zero");
        for (size_t j = i + 1; j < es.size(); ++j)
            if (!(es[i] * es[j]).is_zero())
                return CheckOutcome::fail("witnesses " + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + " are not orthogonal");
    }
    for (int t = 0; t < trials; ++t) {
        TupleElt b = sample_nonzero_tuple(s, rng, 1 + static_cast<int>(rng.range(0, 2)));
        bool hits = false;
        for (size_t i = 0; i < es.size() && !hits; ++i)
            if (!(b * es[i]).is_zero()) hits = true;
        if (!hits) return CheckOutcome::fail("nonzero sample orthogonal to every witness: " + b.str());
        // Minimal primes are annihilators: b e_i = 0 iff the i-th component vanishes.
        for (size_t i = 0; i < es.size(); ++i)
            if ((b * es[i]).is_zero() != b[static_cast<int>(i)].is_zero())
                return CheckOutcome::fail("annihilator mismatch at leaf " + std::to_string(i + 1));
    }
    return {};
}

inline std::vector<TupleElt> canonical_orthogonals_or_unit(const RingSpec& s) {
    if (s.leaf_count() >= 2) return canonical_orthogonals(s);
    return {s.one_element()};
}

// The survaluation check: for sampled pairs (b, c) and every leaf, one of
// b_i | c_i or c_i | b_i holds in V_{d_i}, and the quotient lifts through
// pure sections to a full-tuple divisibility witness in the ring.
inline CheckOutcome sv_check(const RingSpec& s, int trials, Rng& rng) {
    auto es = canonical_orthogonals_or_unit(s);
    for (int t = 0; t < trials; ++t) {
        TupleElt b = sample_tuple(s, rng, 1 + static_cast<int>(rng.range(0, 2)));
        TupleElt c = sample_tuple(s, rng, 1 + static_cast<int>(rng.range(0, 2)));
        for (int i = 0; i < s.leaf_count(); ++i) {
            auto try_dir = [&](const TupleElt& u, const TupleElt& v) -> bool {
                auto q = divides(u[i], v[i]);
                if (!q) return false;
                TupleElt w = complete_from_leaf(s, i, *q);
                if ((u * es[static_cast<size_t>(i)]) * w != v * es[static_cast<size_t>(i)])
                    throw std::logic_error("lifted quotient fails to witness divisibility");
                return true;
            };
            if (!try_dir(b, c) && !try_dir(c, b))
                return CheckOutcome::fail("divisibility fails at leaf " + std::to_string(i + 1) +
                                          ": " + b[i].str() + " vs " + c[i].str());
        }
    }
    return {};
}

// Membership in Ann(e_i) + Ann(e_j): the residue at join(i, j) vanishes.
// On success returns the constructive splitting a = x + y with x e_i = 0 and
// y e_j = 0 (x vanishes on the whole child subtree containing i).
inline std::optional<std::pair<TupleElt, TupleElt>>
in_sum_of_primes(const RingSpec& s, const TupleElt& a, int i, int j) {
    if (i == j) throw std::invalid_argument("leaves must be distinct");
    int u = s.join_node(i, j);
    int c = s.level(u);
    if (!a[i].residue(s.leaf_depth(i) - c).is_zero()) return std::nullopt;
    // Child subtree of the join that contains leaf i.
    std::vector<int> side;
    for (auto& [ch, par] : s.tree().hasse_covers()) {
        if (par != u) continue;
        auto below = s.leaves_below(ch);
        if (std::find(below.begin(), below.end(), i) != below.end()) {
            side = below;
            break;
        }
    }
    if (side.empty()) throw std::logic_error("leaf not found under its own join");
    std::vector<ValElt> xs, ys;
    for (int k = 0; k < s.leaf_count(); ++k) {
        bool in_side = std::find(side.begin(), side.end(), k) != side.end();
        xs.push_back(in_side ? ValElt::zero(s.leaf_depth(k)) : a[k]);
        ys.push_back(in_side ? a[k] : ValElt::zero(s.leaf_depth(k)));
    }
    TupleElt x = s.make_element(std::move(xs));
    TupleElt y = s.make_element(std::move(ys));
    return std::make_pair(std::move(x), std::move(y));
}

// Branching ideals are the internal tree nodes. Each is verified to be
// realized as Ann(e_i) + Ann(e_j) for leaves joining there: membership by
// residue vanishing matches the node's prime on samples, with constructive
// splittings re-checked by arithmetic.
inline CheckOutcome verify_branching_nodes(const RingSpec& s, int trials, Rng& rng) {
    auto es = canonical_orthogonals(s);
    for (int q : s.internal_nodes()) {
        // Two leaves joining exactly at q.
        int li = -1, lj = -1;
        for (int i = 0; i < s.leaf_count() && li < 0; ++i)
            for (int j = i + 1; j < s.leaf_count(); ++j)
                if (s.join_node(i, j) == q) { li = i; lj = j; break; }
        if (li < 0) return CheckOutcome::fail("internal node " + s.tree().id(q) + " is not a join of leaves");
        for (int t = 0; t < trials; ++t) {
            TupleElt a = (t == 0) ? es[static_cast<size_t>(li)] : sample_tuple(s, rng, 1 + static_cast<int>(rng.range(0, 2)));
            bool member = in_prime(a, q);
            auto split = in_sum_of_primes(s, a, li, lj);
            if (member != split.has_value())
                return CheckOutcome::fail("sum-of-primes membership disagrees with the prime at " +
                                          s.tree().id(q));
            if (split) {
                const auto& [x, y] = *split;
                if (x + y != a) return CheckOutcome::fail("splitting does not sum back at " + s.tree().id(q));
                if (!(x * es[static_cast<size_t>(li)]).is_zero() || !(y * es[static_cast<size_t>(lj)]).is_zero())
                    return CheckOutcome::fail("splitting parts are not in the annihilators at " + s.tree().id(q));
            }
        }
    }
    return {};
}

// BrSpec: leaves, internal nodes, and the maximal ideal, ordered by the tree
// with the maximal ideal on top. Always a finite reduced root.
inline RootPoset brspec(const RingSpec& s) {
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int n = 0; n < s.tree().size(); ++n) ids.push_back(s.tree().id(n));
    for (auto& [a, b] : s.tree().hasse_covers()) covers.emplace_back(s.tree().id(a), s.tree().id(b));
    if (!s.top_is_max_ideal()) {
        std::string m = "m";
        while (s.tree().contains(m)) m += "_";
        ids.push_back(m);
        covers.emplace_back(s.tree().id(s.top_node()), m);
    }
    return RootPoset::build(ids, covers);
}

// Splits a non-unit into two zero divisors along the top partition
// S1 | S2 of the leaves (the first child subtree of the top against the
// rest); degenerate supports fall back to a half/half or orthogonal split.
// Only meaningful when the maximal ideal branches (top level 0).
inline std::optional<std::pair<TupleElt, TupleElt>>
split_nonunit_into_zero_divisors(const RingSpec& s, const TupleElt& a) {
    if (!s.top_is_max_ideal() || s.leaf_count() < 2) return std::nullopt;
    if (a.is_unit()) return std::nullopt;
    auto groups = s.top_children_leaf_groups();
    const auto& s1 = groups[0];
    auto in_s1 = [&](int k) { return std::find(s1.begin(), s1.end(), k) != s1.end(); };
    std::vector<ValElt> xs, ys;
    bool x_nonzero = false, y_nonzero = false;
    for (int k = 0; k < s.leaf_count(); ++k) {
        if (in_s1(k)) {
            xs.push_back(a[k]);
            ys.push_back(ValElt::zero(s.leaf_depth(k)));
            x_nonzero = x_nonzero || !a[k].is_zero();
        } else {
            xs.push_back(ValElt::zero(s.leaf_depth(k)));
            ys.push_back(a[k]);
            y_nonzero = y_nonzero || !a[k].is_zero();
        }
    }
    if (x_nonzero && y_nonzero)
        return std::make_pair(s.make_element(std::move(xs)), s.make_element(std::move(ys)));
    if (!a.is_zero()) {
        // Supported in one part: halve it; both halves vanish on the other part.
        TupleElt half = a * s.constant_element(Scalar(Rational(1, 2)));
        return std::make_pair(half, a - half);
    }
    auto es = canonical_orthogonals(s);
    return std::make_pair(es[0], -es[0]);
}

// Maximal-ideal branching: structural verdict c(top) = 0, cross-checked on
// samples by splitting non-units into sums of two zero divisors. When the
// top is a proper prime the verdict is negative; exhibiting a non-unit that
// is not such a sum is not attempted (one-sided check).
inline CheckOutcome max_ideal_branching_check(const RingSpec& s, int trials, Rng& rng) {
    if (s.leaf_count() < 2) return {true, "rank 1: no branching"};
    if (!s.top_is_max_ideal()) return {true, "not branching (top level " + std::to_string(s.level(s.top_node())) + "); negative direction untested"};
    auto es = canonical_orthogonals(s);
    for (int t = 0; t < trials; ++t) {
        TupleElt a = sample_tuple(s, rng, 1 + static_cast<int>(rng.range(0, 2)));
        a = a - s.constant_element(residue_at_max(a)); // force a non-unit
        auto split = split_nonunit_into_zero_divisors(s, a);
        if (!split) return CheckOutcome::fail("no zero-divisor splitting for non-unit " + a.str());
        const auto& [x, y] = *split;
        if (x + y != a) return CheckOutcome::fail("zero-divisor splitting does not sum back");
        auto is_zero_divisor = [&](const TupleElt& z) {
            if (z.is_zero()) return false;
            for (size_t i = 0; i < es.size(); ++i)
                if ((z * es[i]).is_zero()) return true;
            return false;
        };
        if (!is_zero_divisor(x) || !is_zero_divisor(y))
            return CheckOutcome::fail("splitting parts are not both zero divisors for " + a.str());
    }
    return {true, "branching; splittings verified"};
}

// An element lying in exactly one of the primes attached to two distinct
// internal nodes, built from a single monomial whose valuation prefix dies
// at one level but survives at the other.
inline TupleElt separating_element(const RingSpec& s, int q, int q2) {
    if (s.tree().leq(q2, q)) std::swap(q, q2);
    if (s.tree().lt(q, q2)) {
        // Comparable: prime(q) is contained in prime(q2). A monomial with its
        // single positive entry at coordinate index d - c(q) survives the
        // q-residue (prefix of length d - c(q) is zero) and dies at q2.
        int leaf = s.leaves_below(q)[0];
        int d = s.leaf_depth(leaf);
        GroupElement g = GroupElement::axis(d, d - s.level(q), Rational(1));
        return complete_from_leaf(s, leaf, ValElt::monomial(g));
    }
    // Incomparable: a monomial under q2 with its positive entry at index
    // d2 - c(q2) survives the q2-residue but vanishes at the common join, so
    // its completion is zero on the whole subtree of q.
    int leaf2 = s.leaves_below(q2)[0];
    int d2 = s.leaf_depth(leaf2);
    GroupElement g = GroupElement::axis(d2, d2 - s.level(q2), Rational(1));
    return complete_from_leaf(s, leaf2, ValElt::monomial(g));
}

// Type classification: exactly one internal node with top level 0 is type
// (n,1); with top level >= 1 it is type (n,2); anything else is "other".
// Cross-checked at element level: with one branching ideal, sum-of-primes
// membership is independent of the chosen pair; with several, explicit
// separators witness that two sums differ.
inline RingType classify_type(const RingSpec& s) {
    if (s.leaf_count() < 2) throw std::invalid_argument("type classification needs rank >= 2");
    auto internal = s.internal_nodes();
    if (internal.size() != 1) return RingType::Other;
    return s.top_is_max_ideal() ? RingType::TypeN1 : RingType::TypeN2;
}

inline CheckOutcome classify_cross_check(const RingSpec& s, int trials, Rng& rng) {
    auto internal = s.internal_nodes();
    if (internal.size() == 1) {
        // Membership in Ann(e_i)+Ann(e_j) must not depend on the pair.
        auto es = canonical_orthogonals(s);
        for (int t = 0; t < trials; ++t) {
            TupleElt a = (t == 0) ? es[0] : sample_tuple(s, rng, 1 + static_cast<int>(rng.range(0, 2)));
            std::optional<bool> verdict;
            for (int i = 0; i < s.leaf_count(); ++i)
                for (int j = i + 1; j < s.leaf_count(); ++j) {
                    bool m = in_sum_of_primes(s, a, i, j).has_value();
                    if (!verdict) verdict = m;
                    else if (*verdict != m)
                        return CheckOutcome::fail("sum membership depends on the pair for " + a.str());
                }
        }
        return {};
    }
    // Several branching ideals: every two distinct internal nodes are
    // separated by an explicit element.
    for (size_t x = 0; x < internal.size(); ++x)
        for (size_t y = x + 1; y < internal.size(); ++y) {
            int q = internal[x], q2 = internal[y];
            TupleElt a = separating_element(s, q, q2);
            bool inq = in_prime(a, q), inq2 = in_prime(a, q2);
            if (inq == inq2)
                return CheckOutcome::fail("separator failed for " + s.tree().id(q) + " vs " + s.tree().id(q2));
        }
    return {};
}

// Two-factor decomposition checks (rank 2): with H_i the kernel of the
// projection to leaf i, H_1 and H_2 intersect trivially, membership in
// H_1 + H_2 is residue vanishing at the top with a constructive splitting,
// and the cofactor map a/(H_1+H_2) -> p_1(a)/I is well-defined and
// injective, where I is the kernel of the top residue on the first factor.
inline CheckOutcome goursat_verify(const RingSpec& s, int trials, Rng& rng) {
    if (s.leaf_count() != 2) throw std::invalid_argument("goursat check needs exactly two leaves");
    int c = s.level(s.top_node());
    auto res1 = [&](const TupleElt& a) { return a[0].residue(s.leaf_depth(0) - c); };
    auto res2 = [&](const TupleElt& a) { return a[1].residue(s.leaf_depth(1) - c); };
    for (int t = 0; t < trials; ++t) {
        TupleElt a = sample_tuple(s, rng, 1 + static_cast<int>(rng.range(0, 2)));
        // H_1 cap H_2 = 0.
        if (a[0].is_zero() && a[1].is_zero() && !a.is_zero())
            return CheckOutcome::fail("kernel intersection is nonzero");
        // Membership in H_1 + H_2 <=> top residue vanishes, computed from
        // both factors independently.
        ValElt r1 = res1(a), r2 = res2(a);
        if ((r1 != r2))
            return CheckOutcome::fail("top residues computed from the two factors disagree");
        bool member = r1.is_zero();
        std::vector<ValElt> xs = {ValElt::zero(s.leaf_depth(0)), a[1]};
        std::vector<ValElt> ys = {a[0], ValElt::zero(s.leaf_depth(1))};
        if (member) {
            TupleElt x = s.make_element(xs); // in H_1
            TupleElt y = s.make_element(ys); // in H_2
            if (x + y != a) return CheckOutcome::fail("H_1 + H_2 splitting does not sum back");
        } else {
            if (!s.check_components(xs) || !s.check_components(ys))
                return CheckOutcome::fail("nonmember admits a splitting");
        }
        // Cofactor map: a ~ a' mod H_1+H_2 <=> leaf-1 residues agree.
        TupleElt a2 = sample_tuple(s, rng, 1 + static_cast<int>(rng.range(0, 2)));
        bool same_class = res1(a - a2).is_zero();
        bool same_image = (res1(a) == res1(a2));
        if (same_class != same_image)
            return CheckOutcome::fail("cofactor map ill-defined or not injective");
    }
    return {};
}

struct AutomorphismReport {
    std::vector<int> node_map;            // tree node -> tree node
    std::vector<std::pair<std::string, std::string>> branching_action;
    std::function<TupleElt(const TupleElt&)> apply;
};

// A leaf permutation extends to a ring automorphism iff it preserves depths
// and join levels; the induced node map must be a label-preserving tree
// automorphism. The element map permutes components.
inline AutomorphismReport leaf_automorphism(const RingSpec& s, const std::vector<int>& sigma) {
    int n = s.leaf_count();
    if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("permutation arity mismatch");
    std::vector<int> seen(static_cast<size_t>(n), 0);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)]++)
            throw std::invalid_argument("not a permutation of the leaves");
    }
    for (int i = 0; i < n; ++i)
        if (s.leaf_depth(i) != s.leaf_depth(sigma[static_cast<size_t>(i)]))
            throw std::invalid_argument("permutation does not preserve leaf depths");
    std::vector<int> node_map(static_cast<size_t>(s.tree().size()), -1);
    for (int i = 0; i < n; ++i) node_map[static_cast<size_t>(s.leaf_node(i))] = s.leaf_node(sigma[static_cast<size_t>(i)]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int q = s.join_node(i, j);
            int q2 = s.join_node(sigma[static_cast<size_t>(i)], sigma[static_cast<size_t>(j)]);
            if (s.level(q) != s.level(q2))
                throw std::invalid_argument("permutation breaks join levels at leaves " +
                                            s.tree().id(s.leaf_node(i)) + "," + s.tree().id(s.leaf_node(j)));
            int& slot = node_map[static_cast<size_t>(q)];
            if (slot == -1) slot = q2;
            else if (slot != q2)
                throw std::invalid_argument("permutation induces an inconsistent node map");
        }
    // Bijectivity and order preservation of the induced map.
    std::vector<int> hit(static_cast<size_t>(s.tree().size()), 0);
    for (int v : node_map) {
        if (v < 0) throw std::invalid_argument("node map is partial");
        ++hit[static_cast<size_t>(v)];
    }
    for (int h : hit)
        if (h != 1) throw std::invalid_argument("node map is not a bijection");
    for (int a = 0; a < s.tree().size(); ++a)
        for (int b = 0; b < s.tree().size(); ++b)
            if (s.tree().leq(a, b) !=
                s.tree().leq(node_map[static_cast<size_t>(a)], node_map[static_cast<size_t>(b)]))
                throw std::invalid_argument("node map does not preserve the order");

    AutomorphismReport rep;
    rep.node_map = node_map;
    for (int q : s.internal_nodes())
        rep.branching_action.emplace_back(s.tree().id(q), s.tree().id(node_map[static_cast<size_t>(q)]));
    std::vector<int> inv(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(sigma[static_cast<size_t>(i)])] = i;
    RingSpec owner = s;
    rep.apply = [owner, inv](const TupleElt& a) {
        std::vector<ValElt> comps;
        for (int k = 0; k < a.size(); ++k) comps.push_back(a[inv[static_cast<size_t>(k)]]);
        return owner.make_element(std::move(comps));
    };
    return rep;
}

struct EmbeddingResult {
    RingSpec target;
    std::function<TupleElt(const TupleElt&)> embed;
};

// Pad every leaf to the maximal depth; the per-leaf embedding is the
// canonical section (leading-zero padding of exponents), which preserves
// valuations, order, and every node level.
inline EmbeddingResult homogenize(const RingSpec& s) {
    int dmax = 0;
    for (int i = 0; i < s.leaf_count(); ++i) dmax = std::max(dmax, s.leaf_depth(i));
    std::map<std::string, int> depths;
    std::map<std::string, int> levels;
    for (int i = 0; i < s.leaf_count(); ++i) depths[s.tree().id(s.leaf_node(i))] = dmax;
    for (int q : s.internal_nodes()) levels[s.tree().id(q)] = s.level(q);
    RingSpec target = RingSpec::make(s.tree(), depths, levels);
    RingSpec source = s;
    auto embed = [source, target, dmax](const TupleElt& a) {
        std::vector<ValElt> comps;
        for (int i = 0; i < a.size(); ++i)
            comps.push_back(a[i].section(dmax - source.leaf_depth(i)));
        return target.make_element(std::move(comps));
    };
    return {target, embed};
}

// Collapse all internal structure to a single top at level 0: the canonical
// local embedding into a type (n,1) ring with the same factors; elements map
// identically (the target compatibility constraint is weaker).
inline EmbeddingResult saturate_to_type_n1(const RingSpec& s) {
    if (s.leaf_count() < 2) throw std::invalid_argument("saturation needs rank >= 2");
    std::string topid = "m";
    while (s.tree().contains(topid)) topid += "_";
    std::vector<std::string> ids = {topid};
    std::vector<std::pair<std::string, std::string>> covers;
    std::map<std::string, int> depths;
    for (int i = 0; i < s.leaf_count(); ++i) {
        std::string id = s.tree().id(s.leaf_node(i));
        ids.push_back(id);
        covers.emplace_back(id, topid);
        depths[id] = s.leaf_depth(i);
    }
    RingSpec target = RingSpec::make(RootPoset::build(ids, covers), depths, {{topid, 0}});
    auto embed = [target](const TupleElt& a) {
        std::vector<ValElt> comps;
        for (int i = 0; i < a.size(); ++i) comps.push_back(a[i]);
        return target.make_element(std::move(comps));
    };
    return {target, embed};
}

struct AnalysisReport {
    int rank = 0;
    std::vector<std::string> branching_ids;
    RootPoset brspec_poset;
    RingType type = RingType::Other;
    bool max_ideal_branching = false;
    std::vector<std::pair<std::string, CheckOutcome>> log;
    bool ok() const {
        for (auto& [k, v] : log)
            if (!v.pass) return false;
        return true;
    }
};

// Full structural analysis; deterministic for a fixed seed.
inline AnalysisReport analyze(const RingSpec& s, int trials, uint64_t seed) {
    AnalysisReport rep;
    Rng rng(seed);
    rep.rank = s.leaf_count();
    rep.log.emplace_back("rank", rank_check(s, trials, rng));
    rep.log.emplace_back("sv", sv_check(s, trials, rng));
    if (s.leaf_count() >= 2) {
        for (int q : s.internal_nodes()) rep.branching_ids.push_back(s.tree().id(q));
        rep.log.emplace_back("branching", verify_branching_nodes(s, std::max(1, trials / 4), rng));
        rep.type = classify_type(s);
        rep.log.emplace_back("type", classify_cross_check(s, std::max(1, trials / 4), rng));
        rep.max_ideal_branching = s.top_is_max_ideal();
        rep.log.emplace_back("max-branching", max_ideal_branching_check(s, std::max(1, trials / 4), rng));
        if (s.leaf_count() == 2)
            rep.log.emplace_back("goursat", goursat_verify(s, std::max(1, trials / 4), rng));
    }
    rep.brspec_poset = brspec(s);
    auto rootrep = rep.brspec_poset.validate_root_system();
    CheckOutcome broot;
    if (!rootrep.ok || !rep.brspec_poset.top() || !rep.brspec_poset.is_reduced())
        broot = CheckOutcome::fail("branching spectrum is not a reduced root");
    rep.log.emplace_back("brspec-root", broot);
    return rep;
}

} // namespace svr
