// The core data model: a finite-rank local SV-ring presented by a labeled
// reduced root tree. Leaves carry factor depths d_i (the factor at leaf i is
// the valuation ring V_{d_i}); every node q carries a level c(q) = number of
// primes strictly above it in the full spectrum, strictly decreasing upward,
// with c(leaf) = d_i. The top node is the maximal ideal itself when
// c(top) = 0, and a proper prime below it when c(top) >= 1.
//
// Ring elements are tuples of valuation-ring elements, one per leaf, that
// agree under the residue maps at every join: for leaves i, j with
// q = join(i, j), residue(a_i, d_i - c(q)) = residue(a_j, d_j - c(q)) in
// K_{c(q)}. This realizes the iterated fibre products of valuation rings
// along their residue quotients.
#pragma once

#include "svr/hahn.hpp"
#include "svr/root_poset.hpp"

#include <cassert>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace svr {

class TupleElt;

class RingSpec {
public:
    RingSpec() = default;

    // tree: a finite reduced root whose minimal elements are the leaves;
    // depth: leaf id -> d_i >= 1; level: internal node id -> c(q) >= 0.
    static RingSpec make(const RootPoset& tree,
                         const std::map<std::string, int>& leaf_depth,
                         const std::map<std::string, int>& node_level) {
        auto d = std::make_shared<Data>();
        d->tree = tree;
        tree.require_root();
        if (!tree.is_reduced())
            throw std::invalid_argument("ring spec tree must be a reduced root");
        d->top = *tree.top();
        auto mins = tree.minimal_elements();
        d->level_by_node.assign(static_cast<size_t>(tree.size()), -1);
        for (int m : mins) {
            auto it = leaf_depth.find(tree.id(m));
            if (it == leaf_depth.end())
                throw std::invalid_argument("missing depth for leaf " + tree.id(m));
            if (it->second < 1) throw std::invalid_argument("leaf depth must be >= 1");
            d->leaves.push_back(m);
            d->depths.push_back(it->second);
            d->level_by_node[static_cast<size_t>(m)] = it->second;
        }
        if (static_cast<size_t>(leaf_depth.size()) != d->leaves.size())
            throw std::invalid_argument("depth given for a non-leaf node");
        for (const auto& [id, c] : node_level) {
            int n = tree.index_of(id);
            if (d->level_by_node[static_cast<size_t>(n)] != -1)
                throw std::invalid_argument("level given for leaf " + id);
            if (c < 0) throw std::invalid_argument("node level must be >= 0");
            d->level_by_node[static_cast<size_t>(n)] = c;
        }
        for (int n = 0; n < tree.size(); ++n)
            if (d->level_by_node[static_cast<size_t>(n)] < 0)
                throw std::invalid_argument("missing level for node " + tree.id(n));
        // Levels strictly decrease upward.
        for (auto& [a, b] : tree.hasse_covers())
            if (d->level_by_node[static_cast<size_t>(a)] <= d->level_by_node[static_cast<size_t>(b)])
                throw std::invalid_argument("levels must strictly decrease from " + tree.id(a) +
                                            " up to " + tree.id(b));
        RingSpec s;
        s.d_ = std::move(d);
        return s;
    }

    // Single leaf: a bare valuation ring of depth d (rank 1).
    static RingSpec single(const std::string& id, int depth) {
        RootPoset t = RootPoset::build({id}, {});
        return make(t, {{id, depth}}, {});
    }

    // n leaves of equal depth glued at one top node of the given level.
    static RingSpec star(int n, int depth, int top_level, const std::string& prefix = "l") {
        if (n < 2) throw std::invalid_argument("star needs at least two leaves");
        std::vector<std::string> ids = {"q"};
        std::vector<std::pair<std::string, std::string>> covers;
        std::map<std::string, int> dd;
        for (int i = 1; i <= n; ++i) {
            std::string id = prefix + std::to_string(i);
            ids.push_back(id);
            covers.emplace_back(id, "q");
            dd[id] = depth;
        }
        return make(RootPoset::build(ids, covers), dd, {{"q", top_level}});
    }

    bool valid() const { return d_ != nullptr; }
    const RootPoset& tree() const { return d_->tree; }
    int leaf_count() const { return static_cast<int>(d_->leaves.size()); }
    int leaf_node(int i) const { return d_->leaves[static_cast<size_t>(i)]; }
    int leaf_depth(int i) const { return d_->depths[static_cast<size_t>(i)]; }
    int level(int node) const { return d_->level_by_node[static_cast<size_t>(node)]; }
    int top_node() const { return d_->top; }
    bool top_is_max_ideal() const { return level(d_->top) == 0; }

    int leaf_pos(int node) const {
        for (int i = 0; i < leaf_count(); ++i)
            if (leaf_node(i) == node) return i;
        throw std::invalid_argument("node is not a leaf");
    }
    bool is_leaf(int node) const {
        for (int l : d_->leaves)
            if (l == node) return true;
        return false;
    }
    std::vector<int> internal_nodes() const {
        std::vector<int> r;
        for (int n = 0; n < tree().size(); ++n)
            if (!is_leaf(n)) r.push_back(n);
        return r;
    }

    int join_node(int i, int j) const { return tree().join(leaf_node(i), leaf_node(j)); }
    int join_level(int i, int j) const { return level(join_node(i, j)); }

    std::vector<int> leaves_below(int node) const {
        std::vector<int> r;
        for (int i = 0; i < leaf_count(); ++i)
            if (tree().leq(leaf_node(i), node)) r.push_back(i);
        return r;
    }

    // Children of the top node, as groups of leaf positions (used for the
    // zero-divisor partition when the maximal ideal branches).
    std::vector<std::vector<int>> top_children_leaf_groups() const {
        std::vector<std::vector<int>> groups;
        for (auto& [a, b] : tree().hasse_covers()) {
            if (b != d_->top) continue;
            groups.push_back(leaves_below(a));
        }
        return groups;
    }

    bool same_object(const RingSpec& o) const { return d_ == o.d_; }

    std::optional<std::string> check_components(const std::vector<ValElt>& comps) const;
    TupleElt make_element(std::vector<ValElt> comps) const;
    TupleElt zero_element() const;
    TupleElt one_element() const;
    TupleElt constant_element(const Scalar& c) const;

    std::string describe() const {
        std::ostringstream os;
        os << "ring spec: " << leaf_count() << " leaves;";
        for (int i = 0; i < leaf_count(); ++i)
            os << " " << tree().id(leaf_node(i)) << "(d=" << leaf_depth(i) << ")";
        os << "; top " << tree().id(top_node()) << " level " << level(top_node());
        return os.str();
    }

private:
    struct Data {
        RootPoset tree;
        std::vector<int> leaves;  // tree node index per leaf position
        std::vector<int> depths;  // d_i per leaf position
        std::vector<int> level_by_node;
        int top = -1;
    };
    std::shared_ptr<const Data> d_;

    friend class TupleElt;
};

class TupleElt {
public:
    TupleElt() = default;

    const RingSpec& owner() const { return owner_; }
    int size() const { return static_cast<int>(comps_.size()); }
    const ValElt& operator[](int i) const { return comps_[static_cast<size_t>(i)]; }
    const std::vector<ValElt>& components() const { return comps_; }

    bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    TupleElt operator-() const {
        std::vector<ValElt> r;
        r.reserve(comps_.size());
        for (const auto& c : comps_) r.push_back(-c);
        return raw(owner_, std::move(r));
    }
    TupleElt operator+(const TupleElt& o) const { return zip(o, '+'); }
    TupleElt operator-(const TupleElt& o) const { return zip(o, '-'); }
    TupleElt operator*(const TupleElt& o) const { return zip(o, '*'); }
    TupleElt& operator+=(const TupleElt& o) { *this = *this + o; return *this; }
    TupleElt& operator-=(const TupleElt& o) { *this = *this - o; return *this; }
    TupleElt& operator*=(const TupleElt& o) { *this = *this * o; return *this; }

    bool operator==(const TupleElt& o) const {
        check_owner(o);
        for (size_t i = 0; i < comps_.size(); ++i)
            if (comps_[i] != o.comps_[i]) return false;
        return true;
    }
    bool operator!=(const TupleElt& o) const { return !(*this == o); }

    // Unit of A iff every component is a unit; in the maximal ideal iff every
    // component is a non-unit. Compatibility makes mixtures impossible.
    bool is_unit() const {
        for (const auto& c : comps_)
            if (!c.is_unit()) return false;
        return true;
    }
    bool in_max_ideal() const {
        bool any_unit = false, any_nonunit = false;
        for (const auto& c : comps_) (c.is_unit() ? any_unit : any_nonunit) = true;
        assert(!(any_unit && any_nonunit)); // compatibility forces all-or-none
        return !any_unit;
    }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (size_t i = 0; i < comps_.size(); ++i) {
            if (i) os << ", ";
            os << comps_[i].str();
        }
        os << ")";
        return os.str();
    }

    static TupleElt raw(const RingSpec& owner, std::vector<ValElt> comps) {
        TupleElt t;
        t.owner_ = owner;
        t.comps_ = std::move(comps);
        return t;
    }

private:
    TupleElt zip(const TupleElt& o, char op) const {
        check_owner(o);
        std::vector<ValElt> r;
        r.reserve(comps_.size());
        for (size_t i = 0; i < comps_.size(); ++i) {
            switch (op) {
                case '+': r.push_back(comps_[i] + o.comps_[i]); break;
                case '-': r.push_back(comps_[i] - o.comps_[i]); break;
                default: r.push_back(comps_[i] * o.comps_[i]); break;
            }
        }
        TupleElt t = raw(owner_, std::move(r));
        assert(!owner_.check_components(t.comps_));
        return t;
    }

    void check_owner(const TupleElt& o) const {
        if (!owner_.same_object(o.owner_)) throw std::invalid_argument("owner spec mismatch");
    }

    RingSpec owner_;
    std::vector<ValElt> comps_;
};

inline ValElt comps_residue(const std::vector<ValElt>& comps, int i, int target_level) {
    const ValElt& a = comps[static_cast<size_t>(i)];
    return a.residue(a.dim() - target_level);
}

inline std::optional<std::string> RingSpec::check_components(const std::vector<ValElt>& comps) const {
    if (static_cast<int>(comps.size()) != leaf_count())
        return "expected " + std::to_string(leaf_count()) + " components";
    for (int i = 0; i < leaf_count(); ++i) {
        if (comps[static_cast<size_t>(i)].dim() != leaf_depth(i))
            return "component " + std::to_string(i + 1) + " has wrong dimension";
        if (!comps[static_cast<size_t>(i)].in_valuation_ring())
            return "component " + std::to_string(i + 1) + " lies outside the valuation ring";
    }
    // All pairs; n is small and this is provably equivalent to checking
    // tree-adjacent pairs only.
    for (int i = 0; i < leaf_count(); ++i)
        for (int j = i + 1; j < leaf_count(); ++j) {
            int c = join_level(i, j);
            ValElt ri = comps_residue(comps, i, c);
            ValElt rj = comps_residue(comps, j, c);
            if (ri != rj)
                return "compatibility fails between leaves " + tree().id(leaf_node(i)) + " and " +
                       tree().id(leaf_node(j)) + " at level " + std::to_string(c) + ": " +
                       ri.str() + " vs " + rj.str();
        }
    return std::nullopt;
}

inline TupleElt RingSpec::make_element(std::vector<ValElt> comps) const {
    if (auto why = check_components(comps)) throw std::invalid_argument(*why);
    return TupleElt::raw(*this, std::move(comps));
}

inline TupleElt RingSpec::zero_element() const {
    std::vector<ValElt> r;
    for (int i = 0; i < leaf_count(); ++i) r.push_back(ValElt::zero(leaf_depth(i)));
    return TupleElt::raw(*this, std::move(r));
}
inline TupleElt RingSpec::one_element() const {
    std::vector<ValElt> r;
    for (int i = 0; i < leaf_count(); ++i) r.push_back(ValElt::one(leaf_depth(i)));
    return TupleElt::raw(*this, std::move(r));
}
inline TupleElt RingSpec::constant_element(const Scalar& c) const {
    std::vector<ValElt> r;
    for (int i = 0; i < leaf_count(); ++i) r.push_back(ValElt::constant(leaf_depth(i), c));
    return TupleElt::raw(*this, std::move(r));
}

// Component extraction (the projection onto the leaf factor).
inline ValElt project(const TupleElt& a, int i) { return a[i]; }

// The common residue of a at a tree node's level, an element of K_{c(q)}.
inline ValElt residue_at(const TupleElt& a, int node) {
    const RingSpec& s = a.owner();
    auto below = s.leaves_below(node);
    if (below.empty()) throw std::invalid_argument("node has no leaves below it");
    ValElt r = a[below[0]].residue(s.leaf_depth(below[0]) - s.level(node));
#ifndef NDEBUG
    for (size_t k = 1; k < below.size(); ++k)
        assert(a[below[k]].residue(s.leaf_depth(below[k]) - s.level(node)) == r);
#endif
    return r;
}

// Residue at the maximal ideal (level 0), as a scalar; the common residue
// field of every factor.
inline Scalar residue_at_max(const TupleElt& a) {
    Scalar r = a[0].residue_scalar();
#ifndef NDEBUG
    for (int i = 1; i < a.size(); ++i) assert(a[i].residue_scalar() == r);
#endif
    return r;
}

// Membership in the prime attached to a tree node: at a leaf, the component
// vanishes (the minimal prime Ann(e_i)); at an internal node q, the residue
// at level c(q) vanishes.
inline bool in_prime(const TupleElt& a, int node) {
    const RingSpec& s = a.owner();
    if (node < 0 || node >= s.tree().size()) throw std::invalid_argument("unknown node");
    if (s.is_leaf(node)) return a[s.leaf_pos(node)].is_zero();
    return residue_at(a, node).is_zero();
}

// The canonical nonzero pairwise orthogonal family: e_i is x^(1,0,...,0) at
// leaf i and 0 elsewhere. Residues vanish at every internal level, so each
// e_i is a valid element.
inline std::vector<TupleElt> canonical_orthogonals(const RingSpec& s) {
    std::vector<TupleElt> es;
    for (int i = 0; i < s.leaf_count(); ++i) {
        std::vector<ValElt> comps;
        for (int j = 0; j < s.leaf_count(); ++j) {
            if (j == i) {
                comps.push_back(ValElt::monomial(GroupElement::axis(s.leaf_depth(j), 0)));
            } else {
                comps.push_back(ValElt::zero(s.leaf_depth(j)));
            }
        }
        es.push_back(s.make_element(std::move(comps)));
    }
    return es;
}

// Completes a single valuation-ring element at leaf i to a full tuple using
// pure section lifts at every other leaf: the minimal compatible extension.
inline TupleElt complete_from_leaf(const RingSpec& s, int i, const ValElt& v) {
    if (v.dim() != s.leaf_depth(i)) throw std::invalid_argument("component dimension mismatch");
    if (!v.in_valuation_ring()) throw std::invalid_argument("component outside the valuation ring");
    std::vector<ValElt> comps;
    for (int j = 0; j < s.leaf_count(); ++j) {
        if (j == i) {
            comps.push_back(v);
        } else {
            int c = s.join_level(i, j);
            comps.push_back(v.residue(s.leaf_depth(i) - c).section(s.leaf_depth(j) - c));
        }
    }
    return s.make_element(std::move(comps));
}

} // namespace svr
