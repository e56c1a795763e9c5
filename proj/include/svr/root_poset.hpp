// Finite posets stored as covering pairs plus transitive closure, with the
// root-system toolkit: principal up-sets, branching points, the branching
// root, joins, order isomorphism with witness, DOT output, and exhaustive
// generation of small roots (rooted trees up to isomorphism).
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace svr {

struct PosetReport {
    bool ok = true;
    std::string reason;
    std::string witness_a, witness_b; // offending pair, when meaningful
};

class RootPoset {
public:
    RootPoset() = default;

    // Build from element ids and covering pairs (child below parent).
    // Rejects duplicate ids, unknown ids, and cycles (reported distinctly).
    static RootPoset build(const std::vector<std::string>& ids,
                           const std::vector<std::pair<std::string, std::string>>& covers) {
        RootPoset p;
        for (const auto& id : ids) {
            if (p.index_.count(id)) throw std::invalid_argument("duplicate element id: " + id);
            p.index_[id] = static_cast<int>(p.ids_.size());
            p.ids_.push_back(id);
        }
        int n = p.size();
        p.leq_.assign(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i) p.leq_[i][i] = true;
        for (const auto& [a, b] : covers) {
            int ia = p.index_of(a), ib = p.index_of(b);
            if (ia == ib) throw std::invalid_argument("self-cover at " + a);
            p.covers_.emplace_back(ia, ib);
        }
        // Transitive closure over the cover relation.
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (auto& [a, b] : p.covers_) adj[a][b] = true;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                if (adj[i][k])
                    for (int j = 0; j < n; ++j)
                        if (adj[k][j]) adj[i][j] = true;
        for (int i = 0; i < n; ++i)
            if (adj[i][i]) throw std::invalid_argument("cover relation has a cycle through " + p.ids_[i]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (adj[i][j]) p.leq_[i][j] = true;
        return p;
    }

    int size() const { return static_cast<int>(ids_.size()); }
    const std::string& id(int i) const { return ids_[static_cast<size_t>(i)]; }
    int index_of(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw std::invalid_argument("unknown element id: " + id);
        return it->second;
    }
    bool contains(const std::string& id) const { return index_.count(id) != 0; }

    bool leq(int a, int b) const { return leq_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
    bool lt(int a, int b) const { return a != b && leq(a, b); }

    std::vector<int> up_set(int a) const {
        std::vector<int> r;
        for (int b = 0; b < size(); ++b)
            if (leq(a, b)) r.push_back(b);
        return r;
    }
    int up_set_size(int a) const { return static_cast<int>(up_set(a).size()); }

    std::vector<int> minimal_elements() const {
        std::vector<int> r;
        for (int a = 0; a < size(); ++a) {
            bool min = true;
            for (int b = 0; b < size(); ++b)
                if (lt(b, a)) { min = false; break; }
            if (min) r.push_back(a);
        }
        return r;
    }

    std::optional<int> top() const {
        for (int t = 0; t < size(); ++t) {
            bool all = true;
            for (int a = 0; a < size(); ++a)
                if (!leq(a, t)) { all = false; break; }
            if (all) return t;
        }
        return std::nullopt;
    }

    // Every principal up-set must be a chain; reports the first violation.
    PosetReport validate_root_system() const {
        for (int p = 0; p < size(); ++p) {
            auto up = up_set(p);
            for (size_t i = 0; i < up.size(); ++i)
                for (size_t j = i + 1; j < up.size(); ++j) {
                    int a = up[i], b = up[j];
                    if (!leq(a, b) && !leq(b, a)) {
                        PosetReport r;
                        r.ok = false;
                        r.reason = "up-set of " + id(p) + " is not a chain";
                        r.witness_a = id(a);
                        r.witness_b = id(b);
                        return r;
                    }
                }
        }
        return {};
    }

    bool is_root() const { return validate_root_system().ok && top().has_value(); }

    void require_root() const {
        auto rep = validate_root_system();
        if (!rep.ok) throw std::invalid_argument("not a root system: " + rep.reason);
        if (!top()) throw std::invalid_argument("root system has no top element");
    }

    // Minimum of a^up intersect b^up; exists and is unique in a finite root.
    int join(int a, int b) const {
        int best = -1;
        for (int c = 0; c < size(); ++c) {
            if (!leq(a, c) || !leq(b, c)) continue;
            if (best < 0 || leq(c, best)) best = c;
        }
        if (best < 0) throw std::domain_error("join does not exist (not a root)");
        return best;
    }

    // q with p1, p2 strictly below q and {q} the minimum of p1^up cap p2^up.
    std::vector<int> branching_points() const {
        std::vector<int> r;
        for (int q = 0; q < size(); ++q) {
            bool found = false;
            for (int a = 0; a < size() && !found; ++a)
                for (int b = a + 1; b < size() && !found; ++b)
                    if (lt(a, q) && lt(b, q) && !leq(a, b) && !leq(b, a) && join(a, b) == q)
                        found = true;
            if (found) r.push_back(q);
        }
        return r;
    }

    int rank() const { return static_cast<int>(minimal_elements().size()); }

    RootPoset subposet(const std::vector<int>& keep) const {
        std::vector<std::string> ids;
        for (int i : keep) ids.push_back(id(i));
        // Covers of the induced order.
        std::vector<std::pair<std::string, std::string>> covers;
        for (size_t i = 0; i < keep.size(); ++i)
            for (size_t j = 0; j < keep.size(); ++j) {
                if (i == j || !lt(keep[i], keep[j])) continue;
                bool is_cover = true;
                for (size_t k = 0; k < keep.size(); ++k)
                    if (k != i && k != j && lt(keep[i], keep[k]) && lt(keep[k], keep[j])) {
                        is_cover = false;
                        break;
                    }
                if (is_cover) covers.emplace_back(id(keep[i]), id(keep[j]));
            }
        return build(ids, covers);
    }

    // Br(P) = minimal elements + branching points + top, with induced order.
    RootPoset branching_root() const {
        require_root();
        std::set<int> keep;
        for (int m : minimal_elements()) keep.insert(m);
        for (int b : branching_points()) keep.insert(b);
        keep.insert(*top());
        return subposet(std::vector<int>(keep.begin(), keep.end()));
    }

    bool is_reduced() const {
        require_root();
        std::set<int> keep;
        for (int m : minimal_elements()) keep.insert(m);
        for (int b : branching_points()) keep.insert(b);
        keep.insert(*top());
        return static_cast<int>(keep.size()) == size();
    }

    // Hasse covers recomputed from the closure (deterministic order).
    std::vector<std::pair<int, int>> hasse_covers() const {
        std::vector<std::pair<int, int>> r;
        for (int a = 0; a < size(); ++a)
            for (int b = 0; b < size(); ++b) {
                if (!lt(a, b)) continue;
                bool cover = true;
                for (int c = 0; c < size(); ++c)
                    if (c != a && c != b && lt(a, c) && lt(c, b)) { cover = false; break; }
                if (cover) r.emplace_back(a, b);
            }
        return r;
    }

    std::string to_dot(const std::string& name = "poset") const {
        std::ostringstream os;
        os << "digraph " << name << " {\n  rankdir=BT;\n";
        for (int i = 0; i < size(); ++i) os << "  \"" << id(i) << "\";\n";
        for (auto& [a, b] : hasse_covers())
            os << "  \"" << id(a) << "\" -> \"" << id(b) << "\";\n";
        os << "}\n";
        return os.str();
    }

private:
    std::vector<std::string> ids_;
    std::map<std::string, int> index_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::pair<int, int>> covers_;
};

// Order isomorphism by backtracking; returns the witness bijection
// (index in p -> index in q) or nullopt.
inline std::optional<std::vector<int>> poset_iso(const RootPoset& p, const RootPoset& q) {
    int n = p.size();
    if (n != q.size()) return std::nullopt;
    // Invariants to prune: (|down-set|, |up-set|) profile.
    auto profile = [](const RootPoset& r, int a) {
        int down = 0, up = 0;
        for (int b = 0; b < r.size(); ++b) {
            if (r.leq(b, a)) ++down;
            if (r.leq(a, b)) ++up;
        }
        return std::pair<int, int>(down, up);
    };
    std::vector<std::pair<int, int>> pp(n), qp(n);
    for (int i = 0; i < n; ++i) pp[i] = profile(p, i);
    for (int i = 0; i < n; ++i) qp[i] = profile(q, i);
    {
        auto a = pp, b = qp;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    std::vector<int> map(n, -1), used(n, 0);
    auto consistent = [&](int a, int b) {
        if (pp[a] != qp[b]) return false;
        for (int c = 0; c < n; ++c) {
            if (map[c] < 0) continue;
            if (p.leq(a, c) != q.leq(b, map[c])) return false;
            if (p.leq(c, a) != q.leq(map[c], b)) return false;
        }
        return true;
    };
    std::function<bool(int)> rec = [&](int a) -> bool {
        if (a == n) return true;
        for (int b = 0; b < n; ++b) {
            if (used[b] || !consistent(a, b)) continue;
            map[a] = b;
            used[b] = 1;
            if (rec(a + 1)) return true;
            map[a] = -1;
            used[b] = 0;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return map;
}

// All rooted trees with exactly n nodes, as parent vectors (parent[0] = -1,
// nodes in a canonical order), generated up to isomorphism.
namespace detail {

struct TreeShape {
    std::vector<TreeShape> children; // sorted by encoding
    int size = 1;
    std::string enc;

    void finish() {
        std::vector<std::string> encs;
        size = 1;
        for (auto& c : children) {
            size += c.size;
            encs.push_back(c.enc);
        }
        std::sort(encs.begin(), encs.end());
        enc = "(";
        for (auto& e : encs) enc += e;
        enc += ")";
    }
};

inline void gen_forests(int total, const std::vector<std::vector<TreeShape>>& trees_by_size,
                        int max_part, std::vector<TreeShape>& cur,
                        std::vector<std::vector<TreeShape>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (int s = std::min(total, max_part); s >= 1; --s) {
        for (const auto& t : trees_by_size[static_cast<size_t>(s)]) {
            if (!cur.empty() && cur.back().size == s && t.enc > cur.back().enc) continue;
            cur.push_back(t);
            gen_forests(total - s, trees_by_size, s, cur, out);
            cur.pop_back();
        }
    }
}

inline std::vector<std::vector<TreeShape>> all_tree_shapes(int max_n) {
    std::vector<std::vector<TreeShape>> by_size(static_cast<size_t>(max_n) + 1);
    TreeShape leaf;
    leaf.finish();
    if (max_n >= 1) by_size[1].push_back(leaf);
    for (int n = 2; n <= max_n; ++n) {
        std::vector<std::vector<TreeShape>> forests;
        std::vector<TreeShape> cur;
        gen_forests(n - 1, by_size, n - 1, cur, forests);
        for (auto& f : forests) {
            TreeShape t;
            t.children = f;
            t.finish();
            by_size[static_cast<size_t>(n)].push_back(t);
        }
    }
    return by_size;
}

inline void shape_to_parents(const TreeShape& t, int parent, std::vector<int>& out) {
    int me = static_cast<int>(out.size());
    out.push_back(parent);
    for (const auto& c : t.children) shape_to_parents(c, me, out);
}

} // namespace detail

// Every finite root with n elements is a rooted tree oriented toward the top
// (each non-top element has a unique cover). Enumerates all of them up to
// isomorphism for 1 <= n <= max_elems, as posets with ids e0 (the top),
// e1, e2, ...
inline std::vector<RootPoset> enumerate_roots(int max_elems, int max_minima = -1) {
    std::vector<RootPoset> out;
    auto shapes = detail::all_tree_shapes(max_elems);
    for (int n = 1; n <= max_elems; ++n) {
        for (const auto& t : shapes[static_cast<size_t>(n)]) {
            std::vector<int> parents;
            detail::shape_to_parents(t, -1, parents);
            std::vector<std::string> ids;
            std::vector<std::pair<std::string, std::string>> covers;
            for (int i = 0; i < n; ++i) ids.push_back("e" + std::to_string(i));
            for (int i = 1; i < n; ++i)
                covers.emplace_back(ids[static_cast<size_t>(i)],
                                    ids[static_cast<size_t>(parents[static_cast<size_t>(i)])]);
            RootPoset p = RootPoset::build(ids, covers);
            if (max_minima >= 0 && p.rank() > max_minima) continue;
            out.push_back(std::move(p));
        }
    }
    return out;
}

} // namespace svr
