// Versioned structured-text formats for ring specs and posets.
//
// ringspec v1                        poset v1
//   node <id> level <c> [parent <id>]  elem <id> [<id> ...]
//   leaf <id> depth <d> [parent <id>]  cover <child> <parent>
//
// '#' starts a comment; leaves appear in component order; exactly one node
// line has no parent (the top). Schema violations carry line numbers.
#pragma once

#include "svr/ring_spec.hpp"

#include <fstream>
#include <sstream>

namespace svr {

struct SpecFileError : std::runtime_error {
    int line;
    SpecFileError(const std::string& msg, int l)
        : std::runtime_error("line " + std::to_string(l) + ": " + msg), line(l) {}
};

namespace detail {

inline std::vector<std::string> tokenize_line(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

inline int parse_count(const std::string& s, int line) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw SpecFileError("expected an integer, got '" + s + "'", line);
    }
}

} // namespace detail

inline RingSpec parse_ring_spec(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool header = false;
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> covers;
    std::map<std::string, int> depths, levels;
    int orphans = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::tokenize_line(line);
        if (toks.empty()) continue;
        if (!header) {
            if (toks.size() != 2 || toks[0] != "ringspec" || toks[1] != "v1")
                throw SpecFileError("expected header 'ringspec v1'", lineno);
            header = true;
            continue;
        }
        bool is_leaf = toks[0] == "leaf";
        if (!is_leaf && toks[0] != "node")
            throw SpecFileError("expected 'node' or 'leaf', got '" + toks[0] + "'", lineno);
        if (toks.size() < 4 || (is_leaf ? toks[2] != "depth" : toks[2] != "level"))
            throw SpecFileError(is_leaf ? "expected 'leaf <id> depth <d> [parent <id>]'"
                                        : "expected 'node <id> level <c> [parent <id>]'",
                                lineno);
        const std::string& id = toks[1];
        int value = detail::parse_count(toks[3], lineno);
        std::string parent;
        if (toks.size() == 6 && toks[4] == "parent") {
            parent = toks[5];
        } else if (toks.size() != 4) {
            throw SpecFileError("unexpected trailing tokens", lineno);
        }
        ids.push_back(id);
        if (is_leaf) depths[id] = value;
        else levels[id] = value;
        if (parent.empty()) ++orphans;
        else covers.emplace_back(id, parent);
    }
    if (!header) throw SpecFileError("empty spec file", lineno);
    if (orphans != 1) throw SpecFileError("exactly one node must have no parent", lineno);
    try {
        return RingSpec::make(RootPoset::build(ids, covers), depths, levels);
    } catch (const std::invalid_argument& e) {
        throw SpecFileError(e.what(), lineno);
    }
}

inline RingSpec load_ring_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_ring_spec(in);
}

inline std::string serialize_ring_spec(const RingSpec& s) {
    std::ostringstream os;
    os << "ringspec v1\n";
    // Internal nodes top-down (parents before children keeps files readable),
    // leaves in component order.
    std::vector<int> internal = s.internal_nodes();
    std::sort(internal.begin(), internal.end(), [&](int a, int b) {
        if (s.level(a) != s.level(b)) return s.level(a) < s.level(b);
        return s.tree().id(a) < s.tree().id(b);
    });
    auto parent_of = [&](int node) -> std::optional<int> {
        for (auto& [a, b] : s.tree().hasse_covers())
            if (a == node) return b;
        return std::nullopt;
    };
    for (int q : internal) {
        os << "node " << s.tree().id(q) << " level " << s.level(q);
        if (auto p = parent_of(q)) os << " parent " << s.tree().id(*p);
        os << "\n";
    }
    for (int i = 0; i < s.leaf_count(); ++i) {
        int node = s.leaf_node(i);
        os << "leaf " << s.tree().id(node) << " depth " << s.leaf_depth(i);
        if (auto p = parent_of(node)) os << " parent " << s.tree().id(*p);
        os << "\n";
    }
    return os.str();
}

inline RootPoset parse_poset(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool header = false;
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> covers;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::tokenize_line(line);
        if (toks.empty()) continue;
        if (!header) {
            if (toks.size() != 2 || toks[0] != "poset" || toks[1] != "v1")
                throw SpecFileError("expected header 'poset v1'", lineno);
            header = true;
            continue;
        }
        if (toks[0] == "elem") {
            for (size_t i = 1; i < toks.size(); ++i) ids.push_back(toks[i]);
        } else if (toks[0] == "cover") {
            if (toks.size() != 3) throw SpecFileError("expected 'cover <child> <parent>'", lineno);
            covers.emplace_back(toks[1], toks[2]);
        } else {
            throw SpecFileError("expected 'elem' or 'cover', got '" + toks[0] + "'", lineno);
        }
    }
    if (!header) throw SpecFileError("empty poset file", lineno);
    try {
        return RootPoset::build(ids, covers);
    } catch (const std::invalid_argument& e) {
        throw SpecFileError(e.what(), lineno);
    }
}

inline RootPoset load_poset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_poset(in);
}

inline std::string serialize_poset(const RootPoset& p) {
    std::ostringstream os;
    os << "poset v1\n";
    os << "elem";
    for (int i = 0; i < p.size(); ++i) os << " " << p.id(i);
    os << "\n";
    for (auto& [a, b] : p.hasse_covers())
        os << "cover " << p.id(a) << " " << p.id(b) << "\n";
    return os.str();
}

} // namespace svr
