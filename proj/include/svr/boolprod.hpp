// Boolean products of valuation rings over a finite discrete space: the
// survaluation witness. Given sections a, b the space splits into the three
// pieces where a strictly divides b, where b strictly divides a, and where
// both divide; choosing c as the pointwise quotient on each piece makes
// (a - c b)(b - c a) vanish identically.
#pragma once

#include "svr/hahn.hpp"

#include <vector>

namespace svr {

struct BoolProdWitness {
    std::vector<int> part_u, part_v, part_w; // indices of the three pieces
    std::vector<ValElt> c;
    bool identity_holds = false;
};

inline BoolProdWitness sv_witness(const std::vector<ValElt>& a, const std::vector<ValElt>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("section lengths differ");
    BoolProdWitness w;
    w.identity_holds = true;
    for (size_t x = 0; x < a.size(); ++x) {
        if (!a[x].in_valuation_ring() || !b[x].in_valuation_ring())
            throw std::invalid_argument("sections must take values in the stalk valuation rings");
        auto ab = divides(a[x], b[x]);
        auto ba = divides(b[x], a[x]);
        if (ab && !ba) {
            w.part_u.push_back(static_cast<int>(x));
            w.c.push_back(*ab); // kills b - c a
        } else if (ba && !ab) {
            w.part_v.push_back(static_cast<int>(x));
            w.c.push_back(*ba); // kills a - c b
        } else if (ab && ba) {
            w.part_w.push_back(static_cast<int>(x));
            w.c.push_back(*ba);
        } else {
            throw std::logic_error("valuation-ring divisibility is total");
        }
        ValElt f1 = a[x] - w.c.back() * b[x];
        ValElt f2 = b[x] - w.c.back() * a[x];
        if (!(f1 * f2).is_zero()) w.identity_holds = false;
    }
    return w;
}

} // namespace svr
