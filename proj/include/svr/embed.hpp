// Valued-field extension audits at computable scale: the canonical monomial
// group and coefficient field of K_d, and the two non-immediate extension
// steps — a fresh value coordinate (h with v(h) = delta, delta a new last
// lexicographic coordinate, so n*delta never lands in Q^d) and a residue
// transcendental (b mapped to a fresh scalar generator, a Gauss extension).
// Each step is checked for its valuation law, the homomorphism property,
// and order preservation via the residue-positivity criterion.
#pragma once

#include "svr/sample.hpp"

#include <functional>

namespace svr {

// A polynomial over K_d in one extension generator.
struct ExtPoly {
    std::vector<ValElt> coeffs; // coeffs[i] multiplies gen^i
    int dim() const { return coeffs.empty() ? 0 : coeffs[0].dim(); }
};

// A monomial-respecting embedding of the simple extension K_d(gen) into a
// larger Hahn-type field, together with the claimed valuation and sign of
// source polynomials (both computable from the coefficients).
struct MonomialMap {
    int src_dim = 0;
    int dst_dim = 0;
    std::function<ValElt(const ExtPoly&)> apply;
    std::function<std::optional<GroupElement>(const ExtPoly&)> val;
    std::function<int(const ExtPoly&)> sign;
};

// Case of a fresh value: gen = h with v(h) = delta, the new last coordinate.
// v(sum a_i h^i) = min_i (v(a_i) + i*delta), the minimum over distinct
// values. flip deliberately sends h to -x^delta to give the order audit a
// wrong map to catch.
inline MonomialMap fresh_value_map(int d, bool flip = false) {
    MonomialMap m;
    m.src_dim = d;
    m.dst_dim = d + 1;
    m.apply = [d, flip](const ExtPoly& p) {
        ValElt acc = ValElt::zero(d + 1);
        for (size_t i = 0; i < p.coeffs.size(); ++i) {
            GroupElement delta_i = GroupElement::axis(d + 1, d, Rational(static_cast<long>(i)));
            Scalar c = (flip && (i % 2 == 1)) ? Scalar(-1) : Scalar(1);
            acc += p.coeffs[i].pad_suffix(1) * ValElt::monomial(delta_i, c);
        }
        return acc;
    };
    m.val = [d](const ExtPoly& p) -> std::optional<GroupElement> {
        std::optional<GroupElement> best;
        for (size_t i = 0; i < p.coeffs.size(); ++i) {
            if (p.coeffs[i].is_zero()) continue;
            GroupElement v = p.coeffs[i].val()->append(Rational(static_cast<long>(i)));
            if (!best || lex_cmp(v, *best) < 0) best = v;
        }
        return best;
    };
    m.sign = [](const ExtPoly& p) {
        std::optional<GroupElement> best;
        int sgn = 0;
        for (size_t i = 0; i < p.coeffs.size(); ++i) {
            if (p.coeffs[i].is_zero()) continue;
            GroupElement v = p.coeffs[i].val()->append(Rational(static_cast<long>(i)));
            if (!best || lex_cmp(v, *best) < 0) {
                best = v;
                sgn = p.coeffs[i].sign();
            }
        }
        return sgn;
    };
    return m;
}

// Case of a residue transcendental: gen = b with residue t_{m+1}, a Gauss
// extension: v(sum a_i b^i) = min_i v(a_i).
inline MonomialMap residue_transcendental_map(int d, int m_generators, bool flip = false) {
    MonomialMap m;
    m.src_dim = d;
    m.dst_dim = d;
    int g = m_generators + 1;
    m.apply = [d, g, flip](const ExtPoly& p) {
        ValElt acc = ValElt::zero(d);
        Scalar t = Scalar::generator(g);
        Scalar tp(1);
        for (size_t i = 0; i < p.coeffs.size(); ++i) {
            Scalar c = tp;
            if (flip && (i % 2 == 1)) c = -c;
            acc += p.coeffs[i] * ValElt::constant(d, c);
            tp *= t;
        }
        return acc;
    };
    m.val = [](const ExtPoly& p) -> std::optional<GroupElement> {
        std::optional<GroupElement> best;
        for (const auto& a : p.coeffs) {
            if (a.is_zero()) continue;
            if (!best || lex_cmp(*a.val(), *best) < 0) best = *a.val();
        }
        return best;
    };
    m.sign = [](const ExtPoly& p) {
        // Among coefficients of minimal valuation, the highest power of the
        // fresh generator dominates, so its leading coefficient decides.
        std::optional<GroupElement> best;
        for (const auto& a : p.coeffs) {
            if (a.is_zero()) continue;
            if (!best || lex_cmp(*a.val(), *best) < 0) best = *a.val();
        }
        if (!best) return 0;
        for (size_t i = p.coeffs.size(); i-- > 0;) {
            const auto& a = p.coeffs[i];
            if (!a.is_zero() && lex_cmp(*a.val(), *best) == 0) return a.sign();
        }
        return 0;
    };
    return m;
}

// Lemma-style order audit: for sampled r > 0 in the source, with
// g = x^{v(r)}, the residue of apply(r) * x^{-v(r)} must be positive.
// Returns the first witness of failure.
inline CheckOutcome order_preservation_audit(const MonomialMap& map,
                                             const std::vector<ExtPoly>& samples) {
    for (const auto& r : samples) {
        int sgn = map.sign(r);
        if (sgn == 0) continue;
        ExtPoly pos = r;
        if (sgn < 0)
            for (auto& c : pos.coeffs) c = -c;
        auto v = map.val(pos);
        ValElt image = map.apply(pos);
        ValElt normalized = image * ValElt::monomial(-*v);
        Scalar res = normalized.residue_scalar();
        if (res.sign() <= 0)
            return CheckOutcome::fail("order not preserved: residue " + res.str() +
                                      " for source with positive sign");
    }
    return {};
}

struct ExtensionReport {
    bool pass = true;
    std::vector<std::string> failures;
    int samples_checked = 0;
    void fail(std::string why) {
        pass = false;
        failures.push_back(std::move(why));
    }
};

inline ExtPoly random_ext_poly(Rng& rng, int d, int max_deg, int scalar_generators = 0) {
    ExtPoly p;
    int deg = static_cast<int>(rng.range(0, max_deg));
    for (int i = 0; i <= deg; ++i)
        p.coeffs.push_back(random_nonzero_in_K(rng, d, 2, scalar_generators));
    return p;
}

// Checks the fresh-value extension step: valuation law, multiplicativity on
// sample products, and order preservation.
inline ExtensionReport fresh_value_extension_check(int d, int samples, Rng& rng, int max_deg = 4) {
    ExtensionReport rep;
    MonomialMap map = fresh_value_map(d);
    std::vector<ExtPoly> audit;
    for (int t = 0; t < samples; ++t) {
        ExtPoly p = random_ext_poly(rng, d, max_deg);
        ++rep.samples_checked;
        ValElt image = map.apply(p);
        auto claimed = map.val(p);
        auto actual = image.val();
        if (!claimed || !actual || lex_cmp(*claimed, *actual) != 0) {
            rep.fail("fresh-value law fails: claimed " + (claimed ? claimed->str() : "inf") +
                     " actual " + (actual ? actual->str() : "inf"));
            continue;
        }
        // Ring homomorphism on a product pair.
        if (t % 8 == 0) {
            ExtPoly q = random_ext_poly(rng, d, 2);
            ExtPoly prod;
            prod.coeffs.assign(p.coeffs.size() + q.coeffs.size() - 1, ValElt::zero(d));
            for (size_t i = 0; i < p.coeffs.size(); ++i)
                for (size_t j = 0; j < q.coeffs.size(); ++j)
                    prod.coeffs[i + j] += p.coeffs[i] * q.coeffs[j];
            if (map.apply(prod) != map.apply(p) * map.apply(q)) rep.fail("image of a product differs");
        }
        audit.push_back(std::move(p));
    }
    CheckOutcome oc = order_preservation_audit(map, audit);
    if (!oc.pass) rep.fail(oc.detail);
    return rep;
}

// Checks the residue-transcendental (Gauss) extension step: valuation law,
// residue of the generator, multiplicativity, and order preservation.
inline ExtensionReport gauss_extension_check(int m_generators, int d, int samples, Rng& rng,
                                             int max_deg = 4) {
    ExtensionReport rep;
    MonomialMap map = residue_transcendental_map(d, m_generators);
    // lambda(b) = t_{m+1}: the image of the bare generator is a unit with
    // the fresh scalar as residue.
    {
        ExtPoly b;
        b.coeffs = {ValElt::zero(d), ValElt::one(d)};
        ValElt image = map.apply(b);
        if (!image.is_unit() || !(image.residue_scalar() == Scalar::generator(m_generators + 1)))
            rep.fail("generator does not reduce to the fresh scalar");
    }
    std::vector<ExtPoly> audit;
    for (int t = 0; t < samples; ++t) {
        ExtPoly p = random_ext_poly(rng, d, max_deg, m_generators);
        ++rep.samples_checked;
        ValElt image = map.apply(p);
        auto claimed = map.val(p);
        auto actual = image.val();
        if (!claimed || !actual || lex_cmp(*claimed, *actual) != 0) {
            rep.fail("gauss law fails: claimed " + (claimed ? claimed->str() : "inf") + " actual " +
                     (actual ? actual->str() : "inf"));
            continue;
        }
        if (t % 8 == 0) {
            ExtPoly q = random_ext_poly(rng, d, 2, m_generators);
            ExtPoly prod;
            prod.coeffs.assign(p.coeffs.size() + q.coeffs.size() - 1, ValElt::zero(d));
            for (size_t i = 0; i < p.coeffs.size(); ++i)
                for (size_t j = 0; j < q.coeffs.size(); ++j)
                    prod.coeffs[i + j] += p.coeffs[i] * q.coeffs[j];
            if (map.apply(prod) != map.apply(p) * map.apply(q)) rep.fail("image of a product differs");
        }
        audit.push_back(std::move(p));
    }
    CheckOutcome oc = order_preservation_audit(map, audit);
    if (!oc.pass) rep.fail(oc.detail);
    return rep;
}

// The canonical monomial group G = { x^gamma } of K_d: v restricted to G is
// a group isomorphism onto Q^d and G meets the kernel of v on positives
// trivially.
inline CheckOutcome monomial_group_check(int d, int trials, Rng& rng) {
    for (int t = 0; t < trials; ++t) {
        GroupElement g = random_exponent_nonneg(rng, d) - random_exponent_nonneg(rng, d);
        GroupElement h = random_exponent_nonneg(rng, d) - random_exponent_nonneg(rng, d);
        ValElt xg = ValElt::monomial(g), xh = ValElt::monomial(h);
        if (xg.sign() <= 0) return CheckOutcome::fail("monomial not positive");
        if (lex_cmp(*xg.val(), g) != 0) return CheckOutcome::fail("v(x^g) != g");
        if (xg * xh != ValElt::monomial(g + h)) return CheckOutcome::fail("exponent law fails");
        if ((xg == xh) != (g == h)) return CheckOutcome::fail("injectivity fails");
        if (xg.is_unit() && !g.is_zero()) return CheckOutcome::fail("kernel intersection not trivial");
    }
    return {};
}

// The canonical coefficient field (constants) of K_d: the residue map
// restricts to the identity on it and it meets the maximal ideal trivially.
inline CheckOutcome coefficient_field_check(int m_generators, int d, int trials, Rng& rng) {
    for (int t = 0; t < trials; ++t) {
        Scalar c = random_scalar(rng, m_generators);
        ValElt v = ValElt::constant(d, c);
        if (!(v.residue_scalar() == c)) return CheckOutcome::fail("residue is not the identity on constants");
        if (!c.is_zero() && !v.is_unit()) return CheckOutcome::fail("nonzero constant in the maximal ideal");
        // Constants survive under perturbation by a maximal-ideal element.
        if (d >= 1 && !c.is_zero()) {
            ValElt w = v + random_in_kernel_depth(rng, d, 1, 1);
            if (!(w.residue_scalar() == c)) return CheckOutcome::fail("residue drops the constant part");
        }
    }
    return {};
}

} // namespace svr
