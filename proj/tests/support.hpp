// Shared fixtures for the test suite: the group catalog, Brauer tower
// comparisons (quotient-by-stages and restriction-to-normalizer), and a
// seeded generator of invertible complexes.
#pragma once

#include "permfp/brauer.hpp"
#include "permfp/class_function.hpp"
#include "permfp/picard.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace doctest {

// Subgroups and class values travel as int vectors; print them as sets so
// CAPTURE output is readable.
template <>
struct StringMaker<std::vector<int>> {
    static String convert(const std::vector<int>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        s += "}";
        return String(s.c_str());
    }
};

}  // namespace doctest

namespace testsupport {

using namespace permfp;

// Every (group, prime) pair the suite exercises by default.
inline std::vector<std::pair<std::string, int>> catalog_pairs() {
    return {{"C2", 2}, {"C4", 2}, {"C2xC2", 2}, {"D8", 2},
            {"Q8", 2}, {"C3", 3}, {"C9", 3},    {"C3xC3", 3}};
}

inline Subgroup image_subgroup(const std::vector<int>& projection, const Subgroup& k) {
    std::vector<int> img;
    for (int x : k.elements) img.push_back(projection[x]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return Subgroup{img};
}

// The element map W1 -> W2 between N_G(K)/K and N_{G/H}(K/H)/(K/H) induced
// by the quotient projection, for H normal in G with H <= K.  Both sides
// list cosets by minimal element, so the map is found by chasing minimal
// representatives.  Throws if the map fails to be a bijection.
inline std::vector<int> weyl_quotient_iso(const WeylGroup& w1, const QuotientGroup& q,
                                          const WeylGroup& w2) {
    std::vector<int> phi(w1.cosets.size(), -1);
    std::vector<char> hit(w2.cosets.size(), 0);
    for (size_t i = 0; i < w1.cosets.size(); ++i) {
        int image = q.projection[w1.cosets[i][0]];
        int target = w2.projection[image];
        if (target < 0) throw std::logic_error("weyl image escapes the quotient weyl group");
        phi[i] = target;
        hit[target] = 1;
    }
    for (char h : hit)
        if (!h) throw std::logic_error("weyl quotient map is not onto");
    // A bijective multiplicative map between the coset tables.
    for (size_t a = 0; a < phi.size(); ++a)
        for (size_t b = 0; b < phi.size(); ++b) {
            int lhs = phi[w1.group->mul(static_cast<int>(a), static_cast<int>(b))];
            int rhs = w2.group->mul(phi[a], phi[b]);
            if (lhs != rhs) throw std::logic_error("weyl quotient map not multiplicative");
        }
    return phi;
}

// Quotient-by-stages on a module: for H normal and H <= K, taking fixed
// points at K in one step must agree with fixed points at H followed by
// fixed points at K/H, including the Weyl actions under the canonical map.
inline bool nesting_modules_agree(const GroupPtr& g, const PermModule& m, const Subgroup& h,
                                  const Subgroup& k) {
    BrauerModule direct = brauer_module(m, k);

    QuotientGroup q = quotient_group(g, h);
    BrauerModule stage1 = brauer_module(m, h);
    if (stage1.fixed.weyl.group->table() != q.group->table()) return false;

    Subgroup k_over_h = image_subgroup(q.projection, k);
    BrauerModule stage2 = brauer_module(stage1.module, k_over_h);

    // The two fixed-point sets must be the same points of the original basis.
    std::vector<int> composite;
    for (int idx : stage2.fixed.embedding) composite.push_back(stage1.fixed.embedding[idx]);
    if (composite != direct.fixed.embedding) return false;

    std::vector<int> phi =
        weyl_quotient_iso(direct.fixed.weyl, q, stage2.fixed.weyl);
    const GSet& a = direct.module.basis;
    const GSet& b = stage2.module.basis;
    if (a.size() != b.size()) return false;
    for (int w = 0; w < direct.fixed.weyl.group->order(); ++w)
        for (int pt = 0; pt < a.size(); ++pt)
            if (a.act(w, pt) != b.act(phi[w], pt)) return false;
    return true;
}

// The same tower on a whole complex, compared through homology: underlying
// homology of the one-step and two-step quotients, and again after a further
// quotient at corresponding p-subgroups of the two Weyl groups.
inline bool nesting_marks_agree(const Complex& x, const Subgroup& h, const Subgroup& k) {
    const GroupPtr& g = x.group();
    BrauerComplexResult direct = brauer_complex(x, k);

    QuotientGroup q = quotient_group(g, h);
    BrauerComplexResult stage1 = brauer_complex(x, h);
    if (stage1.complex.group()->table() != q.group->table()) return false;
    Subgroup k_over_h = image_subgroup(q.projection, k);
    BrauerComplexResult stage2 = brauer_complex(stage1.complex, k_over_h);

    if (homology_dims(direct.complex) != homology_dims(stage2.complex)) return false;

    WeylGroup w1 = weyl_group(g, k);
    std::vector<int> phi = weyl_quotient_iso(w1, q, weyl_group(q.group, k_over_h));
    for (const SubgroupClass& c : p_subgroup_classes(*direct.complex.group(), x.p())) {
        Subgroup s = c.representative;
        Subgroup s2 = image_subgroup(phi, s);
        auto lhs = homology_dims(brauer_complex(direct.complex, s).complex);
        auto rhs = homology_dims(brauer_complex(stage2.complex, s2).complex);
        if (lhs != rhs) return false;
    }
    return true;
}

// Fixed points taken over G agree with fixed points taken over N_G(H):
// same points, same Weyl group table, same action.
inline bool restriction_modules_agree(const GroupPtr& g, const PermModule& m,
                                      const Subgroup& h) {
    BrauerModule full = brauer_module(m, h);

    Subgroup n = normalizer(*g, h);
    EmbeddedGroup en = subgroup_group(g, n);
    std::vector<int> to_local(g->order(), -1);
    for (size_t i = 0; i < en.element_map.size(); ++i) to_local[en.element_map[i]] = static_cast<int>(i);
    std::vector<int> h_local;
    for (int x : h.elements) h_local.push_back(to_local[x]);
    PermModule mn{restrict_gset(m.basis, en), m.p};
    BrauerModule local = brauer_module(mn, Subgroup{h_local});

    if (full.fixed.embedding != local.fixed.embedding) return false;
    if (full.fixed.weyl.group->table() != local.fixed.weyl.group->table()) return false;
    return full.module.basis.action() == local.module.basis.action();
}

// A seeded element of the tensor monoid generated by generator complexes,
// duals, and shifts.  With invertible_only the factors are restricted to the
// index-<=2 generators, which are invertible; otherwise any generator may
// appear and the result is merely Lambda-level (single homology degree per
// class, dimension one at the top class).
inline Complex random_lambda_element(const GroupPtr& g, int p, uint64_t seed,
                                     bool invertible_only = false) {
    std::mt19937_64 rng(seed);
    PSubgroupClasses ctx = p_classes(g, p);
    auto pick_block = [&]() {
        std::vector<Complex> blocks;
        blocks.push_back(shift(Complex::unit(g, p), 1));
        for (const SubgroupClass& c : ctx.classes)
            if (!invertible_only || g->order() / c.representative.order() <= 2)
                blocks.push_back(generator_complex(g, p, c.representative));
        return blocks[rng() % blocks.size()];
    };
    Complex x = pick_block();
    int extra = static_cast<int>(rng() % 3);
    for (int i = 0; i < extra; ++i) x = tensor(x, pick_block());
    if (rng() % 2) x = dual(x);
    int s = static_cast<int>(rng() % 5) - 2;
    return shift(x, s);
}

}  // namespace testsupport
