#include "permfp/gset.hpp"

#include <doctest.h>

#include <numeric>

using namespace permfp;

TEST_CASE("coset spaces") {
    GroupPtr d8 = catalog_group("D8");

    GSet pt = orbit_gset(d8, full_subgroup(*d8));
    CHECK(pt.size() == 1);

    GSet regular = orbit_gset(d8, trivial_subgroup());
    CHECK(regular.size() == 8);
    // Left translation on the regular representation: g * x.
    CHECK(regular.act(1, 1) == d8->mul(1, 1));

    // G/<s>: four cosets listed by minimal element: {1,s}, {r,rs}, {r2,r2s},
    // {r3,r3s}.
    auto cosets = orbit_cosets(d8, Subgroup{{0, 4}});
    REQUIRE(cosets.size() == 4);
    CHECK(cosets[0] == std::vector<int>{0, 4});
    CHECK(cosets[1] == std::vector<int>{1, 5});
    CHECK(cosets[3] == std::vector<int>{3, 7});

    GSet x = orbit_gset(d8, Subgroup{{0, 4}});
    // r * <s> is the coset {r, rs}, index 1.
    CHECK(x.act(1, 0) == 1);
    // s * r<s> = {sr, srs} = {r3s, r3}, index 3.
    CHECK(x.act(4, 1) == 3);
}

TEST_CASE("action table validation") {
    GroupPtr c2 = catalog_group("C2");
    // Row for the identity must be the identity permutation.
    CHECK_THROWS_AS(GSet(c2, {{1, 0}, {0, 1}}), std::invalid_argument);
    // Non-permutation row.
    CHECK_THROWS_AS(GSet(c2, {{0, 1}, {0, 0}}), std::invalid_argument);
    // Incompatible with the group law: r acts trivially but r^2 swaps.
    CHECK_THROWS_AS(GSet(catalog_group("C4"), {{0, 1}, {0, 1}, {1, 0}, {0, 1}}),
                    std::invalid_argument);
    CHECK_NOTHROW(GSet(c2, {{0, 1}, {1, 0}}));
}

TEST_CASE("orbits and stabilizers") {
    GroupPtr d8 = catalog_group("D8");
    GSet x = disjoint_union_gset(orbit_gset(d8, Subgroup{{0, 4}}),
                                 orbit_gset(d8, full_subgroup(*d8)));
    CHECK(x.size() == 5);
    auto os = orbits(x);
    REQUIRE(os.size() == 2);
    CHECK(os[0].points == std::vector<int>{0, 1, 2, 3});
    CHECK(os[1].points == std::vector<int>{4});
    CHECK(os[0].stabilizer.elements == std::vector<int>{0, 4});
    CHECK(os[1].stabilizer.order() == 8);

    // Orbit-stabilizer: |orbit| * |stabilizer| = |G|.
    for (const Orbit& o : os)
        CHECK(static_cast<int>(o.points.size()) * o.stabilizer.order() == d8->order());

    // Stabilizer of the coset r<s> is r<s>r^-1 = {1, r^2 s}.
    CHECK(point_stabilizer(x, 1).elements == std::vector<int>{0, 6});
}

TEST_CASE("products follow the pair ordering") {
    GroupPtr c4 = catalog_group("C4");
    GSet a = orbit_gset(c4, Subgroup{{0, 2}});
    GSet b = orbit_gset(c4, trivial_subgroup());
    GSet prod = product_gset(a, b);
    REQUIRE(prod.size() == 8);
    // Index contract: (x, y) at x * |b| + y, diagonal action.
    for (int g = 0; g < 4; ++g)
        for (int x = 0; x < a.size(); ++x)
            for (int y = 0; y < b.size(); ++y)
                CHECK(prod.act(g, x * b.size() + y) ==
                      a.act(g, x) * b.size() + b.act(g, y));
}

TEST_CASE("fixed points with Weyl action") {
    GroupPtr d8 = catalog_group("D8");

    // (G/<s>)^<s>: exactly the cosets <s> and r2<s>.
    GSet x = orbit_gset(d8, Subgroup{{0, 4}});
    FixedPoints f = fixed_points(x, Subgroup{{0, 4}});
    CHECK(f.embedding == std::vector<int>{0, 2});
    CHECK(f.gset.size() == 2);
    CHECK(f.weyl.group->order() == 2);
    // The nontrivial Weyl element swaps the two fixed cosets.
    CHECK(f.gset.act(1, 0) == 1);

    // A free orbit has no fixed points under any nontrivial subgroup.
    GSet reg = orbit_gset(d8, trivial_subgroup());
    CHECK(fixed_points(reg, Subgroup{{0, 2}}).gset.size() == 0);

    // Fixed-point counting identity: |(G/P)^H| * |P| = #{x : x^-1 H x <= P}.
    for (const Subgroup& p_sub : all_subgroups(*d8))
        for (const Subgroup& h : all_subgroups(*d8)) {
            int fixed = fixed_points(orbit_gset(d8, p_sub), h).gset.size();
            int transporter = 0;
            for (int g = 0; g < d8->order(); ++g)
                if (p_sub.contains_subgroup(conjugate_subgroup(*d8, h, d8->inv(g))))
                    ++transporter;
            CHECK(fixed * p_sub.order() == transporter);
        }
}

TEST_CASE("restriction to a subgroup") {
    GroupPtr d8 = catalog_group("D8");
    EmbeddedGroup v4 = subgroup_group(d8, Subgroup{{0, 2, 4, 6}});
    GSet x = orbit_gset(d8, Subgroup{{0, 4}});
    GSet r = restrict_gset(x, v4);
    CHECK(r.size() == x.size());
    CHECK(r.group()->order() == 4);
    for (size_t i = 0; i < v4.element_map.size(); ++i)
        for (int pt = 0; pt < x.size(); ++pt)
            CHECK(r.act(static_cast<int>(i), pt) == x.act(v4.element_map[i], pt));
    // G/<s> restricted to V4 = <s, r2> splits into two orbits of size 2.
    CHECK(orbits(r).size() == 2);
}

TEST_CASE("double cosets") {
    GroupPtr d8 = catalog_group("D8");
    Subgroup s{{0, 4}};

    // <s>\D8/<s> has classes {1,s}·{s}, the central coset, and one fat class.
    auto dc = double_cosets(d8, s, s);
    REQUIRE(dc.size() == 3);
    size_t total = 0;
    for (const auto& c : dc) total += c.size();
    CHECK(total == 8);
    CHECK(dc[0] == std::vector<int>{0, 4});
    CHECK(dc[1] == std::vector<int>{1, 3, 5, 7});
    CHECK(dc[2] == std::vector<int>{2, 6});

    // K\G/H count equals the orbit count of K x H acting on G, and the
    // classes partition G.
    for (const Subgroup& k : all_subgroups(*d8))
        for (const Subgroup& h : all_subgroups(*d8)) {
            auto classes = double_cosets(d8, k, h);
            size_t n = 0;
            for (const auto& c : classes) n += c.size();
            CHECK(n == 8);
            // Each class is closed under the two-sided action.
            for (const auto& c : classes)
                for (int g : c)
                    for (int a : k.elements)
                        for (int b : h.elements) {
                            int moved = d8->mul(d8->mul(a, g), d8->inv(b));
                            CHECK(std::find(c.begin(), c.end(), moved) != c.end());
                        }
        }

    // Trivial-by-trivial recovers the elements.
    CHECK(double_cosets(d8, trivial_subgroup(), trivial_subgroup()).size() == 8);
    CHECK(double_cosets(d8, full_subgroup(*d8), full_subgroup(*d8)).size() == 1);
}
