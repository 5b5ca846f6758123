#include "permfp/group.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace permfp;

TEST_CASE("multiplication table validation") {
    // Identity must sit at index 0.
    CHECK_THROWS_AS(FiniteGroup("bad", {{1, 0}, {0, 1}}), std::invalid_argument);
    // Non-associative Latin square: a quasigroup that is not a group.
    CHECK_THROWS_AS(FiniteGroup("bad", {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}}),
                    std::invalid_argument);
    // Repeated entry in a row.
    CHECK_THROWS_AS(FiniteGroup("bad", {{0, 0}, {1, 1}}), std::invalid_argument);
    CHECK_NOTHROW(FiniteGroup("C2", {{0, 1}, {1, 0}}));
}

TEST_CASE("cyclic group basics") {
    GroupPtr c6 = catalog_group("C6");
    CHECK(c6->order() == 6);
    CHECK(c6->is_abelian());
    CHECK(c6->mul(4, 3) == 1);
    CHECK(c6->inv(1) == 5);
    CHECK(c6->element_order(1) == 6);
    CHECK(c6->element_order(2) == 3);
    CHECK(c6->element_order(3) == 2);

    // C6 has exactly one subgroup per divisor of 6.
    auto subs = all_subgroups(*c6);
    REQUIRE(subs.size() == 4);
    CHECK(subs[0].order() == 1);
    CHECK(subs[1].order() == 2);
    CHECK(subs[2].order() == 3);
    CHECK(subs[3].order() == 6);
    CHECK(subs[1].elements == std::vector<int>{0, 3});
    CHECK(subs[2].elements == std::vector<int>{0, 2, 4});
}

TEST_CASE("subgroup enumeration counts") {
    // Counts are classical: C4 has 3 subgroups, V4 has 5, D8 has 10,
    // Q8 has 6, C9 has 3, C3xC3 has 6.
    CHECK(all_subgroups(*catalog_group("C4")).size() == 3);
    CHECK(all_subgroups(*catalog_group("V4")).size() == 5);
    CHECK(all_subgroups(*catalog_group("D8")).size() == 10);
    CHECK(all_subgroups(*catalog_group("Q8")).size() == 6);
    CHECK(all_subgroups(*catalog_group("C9")).size() == 3);
    CHECK(all_subgroups(*catalog_group("C3xC3")).size() == 6);
}

TEST_CASE("subgroups satisfy Lagrange and closure") {
    for (const char* name : {"C4", "D8", "Q8", "C3xC3", "C6"}) {
        GroupPtr g = catalog_group(name);
        for (const Subgroup& h : all_subgroups(*g)) {
            CAPTURE(name);
            CHECK(g->order() % h.order() == 0);
            CHECK(h.contains(0));
            for (int a : h.elements)
                for (int b : h.elements) CHECK(h.contains(g->mul(a, b)));
            CHECK(generated_subgroup(*g, h.elements).elements == h.elements);
        }
    }
}

TEST_CASE("D8 lattice detail") {
    // Elements are r^i s^j with index i + 4j.
    GroupPtr d8 = catalog_group("D8");
    CHECK_FALSE(d8->is_abelian());
    CHECK(d8->element_order(1) == 4);
    CHECK(d8->element_order(4) == 2);

    auto subs = all_subgroups(*d8);
    REQUIRE(subs.size() == 10);
    // The center {1, r^2}.
    CHECK(centralizer(*d8, full_subgroup(*d8)).elements == std::vector<int>{0, 2});

    auto classes = subgroup_classes(*d8);
    REQUIRE(classes.size() == 8);
    // The two reflection classes have two members each, everything else is
    // normal (class size 1).
    std::vector<size_t> sizes;
    for (const auto& c : classes) sizes.push_back(c.members.size());
    CHECK(sizes == std::vector<size_t>{1, 1, 2, 2, 1, 1, 1, 1});
    CHECK(classes[2].representative.elements == std::vector<int>{0, 4});
    CHECK(classes[3].representative.elements == std::vector<int>{0, 5});

    // s and r^2 s are conjugate; s and rs are not.
    CHECK(conjugate_subgroup(*d8, Subgroup{{0, 4}}, 1).elements == std::vector<int>{0, 6});
    CHECK(subconjugate(*d8, Subgroup{{0, 4}}, Subgroup{{0, 2, 4, 6}}));
    CHECK_FALSE(subconjugate(*d8, Subgroup{{0, 4}}, Subgroup{{0, 2, 5, 7}}));

    // N_G({1, s}) is the Klein four group {1, r^2, s, r^2 s}.
    CHECK(normalizer(*d8, Subgroup{{0, 4}}).elements == std::vector<int>{0, 2, 4, 6});
    CHECK_FALSE(is_normal(*d8, Subgroup{{0, 4}}));
    CHECK(is_normal(*d8, Subgroup{{0, 1, 2, 3}}));
}

TEST_CASE("Q8 lattice detail") {
    // Elements 1, -1, i, -i, j, -j, k, -k in that order; every subgroup is
    // normal.
    GroupPtr q8 = catalog_group("Q8");
    auto subs = all_subgroups(*q8);
    REQUIRE(subs.size() == 6);
    for (const Subgroup& h : subs) CHECK(is_normal(*q8, h));
    CHECK(subs[1].elements == std::vector<int>{0, 1});  // the center
    CHECK(subs[2].elements == std::vector<int>{0, 1, 2, 3});
    CHECK(subs[3].elements == std::vector<int>{0, 1, 4, 5});
    CHECK(subs[4].elements == std::vector<int>{0, 1, 6, 7});
    // i^2 = -1, and the unique element of order 2 is -1.
    CHECK(q8->mul(2, 2) == 1);
    int order2 = 0;
    for (int x = 1; x < 8; ++x) order2 += q8->element_order(x) == 2;
    CHECK(order2 == 1);
}

TEST_CASE("class ordering is the coordinate contract") {
    // Classes sorted by (order, representative elements); representative is
    // the minimal member.  Index lookup round-trips through conjugation.
    for (auto name : {"D8", "Q8", "C3xC3", "C12"}) {
        GroupPtr g = catalog_group(name);
        auto classes = subgroup_classes(*g);
        for (size_t i = 0; i + 1 < classes.size(); ++i) {
            auto key = [](const SubgroupClass& c) {
                return std::pair(c.representative.order(), c.representative.elements);
            };
            CHECK(key(classes[i]) < key(classes[i + 1]));
        }
        for (const auto& c : classes) {
            for (const Subgroup& m : c.members) {
                CHECK(c.representative.elements <= m.elements);
                CHECK(class_index_of(classes, m) ==
                      class_index_of(classes, c.representative));
            }
        }
    }
}

TEST_CASE("p-subgroup classes filter by order") {
    GroupPtr c12 = catalog_group("C12");
    auto p2 = p_subgroup_classes(*c12, 2);
    auto p3 = p_subgroup_classes(*c12, 3);
    REQUIRE(p2.size() == 3);  // 1, C2, C4
    REQUIRE(p3.size() == 2);  // 1, C3
    CHECK(p2[2].representative.order() == 4);
    CHECK(p3[1].representative.order() == 3);
    CHECK(is_p_group_order(8, 2));
    CHECK(is_p_group_order(1, 5));
    CHECK_FALSE(is_p_group_order(12, 2));
}

TEST_CASE("quotients and embedded subgroups") {
    GroupPtr d8 = catalog_group("D8");

    // D8 / center is the Klein four group.
    QuotientGroup q = quotient_group(d8, Subgroup{{0, 2}});
    CHECK(q.group->order() == 4);
    CHECK(q.group->is_abelian());
    for (int x = 1; x < 4; ++x) CHECK(q.group->element_order(x) == 2);
    CHECK(q.projection[0] == 0);
    CHECK(q.projection[2] == 0);
    // Cosets are listed by minimal element and projection is consistent.
    for (size_t c = 0; c < q.cosets.size(); ++c)
        for (int x : q.cosets[c]) CHECK(q.projection[x] == static_cast<int>(c));

    // A V4 subgroup viewed standalone.
    EmbeddedGroup e = subgroup_group(d8, Subgroup{{0, 2, 4, 6}});
    CHECK(e.group->order() == 4);
    CHECK(e.group->is_abelian());
    CHECK(e.element_map == std::vector<int>{0, 2, 4, 6});

    CHECK_THROWS_AS(quotient_group(d8, Subgroup{{0, 4}}), std::invalid_argument);
}

TEST_CASE("weyl groups") {
    GroupPtr d8 = catalog_group("D8");
    // W({1,s}) = V4 / {1,s}, of order 2.
    WeylGroup w = weyl_group(d8, Subgroup{{0, 4}});
    CHECK(w.group->order() == 2);
    CHECK(w.normalizer_subgroup.elements == std::vector<int>{0, 2, 4, 6});
    CHECK(w.projection[1] == -1);  // r is outside the normalizer
    CHECK(w.projection[0] == 0);

    // A normal subgroup's Weyl group is the full quotient.
    WeylGroup wz = weyl_group(d8, Subgroup{{0, 2}});
    CHECK(wz.group->order() == 4);

    GroupPtr q8 = catalog_group("Q8");
    CHECK(weyl_group(q8, Subgroup{{0, 1, 2, 3}}).group->order() == 2);
}

TEST_CASE("section types") {
    GroupPtr d8 = catalog_group("D8");
    GroupPtr q8 = catalog_group("Q8");
    GroupPtr c9 = catalog_group("C9");
    Subgroup one = trivial_subgroup();

    CHECK(section_type(d8, one, Subgroup{{0, 2, 4, 6}}, 2) == SectionType::ElemAbelianRank2);
    CHECK(section_type(d8, Subgroup{{0, 2}}, full_subgroup(*d8), 2) ==
          SectionType::ElemAbelianRank2);
    CHECK(section_type(d8, one, Subgroup{{0, 1, 2, 3}}, 2) == SectionType::Cyclic4);
    CHECK(section_type(d8, one, full_subgroup(*d8), 2) == SectionType::Other);
    CHECK(section_type(q8, one, full_subgroup(*q8), 2) == SectionType::Quaternion8);
    CHECK(section_type(q8, Subgroup{{0, 1}}, full_subgroup(*q8), 2) ==
          SectionType::ElemAbelianRank2);
    CHECK(section_type(c9, one, Subgroup{{0, 3, 6}}, 3) == SectionType::CyclicOddP);
    CHECK(section_type(c9, Subgroup{{0, 3, 6}}, full_subgroup(*c9), 3) ==
          SectionType::CyclicOddP);
    CHECK(section_type(c9, one, full_subgroup(*c9), 3) == SectionType::Other);
}

TEST_CASE("index divisibility") {
    // Every p-subgroup of a p-group passes; the check also holds for
    // p-subgroups of the mixed-order cyclic groups.
    for (auto [name, p] : std::vector<std::pair<const char*, int>>{
             {"D8", 2}, {"Q8", 2}, {"C3xC3", 3}, {"C6", 2}, {"C6", 3}, {"C12", 2}}) {
        GroupPtr g = catalog_group(name);
        for (const Subgroup& h : all_subgroups(*g)) {
            if (!is_p_group_order(h.order(), p)) continue;
            CAPTURE(name);
            CAPTURE(p);
            CAPTURE(h.elements);
            CHECK(index_divisibility_check(g, h, p));
        }
    }
    // A non-p-power subgroup is rejected outright.
    CHECK_THROWS_AS(index_divisibility_check(catalog_group("C6"), Subgroup{{0, 2, 4}}, 2),
                    std::invalid_argument);
}

TEST_CASE("catalog names and products") {
    CHECK(catalog_group("C2xC2")->order() == 4);
    CHECK(catalog_group("C2xC2")->is_abelian());
    // V4 and C2xC2 are the same table up to construction.
    CHECK(catalog_group("V4")->table() == catalog_group("C2xC2")->table());
    CHECK(catalog_group("C2xD8")->order() == 16);
    CHECK(catalog_group("C3xC3")->element_order(1) == 3);
    CHECK_THROWS_AS(catalog_group("E8"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_group("C999"), std::invalid_argument);

    // Product indexing: (a, b) at a * |B| + b.
    GroupPtr prod = direct_product(catalog_group("C2"), catalog_group("C3"));
    CHECK(prod->order() == 6);
    CHECK(prod->mul(1 * 3 + 1, 0 * 3 + 2) == 1 * 3 + 0);

    // Generators actually generate.
    for (auto name : {"C4", "D8", "Q8", "C3xC3"}) {
        GroupPtr g = catalog_group(name);
        CHECK(generated_subgroup(*g, g->generators()).order() == g->order());
    }
}
