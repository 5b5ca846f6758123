#include "permfp/picard.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace permfp;
using namespace testsupport;

namespace {

std::vector<long long> lam(const Complex& x) {
    auto l = lambda_of(x);
    REQUIRE(l.has_value());
    return l->values;
}

}  // namespace

TEST_CASE("marks of the unit and its shifts") {
    GroupPtr q8 = catalog_group("Q8");
    Complex u = Complex::unit(q8, 2);
    MarksReport r = marks(u);
    REQUIRE(r.entries.size() == 6);
    for (const MarkEntry& e : r.entries)
        CHECK(e.support == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(r.in_lambda);
    CHECK(r.invertible);
    REQUIRE(r.lambda.has_value());
    CHECK(r.lambda->values == std::vector<long long>(6, 0));
    CHECK(r.witness_class == -1);

    for (int s : {1, -2, 5}) {
        Complex sh = shift(u, s);
        CHECK(invertible(sh));
        CHECK(lam(sh) == std::vector<long long>(6, s));
        CHECK(theta(sh).values == std::vector<long long>(6, s));
    }
}

TEST_CASE("the two-term sign sphere") {
    GroupPtr c2 = catalog_group("C2");
    auto cat = sphere_catalog(c2, 2);
    REQUIRE(cat.size() == 1);
    CHECK(cat[0].label == "sign");
    MarksReport r = marks(cat[0].complex);
    CHECK(r.invertible);
    CHECK(r.lambda->values == std::vector<long long>{1, 0});

    // Support detail: degree 1 downstairs, degree 0 at the full group.
    CHECK(r.entries[0].support == std::vector<std::pair<int, int>>{{1, 1}});
    CHECK(r.entries[1].support == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("catalog spheres of order four") {
    GroupPtr c4 = catalog_group("C4");
    auto cat = sphere_catalog(c4, 2);
    REQUIRE(cat.size() == 2);
    CHECK(cat[0].label == "inflated-sign");
    CHECK(cat[1].label == "rotation");
    CHECK(lam(cat[0].complex) == std::vector<long long>{1, 1, 0});
    CHECK(lam(cat[1].complex) == std::vector<long long>{2, 0, 0});
    for (const CatalogSphere& s : cat) CHECK(invertible(s.complex));

    GroupPtr v4 = catalog_group("V4");
    auto vcat = sphere_catalog(v4, 2);
    REQUIRE(vcat.size() == 3);
    CHECK(vcat[0].label == "sign-0");
    // Kernel order: {0,1}, {0,2}, {0,3} against classes 1,{0,1},{0,2},{0,3},V4.
    CHECK(lam(vcat[0].complex) == std::vector<long long>{1, 1, 0, 0, 0});
    CHECK(lam(vcat[1].complex) == std::vector<long long>{1, 0, 1, 0, 0});
    CHECK(lam(vcat[2].complex) == std::vector<long long>{1, 0, 0, 1, 0});

    CHECK_THROWS_AS(sphere_catalog(catalog_group("D8"), 2), std::invalid_argument);
    CHECK_THROWS_AS(sphere_catalog(catalog_group("C3"), 3), std::invalid_argument);
}

TEST_CASE("generator complexes hit the omega basis") {
    for (const char* name : {"C4", "D8", "C3"}) {
        GroupPtr g = catalog_group(name);
        int p = name[0] == 'C' && name[1] == '3' ? 3 : 2;
        PSubgroupClasses ctx = p_classes(g, p);
        for (const SubgroupClass& c : ctx.classes) {
            Complex gen = generator_complex(g, p, c.representative);
            CAPTURE(name);
            CAPTURE(c.representative.elements);
            CHECK(in_lambda(gen));
            CHECK(lam(gen) == omega(ctx, c.representative).values);
        }
    }
}

TEST_CASE("membership in the monoid without invertibility") {
    GroupPtr c4 = catalog_group("C4");
    Complex gen = generator_complex(c4, 2, trivial_subgroup());
    MarksReport r = marks(gen);
    CHECK(r.in_lambda);
    CHECK_FALSE(r.invertible);
    CHECK(r.witness_class == 0);
    CHECK_FALSE(r.reason.empty());
    // Three-dimensional homology at the bottom class: the kernel of the
    // augmentation of the free module.
    CHECK(r.entries[0].support == std::vector<std::pair<int, int>>{{1, 3}});
    CHECK_THROWS_AS(theta(gen), std::invalid_argument);
}

TEST_CASE("complexes outside the monoid get a witness") {
    GroupPtr c2 = catalog_group("C2");
    Complex u = Complex::unit(c2, 2);
    Complex two_degrees = direct_sum(u, shift(u, 2));
    MarksReport r = marks(two_degrees);
    CHECK_FALSE(r.in_lambda);
    CHECK_FALSE(r.invertible);
    CHECK(r.witness_class == 0);
    CHECK_FALSE(r.reason.empty());
    CHECK_FALSE(lambda_of(two_degrees).has_value());
    CHECK_THROWS_AS(theta(two_degrees), std::invalid_argument);
}

TEST_CASE("self-inverses have vanishing invariants") {
    GroupPtr c4 = catalog_group("C4");
    for (const CatalogSphere& s : sphere_catalog(c4, 2)) {
        Complex t = tensor(s.complex, dual(s.complex));
        CHECK(invertible(t));
        CHECK(lam(t) == std::vector<long long>{0, 0, 0});
        // Degree-zero homology carries the trivial one-dimensional action.
        HomologyModule h0 = homology_module(t, 0);
        CHECK(h0.dim == 1);
        for (const FpMatrix& m : h0.generator_action)
            CHECK(m == FpMatrix::identity(1, 2));
    }
}

TEST_CASE("tensor adds invariants, duality negates them") {
    GroupPtr c4 = catalog_group("C4");
    auto cat = sphere_catalog(c4, 2);
    const Complex& a = cat[0].complex;
    const Complex& b = cat[1].complex;
    CHECK(lam(tensor(a, b)) == std::vector<long long>{3, 1, 0});
    CHECK(lam(dual(a)) == std::vector<long long>{-1, -1, 0});

    // Additivity holds across the monoid, not only the invertibles: the
    // generators multiply to omega sums.
    GroupPtr d8 = catalog_group("D8");
    PSubgroupClasses ctx = p_classes(d8, 2);
    Complex g1 = generator_complex(d8, 2, Subgroup{{0, 4}});
    Complex g2 = generator_complex(d8, 2, Subgroup{{0, 2}});
    ClassFunction expect =
        cf_add(omega(ctx, Subgroup{{0, 4}}), omega(ctx, Subgroup{{0, 2}}));
    CHECK(lam(tensor(g1, g2)) == expect.values);

    // Seeded products of invertible elements.
    for (uint64_t seed : {7u, 8u, 9u}) {
        Complex x = random_lambda_element(d8, 2, seed, true);
        Complex y = random_lambda_element(d8, 2, seed + 100, true);
        REQUIRE(invertible(x));
        REQUIRE(invertible(y));
        ClassFunction lx{d8, 2, lam(x)}, ly{d8, 2, lam(y)};
        CHECK(lam(tensor(x, y)) == cf_add(lx, ly).values);
        CHECK(lam(dual(x)) == cf_scale(-1, lx).values);
        CHECK(theta(x).values == lx.values);
    }
}

TEST_CASE("marks ignore contractible summands") {
    GroupPtr d8 = catalog_group("D8");
    Complex x = generator_complex(d8, 2, Subgroup{{0, 2}});
    MarksReport before = marks(x);
    for (uint64_t seed : {11u, 12u}) {
        MarksReport after = marks(perturb_homotopy(x, seed));
        REQUIRE(after.entries.size() == before.entries.size());
        for (size_t i = 0; i < after.entries.size(); ++i)
            CHECK(after.entries[i].support == before.entries[i].support);
        CHECK(after.invertible == before.invertible);
    }
}
