#include "permfp/span.hpp"

#include <doctest.h>

using namespace permfp;

namespace {

// Is m a scalar multiple of the identity with the given value?
bool is_scaled_identity(const FpMatrix& m, int scale) {
    if (m.rows() != m.cols()) return false;
    int want = FpMatrix::mod(scale, m.p());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != (r == c ? want : 0)) return false;
    return true;
}

}  // namespace

TEST_CASE("span legs must be equivariant") {
    GroupPtr c2 = catalog_group("C2");
    GSet pt = orbit_gset(c2, full_subgroup(*c2));
    GSet reg = orbit_gset(c2, trivial_subgroup());
    // Collapsing the regular orbit onto the point is fine ...
    CHECK_NOTHROW(Span(pt, reg, pt, {0, 0}, {0, 0}));
    // ... but a leg that breaks equivariance is rejected: reg -> reg fixing
    // point 0 is not a map of C2-sets.
    CHECK_THROWS_AS(Span(reg, reg, reg, {0, 1}, {0, 0}), std::invalid_argument);
}

TEST_CASE("projection spans linearise to scaled identities") {
    // The composite G/H <- G/K -> G/H acts on k(G/H) as [H:K] times the
    // identity, hence vanishes mod p exactly when p divides the index.
    for (auto [name, p] : std::vector<std::pair<const char*, int>>{
             {"C4", 2}, {"D8", 2}, {"Q8", 2}, {"C9", 3}, {"C3xC3", 3}, {"C6", 2}, {"C6", 3}}) {
        GroupPtr g = catalog_group(name);
        for (const Subgroup& h : all_subgroups(*g)) {
            EmbeddedGroup hg = subgroup_group(g, h);
            for (const Subgroup& k_sub : all_subgroups(*hg.group)) {
                Subgroup k;
                for (int x : k_sub.elements) k.elements.push_back(hg.element_map[x]);
                std::sort(k.elements.begin(), k.elements.end());
                int index = h.order() / k.order();
                FpMatrix m = linearise(projection_span(g, h, k), p);
                CAPTURE(name);
                CAPTURE(p);
                CAPTURE(h.elements);
                CAPTURE(k.elements);
                CHECK(is_scaled_identity(m, index));
                CHECK(m.is_zero() == (index % p == 0));
            }
        }
    }
}

TEST_CASE("specific projection values") {
    GroupPtr c6 = catalog_group("C6");
    // [C6 : C3] = 2: invisible mod 2, twice the identity mod 3... which is
    // again invertible.
    FpMatrix mod2 = linearise(projection_span(c6, full_subgroup(*c6), Subgroup{{0, 2, 4}}), 2);
    CHECK(mod2.is_zero());
    FpMatrix mod3 = linearise(projection_span(c6, full_subgroup(*c6), Subgroup{{0, 2, 4}}), 3);
    CHECK(is_scaled_identity(mod3, 2));
    // K = H gives the identity itself.
    GroupPtr d8 = catalog_group("D8");
    FpMatrix id = linearise(projection_span(d8, Subgroup{{0, 2, 4, 6}}, Subgroup{{0, 2, 4, 6}}), 2);
    CHECK(is_scaled_identity(id, 1));
    CHECK(id.rows() == 2);
}

TEST_CASE("canonical atoms are conjugation invariant") {
    GroupPtr d8 = catalog_group("D8");
    GSet x = orbit_gset(d8, Subgroup{{0, 4}});
    // The identity span on G/<s> canonicalizes to a single atom whose legs
    // both hit the base point.
    BurnsideElement e = identity_element(x);
    REQUIRE(e.coeffs.size() == 1);
    const auto& [atom, coeff] = *e.coeffs.begin();
    CHECK(coeff == 1);
    CHECK(atom.stabilizer == std::vector<int>{0, 4});
    CHECK(atom.left_image == 0);
    CHECK(atom.right_image == 0);
}

TEST_CASE("composition with the identity is neutral") {
    GroupPtr d8 = catalog_group("D8");
    GSet left = orbit_gset(d8, Subgroup{{0, 4}});
    GSet right = orbit_gset(d8, Subgroup{{0, 2}});
    // Take a nontrivial span: right <- G/1 -> left with free apex.
    GSet apex = orbit_gset(d8, trivial_subgroup());
    std::vector<int> to_left(8), to_right(8);
    for (int g = 0; g < 8; ++g) {
        to_left[g] = left.act(g, 0);
        to_right[g] = right.act(g, 0);
    }
    Span s(left, apex, right, to_left, to_right);
    BurnsideElement canonical = canonicalize(s);

    BurnsideElement left_id = compose(identity_element(right), canonical);
    BurnsideElement right_id = compose(canonical, identity_element(left));
    CHECK(left_id.coeffs == canonical.coeffs);
    CHECK(right_id.coeffs == canonical.coeffs);
}

TEST_CASE("composition matches matrix composition after linearising") {
    // Linearisation is functorial: the matrix of a composite span equals the
    // product of the matrices.
    GroupPtr q8 = catalog_group("Q8");
    int p = 2;
    Subgroup z{{0, 1}};
    Span a = projection_span(q8, Subgroup{{0, 1, 2, 3}}, z);
    Span b = projection_span(q8, Subgroup{{0, 1, 2, 3}}, Subgroup{{0, 1, 2, 3}});
    BurnsideElement ab = compose(a, b);
    FpMatrix expect = linearise(a, p) * linearise(b, p);
    CHECK(linearise(ab, p) == expect);

    // And across different boundary sets, via formal sums.
    BurnsideElement id2 = add(identity_element(a.left), identity_element(a.left));
    CHECK(linearise(id2, 3) == FpMatrix::identity(2, 3).scaled(2));
    CHECK(linearise(scale(3, identity_element(a.left)), 3).is_zero());
}
