#pragma once

#include "permfp/fpmatrix.hpp"
#include "permfp/gset.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace permfp {

// A span of G-sets  left <-a- apex -b-> right  with equivariant legs.
struct Span {
    GSet left;
    GSet apex;
    GSet right;
    std::vector<int> a;  // apex point -> left point
    std::vector<int> b;  // apex point -> right point

    Span(GSet left_, GSet apex_, GSet right_, std::vector<int> a_, std::vector<int> b_);
};

// One transitive summand of a span in canonical coordinates: the orbit is
// G/stabilizer and the legs send the base coset to the recorded points.  The
// triple is minimized lexicographically over simultaneous conjugation, so
// isomorphic summands produce identical atoms.
struct SpanAtom {
    std::vector<int> stabilizer;
    int left_image;
    int right_image;

    auto operator<=>(const SpanAtom& rhs) const = default;
};

// A formal integer combination of atoms between two fixed boundary G-sets.
struct BurnsideElement {
    GSet left;
    GSet right;
    std::map<SpanAtom, long long> coeffs;
};

// Decompose the apex into orbits and canonicalize each as an atom.
BurnsideElement canonicalize(const Span& s);

// Identity span on x, canonicalized.
BurnsideElement identity_element(const GSet& x);

// The span G/H <- G/K -> G/H induced by projection along K <= H, the shape of
// the relation generating the cohomological ideal.
Span projection_span(const GroupPtr& g, const Subgroup& h, const Subgroup& k);

BurnsideElement add(const BurnsideElement& x, const BurnsideElement& y);
BurnsideElement scale(long long c, const BurnsideElement& x);

// s о t for t: X -> Y and s: Y -> Z, via the fibre product over Y; apex
// points are pairs (t-apex, s-apex) in lexicographic order.
BurnsideElement compose(const Span& s, const Span& t);
BurnsideElement compose(const BurnsideElement& s, const BurnsideElement& t);

// Linearisation to GF(p): matrix with entry [y][x] = #preimages in the apex,
// reduced mod p.  Columns index the left set, rows the right set.
FpMatrix linearise(const Span& s, int p);
FpMatrix linearise(const BurnsideElement& e, int p);

// Rebuild the span of a single atom (orbit of the stabilizer's cosets).
Span atom_span(const GroupPtr& g, const SpanAtom& atom, const GSet& left, const GSet& right);

}  // namespace permfp
