#pragma once

#include "permfp/complex.hpp"

namespace permfp {

// Modular fixed points of permutation modules: k[X] goes to k[X^H] over the
// Weyl group N_G(H)/H, and an equivariant map goes to the submatrix indexed
// by fixed basis points.  This is exact on permutation bases, so it extends
// degreewise to complexes.

struct BrauerModule {
    FixedPoints fixed;  // weyl group, fixed G-set, embedding into X
    PermModule module;  // over the Weyl group
};

BrauerModule brauer_module(const PermModule& m, const Subgroup& h);

// The induced map between Brauer quotients: entry [y][x] = f[emb(y)][emb(x)].
EquivMap brauer_map(const EquivMap& f, const Subgroup& h);

struct BrauerComplexResult {
    Complex complex;                       // over the Weyl group
    std::vector<int> degrees;              // degrees with recorded embeddings
    std::vector<std::vector<int>> embeddings;  // per degree, into the original basis
};

BrauerComplexResult brauer_complex(const Complex& x, const Subgroup& h);

// Independent reference construction: compute the classical Brauer quotient
//   M(H) = M^H / sum over maximal K < H of tr_K^H(M^K)
// by explicit fixed subspaces and relative traces, identify the residues of
// the fixed basis points as a basis, and transport f through.  Agrees with
// brauer_map entrywise; exists to cross-check it.
EquivMap brauer_map_oracle(const EquivMap& f, const Subgroup& h);

}  // namespace permfp
