#pragma once

#include "permfp/fpmatrix.hpp"
#include "permfp/gset.hpp"
#include "permfp/span.hpp"

#include <vector>

namespace permfp {

// The permutation module k[X] over GF(p): basis = points of X, the action
// permutes basis vectors.
struct PermModule {
    GSet basis;
    int p;

    int dim() const { return basis.size(); }
    const GroupPtr& group() const { return basis.group(); }

    // Permutation matrix of the action of g.
    FpMatrix action_matrix(int g) const;

    bool operator==(const PermModule& rhs) const { return p == rhs.p && basis == rhs.basis; }
};

PermModule orbit_module(const GroupPtr& g, const Subgroup& h, int p);
PermModule trivial_module(const GroupPtr& g, int p);  // k[G/G], one basis point
PermModule zero_module(const GroupPtr& g, int p);
PermModule direct_sum(const PermModule& x, const PermModule& y);

// An equivariant linear map between permutation modules, stored as a matrix
// in the point bases (columns = source, rows = target).  Construction checks
// equivariance against the group generators.
struct EquivMap {
    PermModule source;
    PermModule target;
    FpMatrix matrix;

    EquivMap(PermModule source_, PermModule target_, FpMatrix matrix_);

    static EquivMap zero(const PermModule& source, const PermModule& target);
    static EquivMap identity(const PermModule& x);
};

EquivMap compose(const EquivMap& f, const EquivMap& g);  // f after g

// Basis of Hom_G(k[X], k[Y]): one 0/1 matrix per G-orbit of Y x X.  The basis
// is ordered by the minimal pair of each orbit, matching the orbit order of
// product_gset(Y, X).
std::vector<EquivMap> hom_basis(const PermModule& x, const PermModule& y);

EquivMap from_hom_coords(const PermModule& x, const PermModule& y,
                         const std::vector<EquivMap>& basis, const std::vector<int>& coords);

// Coordinates of f in the hom_basis (every equivariant map is constant on
// orbit positions, so extraction is direct lookup).
std::vector<int> hom_coords(const EquivMap& f, const std::vector<EquivMap>& basis);

PermModule tensor(const PermModule& x, const PermModule& y);
EquivMap tensor_map(const EquivMap& f, const EquivMap& g);

// The dual in the basis dual to the point basis: same module, transposed maps.
PermModule dual(const PermModule& x);
EquivMap dual_map(const EquivMap& f);

// Evaluation dual(X) (x) X -> k[G/G], sending e_x* (x) e_x to 1.
EquivMap evaluation(const PermModule& x);

// Linearisation of a Burnside element as an equivariant map.
EquivMap linearise_map(const BurnsideElement& e, int p);

}  // namespace permfp
