#include "permfp/perm_module.hpp"

#include <stdexcept>

namespace permfp {

FpMatrix PermModule::action_matrix(int g) const {
    FpMatrix m(dim(), dim(), p);
    for (int x = 0; x < dim(); ++x) m.at(basis.act(g, x), x) = 1;
    return m;
}

PermModule orbit_module(const GroupPtr& g, const Subgroup& h, int p) {
    return PermModule{orbit_gset(g, h), p};
}

PermModule trivial_module(const GroupPtr& g, int p) {
    return PermModule{orbit_gset(g, full_subgroup(*g)), p};
}

PermModule zero_module(const GroupPtr& g, int p) { return PermModule{GSet::empty(g), p}; }

PermModule direct_sum(const PermModule& x, const PermModule& y) {
    if (x.p != y.p) throw std::invalid_argument("direct_sum: field mismatch");
    return PermModule{disjoint_union_gset(x.basis, y.basis), x.p};
}

EquivMap::EquivMap(PermModule source_, PermModule target_, FpMatrix matrix_)
    : source(std::move(source_)), target(std::move(target_)), matrix(std::move(matrix_)) {
    if (source.p != target.p || matrix.p() != source.p)
        throw std::invalid_argument("EquivMap: field mismatch");
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
        throw std::invalid_argument("EquivMap: shape mismatch");
    // rho_Y(g) M = M rho_X(g) on generators; in permutation bases this is an
    // index shuffle, checked entrywise without building the matrices
    const GroupPtr& g = source.group();
    for (int e : g->generators())
        for (int x = 0; x < source.dim(); ++x)
            for (int y = 0; y < target.dim(); ++y)
                if (matrix.at(target.basis.act(e, y), source.basis.act(e, x)) != matrix.at(y, x))
                    throw std::invalid_argument("EquivMap: matrix is not equivariant");
}

EquivMap EquivMap::zero(const PermModule& source, const PermModule& target) {
    return EquivMap(source, target, FpMatrix(target.dim(), source.dim(), source.p));
}

EquivMap EquivMap::identity(const PermModule& x) {
    return EquivMap(x, x, FpMatrix::identity(x.dim(), x.p));
}

EquivMap compose(const EquivMap& f, const EquivMap& g) {
    if (f.source.basis.action() != g.target.basis.action())
        throw std::invalid_argument("compose: boundary mismatch");
    return EquivMap(g.source, f.target, f.matrix * g.matrix);
}

std::vector<EquivMap> hom_basis(const PermModule& x, const PermModule& y) {
    if (x.p != y.p) throw std::invalid_argument("hom_basis: field mismatch");
    GSet pairs = product_gset(y.basis, x.basis);
    std::vector<EquivMap> out;
    for (const Orbit& o : orbits(pairs)) {
        FpMatrix m(y.dim(), x.dim(), x.p);
        for (int pt : o.points) m.at(pt / x.dim(), pt % x.dim()) = 1;
        out.emplace_back(x, y, std::move(m));
    }
    return out;
}

EquivMap from_hom_coords(const PermModule& x, const PermModule& y,
                         const std::vector<EquivMap>& basis, const std::vector<int>& coords) {
    if (coords.size() != basis.size())
        throw std::invalid_argument("from_hom_coords: coordinate count mismatch");
    FpMatrix m(y.dim(), x.dim(), x.p);
    for (size_t i = 0; i < basis.size(); ++i)
        if (coords[i] != 0) m = m + basis[i].matrix.scaled(coords[i]);
    return EquivMap(x, y, std::move(m));
}

std::vector<int> hom_coords(const EquivMap& f, const std::vector<EquivMap>& basis) {
    std::vector<int> out;
    out.reserve(basis.size());
    for (const EquivMap& b : basis) {
        // each basis element is 0/1 with disjoint support; read any support cell
        int coord = 0;
        for (int r = 0; r < b.matrix.rows() && !coord; ++r)
            for (int c = 0; c < b.matrix.cols(); ++c)
                if (b.matrix.at(r, c) != 0) {
                    coord = f.matrix.at(r, c);
                    break;
                }
        out.push_back(coord);
    }
    return out;
}

PermModule tensor(const PermModule& x, const PermModule& y) {
    if (x.p != y.p) throw std::invalid_argument("tensor: field mismatch");
    return PermModule{product_gset(x.basis, y.basis), x.p};
}

EquivMap tensor_map(const EquivMap& f, const EquivMap& g) {
    return EquivMap(tensor(f.source, g.source), tensor(f.target, g.target),
                    f.matrix.kronecker(g.matrix));
}

PermModule dual(const PermModule& x) { return x; }

EquivMap dual_map(const EquivMap& f) {
    return EquivMap(dual(f.target), dual(f.source), f.matrix.transpose());
}

EquivMap evaluation(const PermModule& x) {
    PermModule src = tensor(dual(x), x);
    PermModule tgt = trivial_module(x.group(), x.p);
    FpMatrix m(1, src.dim(), x.p);
    for (int i = 0; i < x.dim(); ++i) m.at(0, i * x.dim() + i) = 1;
    return EquivMap(std::move(src), std::move(tgt), std::move(m));
}

EquivMap linearise_map(const BurnsideElement& e, int p) {
    return EquivMap(PermModule{e.left, p}, PermModule{e.right, p}, linearise(e, p));
}

}  // namespace permfp
