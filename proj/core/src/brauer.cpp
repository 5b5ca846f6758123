#include "permfp/brauer.hpp"

#include <algorithm>
#include <stdexcept>

namespace permfp {

BrauerModule brauer_module(const PermModule& m, const Subgroup& h) {
    FixedPoints fixed = fixed_points(m.basis, h);
    PermModule mod{fixed.gset, m.p};
    return BrauerModule{std::move(fixed), std::move(mod)};
}

EquivMap brauer_map(const EquivMap& f, const Subgroup& h) {
    BrauerModule bx = brauer_module(f.source, h);
    BrauerModule by = brauer_module(f.target, h);
    FpMatrix m(by.module.dim(), bx.module.dim(), f.source.p);
    for (int y = 0; y < by.module.dim(); ++y)
        for (int x = 0; x < bx.module.dim(); ++x)
            m.at(y, x) = f.matrix.at(by.fixed.embedding[y], bx.fixed.embedding[x]);
    return EquivMap(std::move(bx.module), std::move(by.module), std::move(m));
}

BrauerComplexResult brauer_complex(const Complex& x, const Subgroup& h) {
    WeylGroup w = weyl_group(x.group(), h);
    int p = x.p();
    std::map<int, PermModule> mods;
    std::map<int, EquivMap> diffs;
    std::vector<int> degrees;
    std::vector<std::vector<int>> embeddings;
    for (int n = x.lo(); n <= x.hi(); ++n) {
        BrauerModule bm = brauer_module(x.module(n), h);
        degrees.push_back(n);
        embeddings.push_back(bm.fixed.embedding);
        if (bm.module.dim() > 0) mods.emplace(n, bm.module);
    }
    for (int n = x.lo() + 1; n <= x.hi(); ++n) {
        if (!x.has_differential(n)) continue;
        EquivMap bd = brauer_map(x.differential(n), h);
        if (bd.source.dim() > 0 && bd.target.dim() > 0) diffs.emplace(n, std::move(bd));
    }
    // the complex constructor re-verifies d o d = 0 over the Weyl group
    Complex out(w.group, p, std::move(mods), std::move(diffs));
    return BrauerComplexResult{std::move(out), std::move(degrees), std::move(embeddings)};
}

namespace {

// Generators of a subgroup, in ambient element labels.
std::vector<int> subgroup_generators(const GroupPtr& g, const Subgroup& h) {
    EmbeddedGroup eh = subgroup_group(g, h);
    std::vector<int> out;
    for (int e : eh.group->generators()) out.push_back(eh.element_map[e]);
    return out;
}

// Maximal proper subgroups of H, as ambient-label subgroups.
std::vector<Subgroup> maximal_subgroups(const GroupPtr& g, const Subgroup& h) {
    EmbeddedGroup eh = subgroup_group(g, h);
    std::vector<Subgroup> inside = all_subgroups(*eh.group);
    std::vector<Subgroup> out;
    for (const Subgroup& k : inside) {
        if (k.order() == h.order()) continue;
        bool maximal = true;
        for (const Subgroup& l : inside)
            if (l.order() != h.order() && l.order() != k.order() && l.contains_subgroup(k) &&
                l.order() > k.order()) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        Subgroup lifted;
        for (int x : k.elements) lifted.elements.push_back(eh.element_map[x]);
        std::sort(lifted.elements.begin(), lifted.elements.end());
        out.push_back(std::move(lifted));
    }
    return out;
}

// Left coset representatives of K inside H (ambient labels).
std::vector<int> coset_reps(const GroupPtr& g, const Subgroup& h, const Subgroup& k) {
    std::vector<int> reps;
    std::vector<bool> marked(g->order(), false);
    for (int x : h.elements) {
        if (marked[x]) continue;
        reps.push_back(x);
        for (int a : k.elements) marked[g->mul(x, a)] = true;
    }
    return reps;
}

// Basis (as columns) of the subspace of k[X] fixed by a subgroup.
FpMatrix fixed_subspace(const PermModule& m, const Subgroup& h) {
    std::vector<int> gens = subgroup_generators(m.group(), h);
    if (gens.empty()) return FpMatrix::identity(m.dim(), m.p);
    FpMatrix stacked(static_cast<int>(gens.size()) * m.dim(), m.dim(), m.p);
    for (size_t i = 0; i < gens.size(); ++i) {
        FpMatrix diff = m.action_matrix(gens[i]) - FpMatrix::identity(m.dim(), m.p);
        for (int r = 0; r < m.dim(); ++r)
            for (int c = 0; c < m.dim(); ++c)
                stacked.at(static_cast<int>(i) * m.dim() + r, c) = diff.at(r, c);
    }
    return stacked.kernel();
}

// Columns spanning sum over maximal K < H of tr_K^H(M^K).
FpMatrix trace_subspace(const PermModule& m, const Subgroup& h) {
    const GroupPtr& g = m.group();
    std::vector<FpMatrix> pieces;
    int total_cols = 0;
    for (const Subgroup& k : maximal_subgroups(g, h)) {
        FpMatrix fk = fixed_subspace(m, k);
        FpMatrix tr(m.dim(), m.dim(), m.p);
        for (int r : coset_reps(g, h, k)) tr = tr + m.action_matrix(r);
        FpMatrix img = tr * fk;
        total_cols += img.cols();
        pieces.push_back(std::move(img));
    }
    FpMatrix joint(m.dim(), total_cols, m.p);
    int off = 0;
    for (const FpMatrix& piece : pieces) {
        for (int r = 0; r < piece.rows(); ++r)
            for (int c = 0; c < piece.cols(); ++c) joint.at(r, off + c) = piece.at(r, c);
        off += piece.cols();
    }
    return joint.image_basis();
}

struct QuotientFrame {
    FpMatrix frame;          // [trace basis | fixed-point unit vectors]
    std::vector<int> fixed;  // the H-fixed basis points, increasing
    int trace_cols;
};

QuotientFrame quotient_frame(const PermModule& m, const Subgroup& h) {
    QuotientFrame qf{FpMatrix(0, 0, m.p), {}, 0};
    for (int x = 0; x < m.dim(); ++x) {
        bool fx = true;
        for (int a : h.elements)
            if (m.basis.act(a, x) != x) {
                fx = false;
                break;
            }
        if (fx) qf.fixed.push_back(x);
    }
    FpMatrix traces = trace_subspace(m, h);
    qf.trace_cols = traces.cols();
    qf.frame = FpMatrix(m.dim(), traces.cols() + static_cast<int>(qf.fixed.size()), m.p);
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < traces.cols(); ++c) qf.frame.at(r, c) = traces.at(r, c);
    for (size_t i = 0; i < qf.fixed.size(); ++i)
        qf.frame.at(qf.fixed[i], qf.trace_cols + static_cast<int>(i)) = 1;
    // the residues of the fixed basis points must be a basis of M^H / traces
    int fixed_dim = fixed_subspace(m, h).cols();
    if (qf.frame.rank() != fixed_dim || qf.trace_cols + static_cast<int>(qf.fixed.size()) != fixed_dim)
        throw std::logic_error("brauer oracle: fixed points do not frame the quotient");
    return qf;
}

}  // namespace

EquivMap brauer_map_oracle(const EquivMap& f, const Subgroup& h) {
    QuotientFrame qx = quotient_frame(f.source, h);
    QuotientFrame qy = quotient_frame(f.target, h);
    FpMatrix out(static_cast<int>(qy.fixed.size()), static_cast<int>(qx.fixed.size()),
                 f.source.p);
    for (size_t j = 0; j < qx.fixed.size(); ++j) {
        // image of the residue of e_x, expressed in the target frame
        std::vector<int> w(f.target.dim());
        for (int r = 0; r < f.target.dim(); ++r) w[r] = f.matrix.at(r, qx.fixed[j]);
        std::vector<int> coords;
        if (!qy.frame.solve(w, coords))
            throw std::logic_error("brauer oracle: image not in the fixed subspace");
        for (size_t i = 0; i < qy.fixed.size(); ++i)
            out.at(static_cast<int>(i), static_cast<int>(j)) =
                coords[qy.trace_cols + static_cast<int>(i)];
    }
    // package over the same Weyl modules as the production path
    BrauerModule bx = brauer_module(f.source, h);
    BrauerModule by = brauer_module(f.target, h);
    if (bx.fixed.embedding != qx.fixed || by.fixed.embedding != qy.fixed)
        throw std::logic_error("brauer oracle: fixed point mismatch");
    return EquivMap(std::move(bx.module), std::move(by.module), std::move(out));
}

}  // namespace permfp
