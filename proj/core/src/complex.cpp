#include "permfp/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace permfp {

Complex::Complex(GroupPtr group, int p, std::map<int, PermModule> modules,
                 std::map<int, EquivMap> differentials)
    : group_(std::move(group)), p_(p), modules_(std::move(modules)),
      differentials_(std::move(differentials)),
      zero_(std::make_shared<const PermModule>(zero_module(group_, p_))) {
    if (modules_.empty()) {
        lo_ = hi_ = 0;
        modules_.emplace(0, zero_module(group_, p_));
    } else {
        lo_ = modules_.begin()->first;
        hi_ = modules_.rbegin()->first;
    }
    for (const auto& [deg, mod] : modules_) {
        if (mod.p != p_) throw std::invalid_argument("Complex: module field mismatch");
        if (mod.basis.group()->table() != group_->table())
            throw std::invalid_argument("Complex: module group mismatch");
    }
    // differentials must sit where both ends are nonzero, and compose to zero
    for (int n = lo_ + 1; n <= hi_; ++n) {
        int dn = dim(n), dn1 = dim(n - 1);
        auto it = differentials_.find(n);
        if (dn == 0 || dn1 == 0) {
            if (it != differentials_.end() && !it->second.matrix.is_zero())
                throw std::invalid_argument("Complex: differential attached to a zero module");
            continue;
        }
        if (it == differentials_.end())
            throw std::invalid_argument("Complex: missing differential at degree " +
                                        std::to_string(n));
        const EquivMap& d = it->second;
        if (d.matrix.rows() != dn1 || d.matrix.cols() != dn)
            throw std::invalid_argument("Complex: differential shape mismatch at degree " +
                                        std::to_string(n));
        if (d.source.basis.action() != module(n).basis.action() ||
            d.target.basis.action() != module(n - 1).basis.action())
            throw std::invalid_argument("Complex: differential boundary mismatch");
    }
    for (int n = lo_ + 2; n <= hi_; ++n) {
        if (dim(n) == 0 || dim(n - 1) == 0 || dim(n - 2) == 0) continue;
        FpMatrix prod = differential(n - 1).matrix * differential(n).matrix;
        if (!prod.is_zero())
            throw std::invalid_argument("Complex: d o d != 0 at degree " + std::to_string(n));
    }
}

Complex Complex::unit(const GroupPtr& g, int p) {
    std::map<int, PermModule> mods;
    mods.emplace(0, trivial_module(g, p));
    return Complex(g, p, std::move(mods), {});
}

Complex Complex::concentrated(const PermModule& m) {
    std::map<int, PermModule> mods;
    mods.emplace(0, m);
    return Complex(m.group(), m.p, std::move(mods), {});
}

const PermModule& Complex::module(int degree) const {
    auto it = modules_.find(degree);
    if (it != modules_.end()) return it->second;
    return *zero_;
}

int Complex::dim(int degree) const {
    auto it = modules_.find(degree);
    return it == modules_.end() ? 0 : it->second.dim();
}

bool Complex::has_differential(int degree) const {
    return dim(degree) > 0 && dim(degree - 1) > 0;
}

EquivMap Complex::differential(int degree) const {
    auto it = differentials_.find(degree);
    if (it != differentials_.end() && dim(degree) > 0 && dim(degree - 1) > 0) return it->second;
    return EquivMap::zero(module(degree), module(degree - 1));
}

Complex Complex::trimmed() const {
    int a = lo_, b = hi_;
    while (a <= b && dim(a) == 0) ++a;
    while (b >= a && dim(b) == 0) --b;
    std::map<int, PermModule> mods;
    std::map<int, EquivMap> diffs;
    for (int n = a; n <= b; ++n) {
        mods.emplace(n, module(n));
        if (n > a && has_differential(n)) diffs.emplace(n, differential(n));
    }
    return Complex(group_, p_, std::move(mods), std::move(diffs));
}

bool Complex::operator==(const Complex& rhs) const {
    if (p_ != rhs.p_ || group_->table() != rhs.group_->table()) return false;
    Complex a = trimmed(), b = rhs.trimmed();
    if (a.lo_ != b.lo_ || a.hi_ != b.hi_) return false;
    for (int n = a.lo_; n <= a.hi_; ++n) {
        if (!(a.module(n) == b.module(n))) return false;
        if (n > a.lo_ && !(a.differential(n).matrix == b.differential(n).matrix)) return false;
    }
    return true;
}

Complex shift(const Complex& x, int s) {
    std::map<int, PermModule> mods;
    std::map<int, EquivMap> diffs;
    for (int n = x.lo(); n <= x.hi(); ++n) {
        if (x.dim(n) > 0) mods.emplace(n + s, x.module(n));
        if (x.has_differential(n)) {
            EquivMap d = x.differential(n);
            // each suspension negates the differential
            FpMatrix m = (s % 2 == 0) ? d.matrix : d.matrix.scaled(-1);
            diffs.emplace(n + s, EquivMap(d.source, d.target, std::move(m)));
        }
    }
    return Complex(x.group(), x.p(), std::move(mods), std::move(diffs));
}

Complex direct_sum(const Complex& x, const Complex& y) {
    if (x.p() != y.p() || x.group()->table() != y.group()->table())
        throw std::invalid_argument("direct_sum: mismatched complexes");
    int lo = std::min(x.lo(), y.lo()), hi = std::max(x.hi(), y.hi());
    std::map<int, PermModule> mods;
    std::map<int, EquivMap> diffs;
    for (int n = lo; n <= hi; ++n) {
        PermModule m = direct_sum(x.module(n), y.module(n));
        if (m.dim() > 0) mods.emplace(n, std::move(m));
    }
    for (int n = lo + 1; n <= hi; ++n) {
        if (x.dim(n) + y.dim(n) == 0 || x.dim(n - 1) + y.dim(n - 1) == 0) continue;
        EquivMap dx = x.differential(n), dy = y.differential(n);
        diffs.emplace(n, EquivMap(direct_sum(x.module(n), y.module(n)),
                                  direct_sum(x.module(n - 1), y.module(n - 1)),
                                  dx.matrix.direct_sum(dy.matrix)));
    }
    return Complex(x.group(), x.p(), std::move(mods), std::move(diffs));
}

Complex tensor(const Complex& x, const Complex& y) {
    if (x.p() != y.p() || x.group()->table() != y.group()->table())
        throw std::invalid_argument("tensor: mismatched complexes");
    const int p = x.p();
    int lo = x.lo() + y.lo(), hi = x.hi() + y.hi();
    // degree n = (+)_{i+j=n} X_i (x) Y_j, blocks ordered by increasing i
    auto blocks_of = [&](int n) {
        std::vector<std::pair<int, int>> blocks;
        for (int i = x.lo(); i <= x.hi(); ++i) {
            int j = n - i;
            if (j < y.lo() || j > y.hi()) continue;
            if (x.dim(i) > 0 && y.dim(j) > 0) blocks.emplace_back(i, j);
        }
        return blocks;
    };
    auto module_of = [&](int n) {
        PermModule acc = zero_module(x.group(), p);
        for (auto [i, j] : blocks_of(n)) acc = direct_sum(acc, tensor(x.module(i), y.module(j)));
        return acc;
    };
    std::map<int, PermModule> mods;
    for (int n = lo; n <= hi; ++n) {
        PermModule m = module_of(n);
        if (m.dim() > 0) mods.emplace(n, std::move(m));
    }
    std::map<int, EquivMap> diffs;
    for (int n = lo + 1; n <= hi; ++n) {
        PermModule src = module_of(n), tgt = module_of(n - 1);
        if (src.dim() == 0 || tgt.dim() == 0) continue;
        FpMatrix m(tgt.dim(), src.dim(), p);
        auto src_blocks = blocks_of(n);
        auto tgt_blocks = blocks_of(n - 1);
        auto block_offset = [&](const std::vector<std::pair<int, int>>& blocks, int bi) {
            int off = 0;
            for (int t = 0; t < bi; ++t)
                off += x.dim(blocks[t].first) * y.dim(blocks[t].second);
            return off;
        };
        for (size_t sb = 0; sb < src_blocks.size(); ++sb) {
            auto [i, j] = src_blocks[sb];
            int soff = block_offset(src_blocks, static_cast<int>(sb));
            // d(x (x) y) = dx (x) y + (-1)^i x (x) dy
            for (size_t tb = 0; tb < tgt_blocks.size(); ++tb) {
                auto [ti, tj] = tgt_blocks[tb];
                int toff = block_offset(tgt_blocks, static_cast<int>(tb));
                FpMatrix part(0, 0, p);
                if (ti == i - 1 && tj == j && x.has_differential(i)) {
                    part = x.differential(i).matrix.kronecker(
                        FpMatrix::identity(y.dim(j), p));
                } else if (ti == i && tj == j - 1 && y.has_differential(j)) {
                    part = FpMatrix::identity(x.dim(i), p).kronecker(y.differential(j).matrix);
                    if (i % 2 != 0) part = part.scaled(-1);
                } else {
                    continue;
                }
                for (int r = 0; r < part.rows(); ++r)
                    for (int c = 0; c < part.cols(); ++c)
                        m.at(toff + r, soff + c) = part.at(r, c);
            }
        }
        diffs.emplace(n, EquivMap(std::move(src), std::move(tgt), std::move(m)));
    }
    return Complex(x.group(), p, std::move(mods), std::move(diffs));
}

Complex dual(const Complex& x) {
    std::map<int, PermModule> mods;
    std::map<int, EquivMap> diffs;
    for (int n = x.lo(); n <= x.hi(); ++n)
        if (x.dim(n) > 0) mods.emplace(-n, dual(x.module(n)));
    // the differential at degree n of the dual is the transpose of the
    // original differential at degree 1-n; transposing both factors of
    // d o d = 0 keeps the square zero with no extra sign
    for (int n = x.lo() + 1; n <= x.hi(); ++n)
        if (x.has_differential(n)) diffs.emplace(1 - n, dual_map(x.differential(n)));
    return Complex(x.group(), x.p(), std::move(mods), std::move(diffs));
}

std::map<int, int> homology_dims(const Complex& x) {
    std::map<int, int> out;
    for (int n = x.lo(); n <= x.hi(); ++n) {
        int rank_n = x.has_differential(n) ? x.differential(n).matrix.rank() : 0;
        int rank_n1 = x.has_differential(n + 1) ? x.differential(n + 1).matrix.rank() : 0;
        out[n] = x.dim(n) - rank_n - rank_n1;
        if (out[n] < 0) throw std::logic_error("homology_dims: negative dimension");
    }
    return out;
}

HomologyModule homology_module(const Complex& x, int degree) {
    const int p = x.p();
    int n = x.dim(degree);
    // cycles
    FpMatrix z = x.has_differential(degree)
                     ? x.differential(degree).matrix.kernel()
                     : FpMatrix::identity(n, p);
    // boundaries, inside the cycle coordinates
    FpMatrix b(n, 0, p);
    if (x.has_differential(degree + 1)) b = x.differential(degree + 1).matrix.image_basis();
    // pick cycle columns extending the boundary to a basis: run a rank sweep
    // over [B | Z] and keep the Z-columns that enlarge the rank
    int nb = b.cols(), nz = z.cols();
    FpMatrix joint(n, nb + nz, p);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < nb; ++j) joint.at(i, j) = b.at(i, j);
        for (int j = 0; j < nz; ++j) joint.at(i, nb + j) = z.at(i, j);
    }
    FpMatrix sweep = joint;
    std::vector<int> pivots = fp_rref(sweep);
    std::vector<int> rep_cols;  // columns of Z chosen as homology representatives
    for (int c : pivots)
        if (c >= nb) rep_cols.push_back(c - nb);
    HomologyModule out;
    out.dim = static_cast<int>(rep_cols.size());
    // coordinates of any vector in span(B + reps): solve [B | reps] c = v and
    // read off the rep part
    FpMatrix frame(n, nb + out.dim, p);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < nb; ++j) frame.at(i, j) = b.at(i, j);
        for (int j = 0; j < out.dim; ++j) frame.at(i, nb + j) = z.at(i, rep_cols[j]);
    }
    for (int gen : x.group()->generators()) {
        FpMatrix rho = x.module(degree).action_matrix(gen);
        FpMatrix act(out.dim, out.dim, p);
        for (int j = 0; j < out.dim; ++j) {
            std::vector<int> v(n);
            for (int i = 0; i < n; ++i) v[i] = z.at(i, rep_cols[j]);
            std::vector<int> img = rho.apply(v);
            std::vector<int> coords;
            if (!frame.solve(img, coords))
                throw std::logic_error("homology_module: action does not preserve homology");
            for (int i = 0; i < out.dim; ++i) act.at(i, j) = coords[nb + i];
        }
        out.generator_action.push_back(std::move(act));
    }
    return out;
}

Complex perturb_homotopy(const Complex& x, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Subgroup> subs = all_subgroups(*x.group());
    const Subgroup& h = subs[rng() % subs.size()];
    PermModule m = orbit_module(x.group(), h, x.p());
    int degree = x.lo() + static_cast<int>(rng() % (x.hi() - x.lo() + 2));
    std::map<int, PermModule> mods;
    mods.emplace(degree, m);
    mods.emplace(degree - 1, m);
    std::map<int, EquivMap> diffs;
    diffs.emplace(degree, EquivMap::identity(m));
    Complex cone(x.group(), x.p(), std::move(mods), std::move(diffs));
    return direct_sum(x, cone);
}

Complex random_complex(const GroupPtr& g, int p, uint64_t seed, int max_degrees,
                       int max_summands) {
    std::mt19937_64 rng(seed);
    std::vector<Subgroup> subs = all_subgroups(*g);
    int degrees = 1 + static_cast<int>(rng() % max_degrees);
    std::map<int, PermModule> mods;
    for (int n = 0; n < degrees; ++n) {
        PermModule m = zero_module(g, p);
        int summands = 1 + static_cast<int>(rng() % max_summands);
        for (int s = 0; s < summands; ++s)
            m = direct_sum(m, orbit_module(g, subs[rng() % subs.size()], p));
        mods.emplace(n, m);
    }
    // choose differentials top-down; each must kill the image of the one above
    std::map<int, EquivMap> diffs;
    for (int n = degrees - 1; n >= 1; --n) {
        const PermModule& src = mods.at(n);
        const PermModule& tgt = mods.at(n - 1);
        std::vector<EquivMap> basis = hom_basis(src, tgt);
        std::vector<int> coords(basis.size(), 0);
        auto above = diffs.find(n + 1);
        if (above == diffs.end()) {
            for (size_t i = 0; i < basis.size(); ++i) coords[i] = static_cast<int>(rng() % p);
        } else {
            // solve candidate o d_{n+1} = 0 in hom-basis coordinates
            const FpMatrix& up = above->second.matrix;
            FpMatrix cons(tgt.dim() * up.cols(), static_cast<int>(basis.size()), p);
            for (size_t i = 0; i < basis.size(); ++i) {
                FpMatrix prod = basis[i].matrix * up;
                for (int r = 0; r < prod.rows(); ++r)
                    for (int c = 0; c < prod.cols(); ++c)
                        cons.at(r * prod.cols() + c, static_cast<int>(i)) = prod.at(r, c);
            }
            FpMatrix ker = cons.kernel();
            for (int j = 0; j < ker.cols(); ++j) {
                int w = static_cast<int>(rng() % p);
                for (size_t i = 0; i < basis.size(); ++i)
                    coords[i] = FpMatrix::mod(
                        coords[i] + static_cast<long long>(w) * ker.at(static_cast<int>(i), j), p);
            }
        }
        diffs.emplace(n, from_hom_coords(src, tgt, basis, coords));
    }
    return Complex(g, p, std::move(mods), std::move(diffs));
}

}  // namespace permfp
