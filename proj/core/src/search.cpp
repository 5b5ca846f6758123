#include "permfp/search.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permfp {

namespace {

// ---- flat GF(p) matrices for the inner loops -----------------------------
//
// The search examines millions of differential candidates; FpMatrix and the
// EquivMap validity checks are far too heavy there.  Candidates live as raw
// byte matrices and are only lifted to checked types once they survive every
// filter.

struct Raw {
    int rows = 0, cols = 0;
    std::vector<int8_t> a;

    Raw() = default;
    Raw(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    int8_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    int8_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

struct Field {
    int p = 2;
    int inv[128] = {0};

    explicit Field(int p_) : p(p_) {
        for (int i = 1; i < p; ++i) inv[i] = fp_inverse(i, p);
    }
};

// dst += c * src (mod p), entrywise.
void raw_axpy(Raw& dst, const Raw& src, int c, int p) {
    for (size_t i = 0; i < dst.a.size(); ++i) {
        int v = dst.a[i] + c * src.a[i];
        dst.a[i] = static_cast<int8_t>(v % p);
    }
}

int raw_rank(const int8_t* m, int rows, int cols, const Field& f, std::vector<int8_t>& scratch) {
    scratch.assign(m, m + static_cast<size_t>(rows) * cols);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (scratch[static_cast<size_t>(r) * cols + c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = c; j < cols; ++j)
                std::swap(scratch[static_cast<size_t>(pivot) * cols + j],
                          scratch[static_cast<size_t>(rank) * cols + j]);
        const int inv = f.inv[scratch[static_cast<size_t>(rank) * cols + c]];
        for (int r = rank + 1; r < rows; ++r) {
            const int v = scratch[static_cast<size_t>(r) * cols + c];
            if (v == 0) continue;
            const int mult = (f.p - v * inv % f.p) % f.p;
            for (int j = c; j < cols; ++j) {
                int t = scratch[static_cast<size_t>(r) * cols + j] +
                        mult * scratch[static_cast<size_t>(rank) * cols + j];
                scratch[static_cast<size_t>(r) * cols + j] = static_cast<int8_t>(t % f.p);
            }
        }
        ++rank;
    }
    return rank;
}

int raw_rank(const Raw& m, const Field& f, std::vector<int8_t>& scratch) {
    return raw_rank(m.a.data(), m.rows, m.cols, f, scratch);
}

// Rank of the submatrix on the given rows and columns.
int raw_sub_rank(const Raw& m, const std::vector<int>& rowIdx, const std::vector<int>& colIdx,
                 const Field& f, std::vector<int8_t>& sub, std::vector<int8_t>& scratch) {
    const int r = static_cast<int>(rowIdx.size());
    const int c = static_cast<int>(colIdx.size());
    sub.resize(static_cast<size_t>(r) * c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) sub[static_cast<size_t>(i) * c + j] = m.at(rowIdx[i], colIdx[j]);
    return raw_rank(sub.data(), r, c, f, scratch);
}

Raw raw_mul(const Raw& a, const Raw& b, int p) {
    Raw out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const int v = a.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols; ++j) {
                int t = out.at(i, j) + v * b.at(k, j);
                out.at(i, j) = static_cast<int8_t>(t % p);
            }
        }
    return out;
}

Raw to_raw(const FpMatrix& m) {
    Raw out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = static_cast<int8_t>(m.at(i, j));
    return out;
}

FpMatrix to_fp(const Raw& m, int p) {
    FpMatrix out(m.rows, m.cols, p);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out.set(i, j, m.at(i, j));
    return out;
}

// Odometer over coefficient vectors in [0,p)^n that keeps a running linear
// combination up to date: each digit step adds one basis matrix (a digit
// wrapping p-1 -> 0 is the same +1 mod p).
struct Odometer {
    std::vector<int> digits;
    bool first = true;

    explicit Odometer(int n) : digits(n, 0) {}

    // Advance and update cur; false when the space is spent.
    bool next(Raw& cur, const std::vector<Raw>& basis, int p) {
        if (first) {
            first = false;
            return true;  // the all-zero assignment
        }
        for (size_t i = 0; i < digits.size(); ++i) {
            raw_axpy(cur, basis[i], 1, p);
            if (++digits[i] < p) return true;
            digits[i] = 0;
        }
        return false;
    }
};

// ---- the engine ----------------------------------------------------------

struct PoolEntry {
    PermModule module;
    std::vector<std::vector<int>> fixed;  // per class: fixed basis points
};

struct DegreeData {
    std::vector<int> summands;  // pool indices, ascending
    PermModule module;
    int dim = 0;
    std::vector<std::vector<int>> fixed;  // per class: global basis indices
};

struct Engine {
    GroupPtr g;
    int p;
    SearchBudget budget;
    PSubgroupClasses classes;
    std::vector<PoolEntry> pool;
    std::vector<std::vector<int>> degree_options;  // all summand multisets
    std::vector<std::vector<char>> subconj;        // [c][d]: rep_c <=_G rep_d
    std::vector<char> gen_elems;                   // group generators
    bool p_group = false;
    Field field;

    // realize mode: the per-class degree assignment is fixed up front.
    std::optional<std::vector<long long>> fixed_target;
    std::function<bool(const std::vector<long long>&)> accept;

    SearchOutcome out;
    std::vector<int8_t> scr1, scr2;  // rank scratch

    explicit Engine(const GroupPtr& g_, int p_, const SearchBudget& b)
        : g(g_), p(p_), budget(b), classes(p_classes(g_, p_)), field(p_) {}

    void setup() {
        if (budget.max_degrees < 1 || budget.max_degrees > 3)
            throw std::invalid_argument("search supports windows of 1 to 3 degrees");
        if (budget.max_summands < 1) throw std::invalid_argument("need at least one summand");

        std::vector<Subgroup> stabs = budget.pool;
        if (stabs.empty())
            for (const auto& cls : classes.classes) stabs.push_back(cls.representative);
        std::sort(stabs.begin(), stabs.end());
        stabs.erase(std::unique(stabs.begin(), stabs.end()), stabs.end());

        for (const auto& s : stabs) {
            PoolEntry e{orbit_module(g, s, p), {}};
            for (const auto& cls : classes.classes)
                e.fixed.push_back(fixed_points(e.module.basis, cls.representative).embedding);
            pool.push_back(std::move(e));
        }

        // Multisets of pool indices, smallest first: by size, then lex.
        for (int size = 1; size <= budget.max_summands; ++size) {
            std::vector<int> cur(size, 0);
            while (true) {
                degree_options.push_back(cur);
                int i = size - 1;
                while (i >= 0 && cur[i] == static_cast<int>(pool.size()) - 1) --i;
                if (i < 0) break;
                ++cur[i];
                for (int j = i + 1; j < size; ++j) cur[j] = cur[i];
            }
        }

        const int nc = classes.size();
        subconj.assign(nc, std::vector<char>(nc, 0));
        for (int c = 0; c < nc; ++c)
            for (int d = 0; d < nc; ++d)
                subconj[c][d] = subconjugate(*g, classes.classes[c].representative,
                                             classes.classes[d].representative);

        p_group = is_p_group_order(g->order(), p);
    }

    void bump(const std::string& where) {
        if (++out.candidates > budget.max_candidates) {
            std::ostringstream os;
            os << "search exceeded the candidate cap (" << budget.max_candidates << ") at "
               << where;
            throw std::runtime_error(os.str());
        }
    }

    // A sweep over p^h coefficient vectors is about to start; fail eagerly if
    // it alone would blow the candidate cap.
    void ensure_sweepable(int h, const char* where) {
        long long space = 1;
        for (int i = 0; i < h; ++i) {
            space *= p;
            if (space > budget.max_candidates - out.candidates) {
                std::ostringstream os;
                os << "differential space of dimension " << h << " exceeds the candidate cap at "
                   << where;
                throw std::runtime_error(os.str());
            }
        }
    }

    // ---- profile enumeration ---------------------------------------------

    bool run() {
        for (int d = 1; d <= budget.max_degrees; ++d) {
            std::vector<int> choice(d, 0);
            if (enumerate_profiles(d, 0, choice)) return true;
        }
        out.exhausted = true;
        return false;
    }

    bool enumerate_profiles(int depth, int at, std::vector<int>& choice) {
        if (at == depth) return handle_profile(choice);
        for (int i = 0; i < static_cast<int>(degree_options.size()); ++i) {
            choice[at] = i;
            if (enumerate_profiles(depth, at + 1, choice)) return true;
        }
        return false;
    }

    bool handle_profile(const std::vector<int>& choice) {
        if (budget.duality_reduction) {
            std::vector<int> rev(choice.rbegin(), choice.rend());
            if (rev < choice) return false;  // covered by its mirror via duality
        }
        ++out.profiles;

        const int depth = static_cast<int>(choice.size());
        std::vector<DegreeData> deg;
        for (int n = 0; n < depth; ++n) {
            const std::vector<int>& summands = degree_options[choice[n]];
            PermModule mod = pool[summands[0]].module;
            for (size_t i = 1; i < summands.size(); ++i)
                mod = direct_sum(mod, pool[summands[i]].module);
            DegreeData d{summands, std::move(mod), 0, {}};
            d.dim = d.module.dim();
            d.fixed.assign(classes.size(), {});
            int offset = 0;
            for (int s : d.summands) {
                for (int c = 0; c < classes.size(); ++c)
                    for (int pt : pool[s].fixed[c]) d.fixed[c].push_back(pt + offset);
                offset += pool[s].module.dim();
            }
            deg.push_back(std::move(d));
        }

        // Per class: which support degrees are numerically possible, and the
        // differential ranks each one forces.
        std::vector<std::vector<std::pair<int, std::vector<int>>>> feas(classes.size());
        for (int c = 0; c < classes.size(); ++c) {
            std::vector<int> dims(depth);
            for (int n = 0; n < depth; ++n) dims[n] = static_cast<int>(deg[n].fixed[c].size());
            if (std::accumulate(dims.begin(), dims.end(), 0) == 0) return false;
            for (int m = 0; m < depth; ++m) {
                auto ranks = forced_ranks(dims, m);
                if (ranks) feas[c].push_back({m, std::move(*ranks)});
            }
            if (feas[c].empty()) return false;
        }

        std::vector<int> pick(classes.size(), -1);
        return assign_class(deg, feas, 0, pick);
    }

    // Invertibility with support degree m forces the rank of every
    // differential: walk up from the bottom, then check the top dimension.
    std::optional<std::vector<int>> forced_ranks(const std::vector<int>& dims, int m) {
        const int depth = static_cast<int>(dims.size());
        std::vector<int> r(depth, 0);  // r[n] = rank of d_n, n >= 1
        for (int n = 1; n < depth; ++n) {
            const int below = dims[n - 1];
            r[n] = below - (n == 1 ? 0 : r[n - 1]) - (m == n - 1 ? 1 : 0);
            if (r[n] < 0 || r[n] > std::min(dims[n], below)) return std::nullopt;
            if ((dims[n] == 0 || below == 0) && r[n] != 0) return std::nullopt;
        }
        const int top = dims[depth - 1] - (depth >= 2 ? r[depth - 1] : 0);
        if (top != (m == depth - 1 ? 1 : 0)) return std::nullopt;
        return r;
    }

    bool assign_class(const std::vector<DegreeData>& deg,
                      const std::vector<std::vector<std::pair<int, std::vector<int>>>>& feas,
                      int c, std::vector<int>& pick) {
        if (c == classes.size()) {
            std::vector<long long> lambda(pick.size());
            std::vector<std::vector<int>> ranks(pick.size());
            for (size_t i = 0; i < pick.size(); ++i) {
                lambda[i] = feas[i][pick[i]].first;
                ranks[i] = feas[i][pick[i]].second;
            }
            if (!accept(lambda)) return false;
            return search_differentials(deg, lambda, ranks);
        }
        for (int i = 0; i < static_cast<int>(feas[c].size()); ++i) {
            const int m = feas[c][i].first;
            if (fixed_target && (*fixed_target)[c] != m) continue;

            // A class whose fixed points exhaust every degree sees the very
            // same matrices as the trivial class, so its support must agree.
            bool full = true;
            for (const auto& d : deg)
                full = full && static_cast<int>(d.fixed[c].size()) == d.dim;
            if (full && c > 0 && m != feas[0][pick[0]].first) continue;

            // Fixed points shrink along subconjugacy, so ranks do too.
            bool ok = true;
            for (int d = 0; d < c && ok; ++d) {
                const auto& rc = feas[c][i].second;
                const auto& rd = feas[d][pick[d]].second;
                for (size_t n = 1; n < rc.size(); ++n) {
                    if (subconj[c][d] && rd[n] > rc[n]) ok = false;
                    if (subconj[d][c] && rc[n] > rd[n]) ok = false;
                }
            }
            if (!ok) continue;

            pick[c] = i;
            if (assign_class(deg, feas, c + 1, pick)) return true;
        }
        return false;
    }

    // ---- differential enumeration ----------------------------------------

    bool search_differentials(const std::vector<DegreeData>& deg,
                              const std::vector<long long>& lambda,
                              const std::vector<std::vector<int>>& ranks) {
        const int depth = static_cast<int>(deg.size());
        if (depth == 1) {
            bump("a one-term profile");
            return finish(deg, lambda, {});
        }

        auto basis1 = hom_basis(deg[1].module, deg[0].module);
        std::vector<Raw> raw1;
        for (const auto& b : basis1) raw1.push_back(to_raw(b.matrix));

        if (depth == 2) {
            ensure_sweepable(static_cast<int>(raw1.size()), "a two-term profile");
            Raw cur(deg[0].dim, deg[1].dim);
            Odometer od(static_cast<int>(raw1.size()));
            while (od.next(cur, raw1, p)) {
                bump("a two-term profile");
                if (!rank_filters(cur, deg, ranks, 1)) continue;
                if (finish(deg, lambda, {cur})) return true;
            }
            return false;
        }

        auto basis2 = hom_basis(deg[2].module, deg[1].module);
        std::vector<Raw> raw2;
        for (const auto& b : basis2) raw2.push_back(to_raw(b.matrix));

        const bool middle_exact = lambda[0] != 1;  // no homology between the differentials
        if (raw1.size() <= raw2.size())
            return three_term(deg, lambda, ranks, raw1, raw2, middle_exact, /*bottom_up=*/true);
        return three_term(deg, lambda, ranks, raw2, raw1, middle_exact, /*bottom_up=*/false);
    }

    // Sweep the smaller differential space in full; for each survivor, the
    // other differential ranges over the kernel of the composition
    // constraint, swept in full as well.
    bool three_term(const std::vector<DegreeData>& deg, const std::vector<long long>& lambda,
                    const std::vector<std::vector<int>>& ranks, const std::vector<Raw>& small,
                    const std::vector<Raw>& large, bool middle_exact, bool bottom_up) {
        ensure_sweepable(static_cast<int>(small.size()), "a three-term profile");
        const int n_small = bottom_up ? 1 : 2;
        const int n_large = bottom_up ? 2 : 1;
        const int small_rows = bottom_up ? deg[0].dim : deg[1].dim;
        const int small_cols = bottom_up ? deg[1].dim : deg[2].dim;

        Raw cur(small_rows, small_cols);
        Odometer od(static_cast<int>(small.size()));
        while (od.next(cur, small, p)) {
            bump("a three-term profile");
            if (!rank_filters(cur, deg, ranks, n_small)) continue;
            if (middle_exact && p_group && !generator_certificate(cur, deg, ranks, bottom_up))
                continue;

            // d o d = 0 pins the other differential to a linear subspace;
            // express it in the hom basis and sweep its kernel.
            FpMatrix constraint(deg[0].dim * deg[2].dim, static_cast<int>(large.size()), p);
            const Raw cur_now = cur;  // odometer keeps mutating cur
            for (int j = 0; j < static_cast<int>(large.size()); ++j) {
                Raw prod = bottom_up ? raw_mul(cur_now, large[j], p) : raw_mul(large[j], cur_now, p);
                for (int i = 0; i < static_cast<int>(prod.a.size()); ++i)
                    constraint.set(i, j, prod.a[i]);
            }
            FpMatrix ker = constraint.kernel();
            std::vector<Raw> kbasis;
            for (int j = 0; j < ker.cols(); ++j) {
                Raw m(bottom_up ? deg[1].dim : deg[0].dim, bottom_up ? deg[2].dim : deg[1].dim);
                for (int i = 0; i < ker.rows(); ++i)
                    if (ker.at(i, j) != 0) raw_axpy(m, large[i], ker.at(i, j), p);
                kbasis.push_back(std::move(m));
            }
            ensure_sweepable(static_cast<int>(kbasis.size()), "a constrained three-term profile");

            Raw cur2(kbasis.empty() ? (bottom_up ? deg[1].dim : deg[0].dim) : kbasis[0].rows,
                     kbasis.empty() ? (bottom_up ? deg[2].dim : deg[1].dim) : kbasis[0].cols);
            Odometer od2(static_cast<int>(kbasis.size()));
            while (od2.next(cur2, kbasis, p)) {
                bump("a constrained three-term profile");
                if (!rank_filters(cur2, deg, ranks, n_large)) continue;
                const bool found = bottom_up ? finish(deg, lambda, {cur_now, cur2})
                                             : finish(deg, lambda, {cur2, cur_now});
                if (found) return true;
            }
        }
        return false;
    }

    // Check the candidate's rank against the forced value at every class.
    bool rank_filters(const Raw& m, const std::vector<DegreeData>& deg,
                      const std::vector<std::vector<int>>& ranks, int n) {
        if (raw_rank(m, field, scr1) != ranks[0][n]) return false;
        for (int c = 1; c < classes.size(); ++c) {
            const auto& rows = deg[n - 1].fixed[c];
            const auto& cols = deg[n].fixed[c];
            if (rows.empty() || cols.empty()) continue;  // forced zero, checked already
            if (raw_sub_rank(m, rows, cols, field, scr2, scr1) != ranks[c][n]) return false;
        }
        return true;
    }

    // Nakayama bound, valid over the local algebra of a p-group: when the
    // middle is exact the unseen differential must cover a known submodule W
    // (the kernel of d_1 bottom-up, or the cokernel's socle dual top-down),
    // which needs at least dim(W / rad W) orbit summands — respectively at
    // most soc(X_1/W) of them to receive an embedding.  Transitive orbit
    // modules of a p-group have one generator and a simple socle, so the
    // profile's summand count is a hard ceiling on either side.
    bool generator_certificate(const Raw& cur, const std::vector<DegreeData>& deg,
                               const std::vector<std::vector<int>>& ranks, bool bottom_up) {
        const auto& gens = g->generators();
        if (bottom_up) {
            // W = ker(d_1); the top module must surject onto it.
            FpMatrix d1 = to_fp(cur, p);
            FpMatrix w = d1.kernel();
            if (w.cols() == 0) return true;
            FpMatrix stacked(d1.cols(), w.cols() * static_cast<int>(gens.size()), p);
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                FpMatrix act = deg[1].module.action_matrix(gens[gi]);
                FpMatrix moved = act * w;
                for (int r = 0; r < moved.rows(); ++r)
                    for (int c = 0; c < moved.cols(); ++c)
                        stacked.set(r, static_cast<int>(gi) * w.cols() + c,
                                    moved.at(r, c) - w.at(r, c));
            }
            const int generators_needed = w.cols() - stacked.rank();
            return generators_needed <= static_cast<int>(deg[2].summands.size());
        }
        // W = im(d_2); X_1 / W must embed into the bottom module, so its
        // socle cannot exceed the bottom's orbit count.
        FpMatrix d2 = to_fp(cur, p);
        FpMatrix w = d2.image_basis();
        const int dim1 = deg[1].dim;
        const int wdim = w.cols();
        const int k = static_cast<int>(gens.size());
        // Solve (g_i - 1) x = W y_i simultaneously: variables (x, y_1..y_k).
        FpMatrix sys(dim1 * k, dim1 + wdim * k, p);
        for (int gi = 0; gi < k; ++gi) {
            FpMatrix act = deg[1].module.action_matrix(gens[gi]);
            for (int r = 0; r < dim1; ++r) {
                for (int c = 0; c < dim1; ++c)
                    sys.set(gi * dim1 + r, c, act.at(r, c) - (r == c ? 1 : 0));
                for (int c = 0; c < wdim; ++c)
                    sys.set(gi * dim1 + r, dim1 + gi * wdim + c, p - w.at(r, c));
            }
        }
        const int preimage_dim = dim1 + wdim * k - sys.rank();
        const int socle_dim = preimage_dim - wdim;
        (void)ranks;
        return socle_dim <= static_cast<int>(deg[0].summands.size());
    }

    // Lift the surviving candidate to checked types and verify it honestly.
    bool finish(const std::vector<DegreeData>& deg, const std::vector<long long>& lambda,
                const std::vector<Raw>& diffs) {
        std::map<int, PermModule> modules;
        for (int n = 0; n < static_cast<int>(deg.size()); ++n) modules.emplace(n, deg[n].module);
        std::map<int, EquivMap> dmap;
        for (int n = 1; n <= static_cast<int>(diffs.size()); ++n)
            dmap.emplace(n, EquivMap(deg[n].module, deg[n - 1].module, to_fp(diffs[n - 1], p)));
        Complex x(g, p, std::move(modules), std::move(dmap));

        MarksReport report = marks(x);
        if (!report.invertible || !report.lambda || report.lambda->values != lambda)
            throw std::logic_error("search filters accepted a candidate that fails verification");
        out.witness = std::move(x);
        return true;
    }
};

std::vector<long long> target_vector(const ClassFunction& target, const PSubgroupClasses& ctx) {
    if (static_cast<int>(target.values.size()) != ctx.size())
        throw std::invalid_argument("target class function has the wrong length");
    return target.values;
}

}  // namespace

SearchOutcome realize_search(const GroupPtr& g, int p, const ClassFunction& target,
                             const SearchBudget& budget) {
    Engine e(g, p, budget);
    e.setup();

    // Normalize so the window starts at degree 0; shift the witness back.
    std::vector<long long> t = target_vector(target, e.classes);
    const long long base = *std::min_element(t.begin(), t.end());
    for (auto& v : t) v -= base;
    e.fixed_target = t;
    e.accept = [&t](const std::vector<long long>& lambda) { return lambda == t; };
    e.run();

    SearchOutcome out = std::move(e.out);
    if (out.witness && base != 0) out.witness = shift(*out.witness, static_cast<int>(base));
    return out;
}

SearchOutcome search_where(const GroupPtr& g, int p,
                           const std::function<bool(const ClassFunction&)>& accept,
                           const SearchBudget& budget) {
    Engine e(g, p, budget);
    e.setup();
    e.accept = [&](const std::vector<long long>& lambda) {
        return accept(ClassFunction{g, p, lambda});
    };
    e.run();
    return std::move(e.out);
}

}  // namespace permfp
