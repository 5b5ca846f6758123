#include "permfp/class_function.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace permfp {

namespace {

// All p-subgroups of the group, individually (not up to conjugacy), sorted by
// (order, element list).
std::vector<Subgroup> flatten(const PSubgroupClasses& ctx) {
    std::vector<Subgroup> out;
    for (const auto& cls : ctx.classes)
        for (const auto& s : cls.members) out.push_back(s);
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    });
    return out;
}

bool normal_in(const FiniteGroup& g, const Subgroup& n, const Subgroup& h) {
    for (int x : h.elements)
        if (conjugate_subgroup(g, n, x) != n) return false;
    return true;
}

// Subgroups strictly between n and h (both inclusions proper).
std::vector<Subgroup> strictly_between(const std::vector<Subgroup>& all, const Subgroup& n,
                                       const Subgroup& h) {
    std::vector<Subgroup> out;
    for (const auto& k : all) {
        if (k.order() <= n.order() || k.order() >= h.order()) continue;
        if (k.contains_subgroup(n) && h.contains_subgroup(k)) out.push_back(k);
    }
    return out;
}

// The subgroup k with n < k <= h and [k:n] = 2; used for quaternion sections,
// where the quotient has a unique subgroup of order 2.
Subgroup index_two_over(const std::vector<Subgroup>& all, const Subgroup& n, const Subgroup& h) {
    std::vector<Subgroup> found;
    for (const auto& k : all) {
        if (k.order() != 2 * n.order()) continue;
        if (k.contains_subgroup(n) && h.contains_subgroup(k)) found.push_back(k);
    }
    if (found.size() != 1)
        throw std::logic_error("quaternion section without a unique order-2 layer");
    return found[0];
}

struct SectionPair {
    Subgroup n;
    Subgroup h;
    SectionType type;
};

// Every pair (N, H) of p-subgroups with N normal in H and H/N of one of the
// shapes the lattice conditions constrain.
std::vector<SectionPair> condition_pairs(const PSubgroupClasses& ctx,
                                         const std::vector<Subgroup>& all) {
    std::vector<SectionPair> out;
    for (const auto& h : all) {
        for (const auto& n : all) {
            if (n.order() >= h.order() || !h.contains_subgroup(n)) continue;
            if (!normal_in(*ctx.group, n, h)) continue;
            SectionType st = section_type(ctx.group, n, h, ctx.p);
            if (st == SectionType::Other) continue;
            out.push_back({n, h, st});
        }
    }
    return out;
}

long long mod_reduce(long long v, long long m) { return ((v % m) + m) % m; }

}  // namespace

int PSubgroupClasses::index_of(const Subgroup& h) const {
    auto it = index.find(h.elements);
    if (it == index.end()) throw std::invalid_argument("subgroup is not a p-subgroup here");
    return it->second;
}

PSubgroupClasses p_classes(const GroupPtr& g, int p) {
    PSubgroupClasses ctx;
    ctx.group = g;
    ctx.p = p;
    ctx.classes = p_subgroup_classes(*g, p);
    for (int i = 0; i < static_cast<int>(ctx.classes.size()); ++i)
        for (const auto& s : ctx.classes[i].members) ctx.index[s.elements] = i;
    return ctx;
}

ClassFunction cf_zero(const PSubgroupClasses& ctx) {
    return ClassFunction{ctx.group, ctx.p, std::vector<long long>(ctx.size(), 0)};
}

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b) {
    if (a.values.size() != b.values.size() || a.p != b.p)
        throw std::invalid_argument("class function mismatch");
    ClassFunction out = a;
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    return out;
}

ClassFunction cf_sub(const ClassFunction& a, const ClassFunction& b) {
    return cf_add(a, cf_scale(-1, b));
}

ClassFunction cf_scale(long long c, const ClassFunction& a) {
    ClassFunction out = a;
    for (auto& v : out.values) v *= c;
    return out;
}

ClassFunction omega(const PSubgroupClasses& ctx, const Subgroup& P) {
    ClassFunction out = cf_zero(ctx);
    for (int i = 0; i < ctx.size(); ++i)
        out.values[i] = subconjugate(*ctx.group, ctx.classes[i].representative, P) ? 1 : 0;
    return out;
}

BorelSmithReport borel_smith_check(const PSubgroupClasses& ctx, const ClassFunction& h) {
    if (static_cast<int>(h.values.size()) != ctx.size())
        throw std::invalid_argument("class function has wrong length");
    const auto all = flatten(ctx);
    BorelSmithReport report{true, {}};
    auto val = [&](const Subgroup& s) { return h.values[ctx.index_of(s)]; };

    for (const auto& pair : condition_pairs(ctx, all)) {
        switch (pair.type) {
            case SectionType::ElemAbelianRank2: {
                const auto mids = strictly_between(all, pair.n, pair.h);
                if (static_cast<int>(mids.size()) != ctx.p + 1)
                    throw std::logic_error("rank-2 section with wrong number of layers");
                long long sum = val(pair.n) + ctx.p * val(pair.h);
                for (const auto& k : mids) sum -= val(k);
                if (sum != 0) {
                    report.ok = false;
                    report.violations.push_back(
                        {pair.n, pair.h, BorelSmithCondition::ElemAbelianRank2});
                }
                break;
            }
            case SectionType::CyclicOddP:
            case SectionType::Cyclic4: {
                Subgroup k = pair.type == SectionType::CyclicOddP
                                 ? pair.h
                                 : strictly_between(all, pair.n, pair.h).at(0);
                if (mod_reduce(val(pair.n) - val(k), 2) != 0) {
                    report.ok = false;
                    report.violations.push_back({pair.n, pair.h, BorelSmithCondition::CyclicMod2});
                }
                break;
            }
            case SectionType::Quaternion8: {
                Subgroup k = index_two_over(all, pair.n, pair.h);
                if (mod_reduce(val(pair.n) - val(k), 4) != 0) {
                    report.ok = false;
                    report.violations.push_back(
                        {pair.n, pair.h, BorelSmithCondition::QuaternionMod4});
                }
                break;
            }
            case SectionType::Other:
                break;
        }
    }
    return report;
}

namespace {

// Index of the column span when it has full rank, else 0: the product of the
// nonzero Smith diagonal entries.
Int span_index(const IntMat& basis, int rank) {
    if (basis.empty() || rank != static_cast<int>(basis.size())) return 0;
    SmithForm sf = smith_normal_form(basis);
    Int idx = 1;
    for (int i = 0; i < sf.rank; ++i) idx *= sf.s[i][i];
    return idx < 0 ? -idx : idx;
}

}  // namespace

LatticeBasis cfb_basis(const PSubgroupClasses& ctx) {
    const int n = ctx.size();
    const auto all = flatten(ctx);

    // Constraint rows over h-coordinates: exact rows must vanish, congruence
    // rows must vanish modulo their modulus.
    std::set<std::vector<Int>> exact_seen;
    std::set<std::pair<std::vector<Int>, long long>> cong_seen;
    std::vector<std::vector<Int>> exact_rows;
    std::vector<std::pair<std::vector<Int>, long long>> cong_rows;
    auto idx = [&](const Subgroup& s) { return ctx.index_of(s); };

    for (const auto& pair : condition_pairs(ctx, all)) {
        std::vector<Int> row(n, 0);
        switch (pair.type) {
            case SectionType::ElemAbelianRank2: {
                row[idx(pair.n)] += 1;
                row[idx(pair.h)] += ctx.p;
                for (const auto& k : strictly_between(all, pair.n, pair.h)) row[idx(k)] -= 1;
                if (std::all_of(row.begin(), row.end(), [](const Int& v) { return v == 0; }))
                    break;
                if (exact_seen.insert(row).second) exact_rows.push_back(row);
                break;
            }
            case SectionType::CyclicOddP:
            case SectionType::Cyclic4: {
                Subgroup k = pair.type == SectionType::CyclicOddP
                                 ? pair.h
                                 : strictly_between(all, pair.n, pair.h).at(0);
                row[idx(pair.n)] += 1;
                row[idx(k)] -= 1;
                if (std::all_of(row.begin(), row.end(), [](const Int& v) { return v == 0; }))
                    break;
                if (cong_seen.insert({row, 2}).second) cong_rows.push_back({row, 2});
                break;
            }
            case SectionType::Quaternion8: {
                Subgroup k = index_two_over(all, pair.n, pair.h);
                row[idx(pair.n)] += 1;
                row[idx(k)] -= 1;
                if (std::all_of(row.begin(), row.end(), [](const Int& v) { return v == 0; }))
                    break;
                if (cong_seen.insert({row, 4}).second) cong_rows.push_back({row, 4});
                break;
            }
            case SectionType::Other:
                break;
        }
    }

    const int c = static_cast<int>(cong_rows.size());
    if (exact_rows.empty() && c == 0) {
        LatticeBasis out{int_identity(n), n, 1};
        return out;
    }

    // Stack [E 0; C diag(m)] over columns (h, y); its kernel projects
    // bijectively onto the solution lattice in h, since each y-coordinate is
    // determined by h through its own congruence row.
    IntMat m;
    for (const auto& row : exact_rows) {
        std::vector<Int> full = row;
        full.resize(n + c, 0);
        m.push_back(std::move(full));
    }
    for (int i = 0; i < c; ++i) {
        std::vector<Int> full = cong_rows[i].first;
        full.resize(n + c, 0);
        full[n + i] = cong_rows[i].second;
        m.push_back(std::move(full));
    }

    IntMat ker = int_kernel(m);
    const int r = ker.empty() ? 0 : static_cast<int>(ker[0].size());
    IntMat basis(n, std::vector<Int>(r, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < r; ++j) basis[i][j] = ker[i][j];

    LatticeBasis out{std::move(basis), r, 0};
    out.index = span_index(out.basis, out.rank);
    return out;
}

bool lattice_contains(const LatticeBasis& l, const std::vector<long long>& v) {
    if (l.basis.empty()) return false;
    if (l.basis.size() != v.size()) throw std::invalid_argument("vector length mismatch");
    std::vector<Int> b(v.begin(), v.end());
    return int_solve(l.basis, b).has_value();
}

bool lattice_member(const LatticeBasis& l, const ClassFunction& h) {
    return lattice_contains(l, h.values);
}

LatticeBasis lattice_from_vectors(const std::vector<std::vector<long long>>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("no vectors given");
    const int n = static_cast<int>(vectors[0].size());
    const int r = static_cast<int>(vectors.size());
    IntMat basis(n, std::vector<Int>(r, 0));
    for (int j = 0; j < r; ++j) {
        if (static_cast<int>(vectors[j].size()) != n)
            throw std::invalid_argument("ragged vector list");
        for (int i = 0; i < n; ++i) basis[i][j] = vectors[j][i];
    }
    LatticeBasis out{std::move(basis), 0, 0};
    out.rank = int_rank(out.basis);
    out.index = span_index(out.basis, out.rank);
    return out;
}

bool lattices_equal(const LatticeBasis& a, const LatticeBasis& b) {
    if (a.rank != b.rank) return false;
    auto contains_all = [](const LatticeBasis& big, const LatticeBasis& small) {
        if (small.basis.empty()) return true;
        const int n = static_cast<int>(small.basis.size());
        const int r = static_cast<int>(small.basis[0].size());
        for (int j = 0; j < r; ++j) {
            std::vector<Int> col(n);
            for (int i = 0; i < n; ++i) col[i] = small.basis[i][j];
            if (!int_solve(big.basis, col).has_value()) return false;
        }
        return true;
    };
    return contains_all(a, b) && contains_all(b, a);
}

}  // namespace permfp
