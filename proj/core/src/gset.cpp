#include "permfp/gset.hpp"

#include <algorithm>
#include <stdexcept>

namespace permfp {

GSet::GSet(GroupPtr group, std::vector<std::vector<int>> action)
    : group_(std::move(group)), action_(std::move(action)) {
    if (static_cast<int>(action_.size()) != group_->order())
        throw std::invalid_argument("GSet: need one row per group element");
    size_ = action_.empty() ? 0 : static_cast<int>(action_[0].size());
    for (const auto& row : action_) {
        if (static_cast<int>(row.size()) != size_)
            throw std::invalid_argument("GSet: ragged action table");
        for (int v : row)
            if (v < 0 || v >= size_) throw std::invalid_argument("GSet: point out of range");
    }
    for (int x = 0; x < size_; ++x)
        if (action_[0][x] != x) throw std::invalid_argument("GSet: identity must act trivially");
    const FiniteGroup& g = *group_;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            for (int x = 0; x < size_; ++x)
                if (action_[g.mul(a, b)][x] != action_[a][action_[b][x]])
                    throw std::invalid_argument("GSet: table is not a group action");
}

GSet GSet::empty(GroupPtr group) {
    std::vector<std::vector<int>> action(group->order());
    return GSet(std::move(group), std::move(action));
}

std::vector<std::vector<int>> orbit_cosets(const GroupPtr& g, const Subgroup& h) {
    std::vector<int> coset_of(g->order(), -1);
    std::vector<std::vector<int>> cosets;
    for (int x = 0; x < g->order(); ++x) {
        if (coset_of[x] >= 0) continue;
        std::vector<int> coset;
        for (int a : h.elements) coset.push_back(g->mul(x, a));
        std::sort(coset.begin(), coset.end());
        for (int y : coset) coset_of[y] = static_cast<int>(cosets.size());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

GSet orbit_gset(const GroupPtr& g, const Subgroup& h) {
    std::vector<std::vector<int>> cosets = orbit_cosets(g, h);
    std::vector<int> coset_of(g->order());
    for (size_t c = 0; c < cosets.size(); ++c)
        for (int y : cosets[c]) coset_of[y] = static_cast<int>(c);
    std::vector<std::vector<int>> action(g->order(), std::vector<int>(cosets.size()));
    for (int a = 0; a < g->order(); ++a)
        for (size_t c = 0; c < cosets.size(); ++c)
            action[a][c] = coset_of[g->mul(a, cosets[c][0])];
    return GSet(g, std::move(action));
}

GSet product_gset(const GSet& x, const GSet& y) {
    if (x.group() != y.group() && x.group()->table() != y.group()->table())
        throw std::invalid_argument("product_gset: mismatched groups");
    const GroupPtr& g = x.group();
    int nx = x.size(), ny = y.size();
    std::vector<std::vector<int>> action(g->order(), std::vector<int>(nx * ny));
    for (int a = 0; a < g->order(); ++a)
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j)
                action[a][i * ny + j] = x.act(a, i) * ny + y.act(a, j);
    return GSet(g, std::move(action));
}

GSet disjoint_union_gset(const GSet& x, const GSet& y) {
    if (x.group() != y.group() && x.group()->table() != y.group()->table())
        throw std::invalid_argument("disjoint_union_gset: mismatched groups");
    const GroupPtr& g = x.group();
    int nx = x.size(), ny = y.size();
    std::vector<std::vector<int>> action(g->order(), std::vector<int>(nx + ny));
    for (int a = 0; a < g->order(); ++a) {
        for (int i = 0; i < nx; ++i) action[a][i] = x.act(a, i);
        for (int j = 0; j < ny; ++j) action[a][nx + j] = nx + y.act(a, j);
    }
    return GSet(g, std::move(action));
}

Subgroup point_stabilizer(const GSet& x, int point) {
    Subgroup s;
    for (int a = 0; a < x.group()->order(); ++a)
        if (x.act(a, point) == point) s.elements.push_back(a);
    return s;
}

std::vector<Orbit> orbits(const GSet& x) {
    std::vector<bool> seen(x.size(), false);
    std::vector<Orbit> out;
    for (int pt = 0; pt < x.size(); ++pt) {
        if (seen[pt]) continue;
        Orbit o;
        for (int a = 0; a < x.group()->order(); ++a) {
            int y = x.act(a, pt);
            if (!seen[y]) {
                seen[y] = true;
                o.points.push_back(y);
            }
        }
        std::sort(o.points.begin(), o.points.end());
        o.stabilizer = point_stabilizer(x, o.points[0]);
        out.push_back(std::move(o));
    }
    return out;
}

FixedPoints fixed_points(const GSet& x, const Subgroup& h) {
    WeylGroup weyl = weyl_group(x.group(), h);
    std::vector<int> embedding;
    for (int pt = 0; pt < x.size(); ++pt) {
        bool fixed = true;
        for (int a : h.elements)
            if (x.act(a, pt) != pt) {
                fixed = false;
                break;
            }
        if (fixed) embedding.push_back(pt);
    }
    int m = static_cast<int>(embedding.size());
    std::vector<int> back(x.size(), -1);
    for (int i = 0; i < m; ++i) back[embedding[i]] = i;
    const auto& cosets = weyl.cosets;
    std::vector<std::vector<int>> action(cosets.size(), std::vector<int>(m));
    for (size_t w = 0; w < cosets.size(); ++w) {
        for (int i = 0; i < m; ++i) {
            int img = x.act(cosets[w][0], embedding[i]);
            if (back[img] < 0)
                throw std::logic_error("fixed_points: normalizer does not preserve fixed set");
            action[w][i] = back[img];
        }
        // well-definedness: every representative of the coset acts the same way
        for (int rep : cosets[w])
            for (int i = 0; i < m; ++i)
                if (back[x.act(rep, embedding[i])] != action[w][i])
                    throw std::logic_error("fixed_points: action not well defined on cosets");
    }
    GSet fixed_set(weyl.group, std::move(action));
    return FixedPoints{std::move(weyl), std::move(fixed_set), std::move(embedding)};
}

GSet restrict_gset(const GSet& x, const EmbeddedGroup& s) {
    std::vector<std::vector<int>> action(s.group->order());
    for (int i = 0; i < s.group->order(); ++i) action[i] = x.action()[s.element_map[i]];
    return GSet(s.group, std::move(action));
}

std::vector<std::vector<int>> double_cosets(const GroupPtr& g, const Subgroup& k,
                                            const Subgroup& h) {
    std::vector<int> cls(g->order(), -1);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < g->order(); ++x) {
        if (cls[x] >= 0) continue;
        std::vector<int> members;
        for (int a : k.elements)
            for (int b : h.elements) {
                int y = g->mul(g->mul(a, x), b);
                if (cls[y] < 0) {
                    cls[y] = static_cast<int>(out.size());
                    members.push_back(y);
                }
            }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace permfp
