#pragma once

#include "permfp/group.hpp"

#include <vector>

namespace permfp {

// A finite left G-set: points 0..size-1 with the action tabulated per group
// element.  Construction validates that the table is an action.
class GSet {
public:
    GSet(GroupPtr group, std::vector<std::vector<int>> action);

    static GSet empty(GroupPtr group);

    const GroupPtr& group() const { return group_; }
    int size() const { return size_; }
    int act(int g, int x) const { return action_[g][x]; }
    const std::vector<std::vector<int>>& action() const { return action_; }

    bool operator==(const GSet& rhs) const {
        return size_ == rhs.size_ && action_ == rhs.action_;
    }

private:
    GroupPtr group_;
    int size_;
    std::vector<std::vector<int>> action_;
};

// Transitive G-set of left cosets gH, ordered by minimal coset element; the
// action is left translation.
GSet orbit_gset(const GroupPtr& g, const Subgroup& h);

// coset_elements[i] = sorted members of the i-th coset of orbit_gset(g, h).
std::vector<std::vector<int>> orbit_cosets(const GroupPtr& g, const Subgroup& h);

// Product with the diagonal action; pairs ordered lexicographically,
// index = x * |Y| + y.
GSet product_gset(const GSet& x, const GSet& y);

// X then Y, with X's points first.
GSet disjoint_union_gset(const GSet& x, const GSet& y);

struct Orbit {
    std::vector<int> points;  // sorted; points[0] is the representative
    Subgroup stabilizer;      // stabilizer of the representative
};

// Orbit decomposition, ordered by minimal point.
std::vector<Orbit> orbits(const GSet& x);

Subgroup point_stabilizer(const GSet& x, int point);

// The fixed points X^H as a set over the Weyl group N_G(H)/H, together with
// the embedding back into X.
struct FixedPoints {
    WeylGroup weyl;
    GSet gset;                   // over weyl.group
    std::vector<int> embedding;  // increasing indices into X
};

FixedPoints fixed_points(const GSet& x, const Subgroup& h);

// The same points viewed as an S-set for a subgroup S <= G.
GSet restrict_gset(const GSet& x, const EmbeddedGroup& s);

// Double cosets K\G/H: for each class its sorted members; classes ordered by
// minimal element, which is the representative.
std::vector<std::vector<int>> double_cosets(const GroupPtr& g, const Subgroup& k,
                                            const Subgroup& h);

}  // namespace permfp
