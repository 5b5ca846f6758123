#pragma once

#include "permfp/group.hpp"
#include "permfp/intlattice.hpp"

#include <map>
#include <vector>

namespace permfp {

// The canonical coordinate system for integer class functions on p-subgroup
// classes: classes ordered by (order, representative element list).
struct PSubgroupClasses {
    GroupPtr group;
    int p;
    std::vector<SubgroupClass> classes;
    std::map<std::vector<int>, int> index;  // subgroup elements -> class position

    int size() const { return static_cast<int>(classes.size()); }
    int index_of(const Subgroup& h) const;
};

PSubgroupClasses p_classes(const GroupPtr& g, int p);

// Integer-valued function on the classes, in canonical coordinate order.
struct ClassFunction {
    GroupPtr group;
    int p;
    std::vector<long long> values;

    bool operator==(const ClassFunction& rhs) const {
        return p == rhs.p && values == rhs.values && group->table() == rhs.group->table();
    }
};

ClassFunction cf_zero(const PSubgroupClasses& ctx);
ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_sub(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_scale(long long c, const ClassFunction& a);

// omega_P(H) = 1 if H is subconjugate to P, else 0.  These form a basis of
// the full class-function lattice, unitriangular against the class order.
ClassFunction omega(const PSubgroupClasses& ctx, const Subgroup& P);

enum class BorelSmithCondition {
    ElemAbelianRank2,  // h(N) - sum of intermediate h(K) + p h(H) = 0
    CyclicMod2,        // h(N) = h(K) mod 2 (odd-p cyclic or cyclic of order 4)
    QuaternionMod4,    // h(N) = h(K) mod 4
};

struct BorelSmithViolation {
    Subgroup n;
    Subgroup h;
    BorelSmithCondition condition;
};

struct BorelSmithReport {
    bool ok;
    std::vector<BorelSmithViolation> violations;
};

BorelSmithReport borel_smith_check(const PSubgroupClasses& ctx, const ClassFunction& h);

// An integer sublattice of the class-function lattice, generated by the
// columns of `basis`.
struct LatticeBasis {
    IntMat basis;  // n x r, columns generate
    int rank;
    Int index;  // [Z^n : L] when rank == n, otherwise 0
};

// The lattice of class functions satisfying every Borel-Smith condition.
// Computed exactly: congruences become auxiliary integer columns and the
// kernel is extracted in Smith form.
LatticeBasis cfb_basis(const PSubgroupClasses& ctx);

bool lattice_contains(const LatticeBasis& l, const std::vector<long long>& v);
bool lattice_member(const LatticeBasis& l, const ClassFunction& h);

LatticeBasis lattice_from_vectors(const std::vector<std::vector<long long>>& vectors);

// Equality as sublattices of Z^n (mutual containment).
bool lattices_equal(const LatticeBasis& a, const LatticeBasis& b);

}  // namespace permfp
