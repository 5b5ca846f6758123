#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace permfp {

// A finite group given by its full multiplication table over element indices
// 0..order-1, with 0 the identity.  Intended for small groups (order <= 128);
// construction validates the table exhaustively.
class FiniteGroup {
public:
    // table[a][b] = index of a*b.  Throws std::invalid_argument on a table
    // that is not a group (identity not at 0, non-Latin, or non-associative).
    FiniteGroup(std::string name, std::vector<std::vector<int>> table);

    const std::string& name() const { return name_; }
    int order() const { return n_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int a) const { return mul(mul(g, a), inv(g)); }  // g a g^-1
    const std::vector<std::vector<int>>& table() const { return table_; }

    int element_order(int a) const;
    bool is_abelian() const;

    // A small generating set, chosen greedily over increasing element index.
    const std::vector<int>& generators() const { return gens_; }

private:
    std::string name_;
    int n_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    std::vector<int> gens_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A subgroup is its sorted element list (always containing 0).
struct Subgroup {
    std::vector<int> elements;

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(int g) const;
    bool contains_subgroup(const Subgroup& other) const;
    auto operator<=>(const Subgroup& other) const = default;
};

Subgroup trivial_subgroup();
Subgroup full_subgroup(const FiniteGroup& g);

// Closure of a generating set under multiplication.
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);

// All subgroups, found by breadth-first single-generator extension, sorted by
// (order, element list).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, int x);  // x H x^-1
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& h);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

bool is_normal(const FiniteGroup& g, const Subgroup& h);
bool is_p_group_order(int order, int p);

// Is some conjugate of h contained in k?
bool subconjugate(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

// A conjugacy class of subgroups: canonical representative (minimal element
// list among members) plus all members sorted.
struct SubgroupClass {
    Subgroup representative;
    std::vector<Subgroup> members;
};

// Conjugacy classes of all subgroups, ordered by (order, representative
// element list).  This ordering is the coordinate system used by every
// class-function vector in the library.
std::vector<SubgroupClass> subgroup_classes(const FiniteGroup& g);

// Same, restricted to subgroups of p-power order.
std::vector<SubgroupClass> p_subgroup_classes(const FiniteGroup& g, int p);

// Index of the class containing h, or -1.
int class_index_of(const std::vector<SubgroupClass>& classes, const Subgroup& h);

// The subgroup S viewed as a standalone group.  element_map[i] is the parent
// index of the new group's element i (increasing, so 0 maps to 0).
struct EmbeddedGroup {
    GroupPtr group;
    std::vector<int> element_map;
};

EmbeddedGroup subgroup_group(const GroupPtr& g, const Subgroup& s);

// Quotient of a group by a normal subgroup.  Cosets are ordered by their
// minimal element; projection sends a parent element to its coset index.
struct QuotientGroup {
    GroupPtr group;
    std::vector<int> projection;           // size = parent order
    std::vector<std::vector<int>> cosets;  // coset -> sorted parent elements
    Subgroup kernel;
};

QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& n);

// Weyl group N_G(H)/H.  `normalizer` lists N_G(H) inside G; `projection` maps
// a G-element to its coset index, or -1 outside the normalizer.
struct WeylGroup {
    GroupPtr group;
    Subgroup normalizer_subgroup;
    std::vector<int> projection;           // size = |G|, -1 off N_G(H)
    std::vector<std::vector<int>> cosets;  // coset -> sorted G-elements
    Subgroup kernel;                       // H itself
};

WeylGroup weyl_group(const GroupPtr& g, const Subgroup& h);

// Isomorphism type of the section H/N (N normal in H) as far as the lattice
// conditions care: rank-2 elementary abelian, cyclic of order 4, cyclic of
// odd prime order, quaternion of order 8, or anything else.
enum class SectionType {
    ElemAbelianRank2,
    Cyclic4,
    CyclicOddP,
    Quaternion8,
    Other,
};

SectionType section_type(const GroupPtr& g, const Subgroup& n, const Subgroup& h, int p);

// For every K with H <= K <= N_G(H) and every L <= K not containing H,
// check that p divides [K:L].  H must have p-power order; the trivial
// subgroup passes vacuously.
bool index_divisibility_check(const GroupPtr& g, const Subgroup& h, int p);

// --- catalog -------------------------------------------------------------

// Build a named group.  Grammar: "C<n>" cyclic, "D8" dihedral of order 8,
// "Q8" quaternion, "V4" Klein four, and "x"-separated direct products
// ("C2xC2", "C3xC3", "C2xD8").  Throws std::invalid_argument on unknown
// names or if the product order exceeds 128.
GroupPtr catalog_group(const std::string& name);

GroupPtr make_group(std::string name, std::vector<std::vector<int>> table);

// Direct product with pairs (a, b) ordered lexicographically,
// index = a * |B| + b.
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

}  // namespace permfp
