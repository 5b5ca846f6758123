#include "permfp/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace permfp {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), n_(static_cast<int>(table.size())), table_(std::move(table)) {
    if (n_ == 0 || n_ > 128) throw std::invalid_argument("group order must be in 1..128");
    for (const auto& row : table_)
        if (static_cast<int>(row.size()) != n_)
            throw std::invalid_argument("multiplication table is not square");
    for (const auto& row : table_)
        for (int v : row)
            if (v < 0 || v >= n_) throw std::invalid_argument("table entry out of range");
    for (int a = 0; a < n_; ++a)
        if (table_[0][a] != a || table_[a][0] != a)
            throw std::invalid_argument("element 0 is not the identity");
    // Latin square: every row and column is a permutation
    for (int a = 0; a < n_; ++a) {
        std::vector<bool> seen_row(n_, false), seen_col(n_, false);
        for (int b = 0; b < n_; ++b) {
            if (seen_row[table_[a][b]]) throw std::invalid_argument("row is not a permutation");
            seen_row[table_[a][b]] = true;
            if (seen_col[table_[b][a]]) throw std::invalid_argument("column is not a permutation");
            seen_col[table_[b][a]] = true;
        }
    }
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw std::invalid_argument("table is not associative");
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (table_[a][b] == 0) inv_[a] = b;

    // greedy generating set
    Subgroup span = generated_subgroup(*this, {});
    for (int a = 1; a < n_ && span.order() < n_; ++a) {
        if (span.contains(a)) continue;
        std::vector<int> g = gens_;
        g.push_back(a);
        span = generated_subgroup(*this, g);
        gens_.push_back(a);
    }
}

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool Subgroup::contains(int g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
    return std::includes(elements.begin(), elements.end(), other.elements.begin(),
                         other.elements.end());
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup full_subgroup(const FiniteGroup& g) {
    Subgroup s;
    s.elements.resize(g.order());
    for (int i = 0; i < g.order(); ++i) s.elements[i] = i;
    return s;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<bool> in(g.order(), false);
    in[0] = true;
    std::vector<int> queue{0};
    for (int x : gens)
        if (!in[x]) {
            in[x] = true;
            queue.push_back(x);
        }
    for (size_t i = 0; i < queue.size(); ++i)
        for (size_t j = 0; j < queue.size(); ++j) {
            int prod = g.mul(queue[i], queue[j]);
            if (!in[prod]) {
                in[prod] = true;
                queue.push_back(prod);
            }
        }
    Subgroup s;
    for (int x = 0; x < g.order(); ++x)
        if (in[x]) s.elements.push_back(x);
    return s;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    std::vector<Subgroup> frontier{trivial_subgroup()};
    seen.insert(frontier[0].elements);
    out.push_back(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const Subgroup& s : frontier) {
            for (int x = 1; x < g.order(); ++x) {
                if (s.contains(x)) continue;
                std::vector<int> gens = s.elements;
                gens.push_back(x);
                Subgroup bigger = generated_subgroup(g, gens);
                if (seen.insert(bigger.elements).second) {
                    out.push_back(bigger);
                    next.push_back(bigger);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    });
    return out;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, int x) {
    Subgroup out;
    out.elements.reserve(h.elements.size());
    for (int a : h.elements) out.elements.push_back(g.conj(x, a));
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
    Subgroup out;
    for (int x = 0; x < g.order(); ++x)
        if (conjugate_subgroup(g, h, x).elements == h.elements) out.elements.push_back(x);
    return out;
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& h) {
    Subgroup out;
    for (int x = 0; x < g.order(); ++x) {
        bool central = true;
        for (int a : h.elements)
            if (g.mul(x, a) != g.mul(a, x)) {
                central = false;
                break;
            }
        if (central) out.elements.push_back(x);
    }
    return out;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    Subgroup out;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                          b.elements.end(), std::back_inserter(out.elements));
    return out;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
    for (int x = 0; x < g.order(); ++x)
        if (conjugate_subgroup(g, h, x).elements != h.elements) return false;
    return true;
}

bool is_p_group_order(int order, int p) {
    while (order % p == 0) order /= p;
    return order == 1;
}

bool subconjugate(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
    if (h.order() > k.order()) return false;
    for (int x = 0; x < g.order(); ++x)
        if (k.contains_subgroup(conjugate_subgroup(g, h, x))) return true;
    return false;
}

std::vector<SubgroupClass> subgroup_classes(const FiniteGroup& g) {
    std::vector<Subgroup> subs = all_subgroups(g);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < subs.size(); ++i) index[subs[i].elements] = static_cast<int>(i);
    std::vector<bool> used(subs.size(), false);
    std::vector<SubgroupClass> out;
    // subs is sorted by (order, elements), so scanning in order makes each
    // class representative the minimal member
    for (size_t i = 0; i < subs.size(); ++i) {
        if (used[i]) continue;
        SubgroupClass cls;
        cls.representative = subs[i];
        std::set<std::vector<int>> members;
        for (int x = 0; x < g.order(); ++x)
            members.insert(conjugate_subgroup(g, subs[i], x).elements);
        for (const auto& m : members) {
            used[index.at(m)] = true;
            cls.members.push_back(Subgroup{m});
        }
        out.push_back(std::move(cls));
    }
    return out;
}

std::vector<SubgroupClass> p_subgroup_classes(const FiniteGroup& g, int p) {
    std::vector<SubgroupClass> out;
    for (auto& cls : subgroup_classes(g))
        if (is_p_group_order(cls.representative.order(), p)) out.push_back(cls);
    return out;
}

int class_index_of(const std::vector<SubgroupClass>& classes, const Subgroup& h) {
    for (size_t i = 0; i < classes.size(); ++i)
        for (const Subgroup& m : classes[i].members)
            if (m.elements == h.elements) return static_cast<int>(i);
    return -1;
}

EmbeddedGroup subgroup_group(const GroupPtr& g, const Subgroup& s) {
    int m = s.order();
    std::vector<int> to_sub(g->order(), -1);
    for (int i = 0; i < m; ++i) to_sub[s.elements[i]] = i;
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int prod = g->mul(s.elements[i], s.elements[j]);
            if (to_sub[prod] < 0) throw std::invalid_argument("subgroup_group: set is not closed");
            table[i][j] = to_sub[prod];
        }
    EmbeddedGroup out;
    out.group = make_group(g->name() + "|sub" + std::to_string(m), std::move(table));
    out.element_map = s.elements;
    return out;
}

namespace {

// Shared coset machinery: cosets of h within the element subset `domain` of g
// (domain must be a union of left cosets of h), ordered by minimal element.
struct CosetDecomposition {
    std::vector<std::vector<int>> cosets;
    std::vector<int> coset_of;  // size |G|, -1 outside domain
};

CosetDecomposition left_cosets(const FiniteGroup& g, const Subgroup& h,
                               const std::vector<int>& domain) {
    CosetDecomposition d;
    d.coset_of.assign(g.order(), -1);
    std::vector<bool> in_domain(g.order(), false);
    for (int x : domain) in_domain[x] = true;
    for (int x : domain) {  // domain is sorted ascending
        if (d.coset_of[x] >= 0) continue;
        std::vector<int> coset;
        for (int a : h.elements) {
            int y = g.mul(x, a);
            if (!in_domain[y]) throw std::invalid_argument("domain is not a union of cosets");
            coset.push_back(y);
        }
        std::sort(coset.begin(), coset.end());
        int idx = static_cast<int>(d.cosets.size());
        for (int y : coset) d.coset_of[y] = idx;
        d.cosets.push_back(std::move(coset));
    }
    return d;
}

GroupPtr coset_group(const std::string& name, const FiniteGroup& g,
                     const CosetDecomposition& d) {
    int m = static_cast<int>(d.cosets.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            table[i][j] = d.coset_of[g.mul(d.cosets[i][0], d.cosets[j][0])];
    return make_group(name, std::move(table));
}

}  // namespace

QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& n) {
    if (!is_normal(*g, n)) throw std::invalid_argument("quotient_group: subgroup is not normal");
    std::vector<int> domain(g->order());
    for (int i = 0; i < g->order(); ++i) domain[i] = i;
    CosetDecomposition d = left_cosets(*g, n, domain);
    QuotientGroup q;
    q.group = coset_group(g->name() + "/N" + std::to_string(n.order()), *g, d);
    q.projection = d.coset_of;
    q.cosets = d.cosets;
    q.kernel = n;
    return q;
}

WeylGroup weyl_group(const GroupPtr& g, const Subgroup& h) {
    Subgroup n = normalizer(*g, h);
    CosetDecomposition d = left_cosets(*g, h, n.elements);
    WeylGroup w;
    w.group = coset_group(g->name() + "//H" + std::to_string(h.order()), *g, d);
    w.normalizer_subgroup = n;
    w.projection = d.coset_of;
    w.cosets = d.cosets;
    w.kernel = h;
    return w;
}

namespace {

bool section_is_cyclic(const FiniteGroup& q) {
    for (int a = 0; a < q.order(); ++a)
        if (q.element_order(a) == q.order()) return true;
    return false;
}

int count_order2(const FiniteGroup& q) {
    int c = 0;
    for (int a = 1; a < q.order(); ++a)
        if (q.mul(a, a) == 0) ++c;
    return c;
}

}  // namespace

SectionType section_type(const GroupPtr& g, const Subgroup& n, const Subgroup& h, int p) {
    if (!h.contains_subgroup(n)) throw std::invalid_argument("section_type: N is not inside H");
    if (!is_p_group_order(n.order(), p) || !is_p_group_order(h.order(), p))
        throw std::invalid_argument("section_type: not p-subgroups");
    EmbeddedGroup hh = subgroup_group(g, h);
    std::vector<int> to_sub(g->order(), -1);
    for (size_t i = 0; i < hh.element_map.size(); ++i) to_sub[hh.element_map[i]] = static_cast<int>(i);
    Subgroup n_in_h;
    for (int x : n.elements) n_in_h.elements.push_back(to_sub[x]);
    std::sort(n_in_h.elements.begin(), n_in_h.elements.end());
    if (!is_normal(*hh.group, n_in_h))
        throw std::invalid_argument("section_type: N is not normal in H");
    QuotientGroup q = quotient_group(hh.group, n_in_h);
    const FiniteGroup& s = *q.group;
    int m = s.order();
    if (m == p * p && s.is_abelian() && !section_is_cyclic(s)) return SectionType::ElemAbelianRank2;
    if (m == 4 && section_is_cyclic(s)) return SectionType::Cyclic4;
    if (p != 2 && m == p) return SectionType::CyclicOddP;
    if (m == 8 && !s.is_abelian() && count_order2(s) == 1) return SectionType::Quaternion8;
    return SectionType::Other;
}

bool index_divisibility_check(const GroupPtr& g, const Subgroup& h, int p) {
    if (!is_p_group_order(h.order(), p))
        throw std::invalid_argument("index_divisibility_check: H is not a p-subgroup");
    Subgroup n = normalizer(*g, h);
    EmbeddedGroup ng = subgroup_group(g, n);
    std::vector<Subgroup> subs = all_subgroups(*ng.group);
    // lift back to ambient element labels
    auto lift = [&](const Subgroup& s) {
        Subgroup out;
        for (int x : s.elements) out.elements.push_back(ng.element_map[x]);
        std::sort(out.elements.begin(), out.elements.end());
        return out;
    };
    for (const Subgroup& k_sub : subs) {
        Subgroup k = lift(k_sub);
        if (!k.contains_subgroup(h)) continue;
        // candidate L's are subgroups of K; enumerate within K
        EmbeddedGroup kg = subgroup_group(g, k);
        for (const Subgroup& l_sub : all_subgroups(*kg.group)) {
            Subgroup l;
            for (int x : l_sub.elements) l.elements.push_back(kg.element_map[x]);
            std::sort(l.elements.begin(), l.elements.end());
            if (l.contains_subgroup(h)) continue;
            if ((k.order() / l.order()) % p != 0) return false;
        }
    }
    return true;
}

// --- catalog -------------------------------------------------------------

GroupPtr make_group(std::string name, std::vector<std::vector<int>> table) {
    return std::make_shared<FiniteGroup>(std::move(name), std::move(table));
}

namespace {

GroupPtr cyclic_group(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return make_group("C" + std::to_string(n), std::move(t));
}

// Elements r^i s^j indexed i + 4j, so 0..3 are the rotations.
GroupPtr dihedral8() {
    auto idx = [](int i, int j) { return ((i % 4) + 4) % 4 + 4 * (j % 2); };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 2; ++l)
                    t[idx(i, j)][idx(k, l)] = idx(j ? i - k : i + k, j + l);
    return make_group("D8", std::move(t));
}

// Order: 1, -1, i, -i, j, -j, k, -k.
GroupPtr quaternion8() {
    // multiplication encoded via (sign, axis): axis 0 is the scalar 1
    auto enc = [](int sign, int axis) { return 2 * axis + (sign < 0 ? 1 : 0); };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    // axis multiplication table and resulting sign for axes 0..3 = 1,i,j,k
    static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int sa = (a % 2) ? -1 : 1, xa = a / 2;
            int sb = (b % 2) ? -1 : 1, xb = b / 2;
            t[a][b] = enc(sa * sb * sg[xa][xb], ax[xa][xb]);
        }
    return make_group("Q8", std::move(t));
}

}  // namespace

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    int na = a->order(), nb = b->order();
    if (na * nb > 128) throw std::invalid_argument("direct product order exceeds 128");
    std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
    for (int a1 = 0; a1 < na; ++a1)
        for (int b1 = 0; b1 < nb; ++b1)
            for (int a2 = 0; a2 < na; ++a2)
                for (int b2 = 0; b2 < nb; ++b2)
                    t[a1 * nb + b1][a2 * nb + b2] = a->mul(a1, a2) * nb + b->mul(b1, b2);
    return make_group(a->name() + "x" + b->name(), std::move(t));
}

GroupPtr catalog_group(const std::string& name) {
    size_t x = name.find('x');
    if (x != std::string::npos) {
        GroupPtr left = catalog_group(name.substr(0, x));
        GroupPtr right = catalog_group(name.substr(x + 1));
        return direct_product(left, right);
    }
    if (name == "D8") return dihedral8();
    if (name == "Q8") return quaternion8();
    if (name == "V4") {
        GroupPtr v = direct_product(cyclic_group(2), cyclic_group(2));
        return make_group("V4", v->table());
    }
    if (name.size() >= 2 && name[0] == 'C') {
        int n = 0;
        for (size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9')
                throw std::invalid_argument("unknown group name: " + name);
            n = n * 10 + (name[i] - '0');
        }
        if (n < 1 || n > 128) throw std::invalid_argument("cyclic order out of range: " + name);
        return cyclic_group(n);
    }
    throw std::invalid_argument("unknown group name: " + name);
}

}  // namespace permfp
