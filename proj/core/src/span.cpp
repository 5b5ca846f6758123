#include "permfp/span.hpp"

#include <algorithm>
#include <stdexcept>

namespace permfp {

Span::Span(GSet left_, GSet apex_, GSet right_, std::vector<int> a_, std::vector<int> b_)
    : left(std::move(left_)),
      apex(std::move(apex_)),
      right(std::move(right_)),
      a(std::move(a_)),
      b(std::move(b_)) {
    if (static_cast<int>(a.size()) != apex.size() || static_cast<int>(b.size()) != apex.size())
        throw std::invalid_argument("Span: leg size mismatch");
    for (int v : a)
        if (v < 0 || v >= left.size()) throw std::invalid_argument("Span: left leg out of range");
    for (int v : b)
        if (v < 0 || v >= right.size()) throw std::invalid_argument("Span: right leg out of range");
    const GroupPtr& g = apex.group();
    for (int e : g->generators())
        for (int s = 0; s < apex.size(); ++s) {
            if (a[apex.act(e, s)] != left.act(e, a[s]))
                throw std::invalid_argument("Span: left leg is not equivariant");
            if (b[apex.act(e, s)] != right.act(e, b[s]))
                throw std::invalid_argument("Span: right leg is not equivariant");
        }
}

namespace {

SpanAtom canonical_atom(const GroupPtr& g, const Subgroup& stab, int left_img, int right_img,
                        const GSet& left, const GSet& right) {
    SpanAtom best;
    bool first = true;
    for (int x = 0; x < g->order(); ++x) {
        SpanAtom cand;
        cand.stabilizer = conjugate_subgroup(*g, stab, x).elements;
        cand.left_image = left.act(x, left_img);
        cand.right_image = right.act(x, right_img);
        if (first || cand < best) {
            best = std::move(cand);
            first = false;
        }
    }
    return best;
}

}  // namespace

BurnsideElement canonicalize(const Span& s) {
    BurnsideElement e{s.left, s.right, {}};
    for (const Orbit& o : orbits(s.apex)) {
        SpanAtom atom = canonical_atom(s.apex.group(), o.stabilizer, s.a[o.points[0]],
                                       s.b[o.points[0]], s.left, s.right);
        e.coeffs[atom] += 1;
    }
    return e;
}

BurnsideElement identity_element(const GSet& x) {
    std::vector<int> id(x.size());
    for (int i = 0; i < x.size(); ++i) id[i] = i;
    return canonicalize(Span(x, x, x, id, id));
}

Span projection_span(const GroupPtr& g, const Subgroup& h, const Subgroup& k) {
    if (!h.contains_subgroup(k))
        throw std::invalid_argument("projection_span: K must be contained in H");
    GSet gh = orbit_gset(g, h);
    GSet gk = orbit_gset(g, k);
    std::vector<std::vector<int>> h_cosets = orbit_cosets(g, h);
    std::vector<std::vector<int>> k_cosets = orbit_cosets(g, k);
    std::vector<int> h_coset_of(g->order());
    for (size_t c = 0; c < h_cosets.size(); ++c)
        for (int y : h_cosets[c]) h_coset_of[y] = static_cast<int>(c);
    std::vector<int> proj(gk.size());
    for (size_t c = 0; c < k_cosets.size(); ++c) proj[c] = h_coset_of[k_cosets[c][0]];
    return Span(gh, gk, gh, proj, proj);
}

BurnsideElement add(const BurnsideElement& x, const BurnsideElement& y) {
    BurnsideElement out = x;
    for (const auto& [atom, c] : y.coeffs) {
        out.coeffs[atom] += c;
        if (out.coeffs[atom] == 0) out.coeffs.erase(atom);
    }
    return out;
}

BurnsideElement scale(long long c, const BurnsideElement& x) {
    BurnsideElement out{x.left, x.right, {}};
    if (c != 0)
        for (const auto& [atom, v] : x.coeffs) out.coeffs[atom] = c * v;
    return out;
}

BurnsideElement compose(const Span& s, const Span& t) {
    if (t.right.action() != s.left.action())
        throw std::invalid_argument("compose: middle boundaries do not match");
    const GroupPtr& g = t.apex.group();
    // fibre product over the middle: pairs (u in t.apex, v in s.apex) with
    // t.b(u) = s.a(v), in lexicographic order
    std::vector<std::pair<int, int>> points;
    for (int u = 0; u < t.apex.size(); ++u)
        for (int v = 0; v < s.apex.size(); ++v)
            if (t.b[u] == s.a[v]) points.emplace_back(u, v);
    std::map<std::pair<int, int>, int> index;
    for (size_t i = 0; i < points.size(); ++i) index[points[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> action(g->order(), std::vector<int>(points.size()));
    for (int e = 0; e < g->order(); ++e)
        for (size_t i = 0; i < points.size(); ++i)
            action[e][i] = index.at({t.apex.act(e, points[i].first), s.apex.act(e, points[i].second)});
    GSet apex(g, std::move(action));
    std::vector<int> a(points.size()), b(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        a[i] = t.a[points[i].first];
        b[i] = s.b[points[i].second];
    }
    return canonicalize(Span(t.left, std::move(apex), s.right, std::move(a), std::move(b)));
}

Span atom_span(const GroupPtr& g, const SpanAtom& atom, const GSet& left, const GSet& right) {
    Subgroup stab{atom.stabilizer};
    GSet apex = orbit_gset(g, stab);
    std::vector<std::vector<int>> cosets = orbit_cosets(g, stab);
    std::vector<int> a(apex.size()), b(apex.size());
    for (int c = 0; c < apex.size(); ++c) {
        int rep = cosets[c][0];
        a[c] = left.act(rep, atom.left_image);
        b[c] = right.act(rep, atom.right_image);
    }
    return Span(left, std::move(apex), right, std::move(a), std::move(b));
}

BurnsideElement compose(const BurnsideElement& s, const BurnsideElement& t) {
    if (t.right.action() != s.left.action())
        throw std::invalid_argument("compose: middle boundaries do not match");
    BurnsideElement out{t.left, s.right, {}};
    const GroupPtr& g = t.left.group();
    for (const auto& [satom, sc] : s.coeffs)
        for (const auto& [tatom, tc] : t.coeffs) {
            Span ss = atom_span(g, satom, s.left, s.right);
            Span tt = atom_span(g, tatom, t.left, t.right);
            out = add(out, scale(sc * tc, compose(ss, tt)));
        }
    return out;
}

FpMatrix linearise(const Span& s, int p) {
    FpMatrix m(s.right.size(), s.left.size(), p);
    for (int u = 0; u < s.apex.size(); ++u) m.add_at(s.b[u], s.a[u], 1);
    return m;
}

FpMatrix linearise(const BurnsideElement& e, int p) {
    FpMatrix m(e.right.size(), e.left.size(), p);
    const GroupPtr& g = e.left.group();
    for (const auto& [atom, c] : e.coeffs) {
        Span s = atom_span(g, atom, e.left, e.right);
        FpMatrix part = linearise(s, p);
        m = m + part.scaled(c);
    }
    return m;
}

}  // namespace permfp
