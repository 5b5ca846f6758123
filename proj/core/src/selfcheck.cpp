#include "permfp/selfcheck.hpp"

#include "permfp/brauer.hpp"
#include "permfp/io.hpp"
#include "permfp/picard.hpp"
#include "permfp/span.hpp"

#include <functional>

namespace permfp {

namespace {

// Each check either returns a failure message or an empty string.
using Check = std::function<std::string()>;

void run(std::vector<CheckResult>& out, const std::string& name, const Check& fn) {
    try {
        std::string detail = fn();
        out.push_back({name, detail.empty(), detail});
    } catch (const std::exception& e) {
        out.push_back({name, false, e.what()});
    }
}

std::string subgroup_lattice(const GroupPtr& g) {
    const auto subs = all_subgroups(*g);
    size_t classed = 0;
    for (const auto& cls : subgroup_classes(*g)) classed += cls.members.size();
    if (classed != subs.size()) return "conjugacy classes do not partition the subgroups";
    for (const auto& h : subs) {
        if (g->order() % h.order() != 0) return "subgroup order does not divide the group order";
        const Subgroup n = normalizer(*g, h);
        if (!n.contains_subgroup(h)) return "normalizer does not contain its subgroup";
        const WeylGroup w = weyl_group(g, h);
        if (w.group->order() * h.order() != n.order()) return "Weyl group has the wrong order";
    }
    return "";
}

std::string double_cosets_vs_hom(const GroupPtr& g, int p) {
    for (const auto& ck : subgroup_classes(*g)) {
        for (const auto& ch : subgroup_classes(*g)) {
            const Subgroup& k = ck.representative;
            const Subgroup& h = ch.representative;
            const auto dc = double_cosets(g, k, h);
            const PermModule mh = orbit_module(g, h, p);
            const PermModule mk = orbit_module(g, k, p);
            if (hom_basis(mh, mk).size() != dc.size())
                return "hom dimension differs from the double coset count";
            const auto orb = orbits(product_gset(mk.basis, mh.basis));
            if (orb.size() != dc.size())
                return "product orbit count differs from the double coset count";
        }
    }
    return "";
}

std::string mackey_stabilizers(const GroupPtr& g) {
    const auto classes = subgroup_classes(*g);
    for (const auto& ck : classes) {
        for (const auto& ch : classes) {
            const Subgroup& k = ck.representative;
            const Subgroup& h = ch.representative;
            const auto ck_cosets = orbit_cosets(g, k);
            const auto ch_cosets = orbit_cosets(g, h);
            const GSet prod = product_gset(orbit_gset(g, k), orbit_gset(g, h));
            size_t total = 0;
            for (const auto& orbit : orbits(prod)) {
                total += orbit.points.size();
                const int c1 = orbit.points[0] / static_cast<int>(ch_cosets.size());
                const int c2 = orbit.points[0] % static_cast<int>(ch_cosets.size());
                const Subgroup expect =
                    intersect(conjugate_subgroup(*g, k, ck_cosets[c1][0]),
                              conjugate_subgroup(*g, h, ch_cosets[c2][0]));
                if (orbit.stabilizer != expect)
                    return "orbit stabilizer is not the double-coset intersection";
            }
            if (total != ck_cosets.size() * ch_cosets.size())
                return "orbit sizes do not add up";
        }
    }
    return "";
}

std::string fixed_point_counts(const GroupPtr& g, int p) {
    const auto classes = p_subgroup_classes(*g, p);
    for (const auto& chc : classes) {
        for (const auto& cpc : classes) {
            const Subgroup& h = chc.representative;
            const Subgroup& pp = cpc.representative;
            int transporter = 0;
            for (int x = 0; x < g->order(); ++x)
                if (pp.contains_subgroup(conjugate_subgroup(*g, h, g->inv(x)))) ++transporter;
            const auto fixed = fixed_points(orbit_gset(g, pp), h);
            if (static_cast<int>(fixed.embedding.size()) * pp.order() != transporter)
                return "fixed coset count differs from the transporter count";
        }
    }
    return "";
}

std::string projection_ideal(const GroupPtr& g, int p) {
    for (const auto& cls : subgroup_classes(*g)) {
        const Subgroup& h = cls.representative;
        for (const auto& k : all_subgroups(*g)) {
            if (!h.contains_subgroup(k)) continue;
            const FpMatrix got = linearise(projection_span(g, h, k), p);
            const int index = h.order() / k.order();
            const FpMatrix want = FpMatrix::identity(got.rows(), p).scaled(index);
            if (got != want) return "projection span does not linearise to [H:K] id";
        }
    }
    return "";
}

std::string generator_marks(const GroupPtr& g, int p) {
    const auto ctx = p_classes(g, p);
    for (const auto& cls : ctx.classes) {
        const MarksReport report = marks(generator_complex(g, p, cls.representative));
        if (!report.in_lambda) return "generator complex marks are not concentrated";
        if (!(*report.lambda == omega(ctx, cls.representative)))
            return "generator complex marks differ from the subconjugacy indicator";
    }
    return "";
}

std::string brauer_oracle_agreement(const GroupPtr& g, int p) {
    const auto ctx = p_classes(g, p);
    for (const auto& cm : ctx.classes) {
        const PermModule m = orbit_module(g, cm.representative, p);
        const auto basis = hom_basis(m, m);
        for (const auto& ch : ctx.classes) {
            for (const auto& f : basis) {
                const EquivMap fast = brauer_map(f, ch.representative);
                const EquivMap slow = brauer_map_oracle(f, ch.representative);
                if (fast.matrix != slow.matrix) return "projection rule disagrees with the oracle";
            }
        }
    }
    return "";
}

std::string unit_homology(const GroupPtr& g, int p) {
    const Complex unit = Complex::unit(g, p);
    const auto dims = homology_dims(unit);
    if (dims.size() != 1 || dims.count(0) == 0 || dims.at(0) != 1)
        return "unit complex homology is not one-dimensional in degree 0";
    const MarksReport report = marks(unit);
    if (!report.invertible) return "unit complex is not invertible";
    for (long long v : report.lambda->values)
        if (v != 0) return "unit complex marks are not all in degree 0";
    return "";
}

std::string duality_identities(const GroupPtr& g, int p) {
    Complex x = Complex::unit(g, p);
    const auto ctx = p_classes(g, p);
    if (ctx.size() > 1) x = generator_complex(g, p, ctx.classes[0].representative);
    if (!(dual(dual(x)) == x)) return "double dual is not the identity";
    if (!(shift(shift(x, 3), -3) == x)) return "shifts do not cancel";
    if (!(tensor(x, Complex::unit(g, p)) == x)) return "tensoring with the unit changes the complex";
    const auto base = homology_dims(x);
    const auto shifted = homology_dims(shift(x, 2));
    for (const auto& [n, d] : base)
        if (shifted.count(n + 2) == 0 || shifted.at(n + 2) != d)
            return "homology does not follow the shift";
    return "";
}

std::string perturbation_marks(const GroupPtr& g, int p) {
    const Complex x = random_complex(g, p, 1234);
    const Complex y = perturb_homotopy(x, 99);
    const MarksReport a = marks(x);
    const MarksReport b = marks(y);
    for (size_t i = 0; i < a.entries.size(); ++i)
        if (a.entries[i].support != b.entries[i].support)
            return "marks changed under a contractible perturbation";
    return "";
}

std::string cfb_consistency(const GroupPtr& g, int p) {
    const auto ctx = p_classes(g, p);
    const LatticeBasis cfb = cfb_basis(ctx);
    if (cfb.rank < 1) return "class function lattice has rank zero";
    for (int j = 0; j < cfb.rank; ++j) {
        ClassFunction h = cf_zero(ctx);
        for (int i = 0; i < ctx.size(); ++i)
            h.values[i] = static_cast<long long>(cfb.basis[i][j]);
        if (!borel_smith_check(ctx, h).ok) return "a lattice basis vector fails its own conditions";
    }
    if (!lattice_contains(cfb, std::vector<long long>(ctx.size(), 1)))
        return "the constant function is missing from the lattice";
    return "";
}

std::string index_divisibility(const GroupPtr& g, int p) {
    for (const auto& cls : p_subgroup_classes(*g, p))
        if (!index_divisibility_check(g, cls.representative, p))
            return "index divisibility fails for a p-subgroup";
    return "";
}

std::string io_round_trip(const GroupPtr& g, int p) {
    const auto ctx = p_classes(g, p);
    const Subgroup rep = ctx.classes[0].representative;
    const Complex x = generator_complex(g, p, rep);
    const Complex y = complex_from_json(complex_to_json(x));
    const MarksReport a = marks(x);
    const MarksReport b = marks(y);
    for (size_t i = 0; i < a.entries.size(); ++i)
        if (a.entries[i].support != b.entries[i].support)
            return "marks changed across a serialization round trip";
    if (complex_to_json(y) != complex_to_json(x)) return "serialization is not stable";
    return "";
}

}  // namespace

std::vector<CheckResult> run_selfcheck(const GroupPtr& g, int p) {
    std::vector<CheckResult> out;
    run(out, "subgroup-lattice", [&] { return subgroup_lattice(g); });
    run(out, "double-cosets-vs-hom", [&] { return double_cosets_vs_hom(g, p); });
    run(out, "mackey-stabilizers", [&] { return mackey_stabilizers(g); });
    run(out, "fixed-point-counts", [&] { return fixed_point_counts(g, p); });
    run(out, "projection-ideal", [&] { return projection_ideal(g, p); });
    run(out, "generator-marks", [&] { return generator_marks(g, p); });
    run(out, "brauer-oracle", [&] { return brauer_oracle_agreement(g, p); });
    run(out, "unit-homology", [&] { return unit_homology(g, p); });
    run(out, "duality-identities", [&] { return duality_identities(g, p); });
    run(out, "perturbation-marks", [&] { return perturbation_marks(g, p); });
    run(out, "cfb-consistency", [&] { return cfb_consistency(g, p); });
    run(out, "index-divisibility", [&] { return index_divisibility(g, p); });
    run(out, "io-round-trip", [&] { return io_round_trip(g, p); });
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.ok) return false;
    return true;
}

}  // namespace permfp
