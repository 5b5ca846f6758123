#include "permfp/picard.hpp"

#include "permfp/brauer.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permfp {

namespace {

int sylow_order(const FiniteGroup& g, int p) {
    int n = g.order();
    int q = 1;
    while (n % p == 0) {
        n /= p;
        q *= p;
    }
    return q;
}

std::string describe(const PSubgroupClasses& ctx, int cls) {
    std::ostringstream os;
    os << "class P" << cls << " (order " << ctx.classes[cls].representative.order() << ")";
    return os.str();
}

}  // namespace

MarksReport marks(const Complex& x) {
    MarksReport report;
    report.classes = p_classes(x.group(), x.p());
    report.in_lambda = true;
    report.invertible = true;

    const int sylow = sylow_order(*x.group(), x.p());
    std::vector<long long> degrees(report.classes.size(), 0);

    for (int c = 0; c < report.classes.size(); ++c) {
        const Subgroup& h = report.classes.classes[c].representative;
        const Complex quotient = brauer_complex(x, h).complex;
        MarkEntry entry{c, {}};
        for (const auto& [deg, dim] : homology_dims(quotient))
            if (dim > 0) entry.support.push_back({deg, dim});

        const bool at_sylow = h.order() == sylow;
        if (entry.support.size() != 1) {
            report.in_lambda = false;
            report.invertible = false;
            if (report.witness_class < 0) {
                report.witness_class = c;
                report.reason = describe(report.classes, c) +
                                (entry.support.empty() ? ": homology vanishes everywhere"
                                                       : ": homology in several degrees");
            }
        } else {
            degrees[c] = entry.support[0].first;
            const int dim = entry.support[0].second;
            if (dim != 1) {
                report.invertible = false;
                if (at_sylow) report.in_lambda = false;
                if (report.witness_class < 0) {
                    std::ostringstream os;
                    os << describe(report.classes, c) << ": homology has dimension " << dim
                       << " in degree " << entry.support[0].first;
                    report.witness_class = c;
                    report.reason = os.str();
                }
            }
        }
        report.entries.push_back(std::move(entry));
    }

    if (report.in_lambda)
        report.lambda = ClassFunction{x.group(), x.p(), std::move(degrees)};
    return report;
}

bool in_lambda(const Complex& x) { return marks(x).in_lambda; }

bool invertible(const Complex& x) { return marks(x).invertible; }

std::optional<ClassFunction> lambda_of(const Complex& x) {
    auto report = marks(x);
    if (!report.in_lambda) return std::nullopt;
    return report.lambda;
}

ClassFunction theta(const Complex& x) {
    MarksReport report = marks(x);
    if (!report.invertible)
        throw std::invalid_argument("theta needs an invertible complex: " + report.reason);
    ClassFunction h = *report.lambda;
    if (!borel_smith_check(report.classes, h).ok)
        throw std::logic_error("dimension function of an invertible complex "
                               "violates a Borel-Smith condition");
    return h;
}

Complex generator_complex(const GroupPtr& g, int p, const Subgroup& P) {
    if (!is_p_group_order(P.order(), p))
        throw std::invalid_argument("generator subgroup must have p-power order");
    if (P.order() == sylow_order(*g, p)) return shift(Complex::unit(g, p), 1);

    PermModule top = orbit_module(g, P, p);
    PermModule bottom = trivial_module(g, p);
    FpMatrix aug(1, top.dim(), p);
    for (int j = 0; j < top.dim(); ++j) aug.set(0, j, 1);

    std::map<int, PermModule> modules{{1, top}, {0, bottom}};
    std::map<int, EquivMap> diffs;
    diffs.emplace(1, EquivMap(top, bottom, aug));
    return Complex(g, p, std::move(modules), std::move(diffs));
}

namespace {

Complex two_term_sign(const GroupPtr& g, int p, const Subgroup& kernel) {
    PermModule top = orbit_module(g, kernel, p);
    PermModule bottom = trivial_module(g, p);
    FpMatrix aug(1, top.dim(), p);
    for (int j = 0; j < top.dim(); ++j) aug.set(0, j, 1);
    std::map<int, PermModule> modules{{1, top}, {0, bottom}};
    std::map<int, EquivMap> diffs;
    diffs.emplace(1, EquivMap(top, bottom, aug));
    return Complex(g, p, std::move(modules), std::move(diffs));
}

}  // namespace

std::vector<CatalogSphere> sphere_catalog(const GroupPtr& g, int p) {
    if (p != 2) throw std::invalid_argument("sphere catalog is built at p = 2");
    const int n = g->order();
    std::vector<CatalogSphere> out;

    if (n == 2) {
        out.push_back({"sign", two_term_sign(g, p, trivial_subgroup())});
        return out;
    }

    if (n == 4) {
        std::vector<Subgroup> order2;
        for (const auto& s : all_subgroups(*g))
            if (s.order() == 2) order2.push_back(s);

        if (order2.size() == 1) {  // cyclic of order 4
            out.push_back({"inflated-sign", two_term_sign(g, p, order2[0])});

            // Rotation sphere: free resolution of length two, with the top
            // differential 1 - g for a generator g of order 4.
            int gen = -1;
            for (int a = 1; a < 4; ++a)
                if (g->element_order(a) == 4) {
                    gen = a;
                    break;
                }
            PermModule free = orbit_module(g, trivial_subgroup(), p);
            PermModule bottom = trivial_module(g, p);
            FpMatrix d2(4, 4, p);
            for (int x = 0; x < 4; ++x) {
                d2.add_at(x, x, 1);
                d2.add_at(g->mul(gen, x), x, p - 1);
            }
            FpMatrix aug(1, 4, p);
            for (int j = 0; j < 4; ++j) aug.set(0, j, 1);
            std::map<int, PermModule> modules{{2, free}, {1, free}, {0, bottom}};
            std::map<int, EquivMap> diffs;
            diffs.emplace(2, EquivMap(free, free, d2));
            diffs.emplace(1, EquivMap(free, bottom, aug));
            out.push_back({"rotation", Complex(g, p, std::move(modules), std::move(diffs))});
            return out;
        }

        if (order2.size() == 3) {  // Klein four group
            for (size_t i = 0; i < order2.size(); ++i) {
                std::ostringstream label;
                label << "sign-" << i;
                out.push_back({label.str(), two_term_sign(g, p, order2[i])});
            }
            return out;
        }
    }

    throw std::invalid_argument("no sphere catalog for this group");
}

}  // namespace permfp
