// permfp: exact computations with permutation modules of a finite group.
//
// Verbs: group, subgroups, cfb, omega, marks, invertible, gens, brauer,
// realize, check.  All arithmetic is exact (GF(p) or arbitrary-precision
// integers); all output is deterministic for fixed inputs and options.
//
// Exit codes: 0 = success / property holds, 2 = property definitely fails
// (not invertible, no witness within budget, self-check failure),
// 1 = bad input or internal error.

#include "permfp/brauer.hpp"
#include "permfp/class_function.hpp"
#include "permfp/io.hpp"
#include "permfp/picard.hpp"
#include "permfp/search.hpp"
#include "permfp/selfcheck.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace permfp;

// A group argument is a catalog name ("Q8", "C2xC2", ...) or a path to a
// group JSON file.  Anything with a path separator or a .json suffix is
// treated as a file.
GroupPtr load_group(const std::string& arg) {
    bool looks_like_file = arg.find('/') != std::string::npos ||
                           (arg.size() > 5 && arg.compare(arg.size() - 5, 5, ".json") == 0);
    if (!looks_like_file) {
        try {
            return catalog_group(arg);
        } catch (const std::invalid_argument&) {
            if (!std::filesystem::exists(arg)) throw;
        }
    }
    return group_from_json(read_file(arg));
}

std::string elements_str(const std::vector<int>& xs) {
    std::string out = "{";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(xs[i]);
    }
    return out + "}";
}

std::string vector_str(const std::vector<long long>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

std::string support_str(const MarkEntry& e) {
    if (e.support.empty()) return "zero";
    std::string out;
    for (size_t i = 0; i < e.support.size(); ++i) {
        if (i) out += " ";
        out += "deg " + std::to_string(e.support[i].first) + ":" +
               std::to_string(e.support[i].second);
    }
    return out;
}

// Class labels P0, P1, ... index p_classes(g, p) in canonical order; this is
// the coordinate contract shared by every vector this tool prints or reads.
int parse_label(const std::string& label, const PSubgroupClasses& ctx) {
    if (label.size() < 2 || label[0] != 'P')
        throw std::invalid_argument("class label must look like P0, P1, ...: " + label);
    size_t pos = 0;
    int idx = std::stoi(label.substr(1), &pos);
    if (pos + 1 != label.size() || idx < 0 || idx >= ctx.size())
        throw std::invalid_argument("no class " + label + " (group has " +
                                    std::to_string(ctx.size()) + " classes)");
    return idx;
}

// Budget grammar: "<degrees>x<summands>[:<label>,<label>,...][@<cap>]",
// e.g. "3x2", "2x2:P0,P1", "3x2:P0,P1,P5@100000000".  Omitted pool means
// one representative per p-subgroup class.
SearchBudget parse_budget(const std::string& text, const PSubgroupClasses& ctx) {
    SearchBudget budget;
    if (text.empty()) return budget;
    std::string body = text;
    auto at = body.find('@');
    if (at != std::string::npos) {
        budget.max_candidates = std::stoll(body.substr(at + 1));
        body = body.substr(0, at);
    }
    auto colon = body.find(':');
    std::string dims = colon == std::string::npos ? body : body.substr(0, colon);
    auto x = dims.find('x');
    if (x == std::string::npos)
        throw std::invalid_argument("budget must look like <degrees>x<summands>: " + text);
    budget.max_degrees = std::stoi(dims.substr(0, x));
    budget.max_summands = std::stoi(dims.substr(x + 1));
    if (colon != std::string::npos) {
        std::stringstream ss(body.substr(colon + 1));
        std::string label;
        while (std::getline(ss, label, ',')) {
            int idx = parse_label(label, ctx);
            budget.pool.push_back(ctx.classes[idx].representative);
        }
    }
    return budget;
}

void print_class_lines(const PSubgroupClasses& ctx) {
    for (int i = 0; i < ctx.size(); ++i) {
        const SubgroupClass& c = ctx.classes[i];
        std::printf("P%d: order %d, class size %zu, representative %s\n", i,
                    c.representative.order(), c.members.size(),
                    elements_str(c.representative.elements).c_str());
    }
}

int cmd_group(const std::string& arg, int p) {
    GroupPtr g = load_group(arg);
    PSubgroupClasses ctx = p_classes(g, p);
    size_t subgroups = all_subgroups(*g).size();
    std::printf("group %s: order %d, %zu subgroups, %d classes of %d-subgroups\n",
                g->name().c_str(), g->order(), subgroups, ctx.size(), p);
    print_class_lines(ctx);
    return 0;
}

int cmd_subgroups(const std::string& arg) {
    GroupPtr g = load_group(arg);
    std::vector<Subgroup> subs = all_subgroups(*g);
    std::vector<SubgroupClass> classes = subgroup_classes(*g);
    std::printf("subgroups of %s: %zu in %zu conjugacy classes\n", g->name().c_str(),
                subs.size(), classes.size());
    for (size_t i = 0; i < subs.size(); ++i) {
        int cls = class_index_of(classes, subs[i]);
        std::printf("%zu: order %d %s class %d%s\n", i, subs[i].order(),
                    elements_str(subs[i].elements).c_str(), cls,
                    is_normal(*g, subs[i]) ? " normal" : "");
    }
    return 0;
}

int cmd_cfb(const std::string& arg, int p) {
    GroupPtr g = load_group(arg);
    PSubgroupClasses ctx = p_classes(g, p);
    LatticeBasis l = cfb_basis(ctx);
    std::printf("cfb of %s at p=%d: %d classes\n", g->name().c_str(), p, ctx.size());
    print_class_lines(ctx);
    std::printf("rank %d\n", l.rank);
    if (l.rank == ctx.size()) std::printf("index %s\n", l.index.str().c_str());
    for (int j = 0; j < l.rank; ++j) {
        std::string row = "(";
        for (int i = 0; i < ctx.size(); ++i) {
            if (i) row += ", ";
            row += l.basis[i][j].str();
        }
        row += ")";
        std::printf("b%d = %s\n", j, row.c_str());
    }
    return 0;
}

int cmd_omega(const std::string& arg, const std::string& label, int p) {
    GroupPtr g = load_group(arg);
    PSubgroupClasses ctx = p_classes(g, p);
    int idx = parse_label(label, ctx);
    ClassFunction w = omega(ctx, ctx.classes[idx].representative);
    std::printf("omega_P%d of %s at p=%d: %s\n", idx, g->name().c_str(), p,
                vector_str(w.values).c_str());
    return 0;
}

void print_marks(const MarksReport& report) {
    for (const MarkEntry& e : report.entries)
        std::printf("P%d: %s\n", e.class_index, support_str(e).c_str());
    std::printf("in_lambda: %s\n", report.in_lambda ? "yes" : "no");
    std::printf("invertible: %s\n", report.invertible ? "yes" : "no");
    if (report.lambda)
        std::printf("lambda = %s\n", vector_str(report.lambda->values).c_str());
    if (!report.reason.empty())
        std::printf("reason: %s\n", report.reason.c_str());
}

int cmd_marks(const std::string& path) {
    Complex x = complex_from_json(read_file(path));
    MarksReport report = marks(x);
    std::printf("marks of %s: group %s, p=%d, %d classes\n", path.c_str(),
                x.group()->name().c_str(), x.p(), report.classes.size());
    print_marks(report);
    return 0;
}

int cmd_invertible(const std::string& path) {
    Complex x = complex_from_json(read_file(path));
    MarksReport report = marks(x);
    if (report.invertible) {
        std::printf("invertible: yes\nlambda = %s\n",
                    vector_str(report.lambda->values).c_str());
        return 0;
    }
    std::printf("invertible: no\nreason: %s\n", report.reason.c_str());
    return 2;
}

int cmd_gens(const std::string& arg, int p, const std::string& out_dir) {
    GroupPtr g = load_group(arg);
    PSubgroupClasses ctx = p_classes(g, p);
    std::filesystem::create_directories(out_dir);
    for (int i = 0; i < ctx.size(); ++i) {
        Complex x = generator_complex(g, p, ctx.classes[i].representative);
        std::string path = out_dir + "/gen_P" + std::to_string(i) + ".json";
        write_file(path, complex_to_json(x));
        // Round-trip guarantee: the written file reproduces identical marks.
        MarksReport a = marks(x);
        MarksReport b = marks(complex_from_json(read_file(path)));
        for (int c = 0; c < ctx.size(); ++c)
            if (a.entries[c].support != b.entries[c].support)
                throw std::logic_error("round-trip marks mismatch in " + path);
        std::printf("wrote %s (lambda = %s)\n", path.c_str(),
                    a.lambda ? vector_str(a.lambda->values).c_str() : "undefined");
    }
    return 0;
}

int cmd_brauer(const std::string& path, const std::string& label, const std::string& out) {
    Complex x = complex_from_json(read_file(path));
    PSubgroupClasses ctx = p_classes(x.group(), x.p());
    int idx = parse_label(label, ctx);
    BrauerComplexResult result = brauer_complex(x, ctx.classes[idx].representative);
    std::map<int, int> h = homology_dims(result.complex);
    std::printf("brauer quotient of %s at P%d: weyl order %d, window [%d, %d]\n",
                path.c_str(), idx, result.complex.group()->order(),
                result.complex.lo(), result.complex.hi());
    for (const auto& [deg, dim] : h)
        if (dim) std::printf("H_%d dim %d\n", deg, dim);
    std::string text = complex_to_json(result.complex);
    if (out.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        write_file(out, text);
        std::printf("wrote %s\n", out.c_str());
    }
    return 0;
}

int cmd_realize(const std::string& target_path, const std::string& budget_text,
                const std::string& out) {
    ClassFunction target = class_function_from_json(read_file(target_path));
    PSubgroupClasses ctx = p_classes(target.group, target.p);
    SearchBudget budget = parse_budget(budget_text, ctx);
    SearchOutcome outcome = realize_search(target.group, target.p, target, budget);
    if (outcome.witness) {
        const Complex& w = *outcome.witness;
        std::printf("witness found: window [%d, %d], lambda = %s\n", w.lo(), w.hi(),
                    vector_str(target.values).c_str());
        std::printf("candidates examined: %lld\n", outcome.candidates);
        if (!out.empty()) {
            write_file(out, complex_to_json(w));
            std::printf("wrote %s\n", out.c_str());
        }
        return 0;
    }
    std::printf("no witness within budget (profiles %lld, candidates %lld)\n",
                outcome.profiles, outcome.candidates);
    return 2;
}

int cmd_check(const std::vector<std::string>& args, int p) {
    bool all_ok = true;
    for (const std::string& arg : args) {
        GroupPtr g = load_group(arg);
        std::vector<int> primes;
        if (p > 0) {
            primes.push_back(p);
        } else {
            for (int q = 2; q <= g->order(); ++q) {
                if (g->order() % q) continue;
                bool prime = q >= 2;
                for (int d = 2; d * d <= q; ++d)
                    if (q % d == 0) prime = false;
                if (prime) primes.push_back(q);
            }
            if (primes.empty()) primes.push_back(2);  // trivial group
        }
        for (int q : primes) {
            std::printf("check %s p=%d\n", g->name().c_str(), q);
            for (const CheckResult& r : run_selfcheck(g, q)) {
                if (r.ok)
                    std::printf("  %-24s ok\n", r.name.c_str());
                else
                    std::printf("  %-24s FAIL: %s\n", r.name.c_str(), r.detail.c_str());
                all_ok = all_ok && r.ok;
            }
        }
    }
    std::printf("%s\n", all_ok ? "all checks passed" : "CHECK FAILURES");
    return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact permutation-module computations for finite groups"};
    app.require_subcommand(1);

    std::string group_arg, label, path, out, budget_text;
    std::vector<std::string> group_args;
    int p = 0;
    uint64_t seed = 0;

    CLI::App* c_group = app.add_subcommand("group", "order, subgroups, p-subgroup classes");
    c_group->add_option("group", group_arg, "catalog name or group JSON file")->required();
    c_group->add_option("-p", p, "prime")->required();

    CLI::App* c_subs = app.add_subcommand("subgroups", "every subgroup with its class");
    c_subs->add_option("group", group_arg)->required();

    CLI::App* c_cfb = app.add_subcommand("cfb", "Borel-Smith lattice basis");
    c_cfb->add_option("group", group_arg)->required();
    c_cfb->add_option("-p", p, "prime")->required();

    CLI::App* c_omega = app.add_subcommand("omega", "subconjugacy indicator of a class");
    c_omega->add_option("group", group_arg)->required();
    c_omega->add_option("class", label, "class label P<i>")->required();
    c_omega->add_option("-p", p, "prime")->required();

    CLI::App* c_marks = app.add_subcommand("marks", "Brauer-quotient homology per class");
    c_marks->add_option("complex", path, "complex JSON file")->required();

    CLI::App* c_inv = app.add_subcommand("invertible", "decide invertibility (exit 0/2)");
    c_inv->add_option("complex", path)->required();

    CLI::App* c_gens = app.add_subcommand("gens", "write every generator complex");
    c_gens->add_option("group", group_arg)->required();
    c_gens->add_option("-p", p, "prime")->required();
    c_gens->add_option("-o", out, "output directory")->required();

    CLI::App* c_brauer = app.add_subcommand("brauer", "Brauer quotient of a complex file");
    c_brauer->add_option("complex", path)->required();
    c_brauer->add_option("class", label, "class label P<i>")->required();
    c_brauer->add_option("-o", out, "output file (default stdout)");

    CLI::App* c_realize = app.add_subcommand("realize", "search for an invertible complex "
                                                        "with a given dimension function");
    c_realize->add_option("target", path, "class function JSON file")->required();
    c_realize->add_option("--budget", budget_text,
                          "<degrees>x<summands>[:<pool labels>][@<candidate cap>]");
    c_realize->add_option("--seed", seed, "reserved; the sweep is exhaustive and "
                                          "deterministic, so the seed is unused");
    c_realize->add_option("-o", out, "write the witness complex here");

    CLI::App* c_check = app.add_subcommand("check", "run the self-check battery");
    c_check->add_option("groups", group_args, "catalog names or group files")->required();
    c_check->add_option("-p", p, "single prime (default: every prime dividing the order)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c_group->parsed()) return cmd_group(group_arg, p);
        if (c_subs->parsed()) return cmd_subgroups(group_arg);
        if (c_cfb->parsed()) return cmd_cfb(group_arg, p);
        if (c_omega->parsed()) return cmd_omega(group_arg, label, p);
        if (c_marks->parsed()) return cmd_marks(path);
        if (c_inv->parsed()) return cmd_invertible(path);
        if (c_gens->parsed()) return cmd_gens(group_arg, p, out);
        if (c_brauer->parsed()) return cmd_brauer(path, label, out);
        if (c_realize->parsed()) return cmd_realize(path, budget_text, out);
        if (c_check->parsed()) return cmd_check(group_args, p);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
