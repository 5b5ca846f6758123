#include "permfp/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace permfp {

namespace {

using nlohmann::json;

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

json table_json(const FiniteGroup& g) {
    json rows = json::array();
    for (const auto& row : g.table()) rows.push_back(row);
    return rows;
}

json group_json(const FiniteGroup& g) {
    // Catalog groups round-trip through their name alone.
    try {
        GroupPtr named = catalog_group(g.name());
        if (named->table() == g.table()) return json(g.name());
    } catch (const std::invalid_argument&) {
    }
    return json{{"name", g.name()}, {"order", g.order()}, {"table", table_json(g)}};
}

GroupPtr parse_group(const json& j) {
    if (j.is_string()) return catalog_group(j.get<std::string>());
    if (j.is_array()) return make_group("custom", j.get<std::vector<std::vector<int>>>());
    if (j.is_object()) {
        auto table = j.at("table").get<std::vector<std::vector<int>>>();
        std::string name = j.contains("name") ? j.at("name").get<std::string>() : "custom";
        GroupPtr g = make_group(name, std::move(table));
        if (j.contains("order") && j.at("order").get<int>() != g->order())
            throw std::invalid_argument("group order field disagrees with the table");
        return g;
    }
    throw std::invalid_argument("group must be a name, a table, or an object");
}

int parse_prime(const json& j) {
    int p = j.at("p").get<int>();
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    return p;
}

// Re-coordinatize a module into orbit blocks with coset-by-minimal-element
// order.  Returns the stabilizers block by block and sigma: new index -> old
// index.
struct CanonicalLayout {
    std::vector<Subgroup> stabilizers;
    std::vector<int> sigma;
};

CanonicalLayout canonical_layout(const GSet& x) {
    CanonicalLayout out;
    for (const auto& orbit : orbits(x)) {
        const int base = orbit.points[0];
        // Coset number c maps to its minimal element applied to the orbit's
        // base point; this is an equivariant relabeling of the orbit.
        for (const auto& coset : orbit_cosets(x.group(), orbit.stabilizer))
            out.sigma.push_back(x.act(coset[0], base));
        out.stabilizers.push_back(orbit.stabilizer);
    }
    return out;
}

}  // namespace

std::string group_to_json(const FiniteGroup& g) {
    json j{{"name", g.name()}, {"order", g.order()}, {"table", table_json(g)}};
    return j.dump(2) + "\n";
}

GroupPtr group_from_json(const std::string& text) try {
    return parse_group(json::parse(text));
} catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed group document: ") + e.what());
}

std::string complex_to_json(const Complex& x) {
    json modules = json::object();
    json diffs = json::object();

    std::map<int, CanonicalLayout> layout;
    for (int n = x.lo(); n <= x.hi(); ++n)
        if (x.dim(n) > 0) layout.emplace(n, canonical_layout(x.module(n).basis));

    for (const auto& [n, lay] : layout) {
        json blocks = json::array();
        for (const auto& s : lay.stabilizers) blocks.push_back(s.elements);
        modules[std::to_string(n)] = std::move(blocks);

        if (layout.count(n - 1) == 0 || !x.has_differential(n)) continue;
        const FpMatrix& m = x.differential(n).matrix;
        const auto& rows_of = layout.at(n - 1).sigma;
        json rows = json::array();
        for (size_t r = 0; r < rows_of.size(); ++r) {
            json row = json::array();
            for (size_t c = 0; c < lay.sigma.size(); ++c)
                row.push_back(m.at(rows_of[r], lay.sigma[c]));
            rows.push_back(std::move(row));
        }
        diffs[std::to_string(n)] = std::move(rows);
    }

    json j{{"group", group_json(*x.group())},
           {"p", x.p()},
           {"modules", std::move(modules)},
           {"differentials", std::move(diffs)}};
    return j.dump(2) + "\n";
}

Complex complex_from_json(const std::string& text) try {
    json j = json::parse(text);
    GroupPtr g = parse_group(j.at("group"));
    const int p = parse_prime(j);

    std::map<int, PermModule> modules;
    for (const auto& [key, blocks] : j.at("modules").items()) {
        const int degree = std::stoi(key);
        if (!blocks.is_array() || blocks.empty())
            throw std::invalid_argument("each degree needs a nonempty list of stabilizers");
        PermModule m = [&] {
            std::optional<PermModule> acc;
            for (const auto& block : blocks) {
                auto elements = block.get<std::vector<int>>();
                std::sort(elements.begin(), elements.end());
                Subgroup s{elements};
                if (generated_subgroup(*g, elements) != s)
                    throw std::invalid_argument("listed stabilizer is not a subgroup");
                PermModule part = orbit_module(g, s, p);
                acc = acc ? direct_sum(*acc, part) : part;
            }
            return *acc;
        }();
        modules.emplace(degree, std::move(m));
    }

    std::map<int, EquivMap> diffs;
    if (j.contains("differentials")) {
        for (const auto& [key, rows] : j.at("differentials").items()) {
            const int degree = std::stoi(key);
            auto src = modules.find(degree);
            auto dst = modules.find(degree - 1);
            if (src == modules.end() || dst == modules.end())
                throw std::invalid_argument("differential attached to a missing degree");
            auto entries = rows.get<std::vector<std::vector<long long>>>();
            FpMatrix m(dst->second.dim(), src->second.dim(), p);
            if (static_cast<int>(entries.size()) != m.rows())
                throw std::invalid_argument("differential has the wrong number of rows");
            for (int r = 0; r < m.rows(); ++r) {
                if (static_cast<int>(entries[r].size()) != m.cols())
                    throw std::invalid_argument("differential has a ragged row");
                for (int c = 0; c < m.cols(); ++c) m.set(r, c, entries[r][c]);
            }
            diffs.emplace(degree, EquivMap(src->second, dst->second, std::move(m)));
        }
    }

    return Complex(g, p, std::move(modules), std::move(diffs));
} catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed complex document: ") + e.what());
}

std::string class_function_to_json(const ClassFunction& f) {
    json j{{"group", group_json(*f.group)}, {"p", f.p}, {"values", f.values}};
    return j.dump(2) + "\n";
}

ClassFunction class_function_from_json(const std::string& text) try {
    json j = json::parse(text);
    GroupPtr g = parse_group(j.at("group"));
    const int p = parse_prime(j);
    auto values = j.at("values").get<std::vector<long long>>();
    const auto ctx = p_classes(g, p);
    if (static_cast<int>(values.size()) != ctx.size())
        throw std::invalid_argument("value count differs from the p-subgroup class count");
    return ClassFunction{g, p, std::move(values)};
} catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed class function document: ") + e.what());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
    if (!out) throw std::invalid_argument("failed writing " + path);
}

}  // namespace permfp
