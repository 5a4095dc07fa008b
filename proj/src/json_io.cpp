#include "binlcl/json_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace binlcl {

json problem_to_json(const BinaryProblem& p) {
    return json{{"d", p.d}, {"delta", p.delta}, {"W", p.W}, {"B", p.B}};
}

BinaryProblem problem_from_json(const json& j) {
    if (!j.is_object()) throw InputError("problem document must be an object");
    for (const char* key : {"d", "delta", "W", "B"})
        if (!j.contains(key)) throw InputError(std::string("problem document misses field ") + key);
    BinaryProblem p;
    try {
        p.d = j.at("d").get<int>();
        p.delta = j.at("delta").get<int>();
        p.W = j.at("W").get<std::string>();
        p.B = j.at("B").get<std::string>();
    } catch (const json::exception& e) {
        throw InputError(std::string("problem document: ") + e.what());
    }
    validate_problem(p);
    return p;
}

json tree_to_json(const ColoredTree& t) {
    json nodes = json::array();
    for (int v = 0; v < t.n(); ++v)
        nodes.push_back(json{{"id", t.id(v)}, {"color", t.color(v) == Color::White ? "white" : "black"}});
    json edges = json::array();
    for (auto [a, b] : t.edges()) edges.push_back(json::array({t.id(a), t.id(b)}));
    return json{{"nodes", nodes}, {"edges", edges}};
}

ColoredTree tree_from_json(const json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("edges"))
        throw InputError("tree document must contain nodes and edges");
    std::vector<int64_t> ids;
    std::vector<Color> colors;
    try {
        for (const auto& node : j.at("nodes")) {
            ids.push_back(node.at("id").get<int64_t>());
            std::string c = node.at("color").get<std::string>();
            if (c == "white") colors.push_back(Color::White);
            else if (c == "black") colors.push_back(Color::Black);
            else throw InputError("node color must be white or black");
        }
        std::vector<std::pair<int64_t, int64_t>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair");
            edges.emplace_back(e[0].get<int64_t>(), e[1].get<int64_t>());
        }
        if (!j.contains("ports"))
            return ColoredTree::from_edges(std::move(ids), std::move(colors), edges);
        // Explicit port map: id -> neighbor ids in port order.
        std::unordered_map<int64_t, int32_t> index;
        for (size_t i = 0; i < ids.size(); ++i) index[ids[i]] = (int32_t)i;
        std::vector<std::vector<int32_t>> adj(ids.size());
        for (auto [a, b] : edges) {
            adj[index.at(a)].push_back(index.at(b));
            adj[index.at(b)].push_back(index.at(a));
        }
        for (auto& [key, order] : j.at("ports").items()) {
            int64_t id = std::stoll(key);
            auto it = index.find(id);
            if (it == index.end()) throw InputError("ports entry for unknown node id " + key);
            std::vector<int32_t> pl;
            for (const auto& nb : order) pl.push_back(index.at(nb.get<int64_t>()));
            std::vector<int32_t> a = adj[it->second], bschk = pl;
            std::sort(a.begin(), a.end());
            std::sort(bschk.begin(), bschk.end());
            if (a != bschk) throw InputError("ports entry for node " + key + " is not a permutation of its neighbors");
            adj[it->second] = pl;
        }
        return ColoredTree(std::move(ids), std::move(colors), std::move(adj));
    } catch (const json::exception& e) {
        throw InputError(std::string("tree document: ") + e.what());
    }
}

json labeling_to_json(const ColoredTree& t, const EdgeLabeling& x) {
    if ((int)x.x.size() != t.m()) throw InputError("labeling does not match the tree");
    json labels = json::array();
    for (int e = 0; e < t.m(); ++e) {
        auto [a, b] = t.edges()[e];
        labels.push_back(json{{"edge", json::array({t.id(a), t.id(b)})}, {"x", (int)x.x[e]}});
    }
    return json{{"labels", labels}};
}

EdgeLabeling labeling_from_json(const ColoredTree& t, const json& j) {
    if (!j.is_object() || !j.contains("labels")) throw InputError("labeling document misses labels");
    EdgeLabeling out;
    out.x.assign(t.m(), -1);
    std::unordered_map<int64_t, int> index;
    for (int v = 0; v < t.n(); ++v) index[t.id(v)] = v;
    auto lookup = [&](int64_t id) {
        auto it = index.find(id);
        if (it == index.end()) throw InputError("labeling references unknown node id");
        return it->second;
    };
    try {
        for (const auto& item : j.at("labels")) {
            int64_t a = item.at("edge")[0].get<int64_t>();
            int64_t b = item.at("edge")[1].get<int64_t>();
            int val = item.at("x").get<int>();
            if (val != 0 && val != 1) throw InputError("labeling values must be 0 or 1");
            int va = lookup(a);
            int vb = lookup(b);
            int e = -1;
            for (int k = 0; k < t.degree(va); ++k)
                if (t.neighbors(va)[k] == vb) e = t.edge_index(va, k + 1);
            if (e < 0) throw InputError("labeling references a non-edge");
            if (out.x[e] != -1) throw InputError("labeling covers an edge twice");
            out.x[e] = (int8_t)val;
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("labeling document: ") + e.what());
    }
    for (int8_t v : out.x)
        if (v == -1) throw InputError("labeling does not cover every edge");
    return out;
}

json general_to_json(const GeneralProblem& g) {
    json white = json::array(), black = json::array();
    auto emit = [&](const std::vector<std::vector<int>>& configs, json& out) {
        for (const auto& cfg : configs) {
            json c = json::array();
            for (int lab : cfg) c.push_back(g.alphabet[lab]);
            out.push_back(c);
        }
    };
    emit(g.white_configs, white);
    emit(g.black_configs, black);
    return json{{"alphabet", g.alphabet}, {"d", g.d}, {"delta", g.delta},
                {"white", white}, {"black", black}};
}

GeneralProblem general_from_json(const json& j) {
    GeneralProblem g;
    try {
        g.alphabet = j.at("alphabet").get<std::vector<std::string>>();
        g.d = j.at("d").get<int>();
        g.delta = j.at("delta").get<int>();
        auto read_side = [&](const char* explicit_key, const char* expr_key,
                             std::vector<std::vector<int>>& out) {
            if (j.contains(explicit_key)) {
                for (const auto& cfg : j.at(explicit_key)) {
                    std::vector<int> c;
                    for (const auto& lab : cfg) c.push_back(label_index(g, lab.get<std::string>()));
                    out.push_back(c);
                }
            }
            if (j.contains(expr_key)) {
                const auto& ex = j.at(expr_key);
                std::vector<std::string> exprs;
                if (ex.is_string()) exprs.push_back(ex.get<std::string>());
                else exprs = ex.get<std::vector<std::string>>();
                for (const std::string& e : exprs) {
                    auto expanded = expand_config_expr(g.alphabet, e);
                    out.insert(out.end(), expanded.begin(), expanded.end());
                }
            }
        };
        read_side("white", "white_expr", g.white_configs);
        read_side("black", "black_expr", g.black_configs);
    } catch (const json::exception& e) {
        throw InputError(std::string("general problem document: ") + e.what());
    }
    normalize_general(g);
    validate_general(g);
    return g;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file " + path);
    out << content;
}

std::string fnv1a64_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h);
    return std::string(buf);
}

} // namespace binlcl
