#include "binlcl/general_problem.hpp"

#include <algorithm>

namespace binlcl {

void validate_general(const GeneralProblem& g) {
    if (g.d < 1 || g.delta < 1) throw InputError("general problem: degrees must be positive");
    if (g.alphabet.empty()) throw InputError("general problem: empty alphabet");
    {
        auto sorted = g.alphabet;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("general problem: duplicate labels");
    }
    auto check = [&](const std::vector<std::vector<int>>& configs, int size, const char* side) {
        for (const auto& cfg : configs) {
            if ((int)cfg.size() != size)
                throw InputError(std::string("general problem: ") + side +
                                 " configuration of wrong size");
            for (int idx : cfg)
                if (idx < 0 || idx >= (int)g.alphabet.size())
                    throw InputError("general problem: label index out of range");
        }
    };
    check(g.white_configs, g.d, "white");
    check(g.black_configs, g.delta, "black");
}

void normalize_general(GeneralProblem& g) {
    auto norm = [](std::vector<std::vector<int>>& configs) {
        for (auto& cfg : configs) std::sort(cfg.begin(), cfg.end());
        std::sort(configs.begin(), configs.end());
        configs.erase(std::unique(configs.begin(), configs.end()), configs.end());
    };
    norm(g.white_configs);
    norm(g.black_configs);
}

int label_index(const GeneralProblem& g, const std::string& label) {
    for (size_t i = 0; i < g.alphabet.size(); ++i)
        if (g.alphabet[i] == label) return (int)i;
    throw InputError("label '" + label + "' is not in the alphabet");
}

GeneralProblem from_binary(const BinaryProblem& p) {
    validate_problem(p);
    GeneralProblem g;
    g.alphabet = {"0", "1"};
    g.d = p.d;
    g.delta = p.delta;
    for (int k = 0; k <= p.d; ++k) {
        if (p.W[k] != '1') continue;
        std::vector<int> cfg(p.d, 0);
        std::fill(cfg.end() - k, cfg.end(), 1);
        g.white_configs.push_back(cfg);
    }
    for (int k = 0; k <= p.delta; ++k) {
        if (p.B[k] != '1') continue;
        std::vector<int> cfg(p.delta, 0);
        std::fill(cfg.end() - k, cfg.end(), 1);
        g.black_configs.push_back(cfg);
    }
    normalize_general(g);
    return g;
}

std::vector<Violation> verify_general(const ColoredTree& tree, const GeneralProblem& g,
                                      const std::vector<int>& edge_labels) {
    validate_general(g);
    if ((int)edge_labels.size() != tree.m())
        throw InputError("general labeling does not cover all edges");
    for (int lab : edge_labels)
        if (lab < 0 || lab >= (int)g.alphabet.size())
            throw InputError("general labeling uses a label outside the alphabet");

    auto config_set = [](const std::vector<std::vector<int>>& configs) {
        return std::vector<std::vector<int>>(configs.begin(), configs.end());
    };
    auto white_set = config_set(g.white_configs);
    auto black_set = config_set(g.black_configs);
    std::sort(white_set.begin(), white_set.end());
    std::sort(black_set.begin(), black_set.end());

    std::vector<Violation> out;
    for (int v = 0; v < tree.n(); ++v) {
        const bool white = tree.color(v) == Color::White;
        if (tree.degree(v) != (white ? g.d : g.delta)) continue;
        std::vector<int> ms;
        ms.reserve(tree.degree(v));
        for (int32_t e : tree.incident_edges(v)) ms.push_back(edge_labels[e]);
        std::sort(ms.begin(), ms.end());
        const auto& set = white ? white_set : black_set;
        if (!std::binary_search(set.begin(), set.end(), ms)) {
            std::string observed = "{";
            for (size_t i = 0; i < ms.size(); ++i)
                observed += (i ? "," : "") + g.alphabet[ms[i]];
            observed += "}";
            out.push_back(Violation{tree.id(v), white ? "white configurations" : "black configurations",
                                    observed});
        }
    }
    return out;
}

std::vector<std::vector<int>> expand_config_expr(const std::vector<std::string>& alphabet,
                                                 const std::string& expr) {
    struct Atom {
        std::vector<int> choices;
        int repeat = 1;
    };
    auto index_of = [&](const std::string& label) {
        for (size_t i = 0; i < alphabet.size(); ++i)
            if (alphabet[i] == label) return (int)i;
        throw InputError("expression label '" + label + "' is not in the alphabet");
    };

    std::vector<Atom> atoms;
    size_t i = 0;
    const size_t n = expr.size();
    while (i < n) {
        if (std::isspace((unsigned char)expr[i])) { ++i; continue; }
        Atom atom;
        if (expr[i] == '[') {
            size_t close = expr.find(']', i);
            if (close == std::string::npos) throw InputError("unclosed '[' in expression");
            std::string inner = expr.substr(i + 1, close - i - 1);
            size_t p = 0;
            while (p < inner.size()) {
                while (p < inner.size() && std::isspace((unsigned char)inner[p])) ++p;
                size_t q = p;
                while (q < inner.size() && !std::isspace((unsigned char)inner[q])) ++q;
                if (q > p) atom.choices.push_back(index_of(inner.substr(p, q - p)));
                p = q;
            }
            if (atom.choices.empty()) throw InputError("empty group in expression");
            i = close + 1;
        } else {
            size_t q = i;
            while (q < n && !std::isspace((unsigned char)expr[q]) && expr[q] != '^' && expr[q] != '[')
                ++q;
            atom.choices.push_back(index_of(expr.substr(i, q - i)));
            i = q;
        }
        if (i < n && expr[i] == '^') {
            size_t q = i + 1;
            while (q < n && std::isdigit((unsigned char)expr[q])) ++q;
            if (q == i + 1) throw InputError("'^' must be followed by a number");
            atom.repeat = std::stoi(expr.substr(i + 1, q - i - 1));
            i = q;
        }
        if (atom.repeat < 0) throw InputError("negative repeat in expression");
        for (int r = 0; r < atom.repeat; ++r) atoms.push_back(Atom{atom.choices, 1});
    }

    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, size_t at) -> void {
        if (at == atoms.size()) {
            std::vector<int> ms = current;
            std::sort(ms.begin(), ms.end());
            out.push_back(std::move(ms));
            return;
        }
        for (int choice : atoms[at].choices) {
            current.push_back(choice);
            self(self, at + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace binlcl
