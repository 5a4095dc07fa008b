#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "binlcl/classify.hpp"
#include "binlcl/json_io.hpp"
#include "binlcl/layers.hpp"
#include "binlcl/oracle.hpp"
#include "binlcl/problem.hpp"
#include "binlcl/round_elim.hpp"
#include "binlcl/simulate.hpp"
#include "binlcl/solve.hpp"
#include "binlcl/tree.hpp"
#include "binlcl/verify.hpp"

namespace {

using namespace binlcl;

constexpr const char* kVersion = "0.1.0";

// Problems from the worked examples, addressable by name.
const std::map<std::string, BinaryProblem> kNamedProblems = {
    {"contradiction", {3, 2, "0111", "100"}},
    {"trivial", {4, 2, "00100", "111"}},
    {"two-coloring", {3, 2, "1001", "010"}},
    {"bipartite-splitting", {4, 4, "01110", "01110"}},
    {"sinkless-orientation", {3, 2, "1110", "010"}},
    {"sinkless-sourceless", {3, 2, "0110", "010"}},
    {"even-orientation", {3, 2, "1010", "010"}},
    {"regular-matching", {3, 2, "0100", "101"}},
    {"splitting", {3, 2, "0110", "101"}},
};

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoi(v);
    } catch (...) {
        throw InputError(std::string("environment variable ") + name + " is not an integer");
    }
}

struct Caps {
    int max_edges = 22;
    int max_rounds = 1 << 20;
    RECaps re;
    static Caps from_env() {
        Caps c;
        c.max_edges = env_int("BINLCL_MAX_EDGES", c.max_edges);
        c.max_rounds = env_int("BINLCL_MAX_ROUNDS", c.max_rounds);
        c.re.max_alphabet = env_int("BINLCL_RE_MAX_ALPHABET", c.re.max_alphabet);
        c.re.max_degree = env_int("BINLCL_RE_MAX_DEGREE", c.re.max_degree);
        return c;
    }
};

// Accepts a named problem, the inline form, a JSON literal, or a file path.
BinaryProblem resolve_problem(const std::string& spec, json* digest_input = nullptr) {
    auto named = kNamedProblems.find(spec);
    if (named != kNamedProblems.end()) return named->second;
    if (!spec.empty() && spec.front() == '{')
        return problem_from_json(json::parse(spec));
    if (spec.find('=') != std::string::npos) return parse_problem(spec);
    std::string content = read_text_file(spec);
    if (digest_input) (*digest_input)[spec] = fnv1a64_hex(content);
    return problem_from_json(json::parse(content));
}

ColoredTree load_tree(const std::string& path, json* digests) {
    std::string content = read_text_file(path);
    if (digests) (*digests)[path] = fnv1a64_hex(content);
    return tree_from_json(json::parse(content));
}

json manifest(const std::string& command, json parameters, json input_digests, json output_digests) {
    return json{{"command", command},
                {"version", kVersion},
                {"parameters", std::move(parameters)},
                {"input_digests", std::move(input_digests)},
                {"output_digests", std::move(output_digests)}};
}

void emit(const json& doc, bool pretty) {
    std::cout << (pretty ? doc.dump(2) : doc.dump()) << "\n";
}

json classification_to_json(const BinaryProblem& p) {
    Classification cls = classify(p);
    json families = json::array();
    for (Family f : cls.matched_families) families.push_back(to_string(f));
    json doc{{"problem", problem_to_json(p)},
             {"complexity", to_string(cls.complexity)},
             {"primary_family", to_string(cls.primary_family)},
             {"matched_families", families}};
    if (cls.complexity != Complexity::Unsolvable) {
        RandomizedBounds rb = randomized_bounds(p);
        doc["randomized"] = json{{"lower", to_string(rb.lower)},
                                 {"upper", to_string(rb.upper)},
                                 {"justification", rb.justification}};
    }
    if (cls.complexity == Complexity::Logarithmic) {
        RelaxationTarget rt = relaxation_target(p);
        static const char* equiv_names[] = {"identity", "swap", "complement", "swap_complement"};
        json flips = json::array();
        for (auto [side, idx] : rt.flips)
            flips.push_back(json::array({std::string(1, side), idx}));
        json target{{"kind", rt.kind == RelaxationTarget::Kind::SinklessOrientation
                                 ? "SinklessOrientation"
                                 : "ForbiddenDegree"},
                    {"equivalence_applied", equiv_names[rt.equivalence_applied]},
                    {"flips", flips},
                    {"target", problem_to_json(rt.target)}};
    if (rt.kind == RelaxationTarget::Kind::ForbiddenDegree)
            target["forbidden_index"] = rt.forbidden_index;
        doc["relaxation_target"] = target;
    }
    return doc;
}

json layers_to_json(const ColoredTree& tree, const LayerDecomposition& dec) {
    json layers = json::object();
    for (int v = 0; v < tree.n(); ++v)
        layers[std::to_string(tree.id(v))] = dec.layer[v];
    return json{{"layers", layers}, {"L", dec.L}, {"c", dec.c}, {"variant", to_string(dec.variant)}};
}

ColoredTree generate_tree(const std::string& kind, int d, int delta, int radius, int n,
                          int path_len, uint64_t seed, const std::string& center_color) {
    if (kind == "complete")
        return gen_complete_biregular(d, delta, radius,
                                      center_color == "black" ? Color::Black : Color::White, seed);
    if (kind == "random") return gen_random_biregular(d, delta, n, seed);
    if (kind == "caterpillar") return gen_caterpillar(d, path_len, seed);
    if (kind == "path") return gen_path(n, seed);
    throw InputError("unknown tree kind '" + kind + "'");
}

// Inline generator spec "kind=random,d=3,delta=2,n=1000,seed=7".
ColoredTree generate_from_spec(const std::string& spec) {
    std::map<std::string, std::string> kv;
    size_t pos = 0;
    while (pos < spec.size()) {
        size_t end = spec.find(',', pos);
        if (end == std::string::npos) end = spec.size();
        std::string item = spec.substr(pos, end - pos);
        size_t eq = item.find('=');
        if (eq == std::string::npos) throw InputError("malformed generator item '" + item + "'");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
        pos = end + 1;
    }
    auto get_int = [&](const std::string& key, int fallback) {
        auto it = kv.find(key);
        return it == kv.end() ? fallback : std::stoi(it->second);
    };
    auto it = kv.find("kind");
    if (it == kv.end()) throw InputError("generator spec needs kind=");
    return generate_tree(it->second, get_int("d", 3), get_int("delta", 2), get_int("radius", 2),
                         get_int("n", 100), get_int("path_len", 10),
                         (uint64_t)get_int("seed", 1), kv.count("center") ? kv["center"] : "white");
}

int run_classify(const std::string& spec, std::optional<std::pair<int, int>> sweep, bool pretty) {
    json inputs = json::object();
    if (sweep) {
        auto problems = enumerate_problems(sweep->first, sweep->second);
        auto results = classify_sweep(problems);
        json rows = json::array();
        for (size_t i = 0; i < problems.size(); ++i) {
            rows.push_back(json{{"d", problems[i].d},
                                {"delta", problems[i].delta},
                                {"W", problems[i].W},
                                {"B", problems[i].B},
                                {"complexity", to_string(results[i].complexity)},
                                {"primary_family", to_string(results[i].primary_family)}});
        }
        json doc{{"count", rows.size()},
                 {"rows", rows},
                 {"manifest", manifest("classify",
                                       json{{"sweep", json::array({sweep->first, sweep->second})}},
                                       inputs, json::object())}};
        emit(doc, pretty);
        return 0;
    }
    BinaryProblem p = resolve_problem(spec, &inputs);
    json doc = classification_to_json(p);
    doc["manifest"] = manifest("classify", json{{"problem", spec}}, inputs, json::object());
    emit(doc, pretty);
    return 0;
}

int run_solve(const std::string& problem_spec, const std::string& tree_path, const std::string& mode,
              bool emit_layers, const std::string& out_path, bool pretty, const Caps& caps) {
    json inputs = json::object();
    BinaryProblem p = resolve_problem(problem_spec, &inputs);
    ColoredTree tree = load_tree(tree_path, &inputs);

    SolveInfo info;
    EdgeLabeling labeling;
    json doc;
    if (mode == "local") {
        SimOptions opts;
        opts.max_rounds = std::min(caps.max_rounds, 4 * tree.n() + 64);
        auto algo = make_view_algorithm(p, tree);
        SimulationResult sim = run_local_simulation(tree, algo, opts);
        labeling = sim.labeling;
        solve(p, tree, &info); // route + layers for reporting
        doc["rounds"] = sim.rounds;
    } else if (mode == "centralized") {
        labeling = solve(p, tree, &info);
    } else {
        throw InputError("mode must be centralized or local");
    }
    auto violations = verify_labeling(tree, p, labeling);
    if (!violations.empty()) throw Error("internal: solver output failed verification");

    json labeling_doc = labeling_to_json(tree, labeling);
    json outputs = json::object();
    if (!out_path.empty()) {
        std::string bytes = labeling_doc.dump(2) + "\n";
        write_text_file(out_path, bytes);
        outputs[out_path] = fnv1a64_hex(bytes);
        doc["labeling_file"] = out_path;
    } else {
        doc["labeling"] = labeling_doc;
    }
    if (emit_layers && info.layers) {
        json layers_doc = layers_to_json(tree, *info.layers);
        if (!out_path.empty()) {
            std::string path = out_path + ".layers.json";
            std::string bytes = layers_doc.dump(2) + "\n";
            write_text_file(path, bytes);
            outputs[path] = fnv1a64_hex(bytes);
            doc["layers_file"] = path;
        } else {
            doc["layers"] = layers_doc;
        }
    }
    doc["route"] = info.route;
    doc["verified"] = true;
    doc["manifest"] = manifest("solve",
                               json{{"problem", problem_spec},
                                    {"tree", tree_path},
                                    {"mode", mode},
                                    {"emit_layers", emit_layers}},
                               inputs, outputs);
    emit(doc, pretty);
    return 0;
}

int run_verify(const std::string& problem_spec, const std::string& tree_path,
               const std::string& labeling_path, bool pretty) {
    json inputs = json::object();
    BinaryProblem p = resolve_problem(problem_spec, &inputs);
    ColoredTree tree = load_tree(tree_path, &inputs);
    std::string content = read_text_file(labeling_path);
    inputs[labeling_path] = fnv1a64_hex(content);
    EdgeLabeling x = labeling_from_json(tree, json::parse(content));
    auto violations = verify_labeling(tree, p, x);
    json vio = json::array();
    for (const auto& v : violations)
        vio.push_back(json{{"node", v.node_id}, {"expected", v.expected}, {"observed", v.observed}});
    json doc{{"ok", violations.empty()},
             {"violations", vio},
             {"manifest", manifest("verify",
                                   json{{"problem", problem_spec},
                                        {"tree", tree_path},
                                        {"labeling", labeling_path}},
                                   inputs, json::object())}};
    emit(doc, pretty);
    return violations.empty() ? 0 : 3;
}

int run_oracle(const std::string& problem_spec, const std::string& tree_path, bool witness_auto,
               const std::string& mode, int max_edges, bool pretty) {
    json inputs = json::object();
    BinaryProblem p = resolve_problem(problem_spec, &inputs);
    ColoredTree tree = witness_auto ? standard_witness(p) : load_tree(tree_path, &inputs);
    OracleMode m = mode == "first" ? OracleMode::First
                   : mode == "all" ? OracleMode::All
                                   : OracleMode::Count;
    json doc;
    if (m == OracleMode::First) {
        OracleResult res = brute_force_solve(tree, p, m, max_edges);
        doc["solvable"] = res.first.has_value();
        if (res.first) doc["labeling"] = labeling_to_json(tree, *res.first);
    } else if (m == OracleMode::Count) {
        doc["count"] = brute_force_count_parallel(tree, p, max_edges);
    } else {
        OracleResult res = brute_force_solve(tree, p, m, max_edges);
        doc["count"] = res.count;
        json all = json::array();
        for (const auto& l : res.all) all.push_back(labeling_to_json(tree, l));
        doc["labelings"] = all;
    }
    doc["edges"] = tree.m();
    doc["manifest"] = manifest("oracle",
                               json{{"problem", problem_spec},
                                    {"tree", witness_auto ? "auto-witness" : tree_path},
                                    {"mode", mode},
                                    {"max_edges", max_edges}},
                               inputs, json::object());
    emit(doc, pretty);
    return 0;
}

int run_gen_tree(const std::string& kind, int d, int delta, int radius, int n, int path_len,
                 uint64_t seed, const std::string& center, const std::string& out_path, bool pretty) {
    ColoredTree tree = generate_tree(kind, d, delta, radius, n, path_len, seed, center);
    json tree_doc = tree_to_json(tree);
    json outputs = json::object();
    json doc{{"nodes", tree.n()}, {"edges", tree.m()}};
    if (!out_path.empty()) {
        std::string bytes = tree_doc.dump(2) + "\n";
        write_text_file(out_path, bytes);
        outputs[out_path] = fnv1a64_hex(bytes);
        doc["tree_file"] = out_path;
    } else {
        doc["tree"] = tree_doc;
    }
    doc["manifest"] = manifest("gen-tree",
                               json{{"kind", kind}, {"d", d}, {"delta", delta}, {"radius", radius},
                                    {"n", n}, {"path_len", path_len}, {"seed", seed},
                                    {"center", center}},
                               json::object(), outputs);
    emit(doc, pretty);
    return 0;
}

int run_re_step(const std::string& problem_path, const std::string& side, const std::string& out_path,
                bool pretty, const Caps& caps) {
    json inputs = json::object();
    std::string content = read_text_file(problem_path);
    inputs[problem_path] = fnv1a64_hex(content);
    GeneralProblem g = general_from_json(json::parse(content));
    GeneralProblem out = side == "white" ? white_output(g, caps.re) : black_output(g, caps.re);
    json out_doc = general_to_json(out);
    json outputs = json::object();
    json doc;
    if (!out_path.empty()) {
        std::string bytes = out_doc.dump(2) + "\n";
        write_text_file(out_path, bytes);
        outputs[out_path] = fnv1a64_hex(bytes);
        doc["problem_file"] = out_path;
    } else {
        doc["problem"] = out_doc;
    }
    doc["alphabet_size"] = out.alphabet.size();
    doc["manifest"] = manifest("re-step", json{{"problem", problem_path}, {"side", side}}, inputs,
                               outputs);
    emit(doc, pretty);
    return 0;
}

int run_fixed_point(const std::string& problem_path, const std::string& fdso_spec, int pairs,
                    bool pretty, const Caps& caps) {
    json inputs = json::object();
    GeneralProblem g;
    if (!fdso_spec.empty()) {
        int d = 3, delta = 3, s = 1;
        size_t pos = 0;
        while (pos < fdso_spec.size()) {
            size_t end = fdso_spec.find(',', pos);
            if (end == std::string::npos) end = fdso_spec.size();
            std::string item = fdso_spec.substr(pos, end - pos);
            size_t eq = item.find('=');
            if (eq == std::string::npos) throw InputError("malformed --fdso item '" + item + "'");
            std::string key = item.substr(0, eq);
            int val = std::stoi(item.substr(eq + 1));
            if (key == "d") d = val;
            else if (key == "delta") delta = val;
            else if (key == "s") s = val;
            else throw InputError("unknown --fdso field '" + key + "'");
            pos = end + 1;
        }
        g = make_fdso(d, delta, s);
    } else {
        std::string content = read_text_file(problem_path);
        inputs[problem_path] = fnv1a64_hex(content);
        g = general_from_json(json::parse(content));
    }
    FixedPointCertificate cert = is_fixed_point(g, pairs, caps.re);
    json doc{{"fixed_point", cert.fixed_point}, {"pairs", pairs}};
    json inter = json::array();
    for (const auto& gp : cert.intermediates) inter.push_back(general_to_json(gp));
    doc["intermediates"] = inter;
    if (cert.bijection) {
        json bij = json::object();
        for (size_t i = 0; i < cert.bijection->map.size(); ++i)
            bij[g.alphabet[i]] = cert.intermediates.back().alphabet[cert.bijection->map[i]];
        doc["bijection"] = bij;
    }
    doc["manifest"] = manifest("fixed-point",
                               json{{"problem", problem_path}, {"fdso", fdso_spec}, {"pairs", pairs}},
                               inputs, json::object());
    emit(doc, pretty);
    return 0;
}

int run_pipeline(const std::string& problem_spec, const std::string& gen_spec,
                 const std::string& mode, bool expect_solvable, const std::string& out_path,
                 bool pretty, const Caps& caps) {
    json inputs = json::object();
    BinaryProblem p = resolve_problem(problem_spec, &inputs);
    ColoredTree tree = generate_from_spec(gen_spec);

    json doc;
    doc["classification"] = classification_to_json(p);
    Classification cls = classify(p);
    std::string tree_bytes = tree_to_json(tree).dump();
    doc["tree_digest"] = fnv1a64_hex(tree_bytes);
    doc["tree_nodes"] = tree.n();

    if (cls.complexity == Complexity::Unsolvable) {
        doc["verdict"] = "UNSOLVABLE";
        doc["manifest"] = manifest("pipeline",
                                   json{{"problem", problem_spec}, {"gen", gen_spec}, {"mode", mode}},
                                   inputs, json::object());
        emit(doc, pretty);
        return expect_solvable ? 3 : 0;
    }

    EdgeLabeling labeling;
    if (mode == "local") {
        SimOptions opts;
        opts.max_rounds = std::min(caps.max_rounds, 4 * tree.n() + 64);
        SimulationResult sim = run_local_simulation(tree, make_view_algorithm(p, tree), opts);
        labeling = sim.labeling;
        doc["rounds"] = sim.rounds;
    } else {
        labeling = solve(p, tree);
    }
    auto violations = verify_labeling(tree, p, labeling);
    doc["verdict"] = violations.empty() ? "PASS" : "FAIL";
    json outputs = json::object();
    if (!out_path.empty()) {
        std::string bytes = labeling_to_json(tree, labeling).dump(2) + "\n";
        write_text_file(out_path, bytes);
        outputs[out_path] = fnv1a64_hex(bytes);
        doc["labeling_file"] = out_path;
    }
    doc["labeling_digest"] = fnv1a64_hex(labeling_to_json(tree, labeling).dump());
    doc["manifest"] = manifest("pipeline",
                               json{{"problem", problem_spec}, {"gen", gen_spec}, {"mode", mode}},
                               inputs, outputs);
    emit(doc, pretty);
    return violations.empty() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary labeling problems on trees: classification, solving, verification, "
                 "round elimination"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    bool pretty = false;
    int threads = 0;
    app.add_flag("--pretty", pretty, "human-readable JSON output");
    app.add_option("--threads", threads, "OpenMP thread count (0 = library default)");

    Caps caps;
    try {
        caps = Caps::from_env();
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::string cls_problem;
    std::vector<int> sweep;
    auto* cmd_classify = app.add_subcommand("classify", "complexity class and family of a problem");
    cmd_classify->add_option("--inline,--problem", cls_problem, "problem (name, inline, file, json)");
    cmd_classify->add_option("--sweep", sweep, "classify all problems up to d_max delta_max")
        ->expected(2);

    std::string sol_problem, sol_tree, sol_mode = "centralized", sol_out;
    bool sol_layers = false;
    auto* cmd_solve = app.add_subcommand("solve", "construct a labeling for a solvable problem");
    cmd_solve->add_option("--problem", sol_problem)->required();
    cmd_solve->add_option("--tree", sol_tree)->required();
    cmd_solve->add_option("--mode", sol_mode)->check(CLI::IsMember({"centralized", "local"}));
    cmd_solve->add_flag("--emit-layers", sol_layers);
    cmd_solve->add_option("--out", sol_out);

    std::string ver_problem, ver_tree, ver_labeling;
    auto* cmd_verify = app.add_subcommand("verify", "check a labeling against a problem");
    cmd_verify->add_option("--problem", ver_problem)->required();
    cmd_verify->add_option("--tree", ver_tree)->required();
    cmd_verify->add_option("--labeling", ver_labeling)->required();

    std::string ora_problem, ora_tree, ora_mode = "count", ora_witness;
    int ora_max_edges = caps.max_edges;
    auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive brute-force search");
    cmd_oracle->add_option("--problem", ora_problem)->required();
    cmd_oracle->add_option("--tree", ora_tree);
    cmd_oracle->add_option("--witness", ora_witness)->check(CLI::IsMember({"auto"}));
    cmd_oracle->add_option("--mode", ora_mode)->check(CLI::IsMember({"first", "count", "all"}));
    cmd_oracle->add_option("--max-edges", ora_max_edges);

    std::string gen_kind = "random", gen_center = "white", gen_out;
    int gen_d = 3, gen_delta = 2, gen_radius = 2, gen_n = 100, gen_path_len = 10;
    uint64_t gen_seed = 1;
    auto* cmd_gen = app.add_subcommand("gen-tree", "generate a 2-colored tree instance");
    cmd_gen->add_option("--kind", gen_kind)
        ->check(CLI::IsMember({"complete", "random", "caterpillar", "path"}));
    cmd_gen->add_option("--d", gen_d);
    cmd_gen->add_option("--delta", gen_delta);
    cmd_gen->add_option("--radius", gen_radius);
    cmd_gen->add_option("--n", gen_n);
    cmd_gen->add_option("--path-len", gen_path_len);
    cmd_gen->add_option("--seed", gen_seed);
    cmd_gen->add_option("--center-color", gen_center)->check(CLI::IsMember({"white", "black"}));
    cmd_gen->add_option("--out", gen_out);

    std::string re_problem, re_side = "black", re_out;
    auto* cmd_re = app.add_subcommand("re-step", "one round-elimination output problem");
    cmd_re->add_option("--problem", re_problem)->required();
    cmd_re->add_option("--side", re_side)->check(CLI::IsMember({"black", "white"}));
    cmd_re->add_option("--out", re_out);

    std::string fp_problem, fp_fdso;
    int fp_pairs = 1;
    auto* cmd_fp = app.add_subcommand("fixed-point", "round-elimination fixed point test");
    cmd_fp->add_option("--problem", fp_problem);
    cmd_fp->add_option("--fdso", fp_fdso, "d=..,delta=..,s=..");
    cmd_fp->add_option("--pairs", fp_pairs);

    std::string pipe_problem, pipe_gen, pipe_mode = "centralized", pipe_out;
    bool pipe_expect = false;
    auto* cmd_pipe = app.add_subcommand("pipeline", "generate, classify, solve, verify");
    cmd_pipe->add_option("--problem", pipe_problem)->required();
    cmd_pipe->add_option("--gen", pipe_gen, "kind=random,d=3,delta=2,n=1000,seed=7")->required();
    cmd_pipe->add_option("--mode", pipe_mode)->check(CLI::IsMember({"centralized", "local"}));
    cmd_pipe->add_flag("--expect-solvable", pipe_expect);
    cmd_pipe->add_option("--out", pipe_out);

    CLI11_PARSE(app, argc, argv);
    if (threads > 0) omp_set_num_threads(threads);

    try {
        if (cmd_classify->parsed()) {
            std::optional<std::pair<int, int>> sw;
            if (!sweep.empty()) sw = {sweep[0], sweep[1]};
            if (!sw && cls_problem.empty()) throw InputError("classify needs --problem or --sweep");
            return run_classify(cls_problem, sw, pretty);
        }
        if (cmd_solve->parsed())
            return run_solve(sol_problem, sol_tree, sol_mode, sol_layers, sol_out, pretty, caps);
        if (cmd_verify->parsed()) return run_verify(ver_problem, ver_tree, ver_labeling, pretty);
        if (cmd_oracle->parsed()) {
            bool witness_auto = ora_witness == "auto";
            if (!witness_auto && ora_tree.empty())
                throw InputError("oracle needs --tree or --witness auto");
            return run_oracle(ora_problem, ora_tree, witness_auto, ora_mode, ora_max_edges, pretty);
        }
        if (cmd_gen->parsed())
            return run_gen_tree(gen_kind, gen_d, gen_delta, gen_radius, gen_n, gen_path_len, gen_seed,
                                gen_center, gen_out, pretty);
        if (cmd_re->parsed()) return run_re_step(re_problem, re_side, re_out, pretty, caps);
        if (cmd_fp->parsed()) {
            if (fp_problem.empty() && fp_fdso.empty())
                throw InputError("fixed-point needs --problem or --fdso");
            return run_fixed_point(fp_problem, fp_fdso, fp_pairs, pretty, caps);
        }
        if (cmd_pipe->parsed())
            return run_pipeline(pipe_problem, pipe_gen, pipe_mode, pipe_expect, pipe_out, pretty,
                                caps);
    } catch (const ExpectationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
