#include "binlcl/round_elim.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace binlcl {

namespace {

// Multisets of `size` masks drawn (with repetition) from `masks`, which must
// be sorted; emitted in lexicographic order.
void enumerate_multisets(const std::vector<uint32_t>& masks, int size,
                         std::vector<std::vector<uint32_t>>& out) {
    std::vector<uint32_t> cur;
    auto rec = [&](auto&& self, size_t from) -> void {
        if ((int)cur.size() == size) {
            out.push_back(cur);
            return;
        }
        for (size_t i = from; i < masks.size(); ++i) {
            cur.push_back(masks[i]);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

using ConfigSet = std::set<std::vector<int>>;

// For-all test: every choice of one label from each subset lands in `allowed`.
bool every_choice_allowed(const std::vector<uint32_t>& cand, const ConfigSet& allowed) {
    std::vector<int> choice(cand.size());
    auto rec = [&](auto&& self, size_t at) -> bool {
        if (at == cand.size()) {
            std::vector<int> ms = choice;
            std::sort(ms.begin(), ms.end());
            return allowed.count(ms) > 0;
        }
        for (int lab = 0; lab < 32; ++lab) {
            if (!(cand[at] & (1u << lab))) continue;
            choice[at] = lab;
            if (!self(self, at + 1)) return false;
        }
        return true;
    };
    return rec(rec, 0);
}

// Existential test: some choice lands in `allowed`.
bool some_choice_allowed(const std::vector<uint32_t>& cand, const ConfigSet& allowed) {
    std::vector<int> choice(cand.size());
    auto rec = [&](auto&& self, size_t at) -> bool {
        if (at == cand.size()) {
            std::vector<int> ms = choice;
            std::sort(ms.begin(), ms.end());
            return allowed.count(ms) > 0;
        }
        for (int lab = 0; lab < 32; ++lab) {
            if (!(cand[at] & (1u << lab))) continue;
            choice[at] = lab;
            if (self(self, at + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

// Is there a position matching with a[i] a subset of b[match(i)] for all i?
bool containment_matching(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const int k = (int)a.size();
    std::vector<char> used(k, 0);
    auto rec = [&](auto&& self, int at) -> bool {
        if (at == k) return true;
        for (int j = 0; j < k; ++j) {
            if (used[j] || (a[at] & ~b[j])) continue;
            used[j] = 1;
            if (self(self, at + 1)) return true;
            used[j] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

std::string subset_name(uint32_t mask, const std::vector<std::string>& alphabet) {
    std::vector<std::string> members;
    for (size_t i = 0; i < alphabet.size(); ++i)
        if (mask & (1u << i)) members.push_back(alphabet[i]);
    std::sort(members.begin(), members.end());
    std::string name = "{";
    for (size_t i = 0; i < members.size(); ++i) name += (i ? "," : "") + members[i];
    return name + "}";
}

// Computes the output problem with the for-all + maximality simplification
// on `forall` configurations and the existential condition on the other
// side. For black_output the for-all side is black.
GeneralProblem output_problem(const GeneralProblem& g, bool forall_on_black, const RECaps& caps,
                              bool parallel) {
    validate_general(g);
    if ((int)g.alphabet.size() > caps.max_alphabet)
        throw CapError("round elimination: alphabet size " + std::to_string(g.alphabet.size()) +
                       " exceeds cap " + std::to_string(caps.max_alphabet));
    if (g.d > caps.max_degree || g.delta > caps.max_degree)
        throw CapError("round elimination: degree exceeds cap " + std::to_string(caps.max_degree));

    const int forall_size = forall_on_black ? g.delta : g.d;
    const int exists_size = forall_on_black ? g.d : g.delta;
    const auto& forall_side = forall_on_black ? g.black_configs : g.white_configs;
    const auto& exists_side = forall_on_black ? g.white_configs : g.black_configs;
    ConfigSet forall_set(forall_side.begin(), forall_side.end());
    ConfigSet exists_set(exists_side.begin(), exists_side.end());

    std::vector<uint32_t> masks;
    for (uint32_t m = 1; m < (1u << g.alphabet.size()); ++m) masks.push_back(m);

    std::vector<std::vector<uint32_t>> candidates;
    enumerate_multisets(masks, forall_size, candidates);

    std::vector<char> valid(candidates.size(), 0);
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long long i = 0; i < (long long)candidates.size(); ++i)
            valid[i] = every_choice_allowed(candidates[i], forall_set);
    } else {
        for (size_t i = 0; i < candidates.size(); ++i)
            valid[i] = every_choice_allowed(candidates[i], forall_set);
    }
    std::vector<std::vector<uint32_t>> kept;
    for (size_t i = 0; i < candidates.size(); ++i)
        if (valid[i]) kept.push_back(candidates[i]);

    // Maximality: drop configurations dominated by another one under
    // position-wise subset containment.
    std::vector<char> maximal(kept.size(), 1);
    auto popsum = [](const std::vector<uint32_t>& cfg) {
        int s = 0;
        for (uint32_t m : cfg) s += std::popcount(m);
        return s;
    };
    std::vector<int> pops(kept.size());
    for (size_t i = 0; i < kept.size(); ++i) pops[i] = popsum(kept[i]);
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (long long i = 0; i < (long long)kept.size(); ++i) {
            for (size_t j = 0; j < kept.size(); ++j) {
                if (i == (long long)j || pops[j] < pops[i]) continue;
                if (kept[j] != kept[i] && containment_matching(kept[i], kept[j])) {
                    maximal[i] = 0;
                    break;
                }
            }
        }
    } else {
        for (size_t i = 0; i < kept.size(); ++i) {
            for (size_t j = 0; j < kept.size(); ++j) {
                if (i == j || pops[j] < pops[i]) continue;
                if (kept[j] != kept[i] && containment_matching(kept[i], kept[j])) {
                    maximal[i] = 0;
                    break;
                }
            }
        }
    }

    // Surviving alphabet: the subsets that occur in maximal configurations.
    std::set<uint32_t> used_masks;
    for (size_t i = 0; i < kept.size(); ++i)
        if (maximal[i])
            for (uint32_t m : kept[i]) used_masks.insert(m);

    GeneralProblem out;
    out.d = g.d;
    out.delta = g.delta;
    std::map<uint32_t, int> mask_index;
    for (uint32_t m : used_masks) {
        mask_index[m] = (int)out.alphabet.size();
        out.alphabet.push_back(subset_name(m, g.alphabet));
    }

    std::vector<std::vector<int>> forall_out;
    for (size_t i = 0; i < kept.size(); ++i) {
        if (!maximal[i]) continue;
        std::vector<int> cfg;
        for (uint32_t m : kept[i]) cfg.push_back(mask_index[m]);
        std::sort(cfg.begin(), cfg.end());
        forall_out.push_back(std::move(cfg));
    }

    std::vector<uint32_t> alpha_masks(used_masks.begin(), used_masks.end());
    std::vector<std::vector<uint32_t>> exist_candidates;
    enumerate_multisets(alpha_masks, exists_size, exist_candidates);
    std::vector<char> exists_ok(exist_candidates.size(), 0);
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long long i = 0; i < (long long)exist_candidates.size(); ++i)
            exists_ok[i] = some_choice_allowed(exist_candidates[i], exists_set);
    } else {
        for (size_t i = 0; i < exist_candidates.size(); ++i)
            exists_ok[i] = some_choice_allowed(exist_candidates[i], exists_set);
    }
    std::vector<std::vector<int>> exists_out;
    for (size_t i = 0; i < exist_candidates.size(); ++i) {
        if (!exists_ok[i]) continue;
        std::vector<int> cfg;
        for (uint32_t m : exist_candidates[i]) cfg.push_back(mask_index[m]);
        std::sort(cfg.begin(), cfg.end());
        exists_out.push_back(std::move(cfg));
    }

    if (forall_on_black) {
        out.black_configs = std::move(forall_out);
        out.white_configs = std::move(exists_out);
    } else {
        out.white_configs = std::move(forall_out);
        out.black_configs = std::move(exists_out);
    }
    normalize_general(out);
    return out;
}

} // namespace

GeneralProblem black_output(const GeneralProblem& g, const RECaps& caps) {
    return output_problem(g, true, caps, true);
}

GeneralProblem white_output(const GeneralProblem& g, const RECaps& caps) {
    return output_problem(g, false, caps, true);
}

GeneralProblem black_output_serial(const GeneralProblem& g, const RECaps& caps) {
    return output_problem(g, true, caps, false);
}

GeneralProblem white_output_serial(const GeneralProblem& g, const RECaps& caps) {
    return output_problem(g, false, caps, false);
}

namespace {

// Multiset of per-config multiplicities of one label, used to prune the
// bijection search.
std::vector<std::vector<int>> label_signature(const GeneralProblem& g, int label) {
    std::vector<int> white_counts, black_counts;
    for (const auto& cfg : g.white_configs)
        white_counts.push_back((int)std::count(cfg.begin(), cfg.end(), label));
    for (const auto& cfg : g.black_configs)
        black_counts.push_back((int)std::count(cfg.begin(), cfg.end(), label));
    std::sort(white_counts.begin(), white_counts.end());
    std::sort(black_counts.begin(), black_counts.end());
    return {white_counts, black_counts};
}

std::vector<std::vector<int>> remap_configs(const std::vector<std::vector<int>>& configs,
                                            const std::vector<int>& map) {
    std::vector<std::vector<int>> out;
    out.reserve(configs.size());
    for (const auto& cfg : configs) {
        std::vector<int> mapped;
        mapped.reserve(cfg.size());
        for (int lab : cfg) mapped.push_back(map[lab]);
        std::sort(mapped.begin(), mapped.end());
        out.push_back(std::move(mapped));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::optional<LabelBijection> is_isomorphic(const GeneralProblem& g1, const GeneralProblem& g2) {
    validate_general(g1);
    validate_general(g2);
    if (g1.alphabet.size() != g2.alphabet.size() || g1.d != g2.d || g1.delta != g2.delta ||
        g1.white_configs.size() != g2.white_configs.size() ||
        g1.black_configs.size() != g2.black_configs.size())
        return std::nullopt;

    const int k = (int)g1.alphabet.size();
    std::vector<std::vector<std::vector<int>>> sig1(k), sig2(k);
    for (int i = 0; i < k; ++i) sig1[i] = label_signature(g1, i);
    for (int i = 0; i < k; ++i) sig2[i] = label_signature(g2, i);

    std::vector<std::vector<int>> w2 = g2.white_configs, b2 = g2.black_configs;
    std::sort(w2.begin(), w2.end());
    std::sort(b2.begin(), b2.end());

    std::vector<int> map(k, -1);
    std::vector<char> used(k, 0);
    auto rec = [&](auto&& self, int at) -> bool {
        if (at == k)
            return remap_configs(g1.white_configs, map) == w2 &&
                   remap_configs(g1.black_configs, map) == b2;
        for (int j = 0; j < k; ++j) {
            if (used[j] || sig1[at] != sig2[j]) continue;
            map[at] = j;
            used[j] = 1;
            if (self(self, at + 1)) return true;
            used[j] = 0;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return LabelBijection{map};
}

FixedPointCertificate is_fixed_point(const GeneralProblem& g, int pairs, const RECaps& caps) {
    if (pairs < 1) throw InputError("is_fixed_point: pairs must be positive");
    FixedPointCertificate cert;
    GeneralProblem cur = g;
    cert.intermediates.push_back(cur);
    for (int i = 0; i < pairs; ++i) {
        GeneralProblem b = black_output(cur, caps);
        cert.intermediates.push_back(b);
        cur = white_output(b, caps);
        cert.intermediates.push_back(cur);
    }
    cert.bijection = is_isomorphic(g, cur);
    cert.fixed_point = cert.bijection.has_value();
    return cert;
}

GeneralProblem make_fdso(int d, int delta, int s) {
    if (d < 2 || delta < 2) throw InputError("make_fdso: degrees must be at least 2");
    if (s <= 0 || s >= d) throw InputError("make_fdso: need 0 < s < d");
    GeneralProblem g;
    g.alphabet = {"X", "H", "T", "A"};
    const int X = 0, H = 1, T = 2, A = 3;
    g.d = d;
    g.delta = delta;
    auto config = [](std::vector<std::pair<int, int>> parts) {
        std::vector<int> cfg;
        for (auto [lab, cnt] : parts)
            for (int i = 0; i < cnt; ++i) cfg.push_back(lab);
        std::sort(cfg.begin(), cfg.end());
        return cfg;
    };
    g.white_configs.push_back(config({{A, 1}, {X, d - 1}}));
    g.white_configs.push_back(config({{H, s + 1}, {X, d - s - 1}}));
    g.white_configs.push_back(config({{T, d - s + 1}, {X, s - 1}}));
    // Black side: every size-delta multiset containing an X, plus every one
    // containing both H and T.
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if ((int)cur.size() == delta) {
            bool has_x = std::find(cur.begin(), cur.end(), X) != cur.end();
            bool has_h = std::find(cur.begin(), cur.end(), H) != cur.end();
            bool has_t = std::find(cur.begin(), cur.end(), T) != cur.end();
            if (has_x || (has_h && has_t)) g.black_configs.push_back(cur);
            return;
        }
        for (int lab = from; lab < 4; ++lab) {
            cur.push_back(lab);
            self(self, lab);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    normalize_general(g);
    return g;
}

BinaryProblem fdso_source_problem(FdsoSource source, int d, int delta, int s) {
    if (source == FdsoSource::SinklessOrientation)
        return BinaryProblem{d, delta, std::string(d, '1') + "0", "0" + std::string(delta, '1')};
    if (s <= 0 || s >= d) throw InputError("forbidden degree index must satisfy 0 < s < d");
    return BinaryProblem{d, delta, std::string(s, '1') + "0" + std::string(d - s, '1'),
                         "0" + std::string(delta - 1, '1') + "0"};
}

std::vector<int> reduce_solution_to_fdso(FdsoSource source, int d, int delta, int s,
                                         const ColoredTree& tree, const EdgeLabeling& x) {
    const BinaryProblem src = fdso_source_problem(source, d, delta, s);
    if (!verify_labeling(tree, src, x).empty())
        throw InputError("reduce_solution_to_fdso: x is not a valid solution of the source problem");
    const int X = 0, H = 1, T = 2, A = 3;
    std::vector<int> out(tree.m(), X);
    for (int v = 0; v < tree.n(); ++v) {
        if (tree.color(v) != Color::White) continue;
        const bool is_constrained = tree.degree(v) == d;
        if (!is_constrained) continue; // unconstrained whites keep X everywhere
        int ones = 0;
        for (int32_t e : tree.incident_edges(v)) ones += x.x[e];
        if (source == FdsoSource::SinklessOrientation) {
            for (int32_t e : tree.incident_edges(v)) {
                if (x.x[e] == 0) { out[e] = A; break; }
            }
        } else if (ones <= s - 1) {
            int todo = d - s + 1;
            for (int32_t e : tree.incident_edges(v)) {
                if (todo > 0 && x.x[e] == 0) { out[e] = T; --todo; }
            }
        } else {
            int todo = s + 1;
            for (int32_t e : tree.incident_edges(v)) {
                if (todo > 0 && x.x[e] == 1) { out[e] = H; --todo; }
            }
        }
    }
    return out;
}

} // namespace binlcl
