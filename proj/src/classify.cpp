#include "binlcl/classify.hpp"

#include <algorithm>
#include <cassert>

namespace binlcl {

const char* to_string(Complexity c) {
    switch (c) {
        case Complexity::Unsolvable: return "Unsolvable";
        case Complexity::Constant: return "Constant";
        case Complexity::Logarithmic: return "Logarithmic";
        case Complexity::Global: return "Global";
    }
    return "?";
}

const char* to_string(Family f) {
    switch (f) {
        case Family::Ia: return "I.a";
        case Family::Ib: return "I.b";
        case Family::Ic: return "I.c";
        case Family::Id: return "I.d";
        case Family::IIa: return "II.a";
        case Family::IIb: return "II.b";
        case Family::IIIa: return "III.a";
        case Family::IIIb: return "III.b";
        case Family::IVa: return "IV.a";
        case Family::IVb: return "IV.b";
        case Family::Va: return "V.a";
        case Family::Vb: return "V.b";
        case Family::VIa: return "VI.a";
        case Family::VIb: return "VI.b";
        case Family::VII: return "VII";
    }
    return "?";
}

Complexity family_complexity(Family f) {
    switch (f) {
        case Family::Ia:
        case Family::Ib:
        case Family::Ic:
        case Family::Id:
        case Family::IIa:
        case Family::IIb: return Complexity::Unsolvable;
        case Family::IIIa:
        case Family::IIIb:
        case Family::IVa:
        case Family::IVb: return Complexity::Constant;
        case Family::Va:
        case Family::Vb:
        case Family::VIa:
        case Family::VIb: return Complexity::Global;
        case Family::VII: return Complexity::Logarithmic;
    }
    return Complexity::Logarithmic;
}

namespace {

bool all_of_bit(const std::string& s, char c) {
    return std::all_of(s.begin(), s.end(), [c](char x) { return x == c; });
}

std::string bit_run(char c, int len) {
    return std::string(std::max(len, 0), c);
}

// 1 0...0 (the singleton {0})
bool is_only_zero_degree(const std::string& s) {
    return s[0] == '1' && all_of_bit(s.substr(1), '0');
}

// 0...0 1 (the singleton {k})
bool is_only_full_degree(const std::string& s) {
    return s.back() == '1' && all_of_bit(s.substr(0, s.size() - 1), '0');
}

// 0...0 1 x  (second-to-last bit set, everything before it zero)
bool is_low_tail_pattern(const std::string& s) {
    const int k = (int)s.size() - 1;
    if (s[k - 1] != '1') return false;
    for (int i = 0; i < k - 1; ++i)
        if (s[i] != '0') return false;
    return true;
}

// x 1 0...0  (second bit set, everything after it zero)
bool is_high_head_pattern(const std::string& s) {
    const int k = (int)s.size() - 1;
    if (s[1] != '1') return false;
    for (int i = 2; i <= k; ++i)
        if (s[i] != '0') return false;
    return true;
}

// 1 0...0 1 (both ends, nothing else)
bool is_both_ends_pattern(const std::string& s) {
    if (s.front() != '1' || s.back() != '1') return false;
    return all_of_bit(s.substr(1, s.size() - 2), '0');
}

} // namespace

Classification classify(const BinaryProblem& p) {
    validate_problem(p);
    const std::string& W = p.W;
    const std::string& B = p.B;
    const int d = p.d, delta = p.delta;

    std::vector<Family> matched;
    auto match = [&](bool cond, Family f) {
        if (cond) matched.push_back(f);
    };

    match(is_only_zero_degree(W) && B[0] == '0', Family::Ia);
    match(is_only_full_degree(W) && B[delta] == '0', Family::Ib);
    match(W[0] == '0' && is_only_zero_degree(B), Family::Ic);
    match(W[d] == '0' && is_only_full_degree(B), Family::Id);
    match(all_of_bit(W, '0'), Family::IIa);
    match(all_of_bit(B, '0'), Family::IIb);
    match(!all_of_bit(W, '0') && all_of_bit(B, '1'), Family::IIIa);
    match(all_of_bit(W, '1') && !all_of_bit(B, '0'), Family::IIIb);
    match(W[0] == '1' && B[0] == '1', Family::IVa);
    match(W[d] == '1' && B[delta] == '1', Family::IVb);
    match(is_both_ends_pattern(W) && B == "010", Family::Va);
    match(W == "010" && is_both_ends_pattern(B), Family::Vb);
    match(is_low_tail_pattern(W) && is_high_head_pattern(B), Family::VIa);
    match(is_high_head_pattern(W) && is_low_tail_pattern(B), Family::VIb);

    if (matched.empty()) matched.push_back(Family::VII);

    Classification cls;
    cls.matched_families = matched;
    cls.primary_family = matched.front();
    cls.complexity = family_complexity(cls.primary_family);
    // Cross-class co-matches are impossible; this is also verified
    // exhaustively by the acceptance suite.
    for ([[maybe_unused]] Family f : matched)
        assert(family_complexity(f) == cls.complexity);
    return cls;
}

const char* to_string(RandBound b) {
    switch (b) {
        case RandBound::Constant: return "Constant";
        case RandBound::LogLog: return "LogLog";
        case RandBound::Log: return "Log";
        case RandBound::Linear: return "Linear";
    }
    return "?";
}

namespace {

// W = 110^(d-2)1, B = 010, d >= 20.
bool independent_set_pattern(const BinaryProblem& q) {
    if (q.delta != 2 || q.B != "010" || q.d < 20) return false;
    return q.W == "11" + bit_run('0', q.d - 2) + "1";
}

// W = 1^(r+1) 0^(d-2r-1) 1^(r+1), B = 010, with r < d/4 - sqrt(d-1)/2.
bool cut_pattern(const BinaryProblem& q) {
    if (q.delta != 2 || q.B != "010") return false;
    const int d = q.d;
    int lead = 0;
    while (lead < (int)q.W.size() && q.W[lead] == '1') ++lead;
    const int r = lead - 1;
    if (r < 1 || 2 * r >= d) return false;
    if (q.W != bit_run('1', r + 1) + bit_run('0', d - 2 * r - 1) + bit_run('1', r + 1)) return false;
    // r < d/4 - sqrt(d-1)/2 in exact integer arithmetic:
    // d - 4r > 0 and (d - 4r)^2 > 4(d-1).
    const long long a = (long long)d - 4ll * r;
    return a > 0 && a * a > 4ll * (d - 1);
}

} // namespace

RandomizedBounds randomized_bounds(const BinaryProblem& p) {
    Classification cls = classify(p);
    RandomizedBounds rb;
    switch (cls.complexity) {
        case Complexity::Unsolvable:
            throw InputError("randomized bounds are undefined for unsolvable problems");
        case Complexity::Constant:
            rb.lower = rb.upper = RandBound::Constant;
            rb.justification = {"deterministic-constant"};
            return rb;
        case Complexity::Global:
            rb.lower = rb.upper = RandBound::Linear;
            rb.justification = {"deterministic-global"};
            return rb;
        case Complexity::Logarithmic:
            break;
    }
    rb.upper = RandBound::Log;
    rb.justification.clear();
    if (!has_escape(p.W) && !has_escape(p.B))
        rb.justification.push_back("no-escape-propagation");
    for (const BinaryProblem& q : equivalent_set(p).members) {
        if (independent_set_pattern(q)) {
            rb.justification.push_back("independent-set-pattern");
            break;
        }
    }
    for (const BinaryProblem& q : equivalent_set(p).members) {
        if (cut_pattern(q)) {
            rb.justification.push_back("cut-pattern");
            break;
        }
    }
    if (!rb.justification.empty()) {
        rb.lower = RandBound::Log;
    } else {
        rb.lower = RandBound::LogLog;
        rb.justification.push_back("forbidden-degree-relaxation");
    }
    return rb;
}

namespace {

RelaxationTarget relax_from(const BinaryProblem& q, int equivalence) {
    const int d = q.d, delta = q.delta;
    RelaxationTarget rt;
    rt.equivalence_applied = equivalence;
    rt.target = q;
    auto flip_w = [&](int i) {
        if (rt.target.W[i] == '0') {
            rt.target.W[i] = '1';
            rt.flips.emplace_back('w', i);
        }
    };
    auto flip_b = [&](int i) {
        if (rt.target.B[i] == '0') {
            rt.target.B[i] = '1';
            rt.flips.emplace_back('b', i);
        }
    };

    if (q.W[d] == '0' && q.B[0] == '0') {
        // Reach W = 1...10, B = 01...1.
        rt.kind = RelaxationTarget::Kind::SinklessOrientation;
        for (int i = 0; i < d; ++i) flip_w(i);
        for (int i = 1; i <= delta; ++i) flip_b(i);
        return rt;
    }
    if (q.W[0] == '1' && q.W[d] == '1') {
        // b_0 = b_delta = 0 here (otherwise type IV); relax to the forbidden
        // degree pattern at the least interior zero of W.
        rt.kind = RelaxationTarget::Kind::ForbiddenDegree;
        int idx = -1;
        for (int i = 1; i < d; ++i)
            if (q.W[i] == '0') { idx = i; break; }
        if (idx < 0) throw InputError("relaxation: W has no interior zero");
        rt.forbidden_index = idx;
        for (int i = 0; i <= d; ++i)
            if (i != idx) flip_w(i);
        for (int i = 1; i < delta; ++i) flip_b(i);
        return rt;
    }
    throw InputError("relaxation case analysis fell through");
}

} // namespace

RelaxationTarget relaxation_target(const BinaryProblem& p) {
    Classification cls = classify(p);
    if (cls.complexity != Complexity::Logarithmic)
        throw InputError("relaxation_target requires a type-VII problem");

    const int d = p.d, delta = p.delta;
    // Case order: the mirrored sinkless case is normalized through the
    // complement map so the target is always W = 1...10, B = 01...1; then
    // the plain sinkless case, forbidden degree on the white side, and the
    // color swap for b_0 = b_delta = 1.
    if (p.W[0] == '0' && p.B[delta] == '0')
        return relax_from(complement_problem(p), 2);
    if (p.W[d] == '0' && p.B[0] == '0')
        return relax_from(p, 0);
    if (p.W[0] == '1' && p.W[d] == '1')
        return relax_from(p, 0);
    return relax_from(swap_colors(p), 1); // here b_0 = b_delta = 1
}

std::vector<BinaryProblem> enumerate_problems(int d_max, int delta_max) {
    if (d_max < 2 || delta_max < 2) throw InputError("degree bounds must be at least 2");
    std::vector<BinaryProblem> out;
    for (int d = 2; d <= d_max; ++d) {
        for (int delta = 2; delta <= delta_max; ++delta) {
            const unsigned wn = 1u << (d + 1), bn = 1u << (delta + 1);
            for (unsigned wm = 0; wm < wn; ++wm) {
                std::string W(d + 1, '0');
                for (int i = 0; i <= d; ++i)
                    if (wm & (1u << i)) W[i] = '1';
                for (unsigned bm = 0; bm < bn; ++bm) {
                    std::string B(delta + 1, '0');
                    for (int i = 0; i <= delta; ++i)
                        if (bm & (1u << i)) B[i] = '1';
                    out.push_back(BinaryProblem{d, delta, W, B});
                }
            }
        }
    }
    return out;
}

std::vector<Classification> classify_sweep_serial(const std::vector<BinaryProblem>& ps) {
    std::vector<Classification> out(ps.size());
    for (size_t i = 0; i < ps.size(); ++i)
        out[i] = classify(ps[i]);
    return out;
}

std::vector<Classification> classify_sweep(const std::vector<BinaryProblem>& ps) {
    std::vector<Classification> out(ps.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < (long long)ps.size(); ++i)
        out[i] = classify(ps[i]);
    return out;
}

} // namespace binlcl
