#include "binlcl/problem.hpp"

#include <algorithm>
#include <set>

namespace binlcl {

namespace {

bool is_bits(const std::string& s) {
    return !s.empty() && s.find_first_not_of("01") == std::string::npos;
}

} // namespace

void validate_problem(const BinaryProblem& p) {
    if (p.d < 2 || p.delta < 2)
        throw InputError("degrees must be at least 2, got d=" + std::to_string(p.d) +
                         " delta=" + std::to_string(p.delta));
    if (!is_bits(p.W) || !is_bits(p.B))
        throw InputError("W and B must be nonempty strings over '0'/'1'");
    if ((int)p.W.size() != p.d + 1)
        throw InputError("length mismatch: |W|=" + std::to_string(p.W.size()) +
                         " but d+1=" + std::to_string(p.d + 1));
    if ((int)p.B.size() != p.delta + 1)
        throw InputError("length mismatch: |B|=" + std::to_string(p.B.size()) +
                         " but delta+1=" + std::to_string(p.delta + 1));
}

BinaryProblem parse_problem(const std::string& text) {
    BinaryProblem p;
    bool got_d = false, got_delta = false, got_w = false, got_b = false;

    std::string s = text;
    // Strip whitespace; the inline form has none, JSON is handled elsewhere
    // (json_io forwards plain field values through this same path).
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }),
            s.end());
    if (s.empty())
        throw InputError("empty problem spec");

    size_t pos = 0;
    while (pos < s.size()) {
        size_t end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        std::string item = s.substr(pos, end - pos);
        size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw InputError("malformed problem item '" + item + "'");
        std::string key = item.substr(0, eq);
        std::string val = item.substr(eq + 1);
        try {
            if (key == "d") { p.d = std::stoi(val); got_d = true; }
            else if (key == "delta") { p.delta = std::stoi(val); got_delta = true; }
            else if (key == "W") { p.W = val; got_w = true; }
            else if (key == "B") { p.B = val; got_b = true; }
            else throw InputError("unknown problem field '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw InputError("bad integer in problem item '" + item + "'");
        } catch (const std::out_of_range&) {
            throw InputError("integer out of range in problem item '" + item + "'");
        }
        pos = end + 1;
    }
    if (!got_d || !got_delta || !got_w || !got_b)
        throw InputError("problem spec must contain d, delta, W and B");
    validate_problem(p);
    return p;
}

std::string format_problem(const BinaryProblem& p) {
    return "d=" + std::to_string(p.d) + ",delta=" + std::to_string(p.delta) + ",W=" + p.W + ",B=" + p.B;
}

BinaryProblem swap_colors(const BinaryProblem& p) {
    return BinaryProblem{p.delta, p.d, p.B, p.W};
}

BinaryProblem complement_problem(const BinaryProblem& p) {
    BinaryProblem q = p;
    std::reverse(q.W.begin(), q.W.end());
    std::reverse(q.B.begin(), q.B.end());
    return q;
}

EquivClass equivalent_set(const BinaryProblem& p) {
    validate_problem(p);
    std::set<BinaryProblem> members{p, swap_colors(p), complement_problem(p),
                                    swap_colors(complement_problem(p))};
    EquivClass ec;
    ec.members.assign(members.begin(), members.end());
    ec.canonical = ec.members.front();
    return ec;
}

bool is_restriction(const BinaryProblem& sub, const BinaryProblem& sup) {
    if (sub.d != sup.d || sub.delta != sup.delta) return false;
    for (size_t i = 0; i < sub.W.size(); ++i)
        if (sub.W[i] == '1' && sup.W[i] == '0') return false;
    for (size_t i = 0; i < sub.B.size(); ++i)
        if (sub.B[i] == '1' && sup.B[i] == '0') return false;
    return true;
}

namespace {

bool has_zero_run(const std::string& bits, int len) {
    if (len <= 0) return true;
    int run = 0;
    for (char c : bits) {
        run = (c == '0') ? run + 1 : 0;
        if (run >= len) return true;
    }
    return false;
}

} // namespace

bool is_resilient(const BinaryProblem& p, ResilienceQuery q) {
    validate_problem(p);
    if (q.t < 0 || q.t > p.d || q.s < 0 || q.s > p.delta)
        throw InputError("resilience query out of range");
    return !has_zero_run(p.W, p.d - q.t + 1) && !has_zero_run(p.B, p.delta - q.s + 1);
}

std::optional<int> complete_labeling(const std::string& constraint, int fixed_ones, int fixed_total) {
    const int k = (int)constraint.size() - 1;
    if (fixed_ones < 0 || fixed_ones > fixed_total || fixed_total > k)
        throw InputError("complete_labeling: need 0 <= fixed_ones <= fixed_total <= k");
    // Admissible target degrees j satisfy fixed_ones <= j <= k - (fixed_total - fixed_ones);
    // pick the least one.
    const int hi = k - (fixed_total - fixed_ones);
    for (int j = fixed_ones; j <= hi; ++j)
        if (constraint[j] == '1') return j - fixed_ones;
    return std::nullopt;
}

bool has_escape(const std::string& bits) {
    return bits.find("11") != std::string::npos;
}

} // namespace binlcl
