#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "binlcl/errors.hpp"

namespace binlcl {

// A binary labeling problem (d, delta, W, B). W and B are '0'/'1' strings;
// bit i of W tells whether a full-degree white node may have X-degree i.
struct BinaryProblem {
    int d = 2;
    int delta = 2;
    std::string W; // length d + 1
    std::string B; // length delta + 1

    bool operator==(const BinaryProblem&) const = default;
    auto operator<=>(const BinaryProblem&) const = default;
};

// Throws InputError if lengths, degrees or characters are off.
void validate_problem(const BinaryProblem& p);

// Accepts the inline form "d=3,delta=2,W=1110,B=010" or a JSON object with
// the same fields.
BinaryProblem parse_problem(const std::string& text);

// Canonical inline form; parse_problem(format_problem(p)) == p.
std::string format_problem(const BinaryProblem& p);

// The color-swapped problem (delta, d, B, W).
BinaryProblem swap_colors(const BinaryProblem& p);

// The complemented problem (d, delta, d-W, delta-B); in vector form both
// constraint strings are reversed.
BinaryProblem complement_problem(const BinaryProblem& p);

// The at-most-four problems obtained by swapping colors and/or complementing.
struct EquivClass {
    std::vector<BinaryProblem> members; // sorted by (d, delta, W, B), deduped
    BinaryProblem canonical;            // members.front()
};

EquivClass equivalent_set(const BinaryProblem& p);

// True iff degrees match and sub's constraints are bitwise contained in sup's.
bool is_restriction(const BinaryProblem& sub, const BinaryProblem& sup);

struct ResilienceQuery {
    int t = 0; // white fixed-port budget, 0 <= t <= d
    int s = 0; // black fixed-port budget, 0 <= s <= delta
};

// (t,s)-resilience: W contains no 0-run of length d-t+1 and B no 0-run of
// length delta-s+1.
bool is_resilient(const BinaryProblem& p, ResilienceQuery q);

// Given a constraint vector over degrees 0..k and a partial labeling with
// fixed_total ports fixed of which fixed_ones are 1, returns how many of the
// remaining ports must be labeled 1 to reach the least admissible X-degree,
// or nullopt when no admissible degree exists.
std::optional<int> complete_labeling(const std::string& constraint, int fixed_ones, int fixed_total);

// True iff the vector contains two consecutive 1s.
bool has_escape(const std::string& bits);

} // namespace binlcl
