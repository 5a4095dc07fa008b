#pragma once

#include <string>
#include <utility>
#include <vector>

#include "binlcl/problem.hpp"

namespace binlcl {

enum class Complexity { Unsolvable, Constant, Logarithmic, Global };

enum class Family { Ia, Ib, Ic, Id, IIa, IIb, IIIa, IIIb, IVa, IVb, Va, Vb, VIa, VIb, VII };

const char* to_string(Complexity c);
const char* to_string(Family f);
Complexity family_complexity(Family f);

struct Classification {
    Complexity complexity;
    std::vector<Family> matched_families; // in table order, nonempty
    Family primary_family;                // matched_families.front()
};

Classification classify(const BinaryProblem& p);

enum class RandBound { Constant, LogLog, Log, Linear };
const char* to_string(RandBound b);

struct RandomizedBounds {
    RandBound lower;
    RandBound upper;
    std::vector<std::string> justification; // rule tags for the lower bound
};

// Throws InputError for unsolvable problems.
RandomizedBounds randomized_bounds(const BinaryProblem& p);

// A relaxation of a type-VII problem onto the canonical lower-bound pattern:
// sinkless orientation (W = 1...10, B = 01...1) or the forbidden-degree
// pattern (W = 1^i 0 1^(d-i), B = 0 1^(delta-1) 0).
struct RelaxationTarget {
    enum class Kind { SinklessOrientation, ForbiddenDegree };
    Kind kind = Kind::SinklessOrientation;
    int forbidden_index = -1; // set for ForbiddenDegree
    // 0 = identity, 1 = swap colors, 2 = complement, 3 = swap + complement;
    // applied to the source problem before flipping.
    int equivalence_applied = 0;
    // Bits flipped 0 -> 1 on the transformed problem, as (side, index) with
    // side 'w' or 'b'.
    std::vector<std::pair<char, int>> flips;
    // The resulting pattern problem.
    BinaryProblem target;
};

// Throws InputError unless classify(p).complexity == Logarithmic.
RelaxationTarget relaxation_target(const BinaryProblem& p);

// Enumeration of all problems with 2 <= d <= d_max, 2 <= delta <= delta_max
// in a fixed order: by (d, delta), then W as a binary counter, then B.
std::vector<BinaryProblem> enumerate_problems(int d_max, int delta_max);

// Classify a whole problem list; the OpenMP kernel and the serial reference
// must produce identical output.
std::vector<Classification> classify_sweep(const std::vector<BinaryProblem>& ps);
std::vector<Classification> classify_sweep_serial(const std::vector<BinaryProblem>& ps);

} // namespace binlcl
