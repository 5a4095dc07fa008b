#pragma once

#include <string>

#include <json.hpp>

#include "binlcl/general_problem.hpp"
#include "binlcl/problem.hpp"
#include "binlcl/tree.hpp"
#include "binlcl/verify.hpp"

namespace binlcl {

using json = nlohmann::ordered_json;

json problem_to_json(const BinaryProblem& p);
BinaryProblem problem_from_json(const json& j);

json tree_to_json(const ColoredTree& t);
ColoredTree tree_from_json(const json& j);

// Labeling file: {"labels": [{"edge": [u, v], "x": 0|1}, ...]} covering all
// edges exactly once.
json labeling_to_json(const ColoredTree& t, const EdgeLabeling& x);
EdgeLabeling labeling_from_json(const ColoredTree& t, const json& j);

json general_to_json(const GeneralProblem& g);
// Accepts explicit "white"/"black" config lists and/or "white_expr"/
// "black_expr" shorthand strings (single string or array of strings).
GeneralProblem general_from_json(const json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Content digest used by run manifests.
std::string fnv1a64_hex(const std::string& bytes);

} // namespace binlcl
