#include "binlcl/verify.hpp"

namespace binlcl {

std::vector<Violation> verify_labeling(const ColoredTree& tree, const BinaryProblem& p,
                                       const EdgeLabeling& x) {
    validate_problem(p);
    if ((int)x.x.size() != tree.m())
        throw InputError("labeling covers " + std::to_string(x.x.size()) + " edges, tree has " +
                         std::to_string(tree.m()));
    for (int8_t v : x.x)
        if (v != 0 && v != 1) throw InputError("labeling values must be 0 or 1");

    std::vector<Violation> out;
    for (int v = 0; v < tree.n(); ++v) {
        const bool white = tree.color(v) == Color::White;
        const int full = white ? p.d : p.delta;
        if (tree.degree(v) != full) continue;
        int xdeg = 0;
        for (int32_t e : tree.incident_edges(v)) xdeg += x.x[e];
        const std::string& constraint = white ? p.W : p.B;
        if (constraint[xdeg] != '1')
            out.push_back(Violation{tree.id(v), constraint,
                                    "X-degree " + std::to_string(xdeg)});
    }
    return out;
}

} // namespace binlcl
