#pragma once

#include <string>
#include <vector>

#include "circpart/graph.hpp"

namespace circpart {

// Isomorphism-invariant encoding of an n x n multiplicity matrix (row-major),
// by individualization and colour refinement without automorphism pruning.
// Intended for the small graphs of the enumeration corpora.
std::string canonical_form(int n, const std::vector<int>& matrix);

std::string canonical_form(const Digraph& d);
std::string canonical_form(const Multigraph& x);
std::string canonical_form(const SimpleGraph& g);

}  // namespace circpart
