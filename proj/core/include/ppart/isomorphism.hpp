#ifndef PPART_ISOMORPHISM_HPP
#define PPART_ISOMORPHISM_HPP

#include <optional>
#include <vector>

#include "ppart/graph.hpp"

namespace ppart {

// Backtracking isomorphism test, pruned by degree and neighbor-degree
// multisets.  Fine for the small fixed graphs the recognizer compares
// against; not meant for large instances.
// On success returns perm with perm[v of a] = matching vertex of b.
std::optional<std::vector<int>> find_isomorphism(const Graph& a,
                                                 const Graph& b);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace ppart

#endif
