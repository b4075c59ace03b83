#pragma once

#include <iosfwd>

#include "coreval/graph.hpp"
#include "coreval/orientation.hpp"

namespace coreval {

/// GraphML with node attributes (orientation, degree) and edge attributes (kind, timestamp).
void write_graphml(std::ostream& out, const InteractionGraph& g, Orientation orientation);

/// Graphviz digraph with the same annotations as write_graphml.
void write_dot(std::ostream& out, const InteractionGraph& g, Orientation orientation);

} // namespace coreval
