#pragma once

#include "gbsknot/graph.hpp"

#include <optional>
#include <string_view>

namespace gbsknot {

/// Removes a non-loop edge with a +-1 label at one end and merges that end's
/// vertex w into the other endpoint u. With g_w = g_u^(eps*lambda), every
/// other label mu at a w-end becomes eps*lambda*mu. When both ends carry a
/// unit, endpoint 1 is merged into endpoint 0.
/// Throws UnknownEdge or NotCollapsible.
LabeledGraph collapse(const LabeledGraph& graph, std::string_view edge_id);

/// Inverse of collapse. Splits end `end` (0 or 1) of the edge: a fresh
/// vertex x takes over that end with label `n`, and a fresh edge joins the
/// old endpoint (label `m`) to x (label 1). Requires m*n to equal the old
/// label. Throws UnknownEdge or BadFactorization.
LabeledGraph expand(const LabeledGraph& graph, std::string_view edge_id, int end,
                    const Integer& m, const Integer& n);

/// Collapses the smallest-id collapsible edge until the graph is reduced.
LabeledGraph reduce(const LabeledGraph& graph);

/// Replaces generators by their inverses (negating every label at their
/// ends) so that, walking the spanning tree from its root, the child end of
/// every tree edge is positive. Does not change the group.
LabeledGraph canonicalize_signs(const LabeledGraph& graph);

/// Groups for which reduced graphs are not unique up to moves.
enum class ExceptionalGroup { Z, Z2, KleinBottle };

std::string_view name(ExceptionalGroup group);

/// Recognises Z (single vertex), Z^2 (one loop, unit labels of equal sign)
/// and the Klein bottle group (one loop, unit labels of opposite sign) on a
/// reduced graph.
std::optional<ExceptionalGroup> exceptional_group(const LabeledGraph& reduced);

}  // namespace gbsknot
