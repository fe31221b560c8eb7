#pragma once

#include <span>
#include <string>
#include <string_view>

#include "nobelnet/core.hpp"

namespace nobelnet {

/// DOT digraph. Node statements in ascending id order, edges in canonical
/// (advisor, student, kind) order, so equal graphs give byte-equal text.
/// Nodes whose ids appear in `highlight` are filled magenta.
std::string export_dot(const GenealogyGraph& g, std::span<const std::string> highlight);

/// GraphML document with person attributes as node data keys and the edge
/// kind/provenance as edge data keys. Same ordering guarantees as DOT.
std::string export_graphml(const GenealogyGraph& g);

}  // namespace nobelnet
