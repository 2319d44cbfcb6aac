#pragma once

#include <ostream>
#include <string>

#include "shtab/engine.hpp"
#include "shtab/text_io.hpp"

namespace shtab {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

/// Graphviz form of an orbit: node v<k> labelled by the compact rows of the
/// k-th tableau, one edge per generator application.
inline void write_dot(std::ostream& out, const OrbitGraph& g, const std::string& name = "orbit") {
  out << "digraph " << name << " {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    out << "  v" << k << " [label=\"" << dot_escape(render_compact(g.vertices[k])) << "\"];\n";
  }
  for (auto& e : g.edges) {
    out << "  v" << e.from << " -> v" << e.to << " [label=\"" << dot_escape(e.label) << "\"];\n";
  }
  out << "}\n";
}

}  // namespace shtab
