#include "gre/dot.hpp"

#include <sstream>

namespace gre {

namespace {

// Emits one graph as a cluster; node names are prefixed to stay unique
// within the enclosing digraph.
void emit_cluster(std::ostringstream& os, const Graph& g, const std::string& prefix,
                  const std::string& label) {
  os << "  subgraph cluster_" << prefix << " {\n";
  os << "    label=\"" << label << "\";\n";
  for (Id v : g.vertices())
    os << "    " << prefix << "_v" << v << " [label=\"" << v << "\", shape=circle];\n";
  if (g.vertices().empty())
    os << "    " << prefix << "_empty [label=\"\", shape=point, style=invis];\n";
  for (const auto& [e, ends] : g.edges())
    os << "    " << prefix << "_v" << ends.src << " -> " << prefix << "_v" << ends.tgt
       << " [label=\"" << e << "\"];\n";
  os << "  }\n";
}

// Dashed arrows visualizing a morphism's vertex map between two clusters.
void emit_morphism(std::ostringstream& os, const Morphism& m, const std::string& from,
                   const std::string& to, const std::string& label) {
  bool first = true;
  for (const auto& [k, v] : m.vmap()) {
    os << "  " << from << "_v" << k << " -> " << to << "_v" << v
       << " [style=dashed, color=gray, arrowsize=0.5";
    if (first) os << ", label=\"" << label << "\"";
    os << "];\n";
    first = false;
  }
  if (m.vmap().empty())
    os << "  " << from << "_empty -> " << to
       << (m.cod().vertices().empty() ? "_empty" : ("_v" + std::to_string(m.cod().vertices().front())))
       << " [style=invis];\n";
}

}  // namespace

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (Id v : g.vertices()) os << "  v" << v << " [label=\"" << v << "\", shape=circle];\n";
  for (const auto& [e, ends] : g.edges())
    os << "  v" << ends.src << " -> v" << ends.tgt << " [label=\"" << e << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const DirectDerivation& dd, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  os << "  compound=true; rankdir=LR;\n";
  emit_cluster(os, dd.rule.rule.output, "O", "O");
  emit_cluster(os, dd.rule.rule.context, "K", "K");
  emit_cluster(os, dd.rule.rule.input, "I", "I");
  emit_cluster(os, dd.result, "Y", "result");
  emit_cluster(os, dd.interior, "D", "interior");
  emit_cluster(os, dd.start, "X", "start");
  emit_morphism(os, dd.rule.rule.to_output, "K", "O", "o");
  emit_morphism(os, dd.rule.rule.to_input, "K", "I", "i");
  emit_morphism(os, dd.match, "I", "X", "m");
  emit_morphism(os, dd.comatch, "O", "Y", "m*");
  emit_morphism(os, dd.to_interior, "K", "D", "k");
  emit_morphism(os, dd.interior_to_start, "D", "X", "");
  emit_morphism(os, dd.interior_to_result, "D", "Y", "");
  os << "}\n";
  return os.str();
}

std::string to_dot(const Tracelet& t, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  os << "  compound=true; rankdir=LR;\n";
  // Interface row: Y0 .. Yn shared between adjacent columns.
  emit_cluster(os, t.input(), "Y0", "Y0");
  for (std::size_t j = 0; j < t.columns.size(); ++j) {
    const DirectDerivation& col = t.columns[j];
    std::string cn = std::to_string(j + 1);
    emit_cluster(os, col.rule.rule.output, "O" + cn, "O" + cn);
    emit_cluster(os, col.rule.rule.context, "K" + cn, "K" + cn);
    emit_cluster(os, col.rule.rule.input, "I" + cn, "I" + cn);
    emit_cluster(os, col.interior, "D" + cn, "D" + cn);
    emit_cluster(os, col.result, "Y" + cn, "Y" + cn);
    emit_morphism(os, col.rule.rule.to_output, "K" + cn, "O" + cn, "o");
    emit_morphism(os, col.rule.rule.to_input, "K" + cn, "I" + cn, "i");
    emit_morphism(os, col.match, "I" + cn, "Y" + std::to_string(j), "m");
    emit_morphism(os, col.comatch, "O" + cn, "Y" + cn, "m*");
    emit_morphism(os, col.to_interior, "K" + cn, "D" + cn, "k");
    emit_morphism(os, col.interior_to_start, "D" + cn, "Y" + std::to_string(j), "");
    emit_morphism(os, col.interior_to_result, "D" + cn, "Y" + cn, "");
  }
  os << "}\n";
  return os.str();
}

}  // namespace gre
