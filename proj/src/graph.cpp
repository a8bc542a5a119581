#include "gre/graph.hpp"

#include <algorithm>

namespace gre {

namespace {

template <typename Vec, typename Key>
auto lower_bound_by_key(const Vec& v, Key k) {
  return std::lower_bound(v.begin(), v.end(), k,
                          [](const auto& item, Key key) { return item.first < key; });
}

}  // namespace

void Graph::add_vertex(Id v) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it != vertices_.end() && *it == v) throw Error("duplicate vertex id " + std::to_string(v));
  vertices_.insert(it, v);
}

void Graph::add_edge(Id e, Id src, Id tgt) {
  if (!has_vertex(src) || !has_vertex(tgt))
    throw Error("edge " + std::to_string(e) + " references missing endpoint");
  auto it = lower_bound_by_key(edges_, e);
  if (it != edges_.end() && it->first == e) throw Error("duplicate edge id " + std::to_string(e));
  edges_.insert(it, {e, EdgeEnds{src, tgt}});
}

bool Graph::has_vertex(Id v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(Id e) const {
  auto it = lower_bound_by_key(edges_, e);
  return it != edges_.end() && it->first == e;
}

EdgeEnds Graph::edge(Id e) const {
  auto it = lower_bound_by_key(edges_, e);
  if (it == edges_.end() || it->first != e) throw Error("missing edge id " + std::to_string(e));
  return it->second;
}

Id Graph::fresh_vertex_id() const { return vertices_.empty() ? 0 : vertices_.back() + 1; }

Id Graph::fresh_edge_id() const { return edges_.empty() ? 0 : edges_.back().first + 1; }

int Graph::out_degree(Id v) const {
  int n = 0;
  for (const auto& [e, ends] : edges_)
    if (ends.src == v) ++n;
  return n;
}

int Graph::in_degree(Id v) const {
  int n = 0;
  for (const auto& [e, ends] : edges_)
    if (ends.tgt == v) ++n;
  return n;
}

int Graph::loop_count(Id v) const {
  int n = 0;
  for (const auto& [e, ends] : edges_)
    if (ends.src == v && ends.tgt == v) ++n;
  return n;
}

std::vector<Id> Graph::edges_between(Id src, Id tgt) const {
  std::vector<Id> out;
  for (const auto& [e, ends] : edges_)
    if (ends.src == src && ends.tgt == tgt) out.push_back(e);
  return out;
}

std::vector<Id> Graph::incident_edges(Id v) const {
  std::vector<Id> out;
  for (const auto& [e, ends] : edges_)
    if (ends.src == v || ends.tgt == v) out.push_back(e);
  return out;
}

Graph initial_object() { return Graph{}; }

Graph discrete_graph(std::initializer_list<Id> vertices) {
  Graph g;
  for (Id v : vertices) g.add_vertex(v);
  return g;
}

Graph graph_of(std::initializer_list<Id> vertices,
               std::initializer_list<std::pair<Id, EdgeEnds>> edges) {
  Graph g;
  for (Id v : vertices) g.add_vertex(v);
  for (const auto& [e, ends] : edges) g.add_edge(e, ends.src, ends.tgt);
  return g;
}

}  // namespace gre
