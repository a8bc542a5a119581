#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gre {

using Id = std::int64_t;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct EdgeEnds {
  Id src = 0;
  Id tgt = 0;
  friend bool operator==(const EdgeEnds&, const EdgeEnds&) = default;
  friend auto operator<=>(const EdgeEnds&, const EdgeEnds&) = default;
};

// A finite directed multigraph. Vertices and edges carry stable integer ids;
// id values have no meaning beyond identity. Values are immutable once built
// except through add_vertex/add_edge, and all engine operations treat graphs
// as values.
class Graph {
 public:
  Graph() = default;

  void add_vertex(Id v);
  void add_edge(Id e, Id src, Id tgt);

  bool has_vertex(Id v) const;
  bool has_edge(Id e) const;
  EdgeEnds edge(Id e) const;

  const std::vector<Id>& vertices() const { return vertices_; }
  const std::vector<std::pair<Id, EdgeEnds>>& edges() const { return edges_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return vertices_.empty() && edges_.empty(); }

  Id fresh_vertex_id() const;
  Id fresh_edge_id() const;

  // Degree counts include parallel edges; a loop counts for both directions.
  int out_degree(Id v) const;
  int in_degree(Id v) const;
  int loop_count(Id v) const;

  // Edges from src to tgt, sorted by id.
  std::vector<Id> edges_between(Id src, Id tgt) const;
  // Edges with either endpoint equal to v.
  std::vector<Id> incident_edges(Id v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Id> vertices_;                      // sorted
  std::vector<std::pair<Id, EdgeEnds>> edges_;    // sorted by id
};

// The strict initial object of the instance category.
Graph initial_object();

// Convenience builders used all over the tests and fixtures.
Graph discrete_graph(std::initializer_list<Id> vertices);
Graph graph_of(std::initializer_list<Id> vertices,
               std::initializer_list<std::pair<Id, EdgeEnds>> edges);

}  // namespace gre
