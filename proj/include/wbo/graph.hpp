#ifndef WBO_GRAPH_HPP
#define WBO_GRAPH_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wbo/extnat.hpp"

namespace wbo {

using Vertex = std::string;
using VertexPair = std::pair<Vertex, Vertex>;  // normalized: first < second
using Arc = std::pair<Vertex, Vertex>;         // ordered

/// Normalizes an unordered pair; throws on equal endpoints (no loops).
VertexPair pair_of(const Vertex& x, const Vertex& y);

/// Finite vertex set with edge multiplicities in ExtNat. No loops.
/// Values are immutable once built; all algorithms return fresh graphs.
class ExtMultigraph {
 public:
  ExtMultigraph() = default;

  void add_vertex(const Vertex& v);
  /// Accumulates multiplicity on {x,y}; endpoints are added to the vertex set.
  void add_edge(const Vertex& x, const Vertex& y, ExtNat m);

  bool has_vertex(const Vertex& v) const { return vertices_.count(v) != 0; }
  ExtNat mult(const Vertex& x, const Vertex& y) const;

  const std::set<Vertex>& vertices() const { return vertices_; }
  /// Only pairs with positive multiplicity appear.
  const std::map<VertexPair, ExtNat>& edges() const { return edges_; }

  ExtNat total_multiplicity() const;
  /// Sum of all finite multiplicities (basis for the omega big-M threshold).
  std::uint64_t finite_total() const;

  friend bool operator==(const ExtMultigraph&, const ExtMultigraph&) = default;

 private:
  std::set<Vertex> vertices_;
  std::map<VertexPair, ExtNat> edges_;
};

/// A set of unordered vertex pairs; ||K|| is the set of edges they span.
struct Skeleton {
  std::set<VertexPair> pairs;

  void validate(const ExtMultigraph& g) const;  // distinct existing vertices
  friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

/// Arc multiplicities consistent with a base graph: finite bundles split
/// exactly, omega bundles have at least one omega direction.
class Orientation {
 public:
  Orientation() = default;
  Orientation(ExtMultigraph base, std::map<Arc, ExtNat> arcs);  // validates

  const ExtMultigraph& base() const { return base_; }
  ExtNat arc(const Vertex& from, const Vertex& to) const;
  const std::map<Arc, ExtNat>& arcs() const { return arcs_; }

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  ExtMultigraph base_;
  std::map<Arc, ExtNat> arcs_;
};

Orientation reverse(const Orientation& d);

/// True iff a directed path from x to y exists (lambda_dir >= 1).
bool dir_reachable(const Orientation& d, const Vertex& x, const Vertex& y);

/// Connected components under edges of positive multiplicity,
/// sorted by least vertex.
std::vector<std::set<Vertex>> components(const ExtMultigraph& g);

/// Vertices of the separator adjacent to the component C of g - separator.
std::set<Vertex> neighbors_in_rest(const ExtMultigraph& g, const std::set<Vertex>& component,
                                   const std::set<Vertex>& separator);

/// g with multiplicity zeroed on every skeleton pair (H = G - ||K||).
ExtMultigraph delete_skeleton(const ExtMultigraph& g, const Skeleton& k);

ExtMultigraph induced_subgraph(const ExtMultigraph& g, const std::set<Vertex>& s);

bool is_subgraph(const ExtMultigraph& h, const ExtMultigraph& g);

}  // namespace wbo

#endif
