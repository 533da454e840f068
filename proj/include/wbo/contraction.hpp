#ifndef WBO_CONTRACTION_HPP
#define WBO_CONTRACTION_HPP

#include <map>
#include <set>
#include <vector>

#include "wbo/graph.hpp"

namespace wbo {

/// A partition of a subset of the vertices into named blocks; unlisted
/// vertices are singleton classes. Contractible in g when every block is
/// an independent set.
class ContractionSpec {
 public:
  ContractionSpec() = default;
  explicit ContractionSpec(std::vector<std::set<Vertex>> classes);

  /// Throws NonContractible if a block contains adjacent vertices,
  /// UnknownVertex if a block member is not in g.
  void validate_contractible(const ExtMultigraph& g) const;

  /// Class identifier: the lexicographically least member; singletons map
  /// to themselves.
  Vertex project(const Vertex& v) const;

  bool equivalent(const Vertex& x, const Vertex& y) const { return project(x) == project(y); }

  const std::vector<std::set<Vertex>>& classes() const { return classes_; }

  friend bool operator==(const ContractionSpec&, const ContractionSpec&) = default;

 private:
  std::vector<std::set<Vertex>> classes_;
  std::map<Vertex, Vertex> rep_;
};

using Provenance = std::map<VertexPair, std::vector<std::pair<VertexPair, ExtNat>>>;

struct QuotientResult {
  ExtMultigraph quotient;
  /// For each quotient pair, the original pairs (with multiplicities) that
  /// merged into it; their ExtNat sum equals the quotient multiplicity.
  Provenance provenance;
};

QuotientResult contract(const ExtMultigraph& g, const ContractionSpec& spec);

/// Image pi(h) of a subgraph h of g in the quotient. The vertex set is
/// pi(V(h)); connected inputs yield connected outputs.
ExtMultigraph induce_quotient(const ExtMultigraph& h, const ExtMultigraph& g,
                              const ContractionSpec& spec);

/// Lifts a subgraph of the quotient back to the base graph, disaggregating
/// multiplicities greedily along the provenance (or along an explicit
/// assignment). The lifted vertex set is minimal: endpoints of lifted edges.
ExtMultigraph lift_subgraph(const ExtMultigraph& hq, const QuotientResult& qr);
ExtMultigraph lift_subgraph(const ExtMultigraph& hq, const QuotientResult& qr,
                            const Provenance& assignment);

/// The orientation of g/~ compatible with an orientation of g: arcs are
/// pushed through pi and summed.
Orientation induce_orientation(const Orientation& d, const ContractionSpec& spec);

}  // namespace wbo

#endif
