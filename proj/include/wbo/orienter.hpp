#ifndef WBO_ORIENTER_HPP
#define WBO_ORIENTER_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "wbo/blocks.hpp"
#include "wbo/contraction.hpp"
#include "wbo/graph.hpp"

namespace wbo {

using Seed = std::uint64_t;

/// Well-balanced orientation of a multigraph with all multiplicities finite.
/// Branch-and-bound over per-pair arc splits, seeded by an Eulerian
/// heuristic; deterministic for a fixed seed.
Orientation orient_finite(const ExtMultigraph& g, Seed seed = 0);

/// Well-balanced orientation of any ExtMultigraph (finitely many vertices,
/// possibly omega bundles): omega bundles are deleted, their endpoints
/// contracted, and the recursion's result is lifted back with an
/// omega/omega split on the removed bundle.
Orientation orient_bounded_vertices(const ExtMultigraph& g, Seed seed = 0);

/// Extends an orientation of g - ||k|| over the skeleton edges: omega
/// bundles split omega/omega, finite bundles get the deterministic default
/// (all arcs from the lexicographically smaller endpoint). When a spec is
/// supplied the hypothesis "equivalent pairs have both-way omega
/// arc-connectivity in H or an omega bundle in g" is checked.
Orientation orient_extend_skeleton(const Orientation& h_oriented, const ExtMultigraph& g,
                                   const Skeleton& k, const ContractionSpec* spec = nullptr);

/// Compatible orientation of g from an orientation of its quotient: arcs
/// are disaggregated greedily and deterministically along the provenance.
Orientation lift_orientation(const ExtMultigraph& g, const ContractionSpec& spec,
                             const Orientation& d_quotient, const QuotientResult& qr);

/// Orients g - ||k|| and extends over the skeleton; requires every skeleton
/// pair to have omega connectivity in g - ||k||.
Orientation orient_with_deleted_skeleton(const ExtMultigraph& g, const Skeleton& k, Seed seed = 0);

/// Union of per-part orientations over a block tree (the parts partition
/// the edge multiplicity, so the union is well defined).
Orientation glue_block_orientations(const ExtMultigraph& g, const BlockTree& bt,
                                    const std::vector<Orientation>& parts);

/// Number of forbidden parallel slots per quotient pair.
using ForbiddenEdges = std::map<VertexPair, std::uint64_t>;

/// Projects a path of g to a path of (g - ||k||)/spec avoiding the
/// forbidden slots: equivalent skeleton steps are spliced at the shared
/// class, omega-connected skeleton steps are rerouted through g - ||k||.
/// Requires every skeleton pair to be equivalent or omega-connected in
/// g - ||k||.
std::vector<Vertex> project_path(const ExtMultigraph& g, const std::vector<Vertex>& p,
                                 const Skeleton& k, const ContractionSpec& spec,
                                 const ForbiddenEdges& forbidden);

}  // namespace wbo

#endif
