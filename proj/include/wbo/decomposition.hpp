#ifndef WBO_DECOMPOSITION_HPP
#define WBO_DECOMPOSITION_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wbo/blocks.hpp"
#include "wbo/connectivity.hpp"
#include "wbo/graph.hpp"

namespace wbo {

struct Fragment {
  std::string name;
  ExtMultigraph graph;

  friend bool operator==(const Fragment&, const Fragment&) = default;
};

/// Edge-disjoint connected subgraphs whose multiplicities sum to the base
/// graph's on every pair.
class Decomposition {
 public:
  Decomposition() = default;
  Decomposition(ExtMultigraph base, std::vector<Fragment> fragments);  // validates

  const ExtMultigraph& base() const { return base_; }
  const std::vector<Fragment>& fragments() const { return fragments_; }
  std::size_t fragment_index(const std::string& name) const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  ExtMultigraph base_;
  std::vector<Fragment> fragments_;
};

/// The blocks of g as a decomposition (the canonical bond-faithful example).
Decomposition blocks_decomposition(const ExtMultigraph& g);

struct PathStep {
  Vertex from, to;
  std::size_t fragment;
  std::uint64_t slot;  // parallel-edge index, < fragment multiplicity

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

/// A path with per-step fragment identifiers and multiplicity slots.
struct PathWitness {
  std::vector<PathStep> steps;

  void validate(const Decomposition& d) const;  // throws NotAPath
  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

/// An edge set given as pairs with counts (count <= multiplicity).
using EdgeSet = std::map<VertexPair, ExtNat>;

/// True iff removing b disconnects and no proper nonempty subset does
/// (b is a minimal nonempty edge cut).
bool is_bond(const ExtMultigraph& g, const EdgeSet& b);

struct BondViolation {
  std::size_t fragment;
  EdgeSet bond;  // a bond of the fragment that is not a bond of g
};

/// Enumerates every bond of every fragment with at most b_max edges
/// (counting multiplicity) and reports those that are not bonds of g.
std::vector<BondViolation> bond_faithful(const ExtMultigraph& g, const Decomposition& d,
                                         std::uint64_t b_max);

/// Number of components of p's intersection with the fragment that contain
/// at least one edge.
std::size_t edge_component_count(const Decomposition& d, const PathWitness& p,
                                 std::size_t fragment);

/// Reroutes p until it meets every fragment in at most one edge-containing
/// segment; fragments untouched by p remain untouched.
PathWitness efficient_rewrite(const Decomposition& d, const PathWitness& p);

struct SegmentReport {
  std::size_t fragment;
  Vertex from, to;
  ExtNat lambda_fragment;
  ExtNat lambda_whole;
  bool ok;  // lambda_fragment >= min(lambda_whole, omega)
};

/// Splits an efficient path into maximal single-fragment segments and
/// checks the per-segment connectivity inequality.
std::vector<SegmentReport> segment_connectivity_check(const Decomposition& d,
                                                      const PathWitness& p);

/// Union of per-fragment orientations (well defined by edge-disjointness).
Orientation glue_decomposition_orientations(const ExtMultigraph& g, const Decomposition& d,
                                            const std::vector<Orientation>& parts);

}  // namespace wbo

#endif
