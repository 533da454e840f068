#ifndef WBO_FUZZ_HPP
#define WBO_FUZZ_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "wbo/contraction.hpp"
#include "wbo/graph.hpp"

namespace wbo {

using Rng = std::mt19937_64;

// Deterministic helpers on the raw engine (uniform_int_distribution is not
// portable across standard libraries).
std::uint64_t rng_below(Rng& rng, std::uint64_t n);

ExtMultigraph random_graph(Rng& rng, int max_vertices, int max_total_mult, int omega_pairs);
ExtMultigraph random_connected_graph(Rng& rng, int max_vertices, int max_total_mult,
                                     int omega_pairs = 0);

/// Random (g, k, spec) with spec contractible in g - ||k|| and every
/// skeleton pair equivalent or omega-connected in g - ||k||; equivalent
/// pairs additionally carry omega bundles in g or both-way omega
/// connectivity in g - ||k||.
struct ContractionTriple {
  ExtMultigraph g;
  Skeleton k;
  ContractionSpec spec;
};
ContractionTriple random_contraction_triple(Rng& rng, int max_vertices);

/// Random simple path between two distinct connected vertices; empty when
/// no component has two vertices.
std::vector<Vertex> random_path(Rng& rng, const ExtMultigraph& g);

struct FuzzOptions {
  std::uint64_t seed = 0;
  int size = 7;  // max vertices per instance
  std::uint32_t trials = 0;
  bool inject_fault = false;  // test hook: corrupts one verdict
};

struct FuzzFailure {
  std::uint32_t trial;
  std::string invariant;
  std::string replay;  // replayable instance description
};

struct FuzzSummary {
  std::uint32_t trials = 0;
  std::map<std::string, std::uint32_t> checks_run;
  std::vector<FuzzFailure> failures;
};

/// Runs the invariant suite (block gluing, contraction connectivity, the
/// two contraction inequalities, L-connectivity, efficient paths and the
/// segment inequality) on random instances.
FuzzSummary run_fuzz(const FuzzOptions& options);

}  // namespace wbo

#endif
