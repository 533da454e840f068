#ifndef WBO_CONNECTIVITY_HPP
#define WBO_CONNECTIVITY_HPP

#include <map>
#include <set>
#include <vector>

#include "wbo/graph.hpp"

namespace wbo {

struct CutCertificate {
  std::set<Vertex> source_side;
  std::map<VertexPair, ExtNat> cut_pairs;
  ExtNat value;
};

struct DirCutCertificate {
  std::set<Vertex> source_side;
  std::map<Arc, ExtNat> cut_arcs;
  ExtNat value;
};

/// Edge-connectivity between x and y: the min-cut value in ExtNat
/// arithmetic (omega iff every cut crosses an omega bundle).
ExtNat lambda(const ExtMultigraph& g, const Vertex& x, const Vertex& y,
              CutCertificate* cert = nullptr);

/// Arc-connectivity from x to y in an oriented graph.
ExtNat lambda_dir(const Orientation& d, const Vertex& x, const Vertex& y,
                  DirCutCertificate* cert = nullptr);

struct PairReport {
  Vertex x, y;
  ExtNat lam;
  ExtNat lam_xy, lam_yx;
  ExtNat required;  // floor(lam/2) for finite lam, omega for lam = omega
  bool satisfied;
};

struct ConnectivityReport {
  std::vector<PairReport> pairs;  // pairs with lam > 0 only
  bool all_satisfied = true;
};

/// Checks the well-balance condition for every vertex pair of g.
ConnectivityReport verify_well_balanced(const ExtMultigraph& g, const Orientation& d);

}  // namespace wbo

#endif
