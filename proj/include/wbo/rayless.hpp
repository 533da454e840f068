#ifndef WBO_RAYLESS_HPP
#define WBO_RAYLESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wbo/connectivity.hpp"
#include "wbo/graph.hpp"
#include "wbo/orienter.hpp"

namespace wbo {

/// One component template of a symbolic rayless graph: a finite graph on
/// local vertex names, an injective attachment of some of its vertices onto
/// separator vertices of the core, and a copy count in ExtNat. Attached
/// vertices are identified with their targets in every copy; the
/// non-attached part (the interior) must be connected and nonempty, and no
/// two attached vertices may be adjacent inside the template.
struct TemplateEntry {
  std::string name;
  ExtMultigraph graph;               // local names
  std::map<Vertex, Vertex> attach;   // local vertex -> separator vertex
  ExtNat copies;

  friend bool operator==(const TemplateEntry&, const TemplateEntry&) = default;
};

/// Symbolic rayless graph of order <= 1: a finite core with a designated
/// finite separator U, plus finitely many templates each repeated finitely
/// or omega-many times. Every copy of a template is one component of G - U.
class StarRayless {
 public:
  StarRayless() = default;
  StarRayless(ExtMultigraph core, std::set<Vertex> separator,
              std::vector<TemplateEntry> templates);  // validates

  const ExtMultigraph& core() const { return core_; }
  const std::set<Vertex>& separator() const { return separator_; }
  const std::vector<TemplateEntry>& templates() const { return templates_; }

  friend bool operator==(const StarRayless&, const StarRayless&) = default;

 private:
  ExtMultigraph core_;
  std::set<Vertex> separator_;
  std::vector<TemplateEntry> templates_;
};

/// The component-plus-attachment-edges graph of a template, on local names:
/// interior vertices, attached vertices that carry at least one edge, and
/// the edges between them.
ExtMultigraph template_cbar(const TemplateEntry& t);

/// Attached local vertices of t that carry at least one edge, i.e. the
/// local preimage of N(C).
std::set<Vertex> template_boundary(const TemplateEntry& t);

/// Schmidt order restricted to {0, 1}: 0 iff all copy counts are finite.
int order(const StarRayless& s);

/// Explicit finite model: omega copy counts replaced by `cap` copies with
/// deterministic names "<templateIndex>.<copyIndex>.<vertex>"; finite
/// counts expanded exactly.
ExtMultigraph instantiate(const StarRayless& s, std::uint64_t cap);

/// Finite lambda-equivalent model: finite templates expanded explicitly;
/// each omega template replaced by omega bundles between every pair of its
/// attach targets connected within one copy.
ExtMultigraph surrogate(const StarRayless& s);

/// Edge connectivity in the symbolic graph. Endpoints are core vertices or
/// addressed copy vertices ("<templateIndex>.<copyIndex>.<vertex>"); each
/// endpoint inside an omega template gets one explicit copy, the rest stays
/// surrogate.
ExtNat lambda_symbolic(const StarRayless& s, const Vertex& x, const Vertex& y);

struct SymbolicOrientation {
  struct TemplateClass {
    Orientation oriented;  // orients template_cbar(t), local names
    ExtNat copies;
    friend bool operator==(const TemplateClass&, const TemplateClass&) = default;
  };

  Orientation core_arcs;                                   // orients the core
  std::vector<std::vector<TemplateClass>> template_classes;  // per template

  friend bool operator==(const SymbolicOrientation&, const SymbolicOrientation&) = default;
};

/// Throws InconsistentClasses unless o orients s: core arcs over the core,
/// each class over its template's cbar, class copies summing to the
/// template's copy count.
void validate_symbolic(const StarRayless& s, const SymbolicOrientation& o);

struct AuxiliaryGraphs {
  std::set<Vertex> u;
  std::map<VertexPair, ExtNat> c_counts;  // components attaching to both endpoints
  std::map<VertexPair, ExtNat> d_counts;  // oriented such components with a directed connection
  std::set<VertexPair> r_edges;           // pairs with c = omega
  std::set<VertexPair> l_edges;           // pairs with d = omega
  std::vector<std::set<Vertex>> sim_classes;  // components of R (all of U covered)
  std::uint64_t c_lt_infty = 0;               // number of components outside C_infty

  bool equivalent(const Vertex& x, const Vertex& y) const;
};

/// The counting graphs of the induction step. d_counts/l_edges require an
/// orientation and stay empty without one.
AuxiliaryGraphs build_auxiliary(const StarRayless& s, const SymbolicOrientation* oriented = nullptr);

struct LGraph {
  std::set<Vertex> vertices;
  std::set<VertexPair> edges;
};

/// The simple graph on a contractible set n joining pairs with a directed
/// connection in at least one direction.
LGraph build_L_graph(const Orientation& d, const std::set<Vertex>& n);

bool is_connected(const LGraph& l);

/// Oracle for the connectivity theorem: lifts a well-balanced orientation
/// of g/n to g and reports whether L(g_oriented, n) is connected (it always
/// should be; a disconnection indicates a bug).
bool check_L_connected(const ExtMultigraph& g, const std::set<Vertex>& n,
                       const Orientation& d_quotient);

/// The order-<=1 induction step: deletes the bundles between equivalent
/// separator vertices, orients the finite part and each omega component
/// class, flips per-direction omega sub-classes along the edges of L, glues
/// along the star tree-decomposition and lifts. The result passes
/// verify_symbolic.
SymbolicOrientation orient_rayless1(const StarRayless& s, Seed seed = 0);

/// Pairwise verifier over core vertices plus one representative copy per
/// template, computed on directed/undirected surrogates with matching
/// explicit expansions.
ConnectivityReport verify_symbolic(const StarRayless& s, const SymbolicOrientation& o);

/// Concrete orientation of instantiate(s, cap): class copies allocated
/// round-robin, omega classes sharing the remaining copies as evenly as
/// possible.
Orientation instantiate_orientation(const StarRayless& s, const SymbolicOrientation& o,
                                    std::uint64_t cap);

}  // namespace wbo

#endif
