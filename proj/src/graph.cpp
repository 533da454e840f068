#include "wbo/graph.hpp"

#include <algorithm>
#include <deque>

#include "wbo/error.hpp"

namespace wbo {

VertexPair pair_of(const Vertex& x, const Vertex& y) {
  if (x == y) fail(ErrorKind::EqualEndpoints, "loop pair {" + x + "," + y + "}");
  return x < y ? VertexPair{x, y} : VertexPair{y, x};
}

void ExtMultigraph::add_vertex(const Vertex& v) { vertices_.insert(v); }

void ExtMultigraph::add_edge(const Vertex& x, const Vertex& y, ExtNat m) {
  VertexPair p = pair_of(x, y);
  vertices_.insert(x);
  vertices_.insert(y);
  if (m == ExtNat(0)) return;
  edges_[p] += m;
}

ExtNat ExtMultigraph::mult(const Vertex& x, const Vertex& y) const {
  if (x == y) return 0;
  auto it = edges_.find(pair_of(x, y));
  return it == edges_.end() ? ExtNat(0) : it->second;
}

ExtNat ExtMultigraph::total_multiplicity() const {
  ExtNat t = 0;
  for (const auto& [p, m] : edges_) t += m;
  return t;
}

std::uint64_t ExtMultigraph::finite_total() const {
  std::uint64_t t = 0;
  for (const auto& [p, m] : edges_)
    if (m.is_finite()) t += m.value();
  return t;
}

void Skeleton::validate(const ExtMultigraph& g) const {
  for (const auto& [x, y] : pairs) {
    if (!g.has_vertex(x) || !g.has_vertex(y))
      fail(ErrorKind::UnknownVertex, "skeleton pair {" + x + "," + y + "} not in graph");
  }
}

Orientation::Orientation(ExtMultigraph base, std::map<Arc, ExtNat> arcs)
    : base_(std::move(base)), arcs_(std::move(arcs)) {
  for (auto it = arcs_.begin(); it != arcs_.end();) {
    if (it->second == ExtNat(0)) {
      it = arcs_.erase(it);
      continue;
    }
    const auto& [from, to] = it->first;
    if (!base_.has_vertex(from) || !base_.has_vertex(to))
      fail(ErrorKind::OrientationMismatch, "arc " + from + "->" + to + " uses unknown vertex");
    if (base_.mult(from, to) == ExtNat(0))
      fail(ErrorKind::OrientationMismatch, "arc " + from + "->" + to + " has no underlying edge");
    ++it;
  }
  for (const auto& [p, m] : base_.edges()) {
    ExtNat a = arc(p.first, p.second);
    ExtNat b = arc(p.second, p.first);
    if (m.is_finite()) {
      if (a.is_omega() || b.is_omega() || a + b != m)
        fail(ErrorKind::OrientationMismatch,
             "arcs on {" + p.first + "," + p.second + "} do not sum to the multiplicity");
    } else if (!a.is_omega() && !b.is_omega()) {
      fail(ErrorKind::OrientationMismatch,
           "omega bundle {" + p.first + "," + p.second + "} needs an omega direction");
    }
  }
}

ExtNat Orientation::arc(const Vertex& from, const Vertex& to) const {
  auto it = arcs_.find({from, to});
  return it == arcs_.end() ? ExtNat(0) : it->second;
}

Orientation reverse(const Orientation& d) {
  std::map<Arc, ExtNat> rev;
  for (const auto& [a, m] : d.arcs()) rev[{a.second, a.first}] = m;
  return Orientation(d.base(), std::move(rev));
}

bool dir_reachable(const Orientation& d, const Vertex& x, const Vertex& y) {
  if (x == y) return true;
  std::set<Vertex> seen{x};
  std::deque<Vertex> queue{x};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (const auto& [a, m] : d.arcs()) {
      if (a.first != v || seen.count(a.second)) continue;
      if (a.second == y) return true;
      seen.insert(a.second);
      queue.push_back(a.second);
    }
  }
  return false;
}

std::vector<std::set<Vertex>> components(const ExtMultigraph& g) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& [p, m] : g.edges()) {
    adj[p.first].push_back(p.second);
    adj[p.second].push_back(p.first);
  }
  std::set<Vertex> left = g.vertices();
  std::vector<std::set<Vertex>> result;
  while (!left.empty()) {
    Vertex start = *left.begin();
    std::set<Vertex> comp{start};
    std::deque<Vertex> queue{start};
    left.erase(start);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      auto it = adj.find(v);
      if (it == adj.end()) continue;
      for (const Vertex& w : it->second) {
        if (left.erase(w)) {
          comp.insert(w);
          queue.push_back(w);
        }
      }
    }
    result.push_back(std::move(comp));
  }
  return result;
}

std::set<Vertex> neighbors_in_rest(const ExtMultigraph& g, const std::set<Vertex>& component,
                                   const std::set<Vertex>& separator) {
  std::set<Vertex> rest;
  for (const Vertex& v : g.vertices())
    if (!separator.count(v)) rest.insert(v);
  ExtMultigraph without = induced_subgraph(g, rest);
  bool found = false;
  for (const auto& c : components(without))
    if (c == component) found = true;
  if (!found)
    fail(ErrorKind::Precondition, "not a component of the graph minus the separator");

  std::set<Vertex> result;
  for (const auto& [p, m] : g.edges()) {
    if (component.count(p.first) && separator.count(p.second)) result.insert(p.second);
    if (component.count(p.second) && separator.count(p.first)) result.insert(p.first);
  }
  return result;
}

ExtMultigraph delete_skeleton(const ExtMultigraph& g, const Skeleton& k) {
  k.validate(g);
  ExtMultigraph h;
  for (const Vertex& v : g.vertices()) h.add_vertex(v);
  for (const auto& [p, m] : g.edges())
    if (!k.pairs.count(p)) h.add_edge(p.first, p.second, m);
  return h;
}

ExtMultigraph induced_subgraph(const ExtMultigraph& g, const std::set<Vertex>& s) {
  ExtMultigraph h;
  for (const Vertex& v : g.vertices())
    if (s.count(v)) h.add_vertex(v);
  for (const auto& [p, m] : g.edges())
    if (s.count(p.first) && s.count(p.second)) h.add_edge(p.first, p.second, m);
  return h;
}

bool is_subgraph(const ExtMultigraph& h, const ExtMultigraph& g) {
  for (const Vertex& v : h.vertices())
    if (!g.has_vertex(v)) return false;
  for (const auto& [p, m] : h.edges())
    if (m > g.mult(p.first, p.second)) return false;
  return true;
}

}  // namespace wbo
