#include "maxcut_aee/graph.hpp"

#include <algorithm>
#include <string>

#include "maxcut_aee/errors.hpp"

namespace aee {

Graph::Graph(VertexId vertex_count) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
  alive_.assign(static_cast<std::size_t>(vertex_count), 1);
  order_ = static_cast<std::size_t>(vertex_count);
}

Graph Graph::from_edges(VertexId vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::check_vertex(VertexId v) const {
  if (!contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " not in graph");
}

VertexId Graph::add_vertex() {
  const VertexId id = id_bound();
  adjacency_.emplace_back();
  alive_.push_back(1);
  ++order_;
  return id;
}

void Graph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  auto& nu = adjacency_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) {
    throw PreconditionError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  nu.insert(it, v);
  auto& nv = adjacency_[static_cast<std::size_t>(v)];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++size_;
}

void Graph::remove_vertex(VertexId v) {
  check_vertex(v);
  auto& nv = adjacency_[static_cast<std::size_t>(v)];
  for (VertexId w : nv) {
    auto& nw = adjacency_[static_cast<std::size_t>(w)];
    nw.erase(std::lower_bound(nw.begin(), nw.end(), v));
  }
  size_ -= nv.size();
  nv.clear();
  nv.shrink_to_fit();
  alive_[static_cast<std::size_t>(v)] = 0;
  --order_;
}

void Graph::remove_vertices(std::span<const VertexId> vs) {
  for (VertexId v : vs) remove_vertex(v);
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& nu = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return adjacency_[static_cast<std::size_t>(v)];
}

VertexList Graph::vertices() const {
  VertexList out;
  out.reserve(order_);
  for (VertexId v = 0; v < id_bound(); ++v) {
    if (alive_[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (VertexId u = 0; u < id_bound(); ++u) {
    if (!alive_[static_cast<std::size_t>(u)]) continue;
    for (VertexId v : adjacency_[static_cast<std::size_t>(u)]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::without(std::span<const VertexId> removed) const {
  Graph g = *this;
  for (VertexId v : removed) {
    if (g.contains(v)) g.remove_vertex(v);
  }
  return g;
}

Graph Graph::induced(std::span<const VertexId> kept) const {
  VertexMask keep(id_bound(), kept);
  VertexList dropped;
  for (VertexId v : vertices()) {
    if (!keep[v]) dropped.push_back(v);
  }
  return without(dropped);
}

bool Graph::is_clique(std::span<const VertexId> vs) const {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.vertices() == b.vertices() && a.edges() == b.edges();
}

VertexMask::VertexMask(VertexId id_bound, std::span<const VertexId> members) : VertexMask(id_bound) {
  for (VertexId v : members) insert(v);
}

void VertexMask::insert(VertexId v) {
  if (v < 0) throw PreconditionError("negative vertex id");
  if (static_cast<std::size_t>(v) >= bits_.size()) bits_.resize(static_cast<std::size_t>(v) + 1, 0);
  bits_[static_cast<std::size_t>(v)] = 1;
}

void VertexMask::erase(VertexId v) {
  if (v >= 0 && static_cast<std::size_t>(v) < bits_.size()) bits_[static_cast<std::size_t>(v)] = 0;
}

void Assignment::set(VertexId v, Color c) {
  if (v < 0) throw PreconditionError("negative vertex id");
  const auto idx = static_cast<std::size_t>(v);
  if (idx >= colors_.size()) colors_.resize(idx + 1, kUnset);
  if (colors_[idx] == kUnset) ++count_;
  colors_[idx] = static_cast<std::int8_t>(c);
}

void Assignment::erase(VertexId v) {
  if (!contains(v)) return;
  colors_[static_cast<std::size_t>(v)] = kUnset;
  --count_;
}

bool Assignment::contains(VertexId v) const {
  return v >= 0 && static_cast<std::size_t>(v) < colors_.size() && colors_[static_cast<std::size_t>(v)] != kUnset;
}

Color Assignment::at(VertexId v) const {
  if (!contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " is not assigned");
  return static_cast<Color>(colors_[static_cast<std::size_t>(v)]);
}

VertexList Assignment::domain() const {
  VertexList out;
  out.reserve(count_);
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (colors_[i] != kUnset) out.push_back(static_cast<VertexId>(i));
  }
  return out;
}

bool Assignment::covers(const Graph& g) const {
  for (VertexId v : g.vertices()) {
    if (!contains(v)) return false;
  }
  return true;
}

bool Assignment::has_domain(std::span<const VertexId> vs) const {
  if (vs.size() != count_) return false;
  return std::all_of(vs.begin(), vs.end(), [&](VertexId v) { return contains(v); });
}

void Assignment::flip_all() {
  for (auto& c : colors_) {
    if (c != kUnset) c = static_cast<std::int8_t>(1 - c);
  }
}

bool operator==(const Assignment& a, const Assignment& b) {
  if (a.count_ != b.count_) return false;
  for (VertexId v : a.domain()) {
    if (!b.contains(v) || a.at(v) != b.at(v)) return false;
  }
  return true;
}

std::int64_t cut_value(const Graph& g, const Assignment& a) {
  std::int64_t cut = 0;
  for (VertexId u : g.vertices()) {
    const Color cu = a.at(u);
    for (VertexId v : g.neighbors(u)) {
      if (u < v && a.at(v) != cu) ++cut;
    }
  }
  return cut;
}

}  // namespace aee
