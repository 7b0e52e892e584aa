#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace aee {

using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

// Sorted, duplicate-free list of vertex ids.
using VertexList = std::vector<VertexId>;

struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with stable vertex identifiers.
///
/// Ids are dense at construction time. Removing a vertex leaves a hole; ids
/// handed out by add_vertex() continue from the largest id ever used and are
/// never reused. Adjacency lists are kept sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(VertexId vertex_count);

  static Graph from_edges(VertexId vertex_count, std::span<const Edge> edges);

  VertexId add_vertex();
  void add_edge(VertexId u, VertexId v);
  void remove_vertex(VertexId v);
  void remove_vertices(std::span<const VertexId> vs);

  bool contains(VertexId v) const {
    return v >= 0 && v < id_bound() && alive_[static_cast<std::size_t>(v)];
  }
  bool adjacent(VertexId u, VertexId v) const;
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  std::size_t order() const { return order_; }
  std::size_t size() const { return size_; }
  bool empty() const { return order_ == 0; }

  // One past the largest id ever issued.
  VertexId id_bound() const { return static_cast<VertexId>(alive_.size()); }

  VertexList vertices() const;
  std::vector<Edge> edges() const;

  // Subgraphs keep the original ids.
  Graph without(std::span<const VertexId> removed) const;
  Graph induced(std::span<const VertexId> kept) const;

  bool is_clique(std::span<const VertexId> vs) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<char> alive_;
  std::size_t order_ = 0;
  std::size_t size_ = 0;
};

/// Membership mask over a graph's id space.
class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(VertexId id_bound) : bits_(static_cast<std::size_t>(id_bound), 0) {}
  VertexMask(VertexId id_bound, std::span<const VertexId> members);

  bool operator[](VertexId v) const {
    return v >= 0 && static_cast<std::size_t>(v) < bits_.size() && bits_[static_cast<std::size_t>(v)];
  }
  void insert(VertexId v);
  void erase(VertexId v);

 private:
  std::vector<char> bits_;
};

enum class Color : std::uint8_t { kRed = 0, kBlue = 1 };

constexpr Color opposite(Color c) { return c == Color::kRed ? Color::kBlue : Color::kRed; }
constexpr int to_int(Color c) { return static_cast<int>(c); }
constexpr Color color_from_int(int bit) { return bit ? Color::kBlue : Color::kRed; }

/// Partial or total map vertex -> {red, blue}.
class Assignment {
 public:
  Assignment() = default;

  void set(VertexId v, Color c);
  void erase(VertexId v);
  bool contains(VertexId v) const;
  Color at(VertexId v) const;  // throws PreconditionError if unset
  std::size_t size() const { return count_; }

  VertexList domain() const;
  bool covers(const Graph& g) const;
  bool has_domain(std::span<const VertexId> vs) const;

  void flip_all();

  friend bool operator==(const Assignment& a, const Assignment& b);

 private:
  static constexpr std::int8_t kUnset = -1;
  std::vector<std::int8_t> colors_;
  std::size_t count_ = 0;
};

/// Number of edges whose endpoints receive different colors.
/// Throws PreconditionError if a vertex of `g` is unassigned.
std::int64_t cut_value(const Graph& g, const Assignment& a);

}  // namespace aee
