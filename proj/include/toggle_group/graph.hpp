#ifndef TOGGLE_GROUP_GRAPH_HPP
#define TOGGLE_GROUP_GRAPH_HPP

// Simple graphs on at most 64 vertices, their independent sets, and the
// toggle involutions τ_v.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace toggle_group
{

using Vertex = std::size_t;

inline constexpr std::size_t max_vertices = 64;

/// A subset of {1..n} stored as a bitmask; bit v-1 is vertex v.
class VertexSet
{
public:
  VertexSet() = default;

  explicit VertexSet(std::size_t n, std::uint64_t mask = 0) : _n(n), _mask(mask)
  {
    if (n > max_vertices)
      throw RangeError("at most " + std::to_string(max_vertices) +
                       " vertices are supported");
    if (n < max_vertices && (mask >> n) != 0)
      throw RangeError("vertex set mask exceeds " + std::to_string(n) +
                       " vertices");
  }

  static VertexSet of(std::size_t n, std::vector<Vertex> const &members)
  {
    VertexSet s(n);
    for (Vertex v : members)
      s = s.with(v);
    return s;
  }

  std::size_t ambient_size() const noexcept { return _n; }
  std::uint64_t mask() const noexcept { return _mask; }
  std::size_t size() const noexcept
  {
    return static_cast<std::size_t>(std::popcount(_mask));
  }
  bool empty() const noexcept { return _mask == 0; }

  bool contains(Vertex v) const
  {
    check(v);
    return (_mask >> (v - 1)) & 1u;
  }

  VertexSet with(Vertex v) const
  {
    check(v);
    return VertexSet(_n, _mask | bit(v));
  }

  VertexSet without(Vertex v) const
  {
    check(v);
    return VertexSet(_n, _mask & ~bit(v));
  }

  /// Same members viewed inside {1..m}; every member must be ≤ m.
  VertexSet resized(std::size_t m) const
  {
    if (m < max_vertices && (_mask >> m) != 0)
      throw RangeError("vertex set does not fit in " + std::to_string(m) +
                       " vertices");
    return VertexSet(m, _mask);
  }

  std::vector<Vertex> members() const
  {
    std::vector<Vertex> out;
    for (std::uint64_t m = _mask; m != 0; m &= m - 1)
      out.push_back(static_cast<Vertex>(std::countr_zero(m)) + 1);
    return out;
  }

  friend bool operator==(VertexSet const &, VertexSet const &) = default;

private:
  void check(Vertex v) const
  {
    if (v < 1 || v > _n)
      throw RangeError("vertex " + std::to_string(v) + " outside 1.." +
                       std::to_string(_n));
  }

  static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v - 1); }

  std::size_t _n = 0;
  std::uint64_t _mask = 0;
};

/// Independent sets are vertex sets; independence is checked where a
/// graph is available.
using IndependentSet = VertexSet;

class SimpleGraph
{
public:
  explicit SimpleGraph(std::size_t vertex_count = 0)
    : _adjacency(vertex_count, 0)
  {
    if (vertex_count > max_vertices)
      throw RangeError("at most " + std::to_string(max_vertices) +
                       " vertices are supported");
  }

  void add_edge(Vertex u, Vertex v)
  {
    check(u);
    check(v);
    if (u == v)
      throw RangeError("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v))
      throw RangeError("duplicate edge {" + std::to_string(u) + "," +
                       std::to_string(v) + "}");
    _adjacency[u - 1] |= std::uint64_t{1} << (v - 1);
    _adjacency[v - 1] |= std::uint64_t{1} << (u - 1);
  }

  std::size_t vertex_count() const noexcept { return _adjacency.size(); }

  bool adjacent(Vertex u, Vertex v) const
  {
    check(u);
    check(v);
    return (_adjacency[u - 1] >> (v - 1)) & 1u;
  }

  std::uint64_t neighbours(Vertex v) const
  {
    check(v);
    return _adjacency[v - 1];
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const
  {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 1; u <= vertex_count(); ++u)
      for (Vertex v = u + 1; v <= vertex_count(); ++v)
        if (adjacent(u, v))
          out.emplace_back(u, v);
    return out;
  }

private:
  void check(Vertex v) const
  {
    if (v < 1 || v > vertex_count())
      throw RangeError("vertex " + std::to_string(v) + " outside 1.." +
                       std::to_string(vertex_count()));
  }

  std::vector<std::uint64_t> _adjacency;
};

/// A_n: vertices 1..n, edges {i,i+1}.
inline SimpleGraph path_graph(std::size_t n)
{
  if (n == 0)
    throw RangeError("path graph needs at least one vertex");
  SimpleGraph g(n);
  for (Vertex i = 1; i < n; ++i)
    g.add_edge(i, i + 1);
  return g;
}

/// A_n as a distinct type so its independent sets can be listed in index
/// order rather than by size.
struct PathGraph
{
  std::size_t n;

  SimpleGraph graph() const { return path_graph(n); }
};

namespace detail
{

inline void require_ambient(SimpleGraph const &g, VertexSet const &s)
{
  if (s.ambient_size() != g.vertex_count())
    throw RangeError("vertex set over " + std::to_string(s.ambient_size()) +
                     " vertices used with a graph on " +
                     std::to_string(g.vertex_count()));
}

inline bool independent_mask(SimpleGraph const &g, std::uint64_t mask)
{
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    auto const v = static_cast<Vertex>(std::countr_zero(m)) + 1;
    if (g.neighbours(v) & mask)
      return false;
  }
  return true;
}

} // namespace detail

inline bool is_independent(SimpleGraph const &g, VertexSet const &s)
{
  detail::require_ambient(g, s);
  return detail::independent_mask(g, s.mask());
}

/// All independent sets, ordered by size and then lexicographically by
/// their ascending member lists.
inline std::vector<IndependentSet>
enumerate_independent_sets(SimpleGraph const &g)
{
  std::size_t const n = g.vertex_count();
  std::vector<std::vector<IndependentSet>> by_size(n + 1);

  // Backtracking in ascending vertex order yields each size class in
  // lexicographic order.
  auto recurse = [&](auto &&self, Vertex next, std::uint64_t mask) -> void {
    by_size[static_cast<std::size_t>(std::popcount(mask))].push_back(
      VertexSet(n, mask));
    for (Vertex v = next; v <= n; ++v) {
      if (g.neighbours(v) & mask)
        continue;
      self(self, v + 1, mask | (std::uint64_t{1} << (v - 1)));
    }
  };
  recurse(recurse, 1, 0);

  std::vector<IndependentSet> out;
  for (auto &cls : by_size)
    out.insert(out.end(), cls.begin(), cls.end());
  return out;
}

/// τ_v: remove v if present, add it if the result stays independent,
/// otherwise leave I alone.
inline IndependentSet toggle(SimpleGraph const &g, Vertex v,
                             IndependentSet const &I)
{
  detail::require_ambient(g, I);
  if (v < 1 || v > g.vertex_count())
    throw RangeError("toggle vertex " + std::to_string(v) + " outside 1.." +
                     std::to_string(g.vertex_count()));
  if (!detail::independent_mask(g, I.mask()))
    throw IndependenceError("toggle applied to a non-independent set");
  if (I.contains(v))
    return I.without(v);
  if (g.neighbours(v) & I.mask())
    return I;
  return I.with(v);
}

/// τ_{k,n} on I_n, computed without building the graph.
inline IndependentSet toggle_path(std::size_t n, Vertex k,
                                  IndependentSet const &I)
{
  if (n == 0 || n > max_vertices)
    throw RangeError("path length " + std::to_string(n) + " unsupported");
  if (I.ambient_size() != n)
    throw RangeError("independent set over " +
                     std::to_string(I.ambient_size()) +
                     " vertices used with A_" + std::to_string(n));
  if (k < 1 || k > n)
    throw RangeError("toggle vertex " + std::to_string(k) + " outside 1.." +
                     std::to_string(n));
  std::uint64_t const mask = I.mask();
  if (mask & (mask >> 1))
    throw IndependenceError("toggle applied to a non-independent set");

  std::uint64_t const self = std::uint64_t{1} << (k - 1);
  if (mask & self)
    return VertexSet(n, mask & ~self);
  std::uint64_t neighbours = 0;
  if (k > 1)
    neighbours |= self >> 1;
  if (k < n)
    neighbours |= self << 1;
  if (mask & neighbours)
    return I;
  return VertexSet(n, mask | self);
}

/// Members of I ascending; toggling each in turn empties I.
inline std::vector<Vertex> reduce_to_empty(SimpleGraph const &g,
                                           IndependentSet const &I)
{
  if (!is_independent(g, I))
    throw IndependenceError("reduce_to_empty needs an independent set");
  return I.members();
}

/// "{}" or "{v1,v2,...}", ascending, no spaces.
inline std::string format_set(VertexSet const &s)
{
  std::string out = "{";
  bool first = true;
  for (Vertex v : s.members()) {
    if (!first)
      out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

/// Parses the set text over {1..n}. Members must be strictly ascending.
inline VertexSet parse_set(std::string_view text, std::size_t n)
{
  std::size_t pos = 0;
  if (text.empty() || text[0] != '{')
    throw ParseError("expected '{'", 0);
  ++pos;
  VertexSet s(n);
  if (pos < text.size() && text[pos] == '}') {
    if (pos + 1 != text.size())
      throw ParseError("trailing text after set", pos + 1);
    return s;
  }
  Vertex previous = 0;
  while (true) {
    std::size_t const start = pos;
    Vertex v = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<Vertex>(text[pos] - '0');
      if (v > n)
        throw ParseError("vertex exceeds " + std::to_string(n), start);
      ++pos;
    }
    if (pos == start)
      throw ParseError("expected vertex", start);
    if (v == 0)
      throw ParseError("vertices are numbered from 1", start);
    if (v <= previous)
      throw ParseError("vertices must be strictly ascending", start);
    previous = v;
    s = s.with(v);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == '}') {
      if (pos + 1 != text.size())
        throw ParseError("trailing text after set", pos + 1);
      return s;
    }
    throw ParseError("expected ',' or '}'", pos);
  }
}

/// Graph file: first line `n`, then one `u v` edge per line. Blank lines
/// are ignored.
inline SimpleGraph read_graph(std::istream &in)
{
  std::string line;
  std::size_t line_no = 0;
  std::optional<SimpleGraph> graph;
  auto fail = [&](std::string const &msg) -> void {
    throw ParseError(msg + " (line " + std::to_string(line_no) + ")", 0);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    std::istringstream fields(line);
    if (!graph) {
      long long n = -1;
      if (!(fields >> n) || n < 0)
        fail("expected vertex count");
      std::string rest;
      if (fields >> rest)
        fail("unexpected text after vertex count");
      if (static_cast<unsigned long long>(n) > max_vertices)
        fail("vertex count exceeds " + std::to_string(max_vertices));
      graph.emplace(static_cast<std::size_t>(n));
      continue;
    }
    long long u = 0, v = 0;
    if (!(fields >> u >> v))
      fail("expected edge 'u v'");
    std::string rest;
    if (fields >> rest)
      fail("unexpected text after edge");
    if (u < 1 || v < 1 ||
        static_cast<std::size_t>(u) > graph->vertex_count() ||
        static_cast<std::size_t>(v) > graph->vertex_count())
      fail("edge endpoint out of range");
    try {
      graph->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } catch (RangeError const &e) {
      fail(e.what());
    }
  }
  if (!graph)
    throw ParseError("empty graph file", 0);
  return std::move(*graph);
}

} // namespace toggle_group

#endif // TOGGLE_GROUP_GRAPH_HPP
