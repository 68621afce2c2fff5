#ifndef TOGGLE_GROUP_PERMUTATION_HPP
#define TOGGLE_GROUP_PERMUTATION_HPP

// Permutations of {1..m} with canonical cycle-notation text I/O.
//
// Points are 1-based in every public function. Products follow function
// composition: compose(g, h)(x) == g(h(x)).

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace toggle_group
{

using Point = std::size_t;

class Permutation
{
public:
  using storage_type = std::uint32_t;

  /// Identity of degree 1; use identity(m) for anything else.
  Permutation() : _images{0} {}

  /// `images[i-1]` is the image of point i (1-based values).
  static Permutation from_images(std::span<Point const> images)
  {
    if (images.empty())
      throw DegreeError("permutation degree must be at least 1");

    std::vector<storage_type> table(images.size());
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
      Point const y = images[i];
      if (y < 1 || y > images.size())
        throw RangeError("image " + std::to_string(y) + " outside 1.." +
                         std::to_string(images.size()));
      if (seen[y - 1])
        throw RangeError("image " + std::to_string(y) + " repeated");
      seen[y - 1] = true;
      table[i] = static_cast<storage_type>(y - 1);
    }
    return Permutation(std::move(table));
  }

  static Permutation from_images(std::initializer_list<Point> images)
  {
    std::vector<Point> v(images);
    return from_images(std::span<Point const>(v));
  }

  /// Unchecked construction from a 0-based image table. The caller
  /// guarantees the table is a bijection of {0..m-1}.
  static Permutation from_zero_based(std::vector<storage_type> table)
  {
    return Permutation(std::move(table));
  }

  std::size_t degree() const noexcept { return _images.size(); }

  /// Image of the 1-based point x.
  Point operator()(Point x) const
  {
    if (x < 1 || x > degree())
      throw RangeError("point " + std::to_string(x) + " outside 1.." +
                       std::to_string(degree()));
    return static_cast<Point>(_images[x - 1]) + 1;
  }

  /// 0-based image table.
  std::span<storage_type const> table() const noexcept { return _images; }

  bool is_identity() const noexcept
  {
    for (std::size_t i = 0; i < _images.size(); ++i)
      if (_images[i] != i)
        return false;
    return true;
  }

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  explicit Permutation(std::vector<storage_type> table)
    : _images(std::move(table))
  {}

  std::vector<storage_type> _images;
};

/// Canonical cycle decomposition: each cycle starts at its minimum,
/// cycles sorted by first element, fixed points omitted.
struct CycleForm
{
  std::size_t degree = 1;
  std::vector<std::vector<Point>> cycles;

  friend bool operator==(CycleForm const &, CycleForm const &) = default;
};

inline Permutation identity(std::size_t m)
{
  if (m == 0)
    throw DegreeError("permutation degree must be at least 1");
  std::vector<Permutation::storage_type> table(m);
  for (std::size_t i = 0; i < m; ++i)
    table[i] = static_cast<Permutation::storage_type>(i);
  return Permutation::from_zero_based(std::move(table));
}

inline Point apply(Permutation const &g, Point x) { return g(x); }

inline Permutation transposition(std::size_t m, Point a, Point b)
{
  Permutation const id = identity(m);
  if (a < 1 || a > m || b < 1 || b > m)
    throw RangeError("transposition point outside 1.." + std::to_string(m));
  std::vector<Permutation::storage_type> table(id.table().begin(),
                                               id.table().end());
  std::swap(table[a - 1], table[b - 1]);
  return Permutation::from_zero_based(std::move(table));
}

namespace detail
{

inline void require_same_degree(Permutation const &g, Permutation const &h,
                                char const *op)
{
  if (g.degree() != h.degree())
    throw DegreeError(std::string(op) + ": degree mismatch (" +
                      std::to_string(g.degree()) + " vs " +
                      std::to_string(h.degree()) + ")");
}

} // namespace detail

/// g∘h, i.e. x ↦ g(h(x)).
inline Permutation compose(Permutation const &g, Permutation const &h)
{
  detail::require_same_degree(g, h, "compose");
  auto const gt = g.table();
  auto const ht = h.table();
  std::vector<Permutation::storage_type> table(gt.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    table[i] = gt[ht[i]];
  return Permutation::from_zero_based(std::move(table));
}

inline Permutation inverse(Permutation const &g)
{
  auto const gt = g.table();
  std::vector<Permutation::storage_type> table(gt.size());
  for (std::size_t i = 0; i < gt.size(); ++i)
    table[gt[i]] = static_cast<Permutation::storage_type>(i);
  return Permutation::from_zero_based(std::move(table));
}

/// by·g·by⁻¹: the cycles of g with every entry relabelled through `by`.
inline Permutation conjugate(Permutation const &g, Permutation const &by)
{
  detail::require_same_degree(g, by, "conjugate");
  auto const gt = g.table();
  auto const bt = by.table();
  std::vector<Permutation::storage_type> table(gt.size());
  for (std::size_t i = 0; i < gt.size(); ++i)
    table[bt[i]] = bt[gt[i]];
  return Permutation::from_zero_based(std::move(table));
}

inline Permutation power(Permutation const &g, std::size_t exponent)
{
  Permutation result = identity(g.degree());
  Permutation base = g;
  while (exponent > 0) {
    if (exponent & 1u)
      result = compose(result, base);
    base = compose(base, base);
    exponent >>= 1u;
  }
  return result;
}

/// Embeds g into S_m (m ≥ degree) fixing the new points.
inline Permutation extend(Permutation const &g, std::size_t m)
{
  if (m < g.degree())
    throw DegreeError("extend: target degree " + std::to_string(m) +
                      " below " + std::to_string(g.degree()));
  std::vector<Permutation::storage_type> table(m);
  auto const gt = g.table();
  for (std::size_t i = 0; i < m; ++i)
    table[i] = i < gt.size() ? gt[i]
                             : static_cast<Permutation::storage_type>(i);
  return Permutation::from_zero_based(std::move(table));
}

inline CycleForm cycles(Permutation const &g)
{
  CycleForm form;
  form.degree = g.degree();
  auto const gt = g.table();
  std::vector<bool> visited(gt.size(), false);
  for (std::size_t start = 0; start < gt.size(); ++start) {
    if (visited[start] || gt[start] == start)
      continue;
    std::vector<Point> cycle;
    for (std::size_t x = start; !visited[x]; x = gt[x]) {
      visited[x] = true;
      cycle.push_back(x + 1);
    }
    form.cycles.push_back(std::move(cycle));
  }
  return form;
}

/// Sorted lengths of the nontrivial cycles.
inline std::vector<std::size_t> cycle_type(Permutation const &g)
{
  std::vector<std::size_t> lengths;
  for (auto const &c : cycles(g).cycles)
    lengths.push_back(c.size());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

/// Points moved by g, ascending.
inline std::vector<Point> support(Permutation const &g)
{
  std::vector<Point> moved;
  auto const gt = g.table();
  for (std::size_t i = 0; i < gt.size(); ++i)
    if (gt[i] != i)
      moved.push_back(i + 1);
  return moved;
}

/// +1 for even permutations, -1 for odd.
inline int parity(Permutation const &g)
{
  std::size_t transpositions = 0;
  for (auto const &c : cycles(g).cycles)
    transpositions += c.size() - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

/// Builds a permutation from explicit cycles; each point may occur once.
inline Permutation from_cycles(std::size_t m,
                               std::vector<std::vector<Point>> const &cs)
{
  Permutation const id = identity(m);
  std::vector<Permutation::storage_type> table(id.table().begin(),
                                               id.table().end());
  std::vector<bool> used(m, false);
  for (auto const &c : cs) {
    for (Point p : c) {
      if (p < 1 || p > m)
        throw RangeError("point " + std::to_string(p) + " outside 1.." +
                         std::to_string(m));
      if (used[p - 1])
        throw RangeError("point " + std::to_string(p) + " repeated");
      used[p - 1] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
      table[c[i] - 1] =
        static_cast<Permutation::storage_type>(c[(i + 1) % c.size()] - 1);
  }
  return Permutation::from_zero_based(std::move(table));
}

inline std::string format_cycles(Permutation const &g)
{
  CycleForm const form = cycles(g);
  if (form.cycles.empty())
    return "()";
  std::string out;
  for (auto const &c : form.cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0)
        out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

/// Parses `perm := "()" | cycle+ ; cycle := "(" int ("," int)+ ")"`,
/// whitespace allowed between tokens.
inline Permutation parse_cycles(std::string_view text, std::size_t degree)
{
  if (degree == 0)
    throw DegreeError("permutation degree must be at least 1");

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  auto read_int = [&] {
    skip_ws();
    std::size_t const start = pos;
    Point value = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<Point>(text[pos] - '0');
      if (value > degree)
        throw ParseError("point exceeds degree " + std::to_string(degree),
                         start);
      ++pos;
    }
    if (pos == start)
      throw ParseError("expected integer", start);
    if (value == 0)
      throw ParseError("points are numbered from 1", start);
    return std::pair{value, start};
  };

  std::vector<std::vector<Point>> cs;
  std::vector<bool> used(degree, false);

  skip_ws();
  if (pos >= text.size())
    throw ParseError("empty permutation text", pos);

  // "()" is the identity and must stand alone.
  {
    std::size_t probe = pos + 1;
    while (probe < text.size() &&
           std::isspace(static_cast<unsigned char>(text[probe])))
      ++probe;
    if (text[pos] == '(' && probe < text.size() && text[probe] == ')') {
      pos = probe + 1;
      skip_ws();
      if (pos != text.size())
        throw ParseError("trailing text after identity", pos);
      return identity(degree);
    }
  }

  while (true) {
    skip_ws();
    if (pos >= text.size())
      break;
    expect('(');
    std::vector<Point> cycle;
    while (true) {
      auto const [value, at] = read_int();
      if (used[value - 1])
        throw ParseError("point " + std::to_string(value) + " repeated", at);
      used[value - 1] = true;
      cycle.push_back(value);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    std::size_t const close_at = pos;
    expect(')');
    if (cycle.size() < 2)
      throw ParseError("cycle needs at least two points", close_at);
    cs.push_back(std::move(cycle));
  }
  return from_cycles(degree, cs);
}

inline std::ostream &operator<<(std::ostream &os, Permutation const &g)
{
  return os << format_cycles(g);
}

struct PermutationHash
{
  std::size_t operator()(Permutation const &g) const noexcept
  {
    std::size_t h = g.degree();
    for (auto v : g.table())
      h = h * 1000003u ^ v;
    return h;
  }
};

} // namespace toggle_group

#endif // TOGGLE_GROUP_PERMUTATION_HPP
