#ifndef TOGGLE_GROUP_FIB_INDEX_HPP
#define TOGGLE_GROUP_FIB_INDEX_HPP

// Fibonacci numbers and the ranking ι_n : I_n → {1..f_{n+2}} of the
// independent sets of the path A_n.
//
// ι_1 and ι_2 are the tables {}↦1, {1}↦2, {2}↦3. For n > 2 a set without
// vertex n keeps its index in I_{n-1}; a set with vertex n is ranked as
// I∖{n} in I_{n-2} shifted by f_{n+1}.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace toggle_group
{

inline constexpr std::size_t default_fib_ceiling = 64;

class FibTable
{
public:
  explicit FibTable(std::size_t ceiling = default_fib_ceiling)
    : _values(ceiling + 1)
  {
    if (ceiling > 93)
      throw RangeError("Fibonacci ceiling above 93 overflows 64 bits");
    _values[0] = 0;
    if (ceiling >= 1)
      _values[1] = 1;
    for (std::size_t i = 2; i <= ceiling; ++i)
      _values[i] = _values[i - 1] + _values[i - 2];
  }

  std::size_t ceiling() const noexcept { return _values.size() - 1; }

  std::uint64_t operator()(std::size_t n) const
  {
    if (n > ceiling())
      throw RangeError("Fibonacci index " + std::to_string(n) +
                       " above ceiling " + std::to_string(ceiling()));
    return _values[n];
  }

private:
  std::vector<std::uint64_t> _values;
};

inline FibTable const &default_fib_table()
{
  static FibTable const table;
  return table;
}

inline std::uint64_t fib(std::size_t n) { return default_fib_table()(n); }

/// Largest path length whose index range f_{n+2} stays under the ceiling.
inline std::size_t max_path_length()
{
  return default_fib_table().ceiling() - 2;
}

namespace detail
{

inline void require_path_length(std::size_t n)
{
  if (n < 1 || n > max_path_length())
    throw RangeError("path length " + std::to_string(n) + " outside 1.." +
                     std::to_string(max_path_length()));
}

inline void require_path_set(std::size_t n, IndependentSet const &I)
{
  require_path_length(n);
  if (I.ambient_size() != n)
    throw RangeError("independent set over " +
                     std::to_string(I.ambient_size()) +
                     " vertices used with A_" + std::to_string(n));
  if (I.mask() & (I.mask() >> 1))
    throw IndependenceError(format_set(I) + " is not independent in A_" +
                            std::to_string(n));
}

} // namespace detail

/// ι_n(I).
inline std::uint64_t iota(std::size_t n, IndependentSet const &I)
{
  detail::require_path_set(n, I);
  std::uint64_t const mask = I.mask();
  std::uint64_t index = 1;
  std::size_t m = n;
  while (m > 2) {
    if ((mask >> (m - 1)) & 1u) {
      index += fib(m + 1);
      m -= 2;
    } else {
      m -= 1;
    }
  }
  if (m >= 1 && (mask & 1u))
    index += 1;
  if (m == 2 && (mask & 2u))
    index += 2;
  return index;
}

/// The set with ι_n = idx.
inline IndependentSet iota_inverse(std::size_t n, std::uint64_t idx)
{
  detail::require_path_length(n);
  if (idx < 1 || idx > fib(n + 2))
    throw RangeError("index " + std::to_string(idx) + " outside 1.." +
                     std::to_string(fib(n + 2)));
  std::uint64_t mask = 0;
  std::size_t m = n;
  while (m > 2) {
    if (idx > fib(m + 1)) {
      idx -= fib(m + 1);
      mask |= std::uint64_t{1} << (m - 1);
      m -= 2;
    } else {
      m -= 1;
    }
  }
  if (idx == 2)
    mask |= 1u;
  else if (idx == 3)
    mask |= 2u;
  return VertexSet(n, mask);
}

/// φ_{n-2}: drops vertex n from a set containing it, landing in I_{n-2}.
inline IndependentSet phi(std::size_t n, IndependentSet const &I)
{
  detail::require_path_set(n, I);
  if (n < 2)
    throw RangeError("removal map needs n at least 2");
  if (!I.contains(n))
    throw RangeError("removal map needs vertex " + std::to_string(n) +
                     " in " + format_set(I));
  return I.without(n).resized(n - 2);
}

/// ι_n(I∪{n}) = ι_n(I) + f_{n+1} over every I ∈ I_{n-2}.
inline bool index_shift_identity_check(std::size_t n)
{
  detail::require_path_length(n);
  if (n < 3)
    throw RangeError("shift identity needs n at least 3");
  for (std::uint64_t j = 1; j <= fib(n); ++j) {
    IndependentSet const small = iota_inverse(n - 2, j).resized(n);
    if (iota(n, small.with(n)) != iota(n, small) + fib(n + 1))
      return false;
  }
  return true;
}

/// I_n listed so that position j (0-based) holds the set of index j+1.
/// Built from the two-block decomposition I_{n-1} ++ (I_{n-2} ∪ {n}).
inline std::vector<IndependentSet>
enumerate_independent_sets(PathGraph const &path,
                           std::uint64_t max_sets = std::uint64_t{1} << 24)
{
  std::size_t const n = path.n;
  detail::require_path_length(n);
  if (fib(n + 2) > max_sets)
    throw ResourceError("I_" + std::to_string(n) + " has " +
                        std::to_string(fib(n + 2)) + " sets, above the bound " +
                        std::to_string(max_sets));

  // Masks only; ambient size is attached at the end.
  std::vector<std::uint64_t> two_back{0, 1};      // I_1
  std::vector<std::uint64_t> one_back{0, 1, 2};   // I_2
  std::vector<std::uint64_t> const *result = n == 1 ? &two_back : &one_back;
  for (std::size_t m = 3; m <= n; ++m) {
    std::vector<std::uint64_t> next = one_back;
    std::uint64_t const top = std::uint64_t{1} << (m - 1);
    for (auto mask : two_back)
      next.push_back(mask | top);
    two_back = std::move(one_back);
    one_back = std::move(next);
    result = &one_back;
  }
  std::vector<IndependentSet> out;
  out.reserve(result->size());
  for (auto mask : *result)
    out.emplace_back(n, mask);
  return out;
}

/// ι_n tabulated in both directions.
class IndexedFamily
{
public:
  explicit IndexedFamily(std::size_t n)
    : _n(n), _backward(enumerate_independent_sets(PathGraph{n}))
  {
    _forward.reserve(_backward.size());
    for (std::size_t j = 0; j < _backward.size(); ++j)
      _forward.emplace(_backward[j].mask(), j + 1);
  }

  std::size_t n() const noexcept { return _n; }
  std::uint64_t size() const noexcept { return _backward.size(); }

  std::uint64_t index_of(IndependentSet const &I) const
  {
    detail::require_path_set(_n, I);
    return _forward.at(I.mask());
  }

  IndependentSet const &set_at(std::uint64_t idx) const
  {
    if (idx < 1 || idx > _backward.size())
      throw RangeError("index " + std::to_string(idx) + " outside 1.." +
                       std::to_string(_backward.size()));
    return _backward[idx - 1];
  }

  std::vector<IndependentSet> const &sets() const noexcept
  {
    return _backward;
  }

private:
  std::size_t _n;
  std::vector<IndependentSet> _backward;
  std::unordered_map<std::uint64_t, std::uint64_t> _forward;
};

} // namespace toggle_group

#endif // TOGGLE_GROUP_FIB_INDEX_HPP
