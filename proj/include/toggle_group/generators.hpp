#ifndef TOGGLE_GROUP_GENERATORS_HPP
#define TOGGLE_GROUP_GENERATORS_HPP

// The Fibonacci-indexed involutions ĥt_n and t_{k,n} in S_{f_{n+2}}, the
// families G_n and G'_n, the diagonal subgroup S̃_{f_n} and its embedding,
// and the permutations that togglings induce through ι_n.

#include <cstddef>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "fib_index.hpp"
#include "graph.hpp"
#include "permutation.hpp"

namespace toggle_group
{

namespace detail
{

inline std::size_t path_degree(std::size_t n)
{
  require_path_length(n);
  return static_cast<std::size_t>(fib(n + 2));
}

} // namespace detail

/// (1, f_{n+1}+1)(2, f_{n+1}+2)…(f_n, f_{n+1}+f_n) in S_{f_{n+2}}.
inline Permutation hat_t(std::size_t n)
{
  std::size_t const m = detail::path_degree(n);
  std::size_t const shift = static_cast<std::size_t>(fib(n + 1));
  std::vector<Permutation::storage_type> table(m);
  for (std::size_t i = 0; i < m; ++i)
    table[i] = static_cast<Permutation::storage_type>(i);
  for (std::size_t i = 0; i < fib(n); ++i)
    std::swap(table[i], table[i + shift]);
  return Permutation::from_zero_based(std::move(table));
}

/// Memo of t_{k,n} at its native degree f_{n+2}. Readers share the lock;
/// a miss computes outside it and inserts under the exclusive lock.
class GeneratorCache
{
public:
  Permutation get(std::size_t k, std::size_t n)
  {
    std::size_t const m = detail::path_degree(n);
    if (k < 1 || k > n)
      throw RangeError("generator index k=" + std::to_string(k) +
                       " outside 1.." + std::to_string(n));
    {
      std::shared_lock lock(_mutex);
      if (auto it = _memo.find({k, n}); it != _memo.end())
        return it->second;
    }

    Permutation value;
    if (k == n) {
      value = hat_t(n);
    } else if (k == n - 1) {
      value = extend(get(n - 1, n - 1), m);
    } else {
      Permutation const upper = extend(get(k, n - 1), m);
      Permutation const lower = extend(get(k, n - 2), m);
      value = compose(upper, conjugate(lower, hat_t(n)));
    }

    std::unique_lock lock(_mutex);
    return _memo.try_emplace({k, n}, std::move(value)).first->second;
  }

private:
  std::shared_mutex _mutex;
  std::map<std::pair<std::size_t, std::size_t>, Permutation> _memo;
};

inline GeneratorCache &default_generator_cache()
{
  static GeneratorCache cache;
  return cache;
}

/// t_{k,n}.
inline Permutation t(std::size_t k, std::size_t n)
{
  return default_generator_cache().get(k, n);
}

struct GeneratorFamily
{
  std::size_t n;
  std::size_t degree;
  std::vector<Permutation> members; // t_{1,n} … t_{n,n}
};

/// G_n.
inline GeneratorFamily G(std::size_t n)
{
  GeneratorFamily family{n, detail::path_degree(n), {}};
  for (std::size_t k = 1; k <= n; ++k)
    family.members.push_back(t(k, n));
  return family;
}

/// G'_n = {t_{k,n} | k ≤ n-2}.
inline std::vector<Permutation> G_prime(std::size_t n)
{
  if (n < 3)
    throw RangeError("G'_n needs n at least 3");
  std::vector<Permutation> members;
  for (std::size_t k = 1; k + 2 <= n; ++k)
    members.push_back(t(k, n));
  return members;
}

/// S̃_{f_n} ⊂ S_{f_{n+2}}: permutations acting identically on F_n and on
/// its shift F̂_n, fixing the middle block f_n < i ≤ f_{n+1}.
struct TildeSubgroupSpec
{
  std::size_t n;

  explicit TildeSubgroupSpec(std::size_t n_) : n(n_)
  {
    if (n < 3)
      throw RangeError("S̃_{f_n} needs n at least 3");
    detail::require_path_length(n);
  }

  std::size_t degree() const { return static_cast<std::size_t>(fib(n + 2)); }
};

inline bool in_tilde_S(TildeSubgroupSpec const &spec, Permutation const &g)
{
  if (g.degree() != spec.degree())
    throw DegreeError("S̃ membership: degree " + std::to_string(g.degree()) +
                      " against " + std::to_string(spec.degree()));
  std::size_t const low = static_cast<std::size_t>(fib(spec.n));
  std::size_t const shift = static_cast<std::size_t>(fib(spec.n + 1));
  auto const gt = g.table();
  for (std::size_t i = 0; i < low; ++i) {
    if (gt[i] >= low)
      return false;
    if (gt[i + shift] != gt[i] + shift)
      return false;
  }
  for (std::size_t i = low; i < shift; ++i)
    if (gt[i] != i)
      return false;
  return true;
}

/// t ↦ t·ĥt_n t ĥt_n⁻¹ from S_{f_n} onto S̃_{f_n}.
inline Permutation varphi_embed(std::size_t n, Permutation const &t_small)
{
  TildeSubgroupSpec const spec(n);
  if (t_small.degree() != fib(n))
    throw DegreeError("embedding expects degree f_" + std::to_string(n) +
                      " = " + std::to_string(fib(n)) + ", got " +
                      std::to_string(t_small.degree()));
  Permutation const wide = extend(t_small, spec.degree());
  return compose(wide, conjugate(wide, hat_t(n)));
}

/// idx ↦ ι_n(τ_{k,n}(ι_n⁻¹(idx))), computed from the toggling itself.
inline Permutation toggle_permutation(std::size_t n, std::size_t k)
{
  std::size_t const m = detail::path_degree(n);
  if (k < 1 || k > n)
    throw RangeError("toggle vertex k=" + std::to_string(k) + " outside 1.." +
                     std::to_string(n));
  std::vector<Permutation::storage_type> table(m);
  for (std::size_t idx = 1; idx <= m; ++idx) {
    IndependentSet const I = iota_inverse(n, idx);
    table[idx - 1] = static_cast<Permutation::storage_type>(
      iota(n, toggle_path(n, k, I)) - 1);
  }
  return Permutation::from_zero_based(std::move(table));
}

/// {τ_{1,n}, …, τ_{n,n}} as permutations of {1..f_{n+2}}.
inline std::vector<Permutation> toggle_permutations(std::size_t n)
{
  std::vector<Permutation> perms;
  for (std::size_t k = 1; k <= n; ++k)
    perms.push_back(toggle_permutation(n, k));
  return perms;
}

} // namespace toggle_group

#endif // TOGGLE_GROUP_GENERATORS_HPP
