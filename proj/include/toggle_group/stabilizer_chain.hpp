#ifndef TOGGLE_GROUP_STABILIZER_CHAIN_HPP
#define TOGGLE_GROUP_STABILIZER_CHAIN_HPP

// Deterministic Schreier–Sims over explicit transversals.
//
// Every Schreier generator u_{s(x)}⁻¹·s·u_x of a level is sifted through
// the levels below it; a non-trivial residue joins the strong generating
// set as a generator of every level from the one below up to the level
// where it dropped out, which queues its own Schreier generators there.
// Before the exhaustive Schreier phase, products of the generators drawn
// from a fixed-seed product-replacement walk are sifted in; this only adds
// group elements, so the final chain is the same group and the build is
// reproducible. The chain stops early once the product of the basic orbit
// sizes reaches a known upper bound on the group order (degree! is always
// one): every transversal element is a group element, so that product is
// a lower bound on |G| and equality closes the computation exactly.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "permutation.hpp"

namespace toggle_group
{

using BigNat = boost::multiprecision::cpp_int;

inline BigNat factorial(std::size_t m)
{
  BigNat result = 1;
  for (std::size_t i = 2; i <= m; ++i)
    result *= i;
  return result;
}

class StabilizerChain
{
public:
  struct Level
  {
    Point base;                          // 1-based
    std::vector<Permutation> generators; // fix all earlier base points
    std::vector<Point> orbit;            // 1-based, discovery order
  };

  /// Builds the chain of ⟨generators⟩. `order_bound`, when given, must
  /// bound |⟨generators⟩| from above; degree! is used otherwise.
  static StabilizerChain build(std::span<Permutation const> generators,
                               std::size_t degree,
                               std::optional<BigNat> order_bound = {})
  {
    if (degree == 0)
      throw DegreeError("chain degree must be at least 1");
    for (auto const &g : generators)
      if (g.degree() != degree)
        throw DegreeError("generator of degree " +
                          std::to_string(g.degree()) +
                          " in a chain of degree " + std::to_string(degree));

    StabilizerChain chain(degree);
    chain._bound = order_bound ? *order_bound : factorial(degree);
    chain.run(generators);
    return chain;
  }

  std::size_t degree() const noexcept { return _degree; }
  std::size_t length() const noexcept { return _levels.size(); }

  std::vector<Point> base() const
  {
    std::vector<Point> b;
    for (auto const &l : _levels)
      b.push_back(l.base + 1);
    return b;
  }

  Level level(std::size_t i) const
  {
    auto const &l = at(i);
    Level view{l.base + 1, {}, {}};
    for (auto gi : l.generators)
      view.generators.push_back(_strong[gi]);
    for (auto p : l.orbit)
      view.orbit.push_back(p + 1);
    return view;
  }

  std::vector<std::size_t> orbit_sizes() const
  {
    std::vector<std::size_t> sizes;
    for (auto const &l : _levels)
      sizes.push_back(l.orbit.size());
    return sizes;
  }

  /// Transversal element of level i sending its base point to `point`.
  std::optional<Permutation> representative(std::size_t i, Point point) const
  {
    auto const &l = at(i);
    if (point < 1 || point > _degree)
      throw RangeError("point " + std::to_string(point) + " outside 1.." +
                       std::to_string(_degree));
    auto const slot = l.slot[point - 1];
    if (slot < 0)
      return std::nullopt;
    return inverse(l.inverse_transversal[static_cast<std::size_t>(slot)]);
  }

  /// The strong generating set, in insertion order.
  std::vector<Permutation> const &strong_generators() const noexcept
  {
    return _strong;
  }

  BigNat order() const
  {
    BigNat result = 1;
    for (auto const &l : _levels)
      result *= l.orbit.size();
    return result;
  }

  bool contains(Permutation const &g) const
  {
    if (g.degree() != _degree)
      throw DegreeError("membership test: degree " +
                        std::to_string(g.degree()) + " against chain degree " +
                        std::to_string(_degree));
    return sift(g, 0).residue.is_identity();
  }

private:
  struct LevelData
  {
    std::size_t base;
    std::vector<std::size_t> generators; // indices into _strong
    std::vector<std::size_t> orbit;
    std::vector<std::int32_t> slot; // point -> index into orbit, or -1
    std::vector<Permutation> inverse_transversal;
  };

  struct SiftResult
  {
    Permutation residue;
    std::size_t level;
  };

  struct Task
  {
    std::size_t level;
    std::size_t orbit_index;
    std::size_t generator; // index into _strong
  };

  explicit StabilizerChain(std::size_t degree) : _degree(degree) {}

  LevelData const &at(std::size_t i) const
  {
    if (i >= _levels.size())
      throw RangeError("chain level " + std::to_string(i) + " out of range");
    return _levels[i];
  }

  SiftResult sift(Permutation g, std::size_t from) const
  {
    std::vector<Permutation::storage_type> buffer(_degree);
    std::size_t i = from;
    for (; i < _levels.size(); ++i) {
      auto const &l = _levels[i];
      auto const gt = g.table();
      auto const image = gt[l.base];
      if (image == l.base)
        continue;
      auto const slot = l.slot[image];
      if (slot < 0)
        break;
      auto const ut = l.inverse_transversal[static_cast<std::size_t>(slot)]
                        .table();
      for (std::size_t p = 0; p < _degree; ++p)
        buffer[p] = ut[gt[p]];
      g = Permutation::from_zero_based(buffer);
    }
    return {std::move(g), i};
  }

  void add_orbit_point(std::size_t i, std::size_t point, Permutation const &u)
  {
    auto &l = _levels[i];
    auto const old_size = l.orbit.size();
    l.slot[point] = static_cast<std::int32_t>(old_size);
    l.orbit.push_back(point);
    l.inverse_transversal.push_back(inverse(u));
    _order = _order / old_size * (old_size + 1);
    if (_order > _bound)
      throw Error("group order exceeds the supplied upper bound");
  }

  /// Closes the orbit of level i under its generators after generator `gi`
  /// joined it, and queues every Schreier generator the change created.
  void extend_level(std::size_t i, std::size_t gi)
  {
    auto &l = _levels[i];
    std::size_t const known = l.orbit.size();
    auto visit = [&](std::size_t x, std::size_t gj) {
      auto const &s = _strong[gj];
      std::size_t const y = s.table()[l.orbit[x]];
      if (l.slot[y] < 0)
        add_orbit_point(i, y, compose(s, inverse(l.inverse_transversal[x])));
    };
    for (std::size_t x = 0; x < known; ++x)
      visit(x, gi);
    for (std::size_t x = known; x < l.orbit.size(); ++x)
      for (std::size_t gj : l.generators)
        visit(x, gj);

    auto &queue = _pending[i];
    for (std::size_t x = 0; x < known; ++x)
      queue.push_back(Task{i, x, gi});
    for (std::size_t x = known; x < l.orbit.size(); ++x)
      for (std::size_t gj : l.generators)
        queue.push_back(Task{i, x, gj});
  }

  /// Registers a residue that fixes the first `first` base points and sifts
  /// out at level `home`, as a generator of levels first..home.
  void add_strong_generator(Permutation g, std::size_t first, std::size_t home)
  {
    if (home == _levels.size()) {
      auto const gt = g.table();
      std::size_t b = 0;
      while (gt[b] == b)
        ++b;
      LevelData fresh{b, {}, {b}, std::vector<std::int32_t>(_degree, -1),
                      {identity(_degree)}};
      fresh.slot[b] = 0;
      _levels.push_back(std::move(fresh));
      _pending.emplace_back();
    }
    std::size_t const gi = _strong.size();
    _strong.push_back(std::move(g));
    for (std::size_t l = first; l <= home; ++l) {
      _levels[l].generators.push_back(gi);
      extend_level(l, gi);
    }
  }

  /// Deepest level with queued work first, so every sift runs against
  /// levels that are already closed.
  void drain()
  {
    std::size_t i = _pending.size();
    while (i > 0 && _order != _bound) {
      if (_pending[i - 1].empty()) {
        --i;
        continue;
      }
      Task const task = _pending[i - 1].back();
      _pending[i - 1].pop_back();

      auto const &l = _levels[task.level];
      auto const &s = _strong[task.generator];
      std::size_t const y = s.table()[l.orbit[task.orbit_index]];
      // u_y⁻¹ · s · u_x
      Permutation const h = compose(
        l.inverse_transversal[static_cast<std::size_t>(l.slot[y])],
        compose(s, inverse(l.inverse_transversal[task.orbit_index])));
      auto [r, reached] = sift(h, task.level + 1);
      if (r.is_identity())
        continue;
      add_strong_generator(std::move(r), task.level + 1, reached);
      i = _pending.size();
    }
  }

  /// Sifts products drawn by product replacement from a fixed-seed
  /// generator until `patience` consecutive draws are already members or
  /// the order bound is met. Only ever adds genuine group elements.
  void seed_with_products(std::span<Permutation const> generators,
                          std::size_t patience)
  {
    std::vector<Permutation> slots;
    std::size_t const width = std::max<std::size_t>(10, generators.size());
    for (std::size_t i = 0; i < width; ++i)
      slots.push_back(generators[i % generators.size()]);
    Permutation accumulator = identity(_degree);
    std::mt19937_64 rng(0x5eed5eedULL);

    auto step = [&] {
      std::size_t const a = rng() % width;
      std::size_t b = rng() % (width - 1);
      if (b >= a)
        ++b;
      slots[a] = (rng() & 1u) ? compose(slots[a], slots[b])
                              : compose(slots[a], inverse(slots[b]));
      accumulator = compose(accumulator, slots[a]);
      return accumulator;
    };
    for (int i = 0; i < 50; ++i)
      step();

    std::size_t quiet = 0;
    while (quiet < patience && _order != _bound) {
      auto [r, reached] = sift(step(), 0);
      if (r.is_identity()) {
        ++quiet;
        continue;
      }
      quiet = 0;
      add_strong_generator(std::move(r), 0, reached);
    }
  }

  void run(std::span<Permutation const> generators)
  {
    _order = 1;
    for (auto const &g : generators) {
      auto [residue, home] = sift(g, 0);
      if (!residue.is_identity())
        add_strong_generator(std::move(residue), 0, home);
    }
    if (_strong.empty())
      return;
    seed_with_products(generators, 20);
    drain();
  }

  std::size_t _degree;
  std::vector<LevelData> _levels;
  std::vector<Permutation> _strong;
  std::vector<std::vector<Task>> _pending; // per level
  BigNat _order = 1;
  BigNat _bound = 1;
};

inline StabilizerChain build_chain(std::span<Permutation const> generators,
                                   std::size_t degree)
{
  return StabilizerChain::build(generators, degree);
}

inline BigNat order(StabilizerChain const &chain) { return chain.order(); }

inline bool contains(StabilizerChain const &chain, Permutation const &g)
{
  return chain.contains(g);
}

/// Orbit of `point` under ⟨generators⟩, ascending.
inline std::vector<Point> orbit(std::span<Permutation const> generators,
                                std::size_t degree, Point point)
{
  if (point < 1 || point > degree)
    throw RangeError("point " + std::to_string(point) + " outside 1.." +
                     std::to_string(degree));
  for (auto const &g : generators)
    if (g.degree() != degree)
      throw DegreeError("orbit: generator degree mismatch");

  std::vector<bool> seen(degree, false);
  std::deque<std::size_t> queue{point - 1};
  seen[point - 1] = true;
  while (!queue.empty()) {
    std::size_t const x = queue.front();
    queue.pop_front();
    for (auto const &g : generators) {
      std::size_t const y = g.table()[x];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<Point> result;
  for (std::size_t i = 0; i < degree; ++i)
    if (seen[i])
      result.push_back(i + 1);
  return result;
}

/// True iff the chain is a chain of the full symmetric group on its degree.
inline bool is_full_symmetric(StabilizerChain const &chain)
{
  auto const sizes = chain.orbit_sizes();
  std::size_t const m = chain.degree();
  if (sizes.size() + 1 != m)
    return false;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] != m - i)
      return false;
  return true;
}

/// The 3-cycle (i,i+1,i+2) of degree m.
inline Permutation consecutive_three_cycle(std::size_t m, Point i)
{
  return from_cycles(m, {{i, i + 1, i + 2}});
}

/// First i with (i,i+1,i+2) ∉ G, or nullopt when all of them are members.
inline std::optional<Point>
first_missing_three_cycle(StabilizerChain const &chain)
{
  std::size_t const m = chain.degree();
  if (m < 3)
    throw DegreeError("alternating-group test needs degree at least 3");
  for (Point i = 1; i + 2 <= m; ++i)
    if (!chain.contains(consecutive_three_cycle(m, i)))
      return i;
  return std::nullopt;
}

/// True iff every consecutive 3-cycle lies in the group, i.e. A_m ≤ G.
inline bool contains_alternating(StabilizerChain const &chain)
{
  return !first_missing_three_cycle(chain).has_value();
}

} // namespace toggle_group

#endif // TOGGLE_GROUP_STABILIZER_CHAIN_HPP
