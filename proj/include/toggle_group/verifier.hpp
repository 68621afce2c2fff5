#ifndef TOGGLE_GROUP_VERIFIER_HPP
#define TOGGLE_GROUP_VERIFIER_HPP

// Executable checks of the toggle-group results, one report per claim and
// parameter n. A failing report always names a counterexample.
//
// Claim identifiers:
//   examples            literal generator lists, index tables and traces
//   thm:gen             ⟨G_n⟩ = S_{f_{n+2}}
//   thm:gen'            ⟨G'_n⟩ = S̃_{f_n}
//   lem:g':step         φ(t_{k,n-2}) = t_{k,n}, |⟨G'_n⟩| = |⟨G_{n-2}⟩|
//   lem:g:alt           (i,i+1,i+2) ∈ ⟨G_n⟩ for every i
//   lem:g:step          A_{f_{n+2}} ≤ ⟨G_n⟩ plus an odd generator
//   lem:iota            ι_n∘τ_{k,n} = t_{k,n}∘ι_n
//   remark:coxeter      τ² = id, far commutation, (τ_kτ_{k+1})⁶ = id
//   remark:transitive   |I_n| = f_{n+2}, orbit of {} is all of I_n
//   thm:toggle          |Γ_n| = |⟨G_n⟩| = f_{n+2}!

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "json.hpp"

#include "error.hpp"
#include "fib_index.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "permutation.hpp"
#include "stabilizer_chain.hpp"

namespace toggle_group
{

enum class Status
{
  pass,
  fail,
  skipped
};

inline char const *to_string(Status s)
{
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

struct VerificationReport
{
  std::string claim_id;
  std::size_t n = 0;
  Status status = Status::pass;
  std::string details;
  std::optional<std::string> counterexample;

  bool passed() const noexcept { return status == Status::pass; }
};

enum class Profile
{
  quick,
  full
};

/// Size bounds applied by verify_all. Checks above them are skipped.
struct Limits
{
  std::uint64_t max_enumeration; // f_{n+2} for exhaustive passes over I_n
  std::size_t max_chain_degree;  // degree of stabilizer chain builds

  static Limits for_profile(Profile p)
  {
    if (p == Profile::quick)
      return {1000, 233};
    return {std::uint64_t{1} << 22, 377};
  }
};

namespace detail
{

inline VerificationReport report(std::string claim, std::size_t n)
{
  return VerificationReport{std::move(claim), n, Status::pass, {}, {}};
}

inline VerificationReport &fail(VerificationReport &r, std::string details,
                                std::string counterexample)
{
  r.status = Status::fail;
  r.details = std::move(details);
  r.counterexample = std::move(counterexample);
  return r;
}

inline std::string join(std::vector<std::size_t> const &values)
{
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0)
      out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

inline std::string join(std::vector<Permutation> const &perms)
{
  std::string out = "[";
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (i > 0)
      out += ", ";
    out += format_cycles(perms[i]);
  }
  return out + "]";
}

inline std::string to_decimal(BigNat const &value) { return value.str(); }

inline std::vector<Permutation> default_family(std::size_t n)
{
  return G(n).members;
}

inline void require_family(std::size_t n, std::vector<Permutation> const &f)
{
  if (f.size() != n)
    throw RangeError("generator family for n=" + std::to_string(n) +
                     " must have " + std::to_string(n) + " members");
  std::size_t const m = path_degree(n);
  for (auto const &g : f)
    if (g.degree() != m)
      throw DegreeError("generator family member of degree " +
                        std::to_string(g.degree()) + ", expected " +
                        std::to_string(m));
}

} // namespace detail

/// ι_n(τ_{k,n}(I)) = t_{k,n}(ι_n(I)) for every k and every I ∈ I_n, then
/// the same identity compared as whole permutations.
inline VerificationReport
verify_intertwining(std::size_t n, std::vector<Permutation> const &family)
{
  detail::require_family(n, family);
  auto r = detail::report("lem:iota", n);
  std::uint64_t const m = fib(n + 2);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::uint64_t idx = 1; idx <= m; ++idx) {
      IndependentSet const I = iota_inverse(n, idx);
      std::uint64_t const lhs = iota(n, toggle_path(n, k, I));
      std::uint64_t const rhs = family[k - 1](idx);
      if (lhs != rhs)
        return detail::fail(
          r, "index of the toggled set differs from the generator image",
          "k=" + std::to_string(k) + " I=" + format_set(I) +
            " iota(tau(I))=" + std::to_string(lhs) +
            " t(iota(I))=" + std::to_string(rhs));
    }
    Permutation const induced = toggle_permutation(n, k);
    if (induced != family[k - 1])
      return detail::fail(r, "induced toggle permutation differs",
                          "k=" + std::to_string(k) + " induced=" +
                            format_cycles(induced) +
                            " t=" + format_cycles(family[k - 1]));
  }
  r.details = std::to_string(n) + " toggles x " + std::to_string(m) +
              " sets agree";
  return r;
}

inline VerificationReport verify_intertwining(std::size_t n)
{
  return verify_intertwining(n, detail::default_family(n));
}

/// ⟨family⟩ is the full symmetric group on f_{n+2} points.
inline VerificationReport
verify_theorem_gen(std::size_t n, std::vector<Permutation> const &family)
{
  detail::require_family(n, family);
  auto r = detail::report("thm:gen", n);
  std::size_t const m = detail::path_degree(n);
  auto const chain = StabilizerChain::build(family, m);
  std::string const summary = "degree " + std::to_string(m) + ", order " +
                              detail::to_decimal(chain.order());
  if (!is_full_symmetric(chain)) {
    std::string witness = "orbit sizes " + detail::join(chain.orbit_sizes());
    if (m >= 3)
      if (auto i = first_missing_three_cycle(chain))
        witness += "; missing " +
                   format_cycles(consecutive_three_cycle(m, *i));
    return detail::fail(r, summary + " is not " + std::to_string(m) + "!",
                        witness);
  }
  r.details = summary + " = " + std::to_string(m) + "!";
  return r;
}

inline VerificationReport verify_theorem_gen(std::size_t n)
{
  return verify_theorem_gen(n, detail::default_family(n));
}

/// ⟨G'_n⟩ = S̃_{f_n}: every strong generator lies in S̃, the order is
/// f_n!, and sampled members of S̃ sift through the chain.
inline VerificationReport
verify_theorem_gen_prime(std::size_t n, std::vector<Permutation> const &family,
                         std::size_t samples = 100)
{
  if (n < 3)
    throw RangeError("G'_n is defined for n at least 3");
  detail::require_family(n, family);
  auto r = detail::report("thm:gen'", n);
  TildeSubgroupSpec const spec(n);
  std::vector<Permutation> const gens(family.begin(), family.end() - 2);
  BigNat const expected = factorial(static_cast<std::size_t>(fib(n)));

  // S̃ is a group, so ⟨gens⟩ ⊆ S̃ iff every generator lies in it; only
  // then is f_n! an upper bound on the order.
  for (auto const &g : gens)
    if (!in_tilde_S(spec, g))
      return detail::fail(r, "generator outside S~", format_cycles(g));
  auto const chain = StabilizerChain::build(gens, spec.degree(), expected);

  for (auto const &g : chain.strong_generators())
    if (!in_tilde_S(spec, g))
      return detail::fail(r, "strong generator outside S~",
                          format_cycles(g));

  if (chain.order() != expected)
    return detail::fail(r, "order differs from f_n!",
                        "order " + detail::to_decimal(chain.order()) +
                          " != " + detail::to_decimal(expected));

  std::mt19937_64 rng(n);
  std::vector<Point> images(static_cast<std::size_t>(fib(n)));
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < images.size(); ++i)
      images[i] = i + 1;
    std::shuffle(images.begin(), images.end(), rng);
    Permutation const g = varphi_embed(n, Permutation::from_images(images));
    if (!in_tilde_S(spec, g) || !chain.contains(g))
      return detail::fail(r, "sampled member of S~ not generated",
                          format_cycles(g));
  }
  r.details = "order " + detail::to_decimal(expected) + " = " +
              std::to_string(fib(n)) + "!, " + std::to_string(samples) +
              " samples sift";
  return r;
}

inline VerificationReport verify_theorem_gen_prime(std::size_t n)
{
  if (n < 3)
    throw RangeError("G'_n is defined for n at least 3");
  return verify_theorem_gen_prime(n, detail::default_family(n));
}

/// φ(t_{k,n-2}) = t_{k,n} for k ≤ n-2, and |⟨G'_n⟩| = |⟨G_{n-2}⟩|.
inline VerificationReport verify_gprime_step(std::size_t n)
{
  if (n < 3)
    throw RangeError("the G' step is defined for n at least 3");
  auto r = detail::report("lem:g':step", n);
  for (std::size_t k = 1; k + 2 <= n; ++k) {
    Permutation const image = varphi_embed(n, t(k, n - 2));
    if (image != t(k, n))
      return detail::fail(r, "embedded generator differs",
                          "k=" + std::to_string(k) +
                            " phi(t_{k,n-2})=" + format_cycles(image) +
                            " t_{k,n}=" + format_cycles(t(k, n)));
  }
  auto const gp = G_prime(n);
  auto const small = G(n - 2);
  BigNat const lhs = StabilizerChain::build(gp, fib(n + 2)).order();
  BigNat const rhs = StabilizerChain::build(small.members, small.degree).order();
  if (lhs != rhs)
    return detail::fail(r, "orders differ",
                        detail::to_decimal(lhs) + " != " +
                          detail::to_decimal(rhs));
  r.details = "order " + detail::to_decimal(lhs);
  return r;
}

/// Every consecutive 3-cycle lies in ⟨family⟩.
inline VerificationReport
verify_three_cycles(std::size_t n, std::vector<Permutation> const &family)
{
  if (n < 4)
    throw RangeError("the 3-cycle property is stated for n at least 4");
  detail::require_family(n, family);
  auto r = detail::report("lem:g:alt", n);
  std::size_t const m = detail::path_degree(n);
  auto const chain = StabilizerChain::build(family, m);
  if (auto i = first_missing_three_cycle(chain))
    return detail::fail(r, "consecutive 3-cycle not generated",
                        format_cycles(consecutive_three_cycle(m, *i)));
  r.details = std::to_string(m - 2) + " three-cycles are members";
  return r;
}

inline VerificationReport verify_three_cycles(std::size_t n)
{
  return verify_three_cycles(n, detail::default_family(n));
}

/// A_{f_{n+2}} ≤ ⟨G_n⟩ and one of t_{n,n}, t_{n-1,n} is odd, which forces
/// ⟨G_n⟩ = S_{f_{n+2}}.
inline VerificationReport verify_alternating_step(std::size_t n)
{
  if (n < 4)
    throw RangeError("the alternating step is stated for n at least 4");
  auto r = detail::report("lem:g:step", n);
  auto const family = G(n);
  auto const chain = StabilizerChain::build(family.members, family.degree);
  if (auto i = first_missing_three_cycle(chain))
    return detail::fail(r, "alternating group not contained",
                        format_cycles(consecutive_three_cycle(family.degree,
                                                              *i)));
  if (fib(n) % 2 == 0 && fib(n - 1) % 2 == 0)
    return detail::fail(r, "f_n and f_{n-1} are both even",
                        "f_n=" + std::to_string(fib(n)));
  bool const odd = parity(t(n, n)) == -1 || parity(t(n - 1, n)) == -1;
  if (!odd)
    return detail::fail(r, "no odd generator among t_{n,n}, t_{n-1,n}",
                        format_cycles(t(n, n)) + " " +
                          format_cycles(t(n - 1, n)));
  if (!is_full_symmetric(chain))
    return detail::fail(r, "chain is not the full symmetric group",
                        "orbit sizes " + detail::join(chain.orbit_sizes()));
  r.details = "A_" + std::to_string(family.degree) +
              " contained, odd generator present";
  return r;
}

/// The three Coxeter-type relations on the given toggle permutations.
inline VerificationReport
verify_coxeter_relations(std::size_t n, std::vector<Permutation> const &taus)
{
  if (taus.size() != n)
    throw RangeError("expected " + std::to_string(n) + " toggles");
  auto r = detail::report("remark:coxeter", n);
  for (std::size_t k = 0; k < n; ++k)
    if (!compose(taus[k], taus[k]).is_identity())
      return detail::fail(r, "toggle is not an involution",
                          "k=" + std::to_string(k + 1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 2; b < n; ++b)
      if (compose(taus[a], taus[b]) != compose(taus[b], taus[a]))
        return detail::fail(r, "distant toggles do not commute",
                            "k=" + std::to_string(a + 1) +
                              " k'=" + std::to_string(b + 1));
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (!power(compose(taus[k], taus[k + 1]), 6).is_identity())
      return detail::fail(r, "adjacent product has order not dividing 6",
                          "k=" + std::to_string(k + 1) + " product " +
                            format_cycles(compose(taus[k], taus[k + 1])));
  r.details = "relations hold on " + std::to_string(fib(n + 2)) + " sets";
  return r;
}

inline VerificationReport verify_coxeter_relations(std::size_t n)
{
  return verify_coxeter_relations(n, toggle_permutations(n));
}

/// |I_n| = f_{n+2}, and toggling reaches every set from {}.
inline VerificationReport verify_count_and_transitivity(std::size_t n)
{
  auto r = detail::report("remark:transitive", n);
  auto const sets = enumerate_independent_sets(PathGraph{n});
  if (sets.size() != fib(n + 2))
    return detail::fail(r, "count differs from f_{n+2}",
                        std::to_string(sets.size()) +
                          " != " + std::to_string(fib(n + 2)));

  std::unordered_set<std::uint64_t> seen{0};
  std::deque<IndependentSet> queue{VertexSet(n)};
  while (!queue.empty()) {
    IndependentSet const I = queue.front();
    queue.pop_front();
    for (std::size_t k = 1; k <= n; ++k) {
      IndependentSet const J = toggle_path(n, k, I);
      if (seen.insert(J.mask()).second)
        queue.push_back(J);
    }
  }
  if (seen.size() != sets.size()) {
    for (auto const &I : sets)
      if (!seen.count(I.mask()))
        return detail::fail(r, "orbit of {} misses a set", format_set(I));
  }
  r.details = "|I_n| = " + std::to_string(sets.size()) +
              ", orbit of {} is everything";
  return r;
}

/// |Γ_n| equals |⟨G_n⟩| and both are f_{n+2}!, so the action is
/// f_{n+2}-transitive.
inline VerificationReport verify_toggle_group(std::size_t n)
{
  auto r = detail::report("thm:toggle", n);
  std::size_t const m = detail::path_degree(n);
  auto const toggles = toggle_permutations(n);
  auto const gamma = StabilizerChain::build(toggles, m);
  auto const family = G(n);
  auto const gen = StabilizerChain::build(family.members, m);
  if (gamma.order() != gen.order())
    return detail::fail(r, "toggle group order differs from <G_n>",
                        detail::to_decimal(gamma.order()) + " != " +
                          detail::to_decimal(gen.order()));
  if (!is_full_symmetric(gamma))
    return detail::fail(r, "toggle group is not the full symmetric group",
                        "orbit sizes " + detail::join(gamma.orbit_sizes()));
  r.details = "|Gamma_n| = " + detail::to_decimal(gamma.order()) + " = " +
              std::to_string(m) + "!";
  return r;
}

/// The literal values printed for n = 1..4.
inline VerificationReport verify_paper_examples()
{
  auto r = detail::report("examples", 0);
  auto expect_list = [&](std::string const &what,
                         std::vector<Permutation> const &got,
                         std::vector<std::string> const &want) {
    std::vector<std::string> text;
    for (auto const &g : got)
      text.push_back(format_cycles(g));
    if (text != want) {
      std::string w = "[";
      for (std::size_t i = 0; i < want.size(); ++i)
        w += (i ? ", " : "") + want[i];
      detail::fail(r, what + " differs", detail::join(got) + " != " + w + "]");
      return false;
    }
    return true;
  };

  using L = std::vector<std::string>;
  if (!expect_list("G_1", G(1).members, L{"(1,2)"}) ||
      !expect_list("G_2", G(2).members, L{"(1,2)", "(1,3)"}) ||
      !expect_list("G_3", G(3).members,
                   L{"(1,2)(4,5)", "(1,3)", "(1,4)(2,5)"}) ||
      !expect_list("G_4", G(4).members,
                   L{"(1,2)(4,5)(6,7)", "(1,3)(6,8)", "(1,4)(2,5)",
                     "(1,6)(2,7)(3,8)"}) ||
      !expect_list("G'_3", G_prime(3), L{"(1,2)(4,5)"}) ||
      !expect_list("G'_4", G_prime(4), L{"(1,2)(4,5)(6,7)", "(1,3)(6,8)"}) ||
      !expect_list("hat t_1..4", {hat_t(1), hat_t(2), hat_t(3), hat_t(4)},
                   L{"(1,2)", "(1,3)", "(1,4)(2,5)", "(1,6)(2,7)(3,8)"}))
    return r;

  // Conjugation identities of the degree-5 case.
  Permutation const t13 = t(1, 3), t23 = t(2, 3), t33 = t(3, 3);
  Permutation const c13 = parse_cycles("(1,3)", 5);
  if (!expect_list("degree-5 conjugates",
                   {t23, conjugate(c13, t13), conjugate(c13, t33),
                    conjugate(parse_cycles("(4,3)", 5), t13)},
                   L{"(1,3)", "(2,3)", "(3,4)", "(3,5)"}))
    return r;

  // Index tables for n = 1..4.
  std::vector<L> const tables{
    {"{}", "{1}"},
    {"{}", "{1}", "{2}"},
    {"{}", "{1}", "{2}", "{3}", "{1,3}"},
    {"{}", "{1}", "{2}", "{3}", "{1,3}", "{4}", "{1,4}", "{2,4}"}};
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const &want = tables[n - 1];
    if (fib(n + 2) != want.size())
      return detail::fail(r, "index table size", "n=" + std::to_string(n));
    for (std::size_t j = 0; j < want.size(); ++j) {
      IndependentSet const I = parse_set(want[j], n);
      if (iota(n, I) != j + 1 || format_set(iota_inverse(n, j + 1)) != want[j])
        return detail::fail(r, "index table entry differs",
                            "n=" + std::to_string(n) + " " + want[j] +
                              " -> " + std::to_string(iota(n, I)) +
                              ", expected " + std::to_string(j + 1));
    }
  }

  // Traces ι_n(τ_{k,n}(I)) = v = t_{k,n}(ι_n(I)) for n = 1, 2.
  struct Trace
  {
    std::size_t n, k;
    char const *set;
    std::uint64_t value;
  };
  Trace const traces[] = {
    {1, 1, "{}", 2},  {1, 1, "{1}", 1}, {2, 1, "{}", 2}, {2, 1, "{1}", 1},
    {2, 1, "{2}", 3}, {2, 2, "{}", 3},  {2, 2, "{1}", 2}, {2, 2, "{2}", 1}};
  for (auto const &tr : traces) {
    IndependentSet const I = parse_set(tr.set, tr.n);
    std::uint64_t const lhs = iota(tr.n, toggle_path(tr.n, tr.k, I));
    std::uint64_t const rhs = t(tr.k, tr.n)(iota(tr.n, I));
    if (lhs != tr.value || rhs != tr.value)
      return detail::fail(r, "toggle trace differs",
                          "n=" + std::to_string(tr.n) +
                            " k=" + std::to_string(tr.k) + " I=" + tr.set);
  }

  r.details = "generator lists, index tables and toggle traces match";
  return r;
}

/// Generator-dependent checks run against an arbitrary family standing in
/// for G_n; used to confirm that perturbed families are rejected.
inline std::vector<VerificationReport>
verify_family(std::size_t n, std::vector<Permutation> const &family)
{
  std::vector<VerificationReport> out;
  out.push_back(verify_intertwining(n, family));
  out.push_back(verify_theorem_gen(n, family));
  if (n >= 3)
    out.push_back(verify_theorem_gen_prime(n, family));
  if (n >= 4)
    out.push_back(verify_three_cycles(n, family));
  return out;
}

/// g with the moved point b and the point c exchanged in its cycles.
inline Permutation perturb(Permutation const &g, Point b, Point c)
{
  return conjugate(g, transposition(g.degree(), b, c));
}

/// Every single-entry perturbation of every member that changes it.
inline std::vector<std::vector<Permutation>>
perturbed_families(std::vector<Permutation> const &family)
{
  std::vector<std::vector<Permutation>> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto const &g = family[i];
    for (Point b : support(g))
      for (Point c = 1; c <= g.degree(); ++c) {
        if (c == b || c == g(b))
          continue;
        auto copy = family;
        copy[i] = perturb(g, b, c);
        if (copy[i] != g)
          out.push_back(std::move(copy));
      }
  }
  return out;
}

inline std::vector<std::string> const &claim_ids()
{
  static std::vector<std::string> const ids{
    "examples",   "lem:g':step",      "lem:g:alt",         "lem:g:step",
    "lem:iota",   "remark:coxeter",   "remark:transitive", "thm:gen",
    "thm:gen'",   "thm:toggle"};
  return ids;
}

/// Runs every applicable check for 1 ≤ n ≤ max_n, or only `claim` when
/// given. Reports are sorted by (claim_id, n).
inline std::vector<VerificationReport>
verify_all(std::size_t max_n, Profile profile,
           std::optional<std::string> const &claim = std::nullopt)
{
  if (max_n < 1 || max_n > max_path_length())
    throw RangeError("max_n outside 1.." + std::to_string(max_path_length()));
  if (claim && std::find(claim_ids().begin(), claim_ids().end(), *claim) ==
                 claim_ids().end())
    throw RangeError("unknown claim id '" + *claim + "'");

  Limits const limits = Limits::for_profile(profile);
  std::vector<VerificationReport> out;
  auto wanted = [&](std::string const &id) { return !claim || *claim == id; };

  enum class Cost
  {
    enumeration,
    chain,
    both
  };
  auto run = [&](std::string const &id, std::size_t n, Cost cost,
                 auto &&check) {
    if (!wanted(id))
      return;
    std::uint64_t const size = fib(n + 2);
    bool const too_many = cost != Cost::chain && size > limits.max_enumeration;
    bool const too_wide =
      cost != Cost::enumeration && size > limits.max_chain_degree;
    if (too_many || too_wide) {
      out.push_back(VerificationReport{
        id, n, Status::skipped,
        "f_{n+2} = " + std::to_string(size) + " exceeds the " +
          (too_many ? "enumeration bound " +
                        std::to_string(limits.max_enumeration)
                    : "chain degree bound " +
                        std::to_string(limits.max_chain_degree)),
        std::nullopt});
      return;
    }
    out.push_back(check());
  };

  if (wanted("examples"))
    out.push_back(verify_paper_examples());
  for (std::size_t n = 1; n <= max_n; ++n) {
    run("lem:iota", n, Cost::enumeration, [&] { return verify_intertwining(n); });
    run("remark:coxeter", n, Cost::enumeration,
        [&] { return verify_coxeter_relations(n); });
    run("remark:transitive", n, Cost::enumeration,
        [&] { return verify_count_and_transitivity(n); });
    run("thm:gen", n, Cost::chain, [&] { return verify_theorem_gen(n); });
    run("thm:toggle", n, Cost::both, [&] { return verify_toggle_group(n); });
    if (n >= 3) {
      run("thm:gen'", n, Cost::chain,
          [&] { return verify_theorem_gen_prime(n); });
      run("lem:g':step", n, Cost::chain,
          [&] { return verify_gprime_step(n); });
    }
    if (n >= 4) {
      run("lem:g:alt", n, Cost::chain, [&] { return verify_three_cycles(n); });
      run("lem:g:step", n, Cost::chain,
          [&] { return verify_alternating_step(n); });
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](VerificationReport const &a, VerificationReport const &b) {
                     return std::tie(a.claim_id, a.n) <
                            std::tie(b.claim_id, b.n);
                   });
  return out;
}

inline std::string format_report(VerificationReport const &r)
{
  std::string status = to_string(r.status);
  std::transform(status.begin(), status.end(), status.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  std::string line = status + " " + r.claim_id + " n=" + std::to_string(r.n) +
                     ": " + r.details;
  if (r.counterexample)
    line += " | counterexample: " + *r.counterexample;
  return line;
}

inline nlohmann::json to_json(VerificationReport const &r)
{
  nlohmann::json j{{"claim_id", r.claim_id},
                   {"n", r.n},
                   {"status", to_string(r.status)},
                   {"details", r.details}};
  if (r.counterexample)
    j["counterexample"] = *r.counterexample;
  return j;
}

} // namespace toggle_group

#endif // TOGGLE_GROUP_VERIFIER_HPP
