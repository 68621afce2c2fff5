#ifndef TOGGLEGRP_CLI_HPP
#define TOGGLEGRP_CLI_HPP

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error, 3 resource bound.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "toggle_group/toggle_group.hpp"

namespace togglegrp
{

namespace tg = toggle_group;
using nlohmann::json;

enum ExitCode : int
{
  exit_ok = 0,
  exit_verification_failed = 1,
  exit_usage = 2,
  exit_resource = 3,
};

/// Bounds on what a single invocation will materialise.
inline constexpr std::uint64_t max_listed_sets = std::uint64_t{1} << 22;
inline constexpr std::uint64_t max_printed_degree = std::uint64_t{1} << 17;
inline constexpr std::size_t max_order_degree = 377;

struct CliConfig
{
  std::string format = "text";
  bool json_flag = false;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t idx = 0;
  std::string set;
  std::string graph_file;
  bool prime = false;
  bool toggles = false;
  std::size_t max_n = 0;
  std::string profile = "quick";
  std::string claim;

  bool json() const { return json_flag || format == "json"; }
};

namespace detail
{

struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

inline void require_n(std::size_t n)
{
  if (n < 1 || n > tg::max_path_length())
    throw UsageError("--n must lie in 1.." +
                     std::to_string(tg::max_path_length()));
}

inline void require_k(std::size_t k, std::size_t n)
{
  if (k < 1 || k > n)
    throw UsageError("--k must lie in 1.." + std::to_string(n));
}

inline void require_printable(std::size_t n)
{
  if (tg::fib(n + 2) > max_printed_degree)
    throw tg::ResourceError("degree f_{n+2} = " + std::to_string(tg::fib(n + 2)) +
                            " exceeds the output bound " +
                            std::to_string(max_printed_degree));
}

inline tg::IndependentSet read_path_set(std::string const &text, std::size_t n)
{
  auto const s = tg::parse_set(text, n);
  if (s.mask() & (s.mask() >> 1))
    throw UsageError(text + " is not independent in A_" + std::to_string(n));
  return s;
}

inline void emit(std::ostream &out, json const &j) { out << j.dump() << '\n'; }

} // namespace detail

inline int cmd_enumerate(CliConfig const &c, std::ostream &out)
{
  std::vector<tg::IndependentSet> sets;
  std::size_t vertices = c.n;
  if (!c.graph_file.empty()) {
    std::ifstream in(c.graph_file);
    if (!in)
      throw detail::UsageError("cannot open graph file " + c.graph_file);
    auto const g = tg::read_graph(in);
    vertices = g.vertex_count();
    sets = tg::enumerate_independent_sets(g);
  } else {
    detail::require_n(c.n);
    if (tg::fib(c.n + 2) > max_listed_sets)
      throw tg::ResourceError("I_" + std::to_string(c.n) + " has " +
                              std::to_string(tg::fib(c.n + 2)) +
                              " sets, above the listing bound " +
                              std::to_string(max_listed_sets));
    sets = tg::enumerate_independent_sets(tg::PathGraph{c.n});
  }
  if (c.json()) {
    json list = json::array();
    for (std::size_t j = 0; j < sets.size(); ++j)
      list.push_back({{"index", j + 1}, {"set", tg::format_set(sets[j])}});
    detail::emit(out, {{"n", vertices}, {"sets", list}});
  } else {
    for (std::size_t j = 0; j < sets.size(); ++j)
      out << j + 1 << ' ' << tg::format_set(sets[j]) << '\n';
  }
  return exit_ok;
}

inline int cmd_index(CliConfig const &c, std::ostream &out)
{
  detail::require_n(c.n);
  auto const I = detail::read_path_set(c.set, c.n);
  auto const idx = tg::iota(c.n, I);
  if (c.json())
    detail::emit(out, {{"n", c.n}, {"set", tg::format_set(I)}, {"index", idx}});
  else
    out << idx << '\n';
  return exit_ok;
}

inline int cmd_unindex(CliConfig const &c, std::ostream &out)
{
  detail::require_n(c.n);
  if (c.idx < 1 || c.idx > tg::fib(c.n + 2))
    throw detail::UsageError("--idx must lie in 1.." +
                             std::to_string(tg::fib(c.n + 2)));
  auto const text = tg::format_set(tg::iota_inverse(c.n, c.idx));
  if (c.json())
    detail::emit(out, {{"n", c.n}, {"index", c.idx}, {"set", text}});
  else
    out << text << '\n';
  return exit_ok;
}

inline int cmd_toggle(CliConfig const &c, std::ostream &out)
{
  detail::require_n(c.n);
  detail::require_k(c.k, c.n);
  auto const I = detail::read_path_set(c.set, c.n);
  auto const text = tg::format_set(tg::toggle_path(c.n, c.k, I));
  if (c.json())
    detail::emit(out, {{"n", c.n},
                       {"k", c.k},
                       {"set", tg::format_set(I)},
                       {"result", text}});
  else
    out << text << '\n';
  return exit_ok;
}

inline int cmd_generators(CliConfig const &c, std::ostream &out)
{
  detail::require_n(c.n);
  if (c.prime && c.n < 3)
    throw detail::UsageError("--prime needs --n at least 3");
  detail::require_printable(c.n);
  auto const gens = c.prime ? tg::G_prime(c.n) : tg::G(c.n).members;
  if (c.json()) {
    json list = json::array();
    for (auto const &g : gens)
      list.push_back(tg::format_cycles(g));
    detail::emit(out, {{"n", c.n},
                       {"prime", c.prime},
                       {"degree", tg::fib(c.n + 2)},
                       {"generators", list}});
  } else {
    for (auto const &g : gens)
      out << tg::format_cycles(g) << '\n';
  }
  return exit_ok;
}

inline int cmd_hat_t(CliConfig const &c, std::ostream &out)
{
  detail::require_n(c.n);
  detail::require_printable(c.n);
  auto const text = tg::format_cycles(tg::hat_t(c.n));
  if (c.json())
    detail::emit(out, {{"n", c.n},
                       {"degree", tg::fib(c.n + 2)},
                       {"permutation", text}});
  else
    out << text << '\n';
  return exit_ok;
}

inline int cmd_toggle_perm(CliConfig const &c, std::ostream &out)
{
  detail::require_n(c.n);
  detail::require_k(c.k, c.n);
  detail::require_printable(c.n);
  auto const text = tg::format_cycles(tg::toggle_permutation(c.n, c.k));
  if (c.json())
    detail::emit(out, {{"n", c.n},
                       {"k", c.k},
                       {"degree", tg::fib(c.n + 2)},
                       {"permutation", text}});
  else
    out << text << '\n';
  return exit_ok;
}

inline int cmd_order(CliConfig const &c, std::ostream &out)
{
  detail::require_n(c.n);
  if (c.prime && c.n < 3)
    throw detail::UsageError("--prime needs --n at least 3");
  std::size_t const m = static_cast<std::size_t>(tg::fib(c.n + 2));
  if (m > max_order_degree)
    throw tg::ResourceError("degree " + std::to_string(m) +
                            " exceeds the chain bound " +
                            std::to_string(max_order_degree));
  std::vector<tg::Permutation> gens;
  std::string group = "G";
  if (c.prime) {
    gens = tg::G_prime(c.n);
    group = "G'";
  } else if (c.toggles) {
    gens = tg::toggle_permutations(c.n);
    group = "toggles";
  } else {
    gens = tg::G(c.n).members;
  }
  auto const order = tg::StabilizerChain::build(gens, m).order().str();
  if (c.json())
    detail::emit(out, {{"n", c.n},
                       {"group", group},
                       {"degree", m},
                       {"order", order}});
  else
    out << order << '\n';
  return exit_ok;
}

inline int cmd_verify(CliConfig const &c, std::ostream &out)
{
  if (c.max_n < 1 || c.max_n > tg::max_path_length())
    throw detail::UsageError("--max-n must lie in 1.." +
                             std::to_string(tg::max_path_length()));
  tg::Profile const profile =
    c.profile == "full" ? tg::Profile::full : tg::Profile::quick;
  std::optional<std::string> claim;
  if (!c.claim.empty()) {
    auto const &ids = tg::claim_ids();
    if (std::find(ids.begin(), ids.end(), c.claim) == ids.end())
      throw detail::UsageError("unknown --claim '" + c.claim + "'");
    claim = c.claim;
  }
  auto const reports = tg::verify_all(c.max_n, profile, claim);

  std::size_t passed = 0, failed = 0, skipped = 0;
  for (auto const &r : reports) {
    switch (r.status) {
      case tg::Status::pass:
        ++passed;
        break;
      case tg::Status::fail:
        ++failed;
        break;
      case tg::Status::skipped:
        ++skipped;
        break;
    }
  }

  if (c.json()) {
    json list = json::array();
    for (auto const &r : reports)
      list.push_back(tg::to_json(r));
    detail::emit(out, {{"max_n", c.max_n},
                       {"profile", c.profile},
                       {"reports", list},
                       {"summary",
                        {{"pass", passed}, {"fail", failed}, {"skipped", skipped}}}});
  } else {
    for (auto const &r : reports)
      out << tg::format_report(r) << '\n';
    out << "summary: " << passed << " passed, " << failed << " failed, "
        << skipped << " skipped\n";
  }
  if (failed > 0)
    return exit_verification_failed;
  if (skipped > 0 && profile == tg::Profile::full)
    return exit_resource;
  return exit_ok;
}

/// Parses `args` (without the program name) and runs the subcommand.
inline int run(std::vector<std::string> const &args, std::ostream &out,
               std::ostream &err)
{
  CLI::App app{"Toggle groups of independent sets of the path graph A_n"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig c;
  auto *format = app.add_option("--format", c.format, "Output format")
                   ->check(CLI::IsMember({"text", "json"}))
                   ->capture_default_str();
  app.add_flag("--json", c.json_flag, "Shorthand for --format json")
    ->excludes(format);

  auto *enumerate = app.add_subcommand("enumerate", "List I_n in index order");
  auto *enum_n = enumerate->add_option("--n", c.n, "Path length");
  enumerate
    ->add_option("--graph", c.graph_file,
                 "Graph file (n, then 'u v' per line) instead of the path")
    ->excludes(enum_n);

  auto *index = app.add_subcommand("index", "Index of an independent set");
  index->add_option("--n", c.n)->required();
  index->add_option("--set", c.set)->required();

  auto *unindex = app.add_subcommand("unindex", "Independent set of an index");
  unindex->add_option("--n", c.n)->required();
  unindex->add_option("--idx", c.idx)->required();

  auto *toggle = app.add_subcommand("toggle", "Apply tau_{k,n} to a set");
  toggle->add_option("--n", c.n)->required();
  toggle->add_option("--k", c.k)->required();
  toggle->add_option("--set", c.set)->required();

  auto *generators = app.add_subcommand("generators", "Print G_n or G'_n");
  generators->add_option("--n", c.n)->required();
  generators->add_flag("--prime", c.prime, "Print G'_n");

  auto *hat = app.add_subcommand("hat-t", "Print the block swap hat t_n");
  hat->add_option("--n", c.n)->required();

  auto *tperm = app.add_subcommand("toggle-perm",
                                   "Permutation induced by tau_{k,n}");
  tperm->add_option("--n", c.n)->required();
  tperm->add_option("--k", c.k)->required();

  auto *order = app.add_subcommand("order", "Exact group order");
  order->add_option("--n", c.n)->required();
  auto *prime = order->add_flag("--prime", c.prime, "Order of <G'_n>");
  order->add_flag("--toggles", c.toggles, "Order of the toggle group")
    ->excludes(prime);

  auto *verify = app.add_subcommand("verify", "Run the verification harness");
  verify->add_option("--max-n", c.max_n)->required();
  verify->add_option("--profile", c.profile)
    ->check(CLI::IsMember({"quick", "full"}))
    ->capture_default_str();
  verify->add_option("--claim", c.claim, "Only this claim id");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const &) {
    out << app.help();
    return exit_ok;
  } catch (CLI::CallForAllHelp const &) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (CLI::ParseError const &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  if (enumerate->parsed() && c.graph_file.empty() && enum_n->count() == 0) {
    err << "error: enumerate needs --n or --graph\n";
    return exit_usage;
  }

  try {
    if (enumerate->parsed())
      return cmd_enumerate(c, out);
    if (index->parsed())
      return cmd_index(c, out);
    if (unindex->parsed())
      return cmd_unindex(c, out);
    if (toggle->parsed())
      return cmd_toggle(c, out);
    if (generators->parsed())
      return cmd_generators(c, out);
    if (hat->parsed())
      return cmd_hat_t(c, out);
    if (tperm->parsed())
      return cmd_toggle_perm(c, out);
    if (order->parsed())
      return cmd_order(c, out);
    if (verify->parsed())
      return cmd_verify(c, out);
  } catch (tg::ResourceError const &e) {
    err << "error: " << e.what() << '\n';
    return exit_resource;
  } catch (detail::UsageError const &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (tg::Error const &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  err << "error: no subcommand\n";
  return exit_usage;
}

} // namespace togglegrp

#endif // TOGGLEGRP_CLI_HPP
