#ifndef TOGGLE_GROUP_TESTS_GOLDEN_HPP
#define TOGGLE_GROUP_TESTS_GOLDEN_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "toggle_group/fib_index.hpp"

namespace golden
{

inline std::string read(std::string const &name)
{
  std::ifstream in(std::string(TEST_GOLDEN_DIR) + "/" + name);
  if (!in)
    throw std::runtime_error("missing golden file " + name);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// The "index set" table of I_n, one line per set.
inline std::string index_table(std::size_t n)
{
  std::string out;
  auto const sets = toggle_group::enumerate_independent_sets(
    toggle_group::PathGraph{n});
  for (std::size_t j = 0; j < sets.size(); ++j)
    out += std::to_string(j + 1) + " " + toggle_group::format_set(sets[j]) +
           "\n";
  return out;
}

} // namespace golden

#endif // TOGGLE_GROUP_TESTS_GOLDEN_HPP
