// Builds the toggle permutations of A_n and compares the group they
// generate with the Fibonacci-indexed family G_n.

#include <cstdlib>
#include <iostream>

#include "toggle_group/toggle_group.hpp"

int main(int argc, char **argv)
{
  using namespace toggle_group;
  std::size_t const n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 5;

  std::cout << "I_" << n << " (" << fib(n + 2) << " sets):\n";
  for (auto const &I : enumerate_independent_sets(PathGraph{n}))
    std::cout << "  " << iota(n, I) << ' ' << format_set(I) << '\n';

  for (std::size_t k = 1; k <= n; ++k)
    std::cout << "tau_" << k << " -> " << toggle_permutation(n, k)
              << (toggle_permutation(n, k) == t(k, n) ? "  (= t_k)" : "  (!)")
              << '\n';

  auto const toggles = toggle_permutations(n);
  auto const chain = StabilizerChain::build(toggles, fib(n + 2));
  std::cout << "|Gamma_" << n << "| = " << chain.order() << '\n'
            << "full symmetric: " << std::boolalpha << is_full_symmetric(chain)
            << '\n';
}
