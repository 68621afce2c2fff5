#ifndef TOGGLE_GROUP_TOGGLE_GROUP_HPP
#define TOGGLE_GROUP_TOGGLE_GROUP_HPP

#include "error.hpp"
#include "fib_index.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "permutation.hpp"
#include "stabilizer_chain.hpp"
#include "verifier.hpp"

#endif // TOGGLE_GROUP_TOGGLE_GROUP_HPP
