#pragma once

#include <random>

#include "stanley/ideal.hpp"

namespace stanley {

/// Random squarefree ideal with exactly m minimal generators: m distinct
/// nonempty subsets of {1..n} are drawn uniformly (via uniform_int on a
/// seeded mt19937_64), and the draw is repeated until they form an
/// antichain and, if `cover_all`, every variable occurs in one of them.
MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, int n, int m,
                                      bool cover_all = true);

}  // namespace stanley
