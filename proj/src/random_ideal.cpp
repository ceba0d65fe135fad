#include "stanley/random_ideal.hpp"

#include <algorithm>

#include "stanley/error.hpp"
#include "stanley/poset.hpp"

namespace stanley {

namespace {

bool is_antichain(const std::vector<Mask>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i != j && is_subset(gens[i], gens[j])) return false;
    }
  }
  return true;
}

}  // namespace

MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, int n, int m, bool cover_all) {
  if (n < 1 || n > 20) throw PreconditionError("random ideal: n must be in [1, 20]");
  if (m < 1) throw PreconditionError("random ideal: m must be positive");
  // Largest antichain in the Boolean lattice is the middle layer.
  std::uint64_t width = 1;
  for (int i = 0; i < n / 2; ++i) width = width * static_cast<std::uint64_t>(n - i) / (i + 1);
  if (static_cast<std::uint64_t>(m) > width) {
    throw PreconditionError("random ideal: no antichain of " + std::to_string(m) +
                            " subsets exists in " + std::to_string(n) + " variables");
  }
  if (cover_all && n == 1 && m > 1) {
    throw PreconditionError("random ideal: cannot cover with these parameters");
  }
  const Mask full = full_mask(n);
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    std::vector<Mask> gens;
    while (static_cast<int>(gens.size()) < m) {
      const Mask s = uniform_int(rng, 1, full);
      if (std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
    }
    if (!is_antichain(gens)) continue;
    Mask used = 0;
    for (Mask g : gens) used |= g;
    if (cover_all && used != full) continue;
    return MonomialIdeal::from_masks(n, gens);
  }
  throw LimitError("random ideal: rejection sampling did not converge");
}

}  // namespace stanley
