#pragma once

#include <cstdint>
#include <map>

#include "micert/core.hpp"

// Exact multigraded Betti numbers of S/I through Koszul complex homology,
// projective dimension, depth (Auslander-Buchsbaum) and linear resolution
// detection.

namespace micert {

struct BettiOptions {
  bool mod_p = false;        // rank over GF(prime) instead of exact integers
  long prime = 32003;
  std::size_t strand_cap = 20000;  // largest strand dimension before refusal
};

struct BettiTable {
  int nvars = 0;
  // beta_{i, alpha}(S/I), nonzero entries only; beta_{0,0} = 1 included
  std::map<std::pair<int, std::vector<Exponent>>, std::uint64_t> entries;

  std::map<int, std::uint64_t> total() const;  // beta_i = sum over alpha
  int projective_dimension() const;
};

BettiTable betti(const MonomialIdeal& I, const BettiOptions& opts = {});

// depth(S/I) = n - pd(S/I).
int depth(const MonomialIdeal& I, const BettiOptions& opts = {});

// Every generator of degree d and beta_{i,alpha}(S/I) != 0 with i >= 1 forces
// |alpha| = d + i - 1.
bool has_linear_resolution(const MonomialIdeal& I, const BettiOptions& opts = {});

}  // namespace micert
