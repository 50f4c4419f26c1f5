// Base and strong generating set via deterministic Schreier-Sims.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gsym/permutation.hpp"

namespace gsym {

// One level of a stabilizer chain: the orbit of base_point under the level's
// generators, with a full transversal (u_by_point[p] maps base_point to p).
struct BsgsLevel {
  int base_point = -1;
  std::vector<Permutation> gens;
  std::vector<int> orbit;  // BFS discovery order, orbit[0] == base_point
  std::vector<std::optional<Permutation>> u_by_point;
};

struct Bsgs {
  int degree = 0;
  std::vector<BsgsLevel> levels;
  std::uint64_t order = 1;

  // Sifts g through the chain starting at `from_level`. Returns the residue
  // and the level at which sifting stopped (== levels.size() on success).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from_level = 0) const;

  bool contains(const Permutation& g) const;
};

// Deterministic Schreier-Sims. base_hint points are installed (in order)
// before automatic base extension; only hints actually moved by the group
// end up in the base. Used by the edge-action kernel computation to force
// edge points ahead of vertex points.
Bsgs build_bsgs(int degree, const std::vector<Permutation>& generators,
                const std::vector<int>& base_hint = {});

}  // namespace gsym
