#pragma once

#include <random>
#include <vector>

#include "leafine/tree.hpp"

namespace testsupport {

// Random topological tree with at most `leaf_budget` leaves and vertex
// degrees in 2..4. Subtrees may terminate early, so the actual leaf count
// can be anything from 1 to the budget.
inline leafine::TopTree random_topological(std::mt19937& rng,
                                           unsigned leaf_budget,
                                           bool force_branch = false) {
  using leafine::TopTree;
  if (leaf_budget < 2) return TopTree::leaf();
  if (!force_branch) {
    std::uniform_int_distribution<unsigned> stop(0, 3);
    if (stop(rng) == 0) return TopTree::leaf();
  }
  unsigned dmax = leaf_budget < 4 ? leaf_budget : 4;
  std::uniform_int_distribution<unsigned> deg(2, dmax);
  unsigned d = deg(rng);
  std::vector<unsigned> parts(d, 1);
  std::uniform_int_distribution<unsigned> pick(0, d - 1);
  for (unsigned rest = leaf_budget - d; rest > 0; --rest) parts[pick(rng)] += 1;
  std::vector<TopTree> kids;
  kids.reserve(d);
  for (unsigned p : parts) kids.push_back(random_topological(rng, p));
  return TopTree::branch(std::move(kids));
}

}  // namespace testsupport
