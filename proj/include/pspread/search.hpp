#pragma once

#include <vector>

#include "pspread/construct.hpp"

namespace pspread::search {

// Exact maximum partial t-spread search by depth-first branch and bound
// over all candidate t-subspaces, represented as point bitsets. With
// use_paper_bounds = false (the default) pruning relies only on counting
// facts independent of the closed-form bounds, so the search acts as an
// independent oracle for them.
struct SearchConfig {
  double time_limit_seconds = 0;  // 0: no limit
  long long node_limit = 0;       // 0: no limit
  bool symmetry_fix = true;       // pin the first member to span(e_1..e_t)
  bool use_paper_bounds = false;
  bool deterministic = true;
  // Warm-start with the verified recursive construction as the incumbent.
  // The incumbent is an explicit object, so the optimality proof is still
  // by exhaustion with counting arguments only; disabling this makes the
  // search find its incumbents itself (much slower on full-spread cases).
  bool prime_with_construction = true;
  long long candidate_cap = 100000;
};

struct SearchResult {
  construct::PartialSpread best;
  long long size = 0;
  bool optimal = false;  // search space exhausted
  long long nodes_explored = 0;
  double elapsed_seconds = 0;
};

SearchResult max_partial_spread(unsigned q, int n, int t,
                                const SearchConfig& cfg = {});

}  // namespace pspread::search
