#include "pspread/search.hpp"

#include <algorithm>
#include <chrono>

#include "pspread/bounds.hpp"

namespace pspread::search {

namespace {

using space::PointSet;
using space::Subspace;

struct Searcher {
  space::VectorSpaceCtx ctx;
  int t;
  SearchConfig cfg;
  long long theta_t;
  long long npts;

  std::vector<Subspace> cand;
  std::vector<PointSet> cand_pts;
  std::vector<std::vector<int>> by_point;  // point -> candidates covering it

  PointSet covered, abandoned;
  std::vector<int> chosen;
  long long holes = 0;

  std::vector<int> best_members;
  bool best_from_search = false;
  long long best = -1;
  long long stop_at = -1;  // settle once this size is reached (paper bound)

  long long nodes = 0;
  bool out_of_budget = false;
  std::chrono::steady_clock::time_point deadline;
  bool has_deadline = false;

  bool budget_ok() {
    if (out_of_budget) return false;
    if (cfg.node_limit > 0 && nodes >= cfg.node_limit) out_of_budget = true;
    if (has_deadline && (nodes & 1023) == 0 &&
        std::chrono::steady_clock::now() > deadline)
      out_of_budget = true;
    return !out_of_budget;
  }

  void record_if_best() {
    if ((long long)chosen.size() > best) {
      best = (long long)chosen.size();
      best_members = chosen;
      best_from_search = true;
    }
  }

  void dfs(long long scan_from) {
    ++nodes;
    record_if_best();
    if (!budget_ok()) return;
    if (stop_at >= 0 && best >= stop_at) return;

    // least-index point that is neither covered nor abandoned
    long long p = scan_from;
    while (p < npts && (covered.test(p) || abandoned.test(p))) ++p;
    if (p == npts) return;
    // capacity prune: even covering every remaining point cannot beat best
    long long usable = npts - covered.count() - holes;
    if ((long long)chosen.size() + usable / theta_t <= best) return;

    // branch 1..k: extend with a candidate through p
    for (int ci : by_point[size_t(p)]) {
      if (cand_pts[size_t(ci)].intersects(covered) ||
          cand_pts[size_t(ci)].intersects(abandoned))
        continue;
      covered.or_with(cand_pts[size_t(ci)]);
      chosen.push_back(ci);
      dfs(p + 1);
      chosen.pop_back();
      covered.xor_with(cand_pts[size_t(ci)]);
      if (out_of_budget || (stop_at >= 0 && best >= stop_at)) return;
    }
    // final branch: leave p uncovered for good
    abandoned.set(p);
    ++holes;
    dfs(p + 1);
    --holes;
    abandoned.reset(p);
  }
};

}  // namespace

SearchResult max_partial_spread(unsigned q, int n, int t, const SearchConfig& cfg) {
  if (t < 1 || t >= n) throw BadParams("search: need 1 <= t < n");
  const auto t0 = std::chrono::steady_clock::now();

  Searcher s;
  s.ctx = space::make_ctx(q, n);
  s.t = t;
  s.cfg = cfg;
  s.theta_t = s.ctx.theta(t);
  s.npts = s.ctx.num_points();

  Int total = space::gaussian_binomial(n, t, Int(q));
  if (total > cfg.candidate_cap)
    throw CandidateCapExceeded("candidate count " + total.str() +
                               " exceeds the cap " +
                               std::to_string(cfg.candidate_cap));

  space::SubspaceEnumerator en(s.ctx, t);
  std::vector<space::Elem> seed(size_t(n), 0);
  seed[0] = 1;
  Subspace sub(s.ctx, std::move(seed), {0});
  s.by_point.resize(size_t(s.npts));
  while (en.next(sub)) {
    PointSet ps(s.npts);
    const int id = int(s.cand.size());
    for (long long p : space::points(sub)) {
      ps.set(p);
      s.by_point[size_t(p)].push_back(id);
    }
    s.cand.push_back(sub);
    s.cand_pts.push_back(std::move(ps));
  }

  s.covered = PointSet(s.npts);
  s.abandoned = PointSet(s.npts);
  if (cfg.time_limit_seconds > 0) {
    s.has_deadline = true;
    s.deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(cfg.time_limit_seconds));
  }
  if (cfg.use_paper_bounds) {
    auto rep = bounds::exact_or_range(q, n, t);
    if (rep.exact) s.stop_at = rep.exact->convert_to<long long>();
  }
  construct::PartialSpread incumbent;
  if (cfg.prime_with_construction) {
    incumbent = construct::construct_partial_spread(q, n, t);
    if (!construct::verify_partial_spread(incumbent).ok())
      throw Error("construction produced an invalid incumbent; bug");
    s.best = (long long)incumbent.members.size();
  }

  if (cfg.symmetry_fix) {
    // candidate 0 is span(e_1..e_t); every nonempty spread can be mapped
    // onto one containing it, so pin it as the first member
    s.covered.or_with(s.cand_pts[0]);
    s.chosen.push_back(0);
    s.dfs(0);
  } else {
    s.dfs(0);
  }

  SearchResult res;
  res.nodes_explored = s.nodes;
  res.size = s.best;
  res.optimal = !s.out_of_budget;
  if (s.stop_at >= 0 && s.best >= s.stop_at) res.optimal = true;
  if (s.best_from_search) {
    res.best.ctx = s.ctx;
    res.best.t = t;
    for (int ci : s.best_members) res.best.members.push_back(s.cand[size_t(ci)]);
  } else {
    res.best = std::move(incumbent);
  }
  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace pspread::search
