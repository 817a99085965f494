#include <doctest.h>

#include <set>

#include "pspread/bounds.hpp"
#include "pspread/partition.hpp"

using namespace pspread;
using construct::PartialSpread;
using partition::SubspacePartition;
using space::Subspace;
using space::Vec;

namespace {

SubspacePartition spread_partition(unsigned q, int n, int t) {
  return partition::from_partial_spread(construct::construct_partial_spread(q, n, t));
}

}  // namespace

TEST_CASE("partition from a partial spread") {
  // 9-member partial 2-spread of V(5,2): type [2^9, 1^4]
  SubspacePartition p = spread_partition(2, 5, 2);
  CHECK(p.size() == 13);
  CHECK(p.count(2) == 9);
  CHECK(p.count(1) == 4);  // 31 - 9*3

  // full spread: no 1-members
  SubspacePartition full = spread_partition(2, 6, 2);
  CHECK(full.count(2) == 21);
  CHECK(full.count(1) == 0);
  CHECK(full.size() == 21);

  // a single t-subspace: n_1 = Theta_n - Theta_t
  auto ctx = space::make_ctx(3, 4);
  PartialSpread single;
  single.ctx = ctx;
  single.t = 2;
  single.members.push_back(space::rref_canonical(
      ctx, std::vector<Vec>{{1, 0, 0, 0}, {0, 1, 0, 0}}));
  SubspacePartition ps = partition::from_partial_spread(single);
  CHECK(ps.count(1) == ctx.theta(4) - ctx.theta(2));

  // invalid spreads are rejected
  PartialSpread bad = construct::construct_partial_spread(2, 5, 2);
  bad.members.push_back(bad.members[0]);
  CHECK_THROWS_AS(partition::from_partial_spread(bad), InvalidInput);
}

TEST_CASE("validate_partition finds overlaps and coverage gaps") {
  SubspacePartition p = spread_partition(2, 5, 2);
  CHECK(partition::validate_partition(p).ok());

  SUBCASE("duplicated member") {
    p.members.push_back(p.members[0]);
    auto rep = partition::validate_partition(p);
    CHECK(rep.status == partition::PartitionStatus::kOverlap);
    CHECK(rep.member_a == 0);
    CHECK(rep.member_b == (long long)p.members.size() - 1);
  }
  SUBCASE("dropped 1-member leaves its point uncovered") {
    // the last members are the 1-subspaces added for the holes
    Subspace dropped = p.members.back();
    long long missing = space::points(dropped)[0];
    p.members.pop_back();
    auto rep = partition::validate_partition(p);
    CHECK(rep.status == partition::PartitionStatus::kCoverage);
    CHECK(rep.point == missing);
  }
}

TEST_CASE("hyperplane profiles satisfy the size identity pointwise") {
  SubspacePartition p = spread_partition(2, 5, 2);
  // 13 = 1 + 2 b_1 + 4 b_2 forces (b_1, b_2) in {(0,3),(2,2),(4,1)}
  std::set<std::pair<long long, long long>> seen;
  for (const auto& h : space::hyperplanes(p.ctx)) {
    auto prof = partition::profile(p, h);
    seen.insert({prof.b1(), prof.b.at(2)});
    CHECK(13 == 1 + 2 * prof.b1() + 4 * prof.b.at(2));
  }
  std::set<std::pair<long long, long long>> expected{{0, 3}, {2, 2}, {4, 1}};
  CHECK(seen == expected);

  // a full-spread partition has no 1-members anywhere
  SubspacePartition full = spread_partition(2, 6, 2);
  for (const auto& h : space::hyperplanes(full.ctx))
    CHECK(partition::profile(full, h).b1() == 0);

  // a hyperplane containing a member W counts it: b_{dim W} >= 1
  auto h0 = space::hyperplanes(p.ctx);
  for (const auto& h : h0) {
    auto prof = partition::profile(p, h);
    for (const auto& w : p.members)
      if (space::intersect_dim(w, h) == w.dim())
        CHECK(prof.b.at(w.dim()) >= 1);
    break;  // one hyperplane suffices for this containment spot-check
  }
}

TEST_CASE("per-hyperplane size identity holds for every hyperplane") {
  CHECK(partition::check_hele0(spread_partition(2, 5, 2)).ok);
  CHECK(partition::check_hele0(spread_partition(2, 6, 2)).ok);
  CHECK(partition::check_hele0(spread_partition(3, 4, 2)).ok);

  // full spread of V(4,2): 5 = 1 + 4 b_2, so every hyperplane contains
  // exactly one member
  SubspacePartition full42 = spread_partition(2, 4, 2);
  for (const auto& h : space::hyperplanes(full42.ctx))
    CHECK(partition::profile(full42, h).b.at(2) == 1);

  // single-member partition [2^1, 1^{Theta_n - Theta_t}]
  auto ctx = space::make_ctx(2, 4);
  PartialSpread single;
  single.ctx = ctx;
  single.t = 2;
  single.members.push_back(space::rref_canonical(
      ctx, std::vector<Vec>{{1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(partition::check_hele0(partition::from_partial_spread(single)).ok);
}

TEST_CASE("histogram identities") {
  SubspacePartition p = spread_partition(2, 5, 2);
  auto rep = partition::check_hele1(p);
  REQUIRE(rep.ok);
  // dims are listed descending: b = [b_2, b_1]
  REQUIRE(rep.histogram.dims == std::vector<int>{2, 1});
  long long total = 0, b1sum = 0, b2sum = 0;
  for (const auto& [b, count] : rep.histogram.s) {
    total += count;
    b2sum += b[0] * count;
    b1sum += b[1] * count;
  }
  CHECK(total == 31);   // Theta_5
  CHECK(b1sum == 60);   // n_1 Theta_4 = 4*15
  CHECK(b2sum == 63);   // n_2 Theta_3 = 9*7

  auto repf = partition::check_hele1(spread_partition(2, 4, 2));
  REQUIRE(repf.ok);
  long long sum = 0;
  for (const auto& [b, count] : repf.histogram.s) sum += b[0] * count;
  CHECK(sum == 5 * 3);  // n_2 Theta_{n-2}
}

TEST_CASE("exact b_1 average and empirical mean coincide") {
  SubspacePartition p = spread_partition(2, 5, 2);
  Rat avg = partition::average_b1(p);
  CHECK(avg == Rat(60, 31));
  Int sum = 0;
  long long hyperplane_count = 0;
  space::for_each_hyperplane(p.ctx, [&](const Subspace& h) {
    sum += partition::profile(p, h).b1();
    ++hyperplane_count;
  });
  CHECK(Rat(sum, Int(hyperplane_count)) == avg);

  SubspacePartition full = spread_partition(2, 6, 2);
  CHECK(partition::average_b1(full) == 0);

  // sanity envelope: avg < n_1/q + 1 on the partitions used in tests
  for (auto* pp : {&p, &full})
    CHECK(partition::average_b1(*pp) < Rat(Int(pp->count(1)), Int(2)) + 1);
}

TEST_CASE("descent_select picks the first at-or-below-average hyperplane") {
  SubspacePartition p = spread_partition(2, 5, 2);
  auto chosen = partition::descent_select(p);
  CHECK(Rat(chosen.b1()) <= partition::average_b1(p));
  CHECK(chosen.b1() == 0);  // profiles carry b_1 in {0,2,4}; avg is 60/31
  // deterministic
  auto again = partition::descent_select(p);
  CHECK(again.hyperplane == chosen.hyperplane);
  CHECK(again.b1() == chosen.b1());
}

TEST_CASE("inducing a partition on a hyperplane") {
  SubspacePartition full42 = spread_partition(2, 4, 2);
  auto hs = space::hyperplanes(full42.ctx);
  for (const auto& h : hs) {
    SubspacePartition ind = partition::induce(full42, h);
    CHECK(ind.ctx.n == 3);
    CHECK(ind.count(2) == 1);  // the single member inside H
    CHECK(ind.count(1) == 4);  // the other four cut down to points
    CHECK(partition::validate_partition(ind).ok());
  }
  // inducing twice preserves validity
  SubspacePartition p = spread_partition(2, 5, 2);
  SubspacePartition ind1 = partition::induce(p, partition::descent_select(p).hyperplane);
  CHECK(partition::validate_partition(ind1).ok());
  SubspacePartition ind2 =
      partition::induce(ind1, partition::descent_select(ind1).hyperplane);
  CHECK(partition::validate_partition(ind2).ok());

  // bookkeeping: members of dimension >= 2 survive when t - j > 2
  SubspacePartition p73 = spread_partition(2, 7, 3);
  long long before = 0;
  for (const auto& [d, cnt] : p73.type)
    if (d >= 2) before += cnt;
  SubspacePartition ind73 =
      partition::induce(p73, partition::descent_select(p73).hyperplane);
  long long after = 0;
  for (const auto& [d, cnt] : ind73.type)
    if (d >= 2) after += cnt;
  CHECK(before == after);
  CHECK(partition::validate_partition(ind73).ok());
}

TEST_CASE("descent certificate at hand-checked parameters") {
  auto rep = partition::descent_certificate(2, 10, 4);
  CHECK(rep.verdict == partition::DescentReport::Verdict::kContradiction);
  CHECK(rep.all_checks);
  CHECK(rep.n_t == 66);
  CHECK(rep.n_1 == 33);  // 2*16 + 1
  CHECK(rep.bound == 65);
  CHECK(bounds::theta(2, 10) == 66 * bounds::theta(2, 4) + 33);

  auto rep2 = partition::descent_certificate(3, 7, 2);
  CHECK(rep2.verdict == partition::DescentReport::Verdict::kContradiction);
  CHECK(rep2.all_checks);
  CHECK(rep2.ell == 30);
  CHECK(rep2.bound == 271);

  auto rep3 = partition::descent_certificate(2, 8, 3);
  CHECK(rep3.verdict == partition::DescentReport::Verdict::kHypothesisNotMet);
  CHECK(rep3.reason.find("t <= Theta_r") != std::string::npos);

  auto rep4 = partition::descent_certificate(2, 6, 2);
  CHECK(rep4.verdict == partition::DescentReport::Verdict::kHypothesisNotMet);
  CHECK(rep4.reason.find("r = 0") != std::string::npos);
}
