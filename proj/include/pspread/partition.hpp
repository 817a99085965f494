#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pspread/construct.hpp"
#include "pspread/ints.hpp"

namespace pspread::partition {

using space::Subspace;
using space::VectorSpaceCtx;

// A subspace partition of V(n,q): nontrivial subspaces such that every
// nonzero vector lies in exactly one member. The type maps each occurring
// dimension d to its multiplicity n_d, largest dimension first.
using TypeVector = std::map<int, long long, std::greater<int>>;

struct SubspacePartition {
  VectorSpaceCtx ctx;
  std::vector<Subspace> members;
  TypeVector type;

  long long size() const { return (long long)members.size(); }
  long long count(int d) const {
    auto it = type.find(d);
    return it == type.end() ? 0 : it->second;
  }
};

// Partial t-spread plus one 1-subspace per hole: type [t^{n_t}, 1^{n_1}].
// Throws InvalidInput if the spread fails verification.
SubspacePartition from_partial_spread(const construct::PartialSpread& spread);

enum class PartitionStatus { kValid, kOverlap, kCoverage };

struct PartitionReport {
  PartitionStatus status = PartitionStatus::kValid;
  bool ok() const { return status == PartitionStatus::kValid; }
  long long member_a = -1, member_b = -1;
  long long point = -1;
  TypeVector type;
  std::string message;
};

// Exact-cover check by point-set union/disjointness; reports the recomputed
// type vector, or a witness for the first overlap/coverage violation.
PartitionReport validate_partition(const SubspacePartition& p);

// Containment counts b_{H,d} = members of dimension d lying inside H.
struct HyperplaneProfile {
  Subspace hyperplane;
  std::map<int, long long, std::greater<int>> b;

  long long b1() const {
    auto it = b.find(1);
    return it == b.end() ? 0 : it->second;
  }
};

HyperplaneProfile profile(const SubspacePartition& p, const Subspace& hyperplane);

// Histogram s_b: how many hyperplanes share each containment vector b,
// with b listed in the same dimension order as `dims`.
struct ProfileHistogram {
  std::vector<int> dims;  // descending
  std::map<std::vector<long long>, long long> s;
};

struct IdentityReport {
  bool ok = true;
  std::string message;  // first violation, empty when ok
  ProfileHistogram histogram;
};

// Checks |P| = 1 + sum_d b_{H,d} q^d for EVERY hyperplane H. A failure
// indicates an implementation bug: the identity is a theorem.
IdentityReport check_hele0(const SubspacePartition& p);

// Builds the profile histogram and checks sum_b s_b = Theta_n together with
// sum_b b_d s_b = n_d Theta_{n-d} for every dimension d of the partition.
IdentityReport check_hele1(const SubspacePartition& p);

// Exact average of b_{H,1} over all hyperplanes: n_1 Theta_{n-1} / Theta_n.
Rat average_b1(const SubspacePartition& p);

// First hyperplane in canonical order with b_{H,1} <= average_b1(p); one
// always exists by pigeonhole.
HyperplaneProfile descent_select(const SubspacePartition& p);

// The partition {W cap H : W in P} of the hyperplane H, re-expressed in an
// (n-1)-coordinate frame of H (the coordinates at H's pivot columns);
// trivial intersections of 1-members outside H are dropped.
SubspacePartition induce(const SubspacePartition& p, const Subspace& hyperplane);

// Arithmetic replay of the hyperplane-averaging descent refuting a partial
// t-spread of size ell*q^t + 2 when r = n mod t >= 1 and t > Theta_r. Never
// instantiates the refuted object: every identity, inequality and congruence
// step is verified numerically for all admissible coefficient values, ending
// in the clash that forces the verdict
//   CONTRADICTION => mu_q(n,t) <= ell*q^t + 1.
struct DescentReport {
  enum class Verdict { kContradiction, kHypothesisNotMet };
  Verdict verdict = Verdict::kHypothesisNotMet;
  bool all_checks = false;  // every verified step held
  unsigned q = 0;
  int n = 0, t = 0, r = 0;
  Int theta_r, ell, n_t, n_1, bound;
  std::vector<std::string> trace;
  std::string reason;  // which hypothesis failed, when HypothesisNotMet
};

DescentReport descent_certificate(unsigned q, int n, int t);

}  // namespace pspread::partition
