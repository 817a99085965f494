#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pspread/space.hpp"

namespace pspread::construct {

using space::Elem;
using space::PointSet;
using space::Subspace;
using space::VectorSpaceCtx;

// A set of pairwise trivially-intersecting t-subspaces of V(n,q).
struct PartialSpread {
  VectorSpaceCtx ctx;
  int t = 0;
  std::vector<Subspace> members;

  long long holes() const {
    return ctx.num_points() - (long long)members.size() * ctx.theta(t);
  }
};

// Lightweight view of one member during streaming: t x n RREF rows with
// pivot columns `pivots[0..t)`.
struct MemberView {
  const Elem* rows;
  const int* pivots;
  int t;
  int n;
};

using MemberSink = std::function<void(const MemberView&)>;

// Streams the members of a partial t-spread of V(n,q) of size ell*q^t + 1
// (a full spread when t divides n). Recursive scheme: while the current
// block dimension s is at least 2t, model it as U x F_{q^m} with m = s - t
// and U = span(1, z, ..., z^{t-1}) inside F_{q^m}, emit the q^m graphs
// S_a = {(x, a*x) : x in U} in ascending order of a, and recurse on
// {0} x F_{q^m}; once t <= s < 2t emit the single block U x {0}. Members
// arrive in canonical RREF form in a deterministic order.
void stream_partial_spread(unsigned q, int n, int t, const MemberSink& sink);

// Materialized construction (desk scale).
PartialSpread construct_partial_spread(unsigned q, int n, int t);

enum class VerifyStatus { kOk, kDimensionError, kOverlapError };

struct VerifyReport {
  VerifyStatus status = VerifyStatus::kOk;
  bool ok() const { return status == VerifyStatus::kOk; }
  long long size = 0;
  long long holes = 0;
  std::vector<long long> hole_points;  // filled by finalize when collected
  // witnesses
  long long member_a = -1;  // first member of an overlapping pair (-1 if unknown)
  long long member_b = -1;  // offending member
  long long point = -1;     // shared point / member with wrong dimension
  std::string message;
};

// Incremental spread verifier over a stream of members: checks every member
// is a canonical t x n RREF basis and that no point is covered twice
// (pairwise disjointness is exactly point-disjointness). Memory footprint is
// one bit per point of PG(n-1,q).
class StreamVerifier {
 public:
  StreamVerifier(VectorSpaceCtx ctx, int t, bool collect_holes = false);

  // Returns false once a violation has been recorded.
  bool add(const MemberView& m);
  bool add(const Subspace& s);
  VerifyReport finalize();

  const VerifyReport& report() const { return report_; }

 private:
  VectorSpaceCtx ctx_;
  int t_;
  bool collect_holes_;
  bool failed_ = false;
  PointSet covered_;
  std::vector<Elem> v_ws_, c_ws_;
  std::vector<int> piv_ws_;
  VerifyReport report_;
};

// Full verification of a materialized spread; on overlap the witness pair
// (member_a, member_b, point) is identified exactly.
VerifyReport verify_partial_spread(const PartialSpread& spread);

// Constructs and verifies without materializing; used for large parameters.
VerifyReport construct_and_verify(unsigned q, int n, int t);

// Minimum subspace distance min d_S(U,W) = dim U + dim W - 2 dim(U cap W)
// over all pairs. Throws TooFewMembers for fewer than two subspaces,
// CtxMismatch for mixed ambient spaces.
int min_subspace_distance(std::span<const Subspace> code);

}  // namespace pspread::construct
