#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pspread/ints.hpp"

namespace pspread::bounds {

// Parameters of the partial-spread problem mu_q(n,t): q a prime power,
// n = k*t + r with 0 <= r < t and 1 <= t < n.
struct ParamSet {
  unsigned q;
  int n;
  int t;
  int r;
  int k;
};

ParamSet make_params(unsigned q, int n, int t);

// Theta_i = (q^i - 1)/(q - 1); Theta_0 = 0.
Int theta(unsigned q, int i);

// delta_i = (q^i - 2 q^{i-1} + 1)/(q - 1), i >= 1.
Int delta(unsigned q, int i);

// ell = (q^{n-t} - q^r)/(q^t - 1).
Int ell(unsigned q, int n, int t);

// Lower bound ell*q^t + 1, met by the recursive construction; equals
// (q^n - q^{t+r})/(q^t - 1) + 1, and the full spread count when r = 0.
Int lb_construction(unsigned q, int n, int t);

// Drake-Freeman upper bound (q^n - q^r)/(q^t-1) - floor(omega) - 1 with
// 2*omega = sqrt(4 q^t (q^t - q^r) + 1) - (2 q^t - 2 q^r + 1). floor(omega)
// is decided by integer square-root bracketing, never by floating point.
// Throws NotApplicable when r = 0 (at r = 0 the formula would undercut the
// exact full-spread count by one; the bound addresses t not dividing n).
Int ub_drake_freeman(unsigned q, int n, int t);

// Upper bound ell*q^t + q, valid when r >= 2 and t = Theta_r; throws
// NotApplicable otherwise.
Int ub_lemma11(unsigned q, int n, int t);

enum class Source {
  kAndreR0,
  kBhpR1,
  kMainThm5,
  kEjsssThm3,
  kKurzThm4,
  kDfThm1,
  kLemma11,
  kTrivialSmallN,
};

const char* source_label(Source s);

struct BoundsReport {
  Int lower;
  Int upper;
  std::optional<Int> exact;
  // Every applicable source with the value it yields, exactness results
  // first. lower/upper/exact carry the combined tight result.
  std::vector<std::pair<Source, Int>> provenance;
};

// Combines every applicable exactness theorem and upper bound into one
// report. Exact value cases:
//   (a) n < 2t: any two t-subspaces intersect, mu = 1;
//   (b) r = 0: full spread count (q^n - 1)/(q^t - 1);
//   (c) r = 1: ell*q^t + 1;
//   (d) t > Theta_r: ell*q^t + 1;
//   (e) q = 2, t = 3, r = 2, n >= 8: (2^n - 2^5)/7 + 2;
//   (f) q = 2, r = 2, t > 3: ell*2^t + 1 (subsumed by (d)).
// Otherwise a range [lb_construction, min applicable upper bound].
BoundsReport exact_or_range(unsigned q, int n, int t);

}  // namespace pspread::bounds
