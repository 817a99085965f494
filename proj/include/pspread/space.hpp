#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pspread/gf.hpp"
#include "pspread/ints.hpp"

namespace pspread::space {

using gf::Elem;
using Vec = std::vector<Elem>;

// Ambient space V(n,q). Immutable; cheap to copy.
struct VectorSpaceCtx {
  gf::FieldPtr field;
  int n = 0;

  VectorSpaceCtx() = default;
  VectorSpaceCtx(gf::FieldPtr f, int n);

  unsigned q() const { return field->q(); }
  // Theta_i = (q^i - 1)/(q - 1): points of an i-subspace. Theta_0 = 0.
  long long theta(int i) const { return theta_[i]; }
  long long num_points() const { return theta_[n]; }
  long long pow_q(int i) const { return qpow_[i]; }

 private:
  std::vector<long long> theta_, qpow_;
};

inline bool same_ctx(const VectorSpaceCtx& a, const VectorSpaceCtx& b) {
  return a.n == b.n && a.field->q() == b.field->q();
}

VectorSpaceCtx make_ctx(unsigned q, int n);

// Gauss-Jordan reduction to RREF in place. `a` is rows x n row-major.
// Returns the rank; pivot columns are appended to *pivots when non-null.
int rref_in_place(const gf::Field& f, Elem* a, int rows, int n,
                  std::vector<int>* pivots);

// Structural RREF test: pivot entries 1, strictly increasing pivot columns,
// zeros elsewhere in pivot columns and left of each pivot. Fills *pivots on
// success.
bool is_rref(const Elem* a, int rows, int n, std::vector<int>* pivots);

// A d-subspace of V(n,q), held as its canonical reduced-row-echelon basis.
// Two Subspace values represent the same subspace iff their bases are
// identical.
class Subspace {
 public:
  // Trusted constructor: rows must already be canonical RREF.
  Subspace(VectorSpaceCtx ctx, std::vector<Elem> rref_rows,
           std::vector<int> pivots);

  const VectorSpaceCtx& ctx() const { return ctx_; }
  int dim() const { return int(pivots_.size()); }
  int n() const { return ctx_.n; }
  const std::vector<Elem>& rows() const { return rows_; }
  const Elem* row(int i) const { return rows_.data() + size_t(i) * ctx_.n; }
  const std::vector<int>& pivots() const { return pivots_; }
  long long num_points() const { return ctx_.theta(dim()); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return same_ctx(a.ctx_, b.ctx_) && a.rows_ == b.rows_;
  }

 private:
  VectorSpaceCtx ctx_;
  std::vector<Elem> rows_;
  std::vector<int> pivots_;
};

// Canonicalizes the span of the given vectors. Throws DimensionZero if all
// vectors are zero, CtxMismatch on wrong lengths.
Subspace rref_canonical(const VectorSpaceCtx& ctx, std::span<const Vec> vectors);

// dim(S1 cap S2) via rank of the stacked bases.
int intersect_dim(const Subspace& s1, const Subspace& s2);

// ---- points -----------------------------------------------------------
//
// A point (1-subspace) is indexed by the rank of its canonical
// representative (first nonzero coordinate scaled to 1) in lexicographic
// order of coordinate tuples. For a representative with first nonzero
// coordinate at position i the index is
//   Theta_{n-1-i} + sum_{k>i} v_k q^{n-1-k}.

long long point_index(const VectorSpaceCtx& ctx, const Elem* v);
// Inverse of point_index.
Vec point_vector(const VectorSpaceCtx& ctx, long long index);

namespace detail {
inline void axpy(const gf::Field& f, Elem* v, const Elem* row, Elem lam,
                 int from, int n) {
  if (f.dense_tables()) {
    const Elem* mr = f.mul_row(lam);
    const Elem* ar;
    for (int i = from; i < n; ++i)
      if (row[i]) {
        ar = f.add_row(v[i]);
        v[i] = ar[mr[row[i]]];
      }
  } else {
    for (int i = from; i < n; ++i)
      if (row[i]) v[i] = f.add(v[i], f.mul(lam, row[i]));
  }
}
}  // namespace detail

// Streams the point indices of the row space of an RREF matrix, using
// caller-provided workspace (v: n elems, c: d elems). Unsorted order.
// Enumerates, for each lead row j, the combinations
//   row_j + sum_{k>j} c_k row_k,
// which are exactly the canonical representatives of the span's points.
template <class Fn>
void for_each_span_point(const VectorSpaceCtx& ctx, const Elem* rows, int d,
                         const int* pivots, Elem* v, Elem* c, Fn&& fn) {
  const gf::Field& f = *ctx.field;
  const int n = ctx.n;
  const unsigned q = f.q();
  for (int j = 0; j < d; ++j) {
    const Elem* rj = rows + size_t(j) * n;
    const int pj = pivots[j];
    for (int i = pj; i < n; ++i) v[i] = rj[i];
    for (int k = j + 1; k < d; ++k) c[k] = 0;
    const long long base = ctx.theta(n - 1 - pj);
    for (;;) {
      long long tail = 0;
      for (int i = pj + 1; i < n; ++i) tail = tail * q + v[i];
      fn(base + tail);
      int k = d - 1;
      while (k > j && c[k] == q - 1) {
        detail::axpy(f, v, rows + size_t(k) * n, f.neg(Elem(q - 1)),
                     pivots[k], n);
        c[k] = 0;
        --k;
      }
      if (k == j) break;
      detail::axpy(f, v, rows + size_t(k) * n, f.sub(Elem(c[k] + 1), c[k]),
                   pivots[k], n);
      ++c[k];
    }
  }
}

// Sorted point indices of a subspace; length Theta_d.
std::vector<long long> points(const Subspace& s);

// Fixed-width bit-packed set keyed by point index.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(long long universe)
      : n_(universe), w_(size_t((universe + 63) / 64), 0) {}

  long long universe() const { return n_; }
  bool test(long long i) const { return (w_[size_t(i >> 6)] >> (i & 63)) & 1; }
  void set(long long i) { w_[size_t(i >> 6)] |= 1ull << (i & 63); }
  void reset(long long i) { w_[size_t(i >> 6)] &= ~(1ull << (i & 63)); }
  // Returns true if the bit was newly set.
  bool insert(long long i) {
    uint64_t m = 1ull << (i & 63);
    uint64_t& w = w_[size_t(i >> 6)];
    if (w & m) return false;
    w |= m;
    return true;
  }
  bool intersects(const PointSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  void or_with(const PointSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  }
  // Removes a disjointly-added set (undo of or_with when disjoint).
  void xor_with(const PointSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  }
  long long count() const;

 private:
  long long n_ = 0;
  std::vector<uint64_t> w_;
};

// Number of d-subspaces of V(n,q), exact.
Int gaussian_binomial(int n, int d, const Int& q);

// Enumerates all d-subspaces of V(n,q) exactly once: pivot-column patterns
// in ascending lexicographic order, free entries in lexicographic order
// within each pattern.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(VectorSpaceCtx ctx, int d);
  // Returns false when the enumeration is exhausted.
  bool next(Subspace& out);

 private:
  void setup_pattern();
  bool advance_pattern();

  VectorSpaceCtx ctx_;
  int d_;
  bool done_ = false;
  std::vector<int> pivots_;
  std::vector<std::pair<int, int>> free_cells_;  // (row, col), row-major
  std::vector<Elem> values_;
  bool fresh_pattern_ = true;
};

// All hyperplanes of V(n,q): kernels of the canonical nonzero functionals,
// one per point of the dual space, in dual point-index order.
void for_each_hyperplane(const VectorSpaceCtx& ctx,
                         const std::function<void(const Subspace&)>& fn);
std::vector<Subspace> hyperplanes(const VectorSpaceCtx& ctx);

// Recovers a functional phi with H = ker(phi) from the RREF basis of H.
Vec functional_of_hyperplane(const Subspace& h);

}  // namespace pspread::space
