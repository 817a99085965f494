#include "pspread/space.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace pspread::space {

VectorSpaceCtx::VectorSpaceCtx(gf::FieldPtr f, int n) : field(std::move(f)), n(n) {
  if (n < 1) throw BadParams("ambient dimension must be >= 1");
  const unsigned long long q = field->q();
  qpow_.resize(n + 1);
  theta_.resize(n + 1);
  unsigned long long pw = 1;
  for (int i = 0; i <= n; ++i) {
    qpow_[i] = (long long)pw;
    theta_[i] = (long long)((pw - 1) / (q - 1));
    if (i < n) {
      if (pw > (1ull << 62) / q)
        throw TooLarge("q^n exceeds the supported point-index range");
      pw *= q;
    }
  }
}

VectorSpaceCtx make_ctx(unsigned q, int n) {
  return VectorSpaceCtx(gf::make_field(q), n);
}

int rref_in_place(const gf::Field& f, Elem* a, int rows, int n,
                  std::vector<int>* pivots) {
  int rank = 0;
  for (int col = 0; col < n && rank < rows; ++col) {
    int pr = -1;
    for (int r = rank; r < rows; ++r)
      if (a[size_t(r) * n + col]) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != rank)
      for (int i = col; i < n; ++i)
        std::swap(a[size_t(pr) * n + i], a[size_t(rank) * n + i]);
    Elem lead_inv = f.inv(a[size_t(rank) * n + col]);
    for (int i = col; i < n; ++i)
      a[size_t(rank) * n + i] = f.mul(lead_inv, a[size_t(rank) * n + i]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      Elem factor = a[size_t(r) * n + col];
      if (factor == 0) continue;
      for (int i = col; i < n; ++i)
        a[size_t(r) * n + i] =
            f.sub(a[size_t(r) * n + i], f.mul(factor, a[size_t(rank) * n + i]));
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

bool is_rref(const Elem* a, int rows, int n, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  int prev = -1;
  for (int r = 0; r < rows; ++r) {
    int lead = -1;
    for (int i = 0; i < n; ++i)
      if (a[size_t(r) * n + i]) {
        lead = i;
        break;
      }
    if (lead < 0 || lead <= prev) return false;  // zero row or bad order
    if (a[size_t(r) * n + lead] != 1) return false;
    for (int rr = 0; rr < rows; ++rr)
      if (rr != r && a[size_t(rr) * n + lead] != 0) return false;
    if (pivots) pivots->push_back(lead);
    prev = lead;
  }
  return true;
}

Subspace::Subspace(VectorSpaceCtx ctx, std::vector<Elem> rref_rows,
                   std::vector<int> pivots)
    : ctx_(std::move(ctx)), rows_(std::move(rref_rows)), pivots_(std::move(pivots)) {
  if (pivots_.empty() || rows_.size() != pivots_.size() * size_t(ctx_.n))
    throw BadParams("Subspace: inconsistent basis shape");
}

Subspace rref_canonical(const VectorSpaceCtx& ctx, std::span<const Vec> vectors) {
  const int n = ctx.n;
  std::vector<Elem> m(vectors.size() * size_t(n));
  for (size_t r = 0; r < vectors.size(); ++r) {
    if (int(vectors[r].size()) != n)
      throw CtxMismatch("vector length does not match ambient dimension");
    std::copy(vectors[r].begin(), vectors[r].end(), m.begin() + r * n);
  }
  std::vector<int> pivots;
  int rank = rref_in_place(*ctx.field, m.data(), int(vectors.size()), n, &pivots);
  if (rank == 0) throw DimensionZero("span of the given vectors is zero");
  m.resize(size_t(rank) * n);
  return Subspace(ctx, std::move(m), std::move(pivots));
}

int intersect_dim(const Subspace& s1, const Subspace& s2) {
  if (!same_ctx(s1.ctx(), s2.ctx()))
    throw CtxMismatch("subspaces live in different ambient spaces");
  const int n = s1.n();
  const int d1 = s1.dim(), d2 = s2.dim();
  std::vector<Elem> m(size_t(d1 + d2) * n);
  std::copy(s1.rows().begin(), s1.rows().end(), m.begin());
  std::copy(s2.rows().begin(), s2.rows().end(), m.begin() + size_t(d1) * n);
  int rank = rref_in_place(*s1.ctx().field, m.data(), d1 + d2, n, nullptr);
  return d1 + d2 - rank;
}

long long point_index(const VectorSpaceCtx& ctx, const Elem* v) {
  const int n = ctx.n;
  int lead = -1;
  for (int i = 0; i < n; ++i)
    if (v[i]) {
      lead = i;
      break;
    }
  if (lead < 0) throw DimensionZero("zero vector has no point index");
  const gf::Field& f = *ctx.field;
  Elem scale = f.inv(v[lead]);
  long long tail = 0;
  const unsigned q = f.q();
  for (int i = lead + 1; i < n; ++i) tail = tail * q + f.mul(scale, v[i]);
  return ctx.theta(n - 1 - lead) + tail;
}

Vec point_vector(const VectorSpaceCtx& ctx, long long index) {
  const int n = ctx.n;
  if (index < 0 || index >= ctx.num_points())
    throw BadParams("point index out of range");
  int lead = n - 1;
  while (index >= ctx.theta(n - lead)) --lead;
  Vec v(n, 0);
  v[lead] = 1;
  long long tail = index - ctx.theta(n - 1 - lead);
  const unsigned q = ctx.q();
  for (int i = n - 1; i > lead; --i) {
    v[i] = Elem(tail % q);
    tail /= q;
  }
  return v;
}

std::vector<long long> points(const Subspace& s) {
  std::vector<long long> out;
  out.reserve(size_t(s.num_points()));
  std::vector<Elem> v(s.n()), c(s.dim());
  for_each_span_point(s.ctx(), s.rows().data(), s.dim(), s.pivots().data(),
                      v.data(), c.data(),
                      [&](long long idx) { out.push_back(idx); });
  std::sort(out.begin(), out.end());
  return out;
}

long long PointSet::count() const {
  long long c = 0;
  for (uint64_t w : w_) c += std::popcount(w);
  return c;
}

Int gaussian_binomial(int n, int d, const Int& q) {
  if (d < 0 || d > n) throw BadParams("gaussian_binomial: need 0 <= d <= n");
  Int num = 1, den = 1;
  for (int i = 0; i < d; ++i) {
    num *= pow_int(q, unsigned(n - i)) - 1;
    den *= pow_int(q, unsigned(d - i)) - 1;
  }
  return exact_div(num, den);
}

SubspaceEnumerator::SubspaceEnumerator(VectorSpaceCtx ctx, int d)
    : ctx_(std::move(ctx)), d_(d) {
  if (d < 1 || d > ctx_.n) throw BadParams("SubspaceEnumerator: need 1 <= d <= n");
  pivots_.resize(d);
  for (int i = 0; i < d; ++i) pivots_[i] = i;
  setup_pattern();
}

void SubspaceEnumerator::setup_pattern() {
  free_cells_.clear();
  std::vector<bool> is_pivot(ctx_.n, false);
  for (int p : pivots_) is_pivot[p] = true;
  for (int r = 0; r < d_; ++r)
    for (int j = pivots_[r] + 1; j < ctx_.n; ++j)
      if (!is_pivot[j]) free_cells_.emplace_back(r, j);
  values_.assign(free_cells_.size(), 0);
  fresh_pattern_ = true;
}

bool SubspaceEnumerator::advance_pattern() {
  // next d-combination of columns in ascending lexicographic order
  const int n = ctx_.n;
  int i = d_ - 1;
  while (i >= 0 && pivots_[i] == n - d_ + i) --i;
  if (i < 0) return false;
  ++pivots_[i];
  for (int j = i + 1; j < d_; ++j) pivots_[j] = pivots_[j - 1] + 1;
  setup_pattern();
  return true;
}

bool SubspaceEnumerator::next(Subspace& out) {
  if (done_) return false;
  if (!fresh_pattern_) {
    // odometer over free entries, last cell fastest (lexicographic order)
    const unsigned q = ctx_.q();
    size_t k = values_.size();
    while (k > 0 && values_[k - 1] == q - 1) values_[--k] = 0;
    if (k == 0) {
      if (!advance_pattern()) {
        done_ = true;
        return false;
      }
    } else {
      ++values_[k - 1];
    }
  }
  fresh_pattern_ = false;
  std::vector<Elem> rows(size_t(d_) * ctx_.n, 0);
  for (int r = 0; r < d_; ++r) rows[size_t(r) * ctx_.n + pivots_[r]] = 1;
  for (size_t idx = 0; idx < free_cells_.size(); ++idx)
    rows[size_t(free_cells_[idx].first) * ctx_.n + free_cells_[idx].second] =
        values_[idx];
  out = Subspace(ctx_, std::move(rows), pivots_);
  return true;
}

void for_each_hyperplane(const VectorSpaceCtx& ctx,
                         const std::function<void(const Subspace&)>& fn) {
  if (ctx.n < 2) throw BadParams("hyperplanes need ambient dimension >= 2");
  const int n = ctx.n;
  for (long long idx = 0; idx < ctx.num_points(); ++idx) {
    Vec phi = point_vector(ctx, idx);
    int lead = 0;
    while (phi[lead] == 0) ++lead;
    // kernel basis: e_j - phi_j e_lead for j != lead
    std::vector<Vec> rows;
    rows.reserve(n - 1);
    for (int j = 0; j < n; ++j) {
      if (j == lead) continue;
      Vec w(n, 0);
      w[j] = 1;
      w[lead] = ctx.field->neg(phi[j]);
      rows.push_back(std::move(w));
    }
    fn(rref_canonical(ctx, rows));
  }
}

std::vector<Subspace> hyperplanes(const VectorSpaceCtx& ctx) {
  std::vector<Subspace> out;
  out.reserve(size_t(ctx.num_points()));
  for_each_hyperplane(ctx, [&](const Subspace& h) { out.push_back(h); });
  return out;
}

Vec functional_of_hyperplane(const Subspace& h) {
  const int n = h.n();
  if (h.dim() != n - 1) throw BadParams("not a hyperplane");
  std::vector<bool> is_pivot(n, false);
  for (int p : h.pivots()) is_pivot[p] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  Vec phi(n, 0);
  phi[free_col] = 1;
  const gf::Field& f = *h.ctx().field;
  for (int r = 0; r < h.dim(); ++r)
    phi[h.pivots()[r]] = f.neg(h.row(r)[free_col]);
  return phi;
}

}  // namespace pspread::space
