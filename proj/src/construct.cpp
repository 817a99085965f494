#include "pspread/construct.hpp"

#include <algorithm>

namespace pspread::construct {

void stream_partial_spread(unsigned q, int n, int t, const MemberSink& sink) {
  if (t < 1 || t >= n) throw BadParams("construct: need 1 <= t < n");
  gf::FieldPtr field = gf::make_field(q);

  std::vector<Elem> rows(size_t(t) * n, 0);
  std::vector<int> pivots(t);
  MemberView view{rows.data(), pivots.data(), t, n};

  int offset = 0;
  int s = n;
  while (s >= 2 * t) {
    const int m = s - t;
    gf::ExtField ext(field, unsigned(m));
    // identity block on the U coordinates
    std::fill(rows.begin(), rows.end(), 0);
    for (int i = 0; i < t; ++i) {
      rows[size_t(i) * n + offset + i] = 1;
      pivots[i] = offset + i;
    }
    gf::ExtField::Coeffs a = ext.zero();
    std::vector<gf::ExtField::Coeffs> az(t);
    do {
      // row i carries a * z^i on the F_{q^m} coordinates
      az[0] = a;
      for (int i = 1; i < t; ++i) {
        az[i] = az[i - 1];
        ext.mul_by_z_inplace(az[i]);
      }
      for (int i = 0; i < t; ++i) {
        Elem* w = rows.data() + size_t(i) * n + offset + t;
        for (int d = 0; d < m; ++d) w[d] = az[i][size_t(d)];
      }
      sink(view);
    } while (ext.next_element(a));
    offset += t;
    s -= t;
  }
  // terminal block: the single member U x {0}
  std::fill(rows.begin(), rows.end(), 0);
  for (int i = 0; i < t; ++i) {
    rows[size_t(i) * n + offset + i] = 1;
    pivots[i] = offset + i;
  }
  sink(view);
}

PartialSpread construct_partial_spread(unsigned q, int n, int t) {
  PartialSpread out;
  out.ctx = space::make_ctx(q, n);
  out.t = t;
  stream_partial_spread(q, n, t, [&](const MemberView& m) {
    std::vector<Elem> rows(m.rows, m.rows + size_t(m.t) * m.n);
    std::vector<int> pivots(m.pivots, m.pivots + m.t);
    out.members.emplace_back(out.ctx, std::move(rows), std::move(pivots));
  });
  return out;
}

StreamVerifier::StreamVerifier(VectorSpaceCtx ctx, int t, bool collect_holes)
    : ctx_(std::move(ctx)),
      t_(t),
      collect_holes_(collect_holes),
      covered_(ctx_.num_points()),
      v_ws_(ctx_.n),
      c_ws_(t) {
  if (t < 1 || t > ctx_.n) throw BadParams("verifier: need 1 <= t <= n");
}

bool StreamVerifier::add(const MemberView& m) {
  if (failed_) return false;
  const long long idx = report_.size;
  if (m.t != t_ || m.n != ctx_.n ||
      !space::is_rref(m.rows, m.t, m.n, &piv_ws_)) {
    failed_ = true;
    report_.status = VerifyStatus::kDimensionError;
    report_.member_b = idx;
    report_.message = "member " + std::to_string(idx) +
                      " is not a canonical rank-" + std::to_string(t_) +
                      " basis";
    return false;
  }
  long long clash = -1;
  space::for_each_span_point(ctx_, m.rows, t_, piv_ws_.data(), v_ws_.data(),
                             c_ws_.data(), [&](long long p) {
                               if (clash < 0 && !covered_.insert(p)) clash = p;
                             });
  if (clash >= 0) {
    failed_ = true;
    report_.status = VerifyStatus::kOverlapError;
    report_.member_b = idx;
    report_.point = clash;
    report_.message = "member " + std::to_string(idx) +
                      " shares point " + std::to_string(clash) +
                      " with an earlier member";
    return false;
  }
  ++report_.size;
  return true;
}

bool StreamVerifier::add(const Subspace& s) {
  if (!same_ctx(s.ctx(), ctx_)) throw CtxMismatch("member from a different space");
  return add(MemberView{s.rows().data(), s.pivots().data(), s.dim(), s.n()});
}

VerifyReport StreamVerifier::finalize() {
  if (!failed_) {
    report_.holes = ctx_.num_points() - report_.size * ctx_.theta(t_);
    if (collect_holes_) {
      report_.hole_points.reserve(size_t(report_.holes));
      for (long long p = 0; p < ctx_.num_points(); ++p)
        if (!covered_.test(p)) report_.hole_points.push_back(p);
    }
  }
  return report_;
}

VerifyReport verify_partial_spread(const PartialSpread& spread) {
  StreamVerifier ver(spread.ctx, spread.t, /*collect_holes=*/true);
  for (const Subspace& s : spread.members)
    if (!ver.add(s)) break;
  VerifyReport rep = ver.finalize();
  if (rep.status == VerifyStatus::kOverlapError) {
    // identify the first owner of the shared point for the witness pair
    for (long long i = 0; i < rep.member_b; ++i) {
      auto pts = space::points(spread.members[size_t(i)]);
      if (std::binary_search(pts.begin(), pts.end(), rep.point)) {
        rep.member_a = i;
        rep.message = "members " + std::to_string(i) + " and " +
                      std::to_string(rep.member_b) + " share point " +
                      std::to_string(rep.point);
        break;
      }
    }
  }
  return rep;
}

VerifyReport construct_and_verify(unsigned q, int n, int t) {
  StreamVerifier ver(space::make_ctx(q, n), t);
  stream_partial_spread(q, n, t, [&](const MemberView& m) { ver.add(m); });
  return ver.finalize();
}

int min_subspace_distance(std::span<const Subspace> code) {
  if (code.size() < 2)
    throw TooFewMembers("subspace distance needs at least two members");
  for (size_t i = 1; i < code.size(); ++i)
    if (!same_ctx(code[i].ctx(), code[0].ctx()))
      throw CtxMismatch("code members live in different ambient spaces");
  int best = 2 * code[0].ctx().n + 1;
  for (size_t i = 0; i < code.size(); ++i)
    for (size_t j = i + 1; j < code.size(); ++j) {
      int d = code[i].dim() + code[j].dim() -
              2 * space::intersect_dim(code[i], code[j]);
      best = std::min(best, d);
    }
  return best;
}

}  // namespace pspread::construct
