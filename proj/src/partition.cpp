#include "pspread/partition.hpp"

#include <algorithm>
#include <sstream>

#include "pspread/bounds.hpp"

namespace pspread::partition {

namespace {

TypeVector type_of(const std::vector<Subspace>& members) {
  TypeVector t;
  for (const auto& m : members) ++t[m.dim()];
  return t;
}

// dot(row, phi) over F_q
space::Elem dot(const gf::Field& f, const space::Elem* row, const space::Vec& phi) {
  space::Elem acc = 0;
  for (size_t i = 0; i < phi.size(); ++i)
    if (row[i]) acc = f.add(acc, f.mul(row[i], phi[i]));
  return acc;
}

bool contained_in(const gf::Field& f, const Subspace& w, const space::Vec& phi) {
  for (int r = 0; r < w.dim(); ++r)
    if (dot(f, w.row(r), phi) != 0) return false;
  return true;
}

}  // namespace

SubspacePartition from_partial_spread(const construct::PartialSpread& spread) {
  construct::VerifyReport rep = construct::verify_partial_spread(spread);
  if (!rep.ok()) throw InvalidInput("not a valid partial spread: " + rep.message);
  SubspacePartition p;
  p.ctx = spread.ctx;
  p.members = spread.members;
  for (long long hole : rep.hole_points) {
    space::Vec v = space::point_vector(p.ctx, hole);
    int lead = 0;
    while (v[lead] == 0) ++lead;
    p.members.emplace_back(p.ctx, std::move(v), std::vector<int>{lead});
  }
  p.type = type_of(p.members);
  return p;
}

PartitionReport validate_partition(const SubspacePartition& p) {
  PartitionReport rep;
  const long long npts = p.ctx.num_points();
  std::vector<long long> owner(size_t(npts), -1);
  for (size_t mi = 0; mi < p.members.size(); ++mi) {
    if (!same_ctx(p.members[mi].ctx(), p.ctx))
      throw CtxMismatch("partition member from a different space");
    for (long long pt : space::points(p.members[mi])) {
      if (owner[size_t(pt)] >= 0) {
        rep.status = PartitionStatus::kOverlap;
        rep.member_a = owner[size_t(pt)];
        rep.member_b = (long long)mi;
        rep.point = pt;
        rep.message = "members " + std::to_string(rep.member_a) + " and " +
                      std::to_string(mi) + " share point " + std::to_string(pt);
        return rep;
      }
      owner[size_t(pt)] = (long long)mi;
    }
  }
  for (long long pt = 0; pt < npts; ++pt)
    if (owner[size_t(pt)] < 0) {
      rep.status = PartitionStatus::kCoverage;
      rep.point = pt;
      rep.message = "point " + std::to_string(pt) + " is not covered";
      return rep;
    }
  rep.type = type_of(p.members);
  return rep;
}

HyperplaneProfile profile(const SubspacePartition& p, const Subspace& hyperplane) {
  if (!same_ctx(hyperplane.ctx(), p.ctx))
    throw CtxMismatch("hyperplane from a different space");
  HyperplaneProfile hp{hyperplane, {}};
  for (const auto& [d, n_d] : p.type) hp.b[d] = 0;
  space::Vec phi = space::functional_of_hyperplane(hyperplane);
  const gf::Field& f = *p.ctx.field;
  for (const auto& w : p.members)
    if (contained_in(f, w, phi)) ++hp.b[w.dim()];
  return hp;
}

IdentityReport check_hele0(const SubspacePartition& p) {
  IdentityReport rep;
  const long long sz = p.size();
  space::for_each_hyperplane(p.ctx, [&](const Subspace& h) {
    if (!rep.ok) return;
    HyperplaneProfile hp = profile(p, h);
    long long sum = 1;
    for (const auto& [d, bd] : hp.b) sum += bd * p.ctx.pow_q(d);
    if (sum != sz) {
      rep.ok = false;
      std::ostringstream os;
      os << "hyperplane " << space::point_index(p.ctx, space::functional_of_hyperplane(h).data())
         << ": 1 + sum b_d q^d = " << sum << " but |P| = " << sz;
      rep.message = os.str();
    }
  });
  return rep;
}

IdentityReport check_hele1(const SubspacePartition& p) {
  IdentityReport rep;
  for (const auto& [d, n_d] : p.type) rep.histogram.dims.push_back(d);
  space::for_each_hyperplane(p.ctx, [&](const Subspace& h) {
    HyperplaneProfile hp = profile(p, h);
    std::vector<long long> key;
    key.reserve(rep.histogram.dims.size());
    for (int d : rep.histogram.dims) key.push_back(hp.b.at(d));
    ++rep.histogram.s[key];
  });
  long long total = 0;
  for (const auto& [key, count] : rep.histogram.s) total += count;
  if (total != p.ctx.num_points()) {
    rep.ok = false;
    rep.message = "sum of s_b is " + std::to_string(total) + ", expected Theta_n = " +
                  std::to_string(p.ctx.num_points());
    return rep;
  }
  for (size_t di = 0; di < rep.histogram.dims.size(); ++di) {
    const int d = rep.histogram.dims[di];
    long long lhs = 0;
    for (const auto& [key, count] : rep.histogram.s) lhs += key[di] * count;
    long long rhs = p.count(d) * p.ctx.theta(p.ctx.n - d);
    if (lhs != rhs) {
      rep.ok = false;
      std::ostringstream os;
      os << "sum b_" << d << " s_b = " << lhs << " but n_" << d
         << " Theta_{n-" << d << "} = " << rhs;
      rep.message = os.str();
      return rep;
    }
  }
  return rep;
}

#include <optional>

Rat average_b1(const SubspacePartition& p) {
  Int n1(p.count(1));
  return Rat(n1 * p.ctx.theta(p.ctx.n - 1), Int(p.ctx.num_points()));
}

HyperplaneProfile descent_select(const SubspacePartition& p) {
  const Rat avg = average_b1(p);
  std::optional<HyperplaneProfile> chosen;
  space::for_each_hyperplane(p.ctx, [&](const Subspace& h) {
    if (chosen) return;
    HyperplaneProfile hp = profile(p, h);
    if (Rat(hp.b1()) <= avg) chosen.emplace(std::move(hp));
  });
  if (!chosen) throw Error("no hyperplane at or below the b_1 average; bug");
  return std::move(*chosen);
}

SubspacePartition induce(const SubspacePartition& p, const Subspace& hyperplane) {
  if (!same_ctx(hyperplane.ctx(), p.ctx))
    throw CtxMismatch("hyperplane from a different space");
  if (hyperplane.dim() != p.ctx.n - 1) throw BadParams("not a hyperplane");
  const gf::Field& f = *p.ctx.field;
  const int n = p.ctx.n;
  space::Vec phi = space::functional_of_hyperplane(hyperplane);
  SubspacePartition out;
  out.ctx = VectorSpaceCtx(p.ctx.field, n - 1);
  const auto& frame = hyperplane.pivots();  // coordinates of the (n-1)-frame

  auto to_frame = [&](const space::Vec& v) {
    space::Vec w(size_t(n - 1));
    for (int i = 0; i < n - 1; ++i) w[size_t(i)] = v[size_t(frame[size_t(i)])];
    return w;
  };

  for (const auto& w : p.members) {
    std::vector<space::Elem> g(size_t(w.dim()));
    int lead = -1;
    for (int i = 0; i < w.dim(); ++i) {
      g[size_t(i)] = dot(f, w.row(i), phi);
      if (lead < 0 && g[size_t(i)] != 0) lead = i;
    }
    std::vector<space::Vec> rows;
    if (lead < 0) {
      // W is contained in H
      for (int i = 0; i < w.dim(); ++i)
        rows.push_back(to_frame(space::Vec(w.row(i), w.row(i) + n)));
    } else {
      if (w.dim() == 1) continue;  // 1-member outside H: trivial intersection
      // W cap H = kernel of the functional g on W's coordinates
      for (int i = 0; i < w.dim(); ++i) {
        if (i == lead) continue;
        space::Vec v(w.row(i), w.row(i) + n);
        space::Elem c = f.mul(g[size_t(i)], f.inv(g[size_t(lead)]));
        if (c != 0)
          for (int k = 0; k < n; ++k)
            v[size_t(k)] = f.sub(v[size_t(k)], f.mul(c, w.row(lead)[k]));
        rows.push_back(to_frame(v));
      }
    }
    out.members.push_back(space::rref_canonical(out.ctx, rows));
  }
  out.type = type_of(out.members);
  return out;
}

namespace {

struct Checker {
  std::vector<std::string>* trace;
  bool all = true;

  void note(const std::string& line) { trace->push_back(line); }
  void check(bool cond, const std::string& what) {
    trace->push_back(what + (cond ? "  [ok]" : "  [FAIL]"));
    all = all && cond;
  }
};

std::string S(const Int& v) { return v.str(); }
std::string S(const Rat& v) {
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

}  // namespace

DescentReport descent_certificate(unsigned q, int n, int t) {
  bounds::ParamSet ps = bounds::make_params(q, n, t);
  DescentReport rep;
  rep.q = q;
  rep.n = n;
  rep.t = t;
  rep.r = ps.r;
  std::ostringstream hdr;
  hdr << "parameters: q=" << q << " n=" << n << " t=" << t << " r=" << ps.r;
  rep.trace.push_back(hdr.str());

  if (ps.r == 0) {
    rep.verdict = DescentReport::Verdict::kHypothesisNotMet;
    rep.reason = "r = 0: t divides n";
    rep.trace.push_back("hypothesis r >= 1 fails (r = 0)");
    return rep;
  }
  rep.theta_r = bounds::theta(q, ps.r);
  if (Int(t) <= rep.theta_r) {
    rep.verdict = DescentReport::Verdict::kHypothesisNotMet;
    rep.reason = "t <= Theta_r (t = " + std::to_string(t) + ", Theta_r = " +
                 S(rep.theta_r) + ")";
    rep.trace.push_back("hypothesis t > Theta_r fails: t = " + std::to_string(t) +
                        " <= Theta_r = " + S(rep.theta_r));
    return rep;
  }
  if (rep.theta_r > 1000000) throw TooLarge("descent depth Theta_r is out of scale");
  const long long theta_r = rep.theta_r.convert_to<long long>();

  Checker ck{&rep.trace};
  ck.check(Int(t) > rep.theta_r,
           "hypothesis: t = " + std::to_string(t) + " > Theta_r = " + S(rep.theta_r));

  const Int Q(q);
  auto qpow = [&](int i) { return pow_int(q, unsigned(i)); };
  auto theta = [&](int i) { return bounds::theta(q, i); };
  auto delta = [&](int i) { return bounds::delta(q, i); };

  rep.ell = bounds::ell(q, n, t);
  rep.bound = rep.ell * qpow(t) + 1;
  rep.n_t = rep.ell * qpow(t) + 2;
  rep.n_1 = (rep.theta_r - 1) * qpow(t) + delta(t + 1);
  ck.note("l = " + S(rep.ell) + ", hypothetical spread size n_t = l*q^t + 2 = " +
          S(rep.n_t) + ", n_1 = (Theta_r - 1) q^t + delta_{t+1} = " + S(rep.n_1));
  ck.check(theta(n) == rep.n_t * theta(t) + rep.n_1,
           "bookkeeping: Theta_n = " + S(theta(n)) + " = n_t Theta_t + n_1 = " +
               S(rep.n_t * theta(t)) + " + " + S(rep.n_1));
  ck.check(rep.n_1 >= 0, "n_1 >= 0");

  for (long long j = 0; j < theta_r; ++j) {
    const bool terminal = (j == theta_r - 1);
    const int tj = t - int(j);  // delta/power index at this depth
    if (!terminal) {
      // Inductive step inside H_j ~ V(n-j, q), for every admissible c.
      ck.check(tj > 2, "j=" + std::to_string(j) + ": t - j = " +
                           std::to_string(tj) + " > 2 (members cannot drop to dimension 1)");
      ck.check(delta(tj) > 0 && delta(tj) < qpow(tj - 1),
               "j=" + std::to_string(j) + ": 0 < delta_{t-j} = " + S(delta(tj)) +
                   " < q^{t-j-1} = " + S(qpow(tj - 1)));
      for (Int c = 0; c <= rep.theta_r - 1 - j; ++c) {
        const Int m1 = c * qpow(tj) + delta(tj + 1);
        const Int lhs = rep.n_t + m1;
        const Int rhs = 1 + rep.ell * qpow(t) + c * qpow(tj) + Q * delta(tj);
        const std::string tag = "j=" + std::to_string(j) + " c=" + S(c);
        ck.check(lhs == rhs, tag + ": |P_j| identity " + S(lhs) + " == 1 + l q^t + c q^{t-j} + q delta_{t-j} = " + S(rhs));
        ck.check(m1 > 0, tag + ": m_{j,1} = " + S(m1) + " > 0");
        const Rat avg = Rat(m1 * theta(n - 1 - int(j)), theta(n - int(j)));
        const Rat step1 = Rat(m1, Q);
        const Int ubound = c * qpow(tj - 1) + delta(tj);
        ck.check(avg < step1, tag + ": b_avg = " + S(avg) + " < m_{j,1}/q = " + S(step1));
        ck.check(step1 < Rat(ubound), tag + ": m_{j,1}/q < c q^{t-j-1} + delta_{t-j} = " + S(ubound));
        if (c == 0) {
          // Congruence forces b >= delta_{t-j}; the average forces b < delta_{t-j}.
          ck.check(Rat(delta(tj)) > avg,
                   tag + ": branch closes, b == delta_{t-j} (mod q^{t-j-1}) forces b >= " +
                       S(delta(tj)) + " > b_avg = " + S(avg));
        } else {
          ck.check(c - 1 <= rep.theta_r - 2 - j,
                   tag + ": coefficient range shrinks, c' <= c - 1 = " + S(Int(c - 1)) +
                       " <= Theta_r - 2 - j = " + S(Int(rep.theta_r - 2 - j)));
        }
      }
    } else {
      // Terminal step: c is forced to 0 and the congruence clashes with the average.
      const Int m1 = delta(tj + 1);  // delta_{t + 2 - Theta_r}
      const std::string tag = "terminal j=" + std::to_string(j);
      ck.note(tag + ": c forced to 0, m_1 = delta_{t+2-Theta_r} = " + S(m1));
      ck.check(tj >= 2, tag + ": t - Theta_r = " + std::to_string(tj - 1) +
                            " >= 1, so the congruence modulus q^{t-Theta_r} is nontrivial");
      ck.check(delta(tj) > 0 && delta(tj) < qpow(tj - 1),
               tag + ": 0 < delta_{t+1-Theta_r} = " + S(delta(tj)) +
                   " < q^{t-Theta_r} = " + S(qpow(tj - 1)));
      const Int lhs = rep.n_t + m1;
      const Int rhs = 1 + rep.ell * qpow(t) + Q * delta(tj);
      ck.check(lhs == rhs, tag + ": |P| identity " + S(lhs) +
                               " == 1 + l q^t + q delta_{t+1-Theta_r} = " + S(rhs));
      const Rat avg = Rat(m1 * theta(n - int(j) - 1), theta(n - int(j)));
      ck.check(avg < Rat(m1, Q), tag + ": b_avg = " + S(avg) + " < m_1/q");
      ck.check(Rat(m1, Q) < Rat(delta(tj)),
               tag + ": m_1/q < delta_{t+1-Theta_r} = " + S(delta(tj)));
      // clash: the least b >= 0 with b == delta (mod q^{t-Theta_r}) is delta itself
      ck.check(Rat(delta(tj)) > avg,
               tag + ": clash, congruence forces b >= " + S(delta(tj)) +
                   " while averaging forces b <= b_avg = " + S(avg) + " < " + S(delta(tj)));
    }
  }

  rep.all_checks = ck.all;
  rep.verdict = DescentReport::Verdict::kContradiction;
  rep.trace.push_back("CONTRADICTION => mu_" + std::to_string(q) + "(" +
                      std::to_string(n) + "," + std::to_string(t) +
                      ") <= l*q^t + 1 = " + S(rep.bound));
  return rep;
}

}  // namespace pspread::partition
