#include "pspread/bounds.hpp"

#include "pspread/gf.hpp"

namespace pspread::bounds {

ParamSet make_params(unsigned q, int n, int t) {
  if (!gf::factor_prime_power(q)) throw NotAPrimePower(std::to_string(q) + " is not a prime power");
  if (t < 1 || t >= n) throw BadParams("need 1 <= t < n");
  int r = n % t;
  return ParamSet{q, n, t, r, (n - r) / t};
}

Int theta(unsigned q, int i) {
  if (i < 0) throw BadParams("theta: i must be >= 0");
  return exact_div(pow_int(q, unsigned(i)) - 1, Int(q) - 1);
}

Int delta(unsigned q, int i) {
  if (i < 1) throw BadParams("delta: i must be >= 1");
  Int num = pow_int(q, unsigned(i)) - 2 * pow_int(q, unsigned(i - 1)) + 1;
  return exact_div(num, Int(q) - 1);
}

Int ell(unsigned q, int n, int t) {
  if (t >= n) throw BadParams("ell: need t < n");
  int r = n % t;
  return exact_div(pow_int(q, unsigned(n - t)) - pow_int(q, unsigned(r)),
                   pow_int(q, unsigned(t)) - 1);
}

Int lb_construction(unsigned q, int n, int t) {
  return ell(q, n, t) * pow_int(q, unsigned(t)) + 1;
}

Int ub_drake_freeman(unsigned q, int n, int t) {
  ParamSet ps = make_params(q, n, t);
  if (ps.r == 0)
    throw NotApplicable("Drake-Freeman bound is restricted to t not dividing n");
  Int qt = pow_int(q, unsigned(t));
  Int qr = pow_int(q, unsigned(ps.r));
  Int radicand = 4 * qt * (qt - qr) + 1;
  Int s = isqrt(radicand);  // floor(sqrt(...))
  Int m = 2 * qt - 2 * qr + 1;
  // radicand - m^2 = 4 (q^t - q^r)(q^r - 1) >= 0 for r >= 1, so s >= m and
  // floor(omega) = floor((s - m)/2) regardless of whether the square root
  // is an integer.
  Int omega_floor = (s - m) / 2;
  Int main_term = exact_div(pow_int(q, unsigned(n)) - qr, qt - 1);
  return main_term - omega_floor - 1;
}

Int ub_lemma11(unsigned q, int n, int t) {
  ParamSet ps = make_params(q, n, t);
  if (ps.r < 2 || Int(t) != theta(q, ps.r))
    throw NotApplicable("bound requires r >= 2 and t = Theta_r");
  return ell(q, n, t) * pow_int(q, unsigned(t)) + q;
}

const char* source_label(Source s) {
  switch (s) {
    case Source::kAndreR0: return "ANDRE_R0";
    case Source::kBhpR1: return "BHP_R1";
    case Source::kMainThm5: return "MAIN_THM5";
    case Source::kEjsssThm3: return "EJSSS_THM3";
    case Source::kKurzThm4: return "KURZ_THM4";
    case Source::kDfThm1: return "DF_THM1";
    case Source::kLemma11: return "LEMMA11";
    case Source::kTrivialSmallN: return "TRIVIAL_SMALL_N";
  }
  return "?";
}

BoundsReport exact_or_range(unsigned q, int n, int t) {
  ParamSet ps = make_params(q, n, t);
  Int lb = lb_construction(q, n, t);
  Int theta_r = theta(q, ps.r);

  std::vector<std::pair<Source, Int>> exact_sources;
  if (n < 2 * t) exact_sources.emplace_back(Source::kTrivialSmallN, 1);
  if (ps.r == 0)
    exact_sources.emplace_back(
        Source::kAndreR0,
        exact_div(pow_int(q, unsigned(n)) - 1, pow_int(q, unsigned(t)) - 1));
  if (ps.r == 1) exact_sources.emplace_back(Source::kBhpR1, lb);
  if (Int(t) > theta_r) exact_sources.emplace_back(Source::kMainThm5, lb);
  if (q == 2 && t == 3 && ps.r == 2 && n >= 8)
    exact_sources.emplace_back(Source::kEjsssThm3,
                               exact_div(pow_int(2u, unsigned(n)) - 32, Int(7)) + 2);
  if (q == 2 && ps.r == 2 && t > 3)
    exact_sources.emplace_back(Source::kKurzThm4, lb);

  std::vector<std::pair<Source, Int>> upper_sources;
  if (ps.r >= 1)
    upper_sources.emplace_back(Source::kDfThm1, ub_drake_freeman(q, n, t));
  if (ps.r >= 2 && Int(t) == theta_r)
    upper_sources.emplace_back(Source::kLemma11, ub_lemma11(q, n, t));

  BoundsReport rep;
  rep.provenance = exact_sources;
  rep.provenance.insert(rep.provenance.end(), upper_sources.begin(),
                        upper_sources.end());
  if (!exact_sources.empty()) {
    for (const auto& [src, val] : exact_sources)
      if (val != exact_sources.front().second)
        throw Error("exactness sources disagree; formula bug");
    rep.exact = exact_sources.front().second;
    rep.lower = *rep.exact;
    rep.upper = *rep.exact;
  } else {
    rep.lower = lb;
    rep.upper = upper_sources.front().second;
    for (const auto& [src, val] : upper_sources)
      if (val < rep.upper) rep.upper = val;
  }
  if (rep.lower > rep.upper) throw Error("lower bound exceeds upper bound; formula bug");
  return rep;
}

}  // namespace pspread::bounds
