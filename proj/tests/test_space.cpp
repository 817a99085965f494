#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "pspread/space.hpp"

using namespace pspread;
using space::Elem;
using space::Subspace;
using space::Vec;

TEST_CASE("rref canonicalization") {
  auto ctx = space::make_ctx(2, 3);
  std::vector<Vec> vs = {{1, 1, 0}, {0, 1, 1}};
  Subspace s = space::rref_canonical(ctx, vs);
  CHECK(s.dim() == 2);
  CHECK(s.rows() == std::vector<Elem>{1, 0, 1, 0, 1, 1});
  CHECK(s.pivots() == std::vector<int>{0, 1});

  // full-rank input reduces to the identity
  auto ctx3 = space::make_ctx(3, 3);
  std::vector<Vec> basis = {{2, 1, 0}, {0, 1, 2}, {1, 0, 1}};
  Subspace full = space::rref_canonical(ctx3, basis);
  CHECK(full.dim() == 3);
  CHECK(full.rows() == std::vector<Elem>{1, 0, 0, 0, 1, 0, 0, 0, 1});

  // scalar multiples collapse to one canonical representative
  std::vector<Vec> mults = {{0, 2, 1}, {0, 1, 2}};
  Subspace line = space::rref_canonical(ctx3, mults);
  CHECK(line.dim() == 1);
  CHECK(line.rows() == std::vector<Elem>{0, 1, 2});

  std::vector<Vec> zeros = {{0, 0, 0}, {0, 0, 0}};
  CHECK_THROWS_AS(space::rref_canonical(ctx3, zeros), DimensionZero);
}

TEST_CASE("canonical form is invariant under change of basis") {
  std::mt19937_64 rng(12345);
  for (unsigned q : {2u, 3u, 4u}) {
    auto ctx = space::make_ctx(q, 5);
    for (int trial = 0; trial < 334; ++trial) {
      int d = 1 + int(rng() % 4);
      std::vector<Vec> vs(static_cast<size_t>(d), Vec(5));
      for (auto& v : vs)
        for (auto& x : v) x = Elem(rng() % q);
      Subspace a = [&]() -> Subspace {
        try {
          return space::rref_canonical(ctx, vs);
        } catch (const DimensionZero&) {
          vs[0][0] = 1;
          return space::rref_canonical(ctx, vs);
        }
      }();
      // random invertible combination of the basis rows
      const int ad = a.dim();
      std::vector<Vec> mixed;
      for (int attempt = 0;; ++attempt) {
        std::vector<Vec> coef(static_cast<size_t>(ad), Vec(static_cast<size_t>(ad)));
        for (auto& row : coef)
          for (auto& x : row) x = Elem(rng() % q);
        std::vector<Elem> m(static_cast<size_t>(ad) * ad);
        for (int i = 0; i < ad; ++i)
          for (int j = 0; j < ad; ++j) m[size_t(i) * ad + j] = coef[size_t(i)][size_t(j)];
        if (space::rref_in_place(*ctx.field, m.data(), ad, ad, nullptr) != ad)
          continue;
        mixed.assign(static_cast<size_t>(ad), Vec(5, 0));
        for (int i = 0; i < ad; ++i)
          for (int j = 0; j < ad; ++j)
            for (int k = 0; k < 5; ++k)
              mixed[size_t(i)][size_t(k)] = ctx.field->add(
                  mixed[size_t(i)][size_t(k)],
                  ctx.field->mul(coef[size_t(i)][size_t(j)], a.row(j)[k]));
        break;
      }
      Subspace b = space::rref_canonical(ctx, mixed);
      CHECK(a == b);
    }
  }
}

TEST_CASE("intersection dimension") {
  auto ctx = space::make_ctx(2, 4);
  std::vector<Vec> e12 = {{1, 0, 0, 0}, {0, 1, 0, 0}};
  std::vector<Vec> e34 = {{0, 0, 1, 0}, {0, 0, 0, 1}};
  Subspace a = space::rref_canonical(ctx, e12);
  Subspace b = space::rref_canonical(ctx, e34);
  CHECK(space::intersect_dim(a, b) == 0);
  CHECK(space::intersect_dim(a, a) == 2);

  auto other = space::make_ctx(3, 4);
  std::vector<Vec> w = {{1, 0, 0, 0}};
  Subspace c = space::rref_canonical(other, w);
  CHECK_THROWS_AS(space::intersect_dim(a, c), CtxMismatch);
}

TEST_CASE("any two distinct 3-subspaces of V(4,3) meet in dimension 2") {
  auto ctx = space::make_ctx(3, 4);
  std::vector<Subspace> all;
  space::SubspaceEnumerator en(ctx, 3);
  Subspace s = space::rref_canonical(ctx, std::vector<Vec>{{1, 0, 0, 0}});
  while (en.next(s)) all.push_back(s);
  CHECK(all.size() == 40);  // Gaussian binomial [4 3]_3
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      CHECK(space::intersect_dim(all[i], all[j]) == 2);
}

TEST_CASE("points of a subspace") {
  auto ctx = space::make_ctx(3, 4);
  Subspace line = space::rref_canonical(ctx, std::vector<Vec>{{0, 1, 2, 0}});
  CHECK(space::points(line).size() == 1);  // Theta_1 = 1

  Subspace plane =
      space::rref_canonical(ctx, std::vector<Vec>{{1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(space::points(plane).size() == 4);  // Theta_2(3) = 4

  auto ctx2 = space::make_ctx(2, 4);
  Subspace full = space::rref_canonical(
      ctx2, std::vector<Vec>{
                {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  auto pts = space::points(full);
  REQUIRE(pts.size() == 15);
  for (int i = 0; i < 15; ++i) CHECK(pts[size_t(i)] == i);
}

TEST_CASE("point index round trip and partition of the point set") {
  for (unsigned q : {2u, 3u, 5u}) {
    auto ctx = space::make_ctx(q, 4);
    for (long long i = 0; i < ctx.num_points(); ++i) {
      Vec v = space::point_vector(ctx, i);
      CHECK(space::point_index(ctx, v.data()) == i);
    }
    // the 1-subspaces partition [0, Theta_n)
    std::vector<int> seen(size_t(ctx.num_points()), 0);
    space::SubspaceEnumerator en(ctx, 1);
    Subspace s = space::rref_canonical(ctx, std::vector<Vec>{{1, 0, 0, 0}});
    while (en.next(s))
      for (long long p : space::points(s)) ++seen[size_t(p)];
    for (long long p = 0; p < ctx.num_points(); ++p) CHECK(seen[size_t(p)] == 1);
  }
}

TEST_CASE("gaussian binomial values") {
  CHECK(space::gaussian_binomial(4, 2, Int(2)) == 35);
  CHECK(space::gaussian_binomial(6, 3, Int(2)) == 1395);
  CHECK(space::gaussian_binomial(5, 0, Int(2)) == 1);
  CHECK(space::gaussian_binomial(7, 7, Int(3)) == 1);
}

TEST_CASE("brute-force span count matches the Gaussian binomial at (4,2,2)") {
  // independent oracle: spans of all pairs of distinct nonzero vectors
  auto ctx = space::make_ctx(2, 4);
  std::set<std::vector<Elem>> distinct;
  for (unsigned a = 1; a < 16; ++a)
    for (unsigned b = a + 1; b < 16; ++b) {
      Vec va(4), vb(4);
      for (int i = 0; i < 4; ++i) {
        va[size_t(i)] = (a >> i) & 1;
        vb[size_t(i)] = (b >> i) & 1;
      }
      try {
        Subspace s = space::rref_canonical(ctx, std::vector<Vec>{va, vb});
        if (s.dim() == 2) distinct.insert(s.rows());
      } catch (const DimensionZero&) {
      }
    }
  CHECK(distinct.size() == 35);
}

TEST_CASE("enumeration counts equal the Gaussian binomial on the full small grid") {
  for (unsigned q : {2u, 3u}) {
    for (int n = 1; n <= 6; ++n) {
      auto ctx = space::make_ctx(q, n);
      for (int d = 1; d <= n; ++d) {
        long long count = 0;
        std::set<std::vector<Elem>> uniq;
        space::SubspaceEnumerator en(ctx, d);
        Subspace s = space::rref_canonical(
            ctx, std::vector<Vec>{Vec(size_t(n), 1)});
        while (en.next(s)) {
          ++count;
          CHECK(s.dim() == d);
          uniq.insert(s.rows());
        }
        CHECK(Int(count) == space::gaussian_binomial(n, d, Int(q)));
        CHECK((long long)uniq.size() == count);  // no duplicates
      }
    }
  }
}

TEST_CASE("enumeration starts at span(e_1..e_d) and is deterministic") {
  auto ctx = space::make_ctx(3, 4);
  space::SubspaceEnumerator en(ctx, 2);
  Subspace s = space::rref_canonical(ctx, std::vector<Vec>{{1, 0, 0, 0}});
  REQUIRE(en.next(s));
  CHECK(s.rows() == std::vector<Elem>{1, 0, 0, 0, 0, 1, 0, 0});
  REQUIRE(en.next(s));
  // second subspace: first free-entry pattern incremented in the last cell
  CHECK(s.pivots() == std::vector<int>{0, 1});
}

TEST_CASE("hyperplanes: count, dimension, duality") {
  auto ctx = space::make_ctx(2, 5);
  auto hs = space::hyperplanes(ctx);
  CHECK(hs.size() == 31);
  for (const auto& h : hs) CHECK(h.dim() == 4);

  auto ctx3 = space::make_ctx(3, 3);
  auto hs3 = space::hyperplanes(ctx3);
  CHECK(hs3.size() == 13);

  // kernel property: every basis row of H is orthogonal to the functional
  for (const auto& h : hs3) {
    Vec phi = space::functional_of_hyperplane(h);
    for (int r = 0; r < h.dim(); ++r) {
      Elem acc = 0;
      for (int i = 0; i < 3; ++i)
        acc = ctx3.field->add(acc, ctx3.field->mul(h.row(r)[i], phi[size_t(i)]));
      CHECK(acc == 0);
    }
  }

  // each point lies in exactly Theta_{n-1} hyperplanes (n <= 5)
  for (unsigned q : {2u, 3u}) {
    for (int n = 2; n <= (q == 2 ? 5 : 4); ++n) {
      auto c = space::make_ctx(q, n);
      std::vector<long long> incident(size_t(c.num_points()), 0);
      space::for_each_hyperplane(c, [&](const Subspace& h) {
        Vec phi = space::functional_of_hyperplane(h);
        for (long long p = 0; p < c.num_points(); ++p) {
          Vec v = space::point_vector(c, p);
          Elem acc = 0;
          for (int i = 0; i < n; ++i)
            acc = c.field->add(acc, c.field->mul(v[size_t(i)], phi[size_t(i)]));
          if (acc == 0) ++incident[size_t(p)];
        }
      });
      for (long long p = 0; p < c.num_points(); ++p)
        CHECK(incident[size_t(p)] == c.theta(n - 1));
    }
  }
}

TEST_CASE("PointSet word operations") {
  space::PointSet a(130), b(130);
  a.set(0);
  a.set(64);
  a.set(129);
  b.set(64);
  CHECK(a.count() == 3);
  CHECK(a.intersects(b));
  b.reset(64);
  b.set(65);
  CHECK(!a.intersects(b));
  CHECK(a.insert(77));
  CHECK(!a.insert(77));
  a.or_with(b);
  CHECK(a.test(65));
  a.xor_with(b);
  CHECK(!a.test(65));
}
