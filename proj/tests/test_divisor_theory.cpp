#include <doctest.h>

#include <random>
#include <set>

#include "bngraph/rank.hpp"
#include "graphs.hpp"

using namespace bngraph;
using namespace bngraph::testutil;

namespace {

IVec iv(std::initializer_list<std::int64_t> vals) {
  IVec v((Eigen::Index)vals.size());
  Eigen::Index i = 0;
  for (auto x : vals) v[i++] = x;
  return v;
}

QVec qv(std::initializer_list<Rat> vals) {
  QVec v((Eigen::Index)vals.size());
  Eigen::Index i = 0;
  for (auto x : vals) v[i++] = x;
  return v;
}

IVec random_divisor(std::mt19937& rng, int n, int span = 4) {
  std::uniform_int_distribution<std::int64_t> d(-span, span);
  IVec v(n);
  for (int i = 0; i < n; ++i) v[i] = d(rng);
  return v;
}

}  // namespace

TEST_CASE("deg_plus") {
  CHECK(deg_plus(iv({-1, 0, 1})) == 1);
  CHECK(deg_plus(IVec(IVec::Zero(4))) == 0);
  CHECK(deg_plus(qv({Rat(3, 2), Rat(-1, 2), Rat(-2)})) == Rat(3, 2));
  // deg+ >= max(0, deg), and 1-Lipschitz in l1
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    const QVec p = random_point(rng, 4);
    const QVec q = random_point(rng, 4);
    CHECK(deg_plus(p) >= max(Rat(0), degree(p)));
    CHECK(abs(deg_plus(p) - deg_plus(q)) <= l1_norm(QVec(p - q)));
  }
}

TEST_CASE("dhar reduction: worked instances") {
  const Multigraph k3 = complete(3);
  const auto r1 = dhar_reduce(k3, iv({2, -1, -1}), 1);
  CHECK(r1.reduced == IVec::Zero(3));
  CHECK(IVec(laplacian(k3) * r1.firings) == iv({2, -1, -1}));

  const auto r2 = dhar_reduce(k3, IVec::Zero(3), 0);
  CHECK(r2.reduced == IVec::Zero(3));
  CHECK(IVec(laplacian(k3) * r2.firings) == IVec::Zero(3));

  const Multigraph b4 = banana(4);
  const auto r3 = dhar_reduce(b4, iv({5, -2}), 1);
  CHECK(r3.reduced == iv({1, 2}));
  CHECK(IVec(laplacian(b4) * r3.firings) == IVec(iv({5, -2}) - iv({1, 2})));
}

TEST_CASE("dhar reduction: idempotence and the firing identity") {
  std::mt19937 rng(17);
  for (const Multigraph& g : {complete(3), complete(4), banana(3), banana(5)}) {
    const IMat lap = laplacian(g);
    for (int t = 0; t < 60; ++t) {
      const IVec d = random_divisor(rng, g.n(), 6);
      const int q = (int)(rng() % g.n());
      const auto res = dhar_reduce(g, d, q);
      CHECK(IVec(lap * res.firings) == IVec(d - res.reduced));
      // q-reduced: non-negative off q, and reducing again changes nothing
      for (int v = 0; v < g.n(); ++v)
        if (v != q) CHECK(res.reduced[v] >= 0);
      const auto again = dhar_reduce(g, res.reduced, q);
      CHECK(again.reduced == res.reduced);
      CHECK(again.firings == IVec::Zero(g.n()));
    }
  }
}

TEST_CASE("linear equivalence") {
  const Multigraph k3 = complete(3);
  CHECK(is_equivalent(k3, iv({2, -1, -1}), IVec::Zero(3)));
  CHECK(!is_equivalent(k3, iv({1, -1, 0}), IVec::Zero(3)));

  std::mt19937 rng(23);
  const IMat lap = laplacian(k3);
  for (int t = 0; t < 40; ++t) {
    const IVec a = random_divisor(rng, 3);
    const IVec b = random_divisor(rng, 3);
    const IVec c = random_divisor(rng, 3);
    CHECK(is_equivalent(k3, a, a));                      // reflexive
    CHECK(is_equivalent(k3, a, b) == is_equivalent(k3, b, a));  // symmetric
    if (is_equivalent(k3, a, b) && is_equivalent(k3, b, c))
      CHECK(is_equivalent(k3, a, c));  // transitive
    // shifting by a lattice vector never changes the class
    const IVec shifted = a + IVec(lap * random_divisor(rng, 3, 2));
    CHECK(is_equivalent(k3, a, shifted));
  }
}

TEST_CASE("class enumeration counts match the tree number") {
  const Multigraph k3 = complete(3);
  const auto cls = enumerate_classes(k3, 0, 0);
  REQUIRE(cls.size() == 3);
  const std::set<IVec, IVecLess> want{iv({0, 0, 0}), iv({-1, 1, 0}), iv({-1, 0, 1})};
  const std::set<IVec, IVecLess> got(cls.begin(), cls.end());
  CHECK(got == want);

  CHECK(enumerate_classes(banana(4), 3, 1).size() == 4);
  CHECK(enumerate_classes(complete(4), 2, 0).size() == 16);

  for (const Multigraph& g : {complete(3), complete(4), banana(4)}) {
    const auto tree = (std::size_t)g.tree_count();
    for (std::int64_t d : {std::int64_t(0), g.genus() - 1, 2 * g.genus() - 2}) {
      for (int q = 0; q < g.n(); ++q)
        CHECK(enumerate_classes(g, d, q).size() == tree);
    }
  }

  // every representative is q-reduced and classes are pairwise inequivalent
  for (const IVec& rep : enumerate_classes(complete(4), 2, 0))
    CHECK(dhar_reduce(complete(4), rep, 0).reduced == rep);
}

TEST_CASE("definitional rank on worked instances") {
  const Multigraph k3 = complete(3);
  CHECK(rank_definitional(k3, IVec::Zero(3)) == 0);
  CHECK(rank_definitional(k3, iv({-2, 1, 0})) == -1);  // negative degree
  CHECK(rank_definitional(k3, iv({1, -1, 0})) == -1);  // non-special

  const Multigraph k4 = complete(4);
  CHECK(rank_definitional(k4, iv({1, 1, 1, 1})) == 2);  // canonical: g - 1
}

TEST_CASE("rank_bn equals the definitional oracle on every small class") {
  for (const Multigraph& g : {complete(3), complete(4), banana(2), banana(3),
                              banana(4), banana(5)}) {
    const NonSpecialSet ns = nonspecial_set(g, 0);
    for (std::int64_t d = -1; d <= 2 * g.genus() - 2; ++d) {
      for (const IVec& rep : enumerate_classes(g, d, 0))
        CHECK(rank_bn(g, rep, ns) == rank_definitional(g, rep));
    }
  }
}

TEST_CASE("rank_bn worked instances") {
  const Multigraph k3 = complete(3);
  const NonSpecialSet ns3 = nonspecial_set(k3, 0);
  CHECK(rank_bn(k3, IVec::Zero(3), ns3) == 0);
  CHECK(rank_bn(k3, iv({1, -1, 0}), ns3) == -1);  // itself non-special

  const Multigraph k4 = complete(4);
  const NonSpecialSet ns4 = nonspecial_set(k4, 0);
  CHECK(rank_bn(k4, iv({1, 1, 1, 1}), ns4) == 2);
}

TEST_CASE("recursion-based ranks agree with the non-special route") {
  for (const Multigraph& g : {complete(3), complete(4), banana(4)}) {
    const NonSpecialSet ns = nonspecial_set(g, 0);
    for (std::int64_t d : {std::int64_t(0), g.genus() - 1, 2 * g.genus() - 2}) {
      for (const auto& [rep, rank] : class_ranks(g, d, 0))
        CHECK(rank == rank_bn(g, rep, ns));
    }
  }
}

TEST_CASE("rank is a class invariant") {
  std::mt19937 rng(59);
  for (const Multigraph& g : {complete(3), complete(4), banana(4)}) {
    const NonSpecialSet ns = nonspecial_set(g, 0);
    const IMat lap = laplacian(g);
    for (int t = 0; t < 25; ++t) {
      const IVec d = random_divisor(rng, g.n(), 3);
      const IVec shifted = d + IVec(lap * random_divisor(rng, g.n(), 2));
      CHECK(rank_bn(g, d, ns) == rank_bn(g, shifted, ns));
    }
  }
}

TEST_CASE("rank degree laws") {
  for (const Multigraph& g : {complete(3), complete(4), banana(3)}) {
    const NonSpecialSet ns = nonspecial_set(g, 0);
    for (std::int64_t d = 0; d <= 2 * g.genus(); ++d) {
      for (const IVec& rep : enumerate_classes(g, d, 0)) {
        const std::int64_t r = rank_bn(g, rep, ns);
        CHECK(r <= d);
        if (d > 2 * g.genus() - 2) CHECK(r == d - g.genus());
      }
    }
  }
}

TEST_CASE("rational rank: worked instances and laws") {
  const Multigraph k3 = complete(3);
  const NonSpecialSet ns = nonspecial_set(k3, 0);
  CHECK(rank_r(k3, to_rational(IVec::Zero(3)), ns) == Rat(0));
  CHECK(rank_r(k3, qv({Rat(1, 2), Rat(-1, 2), Rat(0)}), ns) == Rat(-1, 2));

  std::mt19937 rng(31);
  for (int t = 0; t < 40; ++t) {
    const QVec d = random_point(rng, 3);
    // integer specialization agrees with rank_bn
    IVec di(3);
    for (int i = 0; i < 3; ++i) di[i] = d[i].floor();
    CHECK(rank_r(k3, to_rational(di), ns) == Rat(rank_bn(k3, di, ns)));

    // monotone under adding effective
    QVec plus = d;
    plus[(int)(rng() % 3)] += Rat(1, 3);
    CHECK(rank_r(k3, plus, ns) >= rank_r(k3, d, ns));

    // 1-Lipschitz in l1
    const QVec e = random_point(rng, 3, 6, 1);
    QVec moved = d;
    Rat dist = 0;
    for (int i = 0; i < 3; ++i) {
      moved[i] += e[i];
      dist += abs(e[i]);
    }
    CHECK(abs(rank_r(k3, moved, ns) - rank_r(k3, d, ns)) <= dist);
  }
}

TEST_CASE("modified rank") {
  const Multigraph k3 = complete(3);
  const NonSpecialSet ns = nonspecial_set(k3, 0);
  CHECK(modified_rank(k3, qv({Rat(1), Rat(1), Rat(1)}), ns) == Rat(0));
  CHECK(modified_rank(k3, to_rational(IVec::Zero(3)), ns) == Rat(-1));

  std::mt19937 rng(37);
  for (int t = 0; t < 25; ++t) {
    const QVec d = random_point(rng, 3);
    QVec shifted = d;
    for (int i = 0; i < 3; ++i) shifted[i] += Rat(1);
    CHECK(modified_rank(k3, shifted, ns) == rank_r(k3, d, ns));
  }
}

TEST_CASE("sigma region predicate") {
  const Multigraph k3 = complete(3);
  const NonSpecialSet ns = nonspecial_set(k3, 0);
  CHECK(sigma_contains(k3, qv({Rat(2), Rat(1), Rat(0)}), ns));
  CHECK(!sigma_contains(k3, qv({Rat(-5), Rat(-5), Rat(-5)}), ns));

  std::mt19937 rng(41);
  for (int t = 0; t < 30; ++t) {
    const QVec d = random_point(rng, 3);
    if (!sigma_contains(k3, d, ns)) continue;
    QVec bigger = d;
    bigger[(int)(rng() % 3)] += Rat(rng() % 3);
    CHECK(sigma_contains(k3, bigger, ns));  // preserved by adding effective
  }
}

TEST_CASE("Riemann-Roch defects vanish: worked instances") {
  const Multigraph k3 = complete(3);
  const NonSpecialSet ns3 = nonspecial_set(k3, 0);
  CHECK(rr_defect(k3, to_rational(IVec::Zero(3)), ns3) == Rat(0));
  CHECK(rr_defect(k3, qv({Rat(7, 3), Rat(-1, 3), Rat(0)}), ns3) == Rat(0));

  const Multigraph k4 = complete(4);
  const NonSpecialSet ns4 = nonspecial_set(k4, 0);
  CHECK(rr_defect(k4, to_rational(iv({1, 1, 1, 1})), ns4) == Rat(0));
  CHECK(rr_defect_v1(k4, to_rational(iv({1, 1, 1, 1})), ns4) == Rat(0));
}

TEST_CASE("rounding a rational divisor") {
  const Multigraph k3 = complete(3);
  CHECK(round_divisor(k3, qv({Rat(1, 2), Rat(1, 2), Rat(-1)}), 0) == iv({0, 1, -1}));

  // integers are fixed points
  std::mt19937 rng(43);
  for (int t = 0; t < 20; ++t) {
    const IVec d = random_divisor(rng, 3);
    CHECK(round_divisor(k3, to_rational(d), (int)(rng() % 3)) == d);
  }

  CHECK_THROWS_AS(round_divisor(k3, qv({Rat(1, 3), Rat(1, 3), Rat(0)}), 0),
                  NonIntegerDegree);

  // degree preserved exactly for rational entries of integer total degree
  for (int t = 0; t < 30; ++t) {
    QVec d(3);
    std::int64_t num0 = (std::int64_t)(rng() % 25) - 12;
    std::int64_t num1 = (std::int64_t)(rng() % 25) - 12;
    std::int64_t num2 = -(num0 + num1) % 12;
    d << Rat(num0, 12), Rat(num1, 12), Rat(num2, 12) + Rat((std::int64_t)(rng() % 3));
    if (!degree(d).is_integer()) continue;
    const IVec r = round_divisor(k3, d, 1);
    CHECK(Rat(degree(r)) == degree(d));
  }
}

TEST_CASE("gonality") {
  const NonSpecialSet ns3 = nonspecial_set(complete(3), 0);
  CHECK(gonality(complete(3), ns3) == 2);
  const NonSpecialSet nsb = nonspecial_set(banana(2), 0);
  CHECK(gonality(banana(2), nsb) == 2);

  for (const Multigraph& g : {complete(3), complete(4), banana(2), banana(4)}) {
    const NonSpecialSet ns = nonspecial_set(g, 0);
    CHECK(gonality(g, ns) <= g.genus() + 1);
  }
}
