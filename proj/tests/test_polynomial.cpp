#include <random>

#include "doctest.h"
#include "kbraid/polynomial.hpp"

using namespace kbraid;

namespace {

Polynomial from_roots(const std::vector<Rational>& roots) {
  Polynomial p = Polynomial::constant(1);
  for (const Rational& r : roots) p = p * Polynomial::linear(-r, 1);
  return p;
}

}  // namespace

TEST_CASE("arithmetic and evaluation") {
  const Polynomial p({1, -3, 2});  // (1 - t)(1 - 2t)
  CHECK(p.degree() == 2);
  CHECK(p(Rational(1, 2)) == 0);
  CHECK(p(Rational(3)) == 10);
  CHECK(p.derivative() == Polynomial({-3, 4}));
  CHECK((p - p).is_zero());
  CHECK((p * Polynomial::constant(0)).degree() == -1);
  CHECK(p.to_string() == "2t^2 - 3t + 1");
  const auto [q, r] = Polynomial::divmod(p, Polynomial::linear(-1, 1));
  CHECK(q == Polynomial({-1, 2}));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(Polynomial::divmod(p, Polynomial()), std::domain_error);
}

TEST_CASE("gcd and square-free part") {
  const Polynomial a = from_roots({1, 1, Rational(1, 3)});
  const Polynomial b = from_roots({1, 2});
  CHECK(gcd(a, b) == Polynomial::linear(-1, 1));
  CHECK(square_free_part(a) == from_roots({1, Rational(1, 3)}));
  CHECK(gcd(Polynomial(), Polynomial()).is_zero());
}

TEST_CASE("Sturm counts match known roots") {
  const Polynomial p = from_roots({Rational(-1, 2), Rational(1, 7), Rational(2, 7), 3});
  const SturmSequence s(p);
  CHECK(s.count_roots(-10, 10) == 4);
  CHECK(s.count_roots(0, 1) == 2);
  CHECK(s.count_roots(Rational(1, 5), Rational(5, 2)) == 1);
  // t^2 + 1 has no real roots
  CHECK(SturmSequence(Polynomial({1, 0, 1})).count_roots(-100, 100) == 0);
}

TEST_CASE("isolation separates close and rational roots") {
  const std::vector<Rational> roots{Rational(1, 2), Rational(1, 1000), Rational(1001, 1000000), Rational(7, 8)};
  const Polynomial p = from_roots(roots);
  const auto ivs = isolate_roots(square_free_part(p), Rational(0), Rational(1));
  REQUIRE(ivs.size() == 4);
  std::vector<Rational> sorted = roots;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(ivs[i].lo < sorted[i]);
    CHECK(sorted[i] < ivs[i].hi);
    if (i > 0) CHECK(ivs[i - 1].hi <= ivs[i].lo);
  }
}

TEST_CASE("isolation of irrational roots and refinement") {
  const Polynomial p({-2, 0, 1});  // roots +-sqrt 2
  auto ivs = isolate_roots(p, Rational(0), Rational(2));
  REQUIRE(ivs.size() == 1);
  IsolatingInterval iv = ivs.front();
  for (int i = 0; i < 40; ++i) refine(p, iv);
  CHECK(iv.width() < Rational(1, 1L << 30));
  CHECK(iv.lo.get_d() == doctest::Approx(std::sqrt(2.0)));
  CHECK(vanishes_at_root(Polynomial({-4, 0, 2}), p, iv));
  CHECK_FALSE(vanishes_at_root(Polynomial({-3, 0, 1}), p, iv));
}

TEST_CASE("random root sets are recovered") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> roots;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) roots.emplace_back(static_cast<long>(rng() % 199) + 1, 200);
    const Polynomial p = from_roots(roots);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    const auto ivs = isolate_roots(square_free_part(p), Rational(0), Rational(1));
    REQUIRE(ivs.size() == roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK(ivs[i].lo < roots[i]);
      CHECK(roots[i] < ivs[i].hi);
    }
  }
}
