#include "doctest.h"

#include <random>

#include "askey/errors.hpp"
#include "askey/series.hpp"

using namespace askey;

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(Rat(2), 3) == Rat(24));
  CHECK(pochhammer(Rat(7, 3), 0) == Rat(1));
  CHECK(pochhammer(Rat(-2), 4) == Rat(0));
}

TEST_CASE("qpochhammer examples") {
  CHECK(qpochhammer(Rat(1, 2), Rat(1, 4), 2) == Rat(7, 16));
  CHECK(qpochhammer(Rat(3, 5), Rat(1, 3), 0) == Rat(1));
  CHECK(qpochhammer(Rat(4), Rat(1, 4), 2) == Rat(0));
  CHECK(pm_qpochhammer(Rat(2, 7), Rat(1, 3), 0) == Rat(1));
  CHECK(pm_qpochhammer(Rat(1, 2), Rat(1, 4), 1) == Rat(3, 4));
  CHECK(pm_qpochhammer(Rat(1), Rat(1, 5), 3) == Rat(0));
}

TEST_CASE("terminating series examples") {
  CHECK(hyper_f({Rat(-1), Rat(2)}, {Rat(3)}, Rat(1), 1) == Rat(1, 3));
  CHECK(hyper_f({Rat(0), Rat(5)}, {Rat(2)}, Rat(1), 0) == Rat(1));
  for (long n = 0; n < 6; ++n) {
    CHECK(hyper_f({Rat(-n), Rat(n + 3), Rat(0), Rat(7, 2)}, {Rat(2), Rat(3, 2), Rat(-9)}, Rat(1), n) == Rat(1));
  }
  // q-Chu-Vandermonde: 2phi1(q^{-n}, b; c; q, q) = (c/b; q)_n / (c; q)_n b^n
  const Rat q(1, 3), b(2, 5), c(3, 7);
  for (long n = 0; n < 6; ++n) {
    const Rat lhs = hyper_phi({pow(q, -n), b}, {c}, q, q, n);
    CHECK(lhs == qpochhammer(c / b, q, n) / qpochhammer(c, q, n) * pow(b, n));
  }
}

TEST_CASE("denominator -N with N >= n is allowed") {
  // Krawtchouk style 2F1(-2, -1; -3; 2)
  CHECK(hyper_f({Rat(-2), Rat(-1)}, {Rat(-3)}, Rat(2), 2) == Rat(-1, 3));
  // q^N in the denominator, N >= n
  const Rat q(1, 2);
  CHECK_NOTHROW(hyper_phi({pow(q, -2), Rat(3)}, {pow(q, -3)}, q, q, 2));
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(HyperSeriesSpec({Rat(-2), Rat(1)}, {Rat(1)}, Rat(1), UnitBase{}, 3), std::invalid_argument);
  CHECK_THROWS_AS(HyperSeriesSpec({Rat(2)}, {}, Rat(1), QBase{Rat(3, 2)}, 1), std::invalid_argument);
  try {
    HyperSeriesSpec({Rat(-3), Rat(1)}, {Rat(-1)}, Rat(1), UnitBase{}, 3);
    FAIL("expected DenominatorVanished");
  } catch (const DenominatorVanished& e) {
    CHECK(e.index() == 1);
  }
  CHECK_THROWS_AS(hyper_phi({Rat(4)}, {Rat(2)}, Rat(1, 2), Rat(1), 2), DenominatorVanished);
}

namespace {

Rat naive_f(const std::vector<Rat>& num, const std::vector<Rat>& den, const Rat& z, std::size_t n) {
  Rat total(0);
  for (std::size_t k = 0; k <= n; ++k) {
    Rat t = pow(z, static_cast<long>(k)) / pochhammer(Rat(1), k);
    for (const Rat& a : num) t *= pochhammer(a, k);
    bool zero_num = t.is_zero();
    if (zero_num) break;
    for (const Rat& b : den) t /= pochhammer(b, k);
    total += t;
  }
  return total;
}

Rat naive_phi(const std::vector<Rat>& num, const std::vector<Rat>& den, const Rat& q, const Rat& z,
              std::size_t n) {
  Rat total(0);
  for (std::size_t k = 0; k <= n; ++k) {
    Rat t = pow(z, static_cast<long>(k)) / qpochhammer(q, q, k);
    for (const Rat& a : num) t *= qpochhammer(a, q, k);
    if (t.is_zero()) break;
    for (const Rat& b : den) t /= qpochhammer(b, q, k);
    total += t;
  }
  return total;
}

}  // namespace

TEST_CASE("Pochhammer splitting properties") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> d(-20, 20), pos(1, 9), kk(0, 10);
  for (int i = 0; i < 100; ++i) {
    const Rat b(d(rng), pos(rng));
    const std::size_t j = kk(rng), k = kk(rng);
    CHECK(pochhammer(b, j + k) == pochhammer(b, j) * pochhammer(b + Rat(static_cast<long>(j)), k));
    const Rat q(1, pos(rng) + 1);
    CHECK(qpochhammer(b, q, j + k) == qpochhammer(b, q, j) * qpochhammer(pow(q, static_cast<long>(j)) * b, q, k));
  }
}

TEST_CASE("terminating_hyper equals naive summation on random specs") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> d(-30, 30), pos(1, 7), nn(0, 8), rr(0, 3), base(2, 5);
  int checked = 0;
  while (checked < 200) {
    const std::size_t n = nn(rng);
    const bool qcase = checked % 2 == 1;
    const Rat q(1, base(rng));
    std::vector<Rat> num, den;
    num.push_back(qcase ? pow(q, -static_cast<long>(n)) : Rat(-static_cast<long>(n)));
    for (long i = rr(rng); i > 0; --i) num.emplace_back(d(rng), pos(rng));
    for (long i = rr(rng); i > 0; --i) den.emplace_back(d(rng), pos(rng));
    const Rat z(d(rng), pos(rng));
    Rat expected, got;
    try {
      got = qcase ? hyper_phi(num, den, q, z, n) : hyper_f(num, den, z, n);
    } catch (const DenominatorVanished&) {
      continue;  // inadmissible draw
    }
    expected = qcase ? naive_phi(num, den, q, z, n) : naive_f(num, den, z, n);
    CHECK(got == expected);
    ++checked;
  }
}
