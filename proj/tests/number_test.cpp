#include <gtest/gtest.h>

#include <cstdint>
#include <random>

#include "ldc/number.hpp"

using ldc::CanonicalForm;
using ldc::errc;
using ldc::Natural;
using ldc::Rational;

namespace {

Rational<Natural> q(std::uint64_t n, std::uint64_t d = 1) { return Rational<Natural>(Natural(n), Natural(d)); }

template <class Fn>
errc code_of(Fn fn) {
  try {
    fn();
  } catch (const ldc::error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected ldc::error";
  return errc::invalid_argument;
}

Rational<Natural> reconstruct(const CanonicalForm<Natural>& c, const Natural& b) {
  Rational<Natural> x(c.r, c.s);
  const Natural scale = ldc::detail::ipow(b, static_cast<std::uint64_t>(c.k < 0 ? -c.k : c.k));
  return c.k < 0 ? x / Rational<Natural>(scale) : x * Rational<Natural>(scale);
}

}  // namespace

TEST(Factorize, SmallValues) {
  EXPECT_EQ(ldc::factorize(Natural(10)), (ldc::Factorization<Natural>{{2, 1}, {5, 1}}));
  EXPECT_EQ(ldc::factorize(Natural(12)), (ldc::Factorization<Natural>{{2, 2}, {3, 1}}));
  EXPECT_TRUE(ldc::factorize(Natural(1)).empty());
  EXPECT_EQ(code_of([] { ldc::factorize(Natural(0)); }), errc::invalid_argument);
}

TEST(Factorize, ProductRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t n = dist(rng);
    std::uint64_t product = 1;
    std::uint64_t prev = 1;
    for (const auto& [p, e] : ldc::factorize(n)) {
      EXPECT_GT(p, prev);
      prev = p;
      for (unsigned i = 0; i < e; ++i) product *= p;
    }
    EXPECT_EQ(product, n);
  }
}

TEST(Squarefree, Examples) {
  EXPECT_TRUE(ldc::is_squarefree(Natural(10)));
  EXPECT_FALSE(ldc::is_squarefree(Natural(12)));
  EXPECT_TRUE(ldc::is_squarefree(Natural(30)));
  EXPECT_TRUE(ldc::is_squarefree(std::uint64_t{1}));
  EXPECT_FALSE(ldc::is_squarefree(std::uint64_t{49}));
}

TEST(Rational, ReducedAtConstruction) {
  const auto x = q(50, 8);
  EXPECT_EQ(x.num(), 25);
  EXPECT_EQ(x.den(), 4);
  EXPECT_EQ(x, q(25, 4));
  EXPECT_LT(q(1, 3), q(1, 2));
  EXPECT_EQ(q(3, 2) * q(2, 3), q(1));
}

TEST(Rational, Parse) {
  EXPECT_EQ(ldc::parse_rational("2"), q(2));
  EXPECT_EQ(ldc::parse_rational("6/4"), q(3, 2));
  EXPECT_EQ(ldc::parse_rational("123456789012345678901234567890").num(),
            Natural("123456789012345678901234567890"));
  for (const char* bad : {"", "0", "1/0", "-2", "2.5", " 2", "2/", "/3", "a/b", "1/2/3"}) {
    EXPECT_EQ(code_of([&] { ldc::parse_rational(bad); }), errc::invalid_argument) << bad;
  }
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(ldc::canonicalize(q(2), Natural(10)), (CanonicalForm<Natural>{0, 2, 1}));
  // 9 = (3/2) * 6
  EXPECT_EQ(ldc::canonicalize(q(9), Natural(6)), (CanonicalForm<Natural>{1, 3, 2}));
  // 1/2 = 5 * 10^-1
  EXPECT_EQ(ldc::canonicalize(q(1, 2), Natural(10)), (CanonicalForm<Natural>{-1, 5, 1}));
  EXPECT_EQ(code_of([] { ldc::canonicalize(q(100), Natural(10)); }), errc::integral_power_of_base);
  EXPECT_EQ(code_of([] { ldc::canonicalize(q(1), Natural(10)); }), errc::integral_power_of_base);
  EXPECT_EQ(code_of([] { ldc::canonicalize(q(1, 1000), Natural(10)); }), errc::integral_power_of_base);
}

TEST(Canonicalize, FixedWidthAgreesWithNatural) {
  for (std::uint64_t b = 3; b <= 40; ++b) {
    for (std::uint64_t a = 2; a <= 200; ++a) {
      const bool is_power = [&] {
        std::uint64_t x = 1;
        while (x < a) x *= b;
        return x == a;
      }();
      if (is_power) continue;
      const auto narrow = ldc::canonicalize(Rational<std::uint64_t>(a), b);
      const auto wide = ldc::canonicalize(q(a), Natural(b));
      EXPECT_EQ(narrow.k, wide.k);
      EXPECT_EQ(Natural(narrow.r), wide.r);
      EXPECT_EQ(Natural(narrow.s), wide.s);
    }
  }
}

TEST(Canonicalize, RoundTripAndUniqueness) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> num(1, 100000);
  std::uniform_int_distribution<std::uint64_t> base(3, 40);
  int checked = 0;
  while (checked < 500) {
    const auto a = q(num(rng), num(rng));
    const Natural b(base(rng));
    CanonicalForm<Natural> c;
    try {
      c = ldc::canonicalize(a, b);
    } catch (const ldc::error&) {
      continue;
    }
    ++checked;
    EXPECT_EQ(boost::multiprecision::gcd(c.r, c.s), 1);
    EXPECT_GT(c.r, c.s);
    EXPECT_LT(c.r, c.s * b);
    EXPECT_EQ(reconstruct(c, b), a);
    // any other k' gives a ratio outside (1, b)
    for (std::int64_t dk = -3; dk <= 3; ++dk) {
      if (dk == 0) continue;
      const CanonicalForm<Natural> shifted{c.k + dk, c.r, c.s};
      const Rational<Natural> ratio = a / reconstruct(CanonicalForm<Natural>{shifted.k, 1, 1}, b);
      EXPECT_FALSE(ratio > Rational<Natural>(1) && ratio < Rational<Natural>(b));
    }
  }
}

TEST(RationalPower, Examples) {
  EXPECT_TRUE(ldc::is_rational_power_of(q(4), Natural(8)));
  EXPECT_FALSE(ldc::is_rational_power_of(q(2), Natural(10)));
  EXPECT_TRUE(ldc::is_rational_power_of(q(1, 2), Natural(4)));
  EXPECT_TRUE(ldc::is_rational_power_of(q(1), Natural(7)));
  EXPECT_TRUE(ldc::is_rational_power_of(q(100), Natural(1000)));
  EXPECT_FALSE(ldc::is_rational_power_of(q(20), Natural(10)));
  EXPECT_FALSE(ldc::is_rational_power_of(q(2, 5), Natural(10)));
  EXPECT_TRUE(ldc::is_rational_power_of(q(1, 1000), Natural(100)));
  EXPECT_FALSE(ldc::is_rational_power_of(q(8), Natural(12)));
  EXPECT_TRUE(ldc::is_rational_power_of(q(144), Natural(12)));
}

TEST(RationalPower, NeverForAdmissiblePairs) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> num(1, 5000);
  for (std::uint64_t b = 5; b <= 60; ++b) {
    if (!ldc::is_squarefree(b)) continue;
    for (int i = 0; i < 50; ++i) {
      const auto a = q(num(rng), num(rng));
      try {
        ldc::check_admissible(a, Natural(b));
      } catch (const ldc::error&) {
        continue;
      }
      EXPECT_FALSE(ldc::is_rational_power_of(a, Natural(b))) << a << " base " << b;
    }
    EXPECT_FALSE(ldc::is_rational_power_of(q(b * b + 1), Natural(b)));
  }
}

TEST(Admissible, Examples) {
  const auto pair = ldc::check_admissible(q(2), Natural(10));
  EXPECT_EQ(pair.canon(), (CanonicalForm<Natural>{0, 2, 1}));
  EXPECT_EQ(pair.b_factorization().size(), 2U);
  EXPECT_EQ(code_of([] { ldc::check_admissible(q(2), Natural(12)); }), errc::base_not_squarefree);
  EXPECT_EQ(code_of([] { ldc::check_admissible(q(10), Natural(10)); }), errc::integral_power_of_base);
  EXPECT_EQ(code_of([] { ldc::check_admissible(q(2), Natural(3)); }), errc::base_too_small);
  EXPECT_EQ(code_of([] { ldc::check_admissible(q(2), Natural(4)); }), errc::base_too_small);
}
