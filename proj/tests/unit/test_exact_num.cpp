#include <gtest/gtest.h>

#include <cmath>

#include "painleve/errors.hpp"
#include "painleve/exact_num.hpp"

using painleve::ExactNum;

TEST(ExactNum, RationalCanonicalForm) {
  ExactNum x(mpq_class(6, -4));
  EXPECT_EQ(x.to_string(), "-3/2");
  EXPECT_TRUE(x.is_rational());
}

TEST(ExactNum, Sqrt2Product) {
  // (1/sqrt2)^2 = 1/2: sqrt2/2 * sqrt2/2 = 2/4.
  ExactNum h = ExactNum::sqrt2() / ExactNum(2);
  EXPECT_EQ(h * h, ExactNum::rational(1, 2));
  EXPECT_EQ(ExactNum::sqrt2().inverse(), h);
}

TEST(ExactNum, InverseOfMixed) {
  // (1 + sqrt2)(-1 + sqrt2) = 1
  ExactNum a(mpq_class(1), mpq_class(1));
  EXPECT_EQ(a.inverse(), ExactNum(mpq_class(-1), mpq_class(1)));
  EXPECT_EQ(a * a.inverse(), ExactNum(1));
}

TEST(ExactNum, DivisionByZeroThrows) { EXPECT_THROW(ExactNum(0).inverse(), painleve::DivisionByZero); }

TEST(ExactNum, Printing) {
  EXPECT_EQ(ExactNum::sqrt2().to_string(), "sqrt2");
  EXPECT_EQ((-ExactNum::sqrt2()).to_string(), "-sqrt2");
  EXPECT_EQ(ExactNum(mpq_class(1), mpq_class(-1, 2)).to_string(), "(1 - 1/2*sqrt2)");
}

TEST(ExactNum, ModularImageRespectsSqrt2) {
  const std::uint64_t p = (std::uint64_t{1} << 61) - 1;
  std::uint64_t r = 1;
  {
    unsigned __int128 base = 2;
    for (std::uint64_t e = (p + 1) / 4; e != 0; e >>= 1) {
      if (e & 1) r = static_cast<std::uint64_t>(r * base % p);
      base = base * base % p;
    }
  }
  ASSERT_EQ(static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * r % p), 2U);
  auto v = ExactNum::sqrt2().mod_prime(p, r);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, r);
  EXPECT_DOUBLE_EQ(ExactNum::sqrt2().to_double(), std::sqrt(2.0));
}
