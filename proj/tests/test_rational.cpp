#include "gls/rational.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using oracle::q;

using namespace gls;

TEST(Rational, ParsesIntegersAndFractions)
{
	EXPECT_EQ(parse_scalar("3"), Scalar(3));
	EXPECT_EQ(parse_scalar("-3"), Scalar(-3));
	EXPECT_EQ(parse_scalar("6/4"), q(3, 2));
	EXPECT_EQ(parse_scalar("-6/4"), q(-3, 2));
	EXPECT_EQ(parse_scalar("0/7"), Scalar(0));
}

TEST(Rational, RejectsMalformed)
{
	for (const char* bad : {"", "1/0", "1/", "/2", "1.5", "1/-2", "abc", "1//2", "--1", " 1"})
		EXPECT_THROW(parse_scalar(bad), std::invalid_argument) << bad;
}

TEST(Rational, CanonicalText)
{
	EXPECT_EQ(to_string(q(4, 6)), "2/3");
	EXPECT_EQ(to_string(q(-4, 2)), "-2");
	EXPECT_EQ(to_string(q(0, 5)), "0");
}

TEST(Rational, TextRoundTripRandom)
{
	std::mt19937 rng(11);
	std::uniform_int_distribution<long> num(-100000, 100000), den(1, 999);
	for (int i = 0; i < 500; ++i) {
		const Scalar s = q(num(rng), den(rng));
		EXPECT_EQ(parse_scalar(to_string(s)), s);
	}
}

TEST(Rational, VectorHelpers)
{
	Vector v = unit_vector(3, 1);
	EXPECT_FALSE(is_zero(v));
	EXPECT_TRUE(is_zero(zero_vector(4)));
	axpy(Scalar(-1), unit_vector(3, 1), v);
	EXPECT_TRUE(is_zero(v));
}
