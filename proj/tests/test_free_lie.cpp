#include "gls/free_lie.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>


using namespace gls;

using oracle::lie_span_oracle;

TEST(FreeLie, TensorHelpers)
{
	EXPECT_EQ(power(3, 2), 9u);
	const Vector x = unit_vector(2, 0), y = unit_vector(2, 1);
	EXPECT_EQ(tensor_product(2, x, y), unit_vector(4, 1));
	// odd letters: [x, y] = xy + yx
	EXPECT_EQ(super_commutator(2, 1, x, 1, y), (Vector{0, 1, 1, 0}));
	EXPECT_EQ(super_commutator(2, 1, x, 1, x), (Vector{2, 0, 0, 0}));
}

TEST(FreeLie, DimensionsMatchOraclesOneGenerator)
{
	const FreeLieSuper f = free_lie_super(1, make_window(1, 5));
	const std::vector<long long> pbw = oracle::super_pbw_dims(1, 5);
	for (int p = 1; p <= 5; ++p) {
		EXPECT_EQ(static_cast<long long>(f.algebra.dim(p)), pbw[p]) << p;
		EXPECT_EQ(f.algebra.dim(p), oracle::bareiss_rank(Matrix::from_rows(power(1, p), lie_span_oracle(1, p))));
	}
	EXPECT_EQ(f.algebra.dim(1), 1u);
	EXPECT_EQ(f.algebra.dim(2), 1u);
	EXPECT_EQ(f.algebra.dim(3), 0u);
}

TEST(FreeLie, DimensionsMatchOraclesTwoGenerators)
{
	const FreeLieSuper f = free_lie_super(2, make_window(1, 5));
	const std::vector<long long> pbw = oracle::super_pbw_dims(2, 5);
	const std::vector<std::size_t> expect{0, 2, 3, 2, 3, 6};
	for (int p = 1; p <= 5; ++p) {
		const auto span = lie_span_oracle(2, p);
		EXPECT_EQ(static_cast<long long>(f.algebra.dim(p)), pbw[p]) << p;
		EXPECT_EQ(f.algebra.dim(p), oracle::bareiss_rank(Matrix::from_rows(power(2, p), span))) << p;
		EXPECT_EQ(f.algebra.dim(p), expect[p]);
		EXPECT_EQ(f.realization.at(p), Subspace::span(power(2, p), span)) << p;
	}
}

TEST(FreeLie, PbwOracleSanity)
{
	// one even-looking check: three generators, degree 2 is Sym^2 of a 3-dim odd space
	EXPECT_EQ(oracle::super_pbw_dims(3, 2)[2], 6);
	EXPECT_EQ(oracle::super_pbw_dims(2, 5), (std::vector<long long>{0, 2, 3, 2, 3, 6}));
}

TEST(FreeLie, DynkinScalesLieElements)
{
	const FreeLieSuper f = free_lie_super(2, make_window(1, 5));
	for (int p = 1; p <= 5; ++p)
		for (const auto& v : f.realization.at(p).basis_vectors())
			EXPECT_EQ(dynkin(2, p, v), Scalar(p) * v) << p;
}

TEST(FreeLie, IdentitiesAndWitnesses)
{
	const FreeLieSuper f = free_lie_super(3, make_window(1, 4));
	EXPECT_TRUE(check_super_identities(f.algebra).passed);
	EXPECT_TRUE(f.algebra.truncated());
	for (int p = 2; p <= 4; ++p) {
		const BracketExpression& e = f.witnesses.at(p);
		EXPECT_EQ(e.left_degree, 1);
		for (std::size_t r = 0; r < f.algebra.dim(p); ++r)
			EXPECT_EQ(evaluate_expression(f.algebra, e, r), unit_vector(f.algebra.dim(p), r));
	}
}

TEST(FreeLie, BracketWitnessesThrowWhenNotSpanning)
{
	const FreeLieSuper f = free_lie_super(1, make_window(1, 4));
	EXPECT_NO_THROW(bracket_witnesses(f.algebra, 2, 1));
	const FreeLieSuper g = free_lie_super(2, make_window(1, 3));
	EXPECT_THROW(bracket_witnesses(g.algebra, 3, 3), std::exception);
}
