#include "gls/extension.hpp"
#include "gls/ideals.hpp"
#include "gls/kantor.hpp"
#include "gls/morphism.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace gls;

namespace {

std::map<int, std::size_t> w_dims(int n)
{
	std::map<int, std::size_t> d;
	for (int p = 0; p <= n; ++p)
		d[-p + 1] = static_cast<std::size_t>(oracle::binomial(n, p) * n);
	return d;
}

DegreeMaps identity_on_local(const GradedLieSuperalgebra& g)
{
	DegreeMaps f;
	for (int k = -1; k <= 1; ++k)
		f[k] = Matrix::identity(g.dim(k));
	return f;
}

}  // namespace

TEST(Local, LocalPartOfW2)
{
	const GradedLieSuperalgebra l = w_local_part(2);
	EXPECT_NO_THROW(require_local(l));
	EXPECT_EQ(l.dim(1), 2u);
	EXPECT_EQ(l.dim(0), 4u);
	EXPECT_EQ(l.dim(-1), 2u);
	EXPECT_TRUE(check_super_identities(l).passed);
	EXPECT_THROW(require_local(build_W(2, make_window(-2, 2))), std::invalid_argument);
	EXPECT_EQ(local_part(build_W(2, make_window(-2, 2))), l);
}

TEST(Minimal, WTowerDimensions)
{
	for (int n = 1; n <= 3; ++n) {
		const GradedLieSuperalgebra w = minimal_extension(w_local_part(n), make_window(-n - 1, 2));
		const auto expect = w_dims(n);
		for (int k = -n - 1; k <= 2; ++k)
			EXPECT_EQ(w.dim(k), expect.count(k) ? expect.at(k) : 0u) << "n=" << n << " k=" << k;
		EXPECT_TRUE(check_super_identities(w).passed);
		EXPECT_TRUE(is_transitive(w));
	}
}

TEST(Minimal, Idempotent)
{
	const GradedLieSuperalgebra w = minimal_extension(w_local_part(3), make_window(-3, 2));
	const GradedLieSuperalgebra again = minimal_extension(local_part(w), make_window(-3, 2));
	for (int k = -3; k <= 2; ++k)
		EXPECT_EQ(again.dim(k), w.dim(k));
	const auto f = extend_local_morphism(w, again, identity_on_local(w));
	ASSERT_TRUE(f);
	EXPECT_TRUE(check_isomorphism(w, again, *f).isomorphic());
}

TEST(Minimal, AgreesWithQuotientOfMaximal)
{
	const Window win = make_window(-3, 3);
	const GradedLieSuperalgebra local = w_local_part(2);
	const GradedLieSuperalgebra a = minimal_extension(local, win);
	const GradedLieSuperalgebra b = minimal_extension_via_maximal(local, win);
	for (int k = -3; k <= 3; ++k)
		EXPECT_EQ(a.dim(k), b.dim(k)) << k;
	const auto f = extend_local_morphism(a, b, identity_on_local(a));
	ASSERT_TRUE(f);
	EXPECT_TRUE(check_isomorphism(a, b, *f).isomorphic());
}

TEST(Maximal, FreeOnBothSides)
{
	const GradedLieSuperalgebra m = maximal_extension(w_local_part(2), make_window(-3, 3));
	const std::map<int, std::size_t> expect{{-3, 2}, {-2, 3}, {-1, 2}, {0, 4}, {1, 2}, {2, 3}, {3, 2}};
	EXPECT_EQ(dimensions(m), expect);
	EXPECT_TRUE(check_super_identities(m).passed);
	EXPECT_FALSE(is_transitive(m));
}

TEST(ExtendFree, PositiveSideOnly)
{
	const GradedLieSuperalgebra e = extend_free(w_local_part(2), 4);
	EXPECT_EQ(e.dim(2), 3u);
	EXPECT_EQ(e.dim(3), 2u);
	EXPECT_EQ(e.dim(4), 3u);
	EXPECT_TRUE(check_super_identities(e).passed);
}

TEST(MixedBracket, WitnessIndependence)
{
	const GradedLieSuperalgebra g = maximal_extension(w_local_part(2), make_window(-2, 3));
	const BracketExpression e = bracket_witnesses(g, 2, 1);
	// [x_a, x_b] = [x_b, x_a] for odd x: an equally valid expression
	BracketExpression swapped = e;
	for (auto& row : swapped.rows)
		for (auto& t : row)
			std::swap(t.left, t.right);
	// and one padded with the vanishing combination [x_0,x_1] - [x_1,x_0]
	BracketExpression padded = e;
	for (auto& row : padded.rows) {
		row.push_back({0, 1, Scalar(1)});
		row.push_back({1, 0, Scalar(-1)});
	}
	for (int p : {-1, 0})
		for (std::size_t r = 0; r < g.dim(2); ++r)
			for (std::size_t t = 0; t < g.dim(p); ++t) {
				const Vector z = unit_vector(g.dim(p), t);
				const Vector a = extend_mixed_bracket(g, e, r, p, z);
				EXPECT_EQ(a, extend_mixed_bracket(g, swapped, r, p, z));
				EXPECT_EQ(a, extend_mixed_bracket(g, padded, r, p, z));
				EXPECT_EQ(a, g.constant(2, r, p, t));
			}
}
