#include "gls/ideals.hpp"
#include "gls/lie_leibniz.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace gls;

namespace {

std::map<int, std::size_t> dims(const GradedLieSuperalgebra& g)
{
	std::map<int, std::size_t> d;
	for (int k : g.degrees())
		d[k] = g.dim(k);
	return d;
}

// (a, x) . (b, y) = ([a, b], a . y) written out from the sl2 constants and the
// fundamental matrices, without going through the triple.
Vector hemi_product(std::size_t i, std::size_t j)
{
	const LieAlgebra g = sl2();
	const Representation m = sl2_fundamental();
	Vector out(5);
	if (i >= 3)
		return out;  // theta kills M
	if (j < 3) {
		const Vector& c = g.constant(i, j);
		for (std::size_t k = 0; k < 3; ++k)
			out[k] = c[k];
	} else {
		for (std::size_t r = 0; r < 2; ++r)
			out[3 + r] = m.action[i](r, j - 3);
	}
	return out;
}

}  // namespace

TEST(Triple, Validation)
{
	const TripleReport adj = validate_triple(adjoint_triple(sl2()));
	EXPECT_FALSE(adj.malformed);
	EXPECT_TRUE(adj.quadratic && adj.strict && adj.surjective && adj.faithful && adj.theta_nonzero);

	const TripleReport scan = validate_triple(scan_fixture());
	EXPECT_TRUE(scan.quadratic);
	EXPECT_FALSE(scan.strict);
	EXPECT_TRUE(scan.strict_witness);

	const TripleReport bad = validate_triple(failing_fixture());
	EXPECT_FALSE(bad.quadratic);
	ASSERT_TRUE(bad.quadratic_witness);

	LieLeibnizTriple wrong = adjoint_triple(sl2());
	wrong.theta = Matrix(2, 3);
	EXPECT_TRUE(validate_triple(wrong).malformed);
	EXPECT_THROW(leibniz_from_triple(failing_fixture()), std::invalid_argument);
}

TEST(Triple, HemiLeibnizProductEntrywise)
{
	const LeibnizAlgebra l = leibniz_from_triple(hemi_semidirect(sl2(), sl2_fundamental()));
	ASSERT_EQ(l.dim, 5u);
	for (std::size_t i = 0; i < 5; ++i)
		for (std::size_t j = 0; j < 5; ++j)
			EXPECT_EQ(l.product[i * 5 + j], hemi_product(i, j)) << i << "," << j;
	EXPECT_FALSE(l.leibniz_violation());
}

TEST(Triple, LeibnizRoundTrip)
{
	for (const LieLeibnizTriple& t : {adjoint_triple(sl2()), hemi_semidirect(sl2(), sl2_fundamental()),
	                                  scan_fixture(), gl2_crossed_module()}) {
		const LeibnizAlgebra l = leibniz_from_triple(t);
		const LieLeibnizTriple back = triple_from_leibniz(l);
		EXPECT_FALSE(validate_triple(back).malformed);
		EXPECT_TRUE(validate_triple(back).quadratic);
		const LeibnizAlgebra again = leibniz_from_triple(back);
		EXPECT_EQ(again.product, l.product);
	}
	LeibnizAlgebra broken = leibniz_from_triple(adjoint_triple(sl2()));
	broken.product[1] = Vector{1, 0, 0};
	EXPECT_THROW(triple_from_leibniz(broken), std::invalid_argument);
}

TEST(Orbit, RThetaDimensions)
{
	EXPECT_EQ(orbit_R_theta(adjoint_triple(sl2())).dim(), 1u);  // theta = id is invariant
	EXPECT_EQ(orbit_R_theta(hemi_semidirect(sl2(), sl2_fundamental())).dim(), 1u);
	EXPECT_EQ(orbit_R_theta(zero_theta(sl2(), adjoint(sl2()))).dim(), 0u);
	const Subspace r = orbit_R_theta(scan_fixture());
	EXPECT_GT(r.dim(), 1u);
	EXPECT_TRUE(r.contains(hom_coordinates(scan_fixture().theta)));
}

TEST(Orbit, HomCoordinatesRoundTrip)
{
	const Matrix t = scan_fixture().theta;
	EXPECT_EQ(hom_matrix(3, 3, hom_coordinates(t)), t);
	EXPECT_EQ(gauge_subalgebra(adjoint_triple(sl2())).dim(), 3u);
}

TEST(SymmetricBracket, KernelAgainstDirectProduct)
{
	const LieLeibnizTriple t = hemi_semidirect(sl2(), sl2_fundamental());
	const SymmetricBracket s = symmetric_bracket(t);
	std::vector<Vector> cols;
	for (std::size_t a = 0; a < 5; ++a)
		for (std::size_t b = a; b < 5; ++b)
			cols.push_back(hemi_product(a, b) + hemi_product(b, a));
	const std::size_t r = oracle::bareiss_rank(Matrix::from_rows(5, cols));
	EXPECT_EQ(s.kernel.dim(), 15 - r);
	EXPECT_EQ(s.kernel.dim(), 13u);
	EXPECT_EQ(s.image.dim(), r);
	EXPECT_TRUE(s.h_equivariant);
	EXPECT_TRUE(symmetric_bracket(adjoint_triple(sl2())).map.is_zero());
}

TEST(K, TwoWaysAgree)
{
	for (const LieLeibnizTriple& t : {adjoint_triple(sl2()), hemi_semidirect(sl2(), sl2_fundamental()),
	                                  scan_fixture(), gl2_crossed_module()}) {
		const KComputation k = compute_K(t);
		EXPECT_TRUE(k.agree);
		EXPECT_TRUE(k.commutes_with_r_theta);
		EXPECT_EQ(k.tensor.dim(), k.by_invariance.dim());
		EXPECT_TRUE(symmetric_bracket(t).kernel.contains(k.by_invariance));
	}
	EXPECT_EQ(compute_K(adjoint_triple(sl2())).by_invariance.dim(), 6u);
	EXPECT_EQ(compute_K(hemi_semidirect(sl2(), sl2_fundamental())).by_invariance.dim(), 13u);
}

TEST(L, AdjointSl2)
{
	const LBuild b = build_L(adjoint_triple(sl2()));
	EXPECT_EQ(dims(b.l), (std::map<int, std::size_t>{{-1, 1}, {0, 3}, {1, 3}}));
	EXPECT_TRUE(b.transitive);
	EXPECT_TRUE(check_super_identities(b.l).passed);
	EXPECT_FALSE(is_zero(b.theta));
}

TEST(L, HemiSemidirect)
{
	const LBuild b = build_L(hemi_semidirect(sl2(), sl2_fundamental()));
	EXPECT_EQ(dims(b.l), (std::map<int, std::size_t>{{-1, 1}, {0, 3}, {1, 5}, {2, 2}}));
	EXPECT_TRUE(check_super_identities(b.l).passed);
}

TEST(L, Gl2CrossedModule)
{
	const LBuild b = build_L(gl2_crossed_module());
	EXPECT_EQ(dims(b.l), (std::map<int, std::size_t>{{-1, 1}, {0, 4}, {1, 3}}));
	EXPECT_EQ(table_row(gl2_crossed_module()), ChainRow::crossed_module);
}

TEST(Chain, RowsAndDifferential)
{
	EXPECT_EQ(table_row(adjoint_triple(sl2())), ChainRow::crossed_module);
	EXPECT_EQ(table_row(hemi_semidirect(sl2(), sl2_fundamental())), ChainRow::augmented_leibniz);
	EXPECT_EQ(table_row(scan_fixture()), ChainRow::general);
	EXPECT_EQ(to_string(ChainRow::lie_algebra_v), "lie_algebra_v");

	const ChainReport hemi = dgla_chain_report(hemi_semidirect(sl2(), sl2_fundamental()));
	EXPECT_TRUE(hemi.chain.squares_to_zero);
	EXPECT_TRUE(hemi.chain.derivation);
	EXPECT_EQ(hemi.map_ranks.at(1), 3u);  // g + M -> g is onto
	EXPECT_EQ(hemi.map_ranks.at(2), 2u);  // M[-2] -> (g + M)[-1] is injective
	EXPECT_EQ(hemi.r_theta_dim, 1u);
}

TEST(Theorem, IsomorphicWhenHypothesesHold)
{
	for (const LieLeibnizTriple& t : {adjoint_triple(sl2()), hemi_semidirect(sl2(), sl2_fundamental()), scan_fixture()}) {
		const TheoremReport r = compare_with_P(t);
		EXPECT_TRUE(r.hypotheses_met());
		EXPECT_TRUE(r.dims_equal);
		EXPECT_TRUE(r.iso.isomorphic()) << r.iso.failure.value_or("");
	}
}

TEST(Theorem, HypothesesNotMet)
{
	const TheoremReport z = compare_with_P(zero_theta(sl2(), adjoint(sl2())));
	EXPECT_FALSE(z.theta_nonzero);
	EXPECT_FALSE(z.hypotheses_met());
	EXPECT_FALSE(z.iso.isomorphic());

	const TheoremReport g = compare_with_P(gl2_crossed_module());
	EXPECT_FALSE(g.g_simple);
	EXPECT_FALSE(g.hypotheses_met());
	EXPECT_FALSE(g.dims_equal);  // P sees only rho(gl2) = image in gl(V), which is 3-dimensional
}

TEST(RhoCompose, IdentityGoesToAdjoint)
{
	const LieLeibnizTriple t = adjoint_triple(sl2());
	const Vector v = rho_compose(t, hom_coordinates(t.theta));
	// slice a is rho(x_a) in gl(3) coordinates c*3 + d = matrix entry (d, c)
	for (std::size_t a = 0; a < 3; ++a) {
		const Matrix ad = sl2().ad(a);
		for (std::size_t c = 0; c < 3; ++c)
			for (std::size_t d = 0; d < 3; ++d)
				EXPECT_EQ(v[a * 9 + c * 3 + d], ad(d, c));
	}
}

TEST(T, PositivelyTransitiveAndKInvariant)
{
	for (const LieLeibnizTriple& t : {adjoint_triple(sl2()), hemi_semidirect(sl2(), sl2_fundamental()), scan_fixture(),
	                                  zero_theta(sl2(), adjoint(sl2()))}) {
		const TowerBuild b = build_T(t);
		EXPECT_TRUE(family_is_zero(transitivity_defect(b.t.algebra, Side::positive, -1)));
		EXPECT_EQ(b.t.algebra.dim(2), b.generated.at(2).dim() - b.k.by_invariance.dim());
	}
	const TowerBuild z = build_T(zero_theta(sl2(), adjoint(sl2())));
	EXPECT_EQ(dims(z.t.algebra), (std::map<int, std::size_t>{{0, 3}, {1, 3}}));
	EXPECT_THROW(build_T(adjoint_triple(sl2()), make_window(0, 3)), std::invalid_argument);
	EXPECT_THROW(build_T(failing_fixture()), std::invalid_argument);
}

TEST(L, MinimalityIsStable)
{
	for (const LieLeibnizTriple& t : {adjoint_triple(sl2()), hemi_semidirect(sl2(), sl2_fundamental()), scan_fixture()}) {
		const LBuild b = build_L(t);
		EXPECT_TRUE(family_is_zero(maximal_trivial_ideal(b.l, 3, std::nullopt)));
		if (validate_triple(t).strict) {
			EXPECT_EQ(b.tower.r_theta.dim(), 1u);
			EXPECT_EQ(b.l.dim(-2), 0u);
		}
	}
	// the scan fixture has a nonzero trivial ideal above degree 3 in T
	const LBuild s = build_L(scan_fixture());
	EXPECT_FALSE(family_is_zero(s.trivial_ideal));
}

TEST(Chain, DifferentialOnDegreeOneIsTheta)
{
	for (const LieLeibnizTriple& t : {adjoint_triple(sl2()), hemi_semidirect(sl2(), sl2_fundamental()), scan_fixture()}) {
		const LBuild b = build_L(t);
		const DglaChain c = differential_d_theta(t, b.l, b.theta);
		EXPECT_EQ(c.d.blocks.at(1), t.theta);
	}
	const ChainReport adj = dgla_chain_report(adjoint_triple(sl2()));
	EXPECT_EQ(adj.row, ChainRow::crossed_module);
	EXPECT_EQ(adj.map_ranks.at(1), 3u);  // theta = id is an isomorphism V -> g
	EXPECT_EQ(adj.map_names.at(1), "theta");
	const ChainReport scan = dgla_chain_report(scan_fixture());
	EXPECT_EQ(scan.row, ChainRow::general);
	EXPECT_GT(scan.r_theta_dim, 1u);
	EXPECT_GT(scan.r_theta_square_dim, 0u);
}

TEST(Factories, HemiWithZeroModuleIsAdjoint)
{
	const LieLeibnizTriple h = hemi_semidirect(sl2(), trivial_representation(sl2(), 0));
	const LieLeibnizTriple a = adjoint_triple(sl2());
	EXPECT_EQ(h.theta, a.theta);
	for (std::size_t i = 0; i < 3; ++i)
		EXPECT_EQ(h.rho.action[i], a.rho.action[i]);
	EXPECT_THROW(crossed_module(sl2(), {unit_vector(3, 1)}), std::invalid_argument);  // span{e} is no ideal
}
