#pragma once

// Lie-Leibniz triples (g, V, theta) and the graded Lie superalgebras they
// induce: the tower T, its minimal quotient L, the inner differential and the
// comparison with P(V[-1], T_-1).

#include "gls/kantor.hpp"
#include "gls/morphism.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gls {

struct LieLeibnizTriple {
	LieAlgebra g;
	Representation rho;  // g-module V
	Matrix theta;        // dim g x dim V, column a = theta(u_a)

	std::size_t m() const { return g.dim; }
	std::size_t n() const { return rho.dim; }
};

struct TripleReport {
	std::optional<std::string> malformed;  // dimension or structure problem
	bool quadratic = false;
	std::optional<std::array<std::size_t, 2>> quadratic_witness;  // (u, v)
	bool strict = false;
	std::optional<std::array<std::size_t, 2>> strict_witness;  // (x, u)
	bool surjective = false;
	bool faithful = false;
	bool theta_nonzero = false;
};

TripleReport validate_triple(const LieLeibnizTriple& t);

/// Left Leibniz algebra: product[a*dim + b] = u_a . u_b.
struct LeibnizAlgebra {
	std::size_t dim = 0;
	std::vector<Vector> product;

	Vector multiply(const Vector& u, const Vector& v) const;
	/// First (a,b,c) with u.(v.w) != (u.v).w + v.(u.w).
	std::optional<std::array<std::size_t, 3>> leibniz_violation() const;
};

/// u . v = rho(theta(u)) v. Throws std::invalid_argument if the quadratic constraint fails.
LeibnizAlgebra leibniz_from_triple(const LieLeibnizTriple& t);
/// g = span of the left multiplications, theta = ad. Throws if the Leibniz rule fails.
LieLeibnizTriple triple_from_leibniz(const LeibnizAlgebra& l);

/// (x . phi)(u) = [x, phi(u)] - phi(rho(x) u) on m x n matrices.
Matrix hom_action(const LieLeibnizTriple& t, const Vector& x, const Matrix& phi);
/// Coordinates of phi in Hom(V, g): index a*m + i holds phi(u_a)_i.
Vector hom_coordinates(const Matrix& phi);
Matrix hom_matrix(std::size_t m, std::size_t n, const Vector& coords);

/// Span of theta and its iterated images under hom_action, in hom coordinates.
Subspace orbit_R_theta(const LieLeibnizTriple& t);

/// Image of theta; throws std::logic_error if it is not a subalgebra or theta
/// is not equivariant under it.
Subspace gauge_subalgebra(const LieLeibnizTriple& t);

/// Basis P_ab (a <= b) of Sym^2 V, matching [u_a, u_b] in degree 2.
std::vector<std::pair<std::size_t, std::size_t>> sym2_pairs(std::size_t n);
/// [u_a, u_b] as a tensor of length n^2.
Vector sym2_tensor(std::size_t n, std::size_t a, std::size_t b);

struct SymmetricBracket {
	Matrix map;  // n x |pairs|, column P_ab = {u_a, u_b} = (u_a.u_b + u_b.u_a)/2
	Subspace kernel;
	Subspace image;  // ideal of squares
	bool h_equivariant = false;
};
SymmetricBracket symmetric_bracket(const LieLeibnizTriple& t);

/// g acting on Sym^2 V in pair coordinates.
std::vector<Matrix> sym2_action(const LieLeibnizTriple& t);

struct KComputation {
	Subspace by_invariance;   // largest g-submodule of the symmetric-bracket kernel
	Subspace by_annihilator;  // joint kernel of [chi, .] for chi in R_theta
	bool agree = false;
	bool commutes_with_r_theta = false;  // [R_theta, K] = 0
	Subspace tensor;  // K inside U_2, tensor coordinates
};
KComputation compute_K(const LieLeibnizTriple& t);

struct TowerBuild {
	Subquotient t;       // T realized in the generalized universal tower
	Family generated;    // T_- + g + U_+ before the quotient
	Family relations;    // ideal generated by K
	Subspace r_theta;
	KComputation k;
};

/// Default window for T and L.
Window default_lie_leibniz_window();

TowerBuild build_T(const LieLeibnizTriple& t, Window w = default_lie_leibniz_window());

struct LBuild {
	GradedLieSuperalgebra l;
	Vector theta;  // theta as an element of L_-1
	Family trivial_ideal;
	bool transitive = false;  // (-2,2) within window
	TowerBuild tower;
};

LBuild build_L(const LieLeibnizTriple& t, Window w = default_lie_leibniz_window());

enum class ChainRow { crossed_module, augmented_leibniz, lie_algebra_v, general };
std::string to_string(ChainRow r);
ChainRow table_row(const LieLeibnizTriple& t);

struct DglaChain {
	GradedMap d;  // shift -1
	bool squares_to_zero = false;
	bool derivation = false;
	std::optional<std::string> failure;
	ChainRow row = ChainRow::general;
};

DglaChain differential_d_theta(const LieLeibnizTriple& t, const GradedLieSuperalgebra& l, const Vector& theta);

struct ChainReport {
	ChainRow row = ChainRow::general;
	std::map<int, std::size_t> dims;
	std::map<int, std::size_t> map_ranks;  // rank of d: L_k -> L_k-1
	std::map<int, std::string> map_names;
	Subspace ideal_of_squares;
	std::size_t r_theta_dim = 0;
	std::size_t r_theta_square_dim = 0;  // dim L_-2
	DglaChain chain;
};

ChainReport dgla_chain_report(const LieLeibnizTriple& t, Window w = default_lie_leibniz_window());

struct TheoremReport {
	bool g_simple = false;
	bool v_faithful = false;
	bool theta_nonzero = false;
	bool hypotheses_met() const { return g_simple && v_faithful && theta_nonzero; }
	std::map<int, std::size_t> l_dims;
	std::map<int, std::size_t> p_dims;
	bool dims_equal = false;
	IsomorphismReport iso;
};

/// Builds L and P(V[-1], rho o R_theta) on the same window and checks that
/// the map extending the identity on V is a bracket-preserving bijection.
TheoremReport compare_with_P(const LieLeibnizTriple& t, Window w = default_lie_leibniz_window());

/// rho o phi inside U_-1 of the Kantor algebra of V, for phi in hom coordinates.
Vector rho_compose(const LieLeibnizTriple& t, const Vector& phi);

// Factories
LieLeibnizTriple adjoint_triple(const LieAlgebra& g);
/// V = g + M with a.(b,y) = ([a,b], a.y), theta the projection onto g.
LieLeibnizTriple hemi_semidirect(const LieAlgebra& g, const Representation& m);
/// V an ideal of g (basis given in g coordinates), acted on by the bracket,
/// theta the inclusion.
LieLeibnizTriple crossed_module(const LieAlgebra& g, const std::vector<Vector>& ideal_basis);
/// gl(2) acting on its ideal sl(2).
LieLeibnizTriple gl2_crossed_module();
/// sl2 on its adjoint with theta the projection onto span{h}: quadratic, not strict.
LieLeibnizTriple scan_fixture();
/// sl2 on its adjoint with theta the projection onto span{e}: violates the quadratic constraint.
LieLeibnizTriple failing_fixture();
LieLeibnizTriple zero_theta(const LieAlgebra& g, const Representation& rho);

}  // namespace gls
