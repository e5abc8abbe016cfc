#pragma once

// Kantor's universal Lie superalgebra of a vector space U_1, its
// generalization with degree 0 replaced by a Lie algebra acting on U_1, and
// the constructions living inside it: rho, prolongations, P(U_1, T_-1), W(n).

#include "gls/extension.hpp"
#include "gls/lie_algebra.hpp"

namespace gls {

/// Degree 1: V = U_1 (dim n). Degree p >= 2: tensors of length p (the Lie
/// elements among them form the free part). Degree 0: g acting on V through
/// rho. Degree -k: maps V^{(x)k} -> g, coordinates (a_1, ..., a_k, i) with
/// the first slot most significant, so that [x, u_a] is the a-th slice.
class UniversalAmbient : public Ambient {
public:
	UniversalAmbient(LieAlgebra g, Representation rho, Window w);
	/// Kantor's U for dim U_1 = n: g = gl(n) on its fundamental module.
	static UniversalAmbient kantor(std::size_t n, Window w);

	Window window() const override { return window_; }
	std::size_t dim(int k) const override;
	Vector bracket(int i, const Vector& x, int j, const Vector& y) const override;

	/// [x, u_a] for x of degree <= 0.
	Vector evaluate(int degree, const Vector& x, std::size_t a) const;
	/// Degree -1 element u -> theta(u) for an m x n matrix (column a = theta(u_a)).
	Vector hom_element(const Matrix& theta) const;

	std::size_t n() const { return rho_.dim; }
	const LieAlgebra& base() const { return g_; }
	const Representation& rho() const { return rho_; }

private:
	Vector act_on_tensor(const Vector& x, int p, const Vector& t) const;  // degree-0 x on a degree-p tensor
	Vector mixed(int i, const Vector& x, int j, const Vector& y) const;   // i <= 0 < j

	LieAlgebra g_;
	Representation rho_;
	Window window_;
};

/// Lie elements of the positive part, per degree 1..max, in tensor coordinates.
Family free_positive_family(std::size_t n, const Window& w);

/// U materialized on the window: everything at degrees <= 1, Lie elements above.
GradedLieSuperalgebra build_universal(std::size_t n, Window w);

struct RhoReport {
	GradedMap map;                  // blocks[k]: G_k -> U_k for window.min <= k <= 1
	std::map<int, bool> injective;  // per degree
	bool morphism = true;           // rho[x,y] = [rho x, rho y] on basis pairs landing at degree <= 1
	std::optional<BracketWitness> violation;
};

/// rho(u) = u at degree 1 and rho(x)(u) = rho([x,u]) below, with U_1 = G_1
/// (same basis order).
RhoReport rho_morphism(const GradedLieSuperalgebra& g);

/// Ideal of U_+ generated by the given families (degrees >= 2, tensor coordinates).
Family ideal_in_free(std::size_t n, const Family& generators, const Window& w);

struct Prolongation {
	Family idealiser;  // N (or N' when reduced)
	Family ideal;      // D
	Subquotient result;
};

/// N/D with N the idealiser of the ideal D generated by `generators` in U_+.
Prolongation prolongation(std::size_t n, const Family& generators, Window w);

/// N'/D where N'_k = T_k for 0 >= k >= -p and N'_-k = Hom(U_1, N'_-k+1) meet N_-k below.
/// Throws std::invalid_argument naming the failed condition.
Prolongation reduced_prolongation(std::size_t n, const Family& generators, const Family& top, Window w);

/// Degree-2 Lie elements, i.e. the whole of U_2, as a generator family.
Family degree_two_generators(std::size_t n, const Window& w);

/// Subalgebra of U generated by U_1 and T_-1, modulo its maximal ideal meeting
/// the local part trivially.
Subquotient build_P(std::size_t n, const Subspace& t_minus1, Window w);

/// Elements of U_-1 annihilating U_2.
Subspace u2_annihilator(const UniversalAmbient& u);

/// Local part E_a, K^a_b and the U_2-annihilating part of U_-1, then minimal_extension.
GradedLieSuperalgebra build_W(std::size_t n, Window w);
GradedLieSuperalgebra w_local_part(std::size_t n);

}  // namespace gls
