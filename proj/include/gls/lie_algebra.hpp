#pragma once

// Ordinary (even, ungraded) Lie algebras and their representations, given by
// structure constants and action matrices.

#include "gls/linalg.hpp"

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace gls {

struct LieAlgebra {
	std::size_t dim = 0;
	std::vector<std::string> labels;
	std::vector<Vector> constants;  // [x_i, x_j] at i*dim + j

	static LieAlgebra abelian(std::size_t dim);
	/// From sparse triples (i, j, [x_i,x_j]); [x_j,x_i] is filled by antisymmetry.
	static LieAlgebra from_brackets(std::vector<std::string> labels,
	                                const std::vector<std::tuple<std::size_t, std::size_t, Vector>>& brackets);

	const Vector& constant(std::size_t i, std::size_t j) const { return constants[i * dim + j]; }
	Vector bracket(const Vector& x, const Vector& y) const;
	/// Matrix of ad(x_i): column j is [x_i, x_j].
	Matrix ad(std::size_t i) const;
	Matrix ad(const Vector& x) const;

	std::optional<std::array<std::size_t, 2>> antisymmetry_violation() const;
	std::optional<std::array<std::size_t, 3>> jacobi_violation() const;
};

/// Basis (h, e, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2();
/// Basis E_ac (index a*n + c), the endomorphism u_a -> u_c.
LieAlgebra gl(std::size_t n);

struct Representation {
	std::size_t dim = 0;
	std::vector<std::string> labels;
	std::vector<Matrix> action;  // action[i] = rho(x_i), dim x dim

	Matrix of(const Vector& x) const;
};

Representation adjoint(const LieAlgebra& g);
Representation sl2_fundamental();  // h = diag(1,-1), e = E_12, f = E_21
Representation gl_fundamental(std::size_t n);
Representation trivial_representation(const LieAlgebra& g, std::size_t dim);

/// First basis pair (i, j) with [rho(x_i), rho(x_j)] != rho([x_i, x_j]).
std::optional<std::array<std::size_t, 2>> representation_violation(const LieAlgebra& g, const Representation& r);
bool is_faithful(const Representation& r);

/// Smallest ideal of g containing the seeds.
Subspace lie_ideal_generated(const LieAlgebra& g, const std::vector<Vector>& seeds);
Matrix killing_form(const LieAlgebra& g);
/// Endomorphisms of g commuting with every ad(x_i).
Subspace ad_commutant(const LieAlgebra& g);

/// Nonzero, nonabelian and without proper nonzero ideals. Decided by
/// nondegenerate Killing form, a one-dimensional ad-commutant, and every
/// basis vector generating g as an ideal. Algebras simple over Q but not
/// absolutely simple are reported as not simple.
bool is_simple(const LieAlgebra& g);

}  // namespace gls
