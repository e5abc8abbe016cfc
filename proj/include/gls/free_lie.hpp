#pragma once

// Free Lie superalgebras on odd degree-1 generators, realized inside the
// tensor algebra with the super-commutator.

#include "gls/ideals.hpp"

#include <vector>

namespace gls {

std::size_t power(std::size_t n, int p);

/// Coordinates of degree-p tensors over n letters: words of length p, first
/// letter most significant.
Vector tensor_product(std::size_t n, const Vector& x, const Vector& y);
/// x (x) y - (-1)^{pq} y (x) x
Vector super_commutator(std::size_t n, int p, const Vector& x, int q, const Vector& y);
/// Right-normed bracketing r(u1...up) = [u1,[u2,...,up]] extended linearly.
/// On Lie elements of degree p it is multiplication by p.
Vector dynkin(std::size_t n, int p, const Vector& t);

/// Tensor algebra on n odd generators at degree 1, truncated to a window.
class TensorAmbient : public Ambient {
public:
	TensorAmbient(std::size_t n, Window w) : n_(n), window_(w) {}
	Window window() const override { return window_; }
	std::size_t dim(int k) const override { return k >= 1 ? power(n_, k) : 0; }
	Vector bracket(int i, const Vector& x, int j, const Vector& y) const override;
	std::size_t generators() const { return n_; }

private:
	std::size_t n_;
	Window window_;
};

/// Basis vector r of degree `degree` equals sum c [x_left, y_right] with x at
/// left_degree and y at right_degree.
struct BracketExpression {
	struct Term {
		std::size_t left;
		std::size_t right;
		Scalar coeff;
	};
	int degree = 0;
	int left_degree = 0;
	int right_degree = 0;
	std::vector<std::vector<Term>> rows;
};

/// Evaluates row r of the expression with the brackets of g.
Vector evaluate_expression(const GradedLieSuperalgebra& g, const BracketExpression& e, std::size_t r);

/// Expresses the basis of degree `degree` of g through brackets of basis
/// vectors at degrees (left, degree - left). Throws if they do not span.
BracketExpression bracket_witnesses(const GradedLieSuperalgebra& g, int degree, int left);

struct FreeLieSuper {
	GradedLieSuperalgebra algebra;
	std::map<int, BracketExpression> witnesses;  // degrees >= 2, left factor a generator
	Family realization;                          // Lie elements inside the tensor coordinates
};

/// Free Lie superalgebra on `generators` odd elements of degree 1, truncated
/// to the window (max >= 1; nonpositive degrees are empty).
FreeLieSuper free_lie_super(std::size_t generators, Window window);

}  // namespace gls
