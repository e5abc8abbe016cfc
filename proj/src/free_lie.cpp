#include "gls/free_lie.hpp"

#include <stdexcept>

namespace gls {

std::size_t power(std::size_t n, int p)
{
	std::size_t r = 1;
	for (int i = 0; i < p; ++i)
		r *= n;
	return r;
}

Vector tensor_product(std::size_t, const Vector& x, const Vector& y)
{
	Vector out(x.size() * y.size());
	for (std::size_t a = 0; a < x.size(); ++a) {
		if (is_zero(x[a]))
			continue;
		for (std::size_t b = 0; b < y.size(); ++b)
			if (!is_zero(y[b]))
				out[a * y.size() + b] = x[a] * y[b];
	}
	return out;
}

Vector super_commutator(std::size_t n, int p, const Vector& x, int q, const Vector& y)
{
	Vector out = tensor_product(n, x, y);
	axpy(-super_sign(p, q), tensor_product(n, y, x), out);
	return out;
}

Vector dynkin(std::size_t n, int p, const Vector& t)
{
	if (p == 1)
		return t;
	const std::size_t tail = power(n, p - 1);
	Vector out(t.size());
	for (std::size_t a = 0; a < n; ++a) {
		Vector slice(t.begin() + static_cast<std::ptrdiff_t>(a * tail),
		             t.begin() + static_cast<std::ptrdiff_t>((a + 1) * tail));
		if (is_zero(slice))
			continue;
		axpy(1, super_commutator(n, 1, unit_vector(n, a), p - 1, dynkin(n, p - 1, slice)), out);
	}
	return out;
}

Vector TensorAmbient::bracket(int i, const Vector& x, int j, const Vector& y) const
{
	if (i < 1 || j < 1)
		return Vector(dim(i + j));
	return super_commutator(n_, i, x, j, y);
}

Vector evaluate_expression(const GradedLieSuperalgebra& g, const BracketExpression& e, std::size_t r)
{
	Vector out(g.dim(e.degree));
	for (const auto& t : e.rows.at(r))
		axpy(t.coeff, g.constant(e.left_degree, t.left, e.right_degree, t.right), out);
	return out;
}

BracketExpression bracket_witnesses(const GradedLieSuperalgebra& g, int degree, int left)
{
	BracketExpression e;
	e.degree = degree;
	e.left_degree = left;
	e.right_degree = degree - left;
	const std::size_t dl = g.dim(left);
	const std::size_t dr = g.dim(degree - left);
	std::vector<Vector> inputs;
	for (std::size_t a = 0; a < dl; ++a)
		for (std::size_t b = 0; b < dr; ++b)
			inputs.push_back(g.constant(left, a, degree - left, b));
	const SpanWitness sw = span_with_witness(g.dim(degree), inputs);
	if (sw.span.dim() != g.dim(degree))
		throw std::invalid_argument("degree " + std::to_string(degree) + " is not spanned by brackets from degree " +
		                            std::to_string(left));
	// RREF basis of the full space is the identity, so row r is basis vector r.
	for (const auto& c : sw.coefficients) {
		std::vector<BracketExpression::Term> terms;
		for (std::size_t k = 0; k < c.size(); ++k)
			if (!is_zero(c[k]))
				terms.push_back({k / dr, k % dr, c[k]});
		e.rows.push_back(std::move(terms));
	}
	return e;
}

FreeLieSuper free_lie_super(std::size_t generators, Window window)
{
	if (window.max < 1)
		throw std::invalid_argument("free Lie superalgebra needs max degree >= 1");
	TensorAmbient t(generators, window);
	FreeLieSuper out;
	std::map<int, SpanWitness> spans;
	for (int k = window.min; k <= window.max; ++k) {
		if (k < 1) {
			out.realization[k] = Subspace(0);
		} else if (k == 1) {
			out.realization[k] = Subspace::full(generators);
		} else {
			const Subspace& prev = out.realization.at(k - 1);
			std::vector<Vector> inputs;
			for (std::size_t a = 0; a < generators; ++a)
				for (std::size_t j = 0; j < prev.dim(); ++j)
					inputs.push_back(super_commutator(generators, 1, unit_vector(generators, a), k - 1,
					                                  prev.basis_vector(j)));
			spans[k] = span_with_witness(t.dim(k), inputs);
			out.realization[k] = spans[k].span;
		}
	}
	Subquotient sq = materialize_subquotient(t, out.realization, Family{}, window, false);
	out.algebra = std::move(sq.algebra);
	for (int k = window.min; k <= window.max; ++k)
		if (k >= 1)
			out.algebra.set_provenance(k, k == 1 ? "free generators" : "free: span of [F_1, F_" + std::to_string(k - 1) + "]");
	out.algebra.set_truncated(true);
	for (auto& [k, sw] : spans) {
		BracketExpression e;
		e.degree = k;
		e.left_degree = 1;
		e.right_degree = k - 1;
		const std::size_t dr = out.realization.at(k - 1).dim();
		for (const auto& c : sw.coefficients) {
			std::vector<BracketExpression::Term> terms;
			for (std::size_t i = 0; i < c.size(); ++i)
				if (!is_zero(c[i]))
					terms.push_back({i / dr, i % dr, c[i]});
			e.rows.push_back(std::move(terms));
		}
		out.witnesses.emplace(k, std::move(e));
	}
	return out;
}

}  // namespace gls
