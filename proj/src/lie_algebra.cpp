#include "gls/lie_algebra.hpp"

#include <stdexcept>

namespace gls {

LieAlgebra LieAlgebra::abelian(std::size_t dim)
{
	LieAlgebra g;
	g.dim = dim;
	for (std::size_t i = 0; i < dim; ++i)
		g.labels.push_back("x" + std::to_string(i));
	g.constants.assign(dim * dim, Vector(dim));
	return g;
}

LieAlgebra LieAlgebra::from_brackets(std::vector<std::string> labels,
                                     const std::vector<std::tuple<std::size_t, std::size_t, Vector>>& brackets)
{
	LieAlgebra g = abelian(labels.size());
	g.labels = std::move(labels);
	for (const auto& [i, j, v] : brackets) {
		if (i >= g.dim || j >= g.dim || v.size() != g.dim)
			throw DimensionMismatch("bracket entry out of range");
		if (i == j && !gls::is_zero(v))
			throw std::invalid_argument("nonzero bracket of a basis vector with itself");
		g.constants[i * g.dim + j] = v;
		g.constants[j * g.dim + i] = Scalar(-1) * v;
	}
	return g;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const
{
	Vector out(dim);
	for (std::size_t i = 0; i < dim; ++i) {
		if (gls::is_zero(x[i]))
			continue;
		for (std::size_t j = 0; j < dim; ++j)
			if (!gls::is_zero(y[j]))
				axpy(x[i] * y[j], constant(i, j), out);
	}
	return out;
}

Matrix LieAlgebra::ad(std::size_t i) const
{
	Matrix m(dim, dim);
	for (std::size_t j = 0; j < dim; ++j)
		for (std::size_t k = 0; k < dim; ++k)
			m(k, j) = constant(i, j)[k];
	return m;
}

Matrix LieAlgebra::ad(const Vector& x) const
{
	Matrix m(dim, dim);
	for (std::size_t i = 0; i < dim; ++i)
		if (!gls::is_zero(x[i]))
			for (std::size_t j = 0; j < dim; ++j)
				for (std::size_t k = 0; k < dim; ++k)
					m(k, j) += x[i] * constant(i, j)[k];
	return m;
}

std::optional<std::array<std::size_t, 2>> LieAlgebra::antisymmetry_violation() const
{
	for (std::size_t i = 0; i < dim; ++i)
		for (std::size_t j = i; j < dim; ++j)
			if (!gls::is_zero(constant(i, j) + constant(j, i)))
				return std::array<std::size_t, 2>{i, j};
	return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> LieAlgebra::jacobi_violation() const
{
	for (std::size_t i = 0; i < dim; ++i)
		for (std::size_t j = 0; j < dim; ++j)
			for (std::size_t k = 0; k < dim; ++k) {
				const Vector ei = unit_vector(dim, i);
				const Vector ej = unit_vector(dim, j);
				const Vector ek = unit_vector(dim, k);
				Vector r = bracket(ei, constant(j, k)) - bracket(ej, constant(i, k)) - bracket(constant(i, j), ek);
				if (!gls::is_zero(r))
					return std::array<std::size_t, 3>{i, j, k};
			}
	return std::nullopt;
}

LieAlgebra sl2()
{
	return LieAlgebra::from_brackets({"h", "e", "f"}, {{0, 1, {0, 2, 0}}, {0, 2, {0, 0, -2}}, {1, 2, {1, 0, 0}}});
}

LieAlgebra gl(std::size_t n)
{
	LieAlgebra g = LieAlgebra::abelian(n * n);
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t c = 0; c < n; ++c)
			g.labels[a * n + c] = "E" + std::to_string(a) + std::to_string(c);
	// [E_ab, E_cd] = delta_ad E_cb - delta_bc E_ad
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			for (std::size_t c = 0; c < n; ++c)
				for (std::size_t d = 0; d < n; ++d) {
					Vector& v = g.constants[(a * n + b) * n * n + (c * n + d)];
					if (a == d)
						v[c * n + b] += 1;
					if (b == c)
						v[a * n + d] -= 1;
				}
	return g;
}

Matrix Representation::of(const Vector& x) const
{
	Matrix m(dim, dim);
	for (std::size_t i = 0; i < action.size(); ++i)
		if (!is_zero(x[i]))
			for (std::size_t r = 0; r < dim; ++r)
				for (std::size_t c = 0; c < dim; ++c)
					if (!is_zero(action[i](r, c)))
						m(r, c) += x[i] * action[i](r, c);
	return m;
}

Representation adjoint(const LieAlgebra& g)
{
	Representation r;
	r.dim = g.dim;
	r.labels = g.labels;
	for (std::size_t i = 0; i < g.dim; ++i)
		r.action.push_back(g.ad(i));
	return r;
}

Representation sl2_fundamental()
{
	Representation r;
	r.dim = 2;
	r.labels = {"v1", "v2"};
	Matrix h(2, 2), e(2, 2), f(2, 2);
	h(0, 0) = 1;
	h(1, 1) = -1;
	e(0, 1) = 1;
	f(1, 0) = 1;
	r.action = {h, e, f};
	return r;
}

Representation gl_fundamental(std::size_t n)
{
	Representation r;
	r.dim = n;
	for (std::size_t a = 0; a < n; ++a)
		r.labels.push_back("u" + std::to_string(a));
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t c = 0; c < n; ++c) {
			Matrix m(n, n);
			m(c, a) = 1;
			r.action.push_back(std::move(m));
		}
	return r;
}

Representation trivial_representation(const LieAlgebra& g, std::size_t dim)
{
	Representation r;
	r.dim = dim;
	for (std::size_t a = 0; a < dim; ++a)
		r.labels.push_back("t" + std::to_string(a));
	r.action.assign(g.dim, Matrix(dim, dim));
	return r;
}

std::optional<std::array<std::size_t, 2>> representation_violation(const LieAlgebra& g, const Representation& r)
{
	if (r.action.size() != g.dim)
		throw DimensionMismatch("one action matrix per Lie algebra generator expected");
	for (std::size_t i = 0; i < g.dim; ++i)
		for (std::size_t j = 0; j < g.dim; ++j) {
			const Matrix lhs = r.action[i] * r.action[j] - r.action[j] * r.action[i];
			if (!(lhs == r.of(g.constant(i, j))))
				return std::array<std::size_t, 2>{i, j};
		}
	return std::nullopt;
}

bool is_faithful(const Representation& r)
{
	std::vector<Vector> rows;
	for (const auto& m : r.action) {
		Vector v;
		for (std::size_t a = 0; a < r.dim; ++a)
			for (std::size_t b = 0; b < r.dim; ++b)
				v.push_back(m(a, b));
		rows.push_back(std::move(v));
	}
	if (rows.empty())
		return true;
	return Subspace::span(r.dim * r.dim, rows).dim() == rows.size();
}

Subspace lie_ideal_generated(const LieAlgebra& g, const std::vector<Vector>& seeds)
{
	std::vector<Matrix> ops;
	for (std::size_t i = 0; i < g.dim; ++i)
		ops.push_back(g.ad(i));
	return invariant_closure(ops, Subspace::span(g.dim, seeds));
}

Matrix killing_form(const LieAlgebra& g)
{
	std::vector<Matrix> ads;
	for (std::size_t i = 0; i < g.dim; ++i)
		ads.push_back(g.ad(i));
	Matrix k(g.dim, g.dim);
	for (std::size_t i = 0; i < g.dim; ++i)
		for (std::size_t j = 0; j < g.dim; ++j) {
			const Matrix p = ads[i] * ads[j];
			for (std::size_t t = 0; t < g.dim; ++t)
				k(i, j) += p(t, t);
		}
	return k;
}

Subspace ad_commutant(const LieAlgebra& g)
{
	// Unknown T flattened as T(r,c) -> r*m + c; rows of the system are the
	// entries of T ad_i - ad_i T.
	const std::size_t m = g.dim;
	std::vector<Vector> rows;
	for (std::size_t i = 0; i < m; ++i) {
		const Matrix a = g.ad(i);
		for (std::size_t r = 0; r < m; ++r)
			for (std::size_t c = 0; c < m; ++c) {
				Vector row(m * m);
				for (std::size_t k = 0; k < m; ++k) {
					row[r * m + k] += a(k, c);
					row[k * m + c] -= a(r, k);
				}
				rows.push_back(std::move(row));
			}
	}
	if (rows.empty())
		return Subspace::full(m * m);
	return kernel(Matrix::from_rows(m * m, rows));
}

bool is_simple(const LieAlgebra& g)
{
	if (g.dim == 0)
		return false;
	if (rank(killing_form(g)) != g.dim)
		return false;
	if (ad_commutant(g).dim() != 1)
		return false;
	for (std::size_t i = 0; i < g.dim; ++i)
		if (!lie_ideal_generated(g, {unit_vector(g.dim, i)}).is_full())
			return false;
	return true;
}

}  // namespace gls
