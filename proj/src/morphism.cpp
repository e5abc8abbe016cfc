#include "gls/morphism.hpp"

#include "gls/free_lie.hpp"

#include <stdexcept>

namespace gls {

std::optional<Vector> solve(const Matrix& m, const Vector& t)
{
	if (t.size() != m.rows())
		throw DimensionMismatch("right-hand side has wrong length");
	Matrix aug(m.rows(), m.cols() + 1);
	for (std::size_t r = 0; r < m.rows(); ++r) {
		for (std::size_t c = 0; c < m.cols(); ++c)
			aug(r, c) = m(r, c);
		aug(r, m.cols()) = t[r];
	}
	const RrefResult rr = rref(std::move(aug), m.cols());
	for (std::size_t r = rr.rank(); r < m.rows(); ++r)
		if (!is_zero(rr.reduced(r, m.cols())))
			return std::nullopt;
	Vector z(m.cols());
	for (std::size_t i = 0; i < rr.rank(); ++i)
		z[rr.pivots[i]] = rr.reduced(i, m.cols());
	return z;
}

namespace {

// f on degree `degree` from witnesses with left factor at degree `left`.
std::optional<Matrix> by_witnesses(const GradedLieSuperalgebra& a, const GradedLieSuperalgebra& b, const DegreeMaps& f,
                                   int degree, int left)
{
	if (a.dim(degree) == 0)
		return Matrix(b.dim(degree), 0);
	BracketExpression e;
	try {
		e = bracket_witnesses(a, degree, left);
	} catch (const std::invalid_argument&) {
		return std::nullopt;
	}
	const Matrix& fl = f.at(left);
	const Matrix& fr = f.at(degree - left);
	Matrix m(b.dim(degree), a.dim(degree));
	for (std::size_t r = 0; r < e.rows.size(); ++r) {
		Vector col(b.dim(degree));
		for (const auto& t : e.rows[r])
			axpy(t.coeff, b.bracket(left, fl.column(t.left), degree - left, fr.column(t.right)), col);
		for (std::size_t i = 0; i < col.size(); ++i)
			m(i, r) = col[i];
	}
	return m;
}

// f on degree k <= 0 from [f(x), f(u)] = f([x,u]).
std::optional<Matrix> by_probing(const GradedLieSuperalgebra& a, const GradedLieSuperalgebra& b, const DegreeMaps& f, int k)
{
	const Matrix& f1 = f.at(1);
	const Matrix& fk1 = f.at(k + 1);
	const std::size_t n1 = a.dim(1);
	const std::size_t len = b.dim(k + 1);
	Matrix sys(n1 * len, b.dim(k));
	for (std::size_t y = 0; y < b.dim(k); ++y)
		for (std::size_t u = 0; u < n1; ++u) {
			const Vector r = b.bracket(k, unit_vector(b.dim(k), y), 1, f1.column(u));
			for (std::size_t t = 0; t < len; ++t)
				sys(u * len + t, y) = r[t];
		}
	Matrix m(b.dim(k), a.dim(k));
	for (std::size_t x = 0; x < a.dim(k); ++x) {
		Vector rhs(n1 * len);
		for (std::size_t u = 0; u < n1; ++u) {
			const Vector r = fk1 * a.constant(k, x, 1, u);
			for (std::size_t t = 0; t < len; ++t)
				rhs[u * len + t] = r[t];
		}
		auto z = solve(sys, rhs);
		if (!z)
			return std::nullopt;
		for (std::size_t i = 0; i < z->size(); ++i)
			m(i, x) = (*z)[i];
	}
	return m;
}

}  // namespace

std::optional<DegreeMaps> extend_local_morphism(const GradedLieSuperalgebra& a, const GradedLieSuperalgebra& b,
                                                DegreeMaps known)
{
	if (!known.count(1))
		throw std::invalid_argument("the degree-1 map is required");
	const Window w = a.window();
	for (int p = 2; p <= w.max; ++p) {
		if (known.count(p))
			continue;
		auto m = by_witnesses(a, b, known, p, 1);
		if (!m)
			return std::nullopt;
		known[p] = std::move(*m);
	}
	for (int k = 0; k >= w.min; --k) {
		if (known.count(k))
			continue;
		std::optional<Matrix> m;
		if (k <= -2 && known.count(-1))
			m = by_witnesses(a, b, known, k, -1);
		if (!m)
			m = by_probing(a, b, known, k);
		if (!m)
			return std::nullopt;
		known[k] = std::move(*m);
	}
	return known;
}

IsomorphismReport check_isomorphism(const GradedLieSuperalgebra& a, const GradedLieSuperalgebra& b, const DegreeMaps& f)
{
	IsomorphismReport r;
	const Window w = a.window();
	if (!(w == b.window())) {
		r.failure = "windows differ";
		return r;
	}
	r.bijective = true;
	for (int k = w.min; k <= w.max; ++k) {
		if (a.dim(k) != b.dim(k)) {
			r.bijective = false;
			r.failure = "dimension differs at degree " + std::to_string(k);
			return r;
		}
		if (a.dim(k) == 0)
			continue;
		auto it = f.find(k);
		if (it == f.end() || it->second.rows() != b.dim(k) || it->second.cols() != a.dim(k) || rank(it->second) != a.dim(k)) {
			r.bijective = false;
			r.failure = "map is not invertible at degree " + std::to_string(k);
			return r;
		}
	}
	for (int i = w.min; i <= w.max; ++i)
		for (int j = i; j <= w.max; ++j) {
			if (!w.contains(i + j) || a.dim(i) == 0 || a.dim(j) == 0 || a.dim(i + j) == 0)
				continue;
			const Matrix& fi = f.at(i);
			const Matrix& fj = f.at(j);
			const Matrix& fij = f.at(i + j);
			for (std::size_t x = 0; x < a.dim(i); ++x)
				for (std::size_t y = 0; y < a.dim(j); ++y)
					if (fij * a.constant(i, x, j, y) != b.bracket(i, fi.column(x), j, fj.column(y))) {
						r.failure = "bracket not preserved at degrees (" + std::to_string(i) + "," + std::to_string(j) +
						            ") basis (" + std::to_string(x) + "," + std::to_string(y) + ")";
						return r;
					}
		}
	r.preserves_bracket = true;
	return r;
}

}  // namespace gls
