#include "gls/linalg.hpp"

#include <algorithm>
#include <utility>

namespace gls {

Matrix Matrix::identity(std::size_t n)
{
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows)
{
	Matrix m(rows.size(), cols);
	for (std::size_t r = 0; r < rows.size(); ++r)
		m.set_row(r, rows[r]);
	return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols)
{
	Matrix m(rows, cols.size());
	for (std::size_t c = 0; c < cols.size(); ++c) {
		if (cols[c].size() != rows)
			throw DimensionMismatch("column length mismatch");
		for (std::size_t r = 0; r < rows; ++r)
			m(r, c) = cols[c][r];
	}
	return m;
}

Vector Matrix::row(std::size_t r) const
{
	return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
	              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
	Vector v(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		v[r] = (*this)(r, c);
	return v;
}

void Matrix::set_row(std::size_t r, const Vector& v)
{
	if (v.size() != cols_)
		throw DimensionMismatch("row length mismatch");
	std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

Matrix Matrix::transpose() const
{
	Matrix t(cols_, rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			t(c, r) = (*this)(r, c);
	return t;
}

Vector Matrix::operator*(const Vector& v) const
{
	if (v.size() != cols_)
		throw DimensionMismatch("matrix-vector size mismatch");
	Vector out(rows_);
	for (std::size_t c = 0; c < cols_; ++c) {
		if (gls::is_zero(v[c]))
			continue;
		for (std::size_t r = 0; r < rows_; ++r)
			if (!gls::is_zero((*this)(r, c)))
				out[r] += (*this)(r, c) * v[c];
	}
	return out;
}

Matrix Matrix::operator*(const Matrix& m) const
{
	if (cols_ != m.rows_)
		throw DimensionMismatch("matrix product size mismatch");
	Matrix out(rows_, m.cols_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t k = 0; k < cols_; ++k) {
			const Scalar& a = (*this)(i, k);
			if (gls::is_zero(a))
				continue;
			for (std::size_t j = 0; j < m.cols_; ++j)
				if (!gls::is_zero(m(k, j)))
					out(i, j) += a * m(k, j);
		}
	return out;
}

Matrix Matrix::operator+(const Matrix& m) const
{
	if (rows_ != m.rows_ || cols_ != m.cols_)
		throw DimensionMismatch("matrix sum size mismatch");
	Matrix out = *this;
	for (std::size_t i = 0; i < data_.size(); ++i)
		out.data_[i] += m.data_[i];
	return out;
}

Matrix Matrix::operator-(const Matrix& m) const
{
	if (rows_ != m.rows_ || cols_ != m.cols_)
		throw DimensionMismatch("matrix difference size mismatch");
	Matrix out = *this;
	for (std::size_t i = 0; i < data_.size(); ++i)
		out.data_[i] -= m.data_[i];
	return out;
}

bool Matrix::is_zero() const
{
	return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return gls::is_zero(s); });
}

namespace {

template <bool Parallel>
RrefResult rref_impl(Matrix m, std::size_t pivot_limit)
{
	const std::size_t rows = m.rows();
	const std::size_t cols = m.cols();
	const std::size_t limit = std::min(pivot_limit, cols);
	RrefResult result;
	std::size_t r = 0;
	std::vector<std::size_t> support;
	for (std::size_t c = 0; c < limit && r < rows; ++c) {
		std::size_t p = r;
		while (p < rows && is_zero(m(p, c)))
			++p;
		if (p == rows)
			continue;
		if (p != r)
			for (std::size_t j = c; j < cols; ++j)
				swap(m(p, j), m(r, j));
		const Scalar inv = 1 / m(r, c);
		support.clear();
		for (std::size_t j = c; j < cols; ++j)
			if (!is_zero(m(r, j))) {
				m(r, j) *= inv;
				support.push_back(j);
			}
		const auto n_rows = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static) if (Parallel && rows > 32)
		for (std::ptrdiff_t i = 0; i < n_rows; ++i) {
			const auto ui = static_cast<std::size_t>(i);
			if (ui == r || is_zero(m(ui, c)))
				continue;
			const Scalar f = m(ui, c);
			for (std::size_t j : support)
				m(ui, j) -= f * m(r, j);
		}
		result.pivots.push_back(c);
		++r;
	}
	result.reduced = std::move(m);
	return result;
}

}  // namespace

RrefResult rref(Matrix m, std::size_t pivot_limit) { return rref_impl<true>(std::move(m), pivot_limit); }

RrefResult rref_serial(Matrix m, std::size_t pivot_limit)
{
	return rref_impl<false>(std::move(m), pivot_limit);
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Subspace kernel(const Matrix& m)
{
	const auto rr = rref(m);
	const std::size_t n = m.cols();
	std::vector<bool> is_pivot(n, false);
	for (auto p : rr.pivots)
		is_pivot[p] = true;
	std::vector<Vector> vecs;
	for (std::size_t f = 0; f < n; ++f) {
		if (is_pivot[f])
			continue;
		Vector v(n);
		v[f] = 1;
		for (std::size_t i = 0; i < rr.pivots.size(); ++i)
			if (!is_zero(rr.reduced(i, f)))
				v[rr.pivots[i]] = -rr.reduced(i, f);
		vecs.push_back(std::move(v));
	}
	return Subspace::span(n, vecs);
}

Subspace Subspace::full(std::size_t ambient)
{
	Subspace s;
	s.basis_ = Matrix::identity(ambient);
	s.pivots_.resize(ambient);
	for (std::size_t i = 0; i < ambient; ++i)
		s.pivots_[i] = i;
	return s;
}

Subspace Subspace::from_rref(RrefResult r)
{
	Subspace s(r.reduced.cols());
	const std::size_t k = r.rank();
	Matrix b(k, r.reduced.cols());
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = 0; j < r.reduced.cols(); ++j)
			b(i, j) = r.reduced(i, j);
	s.basis_ = std::move(b);
	s.pivots_ = std::move(r.pivots);
	return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors)
{
	std::vector<Vector> nz;
	for (const auto& v : vectors) {
		if (v.size() != ambient)
			throw DimensionMismatch("spanning vector has wrong length");
		if (!gls::is_zero(v))
			nz.push_back(v);
	}
	if (nz.empty())
		return Subspace(ambient);
	return from_rref(rref(Matrix::from_rows(ambient, nz)));
}

std::vector<Vector> Subspace::basis_vectors() const
{
	std::vector<Vector> out;
	out.reserve(dim());
	for (std::size_t i = 0; i < dim(); ++i)
		out.push_back(basis_.row(i));
	return out;
}

Vector Subspace::reduce(const Vector& v) const
{
	if (v.size() != ambient_dim())
		throw DimensionMismatch("vector length does not match ambient dimension");
	Vector r = v;
	for (std::size_t i = 0; i < pivots_.size(); ++i) {
		const Scalar f = r[pivots_[i]];
		if (gls::is_zero(f))
			continue;
		for (std::size_t j = pivots_[i]; j < ambient_dim(); ++j)
			if (!gls::is_zero(basis_(i, j)))
				r[j] -= f * basis_(i, j);
	}
	return r;
}

bool Subspace::contains(const Vector& v) const { return gls::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const
{
	if (other.ambient_dim() != ambient_dim())
		throw DimensionMismatch("subspace ambient dimensions differ");
	for (std::size_t i = 0; i < other.dim(); ++i)
		if (!contains(other.basis_.row(i)))
			return false;
	return true;
}

Vector Subspace::coordinates(const Vector& v) const
{
	Vector c(dim());
	for (std::size_t i = 0; i < dim(); ++i)
		c[i] = v[pivots_[i]];
	return c;
}

Vector Subspace::combine(const Vector& coords) const
{
	if (coords.size() != dim())
		throw DimensionMismatch("coordinate vector has wrong length");
	Vector v(ambient_dim());
	for (std::size_t i = 0; i < dim(); ++i) {
		if (gls::is_zero(coords[i]))
			continue;
		for (std::size_t j = pivots_[i]; j < ambient_dim(); ++j)
			if (!gls::is_zero(basis_(i, j)))
				v[j] += coords[i] * basis_(i, j);
	}
	return v;
}

Subspace sum(const Subspace& a, const Subspace& b)
{
	if (a.ambient_dim() != b.ambient_dim())
		throw DimensionMismatch("sum: ambient dimensions differ");
	auto vecs = a.basis_vectors();
	for (auto& v : b.basis_vectors())
		vecs.push_back(std::move(v));
	return Subspace::span(a.ambient_dim(), vecs);
}

Subspace intersect(const Subspace& a, const Subspace& b)
{
	if (a.ambient_dim() != b.ambient_dim())
		throw DimensionMismatch("intersect: ambient dimensions differ");
	std::vector<Vector> residues;
	for (std::size_t i = 0; i < a.dim(); ++i)
		residues.push_back(b.reduce(a.basis_vector(i)));
	return kernel_combination(a, residues);
}

bool contains(const Subspace& a, const Subspace& b) { return a.contains(b); }

Subspace quotient_basis(const Subspace& a, const Subspace& b)
{
	if (a.ambient_dim() != b.ambient_dim())
		throw DimensionMismatch("quotient: ambient dimensions differ");
	std::vector<Vector> reduced;
	for (std::size_t i = 0; i < a.dim(); ++i)
		reduced.push_back(b.reduce(a.basis_vector(i)));
	return Subspace::span(a.ambient_dim(), reduced);
}

Subspace kernel_combination(const Subspace& domain, const std::vector<Vector>& residues)
{
	if (residues.size() != domain.dim())
		throw DimensionMismatch("one residue per domain basis vector expected");
	if (domain.dim() == 0)
		return domain;
	const std::size_t len = residues.front().size();
	const Subspace coeffs = kernel(Matrix::from_columns(len, residues));
	std::vector<Vector> vecs;
	for (std::size_t i = 0; i < coeffs.dim(); ++i)
		vecs.push_back(domain.combine(coeffs.basis_vector(i)));
	return Subspace::span(domain.ambient_dim(), vecs);
}

Subspace preimage(const Subspace& w, const std::function<Vector(const Vector&)>& f, const Subspace& target)
{
	std::vector<Vector> residues;
	for (std::size_t i = 0; i < w.dim(); ++i)
		residues.push_back(target.reduce(f(w.basis_vector(i))));
	return kernel_combination(w, residues);
}

SpanWitness span_with_witness(std::size_t ambient, const std::vector<Vector>& vectors)
{
	const std::size_t k = vectors.size();
	SpanWitness out;
	if (k == 0) {
		out.span = Subspace(ambient);
		return out;
	}
	Matrix aug(k, ambient + k);
	for (std::size_t i = 0; i < k; ++i) {
		if (vectors[i].size() != ambient)
			throw DimensionMismatch("spanning vector has wrong length");
		for (std::size_t j = 0; j < ambient; ++j)
			aug(i, j) = vectors[i][j];
		aug(i, ambient + i) = 1;
	}
	auto rr = rref(std::move(aug), ambient);
	const std::size_t rk = rr.rank();
	Matrix basis(rk, ambient);
	for (std::size_t i = 0; i < rk; ++i) {
		for (std::size_t j = 0; j < ambient; ++j)
			basis(i, j) = rr.reduced(i, j);
		Vector c(k);
		for (std::size_t j = 0; j < k; ++j)
			c[j] = rr.reduced(i, ambient + j);
		out.coefficients.push_back(std::move(c));
	}
	RrefResult b;
	b.reduced = std::move(basis);
	b.pivots = std::move(rr.pivots);
	out.span = Subspace::from_rref(std::move(b));
	return out;
}

Subspace largest_invariant_subspace(const std::vector<Matrix>& operators, const Subspace& w)
{
	for (const auto& a : operators)
		if (a.rows() != w.ambient_dim() || a.cols() != w.ambient_dim())
			throw DimensionMismatch("operator is not square of the ambient size");
	Subspace cur = w;
	while (!cur.is_zero()) {
		std::vector<Vector> residues;
		for (std::size_t j = 0; j < cur.dim(); ++j) {
			const Vector b = cur.basis_vector(j);
			Vector r;
			for (const auto& a : operators) {
				const Vector red = cur.reduce(a * b);
				r.insert(r.end(), red.begin(), red.end());
			}
			residues.push_back(std::move(r));
		}
		if (operators.empty())
			break;
		Subspace next = kernel_combination(cur, residues);
		if (next.dim() == cur.dim())
			break;
		cur = std::move(next);
	}
	return cur;
}

Subspace invariant_closure(const std::vector<Matrix>& operators, const Subspace& w)
{
	Subspace cur = w;
	for (;;) {
		std::vector<Vector> vecs = cur.basis_vectors();
		for (std::size_t j = 0; j < cur.dim(); ++j)
			for (const auto& a : operators)
				vecs.push_back(a * cur.basis_vector(j));
		Subspace next = Subspace::span(w.ambient_dim(), vecs);
		if (next.dim() == cur.dim())
			return cur;
		cur = std::move(next);
	}
}

}  // namespace gls
