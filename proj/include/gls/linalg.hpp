#pragma once

// Exact linear algebra over Q: dense matrices, row reduction, kernels and
// a small subspace calculus. Every kernel/ideal computation in the library
// bottoms out here.

#include "gls/rational.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace gls {

class Matrix {
public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

	static Matrix identity(std::size_t n);
	static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
	static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

	Vector row(std::size_t r) const;
	Vector column(std::size_t c) const;
	void set_row(std::size_t r, const Vector& v);

	Matrix transpose() const;
	Vector operator*(const Vector& v) const;
	Matrix operator*(const Matrix& m) const;
	Matrix operator+(const Matrix& m) const;
	Matrix operator-(const Matrix& m) const;
	bool is_zero() const;

	friend bool operator==(const Matrix& a, const Matrix& b)
	{
		return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
	}

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<Scalar> data_;
};

struct RrefResult {
	Matrix reduced;
	std::vector<std::size_t> pivots;  // pivot column of each nonzero row, strictly increasing
	std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. The pivot of each step is the first nonzero
/// entry of the leftmost remaining nonzero column, taking the topmost row.
/// Pivot search is restricted to columns < pivot_limit (default: all), which
/// lets callers carry an augmented block along.
/// This is the OpenMP kernel; rref_serial is the reference it must match.
RrefResult rref(Matrix m, std::size_t pivot_limit = static_cast<std::size_t>(-1));
RrefResult rref_serial(Matrix m, std::size_t pivot_limit = static_cast<std::size_t>(-1));

std::size_t rank(const Matrix& m);

class Subspace;

/// {v | m v = 0}
Subspace kernel(const Matrix& m);

class DimensionMismatch : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// Subspace of Q^n stored as an RREF basis (rows nonzero, pivots strictly
/// increasing, pivot entries 1). Two subspaces are equal iff their bases are.
class Subspace {
public:
	Subspace() = default;
	explicit Subspace(std::size_t ambient) : basis_(0, ambient) {}

	static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
	static Subspace full(std::size_t ambient);
	static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
	static Subspace from_rref(RrefResult r);

	std::size_t ambient_dim() const { return basis_.cols(); }
	std::size_t dim() const { return basis_.rows(); }
	bool is_zero() const { return dim() == 0; }
	bool is_full() const { return dim() == ambient_dim(); }

	const Matrix& basis() const { return basis_; }
	const std::vector<std::size_t>& pivots() const { return pivots_; }
	Vector basis_vector(std::size_t i) const { return basis_.row(i); }
	std::vector<Vector> basis_vectors() const;

	/// Normal form of v modulo this subspace (zero exactly when v is contained).
	Vector reduce(const Vector& v) const;
	bool contains(const Vector& v) const;
	bool contains(const Subspace& other) const;
	/// Coordinates of a contained vector in the RREF basis (its pivot entries).
	Vector coordinates(const Vector& v) const;
	Vector combine(const Vector& coords) const;

	friend bool operator==(const Subspace& a, const Subspace& b)
	{
		return a.basis_ == b.basis_;
	}

private:
	Matrix basis_;
	std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Subspace& b);

/// Deterministic complement of b inside a + b: the rows of a reduced modulo b,
/// put in RREF. Their pivots avoid the pivots of b, so the quotient coordinates
/// of v are the entries of b.reduce(v) at these pivots.
Subspace quotient_basis(const Subspace& a, const Subspace& b);

/// Elements sum_j c_j d_j of the domain (basis d_j) with sum_j c_j r_j = 0,
/// where r_j = residues[j] is any linear image of d_j.
Subspace kernel_combination(const Subspace& domain, const std::vector<Vector>& residues);

/// {x in w | f(x) in target} for a linear f given on basis vectors.
Subspace preimage(const Subspace& w, const std::function<Vector(const Vector&)>& f,
                  const Subspace& target);

/// RREF span of the given vectors, together with how each basis row is
/// written as a combination of the inputs.
struct SpanWitness {
	Subspace span;
	std::vector<Vector> coefficients;  // coefficients[r][k]: weight of input k in basis row r
};
SpanWitness span_with_witness(std::size_t ambient, const std::vector<Vector>& vectors);

/// Greatest subspace of w stable under every operator (fixpoint of
/// W <- {x in W | A x in W for all A}).
Subspace largest_invariant_subspace(const std::vector<Matrix>& operators, const Subspace& w);

/// Smallest subspace containing w and stable under every operator.
Subspace invariant_closure(const std::vector<Matrix>& operators, const Subspace& w);

}  // namespace gls
