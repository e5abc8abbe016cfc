#pragma once

// Graded Lie superalgebras on a finite window, stored as structure constants,
// plus the abstract bracket interface shared with the lazily evaluated
// ambient algebras (tensor algebra, Kantor towers).

#include "gls/graded_space.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gls {

/// Anything with coordinates per degree and a bilinear bracket.
class Ambient {
public:
	virtual ~Ambient() = default;
	virtual Window window() const = 0;
	virtual std::size_t dim(int k) const = 0;
	/// [x,y] for x of degree i and y of degree j. Requires i+j in the window.
	virtual Vector bracket(int i, const Vector& x, int j, const Vector& y) const = 0;

	bool defined(int i, int j) const
	{
		const Window w = window();
		return w.contains(i) && w.contains(j) && w.contains(i + j);
	}
};

class GradedLieSuperalgebra : public Ambient {
public:
	GradedLieSuperalgebra() = default;
	explicit GradedLieSuperalgebra(GradedSpace space);

	const GradedSpace& space() const { return space_; }
	Window window() const override { return space_.window(); }
	std::size_t dim(int k) const override { return space_.dim(k); }

	/// [b^i_a, b^j_b] as a coordinate vector at degree i+j.
	const Vector& constant(int i, std::size_t a, int j, std::size_t b) const;
	/// Sets [b^i_a, b^j_b] = v and [b^j_b, b^i_a] = -(-1)^{ij} v. Throws if this
	/// is inconsistent (nonzero square of an even basis vector).
	void set_constant(int i, std::size_t a, int j, std::size_t b, Vector v);
	/// Sets one entry only, leaving the mirrored one alone (defect injection).
	void set_constant_unchecked(int i, std::size_t a, int j, std::size_t b, Vector v);

	Vector bracket(int i, const Vector& x, int j, const Vector& y) const override;
	/// Bracket of inhomogeneous elements; components landing outside the window
	/// are dropped and reported through `truncated`.
	GradedVector bracket(const GradedVector& x, const GradedVector& y, bool* truncated = nullptr) const;

	/// Same constants, degree k relabelled as -k.
	GradedLieSuperalgebra flipped() const;
	/// Copy into a larger space. Shared degrees must keep their dimension; new
	/// blocks start at zero.
	GradedLieSuperalgebra embedded(const GradedSpace& larger) const;

	/// True when some in-window product would land outside the window.
	bool truncated() const { return truncated_; }
	void set_truncated(bool t) { truncated_ = t; }

	const std::map<int, std::string>& provenance() const { return provenance_; }
	void set_provenance(int k, std::string note) { provenance_[k] = std::move(note); }

	std::vector<int> degrees() const;  // degrees with nonzero dimension, ascending

	friend bool operator==(const GradedLieSuperalgebra& a, const GradedLieSuperalgebra& b)
	{
		return a.space_ == b.space_ && a.blocks_ == b.blocks_;
	}

private:
	std::vector<Vector>& block(int i, int j);
	const std::vector<Vector>& block(int i, int j) const;

	GradedSpace space_;
	std::map<std::pair<int, int>, std::vector<Vector>> blocks_;
	std::map<int, std::string> provenance_;
	bool truncated_ = false;
};

/// Dimension table of any ambient over its window.
std::map<int, std::size_t> dimensions(const Ambient& a);

struct IdentityViolation {
	std::string kind;  // "antisymmetry" or "jacobi"
	std::vector<int> degrees;
	std::vector<std::size_t> indices;
};

struct IdentityReport {
	bool passed = true;
	std::size_t pairs_checked = 0;
	std::size_t triples_checked = 0;
	std::optional<IdentityViolation> first_violation;
};

/// Antisymmetry on all basis pairs and super Jacobi on all basis triples whose
/// brackets stay inside the window. Parallel over tasks; the reported witness
/// is the first one in the serial order.
IdentityReport check_super_identities(const GradedLieSuperalgebra& g);
IdentityReport check_super_identities_serial(const GradedLieSuperalgebra& g);

}  // namespace gls
