#pragma once

// Z-graded super vector spaces on a finite window. Parity is the degree mod 2
// and is never stored.

#include "gls/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace gls {

struct Window {
	int min = 0;
	int max = 0;

	bool contains(int k) const { return min <= k && k <= max; }
	friend bool operator==(const Window&, const Window&) = default;
};

/// Window from min to max; throws std::invalid_argument if min > max.
Window make_window(int min, int max);

inline int parity(int degree) { return degree & 1; }

/// (-1)^{ij} for homogeneous elements of degrees i and j.
inline int super_sign(int i, int j) { return (parity(i) && parity(j)) ? -1 : 1; }

class GradedSpace {
public:
	GradedSpace() = default;
	explicit GradedSpace(Window w) : window_(w) {}

	const Window& window() const { return window_; }
	std::size_t dim(int k) const;
	std::size_t total_dim() const;
	const std::vector<std::string>& labels(int k) const;

	/// Sets the basis at degree k. Labels default to "x<k>_<i>".
	void set_component(int k, std::size_t dim);
	void set_component(int k, std::vector<std::string> labels);

	friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

private:
	Window window_;
	std::map<int, std::vector<std::string>> labels_;
};

/// Degree-k component of the result is degree k+s of v. Shifting by s and
/// then by -s gives back v.
GradedSpace shift_space(const GradedSpace& v, int s);

/// Per-degree coefficient vectors; absent degrees are zero.
struct GradedVector {
	std::map<int, Vector> parts;

	static GradedVector homogeneous(int degree, Vector v);
	bool is_zero() const;
	/// Drops zero components so that equal vectors compare equal.
	GradedVector canonical() const;

	friend bool operator==(const GradedVector& a, const GradedVector& b)
	{
		return a.canonical().parts == b.canonical().parts;
	}
};

/// Homogeneous map of degree `shift`: blocks[k] sends degree k to k+shift.
struct GradedMap {
	int shift = 0;
	std::map<int, Matrix> blocks;

	GradedMap compose_after(const GradedMap& first) const;  // (*this) o first
};

struct ApplyResult {
	GradedVector value;
	bool truncated = false;  // a nonzero component would have left the target window
};

ApplyResult apply(const GradedMap& map, const GradedVector& x, const Window& target);

/// Shifts source and target degrees of the map by s (blocks[k] moves to k-s).
GradedMap shift_map(const GradedMap& map, int s);

}  // namespace gls
