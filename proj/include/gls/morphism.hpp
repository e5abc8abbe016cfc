#pragma once

// Degree-preserving linear maps between graded Lie superalgebras, extended
// from low degrees and checked for being isomorphisms.

#include "gls/algebra.hpp"

#include <map>
#include <optional>
#include <string>

namespace gls {

/// maps[k]: A_k -> B_k (rows = dim B_k, columns = dim A_k).
using DegreeMaps = std::map<int, Matrix>;

/// Completes `known` (which must contain degree 1) to every degree of A's
/// window: degrees >= 2 through witnesses [A_1, A_p-1] (and degree -1 via
/// [A_-1, ...] below -1 when degree -1 is known), remaining degrees <= 0 by
/// solving [f(x), f(u)] = f([x,u]) for all u in A_1. Returns nullopt when a
/// needed degree is not generated or the system has no solution.
std::optional<DegreeMaps> extend_local_morphism(const GradedLieSuperalgebra& a, const GradedLieSuperalgebra& b,
                                                DegreeMaps known);

struct IsomorphismReport {
	bool bijective = false;
	bool preserves_bracket = false;
	std::optional<std::string> failure;

	bool isomorphic() const { return bijective && preserves_bracket; }
};

/// Every block square and invertible, f[x,y] = [fx, fy] on all basis pairs.
IsomorphismReport check_isomorphism(const GradedLieSuperalgebra& a, const GradedLieSuperalgebra& b,
                                    const DegreeMaps& f);

/// Unique-or-first solution of m z = t, nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& t);

}  // namespace gls
