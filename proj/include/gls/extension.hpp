#pragma once

// Local Lie superalgebras and their maximal and minimal extensions.

#include "gls/free_lie.hpp"

namespace gls {

/// [b, z] for basis vector `row` of expr.degree, b = sum c [x, y], through
///   [[x,y],z] = [x,[y,z]] - (-1)^{xy} [y,[x,z]].
/// Every bracket on the right must already be stored in g.
Vector extend_mixed_bracket(const GradedLieSuperalgebra& g, const BracketExpression& expr, std::size_t row,
                            int degree, const Vector& z);

/// Degrees -1, 0, 1 of g with the brackets landing among them.
GradedLieSuperalgebra local_part(const GradedLieSuperalgebra& g);

/// Throws std::invalid_argument unless g lives in [-1,1] and satisfies the
/// local identities.
void require_local(const GradedLieSuperalgebra& g);

/// Adds degrees 2..max_degree, free on degree 1, to an algebra whose top
/// degree is 1. Mixed brackets with degrees <= 0 come from the witnesses.
GradedLieSuperalgebra extend_free(const GradedLieSuperalgebra& g, int max_degree);

/// Positive and negative parts free on degree 1 and -1.
GradedLieSuperalgebra maximal_extension(const GradedLieSuperalgebra& local, Window window);

/// The (-2,2)-transitive extension. Degree -q <= -2 is realized as the span of
/// [G_-1, G_-q+1] inside Hom(G_1, G_-q+1), and the positive side likewise
/// after flipping; brackets between the two sides come from witnesses.
GradedLieSuperalgebra minimal_extension(const GradedLieSuperalgebra& local, Window window);

/// Same algebra as minimal_extension, computed as the quotient of the maximal
/// extension by its maximal ideal above 2 and below -2. Practical only for
/// small free parts.
GradedLieSuperalgebra minimal_extension_via_maximal(const GradedLieSuperalgebra& local, Window window);

}  // namespace gls
