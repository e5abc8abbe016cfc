#pragma once

// Subalgebras, ideals, quotients and transitivity defects inside any ambient
// bracket space. Families are per-degree subspaces of the ambient coordinates.

#include "gls/algebra.hpp"

#include <climits>
#include <map>
#include <optional>
#include <stdexcept>

namespace gls {

using Family = std::map<int, Subspace>;

Family full_family(const Ambient& a);
Family zero_family(const Ambient& a);
/// Component at degree k, the zero subspace when absent.
Subspace component(const Family& f, const Ambient& a, int k);
std::map<int, std::size_t> family_dims(const Family& f);
bool family_is_zero(const Family& f);
Family family_sum(const Family& a, const Family& b);
bool family_contains(const Family& big, const Family& small);

/// Smallest bracket-closed family containing the seeds. Brackets landing at
/// degrees >= frozen_from are not followed: those components are taken from
/// the seeds as already closed.
Family subalgebra_generated(const Ambient& a, const Family& seeds, int frozen_from = INT_MAX);

/// Smallest family containing the seeds and absorbing brackets with `algebra`.
Family ideal_generated(const Ambient& a, const Family& algebra, const Family& seeds);

struct BracketWitness {
	int left_degree = 0;
	std::size_t left_index = 0;
	int right_degree = 0;
	std::size_t right_index = 0;
};

/// First basis pair (s in algebra, d in ideal) with [s,d] outside the ideal.
std::optional<BracketWitness> ideal_violation(const Ambient& a, const Family& algebra, const Family& ideal);

class NotAnIdeal : public std::invalid_argument {
public:
	NotAnIdeal(const std::string& what, BracketWitness w) : std::invalid_argument(what), witness(w) {}
	BracketWitness witness;
};

class NotClosed : public std::invalid_argument {
public:
	NotClosed(const std::string& what, BracketWitness w) : std::invalid_argument(what), witness(w) {}
	BracketWitness witness;
};

class WindowTooSmall : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// S/I with explicit coordinates: the basis at degree k is the RREF
/// complement of I_k inside S_k, expressed in ambient coordinates.
struct Subquotient {
	GradedLieSuperalgebra algebra;
	Family sub;
	Family ideal;
	Family complement;

	/// Coordinates of an element of S_k (given in ambient coordinates) modulo I_k.
	Vector coordinates(int k, const Vector& ambient_vector) const;
	/// Ambient representative of a coordinate vector.
	Vector lift(int k, const Vector& coords) const;
};

/// Materializes S/I on `window` (default: the ambient's). Throws NotClosed if
/// S is not a subalgebra and, unless check_ideal is false, NotAnIdeal if I is
/// not an ideal of S. The bracket evaluations run in parallel.
Subquotient materialize_subquotient(const Ambient& a, const Family& sub, const Family& ideal,
                                    std::optional<Window> window = std::nullopt, bool check_ideal = true);

/// g/I for an ideal family of g (throws NotAnIdeal with a witness otherwise).
Subquotient quotient(const GradedLieSuperalgebra& g, const Family& ideal);

enum class Side { negative, positive };

/// Side::negative probes with ad of the degree -1 component:
///   D_start = {x in S_start : [S_-1, x] = 0},  D_{k+1} = {x : [S_-1, x] in D_k},
/// upward to the top of the window. Side::positive mirrors this with S_1,
/// going downward from start (start <= -1).
Family transitivity_defect(const Ambient& a, const Family& algebra, Side side, int start);
Family transitivity_defect(const GradedLieSuperalgebra& g, Side side, int start);

/// Union of the negative-side defect from `above` and, when given, the
/// positive-side defect from `below`. Certified a posteriori to be an ideal;
/// throws WindowTooSmall otherwise.
Family maximal_trivial_ideal(const Ambient& a, const Family& algebra, int above, std::optional<int> below);
Family maximal_trivial_ideal(const GradedLieSuperalgebra& g, int above, std::optional<int> below);

/// (lo, hi)-transitivity within the window: both defect towers vanish.
bool is_transitive(const GradedLieSuperalgebra& g, int lo = -2, int hi = 2);

/// {x in S : [x, d] in D for all d in D}, degreewise.
Family idealiser(const Ambient& a, const Family& algebra, const Family& ideal);

}  // namespace gls
