#include "gls/extension.hpp"

#include <stdexcept>

namespace gls {

Vector extend_mixed_bracket(const GradedLieSuperalgebra& g, const BracketExpression& expr, std::size_t row,
                            int degree, const Vector& z)
{
	const int xd = expr.left_degree;
	const int yd = expr.right_degree;
	const int s = super_sign(xd, yd);
	Vector out(g.dim(expr.degree + degree));
	for (const auto& t : expr.rows.at(row)) {
		const Vector x = unit_vector(g.dim(xd), t.left);
		const Vector y = unit_vector(g.dim(yd), t.right);
		Vector v = g.bracket(xd, x, yd + degree, g.bracket(yd, y, degree, z));
		axpy(-s, g.bracket(yd, y, xd + degree, g.bracket(xd, x, degree, z)), v);
		axpy(t.coeff, v, out);
	}
	return out;
}

namespace {

// Copies every constant of src whose three degrees lie in both windows.
void copy_constants(const GradedLieSuperalgebra& src, GradedLieSuperalgebra& dst)
{
	const Window ws = src.window();
	const Window wd = dst.window();
	for (int i : src.degrees())
		for (int j : src.degrees()) {
			if (!ws.contains(i + j) || !wd.contains(i) || !wd.contains(j) || !wd.contains(i + j))
				continue;
			for (std::size_t a = 0; a < src.dim(i); ++a)
				for (std::size_t b = 0; b < src.dim(j); ++b)
					dst.set_constant_unchecked(i, a, j, b, src.constant(i, a, j, b));
		}
}

GradedSpace space_with(const GradedLieSuperalgebra& g, Window w)
{
	GradedSpace s(w);
	for (int k : g.degrees())
		if (w.contains(k))
			s.set_component(k, g.space().labels(k));
	return s;
}

BracketExpression expression_from(const SpanWitness& sw, int degree, int left, int right, std::size_t right_dim)
{
	BracketExpression e;
	e.degree = degree;
	e.left_degree = left;
	e.right_degree = right;
	for (const auto& c : sw.coefficients) {
		std::vector<BracketExpression::Term> terms;
		for (std::size_t k = 0; k < c.size(); ++k)
			if (!is_zero(c[k]))
				terms.push_back({k / right_dim, k % right_dim, c[k]});
		e.rows.push_back(std::move(terms));
	}
	return e;
}

struct NegativeTower {
	GradedLieSuperalgebra algebra;
	std::map<int, BracketExpression> witnesses;
};

// Degrees -2..lo of the transitive extension of a local algebra, each element
// of degree -q stored as the map u -> [x,u] from G_1 to degree -q+1.
NegativeTower transitive_negative(const GradedLieSuperalgebra& local, int lo)
{
	NegativeTower out;
	GradedLieSuperalgebra b = local;
	const std::size_t n1 = local.dim(1);
	for (int q = 2; -q >= lo; ++q) {
		const int prev = -q + 1;
		const std::size_t m = b.dim(prev);
		const std::size_t len = n1 * m;
		const int s_vm = super_sign(-1, prev);
		std::vector<Vector> candidates;
		for (std::size_t i = 0; i < b.dim(-1); ++i)
			for (std::size_t j = 0; j < m; ++j) {
				Vector h(len);
				const Vector v = unit_vector(b.dim(-1), i);
				const Vector mj = unit_vector(m, j);
				for (std::size_t a = 0; a < n1; ++a) {
					const Vector ua = unit_vector(n1, a);
					Vector slice = b.bracket(-1, v, prev + 1, b.bracket(prev, mj, 1, ua));
					axpy(-s_vm, b.bracket(prev, mj, 0, b.bracket(-1, v, 1, ua)), slice);
					std::copy(slice.begin(), slice.end(), h.begin() + static_cast<std::ptrdiff_t>(a * m));
				}
				candidates.push_back(std::move(h));
			}
		const SpanWitness sw = span_with_witness(len, candidates);
		const Subspace& span = sw.span;
		const std::size_t rank = span.dim();

		GradedSpace space = space_with(b, Window{-q, 1});
		space.set_component(-q, rank);
		GradedLieSuperalgebra c = b.embedded(space);
		c.set_provenance(-q, "transitive: span of [G_-1, G_" + std::to_string(prev) + "] in Hom(G_1, G_" +
		                         std::to_string(prev) + ")");

		auto slice_of = [&](const Vector& h, std::size_t a) {
			return Vector(h.begin() + static_cast<std::ptrdiff_t>(a * m),
			              h.begin() + static_cast<std::ptrdiff_t>((a + 1) * m));
		};
		auto coords = [&](const Vector& h) {
			if (!span.contains(h))
				throw std::logic_error("transitive extension: bracket leaves the realized component");
			return span.coordinates(h);
		};

		for (std::size_t x = 0; x < rank; ++x) {
			const Vector hx = span.basis_vector(x);
			for (std::size_t a = 0; a < n1; ++a)
				c.set_constant(-q, x, 1, a, slice_of(hx, a));
			for (std::size_t t = 0; t < c.dim(0); ++t) {
				const Vector g = unit_vector(c.dim(0), t);
				Vector h(len);
				for (std::size_t a = 0; a < n1; ++a) {
					const Vector w = c.constant(0, t, 1, a);
					Vector slice(m);
					for (std::size_t bb = 0; bb < n1; ++bb)
						if (!is_zero(w[bb]))
							axpy(w[bb], slice_of(hx, bb), slice);
					axpy(-1, c.bracket(0, g, prev, slice_of(hx, a)), slice);
					std::copy(slice.begin(), slice.end(), h.begin() + static_cast<std::ptrdiff_t>(a * m));
				}
				c.set_constant(-q, x, 0, t, coords(h));
			}
		}
		for (int r = 1; 2 * r <= q; ++r) {
			const int s = q - r;
			const int sgn = super_sign(-r, -s);
			for (std::size_t x = 0; x < c.dim(-r); ++x)
				for (std::size_t y = (r == s ? x : 0); y < c.dim(-s); ++y) {
					const Vector ex = unit_vector(c.dim(-r), x);
					const Vector ey = unit_vector(c.dim(-s), y);
					Vector h(len);
					for (std::size_t a = 0; a < n1; ++a) {
						const Vector ua = unit_vector(n1, a);
						Vector slice = c.bracket(-r, ex, -s + 1, c.bracket(-s, ey, 1, ua));
						axpy(-sgn, c.bracket(-s, ey, -r + 1, c.bracket(-r, ex, 1, ua)), slice);
						std::copy(slice.begin(), slice.end(), h.begin() + static_cast<std::ptrdiff_t>(a * m));
					}
					c.set_constant(-r, x, -s, y, coords(h));
				}
		}
		out.witnesses.emplace(-q, expression_from(sw, -q, -1, prev, m));
		b = std::move(c);
	}
	out.algebra = std::move(b);
	return out;
}

}  // namespace

GradedLieSuperalgebra local_part(const GradedLieSuperalgebra& g)
{
	const Window w{-1, 1};
	if (!g.window().contains(-1) || !g.window().contains(1))
		throw std::invalid_argument("window does not contain the local part");
	GradedLieSuperalgebra out(space_with(g, w));
	copy_constants(g, out);
	for (int k = -1; k <= 1; ++k)
		if (g.provenance().count(k))
			out.set_provenance(k, g.provenance().at(k));
	return out;
}

void require_local(const GradedLieSuperalgebra& g)
{
	if (!(g.window() == Window{-1, 1}))
		throw std::invalid_argument("local Lie superalgebra must live on the window [-1,1]");
	const IdentityReport r = check_super_identities(g);
	if (!r.passed)
		throw std::invalid_argument("local identities fail (" + r.first_violation->kind + ")");
}

GradedLieSuperalgebra extend_free(const GradedLieSuperalgebra& g, int max_degree)
{
	if (g.window().max != 1)
		throw std::invalid_argument("extend_free expects top degree 1");
	if (max_degree <= 1)
		return g;
	const int lo = g.window().min;
	const FreeLieSuper f = free_lie_super(g.dim(1), Window{1, max_degree});
	GradedSpace space = space_with(g, Window{lo, max_degree});
	for (int p = 2; p <= max_degree; ++p)
		space.set_component(p, f.algebra.dim(p));
	GradedLieSuperalgebra b = g.embedded(space);
	copy_constants(f.algebra, b);
	for (int p = 2; p <= max_degree; ++p) {
		b.set_provenance(p, "free over degree 1");
		const BracketExpression& w = f.witnesses.at(p);
		for (int k = lo; k <= 0; ++k)
			for (std::size_t r = 0; r < b.dim(p); ++r)
				for (std::size_t t = 0; t < b.dim(k); ++t)
					b.set_constant(p, r, k, t, extend_mixed_bracket(b, w, r, k, unit_vector(b.dim(k), t)));
	}
	b.set_truncated(true);
	return b;
}

GradedLieSuperalgebra maximal_extension(const GradedLieSuperalgebra& local, Window window)
{
	require_local(local);
	if (window.min > -1 || window.max < 1)
		throw std::invalid_argument("extension window must contain [-1,1]");
	GradedLieSuperalgebra neg = extend_free(local.flipped(), -window.min).flipped();
	GradedLieSuperalgebra out = extend_free(neg, window.max);
	out.set_truncated(window.min < -1 || window.max > 1);
	return out;
}

GradedLieSuperalgebra minimal_extension(const GradedLieSuperalgebra& local, Window window)
{
	require_local(local);
	if (window.min > -1 || window.max < 1)
		throw std::invalid_argument("extension window must contain [-1,1]");
	NegativeTower neg = transitive_negative(local, window.min);
	NegativeTower pos_flipped = transitive_negative(local.flipped(), -window.max);
	const GradedLieSuperalgebra pos = pos_flipped.algebra.flipped();

	GradedSpace space(window);
	for (int k = window.min; k <= window.max; ++k)
		space.set_component(k, k <= 1 ? neg.algebra.space().labels(k) : pos.space().labels(k));
	GradedLieSuperalgebra out(space);
	copy_constants(neg.algebra, out);
	copy_constants(pos, out);
	for (const auto& [k, note] : neg.algebra.provenance())
		out.set_provenance(k, note);
	for (const auto& [k, note] : pos.provenance())
		if (k >= 2)
			out.set_provenance(k, note);
	for (int q = 2; -q >= window.min; ++q) {
		const BracketExpression& w = neg.witnesses.at(-q);
		for (int p = 2; p <= window.max; ++p)
			for (std::size_t r = 0; r < out.dim(-q); ++r)
				for (std::size_t t = 0; t < out.dim(p); ++t)
					out.set_constant(-q, r, p, t, extend_mixed_bracket(out, w, r, p, unit_vector(out.dim(p), t)));
	}
	// nonzero edge components may bracket past the window
	out.set_truncated(out.dim(window.max) > 0 || out.dim(window.min) > 0);
	return out;
}

GradedLieSuperalgebra minimal_extension_via_maximal(const GradedLieSuperalgebra& local, Window window)
{
	const GradedLieSuperalgebra max = maximal_extension(local, window);
	const Family ideal = maximal_trivial_ideal(max, 2, -2);
	Subquotient q = quotient(max, ideal);
	q.algebra.set_truncated(q.algebra.dim(window.max) > 0 || q.algebra.dim(window.min) > 0);
	return std::move(q.algebra);
}

}  // namespace gls
