#include "gls/kantor.hpp"

#include <stdexcept>

namespace gls {

UniversalAmbient::UniversalAmbient(LieAlgebra g, Representation rho, Window w)
    : g_(std::move(g)), rho_(std::move(rho)), window_(w)
{
	if (rho_.action.size() != g_.dim)
		throw DimensionMismatch("one action matrix per Lie algebra generator expected");
}

UniversalAmbient UniversalAmbient::kantor(std::size_t n, Window w) { return UniversalAmbient(gl(n), gl_fundamental(n), w); }

std::size_t UniversalAmbient::dim(int k) const
{
	if (!window_.contains(k))
		return 0;
	if (k >= 1)
		return power(n(), k);
	return power(n(), -k) * g_.dim;
}

Vector UniversalAmbient::evaluate(int degree, const Vector& x, std::size_t a) const
{
	if (degree == 0) {
		Vector out(n());
		for (std::size_t t = 0; t < g_.dim; ++t)
			if (!is_zero(x[t]))
				for (std::size_t r = 0; r < n(); ++r)
					if (!is_zero(rho_.action[t](r, a)))
						out[r] += x[t] * rho_.action[t](r, a);
		return out;
	}
	const std::size_t len = dim(degree + 1);
	return Vector(x.begin() + static_cast<std::ptrdiff_t>(a * len), x.begin() + static_cast<std::ptrdiff_t>((a + 1) * len));
}

Vector UniversalAmbient::hom_element(const Matrix& theta) const
{
	if (theta.rows() != g_.dim || theta.cols() != n())
		throw DimensionMismatch("theta must be dim(g) x dim(V)");
	Vector out(n() * g_.dim);
	for (std::size_t a = 0; a < n(); ++a)
		for (std::size_t i = 0; i < g_.dim; ++i)
			out[a * g_.dim + i] = theta(i, a);
	return out;
}

Vector UniversalAmbient::act_on_tensor(const Vector& x, int p, const Vector& t) const
{
	const Matrix m = rho_.of(x);
	const std::size_t nn = n();
	Vector out(t.size());
	for (std::size_t w = 0; w < t.size(); ++w) {
		if (is_zero(t[w]))
			continue;
		std::size_t stride = 1;
		for (int slot = p - 1; slot >= 0; --slot) {
			const std::size_t letter = (w / stride) % nn;
			const std::size_t base = w - letter * stride;
			for (std::size_t c = 0; c < nn; ++c)
				if (!is_zero(m(c, letter)))
					out[base + c * stride] += m(c, letter) * t[w];
			stride *= nn;
		}
	}
	return out;
}

Vector UniversalAmbient::mixed(int i, const Vector& x, int j, const Vector& y) const
{
	if (j == 1) {
		Vector out(dim(i + 1));
		for (std::size_t b = 0; b < n(); ++b)
			if (!is_zero(y[b]))
				axpy(y[b], evaluate(i, x, b), out);
		return out;
	}
	if (i == 0)
		return act_on_tensor(x, j, y);
	// j*y = sum_a [u_a, c_a] with c_a the right-normed bracketing of the a-th slice.
	const std::size_t tail = power(n(), j - 1);
	const int sx = parity(i) ? -1 : 1;
	Vector out(dim(i + j));
	for (std::size_t a = 0; a < n(); ++a) {
		Vector slice(y.begin() + static_cast<std::ptrdiff_t>(a * tail), y.begin() + static_cast<std::ptrdiff_t>((a + 1) * tail));
		if (is_zero(slice))
			continue;
		const Vector c = dynkin(n(), j - 1, slice);
		axpy(1, bracket(i + 1, evaluate(i, x, a), j - 1, c), out);
		axpy(sx, bracket(1, unit_vector(n(), a), i + j - 1, bracket(i, x, j - 1, c)), out);
	}
	const Scalar inv(1, j);
	for (auto& v : out)
		if (!is_zero(v))
			v *= inv;
	return out;
}

Vector UniversalAmbient::bracket(int i, const Vector& x, int j, const Vector& y) const
{
	if (x.size() != dim(i) || y.size() != dim(j))
		throw DimensionMismatch("bracket operand has wrong length");
	if (!window_.contains(i + j))
		throw std::out_of_range("bracket lands outside the window");
	if (i >= 1 && j >= 1)
		return super_commutator(n(), i, x, j, y);
	if (i <= 0 && j >= 1)
		return mixed(i, x, j, y);
	if (i >= 1 && j <= 0) {
		Vector r = mixed(j, y, i, x);
		if (super_sign(i, j) == 1)
			for (auto& v : r)
				v = -v;
		return r;
	}
	if (i == 0 && j == 0)
		return g_.bracket(x, y);
	// [[x,y],u] = [x,[y,u]] + (-1)^y [[x,u],y]
	const int sy = parity(j) ? -1 : 1;
	const std::size_t len = dim(i + j + 1);
	Vector out(dim(i + j));
	for (std::size_t a = 0; a < n(); ++a) {
		Vector s = bracket(i, x, j + 1, evaluate(j, y, a));
		axpy(sy, bracket(i + 1, evaluate(i, x, a), j, y), s);
		std::copy(s.begin(), s.end(), out.begin() + static_cast<std::ptrdiff_t>(a * len));
	}
	return out;
}

Family free_positive_family(std::size_t n, const Window& w)
{
	Family f;
	if (w.max < 1)
		return f;
	FreeLieSuper free = free_lie_super(n, Window{1, w.max});
	for (int k = 1; k <= w.max; ++k)
		f[k] = free.realization.at(k);
	return f;
}

GradedLieSuperalgebra build_universal(std::size_t n, Window w)
{
	const UniversalAmbient u = UniversalAmbient::kantor(n, w);
	Family s = free_positive_family(n, w);
	for (int k = w.min; k <= std::min(0, w.max); ++k)
		s[k] = Subspace::full(u.dim(k));
	Subquotient q = materialize_subquotient(u, s, Family{}, w, false);
	for (int k = w.min; k <= w.max; ++k)
		q.algebra.set_provenance(k, k <= 0 ? "Hom tower" : "free over U_1");
	q.algebra.set_truncated(true);
	return std::move(q.algebra);
}

RhoReport rho_morphism(const GradedLieSuperalgebra& g)
{
	const std::size_t n = g.dim(1);
	const Window w = g.window();
	const UniversalAmbient u = UniversalAmbient::kantor(n, Window{w.min, 1});
	RhoReport r;
	r.map.shift = 0;
	r.map.blocks[1] = Matrix::identity(n);
	for (int k = 0; k >= w.min; --k) {
		Matrix m(u.dim(k), g.dim(k));
		const Matrix& above = r.map.blocks.at(k + 1);
		const std::size_t len = u.dim(k + 1);
		for (std::size_t x = 0; x < g.dim(k); ++x)
			for (std::size_t a = 0; a < n; ++a) {
				const Vector s = above * g.constant(k, x, 1, a);
				for (std::size_t t = 0; t < len; ++t)
					m(a * len + t, x) = s[t];
			}
		r.map.blocks[k] = std::move(m);
	}
	for (const auto& [k, m] : r.map.blocks)
		r.injective[k] = rank(m) == m.cols();
	for (int i = w.min; i <= 1 && !r.violation; ++i)
		for (int j = i; j <= 1 && !r.violation; ++j) {
			if (i + j > 1 || i + j < w.min)
				continue;
			const Matrix& fi = r.map.blocks.at(i);
			const Matrix& fj = r.map.blocks.at(j);
			const Matrix& fij = r.map.blocks.at(i + j);
			for (std::size_t a = 0; a < g.dim(i) && !r.violation; ++a)
				for (std::size_t b = 0; b < g.dim(j); ++b) {
					const Vector lhs = fij * g.constant(i, a, j, b);
					const Vector rhs = u.bracket(i, fi.column(a), j, fj.column(b));
					if (lhs != rhs) {
						r.violation = BracketWitness{i, a, j, b};
						break;
					}
				}
		}
	r.morphism = !r.violation;
	return r;
}

Family ideal_in_free(std::size_t n, const Family& generators, const Window& w)
{
	const Family lie = free_positive_family(n, w);
	Family d;
	for (int p = 2; p <= w.max; ++p) {
		Subspace gp = generators.count(p) ? generators.at(p) : Subspace(power(n, p));
		if (!lie.at(p).contains(gp))
			throw std::invalid_argument("ideal generator at degree " + std::to_string(p) + " is not a Lie element");
		std::vector<Vector> vecs = gp.basis_vectors();
		if (p > 2)
			for (std::size_t a = 0; a < n; ++a)
				for (const auto& v : d.at(p - 1).basis_vectors())
					vecs.push_back(super_commutator(n, 1, unit_vector(n, a), p - 1, v));
		d[p] = Subspace::span(power(n, p), vecs);
	}
	return d;
}

Family degree_two_generators(std::size_t n, const Window& w)
{
	Family g;
	if (w.max >= 2)
		g[2] = free_positive_family(n, Window{1, 2}).at(2);
	return g;
}

namespace {

// {x in domain : [x, gen] in D for every generator}
Subspace idealiser_condition(const UniversalAmbient& u, int k, const Subspace& domain, const Family& generators,
                             const Family& d)
{
	std::vector<Vector> residues(domain.dim());
	for (const auto& [p, gp] : generators) {
		if (!u.window().contains(k + p))
			continue;
		const Subspace target = k + p >= 2 ? d.at(k + p) : Subspace(u.dim(k + p));
		for (std::size_t q = 0; q < gp.dim(); ++q) {
			const Vector gv = gp.basis_vector(q);
			for (std::size_t i = 0; i < domain.dim(); ++i) {
				const Vector red = target.reduce(u.bracket(k, domain.basis_vector(i), p, gv));
				residues[i].insert(residues[i].end(), red.begin(), red.end());
			}
		}
	}
	return kernel_combination(domain, residues);
}

// Maps u -> (element of `below`), as a subspace of U_k.
Subspace hom_into(const UniversalAmbient& u, int k, const Subspace& below)
{
	const std::size_t len = u.dim(k + 1);
	std::vector<Vector> vecs;
	for (std::size_t a = 0; a < u.n(); ++a)
		for (std::size_t j = 0; j < below.dim(); ++j) {
			Vector v(u.dim(k));
			const Vector b = below.basis_vector(j);
			std::copy(b.begin(), b.end(), v.begin() + static_cast<std::ptrdiff_t>(a * len));
			vecs.push_back(std::move(v));
		}
	return Subspace::span(u.dim(k), vecs);
}

Prolongation finish(const UniversalAmbient& u, Family n_fam, Family d, const Window& w, const char* note)
{
	for (const auto& [k, s] : free_positive_family(u.n(), w))
		n_fam[k] = s;
	Prolongation out{n_fam, d, materialize_subquotient(u, n_fam, d, w)};
	for (int k = w.min; k <= w.max; ++k)
		out.result.algebra.set_provenance(k, note);
	return out;
}

}  // namespace

Prolongation prolongation(std::size_t n, const Family& generators, Window w)
{
	const UniversalAmbient u = UniversalAmbient::kantor(n, w);
	const Family d = ideal_in_free(n, generators, w);
	Family nf;
	for (int k = 0; k >= w.min; --k) {
		const Subspace domain = k == 0 ? Subspace::full(u.dim(0)) : hom_into(u, k, nf.at(k + 1));
		nf[k] = idealiser_condition(u, k, domain, generators, d);
	}
	return finish(u, std::move(nf), d, w, "idealiser modulo D");
}

Prolongation reduced_prolongation(std::size_t n, const Family& generators, const Family& top, Window w)
{
	const UniversalAmbient u = UniversalAmbient::kantor(n, w);
	const Family d = ideal_in_free(n, generators, w);
	Family nf;
	for (int k = 0; k >= w.min; --k) {
		auto it = top.find(k);
		if (it != top.end()) {
			const Subspace& t = it->second;
			if (t.ambient_dim() != u.dim(k))
				throw DimensionMismatch("reduced prolongation: T_" + std::to_string(k) + " has wrong ambient dimension");
			if (k < 0 && !hom_into(u, k, nf.at(k + 1)).contains(t))
				throw std::invalid_argument("reduced prolongation: T_" + std::to_string(k) + " not inside Hom(U_1, T_" +
				                            std::to_string(k + 1) + ")");
			if (!(idealiser_condition(u, k, t, generators, d) == t))
				throw std::invalid_argument("reduced prolongation: [T_" + std::to_string(k) + ", D] not inside D");
			nf[k] = t;
		} else {
			const Subspace domain = k == 0 ? Subspace::full(u.dim(0)) : hom_into(u, k, nf.at(k + 1));
			nf[k] = idealiser_condition(u, k, domain, generators, d);
		}
	}
	return finish(u, std::move(nf), d, w, "reduced idealiser modulo D");
}

Subquotient build_P(std::size_t n, const Subspace& t_minus1, Window w)
{
	if (w.min > -1 || w.max < 1)
		throw std::invalid_argument("window must contain [-1,1]");
	const UniversalAmbient u = UniversalAmbient::kantor(n, w);
	if (t_minus1.ambient_dim() != u.dim(-1))
		throw DimensionMismatch("T_-1 must be a subspace of U_-1");
	Family seeds = free_positive_family(n, w);
	seeds[-1] = t_minus1;
	const Family s = subalgebra_generated(u, seeds, 1);
	const Family ideal = maximal_trivial_ideal(u, s, 2, -2);
	Subquotient q = materialize_subquotient(u, s, ideal, w);
	for (int k = w.min; k <= w.max; ++k)
		q.algebra.set_provenance(k, "generated by U_1 and T_-1, minimal quotient");
	return q;
}

Subspace u2_annihilator(const UniversalAmbient& u)
{
	const Subspace full = Subspace::full(u.dim(-1));
	const Subspace u2 = free_positive_family(u.n(), Window{1, 2}).at(2);
	std::vector<Vector> residues;
	for (std::size_t i = 0; i < full.dim(); ++i) {
		Vector r;
		for (std::size_t q = 0; q < u2.dim(); ++q) {
			const Vector v = u.bracket(-1, full.basis_vector(i), 2, u2.basis_vector(q));
			r.insert(r.end(), v.begin(), v.end());
		}
		residues.push_back(std::move(r));
	}
	return kernel_combination(full, residues);
}

GradedLieSuperalgebra w_local_part(std::size_t n)
{
	const UniversalAmbient u = UniversalAmbient::kantor(n, Window{-1, 2});
	Family s;
	s[-1] = u2_annihilator(u);
	s[0] = Subspace::full(u.dim(0));
	s[1] = Subspace::full(u.dim(1));
	Subquotient q = materialize_subquotient(u, s, Family{}, Window{-1, 1}, false);
	GradedSpace labelled(Window{-1, 1});
	std::vector<std::string> e, k1, k0;
	for (std::size_t a = 0; a < n; ++a)
		e.push_back("E" + std::to_string(a));
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			k0.push_back("K" + std::to_string(a) + "_" + std::to_string(b));
	for (std::size_t i = 0; i < q.algebra.dim(-1); ++i)
		k1.push_back("K2_" + std::to_string(i));
	labelled.set_component(1, e);
	labelled.set_component(0, k0);
	labelled.set_component(-1, k1);
	GradedLieSuperalgebra out = q.algebra.embedded(labelled);
	out.set_provenance(1, "U_1");
	out.set_provenance(0, "gl(U_1)");
	out.set_provenance(-1, "annihilator of U_2 in U_-1");
	return out;
}

GradedLieSuperalgebra build_W(std::size_t n, Window w)
{
	if (n == 0)
		throw std::invalid_argument("W(n) needs n >= 1");
	return minimal_extension(w_local_part(n), w);
}

}  // namespace gls
