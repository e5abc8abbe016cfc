#include "gls/lie_leibniz.hpp"

#include <stdexcept>

namespace gls {

namespace {

Vector theta_of(const LieLeibnizTriple& t, std::size_t a) { return t.theta.column(a); }

Matrix flatten_rows(const std::vector<Matrix>& ms, std::size_t n, std::vector<Vector>& out)
{
	for (const auto& m : ms) {
		Vector v(n * n);
		for (std::size_t r = 0; r < n; ++r)
			for (std::size_t c = 0; c < n; ++c)
				v[r * n + c] = m(r, c);
		out.push_back(std::move(v));
	}
	return Matrix();
}

Matrix unflatten(const Vector& v, std::size_t n)
{
	Matrix m(n, n);
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t c = 0; c < n; ++c)
			m(r, c) = v[r * n + c];
	return m;
}

Vector flatten(const Matrix& m)
{
	Vector v(m.rows() * m.cols());
	for (std::size_t r = 0; r < m.rows(); ++r)
		for (std::size_t c = 0; c < m.cols(); ++c)
			v[r * m.cols() + c] = m(r, c);
	return v;
}

std::size_t pair_index(std::size_t n, std::size_t a, std::size_t b)
{
	if (a > b)
		std::swap(a, b);
	// pairs enumerated a <= b in lexicographic order
	return a * n - a * (a - 1) / 2 + (b - a);
}

}  // namespace

TripleReport validate_triple(const LieLeibnizTriple& t)
{
	TripleReport r;
	const std::size_t m = t.m();
	const std::size_t n = t.n();
	if (t.theta.rows() != m || t.theta.cols() != n) {
		r.malformed = "theta must be " + std::to_string(m) + " x " + std::to_string(n);
		return r;
	}
	if (t.rho.action.size() != m) {
		r.malformed = "module needs one action matrix per Lie algebra basis vector";
		return r;
	}
	for (const auto& a : t.rho.action)
		if (a.rows() != n || a.cols() != n) {
			r.malformed = "action matrices must be " + std::to_string(n) + " x " + std::to_string(n);
			return r;
		}
	if (auto v = t.g.antisymmetry_violation()) {
		r.malformed = "Lie bracket not antisymmetric";
		return r;
	}
	if (auto v = t.g.jacobi_violation()) {
		r.malformed = "Jacobi identity fails on (" + std::to_string((*v)[0]) + "," + std::to_string((*v)[1]) + "," +
		              std::to_string((*v)[2]) + ")";
		return r;
	}
	if (auto v = representation_violation(t.g, t.rho)) {
		r.malformed = "module action is not a representation on (" + std::to_string((*v)[0]) + "," +
		              std::to_string((*v)[1]) + ")";
		return r;
	}
	r.quadratic = true;
	for (std::size_t a = 0; a < n && r.quadratic; ++a) {
		const Matrix act = t.rho.of(theta_of(t, a));
		for (std::size_t b = 0; b < n; ++b) {
			const Vector lhs = t.theta * act.column(b);
			const Vector rhs = t.g.bracket(theta_of(t, a), theta_of(t, b));
			if (lhs != rhs) {
				r.quadratic = false;
				r.quadratic_witness = std::array<std::size_t, 2>{a, b};
				break;
			}
		}
	}
	r.strict = true;
	for (std::size_t i = 0; i < m && r.strict; ++i)
		for (std::size_t a = 0; a < n; ++a) {
			const Vector lhs = t.theta * t.rho.action[i].column(a);
			const Vector rhs = t.g.bracket(unit_vector(m, i), theta_of(t, a));
			if (lhs != rhs) {
				r.strict = false;
				r.strict_witness = std::array<std::size_t, 2>{i, a};
				break;
			}
		}
	r.surjective = rank(t.theta) == m;
	r.faithful = is_faithful(t.rho);
	r.theta_nonzero = !t.theta.is_zero();
	return r;
}

Vector LeibnizAlgebra::multiply(const Vector& u, const Vector& v) const
{
	Vector out(dim);
	for (std::size_t a = 0; a < dim; ++a) {
		if (is_zero(u[a]))
			continue;
		for (std::size_t b = 0; b < dim; ++b)
			if (!is_zero(v[b]))
				axpy(u[a] * v[b], product[a * dim + b], out);
	}
	return out;
}

std::optional<std::array<std::size_t, 3>> LeibnizAlgebra::leibniz_violation() const
{
	for (std::size_t a = 0; a < dim; ++a)
		for (std::size_t b = 0; b < dim; ++b)
			for (std::size_t c = 0; c < dim; ++c) {
				const Vector u = unit_vector(dim, a);
				const Vector v = unit_vector(dim, b);
				const Vector w = unit_vector(dim, c);
				const Vector lhs = multiply(u, product[b * dim + c]);
				const Vector rhs = multiply(product[a * dim + b], w) + multiply(v, product[a * dim + c]);
				if (lhs != rhs)
					return std::array<std::size_t, 3>{a, b, c};
			}
	return std::nullopt;
}

LeibnizAlgebra leibniz_from_triple(const LieLeibnizTriple& t)
{
	const TripleReport r = validate_triple(t);
	if (r.malformed)
		throw std::invalid_argument(*r.malformed);
	if (!r.quadratic)
		throw std::invalid_argument("quadratic constraint fails");
	LeibnizAlgebra l;
	l.dim = t.n();
	for (std::size_t a = 0; a < l.dim; ++a) {
		const Matrix act = t.rho.of(theta_of(t, a));
		for (std::size_t b = 0; b < l.dim; ++b)
			l.product.push_back(act.column(b));
	}
	return l;
}

LieLeibnizTriple triple_from_leibniz(const LeibnizAlgebra& l)
{
	if (auto v = l.leibniz_violation())
		throw std::invalid_argument("Leibniz rule fails");
	const std::size_t n = l.dim;
	std::vector<Matrix> left;
	for (std::size_t a = 0; a < n; ++a) {
		Matrix m(n, n);
		for (std::size_t b = 0; b < n; ++b)
			for (std::size_t r = 0; r < n; ++r)
				m(r, b) = l.product[a * n + b][r];
		left.push_back(std::move(m));
	}
	std::vector<Vector> flat;
	flatten_rows(left, n, flat);
	const Subspace span = Subspace::span(n * n, flat);
	LieLeibnizTriple t;
	t.g = LieAlgebra::abelian(span.dim());
	for (std::size_t i = 0; i < span.dim(); ++i)
		for (std::size_t j = 0; j < span.dim(); ++j) {
			const Matrix bi = unflatten(span.basis_vector(i), n);
			const Matrix bj = unflatten(span.basis_vector(j), n);
			const Vector c = flatten(bi * bj - bj * bi);
			if (!span.contains(c))
				throw std::logic_error("left multiplications do not close under the commutator");
			t.g.constants[i * span.dim() + j] = span.coordinates(c);
		}
	t.rho.dim = n;
	for (std::size_t a = 0; a < n; ++a)
		t.rho.labels.push_back("u" + std::to_string(a));
	for (std::size_t i = 0; i < span.dim(); ++i)
		t.rho.action.push_back(unflatten(span.basis_vector(i), n));
	t.theta = Matrix(span.dim(), n);
	for (std::size_t a = 0; a < n; ++a) {
		const Vector c = span.coordinates(flat[a]);
		for (std::size_t i = 0; i < span.dim(); ++i)
			t.theta(i, a) = c[i];
	}
	return t;
}

Matrix hom_action(const LieLeibnizTriple& t, const Vector& x, const Matrix& phi)
{
	return t.g.ad(x) * phi - phi * t.rho.of(x);
}

Vector hom_coordinates(const Matrix& phi)
{
	const std::size_t m = phi.rows();
	Vector v(phi.rows() * phi.cols());
	for (std::size_t a = 0; a < phi.cols(); ++a)
		for (std::size_t i = 0; i < m; ++i)
			v[a * m + i] = phi(i, a);
	return v;
}

Matrix hom_matrix(std::size_t m, std::size_t n, const Vector& coords)
{
	Matrix phi(m, n);
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t i = 0; i < m; ++i)
			phi(i, a) = coords[a * m + i];
	return phi;
}

Subspace orbit_R_theta(const LieLeibnizTriple& t)
{
	const std::size_t m = t.m();
	const std::size_t n = t.n();
	std::vector<Matrix> ops;
	for (std::size_t i = 0; i < m; ++i) {
		Matrix op(m * n, m * n);
		for (std::size_t c = 0; c < m * n; ++c) {
			const Vector img = hom_coordinates(hom_action(t, unit_vector(m, i), hom_matrix(m, n, unit_vector(m * n, c))));
			for (std::size_t r = 0; r < m * n; ++r)
				op(r, c) = img[r];
		}
		ops.push_back(std::move(op));
	}
	return invariant_closure(ops, Subspace::span(m * n, {hom_coordinates(t.theta)}));
}

Subspace gauge_subalgebra(const LieLeibnizTriple& t)
{
	std::vector<Vector> cols;
	for (std::size_t a = 0; a < t.n(); ++a)
		cols.push_back(theta_of(t, a));
	const Subspace h = Subspace::span(t.m(), cols);
	for (std::size_t i = 0; i < h.dim(); ++i) {
		for (std::size_t j = 0; j < h.dim(); ++j)
			if (!h.contains(t.g.bracket(h.basis_vector(i), h.basis_vector(j))))
				throw std::logic_error("image of theta is not a subalgebra");
		if (!hom_action(t, h.basis_vector(i), t.theta).is_zero())
			throw std::logic_error("theta is not equivariant under its image");
	}
	return h;
}

std::vector<std::pair<std::size_t, std::size_t>> sym2_pairs(std::size_t n)
{
	std::vector<std::pair<std::size_t, std::size_t>> p;
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = a; b < n; ++b)
			p.emplace_back(a, b);
	return p;
}

Vector sym2_tensor(std::size_t n, std::size_t a, std::size_t b)
{
	Vector v(n * n);
	v[a * n + b] += 1;
	v[b * n + a] += 1;
	return v;
}

std::vector<Matrix> sym2_action(const LieLeibnizTriple& t)
{
	const std::size_t n = t.n();
	const auto pairs = sym2_pairs(n);
	std::vector<Matrix> ops;
	for (std::size_t i = 0; i < t.m(); ++i) {
		const Matrix& r = t.rho.action[i];
		Matrix op(pairs.size(), pairs.size());
		for (std::size_t col = 0; col < pairs.size(); ++col) {
			const auto [a, b] = pairs[col];
			for (std::size_t c = 0; c < n; ++c) {
				if (!is_zero(r(c, a)))
					op(pair_index(n, c, b), col) += r(c, a);
				if (!is_zero(r(c, b)))
					op(pair_index(n, a, c), col) += r(c, b);
			}
		}
		ops.push_back(std::move(op));
	}
	return ops;
}

SymmetricBracket symmetric_bracket(const LieLeibnizTriple& t)
{
	const std::size_t n = t.n();
	const auto pairs = sym2_pairs(n);
	SymmetricBracket s;
	s.map = Matrix(n, pairs.size());
	const Scalar half(1, 2);
	for (std::size_t col = 0; col < pairs.size(); ++col) {
		const auto [a, b] = pairs[col];
		const Vector v = half * (t.rho.of(theta_of(t, a)).column(b) + t.rho.of(theta_of(t, b)).column(a));
		for (std::size_t r = 0; r < n; ++r)
			s.map(r, col) = v[r];
	}
	s.kernel = kernel(s.map);
	std::vector<Vector> cols;
	for (std::size_t col = 0; col < pairs.size(); ++col)
		cols.push_back(s.map.column(col));
	s.image = Subspace::span(n, cols);
	const Subspace h = gauge_subalgebra(t);
	const auto ops = sym2_action(t);
	s.h_equivariant = true;
	for (std::size_t i = 0; i < h.dim(); ++i) {
		const Vector x = h.basis_vector(i);
		Matrix scaled(pairs.size(), pairs.size());
		for (std::size_t g = 0; g < t.m(); ++g)
			if (!is_zero(x[g]))
				for (std::size_t r = 0; r < pairs.size(); ++r)
					for (std::size_t c = 0; c < pairs.size(); ++c)
						scaled(r, c) += x[g] * ops[g](r, c);
		if (!(s.map * scaled == t.rho.of(x) * s.map))
			s.h_equivariant = false;
	}
	return s;
}

KComputation compute_K(const LieLeibnizTriple& t)
{
	const std::size_t n = t.n();
	const auto pairs = sym2_pairs(n);
	const SymmetricBracket s = symmetric_bracket(t);
	KComputation k;
	k.by_invariance = largest_invariant_subspace(sym2_action(t), s.kernel);

	const UniversalAmbient u(t.g, t.rho, Window{-1, 2});
	const Subspace r = orbit_R_theta(t);
	const Subspace full = Subspace::full(pairs.size());
	std::vector<Vector> residues;
	for (std::size_t col = 0; col < pairs.size(); ++col) {
		const Vector p = sym2_tensor(n, pairs[col].first, pairs[col].second);
		Vector res;
		for (std::size_t c = 0; c < r.dim(); ++c) {
			const Vector v = u.bracket(-1, r.basis_vector(c), 2, p);
			res.insert(res.end(), v.begin(), v.end());
		}
		residues.push_back(std::move(res));
	}
	k.by_annihilator = kernel_combination(full, residues);
	k.agree = k.by_invariance == k.by_annihilator;

	std::vector<Vector> tensors;
	k.commutes_with_r_theta = true;
	for (std::size_t i = 0; i < k.by_invariance.dim(); ++i) {
		const Vector c = k.by_invariance.basis_vector(i);
		Vector tv(n * n);
		for (std::size_t col = 0; col < pairs.size(); ++col)
			if (!is_zero(c[col]))
				axpy(c[col], sym2_tensor(n, pairs[col].first, pairs[col].second), tv);
		for (std::size_t j = 0; j < r.dim(); ++j)
			if (!is_zero(u.bracket(-1, r.basis_vector(j), 2, tv)))
				k.commutes_with_r_theta = false;
		tensors.push_back(std::move(tv));
	}
	k.tensor = Subspace::span(n * n, tensors);
	return k;
}

Window default_lie_leibniz_window() { return Window{-3, 4}; }

TowerBuild build_T(const LieLeibnizTriple& t, Window w)
{
	if (w.min > -1 || w.max < 2)
		throw std::invalid_argument("window must contain [-1,2]");
	const TripleReport rep = validate_triple(t);
	if (rep.malformed)
		throw std::invalid_argument(*rep.malformed);
	if (!rep.quadratic)
		throw std::invalid_argument("quadratic constraint fails");
	const UniversalAmbient u(t.g, t.rho, w);
	TowerBuild b;
	b.r_theta = orbit_R_theta(t);
	b.k = compute_K(t);
	Family seeds = free_positive_family(t.n(), w);
	seeds[-1] = b.r_theta;
	seeds[0] = Subspace::full(t.m());
	b.generated = subalgebra_generated(u, seeds, 0);
	b.relations = ideal_in_free(t.n(), Family{{2, b.k.tensor}}, w);
	b.t = materialize_subquotient(u, b.generated, b.relations, w);
	b.t.algebra.set_truncated(true);
	for (int k = w.min; k <= w.max; ++k)
		b.t.algebra.set_provenance(k, k < 0 ? "generated by R_theta" : k == 0 ? "g" : "free Lie modulo the ideal of K");
	return b;
}

LBuild build_L(const LieLeibnizTriple& t, Window w)
{
	LBuild b;
	b.tower = build_T(t, w);
	const GradedLieSuperalgebra& tt = b.tower.t.algebra;
	b.trivial_ideal = w.max >= 3 ? maximal_trivial_ideal(tt, 3, std::nullopt) : Family{};
	const Subquotient q = quotient(tt, b.trivial_ideal);
	b.l = q.algebra;
	b.theta = q.coordinates(-1, b.tower.t.coordinates(-1, hom_coordinates(t.theta)));
	b.transitive = w.min <= -2 && w.max >= 2 ? is_transitive(b.l) : false;
	return b;
}

std::string to_string(ChainRow r)
{
	switch (r) {
	case ChainRow::crossed_module: return "crossed_module";
	case ChainRow::augmented_leibniz: return "augmented_leibniz";
	case ChainRow::lie_algebra_v: return "lie_algebra_v";
	case ChainRow::general: return "general";
	}
	return "general";
}

ChainRow table_row(const LieLeibnizTriple& t)
{
	const bool strict = validate_triple(t).strict;
	const bool sym_zero = symmetric_bracket(t).map.is_zero();
	if (strict && sym_zero)
		return ChainRow::crossed_module;
	if (strict)
		return ChainRow::augmented_leibniz;
	if (sym_zero)
		return ChainRow::lie_algebra_v;
	return ChainRow::general;
}

DglaChain differential_d_theta(const LieLeibnizTriple& t, const GradedLieSuperalgebra& l, const Vector& theta)
{
	DglaChain c;
	c.row = table_row(t);
	c.d.shift = -1;
	const Window w = l.window();
	for (int k = w.min + 1; k <= w.max; ++k) {
		Matrix m(l.dim(k - 1), l.dim(k));
		for (std::size_t b = 0; b < l.dim(k); ++b) {
			const Vector col = l.bracket(-1, theta, k, unit_vector(l.dim(k), b));
			for (std::size_t r = 0; r < col.size(); ++r)
				m(r, b) = col[r];
		}
		c.d.blocks[k] = std::move(m);
	}
	c.squares_to_zero = true;
	for (int k = w.min + 2; k <= w.max && c.squares_to_zero; ++k)
		if (!(c.d.blocks[k - 1] * c.d.blocks[k]).is_zero()) {
			c.squares_to_zero = false;
			c.failure = "d^2 != 0 on degree " + std::to_string(k);
		}
	c.derivation = true;
	for (int i = w.min + 1; i <= w.max && c.derivation; ++i)
		for (int j = w.min + 1; j <= w.max && c.derivation; ++j) {
			if (!w.contains(i + j) || !w.contains(i + j - 1))
				continue;
			const Matrix& di = c.d.blocks.at(i);
			const Matrix& dj = c.d.blocks.at(j);
			const Matrix& dij = c.d.blocks.at(i + j);
			const Scalar sign = parity(i) ? -1 : 1;
			for (std::size_t a = 0; a < l.dim(i) && c.derivation; ++a)
				for (std::size_t b = 0; b < l.dim(j); ++b) {
					const Vector x = unit_vector(l.dim(i), a);
					const Vector y = unit_vector(l.dim(j), b);
					const Vector lhs = dij * l.bracket(i, x, j, y);
					Vector rhs = l.bracket(i - 1, di * x, j, y);
					axpy(sign, l.bracket(i, x, j - 1, dj * y), rhs);
					if (lhs != rhs) {
						c.derivation = false;
						if (!c.failure)
							c.failure = "Leibniz rule for d fails on degrees (" + std::to_string(i) + "," +
							            std::to_string(j) + ")";
						break;
					}
				}
		}
	return c;
}

ChainReport dgla_chain_report(const LieLeibnizTriple& t, Window w)
{
	const LBuild lb = build_L(t, w);
	ChainReport r;
	r.chain = differential_d_theta(t, lb.l, lb.theta);
	r.row = r.chain.row;
	for (int k = w.min; k <= w.max; ++k)
		r.dims[k] = lb.l.dim(k);
	for (const auto& [k, m] : r.chain.d.blocks) {
		r.map_ranks[k] = rank(m);
		switch (k) {
		case 2: r.map_names[k] = "inclusion"; break;
		case 1: r.map_names[k] = "theta"; break;
		case 0: r.map_names[k] = "-(. theta)"; break;
		default: r.map_names[k] = "[theta, .]"; break;
		}
	}
	r.ideal_of_squares = symmetric_bracket(t).image;
	r.r_theta_dim = lb.tower.r_theta.dim();
	r.r_theta_square_dim = w.contains(-2) ? lb.l.dim(-2) : 0;
	return r;
}

Vector rho_compose(const LieLeibnizTriple& t, const Vector& phi)
{
	const std::size_t n = t.n();
	const Matrix p = hom_matrix(t.m(), n, phi);
	Vector out(n * n * n);
	for (std::size_t a = 0; a < n; ++a) {
		const Matrix img = t.rho.of(p.column(a));
		for (std::size_t c = 0; c < n; ++c)
			for (std::size_t d = 0; d < n; ++d)
				out[a * n * n + c * n + d] = img(d, c);
	}
	return out;
}

TheoremReport compare_with_P(const LieLeibnizTriple& t, Window w)
{
	TheoremReport r;
	r.g_simple = is_simple(t.g);
	r.v_faithful = is_faithful(t.rho);
	r.theta_nonzero = !t.theta.is_zero();
	const LBuild lb = build_L(t, w);
	const Subspace rt = orbit_R_theta(t);
	std::vector<Vector> images;
	for (std::size_t i = 0; i < rt.dim(); ++i)
		images.push_back(rho_compose(t, rt.basis_vector(i)));
	const std::size_t n = t.n();
	const Subquotient p = build_P(n, Subspace::span(n * n * n, images), w);
	for (int k = w.min; k <= w.max; ++k) {
		r.l_dims[k] = lb.l.dim(k);
		r.p_dims[k] = p.algebra.dim(k);
	}
	r.dims_equal = r.l_dims == r.p_dims;
	const auto f = extend_local_morphism(lb.l, p.algebra, DegreeMaps{{1, Matrix::identity(n)}});
	if (!f) {
		r.iso.failure = "identity on V does not extend to a morphism L -> P";
		return r;
	}
	r.iso = check_isomorphism(lb.l, p.algebra, *f);
	return r;
}

LieLeibnizTriple adjoint_triple(const LieAlgebra& g)
{
	return LieLeibnizTriple{g, adjoint(g), Matrix::identity(g.dim)};
}

LieLeibnizTriple hemi_semidirect(const LieAlgebra& g, const Representation& m)
{
	const std::size_t k = g.dim;
	LieLeibnizTriple t;
	t.g = g;
	t.rho.dim = k + m.dim;
	t.rho.labels = g.labels;
	t.rho.labels.insert(t.rho.labels.end(), m.labels.begin(), m.labels.end());
	for (std::size_t i = 0; i < k; ++i) {
		Matrix a(t.rho.dim, t.rho.dim);
		const Matrix ad = g.ad(i);
		for (std::size_t r = 0; r < k; ++r)
			for (std::size_t c = 0; c < k; ++c)
				a(r, c) = ad(r, c);
		for (std::size_t r = 0; r < m.dim; ++r)
			for (std::size_t c = 0; c < m.dim; ++c)
				a(k + r, k + c) = m.action[i](r, c);
		t.rho.action.push_back(std::move(a));
	}
	t.theta = Matrix(k, t.rho.dim);
	for (std::size_t i = 0; i < k; ++i)
		t.theta(i, i) = 1;
	return t;
}

LieLeibnizTriple crossed_module(const LieAlgebra& g, const std::vector<Vector>& ideal_basis)
{
	const std::size_t n = ideal_basis.size();
	const Matrix b = Matrix::from_columns(g.dim, ideal_basis);
	if (rank(b) != n)
		throw std::invalid_argument("ideal basis is not linearly independent");
	LieLeibnizTriple t;
	t.g = g;
	t.rho.dim = n;
	for (std::size_t a = 0; a < n; ++a)
		t.rho.labels.push_back("v" + std::to_string(a));
	for (std::size_t i = 0; i < g.dim; ++i) {
		Matrix act(n, n);
		for (std::size_t a = 0; a < n; ++a) {
			const auto c = solve(b, g.bracket(unit_vector(g.dim, i), ideal_basis[a]));
			if (!c)
				throw std::invalid_argument("span is not an ideal");
			for (std::size_t r = 0; r < n; ++r)
				act(r, a) = (*c)[r];
		}
		t.rho.action.push_back(std::move(act));
	}
	t.theta = b;
	return t;
}

LieLeibnizTriple gl2_crossed_module()
{
	const Vector h{1, 0, 0, -1};
	const Vector e{0, 0, 1, 0};
	const Vector f{0, 1, 0, 0};
	LieLeibnizTriple t = crossed_module(gl(2), {h, e, f});
	t.rho.labels = {"h", "e", "f"};
	return t;
}

LieLeibnizTriple scan_fixture()
{
	LieLeibnizTriple t = adjoint_triple(sl2());
	t.theta = Matrix(3, 3);
	t.theta(0, 0) = 1;
	return t;
}

LieLeibnizTriple failing_fixture()
{
	LieLeibnizTriple t = adjoint_triple(sl2());
	t.theta = Matrix(3, 3);
	t.theta(1, 1) = 1;
	return t;
}

LieLeibnizTriple zero_theta(const LieAlgebra& g, const Representation& rho)
{
	return LieLeibnizTriple{g, rho, Matrix(g.dim, rho.dim)};
}

}  // namespace gls
