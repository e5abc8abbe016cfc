#include "gls/ideals.hpp"

#include <deque>

namespace gls {

Family full_family(const Ambient& a)
{
	Family f;
	for (int k = a.window().min; k <= a.window().max; ++k)
		f[k] = Subspace::full(a.dim(k));
	return f;
}

Family zero_family(const Ambient& a)
{
	Family f;
	for (int k = a.window().min; k <= a.window().max; ++k)
		f[k] = Subspace(a.dim(k));
	return f;
}

Subspace component(const Family& f, const Ambient& a, int k)
{
	auto it = f.find(k);
	if (it == f.end())
		return Subspace(a.dim(k));
	if (it->second.ambient_dim() != a.dim(k))
		throw DimensionMismatch("family component at degree " + std::to_string(k) + " has wrong ambient dimension");
	return it->second;
}

std::map<int, std::size_t> family_dims(const Family& f)
{
	std::map<int, std::size_t> out;
	for (const auto& [k, s] : f)
		out[k] = s.dim();
	return out;
}

bool family_is_zero(const Family& f)
{
	for (const auto& [k, s] : f)
		if (!s.is_zero())
			return false;
	return true;
}

Family family_sum(const Family& a, const Family& b)
{
	Family out = a;
	for (const auto& [k, s] : b) {
		auto it = out.find(k);
		if (it == out.end())
			out[k] = s;
		else
			it->second = sum(it->second, s);
	}
	return out;
}

bool family_contains(const Family& big, const Family& small)
{
	for (const auto& [k, s] : small) {
		if (s.is_zero())
			continue;
		auto it = big.find(k);
		if (it == big.end() || !it->second.contains(s))
			return false;
	}
	return true;
}

namespace {

Subspace with_vector(const Subspace& s, const Vector& v)
{
	auto vecs = s.basis_vectors();
	vecs.push_back(v);
	return Subspace::span(s.ambient_dim(), vecs);
}

}  // namespace

Family subalgebra_generated(const Ambient& a, const Family& seeds, int frozen_from)
{
	const Window w = a.window();
	Family s;
	std::map<int, std::vector<Vector>> elems;
	std::deque<std::pair<int, std::size_t>> queue;
	for (int k = w.min; k <= w.max; ++k) {
		s[k] = component(seeds, a, k);
		elems[k] = s[k].basis_vectors();
		for (std::size_t i = 0; i < elems[k].size(); ++i)
			queue.emplace_back(k, i);
	}
	while (!queue.empty()) {
		const auto [i, idx] = queue.front();
		queue.pop_front();
		const Vector e = elems[i][idx];
		for (int j = w.min; j <= w.max; ++j) {
			const int t = i + j;
			if (!w.contains(t) || t >= frozen_from || a.dim(t) == 0)
				continue;
			for (std::size_t m = 0; m < elems[j].size(); ++m) {
				Vector r = s[t].reduce(a.bracket(i, e, j, elems[j][m]));
				if (is_zero(r))
					continue;
				s[t] = with_vector(s[t], r);
				elems[t].push_back(std::move(r));
				queue.emplace_back(t, elems[t].size() - 1);
			}
		}
	}
	return s;
}

Family ideal_generated(const Ambient& a, const Family& algebra, const Family& seeds)
{
	const Window w = a.window();
	Family ideal;
	std::map<int, std::vector<Vector>> basis;
	std::deque<std::pair<int, Vector>> queue;
	for (int k = w.min; k <= w.max; ++k) {
		ideal[k] = component(seeds, a, k);
		basis[k] = component(algebra, a, k).basis_vectors();
		for (auto& v : ideal[k].basis_vectors())
			queue.emplace_back(k, std::move(v));
	}
	while (!queue.empty()) {
		auto [i, e] = std::move(queue.front());
		queue.pop_front();
		for (int j = w.min; j <= w.max; ++j) {
			const int t = i + j;
			if (!w.contains(t) || a.dim(t) == 0)
				continue;
			for (const auto& s : basis[j]) {
				Vector r = ideal[t].reduce(a.bracket(j, s, i, e));
				if (is_zero(r))
					continue;
				ideal[t] = with_vector(ideal[t], r);
				queue.emplace_back(t, std::move(r));
			}
		}
	}
	return ideal;
}

std::optional<BracketWitness> ideal_violation(const Ambient& a, const Family& algebra, const Family& ideal)
{
	const Window w = a.window();
	for (int i = w.min; i <= w.max; ++i) {
		const Subspace s = component(algebra, a, i);
		for (int j = w.min; j <= w.max; ++j) {
			if (!w.contains(i + j))
				continue;
			const Subspace d = component(ideal, a, j);
			const Subspace target = component(ideal, a, i + j);
			for (std::size_t p = 0; p < s.dim(); ++p)
				for (std::size_t q = 0; q < d.dim(); ++q)
					if (!target.contains(a.bracket(i, s.basis_vector(p), j, d.basis_vector(q))))
						return BracketWitness{i, p, j, q};
		}
	}
	return std::nullopt;
}

Vector Subquotient::coordinates(int k, const Vector& ambient_vector) const
{
	const Subspace& q = complement.at(k);
	const Vector r = ideal.at(k).reduce(ambient_vector);
	if (!is_zero(q.reduce(r)))
		throw std::invalid_argument("vector at degree " + std::to_string(k) + " is not in the subalgebra");
	return q.coordinates(r);
}

Vector Subquotient::lift(int k, const Vector& coords) const { return complement.at(k).combine(coords); }

Subquotient materialize_subquotient(const Ambient& a, const Family& sub, const Family& ideal,
                                    std::optional<Window> window, bool check_ideal)
{
	const Window w = window.value_or(a.window());
	if (!a.window().contains(w.min) || !a.window().contains(w.max))
		throw std::out_of_range("materialization window exceeds the ambient window");
	Subquotient out;
	GradedSpace space(w);
	for (int k = w.min; k <= w.max; ++k) {
		out.sub[k] = component(sub, a, k);
		out.ideal[k] = component(ideal, a, k);
		if (!out.sub[k].contains(out.ideal[k]))
			throw std::invalid_argument("ideal not contained in the subalgebra at degree " + std::to_string(k));
		out.complement[k] = quotient_basis(out.sub[k], out.ideal[k]);
		space.set_component(k, out.complement[k].dim());
	}
	if (check_ideal) {
		Ambient const& amb = a;
		Family s_w, i_w;
		for (int k = w.min; k <= w.max; ++k) {
			s_w[k] = out.sub[k];
			i_w[k] = out.ideal[k];
		}
		// Only pairs inside the materialization window matter.
		for (int i = w.min; i <= w.max; ++i)
			for (int j = w.min; j <= w.max; ++j) {
				if (!w.contains(i + j))
					continue;
				for (std::size_t p = 0; p < s_w[i].dim(); ++p)
					for (std::size_t q = 0; q < i_w[j].dim(); ++q)
						if (!i_w[i + j].contains(amb.bracket(i, s_w[i].basis_vector(p), j, i_w[j].basis_vector(q))))
							throw NotAnIdeal("not an ideal: bracket of degree " + std::to_string(i) + " element " +
							                     std::to_string(p) + " with ideal element of degree " +
							                     std::to_string(j) + " index " + std::to_string(q),
							                 BracketWitness{i, p, j, q});
			}
	}

	struct Job {
		int i;
		std::size_t p;
		int j;
		std::size_t q;
	};
	std::vector<Job> jobs;
	for (int i = w.min; i <= w.max; ++i)
		for (int j = i; j <= w.max; ++j) {
			if (!w.contains(i + j))
				continue;
			for (std::size_t p = 0; p < space.dim(i); ++p)
				for (std::size_t q = (i == j ? p : 0); q < space.dim(j); ++q)
					jobs.push_back({i, p, j, q});
		}
	std::vector<Vector> results(jobs.size());
	std::vector<char> closed(jobs.size(), 1);
	const auto n = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic)
	for (std::ptrdiff_t t = 0; t < n; ++t) {
		const Job& job = jobs[static_cast<std::size_t>(t)];
		const Subspace& qt = out.complement[job.i + job.j];
		const Vector r = out.ideal[job.i + job.j].reduce(
		    a.bracket(job.i, out.complement[job.i].basis_vector(job.p), job.j, out.complement[job.j].basis_vector(job.q)));
		if (!is_zero(qt.reduce(r)))
			closed[static_cast<std::size_t>(t)] = 0;
		else
			results[static_cast<std::size_t>(t)] = qt.coordinates(r);
	}
	out.algebra = GradedLieSuperalgebra(space);
	for (std::size_t t = 0; t < jobs.size(); ++t) {
		const Job& job = jobs[t];
		if (!closed[t])
			throw NotClosed("not a subalgebra: bracket of degree " + std::to_string(job.i) + " element " +
			                    std::to_string(job.p) + " with degree " + std::to_string(job.j) + " element " +
			                    std::to_string(job.q) + " leaves it",
			                BracketWitness{job.i, job.p, job.j, job.q});
		out.algebra.set_constant(job.i, job.p, job.j, job.q, std::move(results[t]));
	}
	return out;
}

Subquotient quotient(const GradedLieSuperalgebra& g, const Family& ideal)
{
	Subquotient q = materialize_subquotient(g, full_family(g), ideal);
	q.algebra.set_truncated(g.truncated());
	for (const auto& [k, note] : g.provenance())
		q.algebra.set_provenance(k, note);
	return q;
}

Family transitivity_defect(const Ambient& a, const Family& algebra, Side side, int start)
{
	const Window w = a.window();
	const int step = side == Side::negative ? 1 : -1;
	const int probe_degree = -step;
	if (!w.contains(start) || !w.contains(start - step) || !w.contains(probe_degree))
		throw WindowTooSmall("window does not cover the probed degrees");
	const Subspace probe = component(algebra, a, probe_degree);
	Family d;
	Subspace prev(a.dim(start - step));
	for (int k = start; w.contains(k); k += step) {
		const Subspace s = component(algebra, a, k);
		std::vector<Vector> residues;
		for (std::size_t i = 0; i < s.dim(); ++i) {
			Vector r;
			const Vector x = s.basis_vector(i);
			for (std::size_t p = 0; p < probe.dim(); ++p) {
				const Vector red = prev.reduce(a.bracket(probe_degree, probe.basis_vector(p), k, x));
				r.insert(r.end(), red.begin(), red.end());
			}
			residues.push_back(std::move(r));
		}
		d[k] = kernel_combination(s, residues);
		prev = d[k];
	}
	return d;
}

Family transitivity_defect(const GradedLieSuperalgebra& g, Side side, int start)
{
	return transitivity_defect(g, full_family(g), side, start);
}

Family maximal_trivial_ideal(const Ambient& a, const Family& algebra, int above, std::optional<int> below)
{
	const Window w = a.window();
	Family ideal;
	if (above <= w.max)
		ideal = transitivity_defect(a, algebra, Side::negative, above);
	if (below && *below >= w.min)
		ideal = family_sum(ideal, transitivity_defect(a, algebra, Side::positive, *below));
	if (auto v = ideal_violation(a, algebra, ideal))
		throw WindowTooSmall("defect tower is not an ideal within the window (degrees " +
		                     std::to_string(v->left_degree) + ", " + std::to_string(v->right_degree) + ")");
	return ideal;
}

Family maximal_trivial_ideal(const GradedLieSuperalgebra& g, int above, std::optional<int> below)
{
	return maximal_trivial_ideal(g, full_family(g), above, below);
}

bool is_transitive(const GradedLieSuperalgebra& g, int lo, int hi)
{
	const Window w = g.window();
	if (hi <= w.max && !family_is_zero(transitivity_defect(g, Side::negative, hi)))
		return false;
	if (lo >= w.min && !family_is_zero(transitivity_defect(g, Side::positive, lo)))
		return false;
	return true;
}

Family idealiser(const Ambient& a, const Family& algebra, const Family& ideal)
{
	const Window w = a.window();
	Family n;
	for (int k = w.min; k <= w.max; ++k) {
		const Subspace s = component(algebra, a, k);
		std::vector<Vector> residues(s.dim());
		for (int j = w.min; j <= w.max; ++j) {
			if (!w.contains(k + j))
				continue;
			const Subspace d = component(ideal, a, j);
			const Subspace target = component(ideal, a, k + j);
			for (std::size_t q = 0; q < d.dim(); ++q) {
				const Vector dv = d.basis_vector(q);
				for (std::size_t i = 0; i < s.dim(); ++i) {
					const Vector red = target.reduce(a.bracket(k, s.basis_vector(i), j, dv));
					residues[i].insert(residues[i].end(), red.begin(), red.end());
				}
			}
		}
		n[k] = kernel_combination(s, residues);
	}
	return n;
}

}  // namespace gls
