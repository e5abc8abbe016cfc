#include "gls/algebra.hpp"

#include <stdexcept>
#include <tuple>

namespace gls {

GradedLieSuperalgebra::GradedLieSuperalgebra(GradedSpace space) : space_(std::move(space))
{
	const Window w = space_.window();
	for (int i = w.min; i <= w.max; ++i)
		for (int j = w.min; j <= w.max; ++j) {
			if (!w.contains(i + j) || dim(i) == 0 || dim(j) == 0)
				continue;
			blocks_.emplace(std::make_pair(i, j),
			                std::vector<Vector>(dim(i) * dim(j), Vector(dim(i + j))));
		}
}

std::vector<Vector>& GradedLieSuperalgebra::block(int i, int j)
{
	auto it = blocks_.find({i, j});
	if (it == blocks_.end())
		throw std::out_of_range("bracket block (" + std::to_string(i) + "," + std::to_string(j) + ") undefined");
	return it->second;
}

const std::vector<Vector>& GradedLieSuperalgebra::block(int i, int j) const
{
	auto it = blocks_.find({i, j});
	if (it == blocks_.end())
		throw std::out_of_range("bracket block (" + std::to_string(i) + "," + std::to_string(j) + ") undefined");
	return it->second;
}

const Vector& GradedLieSuperalgebra::constant(int i, std::size_t a, int j, std::size_t b) const
{
	return block(i, j).at(a * dim(j) + b);
}

void GradedLieSuperalgebra::set_constant(int i, std::size_t a, int j, std::size_t b, Vector v)
{
	if (v.size() != dim(i + j))
		throw DimensionMismatch("structure constant has wrong length");
	const Scalar s = -super_sign(i, j);
	if (i == j && a == b) {
		if (s != 1 && !gls::is_zero(v))
			throw std::invalid_argument("even basis vector with nonzero square");
		block(i, j).at(a * dim(j) + b) = std::move(v);
		return;
	}
	block(j, i).at(b * dim(i) + a) = s * v;
	block(i, j).at(a * dim(j) + b) = std::move(v);
}

void GradedLieSuperalgebra::set_constant_unchecked(int i, std::size_t a, int j, std::size_t b, Vector v)
{
	if (v.size() != dim(i + j))
		throw DimensionMismatch("structure constant has wrong length");
	block(i, j).at(a * dim(j) + b) = std::move(v);
}

Vector GradedLieSuperalgebra::bracket(int i, const Vector& x, int j, const Vector& y) const
{
	if (x.size() != dim(i) || y.size() != dim(j))
		throw DimensionMismatch("bracket operand has wrong length");
	if (!window().contains(i + j))
		throw std::out_of_range("bracket lands outside the window");
	Vector out(dim(i + j));
	if (dim(i) == 0 || dim(j) == 0 || out.empty())
		return out;
	const auto& blk = block(i, j);
	std::vector<std::size_t> ynz;
	for (std::size_t b = 0; b < y.size(); ++b)
		if (!gls::is_zero(y[b]))
			ynz.push_back(b);
	Scalar c;
	for (std::size_t a = 0; a < x.size(); ++a) {
		if (gls::is_zero(x[a]))
			continue;
		for (std::size_t b : ynz) {
			const Vector& v = blk[a * dim(j) + b];
			c = x[a] * y[b];
			for (std::size_t t = 0; t < out.size(); ++t)
				if (!gls::is_zero(v[t]))
					out[t] += c * v[t];
		}
	}
	return out;
}

GradedVector GradedLieSuperalgebra::bracket(const GradedVector& x, const GradedVector& y, bool* truncated) const
{
	GradedVector out;
	for (const auto& [i, xv] : x.parts)
		for (const auto& [j, yv] : y.parts) {
			if (gls::is_zero(xv) || gls::is_zero(yv))
				continue;
			if (!window().contains(i + j)) {
				if (truncated)
					*truncated = true;
				continue;
			}
			Vector r = bracket(i, xv, j, yv);
			auto& slot = out.parts[i + j];
			if (slot.empty())
				slot = std::move(r);
			else
				axpy(1, r, slot);
		}
	return out.canonical();
}

GradedLieSuperalgebra GradedLieSuperalgebra::flipped() const
{
	const Window w = window();
	GradedSpace s(Window{-w.max, -w.min});
	for (int k = w.min; k <= w.max; ++k)
		if (dim(k) > 0)
			s.set_component(-k, space_.labels(k));
	GradedLieSuperalgebra out(std::move(s));
	for (const auto& [key, blk] : blocks_)
		out.blocks_[{-key.first, -key.second}] = blk;
	for (const auto& [k, note] : provenance_)
		out.provenance_[-k] = note;
	out.truncated_ = truncated_;
	return out;
}

GradedLieSuperalgebra GradedLieSuperalgebra::embedded(const GradedSpace& larger) const
{
	const Window w = window();
	for (int k = w.min; k <= w.max; ++k)
		if (dim(k) != larger.dim(k) || (dim(k) > 0 && !larger.window().contains(k)))
			throw DimensionMismatch("embedding changes the dimension at degree " + std::to_string(k));
	GradedLieSuperalgebra out(larger);
	for (const auto& [key, blk] : blocks_)
		out.blocks_[key] = blk;
	out.provenance_ = provenance_;
	out.truncated_ = truncated_;
	return out;
}

std::vector<int> GradedLieSuperalgebra::degrees() const
{
	std::vector<int> out;
	for (int k = window().min; k <= window().max; ++k)
		if (dim(k) > 0)
			out.push_back(k);
	return out;
}

std::map<int, std::size_t> dimensions(const Ambient& a)
{
	std::map<int, std::size_t> out;
	for (int k = a.window().min; k <= a.window().max; ++k)
		out[k] = a.dim(k);
	return out;
}

namespace {

// Sum_t v[t] [b^i_a, b^d_t]
Vector left_times(const GradedLieSuperalgebra& g, int i, std::size_t a, int d, const Vector& v)
{
	Vector out(g.dim(i + d));
	for (std::size_t t = 0; t < v.size(); ++t)
		if (!is_zero(v[t]))
			axpy(v[t], g.constant(i, a, d, t), out);
	return out;
}

// Sum_t v[t] [b^d_t, b^k_c]
Vector right_times(const GradedLieSuperalgebra& g, int d, const Vector& v, int k, std::size_t c)
{
	Vector out(g.dim(d + k));
	for (std::size_t t = 0; t < v.size(); ++t)
		if (!is_zero(v[t]))
			axpy(v[t], g.constant(d, t, k, c), out);
	return out;
}

using DegreeTriple = std::tuple<int, int, int>;

std::vector<DegreeTriple> jacobi_triples(const GradedLieSuperalgebra& g)
{
	std::vector<DegreeTriple> out;
	const Window w = g.window();
	for (int i : g.degrees())
		for (int j : g.degrees())
			for (int k : g.degrees())
				if (w.contains(i + j) && w.contains(j + k) && w.contains(i + k) && w.contains(i + j + k))
					out.emplace_back(i, j, k);
	return out;
}

std::optional<IdentityViolation> check_antisymmetry(const GradedLieSuperalgebra& g, std::size_t& pairs)
{
	for (int i : g.degrees())
		for (int j : g.degrees()) {
			if (!g.window().contains(i + j))
				continue;
			const int s = super_sign(i, j);
			for (std::size_t a = 0; a < g.dim(i); ++a)
				for (std::size_t b = 0; b < g.dim(j); ++b) {
					++pairs;
					Vector r = g.constant(i, a, j, b);
					axpy(s, g.constant(j, b, i, a), r);
					if (!is_zero(r))
						return IdentityViolation{"antisymmetry", {i, j}, {a, b}};
				}
		}
	return std::nullopt;
}

// First Jacobi failure for x = b^i_a over all (b, c), in serial order.
std::optional<IdentityViolation> jacobi_task(const GradedLieSuperalgebra& g, const DegreeTriple& t, std::size_t a)
{
	const auto [i, j, k] = t;
	const int s = super_sign(i, j);
	for (std::size_t b = 0; b < g.dim(j); ++b) {
		const Vector& xy = g.constant(i, a, j, b);
		for (std::size_t c = 0; c < g.dim(k); ++c) {
			Vector r = left_times(g, i, a, j + k, g.constant(j, b, k, c));
			axpy(-s, left_times(g, j, b, i + k, g.constant(i, a, k, c)), r);
			axpy(-1, right_times(g, i + j, xy, k, c), r);
			if (!is_zero(r))
				return IdentityViolation{"jacobi", {i, j, k}, {a, b, c}};
		}
	}
	return std::nullopt;
}

struct Task {
	std::size_t triple;
	std::size_t a;
};

std::vector<Task> jacobi_tasks(const GradedLieSuperalgebra& g, const std::vector<DegreeTriple>& triples,
                               std::size_t& count)
{
	std::vector<Task> tasks;
	for (std::size_t t = 0; t < triples.size(); ++t) {
		const auto [i, j, k] = triples[t];
		count += g.dim(i) * g.dim(j) * g.dim(k);
		for (std::size_t a = 0; a < g.dim(i); ++a)
			tasks.push_back({t, a});
	}
	return tasks;
}

}  // namespace

IdentityReport check_super_identities(const GradedLieSuperalgebra& g)
{
	IdentityReport r;
	if (auto v = check_antisymmetry(g, r.pairs_checked)) {
		r.passed = false;
		r.first_violation = std::move(v);
		return r;
	}
	const auto triples = jacobi_triples(g);
	const auto tasks = jacobi_tasks(g, triples, r.triples_checked);
	std::vector<std::optional<IdentityViolation>> found(tasks.size());
	const auto n = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic)
	for (std::ptrdiff_t t = 0; t < n; ++t) {
		const Task& task = tasks[static_cast<std::size_t>(t)];
		found[static_cast<std::size_t>(t)] = jacobi_task(g, triples[task.triple], task.a);
	}
	for (auto& f : found)
		if (f) {
			r.passed = false;
			r.first_violation = std::move(f);
			break;
		}
	return r;
}

IdentityReport check_super_identities_serial(const GradedLieSuperalgebra& g)
{
	IdentityReport r;
	if (auto v = check_antisymmetry(g, r.pairs_checked)) {
		r.passed = false;
		r.first_violation = std::move(v);
		return r;
	}
	const auto triples = jacobi_triples(g);
	for (const auto& task : jacobi_tasks(g, triples, r.triples_checked))
		if (auto v = jacobi_task(g, triples[task.triple], task.a)) {
			r.passed = false;
			r.first_violation = std::move(v);
			break;
		}
	return r;
}

}  // namespace gls
