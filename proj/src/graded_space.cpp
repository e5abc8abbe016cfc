#include "gls/graded_space.hpp"

#include <stdexcept>

namespace gls {

Window make_window(int min, int max)
{
	if (min > max)
		throw std::invalid_argument("window min " + std::to_string(min) + " exceeds max " + std::to_string(max));
	return Window{min, max};
}

std::size_t GradedSpace::dim(int k) const
{
	auto it = labels_.find(k);
	return it == labels_.end() ? 0 : it->second.size();
}

std::size_t GradedSpace::total_dim() const
{
	std::size_t n = 0;
	for (const auto& [k, l] : labels_)
		n += l.size();
	return n;
}

const std::vector<std::string>& GradedSpace::labels(int k) const
{
	static const std::vector<std::string> empty;
	auto it = labels_.find(k);
	return it == labels_.end() ? empty : it->second;
}

void GradedSpace::set_component(int k, std::size_t dim)
{
	std::vector<std::string> l;
	for (std::size_t i = 0; i < dim; ++i)
		l.push_back("x" + std::to_string(k) + "_" + std::to_string(i));
	set_component(k, std::move(l));
}

void GradedSpace::set_component(int k, std::vector<std::string> labels)
{
	if (!window_.contains(k))
		throw std::out_of_range("degree " + std::to_string(k) + " outside window");
	if (labels.empty())
		labels_.erase(k);
	else
		labels_[k] = std::move(labels);
}

GradedSpace shift_space(const GradedSpace& v, int s)
{
	GradedSpace out(Window{v.window().min - s, v.window().max - s});
	for (int k = v.window().min; k <= v.window().max; ++k)
		if (v.dim(k) > 0)
			out.set_component(k - s, v.labels(k));
	return out;
}

GradedVector GradedVector::homogeneous(int degree, Vector v)
{
	GradedVector g;
	g.parts.emplace(degree, std::move(v));
	return g;
}

bool GradedVector::is_zero() const
{
	for (const auto& [k, v] : parts)
		if (!gls::is_zero(v))
			return false;
	return true;
}

GradedVector GradedVector::canonical() const
{
	GradedVector out;
	for (const auto& [k, v] : parts)
		if (!gls::is_zero(v))
			out.parts.emplace(k, v);
	return out;
}

GradedMap GradedMap::compose_after(const GradedMap& first) const
{
	GradedMap out;
	out.shift = first.shift + shift;
	for (const auto& [k, b] : first.blocks) {
		auto it = blocks.find(k + first.shift);
		if (it != blocks.end())
			out.blocks.emplace(k, it->second * b);
	}
	return out;
}

ApplyResult apply(const GradedMap& map, const GradedVector& x, const Window& target)
{
	ApplyResult r;
	for (const auto& [k, v] : x.parts) {
		auto it = map.blocks.find(k);
		if (it == map.blocks.end())
			continue;
		Vector y = it->second * v;
		if (gls::is_zero(y))
			continue;
		if (!target.contains(k + map.shift)) {
			r.truncated = true;
			continue;
		}
		auto& slot = r.value.parts[k + map.shift];
		if (slot.empty())
			slot = std::move(y);
		else
			axpy(1, y, slot);
	}
	return r;
}

GradedMap shift_map(const GradedMap& map, int s)
{
	GradedMap out;
	out.shift = map.shift;
	for (const auto& [k, b] : map.blocks)
		out.blocks.emplace(k - s, b);
	return out;
}

}  // namespace gls
