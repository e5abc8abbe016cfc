#include "gls/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace gls {

using nlohmann::json;

bool Report::passed() const
{
	for (const auto& c : checks)
		if (!c.pass)
			return false;
	return true;
}

std::vector<ConstantEntry> constant_entries(const GradedLieSuperalgebra& g)
{
	std::vector<ConstantEntry> out;
	const Window w = g.window();
	for (int i = w.min; i <= w.max; ++i)
		for (int j = i; j <= w.max; ++j) {
			if (!w.contains(i + j))
				continue;
			for (std::size_t a = 0; a < g.dim(i); ++a)
				for (std::size_t b = i == j ? a : 0; b < g.dim(j); ++b) {
					const Vector& v = g.constant(i, a, j, b);
					if (gls::is_zero(v))
						continue;
					ConstantEntry e{i, a, j, b, {}};
					for (const auto& s : v)
						e.value.push_back(to_string(s));
					out.push_back(std::move(e));
				}
		}
	return out;
}

namespace {

json dims_json(const std::map<int, std::size_t>& d)
{
	json arr = json::array();
	for (const auto& [k, n] : d)
		arr.push_back(json::array({k, n}));
	return arr;
}

json to_json(const Report& r)
{
	json j = json::object();
	j["command"] = r.command;
	json dims = json::object();
	for (const auto& [name, d] : r.dimensions)
		dims[name] = dims_json(d);
	j["dimensions"] = dims;
	json checks = json::array();
	for (const auto& c : r.checks)
		checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
	j["checks"] = checks;
	j["facts"] = r.facts;
	j["truncated"] = r.truncated;
	if (r.constants) {
		json cs = json::array();
		for (const auto& e : *r.constants)
			cs.push_back(json::array({e.i, e.a, e.j, e.b, e.value}));
		j["constants"] = cs;
	}
	if (r.seconds)
		j["seconds"] = *r.seconds;
	return j;
}

std::string pad(const std::string& s, std::size_t w)
{
	return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

std::string text(const Report& r)
{
	std::ostringstream o;
	o << "command:";
	for (const auto& a : r.command)
		o << ' ' << a;
	o << '\n';
	for (const auto& [name, d] : r.dimensions) {
		o << "dimensions " << name << ":\n";
		o << "  degree  dim\n";
		for (auto it = d.rbegin(); it != d.rend(); ++it)
			o << "  " << pad(std::to_string(it->first), 6) << "  " << pad(std::to_string(it->second), 3) << '\n';
	}
	if (!r.checks.empty()) {
		o << "checks:\n";
		for (const auto& c : r.checks) {
			o << "  " << (c.pass ? "PASS" : "FAIL") << ' ' << c.name;
			if (!c.witness.empty())
				o << " (" << c.witness << ')';
			o << '\n';
		}
	}
	for (const auto& [k, v] : r.facts)
		o << k << ": " << v << '\n';
	for (const auto& [k, v] : r.truncated)
		o << "truncated " << k << ": " << (v ? "true" : "false") << '\n';
	if (r.constants) {
		o << "constants:\n";
		for (const auto& e : *r.constants) {
			o << "  [" << e.i << ':' << e.a << ", " << e.j << ':' << e.b << "] =";
			for (const auto& s : e.value)
				o << ' ' << s;
			o << '\n';
		}
	}
	if (r.seconds)
		o << "seconds: " << std::fixed << std::setprecision(3) << *r.seconds << '\n';
	return o.str();
}

}  // namespace

std::string emit_report(const Report& r, Format f)
{
	if (f == Format::text)
		return text(r);
	return to_json(r).dump(2) + "\n";
}

Report parse_report(const std::string& json_text)
{
	try {
		const json j = json::parse(json_text);
		Report r;
		r.command = j.at("command").get<std::vector<std::string>>();
		for (const auto& [name, arr] : j.at("dimensions").items()) {
			auto& d = r.dimensions[name];
			for (const auto& p : arr)
				d[p.at(0).get<int>()] = p.at(1).get<std::size_t>();
		}
		for (const auto& c : j.at("checks"))
			r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("witness").get<std::string>()});
		r.facts = j.at("facts").get<std::map<std::string, std::string>>();
		r.truncated = j.at("truncated").get<std::map<std::string, bool>>();
		if (j.contains("constants")) {
			r.constants.emplace();
			for (const auto& e : j.at("constants"))
				r.constants->push_back({e.at(0).get<int>(), e.at(1).get<std::size_t>(), e.at(2).get<int>(),
				                        e.at(3).get<std::size_t>(), e.at(4).get<std::vector<std::string>>()});
		}
		if (j.contains("seconds"))
			r.seconds = j.at("seconds").get<double>();
		return r;
	} catch (const json::exception& e) {
		throw std::invalid_argument(std::string("malformed report: ") + e.what());
	}
}

}  // namespace gls
