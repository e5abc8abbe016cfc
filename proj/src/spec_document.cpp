#include "gls/spec_document.hpp"

#include <json.hpp>

#include <set>

namespace gls {

using nlohmann::json;

namespace {

class Parser {
public:
	explicit Parser(bool strict) : strict_(strict) {}

	std::vector<SchemaError> errors;

	void fail(const std::string& path, const std::string& msg) { errors.push_back({path, msg}); }

	bool keys(const json& j, const std::string& path, const std::set<std::string>& allowed,
	          const std::set<std::string>& required)
	{
		if (!j.is_object()) {
			fail(path.empty() ? "/" : path, "expected an object");
			return false;
		}
		bool ok = true;
		for (const auto& k : required)
			if (!j.contains(k)) {
				fail(path + "/" + k, "missing required key");
				ok = false;
			}
		if (strict_)
			for (const auto& [k, v] : j.items())
				if (!allowed.count(k)) {
					fail(path + "/" + k, "unknown key");
					ok = false;
				}
		return ok;
	}

	std::optional<std::size_t> count(const json& j, const std::string& path)
	{
		if (!j.is_number_unsigned()) {
			fail(path, "expected a non-negative integer");
			return std::nullopt;
		}
		return j.get<std::size_t>();
	}

	std::optional<Scalar> scalar(const json& j, const std::string& path)
	{
		try {
			if (j.is_string())
				return parse_scalar(j.get<std::string>());
			if (j.is_number_integer())
				return Scalar(j.dump());
		} catch (const std::exception& e) {
			fail(path, e.what());
			return std::nullopt;
		}
		fail(path, "expected a rational string \"p/q\" or an integer");
		return std::nullopt;
	}

	std::optional<Vector> vector(const json& j, const std::string& path, std::size_t len)
	{
		if (!j.is_array()) {
			fail(path, "expected an array");
			return std::nullopt;
		}
		if (j.size() != len) {
			fail(path, "expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
			return std::nullopt;
		}
		Vector v(len);
		bool ok = true;
		for (std::size_t i = 0; i < len; ++i) {
			auto s = scalar(j[i], path + "/" + std::to_string(i));
			if (s)
				v[i] = *s;
			else
				ok = false;
		}
		return ok ? std::optional<Vector>(v) : std::nullopt;
	}

	std::optional<Matrix> matrix(const json& j, const std::string& path, std::size_t rows, std::size_t cols)
	{
		if (!j.is_array()) {
			fail(path, "expected an array of rows");
			return std::nullopt;
		}
		if (j.size() != rows) {
			fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
			return std::nullopt;
		}
		Matrix m(rows, cols);
		bool ok = true;
		for (std::size_t r = 0; r < rows; ++r) {
			auto v = vector(j[r], path + "/" + std::to_string(r), cols);
			if (!v) {
				ok = false;
				continue;
			}
			m.set_row(r, *v);
		}
		return ok ? std::optional<Matrix>(m) : std::nullopt;
	}

	std::optional<std::vector<std::string>> labels(const json& j, const std::string& path, std::size_t dim)
	{
		if (!j.is_array() || j.size() != dim) {
			fail(path, "expected " + std::to_string(dim) + " basis labels");
			return std::nullopt;
		}
		std::vector<std::string> out;
		for (std::size_t i = 0; i < dim; ++i) {
			if (!j[i].is_string()) {
				fail(path + "/" + std::to_string(i), "expected a string");
				return std::nullopt;
			}
			out.push_back(j[i].get<std::string>());
		}
		return out;
	}

	std::optional<LieAlgebra> lie_algebra(const json& j)
	{
		const std::string p = "/lie_algebra";
		if (!keys(j, p, {"dim", "basis", "brackets"}, {"dim", "brackets"}))
			return std::nullopt;
		const auto dim = count(j["dim"], p + "/dim");
		if (!dim)
			return std::nullopt;
		LieAlgebra g = LieAlgebra::abelian(*dim);
		if (j.contains("basis")) {
			auto l = labels(j["basis"], p + "/basis", *dim);
			if (!l)
				return std::nullopt;
			g.labels = *l;
		}
		const json& br = j["brackets"];
		if (!br.is_array()) {
			fail(p + "/brackets", "expected an array of [i, j, coefficients]");
			return std::nullopt;
		}
		std::set<std::pair<std::size_t, std::size_t>> seen;
		bool ok = true;
		for (std::size_t t = 0; t < br.size(); ++t) {
			const std::string tp = p + "/brackets/" + std::to_string(t);
			const json& e = br[t];
			if (!e.is_array() || e.size() != 3) {
				fail(tp, "expected [i, j, coefficients]");
				ok = false;
				continue;
			}
			auto i = count(e[0], tp + "/0");
			auto k = count(e[1], tp + "/1");
			if (!i || !k) {
				ok = false;
				continue;
			}
			if (*i >= *dim || *k >= *dim) {
				fail(tp, "basis index out of range");
				ok = false;
				continue;
			}
			auto v = vector(e[2], tp + "/2", *dim);
			if (!v) {
				ok = false;
				continue;
			}
			if (*i == *k) {
				if (!gls::is_zero(*v)) {
					fail(tp, "bracket of a basis vector with itself must vanish");
					ok = false;
				}
				continue;
			}
			const auto key = std::minmax(*i, *k);
			if (!seen.insert(key).second) {
				fail(tp, "duplicate bracket for this pair");
				ok = false;
				continue;
			}
			g.constants[*i * *dim + *k] = *v;
			g.constants[*k * *dim + *i] = Scalar(-1) * *v;
		}
		return ok ? std::optional<LieAlgebra>(g) : std::nullopt;
	}

	std::optional<Representation> module(const json& j, std::size_t gdim)
	{
		const std::string p = "/module";
		if (!keys(j, p, {"dim", "basis", "action"}, {"dim", "action"}))
			return std::nullopt;
		const auto dim = count(j["dim"], p + "/dim");
		if (!dim)
			return std::nullopt;
		Representation r;
		r.dim = *dim;
		if (j.contains("basis")) {
			auto l = labels(j["basis"], p + "/basis", *dim);
			if (!l)
				return std::nullopt;
			r.labels = *l;
		} else {
			for (std::size_t a = 0; a < *dim; ++a)
				r.labels.push_back("u" + std::to_string(a));
		}
		const json& act = j["action"];
		if (!act.is_array() || act.size() != gdim) {
			fail(p + "/action", "expected one matrix per Lie algebra basis vector (" + std::to_string(gdim) + ")");
			return std::nullopt;
		}
		bool ok = true;
		for (std::size_t i = 0; i < gdim; ++i) {
			auto m = matrix(act[i], p + "/action/" + std::to_string(i), *dim, *dim);
			if (m)
				r.action.push_back(std::move(*m));
			else
				ok = false;
		}
		return ok ? std::optional<Representation>(r) : std::nullopt;
	}

private:
	bool strict_;
};

json scalar_json(const Scalar& s) { return to_string(s); }

json vector_json(const Vector& v)
{
	json a = json::array();
	for (const auto& s : v)
		a.push_back(scalar_json(s));
	return a;
}

json matrix_json(const Matrix& m)
{
	json a = json::array();
	for (std::size_t r = 0; r < m.rows(); ++r)
		a.push_back(vector_json(m.row(r)));
	return a;
}

}  // namespace

SpecParse parse_spec(const std::string& text, bool strict)
{
	SpecParse out;
	json j;
	try {
		j = json::parse(text);
	} catch (const json::parse_error& e) {
		out.errors.push_back({"/", std::string("invalid JSON: ") + e.what()});
		return out;
	}
	Parser p(strict);
	if (!p.keys(j, "", {"field", "lie_algebra", "module", "theta", "window", "options"},
	            {"lie_algebra", "module", "theta"})) {
		out.errors = p.errors;
		return out;
	}
	AlgebraSpecDocument d;
	if (j.contains("field") && j["field"] != "rational")
		p.fail("/field", "only \"rational\" is supported");
	auto g = p.lie_algebra(j["lie_algebra"]);
	std::optional<Representation> r;
	if (g)
		r = p.module(j["module"], g->dim);
	if (g && r) {
		auto th = p.matrix(j["theta"], "/theta", g->dim, r->dim);
		if (th)
			d.theta = *th;
	}
	if (j.contains("window")) {
		const json& w = j["window"];
		if (p.keys(w, "/window", {"min", "max"}, {"min", "max"})) {
			if (!w["min"].is_number_integer() || !w["max"].is_number_integer())
				p.fail("/window", "min and max must be integers");
			else if (w["min"].get<int>() > w["max"].get<int>())
				p.fail("/window", "min exceeds max");
			else
				d.window = Window{w["min"].get<int>(), w["max"].get<int>()};
		}
	}
	if (j.contains("options") && p.keys(j["options"], "/options", {"name", "description"}, {})) {
		for (const auto& [k, v] : j["options"].items()) {
			if (!v.is_string())
				p.fail("/options/" + k, "expected a string");
			else if (k == "name" || k == "description")
				d.options[k] = v.get<std::string>();
		}
	}
	if (!p.errors.empty()) {
		out.errors = p.errors;
		return out;
	}
	d.lie_algebra = *g;
	d.module = *r;
	out.document = std::move(d);
	return out;
}

std::string emit_spec(const AlgebraSpecDocument& d)
{
	json j = json::object();
	j["field"] = d.field;
	const LieAlgebra& g = d.lie_algebra;
	json br = json::array();
	for (std::size_t i = 0; i < g.dim; ++i)
		for (std::size_t k = i + 1; k < g.dim; ++k)
			if (!gls::is_zero(g.constant(i, k)))
				br.push_back(json::array({i, k, vector_json(g.constant(i, k))}));
	j["lie_algebra"] = json{{"dim", g.dim}, {"brackets", br}};
	if (g.labels.size() == g.dim)
		j["lie_algebra"]["basis"] = g.labels;
	json act = json::array();
	for (const auto& m : d.module.action)
		act.push_back(matrix_json(m));
	j["module"] = json{{"dim", d.module.dim}, {"action", act}};
	if (d.module.labels.size() == d.module.dim)
		j["module"]["basis"] = d.module.labels;
	j["theta"] = matrix_json(d.theta);
	if (d.window)
		j["window"] = json{{"min", d.window->min}, {"max", d.window->max}};
	if (!d.options.empty())
		j["options"] = d.options;
	return j.dump(2) + "\n";
}

AlgebraSpecDocument document_from_triple(const LieLeibnizTriple& t, std::optional<Window> w)
{
	AlgebraSpecDocument d;
	d.lie_algebra = t.g;
	d.module = t.rho;
	d.theta = t.theta;
	d.window = w;
	return d;
}

}  // namespace gls
