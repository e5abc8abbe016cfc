#include "gls/commands.hpp"

#include "gls/extension.hpp"
#include "gls/free_lie.hpp"
#include "gls/kantor.hpp"
#include "gls/lie_leibniz.hpp"
#include "gls/spec_document.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

namespace gls {

namespace {

using nlohmann::json;

struct UsageError {
	std::string path;
	std::string message;
};

struct Options {
	std::string format = "text";
	bool timing = false;
	bool constants = false;
	bool lenient = false;
	std::string spec;
	std::string target;
	std::optional<std::size_t> n;
	std::optional<int> min;
	std::optional<int> max;
	std::string via = "minimal";
	std::size_t gens = 0;
};

std::string error_line(const std::string& kind, const std::string& path, const std::string& message)
{
	return json{{"error", kind}, {"path", path}, {"message", message}}.dump() + "\n";
}

std::string witness(const IdentityReport& r)
{
	if (r.passed || !r.first_violation)
		return "";
	std::ostringstream o;
	o << r.first_violation->kind << " degrees";
	for (int d : r.first_violation->degrees)
		o << ' ' << d;
	o << " indices";
	for (auto i : r.first_violation->indices)
		o << ' ' << i;
	return o.str();
}

std::map<int, std::size_t> dims_of(const GradedLieSuperalgebra& g)
{
	std::map<int, std::size_t> d;
	for (int k = g.window().min; k <= g.window().max; ++k)
		d[k] = g.dim(k);
	return d;
}

std::string tuple(const std::map<int, std::size_t>& d)
{
	std::string s = "(";
	for (const auto& [k, v] : d)
		s += (s.size() > 1 ? "," : "") + std::to_string(v);
	return s + ")";
}

const char* yes(bool b) { return b ? "true" : "false"; }

class Dispatcher {
public:
	Dispatcher(const Options& o, CommandResult& res) : o_(o), res_(res) {}

	void describe(const std::string& name, const GradedLieSuperalgebra& g)
	{
		res_.report.dimensions[name] = dims_of(g);
		res_.report.truncated[name] = g.truncated();
		const IdentityReport ids = check_super_identities(g);
		res_.report.checks.push_back({name + " super_identities", ids.passed, witness(ids)});
		if (o_.constants)
			res_.report.constants = constant_entries(g);
	}

	AlgebraSpecDocument load_spec()
	{
		if (o_.spec.empty())
			throw UsageError{"<spec>", "a spec file is required"};
		std::ifstream in(o_.spec, std::ios::binary);
		if (!in)
			throw UsageError{o_.spec, "cannot read file"};
		std::ostringstream buf;
		buf << in.rdbuf();
		SpecParse p = parse_spec(buf.str(), !o_.lenient);
		if (!p.ok()) {
			for (const auto& e : p.errors)
				res_.err += error_line("schema", o_.spec + "#" + e.path, e.message);
			throw UsageError{};
		}
		return std::move(*p.document);
	}

	Window window(Window fallback, const std::optional<Window>& from_spec = std::nullopt) const
	{
		Window w = from_spec.value_or(fallback);
		if (o_.min)
			w.min = *o_.min;
		if (o_.max)
			w.max = *o_.max;
		if (w.min > w.max)
			throw UsageError{"--min/--max", "empty window"};
		return w;
	}

	/// Records the triple checks; false when nothing can be built from it.
	bool triple_checks(const LieLeibnizTriple& t)
	{
		const TripleReport r = validate_triple(t);
		res_.report.checks.push_back({"well_formed", !r.malformed, r.malformed.value_or("")});
		if (r.malformed)
			return false;
		std::string qw;
		if (r.quadratic_witness)
			qw = "theta(u_" + std::to_string((*r.quadratic_witness)[0]) + " . u_" +
			     std::to_string((*r.quadratic_witness)[1]) + ") != [theta u_" +
			     std::to_string((*r.quadratic_witness)[0]) + ", theta u_" +
			     std::to_string((*r.quadratic_witness)[1]) + "]";
		res_.report.checks.push_back({"quadratic", r.quadratic, qw});
		auto& f = res_.report.facts;
		f["strict"] = yes(r.strict);
		if (r.strict_witness)
			f["strict witness"] = "(x_" + std::to_string((*r.strict_witness)[0]) + ", u_" +
			                      std::to_string((*r.strict_witness)[1]) + ")";
		f["theta surjective"] = yes(r.surjective);
		f["V faithful"] = yes(r.faithful);
		f["theta nonzero"] = yes(r.theta_nonzero);
		return r.quadratic;
	}

	void check()
	{
		const LieLeibnizTriple t = load_spec().triple();
		if (!triple_checks(t))
			return;
		const LeibnizAlgebra l = leibniz_from_triple(t);
		const auto v = l.leibniz_violation();
		res_.report.checks.push_back(
		    {"leibniz_rule", !v,
		     v ? "(" + std::to_string((*v)[0]) + "," + std::to_string((*v)[1]) + "," + std::to_string((*v)[2]) + ")"
		       : ""});
		const KComputation k = compute_K(t);
		res_.report.checks.push_back({"K two-way agreement", k.agree, ""});
		res_.report.checks.push_back({"[R_theta, K] = 0", k.commutes_with_r_theta, ""});
		res_.report.facts["K dim"] = std::to_string(k.by_invariance.dim());
		res_.report.facts["R_theta dim"] = std::to_string(orbit_R_theta(t).dim());
		res_.report.facts["row"] = to_string(table_row(t));
	}

	void build()
	{
		const std::string& tg = o_.target;
		if (tg == "U" || tg == "W") {
			if (!o_.spec.empty() && tg == "W")
				throw UsageError{"<spec>", "target W takes --n, not a spec"};
			if (tg == "U" && !o_.spec.empty()) {
				const AlgebraSpecDocument d = load_spec();
				const Window w = window(Window{-2, 3}, d.window);
				const UniversalAmbient u(d.lie_algebra, d.module, w);
				Family s = free_positive_family(d.module.dim, w);
				for (int k = w.min; k <= std::min(0, w.max); ++k)
					s[k] = Subspace::full(u.dim(k));
				Subquotient q = materialize_subquotient(u, s, Family{}, w, false);
				q.algebra.set_truncated(true);
				describe("U", q.algebra);
				return;
			}
			if (!o_.n || *o_.n == 0)
				throw UsageError{"--n", "target " + tg + " needs --n N with N >= 1"};
			const std::size_t n = *o_.n;
			if (tg == "U") {
				describe("U", build_universal(n, window(Window{-2, 3})));
				return;
			}
			const Window w = window(Window{-static_cast<int>(n), 2});
			if (w.min > -1 || w.max < 1)
				throw UsageError{"--min/--max", "window must contain [-1,1]"};
			if (o_.via == "prolongation") {
				if (w.max < 2)
					throw UsageError{"--max", "the prolongation path needs degree 2"};
				Prolongation p = prolongation(n, degree_two_generators(n, w), w);
				describe("W", p.result.algebra);
			} else {
				const GradedLieSuperalgebra g = build_W(n, w);
				describe("W", g);
				if (w.min <= -2 && w.max >= 2)
					res_.report.facts["transitive"] = yes(is_transitive(g));
			}
			res_.report.facts["via"] = o_.via;
			return;
		}
		const AlgebraSpecDocument d = load_spec();
		const LieLeibnizTriple t = d.triple();
		const Window w = window(default_lie_leibniz_window(), d.window);
		if (w.min > -1 || w.max < 2)
			throw UsageError{"--min/--max", "window must contain [-1,2]"};
		if (!triple_checks(t))
			return;
		if (tg == "P") {
			const Subspace rt = orbit_R_theta(t);
			std::vector<Vector> images;
			for (std::size_t i = 0; i < rt.dim(); ++i)
				images.push_back(rho_compose(t, rt.basis_vector(i)));
			const std::size_t n = t.n();
			describe("P", build_P(n, Subspace::span(n * n * n, images), w).algebra);
		} else if (tg == "T") {
			describe("T", build_T(t, w).t.algebra);
		} else if (tg == "L") {
			const LBuild b = build_L(t, w);
			describe("L", b.l);
			res_.report.facts["transitive"] = yes(b.transitive);
		}
	}

	void compare()
	{
		const AlgebraSpecDocument d = load_spec();
		const LieLeibnizTriple t = d.triple();
		const Window w = window(default_lie_leibniz_window(), d.window);
		if (w.min > -1 || w.max < 2)
			throw UsageError{"--min/--max", "window must contain [-1,2]"};
		if (!triple_checks(t))
			return;
		const TheoremReport r = compare_with_P(t, w);
		auto& f = res_.report.facts;
		f["g simple"] = yes(r.g_simple);
		f["hypotheses met"] = yes(r.hypotheses_met());
		f["bijective"] = yes(r.iso.bijective);
		f["bracket preserving"] = yes(r.iso.preserves_bracket);
		f["isomorphic"] = yes(r.iso.isomorphic());
		if (r.iso.failure)
			f["failure"] = *r.iso.failure;
		res_.report.dimensions["L"] = r.l_dims;
		res_.report.dimensions["P"] = r.p_dims;
		if (r.hypotheses_met())
			res_.report.checks.push_back({"L isomorphic to P", r.iso.isomorphic(), r.iso.failure.value_or("")});
	}

	void free_dims()
	{
		if (o_.gens == 0 || !o_.max || *o_.max < 1)
			throw UsageError{"--gens/--max", "need --gens K >= 1 and --max D >= 1"};
		const FreeLieSuper f = free_lie_super(o_.gens, Window{1, *o_.max});
		describe("free", f.algebra);
		res_.report.facts["dims"] = tuple(res_.report.dimensions["free"]);
	}

	void chain()
	{
		const AlgebraSpecDocument d = load_spec();
		const LieLeibnizTriple t = d.triple();
		const Window w = window(default_lie_leibniz_window(), d.window);
		if (w.min > -1 || w.max < 2)
			throw UsageError{"--min/--max", "window must contain [-1,2]"};
		if (!triple_checks(t))
			return;
		const ChainReport c = dgla_chain_report(t, w);
		res_.report.dimensions["L"] = c.dims;
		res_.report.dimensions["rank d"] = c.map_ranks;
		for (const auto& [k, name] : c.map_names)
			res_.report.facts["d on L_" + std::to_string(k)] = name;
		res_.report.facts["row"] = to_string(c.row);
		res_.report.facts["R_theta dim"] = std::to_string(c.r_theta_dim);
		res_.report.facts["ideal of squares dim"] = std::to_string(c.ideal_of_squares.dim());
		res_.report.facts["L_-2 dim"] = std::to_string(c.r_theta_square_dim);
		res_.report.checks.push_back({"d^2 = 0", c.chain.squares_to_zero, c.chain.squares_to_zero ? "" : c.chain.failure.value_or("")});
		res_.report.checks.push_back({"d is a derivation", c.chain.derivation, c.chain.derivation ? "" : c.chain.failure.value_or("")});
	}

private:
	const Options& o_;
	CommandResult& res_;
};

}  // namespace

CommandResult run_command(const std::vector<std::string>& argv)
{
	CommandResult res;
	Options o;
	CLI::App app{"Exact graded Lie superalgebra toolkit", "gls"};
	app.require_subcommand(1);
	app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
	app.add_flag("--timing", o.timing, "append wall-clock seconds to the report");
	app.add_flag("--constants", o.constants, "include structure constants");
	app.add_flag("--lenient", o.lenient, "ignore unknown keys in spec files");

	auto* check = app.add_subcommand("check", "validate a Lie-Leibniz triple");
	check->add_option("spec", o.spec)->required();
	auto* build = app.add_subcommand("build", "build a graded Lie superalgebra");
	build->add_option("--target", o.target)->required()->check(CLI::IsMember({"U", "W", "P", "T", "L"}));
	build->add_option("--n", o.n, "dim U_1 for U and W");
	build->add_option("--min", o.min);
	build->add_option("--max", o.max);
	build->add_option("--via", o.via, "W only: minimal or prolongation")->check(CLI::IsMember({"minimal", "prolongation"}));
	build->add_option("spec", o.spec);
	auto* compare = app.add_subcommand("compare-theorem", "compare L(g,V,theta) with P(V[-1], rho R_theta)");
	compare->add_option("spec", o.spec)->required();
	compare->add_option("--min", o.min);
	compare->add_option("--max", o.max);
	auto* free = app.add_subcommand("free-dims", "dimensions of the free Lie superalgebra on odd generators");
	free->add_option("--gens", o.gens)->required();
	free->add_option("--max", o.max)->required();
	auto* chain = app.add_subcommand("chain", "the complex (L, d_theta)");
	chain->add_option("spec", o.spec)->required();
	chain->add_option("--min", o.min);
	chain->add_option("--max", o.max);
	for (auto* s : {check, build, compare, free, chain}) {
		s->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
		s->add_flag("--timing", o.timing);
		s->add_flag("--constants", o.constants);
		s->add_flag("--lenient", o.lenient);
	}

	std::vector<std::string> args(argv.rbegin(), argv.rend());
	try {
		app.parse(args);
	} catch (const CLI::CallForHelp&) {
		res.out = app.help();
		return res;
	} catch (const CLI::CallForAllHelp&) {
		res.out = app.help("", CLI::AppFormatMode::All);
		return res;
	} catch (const CLI::ParseError& e) {
		res.exit_code = exit_code::usage;
		res.err = error_line("usage", "argv", e.what());
		return res;
	}
	res.format = o.format == "json" ? Format::json : Format::text;
	res.report.command = argv;
	res.subcommand = app.get_subcommands().front()->get_name();

	const auto start = std::chrono::steady_clock::now();
	Dispatcher d(o, res);
	try {
		if (res.subcommand == "check")
			d.check();
		else if (res.subcommand == "build")
			d.build();
		else if (res.subcommand == "compare-theorem")
			d.compare();
		else if (res.subcommand == "free-dims")
			d.free_dims();
		else
			d.chain();
	} catch (const UsageError& e) {
		res.exit_code = exit_code::usage;
		if (!e.message.empty())
			res.err += error_line("usage", e.path, e.message);
		return res;
	} catch (const std::exception& e) {
		res.exit_code = exit_code::check_failure;
		res.err += error_line("computation", res.subcommand, e.what());
		res.report.checks.push_back({"computation", false, e.what()});
	}
	if (o.timing)
		res.report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	if (res.exit_code == exit_code::pass && !res.report.passed())
		res.exit_code = exit_code::check_failure;
	res.out = emit_report(res.report, res.format);
	return res;
}

}  // namespace gls
