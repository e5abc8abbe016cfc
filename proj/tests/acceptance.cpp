// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "gls/commands.hpp"
#include "gls/extension.hpp"
#include "gls/free_lie.hpp"
#include "gls/ideals.hpp"
#include "gls/kantor.hpp"
#include "gls/lie_leibniz.hpp"
#include "gls/morphism.hpp"

#include "oracles.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace gls;

namespace {

// Pinned limits (seconds).
constexpr double w_tower_limit = 30.0;
constexpr double adjoint_limit = 5.0;
constexpr double hemi_limit = 10.0;

std::string fixture(const std::string& name) { return std::string(GLS_FIXTURES) + "/" + name; }

class Criterion {
public:
	explicit Criterion(std::ostringstream& log) : log_(log) {}
	void expect(bool ok, const std::string& what)
	{
		if (!ok) {
			pass_ = false;
			log_ << "    failed: " << what << '\n';
		}
	}
	bool pass() const { return pass_; }

private:
	std::ostringstream& log_;
	bool pass_ = true;
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
	return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string join(const std::map<int, std::size_t>& d)
{
	std::string s;
	for (auto it = d.rbegin(); it != d.rend(); ++it)
		s += (s.empty() ? "" : " ") + std::to_string(it->first) + ":" + std::to_string(it->second);
	return s;
}

std::map<int, std::size_t> nonzero(const std::map<int, std::size_t>& d)
{
	std::map<int, std::size_t> out;
	for (const auto& [k, v] : d)
		if (v)
			out[k] = v;
	return out;
}

bool criterion_1(std::ostringstream& log, std::string& detail)
{
	Criterion c(log);
	const auto t0 = std::chrono::steady_clock::now();
	for (int n = 1; n <= 4; ++n) {
		std::map<int, std::size_t> expect;
		for (int k = -n; k <= 2; ++k) {
			const int p = 1 - k;
			expect[k] = static_cast<std::size_t>(oracle::binomial(n, p) * n);
		}
		for (const char* via : {"minimal", "prolongation"}) {
			CommandResult r = run_command({"build", "--target", "W", "--n", std::to_string(n), "--via", via});
			c.expect(r.exit_code == 0, "build W n=" + std::to_string(n) + " via " + via + " exit code");
			const auto& got = r.report.dimensions["W"];
			c.expect(got == expect, "W(" + std::to_string(n) + ") via " + via + ": " + join(got));
		}
		if (n == 3)
			detail = "W(3) " + join(nonzero(expect));
	}
	const double t = seconds_since(t0);
	c.expect(t < w_tower_limit, "runtime " + std::to_string(t) + " s");
	detail += ", " + std::to_string(t).substr(0, 5) + " s";
	return c.pass();
}

bool criterion_2(std::ostringstream& log, std::string& detail)
{
	Criterion c(log);
	for (std::size_t n = 1; n <= 3; ++n) {
		const UniversalAmbient u = UniversalAmbient::kantor(n, make_window(-3, 1));
		std::size_t expect = n * n;
		for (int k = 1; k <= 3; ++k) {
			expect *= n;
			c.expect(u.dim(-k) == expect, "dim U_-" + std::to_string(k) + " for n=" + std::to_string(n));
		}
	}
	// the materialized tower through the CLI agrees and satisfies the identities
	for (int n = 1; n <= 2; ++n) {
		CommandResult r = run_command({"build", "--target", "U", "--n", std::to_string(n), "--min", "-3", "--max", "1"});
		c.expect(r.exit_code == 0, "build U n=" + std::to_string(n));
		const auto& d = r.report.dimensions["U"];
		std::size_t e = n * n;
		for (int k = 1; k <= 3; ++k) {
			e *= n;
			c.expect(d.count(-k) && d.at(-k) == e, "materialized U_-" + std::to_string(k));
		}
	}
	detail = "n^(k+2) for n<=3, k<=3";
	return c.pass();
}

bool criterion_3(std::ostringstream& log, std::string& detail)
{
	Criterion c(log);
	const std::map<std::size_t, std::vector<std::size_t>> expect{{1, {1, 1, 0, 0, 0}}, {2, {2, 3, 2, 3, 6}}};
	for (const auto& [gens, dims] : expect) {
		CommandResult r = run_command({"free-dims", "--gens", std::to_string(gens), "--max", "5"});
		c.expect(r.exit_code == 0, "free-dims exit code");
		const std::vector<long long> pbw = oracle::super_pbw_dims(static_cast<long long>(gens), 5);
		for (int p = 1; p <= 5; ++p) {
			const std::size_t got = r.report.dimensions["free"][p];
			const std::size_t tensor_rank =
			    oracle::bareiss_rank(Matrix::from_rows(oracle::words(gens, p), oracle::lie_span_oracle(gens, p)));
			c.expect(got == dims[p - 1], "free dim " + std::to_string(p));
			c.expect(static_cast<long long>(got) == pbw[p], "PBW oracle at " + std::to_string(p));
			c.expect(got == tensor_rank, "tensor-rank oracle at " + std::to_string(p));
		}
	}
	detail = "(1,1,0,0,0) and (2,3,2,3,6)";
	return c.pass();
}

bool criterion_4(std::ostringstream& log, std::string& detail)
{
	Criterion c(log);
	const auto t0 = std::chrono::steady_clock::now();
	const LieLeibnizTriple t = adjoint_triple(sl2());
	c.expect(validate_triple(t).quadratic, "quadratic constraint");
	CommandResult l = run_command({"build", "--target", "L", fixture("adjoint-sl2.json")});
	c.expect(l.exit_code == 0, "build L");
	const auto got = nonzero(l.report.dimensions["L"]);
	c.expect(got == std::map<int, std::size_t>{{-1, 1}, {0, 3}, {1, 3}}, "L dims " + join(got));
	CommandResult cmp = run_command({"compare-theorem", fixture("adjoint-sl2.json")});
	c.expect(cmp.exit_code == 0 && cmp.report.facts["isomorphic"] == "true", "compare-theorem");
	c.expect(cmp.report.facts["bijective"] == "true" && cmp.report.facts["bracket preserving"] == "true",
	         "bracket-preserving bijection");
	const double s = seconds_since(t0);
	c.expect(s < adjoint_limit, "runtime " + std::to_string(s) + " s");
	detail = "L " + join(got) + ", isomorphic, " + std::to_string(s).substr(0, 5) + " s";
	return c.pass();
}

bool criterion_5(std::ostringstream& log, std::string& detail)
{
	Criterion c(log);
	const auto t0 = std::chrono::steady_clock::now();
	const LieLeibnizTriple t = hemi_semidirect(sl2(), sl2_fundamental());
	const LeibnizAlgebra l = leibniz_from_triple(t);
	// (a, x) . (b, y) = ([a, b], a . y), written out from sl2 and the fundamental matrices
	const LieAlgebra g = sl2();
	const Representation m = sl2_fundamental();
	for (std::size_t i = 0; i < 5; ++i)
		for (std::size_t j = 0; j < 5; ++j) {
			Vector expect(5);
			if (i < 3 && j < 3)
				for (std::size_t k = 0; k < 3; ++k)
					expect[k] = g.constant(i, j)[k];
			if (i < 3 && j >= 3)
				for (std::size_t r = 0; r < 2; ++r)
					expect[3 + r] = m.action[i](r, j - 3);
			c.expect(l.product[i * 5 + j] == expect, "Leibniz product entry " + std::to_string(i) + "," + std::to_string(j));
		}
	CommandResult ch = run_command({"chain", fixture("hemi-sl2-fund.json")});
	c.expect(ch.exit_code == 0, "chain");
	const auto dims = ch.report.dimensions["L"];
	for (const auto& [k, v] : dims) {
		const std::map<int, std::size_t> e{{-1, 1}, {0, 3}, {1, 5}, {2, 2}};
		c.expect(v == (e.count(k) ? e.at(k) : 0u), "L dim at " + std::to_string(k));
	}
	// M[-2] -> (g + M)[-1] -> g -> R[1]: injective, onto g, then zero since theta is invariant
	const auto& ranks = ch.report.dimensions["rank d"];
	c.expect(ranks.at(2) == 2 && ranks.at(1) == 3 && ranks.at(0) == 0, "chain ranks");
	CommandResult cmp = run_command({"compare-theorem", fixture("hemi-sl2-fund.json")});
	c.expect(cmp.exit_code == 0 && cmp.report.facts["isomorphic"] == "true", "compare-theorem");
	const double s = seconds_since(t0);
	c.expect(s < hemi_limit, "runtime " + std::to_string(s) + " s");
	detail = "L " + join(nonzero(dims)) + ", isomorphic, " + std::to_string(s).substr(0, 5) + " s";
	return c.pass();
}

bool criterion_6(std::ostringstream& log, std::string& detail)
{
	Criterion c(log);
	std::size_t algebras = 0, triples = 0;
	auto ids = [&](const GradedLieSuperalgebra& a, const std::string& what) {
		const IdentityReport r = check_super_identities(a);
		triples += r.triples_checked;
		++algebras;
		c.expect(r.passed, what + " identities");
	};
	for (int n = 1; n <= 3; ++n) {
		const GradedLieSuperalgebra w = build_W(n, make_window(-n - 1, 2));
		ids(w, "W");
		c.expect(is_transitive(w), "W transitive");
		const GradedLieSuperalgebra again = minimal_extension(local_part(w), w.window());
		c.expect(dimensions(again) == dimensions(w), "minimal idempotent dims");
		DegreeMaps id;
		for (int k = -1; k <= 1; ++k)
			id[k] = Matrix::identity(w.dim(k));
		const auto f = extend_local_morphism(w, again, id);
		c.expect(f && check_isomorphism(w, again, *f).isomorphic(), "minimal idempotent iso");
		ids(free_lie_super(n, make_window(1, 5)).algebra, "free");
		ids(maximal_extension(w_local_part(n), make_window(-2, 3)), "maximal");
	}
	ids(build_universal(2, make_window(-2, 3)), "U");

	const std::vector<LieLeibnizTriple> fixtures{adjoint_triple(sl2()), hemi_semidirect(sl2(), sl2_fundamental()),
	                                             scan_fixture(), gl2_crossed_module(), zero_theta(sl2(), adjoint(sl2()))};
	for (const auto& t : fixtures) {
		const LBuild b = build_L(t);
		ids(b.tower.t.algebra, "T");
		ids(b.l, "L");
		const DglaChain d = differential_d_theta(t, b.l, b.theta);
		c.expect(d.squares_to_zero, "d^2 = 0");
		c.expect(d.derivation, "d derivation");
		const KComputation k = compute_K(t);
		c.expect(k.agree, "K two-way agreement");
		c.expect(k.commutes_with_r_theta, "[R_theta, K] = 0");
		if (b.l.dim(-1) > 0) {
			const GradedLieSuperalgebra m = minimal_extension(local_part(b.l), make_window(-3, 3));
			ids(m, "minimal of L local part");
			c.expect(is_transitive(m), "minimal transitive");
		}
		const LeibnizAlgebra l = leibniz_from_triple(t);
		c.expect(leibniz_from_triple(triple_from_leibniz(l)).product == l.product, "leibniz round trip");
	}

	// redundant witnesses give the same mixed bracket
	const GradedLieSuperalgebra g = maximal_extension(w_local_part(2), make_window(-2, 3));
	const BracketExpression e = bracket_witnesses(g, 2, 1);
	BracketExpression swapped = e;
	for (auto& row : swapped.rows)
		for (auto& term : row)
			std::swap(term.left, term.right);
	for (int p : {-1, 0})
		for (std::size_t r = 0; r < g.dim(2); ++r)
			for (std::size_t t = 0; t < g.dim(p); ++t) {
				const Vector z = unit_vector(g.dim(p), t);
				c.expect(extend_mixed_bracket(g, e, r, p, z) == extend_mixed_bracket(g, swapped, r, p, z),
				         "witness independence");
			}
	detail = std::to_string(algebras) + " algebras, " + std::to_string(triples) + " basis triples";
	return c.pass();
}

int run_cli(const std::string& args, std::string& out)
{
	out.clear();
	FILE* f = popen((std::string(GLS_CLI) + " " + args + " 2>&1").c_str(), "r");
	if (!f)
		return -1;
	std::array<char, 4096> buf;
	std::size_t n;
	while ((n = fread(buf.data(), 1, buf.size(), f)) > 0)
		out.append(buf.data(), n);
	return pclose(f);
}

bool criterion_7(std::ostringstream& log, std::string& detail)
{
	Criterion c(log);
	const std::vector<std::string> commands{
	    "check " + fixture("adjoint-sl2.json"),
	    "check " + fixture("failing-sl2-e.json"),
	    "build --target W --n 3",
	    "build --target W --n 2 --via prolongation",
	    "build --target U --n 2 --constants",
	    "build --target L " + fixture("hemi-sl2-fund.json") + " --constants",
	    "build --target T " + fixture("adjoint-sl2.json"),
	    "build --target P " + fixture("scan-sl2-cartan.json"),
	    "compare-theorem " + fixture("adjoint-sl2.json"),
	    "compare-theorem " + fixture("zero-theta-sl2.json"),
	    "free-dims --gens 2 --max 5",
	    "chain " + fixture("hemi-sl2-fund.json"),
	    "build --target Q",
	};
	std::size_t runs = 0;
	for (const auto& cmd : commands)
		for (const char* fmt : {"text", "json"}) {
			std::string a, b;
			const std::string full = cmd + " --format " + fmt;
			const int ea = run_cli(full, a), eb = run_cli(full, b);
			c.expect(ea == eb && a == b && !a.empty(), "byte-identical: " + full);
			runs += 2;
		}
	detail = std::to_string(runs) + " runs";
	return c.pass();
}

}  // namespace

int main()
{
	const std::vector<std::pair<std::string, std::function<bool(std::ostringstream&, std::string&)>>> criteria{
	    {"1 W(n) dimension tower", criterion_1},
	    {"2 Kantor tower", criterion_2},
	    {"3 free super dimensions", criterion_3},
	    {"4 sl2 adjoint triple", criterion_4},
	    {"5 hemi-semidirect sl2 + fundamental", criterion_5},
	    {"6 property suites", criterion_6},
	    {"7 determinism", criterion_7},
	};
	bool all = true;
	for (const auto& [name, run] : criteria) {
		std::ostringstream log;
		std::string detail;
		bool ok = false;
		try {
			ok = run(log, detail);
		} catch (const std::exception& e) {
			log << "    exception: " << e.what() << '\n';
		}
		std::cout << (ok ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : " (" + detail + ")") << '\n'
		          << log.str();
		all = all && ok;
	}
	return all ? 0 : 1;
}
