#include "gls/commands.hpp"
#include "gls/spec_document.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace gls;

namespace {

std::string fixture(const std::string& name) { return std::string(GLS_FIXTURES) + "/" + name; }

std::string slurp(const std::string& path)
{
	std::ifstream in(path);
	std::ostringstream s;
	s << in.rdbuf();
	return s.str();
}

const char* minimal_sl2 = R"({
  "lie_algebra": {"dim": 3, "basis": ["h", "e", "f"],
                  "brackets": [[0, 1, ["0", "2", "0"]], [0, 2, ["0", "0", "-2"]], [1, 2, ["1", "0", "0"]]]},
  "module": {"dim": 3, "action": [
    [["0","0","0"],["0","2","0"],["0","0","-2"]],
    [["0","0","1"],["-2","0","0"],["0","0","0"]],
    [["0","-1","0"],["0","0","0"],["2","0","0"]]]},
  "theta": [["1","0","0"],["0","1","0"],["0","0","1"]]
})";

bool has_error_at(const SpecParse& p, const std::string& prefix)
{
	for (const auto& e : p.errors)
		if (e.path.rfind(prefix, 0) == 0)
			return true;
	return false;
}

int shell(const std::string& cmd, std::string& out)
{
	out.clear();
	FILE* f = popen(cmd.c_str(), "r");
	std::array<char, 4096> buf;
	std::size_t n;
	while ((n = fread(buf.data(), 1, buf.size(), f)) > 0)
		out.append(buf.data(), n);
	const int status = pclose(f);
	return WEXITSTATUS(status);
}

}  // namespace

TEST(Spec, MinimalDocumentParses)
{
	const SpecParse p = parse_spec(minimal_sl2);
	ASSERT_TRUE(p.ok());
	const LieLeibnizTriple t = p.document->triple();
	EXPECT_EQ(t.g.constant(0, 1), (Vector{0, 2, 0}));
	EXPECT_EQ(t.g.constant(1, 0), (Vector{0, -2, 0}));
	EXPECT_TRUE(validate_triple(t).quadratic);
}

TEST(Spec, ThetaWrongRowCountNamesPath)
{
	std::string doc = minimal_sl2;
	doc.replace(doc.find(R"(["0","0","1"]])"), 15, R"(["0","0","1"]] )");
	doc.replace(doc.find(R"("theta": [)"), 10, R"("theta": [["0","0","0"],)");
	const SpecParse p = parse_spec(doc);
	EXPECT_FALSE(p.ok());
	EXPECT_TRUE(has_error_at(p, "/theta"));
}

TEST(Spec, ZeroDenominatorRejected)
{
	std::string doc = minimal_sl2;
	doc.replace(doc.find(R"(["1","0","0"],["0","1","0"])") + 1, 3, R"("1/0")");
	const SpecParse p = parse_spec(doc);
	EXPECT_FALSE(p.ok());
	EXPECT_TRUE(has_error_at(p, "/theta/0/0"));
}

TEST(Spec, UnknownKeysStrictOnly)
{
	std::string doc = minimal_sl2;
	doc.insert(1, R"("colour": "red", )");
	EXPECT_TRUE(has_error_at(parse_spec(doc), "/colour"));
	EXPECT_TRUE(parse_spec(doc, false).ok());
}

TEST(Spec, OtherStructuralErrors)
{
	EXPECT_TRUE(has_error_at(parse_spec("{"), "/"));
	std::string dup = minimal_sl2;
	dup.replace(dup.find("[[0, 1,"), 1, R"([[1, 0, ["0", "-2", "0"]], )");
	EXPECT_TRUE(has_error_at(parse_spec(dup), "/lie_algebra/brackets/1"));
	std::string range = minimal_sl2;
	range.replace(range.find("[1, 2,"), 6, "[1, 7,");
	EXPECT_TRUE(has_error_at(parse_spec(range), "/lie_algebra/brackets/2"));
	std::string frac = minimal_sl2;
	frac.replace(frac.find(R"(["1","0","0"],["0","1","0"])") + 1, 3, "1.5");
	EXPECT_TRUE(has_error_at(parse_spec(frac), "/theta/0/0"));
}

TEST(Spec, EmitParseRoundTrip)
{
	for (const char* f : {"adjoint-sl2.json", "hemi-sl2-fund.json", "scan-sl2-cartan.json", "gl2-crossed.json"}) {
		const SpecParse p = parse_spec(slurp(fixture(f)));
		ASSERT_TRUE(p.ok()) << f;
		const std::string once = emit_spec(*p.document);
		const SpecParse again = parse_spec(once);
		ASSERT_TRUE(again.ok());
		EXPECT_EQ(emit_spec(*again.document), once);
	}
}

TEST(Report, EmptyReportIsCanonical)
{
	const Report r;
	EXPECT_EQ(emit_report(r, Format::json),
	          "{\n  \"checks\": [],\n  \"command\": [],\n  \"dimensions\": {},\n  \"facts\": {},\n  \"truncated\": {}\n}\n");
	EXPECT_EQ(parse_report(emit_report(r, Format::json)), r);
}

TEST(Report, W3RoundTrip)
{
	const CommandResult c = run_command({"build", "--target", "W", "--n", "3", "--constants", "--format", "json"});
	ASSERT_EQ(c.exit_code, 0) << c.err;
	const Report back = parse_report(c.out);
	EXPECT_EQ(back, c.report);
	EXPECT_EQ(emit_report(back, Format::json), c.out);
	EXPECT_EQ(c.report.dimensions.at("W"), (std::map<int, std::size_t>{{-3, 0}, {-2, 3}, {-1, 9}, {0, 9}, {1, 3}, {2, 0}}));
}

TEST(Commands, BuildW2)
{
	const CommandResult c = run_command({"build", "--target", "W", "--n", "2"});
	EXPECT_EQ(c.exit_code, 0);
	const auto& d = c.report.dimensions.at("W");
	EXPECT_EQ(d.at(1), 2u);
	EXPECT_EQ(d.at(0), 4u);
	EXPECT_EQ(d.at(-1), 2u);
	EXPECT_EQ(d.at(-2), 0u);
	const CommandResult p = run_command({"build", "--target", "W", "--n", "2", "--via", "prolongation"});
	EXPECT_EQ(p.report.dimensions.at("W"), d);
}

TEST(Commands, FreeDims)
{
	const CommandResult c = run_command({"free-dims", "--gens", "1", "--max", "4"});
	EXPECT_EQ(c.exit_code, 0);
	EXPECT_EQ(c.report.facts.at("dims"), "(1,1,0,0)");
	EXPECT_EQ(run_command({"free-dims", "--gens", "2", "--max", "5"}).report.facts.at("dims"), "(2,3,2,3,6)");
}

TEST(Commands, CompareTheoremAdjoint)
{
	const CommandResult c = run_command({"compare-theorem", fixture("adjoint-sl2.json")});
	EXPECT_EQ(c.exit_code, 0) << c.err;
	EXPECT_NE(c.out.find("isomorphic: true"), std::string::npos);
}

TEST(Commands, CheckFailureExitsOne)
{
	const CommandResult bad = run_command({"check", fixture("failing-sl2-e.json")});
	EXPECT_EQ(bad.exit_code, 1);
	EXPECT_NE(bad.out.find("FAIL quadratic"), std::string::npos);
	const CommandResult ok = run_command({"check", fixture("hemi-sl2-fund.json")});
	EXPECT_EQ(ok.exit_code, 0);
	EXPECT_EQ(ok.report.facts.at("row"), "augmented_leibniz");
}

TEST(Commands, UsageErrorsExitTwo)
{
	EXPECT_EQ(run_command({}).exit_code, 2);
	EXPECT_EQ(run_command({"frobnicate"}).exit_code, 2);
	EXPECT_EQ(run_command({"build", "--target", "X"}).exit_code, 2);
	EXPECT_EQ(run_command({"build", "--target", "W"}).exit_code, 2);
	EXPECT_EQ(run_command({"check", "/nonexistent.json"}).exit_code, 2);
	const CommandResult c = run_command({"build", "--target", "L"});
	EXPECT_EQ(c.exit_code, 2);
	EXPECT_NE(c.err.find("\"path\""), std::string::npos);
}

TEST(Commands, ChainHemi)
{
	const CommandResult c = run_command({"chain", fixture("hemi-sl2-fund.json"), "--format", "json"});
	EXPECT_EQ(c.exit_code, 0);
	EXPECT_EQ(c.report.facts.at("row"), "augmented_leibniz");
	EXPECT_EQ(c.report.dimensions.at("L").at(2), 2u);
}

TEST(Binary, ExitCodesAndDeterminism)
{
	const std::string cli = GLS_CLI;
	std::string a, b;
	EXPECT_EQ(shell(cli + " build --target W --n 2 --format json", a), 0);
	EXPECT_EQ(shell(cli + " build --target W --n 2 --format json", b), 0);
	EXPECT_EQ(a, b);
	EXPECT_EQ(shell(cli + " check " + fixture("failing-sl2-e.json") + " 2>/dev/null", a), 1);
	EXPECT_EQ(shell(cli + " build --target Q 2>/dev/null", a), 2);
}
