#include <gtest/gtest.h>

#include "json.hpp"
#include "liefreedom/cli.hpp"

using namespace liefreedom;

namespace {

const char* kShirshov = R"(field Q
generators y1 y2 y3
series base=1 steps=3,2
truncate 7
relator [y1, y3]
check theorem1
)";

}  // namespace

TEST(Parse, MinimalDocument)
{
	auto doc = parse_presentation(kShirshov);
	ASSERT_TRUE(doc.field.has_value());
	EXPECT_TRUE(doc.field->is_rational());
	EXPECT_EQ(doc.generators, (std::vector<std::string>{"y1", "y2", "y3"}));
	ASSERT_TRUE(doc.series.has_value());
	EXPECT_EQ(*doc.series, (SeriesSpec{1, {3, 2}}));
	EXPECT_EQ(doc.truncate, 7);
	ASSERT_EQ(doc.relators.size(), 1u);
	EXPECT_EQ(doc.checks, (std::vector<CheckMode>{CheckMode::Theorem1}));

	const LieExpr& r = doc.relators[0];
	ASSERT_EQ(r.terms.size(), 1u);
	const LieFactor& f = r.terms[0].factor;
	EXPECT_EQ(f.kind, LieFactor::Kind::Bracket);
	EXPECT_EQ(f.a->terms[0].factor.name, "y1");
	EXPECT_EQ(f.b->terms[0].factor.name, "y3");
}

TEST(Parse, ScalarExpressionEvaluates)
{
	auto doc = parse_presentation("generators y1 y2 y3\nrelator 1/2*[y1,[y2,y3]] + [y2,y1] - 3*(y1 - y2)\ncheck fox\n");
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(3), 4);
	LieElement got = evaluate(doc.relators[0], *alg, Field::rationals());
	auto y = [&](int i) { return alg->generator(i); };
	LieElement want = Scalar::fraction(1, 2) * alg->bracket(y(0), alg->bracket(y(1), y(2))) + alg->bracket(y(1), y(0)) - Scalar(3) * (y(0) - y(1));
	EXPECT_EQ(got, want);
	LieElement in_gf3 = evaluate(doc.relators[0], *alg, Field::prime(3));
	EXPECT_EQ(in_gf3, Scalar(2) * alg->bracket(y(0), alg->bracket(y(1), y(2))) + alg->bracket(y(1), y(0)));
}

TEST(Parse, Errors)
{
	try {
		parse_presentation("generators y1 y2\nrelator [y1 y2]\ncheck fox\n");
		FAIL();
	} catch (const ParseError& e) {
		EXPECT_EQ(e.line, 2);
		EXPECT_EQ(e.column, 13);
		EXPECT_EQ(e.expected, (std::vector<std::string>{"','"}));
	}
	try {
		parse_presentation("generators y1 y2\nrelator [y1, z]\ncheck fox\n");
		FAIL();
	} catch (const ParseError& e) {
		EXPECT_EQ(e.line, 2);
		EXPECT_EQ(e.column, 14);
		EXPECT_NE(std::string(e.what()).find("unknown generator"), std::string::npos);
	}
	EXPECT_THROW(parse_presentation("field GF 3\ngenerators y1 y2\nrelator 1/3*[y1, y2]\ncheck fox\n"), ParseError);
	EXPECT_THROW(parse_presentation("generators y1 y2\nrelator 1/0*[y1, y2]\ncheck fox\n"), ParseError);
	EXPECT_THROW(parse_presentation("generators y1 y2\nrelator [y1, y2]\n"), ParseError);
	EXPECT_THROW(parse_presentation("generators y1 y2\ncheck fox\nrelator y1\n"), ParseError);
	EXPECT_THROW(parse_presentation("generators y1 y2\ncheck theorem7\n"), ParseError);
	EXPECT_THROW(parse_presentation("field GF 4\ngenerators y1\ncheck fox\n"), ParseError);
	EXPECT_THROW(parse_presentation("generators y1 $\ncheck fox\n"), ParseError);
}

TEST(Parse, RoundTrip)
{
	const char* text = R"(field GF 7
generators a b c
series base=2 steps=1,2
truncate 5
relator -2*[a, (b + c)] + 1/3*[[a, b], c] - b
relator [a, c]
check theorem2
check fox
)";
	auto doc = parse_presentation(text);
	auto again = parse_presentation(format_document(doc));
	EXPECT_EQ(doc, again);
	EXPECT_EQ(format_document(doc), format_document(again));
	EXPECT_EQ(doc.relators[0].terms.size(), 3u);
	EXPECT_TRUE(doc.relators[0].terms[0].negative);
	EXPECT_EQ(doc.relators[0].terms[1].coefficient, "1/3");
}

TEST(Run, ShirshovPasses)
{
	auto reports = run(parse_presentation(kShirshov));
	ASSERT_EQ(reports.size(), 1u);
	EXPECT_TRUE(reports[0].passed);
	EXPECT_EQ(reports[0].mode, CheckMode::Theorem1);
	std::string text = format_report(reports[0], ReportFormat::Text);
	EXPECT_NE(text.find("EQUAL for all terms up to degree 7"), std::string::npos);
}

TEST(Run, ConfigurationErrors)
{
	auto two = parse_presentation("generators y1 y2\nseries base=1 steps=2\ntruncate 4\nrelator [y1, y2]\ncheck theorem1\n");
	EXPECT_THROW(run(two), ConfigError);
	auto no_degree = parse_presentation("generators y1 y2 y3\nseries base=1 steps=2\nrelator [y1, y2]\ncheck theorem1\n");
	EXPECT_THROW(run(no_degree), ConfigError);
	RunOptions with_degree;
	with_degree.degree = 4;
	EXPECT_NO_THROW(run(no_degree, with_degree));
}

TEST(Run, DirectivesInOrder)
{
	auto doc = parse_presentation("generators y1 y2 y3\nseries base=1 steps=2,1\ntruncate 5\nrelator [y1, y3]\ncheck fox\ncheck theorem2\ncheck triangularize\n");
	for (bool parallel : {false, true}) {
		RunOptions options;
		options.parallel = parallel;
		options.seed = 9;
		auto reports = run(doc, options);
		ASSERT_EQ(reports.size(), 3u);
		EXPECT_EQ(reports[0].mode, CheckMode::Fox);
		EXPECT_EQ(reports[1].mode, CheckMode::Theorem2);
		EXPECT_EQ(reports[2].mode, CheckMode::Triangularize);
		for (const auto& r : reports) {
			EXPECT_TRUE(r.passed) << format_report(r, ReportFormat::Text);
			EXPECT_EQ(r.seed, 9u);
		}
	}
}

TEST(Report, JsonShape)
{
	CheckReport empty;
	auto j = nlohmann::json::parse(format_report(empty, ReportFormat::Json));
	EXPECT_EQ(j["mode"], "theorem1");
	EXPECT_TRUE(j["terms"].is_array());
	EXPECT_TRUE(j["terms"].empty());
	EXPECT_TRUE(j["hypotheses"].is_array());
	EXPECT_TRUE(j["subset"].is_array());
	EXPECT_TRUE(j["warnings"].is_array());
	EXPECT_EQ(j["verified_up_to"], 0);

	auto r = run(parse_presentation(kShirshov)).front();
	std::string a = format_report(r, ReportFormat::Json);
	std::string b = format_report(run(parse_presentation(kShirshov)).front(), ReportFormat::Json);
	EXPECT_EQ(a, b);
	auto parsed = nlohmann::json::parse(a);
	EXPECT_EQ(parsed["subset"], (nlohmann::json{"y1", "y2"}));
	EXPECT_EQ(parsed["verified_up_to"], 7);
	for (const auto& t : parsed["terms"]) {
		EXPECT_EQ(t["degrees"].size(), 7u);
		for (const auto& d : t["degrees"]) EXPECT_TRUE(d["equal"].get<bool>());
	}
}
