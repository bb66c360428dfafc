#include "liefreedom/cli.hpp"

#include <gmpxx.h>

#include <cctype>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace liefreedom {

namespace {

const std::set<std::string> kKeywords{"field", "generators", "series", "truncate", "relator", "check"};

std::string format_position(int line, int column, const std::string& message, const std::vector<std::string>& expected)
{
	std::string out = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
	if (!expected.empty()) {
		out += " (expected";
		for (std::size_t i = 0; i < expected.size(); ++i) out += (i ? " or " : " ") + expected[i];
		out += ")";
	}
	return out;
}

struct Token {
	enum class Kind { Ident, Int, Symbol, End };
	Kind kind = Kind::End;
	std::string text;
	int line = 1;
	int column = 1;
};

std::vector<Token> tokenize(const std::string& text)
{
	std::vector<Token> out;
	int line = 1, column = 1;
	std::size_t i = 0;
	auto advance = [&](std::size_t count) {
		for (std::size_t k = 0; k < count; ++k, ++i) {
			if (text[i] == '\n') {
				++line;
				column = 1;
			} else {
				++column;
			}
		}
	};
	while (i < text.size()) {
		unsigned char c = static_cast<unsigned char>(text[i]);
		if (std::isspace(c)) {
			advance(1);
			continue;
		}
		if (c == '#') {
			while (i < text.size() && text[i] != '\n') advance(1);
			continue;
		}
		Token t;
		t.line = line;
		t.column = column;
		std::size_t j = i;
		if (std::isalpha(c) || c == '_') {
			while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
			t.kind = Token::Kind::Ident;
		} else if (std::isdigit(c)) {
			while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
			t.kind = Token::Kind::Int;
		} else if (std::string("+-*/[](),=").find(static_cast<char>(c)) != std::string::npos) {
			j = i + 1;
			t.kind = Token::Kind::Symbol;
		} else {
			throw ParseError(line, column, std::string("unexpected character '") + static_cast<char>(c) + "'");
		}
		t.text = text.substr(i, j - i);
		advance(j - i);
		out.push_back(std::move(t));
	}
	Token end;
	end.line = line;
	end.column = column;
	out.push_back(end);
	return out;
}

std::string describe(const Token& t) { return t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'"; }

class Parser {
public:
	explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

	PresentationDocument document()
	{
		PresentationDocument doc;
		while (is_ident() && peek().text != "check") declaration(doc);
		if (!(is_ident() && peek().text == "check"))
			fail("expected a declaration or a check directive", {"field", "generators", "series", "truncate", "relator", "check"});
		while (is_ident() && peek().text == "check") {
			next();
			const Token& t = peek();
			static const std::vector<std::pair<std::string, CheckMode>> modes{
			    {"theorem1", CheckMode::Theorem1}, {"theorem2", CheckMode::Theorem2}, {"fox", CheckMode::Fox}, {"triangularize", CheckMode::Triangularize}};
			bool matched = false;
			for (const auto& [name, mode] : modes)
				if (t.kind == Token::Kind::Ident && t.text == name) {
					doc.checks.push_back(mode);
					matched = true;
				}
			if (!matched) fail("unknown check " + describe(t), {"theorem1", "theorem2", "fox", "triangularize"});
			next();
		}
		if (peek().kind != Token::Kind::End) fail("unexpected " + describe(peek()) + " after the check directives", {"check", "end of input"});
		return doc;
	}

	LieExpr expression()
	{
		LieExpr e;
		bool negative = false;
		if (is_symbol("-")) {
			next();
			negative = true;
		}
		e.terms.push_back(term(negative));
		while (is_symbol("+") || is_symbol("-")) {
			negative = next().text == "-";
			e.terms.push_back(term(negative));
		}
		return e;
	}

	const Token& peek() const { return tokens_[pos_]; }

private:
	const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
	bool is_ident() const { return peek().kind == Token::Kind::Ident; }
	bool is_symbol(const char* s) const { return peek().kind == Token::Kind::Symbol && peek().text == s; }

	[[noreturn]] void fail(const std::string& message, std::vector<std::string> expected = {}) const
	{
		throw ParseError(peek().line, peek().column, message, std::move(expected));
	}

	void expect_symbol(const char* s)
	{
		if (!is_symbol(s)) fail("unexpected " + describe(peek()), {std::string("'") + s + "'"});
		next();
	}

	int integer()
	{
		if (peek().kind != Token::Kind::Int) fail("unexpected " + describe(peek()), {"integer"});
		const Token& t = next();
		if (t.text.size() > 9) throw ParseError(t.line, t.column, "integer " + t.text + " is too large");
		return std::stoi(t.text);
	}

	void declaration(PresentationDocument& doc)
	{
		const Token kw = next();
		if (kw.text == "field") {
			const Token& t = peek();
			if (t.kind == Token::Kind::Ident && t.text == "Q") {
				next();
				doc.field = Field::rationals();
			} else if (t.kind == Token::Kind::Ident && t.text == "GF") {
				next();
				doc.field = prime_field(peek());
				next();
			} else if (t.kind == Token::Kind::Ident && t.text.size() > 2 && t.text.rfind("GF", 0) == 0 &&
			           std::all_of(t.text.begin() + 2, t.text.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
				Token digits = t;
				digits.kind = Token::Kind::Int;
				digits.text = t.text.substr(2);
				doc.field = prime_field(digits);
				next();
			} else {
				fail("unexpected " + describe(t), {"Q", "GF"});
			}
		} else if (kw.text == "generators") {
			if (!is_ident() || kKeywords.count(peek().text)) fail("expected a generator name", {"identifier"});
			while (is_ident() && !kKeywords.count(peek().text)) {
				const Token& g = next();
				if (std::find(doc.generators.begin(), doc.generators.end(), g.text) != doc.generators.end())
					throw ParseError(g.line, g.column, "generator " + g.text + " declared twice");
				doc.generators.push_back(g.text);
			}
		} else if (kw.text == "series") {
			SeriesSpec spec;
			keyword("base");
			expect_symbol("=");
			spec.base_class = integer();
			keyword("steps");
			expect_symbol("=");
			spec.steps = {integer()};
			while (is_symbol(",")) {
				next();
				spec.steps.push_back(integer());
			}
			doc.series = spec;
		} else if (kw.text == "truncate") {
			doc.truncate = integer();
		} else if (kw.text == "relator") {
			doc.relators.push_back(expression());
		} else {
			throw ParseError(kw.line, kw.column, "unknown declaration '" + kw.text + "'", {"field", "generators", "series", "truncate", "relator", "check"});
		}
	}

	void keyword(const char* word)
	{
		if (!(is_ident() && peek().text == word)) fail("unexpected " + describe(peek()), {std::string("'") + word + "='"});
		next();
	}

	Field prime_field(const Token& t)
	{
		if (t.kind != Token::Kind::Int) throw ParseError(t.line, t.column, "unexpected " + describe(t), {"prime"});
		try {
			return Field::prime(std::stoull(t.text));
		} catch (const std::exception& e) {
			throw ParseError(t.line, t.column, "bad field characteristic " + t.text + ": " + e.what());
		}
	}

	LieTerm term(bool negative)
	{
		LieTerm t;
		t.negative = negative;
		if (peek().kind == Token::Kind::Int) {
			std::string c = next().text;
			if (is_symbol("/")) {
				next();
				if (peek().kind != Token::Kind::Int) fail("unexpected " + describe(peek()), {"integer"});
				const Token& den = next();
				if (std::all_of(den.text.begin(), den.text.end(), [](char ch) { return ch == '0'; }))
					throw ParseError(den.line, den.column, "malformed scalar: zero denominator");
				c += "/" + den.text;
			}
			t.coefficient = c;
			expect_symbol("*");
		}
		t.factor = factor();
		return t;
	}

	LieFactor factor()
	{
		LieFactor f;
		f.line = peek().line;
		f.column = peek().column;
		if (is_ident() && !kKeywords.count(peek().text)) {
			f.kind = LieFactor::Kind::Generator;
			f.name = next().text;
		} else if (is_symbol("[")) {
			next();
			f.kind = LieFactor::Kind::Bracket;
			f.a = std::make_shared<LieExpr>(expression());
			expect_symbol(",");
			f.b = std::make_shared<LieExpr>(expression());
			expect_symbol("]");
		} else if (is_symbol("(")) {
			next();
			f.kind = LieFactor::Kind::Group;
			f.a = std::make_shared<LieExpr>(expression());
			expect_symbol(")");
		} else {
			fail("unexpected " + describe(peek()), {"generator", "'['", "'('", "scalar"});
		}
		return f;
	}

	std::vector<Token> tokens_;
	std::size_t pos_ = 0;
};

mpq_class literal(const std::string& s)
{
	mpq_class q(s, 10);
	q.canonicalize();
	return q;
}

/// Walks an expression, checking names and scalars against the declarations.
void validate(const LieExpr& e, const std::vector<std::string>& generators, const Field& field)
{
	for (const auto& t : e.terms) {
		if (t.coefficient && !field.is_rational()) {
			mpq_class q = literal(*t.coefficient);
			mpz_class den = q.get_den();
			if (mpz_class(den % mpz_class(std::to_string(field.modulus))) == 0)
				throw ParseError(t.factor.line, t.factor.column, "malformed scalar " + *t.coefficient + ": denominator not invertible in " + field.name());
		}
		const LieFactor& f = t.factor;
		switch (f.kind) {
		case LieFactor::Kind::Generator:
			if (std::find(generators.begin(), generators.end(), f.name) == generators.end())
				throw ParseError(f.line, f.column, "unknown generator '" + f.name + "'");
			break;
		case LieFactor::Kind::Bracket:
			validate(*f.a, generators, field);
			validate(*f.b, generators, field);
			break;
		case LieFactor::Kind::Group: validate(*f.a, generators, field); break;
		}
	}
}

/// Rational with the same residue as q in the field: the least nonnegative one.
Scalar least_residue(const Scalar& q, const Field& field)
{
	if (field.is_rational()) return q;
	return Scalar::from_mpq(literal(q.in_field(field).to_string()));
}

/// Fox identities on the relators; random commutator checks only with a seed.
CheckReport fox_report(const Presentation& p, const std::optional<std::uint64_t>& seed)
{
	CheckReport report;
	report.mode = CheckMode::Fox;
	report.generator_names = p.algebra->generators().names();
	report.verified_up_to = p.truncation();
	report.seed = seed;
	const FreeLieAlgebra& alg = *p.algebra;
	const int n = p.generators();
	report.passed = true;
	auto record = [&](std::string name, bool holds, std::string detail) {
		report.passed = report.passed && holds;
		report.hypotheses.push_back({std::move(name), holds, std::move(detail)});
	};
	for (std::size_t i = 0; i < p.relators.size(); ++i) {
		AssocElement u = alg.lie_to_assoc(p.relators[i]);
		AssocElement sum(p.truncation());
		for (int j = 0; j < n; ++j) sum += AssocElement::generator(j) * fox_derivative(u, j);
		record("reconstruction r" + std::to_string(i + 1), sum == u, "sum of y_j D_j(r) against r");
	}
	if (seed) {
		std::mt19937_64 rng(*seed);
		std::uniform_int_distribution<int> coef(-3, 3);
		std::uniform_int_distribution<int> pick(0, alg.dim_upto(std::max(1, p.truncation() - 1)) - 1);
		int failures = 0;
		const int trials = 20;
		for (int t = 0; t < trials; ++t) {
			const LieElement& r = p.relators[static_cast<std::size_t>(t) % p.relators.size()];
			LieElement x = Scalar(coef(rng)) * alg.basis_element(pick(rng));
			if (x.is_zero() || r.degree() + x.degree() > p.truncation()) continue;
			AssocElement ru = alg.lie_to_assoc(r), xu = alg.lie_to_assoc(x), bu = alg.lie_to_assoc(alg.bracket(r, x));
			for (int k = 0; k < n; ++k)
				if (!(fox_derivative(bu, k) == fox_derivative(ru, k) * xu - fox_derivative(xu, k) * ru)) ++failures;
		}
		record("commutator rule", failures == 0, std::to_string(failures) + " failures on random brackets with the relators");
	}
	return report;
}

CheckReport triangularize_report(const Presentation& p)
{
	CheckReport report;
	report.mode = CheckMode::Triangularize;
	report.generator_names = p.algebra->generators().names();
	report.verified_up_to = p.truncation();
	SeriesContext series(p.series, p.algebra);
	p.validate(series);
	DegreewiseSubspace R = ideal_closure(p.algebra, p.relators);
	if (!R.is_graded()) throw ConfigError("triangularize: needs homogeneous relators");
	QuotientContext ctx = QuotientContext::from_series(series, 1, R, p.field);
	RelatorMatrix m = fox_matrix(p.relators);
	try {
		auto res = triangularize(m, ctx, TriangularMode::Full);
		auto dominance = psi_dominance(res.matrix, res.rank, ctx);
		bool shape = is_triangular_rank(res.matrix, ctx, res.rank);
		bool replayed = replay(m, res.log(), &ctx).normalized(ctx).same_entries(res.matrix);
		report.hypotheses.push_back({"rank", true, "t = " + std::to_string(res.rank) + ", " + std::to_string(res.log().size()) + " transforms"});
		report.hypotheses.push_back({"triangular shape", shape, ""});
		report.hypotheses.push_back({"psi dominance", dominance.holds(),
		                             std::to_string(dominance.comparisons) + " comparisons, " + std::to_string(dominance.sentinel_skipped) + " skipped"});
		report.hypotheses.push_back({"log replay", replayed, ""});
		for (std::size_t k = 0; k < res.rank; ++k) report.subset.push_back(static_cast<int>(res.pivot_columns[k]));
		report.subset_source = "pivots";
		report.passed = shape && dominance.holds() && replayed;
	} catch (const TruncationLimit& e) {
		report.warnings.push_back(std::string("truncation reached: ") + e.what());
		report.passed = false;
	}
	return report;
}

CheckReport run_one(const PresentationDocument& doc, const RunOptions& options, CheckMode mode, std::size_t index)
{
	try {
		Presentation p = build_presentation(doc, options);
		CheckReport r;
		switch (mode) {
		case CheckMode::Theorem1: r = theorem1_check(p); break;
		case CheckMode::Theorem2: r = theorem2_check(p); break;
		case CheckMode::Fox: r = fox_report(p, options.seed); break;
		case CheckMode::Triangularize: r = triangularize_report(p); break;
		}
		r.seed = options.seed;
		return r;
	} catch (const DirectiveError&) {
		throw;
	} catch (const std::invalid_argument& e) {
		throw ConfigError("check " + to_string(mode) + " (directive " + std::to_string(index + 1) + "): " + e.what());
	} catch (const std::exception& e) {
		throw DirectiveError(mode, index, e.what());
	}
}

std::string generator_label(const CheckReport& r, int j)
{
	if (j >= 0 && static_cast<std::size_t>(j) < r.generator_names.size()) return r.generator_names[static_cast<std::size_t>(j)];
	return "#" + std::to_string(j + 1);
}

std::string term_label(int k, int l) { return "N_" + std::to_string(k) + "," + std::to_string(l); }

}  // namespace

ParseError::ParseError(int line_, int column_, std::string message, std::vector<std::string> expected_)
    : std::runtime_error(format_position(line_, column_, message, expected_)), line(line_), column(column_), expected(std::move(expected_))
{
}

DirectiveError::DirectiveError(CheckMode mode_, std::size_t index_, const std::string& message)
    : std::runtime_error("check " + to_string(mode_) + " (directive " + std::to_string(index_ + 1) + "): " + message), mode(mode_), index(index_)
{
}

bool LieFactor::operator==(const LieFactor& o) const
{
	if (kind != o.kind) return false;
	switch (kind) {
	case Kind::Generator: return name == o.name;
	case Kind::Bracket: return *a == *o.a && *b == *o.b;
	case Kind::Group: return *a == *o.a;
	}
	return false;
}

std::string to_string(const LieExpr& e)
{
	std::string out;
	for (std::size_t i = 0; i < e.terms.size(); ++i) {
		const LieTerm& t = e.terms[i];
		if (i) out += t.negative ? " - " : " + ";
		else if (t.negative) out += "-";
		if (t.coefficient) out += *t.coefficient + "*";
		const LieFactor& f = t.factor;
		switch (f.kind) {
		case LieFactor::Kind::Generator: out += f.name; break;
		case LieFactor::Kind::Bracket: out += "[" + to_string(*f.a) + ", " + to_string(*f.b) + "]"; break;
		case LieFactor::Kind::Group: out += "(" + to_string(*f.a) + ")"; break;
		}
	}
	return out;
}

PresentationDocument parse_presentation(const std::string& text)
{
	PresentationDocument doc = Parser(tokenize(text)).document();
	Field field = doc.field.value_or(Field::rationals());
	for (const auto& r : doc.relators) validate(r, doc.generators, field);
	return doc;
}

std::string format_document(const PresentationDocument& doc)
{
	std::ostringstream out;
	if (doc.field) out << "field " << (doc.field->is_rational() ? std::string("Q") : "GF " + std::to_string(doc.field->modulus)) << "\n";
	if (!doc.generators.empty()) {
		out << "generators";
		for (const auto& g : doc.generators) out << " " << g;
		out << "\n";
	}
	if (doc.series) {
		out << "series base=" << doc.series->base_class << " steps=";
		for (std::size_t i = 0; i < doc.series->steps.size(); ++i) out << (i ? "," : "") << doc.series->steps[i];
		out << "\n";
	}
	if (doc.truncate) out << "truncate " << *doc.truncate << "\n";
	for (const auto& r : doc.relators) out << "relator " << to_string(r) << "\n";
	for (auto c : doc.checks) out << "check " << to_string(c) << "\n";
	return out.str();
}

LieElement evaluate(const LieExpr& e, const FreeLieAlgebra& alg, const Field& field)
{
	LieElement out = alg.zero();
	for (const auto& t : e.terms) {
		const LieFactor& f = t.factor;
		LieElement x = alg.zero();
		switch (f.kind) {
		case LieFactor::Kind::Generator: {
			int j = alg.generators().index_of(f.name);
			if (j < 0) throw ConfigError("unknown generator '" + f.name + "'");
			x = alg.generator(j);
			break;
		}
		case LieFactor::Kind::Bracket: x = alg.bracket(evaluate(*f.a, alg, field), evaluate(*f.b, alg, field)); break;
		case LieFactor::Kind::Group: x = evaluate(*f.a, alg, field); break;
		}
		Scalar c = t.coefficient ? Scalar::from_mpq(literal(*t.coefficient)) : Scalar(1);
		if (t.negative) c = -c;
		out += least_residue(c, field) * x;
	}
	return out;
}

Presentation build_presentation(const PresentationDocument& doc, const RunOptions& options)
{
	if (doc.generators.empty()) throw ConfigError("no generators declared");
	if (!doc.series) throw ConfigError("no series declared");
	if (doc.relators.empty()) throw ConfigError("no relators declared");
	std::optional<int> D = options.degree ? options.degree : doc.truncate;
	if (!D) throw ConfigError("no truncation degree declared or given");
	Presentation p;
	p.field = options.field.value_or(doc.field.value_or(Field::rationals()));
	try {
		p.algebra = FreeLieAlgebra::make(GeneratorSet(doc.generators), *D);
	} catch (const std::exception& e) {
		throw ConfigError(e.what());
	}
	p.series = *doc.series;
	for (const auto& r : doc.relators) {
		validate(r, doc.generators, p.field);
		p.relators.push_back(evaluate(r, *p.algebra, p.field));
	}
	return p;
}

std::vector<CheckReport> run(const PresentationDocument& doc, const RunOptions& options)
{
	std::vector<CheckReport> out;
	if (!options.parallel) {
		for (std::size_t i = 0; i < doc.checks.size(); ++i) out.push_back(run_one(doc, options, doc.checks[i], i));
		return out;
	}
	std::vector<std::future<CheckReport>> pending;
	for (std::size_t i = 0; i < doc.checks.size(); ++i)
		pending.push_back(std::async(std::launch::async, run_one, std::cref(doc), std::cref(options), doc.checks[i], i));
	for (auto& f : pending) out.push_back(f.get());
	return out;
}

std::string format_report(const CheckReport& r, ReportFormat format)
{
	if (format == ReportFormat::Json) {
		nlohmann::ordered_json j;
		j["mode"] = to_string(r.mode);
		j["passed"] = r.passed;
		j["hypotheses"] = nlohmann::ordered_json::array();
		for (const auto& h : r.hypotheses) j["hypotheses"].push_back({{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}});
		j["subset"] = nlohmann::ordered_json::array();
		for (int g : r.subset) j["subset"].push_back(generator_label(r, g));
		j["subset_source"] = r.subset_source;
		j["terms"] = nlohmann::ordered_json::array();
		for (const auto& t : r.terms) {
			nlohmann::ordered_json term{{"k", t.k}, {"l", t.l}, {"degrees", nlohmann::ordered_json::array()}};
			for (const auto& d : t.degrees)
				term["degrees"].push_back({{"d", d.d}, {"dimA", d.dimA}, {"dimB", d.dimB}, {"equal", d.equal}, {"conclusive", d.conclusive}});
			j["terms"].push_back(std::move(term));
		}
		j["verified_up_to"] = r.verified_up_to;
		j["warnings"] = r.warnings;
		if (r.seed) j["seed"] = *r.seed;
		return j.dump(2) + "\n";
	}
	std::ostringstream out;
	out << "check " << to_string(r.mode) << ": " << (r.passed ? "PASS" : "FAIL") << "\n";
	if (r.seed) out << "  seed " << *r.seed << "\n";
	for (const auto& h : r.hypotheses) {
		out << "  " << h.name << ": " << (h.holds ? "holds" : "fails");
		if (!h.detail.empty()) out << " (" << h.detail << ")";
		out << "\n";
	}
	if (!r.subset.empty() || !r.subset_source.empty()) {
		out << "  subset:";
		for (int g : r.subset) out << " " << generator_label(r, g);
		if (!r.subset_source.empty()) out << " [" << r.subset_source << "]";
		out << "\n";
	}
	for (const auto& t : r.terms) {
		out << "  " << term_label(t.k, t.l) << ": ";
		if (auto d = t.first_unequal()) {
			const DegreeResult& x = t.degrees[static_cast<std::size_t>(*d - 1)];
			out << "UNEQUAL from degree " << *d << " (dimA " << x.dimA << ", dimB " << x.dimB << ")";
		} else {
			out << "equal through degree " << r.verified_up_to;
		}
		bool conclusive = std::all_of(t.degrees.begin(), t.degrees.end(), [](const DegreeResult& x) { return x.conclusive; });
		if (!conclusive) out << ", inconclusive";
		out << "\n";
	}
	if (!r.terms.empty() && r.all_equal()) out << "  EQUAL for all terms up to degree " << r.verified_up_to << "\n";
	for (const auto& w : r.warnings) out << "  warning: " << w << "\n";
	return out.str();
}

}  // namespace liefreedom
