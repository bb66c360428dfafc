#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liefreedom/freedom.hpp"

namespace liefreedom {

/// Syntax error with a 1-based position and the tokens that would fit there.
struct ParseError : std::runtime_error {
	ParseError(int line, int column, std::string message, std::vector<std::string> expected = {});
	int line;
	int column;
	std::vector<std::string> expected;
};

/// Bad combination of declarations, unknown generators, bad scalars.
struct ConfigError : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

struct LieExpr;

struct LieFactor {
	enum class Kind { Generator, Bracket, Group };
	Kind kind = Kind::Generator;
	std::string name;                   // Generator
	std::shared_ptr<const LieExpr> a;  // Bracket left, Group inner
	std::shared_ptr<const LieExpr> b;  // Bracket right
	int line = 0;
	int column = 0;
	bool operator==(const LieFactor& o) const;
};

struct LieTerm {
	bool negative = false;
	std::optional<std::string> coefficient;  // literal "p" or "p/q"
	LieFactor factor;
	bool operator==(const LieTerm& o) const { return negative == o.negative && coefficient == o.coefficient && factor == o.factor; }
};

struct LieExpr {
	std::vector<LieTerm> terms;
	bool operator==(const LieExpr& o) const { return terms == o.terms; }
};

std::string to_string(const LieExpr& e);

struct PresentationDocument {
	std::optional<Field> field;
	std::vector<std::string> generators;
	std::optional<SeriesSpec> series;
	std::optional<int> truncate;
	std::vector<LieExpr> relators;
	std::vector<CheckMode> checks;
	bool operator==(const PresentationDocument&) const = default;
};

PresentationDocument parse_presentation(const std::string& text);
/// Source text that parses back to an equal document.
std::string format_document(const PresentationDocument& doc);

struct RunOptions {
	std::optional<int> degree;
	std::optional<Field> field;
	std::optional<std::uint64_t> seed;
	bool parallel = false;
};

/// Evaluates a parsed expression in the algebra; scalars must exist in `field`.
LieElement evaluate(const LieExpr& e, const FreeLieAlgebra& alg, const Field& field);

/// Presentation after flags override declarations.
Presentation build_presentation(const PresentationDocument& doc, const RunOptions& options = {});

/// A checker failed; the message names the directive.
struct DirectiveError : std::runtime_error {
	DirectiveError(CheckMode mode, std::size_t index, const std::string& message);
	CheckMode mode;
	std::size_t index;
};

/// One report per check directive, in input order.
std::vector<CheckReport> run(const PresentationDocument& doc, const RunOptions& options = {});

enum class ReportFormat { Text, Json };
std::string format_report(const CheckReport& r, ReportFormat format);

}  // namespace liefreedom
