#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "liefreedom/cli.hpp"

using namespace liefreedom;

namespace {

Field parse_field_flag(const std::string& s)
{
	if (s == "q" || s == "Q") return Field::rationals();
	if (s.rfind("gf:", 0) == 0) return Field::prime(std::stoull(s.substr(3)));
	throw ConfigError("--field expects q or gf:P, got " + s);
}

}  // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Freedom checks for presentations of free Lie algebras"};
	app.require_subcommand(1);
	auto* check = app.add_subcommand("check", "Run the check directives of a presentation file");
	std::string file, field, format = "text";
	std::optional<int> degree;
	std::optional<std::uint64_t> seed;
	bool parallel = false;
	check->add_option("FILE", file, "Presentation file")->required()->check(CLI::ExistingFile);
	check->add_option("--degree", degree, "Truncation degree (overrides the file)");
	check->add_option("--field", field, "q or gf:P (overrides the file)");
	check->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
	check->add_option("--seed", seed, "Seed for randomized identity checks");
	check->add_flag("--parallel", parallel, "Run directives concurrently");
	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	try {
		std::ifstream in(file);
		std::stringstream text;
		text << in.rdbuf();
		PresentationDocument doc = parse_presentation(text.str());
		RunOptions options;
		options.degree = degree;
		options.seed = seed;
		options.parallel = parallel;
		if (!field.empty()) options.field = parse_field_flag(field);
		auto reports = run(doc, options);
		bool ok = true;
		ReportFormat f = format == "json" ? ReportFormat::Json : ReportFormat::Text;
		for (const auto& r : reports) {
			std::cout << format_report(r, f);
			ok = ok && r.passed;
		}
		return ok ? 0 : 1;
	} catch (const ParseError& e) {
		std::cerr << file << ":" << e.what() << "\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
}
