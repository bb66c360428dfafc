#include "liefreedom/freedom.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace liefreedom {

namespace {

std::string term_name(int k, int l) { return "N_" + std::to_string(k) + "," + std::to_string(l); }

std::string join(const std::vector<std::size_t>& v)
{
	std::string out;
	for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
	return out;
}

void check_subset(const std::vector<int>& subset, int n)
{
	std::set<int> seen;
	for (int j : subset)
		if (j < 0 || j >= n || !seen.insert(j).second) throw std::invalid_argument("generator subset: index out of range or repeated");
}

void add_filtered_warning(CheckReport& report, const DegreewiseSubspace& R)
{
	if (!R.is_graded())
		report.warnings.push_back("inhomogeneous relators: the truncated ideal may contain elements absent from the true ideal, so every degree is marked inconclusive");
}

}  // namespace

void Presentation::validate(const SeriesContext& ctx) const
{
	if (!algebra) throw std::invalid_argument("presentation: no algebra");
	if (relators.empty()) throw std::invalid_argument("presentation: no relators");
	const DegreewiseSubspace& top = ctx.term(1, 1);
	for (const auto& r : relators) {
		if (r.algebra() != algebra.get()) throw std::invalid_argument("presentation: relator over another algebra");
		if (r.is_zero()) throw std::invalid_argument("presentation: zero relator");
		if (!top.contains(r)) throw std::invalid_argument("presentation: relator " + r.to_string() + " is not in N_1,1");
	}
}

std::string to_string(CheckMode m)
{
	switch (m) {
	case CheckMode::Theorem1: return "theorem1";
	case CheckMode::Theorem2: return "theorem2";
	case CheckMode::Fox: return "fox";
	case CheckMode::Triangularize: return "triangularize";
	}
	return "?";
}

bool TermResult::all_equal() const
{
	return std::all_of(degrees.begin(), degrees.end(), [](const DegreeResult& r) { return r.equal; });
}

std::optional<int> TermResult::first_unequal() const
{
	for (const auto& r : degrees)
		if (!r.equal) return r.d;
	return std::nullopt;
}

bool CheckReport::all_equal() const
{
	return std::all_of(terms.begin(), terms.end(), [](const TermResult& t) { return t.all_equal(); });
}

const TermResult* CheckReport::term(int k, int l) const
{
	for (const auto& t : terms)
		if (t.k == k && t.l == l) return &t;
	return nullptr;
}

std::optional<int> relator_weight(const LieElement& r, const SeriesContext& ctx)
{
	if (!ctx.term(1, 1).contains(r)) throw std::invalid_argument("relator weight: element is not in N_1,1");
	const int m1 = ctx.spec().steps.front();
	for (int i = 1; i <= m1; ++i)
		if (!ctx.term(1, i + 1).contains(r)) return i;
	return std::nullopt;
}

IntersectionDims intersection_oracle(const DegreewiseSubspace& H, const DegreewiseSubspace& R, const DegreewiseSubspace& N, int d)
{
	IntersectionDims out;
	out.dimA = intersect(H, sum(R, N)).dim_upto(d);
	out.dimB = intersect(H, N).dim_upto(d);
	out.equal = out.dimA == out.dimB;
	return out;
}

std::vector<TermResult> intersection_sweep(const DegreewiseSubspace& H, const DegreewiseSubspace& R, const SeriesContext& series)
{
	std::vector<TermResult> out;
	const int D = series.truncation();
	for (auto [k, l] : series.term_indices()) {
		const DegreewiseSubspace& N = series.term(k, l);
		DegreewiseSubspace A = intersect(H, sum(R, N));
		DegreewiseSubspace B = intersect(H, N);
		if (!A.contains(B)) throw std::logic_error("intersection sweep: H ∩ N is not contained in H ∩ (R + N) at " + term_name(k, l));
		TermResult t{k, l, {}};
		for (int d = 1; d <= D; ++d) {
			DegreeResult r{d, A.dim_upto(d), B.dim_upto(d)};
			r.equal = r.dimA == r.dimB;
			r.conclusive = R.is_graded();
			t.degrees.push_back(r);
		}
		out.push_back(std::move(t));
	}
	return out;
}

CheckReport theorem1_check(const Presentation& p, const Theorem1Options& options)
{
	const int n = p.generators();
	if (n <= 2) throw std::invalid_argument("theorem1: needs more than two generators");
	if (p.relators.size() != 1) throw std::invalid_argument("theorem1: needs exactly one relator");
	SeriesContext series(p.series, p.algebra);
	p.validate(series);

	CheckReport report;
	report.mode = CheckMode::Theorem1;
	report.generator_names = p.algebra->generators().names();
	report.subset = options.subset;
	if (report.subset.empty()) {
		report.subset.resize(static_cast<std::size_t>(n - 1));
		std::iota(report.subset.begin(), report.subset.end(), 0);
	}
	check_subset(report.subset, n);
	report.subset_source = "fixed";
	report.verified_up_to = p.truncation();
	report.warnings = series.warnings();

	const LieElement& r = p.relators.front();
	auto weight = relator_weight(r, series);
	const int m1 = p.series.steps.front();
	report.hypotheses.push_back({"relator weight", weight.has_value(),
	                             weight ? "i = " + std::to_string(*weight) : "relator lies in " + term_name(1, m1 + 1)});
	DegreewiseSubspace H = subalgebra_span(p.algebra, report.subset);
	bool hypothesis = false;
	if (weight) {
		hypothesis = !sum(H, series.term(1, *weight + 1)).contains(r);
		report.hypotheses.push_back({"relator outside H + " + term_name(1, *weight + 1), hypothesis,
		                             hypothesis ? "not a member" : "member"});
	}

	DegreewiseSubspace R = ideal_closure(p.algebra, {r});
	add_filtered_warning(report, R);
	report.terms = intersection_sweep(H, R, series);
	if (hypothesis) {
		report.passed = report.all_equal();
	} else {
		report.passed = true;
		if (report.all_equal())
			report.warnings.push_back("hypothesis fails but every intersection agrees up to degree " + std::to_string(p.truncation()));
	}
	return report;
}

std::optional<std::vector<int>> exhaustive_subset_search(const Presentation& p)
{
	const int n = p.generators();
	const int m = static_cast<int>(p.relators.size());
	if (m >= n) throw std::invalid_argument("subset search: needs fewer relators than generators");
	SeriesContext series(p.series, p.algebra);
	p.validate(series);
	DegreewiseSubspace R = ideal_closure(p.algebra, p.relators);
	const int size = n - m;
	std::vector<bool> mask(static_cast<std::size_t>(n), false);
	std::fill(mask.begin(), mask.begin() + size, true);
	do {
		std::vector<int> subset;
		for (int j = 0; j < n; ++j)
			if (mask[static_cast<std::size_t>(j)]) subset.push_back(j);
		auto terms = intersection_sweep(subalgebra_span(p.algebra, subset), R, series);
		if (std::all_of(terms.begin(), terms.end(), [](const TermResult& t) { return t.all_equal(); })) return subset;
	} while (std::prev_permutation(mask.begin(), mask.end()));
	return std::nullopt;
}

CheckReport theorem2_check(const Presentation& p, const Theorem2Options& options)
{
	const int n = p.generators();
	const int m = static_cast<int>(p.relators.size());
	if (m >= n) throw std::invalid_argument("theorem2: needs fewer relators than generators");
	SeriesContext series(p.series, p.algebra);
	p.validate(series);

	CheckReport report;
	report.mode = CheckMode::Theorem2;
	report.generator_names = p.algebra->generators().names();
	report.verified_up_to = p.truncation();
	report.warnings = series.warnings();
	DegreewiseSubspace R = ideal_closure(p.algebra, p.relators);
	add_filtered_warning(report, R);

	bool found = false;
	if (options.force_exhaustive) {
		report.warnings.push_back("cascade skipped on request");
	} else if (!R.is_graded()) {
		report.warnings.push_back("cascade needs homogeneous relators; using the exhaustive subset search");
	} else {
		try {
			auto res = cascade(fox_matrix(p.relators), series, R, {p.field, options.degree_bound});
			std::vector<std::size_t> ranks;
			for (const auto& s : res.steps) ranks.push_back(s.rank);
			report.hypotheses.push_back({"cascade ranks", true, "t_k = " + join(ranks)});
			report.subset = res.complement;
			if (n - m == 1 && !report.subset.empty()) report.subset.resize(1);
			report.subset_source = "cascade";
			found = true;
		} catch (const TruncationLimit& e) {
			report.warnings.push_back(std::string("cascade stopped: ") + e.what() + "; using the exhaustive subset search");
		}
	}
	if (!found) {
		auto subset = exhaustive_subset_search(p);
		report.subset_source = "exhaustive";
		if (subset) {
			report.subset = *subset;
		} else {
			report.warnings.push_back("no generator subset of size " + std::to_string(n - m) + " passes the oracle");
			report.hypotheses.push_back({"p >= n - m", false, "no subset found"});
			return report;
		}
	}
	const bool enough = static_cast<int>(report.subset.size()) >= n - m;
	report.hypotheses.push_back({"p >= n - m", enough, "p = " + std::to_string(report.subset.size()) + ", n - m = " + std::to_string(n - m)});
	report.terms = intersection_sweep(subalgebra_span(p.algebra, report.subset), R, series);
	report.passed = enough && report.all_equal();
	return report;
}

}  // namespace liefreedom
