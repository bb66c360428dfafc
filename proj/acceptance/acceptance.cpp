// Acceptance run: one PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "liefreedom/cli.hpp"
#include "liefreedom/constructions.hpp"

#ifndef LIEFREEDOM_CLI_PATH
#define LIEFREEDOM_CLI_PATH "liefreedom"
#endif
#ifndef LIEFREEDOM_SOURCE_DIR
#define LIEFREEDOM_SOURCE_DIR "."
#endif

using namespace liefreedom;

namespace {

struct Outcome {
	bool pass = true;
	std::string detail;
};

using Rng = std::mt19937_64;

std::size_t sz(int x) { return static_cast<std::size_t>(x); }

LieElement random_homogeneous(const FreeLieAlgebra& alg, int d, Rng& rng, int spread = 3)
{
	std::uniform_int_distribution<int> coef(-spread, spread);
	Vector v(sz(alg.dim(d)));
	for (auto& c : v) c = Scalar(coef(rng));
	return alg.from_coords(v, d);
}

LieElement random_upto(const FreeLieAlgebra& alg, int lo, int hi, Rng& rng)
{
	LieElement x = alg.zero();
	for (int d = lo; d <= hi; ++d) x += random_homogeneous(alg, d, rng);
	return x;
}

LieElement random_in(const DegreewiseSubspace& s, int lo, int hi, Rng& rng)
{
	std::uniform_int_distribution<int> coef(-2, 2);
	LieElement x = s.algebra().zero();
	for (int d = lo; d <= hi; ++d)
		for (const auto& b : s.basis(d)) x += Scalar(coef(rng)) * b;
	return x;
}

/// Left cofactor of y_k, term by term.
AssocElement oracle_fox(const AssocElement& u, int k)
{
	AssocElement out(u.truncation());
	for (const auto& [w, c] : u.terms()) {
		if (w.empty()) throw std::domain_error("constant term");
		if (w.first() == k) out.add(w.tail(), c);
	}
	return out;
}

/// Substitutes images for the letters of every word.
AssocElement substitute(const AssocElement& u, const std::vector<AssocElement>& images, int truncation)
{
	AssocElement out(truncation);
	for (const auto& [w, c] : u.terms()) {
		AssocElement p = AssocElement::one(truncation);
		for (int i = 0; i < w.length; ++i) p = p * images[w.at(i)];
		out.add_scaled(p, c);
	}
	return out;
}

// 1 -------------------------------------------------------------------------
Outcome fox_identity_suite()
{
	Rng rng(101);
	Outcome o;
	int failures = 0;
	std::array<std::shared_ptr<FreeLieAlgebra>, 3> algs{FreeLieAlgebra::make(GeneratorSet::standard(2), 10), FreeLieAlgebra::make(GeneratorSet::standard(3), 10),
	                                                    FreeLieAlgebra::make(GeneratorSet::standard(4), 10)};
	std::uniform_int_distribution<int> deg(1, 5), coef(-4, 4);
	for (int t = 0; t < 200; ++t) {
		const FreeLieAlgebra& alg = *algs[sz(t % 3)];
		const int n = alg.rank();
		LieElement u = random_upto(alg, 1, deg(rng), rng), v = random_upto(alg, 1, deg(rng), rng);
		AssocElement U = alg.lie_to_assoc(u), V = alg.lie_to_assoc(v);
		AssocElement rebuilt;
		Scalar a(coef(rng)), b(coef(rng));
		AssocElement L = alg.lie_to_assoc(a * u + b * v), B = alg.lie_to_assoc(alg.bracket(u, v));
		for (int k = 0; k < n; ++k) {
			AssocElement Du = fox_derivative(U, k), Dv = fox_derivative(V, k);
			if (!(Du == oracle_fox(U, k))) ++failures;
			rebuilt += AssocElement::generator(k) * Du;
			if (!(fox_derivative(L, k) == a * Du + b * Dv)) ++failures;
			if (!(fox_derivative(B, k) == Du * V - Dv * U)) ++failures;
		}
		if (!(rebuilt == U)) ++failures;
	}
	o.pass = failures == 0;
	o.detail = "200 elements, n in {2,3,4}, degree <= 5; " + std::to_string(failures) + " identity failures";
	return o;
}

// 2 -------------------------------------------------------------------------
bool is_lyndon(const std::vector<int>& w)
{
	const std::size_t n = w.size();
	for (std::size_t r = 1; r < n; ++r) {
		std::vector<int> rot(w.begin() + static_cast<long>(r), w.end());
		rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
		if (!(w < rot)) return false;
	}
	return true;
}

std::size_t brute_lyndon_count(int n, int d)
{
	std::size_t count = 0;
	std::vector<int> w(sz(d), 0);
	while (true) {
		if (is_lyndon(w)) ++count;
		int i = d - 1;
		while (i >= 0 && w[sz(i)] == n - 1) w[sz(i--)] = 0;
		if (i < 0) break;
		++w[sz(i)];
	}
	return count;
}

Outcome witt_dimensions()
{
	Outcome o;
	std::string mismatches;
	for (int n : {2, 3}) {
		auto alg = FreeLieAlgebra::make(GeneratorSet::standard(n), 8);
		for (int d = 1; d <= 8; ++d) {
			std::size_t lib = alg->lyndon_basis(d).size(), brute = brute_lyndon_count(n, d);
			if (lib != brute || static_cast<int>(lib) != alg->dim(d)) mismatches += " n=" + std::to_string(n) + ",d=" + std::to_string(d);
		}
	}
	const std::array<std::size_t, 8> seq{2, 1, 2, 3, 6, 9, 18, 30};
	auto alg2 = FreeLieAlgebra::make(GeneratorSet::standard(2), 8);
	for (int d = 1; d <= 8; ++d)
		if (alg2->lyndon_basis(d).size() != seq[sz(d - 1)]) mismatches += " seq d=" + std::to_string(d);
	o.pass = mismatches.empty();
	o.detail = o.pass ? "n in {2,3}, d <= 8 match brute-force enumeration; n=2 gives 2,1,2,3,6,9,18,30" : "mismatches:" + mismatches;
	return o;
}

// 3 -------------------------------------------------------------------------
int chain_rule_failures(const std::vector<LieElement>& h, int samples, Rng& rng)
{
	const FreeLieAlgebra& F = *h.front().algebra();
	const int D = F.truncation();
	auto G = FreeLieAlgebra::make(GeneratorSet({"x1", "x2"}), 4);
	std::vector<AssocElement> images;
	for (const auto& x : h) images.push_back(F.lie_to_assoc(x));
	std::uniform_int_distribution<int> deg(1, 4);
	int failures = 0;
	for (int t = 0; t < samples; ++t) {
		LieElement g = random_upto(*G, 1, deg(rng), rng);
		AssocElement gu = G->lie_to_assoc(g);
		AssocElement f = substitute(gu, images, D);
		if (!(f == F.lie_to_assoc(F.require_lie(f)))) ++failures;
		for (int j = 0; j < F.rank(); ++j) {
			AssocElement rhs(D);
			for (int k = 0; k < 2; ++k) rhs += fox_derivative(images[sz(k)], j) * substitute(fox_derivative(gu, k), images, D);
			if (!(fox_derivative(f, j) == rhs)) ++failures;
		}
	}
	return failures;
}

Outcome chain_rule()
{
	Rng rng(103);
	auto F = FreeLieAlgebra::make(GeneratorSet::standard(3), 8);
	int plain = chain_rule_failures({F->generator(0), F->generator(1)}, 50, rng);
	int twisted = chain_rule_failures({F->generator(0), F->bracket(F->generator(1), F->generator(2))}, 50, rng);
	Outcome o;
	o.pass = plain == 0 && twisted == 0;
	o.detail = "H = <y1,y2>: " + std::to_string(plain) + " failures in 50; H = <y1,[y2,y3]>: " + std::to_string(twisted) + " failures in 50";
	return o;
}

// 4, 5, 6 -------------------------------------------------------------------
struct FoxSetting {
	std::shared_ptr<FreeLieAlgebra> alg = FreeLieAlgebra::make(GeneratorSet::standard(3), 6);
	DegreewiseSubspace N = lower_central(DegreewiseSubspace::whole(alg), 2);
	std::vector<int> K{0, 1};
	DegreewiseSubspace FK = subalgebra_span(alg, K);
	DegreewiseSubspace M = intersect(FK, N);
	DegreewiseSubspace ideal = [&] {
		std::vector<LieElement> gens;
		for (int d = 2; d <= 6; ++d)
			for (const auto& x : M.basis(d)) gens.push_back(x);
		return ideal_closure(alg, gens);
	}();
	NUCongruence cong{N};

	FoxData data(const LieElement& w) const
	{
		AssocElement image = alg->lie_to_assoc(w);
		FoxData u;
		for (int j : K) u[j] = fox_derivative(image, j);
		return u;
	}
	bool congruences_hold(const LieElement& v, const FoxData& u) const
	{
		AssocElement image = alg->lie_to_assoc(v);
		for (int j : K)
			for (int d = 0; d <= alg->truncation(); ++d)
				if (!cong.congruent(fox_derivative(image, j).component(d), u.at(j).component(d))) return false;
		return true;
	}
};

Outcome lemma_constructions()
{
	FoxSetting s;
	Rng rng(107);
	int f1 = 0, f2 = 0;
	for (int t = 0; t < 50; ++t) {
		FoxData u = s.data(random_in(s.M, 2, 5, rng));
		LieElement v = lemma1_construct(u, s.K, s.N);
		if (!s.M.contains(v) || !s.congruences_hold(v, u)) ++f1;
	}
	for (int t = 0; t < 50; ++t) {
		FoxData u = s.data(random_in(s.ideal, 2, 5, rng));
		LieElement v = lemma2_construct(u, s.K, s.N);
		if (!s.ideal.contains(v) || !s.congruences_hold(v, u)) ++f2;
	}
	Outcome o;
	o.pass = f1 == 0 && f2 == 0;
	o.detail = "first construction " + std::to_string(f1) + "/50 failures, second " + std::to_string(f2) + "/50 failures, D = 6";
	return o;
}

Outcome theorem3_both_directions()
{
	FoxSetting s;
	Rng rng(109);
	auto NN = lower_central(s.N, 2);
	auto build = [&] { return random_in(s.FK, 1, 4, rng) + random_in(s.ideal, 2, 5, rng) + random_in(NN, 4, 6, rng); };
	int forward = 0, backward = 0;
	for (int t = 0; t < 50; ++t)
		if (!theorem3_hypothesis(build(), s.K, s.N)) ++forward;
	for (int t = 0; t < 50; ++t) {
		LieElement v = build();
		if (!theorem3_hypothesis(v, s.K, s.N)) {
			++backward;
			continue;
		}
		auto dec = theorem3_decompose(v, s.K, s.N);
		if (!s.FK.contains(dec.v0) || !s.ideal.contains(dec.v1) || !NN.contains(v - dec.v0 - dec.v1)) ++backward;
	}
	Outcome o;
	o.pass = forward == 0 && backward == 0;
	o.detail = "forward " + std::to_string(forward) + "/50 failures, decomposition " + std::to_string(backward) + "/50 failures";
	return o;
}

Outcome derived_ideal_equivalence()
{
	FoxSetting s;
	Rng rng(113);
	DerivedIdealTest test(s.N);
	int yes = 0, no = 0, disagree = 0;
	for (int t = 0; t < 100; ++t) {
		LieElement v = t % 2 ? s.alg->bracket(random_in(s.N, 2, 2, rng), random_in(s.N, 2 + t % 3, 2 + t % 3, rng)) + random_in(lower_central(s.N, 2), 4, 6, rng)
		                     : random_in(s.N, 2, 5, rng);
		bool fox = test.by_fox(v);
		if (fox != test.direct(v)) ++disagree;
		(fox ? yes : no)++;
	}
	Outcome o;
	o.pass = disagree == 0 && yes > 0 && no > 0;
	o.detail = "100 samples: " + std::to_string(yes) + " in [N,N], " + std::to_string(no) + " outside, " + std::to_string(disagree) + " disagreements";
	return o;
}

// 7, 8, 9 -------------------------------------------------------------------
Presentation presentation(int n, int D, const std::function<std::vector<LieElement>(const FreeLieAlgebra&)>& relators, SeriesSpec spec)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(n), D);
	return {alg, relators(*alg), std::move(spec), {}};
}

Outcome theorem1_positive()
{
	auto p = presentation(3, 7, [](const FreeLieAlgebra& a) { return std::vector<LieElement>{a.bracket(a.generator(0), a.generator(2))}; }, {1, {3, 2}});
	auto r = theorem1_check(p);
	bool hyp = r.hypotheses.size() == 2 && r.hypotheses[0].holds && r.hypotheses[1].holds;
	std::size_t cells = 0;
	for (const auto& t : r.terms) cells += t.degrees.size();
	Outcome o;
	o.pass = hyp && r.all_equal() && r.passed && cells == 7 * r.terms.size();
	o.detail = std::string("hypothesis ") + (hyp ? "holds" : "fails") + ", " + std::to_string(r.terms.size()) + " terms x 7 degrees " +
	           (r.all_equal() ? "all equal" : "with inequalities");
	return o;
}

Outcome theorem1_negative()
{
	auto p = presentation(3, 7, [](const FreeLieAlgebra& a) { return std::vector<LieElement>{a.bracket(a.generator(0), a.generator(1))}; }, {1, {3, 2}});
	auto r = theorem1_check(p);
	SeriesContext series(p.series, p.algebra);
	bool hyp_fails = r.hypotheses.size() == 2 && !r.hypotheses[1].holds;
	const TermResult* t13 = r.term(1, 3);
	bool witnessed = t13 && t13->first_unequal() == 2;
	int deeper = 0, propagated = 0, undecidable = 0;
	for (const auto& t : r.terms) {
		if (t.k == 1 && t.l <= 3) continue;
		if (!series.term(1, 3).contains(series.term(t.k, t.l))) continue;
		if (series.term(t.k, t.l).is_zero()) {
			++undecidable;
			continue;
		}
		++deeper;
		if (t.first_unequal()) ++propagated;
	}
	Outcome o;
	o.pass = hyp_fails && witnessed && deeper > 0 && propagated == deeper;
	o.detail = std::string("hypothesis ") + (hyp_fails ? "fails" : "holds") + ", N_1,3 first unequal at degree " +
	           (t13 && t13->first_unequal() ? std::to_string(*t13->first_unequal()) : "none") + ", propagated to " + std::to_string(propagated) + "/" +
	           std::to_string(deeper) + " deeper terms (" + std::to_string(undecidable) + " vanish up to D)";
	return o;
}

Outcome theorem2_desk()
{
	auto p = presentation(4, 6,
	                      [](const FreeLieAlgebra& a) {
		                      return std::vector<LieElement>{a.bracket(a.generator(0), a.generator(3)), a.bracket(a.generator(1), a.generator(3))};
	                      },
	                      {1, {2, 2}});
	auto r = theorem2_check(p);
	auto fallback = theorem2_check(p, {-1, true});
	auto names = [](const std::vector<int>& s) {
		std::string out;
		for (int j : s) out += (out.empty() ? "y" : ",y") + std::to_string(j + 1);
		return out;
	};
	Outcome o;
	o.pass = r.subset_source == "cascade" && r.subset.size() >= 2 && r.all_equal() && r.passed && fallback.subset_source == "exhaustive" &&
	         fallback.subset.size() >= 2 && fallback.all_equal() && fallback.passed;
	o.detail = "cascade subset {" + names(r.subset) + "} (p = " + std::to_string(r.subset.size()) + "), exhaustive subset {" + names(fallback.subset) + "}, oracle " +
	           (r.all_equal() && fallback.all_equal() ? "equal everywhere" : "unequal somewhere");
	return o;
}

// 10 ------------------------------------------------------------------------
Outcome triangularization_invariants()
{
	const int n = 4, D = 6;
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(n), D);
	auto whole = DegreewiseSubspace::whole(alg);
	Rng rng(127);
	std::uniform_int_distribution<int> coef(-2, 2);
	int completed = 0, exhausted = 0, shape = 0, dominance = 0, witnesses = 0, rows = 0;
	std::size_t comparisons = 0, skipped = 0;
	std::string first_error;
	for (int t = 0; t < 30; ++t) {
		auto t0 = std::chrono::steady_clock::now();
		std::vector<LieElement> rel;
		for (int i = 0; i < 3; ++i) {
			int d = 2 + (t + i) % 2;
			LieElement r = alg->zero();
			for (int g = alg->offset(d); g < alg->offset(d) + alg->dim(d); ++g) r += Scalar(coef(rng)) * alg->basis_element(g);
			if (r.is_zero()) r = alg->bracket(alg->generator(i), alg->generator(3));
			rel.push_back(r);
		}
		auto R = ideal_closure(alg, rel);
		std::vector<SubspaceBasis> levels(sz(D + 1));
		for (int d = 1; d <= D; ++d) levels[sz(d)] = d < 5 ? R.level(d) : whole.level(d);
		QuotientContext ctx({DegreewiseSubspace::graded(alg, std::move(levels))}, Field::prime(2147483647));
		RelatorMatrix m = fox_matrix(rel);
		try {
			auto res = triangularize(m, ctx, TriangularMode::Full);
			++completed;
			if (is_triangular_rank(res.matrix, ctx, res.rank)) ++shape;
			auto dom = psi_dominance(res.matrix, res.rank, ctx);
			comparisons += dom.comparisons;
			skipped += dom.sentinel_skipped;
			if (dom.holds()) ++dominance;
			for (std::size_t i = 0; i < m.rows(); ++i) {
				++rows;
				try {
					row_space_witness(m, res, i, ctx);
					++witnesses;
				} catch (const TruncationLimit&) {
				}
			}
		} catch (const TruncationLimit& e) {
			++exhausted;
			if (first_error.empty()) first_error = e.what();
		}
	}
	const bool sentinel_ok = comparisons + skipped == 0 || skipped * 10 < comparisons + skipped;
	Outcome o;
	o.pass = completed == 30 && shape == 30 && dominance == 30 && witnesses == rows && sentinel_ok;
	o.detail = "Fox matrices of 3 random relators on 4 generators modulo R + gamma_5, D = " + std::to_string(D) + ": " + std::to_string(completed) +
	           "/30 triangularized, " + std::to_string(exhausted) + " stopped at the truncation";
	if (!first_error.empty()) o.detail += " (" + first_error + ")";
	if (completed) o.detail += "; shape " + std::to_string(shape) + ", dominance " + std::to_string(dominance) + ", witnesses " + std::to_string(witnesses) + "/" + std::to_string(rows);
	return o;
}

// 11 ------------------------------------------------------------------------
AssocElement random_assoc(int n, int lo, int hi, Rng& rng, int terms)
{
	std::uniform_int_distribution<int> coef(-3, 3), len(lo, hi), letter(0, n - 1);
	AssocElement u;
	for (int t = 0; t < terms; ++t) {
		std::vector<Letter> w(sz(len(rng)));
		for (auto& l : w) l = static_cast<Letter>(letter(rng));
		u.add(Word::from_letters(w), Scalar(coef(rng)));
	}
	return u;
}

Outcome valuation_laws()
{
	Rng rng(131);
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(2), 8);
	SeriesContext series(SeriesSpec{1, {3}}, alg);
	auto ctx = QuotientContext::from_series(series, 1, DegreewiseSubspace::zero(alg), Field::rationals());
	int mult = 0, ultra = 0, failures = 0, outside = 0;
	for (int t = 0; t < 100; ++t) {
		AssocElement u = random_assoc(2, 0, 4, rng, 3), v = random_assoc(2, 0, 4, rng, 3);
		if (t % 4 == 0) u += AssocElement::one();
		Valuation pu = ctx.psi(u), pv = ctx.psi(v);
		if (!pu.is_finite() || !pv.is_finite()) {
			++outside;
			continue;
		}
		Valuation s = ctx.psi(u + v);
		if (s.is_finite() || s.is_infinite()) {
			++ultra;
			if (s.is_finite() && s.value < std::min(pu.value, pv.value)) ++failures;
		}
		if (pu.value + pv.value < ctx.valuation_cap() && u.degree() + v.degree() <= alg->truncation()) {
			++mult;
			if (!(ctx.psi(u * v) == Valuation::finite(pu.value + pv.value))) ++failures;
		}
	}
	Outcome o;
	o.pass = failures == 0 && mult >= 30 && ultra >= 30;
	o.detail = "100 pairs: " + std::to_string(mult) + " product checks, " + std::to_string(ultra) + " sum checks, " + std::to_string(outside) + " outside the window, " +
	           std::to_string(failures) + " failures";
	return o;
}

// 12 ------------------------------------------------------------------------
Outcome series_identities()
{
	int failures = 0, checks = 0;
	for (SeriesSpec spec : {SeriesSpec{1, {3, 2}}, SeriesSpec{2, {2}}}) {
		auto alg = FreeLieAlgebra::make(GeneratorSet::standard(3), 5);
		SeriesContext series(spec, alg);
		auto idx = series.term_indices();
		for (std::size_t i = 1; i < idx.size(); ++i) {
			++checks;
			if (!series.term(idx[i - 1].first, idx[i - 1].second).contains(series.term(idx[i].first, idx[i].second))) ++failures;
		}
		const int m1 = spec.steps.front();
		for (int p = 1; p <= m1; ++p)
			for (int q = 1; p + q <= m1 + 1; ++q)
				for (int da = 1; da <= 5; ++da)
					for (int db = 1; da + db <= 5; ++db)
						for (const auto& x : series.term(1, p).basis(da))
							for (const auto& y : series.term(1, q).basis(db)) {
								++checks;
								if (!series.term(1, p + q).contains(alg->bracket(x, y))) ++failures;
							}
		for (unsigned mask = 0; mask < 8; ++mask) {
			std::vector<bool> killed{bool(mask & 1), bool(mask & 2), bool(mask & 4)};
			for (auto [k, l] : idx)
				for (int d = 1; d <= 5; ++d)
					for (const auto& x : series.term(k, l).basis(d)) {
						++checks;
						if (!series.term(k, l).contains(alg->kill_generators(x, killed))) ++failures;
					}
		}
		for (const std::vector<int>& subset : {std::vector<int>{0}, std::vector<int>{0, 1}, std::vector<int>{1, 2}, std::vector<int>{0, 2}}) {
			auto H = subalgebra_span(alg, subset);
			for (auto [k, l] : idx) {
				++checks;
				if (!(intersect(H, series.term(k, l)) == lower_central(intersect(H, series.term(k, 1)), l))) ++failures;
			}
		}
	}
	Outcome o;
	o.pass = failures == 0;
	o.detail = std::to_string(checks) + " checks (brackets, nesting, 8 endomorphisms, subalgebra powers), " + std::to_string(failures) + " failures";
	return o;
}

// 13 ------------------------------------------------------------------------
std::pair<int, std::string> run_command(const std::string& cmd)
{
	std::string out;
	FILE* pipe = popen(cmd.c_str(), "r");
	if (!pipe) return {-1, out};
	std::array<char, 4096> buf;
	std::size_t got;
	while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
	int status = pclose(pipe);
	return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_end_to_end()
{
	const std::string file = std::string(LIEFREEDOM_SOURCE_DIR) + "/tools/examples/shirshov.lf";
	const std::string cmd = std::string(LIEFREEDOM_CLI_PATH) + " check " + file + " --format json";
	auto [s1, out1] = run_command(cmd);
	auto [s2, out2] = run_command(cmd);
	bool parsed = false;
	try {
		std::ifstream in(file);
		std::stringstream text;
		text << in.rdbuf();
		parsed = parse_presentation(text.str()).checks.size() == 1;
	} catch (const std::exception&) {
	}
	Outcome o;
	o.pass = parsed && s1 == 0 && s2 == 0 && !out1.empty() && out1 == out2 && out1.find("\"passed\": true") != std::string::npos;
	o.detail = "exit codes " + std::to_string(s1) + "," + std::to_string(s2) + ", " + std::to_string(out1.size()) + " bytes of JSON, " +
	           (out1 == out2 ? "byte-identical" : "different");
	return o;
}

}  // namespace

int main()
{
	const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
	    {"Fox identity suite", fox_identity_suite},
	    {"Witt dimensions", witt_dimensions},
	    {"Chain rule", chain_rule},
	    {"Fox-data constructions round trip", lemma_constructions},
	    {"Decomposition modulo [N,N], both directions", theorem3_both_directions},
	    {"Derived-ideal criterion equivalence", derived_ideal_equivalence},
	    {"Freedom check, positive instance", theorem1_positive},
	    {"Freedom check, negative instance", theorem1_negative},
	    {"Generator-subset freedom check", theorem2_desk},
	    {"Triangularization invariants", triangularization_invariants},
	    {"Valuation laws", valuation_laws},
	    {"Series identities", series_identities},
	    {"CLI end-to-end", cli_end_to_end},
	};
	int failed = 0;
	for (std::size_t i = 0; i < criteria.size(); ++i) {
		auto t0 = std::chrono::steady_clock::now();
		Outcome o;
		try {
			o = criteria[i].second();
		} catch (const std::exception& e) {
			o = {false, std::string("exception: ") + e.what()};
		}
		double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
		if (!o.pass) ++failed;
		char timing[32];
		std::snprintf(timing, sizeof timing, "%.1fs", secs);
		std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1 < 10 ? " " : "") << i + 1 << "  " << criteria[i].first << ": " << o.detail << " [" << timing << "]"
		          << std::endl;
	}
	std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria pass" << std::endl;
	return failed == 0 ? 0 : 1;
}
