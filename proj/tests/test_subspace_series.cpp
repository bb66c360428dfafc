#include <gtest/gtest.h>

#include <random>

#include "liefreedom/series.hpp"

using namespace liefreedom;

namespace {

// Span of all left-normed brackets [g, y_i1, ..., y_ik] by exhaustive
// enumeration of the index sequences, in global coordinates of F_{≤D}.
SubspaceBasis brute_force_ideal(const FreeLieAlgebra& alg, const std::vector<LieElement>& gens)
{
	const int D = alg.truncation();
	std::vector<Vector> rows;
	std::vector<LieElement> layer = gens;
	for (int k = 0; k < D && !layer.empty(); ++k) {
		std::vector<LieElement> next;
		for (const auto& x : layer) {
			rows.push_back(alg.filtered_coords(x, D));
			for (int j = 0; j < alg.rank(); ++j) {
				auto y = alg.bracket(x, alg.generator(j));
				if (!y.is_zero()) next.push_back(y);
			}
		}
		layer = std::move(next);
	}
	return SubspaceBasis::span(static_cast<std::size_t>(alg.total_dim()), rows);
}

LieElement random_element_of(const DegreewiseSubspace& s, int d, std::mt19937_64& rng)
{
	std::uniform_int_distribution<int> coef(-2, 2);
	LieElement x = s.algebra().zero();
	for (const auto& b : s.basis(d)) x += Scalar(coef(rng)) * b;
	return x;
}

}  // namespace

TEST(Subalgebra, GeneratorSubsets)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(3), 5);
	EXPECT_EQ(subalgebra_span(alg, {0, 1, 2}), DegreewiseSubspace::whole(alg));
	auto h = subalgebra_span(alg, {0, 1});
	EXPECT_EQ(h.dim(2), 1u);
	EXPECT_TRUE(h.contains(alg->bracket(alg->generator(0), alg->generator(1))));
	EXPECT_FALSE(h.contains(alg->generator(2)));
	auto one = subalgebra_span(alg, {2});
	EXPECT_EQ(one.dim(1), 1u);
	for (int d = 2; d <= 5; ++d) EXPECT_EQ(one.dim(d), 0u);
	EXPECT_THROW(subalgebra_span(alg, {}), std::invalid_argument);
	EXPECT_TRUE(is_subalgebra(h));
}

TEST(LowerCentral, PowersOfTheFreeAlgebra)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(2), 6);
	auto f = DegreewiseSubspace::whole(alg);
	EXPECT_EQ(lower_central(f, 1), f);
	auto g2 = lower_central(f, 2);
	EXPECT_EQ(g2.dim(1), 0u);
	for (int d = 2; d <= 6; ++d) EXPECT_EQ(g2.dim(d), static_cast<std::size_t>(alg->dim(d)));
	EXPECT_THROW(lower_central(f, 0), std::invalid_argument);
	auto g4 = lower_central(f, 4);
	for (int d = 1; d <= 6; ++d) EXPECT_EQ(g4.dim(d), d >= 4 ? static_cast<std::size_t>(alg->dim(d)) : 0u);
}

TEST(LowerCentral, RejectsNonSubalgebra)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(2), 3);
	auto s = DegreewiseSubspace::span(alg, {alg->generator(0), alg->generator(1)});
	EXPECT_FALSE(is_subalgebra(s));
	EXPECT_THROW(lower_central(s, 2), std::invalid_argument);
}

TEST(IdealClosure, Examples)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(2), 4);
	auto y1 = alg->generator(0), y2 = alg->generator(1);
	auto i1 = ideal_closure(alg, {y1});
	EXPECT_EQ(i1.dim(1), 1u);
	EXPECT_EQ(i1.dim(2), 1u);
	EXPECT_EQ(i1.to_filtered().level(4), brute_force_ideal(*alg, {y1}));
	EXPECT_TRUE(ideal_closure(alg, {}).is_zero());
	auto ic = ideal_closure(alg, {alg->bracket(y1, y2)});
	EXPECT_EQ(ic.dim(3), 2u);
}

TEST(IdealClosure, InhomogeneousMatchesEnumeration)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(3), 5);
	auto r = alg->generator(0) + alg->bracket(alg->generator(1), alg->generator(2));
	auto ideal = ideal_closure(alg, {r});
	EXPECT_FALSE(ideal.is_graded());
	EXPECT_EQ(ideal.level(5), brute_force_ideal(*alg, {r}));
	EXPECT_TRUE(ideal.contains(r));
	EXPECT_FALSE(ideal.contains(alg->generator(1)));
	// Levels are nested intersections with F_{≤d}.
	for (int d = 1; d < 5; ++d) EXPECT_LE(ideal.dim_upto(d), ideal.dim_upto(d + 1));
}

TEST(IdealClosure, RedundantGeneratorsChangeNothing)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(3), 5);
	auto r = alg->bracket(alg->generator(0), alg->generator(2));
	auto base = ideal_closure(alg, {r});
	auto extra = alg->bracket(r, alg->generator(1)) + alg->bracket(r, alg->generator(0));
	EXPECT_EQ(ideal_closure(alg, {r, extra}), base);
}

TEST(DegreewiseSubspace, FilteredAndGradedAgree)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(3), 4);
	auto h = subalgebra_span(alg, {0, 1});
	auto n = lower_central_term(alg, 2);
	auto hf = h.to_filtered();
	EXPECT_EQ(h, hf);
	EXPECT_EQ(intersect(hf, n), intersect(h, n));
	EXPECT_EQ(sum(hf, n), sum(h, n));
	for (int d = 1; d <= 4; ++d) EXPECT_EQ(hf.dim_upto(d), h.dim_upto(d));
}

TEST(Series, SingleStep)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(3), 4);
	auto ctx = series_compute({1, {1}}, alg);
	EXPECT_EQ(ctx.term(1, 1), DegreewiseSubspace::whole(alg));
	EXPECT_EQ(ctx.term(1, 2), lower_central_term(alg, 2));
	EXPECT_THROW(ctx.term(1, 3), std::out_of_range);
	EXPECT_THROW(series_compute({0, {1}}, alg), std::invalid_argument);
	EXPECT_THROW(series_compute({1, {0}}, alg), std::invalid_argument);
}

TEST(Series, SecondBlockIsDerivedOfGammaThree)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(2), 6);
	auto ctx = series_compute({1, {2, 1}}, alg);
	EXPECT_EQ(ctx.term(2, 1), lower_central_term(alg, 3));
	EXPECT_EQ(ctx.term(1, 3), ctx.term(2, 1));
	// Oracle: brackets of all pairs of degree-3 basis elements.
	const auto& f3 = alg->lyndon_basis(3);
	std::vector<Vector> rows;
	for (std::size_t i = 0; i < f3.size(); ++i)
		for (std::size_t j = 0; j < f3.size(); ++j)
			rows.push_back(alg->coords(alg->bracket(alg->basis_element(alg->offset(3) + static_cast<int>(i)),
			                                        alg->basis_element(alg->offset(3) + static_cast<int>(j))),
			                           6));
	auto expected = SubspaceBasis::span(static_cast<std::size_t>(alg->dim(6)), rows);
	EXPECT_EQ(ctx.term(2, 2).level(6), expected);
	EXPECT_EQ(ctx.term(2, 2).dim(6), 1u);
	for (int d = 1; d < 6; ++d) EXPECT_EQ(ctx.term(2, 2).dim(d), 0u);
	EXPECT_FALSE(ctx.final_term_vanishes());
}

TEST(Series, NestedAndBracketCompatible)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(3), 6);
	auto ctx = series_compute({1, {3, 2}}, alg);
	auto idx = ctx.term_indices();
	for (std::size_t i = 1; i < idx.size(); ++i)
		EXPECT_TRUE(ctx.term(idx[i - 1].first, idx[i - 1].second).contains(ctx.term(idx[i].first, idx[i].second)));
	std::mt19937_64 rng(4);
	for (int p = 1; p <= 3; ++p) {
		for (int q = 1; p + q <= 4; ++q) {
			const auto& a = ctx.term(1, p);
			const auto& b = ctx.term(1, q);
			for (int da = 1; da <= 6; ++da)
				for (int db = 1; da + db <= 6; ++db) {
					auto x = random_element_of(a, da, rng);
					auto y = random_element_of(b, db, rng);
					EXPECT_TRUE(ctx.term(1, p + q).contains(alg->bracket(x, y))) << p << "," << q;
				}
		}
	}
	EXPECT_TRUE(ctx.final_term_vanishes());
	EXPECT_FALSE(ctx.warnings().empty());
}

TEST(Series, ElementaryEndomorphismInvariance)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(3), 5);
	EXPECT_TRUE(elementary_endo_invariance_check(series_compute({1, {2, 2}}, alg)));
	EXPECT_TRUE(elementary_endo_invariance_check(series_compute({2, {1}}, alg)));
	auto r = alg->bracket(alg->generator(0), alg->generator(2));
	EXPECT_TRUE(alg->kill_generators(r, {false, false, true}).is_zero());
}

TEST(Series, SubalgebraIntersectionCommutesWithPowers)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(3), 6);
	auto ctx = series_compute({1, {2, 2}}, alg);
	for (const auto& subset : std::vector<std::vector<int>>{{0, 1}, {1, 2}, {0}}) {
		auto h = subalgebra_span(alg, subset);
		for (auto [k, l] : ctx.term_indices()) {
			auto lhs = intersect(h, ctx.term(k, l));
			auto rhs = lower_central(intersect(h, ctx.term(k, 1)), l);
			EXPECT_EQ(lhs, rhs) << k << "," << l;
		}
	}
}
