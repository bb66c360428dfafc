#include <gtest/gtest.h>

#include <random>

#include "liefreedom/constructions.hpp"

using namespace liefreedom;

namespace {

LieElement random_in(const DegreewiseSubspace& s, int d, std::mt19937_64& rng)
{
	std::uniform_int_distribution<int> coef(-2, 2);
	LieElement x = s.algebra().zero();
	for (const auto& b : s.basis(d)) x += Scalar(coef(rng)) * b;
	return x;
}

LieElement random_upto(const DegreewiseSubspace& s, int lo, int hi, std::mt19937_64& rng)
{
	LieElement x = s.algebra().zero();
	for (int d = lo; d <= hi; ++d) x += random_in(s, d, rng);
	return x;
}

FoxData fox_data(const LieElement& v, const std::vector<int>& K)
{
	AssocElement image = v.algebra()->lie_to_assoc(v);
	FoxData u;
	for (int j : K) u[j] = fox_derivative(image, j);
	return u;
}

class Fox3 : public ::testing::Test {
protected:
	std::shared_ptr<FreeLieAlgebra> alg = FreeLieAlgebra::make(GeneratorSet::standard(3), 6);
	DegreewiseSubspace F = DegreewiseSubspace::whole(alg);
	DegreewiseSubspace N = lower_central(F, 2);
	std::vector<int> K{0, 1};
	LieElement y(int i) const { return alg->generator(i); }
};

}  // namespace

TEST_F(Fox3, Lemma1Examples)
{
	EXPECT_TRUE(lemma1_construct({}, K, N).is_zero());
	FoxData u{{0, AssocElement::generator(1)}, {1, -AssocElement::generator(0)}};
	LieElement v = lemma1_construct(u, K, N);
	NUCongruence cong(N);
	AssocElement image = alg->lie_to_assoc(v);
	EXPECT_TRUE(cong.congruent(fox_derivative(image, 0), u[0]));
	EXPECT_TRUE(cong.congruent(fox_derivative(image, 1), u[1]));
	EXPECT_TRUE(N.contains(v));
	EXPECT_TRUE(subalgebra_span(alg, K).contains(v));
}

TEST_F(Fox3, Lemma1RejectsBadInput)
{
	EXPECT_THROW(lemma1_construct({{0, AssocElement::generator(0)}}, K, N), HypothesisFailure);
	EXPECT_THROW(lemma1_construct({{0, AssocElement::generator(2)}}, K, N), std::invalid_argument);
	EXPECT_THROW(lemma1_construct({{2, AssocElement::generator(0)}}, K, N), std::invalid_argument);
}

TEST_F(Fox3, Lemma1RoundTrip)
{
	std::mt19937_64 rng(31);
	auto M = intersect(subalgebra_span(alg, K), N);
	NUCongruence cong(N);
	for (int t = 0; t < 15; ++t) {
		LieElement w = random_upto(M, 2, 5, rng);
		FoxData u = fox_data(w, K);
		LieElement v = lemma1_construct(u, K, N);
		EXPECT_TRUE(M.contains(v));
		AssocElement image = alg->lie_to_assoc(v);
		for (int j : K) EXPECT_TRUE(cong.congruent(fox_derivative(image, j), u[j]));
	}
}

TEST_F(Fox3, Lemma2SingleOutsideFactor)
{
	// u_j = a_j · y3 with (a_1, a_2) the data of [y1, y2].
	FoxData u{{0, AssocElement::generator(1) * AssocElement::generator(2)}, {1, -AssocElement::generator(0) * AssocElement::generator(2)}};
	LieElement v = lemma2_construct(u, K, N);
	EXPECT_EQ(v.degree(), 3);
	NUCongruence cong(N);
	AssocElement image = alg->lie_to_assoc(v);
	for (int j : K) EXPECT_TRUE(cong.congruent(fox_derivative(image, j), u[j]));
	auto ideal = ideal_closure(alg, intersect(subalgebra_span(alg, K), N).basis(2));
	EXPECT_TRUE(ideal.contains(v));
	// Inputs already in U(F_K) reproduce the first construction.
	FoxData inner{{0, AssocElement::generator(1)}, {1, -AssocElement::generator(0)}};
	EXPECT_EQ(lemma2_construct(inner, K, N), lemma1_construct(inner, K, N));
}

TEST_F(Fox3, Lemma2RoundTrip)
{
	std::mt19937_64 rng(37);
	auto M = intersect(subalgebra_span(alg, K), N);
	std::vector<LieElement> gens;
	for (int d = 2; d <= 6; ++d)
		for (const auto& x : M.basis(d)) gens.push_back(x);
	auto ideal = ideal_closure(alg, gens);
	NUCongruence cong(N);
	for (int t = 0; t < 15; ++t) {
		LieElement w = random_upto(ideal, 2, 5, rng);
		FoxData u = fox_data(w, K);
		LieElement v = lemma2_construct(u, K, N);
		EXPECT_TRUE(ideal.contains(v));
		AssocElement image = alg->lie_to_assoc(v);
		for (int j : K) EXPECT_TRUE(cong.congruent(fox_derivative(image, j), u[j]));
	}
}

TEST_F(Fox3, Theorem3Examples)
{
	LieElement in_K = alg->bracket(y(0), alg->bracket(y(0), y(1))) + y(1);
	auto d0 = theorem3_decompose(in_K, K, N);
	EXPECT_TRUE(N.contains(in_K - d0.v0));
	EXPECT_TRUE(lower_central(N, 2).contains(in_K - d0.v0 - d0.v1));

	LieElement v = alg->bracket(alg->bracket(y(0), y(1)), y(2));
	auto d1 = theorem3_decompose(v, K, N);
	EXPECT_TRUE(d1.v0.is_zero());
	EXPECT_EQ(d1.v1, v);
	EXPECT_TRUE(d1.remainder.is_zero());
	EXPECT_TRUE(d1.remainder_in_derived);
	EXPECT_EQ(d1.verified_up_to, 6);

	EXPECT_THROW(theorem3_decompose(y(2), K, N), HypothesisFailure);
	EXPECT_FALSE(theorem3_hypothesis(y(2), K, N));
}

TEST_F(Fox3, Theorem3BothDirections)
{
	std::mt19937_64 rng(41);
	auto FK = subalgebra_span(alg, K);
	auto M = intersect(FK, N);
	std::vector<LieElement> gens;
	for (int d = 2; d <= 6; ++d)
		for (const auto& x : M.basis(d)) gens.push_back(x);
	auto ideal = ideal_closure(alg, gens);
	auto NN = lower_central(N, 2);
	for (int t = 0; t < 8; ++t) {
		LieElement v = random_upto(FK, 1, 4, rng) + random_upto(ideal, 2, 5, rng) + random_upto(NN, 4, 6, rng);
		ASSERT_TRUE(theorem3_hypothesis(v, K, N));
		auto dec = theorem3_decompose(v, K, N);
		EXPECT_TRUE(FK.contains(dec.v0));
		EXPECT_TRUE(ideal.contains(dec.v1));
		EXPECT_TRUE(NN.contains(v - dec.v0 - dec.v1));
	}
}

TEST_F(Fox3, DerivedIdealCriterion)
{
	std::mt19937_64 rng(43);
	DerivedIdealTest test(N);
	int yes = 0, no = 0;
	for (int t = 0; t < 40; ++t) {
		LieElement v = t % 2 ? alg->bracket(random_in(N, 2, rng), random_in(N, 2 + t % 3, rng)) : random_upto(N, 2, 5, rng);
		bool fox = test.by_fox(v);
		EXPECT_EQ(fox, test.direct(v));
		(fox ? yes : no)++;
	}
	EXPECT_GT(yes, 5);
	EXPECT_GT(no, 5);
	EXPECT_TRUE(derived_ideal_criterion(alg->bracket(alg->bracket(y(0), y(1)), alg->bracket(y(0), y(2))), N));
	EXPECT_FALSE(derived_ideal_criterion(alg->bracket(y(0), y(1)), N));
	EXPECT_THROW(derived_ideal_criterion(y(0), N), std::invalid_argument);
}

TEST(Lemma4, Witnesses)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(3), 5);
	auto H = subalgebra_span(alg, {0, 1});
	auto N = lower_central(DegreewiseSubspace::whole(alg), 2);
	AdaptedBasis ab(H, N, AdaptedOrder::OutsideFirst);
	std::vector<PBWMonomial> alpha, beta;
	for (int d = 1; d <= 2; ++d) {
		auto [a, b] = classify_representatives(ab, d);
		alpha.insert(alpha.end(), a.begin(), a.end());
		beta.insert(beta.end(), b.begin(), b.end());
	}
	std::sort(alpha.begin(), alpha.end());
	std::sort(beta.begin(), beta.end());
	EXPECT_FALSE(lemma4_witness(alpha, alpha, ab).has_value());

	auto w = lemma4_witness({beta.front()}, {alpha.front()}, ab);
	ASSERT_TRUE(w.has_value());
	EXPECT_EQ(w->delta_index, 0u);
	EXPECT_EQ(w->mu_index, 0u);
	EXPECT_GT(w->monomial.counts(ab).rest, 0);

	std::vector<PBWMonomial> unsorted{alpha[1], alpha[0]};
	EXPECT_THROW(lemma4_witness(unsorted, alpha, ab), std::invalid_argument);

	std::mt19937_64 rng(47);
	std::vector<PBWMonomial> pool = alpha;
	pool.insert(pool.end(), beta.begin(), beta.end());
	auto straightener = PBWStraightener(std::make_shared<AdaptedBasis>(ab));
	for (int t = 0; t < 30; ++t) {
		std::vector<PBWMonomial> ds, ms;
		std::shuffle(pool.begin(), pool.end(), rng);
		ds.assign(pool.begin(), pool.begin() + 1 + t % 4);
		std::shuffle(pool.begin(), pool.end(), rng);
		ms.assign(pool.begin(), pool.begin() + 1 + (t / 4) % 4);
		std::sort(ds.begin(), ds.end());
		std::sort(ms.begin(), ms.end());
		auto found = lemma4_witness(ds, ms, ab);
		bool outside = false;
		for (const auto& m : ds) outside = outside || m.counts(ab).rest > 0;
		for (const auto& m : ms) outside = outside || m.counts(ab).rest > 0;
		ASSERT_EQ(found.has_value(), outside);
		if (!found) continue;
		int occurrences = 0;
		for (std::size_t i = 0; i < ds.size(); ++i)
			for (std::size_t j = 0; j < ms.size(); ++j) {
				std::vector<int> seq = ds[i].factors;
				seq.insert(seq.end(), ms[j].factors.begin(), ms[j].factors.end());
				auto e = straightener.straighten_sequence(seq);
				if (e.count(found->monomial)) {
					++occurrences;
					EXPECT_EQ(i, found->delta_index);
					EXPECT_EQ(j, found->mu_index);
				}
			}
		EXPECT_EQ(occurrences, 1);
		EXPECT_GT(found->monomial.counts(ab).rest, 0);
	}
}
