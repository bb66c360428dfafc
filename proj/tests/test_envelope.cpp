#include <gtest/gtest.h>

#include <random>

#include "liefreedom/envelope.hpp"

using namespace liefreedom;

namespace {

std::size_t sz(int x) { return static_cast<std::size_t>(x); }

LieElement random_lie(const FreeLieAlgebra& alg, int d, std::mt19937_64& rng, int spread = 2)
{
	std::uniform_int_distribution<int> coef(-spread, spread);
	Vector v(sz(alg.dim(d)));
	for (auto& c : v) c = Scalar(coef(rng));
	return alg.from_coords(v, d);
}

LieElement random_in(const DegreewiseSubspace& s, int d, std::mt19937_64& rng)
{
	std::uniform_int_distribution<int> coef(-2, 2);
	LieElement x = s.algebra().zero();
	for (const auto& b : s.basis(d)) x += Scalar(coef(rng)) * b;
	return x;
}

AssocElement random_assoc(int n, int min_deg, int max_deg, std::mt19937_64& rng, int terms = 5)
{
	std::uniform_int_distribution<int> coef(-3, 3);
	std::uniform_int_distribution<int> len(min_deg, max_deg);
	std::uniform_int_distribution<int> letter(0, n - 1);
	AssocElement u;
	for (int t = 0; t < terms; ++t) {
		std::vector<Letter> w(sz(len(rng)));
		for (auto& l : w) l = static_cast<Letter>(letter(rng));
		u.add(Word::from_letters(w), Scalar(coef(rng)));
	}
	return u;
}

std::vector<Word> words_of_length(int n, int len)
{
	std::vector<Word> out;
	std::size_t count = 1;
	for (int i = 0; i < len; ++i) count *= sz(n);
	for (std::size_t r = 0; r < count; ++r) out.push_back(Word::unrank(r, len, n));
	return out;
}

// Span of a·x·b over words a, b and basis elements x of N, all of total
// degree at most d, by direct enumeration.
SubspaceBasis brute_ideal(const DegreewiseSubspace& N, int d)
{
	const FreeLieAlgebra& alg = N.algebra();
	const int n = alg.rank();
	std::vector<LieElement> gens;
	if (N.is_graded()) {
		for (int e = 1; e <= d; ++e)
			for (const auto& x : N.basis(e)) gens.push_back(x);
	} else {
		gens = N.basis(d);
	}
	std::vector<Vector> rows;
	for (const auto& x : gens) {
		AssocElement g = alg.lie_to_assoc(x);
		int room = d - g.degree();
		for (int la = 0; la <= room; ++la)
			for (int lb = 0; la + lb <= room; ++lb)
				for (const auto& a : words_of_length(n, la))
					for (const auto& b : words_of_length(n, lb))
						rows.push_back(word_coords(AssocElement::word(a) * g * AssocElement::word(b), n, d));
	}
	return SubspaceBasis::span(word_space_dim(n, d), rows);
}

// Coordinates of the degree-d part of u on words of length d only.
Vector top_coords(const AssocElement& u, int n, int d)
{
	Vector full = word_coords(u.component(d), n, d);
	return Vector(full.end() - static_cast<std::ptrdiff_t>(words_of_length(n, d).size()), full.end());
}

// Degree-d slice of a subspace given in word coordinates of degree ≤ d.
SubspaceBasis top_slice(const SubspaceBasis& s, int n, int d)
{
	const std::size_t width = words_of_length(n, d).size();
	const std::size_t start = s.ambient_dim() - width;
	std::vector<bool> keep(s.ambient_dim(), false);
	for (std::size_t i = start; i < s.ambient_dim(); ++i) keep[i] = true;
	SubspaceBasis inside = intersect_coordinates(s, keep);
	std::vector<Vector> rows;
	for (const auto& v : inside.vectors()) rows.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(start), v.end());
	return SubspaceBasis::span(width, rows);
}

// Number of weakly increasing sequences drawn from items with the given
// degrees, of total degree d.
long long multiset_count(const std::vector<int>& degrees, int d)
{
	std::vector<long long> ways(sz(d) + 1, 0);
	ways[0] = 1;
	for (int deg : degrees)
		for (int t = deg; t <= d; ++t) ways[sz(t)] += ways[sz(t - deg)];
	return ways[sz(d)];
}

}  // namespace

TEST(Fox, BasicDerivatives)
{
	auto y1 = AssocElement::generator(0), y2 = AssocElement::generator(1);
	EXPECT_EQ(fox_derivative(y1, 0), AssocElement::one());
	EXPECT_TRUE(fox_derivative(y1, 1).is_zero());
	AssocElement u = y1 * y2 - y2 * y1;
	EXPECT_EQ(fox_derivative(u, 0), y2);
	EXPECT_EQ(fox_derivative(u, 1), -y1);
	EXPECT_THROW(fox_derivative(AssocElement::one() + y1, 0), std::domain_error);
}

TEST(Fox, ReconstructionLinearityAndCommutatorRule)
{
	std::mt19937_64 rng(11);
	for (int trial = 0; trial < 60; ++trial) {
		const int n = 2 + trial % 3;
		auto alg = FreeLieAlgebra::make(GeneratorSet::standard(n), 5);
		int du = 1 + trial % 3, dv = 1 + (trial / 3) % 2;
		LieElement a = random_lie(*alg, du, rng), b = random_lie(*alg, dv, rng);
		AssocElement ua = alg->lie_to_assoc(a), ub = alg->lie_to_assoc(b);
		AssocElement rebuilt;
		for (int j = 0; j < n; ++j) rebuilt += AssocElement::generator(static_cast<Letter>(j)) * fox_derivative(ua, j);
		EXPECT_EQ(rebuilt, ua);
		AssocElement uc = alg->lie_to_assoc(alg->bracket(a, b));
		for (int k = 0; k < n; ++k) {
			EXPECT_EQ(fox_derivative(Scalar(3) * ua - Scalar(2) * ub, k), Scalar(3) * fox_derivative(ua, k) - Scalar(2) * fox_derivative(ub, k));
			EXPECT_EQ(fox_derivative(uc, k), fox_derivative(ua, k) * ub - fox_derivative(ub, k) * ua);
		}
	}
}

TEST(Mul, UnitAssociativityAndTruncation)
{
	std::mt19937_64 rng(3);
	AssocElement a = random_assoc(3, 0, 3, rng);
	EXPECT_EQ(mul(AssocElement::one(), a), a);
	for (int t = 0; t < 20; ++t) {
		AssocElement x = random_assoc(3, 0, 3, rng), y = random_assoc(3, 0, 3, rng), z = random_assoc(3, 0, 3, rng);
		EXPECT_EQ(mul(mul(x, y), z), mul(x, mul(y, z)));
	}
	AssocElement p = AssocElement::generator(0, 2) * AssocElement::generator(1, 2) * AssocElement::generator(0, 2);
	EXPECT_TRUE(p.is_zero());
}

TEST(WordCoordinates, RoundTrip)
{
	std::mt19937_64 rng(5);
	EXPECT_EQ(word_space_dim(2, 3), 15u);
	EXPECT_EQ(word_coordinate(Word{}, 2), 0u);
	EXPECT_EQ(word_coordinate(Word::letter(1), 2), 2u);
	for (int t = 0; t < 10; ++t) {
		AssocElement u = random_assoc(3, 0, 4, rng);
		Vector v = word_coords(u, 3, 4);
		EXPECT_EQ(from_word_coords(v, 3, kMaxDegree), u);
	}
}

TEST(IdealNU, Examples)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(2), 4);
	EXPECT_TRUE(ideal_NU_basis(DegreewiseSubspace::zero(alg), 3).is_zero());
	auto g2 = lower_central(DegreewiseSubspace::whole(alg), 2);
	auto b2 = ideal_NU_basis(g2, 2);
	ASSERT_EQ(b2.dim(), 1u);
	AssocElement c = AssocElement::generator(0) * AssocElement::generator(1) - AssocElement::generator(1) * AssocElement::generator(0);
	EXPECT_TRUE(b2.contains(word_coords(c, 2, 2)));
	EXPECT_EQ(ideal_NU_basis(DegreewiseSubspace::whole(alg), 3).dim(), word_space_dim(2, 3) - 1);
}

TEST(IdealNU, MatchesEnumeration)
{
	std::mt19937_64 rng(7);
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(3), 4);
	std::vector<DegreewiseSubspace> cases = {
	    lower_central(DegreewiseSubspace::whole(alg), 3),
	    ideal_closure(alg, {alg->bracket(alg->generator(0), alg->generator(2))}),
	    subalgebra_span(alg, {0, 1}),
	    DegreewiseSubspace::span(alg, {alg->generator(0) + alg->bracket(alg->generator(1), alg->generator(2))}),
	};
	for (const auto& N : cases)
		for (int d = 1; d <= 4; ++d) EXPECT_EQ(ideal_NU_basis(N, d), brute_ideal(N, d)) << "degree " << d;
}

TEST(IdealNU, CongruenceMatchesOracle)
{
	std::mt19937_64 rng(9);
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(3), 5);
	auto N = ideal_closure(alg, {alg->bracket(alg->generator(0), alg->generator(1))});
	NUCongruence cong(N);
	for (int t = 0; t < 30; ++t) {
		int dn = 2 + t % 2, du = 1 + t % 2;
		LieElement nel = random_in(N, dn, rng);
		LieElement u = random_lie(*alg, du, rng);
		AssocElement bracket = alg->lie_to_assoc(alg->bracket(nel, u));
		for (int k = 0; k < 3; ++k) {
			AssocElement lhs = fox_derivative(bracket, k);
			AssocElement rhs = fox_derivative(alg->lie_to_assoc(nel), k) * alg->lie_to_assoc(u);
			EXPECT_TRUE(cong.congruent(lhs, rhs));
		}
		AssocElement w = random_assoc(3, 1, 4, rng);
		int d = std::max(w.degree(), 1);
		EXPECT_EQ(cong.is_zero(w), brute_ideal(N, d).contains(word_coords(w, 3, d)));
		AssocElement inside = random_assoc(3, 0, 1, rng) * alg->lie_to_assoc(nel) * random_assoc(3, 0, 1, rng);
		EXPECT_TRUE(cong.is_zero(inside));
		EXPECT_TRUE(congruent_mod_NU(w + inside, w, N));
	}
}

TEST(IdealNU, FilteredCongruence)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(2), 4);
	LieElement y1 = alg->generator(0), y2 = alg->generator(1);
	auto N = DegreewiseSubspace::span(alg, {y1 + alg->bracket(y1, y2)});
	NUCongruence cong(N);
	AssocElement g = alg->lie_to_assoc(y1 + alg->bracket(y1, y2));
	EXPECT_TRUE(cong.is_zero(g * AssocElement::generator(1)));
	EXPECT_FALSE(cong.is_zero(AssocElement::generator(0)));
	EXPECT_TRUE(cong.congruent(AssocElement::generator(0), -alg->lie_to_assoc(alg->bracket(y1, y2))));
}

class Adapted : public ::testing::Test {
protected:
	std::shared_ptr<FreeLieAlgebra> alg = FreeLieAlgebra::make(GeneratorSet::standard(3), 5);
	DegreewiseSubspace H = subalgebra_span(alg, {0, 1});
	DegreewiseSubspace N = lower_central(DegreewiseSubspace::whole(alg), 2);
};

TEST_F(Adapted, ClassesFormABasisInOrder)
{
	for (auto order : {AdaptedOrder::InsideFirst, AdaptedOrder::OutsideFirst}) {
		AdaptedBasis ab(H, N, order);
		int last_rank = -1, last_degree = 0;
		for (const auto& e : ab.elements()) {
			bool in_h = H.contains(e.value), in_n = N.contains(e.value);
			switch (e.cls) {
			case BasisClass::Both: EXPECT_TRUE(in_h && in_n); break;
			case BasisClass::HOnly: EXPECT_TRUE(in_h && !in_n); break;
			case BasisClass::NOnly: EXPECT_TRUE(in_n && !in_h); break;
			case BasisClass::Rest: EXPECT_FALSE(in_h || in_n); break;
			}
			int r = ab.class_rank(e.cls);
			EXPECT_TRUE(r > last_rank || (r == last_rank && e.degree >= last_degree));
			last_rank = r;
			last_degree = e.degree;
		}
		for (int d = 1; d <= 5; ++d) {
			std::vector<Vector> rows;
			for (const auto& e : ab.elements())
				if (e.degree == d) rows.push_back(e.coords);
			EXPECT_EQ(rows.size(), sz(alg->dim(d)));
			EXPECT_EQ(SubspaceBasis::span(sz(alg->dim(d)), rows).dim(), sz(alg->dim(d)));
		}
	}
	AdaptedBasis outside(H, N, AdaptedOrder::OutsideFirst);
	EXPECT_EQ(outside.elements().front().cls, BasisClass::Rest);
	AdaptedBasis inside(H, N, AdaptedOrder::InsideFirst);
	EXPECT_EQ(inside.elements().back().cls, BasisClass::Rest);
}

TEST_F(Adapted, ExpandInvertsCoordinates)
{
	std::mt19937_64 rng(13);
	AdaptedBasis ab(H, N, AdaptedOrder::OutsideFirst);
	for (int d = 1; d <= 5; ++d) {
		LieElement x = random_lie(*alg, d, rng);
		LieElement back = alg->zero();
		for (const auto& [id, c] : ab.expand(x, d)) back += c * ab.element(id).value;
		EXPECT_EQ(back, x);
	}
}

TEST_F(Adapted, StraighteningIsABijectionPerDegree)
{
	auto ab = std::make_shared<AdaptedBasis>(H, N, AdaptedOrder::OutsideFirst);
	PBWStraightener s(ab);
	for (int d = 1; d <= 4; ++d) {
		auto words = words_of_length(3, d);
		std::map<PBWMonomial, std::size_t> column;
		std::vector<PBWExpansion> images;
		for (const auto& w : words) {
			images.push_back(s.straighten(AssocElement::word(w)));
			for (const auto& [m, c] : images.back()) {
				EXPECT_EQ(m.degree(*ab), d);
				EXPECT_TRUE(std::is_sorted(m.factors.begin(), m.factors.end()));
				column.emplace(m, column.size());
			}
		}
		Matrix mat(words.size(), column.size());
		for (std::size_t r = 0; r < images.size(); ++r)
			for (const auto& [m, c] : images[r]) mat(r, column[m]) = c;
		EXPECT_EQ(column.size(), words.size());
		EXPECT_EQ(rank(mat), words.size());
	}
}

TEST_F(Adapted, StraighteningAgreesWithMultiplication)
{
	std::mt19937_64 rng(17);
	auto ab = std::make_shared<AdaptedBasis>(H, N, AdaptedOrder::InsideFirst);
	PBWStraightener s(ab);
	EXPECT_EQ(s.straighten(AssocElement::one()).size(), 1u);
	for (int t = 0; t < 15; ++t) {
		AssocElement u = random_assoc(3, 0, 2, rng, 3), v = random_assoc(3, 0, 2, rng, 3);
		PBWExpansion su = s.straighten(u), sv = s.straighten(v);
		EXPECT_EQ(s.to_assoc(su), u);
		PBWExpansion product;
		for (const auto& [a, ca] : su) {
			for (const auto& [b, cb] : sv) {
				std::vector<int> seq = a.factors;
				seq.insert(seq.end(), b.factors.begin(), b.factors.end());
				for (const auto& [m, c] : s.straighten_sequence(seq)) product[m] += ca * cb * c;
			}
		}
		std::erase_if(product, [](const auto& kv) { return kv.second.is_zero(); });
		EXPECT_EQ(s.straighten(mul(u, v)), product);
		EXPECT_EQ(pbw_straighten(u + v, *ab), [&] {
			PBWExpansion sum = su;
			for (const auto& [m, c] : sv) sum[m] += c;
			std::erase_if(sum, [](const auto& kv) { return kv.second.is_zero(); });
			return sum;
		}());
	}
}

TEST_F(Adapted, SingleSwap)
{
	auto ab = std::make_shared<AdaptedBasis>(H, N, AdaptedOrder::OutsideFirst);
	PBWStraightener s(ab);
	auto ids = ab->ids(BasisClass::HOnly, 1);
	ASSERT_EQ(ids.size(), 2u);
	int a = ids[0], b = ids[1];
	PBWExpansion e = s.straighten_sequence({b, a});
	PBWExpansion expected{{PBWMonomial{{a, b}}, Scalar(1)}};
	for (const auto& [id, c] : ab->expand(alg->bracket(ab->element(b).value, ab->element(a).value), 2)) expected[PBWMonomial{{id}}] += c;
	EXPECT_EQ(e, expected);
	EXPECT_EQ(s.straighten_sequence({a, b}), (PBWExpansion{{PBWMonomial{{a, b}}, Scalar(1)}}));
}

TEST_F(Adapted, RepresentativeCounts)
{
	AdaptedBasis ab(H, N, AdaptedOrder::OutsideFirst);
	auto [alpha1, beta1] = classify_representatives(ab, 1);
	EXPECT_EQ(alpha1.size(), ab.ids(BasisClass::HOnly, 1).size());
	EXPECT_EQ(beta1.size(), ab.ids(BasisClass::Rest, 1).size());
	std::vector<int> h_degrees, all_degrees;
	for (const auto& e : ab.elements()) {
		if (e.cls == BasisClass::HOnly) h_degrees.push_back(e.degree);
		if (e.cls == BasisClass::HOnly || e.cls == BasisClass::Rest) all_degrees.push_back(e.degree);
	}
	for (int d = 1; d <= 5; ++d) {
		auto [alpha, beta] = classify_representatives(ab, d);
		EXPECT_EQ(static_cast<long long>(alpha.size()), multiset_count(h_degrees, d));
		EXPECT_EQ(static_cast<long long>(alpha.size() + beta.size()), multiset_count(all_degrees, d));
		for (const auto& m : alpha) EXPECT_EQ(m.counts(ab), (ClassCounts{0, static_cast<int>(m.factors.size()), 0, 0}));
		for (const auto& m : beta) EXPECT_GT(m.counts(ab).rest, 0);
		EXPECT_TRUE(std::is_sorted(alpha.begin(), alpha.end()));
		EXPECT_TRUE(std::is_sorted(beta.begin(), beta.end()));
		// The monomials represent U(F) modulo N_U in this degree.
		std::size_t quotient_dim = words_of_length(3, d).size() - top_slice(ideal_NU_basis(N, d), 3, d).dim();
		EXPECT_EQ(alpha.size() + beta.size(), quotient_dim);
	}
}

TEST(Representatives, EmptyOutsideClass)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(2), 4);
	auto whole = DegreewiseSubspace::whole(alg);
	AdaptedBasis ab(whole, DegreewiseSubspace::zero(alg), AdaptedOrder::OutsideFirst);
	for (int d = 1; d <= 4; ++d) EXPECT_TRUE(classify_representatives(ab, d).second.empty());
}

namespace {

std::vector<DegreewiseSubspace> derived_chain(const std::shared_ptr<FreeLieAlgebra>& alg, int length)
{
	std::vector<DegreewiseSubspace> chain{lower_central(DegreewiseSubspace::whole(alg), 2)};
	for (int i = 1; i < length; ++i) chain.push_back(lower_central(chain.front(), i + 1));
	return chain;
}

}  // namespace

TEST(Delta, Examples)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(2), 5);
	auto chain = derived_chain(alg, 3);
	for (int d = 1; d <= 4; ++d)
		EXPECT_EQ(delta_ideal_basis(chain, 1, d, DeltaSide::Full), top_slice(ideal_NU_basis(chain[0], d), 2, d));
	AssocElement c = alg->lie_to_assoc(alg->bracket(alg->generator(0), alg->generator(1)));
	auto d2 = delta_ideal_basis(chain, 2, 4, DeltaSide::Full);
	EXPECT_EQ(d2, SubspaceBasis::span(16, {top_coords(c * c, 2, 4)}));
	EXPECT_EQ(delta_ideal_basis(chain, 2, 4, DeltaSide::WithinN), d2);
	for (int t = 1; t <= 3; ++t)
		for (int d = 1; d <= 5; ++d) {
			auto outer = delta_ideal_basis(chain, t, d, DeltaSide::Full);
			EXPECT_TRUE(outer.contains(delta_ideal_basis(chain, t + 1, d, DeltaSide::Full)));
			EXPECT_TRUE(outer.contains(delta_ideal_basis(chain, t, d, DeltaSide::WithinN)));
		}
}

TEST(Delta, WithinNMatchesProductEnumeration)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(2), 6);
	auto chain = derived_chain(alg, 2);
	// Δ_2 inside U(N) at degree 6: spanned by products of chain elements with
	// weight ≥ 2, times arbitrary products of elements of N on either side.
	std::vector<std::vector<AssocElement>> n1(7), n2(7);
	for (int e = 1; e <= 6; ++e) {
		for (const auto& x : chain[0].basis(e)) n1[sz(e)].push_back(alg->lie_to_assoc(x));
		for (const auto& x : chain[1].basis(e)) n2[sz(e)].push_back(alg->lie_to_assoc(x));
	}
	std::vector<Vector> rows;
	// a·b·c with a, b, c ∈ N or a·x·c with x ∈ N_2, padding by products of N.
	std::function<void(AssocElement, int, int)> extend = [&](AssocElement acc, int weight, int deg) {
		if (deg == 6) {
			if (weight >= 2) rows.push_back(top_coords(acc, 2, 6));
			return;
		}
		for (int e = 1; deg + e <= 6; ++e) {
			for (const auto& x : n1[sz(e)]) extend(acc * x, weight + 1, deg + e);
			for (const auto& x : n2[sz(e)]) extend(acc * x, weight + 2, deg + e);
		}
	};
	extend(AssocElement::one(), 0, 0);
	EXPECT_EQ(delta_ideal_basis(chain, 2, 6, DeltaSide::WithinN), SubspaceBasis::span(64, rows));
}

TEST(Valuation, OrderAndPrinting)
{
	EXPECT_TRUE(pivot_less(Valuation::finite(3), Valuation::at_least(2)));
	EXPECT_TRUE(pivot_less(Valuation::at_least(6), Valuation::infinite()));
	EXPECT_TRUE(pivot_less(Valuation::finite(1), Valuation::finite(2)));
	EXPECT_FALSE(pivot_less(Valuation::finite(2), Valuation::finite(2)));
	EXPECT_EQ(Valuation::at_least(6).to_string(), ">=6");
	EXPECT_EQ(Valuation::infinite().to_string(), "inf");
	EXPECT_FALSE(Valuation::at_least(6).decidable());
}

TEST(Valuation, Examples)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(2), 6);
	QuotientContext ctx(derived_chain(alg, 3));
	EXPECT_EQ(ctx.psi(AssocElement::generator(0)), Valuation::finite(0));
	AssocElement c = alg->lie_to_assoc(alg->bracket(alg->generator(0), alg->generator(1)));
	EXPECT_EQ(ctx.psi(c), Valuation::finite(1));
	EXPECT_EQ(ctx.psi(c * c), Valuation::finite(2));
	EXPECT_EQ(psi_valuation(AssocElement(), ctx), Valuation::infinite());
	EXPECT_EQ(ctx.psi(c + AssocElement::generator(1)), Valuation::finite(0));
}

TEST(Valuation, RejectsNonIdealChains)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(2), 4);
	auto h = subalgebra_span(alg, {0});
	EXPECT_THROW(QuotientContext({DegreewiseSubspace::whole(alg), h}), std::invalid_argument);
	auto g2 = lower_central(DegreewiseSubspace::whole(alg), 2);
	EXPECT_THROW(QuotientContext({g2, DegreewiseSubspace::whole(alg)}), std::invalid_argument);
}

TEST(Valuation, FlagMatchesDeltaIdeals)
{
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(2), 6);
	SeriesSpec spec{2, {2, 1}};
	SeriesContext series(spec, alg);
	auto ctx = QuotientContext::from_series(series, 1, DegreewiseSubspace::zero(alg));
	auto W = ideal_NU_basis(ctx.working_ideal(), 6);
	int proper = 0;
	for (int d = 1; d <= 6; ++d) {
		SubspaceBasis w_top = top_slice(W, 2, d);
		for (int j = 1; j <= 4; ++j) {
			SubspaceBasis delta = delta_ideal_basis(ctx.chain(), j, d, DeltaSide::Full);
			std::size_t expected = sum(delta, w_top).dim() - w_top.dim();
			EXPECT_EQ(ctx.delta_basis(j, d).size(), expected) << "j=" << j << " d=" << d;
			if (expected > 0 && expected < ctx.quotient().dim(d)) ++proper;
		}
	}
	EXPECT_GT(proper, 5);
}

TEST(Valuation, MultiplicativeAndUltrametric)
{
	std::mt19937_64 rng(19);
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(2), 8);
	SeriesSpec spec{1, {3}};
	SeriesContext series(spec, alg);
	for (Field field : {Field::rationals(), Field::prime(1000003)}) {
		auto ctx = QuotientContext::from_series(series, 1, DegreewiseSubspace::zero(alg), field);
		int checked = 0;
		for (int t = 0; t < 40; ++t) {
			AssocElement u = ctx.coerce(random_assoc(2, 1, 4, rng, 3)), v = ctx.coerce(random_assoc(2, 1, 4, rng, 3));
			Valuation pu = ctx.psi(u), pv = ctx.psi(v);
			if (!pu.is_finite() || !pv.is_finite()) continue;
			Valuation sum_v = ctx.psi(u + v);
			if (sum_v.is_finite()) EXPECT_GE(sum_v.value, std::min(pu.value, pv.value));
			Valuation prod = ctx.psi(ctx.multiply(u, v));
			if (pu.value + pv.value < ctx.valuation_cap()) {
				EXPECT_EQ(prod, Valuation::finite(pu.value + pv.value));
				++checked;
			}
		}
		EXPECT_GT(checked, 10);
	}
}

TEST(QuotientContext, MultiplyMatchesNormalForm)
{
	std::mt19937_64 rng(23);
	auto alg = FreeLieAlgebra::make(GeneratorSet::standard(3), 6);
	auto g3 = lower_central(DegreewiseSubspace::whole(alg), 3);
	QuotientContext ctx({g3});
	NUCongruence cong(g3);
	for (int t = 0; t < 10; ++t) {
		AssocElement u = random_assoc(3, 0, 3, rng, 4), v = random_assoc(3, 0, 3, rng, 4);
		AssocElement p = ctx.multiply(u, v);
		EXPECT_TRUE(cong.congruent(p, u * v));
		EXPECT_EQ(p, ctx.normal_form(u * v));
	}
	AssocElement big = random_assoc(3, 4, 4, rng, 2);
	EXPECT_THROW(ctx.multiply(big, big), std::range_error);
}
