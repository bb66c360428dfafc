#include "liefreedom/constructions.hpp"

#include <algorithm>
#include <set>

namespace liefreedom {

namespace {

bool is_ideal(const DegreewiseSubspace& N)
{
	const FreeLieAlgebra& alg = N.algebra();
	for (int d = 1; d < alg.truncation(); ++d)
		for (const auto& x : N.basis(d))
			for (int k = 0; k < alg.rank(); ++k)
				if (!N.contains(alg.bracket(x, alg.generator(k)))) return false;
	return true;
}

/// Shared data for the Fox constructions over one (K, N).
struct FoxSetting {
	const FreeLieAlgebra& alg;
	std::vector<int> K;
	std::vector<bool> in_K;
	DegreewiseSubspace N;
	std::shared_ptr<const AdaptedBasis> ab;
	PBWStraightener straightener;
	NUCongruence congruence;

	FoxSetting(const std::vector<int>& subset, const DegreewiseSubspace& ideal)
	    : alg(ideal.algebra()),
	      K(subset),
	      in_K(static_cast<std::size_t>(ideal.algebra().rank()), false),
	      N(ideal),
	      ab(make_basis(subset, ideal)),
	      straightener(ab),
	      congruence(ideal)
	{
		for (int j : K) in_K[static_cast<std::size_t>(j)] = true;
	}

	static std::shared_ptr<const AdaptedBasis> make_basis(const std::vector<int>& subset, const DegreewiseSubspace& ideal)
	{
		if (!ideal.is_graded()) throw std::invalid_argument("Fox constructions: graded ideal required");
		if (!is_ideal(ideal)) throw std::invalid_argument("Fox constructions: subspace is not an ideal");
		std::set<int> seen(subset.begin(), subset.end());
		if (seen.size() != subset.size()) throw std::invalid_argument("Fox constructions: repeated generator in subset");
		auto H = subalgebra_span(ideal.algebra_ptr(), subset);
		return std::make_shared<AdaptedBasis>(H, ideal, AdaptedOrder::InsideFirst);
	}

	bool inside_K(BasisClass c) const { return c == BasisClass::Both || c == BasisClass::HOnly; }

	AssocElement letter(int j) const { return AssocElement::generator(static_cast<Letter>(j), alg.truncation()); }

	void check_input(const FoxData& u, bool restrict_to_K) const
	{
		for (const auto& [j, uj] : u) {
			if (j < 0 || j >= alg.rank() || !in_K[static_cast<std::size_t>(j)])
				throw std::invalid_argument("Fox constructions: data for a generator outside the subset");
			if (uj.degree() >= alg.truncation()) throw std::invalid_argument("Fox constructions: data degree must stay below the truncation");
			if (!restrict_to_K) continue;
			for (const auto& [w, c] : uj.terms())
				for (int i = 0; i < w.length; ++i)
					if (!in_K[w.at(i)]) throw std::invalid_argument("Fox constructions: data outside U(F_K)");
		}
	}

	AssocElement weighted_sum(const FoxData& u) const
	{
		AssocElement s(alg.truncation());
		for (const auto& [j, uj] : u) s += letter(j) * uj;
		return s;
	}

	void verify(const LieElement& v, const FoxData& u) const
	{
		AssocElement image = alg.lie_to_assoc(v);
		for (int j : K) {
			auto it = u.find(j);
			AssocElement target = it == u.end() ? AssocElement(alg.truncation()) : it->second;
			if (!congruence.congruent(fox_derivative(image, j), target))
				throw std::logic_error("Fox constructions: constructed element fails its congruences");
		}
	}

	LieElement lemma1(const FoxData& u) const
	{
		check_input(u, true);
		AssocElement s = weighted_sum(u);
		if (!congruence.is_zero(s)) throw HypothesisFailure("lemma 1: the weighted sum is not in the ideal");
		LieElement v = alg.zero();
		for (const auto& [m, c] : straightener.straighten(s)) {
			if (m.factors.empty() || ab->element(m.factors.front()).cls != BasisClass::Both)
				throw std::logic_error("lemma 1: straightened sum has a monomial without a leading ideal factor");
			std::vector<LieElement> tail;
			for (std::size_t i = 1; i < m.factors.size(); ++i) tail.push_back(ab->element(m.factors[i]).value);
			v += c * alg.left_normed(ab->element(m.factors.front()).value, tail);
		}
		verify(v, u);
		return v;
	}

	LieElement lemma2(const FoxData& u) const
	{
		check_input(u, false);
		if (!congruence.is_zero(weighted_sum(u))) throw HypothesisFailure("lemma 2: the weighted sum is not in the ideal");
		// Split each u_j as Σ_l a_{j,l}·f_l with a_{j,l} ∈ U(F_K) and f_l a
		// sorted product of outside factors; terms with N-factors vanish.
		std::map<std::vector<int>, FoxData> parts;
		for (const auto& [j, uj] : u) {
			for (const auto& [m, c] : straightener.straighten(uj)) {
				std::size_t cut = 0;
				while (cut < m.factors.size() && inside_K(ab->element(m.factors[cut]).cls)) ++cut;
				std::vector<int> tail(m.factors.begin() + static_cast<std::ptrdiff_t>(cut), m.factors.end());
				bool killed = std::any_of(tail.begin(), tail.end(), [&](int f) { return ab->element(f).cls != BasisClass::Rest; });
				if (killed) continue;
				PBWMonomial head{std::vector<int>(m.factors.begin(), m.factors.begin() + static_cast<std::ptrdiff_t>(cut))};
				auto& slot = parts[tail].try_emplace(j, AssocElement(alg.truncation())).first->second;
				slot.add_scaled(straightener.to_assoc(head), c);
			}
		}
		LieElement v = alg.zero();
		for (const auto& [tail, data] : parts) {
			LieElement vl = lemma1(data);
			std::vector<LieElement> factors;
			for (int f : tail) factors.push_back(ab->element(f).value);
			v += alg.left_normed(vl, factors);
		}
		verify(v, u);
		return v;
	}
};

}  // namespace

LieElement lemma1_construct(const FoxData& u, const std::vector<int>& K, const DegreewiseSubspace& N)
{
	return FoxSetting(K, N).lemma1(u);
}

LieElement lemma2_construct(const FoxData& u, const std::vector<int>& K, const DegreewiseSubspace& N)
{
	return FoxSetting(K, N).lemma2(u);
}

bool theorem3_hypothesis(const LieElement& v, const std::vector<int>& K, const DegreewiseSubspace& N)
{
	const FreeLieAlgebra& alg = N.algebra();
	std::vector<bool> in_K(static_cast<std::size_t>(alg.rank()), false);
	for (int j : K) in_K.at(static_cast<std::size_t>(j)) = true;
	NUCongruence congruence(N);
	AssocElement image = alg.lie_to_assoc(v);
	for (int k = 0; k < alg.rank(); ++k)
		if (!in_K[static_cast<std::size_t>(k)] && !congruence.is_zero(fox_derivative(image, k))) return false;
	return true;
}

Decomposition theorem3_decompose(const LieElement& v, const std::vector<int>& K, const DegreewiseSubspace& N)
{
	FoxSetting setting(K, N);
	const FreeLieAlgebra& alg = setting.alg;
	AssocElement image = alg.lie_to_assoc(v);
	for (int k = 0; k < alg.rank(); ++k) {
		if (setting.in_K[static_cast<std::size_t>(k)]) continue;
		if (!setting.congruence.is_zero(fox_derivative(image, k)))
			throw HypothesisFailure("decomposition: the Fox derivative along generator " + std::to_string(k + 1) + " is not in the ideal");
	}
	Decomposition out{alg.zero(), alg.zero(), alg.zero()};
	for (int d = 1; d <= v.degree(); ++d) {
		LieElement part = v.component(d);
		if (part.is_zero()) continue;
		for (const auto& [id, c] : setting.ab->expand(part, d))
			if (setting.ab->element(id).cls == BasisClass::HOnly) out.v0 += c * setting.ab->element(id).value;
	}
	LieElement r = v - out.v0;
	if (!N.contains(r)) throw std::logic_error("decomposition: residual after the subalgebra part is not in N");
	FoxData u;
	AssocElement r_image = alg.lie_to_assoc(r);
	for (int j : K) u[j] = fox_derivative(r_image, j);
	out.v1 = setting.lemma2(u);
	out.remainder = r - out.v1;
	out.remainder_in_derived = lower_central(N, 2).contains(out.remainder);
	out.verified_up_to = alg.truncation();
	if (!out.remainder_in_derived) throw std::logic_error("decomposition: remainder is not in the derived ideal");
	return out;
}

DerivedIdealTest::DerivedIdealTest(const DegreewiseSubspace& N) : N_(N), derived_(lower_central(N, 2)), congruence_(N)
{
	if (!is_ideal(N)) throw std::invalid_argument("derived ideal test: subspace is not an ideal");
}

void DerivedIdealTest::require_member(const LieElement& v) const
{
	if (!N_.contains(v)) throw std::invalid_argument("derived ideal test: element is not in N");
}

bool DerivedIdealTest::by_fox(const LieElement& v) const
{
	require_member(v);
	AssocElement image = N_.algebra().lie_to_assoc(v);
	for (int k = 0; k < N_.algebra().rank(); ++k)
		if (!congruence_.is_zero(fox_derivative(image, k))) return false;
	return true;
}

bool DerivedIdealTest::direct(const LieElement& v) const
{
	require_member(v);
	return derived_.contains(v);
}

bool derived_ideal_criterion(const LieElement& v, const DegreewiseSubspace& N)
{
	DerivedIdealTest test(N);
	bool fox = test.by_fox(v);
	if (fox != test.direct(v)) throw std::logic_error("derived ideal test: Fox criterion disagrees with direct membership");
	return fox;
}

std::optional<Lemma4Witness> lemma4_witness(const std::vector<PBWMonomial>& deltas, const std::vector<PBWMonomial>& mus,
                                            const AdaptedBasis& ab)
{
	auto validate = [&](const std::vector<PBWMonomial>& list) {
		for (std::size_t i = 0; i < list.size(); ++i) {
			if (i > 0 && !(list[i - 1] < list[i])) throw std::invalid_argument("lemma 4: list is not strictly increasing");
			const auto& f = list[i].factors;
			if (!std::is_sorted(f.begin(), f.end())) throw std::invalid_argument("lemma 4: monomial factors are not sorted");
			for (int id : f) {
				BasisClass c = ab.element(id).cls;
				if (c != BasisClass::Rest && c != BasisClass::HOnly) throw std::invalid_argument("lemma 4: monomial is not a representative");
			}
		}
	};
	validate(deltas);
	validate(mus);
	auto rest = [&](const PBWMonomial& m) { return m.counts(ab).rest; };
	bool any_outside = std::any_of(deltas.begin(), deltas.end(), [&](const auto& m) { return rest(m) > 0; }) ||
	                   std::any_of(mus.begin(), mus.end(), [&](const auto& m) { return rest(m) > 0; });
	if (!any_outside || deltas.empty() || mus.empty()) return std::nullopt;

	PBWStraightener s(std::shared_ptr<const AdaptedBasis>(&ab, [](const AdaptedBasis*) {}));
	std::vector<std::vector<PBWExpansion>> products(deltas.size(), std::vector<PBWExpansion>(mus.size()));
	for (std::size_t i = 0; i < deltas.size(); ++i)
		for (std::size_t j = 0; j < mus.size(); ++j) {
			std::vector<int> seq = deltas[i].factors;
			seq.insert(seq.end(), mus[j].factors.begin(), mus[j].factors.end());
			products[i][j] = s.straighten_sequence(seq);
		}
	auto occurrences = [&](const PBWMonomial& m) {
		int count = 0;
		for (const auto& row : products)
			for (const auto& e : row) count += e.count(m) ? 1 : 0;
		return count;
	};

	// Maximal pair: most outside factors, then largest in the basis order.
	auto pick = [&](const std::vector<PBWMonomial>& list) {
		std::size_t best = 0;
		for (std::size_t i = 1; i < list.size(); ++i)
			if (rest(list[i]) >= rest(list[best])) best = i;
		return best;
	};
	std::size_t i0 = pick(deltas), j0 = pick(mus);
	std::vector<int> merged = deltas[i0].factors;
	merged.insert(merged.end(), mus[j0].factors.begin(), mus[j0].factors.end());
	std::sort(merged.begin(), merged.end());
	PBWMonomial leading{merged};
	if (rest(leading) > 0 && products[i0][j0].count(leading) && occurrences(leading) == 1) return Lemma4Witness{leading, i0, j0, true};

	for (std::size_t i = 0; i < deltas.size(); ++i)
		for (std::size_t j = 0; j < mus.size(); ++j)
			for (const auto& [m, c] : products[i][j]) {
				auto counts = m.counts(ab);
				if (counts.rest > 0 && counts.n_only == 0 && counts.both == 0 && occurrences(m) == 1) return Lemma4Witness{m, i, j, false};
			}
	throw std::logic_error("lemma 4: no product monomial occurs exactly once");
}

}  // namespace liefreedom
