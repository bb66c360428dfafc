#include "liefreedom/envelope.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace liefreedom {

namespace {

std::size_t sz(int x) { return static_cast<std::size_t>(x); }

std::size_t power(int n, int e)
{
	std::size_t p = 1;
	for (int i = 0; i < e; ++i) p *= sz(n);
	return p;
}

void require_graded(const DegreewiseSubspace& s, const char* what)
{
	if (!s.is_graded()) throw std::invalid_argument(std::string(what) + ": graded subspace required");
}

/// Coordinates of a homogeneous element on the words of length d.
Vector homogeneous_coords(const AssocElement& u, int n, int d)
{
	Vector v(power(n, d));
	for (const auto& [w, c] : u.terms())
		if (w.length == d) v[w.rank(n)] += c;
	return v;
}

}  // namespace

// ---------------------------------------------------------------------------

std::size_t word_space_dim(int n, int d)
{
	std::size_t total = 0;
	for (int k = 0; k <= d; ++k) total += power(n, k);
	return total;
}

std::size_t word_coordinate(const Word& w, int n) { return word_space_dim(n, w.length - 1) + w.rank(n); }

Vector word_coords(const AssocElement& u, int n, int d)
{
	Vector v(word_space_dim(n, d));
	for (const auto& [w, c] : u.terms()) {
		if (w.length > d) throw std::invalid_argument("word_coords: element exceeds the requested degree");
		v[word_coordinate(w, n)] += c;
	}
	return v;
}

AssocElement from_word_coords(std::span<const Scalar> v, int n, int truncation)
{
	AssocElement u(truncation);
	std::size_t offset = 0;
	for (int len = 0; offset < v.size(); ++len) {
		std::size_t count = power(n, len);
		for (std::size_t i = 0; i < count && offset + i < v.size(); ++i)
			if (!v[offset + i].is_zero()) u.add(Word::unrank(i, len, n), v[offset + i]);
		offset += count;
	}
	return u;
}

// ---------------------------------------------------------------------------

std::vector<LieElement> ideal_generators(const DegreewiseSubspace& N, int d)
{
	require_graded(N, "ideal_generators");
	const FreeLieAlgebra& alg = N.algebra();
	if (d < 1 || d > alg.truncation()) return {};
	const SubspaceBasis& here = N.level(d);
	if (here.is_zero()) return {};
	std::vector<Vector> brackets;
	if (d >= 2) {
		for (const auto& x : N.basis(d - 1))
			for (int k = 0; k < alg.rank(); ++k) brackets.push_back(alg.coords(alg.bracket(x, alg.generator(k)), d));
	}
	SubspaceBasis inner = SubspaceBasis::span(sz(alg.dim(d)), brackets);
	std::vector<LieElement> out;
	for (const auto& v : complete_with(inner, here.vectors())) out.push_back(alg.from_coords(v, d));
	return out;
}

std::shared_ptr<GradedQuotient> enveloping_quotient(const DegreewiseSubspace& N, Field field)
{
	require_graded(N, "enveloping_quotient");
	const FreeLieAlgebra& alg = N.algebra();
	return std::make_shared<GradedQuotient>(alg.rank(), alg.truncation(), field, [N](int d) {
		std::vector<AssocElement> gens;
		for (const auto& g : ideal_generators(N, d)) gens.push_back(N.algebra().lie_to_assoc(g));
		return gens;
	});
}

SubspaceBasis ideal_NU_basis(const DegreewiseSubspace& N, int d)
{
	const FreeLieAlgebra& alg = N.algebra();
	if (d < 0 || d > alg.truncation()) throw std::out_of_range("ideal_NU_basis: degree outside the truncation");
	const int n = alg.rank();
	const std::size_t width = word_space_dim(n, d);
	EchelonBuilder builder(width);
	if (N.is_graded()) {
		auto q = enveloping_quotient(N);
		for (int e = 1; e <= d; ++e) {
			if (q->dim(e) == power(n, e)) continue;
			for (std::size_t r = 0; r < power(n, e); ++r) {
				AssocElement w = AssocElement::word(Word::unrank(r, e, n));
				AssocElement diff = w - q->normal_form(w);
				if (!diff.is_zero()) builder.insert(word_coords(diff, n, d));
			}
		}
		return SubspaceBasis::from_builder(std::move(builder));
	}
	// Filtered generators: close the span of N ∩ F_{≤d} under multiplication
	// by letters on either side, staying within degree d.
	std::deque<AssocElement> queue;
	for (const auto& x : N.basis(d)) {
		AssocElement a = alg.lie_to_assoc(x);
		if (builder.insert(word_coords(a, n, d))) queue.push_back(std::move(a));
	}
	while (!queue.empty()) {
		AssocElement a = std::move(queue.front());
		queue.pop_front();
		if (a.degree() >= d) continue;
		for (int k = 0; k < n; ++k) {
			AssocElement y = AssocElement::generator(static_cast<Letter>(k), d);
			for (AssocElement b : {y * a, a * y}) {
				if (builder.insert(word_coords(b, n, d))) queue.push_back(std::move(b));
			}
		}
	}
	return SubspaceBasis::from_builder(std::move(builder));
}

NUCongruence::NUCongruence(DegreewiseSubspace N, Field field) : N_(std::move(N))
{
	if (N_.is_graded()) quotient_ = enveloping_quotient(N_, field);
}

bool NUCongruence::is_zero(const AssocElement& u) const
{
	if (u.is_zero()) return true;
	if (u.degree() > N_.truncation()) throw std::invalid_argument("congruence test beyond the truncation degree");
	if (quotient_) return quotient_->contains(u);
	int d = u.degree();
	std::lock_guard lock(mutex_);
	auto it = filtered_.find(d);
	if (it == filtered_.end()) it = filtered_.emplace(d, ideal_NU_basis(N_, d)).first;
	return it->second.contains(word_coords(u, N_.algebra().rank(), d));
}

bool congruent_mod_NU(const AssocElement& u, const AssocElement& v, const DegreewiseSubspace& N)
{
	return NUCongruence(N).congruent(u, v);
}

// ---------------------------------------------------------------------------

std::string to_string(BasisClass c)
{
	switch (c) {
	case BasisClass::Both: return "both";
	case BasisClass::HOnly: return "h-only";
	case BasisClass::NOnly: return "n-only";
	case BasisClass::Rest: return "rest";
	}
	return "?";
}

int AdaptedBasis::class_rank(BasisClass c) const
{
	int r = 0;
	switch (c) {
	case BasisClass::Both: r = 0; break;
	case BasisClass::HOnly: r = 1; break;
	case BasisClass::NOnly: r = 2; break;
	case BasisClass::Rest: r = 3; break;
	}
	if (order_ == AdaptedOrder::OutsideFirst && (r == 0 || r == 3)) r = 3 - r;
	return r;
}

AdaptedBasis::AdaptedBasis(const DegreewiseSubspace& H, const DegreewiseSubspace& N, AdaptedOrder order)
    : algebra_(H.algebra_ptr()), order_(order)
{
	require_graded(H, "adapted basis");
	require_graded(N, "adapted basis");
	if (H.algebra_ptr() != N.algebra_ptr()) throw std::invalid_argument("adapted basis: subspaces of different algebras");
	const FreeLieAlgebra& alg = *algebra_;
	const int D = alg.truncation();
	struct Pending {
		BasisClass cls;
		int degree;
		int index;
		Vector coords;
	};
	std::vector<Pending> pending;
	std::vector<std::vector<Vector>> per_degree(sz(D) + 1);
	for (int d = 1; d <= D; ++d) {
		const std::size_t dim = sz(alg.dim(d));
		const SubspaceBasis& h = H.level(d);
		const SubspaceBasis& nn = N.level(d);
		SubspaceBasis both = intersect(h, nn);
		SubspaceBasis total = sum(h, nn);
		std::vector<std::pair<BasisClass, std::vector<Vector>>> groups = {
		    {BasisClass::Both, both.vectors()},
		    {BasisClass::HOnly, extend_basis(both, h)},
		    {BasisClass::NOnly, extend_basis(both, nn)},
		    {BasisClass::Rest, extend_basis(total, SubspaceBasis::full(dim))},
		};
		for (auto& [cls, vecs] : groups) {
			int index = 0;
			for (auto& v : vecs) {
				per_degree[sz(d)].push_back(v);
				pending.push_back({cls, d, index++, std::move(v)});
			}
		}
		if (per_degree[sz(d)].size() != dim) throw std::logic_error("adapted basis: classes do not form a basis");
	}
	std::vector<std::size_t> order_idx(pending.size());
	for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
	std::stable_sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
		const Pending& x = pending[a];
		const Pending& y = pending[b];
		int rx = class_rank(x.cls), ry = class_rank(y.cls);
		if (rx != ry) return rx < ry;
		if (x.degree != y.degree) return x.degree < y.degree;
		return x.index < y.index;
	});
	// Position of each pending entry within its degree block.
	std::vector<std::size_t> position(pending.size());
	{
		std::vector<std::size_t> next(sz(D) + 1, 0);
		for (std::size_t i = 0; i < pending.size(); ++i) position[i] = next[sz(pending[i].degree)]++;
	}
	ids_by_degree_.assign(sz(D) + 1, {});
	for (int d = 1; d <= D; ++d) ids_by_degree_[sz(d)].assign(per_degree[sz(d)].size(), -1);
	for (std::size_t k = 0; k < order_idx.size(); ++k) {
		const Pending& p = pending[order_idx[k]];
		ids_by_degree_[sz(p.degree)][position[order_idx[k]]] = static_cast<int>(k);
		elements_.push_back({p.cls, p.degree, alg.from_coords(p.coords, p.degree), p.coords});
	}
	inverse_.assign(sz(D) + 1, Matrix());
	for (int d = 1; d <= D; ++d) {
		const std::size_t dim = per_degree[sz(d)].size();
		Matrix aug(dim, 2 * dim);
		for (std::size_t r = 0; r < dim; ++r) {
			for (std::size_t c = 0; c < dim; ++c) aug(r, c) = per_degree[sz(d)][r][c];
			aug(r, dim + r) = Scalar(1);
		}
		auto [red, pivots] = rref(std::move(aug));
		Matrix inv(dim, dim);
		for (std::size_t r = 0; r < dim; ++r)
			for (std::size_t c = 0; c < dim; ++c) inv(r, c) = red(r, dim + c);
		inverse_[sz(d)] = std::move(inv);
	}
}

std::vector<int> AdaptedBasis::ids(BasisClass c, int degree) const
{
	std::vector<int> out;
	for (std::size_t i = 0; i < elements_.size(); ++i)
		if (elements_[i].cls == c && elements_[i].degree == degree) out.push_back(static_cast<int>(i));
	return out;
}

std::vector<std::pair<int, Scalar>> AdaptedBasis::expand(const LieElement& x, int d) const
{
	if (d < 1 || d > truncation()) throw std::out_of_range("adapted basis: degree outside the truncation");
	Vector v = algebra_->coords(x, d);
	const Matrix& inv = inverse_[sz(d)];
	std::vector<std::pair<int, Scalar>> out;
	for (std::size_t c = 0; c < inv.cols(); ++c) {
		Scalar s;
		for (std::size_t r = 0; r < inv.rows(); ++r)
			if (!v[r].is_zero()) s += v[r] * inv(r, c);
		if (!s.is_zero()) out.emplace_back(ids_by_degree_[sz(d)][c], s);
	}
	std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
	return out;
}

int PBWMonomial::degree(const AdaptedBasis& ab) const
{
	int d = 0;
	for (int f : factors) d += ab.element(f).degree;
	return d;
}

ClassCounts PBWMonomial::counts(const AdaptedBasis& ab) const
{
	ClassCounts c;
	for (int f : factors) {
		switch (ab.element(f).cls) {
		case BasisClass::Rest: ++c.rest; break;
		case BasisClass::HOnly: ++c.h_only; break;
		case BasisClass::NOnly: ++c.n_only; break;
		case BasisClass::Both: ++c.both; break;
		}
	}
	return c;
}

std::string PBWMonomial::to_string(const AdaptedBasis& ab) const
{
	if (factors.empty()) return "1";
	std::string s;
	for (std::size_t i = 0; i < factors.size(); ++i) {
		if (i) s += " ";
		s += "(" + ab.element(factors[i]).value.to_string() + ")";
	}
	return s;
}

PBWStraightener::PBWStraightener(std::shared_ptr<const AdaptedBasis> ab) : ab_(std::move(ab)) {}

const PBWExpansion& PBWStraightener::sorted(const std::vector<int>& factors) const
{
	std::lock_guard lock(mutex_);
	if (auto it = memo_.find(factors); it != memo_.end()) return it->second;
	PBWExpansion out;
	std::size_t i = 0;
	while (i + 1 < factors.size() && factors[i] <= factors[i + 1]) ++i;
	if (i + 1 >= factors.size()) {
		out[PBWMonomial{factors}] = Scalar(1);
	} else {
		// x y = y x + [x, y] at the first descent.
		const int a = factors[i], b = factors[i + 1];
		std::vector<int> swapped = factors;
		std::swap(swapped[i], swapped[i + 1]);
		for (const auto& [m, c] : sorted(swapped)) out[m] += c;
		auto key = std::make_pair(a, b);
		auto bit = brackets_.find(key);
		if (bit == brackets_.end()) {
			const AdaptedBasis& ab = *ab_;
			LieElement br = ab.algebra().bracket(ab.element(a).value, ab.element(b).value);
			int d = ab.element(a).degree + ab.element(b).degree;
			std::vector<std::pair<int, Scalar>> coeffs;
			if (!br.is_zero()) coeffs = ab.expand(br, d);
			bit = brackets_.emplace(key, std::move(coeffs)).first;
		}
		for (const auto& [id, c] : bit->second) {
			std::vector<int> shorter(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(i));
			shorter.push_back(id);
			shorter.insert(shorter.end(), factors.begin() + static_cast<std::ptrdiff_t>(i) + 2, factors.end());
			for (const auto& [m, c2] : sorted(shorter)) out[m] += c * c2;
		}
		std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
	}
	return memo_.emplace(factors, std::move(out)).first->second;
}

PBWExpansion PBWStraightener::straighten_sequence(const std::vector<int>& factors) const { return sorted(factors); }

PBWExpansion PBWStraightener::straighten(const AssocElement& u) const
{
	const AdaptedBasis& ab = *ab_;
	const FreeLieAlgebra& alg = ab.algebra();
	std::vector<std::vector<std::pair<int, Scalar>>> letters(sz(alg.rank()));
	for (int j = 0; j < alg.rank(); ++j) letters[sz(j)] = ab.expand(alg.generator(j), 1);
	PBWExpansion out;
	for (const auto& [w, c] : u.terms()) {
		if (w.length > ab.truncation()) throw std::invalid_argument("pbw_straighten: word beyond the truncation");
		std::map<std::vector<int>, Scalar> seqs{{{}, c}};
		for (int i = 0; i < w.length; ++i) {
			std::map<std::vector<int>, Scalar> next;
			for (const auto& [s, k] : seqs) {
				for (const auto& [id, e] : letters[w.at(i)]) {
					std::vector<int> t = s;
					t.push_back(id);
					next[t] += k * e;
				}
			}
			seqs = std::move(next);
		}
		for (const auto& [s, k] : seqs) {
			if (k.is_zero()) continue;
			for (const auto& [m, e] : sorted(s)) out[m] += k * e;
		}
	}
	std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
	return out;
}

AssocElement PBWStraightener::to_assoc(const PBWMonomial& m) const
{
	const AdaptedBasis& ab = *ab_;
	AssocElement out = AssocElement::one(ab.truncation());
	for (int f : m.factors) out = out * ab.algebra().lie_to_assoc(ab.element(f).value);
	return out;
}

AssocElement PBWStraightener::to_assoc(const PBWExpansion& e) const
{
	AssocElement out(ab_->truncation());
	for (const auto& [m, c] : e) out.add_scaled(to_assoc(m), c);
	return out;
}

PBWExpansion pbw_straighten(const AssocElement& u, const AdaptedBasis& ab)
{
	// Non-owning view: the straightener does not outlive this call.
	PBWStraightener s(std::shared_ptr<const AdaptedBasis>(&ab, [](const AdaptedBasis*) {}));
	return s.straighten(u);
}

std::pair<std::vector<PBWMonomial>, std::vector<PBWMonomial>> classify_representatives(const AdaptedBasis& ab, int d)
{
	if (d < 0 || d > ab.truncation()) throw std::out_of_range("classify_representatives: degree outside the truncation");
	std::vector<int> allowed;
	for (std::size_t i = 0; i < ab.size(); ++i) {
		BasisClass c = ab.elements()[i].cls;
		if (c == BasisClass::Rest || c == BasisClass::HOnly) allowed.push_back(static_cast<int>(i));
	}
	std::vector<PBWMonomial> alpha, beta;
	std::vector<int> current;
	std::function<void(std::size_t, int)> walk = [&](std::size_t from, int remaining) {
		if (remaining == 0) {
			PBWMonomial m{current};
			(m.counts(ab).rest == 0 ? alpha : beta).push_back(std::move(m));
			return;
		}
		for (std::size_t k = from; k < allowed.size(); ++k) {
			int deg = ab.element(allowed[k]).degree;
			if (deg > remaining) continue;
			current.push_back(allowed[k]);
			walk(k, remaining - deg);
			current.pop_back();
		}
	};
	walk(0, d);
	std::sort(alpha.begin(), alpha.end());
	std::sort(beta.begin(), beta.end());
	return {std::move(alpha), std::move(beta)};
}

// ---------------------------------------------------------------------------

SubspaceBasis delta_ideal_basis(const std::vector<DegreewiseSubspace>& chain, int t, int d, DeltaSide side)
{
	if (chain.empty()) throw std::invalid_argument("delta_ideal_basis: empty chain");
	if (t < 1) throw std::invalid_argument("delta_ideal_basis: weight must be at least 1");
	for (const auto& c : chain) require_graded(c, "delta_ideal_basis");
	const FreeLieAlgebra& alg = chain.front().algebra();
	const int n = alg.rank();
	const int D = alg.truncation();
	if (d < 0 || d > D) throw std::out_of_range("delta_ideal_basis: degree outside the truncation");
	const int m = static_cast<int>(chain.size());

	// Homogeneous spanning sets, reduced to a basis per (weight, degree).
	auto reduce_basis = [&](const std::vector<AssocElement>& xs, int e) {
		EchelonBuilder b(power(n, e));
		std::vector<AssocElement> out;
		for (const auto& x : xs)
			if (b.insert(homogeneous_coords(x, n, e))) out.push_back(x);
		return out;
	};
	std::vector<std::vector<std::vector<AssocElement>>> chain_basis(sz(m), std::vector<std::vector<AssocElement>>(sz(D) + 1));
	for (int i = 0; i < m; ++i)
		for (int e = 1; e <= d; ++e)
			for (const auto& x : chain[sz(i)].basis(e)) chain_basis[sz(i)][sz(e)].push_back(alg.lie_to_assoc(x));

	// products[w][e]: products of chain elements of weight ≥ w (w ≤ 0: any
	// product, including the empty one) and degree e.
	std::map<std::pair<int, int>, std::vector<AssocElement>> memo;
	std::function<const std::vector<AssocElement>&(int, int)> products = [&](int w, int e) -> const std::vector<AssocElement>& {
		int key_w = std::max(w, 0);
		auto key = std::make_pair(key_w, e);
		if (auto it = memo.find(key); it != memo.end()) return it->second;
		std::vector<AssocElement> span;
		if (key_w == 0 && e == 0) span.push_back(AssocElement::one(D));
		for (int i = 1; i <= m; ++i) {
			for (int k = 1; k <= e; ++k) {
				const auto& left = chain_basis[sz(i - 1)][sz(k)];
				if (left.empty()) continue;
				const auto& right = products(key_w - i, e - k);
				for (const auto& a : left)
					for (const auto& b : right) span.push_back(a * b);
			}
		}
		return memo.emplace(key, reduce_basis(span, e)).first->second;
	};

	std::vector<AssocElement> result;
	if (side == DeltaSide::WithinN) {
		result = products(t, d);
	} else {
		std::vector<AssocElement> layer;
		for (int e = 1; e <= d; ++e) {
			std::vector<AssocElement> span = products(t, e);
			for (const auto& x : layer) {
				for (int k = 0; k < n; ++k) {
					AssocElement y = AssocElement::generator(static_cast<Letter>(k), D);
					span.push_back(y * x);
					span.push_back(x * y);
				}
			}
			layer = reduce_basis(span, e);
		}
		if (d >= 1) result = std::move(layer);
	}
	std::vector<Vector> rows;
	for (const auto& x : result) rows.push_back(homogeneous_coords(x, n, d));
	return SubspaceBasis::span(power(n, d), rows);
}

// ---------------------------------------------------------------------------

std::string Valuation::to_string() const
{
	switch (kind) {
	case Kind::Finite: return std::to_string(value);
	case Kind::Infinite: return "inf";
	case Kind::AtLeast: return ">=" + std::to_string(value);
	}
	return "?";
}

bool pivot_less(const Valuation& a, const Valuation& b)
{
	auto rank = [](const Valuation& v) { return v.kind == Valuation::Kind::Finite ? 0 : v.kind == Valuation::Kind::AtLeast ? 1 : 2; };
	if (rank(a) != rank(b)) return rank(a) < rank(b);
	return a.kind == Valuation::Kind::Finite && a.value < b.value;
}

struct QuotientContext::State {
	std::shared_ptr<const FreeLieAlgebra> algebra;
	Field field;
	std::vector<DegreewiseSubspace> chain;
	std::shared_ptr<GradedQuotient> quotient;
	int cap = 0;
	// generators[i][e]: images in A_e of ideal generators of chain term i+1.
	std::vector<std::vector<std::vector<SparseVector>>> generators;

	struct Flag {
		SparseEchelon rows{0};
		std::vector<int> level;  // per insertion index
	};
	std::recursive_mutex mutex;
	std::vector<Flag> flags;

	const Flag& flag(int d);
};

const QuotientContext::State::Flag& QuotientContext::State::flag(int d)
{
	std::lock_guard lock(mutex);
	while (static_cast<int>(flags.size()) <= d) {
		const int e = static_cast<int>(flags.size());
		const std::size_t dim = quotient->dim(e);
		Flag f{SparseEchelon(dim), {}};
		if (e > 0) {
			std::vector<std::vector<SparseVector>> candidates(sz(cap) + 1);
			const Flag& below = flags[sz(e - 1)];
			for (std::size_t r = 0; r < below.level.size(); ++r) {
				if (below.level[r] == 0) continue;
				for (int k = 0; k < quotient->rank(); ++k)
					candidates[sz(below.level[r])].push_back(quotient->left_multiply(k, below.rows.rows()[r], e - 1));
			}
			for (std::size_t i = 0; i < generators.size(); ++i) {
				const int weight = static_cast<int>(i) + 1;
				for (int g = 1; g <= e; ++g) {
					if (generators[i].size() <= sz(g)) continue;
					const Flag& src = flags[sz(e - g)];
					for (const auto& s : generators[i][sz(g)]) {
						for (std::size_t r = 0; r < src.level.size(); ++r) {
							int target = std::min(src.level[r] + weight, cap);
							candidates[sz(target)].push_back(quotient->multiply(s, g, src.rows.rows()[r], e - g));
						}
					}
				}
			}
			for (int j = cap; j >= 1; --j)
				for (const auto& v : candidates[sz(j)])
					if (f.rows.insert(v)) f.level.push_back(j);
		}
		for (std::size_t c = 0; c < dim; ++c) {
			if (f.rows.is_pivot(c)) continue;
			f.rows.insert({{static_cast<std::uint32_t>(c), Scalar(1)}});
			f.level.push_back(0);
		}
		flags.push_back(std::move(f));
	}
	return flags[sz(d)];
}

QuotientContext::QuotientContext(std::vector<DegreewiseSubspace> chain, Field field) : state_(std::make_shared<State>())
{
	if (chain.empty()) throw std::invalid_argument("quotient context: empty chain");
	for (const auto& c : chain) require_graded(c, "quotient context");
	const auto& alg_ptr = chain.front().algebra_ptr();
	const FreeLieAlgebra& alg = *alg_ptr;
	for (std::size_t i = 0; i < chain.size(); ++i) {
		if (chain[i].algebra_ptr() != alg_ptr) throw std::invalid_argument("quotient context: chain terms over different algebras");
		if (i > 0 && !chain[i - 1].contains(chain[i])) throw std::invalid_argument("quotient context: chain is not nested");
		for (int d = 2; d <= alg.truncation(); ++d) {
			for (const auto& x : chain[i].basis(d - 1))
				for (int k = 0; k < alg.rank(); ++k)
					if (!chain[i].contains(alg.bracket(x, alg.generator(k))))
						throw std::invalid_argument("quotient context: chain term is not an ideal");
		}
	}
	State& s = *state_;
	s.algebra = alg_ptr;
	s.field = field;
	s.chain = std::move(chain);
	s.quotient = enveloping_quotient(s.chain.back(), field);
	s.cap = alg.truncation();
	const int D = alg.truncation();
	for (std::size_t i = 0; i + 1 < s.chain.size(); ++i) {
		std::vector<std::vector<SparseVector>> per_degree(sz(D) + 1);
		for (int e = 1; e <= D; ++e) {
			for (const auto& g : ideal_generators(s.chain[i], e)) {
				SparseVector v = s.quotient->project(alg.lie_to_assoc(g), e);
				if (!v.empty()) per_degree[sz(e)].push_back(std::move(v));
			}
		}
		s.generators.push_back(std::move(per_degree));
	}
}

QuotientContext QuotientContext::from_series(const SeriesContext& series, int k, const DegreewiseSubspace& R, Field field)
{
	if (k < 1 || k > series.spec().blocks()) throw std::out_of_range("quotient context: block index out of range");
	std::vector<DegreewiseSubspace> chain;
	for (int l = 1; l <= series.spec().steps[sz(k - 1)] + 1; ++l) chain.push_back(sum(R, series.term(k, l)));
	return QuotientContext(std::move(chain), field);
}

const FreeLieAlgebra& QuotientContext::algebra() const { return *state_->algebra; }
int QuotientContext::rank() const { return state_->algebra->rank(); }
int QuotientContext::truncation() const { return state_->algebra->truncation(); }
const Field& QuotientContext::field() const { return state_->field; }
const std::vector<DegreewiseSubspace>& QuotientContext::chain() const { return state_->chain; }
const GradedQuotient& QuotientContext::quotient() const { return *state_->quotient; }
int QuotientContext::valuation_cap() const { return state_->cap; }

AssocElement QuotientContext::coerce(const AssocElement& u) const
{
	if (field().is_rational()) return u;
	AssocElement out(u.truncation());
	for (const auto& [w, c] : u.terms()) out.add(w, c.in_field(field()));
	return out;
}

bool QuotientContext::is_zero(const AssocElement& u) const { return quotient().contains(u); }

AssocElement QuotientContext::normal_form(const AssocElement& u) const { return quotient().normal_form(u); }

AssocElement QuotientContext::multiply(const AssocElement& u, const AssocElement& v) const
{
	const GradedQuotient& q = quotient();
	const int D = truncation();
	std::vector<SparseVector> pu(sz(D) + 1), pv(sz(D) + 1);
	for (int d = 0; d <= std::min(u.degree(), D); ++d) pu[sz(d)] = q.project(u, d);
	for (int d = 0; d <= std::min(v.degree(), D); ++d) pv[sz(d)] = q.project(v, d);
	std::vector<Vector> acc(sz(D) + 1);
	for (int p = 0; p <= D; ++p) {
		if (pu[sz(p)].empty()) continue;
		for (int r = 0; r <= D; ++r) {
			if (pv[sz(r)].empty()) continue;
			if (p + r > D) throw std::range_error("product exceeds the truncation degree");
			if (acc[sz(p + r)].empty()) acc[sz(p + r)].assign(q.dim(p + r), Scalar());
			axpy(acc[sz(p + r)], Scalar(1), q.multiply(pu[sz(p)], p, pv[sz(r)], r));
		}
	}
	AssocElement out(D);
	for (int d = 0; d <= D; ++d)
		if (!acc[sz(d)].empty()) out += q.representative_element(d, to_sparse(acc[sz(d)]));
	return out;
}

Valuation QuotientContext::psi(const AssocElement& u) const
{
	if (u.degree() > truncation()) throw std::invalid_argument("valuation: element exceeds the truncation degree");
	State& s = *state_;
	int best = -1;
	for (int d = 0; d <= u.degree(); ++d) {
		SparseVector x = s.quotient->project(u, d);
		if (x.empty()) continue;
		const auto& f = s.flag(d);
		std::vector<std::size_t> used;
		f.rows.reduce(x, &used);
		int v = s.cap;
		for (auto r : used) v = std::min(v, f.level[r]);
		best = best < 0 ? v : std::min(best, v);
	}
	if (best < 0) return Valuation::infinite();
	if (best >= s.cap) return Valuation::at_least(s.cap);
	return Valuation::finite(best);
}

std::vector<SparseVector> QuotientContext::delta_basis(int j, int d) const
{
	const auto& f = state_->flag(d);
	std::vector<SparseVector> out;
	for (std::size_t r = 0; r < f.level.size(); ++r)
		if (f.level[r] >= j) out.push_back(f.rows.rows()[r]);
	return out;
}

Valuation psi_valuation(const AssocElement& u, const QuotientContext& ctx) { return ctx.psi(u); }

}  // namespace liefreedom
