#include "liefreedom/freelie.hpp"

#include <stdexcept>

namespace liefreedom {

namespace {

std::uint64_t pair_key(int a, int b) { return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b); }

}  // namespace

// ---------------------------------------------------------------- LieElement

Scalar LieElement::coefficient(int basis_index) const
{
	auto it = coords_.find(basis_index);
	return it == coords_.end() ? Scalar(0) : it->second;
}

void LieElement::add(int basis_index, const Scalar& c)
{
	if (c.is_zero()) return;
	auto [it, inserted] = coords_.try_emplace(basis_index, c);
	if (inserted) return;
	it->second += c;
	if (it->second.is_zero()) coords_.erase(it);
}

int LieElement::degree() const
{
	if (coords_.empty()) return -1;
	return algebra_->degree_of(coords_.rbegin()->first);
}

int LieElement::min_degree() const
{
	if (coords_.empty()) return -1;
	return algebra_->degree_of(coords_.begin()->first);
}

LieElement LieElement::component(int d) const
{
	LieElement out(algebra_);
	if (d < 1 || !algebra_ || d > algebra_->truncation()) return out;
	int lo = algebra_->offset(d);
	int hi = lo + algebra_->dim(d);
	for (auto it = coords_.lower_bound(lo); it != coords_.end() && it->first < hi; ++it) out.coords_.emplace(*it);
	return out;
}

void LieElement::check_same(const LieElement& b) const
{
	if (algebra_ && b.algebra_ && algebra_ != b.algebra_)
		throw std::invalid_argument("Lie elements belong to different algebra contexts");
}

LieElement LieElement::operator-() const
{
	LieElement out(algebra_);
	for (const auto& [i, c] : coords_) out.coords_.emplace(i, -c);
	return out;
}

LieElement& LieElement::operator+=(const LieElement& b)
{
	check_same(b);
	if (!algebra_) algebra_ = b.algebra_;
	for (const auto& [i, c] : b.coords_) add(i, c);
	return *this;
}

LieElement& LieElement::operator-=(const LieElement& b)
{
	check_same(b);
	if (!algebra_) algebra_ = b.algebra_;
	for (const auto& [i, c] : b.coords_) add(i, -c);
	return *this;
}

LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }

LieElement operator*(const Scalar& c, const LieElement& a)
{
	LieElement out(a.algebra_);
	if (c.is_zero()) return out;
	for (const auto& [i, v] : a.coords_) out.coords_.emplace(i, c * v);
	return out;
}

std::string LieElement::to_string() const
{
	if (coords_.empty()) return "0";
	auto render = [this](auto&& self, int idx) -> std::string {
		const LyndonWord& lw = algebra_->basis_word(idx);
		if (lw.left < 0) return algebra_->generators().name(lw.letters.first());
		return "[" + self(self, lw.left) + ", " + self(self, lw.right) + "]";
	};
	std::string s;
	bool first = true;
	for (const auto& [i, c] : coords_) {
		std::string cs = c.to_string();
		bool neg = cs[0] == '-';
		if (neg) cs.erase(0, 1);
		if (!first) s += neg ? " - " : " + ";
		else if (neg) s += "-";
		first = false;
		if (cs != "1") s += cs + "*";
		s += render(render, i);
	}
	return s;
}

// ------------------------------------------------------------ FreeLieAlgebra

FreeLieAlgebra::FreeLieAlgebra(GeneratorSet generators, int truncation)
    : generators_(std::move(generators)), truncation_(truncation)
{
	const int n = generators_.size();
	if (truncation_ < 1 || truncation_ > kMaxDegree)
		throw std::invalid_argument("truncation degree must be between 1 and " + std::to_string(kMaxDegree));
	basis_.resize(static_cast<std::size_t>(truncation_) + 1);

	// Duval's generation of all Lyndon words of length ≤ D in lexicographic order.
	std::vector<Letter> w{0};
	while (!w.empty()) {
		auto word = Word::from_letters(w);
		basis_[w.size()].push_back(LyndonWord{word, -1, -1});
		const std::size_t m = w.size();
		while (w.size() < static_cast<std::size_t>(truncation_)) w.push_back(w[w.size() - m]);
		while (!w.empty() && w.back() == n - 1) w.pop_back();
		if (!w.empty()) ++w.back();
	}

	offsets_.assign(static_cast<std::size_t>(truncation_) + 2, 0);
	for (int d = 1; d <= truncation_; ++d) offsets_[static_cast<std::size_t>(d) + 1] = offsets_[static_cast<std::size_t>(d)] + static_cast<int>(basis_[static_cast<std::size_t>(d)].size());
	for (int d = 1; d <= truncation_; ++d) {
		for (std::size_t i = 0; i < basis_[static_cast<std::size_t>(d)].size(); ++i)
			index_.emplace((basis_[static_cast<std::size_t>(d)][i].letters), offsets_[static_cast<std::size_t>(d)] + static_cast<int>(i));
	}

	// Standard factorization: right factor is the longest proper Lyndon suffix.
	expansions_.resize(static_cast<std::size_t>(total_dim()));
	for (int d = 1; d <= truncation_; ++d) {
		for (std::size_t i = 0; i < basis_[static_cast<std::size_t>(d)].size(); ++i) {
			LyndonWord& lw = basis_[static_cast<std::size_t>(d)][i];
			int global = offsets_[static_cast<std::size_t>(d)] + static_cast<int>(i);
			if (d == 1) {
				expansions_[static_cast<std::size_t>(global)] = AssocElement::word(lw.letters);
				continue;
			}
			for (int len = d - 1; len >= 1; --len) {
				int right = index_of(lw.letters.suffix(len));
				if (right < 0) continue;
				lw.right = right;
				lw.left = index_of(lw.letters.prefix(d - len));
				break;
			}
			if (lw.left < 0) throw std::logic_error("standard factorization not found");
			const auto& u = expansions_[static_cast<std::size_t>(lw.left)];
			const auto& v = expansions_[static_cast<std::size_t>(lw.right)];
			expansions_[static_cast<std::size_t>(global)] = u * v - v * u;
		}
	}
}

int FreeLieAlgebra::dim(int d) const
{
	if (d < 1 || d > truncation_) return 0;
	return static_cast<int>(basis_[static_cast<std::size_t>(d)].size());
}

int FreeLieAlgebra::dim_upto(int d) const
{
	if (d < 1) return 0;
	if (d > truncation_) d = truncation_;
	return offsets_[static_cast<std::size_t>(d) + 1];
}

const std::vector<LyndonWord>& FreeLieAlgebra::lyndon_basis(int d) const
{
	if (d < 1 || d > truncation_)
		throw std::out_of_range("degree " + std::to_string(d) + " outside 1.." + std::to_string(truncation_));
	return basis_[static_cast<std::size_t>(d)];
}

int FreeLieAlgebra::degree_of(int global) const
{
	if (global < 0 || global >= total_dim()) throw std::out_of_range("basis index out of range");
	int d = 1;
	while (offsets_[static_cast<std::size_t>(d) + 1] <= global) ++d;
	return d;
}

const LyndonWord& FreeLieAlgebra::basis_word(int global) const
{
	int d = degree_of(global);
	return basis_[static_cast<std::size_t>(d)][static_cast<std::size_t>(global - offsets_[static_cast<std::size_t>(d)])];
}

int FreeLieAlgebra::index_of(const Word& w) const
{
	auto it = index_.find(w);
	return it == index_.end() ? -1 : it->second;
}

LieElement FreeLieAlgebra::generator(int j) const
{
	if (j < 0 || j >= rank()) throw std::out_of_range("generator index out of range");
	return basis_element(j);
}

LieElement FreeLieAlgebra::basis_element(int global) const
{
	LieElement e(this);
	e.add(global, Scalar(1));
	return e;
}

const AssocElement& FreeLieAlgebra::expansion(int global) const { return expansions_.at(static_cast<std::size_t>(global)); }

const std::vector<std::pair<int, Scalar>>& FreeLieAlgebra::basis_bracket(int a, int b) const
{
	std::lock_guard lock(cache_mutex_);
	auto key = pair_key(a, b);
	if (auto it = bracket_cache_.find(key); it != bracket_cache_.end()) return it->second;
	std::vector<std::pair<int, Scalar>> out;
	if (a != b && degree_of(a) + degree_of(b) <= truncation_) {
		const auto& u = expansions_[static_cast<std::size_t>(a)];
		const auto& v = expansions_[static_cast<std::size_t>(b)];
		auto lie = assoc_to_lie(u * v - v * u);
		if (!lie) throw std::logic_error("bracket of basis elements left the Lie algebra");
		for (const auto& [i, c] : lie->coords()) out.emplace_back(i, c);
	}
	return bracket_cache_.emplace(key, std::move(out)).first->second;
}

LieElement FreeLieAlgebra::bracket(const LieElement& a, const LieElement& b) const
{
	if ((a.algebra() && a.algebra() != this) || (b.algebra() && b.algebra() != this))
		throw std::invalid_argument("bracket: element from a different algebra context");
	// Accumulate over unordered basis pairs using antisymmetry.
	std::map<std::pair<int, int>, Scalar> pairs;
	for (const auto& [i, x] : a.coords()) {
		int di = degree_of(i);
		for (const auto& [j, y] : b.coords()) {
			if (i == j) continue;
			if (di + degree_of(j) > truncation_) break;
			if (i < j) pairs[{i, j}] += x * y;
			else pairs[{j, i}] -= x * y;
		}
	}
	LieElement out(this);
	for (const auto& [ij, c] : pairs) {
		if (c.is_zero()) continue;
		for (const auto& [k, v] : basis_bracket(ij.first, ij.second)) out.add(k, c * v);
	}
	return out;
}

LieElement FreeLieAlgebra::left_normed(const LieElement& a, const std::vector<LieElement>& tail) const
{
	LieElement out = a;
	for (const auto& b : tail) out = bracket(out, b);
	return out;
}

AssocElement FreeLieAlgebra::lie_to_assoc(const LieElement& a) const
{
	AssocElement out(truncation_);
	for (const auto& [i, c] : a.coords()) out.add_scaled(expansions_[static_cast<std::size_t>(i)], c);
	return out;
}

std::optional<LieElement> FreeLieAlgebra::assoc_to_lie(const AssocElement& p) const
{
	// Each P_l is l plus lexicographically larger words of the same length,
	// so the smallest remaining word must be Lyndon and fixes its coefficient.
	AssocElement rest = p;
	LieElement out(this);
	while (!rest.is_zero()) {
		const auto& [w, c] = *rest.terms().begin();
		if (w.length == 0 || w.length > truncation_) return std::nullopt;
		int idx = index_of(w);
		if (idx < 0) return std::nullopt;
		Scalar coef = c;
		out.add(idx, coef);
		rest.add_scaled(expansions_[static_cast<std::size_t>(idx)], -coef);
	}
	return out;
}

LieElement FreeLieAlgebra::require_lie(const AssocElement& p) const
{
	auto lie = assoc_to_lie(p);
	if (!lie) throw std::domain_error("not a Lie element: " + p.to_string(generators_));
	return *lie;
}

Vector FreeLieAlgebra::coords(const LieElement& a, int d) const
{
	Vector v(static_cast<std::size_t>(dim(d)));
	if (v.empty()) return v;
	int lo = offset(d);
	int hi = lo + dim(d);
	for (auto it = a.coords().lower_bound(lo); it != a.coords().end() && it->first < hi; ++it)
		v[static_cast<std::size_t>(it->first - lo)] = it->second;
	return v;
}

Vector FreeLieAlgebra::filtered_coords(const LieElement& a, int d) const
{
	Vector v(static_cast<std::size_t>(dim_upto(d)));
	for (const auto& [i, c] : a.coords()) {
		if (i >= static_cast<int>(v.size())) break;
		v[static_cast<std::size_t>(i)] = c;
	}
	return v;
}

LieElement FreeLieAlgebra::from_coords(std::span<const Scalar> v, int d) const
{
	LieElement out(this);
	for (std::size_t i = 0; i < v.size(); ++i) out.add(offset(d) + static_cast<int>(i), v[i]);
	return out;
}

LieElement FreeLieAlgebra::from_filtered_coords(std::span<const Scalar> v) const
{
	LieElement out(this);
	for (std::size_t i = 0; i < v.size(); ++i) out.add(static_cast<int>(i), v[i]);
	return out;
}

LieElement FreeLieAlgebra::kill_generators(const LieElement& a, const std::vector<bool>& killed) const
{
	std::vector<bool> allowed(killed.size());
	for (std::size_t i = 0; i < killed.size(); ++i) allowed[i] = !killed[i];
	allowed.resize(kMaxGenerators, false);
	LieElement out(this);
	for (const auto& [i, c] : a.coords()) {
		if (basis_word(i).letters.uses_only(allowed)) out.add(i, c);
	}
	return out;
}

const std::vector<LyndonWord>& lyndon_basis(const FreeLieAlgebra& algebra, int d) { return algebra.lyndon_basis(d); }

LieElement bracket(const LieElement& a, const LieElement& b)
{
	const FreeLieAlgebra* alg = a.algebra() ? a.algebra() : b.algebra();
	if (!alg) return LieElement();
	return alg->bracket(a, b);
}

AssocElement lie_to_assoc(const LieElement& a)
{
	if (!a.algebra()) return AssocElement();
	return a.algebra()->lie_to_assoc(a);
}

}  // namespace liefreedom
