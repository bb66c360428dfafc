#include "liefreedom/subspace.hpp"

#include <stdexcept>
#include <string>

namespace liefreedom {

namespace {

std::size_t sz(int x) { return static_cast<std::size_t>(x); }

// Levels S ∩ F_{≤d} of a subspace of F_{≤D}. Echelon rows taken with the
// highest coordinate as pivot split by top degree.
std::vector<SubspaceBasis> filtered_levels(const FreeLieAlgebra& alg, const SubspaceBasis& top)
{
	const int D = alg.truncation();
	const std::size_t n = top.ambient_dim();
	EchelonBuilder builder(n);
	for (const auto& x : top.vectors()) builder.insert(Vector(x.rbegin(), x.rend()));
	std::vector<std::vector<Vector>> by_level(sz(D) + 1);
	for (auto& row : std::move(builder).finish()) {
		std::size_t k = 0;
		while (row[k].is_zero()) ++k;
		std::size_t highest = n - 1 - k;
		int d = alg.degree_of(static_cast<int>(highest));
		by_level[sz(d)].emplace_back(row.rbegin(), row.rend());
	}
	std::vector<SubspaceBasis> levels(sz(D) + 1);
	std::vector<Vector> acc;
	for (int d = 1; d <= D; ++d) {
		for (auto& v : by_level[sz(d)]) acc.push_back(std::move(v));
		std::vector<Vector> cut;
		const std::size_t m = sz(alg.dim_upto(d));
		for (const auto& v : acc) cut.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m));
		levels[sz(d)] = SubspaceBasis::span(m, cut);
	}
	return levels;
}

SubspaceBasis top_of(const DegreewiseSubspace& s) { return s.to_filtered().level(s.truncation()); }

void require_same_algebra(const DegreewiseSubspace& a, const DegreewiseSubspace& b)
{
	if (&a.algebra() != &b.algebra()) throw std::invalid_argument("subspaces belong to different algebra contexts");
}

}  // namespace

DegreewiseSubspace::DegreewiseSubspace(std::shared_ptr<const FreeLieAlgebra> algebra, Kind kind, std::vector<SubspaceBasis> levels)
    : algebra_(std::move(algebra)), kind_(kind), levels_(std::move(levels))
{
}

DegreewiseSubspace DegreewiseSubspace::zero(std::shared_ptr<const FreeLieAlgebra> algebra, Kind kind)
{
	const int D = algebra->truncation();
	std::vector<SubspaceBasis> levels(sz(D) + 1);
	for (int d = 1; d <= D; ++d)
		levels[sz(d)] = SubspaceBasis(sz(kind == Kind::Graded ? algebra->dim(d) : algebra->dim_upto(d)));
	return DegreewiseSubspace(std::move(algebra), kind, std::move(levels));
}

DegreewiseSubspace DegreewiseSubspace::whole(std::shared_ptr<const FreeLieAlgebra> algebra)
{
	const int D = algebra->truncation();
	std::vector<SubspaceBasis> levels(sz(D) + 1);
	for (int d = 1; d <= D; ++d) levels[sz(d)] = SubspaceBasis::full(sz(algebra->dim(d)));
	return DegreewiseSubspace(std::move(algebra), Kind::Graded, std::move(levels));
}

DegreewiseSubspace DegreewiseSubspace::graded(std::shared_ptr<const FreeLieAlgebra> algebra, std::vector<SubspaceBasis> components)
{
	const int D = algebra->truncation();
	if (components.size() != sz(D) + 1) throw std::invalid_argument("graded subspace needs one component per degree 1..D");
	components[0] = SubspaceBasis();
	for (int d = 1; d <= D; ++d) {
		if (components[sz(d)].ambient_dim() != sz(algebra->dim(d)))
			throw std::invalid_argument("component of degree " + std::to_string(d) + " has the wrong ambient dimension");
	}
	return DegreewiseSubspace(std::move(algebra), Kind::Graded, std::move(components));
}

DegreewiseSubspace DegreewiseSubspace::filtered(std::shared_ptr<const FreeLieAlgebra> algebra, const SubspaceBasis& top)
{
	if (top.ambient_dim() != sz(algebra->total_dim())) throw std::invalid_argument("filtered subspace must live in F_{<=D}");
	auto levels = filtered_levels(*algebra, top);
	return DegreewiseSubspace(std::move(algebra), Kind::Filtered, std::move(levels));
}

DegreewiseSubspace DegreewiseSubspace::span(std::shared_ptr<const FreeLieAlgebra> algebra, const std::vector<LieElement>& elements)
{
	const int D = algebra->truncation();
	bool homogeneous = true;
	for (const auto& x : elements) homogeneous = homogeneous && x.is_homogeneous();
	if (homogeneous) {
		std::vector<std::vector<Vector>> rows(sz(D) + 1);
		for (const auto& x : elements) {
			if (!x.is_zero()) rows[sz(x.degree())].push_back(algebra->coords(x, x.degree()));
		}
		std::vector<SubspaceBasis> comps(sz(D) + 1);
		for (int d = 1; d <= D; ++d) comps[sz(d)] = SubspaceBasis::span(sz(algebra->dim(d)), rows[sz(d)]);
		return graded(std::move(algebra), std::move(comps));
	}
	std::vector<Vector> rows;
	for (const auto& x : elements) rows.push_back(algebra->filtered_coords(x, D));
	auto top = SubspaceBasis::span(sz(algebra->total_dim()), rows);
	return filtered(std::move(algebra), top);
}

void DegreewiseSubspace::check_degree(int d) const
{
	if (!algebra_) throw std::logic_error("empty subspace handle");
	if (d < 1 || d > truncation())
		throw std::out_of_range("degree " + std::to_string(d) + " outside 1.." + std::to_string(truncation()));
}

const SubspaceBasis& DegreewiseSubspace::level(int d) const
{
	check_degree(d);
	return levels_[sz(d)];
}

std::size_t DegreewiseSubspace::dim_upto(int d) const
{
	if (d < 1) return 0;
	if (d > truncation()) d = truncation();
	if (kind_ == Kind::Filtered) return levels_[sz(d)].dim();
	std::size_t total = 0;
	for (int e = 1; e <= d; ++e) total += levels_[sz(e)].dim();
	return total;
}

std::size_t DegreewiseSubspace::dim(int d) const
{
	if (kind_ != Kind::Graded) throw std::logic_error("per-degree dimension of a filtered subspace");
	return level(d).dim();
}

bool DegreewiseSubspace::is_zero() const { return dim_upto(truncation()) == 0; }

std::vector<LieElement> DegreewiseSubspace::basis(int d) const
{
	std::vector<LieElement> out;
	for (const auto& v : level(d).vectors())
		out.push_back(kind_ == Kind::Graded ? algebra_->from_coords(v, d) : algebra_->from_filtered_coords(v));
	return out;
}

bool DegreewiseSubspace::contains(const LieElement& x) const
{
	if (x.is_zero()) return true;
	if (x.degree() > truncation()) return false;
	if (kind_ == Kind::Filtered) return levels_[sz(truncation())].contains(algebra_->filtered_coords(x, truncation()));
	for (int d = x.min_degree(); d <= x.degree(); ++d) {
		if (!levels_[sz(d)].contains(algebra_->coords(x, d))) return false;
	}
	return true;
}

bool DegreewiseSubspace::contains(const DegreewiseSubspace& other) const
{
	require_same_algebra(*this, other);
	if (kind_ == Kind::Graded && other.kind_ == Kind::Graded) {
		for (int d = 1; d <= truncation(); ++d) {
			if (!levels_[sz(d)].contains(other.levels_[sz(d)])) return false;
		}
		return true;
	}
	return top_of(*this).contains(top_of(other));
}

DegreewiseSubspace DegreewiseSubspace::to_filtered() const
{
	if (kind_ == Kind::Filtered) return *this;
	const int D = truncation();
	std::vector<SubspaceBasis> levels(sz(D) + 1);
	std::vector<Vector> acc;
	for (int d = 1; d <= D; ++d) {
		const std::size_t m = sz(algebra_->dim_upto(d));
		for (auto& v : acc) v.resize(m);
		for (const auto& c : levels_[sz(d)].vectors()) {
			Vector v(m);
			std::copy(c.begin(), c.end(), v.begin() + algebra_->offset(d));
			acc.push_back(std::move(v));
		}
		levels[sz(d)] = SubspaceBasis::span(m, acc);
	}
	return DegreewiseSubspace(algebra_, Kind::Filtered, std::move(levels));
}

bool operator==(const DegreewiseSubspace& a, const DegreewiseSubspace& b)
{
	if (a.algebra_ != b.algebra_) return false;
	if (a.kind_ == b.kind_) return a.levels_ == b.levels_;
	return a.to_filtered().levels_ == b.to_filtered().levels_;
}

DegreewiseSubspace sum(const DegreewiseSubspace& a, const DegreewiseSubspace& b)
{
	require_same_algebra(a, b);
	if (a.is_graded() && b.is_graded()) {
		std::vector<SubspaceBasis> comps(sz(a.truncation()) + 1);
		for (int d = 1; d <= a.truncation(); ++d) comps[sz(d)] = sum(a.level(d), b.level(d));
		return DegreewiseSubspace::graded(a.algebra_ptr(), std::move(comps));
	}
	return DegreewiseSubspace::filtered(a.algebra_ptr(), sum(top_of(a), top_of(b)));
}

DegreewiseSubspace intersect(const DegreewiseSubspace& a, const DegreewiseSubspace& b)
{
	require_same_algebra(a, b);
	if (a.is_graded() && b.is_graded()) {
		std::vector<SubspaceBasis> comps(sz(a.truncation()) + 1);
		for (int d = 1; d <= a.truncation(); ++d) comps[sz(d)] = intersect(a.level(d), b.level(d));
		return DegreewiseSubspace::graded(a.algebra_ptr(), std::move(comps));
	}
	return DegreewiseSubspace::filtered(a.algebra_ptr(), intersect(top_of(a), top_of(b)));
}

DegreewiseSubspace subalgebra_span(std::shared_ptr<const FreeLieAlgebra> algebra, const std::vector<int>& subset)
{
	if (subset.empty()) throw std::invalid_argument("subalgebra_span: empty generator subset");
	std::vector<bool> allowed(sz(kMaxGenerators), false);
	for (int j : subset) {
		if (j < 0 || j >= algebra->rank()) throw std::out_of_range("subalgebra_span: generator index out of range");
		allowed[sz(j)] = true;
	}
	const int D = algebra->truncation();
	std::vector<SubspaceBasis> comps(sz(D) + 1);
	for (int d = 1; d <= D; ++d) {
		const auto& words = algebra->lyndon_basis(d);
		std::vector<Vector> rows;
		for (std::size_t i = 0; i < words.size(); ++i) {
			if (words[i].letters.uses_only(allowed)) rows.push_back(unit_vector(words.size(), i));
		}
		comps[sz(d)] = SubspaceBasis::span(words.size(), rows);
	}
	return DegreewiseSubspace::graded(std::move(algebra), std::move(comps));
}

bool is_subalgebra(const DegreewiseSubspace& sub)
{
	const auto& alg = sub.algebra();
	const int D = sub.truncation();
	if (!sub.is_graded()) {
		auto basis = sub.basis(D);
		for (std::size_t i = 0; i < basis.size(); ++i)
			for (std::size_t j = i + 1; j < basis.size(); ++j)
				if (!sub.contains(alg.bracket(basis[i], basis[j]))) return false;
		return true;
	}
	for (int i = 1; 2 * i <= D; ++i) {
		auto bi = sub.basis(i);
		for (int j = i; i + j <= D; ++j) {
			auto bj = sub.basis(j);
			const auto& target = sub.level(i + j);
			for (const auto& u : bi)
				for (const auto& v : bj)
					if (!target.contains(alg.coords(alg.bracket(u, v), i + j))) return false;
		}
	}
	return true;
}

DegreewiseSubspace lower_central(const DegreewiseSubspace& sub, int l) { return lower_central_powers(sub, l).back(); }

std::vector<DegreewiseSubspace> lower_central_powers(const DegreewiseSubspace& sub, int l)
{
	if (l < 1) throw std::invalid_argument("lower_central: power must be at least 1");
	std::vector<DegreewiseSubspace> out{sub};
	if (l == 1) return out;
	if (!sub.is_graded()) throw std::invalid_argument("lower_central: graded subspace required");
	if (!is_subalgebra(sub)) throw std::invalid_argument("lower_central: subspace is not closed under the bracket");
	const auto& alg = sub.algebra();
	const int D = sub.truncation();
	const bool whole = sub == DegreewiseSubspace::whole(sub.algebra_ptr());
	DegreewiseSubspace prev = sub;
	for (int step = 2; step <= l; ++step) {
		std::vector<SubspaceBasis> comps(sz(D) + 1);
		comps[1] = SubspaceBasis(sz(alg.dim(1)));
		for (int d = 2; d <= D; ++d) {
			EchelonBuilder builder(sz(alg.dim(d)));
			auto add = [&](const LieElement& x) {
				if (builder.rank() < builder.ambient_dim()) builder.insert(alg.coords(x, d));
			};
			if (whole) {
				// [X, F] is spanned by brackets with the generators when X is an ideal.
				for (const auto& u : prev.basis(d - 1))
					for (int j = 0; j < alg.rank(); ++j) add(alg.bracket(u, alg.generator(j)));
			} else {
				for (int i = 1; i < d; ++i) {
					auto bi = prev.basis(i);
					if (bi.empty()) continue;
					for (const auto& v : sub.basis(d - i))
						for (const auto& u : bi) add(alg.bracket(u, v));
				}
			}
			comps[sz(d)] = SubspaceBasis::from_builder(std::move(builder));
		}
		prev = DegreewiseSubspace::graded(sub.algebra_ptr(), std::move(comps));
		out.push_back(prev);
	}
	return out;
}

DegreewiseSubspace ideal_closure(std::shared_ptr<const FreeLieAlgebra> algebra, const std::vector<LieElement>& generators)
{
	const auto& alg = *algebra;
	const int D = alg.truncation();
	bool homogeneous = true;
	for (const auto& g : generators) homogeneous = homogeneous && g.is_homogeneous();
	if (homogeneous) {
		std::vector<SubspaceBasis> comps(sz(D) + 1);
		comps[0] = SubspaceBasis();
		for (int d = 1; d <= D; ++d) {
			EchelonBuilder builder(sz(alg.dim(d)));
			for (const auto& g : generators)
				if (g.degree() == d) builder.insert(alg.coords(g, d));
			if (d > 1) {
				for (const auto& v : comps[sz(d - 1)].vectors()) {
					auto u = alg.from_coords(v, d - 1);
					for (int j = 0; j < alg.rank() && builder.rank() < builder.ambient_dim(); ++j)
						builder.insert(alg.coords(alg.bracket(u, alg.generator(j)), d));
				}
			}
			comps[sz(d)] = SubspaceBasis::from_builder(std::move(builder));
		}
		return DegreewiseSubspace::graded(std::move(algebra), std::move(comps));
	}
	// Filtered closure under ad y_j inside F/F_{>D}.
	EchelonBuilder builder(sz(alg.total_dim()));
	std::vector<LieElement> frontier;
	for (const auto& g : generators)
		if (builder.insert(alg.filtered_coords(g, D))) frontier.push_back(g);
	while (!frontier.empty()) {
		auto x = std::move(frontier.back());
		frontier.pop_back();
		for (int j = 0; j < alg.rank(); ++j) {
			auto y = alg.bracket(x, alg.generator(j));
			if (!y.is_zero() && builder.insert(alg.filtered_coords(y, D))) frontier.push_back(std::move(y));
		}
	}
	auto top = SubspaceBasis::from_builder(std::move(builder));
	return DegreewiseSubspace::filtered(std::move(algebra), top);
}

}  // namespace liefreedom
