#pragma once

#include <memory>
#include <vector>

#include "liefreedom/freelie.hpp"
#include "liefreedom/linalg.hpp"

namespace liefreedom {

/// A subspace of the truncated free Lie algebra, held level by level.
///
/// Graded subspaces store their degree-d components in coordinates of F_d.
/// Filtered subspaces store S ∩ F_{≤d} in the global coordinates of F_{≤d};
/// level D is the whole subspace.
class DegreewiseSubspace {
public:
	enum class Kind { Graded, Filtered };

	DegreewiseSubspace() = default;
	static DegreewiseSubspace zero(std::shared_ptr<const FreeLieAlgebra> algebra, Kind kind = Kind::Graded);
	static DegreewiseSubspace whole(std::shared_ptr<const FreeLieAlgebra> algebra);
	/// components[d] for d = 1..D; components[0] is ignored.
	static DegreewiseSubspace graded(std::shared_ptr<const FreeLieAlgebra> algebra, std::vector<SubspaceBasis> components);
	/// top is a subspace of F_{≤D} in global coordinates.
	static DegreewiseSubspace filtered(std::shared_ptr<const FreeLieAlgebra> algebra, const SubspaceBasis& top);
	/// Graded span of homogeneous elements, filtered span otherwise.
	static DegreewiseSubspace span(std::shared_ptr<const FreeLieAlgebra> algebra, const std::vector<LieElement>& elements);

	Kind kind() const { return kind_; }
	bool is_graded() const { return kind_ == Kind::Graded; }
	const FreeLieAlgebra& algebra() const { return *algebra_; }
	const std::shared_ptr<const FreeLieAlgebra>& algebra_ptr() const { return algebra_; }
	int truncation() const { return algebra_->truncation(); }

	/// Graded: the degree-d component. Filtered: S ∩ F_{≤d}.
	const SubspaceBasis& level(int d) const;
	/// dim(S ∩ F_{≤d}).
	std::size_t dim_upto(int d) const;
	/// Graded only: dim of the degree-d component.
	std::size_t dim(int d) const;
	bool is_zero() const;

	/// Basis of level(d) as Lie elements.
	std::vector<LieElement> basis(int d) const;

	bool contains(const LieElement& x) const;
	bool contains(const DegreewiseSubspace& other) const;

	DegreewiseSubspace to_filtered() const;

	/// Structural equality after converting both sides to a common kind.
	friend bool operator==(const DegreewiseSubspace& a, const DegreewiseSubspace& b);

private:
	DegreewiseSubspace(std::shared_ptr<const FreeLieAlgebra> algebra, Kind kind, std::vector<SubspaceBasis> levels);
	void check_degree(int d) const;

	std::shared_ptr<const FreeLieAlgebra> algebra_;
	Kind kind_ = Kind::Graded;
	std::vector<SubspaceBasis> levels_;
};

DegreewiseSubspace sum(const DegreewiseSubspace& a, const DegreewiseSubspace& b);
DegreewiseSubspace intersect(const DegreewiseSubspace& a, const DegreewiseSubspace& b);

/// The subalgebra generated by a subset of the free generators: the span of
/// the Lyndon monomials whose letters all lie in the subset.
DegreewiseSubspace subalgebra_span(std::shared_ptr<const FreeLieAlgebra> algebra, const std::vector<int>& subset);

/// X_(l), with X_(1) = X and X_(l) = [X_(l-1), X]. For l ≥ 2 the input must
/// be a graded subalgebra; closure under the bracket is verified.
DegreewiseSubspace lower_central(const DegreewiseSubspace& sub, int l);

/// X_(1), ..., X_(l).
std::vector<DegreewiseSubspace> lower_central_powers(const DegreewiseSubspace& sub, int l);

/// True when [X_i, X_j] ⊆ X_{i+j} for all i + j ≤ D.
bool is_subalgebra(const DegreewiseSubspace& sub);

/// The ideal of F generated by the given elements, truncated at D.
DegreewiseSubspace ideal_closure(std::shared_ptr<const FreeLieAlgebra> algebra, const std::vector<LieElement>& generators);

}  // namespace liefreedom
