#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "liefreedom/assoc.hpp"
#include "liefreedom/quotient.hpp"
#include "liefreedom/series.hpp"
#include "liefreedom/subspace.hpp"

namespace liefreedom {

// ---------------------------------------------------------------------------
// Word coordinates of U(F)_{≤d}: words ordered by length, then lexicographically.

std::size_t word_space_dim(int n, int d);
std::size_t word_coordinate(const Word& w, int n);
Vector word_coords(const AssocElement& u, int n, int d);
AssocElement from_word_coords(std::span<const Scalar> v, int n, int truncation);

// ---------------------------------------------------------------------------
// Two-sided ideals N_U generated by subspaces of F.

/// Lie elements of degree d that, together with [N_{d-1}, F_1], span N_d.
/// Graded subspaces only.
std::vector<LieElement> ideal_generators(const DegreewiseSubspace& N, int d);

/// U(F)/N_U degree by degree. Graded N only.
std::shared_ptr<GradedQuotient> enveloping_quotient(const DegreewiseSubspace& N, Field field = {});

/// N_U ∩ U(F)_{≤d} in word coordinates.
SubspaceBasis ideal_NU_basis(const DegreewiseSubspace& N, int d);

/// u ≡ v (mod N_U), componentwise up to the truncation.
bool congruent_mod_NU(const AssocElement& u, const AssocElement& v, const DegreewiseSubspace& N);

/// Repeated congruence tests against one subspace, sharing its ideal data.
class NUCongruence {
public:
	explicit NUCongruence(DegreewiseSubspace N, Field field = {});
	const DegreewiseSubspace& subspace() const { return N_; }
	bool is_zero(const AssocElement& u) const;
	bool congruent(const AssocElement& u, const AssocElement& v) const { return is_zero(u - v); }

private:
	DegreewiseSubspace N_;
	std::shared_ptr<GradedQuotient> quotient_;
	mutable std::mutex mutex_;
	mutable std::map<int, SubspaceBasis> filtered_;
};

// ---------------------------------------------------------------------------
// Adapted standard bases.

/// Classes of an adapted basis for a pair (H, N): Both spans H ∩ N, HOnly
/// completes it to H, NOnly completes it to N, Rest completes H + N to F.
enum class BasisClass { Both, HOnly, NOnly, Rest };

/// Both < HOnly < NOnly < Rest, or Rest < HOnly < NOnly < Both.
enum class AdaptedOrder { InsideFirst, OutsideFirst };

std::string to_string(BasisClass c);

class AdaptedBasis {
public:
	struct Element {
		BasisClass cls;
		int degree;
		LieElement value;
		Vector coords;  // in F_degree
	};

	/// H and N graded.
	AdaptedBasis(const DegreewiseSubspace& H, const DegreewiseSubspace& N, AdaptedOrder order);

	const FreeLieAlgebra& algebra() const { return *algebra_; }
	const std::shared_ptr<const FreeLieAlgebra>& algebra_ptr() const { return algebra_; }
	AdaptedOrder order() const { return order_; }
	int truncation() const { return algebra_->truncation(); }

	/// Elements sorted by the total order; an element's id is its position.
	const std::vector<Element>& elements() const { return elements_; }
	const Element& element(int id) const { return elements_.at(static_cast<std::size_t>(id)); }
	std::size_t size() const { return elements_.size(); }
	std::vector<int> ids(BasisClass c, int degree) const;
	int class_rank(BasisClass c) const;

	/// Coefficients of a homogeneous Lie element of degree d on the ids.
	std::vector<std::pair<int, Scalar>> expand(const LieElement& x, int d) const;

private:
	std::shared_ptr<const FreeLieAlgebra> algebra_;
	AdaptedOrder order_;
	std::vector<Element> elements_;
	std::vector<std::vector<int>> ids_by_degree_;  // position i ↦ id, per degree
	std::vector<Matrix> inverse_;                  // Lyndon coords → adapted coords
};

struct ClassCounts {
	int rest = 0;   // θ
	int h_only = 0; // η
	int n_only = 0; // ν
	int both = 0;   // μ
	bool operator==(const ClassCounts&) const = default;
};

/// Weakly increasing sequence of adapted basis ids.
struct PBWMonomial {
	std::vector<int> factors;

	int degree(const AdaptedBasis& ab) const;
	ClassCounts counts(const AdaptedBasis& ab) const;
	std::string to_string(const AdaptedBasis& ab) const;

	/// Shorter monomials first, then lexicographic in the basis order.
	friend bool operator<(const PBWMonomial& a, const PBWMonomial& b)
	{
		if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
		return a.factors < b.factors;
	}
	friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
};

using PBWExpansion = std::map<PBWMonomial, Scalar>;

/// Straightens words into PBW coordinates, memoizing factor sequences.
class PBWStraightener {
public:
	explicit PBWStraightener(std::shared_ptr<const AdaptedBasis> ab);
	const AdaptedBasis& basis() const { return *ab_; }
	PBWExpansion straighten(const AssocElement& u) const;
	/// Sorts an arbitrary factor sequence.
	PBWExpansion straighten_sequence(const std::vector<int>& factors) const;
	AssocElement to_assoc(const PBWMonomial& m) const;
	AssocElement to_assoc(const PBWExpansion& e) const;

private:
	const PBWExpansion& sorted(const std::vector<int>& factors) const;

	std::shared_ptr<const AdaptedBasis> ab_;
	mutable std::recursive_mutex mutex_;
	mutable std::map<std::vector<int>, PBWExpansion> memo_;
	mutable std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> brackets_;
};

PBWExpansion pbw_straighten(const AssocElement& u, const AdaptedBasis& ab);

/// Degree-d monomials with no NOnly or Both factors, split into those without
/// Rest factors (first) and those with (second), each in monomial order.
std::pair<std::vector<PBWMonomial>, std::vector<PBWMonomial>> classify_representatives(const AdaptedBasis& ab, int d);

// ---------------------------------------------------------------------------
// Δ-ideals and the valuation.

enum class DeltaSide { Full, WithinN };

/// Degree-d component of Δ_t in word coordinates of length-d words: the ideal
/// generated by products of chain terms with weights summing to at least t,
/// two-sided in U(F) (Full) or in U(chain[0]) (WithinN). Graded chain.
SubspaceBasis delta_ideal_basis(const std::vector<DegreewiseSubspace>& chain, int t, int d, DeltaSide side);

/// ψ: ∞ for zero, a finite weight, or "at least" the truncation bound.
struct Valuation {
	enum class Kind { Finite, Infinite, AtLeast };
	Kind kind = Kind::Infinite;
	int value = 0;

	static Valuation finite(int v) { return {Kind::Finite, v}; }
	static Valuation infinite() { return {Kind::Infinite, 0}; }
	static Valuation at_least(int v) { return {Kind::AtLeast, v}; }
	bool is_finite() const { return kind == Kind::Finite; }
	bool is_infinite() const { return kind == Kind::Infinite; }
	bool decidable() const { return kind != Kind::AtLeast; }
	std::string to_string() const;
	bool operator==(const Valuation&) const = default;
};

/// Finite < AtLeast < Infinite; finite values compare numerically.
bool pivot_less(const Valuation& a, const Valuation& b);

/// Arithmetic in U(F/W) for a chain N_1 ⊇ … ⊇ N_m of graded ideals of F,
/// W = N_m, together with the filtration Δ_j of U(F/W) and its valuation.
/// Copies share state.
class QuotientContext {
public:
	QuotientContext(std::vector<DegreewiseSubspace> chain, Field field = {});
	/// Chain (R + N_{k,1}) ⊇ … ⊇ (R + N_{k,m_k+1}); R may be zero.
	static QuotientContext from_series(const SeriesContext& series, int k, const DegreewiseSubspace& R, Field field = {});

	const FreeLieAlgebra& algebra() const;
	int rank() const;
	int truncation() const;
	const Field& field() const;
	const std::vector<DegreewiseSubspace>& chain() const;
	const DegreewiseSubspace& working_ideal() const { return chain().back(); }
	const GradedQuotient& quotient() const;

	AssocElement coerce(const AssocElement& u) const;
	bool is_zero(const AssocElement& u) const;
	bool congruent(const AssocElement& u, const AssocElement& v) const { return is_zero(u - v); }
	AssocElement normal_form(const AssocElement& u) const;
	/// Normal form of u·v; throws when the product exceeds the truncation.
	AssocElement multiply(const AssocElement& u, const AssocElement& v) const;

	Valuation psi(const AssocElement& u) const;
	/// Largest testable weight; values reaching it are reported as AtLeast.
	int valuation_cap() const;
	/// Degree-d component of Δ_j as a subspace of A_d.
	std::vector<SparseVector> delta_basis(int j, int d) const;

private:
	struct State;
	std::shared_ptr<State> state_;
};

Valuation psi_valuation(const AssocElement& u, const QuotientContext& ctx);

}  // namespace liefreedom
