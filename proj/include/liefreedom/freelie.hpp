#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "liefreedom/assoc.hpp"
#include "liefreedom/linalg.hpp"
#include "liefreedom/word.hpp"

namespace liefreedom {

class FreeLieAlgebra;

/// A Lyndon word with its standard factorization (left, right are global
/// basis indices; both -1 for a letter).
struct LyndonWord {
	Word letters;
	int left = -1;
	int right = -1;
	int degree() const { return letters.length; }
};

/// Element of the free Lie algebra in Lyndon-basis coordinates, keyed by
/// global basis index (degree-major, so map order is degree order).
class LieElement {
public:
	LieElement() = default;
	explicit LieElement(const FreeLieAlgebra* algebra) : algebra_(algebra) {}

	const FreeLieAlgebra* algebra() const { return algebra_; }
	const std::map<int, Scalar>& coords() const { return coords_; }
	bool is_zero() const { return coords_.empty(); }
	Scalar coefficient(int basis_index) const;
	void add(int basis_index, const Scalar& c);

	/// -1 for zero.
	int degree() const;
	int min_degree() const;
	bool is_homogeneous() const { return degree() == min_degree(); }
	LieElement component(int d) const;

	LieElement operator-() const;
	friend LieElement operator+(LieElement a, const LieElement& b);
	friend LieElement operator-(LieElement a, const LieElement& b);
	friend LieElement operator*(const Scalar& c, const LieElement& a);
	LieElement& operator+=(const LieElement& b);
	LieElement& operator-=(const LieElement& b);
	bool operator==(const LieElement& b) const { return coords_ == b.coords_; }

	std::string to_string() const;

private:
	void check_same(const LieElement& b) const;
	const FreeLieAlgebra* algebra_ = nullptr;
	std::map<int, Scalar> coords_;
};

/// The free Lie algebra on n ordered generators, truncated at degree D, with
/// the Lyndon basis (standard bracketing). Holds lazily filled caches; share
/// one instance per computation through std::shared_ptr.
class FreeLieAlgebra {
public:
	FreeLieAlgebra(GeneratorSet generators, int truncation);
	FreeLieAlgebra(const FreeLieAlgebra&) = delete;
	FreeLieAlgebra& operator=(const FreeLieAlgebra&) = delete;

	static std::shared_ptr<FreeLieAlgebra> make(GeneratorSet generators, int truncation)
	{
		return std::make_shared<FreeLieAlgebra>(std::move(generators), truncation);
	}

	const GeneratorSet& generators() const { return generators_; }
	int rank() const { return generators_.size(); }
	int truncation() const { return truncation_; }

	/// dim F_d (0 outside 1..D).
	int dim(int d) const;
	/// dim F_{≤d}
	int dim_upto(int d) const;
	int offset(int d) const { return offsets_.at(static_cast<std::size_t>(d)); }
	int total_dim() const { return dim_upto(truncation_); }

	/// Lyndon words of degree d in lexicographic order. Throws
	/// std::out_of_range unless 1 ≤ d ≤ D.
	const std::vector<LyndonWord>& lyndon_basis(int d) const;
	const LyndonWord& basis_word(int global) const;
	int degree_of(int global) const;
	/// Global index of a Lyndon word, or -1.
	int index_of(const Word& w) const;

	LieElement zero() const { return LieElement(this); }
	LieElement generator(int j) const;
	LieElement basis_element(int global) const;

	LieElement bracket(const LieElement& a, const LieElement& b) const;
	/// Left-normed [[...[a, b1], b2]...].
	LieElement left_normed(const LieElement& a, const std::vector<LieElement>& tail) const;

	AssocElement lie_to_assoc(const LieElement& a) const;
	/// Lyndon coordinates of p, or nullopt when p is not a Lie element.
	std::optional<LieElement> assoc_to_lie(const AssocElement& p) const;
	/// Throwing variant of assoc_to_lie.
	LieElement require_lie(const AssocElement& p) const;

	/// Degree-d coordinates (length dim(d)).
	Vector coords(const LieElement& a, int d) const;
	/// Coordinates in F_{≤d} (length dim_upto(d)); components above d dropped.
	Vector filtered_coords(const LieElement& a, int d) const;
	LieElement from_coords(std::span<const Scalar> v, int d) const;
	LieElement from_filtered_coords(std::span<const Scalar> v) const;

	/// Basis expansion P_l as a polynomial in words.
	const AssocElement& expansion(int global) const;

	/// [e_a, e_b] in Lyndon coordinates (cached).
	const std::vector<std::pair<int, Scalar>>& basis_bracket(int a, int b) const;

	/// Image under the endomorphism sending the marked generators to zero and
	/// fixing the others. Lyndon monomials are mapped to themselves or zero.
	LieElement kill_generators(const LieElement& a, const std::vector<bool>& killed) const;

private:
	GeneratorSet generators_;
	int truncation_;
	std::vector<std::vector<LyndonWord>> basis_;  // basis_[d], d = 0..D
	std::vector<int> offsets_;                    // offsets_[d] = dim F_{<d}
	std::unordered_map<Word, int, WordHash> index_;
	std::vector<AssocElement> expansions_;

	mutable std::mutex cache_mutex_;
	mutable std::unordered_map<std::uint64_t, std::vector<std::pair<int, Scalar>>> bracket_cache_;
};

/// All Lyndon words of degree d over the generators, with standard
/// factorizations.
const std::vector<LyndonWord>& lyndon_basis(const FreeLieAlgebra& algebra, int d);

LieElement bracket(const LieElement& a, const LieElement& b);
AssocElement lie_to_assoc(const LieElement& a);

}  // namespace liefreedom
