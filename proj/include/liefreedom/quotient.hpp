#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "liefreedom/assoc.hpp"
#include "liefreedom/linalg.hpp"

namespace liefreedom {

/// Sparse coordinate vector, sorted by index, no stored zeros.
using SparseVector = std::vector<std::pair<std::uint32_t, Scalar>>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t dim);
void axpy(Vector& acc, const Scalar& c, const SparseVector& x);

/// Sparse rows in reduced echelon form, pivot = first nonzero index.
class SparseEchelon {
public:
	explicit SparseEchelon(std::size_t dim) : dim_(dim), pivot_row_(dim, -1) {}
	std::size_t ambient_dim() const { return dim_; }
	std::size_t rank() const { return rows_.size(); }
	/// Reduces v against the rows; returns the residual. When `used` is given,
	/// it receives the insertion indices of the rows with nonzero coefficient.
	SparseVector reduce(const SparseVector& v, std::vector<std::size_t>* used = nullptr) const;
	bool contains(const SparseVector& v) const { return reduce(v).empty(); }
	bool insert(const SparseVector& v);
	/// Adds a residual returned by reduce(); skips the second reduction.
	void insert_reduced(SparseVector r);
	/// Rows in insertion order, each reduced against the earlier ones.
	const std::vector<SparseVector>& rows() const { return rows_; }
	/// Fully reduced rows sorted by pivot.
	std::vector<SparseVector> reduced_rows() const;
	bool is_pivot(std::size_t c) const { return pivot_row_[c] >= 0; }

private:
	void reduce_dense(Vector& acc, std::size_t from, std::vector<std::size_t>* used = nullptr) const;
	std::size_t dim_;
	std::vector<SparseVector> rows_;
	std::vector<int> pivot_row_;
};

/// The graded algebra U(F)/J, where U(F) is the free associative algebra on
/// the generators and J is the two-sided ideal generated by homogeneous
/// augmentation elements, computed degree by degree up to the truncation.
///
/// A_d is presented as ⊕_j y_j A_{d-1} modulo the relations coming from J;
/// the quotient basis consists of the non-pivot columns, each represented by
/// a word y_j · rep(b).
class GradedQuotient {
public:
	using GeneratorSource = std::function<std::vector<AssocElement>(int degree)>;

	/// Coefficients are mapped into `field` on the way in.
	GradedQuotient(int rank, int truncation, Field field, GeneratorSource generators);
	GradedQuotient(const GradedQuotient&) = delete;
	GradedQuotient& operator=(const GradedQuotient&) = delete;

	int rank() const { return rank_; }
	int truncation() const { return truncation_; }
	const Field& field() const { return field_; }

	std::size_t dim(int d) const;
	/// Word whose image is the i-th basis vector of A_d.
	Word representative(int d, std::size_t i) const;
	AssocElement representative_element(int d, const SparseVector& x) const;

	/// Image of the degree-d component of u in A_d.
	SparseVector project(const AssocElement& u, int d) const;
	/// True when every component of u lies in J.
	bool contains(const AssocElement& u) const;
	/// Canonical representative: combination of basis words, same class mod J.
	AssocElement normal_form(const AssocElement& u) const;

	/// y_k · x for x in A_d.
	SparseVector left_multiply(int k, const SparseVector& x, int d) const;
	/// x · z for x in A_p, z in A_q (p + q ≤ D).
	SparseVector multiply(const SparseVector& x, int p, const SparseVector& z, int q) const;
	/// Matrix of z ↦ a·z from A_q to A_{q+deg}, for homogeneous a of degree deg.
	std::vector<SparseVector> left_multiplication_columns(const SparseVector& a, int deg, int q) const;

private:
	struct Level {
		std::size_t dim = 0;
		std::vector<std::pair<int, std::uint32_t>> basis;  // (letter, index in A_{d-1})
		std::vector<SparseVector> projection;             // column c of ⊕_j A_{d-1} → A_d
		std::vector<SparseVector> relations;               // reduced relation rows
		std::vector<std::vector<SparseVector>> right;      // right[k][b] = π(rep_b · y_k) in A_{d+1}
	};

	void ensure(int d) const;
	void build(int d) const;
	void build_right(int d) const;
	SparseVector project_locked(const AssocElement& u, int d) const;
	SparseVector apply_projection(int d, const std::vector<SparseVector>& blocks) const;
	SparseVector left_multiply_locked(int k, const SparseVector& x, int d) const;

	Scalar coerce(const Scalar& c) const { return field_.is_rational() ? c : c.in_field(field_); }

	int rank_;
	int truncation_;
	Field field_;
	GeneratorSource generators_;
	mutable std::recursive_mutex mutex_;
	mutable std::vector<Level> levels_;
	mutable int built_ = -1;
};

}  // namespace liefreedom
