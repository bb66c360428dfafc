#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "liefreedom/scalar.hpp"

namespace liefreedom {

using Vector = std::vector<Scalar>;

bool is_zero(std::span<const Scalar> v);

/// Dense row-major matrix. Dimensions are fixed at construction.
class Matrix {
public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
	static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
	static Matrix identity(std::size_t n);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

	std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
	std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
	Vector row_vector(std::size_t r) const { return Vector(row(r).begin(), row(r).end()); }

	bool operator==(const Matrix&) const = default;

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<Scalar> data_;
};

struct RrefResult {
	Matrix matrix;
	std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form; zero rows are kept at the bottom.
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Incremental semi-echelon form. Rows have a leading 1 at distinct pivots
/// and are kept sorted by pivot; entries at later pivots are not cleared
/// until `finish`.
class EchelonBuilder {
public:
	explicit EchelonBuilder(std::size_t ambient_dim) : dim_(ambient_dim) {}

	std::size_t ambient_dim() const { return dim_; }
	std::size_t rank() const { return rows_.size(); }

	/// Reduce v in place against the current rows.
	void reduce(Vector& v) const;
	/// Returns true when v was independent and got added.
	bool insert(Vector v);
	bool contains(Vector v) const;

	/// Canonical RREF rows, sorted by pivot.
	std::vector<Vector> finish() &&;

private:
	std::size_t dim_;
	std::vector<Vector> rows_;
	std::vector<std::size_t> pivots_;
};

/// A subspace held as its unique reduced echelon basis, so equality of
/// subspaces is equality of objects.
class SubspaceBasis {
public:
	SubspaceBasis() = default;
	explicit SubspaceBasis(std::size_t ambient_dim) : dim_(ambient_dim) {}
	static SubspaceBasis span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
	static SubspaceBasis full(std::size_t ambient_dim);
	static SubspaceBasis from_builder(EchelonBuilder&& builder);

	std::size_t ambient_dim() const { return dim_; }
	std::size_t dim() const { return rows_.size(); }
	bool is_zero() const { return rows_.empty(); }
	const std::vector<Vector>& vectors() const { return rows_; }
	const std::vector<std::size_t>& pivots() const { return pivots_; }

	/// Throws std::invalid_argument on a length mismatch.
	bool contains(std::span<const Scalar> v) const;
	bool contains(const SubspaceBasis& other) const;
	/// Residual of v after reduction (zero iff v is in the span).
	Vector reduce(std::span<const Scalar> v) const;

	EchelonBuilder builder() const;

	bool operator==(const SubspaceBasis&) const = default;

private:
	friend SubspaceBasis sum(const SubspaceBasis&, const SubspaceBasis&);
	std::size_t dim_ = 0;
	std::vector<Vector> rows_;
	std::vector<std::size_t> pivots_;
};

bool membership(std::span<const Scalar> v, const SubspaceBasis& s);
SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b);
/// a ∩ b via the Zassenhaus construction.
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

/// s ∩ span{e_i : keep[i]}.
SubspaceBasis intersect_coordinates(const SubspaceBasis& s, const std::vector<bool>& keep);

/// True when every basis row is a standard unit vector.
bool is_coordinate_subspace(const SubspaceBasis& s);

/// Vectors of ambient's canonical basis that complete inner to a basis of
/// ambient. Throws std::invalid_argument unless inner ⊆ ambient.
std::vector<Vector> extend_basis(const SubspaceBasis& inner, const SubspaceBasis& ambient);

/// Greedy completion: those candidates, in order, that are independent of
/// inner and of the candidates already taken.
std::vector<Vector> complete_with(const SubspaceBasis& inner, const std::vector<Vector>& candidates);

Vector unit_vector(std::size_t dim, std::size_t i);

}  // namespace liefreedom
