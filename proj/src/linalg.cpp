#include "liefreedom/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace liefreedom {

bool is_zero(std::span<const Scalar> v)
{
	return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector unit_vector(std::size_t dim, std::size_t i)
{
	Vector v(dim);
	v.at(i) = Scalar(1);
	return v;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
	Matrix m(rows.size(), cols);
	for (std::size_t r = 0; r < rows.size(); ++r) {
		if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
		std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
	}
	return m;
}

Matrix Matrix::identity(std::size_t n)
{
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
	return m;
}

RrefResult rref(Matrix m)
{
	std::vector<std::size_t> pivots;
	std::size_t r = 0;
	for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
		std::size_t p = r;
		while (p < m.rows() && m(p, c).is_zero()) ++p;
		if (p == m.rows()) continue;
		if (p != r) {
			auto a = m.row(p);
			auto b = m.row(r);
			std::swap_ranges(a.begin(), a.end(), b.begin());
		}
		Scalar inv = m(r, c).inverse();
		for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
		for (std::size_t i = 0; i < m.rows(); ++i) {
			if (i == r || m(i, c).is_zero()) continue;
			Scalar f = m(i, c);
			for (std::size_t k = c; k < m.cols(); ++k) m(i, k).sub_mul(f, m(r, k));
		}
		pivots.push_back(c);
		++r;
	}
	return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m)
{
	EchelonBuilder b(m.cols());
	for (std::size_t r = 0; r < m.rows(); ++r) b.insert(m.row_vector(r));
	return b.rank();
}

std::vector<Vector> kernel_basis(const Matrix& m)
{
	auto [red, pivots] = rref(m);
	std::vector<bool> is_pivot(m.cols(), false);
	for (auto p : pivots) is_pivot[p] = true;
	std::vector<Vector> out;
	for (std::size_t f = 0; f < m.cols(); ++f) {
		if (is_pivot[f]) continue;
		Vector v(m.cols());
		v[f] = Scalar(1);
		for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, f);
		out.push_back(std::move(v));
	}
	return out;
}

void EchelonBuilder::reduce(Vector& v) const
{
	for (std::size_t i = 0; i < rows_.size(); ++i) {
		std::size_t p = pivots_[i];
		if (v[p].is_zero()) continue;
		Scalar f = v[p];
		const Vector& row = rows_[i];
		for (std::size_t k = p; k < dim_; ++k) v[k].sub_mul(f, row[k]);
	}
}

bool EchelonBuilder::insert(Vector v)
{
	if (v.size() != dim_) throw std::invalid_argument("vector length mismatch in echelon insert");
	reduce(v);
	auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
	if (it == v.end()) return false;
	std::size_t p = static_cast<std::size_t>(it - v.begin());
	Scalar inv = v[p].inverse();
	for (std::size_t k = p; k < dim_; ++k) v[k] *= inv;
	auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
	pivots_.insert(pivots_.begin() + pos, p);
	rows_.insert(rows_.begin() + pos, std::move(v));
	return true;
}

bool EchelonBuilder::contains(Vector v) const
{
	if (v.size() != dim_) throw std::invalid_argument("vector length mismatch in membership test");
	reduce(v);
	return is_zero(v);
}

std::vector<Vector> EchelonBuilder::finish() &&
{
	// Clear each pivot column above its row, last row first.
	for (std::size_t i = rows_.size(); i-- > 0;) {
		std::size_t p = pivots_[i];
		for (std::size_t j = 0; j < i; ++j) {
			if (rows_[j][p].is_zero()) continue;
			Scalar f = rows_[j][p];
			for (std::size_t k = p; k < dim_; ++k) rows_[j][k].sub_mul(f, rows_[i][k]);
		}
	}
	return std::move(rows_);
}

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, const std::vector<Vector>& vectors)
{
	EchelonBuilder b(ambient_dim);
	for (const auto& v : vectors) b.insert(v);
	return from_builder(std::move(b));
}

SubspaceBasis SubspaceBasis::from_builder(EchelonBuilder&& builder)
{
	SubspaceBasis s(builder.ambient_dim());
	s.rows_ = std::move(builder).finish();
	for (const auto& r : s.rows_) {
		auto it = std::find_if(r.begin(), r.end(), [](const Scalar& x) { return !x.is_zero(); });
		s.pivots_.push_back(static_cast<std::size_t>(it - r.begin()));
	}
	return s;
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient_dim)
{
	SubspaceBasis s(ambient_dim);
	for (std::size_t i = 0; i < ambient_dim; ++i) {
		s.rows_.push_back(unit_vector(ambient_dim, i));
		s.pivots_.push_back(i);
	}
	return s;
}

Vector SubspaceBasis::reduce(std::span<const Scalar> v) const
{
	if (v.size() != dim_)
		throw std::invalid_argument("dimension mismatch: vector of length " + std::to_string(v.size()) +
		                            " in ambient space of dimension " + std::to_string(dim_));
	Vector w(v.begin(), v.end());
	for (std::size_t i = 0; i < rows_.size(); ++i) {
		std::size_t p = pivots_[i];
		if (w[p].is_zero()) continue;
		Scalar f = w[p];
		for (std::size_t k = p; k < dim_; ++k) w[k].sub_mul(f, rows_[i][k]);
	}
	return w;
}

bool SubspaceBasis::contains(std::span<const Scalar> v) const { return liefreedom::is_zero(reduce(v)); }

bool SubspaceBasis::contains(const SubspaceBasis& other) const
{
	if (other.dim_ != dim_) throw std::invalid_argument("dimension mismatch in subspace containment");
	return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vector& v) { return contains(v); });
}

EchelonBuilder SubspaceBasis::builder() const
{
	EchelonBuilder b(dim_);
	for (const auto& r : rows_) b.insert(r);
	return b;
}

bool membership(std::span<const Scalar> v, const SubspaceBasis& s) { return s.contains(v); }

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b)
{
	if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("dimension mismatch in subspace sum");
	if (b.is_zero()) return a;
	if (a.is_zero()) return b;
	std::vector<Vector> all = a.vectors();
	all.insert(all.end(), b.vectors().begin(), b.vectors().end());
	return SubspaceBasis::span(a.ambient_dim(), all);
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b)
{
	if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("dimension mismatch in subspace intersection");
	const std::size_t n = a.ambient_dim();
	if (a.is_zero() || b.is_zero()) return SubspaceBasis(n);
	if (a.dim() == n) return b;
	if (b.dim() == n) return a;
	for (const auto* c : {&a, &b}) {
		if (!is_coordinate_subspace(*c)) continue;
		std::vector<bool> keep(n, false);
		for (auto p : c->pivots()) keep[p] = true;
		return intersect_coordinates(c == &a ? b : a, keep);
	}
	// Rows (x | x) for x in a and (y | 0) for y in b; the echelon rows whose
	// left half vanishes carry a basis of a ∩ b in their right half.
	EchelonBuilder builder(2 * n);
	for (const auto& x : a.vectors()) {
		Vector v(2 * n);
		std::copy(x.begin(), x.end(), v.begin());
		std::copy(x.begin(), x.end(), v.begin() + static_cast<std::ptrdiff_t>(n));
		builder.insert(std::move(v));
	}
	for (const auto& y : b.vectors()) {
		Vector v(2 * n);
		std::copy(y.begin(), y.end(), v.begin());
		builder.insert(std::move(v));
	}
	std::vector<Vector> out;
	for (auto& row : std::move(builder).finish()) {
		if (!is_zero(std::span<const Scalar>(row.data(), n))) continue;
		out.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
	}
	return SubspaceBasis::span(n, out);
}

bool is_coordinate_subspace(const SubspaceBasis& s)
{
	for (std::size_t i = 0; i < s.dim(); ++i) {
		const Vector& r = s.vectors()[i];
		for (std::size_t k = s.pivots()[i] + 1; k < r.size(); ++k) {
			if (!r[k].is_zero()) return false;
		}
	}
	return true;
}

SubspaceBasis intersect_coordinates(const SubspaceBasis& s, const std::vector<bool>& keep)
{
	const std::size_t n = s.ambient_dim();
	if (keep.size() != n) throw std::invalid_argument("dimension mismatch in coordinate intersection");
	// Discarded coordinates first: echelon rows pivoting on a kept coordinate
	// vanish on every discarded one.
	std::vector<std::size_t> order;
	for (std::size_t i = 0; i < n; ++i)
		if (!keep[i]) order.push_back(i);
	const std::size_t dropped = order.size();
	for (std::size_t i = 0; i < n; ++i)
		if (keep[i]) order.push_back(i);
	EchelonBuilder builder(n);
	for (const auto& x : s.vectors()) {
		Vector v(n);
		for (std::size_t k = 0; k < n; ++k) v[k] = x[order[k]];
		builder.insert(std::move(v));
	}
	std::vector<Vector> out;
	for (auto& row : std::move(builder).finish()) {
		if (!is_zero(std::span<const Scalar>(row.data(), dropped))) continue;
		Vector v(n);
		for (std::size_t k = 0; k < n; ++k) v[order[k]] = row[k];
		out.push_back(std::move(v));
	}
	return SubspaceBasis::span(n, out);
}

std::vector<Vector> extend_basis(const SubspaceBasis& inner, const SubspaceBasis& ambient)
{
	if (!ambient.contains(inner)) throw std::invalid_argument("extend_basis: inner subspace is not contained in ambient");
	return complete_with(inner, ambient.vectors());
}

std::vector<Vector> complete_with(const SubspaceBasis& inner, const std::vector<Vector>& candidates)
{
	EchelonBuilder b = inner.builder();
	std::vector<Vector> out;
	for (const auto& c : candidates) {
		if (b.insert(c)) out.push_back(c);
	}
	return out;
}

}  // namespace liefreedom
