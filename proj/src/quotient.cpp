#include "liefreedom/quotient.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace liefreedom {

SparseVector to_sparse(const Vector& v)
{
	SparseVector out;
	for (std::size_t i = 0; i < v.size(); ++i)
		if (!v[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
	return out;
}

Vector to_dense(const SparseVector& v, std::size_t dim)
{
	Vector out(dim);
	for (const auto& [i, c] : v) out.at(i) = c;
	return out;
}

void axpy(Vector& acc, const Scalar& c, const SparseVector& x)
{
	if (c.is_zero()) return;
	if (c.is_one()) {
		for (const auto& [i, v] : x) acc[i] += v;
		return;
	}
	for (const auto& [i, v] : x) acc[i] += c * v;
}

// ---------------------------------------------------------------------------

void SparseEchelon::reduce_dense(Vector& acc, std::size_t from, std::vector<std::size_t>* used) const
{
	for (std::size_t c = from; c < dim_; ++c) {
		if (acc[c].is_zero() || pivot_row_[c] < 0) continue;
		if (used) used->push_back(static_cast<std::size_t>(pivot_row_[c]));
		Scalar f = acc[c];
		for (const auto& [i, v] : rows_[static_cast<std::size_t>(pivot_row_[c])]) acc[i].sub_mul(f, v);
	}
}

SparseVector SparseEchelon::reduce(const SparseVector& v, std::vector<std::size_t>* used) const
{
	if (v.empty()) return {};
	Vector acc = to_dense(v, dim_);
	reduce_dense(acc, v.front().first, used);
	return to_sparse(acc);
}

bool SparseEchelon::insert(const SparseVector& v)
{
	if (v.empty()) return false;
	Vector acc = to_dense(v, dim_);
	reduce_dense(acc, v.front().first);
	SparseVector r = to_sparse(acc);
	if (r.empty()) return false;
	insert_reduced(std::move(r));
	return true;
}

void SparseEchelon::insert_reduced(SparseVector r)
{
	if (r.empty()) return;
	Scalar inv = r.front().second.inverse();
	for (auto& e : r) e.second *= inv;
	pivot_row_[r.front().first] = static_cast<int>(rows_.size());
	rows_.push_back(std::move(r));
}

std::vector<SparseVector> SparseEchelon::reduced_rows() const
{
	std::vector<std::size_t> order;
	for (std::size_t c = 0; c < dim_; ++c)
		if (pivot_row_[c] >= 0) order.push_back(static_cast<std::size_t>(pivot_row_[c]));
	std::vector<SparseVector> out(order.size());
	// Later pivots are final before earlier rows consult them.
	std::vector<int> slot(dim_, -1);
	for (std::size_t k = order.size(); k-- > 0;) {
		const SparseVector& row = rows_[order[k]];
		Vector acc = to_dense(row, dim_);
		std::size_t p = row.front().first;
		for (std::size_t c = p + 1; c < dim_; ++c) {
			if (acc[c].is_zero() || slot[c] < 0) continue;
			Scalar f = acc[c];
			for (const auto& [i, v] : out[static_cast<std::size_t>(slot[c])]) acc[i].sub_mul(f, v);
		}
		out[k] = to_sparse(acc);
		slot[p] = static_cast<int>(k);
	}
	return out;
}

// ---------------------------------------------------------------------------

GradedQuotient::GradedQuotient(int rank, int truncation, Field field, GeneratorSource generators)
    : rank_(rank), truncation_(truncation), field_(field), generators_(std::move(generators))
{
	if (rank < 1 || rank > kMaxGenerators) throw std::invalid_argument("quotient: unsupported number of generators");
	if (truncation < 0 || truncation > kMaxDegree) throw std::invalid_argument("quotient: unsupported truncation");
	levels_.resize(static_cast<std::size_t>(truncation) + 1);
	ensure(0);
}

void GradedQuotient::ensure(int d) const
{
	if (d < 0 || d > truncation_) throw std::out_of_range("quotient degree " + std::to_string(d) + " outside 0.." + std::to_string(truncation_));
	std::lock_guard lock(mutex_);
	while (built_ < d) build(built_ + 1);
}

std::size_t GradedQuotient::dim(int d) const
{
	ensure(d);
	return levels_[static_cast<std::size_t>(d)].dim;
}

Word GradedQuotient::representative(int d, std::size_t i) const
{
	ensure(d);
	Word w;
	while (d > 0) {
		const auto& [letter, tail] = levels_[static_cast<std::size_t>(d)].basis.at(i);
		w = w * Word::letter(static_cast<Letter>(letter));
		i = tail;
		--d;
	}
	return w;
}

AssocElement GradedQuotient::representative_element(int d, const SparseVector& x) const
{
	AssocElement out(truncation_);
	for (const auto& [i, c] : x) out.add(representative(d, i), c);
	return out;
}

SparseVector GradedQuotient::apply_projection(int d, const std::vector<SparseVector>& blocks) const
{
	const Level& lv = levels_[static_cast<std::size_t>(d)];
	const std::size_t below = levels_[static_cast<std::size_t>(d - 1)].dim;
	Vector acc(lv.dim);
	for (std::size_t j = 0; j < blocks.size(); ++j)
		for (const auto& [i, c] : blocks[j]) axpy(acc, c, lv.projection[j * below + i]);
	return to_sparse(acc);
}

SparseVector GradedQuotient::project_locked(const AssocElement& u, int d) const
{
	if (d == 0) {
		Scalar c = coerce(u.constant_term());
		if (c.is_zero() || levels_[0].dim == 0) return {};
		return {{0u, c}};
	}
	std::vector<AssocElement> tails(static_cast<std::size_t>(rank_), AssocElement(truncation_));
	bool any = false;
	for (const auto& [w, c] : u.terms()) {
		if (w.length != d) continue;
		tails[w.first()].add(w.tail(), coerce(c));
		any = true;
	}
	if (!any) return {};
	std::vector<SparseVector> blocks(static_cast<std::size_t>(rank_));
	for (int j = 0; j < rank_; ++j)
		if (!tails[static_cast<std::size_t>(j)].is_zero()) blocks[static_cast<std::size_t>(j)] = project_locked(tails[static_cast<std::size_t>(j)], d - 1);
	return apply_projection(d, blocks);
}

SparseVector GradedQuotient::project(const AssocElement& u, int d) const
{
	ensure(d);
	std::lock_guard lock(mutex_);
	return project_locked(u, d);
}

bool GradedQuotient::contains(const AssocElement& u) const
{
	int top = u.degree();
	if (top > truncation_) throw std::invalid_argument("quotient: element exceeds the truncation degree");
	for (int d = 0; d <= top; ++d)
		if (!project(u, d).empty()) return false;
	return true;
}

AssocElement GradedQuotient::normal_form(const AssocElement& u) const
{
	AssocElement out(truncation_);
	int top = std::min(u.degree(), truncation_);
	for (int d = 0; d <= top; ++d) out += representative_element(d, project(u, d));
	return out;
}

SparseVector GradedQuotient::left_multiply_locked(int k, const SparseVector& x, int d) const
{
	const Level& lv = levels_[static_cast<std::size_t>(d + 1)];
	const std::size_t offset = static_cast<std::size_t>(k) * levels_[static_cast<std::size_t>(d)].dim;
	Vector acc(lv.dim);
	for (const auto& [i, c] : x) axpy(acc, c, lv.projection[offset + i]);
	return to_sparse(acc);
}

SparseVector GradedQuotient::left_multiply(int k, const SparseVector& x, int d) const
{
	ensure(d + 1);
	std::lock_guard lock(mutex_);
	return left_multiply_locked(k, x, d);
}

SparseVector GradedQuotient::multiply(const SparseVector& x, int p, const SparseVector& z, int q) const
{
	if (p + q > truncation_) throw std::invalid_argument("quotient: product exceeds the truncation degree");
	if (x.empty() || z.empty()) return {};
	ensure(p + q);
	std::lock_guard lock(mutex_);
	// value[e][i] = rep_i · z for the basis elements of A_e reachable from x's support.
	std::vector<std::map<std::uint32_t, SparseVector>> value(static_cast<std::size_t>(p) + 1);
	std::vector<std::vector<std::uint32_t>> needed(static_cast<std::size_t>(p) + 1);
	for (const auto& [i, c] : x) needed[static_cast<std::size_t>(p)].push_back(i);
	for (int e = p; e > 0; --e) {
		auto& cur = needed[static_cast<std::size_t>(e)];
		std::sort(cur.begin(), cur.end());
		cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
		for (auto i : cur) needed[static_cast<std::size_t>(e - 1)].push_back(levels_[static_cast<std::size_t>(e)].basis[i].second);
	}
	value[0][0] = z;
	for (int e = 1; e <= p; ++e) {
		for (auto i : needed[static_cast<std::size_t>(e)]) {
			const auto& [letter, tail] = levels_[static_cast<std::size_t>(e)].basis[i];
			value[static_cast<std::size_t>(e)][i] = left_multiply_locked(letter, value[static_cast<std::size_t>(e - 1)].at(tail), e - 1 + q);
		}
	}
	Vector acc(levels_[static_cast<std::size_t>(p + q)].dim);
	for (const auto& [i, c] : x) axpy(acc, c, value[static_cast<std::size_t>(p)].at(i));
	return to_sparse(acc);
}

std::vector<SparseVector> GradedQuotient::left_multiplication_columns(const SparseVector& a, int deg, int q) const
{
	std::size_t n = dim(q);
	std::vector<SparseVector> cols(n);
	for (std::size_t i = 0; i < n; ++i) cols[i] = multiply(a, deg, {{static_cast<std::uint32_t>(i), Scalar(1)}}, q);
	return cols;
}

void GradedQuotient::build(int d) const
{
	Level& lv = levels_[static_cast<std::size_t>(d)];
	if (d == 0) {
		lv.dim = 1;
		built_ = 0;
		return;
	}
	const Level& prev = levels_[static_cast<std::size_t>(d - 1)];
	const std::size_t below = prev.dim;
	const std::size_t width = static_cast<std::size_t>(rank_) * below;
	SparseEchelon rel(width);

	auto split = [&](const AssocElement& g) {
		std::vector<AssocElement> tails(static_cast<std::size_t>(rank_), AssocElement(truncation_));
		for (const auto& [w, c] : g.terms()) {
			if (w.length != d) continue;
			tails[w.first()].add(w.tail(), coerce(c));
		}
		SparseVector row;
		for (int j = 0; j < rank_; ++j) {
			if (tails[static_cast<std::size_t>(j)].is_zero()) continue;
			for (auto& [i, c] : project_locked(tails[static_cast<std::size_t>(j)], d - 1))
				row.emplace_back(static_cast<std::uint32_t>(static_cast<std::size_t>(j) * below + i), c);
		}
		return row;
	};
	for (const auto& g : generators_(d)) {
		if (!g.is_zero() && (g.min_degree() != d || g.degree() != d))
			throw std::invalid_argument("quotient: ideal generator of degree " + std::to_string(d) + " is not homogeneous of that degree");
		rel.insert(split(g));
	}
	// Right multiples r·y_k of degree-(d-1) ideal elements r: their split is
	// the blockwise image of the split of r under right multiplication.
	if (d >= 2) {
		const std::size_t below2 = levels_[static_cast<std::size_t>(d - 2)].dim;
		for (const auto& r : prev.relations) {
			for (int k = 0; k < rank_; ++k) {
				const auto& right = levels_[static_cast<std::size_t>(d - 2)].right[static_cast<std::size_t>(k)];
				SparseVector row;
				for (int j = 0; j < rank_; ++j) {
					Vector acc(below);
					bool any = false;
					for (const auto& [c, v] : r) {
						if (c / below2 != static_cast<std::size_t>(j)) continue;
						axpy(acc, v, right[c % below2]);
						any = true;
					}
					if (!any) continue;
					for (auto& [i, v] : to_sparse(acc)) row.emplace_back(static_cast<std::uint32_t>(static_cast<std::size_t>(j) * below + i), v);
				}
				rel.insert(row);
			}
		}
	}
	lv.relations = rel.reduced_rows();
	std::vector<std::int64_t> index(width, -1);
	for (std::size_t c = 0; c < width; ++c) {
		if (rel.is_pivot(c)) continue;
		index[c] = static_cast<std::int64_t>(lv.basis.size());
		lv.basis.emplace_back(static_cast<int>(c / below), static_cast<std::uint32_t>(c % below));
	}
	lv.dim = lv.basis.size();
	lv.projection.assign(width, {});
	for (std::size_t c = 0; c < width; ++c)
		if (index[c] >= 0) lv.projection[c] = {{static_cast<std::uint32_t>(index[c]), Scalar(1)}};
	for (const auto& row : lv.relations) {
		SparseVector col;
		for (std::size_t t = 1; t < row.size(); ++t) col.emplace_back(static_cast<std::uint32_t>(index[row[t].first]), -row[t].second);
		lv.projection[row.front().first] = std::move(col);
	}
	built_ = d;
	build_right(d - 1);
}

void GradedQuotient::build_right(int d) const
{
	// right[k][b] = π(rep_b · y_k) ∈ A_{d+1}, with rep_b = y_j rep_i.
	Level& lv = levels_[static_cast<std::size_t>(d)];
	lv.right.assign(static_cast<std::size_t>(rank_), std::vector<SparseVector>(lv.dim));
	for (int k = 0; k < rank_; ++k) {
		for (std::size_t b = 0; b < lv.dim; ++b) {
			if (d == 0) {
				lv.right[static_cast<std::size_t>(k)][b] = left_multiply_locked(k, {{0u, Scalar(1)}}, 0);
				continue;
			}
			const auto& [letter, tail] = lv.basis[b];
			lv.right[static_cast<std::size_t>(k)][b] =
			    left_multiply_locked(letter, levels_[static_cast<std::size_t>(d - 1)].right[static_cast<std::size_t>(k)][tail], d);
		}
	}
}

}  // namespace liefreedom
