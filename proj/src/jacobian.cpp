#include "liefreedom/jacobian.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>

namespace liefreedom {

namespace {

std::size_t sz(int x) { return static_cast<std::size_t>(x); }

/// Homogeneous images of an element in A_0, …, A_D.
struct Projected {
	std::vector<SparseVector> parts;
	int degree = -1;  // highest nonzero part; -1 for zero
};

Projected project_all(const AssocElement& u, const GradedQuotient& q)
{
	Projected p;
	const int D = q.truncation();
	p.parts.resize(sz(D) + 1);
	for (int d = 0; d <= std::min(u.degree(), D); ++d) {
		p.parts[sz(d)] = q.project(u, d);
		if (!p.parts[sz(d)].empty()) p.degree = d;
	}
	return p;
}

/// Coordinates of rows of quotient elements: block c holds A_{≤D} for column c.
struct Layout {
	const GradedQuotient& q;
	std::vector<std::size_t> offset;  // start of A_d inside a block
	std::size_t block = 0;

	explicit Layout(const GradedQuotient& quotient) : q(quotient)
	{
		for (int d = 0; d <= q.truncation(); ++d) {
			offset.push_back(block);
			block += q.dim(d);
		}
	}

	/// (row · x_i) · sign, where x_i is the i-th basis element of A_e.
	SparseVector image(const std::vector<Projected>& row, int e, std::size_t i, const Scalar& sign) const
	{
		SparseVector out;
		SparseVector unit{{static_cast<std::uint32_t>(i), Scalar(1)}};
		for (std::size_t c = 0; c < row.size(); ++c) {
			for (int d = 0; d <= row[c].degree; ++d) {
				const SparseVector& part = row[c].parts[sz(d)];
				if (part.empty()) continue;
				for (const auto& [k, v] : q.multiply(part, d, unit, e))
					out.emplace_back(static_cast<std::uint32_t>(c * block + offset[sz(d + e)] + k), v * sign);
			}
		}
		return out;
	}
};

/// Finds the first column whose image depends on the earlier ones.
class DependencySearch {
public:
	DependencySearch(std::size_t image_dim, std::size_t max_columns) : image_dim_(image_dim), echelon_(image_dim + max_columns) {}

	/// Coefficients (by column number) of a vanishing combination that
	/// includes the new column with coefficient 1, if one exists.
	std::optional<SparseVector> add(const SparseVector& image)
	{
		SparseVector v = image;
		v.emplace_back(static_cast<std::uint32_t>(image_dim_ + count_), Scalar(1));
		++count_;
		SparseVector r = echelon_.reduce(v);
		if (r.front().first >= image_dim_) {
			for (auto& e : r) e.first -= static_cast<std::uint32_t>(image_dim_);
			return r;
		}
		echelon_.insert_reduced(std::move(r));
		return std::nullopt;
	}

private:
	std::size_t image_dim_;
	std::size_t count_ = 0;
	SparseEchelon echelon_;
};

/// Unknown ranging over A_{≤e}, one column per basis element.
struct Unknown {
	int owner;  // which element the column belongs to
	int degree;
	std::size_t index;
};

AssocElement assemble(const std::vector<Unknown>& columns, const SparseVector& coefficients, int owner, const GradedQuotient& q)
{
	std::map<int, Vector> by_degree;
	for (const auto& [col, c] : coefficients) {
		const Unknown& u = columns[col];
		if (u.owner != owner) continue;
		auto& v = by_degree.try_emplace(u.degree, Vector(q.dim(u.degree))).first->second;
		v[u.index] += c;
	}
	AssocElement out(q.truncation());
	for (const auto& [d, v] : by_degree) out += q.representative_element(d, to_sparse(v));
	return out;
}

std::size_t dims_upto(const GradedQuotient& q, int e)
{
	std::size_t total = 0;
	for (int d = 0; d <= e; ++d) total += q.dim(d);
	return total;
}

std::string bracketed(const AssocElement& c, const GeneratorSet& g) { return "(" + c.to_string(g) + ")"; }

}  // namespace

// ---------------------------------------------------------------------------

std::string ElementaryTransform::to_string(const GeneratorSet& g) const
{
	switch (kind) {
	case Kind::ColumnSwap: return "swap columns " + std::to_string(i + 1) + " and " + std::to_string(j + 1);
	case Kind::RowSwap: return "swap rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1);
	case Kind::RowScale: return "row " + std::to_string(i + 1) + " *= " + bracketed(factor, g);
	case Kind::RowAdd: return "row " + std::to_string(j + 1) + " += row " + std::to_string(i + 1) + " * " + bracketed(factor, g);
	}
	return "?";
}

RelatorMatrix::RelatorMatrix(std::size_t rows, std::size_t cols, int truncation)
    : rows_(rows), cols_(cols), truncation_(truncation), entries_(rows * cols, AssocElement(truncation)), exact_(rows * cols, 1), origin_(cols)
{
	std::iota(origin_.begin(), origin_.end(), std::size_t{0});
}

RelatorMatrix RelatorMatrix::from_rows(const std::vector<std::vector<AssocElement>>& rows, int truncation)
{
	std::size_t cols = rows.empty() ? 0 : rows.front().size();
	RelatorMatrix m(rows.size(), cols, truncation);
	for (std::size_t r = 0; r < rows.size(); ++r) {
		if (rows[r].size() != cols) throw std::invalid_argument("relator matrix: ragged rows");
		for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
	}
	return m;
}

std::size_t RelatorMatrix::index(std::size_t r, std::size_t c) const
{
	if (r >= rows_ || c >= cols_) throw std::out_of_range("relator matrix: index out of range");
	return r * cols_ + c;
}

void RelatorMatrix::set(std::size_t r, std::size_t c, AssocElement value, bool exact)
{
	if (value.degree() > truncation_) throw std::invalid_argument("relator matrix: entry exceeds the truncation degree");
	entries_[index(r, c)] = std::move(value);
	exact_[index(r, c)] = exact ? 1 : 0;
}

std::vector<AssocElement> RelatorMatrix::row(std::size_t r) const
{
	std::vector<AssocElement> out;
	for (std::size_t c = 0; c < cols_; ++c) out.push_back(entry(r, c));
	return out;
}

RelatorMatrix RelatorMatrix::normalized(const QuotientContext& ctx) const
{
	RelatorMatrix out = *this;
	for (auto& e : out.entries_) e = ctx.normal_form(e);
	return out;
}

bool RelatorMatrix::same_entries(const RelatorMatrix& other) const
{
	return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_ && exact_ == other.exact_ && origin_ == other.origin_;
}

std::string RelatorMatrix::to_string(const GeneratorSet& g) const
{
	std::string out;
	for (std::size_t r = 0; r < rows_; ++r) {
		out += "[";
		for (std::size_t c = 0; c < cols_; ++c) {
			if (c) out += ", ";
			out += entry(r, c).to_string(g);
			if (!exact(r, c)) out += " (truncated)";
		}
		out += "]\n";
	}
	return out;
}

RelatorMatrix fox_matrix(const std::vector<LieElement>& relators)
{
	if (relators.empty()) throw std::invalid_argument("fox matrix: no relators");
	const FreeLieAlgebra* alg = relators.front().algebra();
	std::vector<AssocElement> images;
	for (const auto& r : relators) {
		if (r.algebra() != alg) throw std::invalid_argument("fox matrix: relators over different algebras");
		images.push_back(alg->lie_to_assoc(r));
	}
	return fox_matrix(images, alg->rank(), alg->truncation());
}

RelatorMatrix fox_matrix(const std::vector<AssocElement>& relators, int generators, int truncation)
{
	RelatorMatrix m(relators.size(), sz(generators), truncation);
	for (std::size_t i = 0; i < relators.size(); ++i) {
		if (relators[i].is_zero()) throw std::invalid_argument("fox matrix: zero relator");
		for (int j = 0; j < generators; ++j) m.set(i, sz(j), fox_derivative(relators[i], j));
	}
	return m;
}

RelatorMatrix apply_transform(const RelatorMatrix& m, const ElementaryTransform& t, const QuotientContext* ctx)
{
	using Kind = ElementaryTransform::Kind;
	const bool rows = t.kind != Kind::ColumnSwap;
	const std::size_t limit = rows ? m.rows_ : m.cols_;
	if (t.i >= limit || t.j >= limit) throw std::out_of_range("transform: index out of range");
	const int D = m.truncation_;
	auto nf = [&](const AssocElement& x) { return ctx ? ctx->normal_form(x) : x; };
	RelatorMatrix out = m;
	switch (t.kind) {
	case Kind::ColumnSwap:
		if (t.i == t.j) throw std::invalid_argument("transform: swap of a column with itself");
		for (std::size_t r = 0; r < m.rows_; ++r) {
			std::swap(out.entries_[out.index(r, t.i)], out.entries_[out.index(r, t.j)]);
			std::swap(out.exact_[out.index(r, t.i)], out.exact_[out.index(r, t.j)]);
		}
		std::swap(out.origin_[t.i], out.origin_[t.j]);
		break;
	case Kind::RowSwap:
		if (t.i == t.j) throw std::invalid_argument("transform: swap of a row with itself");
		for (std::size_t c = 0; c < m.cols_; ++c) {
			std::swap(out.entries_[out.index(t.i, c)], out.entries_[out.index(t.j, c)]);
			std::swap(out.exact_[out.index(t.i, c)], out.exact_[out.index(t.j, c)]);
		}
		break;
	case Kind::RowScale:
	case Kind::RowAdd: {
		if (t.kind == Kind::RowAdd && t.i >= t.j) throw std::invalid_argument("transform: row addition needs source row above target row");
		AssocElement c = ctx ? ctx->normal_form(ctx->coerce(t.factor)) : t.factor;
		if (t.kind == Kind::RowScale && (ctx ? ctx->is_zero(c) : c.is_zero()))
			throw std::invalid_argument("transform: row scaling by zero");
		const std::size_t target = t.kind == Kind::RowScale ? t.i : t.j;
		for (std::size_t k = 0; k < m.cols_; ++k) {
			AssocElement x = nf(m.entry(t.i, k));
			AssocElement product = (x * c).truncated(D);
			bool exact = m.exact(t.i, k) && (x.is_zero() || c.is_zero() || x.degree() + c.degree() <= D);
			if (t.kind == Kind::RowAdd) {
				product += nf(m.entry(t.j, k));
				exact = exact && m.exact(t.j, k);
			}
			out.entries_[out.index(target, k)] = nf(product);
			out.exact_[out.index(target, k)] = exact ? 1 : 0;
		}
		break;
	}
	}
	out.log_.push_back(t);
	return out;
}

RelatorMatrix replay(const RelatorMatrix& original, const std::vector<ElementaryTransform>& log, const QuotientContext* ctx)
{
	RelatorMatrix m = original;
	for (const auto& t : log) m = apply_transform(m, t, ctx);
	return m;
}

// ---------------------------------------------------------------------------

OrePair ore_right_multiple(const AssocElement& a, const AssocElement& b, const QuotientContext& ctx, int degree_bound)
{
	const GradedQuotient& q = ctx.quotient();
	const int D = q.truncation();
	Projected pa = project_all(a, q), pb = project_all(b, q);
	if (pa.degree < 0 || pb.degree < 0) throw std::invalid_argument("Ore multiple: zero element");
	if (degree_bound < 0) degree_bound = D;
	const int p = pa.degree, r = pb.degree;
	const int lo = std::max(p, r), hi = std::min(D, std::min(p, r) + degree_bound);
	if (lo > hi) throw OreExhausted("Ore multiple: no room below the truncation degree");
	Layout layout(q);
	DependencySearch search(layout.block, dims_upto(q, hi - p) + dims_upto(q, hi - r));
	std::vector<Unknown> columns;
	std::vector<Projected> row_a{pa}, row_b{pb};
	int next_a = 0, next_b = 0;
	for (int s = lo; s <= hi; ++s) {
		for (int owner = 0; owner < 2; ++owner) {
			int& next = owner == 0 ? next_a : next_b;
			const int top = s - (owner == 0 ? p : r);
			for (; next <= top; ++next) {
				for (std::size_t i = 0; i < q.dim(next); ++i) {
					columns.push_back({owner, next, i});
					auto found = owner == 0 ? search.add(layout.image(row_a, next, i, Scalar(1))) : search.add(layout.image(row_b, next, i, Scalar(-1)));
					if (!found) continue;
					OrePair out{assemble(columns, *found, 0, q), assemble(columns, *found, 1, q)};
					if (ctx.is_zero(out.beta1) || ctx.is_zero(out.beta2) || !ctx.congruent(a * out.beta1, b * out.beta2))
						throw std::logic_error("Ore multiple: solution fails verification");
					return out;
				}
			}
		}
	}
	throw OreExhausted("Ore multiple: none with product degree up to " + std::to_string(hi));
}

// ---------------------------------------------------------------------------

Valuation entry_valuation(const RelatorMatrix& m, std::size_t r, std::size_t c, const QuotientContext& ctx)
{
	if (!m.exact(r, c)) return Valuation::at_least(ctx.valuation_cap());
	return ctx.psi(m.entry(r, c));
}

namespace {

enum class EntryState { Zero, Nonzero, Unknown };

class Triangulator {
public:
	Triangulator(RelatorMatrix m, const QuotientContext& ctx, int degree_bound) : M(std::move(m)), ctx_(ctx), bound_(degree_bound) {}

	RelatorMatrix M;
	TriangularizationStats stats;

	EntryState state(std::size_t r, std::size_t c) const
	{
		if (!ctx_.is_zero(M.entry(r, c))) return EntryState::Nonzero;
		return M.exact(r, c) ? EntryState::Zero : EntryState::Unknown;
	}

	/// Clears entry (t, l) against the pivot (l, l), l < t.
	void eliminate(std::size_t l, std::size_t t)
	{
		EntryState s = state(t, l);
		if (s == EntryState::Zero) return;
		if (s == EntryState::Unknown || !M.exact(l, l) || !M.exact(t, l))
			throw TruncationLimit("triangularization: entry (" + std::to_string(t + 1) + "," + std::to_string(l + 1) + ") is not known exactly");
		OrePair pair = ore_right_multiple(M.entry(l, l), -M.entry(t, l), ctx_, bound_);
		++stats.ore_calls;
		stats.max_ore_degree = std::max({stats.max_ore_degree, pair.beta1.degree(), pair.beta2.degree()});
		if (!(pair.beta2 == AssocElement::one(M.truncation()))) apply(ElementaryTransform::row_scale(t, pair.beta2));
		apply(ElementaryTransform::row_add(l, t, pair.beta1));
		if (state(t, l) != EntryState::Zero) throw std::logic_error("triangularization: elimination left a nonzero entry");
	}

	void restricted(std::size_t count)
	{
		for (std::size_t l = 0; l < count; ++l)
			for (std::size_t t = l + 1; t < count; ++t) eliminate(l, t);
	}

	void clear_below(std::size_t count)
	{
		for (std::size_t l = 0; l < count; ++l)
			for (std::size_t t = count; t < M.rows(); ++t) eliminate(l, t);
	}

	std::size_t full(std::size_t start)
	{
		std::size_t l = start;
		while (l < M.rows() && l < M.cols()) {
			bool found = false, unknown = false;
			std::size_t br = 0, bc = 0;
			Valuation best;
			for (std::size_t c = l; c < M.cols(); ++c) {
				for (std::size_t r = l; r < M.rows(); ++r) {
					EntryState s = state(r, c);
					if (s == EntryState::Zero) continue;
					if (s == EntryState::Unknown) {
						unknown = true;
						continue;
					}
					Valuation v = entry_valuation(M, r, c, ctx_);
					if (!found || pivot_less(v, best)) {
						found = true;
						best = v;
						br = r;
						bc = c;
					}
				}
			}
			if (!found && !unknown) break;
			if (!found || !best.decidable())
				throw TruncationLimit("triangularization: every pivot candidate has a valuation beyond the truncation");
			if (br != l) apply(ElementaryTransform::row_swap(l, br));
			if (bc != l) apply(ElementaryTransform::column_swap(l, bc));
			for (std::size_t t = l + 1; t < M.rows(); ++t) eliminate(l, t);
			++l;
		}
		return l;
	}

	void check_restricted(std::size_t count) const
	{
		if (count > M.cols()) throw std::invalid_argument("restricted triangularization: more rows than columns");
		for (std::size_t k = 0; k < count; ++k) {
			if (entry_valuation(M, k, k, ctx_) != Valuation::finite(0))
				throw std::invalid_argument("restricted triangularization: diagonal entry vanishes modulo the top chain term");
			for (std::size_t c = 0; c < k; ++c) {
				Valuation v = entry_valuation(M, k, c, ctx_);
				if (v.is_finite() && v.value == 0)
					throw std::invalid_argument("restricted triangularization: entry below the diagonal survives modulo the top chain term");
			}
		}
	}

	TriangularizationResult finish(std::size_t rank) const
	{
		TriangularizationResult out{M, rank, {}, stats};
		for (std::size_t k = 0; k < rank; ++k) out.pivot_columns.push_back(M.column_origin()[k]);
		return out;
	}

private:
	void apply(const ElementaryTransform& t) { M = apply_transform(M, t, &ctx_); }

	const QuotientContext& ctx_;
	int bound_;
};

}  // namespace

TriangularizationResult triangularize(const RelatorMatrix& m, const QuotientContext& ctx, TriangularMode mode, int degree_bound)
{
	Triangulator t(m.normalized(ctx), ctx, degree_bound);
	if (mode == TriangularMode::Full) return t.finish(t.full(0));
	t.check_restricted(m.rows());
	t.restricted(m.rows());
	return t.finish(m.rows());
}

bool is_triangular_rank(const RelatorMatrix& m, const QuotientContext& ctx, std::size_t t)
{
	if (t > m.rows() || t > m.cols()) return false;
	for (std::size_t k = 0; k < m.rows(); ++k) {
		for (std::size_t c = 0; c < m.cols(); ++c) {
			bool zero = ctx.is_zero(m.entry(k, c));
			if (k < t && c == k && zero) return false;
			if ((k < t && c < k) || k >= t) {
				if (!zero) return false;
			}
		}
	}
	return true;
}

DominanceReport psi_dominance(const RelatorMatrix& m, std::size_t rank, const QuotientContext& ctx)
{
	DominanceReport out;
	for (std::size_t k = 0; k < rank; ++k) {
		Valuation diag = entry_valuation(m, k, k, ctx);
		for (std::size_t c = 0; c < m.cols(); ++c) {
			if (c == k) continue;
			Valuation other = entry_valuation(m, k, c, ctx);
			if (!diag.decidable() || !other.decidable()) {
				++out.sentinel_skipped;
				continue;
			}
			++out.comparisons;
			if (pivot_less(other, diag)) ++out.violations;
		}
	}
	return out;
}

RowWitness row_space_witness(const RelatorMatrix& original, const TriangularizationResult& result, std::size_t row_index,
                             const QuotientContext& ctx, int degree_bound)
{
	const GradedQuotient& q = ctx.quotient();
	const int D = q.truncation();
	if (degree_bound < 0) degree_bound = D;
	const RelatorMatrix& R = result.matrix;
	if (R.cols() != original.cols() || R.rows() != original.rows()) throw std::invalid_argument("row witness: shapes differ");
	if (row_index >= original.rows()) throw std::out_of_range("row witness: row index out of range");

	// Column permutation of the transforms applied after `original`.
	std::vector<std::size_t> perm(original.cols());
	std::iota(perm.begin(), perm.end(), std::size_t{0});
	for (std::size_t k = original.log().size(); k < R.log().size(); ++k) {
		const auto& t = R.log()[k];
		if (t.kind == ElementaryTransform::Kind::ColumnSwap) std::swap(perm[t.i], perm[t.j]);
	}
	std::vector<Projected> target;
	int target_degree = -1;
	for (std::size_t c = 0; c < original.cols(); ++c) {
		if (!original.exact(row_index, perm[c])) throw TruncationLimit("row witness: original row is not known exactly");
		target.push_back(project_all(original.entry(row_index, perm[c]), q));
		target_degree = std::max(target_degree, target.back().degree);
	}
	RowWitness out{AssocElement::one(D), std::vector<AssocElement>(R.rows(), AssocElement(D))};
	if (target_degree < 0) return out;

	std::vector<std::size_t> usable;
	std::vector<std::vector<Projected>> rows(R.rows());
	std::vector<int> row_degree(R.rows(), -1);
	for (std::size_t k = 0; k < result.rank; ++k) {
		bool exact = true;
		for (std::size_t c = 0; c < R.cols(); ++c) exact = exact && R.exact(k, c);
		if (!exact) continue;
		for (std::size_t c = 0; c < R.cols(); ++c) {
			rows[k].push_back(project_all(R.entry(k, c), q));
			row_degree[k] = std::max(row_degree[k], rows[k].back().degree);
		}
		if (row_degree[k] >= 0) usable.push_back(k);
	}

	const int hi = std::min(D, target_degree + degree_bound);
	Layout layout(q);
	std::size_t capacity = dims_upto(q, hi - target_degree);
	for (auto k : usable)
		if (hi >= row_degree[k]) capacity += dims_upto(q, hi - row_degree[k]);
	DependencySearch search(layout.block * R.cols(), capacity);
	std::vector<Unknown> columns;
	std::vector<int> next(R.rows() + 1, 0);
	const int d_owner = static_cast<int>(R.rows());
	for (int s = target_degree; s <= hi; ++s) {
		std::vector<int> owners(usable.begin(), usable.end());
		owners.push_back(d_owner);
		for (int owner : owners) {
			const bool is_d = owner == d_owner;
			const int top = s - (is_d ? target_degree : row_degree[sz(owner)]);
			for (int& e = next[sz(owner)]; e <= top; ++e) {
				for (std::size_t i = 0; i < q.dim(e); ++i) {
					columns.push_back({owner, e, i});
					auto found = is_d ? search.add(layout.image(target, e, i, Scalar(1))) : search.add(layout.image(rows[sz(owner)], e, i, Scalar(-1)));
					if (!found) continue;
					AssocElement d = assemble(columns, *found, d_owner, q);
					if (ctx.is_zero(d)) continue;
					out.d = d;
					for (auto k : usable) out.coefficients[k] = assemble(columns, *found, static_cast<int>(k), q);
					for (std::size_t c = 0; c < R.cols(); ++c) {
						AssocElement lhs = original.entry(row_index, perm[c]) * d;
						for (auto k : usable) lhs -= R.entry(k, c) * out.coefficients[k];
						if (!ctx.is_zero(lhs)) throw std::logic_error("row witness: combination fails verification");
					}
					return out;
				}
			}
		}
	}
	throw TruncationLimit("row witness: none with product degree up to " + std::to_string(hi));
}

// ---------------------------------------------------------------------------

CascadeResult cascade(const RelatorMatrix& m, const SeriesContext& series, const DegreewiseSubspace& R, const CascadeOptions& options)
{
	if (m.rows() >= m.cols()) throw std::invalid_argument("cascade: needs fewer relators than generators");
	const int s = series.spec().blocks();
	CascadeResult out;
	std::vector<ElementaryTransform> log;
	std::size_t previous = 0;
	for (int k = 0; k <= s; ++k) {
		QuotientContext ctx = k == 0 ? QuotientContext({series.term(1, 1)}, options.field)
		                             : QuotientContext::from_series(series, k, R, options.field);
		CascadeStep step;
		step.k = k;
		if (out.first_nonzero < 0) {
			Triangulator t(m.normalized(ctx), ctx, options.degree_bound);
			bool nonzero = false;
			for (std::size_t r = 0; r < m.rows() && !nonzero; ++r)
				for (std::size_t c = 0; c < m.cols() && !nonzero; ++c) nonzero = t.state(r, c) != EntryState::Zero;
			if (!nonzero) {
				out.steps.push_back(std::move(step));
				continue;
			}
			out.first_nonzero = k;
			step.rank = t.full(0);
			step.result = t.finish(step.rank);
		} else {
			Triangulator t(replay(m, log, &ctx).normalized(ctx), ctx, options.degree_bound);
			t.check_restricted(previous);
			t.restricted(previous);
			t.clear_below(previous);
			step.rank = t.full(previous);
			step.result = t.finish(step.rank);
		}
		log = step.result.log();
		previous = step.rank;
		out.steps.push_back(std::move(step));
	}
	if (out.first_nonzero >= 0) out.pivot_columns = out.steps.back().result.pivot_columns;
	std::vector<bool> pivot(m.cols(), false);
	for (auto c : out.pivot_columns) pivot[c] = true;
	for (std::size_t c = 0; c < m.cols(); ++c)
		if (!pivot[c]) out.complement.push_back(static_cast<int>(c));
	out.p = out.complement.size();
	return out;
}

}  // namespace liefreedom
