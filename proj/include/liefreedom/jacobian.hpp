#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "liefreedom/envelope.hpp"
#include "liefreedom/series.hpp"

namespace liefreedom {

/// A computation needed information above the truncation degree.
struct TruncationLimit : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/// No Ore right multiple within the degree bound.
struct OreExhausted : TruncationLimit {
	using TruncationLimit::TruncationLimit;
};

struct ElementaryTransform {
	enum class Kind { ColumnSwap, RowSwap, RowScale, RowAdd };
	Kind kind = Kind::RowSwap;
	std::size_t i = 0;
	std::size_t j = 0;
	AssocElement factor;

	static ElementaryTransform column_swap(std::size_t i, std::size_t j) { return {Kind::ColumnSwap, i, j, AssocElement()}; }
	static ElementaryTransform row_swap(std::size_t i, std::size_t j) { return {Kind::RowSwap, i, j, AssocElement()}; }
	/// row i ← row i · c
	static ElementaryTransform row_scale(std::size_t i, AssocElement c) { return {Kind::RowScale, i, i, std::move(c)}; }
	/// row j ← row j + row i · c, i < j
	static ElementaryTransform row_add(std::size_t i, std::size_t j, AssocElement c) { return {Kind::RowAdd, i, j, std::move(c)}; }

	std::string to_string(const GeneratorSet& g) const;
};

/// Matrix over U(F) with the transforms applied to it so far. Entries are
/// known modulo words of degree above the truncation; an entry is exact
/// when no product feeding it lost terms to the truncation.
class RelatorMatrix {
public:
	RelatorMatrix() = default;
	RelatorMatrix(std::size_t rows, std::size_t cols, int truncation);
	static RelatorMatrix from_rows(const std::vector<std::vector<AssocElement>>& rows, int truncation);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	int truncation() const { return truncation_; }

	const AssocElement& entry(std::size_t r, std::size_t c) const { return entries_.at(index(r, c)); }
	bool exact(std::size_t r, std::size_t c) const { return exact_.at(index(r, c)) != 0; }
	void set(std::size_t r, std::size_t c, AssocElement value, bool exact = true);
	std::vector<AssocElement> row(std::size_t r) const;

	const std::vector<ElementaryTransform>& log() const { return log_; }
	/// Column c currently holds column column_origin()[c] of the matrix the
	/// log started from.
	const std::vector<std::size_t>& column_origin() const { return origin_; }

	/// Entries replaced by normal forms modulo the working ideal.
	RelatorMatrix normalized(const QuotientContext& ctx) const;
	/// Entries, exactness flags and column origins agree.
	bool same_entries(const RelatorMatrix& other) const;

	std::string to_string(const GeneratorSet& g) const;

private:
	friend RelatorMatrix apply_transform(const RelatorMatrix&, const ElementaryTransform&, const QuotientContext*);
	std::size_t index(std::size_t r, std::size_t c) const;

	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	int truncation_ = kMaxDegree;
	std::vector<AssocElement> entries_;
	std::vector<char> exact_;
	std::vector<std::size_t> origin_;
	std::vector<ElementaryTransform> log_;
};

/// Entry (i, j) = D_j(r_i).
RelatorMatrix fox_matrix(const std::vector<LieElement>& relators);
RelatorMatrix fox_matrix(const std::vector<AssocElement>& relators, int generators, int truncation);

/// Applies t and appends it to the log. With a context, touched rows are
/// kept in normal form and row-scale factors must be nonzero modulo the
/// working ideal.
RelatorMatrix apply_transform(const RelatorMatrix& m, const ElementaryTransform& t, const QuotientContext* ctx = nullptr);
RelatorMatrix replay(const RelatorMatrix& original, const std::vector<ElementaryTransform>& log, const QuotientContext* ctx = nullptr);

struct OrePair {
	AssocElement beta1;
	AssocElement beta2;
};

/// β1, β2 with a·β1 ≡ b·β2 modulo the working ideal, searched by increasing
/// product degree; β degrees at most degree_bound (negative: truncation).
OrePair ore_right_multiple(const AssocElement& a, const AssocElement& b, const QuotientContext& ctx, int degree_bound = -1);

enum class TriangularMode { Restricted, Full };

struct TriangularizationStats {
	std::size_t ore_calls = 0;
	int max_ore_degree = 0;
};

struct TriangularizationResult {
	RelatorMatrix matrix;
	std::size_t rank = 0;
	std::vector<std::size_t> pivot_columns;  // original indices, in pivot order
	TriangularizationStats stats;
	const std::vector<ElementaryTransform>& log() const { return matrix.log(); }
};

/// Full mode: pivots of minimal ψ, ties to the leftmost column, then the
/// topmost row. Restricted mode: no swaps; the matrix must be triangular of
/// full row rank modulo the top chain term.
TriangularizationResult triangularize(const RelatorMatrix& m, const QuotientContext& ctx, TriangularMode mode, int degree_bound = -1);

/// Diagonal entries k < t nonzero, entries left of the diagonal and rows
/// below t zero, modulo the working ideal at the truncation.
bool is_triangular_rank(const RelatorMatrix& m, const QuotientContext& ctx, std::size_t t);

/// ψ of an entry; inexact entries count as the sentinel.
Valuation entry_valuation(const RelatorMatrix& m, std::size_t r, std::size_t c, const QuotientContext& ctx);

struct DominanceReport {
	std::size_t comparisons = 0;
	std::size_t violations = 0;
	std::size_t sentinel_skipped = 0;
	bool holds() const { return violations == 0; }
};

/// ψ(b_kk) ≤ ψ(b_kn) for k < rank and every n ≠ k; comparisons with a
/// sentinel side are skipped and counted.
DominanceReport psi_dominance(const RelatorMatrix& m, std::size_t rank, const QuotientContext& ctx);

struct RowWitness {
	AssocElement d;
	std::vector<AssocElement> coefficients;  // per row of the result
};

/// Nonzero d with (original row, columns permuted as in the result)·d equal
/// to Σ_k (result row k)·coefficient_k modulo the working ideal.
RowWitness row_space_witness(const RelatorMatrix& original, const TriangularizationResult& result, std::size_t row_index,
                             const QuotientContext& ctx, int degree_bound = -1);

struct CascadeStep {
	int k = 0;
	std::size_t rank = 0;
	TriangularizationResult result;  // empty before the first nonzero quotient
};

struct CascadeResult {
	std::vector<CascadeStep> steps;  // k = 0, …, s
	int first_nonzero = -1;          // K, or -1 when every quotient kills M
	std::vector<std::size_t> pivot_columns;
	std::vector<int> complement;
	std::size_t p = 0;
};

struct CascadeOptions {
	Field field;
	int degree_bound = -1;
};

/// Ranks of M modulo R + N_{k,m_k+1} for k = 0, …, s (k = 0: modulo N_{1,1}),
/// each step refining the previous triangularization. R graded.
CascadeResult cascade(const RelatorMatrix& m, const SeriesContext& series, const DegreewiseSubspace& R, const CascadeOptions& options = {});

}  // namespace liefreedom
