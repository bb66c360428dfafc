#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liefreedom/jacobian.hpp"
#include "liefreedom/series.hpp"

namespace liefreedom {

/// Generators, relators in N_11, series shape and ground field. The
/// truncation degree is the algebra's.
struct Presentation {
	std::shared_ptr<const FreeLieAlgebra> algebra;
	std::vector<LieElement> relators;
	SeriesSpec series;
	Field field;

	int generators() const { return algebra->rank(); }
	int truncation() const { return algebra->truncation(); }
	/// Throws std::invalid_argument on zero relators, relators over another
	/// algebra, or relators outside N_11.
	void validate(const SeriesContext& ctx) const;
};

enum class CheckMode { Theorem1, Theorem2, Fox, Triangularize };
std::string to_string(CheckMode m);

struct HypothesisResult {
	std::string name;
	bool holds = false;
	std::string detail;
};

struct DegreeResult {
	int d = 0;
	std::size_t dimA = 0;  // dim H ∩ (R + N_kl) ∩ F_{≤d}
	std::size_t dimB = 0;  // dim H ∩ N_kl ∩ F_{≤d}
	bool equal = false;
	bool conclusive = true;
};

struct TermResult {
	int k = 0;
	int l = 0;
	std::vector<DegreeResult> degrees;
	bool all_equal() const;
	/// Smallest degree with unequal dimensions.
	std::optional<int> first_unequal() const;
};

struct CheckReport {
	CheckMode mode = CheckMode::Theorem1;
	std::vector<HypothesisResult> hypotheses;
	std::vector<int> subset;     // generators spanning H
	std::string subset_source;   // "fixed", "cascade", "exhaustive"
	std::vector<TermResult> terms;
	int verified_up_to = 0;
	std::vector<std::string> warnings;
	std::vector<std::string> generator_names;
	std::optional<std::uint64_t> seed;
	/// Every assertion made by the check came out as expected.
	bool passed = false;

	bool all_equal() const;
	const TermResult* term(int k, int l) const;
};

/// i with r ∈ N_{1i} \ N_{1,i+1}; empty when r ∈ N_{1,m_1+1}.
std::optional<int> relator_weight(const LieElement& r, const SeriesContext& ctx);

struct IntersectionDims {
	std::size_t dimA = 0;
	std::size_t dimB = 0;
	bool equal = false;
};

/// dim(H ∩ (R + N)) and dim(H ∩ N) in F_{≤d}.
IntersectionDims intersection_oracle(const DegreewiseSubspace& H, const DegreewiseSubspace& R, const DegreewiseSubspace& N, int d);

/// Per-degree oracle table for every series term. Throws std::logic_error if
/// H ∩ N ⊄ H ∩ (R + N) anywhere.
std::vector<TermResult> intersection_sweep(const DegreewiseSubspace& H, const DegreewiseSubspace& R, const SeriesContext& series);

struct Theorem1Options {
	/// Generators of H; empty means the first n − 1.
	std::vector<int> subset;
};

/// One relator, n > 2.
CheckReport theorem1_check(const Presentation& p, const Theorem1Options& options = {});

struct Theorem2Options {
	int degree_bound = -1;  // Ore search bound, negative for the truncation
	bool force_exhaustive = false;
};

/// m < n.
CheckReport theorem2_check(const Presentation& p, const Theorem2Options& options = {});

/// First generator subset of size n − m, in lexicographic order, whose
/// subalgebra passes the oracle on every term and degree.
std::optional<std::vector<int>> exhaustive_subset_search(const Presentation& p);

}  // namespace liefreedom
