#pragma once

#include <memory>
#include <string>
#include <vector>

#include "liefreedom/subspace.hpp"

namespace liefreedom {

/// N_11 = γ_c(F), then blocks of lower-central powers: N_{k,l} is the l-th
/// power of N_{k,1} and N_{k+1,1} = N_{k,m_k+1}.
struct SeriesSpec {
	int base_class = 1;
	std::vector<int> steps{1};

	void validate() const;
	int blocks() const { return static_cast<int>(steps.size()); }
	bool operator==(const SeriesSpec&) const = default;
};

class SeriesContext {
public:
	SeriesContext(SeriesSpec spec, std::shared_ptr<const FreeLieAlgebra> algebra);

	const SeriesSpec& spec() const { return spec_; }
	const FreeLieAlgebra& algebra() const { return *algebra_; }
	const std::shared_ptr<const FreeLieAlgebra>& algebra_ptr() const { return algebra_; }
	int truncation() const { return algebra_->truncation(); }

	/// N_{k,l} for 1 ≤ k ≤ s, 1 ≤ l ≤ m_k + 1.
	const DegreewiseSubspace& term(int k, int l) const;
	/// Deepest term N_{s,m_s+1}.
	const DegreewiseSubspace& last() const;
	/// Terms in series order, with N_{k,m_k+1} and N_{k+1,1} listed once.
	std::vector<std::pair<int, int>> term_indices() const;

	/// Set when the deepest term vanishes up to D, so the truncation cannot
	/// tell it apart from zero.
	bool final_term_vanishes() const { return final_term_vanishes_; }
	const std::vector<std::string>& warnings() const { return warnings_; }

private:
	SeriesSpec spec_;
	std::shared_ptr<const FreeLieAlgebra> algebra_;
	std::vector<std::vector<DegreewiseSubspace>> terms_;  // terms_[k-1][l-1]
	bool final_term_vanishes_ = false;
	std::vector<std::string> warnings_;
};

SeriesContext series_compute(const SeriesSpec& spec, std::shared_ptr<const FreeLieAlgebra> algebra);

/// γ_c(F) as a graded subspace.
DegreewiseSubspace lower_central_term(std::shared_ptr<const FreeLieAlgebra> algebra, int c);

/// Checks that every endomorphism sending a subset of generators to zero
/// maps every series term into itself.
bool elementary_endo_invariance_check(const SeriesContext& ctx);

}  // namespace liefreedom
