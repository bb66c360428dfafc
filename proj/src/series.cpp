#include "liefreedom/series.hpp"

#include <stdexcept>

namespace liefreedom {

void SeriesSpec::validate() const
{
	if (base_class < 1) throw std::invalid_argument("series base class must be at least 1");
	if (steps.empty()) throw std::invalid_argument("series needs at least one block");
	for (int m : steps)
		if (m < 1) throw std::invalid_argument("series step counts must be positive");
}

DegreewiseSubspace lower_central_term(std::shared_ptr<const FreeLieAlgebra> algebra, int c)
{
	return lower_central(DegreewiseSubspace::whole(std::move(algebra)), c);
}

SeriesContext::SeriesContext(SeriesSpec spec, std::shared_ptr<const FreeLieAlgebra> algebra)
    : spec_(std::move(spec)), algebra_(std::move(algebra))
{
	spec_.validate();
	DegreewiseSubspace head = lower_central_term(algebra_, spec_.base_class);
	for (int m : spec_.steps) {
		auto block = lower_central_powers(head, m + 1);
		head = block.back();
		terms_.push_back(std::move(block));
	}
	if (last().is_zero()) {
		final_term_vanishes_ = true;
		warnings_.push_back("deepest series term is zero up to degree " + std::to_string(truncation()) +
		                    "; the truncation cannot distinguish it from 0");
	}
}

const DegreewiseSubspace& SeriesContext::term(int k, int l) const
{
	if (k < 1 || k > spec_.blocks()) throw std::out_of_range("series block index out of range");
	const auto& block = terms_[static_cast<std::size_t>(k - 1)];
	if (l < 1 || l > static_cast<int>(block.size())) throw std::out_of_range("series term index out of range");
	return block[static_cast<std::size_t>(l - 1)];
}

const DegreewiseSubspace& SeriesContext::last() const { return terms_.back().back(); }

std::vector<std::pair<int, int>> SeriesContext::term_indices() const
{
	std::vector<std::pair<int, int>> out;
	for (int k = 1; k <= spec_.blocks(); ++k) {
		const int top = spec_.steps[static_cast<std::size_t>(k - 1)] + (k == spec_.blocks() ? 1 : 0);
		for (int l = 1; l <= top; ++l) out.emplace_back(k, l);
	}
	return out;
}

SeriesContext series_compute(const SeriesSpec& spec, std::shared_ptr<const FreeLieAlgebra> algebra)
{
	return SeriesContext(spec, std::move(algebra));
}

bool elementary_endo_invariance_check(const SeriesContext& ctx)
{
	const auto& alg = ctx.algebra();
	const int n = alg.rank();
	for (unsigned mask = 0; mask < (1u << n); ++mask) {
		std::vector<bool> killed(static_cast<std::size_t>(n));
		for (int j = 0; j < n; ++j) killed[static_cast<std::size_t>(j)] = (mask >> j) & 1u;
		for (auto [k, l] : ctx.term_indices()) {
			const auto& term = ctx.term(k, l);
			for (int d = 1; d <= ctx.truncation(); ++d) {
				for (const auto& x : term.basis(d)) {
					if (!term.contains(alg.kill_generators(x, killed))) return false;
				}
			}
		}
	}
	return true;
}

}  // namespace liefreedom
