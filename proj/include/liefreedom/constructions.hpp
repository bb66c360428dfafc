#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "liefreedom/envelope.hpp"

namespace liefreedom {

/// Raised when the input violates the hypothesis an operation needs.
struct HypothesisFailure : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

/// Fox-derivative data indexed by generator.
using FoxData = std::map<int, AssocElement>;

/// Given u_j ∈ U(F_K) with Σ y_j u_j ∈ N_U, returns v ∈ F_K ∩ N with
/// D_j(v) ≡ u_j (mod N_U) for j ∈ K. N a graded ideal of F.
LieElement lemma1_construct(const FoxData& u, const std::vector<int>& K, const DegreewiseSubspace& N);

/// Same for u_j ∈ U(F); the result lies in id_F(F_K ∩ N).
LieElement lemma2_construct(const FoxData& u, const std::vector<int>& K, const DegreewiseSubspace& N);

struct Decomposition {
	LieElement v0;         // in F_K
	LieElement v1;         // in id_F(F_K ∩ N)
	LieElement remainder;  // v - v0 - v1
	bool remainder_in_derived = false;
	int verified_up_to = 0;
};

/// D_k(v) ≡ 0 (mod N_U) for every generator k outside K.
bool theorem3_hypothesis(const LieElement& v, const std::vector<int>& K, const DegreewiseSubspace& N);

/// v ≡ v0 + v1 (mod [N, N]). Throws HypothesisFailure when some D_k(v),
/// k ∉ K, is not in N_U.
Decomposition theorem3_decompose(const LieElement& v, const std::vector<int>& K, const DegreewiseSubspace& N);

/// Membership in [N, N] for elements of N, decided two ways.
class DerivedIdealTest {
public:
	explicit DerivedIdealTest(const DegreewiseSubspace& N);
	/// All Fox derivatives lie in N_U.
	bool by_fox(const LieElement& v) const;
	/// Degreewise membership in [N, N].
	bool direct(const LieElement& v) const;
	const DegreewiseSubspace& derived() const { return derived_; }

private:
	void require_member(const LieElement& v) const;
	DegreewiseSubspace N_;
	DegreewiseSubspace derived_;
	NUCongruence congruence_;
};

/// Fox test for v ∈ [N, N]; cross-checked against direct membership
/// (std::logic_error on disagreement). v must lie in N.
bool derived_ideal_criterion(const LieElement& v, const DegreewiseSubspace& N);

struct Lemma4Witness {
	PBWMonomial monomial;
	std::size_t delta_index = 0;
	std::size_t mu_index = 0;
	/// False when the maximal pair did not give a unique monomial and the
	/// witness came from the exhaustive search.
	bool from_maximal_pair = true;
};

/// For strictly increasing lists of representatives (factors only Rest or
/// HOnly), finds a monomial with a Rest factor occurring in exactly one
/// product δ_i·μ_j. Empty iff every input lacks Rest factors.
std::optional<Lemma4Witness> lemma4_witness(const std::vector<PBWMonomial>& deltas, const std::vector<PBWMonomial>& mus,
                                            const AdaptedBasis& ab);

}  // namespace liefreedom
