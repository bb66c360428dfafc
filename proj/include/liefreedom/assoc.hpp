#pragma once

#include <map>
#include <string>

#include "liefreedom/scalar.hpp"
#include "liefreedom/word.hpp"

namespace liefreedom {

/// Element of the free associative algebra on the generators (the enveloping
/// algebra of the free Lie algebra), truncated above a fixed degree.
/// No zero coefficients are stored.
class AssocElement {
public:
	using Terms = std::map<Word, Scalar>;

	explicit AssocElement(int truncation = kMaxDegree) : truncation_(truncation) {}
	static AssocElement one(int truncation = kMaxDegree);
	static AssocElement constant(const Scalar& c, int truncation = kMaxDegree);
	static AssocElement word(Word w, const Scalar& c = Scalar(1), int truncation = kMaxDegree);
	static AssocElement generator(Letter a, int truncation = kMaxDegree) { return word(Word::letter(a), Scalar(1), truncation); }

	int truncation() const { return truncation_; }
	AssocElement truncated(int d) const;
	const Terms& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	Scalar coefficient(const Word& w) const;
	Scalar constant_term() const { return coefficient(Word{}); }

	/// Adds c·w; silently drops words above the truncation degree.
	void add(const Word& w, const Scalar& c);
	void add_scaled(const AssocElement& x, const Scalar& c);

	/// -1 for zero.
	int degree() const;
	int min_degree() const;
	bool is_homogeneous() const;
	AssocElement component(int d) const;

	AssocElement operator-() const;
	friend AssocElement operator+(AssocElement a, const AssocElement& b);
	friend AssocElement operator-(AssocElement a, const AssocElement& b);
	friend AssocElement operator*(const Scalar& c, const AssocElement& a);
	/// Concatenation product, truncated at the smaller truncation.
	friend AssocElement operator*(const AssocElement& a, const AssocElement& b);
	AssocElement& operator+=(const AssocElement& b);
	AssocElement& operator-=(const AssocElement& b);

	bool operator==(const AssocElement& b) const { return terms_ == b.terms_; }

	std::string to_string(const GeneratorSet& g) const;

private:
	Terms terms_;
	int truncation_;
};

AssocElement mul(const AssocElement& a, const AssocElement& b);

/// Left cofactor of y_j: the unique D_j(u) with u = Σ_j y_j D_j(u).
/// Throws std::domain_error when u has a constant term.
AssocElement fox_derivative(const AssocElement& u, int j);

}  // namespace liefreedom
