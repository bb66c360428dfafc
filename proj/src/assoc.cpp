#include "liefreedom/assoc.hpp"

#include <algorithm>
#include <stdexcept>

namespace liefreedom {

AssocElement AssocElement::one(int truncation) { return constant(Scalar(1), truncation); }

AssocElement AssocElement::constant(const Scalar& c, int truncation)
{
	AssocElement a(truncation);
	a.add(Word{}, c);
	return a;
}

AssocElement AssocElement::word(Word w, const Scalar& c, int truncation)
{
	AssocElement a(truncation);
	a.add(w, c);
	return a;
}

AssocElement AssocElement::truncated(int d) const
{
	AssocElement out(std::min(d, truncation_));
	for (const auto& [w, c] : terms_) {
		if (w.length <= out.truncation_) out.terms_.emplace(w, c);
	}
	return out;
}

Scalar AssocElement::coefficient(const Word& w) const
{
	auto it = terms_.find(w);
	return it == terms_.end() ? Scalar(0) : it->second;
}

void AssocElement::add(const Word& w, const Scalar& c)
{
	if (c.is_zero() || w.length > truncation_) return;
	auto [it, inserted] = terms_.try_emplace(w, c);
	if (inserted) return;
	it->second += c;
	if (it->second.is_zero()) terms_.erase(it);
}

void AssocElement::add_scaled(const AssocElement& x, const Scalar& c)
{
	if (c.is_zero()) return;
	for (const auto& [w, v] : x.terms_) add(w, c * v);
}

int AssocElement::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.length; }

int AssocElement::min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.length; }

bool AssocElement::is_homogeneous() const { return degree() == min_degree(); }

AssocElement AssocElement::component(int d) const
{
	AssocElement out(truncation_);
	for (const auto& [w, c] : terms_) {
		if (w.length == d) out.terms_.emplace(w, c);
	}
	return out;
}

AssocElement AssocElement::operator-() const
{
	AssocElement out(truncation_);
	for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
	return out;
}

AssocElement& AssocElement::operator+=(const AssocElement& b)
{
	truncation_ = std::min(truncation_, b.truncation_);
	for (const auto& [w, c] : b.terms_) add(w, c);
	return *this;
}

AssocElement& AssocElement::operator-=(const AssocElement& b)
{
	truncation_ = std::min(truncation_, b.truncation_);
	for (const auto& [w, c] : b.terms_) add(w, -c);
	return *this;
}

AssocElement operator+(AssocElement a, const AssocElement& b) { return a += b; }
AssocElement operator-(AssocElement a, const AssocElement& b) { return a -= b; }

AssocElement operator*(const Scalar& c, const AssocElement& a)
{
	AssocElement out(a.truncation_);
	if (c.is_zero()) return out;
	for (const auto& [w, v] : a.terms_) out.terms_.emplace(w, c * v);
	return out;
}

AssocElement operator*(const AssocElement& a, const AssocElement& b)
{
	AssocElement out(std::min(a.truncation_, b.truncation_));
	for (const auto& [wa, ca] : a.terms_) {
		for (const auto& [wb, cb] : b.terms_) {
			if (wa.length + wb.length > out.truncation_) break;  // b's terms are length-sorted
			out.add(wa * wb, ca * cb);
		}
	}
	return out;
}

AssocElement mul(const AssocElement& a, const AssocElement& b) { return a * b; }

std::string AssocElement::to_string(const GeneratorSet& g) const
{
	if (terms_.empty()) return "0";
	std::string s;
	bool first = true;
	for (const auto& [w, c] : terms_) {
		std::string cs = c.to_string();
		bool neg = !cs.empty() && cs[0] == '-';
		if (!first) s += neg ? " - " : " + ";
		else if (neg) s += "-";
		if (neg) cs.erase(0, 1);
		first = false;
		if (w.empty()) {
			s += cs;
		} else {
			if (cs != "1") s += cs + "*";
			s += w.to_string(g);
		}
	}
	return s;
}

AssocElement fox_derivative(const AssocElement& u, int j)
{
	if (!u.constant_term().is_zero())
		throw std::domain_error("Fox derivative requires an element of the augmentation ideal (nonzero constant term)");
	AssocElement out(u.truncation());
	for (const auto& [w, c] : u.terms()) {
		if (w.first() == j) out.add(w.tail(), c);
	}
	return out;
}

}  // namespace liefreedom
