#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace liefreedom {

/// Hard limits of the packed word encoding: 4 bits per letter in 64 bits.
inline constexpr int kMaxGenerators = 16;
inline constexpr int kMaxDegree = 16;

using Letter = std::uint8_t;

/// Ordered, named free generators y_1 < y_2 < ... < y_n.
class GeneratorSet {
public:
	GeneratorSet() = default;
	explicit GeneratorSet(std::vector<std::string> names);
	/// y1, ..., yn
	static GeneratorSet standard(int n);

	int size() const { return static_cast<int>(names_.size()); }
	const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
	const std::vector<std::string>& names() const { return names_; }
	/// -1 when absent.
	int index_of(const std::string& name) const;

	bool operator==(const GeneratorSet&) const = default;

private:
	std::vector<std::string> names_;
};

/// A word in the generators, letters packed most significant first so that
/// words of equal length compare lexicographically by code.
struct Word {
	std::uint8_t length = 0;
	std::uint64_t code = 0;

	static Word letter(Letter a) { return {1, a}; }
	static Word from_letters(const std::vector<Letter>& letters);

	bool empty() const { return length == 0; }
	Letter at(int i) const { return static_cast<Letter>((code >> (4 * (length - 1 - i))) & 0xF); }
	Letter first() const { return at(0); }
	/// Word without its first letter.
	Word tail() const { return {static_cast<std::uint8_t>(length - 1), length > 1 ? code & ((1ull << (4 * (length - 1))) - 1) : 0}; }
	Word prefix(int len) const { return {static_cast<std::uint8_t>(len), code >> (4 * (length - len))}; }
	Word suffix(int len) const { return {static_cast<std::uint8_t>(len), len == 0 ? 0 : code & (len == 16 ? ~0ull : ((1ull << (4 * len)) - 1))}; }
	std::vector<Letter> letters() const;
	bool uses_only(const std::vector<bool>& allowed) const;

	/// Position of this word among all n^length words of its length.
	std::uint64_t rank(int n) const;
	static Word unrank(std::uint64_t r, int length, int n);

	friend Word operator*(Word a, Word b)
	{
		return {static_cast<std::uint8_t>(a.length + b.length), b.length == 16 ? b.code : (a.code << (4 * b.length)) | b.code};
	}
	/// Length first, then lexicographic.
	friend auto operator<=>(const Word& a, const Word& b)
	{
		if (auto c = a.length <=> b.length; c != 0) return c;
		return a.code <=> b.code;
	}
	friend bool operator==(const Word&, const Word&) = default;

	std::string to_string(const GeneratorSet& g) const;
};

struct WordHash {
	std::size_t operator()(const Word& w) const noexcept { return std::hash<std::uint64_t>{}(w.code * 31 + w.length); }
};

}  // namespace liefreedom
