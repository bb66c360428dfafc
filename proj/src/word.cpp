#include "liefreedom/word.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace liefreedom {

GeneratorSet::GeneratorSet(std::vector<std::string> names) : names_(std::move(names))
{
	if (names_.size() < 1 || names_.size() > static_cast<std::size_t>(kMaxGenerators))
		throw std::invalid_argument("generator count must be between 1 and " + std::to_string(kMaxGenerators));
	std::set<std::string> seen(names_.begin(), names_.end());
	if (seen.size() != names_.size()) throw std::invalid_argument("generator names must be distinct");
}

GeneratorSet GeneratorSet::standard(int n)
{
	std::vector<std::string> names;
	for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
	return GeneratorSet(std::move(names));
}

int GeneratorSet::index_of(const std::string& name) const
{
	auto it = std::find(names_.begin(), names_.end(), name);
	return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

Word Word::from_letters(const std::vector<Letter>& letters)
{
	if (letters.size() > static_cast<std::size_t>(kMaxDegree)) throw std::invalid_argument("word too long");
	Word w;
	for (Letter a : letters) {
		if (a >= kMaxGenerators) throw std::invalid_argument("letter out of range");
		w.code = (w.code << 4) | a;
		++w.length;
	}
	return w;
}

std::vector<Letter> Word::letters() const
{
	std::vector<Letter> out(length);
	for (int i = 0; i < length; ++i) out[static_cast<std::size_t>(i)] = at(i);
	return out;
}

bool Word::uses_only(const std::vector<bool>& allowed) const
{
	for (int i = 0; i < length; ++i) {
		if (!allowed[at(i)]) return false;
	}
	return true;
}

std::uint64_t Word::rank(int n) const
{
	std::uint64_t r = 0;
	for (int i = 0; i < length; ++i) r = r * static_cast<std::uint64_t>(n) + at(i);
	return r;
}

Word Word::unrank(std::uint64_t r, int length, int n)
{
	std::vector<Letter> letters(static_cast<std::size_t>(length));
	for (int i = length - 1; i >= 0; --i) {
		letters[static_cast<std::size_t>(i)] = static_cast<Letter>(r % static_cast<std::uint64_t>(n));
		r /= static_cast<std::uint64_t>(n);
	}
	return from_letters(letters);
}

std::string Word::to_string(const GeneratorSet& g) const
{
	if (length == 0) return "1";
	std::string s;
	for (int i = 0; i < length; ++i) {
		if (i) s += ' ';
		s += g.name(at(i));
	}
	return s;
}

}  // namespace liefreedom
