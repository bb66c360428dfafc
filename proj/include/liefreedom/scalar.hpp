#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <ostream>

#include <gmpxx.h>

namespace liefreedom {

/// Ground field selector. modulus == 0 means the rationals.
struct Field {
	std::uint64_t modulus = 0;

	static Field rationals() { return {}; }
	static Field prime(std::uint64_t p);

	bool is_rational() const { return modulus == 0; }
	std::string name() const;
	bool operator==(const Field&) const = default;
};

/// Exact element of the ground field.
///
/// Rationals use an int64 numerator/denominator pair and switch to GMP on
/// overflow. Residues mod p carry their modulus; a rational constant combined
/// with a residue is reduced into that residue's field, so literals like
/// Scalar(1) work in either field.
class Scalar {
public:
	Scalar() = default;
	Scalar(long long v) : num_(v) {}
	Scalar(int v) : num_(v) {}
	static Scalar fraction(long long num, long long den);
	static Scalar from_mpq(const mpq_class& q);
	static Scalar residue(std::uint64_t value, std::uint64_t p);

	/// Map a rational into the given field; throws if the denominator is not
	/// invertible mod p.
	Scalar in_field(const Field& f) const;

	bool is_zero() const;
	bool is_one() const;
	bool is_modular() const { return kind_ == Kind::Mod; }
	std::uint64_t modulus() const { return kind_ == Kind::Mod ? static_cast<std::uint64_t>(den_) : 0; }

	Scalar operator-() const;
	Scalar inverse() const;

	friend Scalar operator+(const Scalar& a, const Scalar& b);
	friend Scalar operator-(const Scalar& a, const Scalar& b);
	friend Scalar operator*(const Scalar& a, const Scalar& b);
	friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
	Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
	Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
	Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

	/// this -= f * x, the elimination kernel.
	void sub_mul(const Scalar& f, const Scalar& x);

	friend bool operator==(const Scalar& a, const Scalar& b);
	friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

	/// Total order used only for deterministic sorting (not a field order).
	friend bool canonical_less(const Scalar& a, const Scalar& b);

	std::string to_string() const;
	friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
	enum class Kind : std::uint8_t { Small, Big, Mod };

	mpq_class to_mpq() const;
	static Scalar normalize(mpq_class q);
	static Scalar make_small(__int128 num, __int128 den);
	static Scalar combine_mod(const Scalar& a, const Scalar& b, int op);
	std::uint64_t residue_in(std::uint64_t p) const;

	Kind kind_ = Kind::Small;
	long long num_ = 0;
	long long den_ = 1;  // modulus when kind_ == Mod
	std::shared_ptr<const mpq_class> big_;
};

}  // namespace liefreedom
