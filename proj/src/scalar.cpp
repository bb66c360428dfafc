#include "liefreedom/scalar.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace liefreedom {

namespace {

constexpr __int128 kMax = std::numeric_limits<long long>::max();
constexpr __int128 kMin = -kMax;  // keep negation safe

bool fits(__int128 v) { return v <= kMax && v >= kMin; }

__int128 gcd128(__int128 a, __int128 b)
{
	if (a < 0) a = -a;
	if (b < 0) b = -b;
	while (b != 0) {
		__int128 t = a % b;
		a = b;
		b = t;
	}
	return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
	return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
	std::uint64_t r = 1 % p;
	while (e) {
		if (e & 1) r = mulmod(r, a, p);
		a = mulmod(a, a, p);
		e >>= 1;
	}
	return r;
}

bool is_prime(std::uint64_t p)
{
	if (p < 2) return false;
	for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
		if (p % q == 0) return p == q;
	}
	std::uint64_t d = p - 1;
	int s = 0;
	while ((d & 1) == 0) {
		d >>= 1;
		++s;
	}
	for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
		std::uint64_t x = powmod(a, d, p);
		if (x == 1 || x == p - 1) continue;
		bool composite = true;
		for (int i = 1; i < s; ++i) {
			x = mulmod(x, x, p);
			if (x == p - 1) {
				composite = false;
				break;
			}
		}
		if (composite) return false;
	}
	return true;
}

std::uint64_t mpz_residue(const mpz_class& z, std::uint64_t p)
{
	mpz_class r;
	mpz_class pp;
	mpz_set_ui(pp.get_mpz_t(), static_cast<unsigned long>(p));
	mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
	return static_cast<std::uint64_t>(mpz_get_ui(r.get_mpz_t()));
}

}  // namespace

Field Field::prime(std::uint64_t p)
{
	if (p >= (1ull << 62) || !is_prime(p))
		throw std::invalid_argument("field modulus must be a prime below 2^62, got " + std::to_string(p));
	return Field{p};
}

std::string Field::name() const { return is_rational() ? "Q" : "GF(" + std::to_string(modulus) + ")"; }

Scalar Scalar::make_small(__int128 num, __int128 den)
{
	if (den == 0) throw std::domain_error("division by zero");
	if (den < 0) {
		num = -num;
		den = -den;
	}
	__int128 g = gcd128(num, den);
	if (g > 1) {
		num /= g;
		den /= g;
	}
	if (fits(num) && fits(den)) {
		Scalar s;
		s.num_ = static_cast<long long>(num);
		s.den_ = static_cast<long long>(den);
		return s;
	}
	// Rare: build through GMP from the 128-bit halves.
	auto to_mpz = [](__int128 v) {
		bool neg = v < 0;
		unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
		mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
		mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
		mpz_class r = (hi << 64) + lo;
		return neg ? mpz_class(-r) : r;
	};
	return normalize(mpq_class(to_mpz(num), to_mpz(den)));
}

Scalar Scalar::fraction(long long num, long long den) { return make_small(num, den); }

Scalar Scalar::normalize(mpq_class q)
{
	q.canonicalize();
	if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
		Scalar s;
		s.num_ = q.get_num().get_si();
		s.den_ = q.get_den().get_si();
		if (s.num_ != std::numeric_limits<long long>::min()) return s;
	}
	Scalar s;
	s.kind_ = Kind::Big;
	s.big_ = std::make_shared<const mpq_class>(std::move(q));
	return s;
}

Scalar Scalar::from_mpq(const mpq_class& q) { return normalize(q); }

Scalar Scalar::residue(std::uint64_t value, std::uint64_t p)
{
	Scalar s;
	s.kind_ = Kind::Mod;
	s.num_ = static_cast<long long>(value % p);
	s.den_ = static_cast<long long>(p);
	return s;
}

mpq_class Scalar::to_mpq() const
{
	if (kind_ == Kind::Big) return *big_;
	if (kind_ == Kind::Mod) throw std::logic_error("residue has no rational value");
	return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::uint64_t Scalar::residue_in(std::uint64_t p) const
{
	if (kind_ == Kind::Mod) {
		if (static_cast<std::uint64_t>(den_) != p) throw std::invalid_argument("mixing residues of different fields");
		return static_cast<std::uint64_t>(num_);
	}
	std::uint64_t n, d;
	if (kind_ == Kind::Small) {
		long long r = num_ % static_cast<long long>(p);
		n = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p) : r);
		d = static_cast<std::uint64_t>(den_) % p;
	} else {
		n = mpz_residue(big_->get_num(), p);
		d = mpz_residue(big_->get_den(), p);
	}
	if (d == 0) throw std::domain_error("denominator not invertible in GF(" + std::to_string(p) + ")");
	return mulmod(n, powmod(d, p - 2, p), p);
}

Scalar Scalar::in_field(const Field& f) const
{
	if (f.is_rational()) {
		if (kind_ == Kind::Mod) throw std::invalid_argument("cannot lift a residue to Q");
		return *this;
	}
	return residue(residue_in(f.modulus), f.modulus);
}

bool Scalar::is_zero() const { return kind_ != Kind::Big && num_ == 0; }

bool Scalar::is_one() const
{
	if (kind_ == Kind::Small) return num_ == 1 && den_ == 1;
	if (kind_ == Kind::Mod) return num_ == 1;
	return false;
}

Scalar Scalar::operator-() const
{
	switch (kind_) {
	case Kind::Small: {
		Scalar s = *this;
		s.num_ = -num_;
		return s;
	}
	case Kind::Big: return normalize(-*big_);
	case Kind::Mod: return residue(num_ == 0 ? 0 : static_cast<std::uint64_t>(den_ - num_), static_cast<std::uint64_t>(den_));
	}
	return {};
}

Scalar Scalar::inverse() const
{
	if (is_zero()) throw std::domain_error("inverse of zero");
	switch (kind_) {
	case Kind::Small: return make_small(den_, num_);
	case Kind::Big: return normalize(1 / *big_);
	case Kind::Mod: {
		auto p = static_cast<std::uint64_t>(den_);
		return residue(powmod(static_cast<std::uint64_t>(num_), p - 2, p), p);
	}
	}
	return {};
}

Scalar Scalar::combine_mod(const Scalar& a, const Scalar& b, int op)
{
	std::uint64_t p = a.kind_ == Kind::Mod ? static_cast<std::uint64_t>(a.den_) : static_cast<std::uint64_t>(b.den_);
	std::uint64_t x = a.residue_in(p);
	std::uint64_t y = b.residue_in(p);
	switch (op) {
	case 0: return residue(x + y >= p ? x + y - p : x + y, p);
	case 1: return residue(x >= y ? x - y : x + p - y, p);
	default: return residue(mulmod(x, y, p), p);
	}
}

Scalar operator+(const Scalar& a, const Scalar& b)
{
	using K = Scalar::Kind;
	if (a.kind_ == K::Mod || b.kind_ == K::Mod) return Scalar::combine_mod(a, b, 0);
	if (a.kind_ == K::Small && b.kind_ == K::Small) {
		if (a.den_ == 1 && b.den_ == 1) {
			__int128 s = static_cast<__int128>(a.num_) + b.num_;
			if (fits(s)) return Scalar(static_cast<long long>(s));
		}
		return Scalar::make_small(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
		                          static_cast<__int128>(a.den_) * b.den_);
	}
	return Scalar::normalize(a.to_mpq() + b.to_mpq());
}

Scalar operator-(const Scalar& a, const Scalar& b)
{
	using K = Scalar::Kind;
	if (a.kind_ == K::Mod || b.kind_ == K::Mod) return Scalar::combine_mod(a, b, 1);
	if (a.kind_ == K::Small && b.kind_ == K::Small) {
		if (a.den_ == 1 && b.den_ == 1) {
			__int128 s = static_cast<__int128>(a.num_) - b.num_;
			if (fits(s)) return Scalar(static_cast<long long>(s));
		}
		return Scalar::make_small(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
		                          static_cast<__int128>(a.den_) * b.den_);
	}
	return Scalar::normalize(a.to_mpq() - b.to_mpq());
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
	using K = Scalar::Kind;
	if (a.kind_ == K::Mod || b.kind_ == K::Mod) return Scalar::combine_mod(a, b, 2);
	if (a.kind_ == K::Small && b.kind_ == K::Small) {
		if (a.den_ == 1 && b.den_ == 1) {
			__int128 s = static_cast<__int128>(a.num_) * b.num_;
			if (fits(s)) return Scalar(static_cast<long long>(s));
		}
		return Scalar::make_small(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
	}
	return Scalar::normalize(a.to_mpq() * b.to_mpq());
}

void Scalar::sub_mul(const Scalar& f, const Scalar& x)
{
	if (f.is_zero() || x.is_zero()) return;
	if (f.kind_ == Kind::Mod && x.kind_ == Kind::Mod && (kind_ == Kind::Mod || (kind_ == Kind::Small && num_ == 0))) {
		auto p = static_cast<std::uint64_t>(f.den_);
		if (kind_ != Kind::Mod) *this = residue(0, p);
		std::uint64_t t = mulmod(static_cast<std::uint64_t>(f.num_), static_cast<std::uint64_t>(x.num_), p);
		auto cur = static_cast<std::uint64_t>(num_);
		num_ = static_cast<long long>(cur >= t ? cur - t : cur + p - t);
		return;
	}
	*this = *this - f * x;
}

bool operator==(const Scalar& a, const Scalar& b)
{
	using K = Scalar::Kind;
	if (a.kind_ == K::Mod || b.kind_ == K::Mod) return (a - b).is_zero();
	if (a.kind_ == K::Small && b.kind_ == K::Small) return a.num_ == b.num_ && a.den_ == b.den_;
	if (a.kind_ != b.kind_) return false;  // normalized: Big never equals a Small value
	return *a.big_ == *b.big_;
}

bool canonical_less(const Scalar& a, const Scalar& b)
{
	using K = Scalar::Kind;
	if (a.kind_ == K::Mod || b.kind_ == K::Mod) {
		std::uint64_t p = a.kind_ == K::Mod ? static_cast<std::uint64_t>(a.den_) : static_cast<std::uint64_t>(b.den_);
		return a.residue_in(p) < b.residue_in(p);
	}
	return a.to_mpq() < b.to_mpq();
}

std::string Scalar::to_string() const
{
	switch (kind_) {
	case Kind::Small: return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
	case Kind::Big: return big_->get_str();
	case Kind::Mod: return std::to_string(num_);
	}
	return {};
}

}  // namespace liefreedom
