#include <gtest/gtest.h>

#include <random>

#include "liefreedom/linalg.hpp"

using namespace liefreedom;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi)
{
	std::uniform_int_distribution<int> dist(lo, hi);
	Matrix m(r, c);
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(dist(rng));
	return m;
}

std::vector<Vector> rows_of(const Matrix& m)
{
	std::vector<Vector> out;
	for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row_vector(i));
	return out;
}

Vector vec(std::initializer_list<int> xs)
{
	Vector v;
	for (int x : xs) v.emplace_back(x);
	return v;
}

}  // namespace

TEST(Scalar, RationalArithmeticIsExact)
{
	Scalar a = Scalar::fraction(3, 7);
	EXPECT_TRUE((a + (-a)).is_zero());
	EXPECT_TRUE((a * a.inverse()).is_one());
	EXPECT_EQ(Scalar::fraction(1, 2) + Scalar::fraction(1, 3), Scalar::fraction(5, 6));
	EXPECT_EQ(Scalar::fraction(2, -4).to_string(), "-1/2");
	EXPECT_THROW(Scalar(0).inverse(), std::domain_error);
}

TEST(Scalar, OverflowPromotesToBigRationals)
{
	Scalar big(1);
	for (int i = 0; i < 5; ++i) big *= Scalar(1000000007LL);
	Scalar back = big;
	for (int i = 0; i < 5; ++i) back = back / Scalar(1000000007LL);
	EXPECT_TRUE(back.is_one());
	EXPECT_EQ((big - big + Scalar(5)).to_string(), "5");
	mpq_class q("123456789012345678901234567890/7");
	EXPECT_EQ(Scalar::from_mpq(q) * Scalar(7), Scalar::from_mpq(mpq_class("123456789012345678901234567890")));
}

TEST(Scalar, PrimeFieldArithmetic)
{
	const std::uint64_t p = 101;
	Scalar a = Scalar::residue(37, p);
	EXPECT_TRUE((a * a.inverse()).is_one());
	EXPECT_TRUE((a + Scalar::residue(64, p)).is_zero());
	EXPECT_EQ(Scalar::fraction(1, 2).in_field(Field::prime(p)) * Scalar(2), Scalar::residue(1, p));
	EXPECT_THROW(Field::prime(100), std::invalid_argument);
	EXPECT_THROW(Scalar::fraction(1, 101).in_field(Field::prime(p)), std::domain_error);
	const std::uint64_t m61 = (1ull << 61) - 1;
	Scalar x = Scalar::residue(m61 - 2, m61);
	EXPECT_EQ(x * x, Scalar::residue(4, m61));
}

TEST(Rref, IdentityAndZeroAreFixed)
{
	auto id = rref(Matrix::identity(2));
	EXPECT_EQ(id.matrix, Matrix::identity(2));
	EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1}));
	auto z = rref(Matrix(2, 2));
	EXPECT_EQ(z.matrix, Matrix(2, 2));
	EXPECT_TRUE(z.pivots.empty());
}

TEST(Rref, HandEliminationExample)
{
	auto r = rref(Matrix::from_rows({vec({1, 2}), vec({2, 4})}, 2));
	EXPECT_EQ(r.matrix, Matrix::from_rows({vec({1, 2}), vec({0, 0})}, 2));
	EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, IdempotentAndPreservesRowSpace)
{
	std::mt19937_64 rng(11);
	for (int trial = 0; trial < 40; ++trial) {
		Matrix m = random_matrix(rng, 4, 6, -3, 3);
		auto once = rref(m);
		auto twice = rref(once.matrix);
		EXPECT_EQ(once.matrix, twice.matrix);
		EXPECT_EQ(SubspaceBasis::span(6, rows_of(m)), SubspaceBasis::span(6, rows_of(once.matrix)));
	}
}

TEST(Rref, PivotsAgreeOverRationalsAndLargePrime)
{
	std::mt19937_64 rng(5);
	const Field f = Field::prime(2147483647);
	for (int trial = 0; trial < 30; ++trial) {
		Matrix m = random_matrix(rng, 4, 5, -4, 4);
		Matrix mp(m.rows(), m.cols());
		for (std::size_t i = 0; i < m.rows(); ++i)
			for (std::size_t j = 0; j < m.cols(); ++j) mp(i, j) = m(i, j).in_field(f);
		EXPECT_EQ(rref(m).pivots, rref(mp).pivots);
	}
}

TEST(Kernel, VectorsAreAnnihilated)
{
	std::mt19937_64 rng(3);
	for (int trial = 0; trial < 20; ++trial) {
		Matrix m = random_matrix(rng, 3, 6, -2, 2);
		auto ker = kernel_basis(m);
		EXPECT_EQ(ker.size() + rank(m), 6u);
		for (const auto& x : ker) {
			for (std::size_t i = 0; i < m.rows(); ++i) {
				Scalar s;
				for (std::size_t j = 0; j < 6; ++j) s += m(i, j) * x[j];
				EXPECT_TRUE(s.is_zero());
			}
		}
	}
}

TEST(Membership, MatchesRankComparison)
{
	std::mt19937_64 rng(17);
	SubspaceBasis empty(3);
	EXPECT_TRUE(membership(vec({0, 0, 0}), empty));
	EXPECT_THROW(membership(vec({0, 0}), empty), std::invalid_argument);
	for (int trial = 0; trial < 50; ++trial) {
		Matrix m = random_matrix(rng, 2, 4, -2, 2);
		auto s = SubspaceBasis::span(4, rows_of(m));
		for (const auto& b : s.vectors()) EXPECT_TRUE(membership(b, s));
		Vector v = random_matrix(rng, 1, 4, -2, 2).row_vector(0);
		auto rows = rows_of(m);
		std::size_t before = rank(m);
		rows.push_back(v);
		std::size_t after = rank(Matrix::from_rows(rows, 4));
		EXPECT_EQ(membership(v, s), before == after);
	}
}

TEST(Intersect, TrivialCases)
{
	auto b = SubspaceBasis::span(3, {vec({1, 1, 0})});
	EXPECT_EQ(intersect(SubspaceBasis::full(3), b), b);
	auto l1 = SubspaceBasis::span(2, {vec({1, 0})});
	auto l2 = SubspaceBasis::span(2, {vec({1, 1})});
	EXPECT_TRUE(intersect(l1, l2).is_zero());
	EXPECT_THROW(intersect(l1, b), std::invalid_argument);
}

TEST(Intersect, DimensionFormulaOnRandomPairs)
{
	std::mt19937_64 rng(23);
	for (int trial = 0; trial < 50; ++trial) {
		auto a = SubspaceBasis::span(4, rows_of(random_matrix(rng, 3, 4, -2, 2)));
		auto b = SubspaceBasis::span(4, rows_of(random_matrix(rng, 2, 4, -2, 2)));
		auto c = intersect(a, b);
		EXPECT_EQ(c.dim() + sum(a, b).dim(), a.dim() + b.dim());
		EXPECT_TRUE(a.contains(c));
		EXPECT_TRUE(b.contains(c));
		if (a.dim() == 3 && b.dim() == 2) EXPECT_GE(c.dim(), 1u);
	}
}

TEST(ExtendBasis, Examples)
{
	auto plane = SubspaceBasis::span(3, {vec({1, 0, 0}), vec({0, 1, 0})});
	EXPECT_TRUE(extend_basis(plane, plane).empty());
	auto ext = extend_basis(SubspaceBasis(3), plane);
	ASSERT_EQ(ext.size(), 2u);
	EXPECT_EQ(ext[0], vec({1, 0, 0}));
	EXPECT_EQ(ext[1], vec({0, 1, 0}));
	auto diag = SubspaceBasis::span(3, {vec({1, 1, 0})});
	auto one = extend_basis(diag, plane);
	ASSERT_EQ(one.size(), 1u);
	auto rows = diag.vectors();
	rows.push_back(one[0]);
	EXPECT_EQ(SubspaceBasis::span(3, rows), plane);
	EXPECT_THROW(extend_basis(SubspaceBasis::span(3, {vec({0, 0, 1})}), plane), std::invalid_argument);
}
