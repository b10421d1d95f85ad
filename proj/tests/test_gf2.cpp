#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "lights_out/errors.hpp"
#include "lights_out/gf2.hpp"
#include "support/reference.hpp"

using namespace lights_out;

namespace {

BitMatrix all_ones(std::size_t n) {
  std::vector<BitVector> rows(n, BitVector::ones(n));
  return BitMatrix::from_rows(rows);
}

BitMatrix from_text(std::vector<std::string_view> rows) { return BitMatrix::from_strings(rows); }

std::vector<std::string> texts(std::vector<BitVector> vs) {
  std::sort(vs.begin(), vs.end());
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

// Span of a basis, as sorted bitstrings.
std::vector<std::string> span_of(std::size_t n, const std::vector<BitVector>& basis) {
  return texts(enumerate_solutions(AffineSolutionSet{BitVector(n), basis}));
}

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::bernoulli_distribution coin(0.5);
  std::vector<BitVector> out;
  for (std::size_t r = 0; r < rows; ++r) {
    BitVector v(cols);
    for (std::size_t c = 0; c < cols; ++c) v.set(c, coin(rng));
    out.push_back(v);
  }
  return rows ? BitMatrix::from_rows(out) : BitMatrix(0, cols);
}

ref::Matrix dense(const BitMatrix& m) {
  ref::Matrix out(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.test(r, c);
  }
  return out;
}

}  // namespace

TEST(BitVector, TextFormPutsCoordinateZeroFirst) {
  const auto v = BitVector::from_string("100");
  EXPECT_TRUE(v.test(0));
  EXPECT_FALSE(v.test(2));
  EXPECT_EQ(v.to_string(), "100");
  EXPECT_EQ(BitVector::from_mask(3, 0b001).to_string(), "100");
  EXPECT_EQ(BitVector::ones(70).weight(), 70u);
  EXPECT_EQ(BitVector::ones(70).complement().weight(), 0u);
}

TEST(BitVector, RejectsBadCharacters) {
  EXPECT_THROW(BitVector::from_string("10x"), InputError);
  EXPECT_THROW(BitVector::from_string("1 0"), InputError);
}

TEST(BitVector, LengthMismatchIsAnError) {
  EXPECT_THROW(dot(BitVector(3), BitVector(4)), InputError);
  EXPECT_THROW(BitVector(3) ^= BitVector(2), InputError);
  EXPECT_THROW(BitVector(3).set(3), InputError);
}

TEST(BitVector, Parity) {
  EXPECT_FALSE(parity(BitVector::from_string("000")));
  EXPECT_TRUE(parity(BitVector::from_string("010")));
  EXPECT_FALSE(parity(BitVector::from_string("11011")));
}

TEST(BitVector, DotMatchesReferenceAcrossWordBoundary) {
  std::mt19937_64 rng(7);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 150;
    std::string a(n, '0'), b(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = coin(rng) ? '1' : '0';
      b[i] = coin(rng) ? '1' : '0';
    }
    EXPECT_EQ(dot(BitVector::from_string(a), BitVector::from_string(b)), ref::dot(a, b) == 1);
    std::size_t differ = 0;
    for (std::size_t i = 0; i < n; ++i) differ += a[i] != b[i];
    EXPECT_EQ((BitVector::from_string(a) ^ BitVector::from_string(b)).weight(), differ);
  }
}

TEST(BitVector, OrderingIsByLengthThenText) {
  EXPECT_LT(BitVector::from_string("11"), BitVector::from_string("000"));
  EXPECT_LT(BitVector::from_string("011"), BitVector::from_string("100"));
  EXPECT_LT(BitVector::from_string("100"), BitVector::from_string("101"));
}

TEST(Rank, SmallCases) {
  EXPECT_EQ(rank(BitMatrix::identity(3)), 3u);
  EXPECT_EQ(rank(all_ones(3)), 1u);
  EXPECT_EQ(rank(BitMatrix(2, 2)), 0u);
}

TEST(KernelBasis, AllOnesThreeByThreeSpansEvenWeightVectors) {
  const auto basis = kernel_basis(all_ones(3));
  EXPECT_EQ(basis.size(), 2u);
  EXPECT_EQ(span_of(3, basis), (std::vector<std::string>{"000", "011", "101", "110"}));
}

TEST(KernelBasis, IdentityHasEmptyKernel) { EXPECT_TRUE(kernel_basis(BitMatrix::identity(3)).empty()); }

TEST(KernelBasis, K2) {
  const auto basis = kernel_basis(all_ones(2));
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0].to_string(), "11");
}

TEST(SolveLinear, P3AllOnes) {
  const auto m = from_text({"110", "111", "011"});
  const auto s = solve_linear(m, BitVector::from_string("111"));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular.to_string(), "010");
  EXPECT_TRUE(s->kernel_basis.empty());
}

TEST(SolveLinear, K2InconsistentAndConsistent) {
  EXPECT_FALSE(solve_linear(all_ones(2), BitVector::from_string("10")));
  const auto s = solve_linear(all_ones(2), BitVector::from_string("11"));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular.to_string(), "10");
  ASSERT_EQ(s->kernel_basis.size(), 1u);
  EXPECT_EQ(s->kernel_basis[0].to_string(), "11");
}

TEST(SolveLinear, RejectsWrongLength) { EXPECT_THROW(solve_linear(all_ones(2), BitVector(3)), InputError); }

TEST(EnumerateSolutions, Cosets) {
  EXPECT_EQ(texts(enumerate_solutions({BitVector::from_string("10"), {BitVector::from_string("11")}})),
            (std::vector<std::string>{"01", "10"}));
  EXPECT_EQ(texts(enumerate_solutions({BitVector::from_string("010"), {}})), (std::vector<std::string>{"010"}));
}

TEST(EnumerateSolutions, CapIsAnErrorNotATruncation) {
  std::vector<BitVector> basis;
  for (std::size_t i = 0; i < 30; ++i) basis.push_back(BitVector::unit(30, i));
  EXPECT_THROW(enumerate_solutions({BitVector(30), basis}), CapacityError);
  EXPECT_THROW(enumerate_solutions({BitVector(3), {BitVector::unit(3, 0), BitVector::unit(3, 1)}}, 3),
               CapacityError);
}

TEST(RowReduction, RankMatchesReferenceOnRandomMatrices) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = rng() % 12;
    const std::size_t cols = 1 + rng() % 12;
    const auto m = random_matrix(rng, rows, cols);
    const RowReduction rr(m);
    EXPECT_EQ(rr.rank(), ref::rank(dense(m)));
    EXPECT_EQ(rr.nullity(), cols - rr.rank());
    for (const auto& k : rr.kernel_basis()) EXPECT_TRUE((m * k).none());
  }
}

TEST(RowReduction, KernelIsCompleteByEnumeration) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const auto m = random_matrix(rng, n, n);
    std::vector<std::string> brute;
    for (unsigned long long k = 0; k < (1ULL << n); ++k) {
      if ((m * BitVector::from_mask(n, k)).none()) brute.push_back(BitVector::from_mask(n, k).to_string());
    }
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(span_of(n, kernel_basis(m)), brute);
  }
}

TEST(RowReduction, SolveAgreesWithEnumerationForEveryRightHandSide) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto m = random_matrix(rng, n, n);
    const RowReduction rr(m);
    for (unsigned long long b = 0; b < (1ULL << n); ++b) {
      const auto bv = BitVector::from_mask(n, b);
      std::vector<std::string> brute;
      for (unsigned long long k = 0; k < (1ULL << n); ++k) {
        if (m * BitVector::from_mask(n, k) == bv) brute.push_back(BitVector::from_mask(n, k).to_string());
      }
      std::sort(brute.begin(), brute.end());
      const auto s = rr.solve(bv);
      if (brute.empty()) {
        EXPECT_FALSE(s);
      } else {
        ASSERT_TRUE(s);
        EXPECT_EQ(texts(enumerate_solutions(*s)), brute);
      }
    }
  }
}

TEST(BitMatrix, TransposeAndSymmetry) {
  const auto m = from_text({"110", "011"});
  EXPECT_EQ(m.transpose().to_string(), from_text({"10", "11", "01"}).to_string());
  EXPECT_FALSE(from_text({"10", "11"}).is_symmetric());
  EXPECT_TRUE(from_text({"11", "11"}).is_symmetric());
}
