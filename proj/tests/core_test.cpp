#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "strictrank/error.hpp"
#include "strictrank/io.hpp"
#include "strictrank/pc_matrix.hpp"
#include "test_support.hpp"

using namespace strictrank;
using strictrank::testing::from_logs;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected strictrank::Error";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(PairIndex, LexicographicOrder) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) EXPECT_EQ(pair_index(6, i, j), k++);
  EXPECT_EQ(k, pair_count(6));
}

TEST(NewPCMatrix, AcceptsConsistentWeightMatrix) {
  const auto a = PCMatrix::from_rows({{1, 2, 4}, {0.5, 1, 2}, {0.25, 0.5, 1}});
  EXPECT_EQ(a.size(), 3u);
  EXPECT_DOUBLE_EQ(a(0, 2), 4.0);
  EXPECT_DOUBLE_EQ(a(2, 0), 0.25);
  EXPECT_DOUBLE_EQ(a(1, 1), 1.0);
}

TEST(NewPCMatrix, RejectsTooSmall) {
  EXPECT_EQ(kind_of([] { PCMatrix::from_rows({{1, 2}, {0.5, 1}}); }), ErrorKind::TooSmall);
}

TEST(NewPCMatrix, NonReciprocalNamesLocationAndDeviation) {
  try {
    PCMatrix::from_rows({{1, 2, 4}, {0.6, 1, 2}, {0.25, 0.5, 1}});
    FAIL() << "expected NonReciprocal";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonReciprocal);
    EXPECT_EQ(e.row(), 0u);
    EXPECT_EQ(e.col(), 1u);
    ASSERT_TRUE(e.value());
    EXPECT_NEAR(*e.value(), 0.2, 1e-12);
  }
}

TEST(NewPCMatrix, RejectsNonPositiveAndBadDiagonal) {
  try {
    PCMatrix::from_rows({{1, 2, 4}, {0.5, 1, -2}, {0.25, 0.5, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonPositiveEntry);
    EXPECT_EQ(e.row(), 1u);
    EXPECT_EQ(e.col(), 2u);
  }
  try {
    PCMatrix::from_rows({{1, 2, 4}, {0.5, 1.1, 2}, {0.25, 0.5, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadDiagonal);
    EXPECT_EQ(e.row(), 1u);
  }
  EXPECT_EQ(kind_of([] { PCMatrix::from_rows({{1, 2, 4}, {0.5, 1}, {0.25, 0.5, 1}}); }),
            ErrorKind::Malformed);
}

TEST(NewPCMatrix, LooseReciprocityToleranceAcceptsRoundedInput) {
  const std::vector<std::vector<double>> raw{{1, 3, 0.5}, {0.33, 1, 2}, {2, 0.5, 1}};
  EXPECT_EQ(kind_of([&] { PCMatrix::from_rows(raw); }), ErrorKind::NonReciprocal);
  const auto a = PCMatrix::from_rows(raw, {0.02, 1e-9});
  EXPECT_DOUBLE_EQ(a(1, 0), 1.0 / 3.0);
}

TEST(NewPCMatrix, ReciprocityIsStructural) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = strictrank::testing::random_matrix(rng, 5, 4.0);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) EXPECT_EQ(a(j, i), 1.0 / a(i, j));
  }
}

TEST(Additive, CyclicMatrixHasLogsOneMinusOneOne) {
  const double e = std::exp(1.0);
  const auto a = PCMatrix::from_rows({{1, e, 1 / e}, {1 / e, 1, e}, {e, 1 / e, 1}});
  const auto l = to_additive(a);
  EXPECT_NEAR(l(0, 1), 1.0, 1e-15);
  EXPECT_NEAR(l(0, 2), -1.0, 1e-15);
  EXPECT_NEAR(l(1, 2), 1.0, 1e-15);
  EXPECT_EQ(l(2, 1), -l(1, 2));
  EXPECT_EQ(l(1, 1), 0.0);
}

TEST(Additive, OnesMapToZeros) {
  const auto l = to_additive(PCMatrix::ones(4));
  for (double x : l.upper()) EXPECT_EQ(x, 0.0);
}

TEST(Additive, WeightMatrixTriadSumVanishes) {
  const auto l = to_additive(PCMatrix::from_weights(std::vector<double>{1, 2, 4}));
  const double ln2 = std::log(2.0);
  EXPECT_NEAR(l(0, 1), -ln2, 1e-15);
  EXPECT_NEAR(l(0, 2), -2 * ln2, 1e-15);
  EXPECT_NEAR(l(1, 2), -ln2, 1e-15);
  EXPECT_NEAR(l(0, 1) + l(1, 2) - l(0, 2), 0.0, 1e-15);
}

TEST(Additive, RoundTripRelativeError) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const auto a = strictrank::testing::random_matrix(rng, n, 10.0);
    const auto back = from_additive(to_additive(a));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        EXPECT_LE(std::abs(back(i, j) - a(i, j)), 1e-12 * a(i, j));
  }
}

TEST(Additive, UpperCoordsAreExactInverses) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + trial % 4;
    const UpperTriangleVector v(n, strictrank::testing::random_logs(rng, n, 3.0));
    EXPECT_EQ(upper_coords(from_upper_coords(v)), v);
  }
  EXPECT_THROW(UpperTriangleVector(4, std::vector<double>(5)), Error);
}

TEST(PCMatrix, PermutedRelabelsItems) {
  const auto a = PCMatrix::from_weights(std::vector<double>{1, 2, 4});
  const std::vector<std::size_t> sigma{2, 0, 1};
  const auto b = a.permuted(sigma);
  EXPECT_DOUBLE_EQ(b(0, 1), a(2, 0));
  EXPECT_DOUBLE_EQ(b(1, 2), a(0, 1));
  EXPECT_DOUBLE_EQ(b(0, 2), a(2, 1));
}

TEST(MatrixIo, JsonUpperAndEntriesAgree) {
  const auto a = io::matrix_from_json(nlohmann::json::parse(R"({"n":3,"upper":[2,4,2]})"));
  const auto b = io::matrix_from_json(
      nlohmann::json::parse(R"({"n":3,"entries":[[1,2,4],[0.5,1,2],[0.25,0.5,1]]})"));
  EXPECT_EQ(a, b);
}

TEST(MatrixIo, JsonRoundTrip) {
  const auto a = from_logs(4, {0.3, -1.2, 2.5, 0.7, -0.1, 1.9});
  EXPECT_EQ(io::matrix_from_json(nlohmann::json::parse(io::matrix_to_json(a).dump())), a);
}

TEST(MatrixIo, JsonErrors) {
  using nlohmann::json;
  EXPECT_EQ(kind_of([] { io::matrix_from_json(json::parse(R"({"upper":[1]})")); }),
            ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::matrix_from_json(json::parse(R"({"n":2,"upper":[1]})")); }),
            ErrorKind::TooSmall);
  EXPECT_EQ(kind_of([] { io::matrix_from_json(json::parse(R"({"n":3,"upper":[1,2]})")); }),
            ErrorKind::Malformed);
  EXPECT_EQ(kind_of([] { io::matrix_from_json(json::parse(R"({"n":3,"upper":[1,0,2]})")); }),
            ErrorKind::NonPositiveEntry);
  EXPECT_EQ(kind_of([] { io::matrix_from_json(json::parse(R"({"n":3,"upper":[1,"x",2]})")); }),
            ErrorKind::ParseError);
  std::istringstream bad("{not json");
  EXPECT_EQ(kind_of([&] { io::read_matrix(bad, io::MatrixFormat::Json); }), ErrorKind::ParseError);
}

TEST(MatrixIo, CsvParsesPlainDecimals) {
  const auto a = io::matrix_from_csv("1, 2, 4\n0.5,1,2\r\n\n0.25,0.5,1\n");
  EXPECT_DOUBLE_EQ(a(0, 2), 4.0);
  const auto b = io::matrix_from_csv(io::matrix_to_csv(a));
  EXPECT_EQ(a, b);
}

TEST(MatrixIo, CsvRejectsExponentialNotationAndGarbage) {
  try {
    io::matrix_from_csv("1,e^2,1\n1,1,1\n1,1,1\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_EQ(e.row(), 0u);
    EXPECT_EQ(e.col(), 1u);
  }
  EXPECT_EQ(kind_of([] { io::matrix_from_csv("1,2\n0.5,1\n"); }), ErrorKind::TooSmall);
  EXPECT_EQ(kind_of([] { io::matrix_from_csv("1,,1\n1,1,1\n1,1,1\n"); }), ErrorKind::ParseError);
}
