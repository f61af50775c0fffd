#include <cmath>

#include "fmm/error.hpp"
#include "fmm/noise.hpp"
#include "support.hpp"

using namespace fmm;

TEST_CASE("zero-strength corruption is the identity") {
  std::mt19937_64 rng(1);
  const auto x = support::vec(oracle::random_vec(rng, 50));
  CHECK(corrupt(x, {NoiseKind::salt_pepper, 0.0, 42}) == x);
  CHECK(corrupt(x, {NoiseKind::gaussian, 0.0, 42}) == x);
  CHECK(corrupt(x, {NoiseKind::motion_blur, 1.0, 42}, ImageGeometry{10, 5}) == x);
}

TEST_CASE("salt and pepper") {
  const std::size_t n = 20000;
  const auto x = FuzzyVector::filled(n, 0.5);
  const auto y = corrupt(x, {NoiseKind::salt_pepper, 0.5, 7});
  std::size_t flipped = 0, zeros = 0;
  for (double v : y) {
    if (v == 0.0 || v == 1.0) ++flipped;
    if (v == 0.0) ++zeros;
    CHECK((v == 0.0 || v == 1.0 || v == 0.5));
  }
  const double sd = std::sqrt(n * 0.25);
  CHECK(std::abs(static_cast<double>(flipped) - n * 0.5) < 3 * sd);
  // Equal odds between salt and pepper among the flipped components.
  CHECK(std::abs(static_cast<double>(zeros) - flipped * 0.5) < 3 * std::sqrt(flipped * 0.25));
}

TEST_CASE("Gaussian noise") {
  const std::size_t n = 20000;
  const auto x = FuzzyVector::filled(n, 0.5);
  const double var = 0.01;
  const auto y = corrupt(x, {NoiseKind::gaussian, var, 3});
  double mean = 0.0, sq = 0.0;
  for (double v : y) {
    CHECK((v >= 0.0 && v <= 1.0));
    mean += v;
    sq += (v - 0.5) * (v - 0.5);
  }
  mean /= n;
  CHECK(std::abs(mean - 0.5) < 3 * std::sqrt(var / n));
  CHECK(std::abs(sq / n - var) < 0.1 * var);
  const auto big = corrupt(x, {NoiseKind::gaussian, 0.5, 3});
  for (double v : big) CHECK((v >= 0.0 && v <= 1.0));
}

TEST_CASE("motion blur") {
  // One row: 0 0 1 0 0 with L=3 gives 0 1/3 1/3 1/3 0.
  const FuzzyVector row({0, 0, 1, 0, 0});
  support::check_close(corrupt(row, {NoiseKind::motion_blur, 3, 0}, ImageGeometry{5, 1}).raw(),
                       {0, 1.0 / 3, 1.0 / 3, 1.0 / 3, 0}, 1e-15);
  // Replicate padding at the border.
  const FuzzyVector edge({1, 0, 0});
  support::check_close(corrupt(edge, {NoiseKind::motion_blur, 3, 0}, ImageGeometry{3, 1}).raw(),
                       {2.0 / 3, 1.0 / 3, 0}, 1e-15);
  // Constant rows are preserved; rows do not mix.
  const FuzzyVector two_rows({0.2, 0.2, 0.2, 0.2, 0.9, 0.9, 0.9, 0.9});
  support::check_close(corrupt(two_rows, {NoiseKind::motion_blur, 9, 0}, ImageGeometry{4, 2}).raw(),
                       two_rows.raw(), 1e-15);
  CHECK_THROWS_AS(corrupt(row, {NoiseKind::motion_blur, 3, 0}), ConfigError);
  CHECK_THROWS_AS(corrupt(row, {NoiseKind::motion_blur, 3, 0}, ImageGeometry{2, 2}), ConfigError);
}

TEST_CASE("determinism and seeds") {
  std::mt19937_64 rng(2);
  const auto x = support::vec(oracle::random_vec(rng, 100));
  for (auto kind : {NoiseKind::salt_pepper, NoiseKind::gaussian}) {
    const NoiseSpec spec{kind, 0.2, 99};
    CHECK(corrupt(x, spec) == corrupt(x, spec));
    CHECK_FALSE(corrupt(x, spec) == corrupt(x, {kind, 0.2, 100}));
  }
  CHECK(derive_seed(10, 3) == (10u ^ 3u));
  // Pinned first draws guard against accidental changes to the generator.
  CHECK(corrupt(FuzzyVector::filled(8, 0.5), {NoiseKind::salt_pepper, 0.5, 0}).raw() ==
        std::vector<double>{0, 0.5, 0, 0.5, 0.5, 0, 0.5, 1});
  support::check_close(corrupt(FuzzyVector::filled(3, 0.5), {NoiseKind::gaussian, 0.01, 0}).raw(),
                       {0.5589378803736309, 0.4970888687337689, 0.47675099289482348}, 1e-15);
}

TEST_CASE("spec parsing and validation") {
  auto s = parse_noise_spec("salt_pepper:0.05", 4);
  CHECK(s.kind == NoiseKind::salt_pepper);
  CHECK(s.level == 0.05);
  CHECK(s.seed == 4);
  CHECK(parse_noise_spec("gaussian:0.01").kind == NoiseKind::gaussian);
  CHECK(parse_noise_spec("motion:9").level == 9.0);
  CHECK_THROWS_AS(parse_noise_spec("motion:21"), ConfigError);
  CHECK_THROWS_AS(parse_noise_spec("motion:2.5"), ConfigError);
  CHECK_THROWS_AS(parse_noise_spec("salt_pepper:0.6"), ConfigError);
  CHECK_THROWS_AS(parse_noise_spec("gaussian:-0.1"), ConfigError);
  CHECK_THROWS_AS(parse_noise_spec("gaussian"), ConfigError);
  CHECK_THROWS_AS(parse_noise_spec("speckle:0.1"), ConfigError);
  CHECK_THROWS_AS(parse_noise_spec("gaussian:abc"), ConfigError);
  CHECK(std::string(to_string(NoiseKind::motion_blur)) == "motion");
}
