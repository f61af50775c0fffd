#include <random>

#include "fmm/afmm.hpp"
#include "fmm/error.hpp"
#include "support.hpp"

using namespace fmm;

namespace {
const char* const kAdjointFamilies[] = {"godel", "goguen", "lukasiewicz", "gaines"};
}

TEST_CASE("FLA min-D weights for the Godel example are exact") {
  const auto mem = train_fla(support::set(oracle::example_memories()), builtin_family("godel"), MemoryKind::min_d);
  const std::vector<double> expected{0, .8, .8, .8, .7, 0, .7, .5, .7, .7, 0, .7, .8, .8, .8, 0};
  const auto& w = mem.weights().data();
  REQUIRE(w.size() == expected.size());
  for (std::size_t i = 0; i < w.size(); ++i) CHECK(std::abs(w[i] - expected[i]) <= 1e-12);
}

TEST_CASE("Godel min-D weights have a zero diagonal") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const auto mem = train_fla(support::set(support::random_set(rng, 1 + rng() % 5, 6)), builtin_family("godel"),
                               MemoryKind::min_d);
    for (std::size_t i = 0; i < 6; ++i) CHECK(mem.weights()(i, i) == 0.0);
  }
}

TEST_CASE("min-D recall of the example input for every family") {
  const auto A = support::set(oracle::example_memories());
  const auto x = support::vec(oracle::example_input());
  struct Case {
    const char* family;
    oracle::Vec expected;
  };
  for (const auto& c : {Case{"godel", {0.40, 0.30, 0.70, 0.70}}, Case{"goguen", {0.40, 0.30, 0.70, 0.53}},
                        Case{"lukasiewicz", {0.40, 0.30, 0.70, 0.40}}, Case{"gaines", {0.40, 0.30, 0.80, 0.70}}}) {
    CAPTURE(c.family);
    const auto y = train_fla(A, builtin_family(c.family), MemoryKind::min_d).recall(x);
    support::check_close(y.raw(), c.expected, 0.005);
    const auto M = oracle::fla_min_d(c.family, oracle::example_memories());
    support::check_close(y.raw(), oracle::min_d_recall(c.family, M, oracle::example_input()), 1e-12);
  }
}

TEST_CASE("weights match the oracle for both kinds") {
  std::mt19937_64 rng(11);
  for (const char* fam : kAdjointFamilies) {
    const auto A = support::random_set(rng, 3, 5);
    const auto W = train_fla(support::set(A), builtin_family(fam), MemoryKind::max_c);
    const auto M = train_fla(support::set(A), builtin_family(fam), MemoryKind::min_d);
    const auto Wo = oracle::fla_max_c(fam, A);
    const auto Mo = oracle::fla_min_d(fam, A);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        CHECK(W.weights()(i, j) == doctest::Approx(Wo[i][j]).epsilon(1e-12));
        CHECK(M.weights()(i, j) == doctest::Approx(Mo[i][j]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("perfect recall and idempotence") {
  std::mt19937_64 rng(3);
  for (const char* fam : kAdjointFamilies) {
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + rng() % 8, k = 1 + rng() % 5;
      const auto A = support::random_set(rng, k, n);
      for (auto kind : {MemoryKind::max_c, MemoryKind::min_d}) {
        const auto mem = train_fla(support::set(A), builtin_family(fam), kind);
        for (const auto& a : A) support::check_close(mem.recall(support::vec(a)).raw(), a, 1e-12);
        const auto x = support::vec(oracle::random_vec(rng, n));
        const auto y = mem.recall(x);
        support::check_close(mem.recall(y).raw(), y.raw(), 1e-12);
        // min-D recall lies below its input, max-C above (Lukasiewicz rounds).
        if (kind == MemoryKind::min_d) CHECK(oracle::leq(y.raw(), x.raw(), 1e-12));
        else CHECK(oracle::leq(x.raw(), y.raw(), 1e-12));
      }
    }
  }
}

TEST_CASE("recall is the nearest fixed point on a discrete lattice") {
  // Exhaustive over {0, .25, .5, .75, 1}^3 with two stored memories.
  const auto grid = oracle::grid_vectors(3, 0.25);
  std::mt19937_64 rng(5);
  for (const char* fam : {"godel", "lukasiewicz", "gaines"}) {
    for (int trial = 0; trial < 5; ++trial) {
      const oracle::Set A{grid[rng() % grid.size()], grid[rng() % grid.size()]};
      for (auto kind : {MemoryKind::min_d, MemoryKind::max_c}) {
        const auto mem = train_fla(support::set(A), builtin_family(fam), kind);
        oracle::Set fixed;
        for (const auto& z : grid) {
          if (oracle::max_abs_diff(mem.recall(support::vec(z)).raw(), z) == 0.0) fixed.push_back(z);
        }
        for (const auto& x : grid) {
          oracle::Vec best = kind == MemoryKind::min_d ? oracle::Vec(3, 0.0) : oracle::Vec(3, 1.0);
          for (const auto& z : fixed) {
            if (kind == MemoryKind::min_d && oracle::leq(z, x)) best = oracle::join(best, z);
            if (kind == MemoryKind::max_c && oracle::leq(x, z)) best = oracle::meet(best, z);
          }
          CHECK(mem.recall(support::vec(x)).raw() == best);
        }
      }
    }
  }
}

TEST_CASE("negation of a distributed memory") {
  std::mt19937_64 rng(9);
  for (const char* fam : kAdjointFamilies) {
    const auto A = support::random_set(rng, 3, 6);
    const auto mem = train_fla(support::set(A), builtin_family(fam), MemoryKind::max_c);
    const auto neg = negation_of(mem);
    CHECK(neg.kind() == MemoryKind::min_d);
    for (int t = 0; t < 100; ++t) {
      const auto x = support::vec(oracle::random_vec(rng, 6));
      const auto direct = negate(mem.recall(negate(x, standard_negation)), standard_negation);
      support::check_close(neg.recall(x).raw(), direct.raw(), 1e-12);
      support::check_close(negation_of(neg).recall(x).raw(), mem.recall(x).raw(), 1e-12);
    }
    // Equivalent to training the opposite kind on the negated memories.
    oracle::Set negA;
    for (const auto& a : A) {
      oracle::Vec b;
      for (double v : a) b.push_back(1.0 - v);
      negA.push_back(b);
    }
    const auto trained = train_fla(support::set(negA), builtin_family(fam), MemoryKind::min_d);
    for (int t = 0; t < 20; ++t) {
      const auto x = support::vec(oracle::random_vec(rng, 6));
      support::check_close(neg.recall(x).raw(), trained.recall(x).raw(), 1e-12);
    }
    const auto zero = FuzzyVector::filled(6, 0.0);
    support::check_close(neg.recall(zero).raw(),
                         negate(mem.recall(FuzzyVector::filled(6, 1.0)), standard_negation).raw(), 1e-12);
  }
}

TEST_CASE("configuration errors") {
  const auto A = support::set(oracle::example_memories());
  CHECK_THROWS_AS(train_fla(A, builtin_family("compensatory_and"), MemoryKind::max_c), ConfigError);
  CHECK_THROWS_AS(train_fla(A, builtin_family("compensatory_and"), MemoryKind::min_d), ConfigError);
  CHECK_THROWS_AS(DistributedMemory(MemoryKind::max_c, FuzzyMatrix(2, 3, 0.0), builtin_family("godel")),
                  DimensionError);
  const auto mem = train_fla(A, builtin_family("godel"), MemoryKind::min_d);
  CHECK_THROWS_AS(mem.recall(FuzzyVector({0.1, 0.2})), DimensionError);
  CHECK(memory_kind_from_string(to_string(MemoryKind::min_d)) == MemoryKind::min_d);
  CHECK_THROWS(memory_kind_from_string("sideways"));
}

TEST_CASE("recall op counts") {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{8, 3}, {64, 10}}) {
    std::mt19937_64 rng(n);
    const auto A = support::random_set(rng, k, n);
    for (auto kind : {MemoryKind::max_c, MemoryKind::min_d}) {
      const auto mem = train_fla(support::set(A), builtin_family("lukasiewicz"), kind);
      OpCounter c;
      mem.recall(support::vec(oracle::random_vec(rng, n)), &c);
      CHECK(c.fuzzy_op_evals == n * n);
      CHECK(c.comparisons == (2 * n - 1) * n);
    }
  }
}
