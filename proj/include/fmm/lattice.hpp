#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "fmm/connectives.hpp"

namespace fmm {

/// A point of the hypercube [0,1]^n, n >= 1.
class FuzzyVector {
 public:
  FuzzyVector() = default;
  /// Throws ConfigError when a component lies outside [0,1] and
  /// DimensionError when `components` is empty.
  explicit FuzzyVector(std::vector<double> components);
  FuzzyVector(std::initializer_list<double> components);

  static FuzzyVector filled(std::size_t n, double value);
  /// Saturates each component into [0,1] (NaN becomes 0).
  static FuzzyVector clamped(std::vector<double> components);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  const std::vector<double>& raw() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const FuzzyVector&, const FuzzyVector&) = default;

 private:
  std::vector<double> values_;
};

/// Dense row-major matrix with entries in [0,1].
class FuzzyMatrix {
 public:
  FuzzyMatrix() = default;
  FuzzyMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  FuzzyMatrix(std::size_t rows, std::size_t cols, std::vector<double> row_major);

  static FuzzyMatrix column(const FuzzyVector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Checked assignment; throws ConfigError outside [0,1].
  void set(std::size_t i, std::size_t j, double value);
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(data_).subspan(i * cols_, cols_);
  }
  const std::vector<double>& data() const noexcept { return data_; }

  friend bool operator==(const FuzzyMatrix&, const FuzzyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Ordered, nonempty list of equal-length fuzzy vectors a^1..a^k.
class FundamentalMemorySet {
 public:
  FundamentalMemorySet() = default;
  explicit FundamentalMemorySet(std::vector<FuzzyVector> memories);
  FundamentalMemorySet(std::initializer_list<FuzzyVector> memories);

  std::size_t size() const noexcept { return memories_.size(); }
  std::size_t dimension() const noexcept { return memories_.empty() ? 0 : memories_.front().size(); }
  const FuzzyVector& operator[](std::size_t xi) const { return memories_[xi]; }
  auto begin() const noexcept { return memories_.begin(); }
  auto end() const noexcept { return memories_.end(); }
  const std::vector<FuzzyVector>& memories() const noexcept { return memories_; }

 private:
  std::vector<FuzzyVector> memories_;
};

/// Operation tallies for the recall-phase complexity accounting.
///
/// A lattice reduction over m terms costs m - 1 comparisons. A connective
/// evaluated between a stored value and an input component additionally costs
/// one comparison for its branch test against the input. Passing a null
/// counter disables all bookkeeping.
struct OpCounter {
  std::uint64_t fuzzy_op_evals = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t arithmetic_ops = 0;

  void reset() noexcept { *this = OpCounter{}; }
  OpCounter& operator+=(const OpCounter& other) noexcept {
    fuzzy_op_evals += other.fuzzy_op_evals;
    comparisons += other.comparisons;
    arithmetic_ops += other.arithmetic_ops;
    return *this;
  }
  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

/// G = A o B with g_ij = max_xi C(a_i xi, b_xi j).
FuzzyMatrix max_c_product(const FuzzyMatrix& a, const FuzzyMatrix& b, const BinaryOp& conjunction,
                          OpCounter* counter = nullptr);
/// H = A . B with h_ij = min_xi D(a_i xi, b_xi j).
FuzzyMatrix min_d_product(const FuzzyMatrix& a, const FuzzyMatrix& b, const BinaryOp& disjunction,
                          OpCounter* counter = nullptr);

/// Matrix-vector forms used by distributed recall.
FuzzyVector max_c_product(const FuzzyMatrix& w, const FuzzyVector& x, const BinaryOp& conjunction,
                          OpCounter* counter = nullptr);
FuzzyVector min_d_product(const FuzzyMatrix& m, const FuzzyVector& x, const BinaryOp& disjunction,
                          OpCounter* counter = nullptr);

/// z_i = max_xi C(lambda_xi, a_i^xi).
FuzzyVector max_c_combination(std::span<const double> coefficients, const FundamentalMemorySet& memories,
                              const BinaryOp& conjunction, OpCounter* counter = nullptr);
/// y_i = min_xi D(theta_xi, a_i^xi).
FuzzyVector min_d_combination(std::span<const double> coefficients, const FundamentalMemorySet& memories,
                              const BinaryOp& disjunction, OpCounter* counter = nullptr);

FuzzyVector join(const FuzzyVector& a, const FuzzyVector& b);
FuzzyVector meet(const FuzzyVector& a, const FuzzyVector& b);
/// Componentwise a <= b.
bool precedes(const FuzzyVector& a, const FuzzyVector& b);
FuzzyVector negate(const FuzzyVector& x, const UnaryOp& negation);
FuzzyMatrix negate(const FuzzyMatrix& m, const UnaryOp& negation);
FundamentalMemorySet negate(const FundamentalMemorySet& memories, const UnaryOp& negation);

/// Throws DimensionError unless a and b have the same length.
void require_same_length(const FuzzyVector& a, const FuzzyVector& b, const char* what);

}  // namespace fmm
