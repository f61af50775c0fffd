#include "fmm/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "fmm/error.hpp"

namespace fmm {

namespace {

void check_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream msg;
    msg << what << " value " << v << " is outside [0,1]";
    throw ConfigError(msg.str());
  }
}

void tally(OpCounter* counter, std::uint64_t evals, std::uint64_t comparisons) {
  if (counter == nullptr) return;
  counter->fuzzy_op_evals += evals;
  counter->comparisons += comparisons;
}

std::string shape(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

FuzzyVector::FuzzyVector(std::vector<double> components) : values_(std::move(components)) {
  if (values_.empty()) throw DimensionError("fuzzy vector must have at least one component");
  for (double v : values_) check_unit(v, "fuzzy vector component");
}

FuzzyVector::FuzzyVector(std::initializer_list<double> components)
    : FuzzyVector(std::vector<double>(components)) {}

FuzzyVector FuzzyVector::filled(std::size_t n, double value) {
  return FuzzyVector(std::vector<double>(n, value));
}

FuzzyVector FuzzyVector::clamped(std::vector<double> components) {
  for (double& v : components) v = UnitScalar::clamped(v).value();
  return FuzzyVector(std::move(components));
}

FuzzyMatrix::FuzzyMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  check_unit(fill, "matrix fill");
}

FuzzyMatrix::FuzzyMatrix(std::size_t rows, std::size_t cols, std::vector<double> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) {
    throw DimensionError("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                         shape(rows, cols));
  }
  for (double v : data_) check_unit(v, "matrix entry");
}

FuzzyMatrix FuzzyMatrix::column(const FuzzyVector& v) { return FuzzyMatrix(v.size(), 1, v.raw()); }

void FuzzyMatrix::set(std::size_t i, std::size_t j, double value) {
  check_unit(value, "matrix entry");
  data_[i * cols_ + j] = value;
}

FundamentalMemorySet::FundamentalMemorySet(std::vector<FuzzyVector> memories)
    : memories_(std::move(memories)) {
  if (memories_.empty()) throw ConfigError("fundamental memory set must not be empty");
  const std::size_t n = memories_.front().size();
  if (n == 0) throw DimensionError("fundamental memories must not be empty vectors");
  for (std::size_t xi = 1; xi < memories_.size(); ++xi) {
    if (memories_[xi].size() != n) {
      throw DimensionError("fundamental memory " + std::to_string(xi + 1) + " has length " +
                           std::to_string(memories_[xi].size()) + ", expected " + std::to_string(n));
    }
  }
}

FundamentalMemorySet::FundamentalMemorySet(std::initializer_list<FuzzyVector> memories)
    : FundamentalMemorySet(std::vector<FuzzyVector>(memories)) {}

FuzzyMatrix max_c_product(const FuzzyMatrix& a, const FuzzyMatrix& b, const BinaryOp& conjunction,
                          OpCounter* counter) {
  if (a.cols() != b.rows() || a.cols() == 0) {
    throw DimensionError("max-C product of " + shape(a.rows(), a.cols()) + " and " +
                         shape(b.rows(), b.cols()));
  }
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  std::vector<double> out(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = conjunction(a(i, 0), b(0, j));
      for (std::size_t xi = 1; xi < k; ++xi) acc = std::max(acc, conjunction(a(i, xi), b(xi, j)));
      out[i * n + j] = acc;
    }
  }
  tally(counter, m * k * n, m * n * (2 * k - 1));
  return FuzzyMatrix(m, n, std::move(out));
}

FuzzyMatrix min_d_product(const FuzzyMatrix& a, const FuzzyMatrix& b, const BinaryOp& disjunction,
                          OpCounter* counter) {
  if (a.cols() != b.rows() || a.cols() == 0) {
    throw DimensionError("min-D product of " + shape(a.rows(), a.cols()) + " and " +
                         shape(b.rows(), b.cols()));
  }
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  std::vector<double> out(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = disjunction(a(i, 0), b(0, j));
      for (std::size_t xi = 1; xi < k; ++xi) acc = std::min(acc, disjunction(a(i, xi), b(xi, j)));
      out[i * n + j] = acc;
    }
  }
  tally(counter, m * k * n, m * n * (2 * k - 1));
  return FuzzyMatrix(m, n, std::move(out));
}

FuzzyVector max_c_product(const FuzzyMatrix& w, const FuzzyVector& x, const BinaryOp& conjunction,
                          OpCounter* counter) {
  if (w.cols() != x.size()) {
    throw DimensionError("max-C product of " + shape(w.rows(), w.cols()) + " matrix and length " +
                         std::to_string(x.size()) + " vector");
  }
  return FuzzyVector(max_c_product(w, FuzzyMatrix::column(x), conjunction, counter).data());
}

FuzzyVector min_d_product(const FuzzyMatrix& m, const FuzzyVector& x, const BinaryOp& disjunction,
                          OpCounter* counter) {
  if (m.cols() != x.size()) {
    throw DimensionError("min-D product of " + shape(m.rows(), m.cols()) + " matrix and length " +
                         std::to_string(x.size()) + " vector");
  }
  return FuzzyVector(min_d_product(m, FuzzyMatrix::column(x), disjunction, counter).data());
}

FuzzyVector max_c_combination(std::span<const double> coefficients, const FundamentalMemorySet& memories,
                              const BinaryOp& conjunction, OpCounter* counter) {
  if (coefficients.size() != memories.size() || memories.size() == 0) {
    throw DimensionError("max-C combination needs " + std::to_string(memories.size()) +
                         " coefficients, got " + std::to_string(coefficients.size()));
  }
  const std::size_t n = memories.dimension(), k = memories.size();
  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = conjunction(coefficients[0], memories[0][i]);
    for (std::size_t xi = 1; xi < k; ++xi) acc = std::max(acc, conjunction(coefficients[xi], memories[xi][i]));
    z[i] = acc;
  }
  tally(counter, n * k, n * (k - 1));
  return FuzzyVector(std::move(z));
}

FuzzyVector min_d_combination(std::span<const double> coefficients, const FundamentalMemorySet& memories,
                              const BinaryOp& disjunction, OpCounter* counter) {
  if (coefficients.size() != memories.size() || memories.size() == 0) {
    throw DimensionError("min-D combination needs " + std::to_string(memories.size()) +
                         " coefficients, got " + std::to_string(coefficients.size()));
  }
  const std::size_t n = memories.dimension(), k = memories.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = disjunction(coefficients[0], memories[0][i]);
    for (std::size_t xi = 1; xi < k; ++xi) acc = std::min(acc, disjunction(coefficients[xi], memories[xi][i]));
    y[i] = acc;
  }
  tally(counter, n * k, n * (k - 1));
  return FuzzyVector(std::move(y));
}

void require_same_length(const FuzzyVector& a, const FuzzyVector& b, const char* what) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(what) + ": length " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

FuzzyVector join(const FuzzyVector& a, const FuzzyVector& b) {
  require_same_length(a, b, "join");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return FuzzyVector(std::move(out));
}

FuzzyVector meet(const FuzzyVector& a, const FuzzyVector& b) {
  require_same_length(a, b, "meet");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return FuzzyVector(std::move(out));
}

bool precedes(const FuzzyVector& a, const FuzzyVector& b) {
  require_same_length(a, b, "comparison");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] <= b[i])) return false;
  }
  return true;
}

FuzzyVector negate(const FuzzyVector& x, const UnaryOp& negation) {
  std::vector<double> out(x.size());
  std::transform(x.begin(), x.end(), out.begin(), [&](double v) { return UnitScalar::clamped(negation(v)).value(); });
  return FuzzyVector(std::move(out));
}

FuzzyMatrix negate(const FuzzyMatrix& m, const UnaryOp& negation) {
  std::vector<double> out(m.data().size());
  std::transform(m.data().begin(), m.data().end(), out.begin(),
                 [&](double v) { return UnitScalar::clamped(negation(v)).value(); });
  return FuzzyMatrix(m.rows(), m.cols(), std::move(out));
}

FundamentalMemorySet negate(const FundamentalMemorySet& memories, const UnaryOp& negation) {
  std::vector<FuzzyVector> out;
  out.reserve(memories.size());
  for (const auto& a : memories) out.push_back(negate(a, negation));
  return FundamentalMemorySet(std::move(out));
}

}  // namespace fmm
