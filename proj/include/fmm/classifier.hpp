#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "fmm/masking.hpp"
#include "fmm/metrics.hpp"
#include "fmm/model.hpp"

namespace fmm {

struct LabeledVector {
  std::string label;
  FuzzyVector vector;
};

struct ClassMemory {
  std::string label;
  MemoryModel model;
};

/// One autoassociative memory per class, in training order, plus the
/// similarity used to score recalled vectors against the input.
class MemoryBank {
 public:
  /// Throws ConfigError on an empty class list or duplicate labels and
  /// DimensionError when the class memories disagree on the vector length.
  MemoryBank(std::vector<ClassMemory> classes, SimilarityMeasure similarity);

  const std::vector<ClassMemory>& classes() const noexcept { return classes_; }
  const SimilarityMeasure& similarity() const noexcept { return similarity_; }
  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return classes_.size(); }
  /// Ordinal of `label`, or size() if absent.
  std::size_t index_of(const std::string& label) const;

 private:
  std::vector<ClassMemory> classes_;
  SimilarityMeasure similarity_;
  std::size_t dimension_ = 0;
};

using ClassPatterns = std::vector<std::pair<std::string, std::vector<FuzzyVector>>>;

/// Groups `dataset` by label in order of first appearance.
ClassPatterns group_by_label(const std::vector<LabeledVector>& dataset);

MemoryBank build_bank(const ClassPatterns& classes, const ModelConfig& config);
MemoryBank build_bank(const std::vector<LabeledVector>& dataset, const ModelConfig& config);

struct Classification {
  std::string label;
  std::size_t class_index = 0;
  /// sigma(x, M^i(x)) for every class i, in bank order.
  std::vector<double> scores;
};

/// Assigns x to the first class whose recall is most similar to x.
Classification classify(const MemoryBank& bank, const FuzzyVector& x, OpCounter* counter = nullptr);

struct EvalReport {
  std::vector<std::string> labels;
  std::vector<std::size_t> per_class_total;
  std::vector<std::size_t> per_class_correct;
  /// correct/total per class; 0 for classes without test items.
  std::vector<double> per_class_rr;
  std::size_t total = 0;
  std::size_t correct = 0;
  double overall_rr = 0.0;
  /// confusion[true][predicted], bank order.
  std::vector<std::vector<std::size_t>> confusion;
  std::chrono::duration<double> elapsed{0.0};

  /// Header `label,total,correct,rr`, one row per class.
  std::string to_csv() const;
  std::string to_json() const;
};

/// Classifies every test item. Test labels unknown to the bank raise
/// ConfigError; an empty test set raises ConfigError.
EvalReport evaluate(const MemoryBank& bank, const std::vector<LabeledVector>& test_set);

/// Splits a dataset so that the first `per_class` items of every label train
/// and the rest test.
std::pair<std::vector<LabeledVector>, std::vector<LabeledVector>> split_first_n(
    const std::vector<LabeledVector>& dataset, std::size_t per_class);

}  // namespace fmm
