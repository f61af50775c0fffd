#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <variant>

#include "fmm/afmm.hpp"
#include "fmm/lattice.hpp"
#include "fmm/pafmm.hpp"

namespace fmm {

/// A fuzzy similarity measure sigma: [0,1]^n x [0,1]^n -> [0,1].
struct SimilarityMeasure {
  using Fn = std::function<double(const FuzzyVector&, const FuzzyVector&, OpCounter*)>;

  std::string name;
  Fn fn;

  double operator()(const FuzzyVector& a, const FuzzyVector& b, OpCounter* counter = nullptr) const {
    return fn(a, b, counter);
  }
};

/// 1 - (1/n) sum |a_i - b_i|. Charges 2n + 1 arithmetic operations
/// (n differences, n - 1 sums, one division, one subtraction).
double hamming_similarity(const FuzzyVector& a, const FuzzyVector& b, OpCounter* counter = nullptr);

SimilarityMeasure hamming();
/// Currently only "hamming". Throws NotFoundError otherwise.
SimilarityMeasure similarity_by_name(std::string_view name);

/// Smallest index (0-based) attaining max_xi sigma(x, a^xi).
std::size_t select_mask_index(const FuzzyVector& x, const FundamentalMemorySet& memories,
                              const SimilarityMeasure& sigma, OpCounter* counter = nullptr);

/// Dilative masks take x v a^eta (for recalls that lie below their input);
/// erosive masks take x ^ a^eta (for recalls that lie above it).
enum class MaskPolarity { dilative, erosive };

/// How the mask memory a^eta is chosen. `similarity` picks the stored pattern
/// most similar to the raw input. `nmse_compare` scores every candidate mask
/// m = x v a^xi (or x ^ a^xi) by NMSE(m, x) + NMSE(m, a^xi) and takes the
/// smallest; a zero reference vector contributes its unnormalised squared
/// error.
enum class MaskStrategy { similarity, nmse_compare };

const char* to_string(MaskPolarity polarity);
const char* to_string(MaskStrategy strategy);
MaskPolarity mask_polarity_from_string(std::string_view text);
MaskStrategy mask_strategy_from_string(std::string_view text);

using InnerMemory = std::variant<DistributedMemory, ProjectionMemory>;

FuzzyVector recall(const InnerMemory& memory, const FuzzyVector& x, OpCounter* counter = nullptr);
std::size_t dimension(const InnerMemory& memory);
/// Polarity whose masked input the memory is tolerant to: dilative for
/// max-C/Zadeh-max projections and min-D distributed memories.
MaskPolarity natural_polarity(const InnerMemory& memory);

/// Noise-masking wrapper around a memory.
class MaskedMemory {
 public:
  /// Throws ConfigError when `polarity` does not match the inner memory and
  /// DimensionError when `memories` disagree with its length.
  MaskedMemory(InnerMemory inner, FundamentalMemorySet memories, SimilarityMeasure similarity,
               MaskPolarity polarity, MaskStrategy strategy = MaskStrategy::similarity);

  /// Masks with the projection memory's own fundamental memories and its
  /// natural polarity.
  static MaskedMemory wrap(ProjectionMemory inner, SimilarityMeasure similarity = hamming(),
                           MaskStrategy strategy = MaskStrategy::similarity);
  static MaskedMemory wrap(DistributedMemory inner, FundamentalMemorySet memories,
                           SimilarityMeasure similarity = hamming(),
                           MaskStrategy strategy = MaskStrategy::similarity);

  const InnerMemory& inner() const noexcept { return inner_; }
  const FundamentalMemorySet& memories() const noexcept { return memories_; }
  const SimilarityMeasure& similarity() const noexcept { return similarity_; }
  MaskPolarity polarity() const noexcept { return polarity_; }
  MaskStrategy strategy() const noexcept { return strategy_; }
  std::size_t dimension() const noexcept { return memories_.dimension(); }

  std::size_t mask_index(const FuzzyVector& x, OpCounter* counter = nullptr) const;
  FuzzyVector masked_input(const FuzzyVector& x, OpCounter* counter = nullptr) const;
  FuzzyVector recall(const FuzzyVector& x, OpCounter* counter = nullptr) const;

 private:
  InnerMemory inner_;
  FundamentalMemorySet memories_;
  SimilarityMeasure similarity_;
  MaskPolarity polarity_;
  MaskStrategy strategy_;
};

inline FuzzyVector masked_recall(const MaskedMemory& mem, const FuzzyVector& x, OpCounter* counter = nullptr) {
  return mem.recall(x, counter);
}

}  // namespace fmm
