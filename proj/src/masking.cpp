#include "fmm/masking.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fmm/error.hpp"
#include "fmm/metrics.hpp"

namespace fmm {

namespace {

double squared_distance(const FuzzyVector& a, const FuzzyVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

double guarded_nmse(const FuzzyVector& x, const FuzzyVector& reference) {
  double norm = 0.0;
  for (double v : reference) norm += v * v;
  const double err = squared_distance(x, reference);
  return norm > 0.0 ? err / norm : err;
}

FuzzyVector apply_mask(const FuzzyVector& x, const FuzzyVector& mask, MaskPolarity polarity) {
  return polarity == MaskPolarity::dilative ? join(x, mask) : meet(x, mask);
}

}  // namespace

double nmse(const FuzzyVector& x, const FuzzyVector& a) {
  require_same_length(x, a, "nmse");
  double norm = 0.0;
  for (double v : a) norm += v * v;
  if (norm == 0.0) throw DivisionByZeroError("nmse reference vector is the zero vector");
  return squared_distance(x, a) / norm;
}

double hamming_similarity(const FuzzyVector& a, const FuzzyVector& b, OpCounter* counter) {
  require_same_length(a, b, "hamming similarity");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  if (counter != nullptr) counter->arithmetic_ops += 2 * a.size() + 1;
  return UnitScalar::clamped(1.0 - sum / static_cast<double>(a.size())).value();
}

SimilarityMeasure hamming() { return SimilarityMeasure{"hamming", &hamming_similarity}; }

SimilarityMeasure similarity_by_name(std::string_view name) {
  if (name == "hamming") return hamming();
  throw NotFoundError("unknown similarity measure '" + std::string(name) + "'");
}

std::size_t select_mask_index(const FuzzyVector& x, const FundamentalMemorySet& memories,
                              const SimilarityMeasure& sigma, OpCounter* counter) {
  if (memories.size() == 0) throw ConfigError("mask selection needs at least one fundamental memory");
  std::size_t best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t xi = 0; xi < memories.size(); ++xi) {
    const double s = sigma(x, memories[xi], counter);
    if (s > best_score) {
      best_score = s;
      best = xi;
    }
  }
  return best;
}

const char* to_string(MaskPolarity polarity) {
  return polarity == MaskPolarity::dilative ? "dilative" : "erosive";
}

const char* to_string(MaskStrategy strategy) {
  return strategy == MaskStrategy::similarity ? "similarity" : "nmse-compare";
}

MaskPolarity mask_polarity_from_string(std::string_view text) {
  if (text == "dilative") return MaskPolarity::dilative;
  if (text == "erosive") return MaskPolarity::erosive;
  throw FormatError("unknown mask polarity '" + std::string(text) + "'");
}

MaskStrategy mask_strategy_from_string(std::string_view text) {
  if (text == "similarity") return MaskStrategy::similarity;
  if (text == "nmse-compare") return MaskStrategy::nmse_compare;
  throw ConfigError("unknown mask strategy '" + std::string(text) + "'");
}

FuzzyVector recall(const InnerMemory& memory, const FuzzyVector& x, OpCounter* counter) {
  return std::visit([&](const auto& m) { return m.recall(x, counter); }, memory);
}

std::size_t dimension(const InnerMemory& memory) {
  return std::visit([](const auto& m) { return m.dimension(); }, memory);
}

MaskPolarity natural_polarity(const InnerMemory& memory) {
  if (const auto* d = std::get_if<DistributedMemory>(&memory)) {
    return d->kind() == MemoryKind::min_d ? MaskPolarity::dilative : MaskPolarity::erosive;
  }
  const auto& p = std::get<ProjectionMemory>(memory);
  switch (p.kind()) {
    case ProjectionKind::max_c:
    case ProjectionKind::zadeh_max: return MaskPolarity::dilative;
    case ProjectionKind::min_d:
    case ProjectionKind::zadeh_min: return MaskPolarity::erosive;
  }
  return MaskPolarity::dilative;
}

MaskedMemory::MaskedMemory(InnerMemory inner, FundamentalMemorySet memories, SimilarityMeasure similarity,
                           MaskPolarity polarity, MaskStrategy strategy)
    : inner_(std::move(inner)),
      memories_(std::move(memories)),
      similarity_(std::move(similarity)),
      polarity_(polarity),
      strategy_(strategy) {
  if (memories_.size() == 0) throw ConfigError("masking needs at least one fundamental memory");
  if (memories_.dimension() != fmm::dimension(inner_)) {
    throw DimensionError("mask memories have length " + std::to_string(memories_.dimension()) +
                         ", inner memory has length " + std::to_string(fmm::dimension(inner_)));
  }
  if (polarity_ != natural_polarity(inner_)) {
    throw ConfigError(std::string(to_string(polarity_)) + " masking does not match a memory tolerant to " +
                      to_string(natural_polarity(inner_)) + " noise");
  }
  if (!similarity_.fn) throw ConfigError("masking needs a similarity measure");
}

MaskedMemory MaskedMemory::wrap(ProjectionMemory inner, SimilarityMeasure similarity, MaskStrategy strategy) {
  FundamentalMemorySet memories = inner.memories();
  InnerMemory wrapped(std::move(inner));
  const MaskPolarity polarity = natural_polarity(wrapped);
  return MaskedMemory(std::move(wrapped), std::move(memories), std::move(similarity), polarity, strategy);
}

MaskedMemory MaskedMemory::wrap(DistributedMemory inner, FundamentalMemorySet memories,
                                SimilarityMeasure similarity, MaskStrategy strategy) {
  InnerMemory wrapped(std::move(inner));
  const MaskPolarity polarity = natural_polarity(wrapped);
  return MaskedMemory(std::move(wrapped), std::move(memories), std::move(similarity), polarity, strategy);
}

std::size_t MaskedMemory::mask_index(const FuzzyVector& x, OpCounter* counter) const {
  if (x.size() != dimension()) {
    throw DimensionError("masked recall input has length " + std::to_string(x.size()) + ", expected " +
                         std::to_string(dimension()));
  }
  if (strategy_ == MaskStrategy::similarity) return select_mask_index(x, memories_, similarity_, counter);

  std::size_t best = 0;
  double best_score = std::numeric_limits<double>::infinity();
  for (std::size_t xi = 0; xi < memories_.size(); ++xi) {
    const FuzzyVector masked = apply_mask(x, memories_[xi], polarity_);
    const double score = guarded_nmse(masked, x) + guarded_nmse(masked, memories_[xi]);
    if (score < best_score) {
      best_score = score;
      best = xi;
    }
  }
  return best;
}

FuzzyVector MaskedMemory::masked_input(const FuzzyVector& x, OpCounter* counter) const {
  return apply_mask(x, memories_[mask_index(x, counter)], polarity_);
}

FuzzyVector MaskedMemory::recall(const FuzzyVector& x, OpCounter* counter) const {
  return fmm::recall(inner_, masked_input(x, counter), counter);
}

}  // namespace fmm
