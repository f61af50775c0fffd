#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "fmm/afmm.hpp"
#include "fmm/masking.hpp"
#include "fmm/pafmm.hpp"

namespace fmm {

/// Any trained recall operator: distributed, projection, or a masked wrapper
/// around either.
using MemoryModel = std::variant<DistributedMemory, ProjectionMemory, MaskedMemory>;

FuzzyVector recall(const MemoryModel& model, const FuzzyVector& x, OpCounter* counter = nullptr);
std::size_t dimension(const MemoryModel& model);

enum class ModelType { afmm_max_c, afmm_min_d, pafmm_max_c, pafmm_min_d, zadeh_max, zadeh_min };

/// CLI spelling: afmm-max-c, afmm-min-d, pafmm-max-c, pafmm-min-d, zadeh-max, zadeh-min.
const char* to_string(ModelType type);
ModelType model_type_from_string(std::string_view text);

struct ModelConfig {
  ModelType type = ModelType::zadeh_max;
  /// Connective family; ignored by the Zadeh kinds.
  std::string family = "gaines";
  bool mask = true;
  MaskStrategy mask_strategy = MaskStrategy::similarity;
  std::string similarity = "hamming";
  double inclusion_epsilon = 0.0;
};

/// Trains one model on `memories`. Invalid combinations (for instance a
/// family with no disjunction asked for a min-D memory) raise ConfigError.
MemoryModel build_model(const FundamentalMemorySet& memories, const ModelConfig& config);

}  // namespace fmm
