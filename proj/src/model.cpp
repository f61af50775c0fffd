#include "fmm/model.hpp"

#include <string>

#include "fmm/error.hpp"

namespace fmm {

FuzzyVector recall(const MemoryModel& model, const FuzzyVector& x, OpCounter* counter) {
  return std::visit([&](const auto& m) { return m.recall(x, counter); }, model);
}

std::size_t dimension(const MemoryModel& model) {
  return std::visit([](const auto& m) { return m.dimension(); }, model);
}

const char* to_string(ModelType type) {
  switch (type) {
    case ModelType::afmm_max_c: return "afmm-max-c";
    case ModelType::afmm_min_d: return "afmm-min-d";
    case ModelType::pafmm_max_c: return "pafmm-max-c";
    case ModelType::pafmm_min_d: return "pafmm-min-d";
    case ModelType::zadeh_max: return "zadeh-max";
    case ModelType::zadeh_min: return "zadeh-min";
  }
  return "?";
}

ModelType model_type_from_string(std::string_view text) {
  for (ModelType t : {ModelType::afmm_max_c, ModelType::afmm_min_d, ModelType::pafmm_max_c,
                      ModelType::pafmm_min_d, ModelType::zadeh_max, ModelType::zadeh_min}) {
    if (text == to_string(t)) return t;
  }
  throw ConfigError("unknown model type '" + std::string(text) + "'");
}

MemoryModel build_model(const FundamentalMemorySet& memories, const ModelConfig& config) {
  auto family = [&] { return builtin_family(config.family); };
  const SimilarityMeasure sigma = similarity_by_name(config.similarity);

  switch (config.type) {
    case ModelType::afmm_max_c:
    case ModelType::afmm_min_d: {
      const MemoryKind kind = config.type == ModelType::afmm_max_c ? MemoryKind::max_c : MemoryKind::min_d;
      DistributedMemory mem = train_fla(memories, family(), kind);
      if (!config.mask) return mem;
      return MaskedMemory::wrap(std::move(mem), memories, sigma, config.mask_strategy);
    }
    case ModelType::pafmm_max_c:
    case ModelType::pafmm_min_d:
    case ModelType::zadeh_max:
    case ModelType::zadeh_min: break;
  }

  ProjectionMemory mem = [&] {
    switch (config.type) {
      case ModelType::pafmm_max_c: return ProjectionMemory::max_c(memories, family());
      case ModelType::pafmm_min_d: return ProjectionMemory::min_d(memories, family());
      case ModelType::zadeh_min: return ProjectionMemory::zadeh_min(memories, config.inclusion_epsilon);
      default: return ProjectionMemory::zadeh_max(memories, config.inclusion_epsilon);
    }
  }();
  if (!config.mask) return mem;
  return MaskedMemory::wrap(std::move(mem), sigma, config.mask_strategy);
}

}  // namespace fmm
