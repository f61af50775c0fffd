#pragma once

#include <filesystem>

#include "fmm/classifier.hpp"
#include "json.hpp"

namespace fmm {

/// JSON documents share the envelope {"format": "fmm", "version": 1,
/// "type": ...}. Real numbers are stored as decimal strings with 17
/// significant digits so that a save/load cycle is bit-exact. Families are
/// stored by builtin name.
nlohmann::json to_json(const DistributedMemory& mem);
nlohmann::json to_json(const ProjectionMemory& mem);
nlohmann::json to_json(const MaskedMemory& mem);
nlohmann::json to_json(const MemoryModel& model);
nlohmann::json to_json(const MemoryBank& bank);

/// Each loader throws FormatError on malformed documents.
DistributedMemory distributed_from_json(const nlohmann::json& doc);
ProjectionMemory projection_from_json(const nlohmann::json& doc);
MaskedMemory masked_from_json(const nlohmann::json& doc);
MemoryModel model_from_json(const nlohmann::json& doc);
MemoryBank bank_from_json(const nlohmann::json& doc);

void save_json(const std::filesystem::path& path, const nlohmann::json& doc);
nlohmann::json load_json(const std::filesystem::path& path);

}  // namespace fmm
