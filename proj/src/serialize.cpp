#include "fmm/serialize.hpp"

#include <cstdlib>
#include <fstream>

#include "fmm/encoding.hpp"
#include "fmm/error.hpp"

namespace fmm {

using nlohmann::json;

namespace {

constexpr int kVersion = 1;

json envelope(const char* type) { return json{{"format", "fmm"}, {"version", kVersion}, {"type", type}}; }

void expect_type(const json& doc, const char* type) {
  if (!doc.is_object() || doc.value("format", "") != "fmm") throw FormatError("not an fmm JSON document");
  if (doc.value("version", 0) != kVersion) throw FormatError("unsupported fmm document version");
  if (doc.value("type", "") != type) {
    throw FormatError(std::string("expected a '") + type + "' document, found '" + doc.value("type", "") + "'");
  }
}

json encode_reals(const std::vector<double>& values) {
  json arr = json::array();
  for (double v : values) arr.push_back(format_exact(v));
  return arr;
}

std::vector<double> decode_reals(const json& arr, std::size_t expected, const char* what) {
  if (!arr.is_array() || arr.size() != expected) {
    throw FormatError(std::string(what) + ": expected " + std::to_string(expected) + " values");
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const auto& item : arr) {
    if (!item.is_string()) throw FormatError(std::string(what) + ": values must be decimal strings");
    const std::string text = item.get<std::string>();
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || *end != '\0') throw FormatError(std::string(what) + ": '" + text + "' is not a number");
    out.push_back(v);
  }
  return out;
}

json encode_memories(const FundamentalMemorySet& memories) {
  json arr = json::array();
  for (const auto& a : memories) arr.push_back(encode_reals(a.raw()));
  return arr;
}

FundamentalMemorySet decode_memories(const json& arr, std::size_t k, std::size_t n) {
  if (!arr.is_array() || arr.size() != k) throw FormatError("memories: expected " + std::to_string(k) + " vectors");
  std::vector<FuzzyVector> out;
  for (const auto& row : arr) out.emplace_back(decode_reals(row, n, "memory"));
  return FundamentalMemorySet(std::move(out));
}

template <class T>
T field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

json to_json(const DistributedMemory& mem) {
  json doc = envelope("distributed");
  doc["kind"] = to_string(mem.kind());
  doc["family"] = mem.family().name;
  doc["n"] = mem.dimension();
  doc["weights"] = encode_reals(mem.weights().data());
  return doc;
}

json to_json(const ProjectionMemory& mem) {
  json doc = envelope("projection");
  doc["kind"] = to_string(mem.kind());
  if (mem.family()) doc["family"] = mem.family()->name;
  doc["epsilon"] = format_exact(mem.epsilon());
  doc["k"] = mem.memories().size();
  doc["n"] = mem.dimension();
  doc["memories"] = encode_memories(mem.memories());
  return doc;
}

json to_json(const MaskedMemory& mem) {
  json doc = envelope("masked");
  doc["inner"] = std::visit([](const auto& m) { return to_json(m); }, mem.inner());
  doc["similarity"] = mem.similarity().name;
  doc["polarity"] = to_string(mem.polarity());
  doc["strategy"] = to_string(mem.strategy());
  doc["k"] = mem.memories().size();
  doc["n"] = mem.dimension();
  doc["memories"] = encode_memories(mem.memories());
  return doc;
}

json to_json(const MemoryModel& model) {
  return std::visit([](const auto& m) { return to_json(m); }, model);
}

json to_json(const MemoryBank& bank) {
  json doc = envelope("bank");
  doc["similarity"] = bank.similarity().name;
  json classes = json::array();
  for (const auto& c : bank.classes()) classes.push_back({{"label", c.label}, {"model", to_json(c.model)}});
  doc["classes"] = std::move(classes);
  return doc;
}

DistributedMemory distributed_from_json(const json& doc) {
  expect_type(doc, "distributed");
  const auto n = field<std::size_t>(doc, "n");
  const auto kind = memory_kind_from_string(field<std::string>(doc, "kind"));
  auto weights = decode_reals(doc.at("weights"), n * n, "weights");
  try {
    return DistributedMemory(kind, FuzzyMatrix(n, n, std::move(weights)),
                             builtin_family(field<std::string>(doc, "family")));
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(std::string("invalid distributed memory: ") + e.what());
  }
}

ProjectionMemory projection_from_json(const json& doc) {
  expect_type(doc, "projection");
  const auto kind = projection_kind_from_string(field<std::string>(doc, "kind"));
  const auto k = field<std::size_t>(doc, "k");
  const auto n = field<std::size_t>(doc, "n");
  const double epsilon = decode_reals(json::array({doc.value("epsilon", std::string("0"))}), 1, "epsilon")[0];
  try {
    FundamentalMemorySet memories = decode_memories(doc.at("memories"), k, n);
    switch (kind) {
      case ProjectionKind::zadeh_max: return ProjectionMemory::zadeh_max(std::move(memories), epsilon);
      case ProjectionKind::zadeh_min: return ProjectionMemory::zadeh_min(std::move(memories), epsilon);
      case ProjectionKind::max_c:
        return ProjectionMemory::max_c(std::move(memories), builtin_family(field<std::string>(doc, "family")));
      case ProjectionKind::min_d:
        return ProjectionMemory::min_d(std::move(memories), builtin_family(field<std::string>(doc, "family")));
    }
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(std::string("invalid projection memory: ") + e.what());
  }
  throw FormatError("invalid projection kind");
}

MaskedMemory masked_from_json(const json& doc) {
  expect_type(doc, "masked");
  const json& inner_doc = doc.at("inner");
  InnerMemory inner = inner_doc.value("type", "") == "distributed" ? InnerMemory(distributed_from_json(inner_doc))
                                                                   : InnerMemory(projection_from_json(inner_doc));
  try {
    return MaskedMemory(std::move(inner),
                        decode_memories(doc.at("memories"), field<std::size_t>(doc, "k"), field<std::size_t>(doc, "n")),
                        similarity_by_name(field<std::string>(doc, "similarity")),
                        mask_polarity_from_string(field<std::string>(doc, "polarity")),
                        mask_strategy_from_string(field<std::string>(doc, "strategy")));
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(std::string("invalid masked memory: ") + e.what());
  }
}

MemoryModel model_from_json(const json& doc) {
  const std::string type = doc.is_object() ? doc.value("type", "") : "";
  if (type == "distributed") return distributed_from_json(doc);
  if (type == "projection") return projection_from_json(doc);
  if (type == "masked") return masked_from_json(doc);
  throw FormatError("unknown model type '" + type + "'");
}

MemoryBank bank_from_json(const json& doc) {
  expect_type(doc, "bank");
  std::vector<ClassMemory> classes;
  for (const auto& c : doc.at("classes")) {
    classes.push_back({field<std::string>(c, "label"), model_from_json(c.at("model"))});
  }
  try {
    return MemoryBank(std::move(classes), similarity_by_name(field<std::string>(doc, "similarity")));
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(std::string("invalid memory bank: ") + e.what());
  }
}

void save_json(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw FileError("cannot write '" + path.string() + "'");
  out << doc.dump(1) << '\n';
  if (!out) throw FileError("cannot write '" + path.string() + "'");
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

}  // namespace fmm
