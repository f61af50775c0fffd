#include <filesystem>
#include <fstream>
#include <random>

#include "fmm/error.hpp"
#include "fmm/serialize.hpp"
#include "support.hpp"

using namespace fmm;
namespace fs = std::filesystem;

namespace {
std::vector<LabeledVector> random_dataset(std::mt19937_64& rng, std::size_t classes, std::size_t per, std::size_t n) {
  std::vector<LabeledVector> d;
  for (std::size_t c = 0; c < classes; ++c)
    for (std::size_t i = 0; i < per; ++i) d.push_back({"c" + std::to_string(c), support::vec(oracle::random_vec(rng, n))});
  return d;
}
}  // namespace

TEST_CASE("every model kind survives a JSON round trip bit-exactly") {
  std::mt19937_64 rng(31);
  const auto A = support::set(support::random_set(rng, 4, 7));
  for (auto type : {ModelType::afmm_max_c, ModelType::afmm_min_d, ModelType::pafmm_max_c, ModelType::pafmm_min_d,
                    ModelType::zadeh_max, ModelType::zadeh_min}) {
    for (bool mask : {false, true}) {
      for (const char* fam : {"godel", "goguen", "lukasiewicz", "gaines"}) {
        ModelConfig cfg;
        cfg.type = type;
        cfg.family = fam;
        cfg.mask = mask;
        cfg.inclusion_epsilon = 1.0 / 3.0;
        const auto model = build_model(A, cfg);
        const auto text = to_json(model).dump();
        const auto back = model_from_json(nlohmann::json::parse(text));
        CHECK(back.index() == model.index());
        CHECK(to_json(back).dump() == text);
        for (int t = 0; t < 10; ++t) {
          const auto x = support::vec(oracle::random_vec(rng, 7));
          CHECK(recall(back, x) == recall(model, x));
        }
      }
    }
  }
  const auto pc = ProjectionMemory::max_c(A, builtin_family("compensatory_and"));
  CHECK(projection_from_json(to_json(pc)).family()->name == "compensatory_and");
}

TEST_CASE("bank round trip gives identical classifications") {
  std::mt19937_64 rng(32);
  const auto data = random_dataset(rng, 4, 3, 12);
  const auto bank = build_bank(data, ModelConfig{});
  const auto dir = fs::path(FMM_TEST_DATA_DIR) / "serialize_scratch";
  fs::create_directories(dir);
  save_json(dir / "bank.json", to_json(bank));
  const auto back = bank_from_json(load_json(dir / "bank.json"));
  CHECK(back.size() == bank.size());
  for (int t = 0; t < 200; ++t) {
    const auto x = support::vec(oracle::random_vec(rng, 12));
    const auto a = classify(bank, x), b = classify(back, x);
    CHECK(a.label == b.label);
    CHECK(a.scores == b.scores);
  }
}

TEST_CASE("weights are stored as 17-digit decimal strings") {
  const auto mem = train_fla(support::set({{1.0 / 3.0, 0.2}, {0.7, 0.1}}), builtin_family("goguen"), MemoryKind::min_d);
  const auto j = to_json(mem);
  CHECK(j["format"] == "fmm");
  CHECK(j["type"] == "distributed");
  CHECK(j["kind"] == "min_d");
  CHECK(j["family"] == "goguen");
  CHECK(j["n"] == 2);
  REQUIRE(j["weights"].size() == 4);
  CHECK(j["weights"][0].is_string());
  CHECK(distributed_from_json(j).weights().data() == mem.weights().data());
}

TEST_CASE("malformed documents") {
  const auto A = support::set(oracle::example_memories());
  const auto good = to_json(ProjectionMemory::zadeh_max(A));
  CHECK_THROWS_AS(projection_from_json(nlohmann::json::array()), FormatError);
  auto j = good;
  j["format"] = "other";
  CHECK_THROWS_AS(projection_from_json(j), FormatError);
  j = good;
  j["version"] = 99;
  CHECK_THROWS_AS(projection_from_json(j), FormatError);
  j = good;
  j["memories"][0][1] = "abc";
  CHECK_THROWS_AS(projection_from_json(j), FormatError);
  j = good;
  j["memories"][0][1] = "1.5";
  CHECK_THROWS_AS(projection_from_json(j), FormatError);
  j = good;
  j["k"] = 5;
  CHECK_THROWS_AS(projection_from_json(j), FormatError);
  CHECK_THROWS_AS(distributed_from_json(good), FormatError);
  CHECK_THROWS_AS(model_from_json(nlohmann::json{{"type", "tree"}}), FormatError);
  j = to_json(train_fla(A, builtin_family("godel"), MemoryKind::min_d));
  j["family"] = "unknown";
  CHECK_THROWS_AS(distributed_from_json(j), FormatError);
  j.erase("n");
  CHECK_THROWS_AS(distributed_from_json(j), FormatError);

  const auto dir = fs::path(FMM_TEST_DATA_DIR) / "serialize_scratch";
  fs::create_directories(dir);
  std::ofstream(dir / "broken.json") << "{ not json";
  CHECK_THROWS_AS(load_json(dir / "broken.json"), FormatError);
  CHECK_THROWS_AS(load_json(dir / "absent.json"), FileError);
  CHECK_THROWS_AS(save_json(dir / "no_such_dir" / "x.json", good), FileError);
}
