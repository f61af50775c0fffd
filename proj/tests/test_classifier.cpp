#include "fmm/classifier.hpp"
#include "fmm/error.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace fmm;

namespace {
std::vector<LabeledVector> example_dataset() {
  std::vector<LabeledVector> d;
  const char* labels[] = {"a", "b", "c"};
  for (std::size_t i = 0; i < 3; ++i) {
    for (const auto& v : oracle::example_memories()) {
      oracle::Vec w = v;
      for (auto& c : w) c = std::min(1.0, c * 0.3 + 0.3 * static_cast<double>(i));
      d.push_back({labels[i], FuzzyVector(w)});
    }
  }
  return d;
}
}  // namespace

TEST_CASE("bank construction") {
  const auto bank = build_bank(example_dataset(), ModelConfig{});
  CHECK(bank.size() == 3);
  CHECK(bank.dimension() == 4);
  for (const auto& c : bank.classes()) CHECK(std::holds_alternative<MaskedMemory>(c.model));
  CHECK(bank.index_of("b") == 1);
  CHECK(bank.index_of("zzz") == 3);

  ModelConfig bad;
  bad.type = ModelType::pafmm_min_d;
  bad.family = "compensatory_and";
  CHECK_THROWS_AS(build_bank(example_dataset(), bad), ConfigError);
  bad.type = ModelType::afmm_min_d;
  CHECK_THROWS_AS(build_bank(example_dataset(), bad), ConfigError);

  CHECK_THROWS_AS(build_bank(std::vector<LabeledVector>{}, ModelConfig{}), ConfigError);
  ClassPatterns with_empty{{"x", {FuzzyVector({0.1})}}, {"y", {}}};
  CHECK_THROWS_AS(build_bank(with_empty, ModelConfig{}), ConfigError);
  std::vector<LabeledVector> mixed{{"x", FuzzyVector({0.1})}, {"y", FuzzyVector({0.1, 0.2})}};
  CHECK_THROWS_AS(build_bank(mixed, ModelConfig{}), DimensionError);
  const auto A = support::set(oracle::example_memories());
  CHECK_THROWS_AS(MemoryBank({{"x", ProjectionMemory::zadeh_max(A)}, {"x", ProjectionMemory::zadeh_max(A)}}, hamming()),
                  ConfigError);
  CHECK_THROWS_AS(MemoryBank({}, hamming()), ConfigError);
}

TEST_CASE("every model type builds and recalls stored patterns") {
  for (auto type : {ModelType::afmm_max_c, ModelType::afmm_min_d, ModelType::pafmm_max_c, ModelType::pafmm_min_d,
                    ModelType::zadeh_max, ModelType::zadeh_min}) {
    for (bool mask : {false, true}) {
      ModelConfig cfg;
      cfg.type = type;
      cfg.family = "godel";
      cfg.mask = mask;
      CAPTURE(to_string(type));
      CHECK(model_type_from_string(to_string(type)) == type);
      const auto model = build_model(support::set(oracle::example_memories()), cfg);
      CHECK(dimension(model) == 4);
      for (const auto& a : oracle::example_memories()) support::check_close(recall(model, support::vec(a)).raw(), a, 1e-12);
    }
  }
  CHECK_THROWS(model_type_from_string("hopfield"));
}

TEST_CASE("classification") {
  const auto data = example_dataset();
  const auto bank = build_bank(data, ModelConfig{});
  for (const auto& item : data) {
    const auto r = classify(bank, item.vector);
    CHECK(r.label == item.label);
    CHECK(r.scores.size() == 3);
    CHECK(r.scores[r.class_index] == 1.0);
  }
  CHECK_THROWS_AS(classify(bank, FuzzyVector({0.1})), DimensionError);

  // Two prototypes, a mixed-noise probe close to the first.
  ClassPatterns two{{"A", {FuzzyVector({0.2, 0.2})}}, {"B", {FuzzyVector({0.9, 0.9})}}};
  const auto tb = build_bank(two, ModelConfig{});
  const auto r = classify(tb, FuzzyVector({0.25, 0.3}));
  CHECK(r.label == "A");
  // Each class masks with its only memory and recalls it, so the scores are sigma(x, prototype).
  CHECK(r.scores[0] == doctest::Approx(1.0 - (0.05 + 0.1) / 2).epsilon(1e-12));
  CHECK(r.scores[1] == doctest::Approx(1.0 - (0.65 + 0.6) / 2).epsilon(1e-12));

  ClassPatterns one{{"only", {FuzzyVector({0.5, 0.5})}}};
  CHECK(classify(build_bank(one, ModelConfig{}), FuzzyVector({0.0, 1.0})).label == "only");

  ClassPatterns twins{{"first", {FuzzyVector({0.5, 0.5})}}, {"second", {FuzzyVector({0.5, 0.5})}}};
  CHECK(classify(build_bank(twins, ModelConfig{}), FuzzyVector({0.5, 0.5})).label == "first");
}

TEST_CASE("evaluation reports") {
  const auto data = example_dataset();
  const auto bank = build_bank(data, ModelConfig{});
  const auto report = evaluate(bank, data);
  CHECK(report.overall_rr == 1.0);
  CHECK(report.total == 9);
  CHECK(report.correct == 9);
  for (std::size_t i = 0; i < 3; ++i) {
    std::size_t row = 0;
    for (auto c : report.confusion[i]) row += c;
    CHECK(row == report.per_class_total[i]);
  }
  CHECK(report.to_csv().rfind("label,total,correct,rr\n", 0) == 0);
  const auto j = nlohmann::json::parse(report.to_json());
  CHECK(j.contains("overall_rr"));
  CHECK(j.contains("confusion"));

  // Every probe ties across identical class memories: all go to the first.
  ClassPatterns twins{{"first", {FuzzyVector({0.5, 0.5})}}, {"second", {FuzzyVector({0.5, 0.5})}}};
  const auto tb = build_bank(twins, ModelConfig{});
  std::vector<LabeledVector> probes{{"first", FuzzyVector({0.4, 0.6})}, {"second", FuzzyVector({0.6, 0.4})}};
  CHECK(evaluate(tb, probes).overall_rr == 0.5);

  CHECK_THROWS_AS(evaluate(bank, {}), ConfigError);
  CHECK_THROWS_AS(evaluate(bank, {{"nobody", FuzzyVector::filled(4, 0.5)}}), ConfigError);
}

TEST_CASE("first-N split and grouping") {
  const auto data = example_dataset();
  const auto [train, test] = split_first_n(data, 2);
  CHECK(train.size() == 6);
  CHECK(test.size() == 3);
  CHECK(train[0].vector == data[0].vector);
  CHECK(test[0].vector == data[2].vector);
  const auto groups = group_by_label(data);
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].first == "a");
  CHECK(groups[2].second.size() == 3);
}
