#include "fmm/classifier.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <unordered_set>

#include "fmm/error.hpp"
#include "json.hpp"

namespace fmm {

MemoryBank::MemoryBank(std::vector<ClassMemory> classes, SimilarityMeasure similarity)
    : classes_(std::move(classes)), similarity_(std::move(similarity)) {
  if (classes_.empty()) throw ConfigError("memory bank needs at least one class");
  if (!similarity_.fn) throw ConfigError("memory bank needs a similarity measure");
  std::unordered_set<std::string> seen;
  dimension_ = fmm::dimension(classes_.front().model);
  for (const auto& c : classes_) {
    if (!seen.insert(c.label).second) throw ConfigError("duplicate class label '" + c.label + "'");
    if (fmm::dimension(c.model) != dimension_) {
      throw DimensionError("class '" + c.label + "' stores vectors of length " +
                           std::to_string(fmm::dimension(c.model)) + ", expected " + std::to_string(dimension_));
    }
  }
}

std::size_t MemoryBank::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].label == label) return i;
  }
  return classes_.size();
}

ClassPatterns group_by_label(const std::vector<LabeledVector>& dataset) {
  ClassPatterns groups;
  std::map<std::string, std::size_t> slot;
  for (const auto& item : dataset) {
    auto [it, inserted] = slot.try_emplace(item.label, groups.size());
    if (inserted) groups.emplace_back(item.label, std::vector<FuzzyVector>{});
    groups[it->second].second.push_back(item.vector);
  }
  return groups;
}

MemoryBank build_bank(const ClassPatterns& classes, const ModelConfig& config) {
  if (classes.empty()) throw ConfigError("cannot build a memory bank from an empty dataset");
  std::vector<ClassMemory> memories;
  memories.reserve(classes.size());
  std::size_t n = 0;
  for (const auto& [label, patterns] : classes) {
    if (patterns.empty()) throw ConfigError("class '" + label + "' has no training vectors");
    for (const auto& p : patterns) {
      if (n == 0) n = p.size();
      if (p.size() != n) {
        throw DimensionError("class '" + label + "' has a vector of length " + std::to_string(p.size()) +
                             ", expected " + std::to_string(n));
      }
    }
    memories.push_back({label, build_model(FundamentalMemorySet(patterns), config)});
  }
  return MemoryBank(std::move(memories), similarity_by_name(config.similarity));
}

MemoryBank build_bank(const std::vector<LabeledVector>& dataset, const ModelConfig& config) {
  return build_bank(group_by_label(dataset), config);
}

Classification classify(const MemoryBank& bank, const FuzzyVector& x, OpCounter* counter) {
  if (x.size() != bank.dimension()) {
    throw DimensionError("input has length " + std::to_string(x.size()) + ", bank stores length " +
                         std::to_string(bank.dimension()));
  }
  Classification result;
  result.scores.reserve(bank.size());
  for (const auto& c : bank.classes()) {
    result.scores.push_back(bank.similarity()(x, recall(c.model, x, counter), counter));
  }
  // First maximal score wins.
  const auto best = std::max_element(result.scores.begin(), result.scores.end());
  result.class_index = static_cast<std::size_t>(best - result.scores.begin());
  result.label = bank.classes()[result.class_index].label;
  return result;
}

EvalReport evaluate(const MemoryBank& bank, const std::vector<LabeledVector>& test_set) {
  if (test_set.empty()) throw ConfigError("test set is empty");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t c = bank.size();

  EvalReport report;
  for (const auto& cls : bank.classes()) report.labels.push_back(cls.label);
  report.per_class_total.assign(c, 0);
  report.per_class_correct.assign(c, 0);
  report.confusion.assign(c, std::vector<std::size_t>(c, 0));

  for (const auto& item : test_set) {
    const std::size_t truth = bank.index_of(item.label);
    if (truth == c) throw ConfigError("test label '" + item.label + "' is not a class of the bank");
    const Classification result = classify(bank, item.vector);
    ++report.per_class_total[truth];
    ++report.confusion[truth][result.class_index];
    if (result.class_index == truth) {
      ++report.per_class_correct[truth];
      ++report.correct;
    }
    ++report.total;
  }

  report.per_class_rr.resize(c);
  for (std::size_t i = 0; i < c; ++i) {
    report.per_class_rr[i] = report.per_class_total[i] == 0
                                 ? 0.0
                                 : static_cast<double>(report.per_class_correct[i]) / report.per_class_total[i];
  }
  report.overall_rr = static_cast<double>(report.correct) / static_cast<double>(report.total);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::string EvalReport::to_csv() const {
  std::ostringstream out;
  out << "label,total,correct,rr\n";
  char buf[64];
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", per_class_rr[i]);
    out << labels[i] << ',' << per_class_total[i] << ',' << per_class_correct[i] << ',' << buf << '\n';
  }
  return out.str();
}

std::string EvalReport::to_json() const {
  nlohmann::json j;
  j["total"] = total;
  j["correct"] = correct;
  j["overall_rr"] = overall_rr;
  j["elapsed_seconds"] = elapsed.count();
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    classes.push_back({{"label", labels[i]},
                       {"total", per_class_total[i]},
                       {"correct", per_class_correct[i]},
                       {"rr", per_class_rr[i]}});
  }
  j["classes"] = std::move(classes);
  j["confusion"] = confusion;
  return j.dump(2);
}

std::pair<std::vector<LabeledVector>, std::vector<LabeledVector>> split_first_n(
    const std::vector<LabeledVector>& dataset, std::size_t per_class) {
  std::pair<std::vector<LabeledVector>, std::vector<LabeledVector>> out;
  std::map<std::string, std::size_t> seen;
  for (const auto& item : dataset) {
    if (seen[item.label]++ < per_class) {
      out.first.push_back(item);
    } else {
      out.second.push_back(item);
    }
  }
  return out;
}

}  // namespace fmm
