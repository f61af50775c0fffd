#include "fmm/reference_checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "fmm/afmm.hpp"
#include "fmm/encoding.hpp"
#include "fmm/metrics.hpp"
#include "fmm/pafmm.hpp"
#include "json.hpp"

namespace fmm {

namespace {

ReferenceFixtures make_default() {
  ReferenceFixtures f;
  f.memories = {{0.4, 0.3, 0.7, 0.2}, {0.1, 0.7, 0.5, 0.8}, {0.8, 0.5, 0.4, 0.2}};
  f.input = {0.4, 0.3, 0.8, 0.7};
  f.godel_min_d_weights = {
      {0.0, 0.8, 0.8, 0.8}, {0.7, 0.0, 0.7, 0.5}, {0.7, 0.7, 0.0, 0.7}, {0.8, 0.8, 0.8, 0.0}};
  f.afmm_godel = {0.40, 0.30, 0.70, 0.70};
  f.afmm_goguen = {0.40, 0.30, 0.70, 0.53};
  f.afmm_lukasiewicz = {0.40, 0.30, 0.70, 0.40};
  f.afmm_gaines = {0.40, 0.30, 0.80, 0.70};
  f.pafmm_godel_coefficients = {1.0, 0.3, 0.3};
  f.pafmm_godel = {0.40, 0.30, 0.70, 0.30};
  f.pafmm_goguen = {0.40, 0.30, 0.70, 0.34};
  f.pafmm_lukasiewicz = {0.40, 0.30, 0.70, 0.40};
  f.compensatory_coefficients = {0.39, 0.06, 0.23};
  f.compensatory_recalls = {{0.40, 0.27, 0.47, 0.20}, {0.10, 0.39, 0.30, 0.44}, {0.52, 0.37, 0.40, 0.20}};
  f.nmse_row = {0.33, 0.32, 0.14, 0.05, 0.33, 0.01, 0.02, 0.05, 0.00};
  return f;
}

double max_deviation(const std::vector<double>& got, const std::vector<double>& want) {
  if (got.size() != want.size()) return INFINITY;
  double d = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    const double e = std::abs(got[i] - want[i]);
    if (!std::isfinite(e)) return INFINITY;
    d = std::max(d, e);
  }
  return d;
}

std::string render(const std::vector<double>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v[i]);
    os << (i ? ", " : "") << buf;
  }
  os << ']';
  return os.str();
}

class Runner {
 public:
  explicit Runner(ReferenceReport& report) : report_(report) {}

  void vector(const std::string& name, double tol, const std::vector<double>& want,
              const std::function<std::vector<double>()>& compute) {
    ReferenceCheck c{name, false, 0.0, tol, {}};
    try {
      const auto got = compute();
      c.deviation = max_deviation(got, want);
      c.passed = c.deviation <= tol;
      c.detail = "got " + render(got) + " expected " + render(want);
    } catch (const std::exception& e) {
      c.deviation = INFINITY;
      c.detail = std::string("error: ") + e.what();
    }
    report_.checks.push_back(std::move(c));
  }

  void scalar(const std::string& name, double tol, double want, const std::function<double()>& compute) {
    vector(name, tol, {want}, [&] { return std::vector<double>{compute()}; });
  }

 private:
  ReferenceReport& report_;
};

FundamentalMemorySet memory_set(const ReferenceFixtures& f) {
  std::vector<FuzzyVector> out;
  for (const auto& m : f.memories) out.emplace_back(m);
  return FundamentalMemorySet(std::move(out));
}

std::vector<double> flatten(const std::vector<std::vector<double>>& rows) {
  std::vector<double> out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace

const ReferenceFixtures& default_fixtures() {
  static const ReferenceFixtures fixtures = make_default();
  return fixtures;
}

bool ReferenceReport::passed() const { return failures() == 0; }

std::size_t ReferenceReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

std::string ReferenceReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    char dev[32];
    std::snprintf(dev, sizeof dev, "%.4g", c.deviation);
    os << (c.passed ? "PASS " : "FAIL ") << c.name << "  max|diff|=" << dev << " tol=" << c.tolerance;
    if (!c.passed) os << "  " << c.detail;
    os << '\n';
  }
  os << (checks.size() - failures()) << '/' << checks.size() << " reference checks passed\n";
  return os.str();
}

std::string ReferenceReport::to_json() const {
  nlohmann::json doc;
  doc["passed"] = passed();
  doc["failures"] = failures();
  auto arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"passed", c.passed},
                   {"deviation", std::isfinite(c.deviation) ? format_exact(c.deviation) : std::string("inf")},
                   {"tolerance", format_exact(c.tolerance)},
                   {"detail", c.detail}});
  }
  doc["checks"] = std::move(arr);
  return doc.dump(2);
}

ReferenceReport run_reference_checks(const ReferenceFixtures& f) {
  ReferenceReport report;
  Runner run(report);
  const double tol = f.tolerance;

  const auto godel = builtin_family("godel");
  const auto goguen = builtin_family("goguen");
  const auto luk = builtin_family("lukasiewicz");
  const auto gaines = builtin_family("gaines");
  const auto comp = builtin_family("compensatory_and");

  // Scalar connective values.
  run.vector("connective.gaines_implication", f.exact_tolerance, {1.0, 0.0}, [&] {
    return std::vector<double>{gaines.implication(0.3, 0.3), gaines.implication(0.4, 0.3)};
  });
  run.scalar("connective.gaines_coimplication", f.exact_tolerance, 1.0,
             [&] { return gaines.coimplication(0.3, 0.7); });
  run.scalar("connective.compensatory_implication", f.exact_tolerance, 0.36,
             [&] { return comp.implication(1.0, 0.6); });

  // Lazily built so that a malformed fixture fails its checks instead of aborting.
  auto A = [&] { return memory_set(f); };
  auto x = [&] { return FuzzyVector(f.input); };
  auto afmm = [&](const ConnectiveFamily& fam) { return train_fla(A(), fam, MemoryKind::min_d).recall(x()).raw(); };
  auto pafmm = [&](const ConnectiveFamily& fam) { return ProjectionMemory::max_c(A(), fam).recall_traced(x()); };

  run.vector("fla_weights.godel", f.exact_tolerance, flatten(f.godel_min_d_weights),
             [&] { return train_fla(A(), godel, MemoryKind::min_d).weights().data(); });
  run.vector("afmm.godel", tol, f.afmm_godel, [&] { return afmm(godel); });
  run.vector("afmm.goguen", tol, f.afmm_goguen, [&] { return afmm(goguen); });
  run.vector("afmm.lukasiewicz", tol, f.afmm_lukasiewicz, [&] { return afmm(luk); });
  run.vector("afmm.gaines", tol, f.afmm_gaines, [&] { return afmm(gaines); });

  run.vector("combination.godel", tol, f.pafmm_godel, [&] {
    return max_c_combination(f.pafmm_godel_coefficients, A(), godel.conjunction).raw();
  });
  run.vector("combination.compensatory", tol, f.compensatory_recalls.empty() ? std::vector<double>{}
                                                                             : f.compensatory_recalls[0],
             [&] { return max_c_combination(f.compensatory_coefficients, A(), comp.conjunction).raw(); });

  run.vector("pafmm.godel.coefficients", tol, f.pafmm_godel_coefficients,
             [&] { return pafmm(godel).trace.coefficients; });
  run.vector("pafmm.godel", tol, f.pafmm_godel, [&] { return pafmm(godel).output.raw(); });
  run.vector("pafmm.goguen", tol, f.pafmm_goguen, [&] { return pafmm(goguen).output.raw(); });
  run.vector("pafmm.lukasiewicz", tol, f.pafmm_lukasiewicz, [&] { return pafmm(luk).output.raw(); });

  run.vector("compensatory.coefficients", tol, f.compensatory_coefficients, [&] {
    const auto mem = ProjectionMemory::max_c(A(), comp);
    return mem.recall_traced(mem.memories()[0]).trace.coefficients;
  });
  for (std::size_t i = 0; i < f.compensatory_recalls.size(); ++i) {
    run.vector("compensatory.recall_a" + std::to_string(i + 1), tol, f.compensatory_recalls[i], [&, i] {
      const auto mem = ProjectionMemory::max_c(A(), comp);
      return mem.recall(mem.memories()[i]).raw();
    });
  }

  run.vector("zadeh.index_set", f.exact_tolerance, {0.0}, [&] {
    std::vector<double> out;
    for (auto idx : ProjectionMemory::zadeh_max(A()).recall_traced(x()).trace.index_set) {
      out.push_back(static_cast<double>(idx));
    }
    return out;
  });
  run.vector("zadeh.output", f.exact_tolerance, f.memories.empty() ? std::vector<double>{} : f.memories[0],
             [&] { return ProjectionMemory::zadeh_max(A()).recall(x()).raw(); });

  static const char* const kNmseNames[] = {"input",         "afmm_godel",  "afmm_goguen",
                                           "afmm_lukasiewicz", "afmm_gaines", "pafmm_godel",
                                           "pafmm_goguen",  "pafmm_lukasiewicz", "zadeh"};
  const std::function<FuzzyVector()> outputs[] = {
      [&] { return x(); },
      [&] { return FuzzyVector(afmm(godel)); },
      [&] { return FuzzyVector(afmm(goguen)); },
      [&] { return FuzzyVector(afmm(luk)); },
      [&] { return FuzzyVector(afmm(gaines)); },
      [&] { return pafmm(godel).output; },
      [&] { return pafmm(goguen).output; },
      [&] { return pafmm(luk).output; },
      [&] { return ProjectionMemory::zadeh_max(A()).recall(x()); },
  };
  for (std::size_t i = 0; i < 9; ++i) {
    const double want = i < f.nmse_row.size() ? f.nmse_row[i] : NAN;
    run.scalar(std::string("nmse.") + kNmseNames[i], tol, want, [&, i] { return nmse(outputs[i](), A()[0]); });
  }
  return report;
}

}  // namespace fmm
