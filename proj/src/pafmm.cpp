#include "fmm/pafmm.hpp"

#include <algorithm>
#include <string>

#include "fmm/error.hpp"

namespace fmm {

namespace {

void require_kind(const ProjectionMemory& mem, ProjectionKind expected) {
  if (mem.kind() != expected) {
    throw ConfigError(std::string("projection memory of kind ") + to_string(mem.kind()) + " cannot recall as " +
                      to_string(expected));
  }
}

void require_input(const ProjectionMemory& mem, const FuzzyVector& x) {
  if (x.size() != mem.dimension()) {
    throw DimensionError("recall input has length " + std::to_string(x.size()) + ", memory stores length " +
                         std::to_string(mem.dimension()));
  }
}

}  // namespace

const char* to_string(ProjectionKind kind) {
  switch (kind) {
    case ProjectionKind::max_c: return "max_c";
    case ProjectionKind::min_d: return "min_d";
    case ProjectionKind::zadeh_max: return "zadeh_max";
    case ProjectionKind::zadeh_min: return "zadeh_min";
  }
  return "?";
}

ProjectionKind projection_kind_from_string(std::string_view text) {
  if (text == "max_c") return ProjectionKind::max_c;
  if (text == "min_d") return ProjectionKind::min_d;
  if (text == "zadeh_max") return ProjectionKind::zadeh_max;
  if (text == "zadeh_min") return ProjectionKind::zadeh_min;
  throw FormatError("unknown projection kind '" + std::string(text) + "'");
}

ProjectionMemory::ProjectionMemory(ProjectionKind kind, FundamentalMemorySet memories,
                                   std::optional<ConnectiveFamily> family, double epsilon)
    : kind_(kind), memories_(std::move(memories)), family_(std::move(family)), epsilon_(epsilon) {
  if (memories_.size() == 0) throw ConfigError("projection memory needs at least one fundamental memory");
  if (!(epsilon_ >= 0.0)) throw ConfigError("inclusion tolerance must be nonnegative");
}

ProjectionMemory ProjectionMemory::max_c(FundamentalMemorySet memories, ConnectiveFamily family) {
  if (!family.has_conjunctive_side()) {
    throw ConfigError("family '" + family.name + "' has no conjunction/implication pair");
  }
  return ProjectionMemory(ProjectionKind::max_c, std::move(memories), std::move(family), 0.0);
}

ProjectionMemory ProjectionMemory::min_d(FundamentalMemorySet memories, ConnectiveFamily family) {
  if (!family.has_disjunctive_side()) {
    throw ConfigError("family '" + family.name + "' has no disjunction/co-implication pair");
  }
  return ProjectionMemory(ProjectionKind::min_d, std::move(memories), std::move(family), 0.0);
}

ProjectionMemory ProjectionMemory::zadeh_max(FundamentalMemorySet memories, double epsilon) {
  return ProjectionMemory(ProjectionKind::zadeh_max, std::move(memories), std::nullopt, epsilon);
}

ProjectionMemory ProjectionMemory::zadeh_min(FundamentalMemorySet memories, double epsilon) {
  return ProjectionMemory(ProjectionKind::zadeh_min, std::move(memories), std::nullopt, epsilon);
}

ProjectionRecall ProjectionMemory::recall_traced(const FuzzyVector& x, OpCounter* counter) const {
  switch (kind_) {
    case ProjectionKind::max_c: return recall_max_c(*this, x, counter);
    case ProjectionKind::min_d: return recall_min_d(*this, x, counter);
    case ProjectionKind::zadeh_max: return recall_zadeh_max(*this, x, counter);
    case ProjectionKind::zadeh_min: return recall_zadeh_min(*this, x, counter);
  }
  throw ConfigError("invalid projection kind");
}

ProjectionRecall recall_max_c(const ProjectionMemory& mem, const FuzzyVector& x, OpCounter* counter) {
  require_kind(mem, ProjectionKind::max_c);
  require_input(mem, x);
  const ConnectiveFamily& family = *mem.family();
  const std::size_t n = x.size(), k = mem.memories().size();

  std::vector<double> lambda(k);
  for (std::size_t xi = 0; xi < k; ++xi) {
    const FuzzyVector& a = mem.memories()[xi];
    double acc = family.implication(a[0], x[0]);
    for (std::size_t j = 1; j < n; ++j) acc = std::min(acc, family.implication(a[j], x[j]));
    lambda[xi] = acc;
  }
  if (counter != nullptr) {
    counter->fuzzy_op_evals += n * k;
    counter->comparisons += n * k + (n - 1) * k;
  }
  // V(x) <= x holds exactly; the meet only undoes rounding in the conjunction.
  FuzzyVector out = meet(max_c_combination(lambda, mem.memories(), family.conjunction, counter), x);
  return {std::move(out), RecallTrace{std::move(lambda), {}}};
}

ProjectionRecall recall_min_d(const ProjectionMemory& mem, const FuzzyVector& x, OpCounter* counter) {
  require_kind(mem, ProjectionKind::min_d);
  require_input(mem, x);
  const ConnectiveFamily& family = *mem.family();
  const std::size_t n = x.size(), k = mem.memories().size();

  std::vector<double> theta(k);
  for (std::size_t xi = 0; xi < k; ++xi) {
    const FuzzyVector& a = mem.memories()[xi];
    double acc = family.coimplication(a[0], x[0]);
    for (std::size_t j = 1; j < n; ++j) acc = std::max(acc, family.coimplication(a[j], x[j]));
    theta[xi] = acc;
  }
  if (counter != nullptr) {
    counter->fuzzy_op_evals += n * k;
    counter->comparisons += n * k + (n - 1) * k;
  }
  FuzzyVector out = join(min_d_combination(theta, mem.memories(), family.disjunction, counter), x);
  return {std::move(out), RecallTrace{std::move(theta), {}}};
}

ProjectionRecall recall_zadeh_max(const ProjectionMemory& mem, const FuzzyVector& x, OpCounter* counter) {
  require_kind(mem, ProjectionKind::zadeh_max);
  require_input(mem, x);
  const std::size_t n = x.size(), k = mem.memories().size();
  const double eps = mem.epsilon();

  RecallTrace trace;
  trace.coefficients.assign(k, 0.0);
  std::uint64_t comparisons = 0;
  for (std::size_t xi = 0; xi < k; ++xi) {
    const FuzzyVector& a = mem.memories()[xi];
    bool contained = true;
    for (std::size_t j = 0; j < n && contained; ++j) {
      ++comparisons;
      contained = a[j] <= x[j] + eps;
    }
    if (contained) {
      trace.coefficients[xi] = 1.0;
      trace.index_set.push_back(xi);
    }
  }

  std::vector<double> out(n, 0.0);
  if (!trace.index_set.empty()) {
    out = mem.memories()[trace.index_set.front()].raw();
    for (std::size_t s = 1; s < trace.index_set.size(); ++s) {
      const FuzzyVector& a = mem.memories()[trace.index_set[s]];
      for (std::size_t i = 0; i < n; ++i) out[i] = std::max(out[i], a[i]);
    }
    comparisons += (trace.index_set.size() - 1) * n;
  }
  if (counter != nullptr) counter->comparisons += comparisons;
  return {FuzzyVector(std::move(out)), std::move(trace)};
}

ProjectionRecall recall_zadeh_min(const ProjectionMemory& mem, const FuzzyVector& x, OpCounter* counter) {
  require_kind(mem, ProjectionKind::zadeh_min);
  require_input(mem, x);
  const std::size_t n = x.size(), k = mem.memories().size();
  const double eps = mem.epsilon();

  RecallTrace trace;
  trace.coefficients.assign(k, 0.0);
  std::uint64_t comparisons = 0;
  for (std::size_t xi = 0; xi < k; ++xi) {
    const FuzzyVector& a = mem.memories()[xi];
    bool contains = true;
    for (std::size_t j = 0; j < n && contains; ++j) {
      ++comparisons;
      contains = a[j] + eps >= x[j];
    }
    if (contains) {
      trace.coefficients[xi] = 1.0;
      trace.index_set.push_back(xi);
    }
  }

  std::vector<double> out(n, 1.0);
  if (!trace.index_set.empty()) {
    out = mem.memories()[trace.index_set.front()].raw();
    for (std::size_t s = 1; s < trace.index_set.size(); ++s) {
      const FuzzyVector& a = mem.memories()[trace.index_set[s]];
      for (std::size_t i = 0; i < n; ++i) out[i] = std::min(out[i], a[i]);
    }
    comparisons += (trace.index_set.size() - 1) * n;
  }
  if (counter != nullptr) counter->comparisons += comparisons;
  return {FuzzyVector(std::move(out)), std::move(trace)};
}

ProjectionMemory negation_dual(const ProjectionMemory& mem) {
  switch (mem.kind()) {
    case ProjectionKind::zadeh_max:
      return ProjectionMemory::zadeh_min(negate(mem.memories(), standard_negation), mem.epsilon());
    case ProjectionKind::zadeh_min:
      return ProjectionMemory::zadeh_max(negate(mem.memories(), standard_negation), mem.epsilon());
    case ProjectionKind::max_c:
    case ProjectionKind::min_d: break;
  }
  const ConnectiveFamily& family = *mem.family();
  if (!family.negation_dual || !family.has_conjunctive_side() || !family.has_disjunctive_side() ||
      !family.negation) {
    throw ConfigError("family '" + family.name + "' has no negation-dual partner");
  }
  FundamentalMemorySet negated = negate(mem.memories(), family.negation);
  if (mem.kind() == ProjectionKind::min_d) return ProjectionMemory::max_c(std::move(negated), family);
  return ProjectionMemory::min_d(std::move(negated), family);
}

}  // namespace fmm
