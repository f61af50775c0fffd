#include "fmm/afmm.hpp"

#include <algorithm>
#include <string>

#include "fmm/error.hpp"

namespace fmm {

const char* to_string(MemoryKind kind) { return kind == MemoryKind::max_c ? "max_c" : "min_d"; }

MemoryKind memory_kind_from_string(std::string_view text) {
  if (text == "max_c") return MemoryKind::max_c;
  if (text == "min_d") return MemoryKind::min_d;
  throw FormatError("unknown memory kind '" + std::string(text) + "'");
}

DistributedMemory::DistributedMemory(MemoryKind kind, FuzzyMatrix weights, ConnectiveFamily family)
    : kind_(kind), weights_(std::move(weights)), family_(std::move(family)) {
  if (weights_.rows() != weights_.cols() || weights_.rows() == 0) {
    throw DimensionError("synaptic weight matrix must be square and nonempty");
  }
  if (kind_ == MemoryKind::max_c && !family_.conjunction) {
    throw ConfigError("family '" + family_.name + "' has no conjunction for max-C recall");
  }
  if (kind_ == MemoryKind::min_d && !family_.disjunction) {
    throw ConfigError("family '" + family_.name + "' has no disjunction for min-D recall");
  }
}

FuzzyVector DistributedMemory::recall(const FuzzyVector& x, OpCounter* counter) const {
  if (x.size() != dimension()) {
    throw DimensionError("recall input has length " + std::to_string(x.size()) + ", memory stores length " +
                         std::to_string(dimension()));
  }
  return kind_ == MemoryKind::max_c ? max_c_product(weights_, x, family_.conjunction, counter)
                                    : min_d_product(weights_, x, family_.disjunction, counter);
}

DistributedMemory train_fla(const FundamentalMemorySet& memories, const ConnectiveFamily& family,
                            MemoryKind kind) {
  if (!family.has_conjunctive_side() || !family.has_disjunctive_side()) {
    throw ConfigError("family '" + family.name +
                      "' lacks an adjoint disjunction/co-implication pair; distributed memories need both sides");
  }
  const std::size_t n = memories.dimension();
  // Running min (max_c) or max (min_d) over memories, memory index outermost.
  std::vector<double> w(n * n, kind == MemoryKind::max_c ? 1.0 : 0.0);
  for (const FuzzyVector& a : memories) {
    for (std::size_t i = 0; i < n; ++i) {
      double* row = w.data() + i * n;
      if (kind == MemoryKind::max_c) {
        for (std::size_t j = 0; j < n; ++j) row[j] = std::min(row[j], family.implication(a[j], a[i]));
      } else {
        for (std::size_t j = 0; j < n; ++j) row[j] = std::max(row[j], family.coimplication(a[j], a[i]));
      }
    }
  }
  return DistributedMemory(kind, FuzzyMatrix(n, n, std::move(w)), family);
}

DistributedMemory negation_of(const DistributedMemory& mem) {
  const ConnectiveFamily& family = mem.family();
  if (!family.negation_dual || !family.has_disjunctive_side() || !family.negation) {
    throw ConfigError("family '" + family.name + "' has no negation-dual partner");
  }
  // eta(max_j C(w_ij, eta(x_j))) = min_j D(eta(w_ij), x_j), and dually.
  const MemoryKind opposite = mem.kind() == MemoryKind::max_c ? MemoryKind::min_d : MemoryKind::max_c;
  return DistributedMemory(opposite, negate(mem.weights(), family.negation), family);
}

}  // namespace fmm
