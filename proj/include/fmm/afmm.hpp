#pragma once

#include "fmm/connectives.hpp"
#include "fmm/lattice.hpp"

namespace fmm {

enum class MemoryKind { max_c, min_d };

const char* to_string(MemoryKind kind);
MemoryKind memory_kind_from_string(std::string_view text);

/// Distributed autoassociative fuzzy morphological memory.
///
/// A max-C memory recalls W o x (a dilation); a min-D memory recalls M . x
/// (an erosion). Both are immutable once built.
class DistributedMemory {
 public:
  /// Throws DimensionError if `weights` is not square, ConfigError if the
  /// family lacks the connective the kind recalls with.
  DistributedMemory(MemoryKind kind, FuzzyMatrix weights, ConnectiveFamily family);

  MemoryKind kind() const noexcept { return kind_; }
  const FuzzyMatrix& weights() const noexcept { return weights_; }
  const ConnectiveFamily& family() const noexcept { return family_; }
  std::size_t dimension() const noexcept { return weights_.rows(); }

  FuzzyVector recall(const FuzzyVector& x, OpCounter* counter = nullptr) const;

 private:
  MemoryKind kind_;
  FuzzyMatrix weights_;
  ConnectiveFamily family_;
};

/// Fuzzy learning by adjunction.
///
/// max_c: w_ij = min_xi I(a_j^xi, a_i^xi), the largest W with W o a^xi = a^xi.
/// min_d: m_ij = max_xi J(a_j^xi, a_i^xi), the smallest M with M . a^xi = a^xi.
///
/// Families without a disjunctive side are rejected for both kinds: the
/// fixed-point characterisation of recall needs both adjunctions.
DistributedMemory train_fla(const FundamentalMemorySet& memories, const ConnectiveFamily& family,
                            MemoryKind kind);

/// The negation x -> eta(mem(eta(x))). For a negation-dual family this is
/// again a distributed memory of the opposite kind whose weights are eta(W),
/// which is what gets returned. Throws ConfigError for families that are not
/// negation-dual.
DistributedMemory negation_of(const DistributedMemory& mem);

}  // namespace fmm
