#pragma once

#include <optional>
#include <vector>

#include "fmm/connectives.hpp"
#include "fmm/lattice.hpp"

namespace fmm {

enum class ProjectionKind { max_c, min_d, zadeh_max, zadeh_min };

const char* to_string(ProjectionKind kind);
ProjectionKind projection_kind_from_string(std::string_view text);

/// Coefficients behind a projection recall. For max_c these are the
/// Bandler-Kohout inclusion degrees of each memory in the input; for min_d the
/// dual theta values. Zadeh kinds report crisp 0/1 coefficients and the index
/// set of the memories that take part in the output (0-based).
struct RecallTrace {
  std::vector<double> coefficients;
  std::vector<std::size_t> index_set;
};

struct ProjectionRecall {
  FuzzyVector output;
  RecallTrace trace;
};

/// Projection autoassociative fuzzy morphological memory. Stores the
/// fundamental memories themselves; recall projects the input onto the max-C
/// (resp. min-D) combinations of them.
class ProjectionMemory {
 public:
  static ProjectionMemory max_c(FundamentalMemorySet memories, ConnectiveFamily family);
  static ProjectionMemory min_d(FundamentalMemorySet memories, ConnectiveFamily family);
  /// `epsilon` relaxes the crisp inclusion test to a_j <= x_j + epsilon.
  static ProjectionMemory zadeh_max(FundamentalMemorySet memories, double epsilon = 0.0);
  static ProjectionMemory zadeh_min(FundamentalMemorySet memories, double epsilon = 0.0);

  ProjectionKind kind() const noexcept { return kind_; }
  const FundamentalMemorySet& memories() const noexcept { return memories_; }
  const std::optional<ConnectiveFamily>& family() const noexcept { return family_; }
  double epsilon() const noexcept { return epsilon_; }
  std::size_t dimension() const noexcept { return memories_.dimension(); }

  ProjectionRecall recall_traced(const FuzzyVector& x, OpCounter* counter = nullptr) const;
  FuzzyVector recall(const FuzzyVector& x, OpCounter* counter = nullptr) const {
    return recall_traced(x, counter).output;
  }

 private:
  ProjectionMemory(ProjectionKind kind, FundamentalMemorySet memories, std::optional<ConnectiveFamily> family,
                   double epsilon);

  ProjectionKind kind_;
  FundamentalMemorySet memories_;
  std::optional<ConnectiveFamily> family_;
  double epsilon_ = 0.0;
};

/// lambda_xi = min_j I(a_j^xi, x_j); output max_xi C(lambda_xi, a^xi): the
/// largest max-C combination below x. Requires kind max_c.
ProjectionRecall recall_max_c(const ProjectionMemory& mem, const FuzzyVector& x, OpCounter* counter = nullptr);
/// theta_xi = max_j J(a_j^xi, x_j); output min_xi D(theta_xi, a^xi): the
/// smallest min-D combination above x. Requires kind min_d.
ProjectionRecall recall_min_d(const ProjectionMemory& mem, const FuzzyVector& x, OpCounter* counter = nullptr);
/// Join of the memories contained in x, or the 0-vector if none is.
/// Comparisons only.
ProjectionRecall recall_zadeh_max(const ProjectionMemory& mem, const FuzzyVector& x,
                                  OpCounter* counter = nullptr);
/// Meet of the memories containing x, or the 1-vector if none does.
ProjectionRecall recall_zadeh_min(const ProjectionMemory& mem, const FuzzyVector& x,
                                  OpCounter* counter = nullptr);

/// Negation x -> eta(mem(eta(x))) under the family's strong negation (the
/// standard one for Zadeh kinds), returned in closed form as the opposite-kind
/// projection memory storing eta(a^xi). Throws ConfigError when the family has
/// no negation-dual partner.
ProjectionMemory negation_dual(const ProjectionMemory& mem);

}  // namespace fmm
