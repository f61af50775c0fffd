#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fmm {

/// A real number in [0,1]. The checked constructor throws ConfigError for
/// values outside the unit interval (NaN included); `clamped` saturates.
class UnitScalar {
 public:
  constexpr UnitScalar() = default;
  explicit UnitScalar(double value);

  static UnitScalar clamped(double value) noexcept;

  constexpr double value() const noexcept { return value_; }
  constexpr operator double() const noexcept { return value_; }

 private:
  double value_ = 0.0;
};

using BinaryOp = std::function<double(double, double)>;
using UnaryOp = std::function<double(double)>;

/// Scalar connectives of one fuzzy logic: a conjunction with its residual
/// implication, a disjunction with its residual co-implication, and the strong
/// negation relating the two sides.
///
/// The disjunctive side is optional; families built from a conjunction alone
/// (compensatory-and) leave `disjunction` and `coimplication` empty.
struct ConnectiveFamily {
  std::string name;
  BinaryOp conjunction;
  BinaryOp implication;
  BinaryOp disjunction;
  BinaryOp coimplication;
  UnaryOp negation;
  std::optional<double> conjunction_identity;
  std::optional<double> disjunction_identity;
  /// True when D(x,y) = negation(C(negation(x), negation(y))) holds, which
  /// also makes J the negation dual of I.
  bool negation_dual = false;

  bool has_conjunctive_side() const { return conjunction && implication; }
  bool has_disjunctive_side() const { return disjunction && coimplication; }
};

/// Standard strong negation 1 - x.
double standard_negation(double x) noexcept;

/// Names accepted by builtin_family, in registry order.
const std::vector<std::string>& builtin_family_names();

/// One of godel, goguen, lukasiewicz, gaines, compensatory_and.
/// Throws NotFoundError for any other name.
ConnectiveFamily builtin_family(std::string_view name);

/// sup{t in [0,1] : C(t,x) <= y} by bisection. Intended for user-defined
/// conjunctions; builtin families carry their closed forms.
UnitScalar residual_implication(const BinaryOp& conjunction, UnitScalar x, UnitScalar y);

/// inf{t in [0,1] : D(t,x) >= y} by bisection.
UnitScalar residual_coimplication(const BinaryOp& disjunction, UnitScalar x, UnitScalar y);

/// Closed-form residual of a family (its `implication`).
UnitScalar residual_implication(const ConnectiveFamily& family, UnitScalar x, UnitScalar y);
UnitScalar residual_coimplication(const ConnectiveFamily& family, UnitScalar x, UnitScalar y);

struct AdjunctionReport {
  bool passed = true;
  /// "implication" or "coimplication" for the first failing equivalence.
  std::string side;
  double a = 0.0;
  double x = 0.0;
  double y = 0.0;

  std::string describe() const;
};

/// Checks I(a,x) >= y <=> x >= C(y,a) and J(a,x) <= y <=> x <= D(y,a) on the
/// uniform grid {0, 1/(g-1), ..., 1}^3. Sides absent from the family are
/// skipped. Requires grid_resolution >= 2.
AdjunctionReport check_adjunction(const ConnectiveFamily& family, int grid_resolution = 21);

}  // namespace fmm
