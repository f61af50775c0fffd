#include "fmm/connectives.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fmm/error.hpp"

namespace fmm {

namespace {

constexpr int kBisectionIterations = 60;
constexpr double kBisectionTolerance = 1e-12;

double unit(double v) { return std::clamp(v, 0.0, 1.0); }

// Gödel / minimum
double conj_min(double x, double y) { return std::min(x, y); }
double impl_godel(double x, double y) { return x <= y ? 1.0 : y; }
double disj_max(double x, double y) { return std::max(x, y); }
double coimpl_godel(double x, double y) { return x >= y ? 0.0 : y; }

// Goguen / product
double conj_product(double x, double y) { return x * y; }
double impl_goguen(double x, double y) { return x <= y ? 1.0 : y / x; }
double disj_probsum(double x, double y) { return unit(x + y - x * y); }
double coimpl_goguen(double x, double y) { return x >= y ? 0.0 : unit((y - x) / (1.0 - x)); }

// Łukasiewicz
// The identity cases are short-circuited: 1 + y - 1 need not round back to y.
double conj_lukasiewicz(double x, double y) {
  if (x == 1.0) return y;
  if (y == 1.0) return x;
  return std::max(0.0, x + y - 1.0);
}
double impl_lukasiewicz(double x, double y) { return x <= y ? 1.0 : std::min(1.0, 1.0 - x + y); }
double disj_lukasiewicz(double x, double y) { return std::min(1.0, x + y); }
double coimpl_lukasiewicz(double x, double y) { return std::max(0.0, y - x); }

// Gaines
double conj_gaines(double x, double y) { return x == 0.0 ? 0.0 : y; }
double impl_gaines(double x, double y) { return x <= y ? 1.0 : 0.0; }
double disj_gaines(double x, double y) { return x == 1.0 ? 1.0 : y; }
double coimpl_gaines(double x, double y) { return x >= y ? 0.0 : 1.0; }

// Compensatory-and; no left identity, no disjunctive partner.
double conj_compensatory(double x, double y) {
  const double p = x * y;
  return unit(std::sqrt(std::max(0.0, p * (x + y - p))));
}

// Positive root of x(1-x)t^2 + x^2 t - y^2 = 0, i.e. C_A(t,x) = y.
double impl_compensatory(double x, double y) {
  if (x == 0.0) return 1.0;
  if (x == 1.0) return y * y;
  const double q = x * (1.0 - x);
  const double disc = std::max(0.0, x * x * x * x + 4.0 * q * y * y);
  return unit((-x * x + std::sqrt(disc)) / (2.0 * q));
}

ConnectiveFamily make_dual_family(std::string name, BinaryOp c, BinaryOp i, BinaryOp d, BinaryOp j) {
  ConnectiveFamily f;
  f.name = std::move(name);
  f.conjunction = std::move(c);
  f.implication = std::move(i);
  f.disjunction = std::move(d);
  f.coimplication = std::move(j);
  f.negation = standard_negation;
  f.conjunction_identity = 1.0;
  f.disjunction_identity = 0.0;
  f.negation_dual = true;
  return f;
}

}  // namespace

UnitScalar::UnitScalar(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    std::ostringstream msg;
    msg << "value " << value << " is outside [0,1]";
    throw ConfigError(msg.str());
  }
}

UnitScalar UnitScalar::clamped(double value) noexcept {
  UnitScalar s;
  s.value_ = std::isnan(value) ? 0.0 : std::clamp(value, 0.0, 1.0);
  return s;
}

double standard_negation(double x) noexcept { return 1.0 - x; }

const std::vector<std::string>& builtin_family_names() {
  static const std::vector<std::string> names{"godel", "goguen", "lukasiewicz", "gaines",
                                              "compensatory_and"};
  return names;
}

ConnectiveFamily builtin_family(std::string_view name) {
  if (name == "godel") {
    return make_dual_family("godel", conj_min, impl_godel, disj_max, coimpl_godel);
  }
  if (name == "goguen") {
    return make_dual_family("goguen", conj_product, impl_goguen, disj_probsum, coimpl_goguen);
  }
  if (name == "lukasiewicz") {
    return make_dual_family("lukasiewicz", conj_lukasiewicz, impl_lukasiewicz, disj_lukasiewicz,
                            coimpl_lukasiewicz);
  }
  if (name == "gaines") {
    // C_G(e,y) = y for every e != 0; 1 is the representative identity.
    return make_dual_family("gaines", conj_gaines, impl_gaines, disj_gaines, coimpl_gaines);
  }
  if (name == "compensatory_and") {
    ConnectiveFamily f;
    f.name = "compensatory_and";
    f.conjunction = conj_compensatory;
    f.implication = impl_compensatory;
    f.negation = standard_negation;
    return f;
  }
  throw NotFoundError("unknown connective family '" + std::string(name) + "'");
}

UnitScalar residual_implication(const BinaryOp& conjunction, UnitScalar x, UnitScalar y) {
  if (conjunction(1.0, x) <= y) return UnitScalar(1.0);
  // Invariant: C(lo,x) <= y < C(hi,x).
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < kBisectionIterations && hi - lo > kBisectionTolerance; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (conjunction(mid, x) <= y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return UnitScalar(lo);
}

UnitScalar residual_coimplication(const BinaryOp& disjunction, UnitScalar x, UnitScalar y) {
  if (disjunction(0.0, x) >= y) return UnitScalar(0.0);
  // Invariant: D(lo,x) < y <= D(hi,x).
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < kBisectionIterations && hi - lo > kBisectionTolerance; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (disjunction(mid, x) >= y) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return UnitScalar(hi);
}

UnitScalar residual_implication(const ConnectiveFamily& family, UnitScalar x, UnitScalar y) {
  if (!family.implication) {
    throw ConfigError("family '" + family.name + "' has no implication");
  }
  return UnitScalar::clamped(family.implication(x, y));
}

UnitScalar residual_coimplication(const ConnectiveFamily& family, UnitScalar x, UnitScalar y) {
  if (!family.coimplication) {
    throw ConfigError("family '" + family.name + "' has no co-implication");
  }
  return UnitScalar::clamped(family.coimplication(x, y));
}

std::string AdjunctionReport::describe() const {
  if (passed) return "adjunction holds";
  std::ostringstream out;
  out << side << " adjunction violated at (a, x, y) = (" << a << ", " << x << ", " << y << ")";
  return out.str();
}

AdjunctionReport check_adjunction(const ConnectiveFamily& family, int grid_resolution) {
  if (grid_resolution < 2) throw ConfigError("grid resolution must be at least 2");
  std::vector<double> grid(static_cast<std::size_t>(grid_resolution));
  for (int i = 0; i < grid_resolution; ++i) {
    grid[static_cast<std::size_t>(i)] = static_cast<double>(i) / (grid_resolution - 1);
  }

  AdjunctionReport report;
  for (double a : grid) {
    for (double x : grid) {
      for (double y : grid) {
        if (family.has_conjunctive_side()) {
          const bool lhs = family.implication(a, x) >= y;
          const bool rhs = x >= family.conjunction(y, a);
          if (lhs != rhs) return {false, "implication", a, x, y};
        }
        if (family.has_disjunctive_side()) {
          const bool lhs = family.coimplication(a, x) <= y;
          const bool rhs = x <= family.disjunction(y, a);
          if (lhs != rhs) return {false, "coimplication", a, x, y};
        }
      }
    }
  }
  return report;
}

}  // namespace fmm
