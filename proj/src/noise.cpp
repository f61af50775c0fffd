#include "fmm/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "fmm/error.hpp"

namespace fmm {

namespace {

// std::mt19937_64 output is fixed by the standard; the distributions below
// are spelled out so results do not depend on the standard library.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal by Box-Muller.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0,1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
    has_spare_ = true;
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace

const char* to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::salt_pepper: return "salt_pepper";
    case NoiseKind::gaussian: return "gaussian";
    case NoiseKind::motion_blur: return "motion";
  }
  return "?";
}

NoiseKind noise_kind_from_string(std::string_view text) {
  if (text == "salt_pepper") return NoiseKind::salt_pepper;
  if (text == "gaussian") return NoiseKind::gaussian;
  if (text == "motion" || text == "motion_blur") return NoiseKind::motion_blur;
  throw ConfigError("unknown noise kind '" + std::string(text) + "'");
}

void NoiseSpec::validate() const {
  switch (kind) {
    case NoiseKind::salt_pepper:
      if (!(level >= 0.0 && level <= 0.5)) throw ConfigError("salt-and-pepper probability must lie in [0, 0.5]");
      break;
    case NoiseKind::gaussian:
      if (!(level >= 0.0 && level <= 0.5)) throw ConfigError("Gaussian variance must lie in [0, 0.5]");
      break;
    case NoiseKind::motion_blur:
      if (!(level >= 1.0 && level <= 20.0) || level != std::floor(level)) {
        throw ConfigError("motion blur length must be an integer in 1..20");
      }
      break;
  }
}

NoiseSpec parse_noise_spec(std::string_view text, std::uint64_t seed) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ConfigError("noise spec '" + std::string(text) + "' lacks ':level'");
  NoiseSpec spec;
  spec.kind = noise_kind_from_string(text.substr(0, colon));
  const std::string level(text.substr(colon + 1));
  char* end = nullptr;
  spec.level = std::strtod(level.c_str(), &end);
  if (level.empty() || *end != '\0') throw ConfigError("noise level '" + level + "' is not a number");
  spec.seed = seed;
  spec.validate();
  return spec;
}

FuzzyVector corrupt(const FuzzyVector& x, const NoiseSpec& spec, std::optional<ImageGeometry> geometry) {
  spec.validate();
  std::vector<double> out = x.raw();
  PortableRng rng(spec.seed);

  switch (spec.kind) {
    case NoiseKind::salt_pepper:
      if (spec.level == 0.0) break;
      for (double& v : out) {
        const double u = rng.uniform();
        if (u < spec.level) v = u < 0.5 * spec.level ? 0.0 : 1.0;
      }
      break;
    case NoiseKind::gaussian: {
      if (spec.level == 0.0) break;
      const double sd = std::sqrt(spec.level);
      for (double& v : out) v = std::clamp(v + sd * rng.normal(), 0.0, 1.0);
      break;
    }
    case NoiseKind::motion_blur: {
      if (!geometry || geometry->width * geometry->height != x.size()) {
        throw ConfigError("motion blur needs image geometry matching the vector length");
      }
      const auto length = static_cast<std::ptrdiff_t>(spec.level);
      if (length == 1) break;
      const auto w = static_cast<std::ptrdiff_t>(geometry->width);
      const std::ptrdiff_t left = (length - 1) / 2;
      for (std::size_t r = 0; r < geometry->height; ++r) {
        const double* row = x.raw().data() + r * geometry->width;
        for (std::ptrdiff_t c = 0; c < w; ++c) {
          double sum = 0.0;
          for (std::ptrdiff_t t = 0; t < length; ++t) sum += row[std::clamp(c - left + t, std::ptrdiff_t{0}, w - 1)];
          out[r * geometry->width + static_cast<std::size_t>(c)] = std::clamp(sum / static_cast<double>(length), 0.0, 1.0);
        }
      }
      break;
    }
  }
  return FuzzyVector(std::move(out));
}

}  // namespace fmm
