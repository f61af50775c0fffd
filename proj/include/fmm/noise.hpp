#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fmm/lattice.hpp"

namespace fmm {

enum class NoiseKind { salt_pepper, gaussian, motion_blur };

const char* to_string(NoiseKind kind);
NoiseKind noise_kind_from_string(std::string_view text);

/// Corruption model. `level` is the flip probability rho in [0, 0.5] for
/// salt-and-pepper, the variance in [0, 0.5] for Gaussian noise, and the
/// kernel length in {1..20} pixels for horizontal motion blur.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::salt_pepper;
  double level = 0.0;
  std::uint64_t seed = 0;

  /// Throws ConfigError when `level` is outside the kind's range.
  void validate() const;
};

/// Parses "salt_pepper:0.05", "gaussian:0.01" or "motion:9".
NoiseSpec parse_noise_spec(std::string_view text, std::uint64_t seed = 0);

struct ImageGeometry {
  std::size_t width = 0;
  std::size_t height = 0;
};

/// Deterministic corruption of x given the spec's seed.
///
/// Salt-and-pepper replaces each component with probability rho by 0 or 1
/// (equal odds). Gaussian noise adds N(0, variance) and clamps. Motion blur
/// averages each pixel with the window of `level` pixels around it on its
/// row (replicate padding); it needs the image geometry (ConfigError
/// otherwise).
FuzzyVector corrupt(const FuzzyVector& x, const NoiseSpec& spec,
                    std::optional<ImageGeometry> geometry = std::nullopt);

/// Per-item seed for batch corruption.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept { return seed ^ index; }

}  // namespace fmm
