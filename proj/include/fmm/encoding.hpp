#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "fmm/classifier.hpp"
#include "fmm/lattice.hpp"

namespace fmm {

/// Grayscale image, row-major, intensities in [0,1].
struct ImagePlane {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<double> pixels;

  ImagePlane() = default;
  /// Throws FormatError if width * height != pixels.size() or the image is
  /// empty; intensities are clamped into [0,1].
  ImagePlane(std::size_t width, std::size_t height, std::vector<double> pixels);

  double at(std::size_t row, std::size_t col) const { return pixels[row * width + col]; }
};

/// Reads binary PGM (P5, maxval up to 65535) or PNG (gray, gray+alpha, RGB,
/// RGBA, palette). Colour is reduced with luma weights 0.299/0.587/0.114.
ImagePlane read_image(const std::filesystem::path& path);
/// Writes an 8-bit binary PGM.
void write_pgm(const std::filesystem::path& path, const ImagePlane& image);

/// Bilinear resize with pixel-centre alignment (no antialiasing) followed by
/// a row-major flatten.
FuzzyVector image_to_vector(const ImagePlane& image, std::size_t target_width, std::size_t target_height);

struct EmbeddingStats {
  std::vector<double> mean;
  std::vector<double> sd;
  std::size_t dimension() const noexcept { return mean.size(); }
};

/// Floor substituted for vanishing standard deviations.
inline constexpr double kMinStandardDeviation = 1e-8;

/// Componentwise mean and population standard deviation. Needs at least two
/// vectors of equal dimension (ConfigError / DimensionError otherwise).
EmbeddingStats fit_embedding_stats(const std::vector<std::vector<double>>& training_vectors);

/// x_i = 1 / (1 + exp(-(v_i - mean_i) / sd_i)).
FuzzyVector standardize_logistic(const std::vector<double>& v, const EmbeddingStats& stats);

struct LabeledRow {
  std::string label;
  std::vector<double> values;
};

/// Reads `label,v1,...,vm` rows. A first row whose second field is not
/// numeric is taken as the header. All rows must share one dimension.
std::vector<LabeledRow> read_labeled_csv(const std::filesystem::path& path);
/// Same as read_labeled_csv but every component must lie in [0,1].
std::vector<LabeledVector> read_dataset_csv(const std::filesystem::path& path);
/// Header `label,x1,...,xn`; components printed with 17 significant digits.
void write_dataset_csv(const std::filesystem::path& path, const std::vector<LabeledVector>& dataset);

/// Encodes an image database laid out as root/<label>/<image>. Labels and
/// images are visited in natural (digit-aware) order, so "first N" splits
/// follow the file numbering.
std::vector<LabeledVector> encode_image_directory(const std::filesystem::path& root, std::size_t target_width,
                                                  std::size_t target_height);

/// Digit-aware string ordering: "s2" < "s10", "9.pgm" < "10.pgm".
bool natural_less(const std::string& a, const std::string& b);

/// Formats v with 17 significant digits.
std::string format_exact(double v);

}  // namespace fmm
