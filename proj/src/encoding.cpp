#include "fmm/encoding.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fmm/error.hpp"

namespace fmm {

namespace fs = std::filesystem;

namespace {

constexpr double kLumaR = 0.299;
constexpr double kLumaG = 0.587;
constexpr double kLumaB = 0.114;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Skips whitespace and '#' comments in a PNM header.
void skip_pnm_space(const std::string& data, std::size_t& pos) {
  while (pos < data.size()) {
    if (data[pos] == '#') {
      while (pos < data.size() && data[pos] != '\n') ++pos;
    } else if (std::isspace(static_cast<unsigned char>(data[pos]))) {
      ++pos;
    } else {
      break;
    }
  }
}

std::size_t read_pnm_int(const std::string& data, std::size_t& pos, const fs::path& path) {
  skip_pnm_space(data, pos);
  std::size_t start = pos;
  while (pos < data.size() && std::isdigit(static_cast<unsigned char>(data[pos]))) ++pos;
  if (start == pos) throw FormatError("malformed PGM header in '" + path.string() + "'");
  return std::stoul(data.substr(start, pos - start));
}

ImagePlane read_pgm(const fs::path& path, const std::string& data) {
  std::size_t pos = 2;
  const std::size_t width = read_pnm_int(data, pos, path);
  const std::size_t height = read_pnm_int(data, pos, path);
  const std::size_t maxval = read_pnm_int(data, pos, path);
  if (width == 0 || height == 0) throw FormatError("empty image '" + path.string() + "'");
  if (maxval == 0 || maxval > 65535) throw FormatError("unsupported PGM maxval in '" + path.string() + "'");
  ++pos;  // single whitespace byte before the raster
  const std::size_t bytes_per_sample = maxval > 255 ? 2 : 1;
  if (data.size() < pos + width * height * bytes_per_sample) {
    throw FormatError("truncated PGM raster in '" + path.string() + "'");
  }
  std::vector<double> pixels(width * height);
  const auto* raster = reinterpret_cast<const unsigned char*>(data.data() + pos);
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    const unsigned value = bytes_per_sample == 1 ? raster[i] : (raster[2 * i] << 8u) | raster[2 * i + 1];
    pixels[i] = static_cast<double>(value) / static_cast<double>(maxval);
  }
  return ImagePlane(width, height, std::move(pixels));
}

ImagePlane read_png(const fs::path& path) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (png_image_begin_read_from_file(&image, path.c_str()) == 0) {
    throw FormatError("cannot decode PNG '" + path.string() + "': " + image.message);
  }
  const bool colour = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  image.format = colour ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  std::vector<png_byte> buffer(PNG_IMAGE_SIZE(image));
  if (png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr) == 0) {
    png_image_free(&image);
    throw FormatError("cannot decode PNG '" + path.string() + "': " + image.message);
  }
  const std::size_t width = image.width, height = image.height;
  std::vector<double> pixels(width * height);
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    if (colour) {
      const png_byte* px = buffer.data() + 3 * i;
      pixels[i] = (kLumaR * px[0] + kLumaG * px[1] + kLumaB * px[2]) / 255.0;
    } else {
      pixels[i] = buffer[i] / 255.0;
    }
  }
  return ImagePlane(width, height, std::move(pixels));
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

bool parse_double(const std::string& text, double& out) {
  const char* begin = text.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  if (end == begin) return false;
  while (*end != '\0' && std::isspace(static_cast<unsigned char>(*end))) ++end;
  return *end == '\0';
}

bool is_image_file(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".pgm" || ext == ".png";
}

}  // namespace

ImagePlane::ImagePlane(std::size_t w, std::size_t h, std::vector<double> px)
    : width(w), height(h), pixels(std::move(px)) {
  if (width == 0 || height == 0 || pixels.empty()) throw FormatError("image is empty");
  if (width * height != pixels.size()) {
    throw FormatError("image of " + std::to_string(width) + "x" + std::to_string(height) + " has " +
                      std::to_string(pixels.size()) + " pixels");
  }
  for (double& p : pixels) p = UnitScalar::clamped(p).value();
}

ImagePlane read_image(const fs::path& path) {
  const std::string data = read_file(path);
  if (data.size() >= 2 && data[0] == 'P' && data[1] == '5') return read_pgm(path, data);
  static const unsigned char kPngMagic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (data.size() >= 8 && std::equal(kPngMagic, kPngMagic + 8, reinterpret_cast<const unsigned char*>(data.data()))) {
    return read_png(path);
  }
  throw FormatError("'" + path.string() + "' is neither a binary PGM nor a PNG image");
}

void write_pgm(const fs::path& path, const ImagePlane& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write '" + path.string() + "'");
  out << "P5\n" << image.width << ' ' << image.height << "\n255\n";
  for (double p : image.pixels) out.put(static_cast<char>(static_cast<unsigned char>(std::lround(p * 255.0))));
  if (!out) throw FileError("cannot write '" + path.string() + "'");
}

FuzzyVector image_to_vector(const ImagePlane& image, std::size_t target_width, std::size_t target_height) {
  if (image.pixels.empty()) throw FormatError("image is empty");
  if (target_width == 0 || target_height == 0) throw ConfigError("target image size must be positive");
  if (target_width == image.width && target_height == image.height) return FuzzyVector(image.pixels);

  const double sx = static_cast<double>(image.width) / static_cast<double>(target_width);
  const double sy = static_cast<double>(image.height) / static_cast<double>(target_height);
  const double max_x = static_cast<double>(image.width - 1);
  const double max_y = static_cast<double>(image.height - 1);

  std::vector<double> out(target_width * target_height);
  for (std::size_t r = 0; r < target_height; ++r) {
    const double y = std::clamp((static_cast<double>(r) + 0.5) * sy - 0.5, 0.0, max_y);
    const auto y0 = static_cast<std::size_t>(y);
    const std::size_t y1 = std::min(y0 + 1, image.height - 1);
    const double fy = y - static_cast<double>(y0);
    for (std::size_t c = 0; c < target_width; ++c) {
      const double x = std::clamp((static_cast<double>(c) + 0.5) * sx - 0.5, 0.0, max_x);
      const auto x0 = static_cast<std::size_t>(x);
      const std::size_t x1 = std::min(x0 + 1, image.width - 1);
      const double fx = x - static_cast<double>(x0);
      const double top = (1.0 - fx) * image.at(y0, x0) + fx * image.at(y0, x1);
      const double bottom = (1.0 - fx) * image.at(y1, x0) + fx * image.at(y1, x1);
      out[r * target_width + c] = (1.0 - fy) * top + fy * bottom;
    }
  }
  return FuzzyVector::clamped(std::move(out));
}

EmbeddingStats fit_embedding_stats(const std::vector<std::vector<double>>& training_vectors) {
  if (training_vectors.size() < 2) throw ConfigError("embedding statistics need at least two training vectors");
  const std::size_t d = training_vectors.front().size();
  if (d == 0) throw DimensionError("embedding vectors must not be empty");
  EmbeddingStats stats;
  stats.mean.assign(d, 0.0);
  stats.sd.assign(d, 0.0);
  for (const auto& v : training_vectors) {
    if (v.size() != d) {
      throw DimensionError("embedding of dimension " + std::to_string(v.size()) + ", expected " + std::to_string(d));
    }
    for (std::size_t i = 0; i < d; ++i) stats.mean[i] += v[i];
  }
  const auto count = static_cast<double>(training_vectors.size());
  for (double& m : stats.mean) m /= count;
  for (const auto& v : training_vectors) {
    for (std::size_t i = 0; i < d; ++i) stats.sd[i] += (v[i] - stats.mean[i]) * (v[i] - stats.mean[i]);
  }
  for (double& s : stats.sd) s = std::max(std::sqrt(s / count), kMinStandardDeviation);
  return stats;
}

FuzzyVector standardize_logistic(const std::vector<double>& v, const EmbeddingStats& stats) {
  if (v.size() != stats.dimension()) {
    throw DimensionError("embedding of dimension " + std::to_string(v.size()) + ", statistics fitted for " +
                         std::to_string(stats.dimension()));
  }
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = 1.0 / (1.0 + std::exp(-(v[i] - stats.mean[i]) / stats.sd[i]));
  }
  return FuzzyVector::clamped(std::move(out));
}

std::vector<LabeledRow> read_labeled_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open '" + path.string() + "'");
  std::vector<LabeledRow> rows;
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() < 2) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) + ": expected a label and components");
    }
    double probe = 0.0;
    if (rows.empty() && dim == 0 && !parse_double(fields[1], probe)) {
      dim = fields.size() - 1;  // header row
      continue;
    }
    LabeledRow row{fields[0], {}};
    row.values.reserve(fields.size() - 1);
    for (std::size_t f = 1; f < fields.size(); ++f) {
      double v = 0.0;
      if (!parse_double(fields[f], v)) {
        throw FormatError(path.string() + ":" + std::to_string(line_no) + ": '" + fields[f] + "' is not a number");
      }
      row.values.push_back(v);
    }
    if (dim == 0) dim = row.values.size();
    if (row.values.size() != dim) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) + ": " + std::to_string(row.values.size()) +
                        " components, expected " + std::to_string(dim));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<LabeledVector> read_dataset_csv(const fs::path& path) {
  std::vector<LabeledVector> out;
  for (auto& row : read_labeled_csv(path)) {
    for (double v : row.values) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw FormatError(path.string() + ": component " + format_exact(v) + " of '" + row.label +
                          "' is outside [0,1]");
      }
    }
    out.push_back({row.label, FuzzyVector(std::move(row.values))});
  }
  return out;
}

void write_dataset_csv(const fs::path& path, const std::vector<LabeledVector>& dataset) {
  std::ofstream out(path);
  if (!out) throw FileError("cannot write '" + path.string() + "'");
  const std::size_t n = dataset.empty() ? 0 : dataset.front().vector.size();
  out << "label";
  for (std::size_t i = 1; i <= n; ++i) out << ",x" << i;
  out << '\n';
  for (const auto& item : dataset) {
    out << item.label;
    for (double v : item.vector) out << ',' << format_exact(v);
    out << '\n';
  }
  if (!out) throw FileError("cannot write '" + path.string() + "'");
}

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ei = i, ej = j;
      while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
      while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
      std::string na = a.substr(i, ei - i), nb = b.substr(j, ej - j);
      na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
      nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ei;
      j = ej;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

std::vector<LabeledVector> encode_image_directory(const fs::path& root, std::size_t target_width,
                                                  std::size_t target_height) {
  if (!fs::is_directory(root)) throw FileError("'" + root.string() + "' is not a directory");
  std::vector<fs::path> classes;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory()) classes.push_back(entry.path());
  }
  auto by_name = [](const fs::path& a, const fs::path& b) {
    return natural_less(a.filename().string(), b.filename().string());
  };
  std::sort(classes.begin(), classes.end(), by_name);

  std::vector<LabeledVector> dataset;
  for (const auto& dir : classes) {
    std::vector<fs::path> images;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && is_image_file(entry.path())) images.push_back(entry.path());
    }
    std::sort(images.begin(), images.end(), by_name);
    for (const auto& img : images) {
      dataset.push_back({dir.filename().string(), image_to_vector(read_image(img), target_width, target_height)});
    }
  }
  if (dataset.empty()) throw FileError("no PGM/PNG images found under '" + root.string() + "'");
  return dataset;
}

std::string format_exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace fmm
