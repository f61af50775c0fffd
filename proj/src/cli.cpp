#include "fmm/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fmm/classifier.hpp"
#include "fmm/encoding.hpp"
#include "fmm/error.hpp"
#include "fmm/noise.hpp"
#include "fmm/reference_checks.hpp"
#include "fmm/serialize.hpp"

namespace fmm {

namespace {

std::string human(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string join_exact(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_exact(v[i]);
  return s;
}

// splitmix64 finaliser; decorrelates per-repetition seeds.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct ModelFlags {
  std::string model = "zadeh-max";
  std::string family = "gaines";
  std::string mask = "on";
  std::string mask_strategy = "similarity";
  std::string similarity = "hamming";
  double epsilon = 0.0;

  ModelConfig config() const {
    ModelConfig c;
    c.type = model_type_from_string(model);
    c.family = family;
    c.mask = mask == "on";
    c.mask_strategy = mask_strategy_from_string(mask_strategy);
    c.similarity = similarity;
    c.inclusion_epsilon = epsilon;
    return c;
  }
};

void add_model_flags(CLI::App* sub, ModelFlags& f) {
  sub->add_option("--model", f.model, "afmm-max-c|afmm-min-d|pafmm-max-c|pafmm-min-d|zadeh-max|zadeh-min")
      ->capture_default_str();
  sub->add_option("--family", f.family, "godel|goguen|lukasiewicz|gaines|compensatory_and")->capture_default_str();
  sub->add_option("--mask", f.mask, "on|off")->check(CLI::IsMember({"on", "off"}))->capture_default_str();
  sub->add_option("--mask-strategy", f.mask_strategy, "similarity|nmse-compare")->capture_default_str();
  sub->add_option("--similarity", f.similarity, "similarity measure")->capture_default_str();
  sub->add_option("--epsilon", f.epsilon, "inclusion tolerance for Zadeh models")->capture_default_str();
}

struct NoiseFlags {
  std::string noise;
  std::uint64_t seed = 0;
  std::size_t width = 0;
  std::size_t height = 0;

  std::optional<ImageGeometry> geometry() const {
    if (width == 0 || height == 0) return std::nullopt;
    return ImageGeometry{width, height};
  }
};

FuzzyVector parse_vector(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ConfigError("--input: '" + item + "' is not a number");
    }
  }
  if (values.empty()) throw ConfigError("--input: empty vector");
  return FuzzyVector(std::move(values));
}

struct InputFlags {
  std::string values;
  std::string file;
  std::size_t row = 0;

  void add(CLI::App* sub) {
    auto* v = sub->add_option("--input", values, "comma-separated components");
    auto* f = sub->add_option("--input-file", file, "dataset CSV to take the input row from");
    v->excludes(f);
    sub->add_option("--row", row, "0-based row of --input-file")->capture_default_str();
  }

  LabeledVector get() const {
    if (!file.empty()) {
      const auto data = read_dataset_csv(file);
      if (row >= data.size()) throw ConfigError("--row " + std::to_string(row) + " is past the end of " + file);
      return data[row];
    }
    if (values.empty()) throw ConfigError("one of --input or --input-file is required");
    return {"", parse_vector(values)};
  }
};

std::vector<LabeledVector> training_part(const std::vector<LabeledVector>& data, std::optional<std::size_t> first) {
  return first ? split_first_n(data, *first).first : data;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw FileError("cannot write '" + path + "'");
}

std::vector<double> default_levels(NoiseKind kind) {
  if (kind == NoiseKind::motion_blur) {
    std::vector<double> v;
    for (int l = 1; l <= 20; ++l) v.push_back(l);
    return v;
  }
  return {0.0, 0.1, 0.2, 0.3, 0.4, 0.5};
}

std::vector<LabeledVector> corrupt_all(const std::vector<LabeledVector>& set, NoiseKind kind, double level,
                                       std::uint64_t seed, std::optional<ImageGeometry> geometry) {
  std::vector<LabeledVector> out;
  out.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    NoiseSpec spec{kind, level, derive_seed(seed, i)};
    out.push_back({set[i].label, corrupt(set[i].vector, spec, geometry)});
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy morphological associative memories"};
  app.name("fmm");
  app.require_subcommand(1);

  // encode
  auto* encode = app.add_subcommand("encode", "Encode images or embeddings into a dataset CSV");
  std::string enc_images, enc_embeddings, enc_out;
  std::size_t enc_w = 0, enc_h = 0;
  std::optional<std::size_t> enc_first;
  auto* o_images = encode->add_option("--images", enc_images, "directory of <label>/<image> files");
  auto* o_emb = encode->add_option("--embeddings", enc_embeddings, "CSV of label,v1..vn rows");
  o_images->excludes(o_emb);
  encode->add_option("--width", enc_w, "target width");
  encode->add_option("--height", enc_h, "target height");
  encode->add_option("--train-first", enc_first, "fit embedding statistics on the first N rows per label");
  encode->add_option("--out", enc_out, "output dataset CSV")->required();

  // train
  auto* train = app.add_subcommand("train", "Train a memory bank");
  std::string tr_data, tr_out;
  std::optional<std::size_t> tr_first;
  ModelFlags tr_model;
  train->add_option("--data", tr_data, "dataset CSV")->required();
  train->add_option("--train-first", tr_first, "train on the first N items per label");
  train->add_option("--out", tr_out, "bank JSON")->required();
  add_model_flags(train, tr_model);

  // recall
  auto* recall_cmd = app.add_subcommand("recall", "Recall a vector from one class memory");
  std::string rc_bank, rc_label;
  InputFlags rc_input;
  recall_cmd->add_option("--bank", rc_bank, "bank JSON")->required();
  recall_cmd->add_option("--label", rc_label, "class label")->required();
  rc_input.add(recall_cmd);

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Classify one vector");
  std::string cl_bank;
  InputFlags cl_input;
  NoiseFlags cl_noise;
  classify_cmd->add_option("--bank", cl_bank, "bank JSON")->required();
  cl_input.add(classify_cmd);
  classify_cmd->add_option("--noise", cl_noise.noise, "corrupt the input first, e.g. salt_pepper:0.05");
  classify_cmd->add_option("--seed", cl_noise.seed, "noise seed")->capture_default_str();
  classify_cmd->add_option("--width", cl_noise.width, "image width (motion blur)");
  classify_cmd->add_option("--height", cl_noise.height, "image height (motion blur)");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate recognition rates");
  std::string ev_bank, ev_data, ev_json, ev_csv;
  std::optional<std::size_t> ev_first;
  ModelFlags ev_model;
  NoiseFlags ev_noise;
  eval->add_option("--bank", ev_bank, "bank JSON (otherwise train from --data)");
  eval->add_option("--data", ev_data, "dataset CSV")->required();
  eval->add_option("--train-first", ev_first, "train on the first N items per label, test on the rest");
  eval->add_option("--out", ev_json, "report JSON");
  eval->add_option("--csv", ev_csv, "per-class CSV");
  eval->add_option("--noise", ev_noise.noise, "corrupt the test set, e.g. gaussian:0.01");
  eval->add_option("--seed", ev_noise.seed, "noise seed")->capture_default_str();
  eval->add_option("--width", ev_noise.width, "image width (motion blur)");
  eval->add_option("--height", ev_noise.height, "image height (motion blur)");
  add_model_flags(eval, ev_model);

  // noise-sweep
  auto* sweep = app.add_subcommand("noise-sweep", "Recognition rate as a function of noise level");
  std::string sw_data, sw_kind, sw_out;
  std::size_t sw_first = 0, sw_reps = 30;
  std::vector<double> sw_levels;
  ModelFlags sw_model;
  NoiseFlags sw_noise;
  sweep->add_option("--data", sw_data, "dataset CSV")->required();
  sweep->add_option("--train-first", sw_first, "train on the first N items per label")->required();
  sweep->add_option("--noise", sw_kind, "salt_pepper|gaussian|motion")->required();
  sweep->add_option("--levels", sw_levels, "noise levels (default: kind-specific grid)")->delimiter(',');
  sweep->add_option("--reps", sw_reps, "repetitions per level")->capture_default_str();
  sweep->add_option("--seed", sw_noise.seed, "base seed")->capture_default_str();
  sweep->add_option("--width", sw_noise.width, "image width (motion blur)");
  sweep->add_option("--height", sw_noise.height, "image height (motion blur)");
  sweep->add_option("--out", sw_out, "output CSV (default: stdout)");
  add_model_flags(sweep, sw_model);

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "Reproduce the embedded reference example values");
  bool vf_json = false;
  verify->add_flag("--json", vf_json, "machine-readable report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    if (*encode) {
      std::vector<LabeledVector> data;
      if (!enc_images.empty()) {
        if (enc_w == 0 || enc_h == 0) throw ConfigError("--images needs --width and --height");
        data = encode_image_directory(enc_images, enc_w, enc_h);
      } else if (!enc_embeddings.empty()) {
        const auto rows = read_labeled_csv(enc_embeddings);
        std::vector<std::vector<double>> fit;
        std::map<std::string, std::size_t> seen;
        for (const auto& r : rows) {
          if (!enc_first || seen[r.label]++ < *enc_first) fit.push_back(r.values);
        }
        const auto stats = fit_embedding_stats(fit);
        for (const auto& r : rows) data.push_back({r.label, standardize_logistic(r.values, stats)});
      } else {
        throw ConfigError("encode needs --images or --embeddings");
      }
      write_dataset_csv(enc_out, data);
      out << "encoded " << data.size() << " vectors of length " << data.front().vector.size() << " to " << enc_out
          << '\n';
      return exit_ok;
    }

    if (*train) {
      const auto data = training_part(read_dataset_csv(tr_data), tr_first);
      const auto bank = build_bank(data, tr_model.config());
      save_json(tr_out, to_json(bank));
      out << "trained " << bank.size() << " class memories of dimension " << bank.dimension() << " on "
          << data.size() << " vectors; wrote " << tr_out << '\n';
      return exit_ok;
    }

    if (*recall_cmd) {
      const auto bank = bank_from_json(load_json(rc_bank));
      const auto idx = bank.index_of(rc_label);
      if (idx == bank.size()) throw NotFoundError("no class labelled '" + rc_label + "' in " + rc_bank);
      const auto x = rc_input.get().vector;
      const auto& model = bank.classes()[idx].model;
      if (x.size() != bank.dimension()) {
        throw DimensionError("input has length " + std::to_string(x.size()) + ", bank expects " +
                             std::to_string(bank.dimension()));
      }
      OpCounter counter;
      const auto y = fmm::recall(model, x, &counter);
      out << "output," << join_exact(y.raw()) << '\n';
      // Trace: the projection coefficients, plus the mask index for masked models.
      const ProjectionMemory* proj = std::get_if<ProjectionMemory>(&model);
      FuzzyVector traced_input = x;
      if (const auto* masked = std::get_if<MaskedMemory>(&model)) {
        out << "mask_index," << masked->mask_index(x) << '\n';
        proj = std::get_if<ProjectionMemory>(&masked->inner());
        traced_input = masked->masked_input(x);
      }
      if (proj) {
        const auto trace = proj->recall_traced(traced_input).trace;
        out << "coefficients," << join_exact(trace.coefficients) << '\n';
        if (proj->kind() == ProjectionKind::zadeh_max || proj->kind() == ProjectionKind::zadeh_min) {
          out << "index_set";
          for (auto i : trace.index_set) out << ',' << i;
          out << '\n';
        }
      }
      out << "fuzzy_op_evals," << counter.fuzzy_op_evals << "\ncomparisons," << counter.comparisons << '\n';
      return exit_ok;
    }

    if (*classify_cmd) {
      const auto bank = bank_from_json(load_json(cl_bank));
      auto item = cl_input.get();
      if (!cl_noise.noise.empty()) {
        item.vector = corrupt(item.vector, parse_noise_spec(cl_noise.noise, cl_noise.seed), cl_noise.geometry());
      }
      const auto result = classify(bank, item.vector);
      out << "label: " << result.label << '\n';
      for (std::size_t i = 0; i < bank.size(); ++i) {
        out << "  " << bank.classes()[i].label << ": " << human(result.scores[i]) << '\n';
      }
      return exit_ok;
    }

    if (*eval) {
      const auto data = read_dataset_csv(ev_data);
      std::vector<LabeledVector> test = data;
      std::optional<MemoryBank> bank;
      if (!ev_bank.empty()) {
        bank.emplace(bank_from_json(load_json(ev_bank)));
        if (ev_first) test = split_first_n(data, *ev_first).second;
      } else {
        if (!ev_first) throw ConfigError("eval needs --bank or --train-first");
        auto [tr, te] = split_first_n(data, *ev_first);
        bank.emplace(build_bank(tr, ev_model.config()));
        test = std::move(te);
      }
      if (!ev_noise.noise.empty()) {
        const auto spec = parse_noise_spec(ev_noise.noise, ev_noise.seed);
        test = corrupt_all(test, spec.kind, spec.level, spec.seed, ev_noise.geometry());
      }
      const auto report = evaluate(*bank, test);
      if (!ev_json.empty()) write_text(ev_json, report.to_json() + "\n");
      if (!ev_csv.empty()) write_text(ev_csv, report.to_csv());
      out << "recognition rate: " << human(report.overall_rr) << " (" << report.correct << '/' << report.total
          << ")\n";
      for (std::size_t i = 0; i < report.labels.size(); ++i) {
        out << "  " << report.labels[i] << ": " << human(report.per_class_rr[i]) << " (" << report.per_class_correct[i]
            << '/' << report.per_class_total[i] << ")\n";
      }
      return exit_ok;
    }

    if (*sweep) {
      if (sw_reps == 0) throw ConfigError("--reps must be positive");
      const auto kind = noise_kind_from_string(sw_kind);
      if (sw_levels.empty()) sw_levels = default_levels(kind);
      for (double level : sw_levels) NoiseSpec{kind, level, 0}.validate();
      const auto data = read_dataset_csv(sw_data);
      const auto [tr, te] = split_first_n(data, sw_first);
      const auto bank = build_bank(tr, sw_model.config());

      std::ostringstream csv;
      csv << "noise,level,repetition,rr\n";
      for (std::size_t li = 0; li < sw_levels.size(); ++li) {
        for (std::size_t rep = 0; rep < sw_reps; ++rep) {
          const std::uint64_t seed = mix(sw_noise.seed ^ mix(li * sw_reps + rep));
          const auto report = evaluate(bank, corrupt_all(te, kind, sw_levels[li], seed, sw_noise.geometry()));
          csv << to_string(kind) << ',' << format_exact(sw_levels[li]) << ',' << rep << ','
              << format_exact(report.overall_rr) << '\n';
        }
      }
      if (sw_out.empty()) {
        out << csv.str();
      } else {
        write_text(sw_out, csv.str());
        out << "wrote " << sw_levels.size() * sw_reps << " rows to " << sw_out << '\n';
      }
      return exit_ok;
    }

    if (*verify) {
      const auto report = run_reference_checks();
      out << (vf_json ? report.to_json() + "\n" : report.to_text());
      return report.passed() ? exit_ok : exit_verification_failed;
    }
  } catch (const FileError& e) {
    err << "fmm: " << e.what() << '\n';
    return exit_io;
  } catch (const FormatError& e) {
    err << "fmm: " << e.what() << '\n';
    return exit_io;
  } catch (const Error& e) {
    err << "fmm: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace fmm
