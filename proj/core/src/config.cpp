#include "lidsnet/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lidsnet {

const char* to_string(EmbeddingMode m) {
  switch (m) {
    case EmbeddingMode::kRandom: return "random";
    case EmbeddingMode::kGlove: return "glove";
    case EmbeddingMode::kFasttext: return "fasttext";
    case EmbeddingMode::kCharOnly: return "char-only";
  }
  return "?";
}

const char* to_string(Precision p) { return p == Precision::kF32 ? "f32" : "f64"; }

EmbeddingMode embedding_mode_from_string(const std::string& s) {
  if (s == "random") return EmbeddingMode::kRandom;
  if (s == "glove") return EmbeddingMode::kGlove;
  if (s == "fasttext") return EmbeddingMode::kFasttext;
  if (s == "char-only" || s == "char_only") return EmbeddingMode::kCharOnly;
  throw std::invalid_argument("unknown embedding mode '" + s + "'");
}

Precision precision_from_string(const std::string& s) {
  if (s == "f32") return Precision::kF32;
  if (s == "f64") return Precision::kF64;
  throw std::invalid_argument("unknown precision '" + s + "' (expected f32 or f64)");
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

int parse_int(const std::string& key, const std::string& value) {
  int out = 0;
  auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
    throw std::invalid_argument("config key '" + key + "': not an integer: '" + value + "'");
  }
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
    throw std::invalid_argument("config key '" + key + "': not an unsigned integer: '" + value + "'");
  }
  return out;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    double out = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing chars");
    return out;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': not a number: '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw std::invalid_argument("config key '" + key + "': not a bool: '" + value + "'");
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> RunConfig::validate() const {
  std::vector<std::string> problems;
  auto positive = [&](int v, const char* name) {
    if (v <= 0) problems.push_back(std::string(name) + " must be positive");
  };
  if (phases != 1 && phases != 2) problems.push_back("phases must be 1 or 2");
  if (embedding_mode == EmbeddingMode::kGlove || embedding_mode == EmbeddingMode::kFasttext) {
    if (embedding_path.empty()) {
      problems.push_back(std::string("embedding.mode=") + to_string(embedding_mode) +
                         " requires embedding.path");
    }
  }
  positive(embedding_dim, "embedding.dim");
  positive(char_dim, "encoder.char_dim");
  positive(conv1_kernel, "encoder.conv1.kernel");
  positive(conv1_filters, "encoder.conv1.filters");
  positive(conv2_kernel, "encoder.conv2.kernel");
  positive(conv2_filters, "encoder.conv2.filters");
  positive(lstm_units, "encoder.lstm_units");
  positive(t_max, "text.t_max");
  positive(l_max, "text.l_max");
  if (l_max < conv1_kernel || l_max < conv2_kernel) {
    problems.push_back("text.l_max must be >= every conv kernel size");
  }
  if (!(margin > 0.0 && margin < 2.0)) problems.push_back("train.margin must be in (0, 2)");
  positive(pairs_per_class, "train.pairs_per_class");
  positive(batch_phase1, "train.batch_phase1");
  positive(batch_phase2, "train.batch_phase2");
  if (learning_rate <= 0.0) problems.push_back("train.learning_rate must be positive");
  if (dropout < 0.0 || dropout >= 1.0) problems.push_back("train.dropout must be in [0, 1)");
  if (phase1_epochs < 0) problems.push_back("train.phase1_epochs must be >= 0");
  if (phase2_epochs < 0) problems.push_back("train.phase2_epochs must be >= 0");
  positive(phase1_patience, "train.phase1_patience");
  positive(phase2_patience, "train.phase2_patience");
  positive(threads, "threads");
  return problems;
}

std::map<std::string, std::string> RunConfig::to_key_values() const {
  std::map<std::string, std::string> kv;
  kv["dataset.path"] = dataset_path;
  kv["output.dir"] = output_dir;
  kv["phases"] = std::to_string(phases);
  kv["embedding.mode"] = to_string(embedding_mode);
  kv["embedding.path"] = embedding_path;
  kv["embedding.dim"] = std::to_string(embedding_dim);
  kv["encoder.char_dim"] = std::to_string(char_dim);
  kv["encoder.conv1.kernel"] = std::to_string(conv1_kernel);
  kv["encoder.conv1.filters"] = std::to_string(conv1_filters);
  kv["encoder.conv2.kernel"] = std::to_string(conv2_kernel);
  kv["encoder.conv2.filters"] = std::to_string(conv2_filters);
  kv["encoder.lstm_units"] = std::to_string(lstm_units);
  kv["text.t_max"] = std::to_string(t_max);
  kv["text.l_max"] = std::to_string(l_max);
  kv["train.margin"] = format_double(margin);
  kv["train.pairs_per_class"] = std::to_string(pairs_per_class);
  kv["train.batch_phase1"] = std::to_string(batch_phase1);
  kv["train.batch_phase2"] = std::to_string(batch_phase2);
  kv["train.learning_rate"] = format_double(learning_rate);
  kv["train.dropout"] = format_double(dropout);
  kv["train.phase1_epochs"] = std::to_string(phase1_epochs);
  kv["train.phase1_patience"] = std::to_string(phase1_patience);
  kv["train.phase2_epochs"] = std::to_string(phase2_epochs);
  kv["train.phase2_patience"] = std::to_string(phase2_patience);
  kv["train.freeze_encoder"] = freeze_encoder ? "true" : "false";
  kv["train.seed"] = std::to_string(seed);
  kv["threads"] = std::to_string(threads);
  kv["numeric.precision"] = to_string(precision);
  return kv;
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "dataset.path") dataset_path = value;
  else if (key == "output.dir") output_dir = value;
  else if (key == "phases") phases = parse_int(key, value);
  else if (key == "embedding.mode") embedding_mode = embedding_mode_from_string(value);
  else if (key == "embedding.path") embedding_path = value;
  else if (key == "embedding.dim") embedding_dim = parse_int(key, value);
  else if (key == "encoder.char_dim") char_dim = parse_int(key, value);
  else if (key == "encoder.conv1.kernel") conv1_kernel = parse_int(key, value);
  else if (key == "encoder.conv1.filters") conv1_filters = parse_int(key, value);
  else if (key == "encoder.conv2.kernel") conv2_kernel = parse_int(key, value);
  else if (key == "encoder.conv2.filters") conv2_filters = parse_int(key, value);
  else if (key == "encoder.lstm_units") lstm_units = parse_int(key, value);
  else if (key == "text.t_max") t_max = parse_int(key, value);
  else if (key == "text.l_max") l_max = parse_int(key, value);
  else if (key == "train.margin") margin = parse_double(key, value);
  else if (key == "train.pairs_per_class") pairs_per_class = parse_int(key, value);
  else if (key == "train.batch_phase1") batch_phase1 = parse_int(key, value);
  else if (key == "train.batch_phase2") batch_phase2 = parse_int(key, value);
  else if (key == "train.learning_rate") learning_rate = parse_double(key, value);
  else if (key == "train.dropout") dropout = parse_double(key, value);
  else if (key == "train.phase1_epochs") phase1_epochs = parse_int(key, value);
  else if (key == "train.phase1_patience") phase1_patience = parse_int(key, value);
  else if (key == "train.phase2_epochs") phase2_epochs = parse_int(key, value);
  else if (key == "train.phase2_patience") phase2_patience = parse_int(key, value);
  else if (key == "train.freeze_encoder") freeze_encoder = parse_bool(key, value);
  else if (key == "train.seed") seed = parse_u64(key, value);
  else if (key == "threads") threads = parse_int(key, value);
  else if (key == "numeric.precision") precision = precision_from_string(value);
  else throw std::invalid_argument("unknown config key '" + key + "'");
}

RunConfig RunConfig::from_key_values(const std::map<std::string, std::string>& kv) {
  RunConfig cfg;
  for (const auto& [k, v] : kv) cfg.set(k, v);
  return cfg;
}

RunConfig RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    try {
      cfg.set(trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cfg;
}

void RunConfig::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write config file " + path);
  for (const auto& [k, v] : to_key_values()) out << k << " = " << v << "\n";
  if (!out) throw std::runtime_error("write failure on " + path);
}

}  // namespace lidsnet
