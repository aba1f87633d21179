#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lidsnet {

enum class EmbeddingMode { kRandom, kGlove, kFasttext, kCharOnly };
enum class Precision { kF32, kF64 };

const char* to_string(EmbeddingMode m);
const char* to_string(Precision p);
EmbeddingMode embedding_mode_from_string(const std::string& s);
Precision precision_from_string(const std::string& s);

// Effective configuration of one run. Defaults are the published recipe:
// filter sizes 2/3 with 16 filters, 50-dim word vectors, dropout 0.2,
// batch sizes 512/32, margin 0.2, 24 LSTM units, Adam at lr 0.001,
// 50k pairs per class.
struct RunConfig {
  std::string dataset_path;
  std::string output_dir = ".";

  int phases = 2;  // 1 = classification only, 2 = siamese pretraining first
  EmbeddingMode embedding_mode = EmbeddingMode::kGlove;
  std::string embedding_path;
  int embedding_dim = 50;

  int char_dim = 16;
  int conv1_kernel = 2;
  int conv1_filters = 16;
  int conv2_kernel = 3;
  int conv2_filters = 16;
  int lstm_units = 24;

  int t_max = 46;
  int l_max = 20;

  double margin = 0.2;
  int pairs_per_class = 50000;
  int batch_phase1 = 512;
  int batch_phase2 = 32;
  double learning_rate = 0.001;
  double dropout = 0.2;
  int phase1_epochs = 12;
  int phase1_patience = 3;
  int phase2_epochs = 100;
  int phase2_patience = 10;
  bool freeze_encoder = false;

  std::uint64_t seed = 42;
  int threads = 1;
  Precision precision = Precision::kF32;

  // Validates ranges and cross-field constraints; returns a list of
  // human-readable problems (empty when the config is usable).
  std::vector<std::string> validate() const;

  // Key=value view used for config files, the run manifest, and the model
  // header. Keys are stable; parsing accepts exactly these keys.
  std::map<std::string, std::string> to_key_values() const;
  static RunConfig from_key_values(const std::map<std::string, std::string>& kv);

  // TOML-like key=value file, '#' comments, one pair per line.
  static RunConfig load_file(const std::string& path);
  void save_file(const std::string& path) const;

  // Applies a single key=value pair; throws std::invalid_argument on an
  // unknown key or malformed value.
  void set(const std::string& key, const std::string& value);
};

// Shortest round-trip decimal formatting, used everywhere a float must be
// serialized deterministically.
std::string format_double(double v);

}  // namespace lidsnet
