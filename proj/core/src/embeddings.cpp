#include "lidsnet/embeddings.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace lidsnet {

namespace {

// Splits a line into the token and the float fields that follow it.
// Returns false when the line is blank.
bool parse_line(const std::string& line, std::string& token, std::vector<float>& values) {
  values.clear();
  std::size_t pos = line.find(' ');
  if (pos == std::string::npos || pos == 0) return false;
  token = line.substr(0, pos);
  const char* p = line.data() + pos;
  const char* end = line.data() + line.size();
  while (p < end) {
    while (p < end && *p == ' ') ++p;
    if (p >= end) break;
    float v = 0.0f;
    auto res = std::from_chars(p, end, v);
    if (res.ec != std::errc()) return false;
    values.push_back(v);
    p = res.ptr;
  }
  return !values.empty();
}

// A fastText header is "count dim" — exactly two integer fields.
bool is_fasttext_header(const std::string& line) {
  int fields = 0;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && *p == ' ') ++p;
    if (p >= end) break;
    std::uint64_t v = 0;
    auto res = std::from_chars(p, end, v);
    if (res.ec != std::errc() || (res.ptr < end && *res.ptr != ' ')) return false;
    ++fields;
    p = res.ptr;
  }
  return fields == 2;
}

}  // namespace

std::unordered_map<std::string, std::vector<float>> parse_vector_file(
    const std::string& path, std::int32_t expected_dim, const WordVocab* filter) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open vector file " + path);

  std::unordered_map<std::string, std::vector<float>> out;
  std::string line, token;
  std::vector<float> values;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && is_fasttext_header(line)) continue;
    if (!parse_line(line, token, values)) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed entry");
    }
    if (static_cast<std::int32_t>(values.size()) != expected_dim) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected " +
                               std::to_string(expected_dim) + " floats, got " +
                               std::to_string(values.size()));
    }
    for (float v : values) {
      if (!std::isfinite(v)) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": non-finite value");
      }
    }
    if (filter && !filter->contains(token)) continue;
    out.emplace(token, values);  // first occurrence wins
  }
  return out;
}

WordEmbeddingTable build_word_table(const WordVocab& vocab, EmbeddingMode mode,
                                    const std::string& path, std::int32_t dim,
                                    std::uint64_t seed) {
  WordEmbeddingTable table;
  table.dim = dim;
  table.rows = static_cast<std::int32_t>(vocab.size());
  table.matrix.assign(static_cast<std::size_t>(table.rows) * dim, 0.0f);

  std::unordered_map<std::string, std::vector<float>> pretrained;
  if (mode == EmbeddingMode::kGlove || mode == EmbeddingMode::kFasttext) {
    pretrained = parse_vector_file(path, dim, &vocab);
  }

  Rng rng(seed);
  std::size_t covered = 0;
  for (std::int32_t row = 1; row < table.rows; ++row) {  // row 0 = PAD stays zero
    float* dst = table.matrix.data() + static_cast<std::size_t>(row) * dim;
    auto it = pretrained.end();
    if (!pretrained.empty() && row != kUnkId) {
      it = pretrained.find(vocab.token(row));
    }
    if (it != pretrained.end()) {
      for (std::int32_t d = 0; d < dim; ++d) dst[d] = it->second[static_cast<std::size_t>(d)];
      ++covered;
    } else {
      for (std::int32_t d = 0; d < dim; ++d) {
        dst[d] = static_cast<float>(rng.uniform(-kEmbedInitBound, kEmbedInitBound));
      }
    }
  }
  std::size_t real_tokens = vocab.size() > 2 ? vocab.size() - 2 : 0;
  table.coverage = real_tokens == 0 ? 0.0 : static_cast<double>(covered) / real_tokens;
  return table;
}

CharEmbeddingTable build_char_table(const CharVocab& vocab, std::int32_t dim, std::uint64_t seed) {
  CharEmbeddingTable table;
  table.dim = dim;
  table.rows = static_cast<std::int32_t>(vocab.size());
  table.matrix.assign(static_cast<std::size_t>(table.rows) * dim, 0.0f);
  Rng rng(seed);
  for (std::int32_t row = 1; row < table.rows; ++row) {
    float* dst = table.matrix.data() + static_cast<std::size_t>(row) * dim;
    for (std::int32_t d = 0; d < dim; ++d) {
      dst[d] = static_cast<float>(rng.uniform(-kEmbedInitBound, kEmbedInitBound));
    }
  }
  return table;
}

}  // namespace lidsnet
