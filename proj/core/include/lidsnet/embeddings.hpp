#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "lidsnet/config.hpp"
#include "lidsnet/rng.hpp"
#include "lidsnet/text_pipeline.hpp"

namespace lidsnet {

// Embedding init bound; rows not covered by a pretrained file are drawn
// from uniform(-kEmbedInitBound, kEmbedInitBound).
inline constexpr double kEmbedInitBound = 0.05;

struct WordEmbeddingTable {
  std::vector<float> matrix;  // |vocab| x dim, row-major; row 0 (PAD) zero at init
  std::int32_t dim = 0;
  std::int32_t rows = 0;
  double coverage = 0.0;      // fraction of non-reserved tokens found in the file
};

struct CharEmbeddingTable {
  std::vector<float> matrix;  // |vocab| x dim; row 0 (PAD) zero at init
  std::int32_t dim = 0;
  std::int32_t rows = 0;
};

// Parses GloVe text format (token + dim floats per line) or fastText text
// format (same, preceded by a "count dim" header line, which is detected
// and skipped). When `filter` is non-null only its tokens are kept, so a
// multi-gigabyte file streams through without being materialized.
// Duplicate tokens keep the first occurrence. Throws std::runtime_error
// naming the line on a float-count mismatch or non-finite value.
std::unordered_map<std::string, std::vector<float>> parse_vector_file(
    const std::string& path, std::int32_t expected_dim, const WordVocab* filter = nullptr);

// Pretrained modes copy covered rows from the file and draw the rest from
// uniform(-0.05, 0.05); random mode draws every non-PAD row. PAD row is
// zero in all modes.
WordEmbeddingTable build_word_table(const WordVocab& vocab, EmbeddingMode mode,
                                    const std::string& path, std::int32_t dim,
                                    std::uint64_t seed);

CharEmbeddingTable build_char_table(const CharVocab& vocab, std::int32_t dim, std::uint64_t seed);

}  // namespace lidsnet
