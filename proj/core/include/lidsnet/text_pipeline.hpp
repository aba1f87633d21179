#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace lidsnet {

// Reserved ids shared by both vocabularies.
inline constexpr std::int32_t kPadId = 0;
inline constexpr std::int32_t kUnkId = 1;

// Surface forms of the reserved word-vocab entries. Corpus tokens are
// lowercased, so the uppercase names can never collide with a real token.
inline constexpr const char* kPadToken = "<PAD>";
inline constexpr const char* kUnkToken = "<UNK>";

// Label id assigned to valid/test samples whose intent never occurs in the
// training split. Always scored as a misclassification.
inline constexpr std::int32_t kUnseenLabel = -1;

// Whitespace split + lowercase. Corpora arrive pre-tokenized; this just
// normalizes case and collapses whitespace runs.
std::vector<std::string> tokenize(const std::string& text);

class WordVocab {
 public:
  WordVocab();

  // Returns the id, inserting if absent (construction only).
  std::int32_t add(const std::string& token);
  // PAD/UNK-aware lookup; unknown tokens map to kUnkId.
  std::int32_t id_of(const std::string& token) const;
  bool contains(const std::string& token) const;

  std::size_t size() const { return tokens_.size(); }
  const std::string& token(std::int32_t id) const { return tokens_.at(static_cast<std::size_t>(id)); }
  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::int32_t> index_;
};

// Character vocabulary over bytes of the UTF-8 token text, which keeps it
// small and makes multi-byte codepoints well-defined without a decoder.
class CharVocab {
 public:
  CharVocab();

  std::int32_t add(unsigned char c);
  std::int32_t id_of(unsigned char c) const;

  std::size_t size() const { return chars_.size(); }
  // Byte value for a given id; ids 0/1 are PAD/UNK and have no byte.
  const std::vector<std::int32_t>& chars() const { return chars_; }
  static CharVocab from_id_list(const std::vector<std::int32_t>& chars);

 private:
  std::vector<std::int32_t> chars_;  // chars_[id] = byte value, -1 for PAD/UNK
  std::int32_t index_[256];
};

struct EncodedSentence {
  std::vector<std::int32_t> word_ids;  // length t_max
  std::vector<std::int32_t> char_ids;  // t_max * l_max grid, row-major
  std::int32_t true_length = 0;        // non-pad tokens
  std::vector<std::int32_t> char_lengths;  // per word, length t_max

  std::int32_t t_max() const { return static_cast<std::int32_t>(word_ids.size()); }
  std::int32_t l_max() const {
    return word_ids.empty() ? 0 : static_cast<std::int32_t>(char_ids.size() / word_ids.size());
  }
};

// Builds both vocabularies from the training split, first-occurrence order.
// Throws std::invalid_argument on an empty corpus.
void build_vocabs(const std::vector<std::vector<std::string>>& train_sentences,
                  WordVocab& word_vocab, CharVocab& char_vocab);

// OOV words keep their real char ids under the UNK word id. Sentences and
// words beyond t_max/l_max are truncated. Throws on an empty token list.
EncodedSentence encode_sentence(const std::vector<std::string>& tokens,
                                const WordVocab& word_vocab, const CharVocab& char_vocab,
                                std::int32_t t_max, std::int32_t l_max);

// In-vocab word ids back to tokens, PAD ignored.
std::vector<std::string> decode_words(const EncodedSentence& s, const WordVocab& vocab);

enum class Split { kTrain, kValid, kTest };
const char* split_name(Split s);

struct LabeledDataset {
  std::vector<EncodedSentence> sentences;
  std::vector<std::int32_t> labels;             // kUnseenLabel allowed outside train
  std::vector<std::string> label_names;         // train-intent order
  std::vector<std::vector<std::string>> raw_tokens;  // pre-encoding token lists
  Split split = Split::kTrain;

  std::size_t size() const { return sentences.size(); }
  std::int32_t num_classes() const { return static_cast<std::int32_t>(label_names.size()); }
};

struct DatasetBundle {
  LabeledDataset train, valid, test;
  WordVocab word_vocab;
  CharVocab char_vocab;
};

// Loads <root>/{train,valid,test}/{seq.in,label}. Vocabularies and the
// intent list come from the training split only; valid/test labels unseen
// in train map to kUnseenLabel. Throws std::runtime_error naming the file
// (and line when applicable) on any structural problem.
DatasetBundle load_dataset(const std::string& dir_path, std::int32_t t_max, std::int32_t l_max);

}  // namespace lidsnet
