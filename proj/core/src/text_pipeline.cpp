#include "lidsnet/text_pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace lidsnet {

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : text) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (std::isspace(c)) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      current.push_back(static_cast<char>(std::tolower(c)));
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

WordVocab::WordVocab() {
  tokens_ = {kPadToken, kUnkToken};
  index_[kPadToken] = kPadId;
  index_[kUnkToken] = kUnkId;
}

std::int32_t WordVocab::add(const std::string& token) {
  auto it = index_.find(token);
  if (it != index_.end()) return it->second;
  std::int32_t id = static_cast<std::int32_t>(tokens_.size());
  tokens_.push_back(token);
  index_.emplace(token, id);
  return id;
}

std::int32_t WordVocab::id_of(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? kUnkId : it->second;
}

bool WordVocab::contains(const std::string& token) const {
  return index_.find(token) != index_.end();
}

CharVocab::CharVocab() {
  chars_ = {-1, -1};  // PAD, UNK
  std::fill(std::begin(index_), std::end(index_), kUnkId);
}

std::int32_t CharVocab::add(unsigned char c) {
  if (index_[c] != kUnkId) return index_[c];
  std::int32_t id = static_cast<std::int32_t>(chars_.size());
  chars_.push_back(static_cast<std::int32_t>(c));
  index_[c] = id;
  return id;
}

std::int32_t CharVocab::id_of(unsigned char c) const { return index_[c]; }

CharVocab CharVocab::from_id_list(const std::vector<std::int32_t>& chars) {
  if (chars.size() < 2 || chars[0] != -1 || chars[1] != -1) {
    throw std::runtime_error("char vocab list must start with PAD/UNK entries");
  }
  CharVocab v;
  for (std::size_t i = 2; i < chars.size(); ++i) {
    if (chars[i] < 0 || chars[i] > 255) {
      throw std::runtime_error("char vocab byte out of range");
    }
    v.add(static_cast<unsigned char>(chars[i]));
  }
  return v;
}

void build_vocabs(const std::vector<std::vector<std::string>>& train_sentences,
                  WordVocab& word_vocab, CharVocab& char_vocab) {
  if (train_sentences.empty()) {
    throw std::invalid_argument("build_vocabs: empty training corpus");
  }
  word_vocab = WordVocab();
  char_vocab = CharVocab();
  for (const auto& sentence : train_sentences) {
    for (const auto& token : sentence) {
      word_vocab.add(token);
      for (char c : token) char_vocab.add(static_cast<unsigned char>(c));
    }
  }
}

EncodedSentence encode_sentence(const std::vector<std::string>& tokens,
                                const WordVocab& word_vocab, const CharVocab& char_vocab,
                                std::int32_t t_max, std::int32_t l_max) {
  if (tokens.empty()) {
    throw std::invalid_argument("encode_sentence: empty token list");
  }
  EncodedSentence s;
  s.word_ids.assign(static_cast<std::size_t>(t_max), kPadId);
  s.char_ids.assign(static_cast<std::size_t>(t_max) * static_cast<std::size_t>(l_max), kPadId);
  s.char_lengths.assign(static_cast<std::size_t>(t_max), 0);
  s.true_length = std::min<std::int32_t>(static_cast<std::int32_t>(tokens.size()), t_max);
  for (std::int32_t t = 0; t < s.true_length; ++t) {
    const std::string& tok = tokens[static_cast<std::size_t>(t)];
    s.word_ids[static_cast<std::size_t>(t)] = word_vocab.id_of(tok);
    std::int32_t len = std::min<std::int32_t>(static_cast<std::int32_t>(tok.size()), l_max);
    s.char_lengths[static_cast<std::size_t>(t)] = len;
    for (std::int32_t k = 0; k < len; ++k) {
      s.char_ids[static_cast<std::size_t>(t) * l_max + k] =
          char_vocab.id_of(static_cast<unsigned char>(tok[static_cast<std::size_t>(k)]));
    }
  }
  return s;
}

std::vector<std::string> decode_words(const EncodedSentence& s, const WordVocab& vocab) {
  std::vector<std::string> out;
  for (std::int32_t t = 0; t < s.true_length; ++t) {
    std::int32_t id = s.word_ids[static_cast<std::size_t>(t)];
    if (id != kPadId) out.push_back(vocab.token(id));
  }
  return out;
}

const char* split_name(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kValid: return "valid";
    case Split::kTest: return "test";
  }
  return "?";
}

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

DatasetBundle load_dataset(const std::string& dir_path, std::int32_t t_max, std::int32_t l_max) {
  namespace fs = std::filesystem;
  DatasetBundle bundle;

  struct SplitFiles {
    Split split;
    std::vector<std::vector<std::string>> token_lists;
    std::vector<std::string> label_lines;
  };
  std::vector<SplitFiles> splits;

  for (Split sp : {Split::kTrain, Split::kValid, Split::kTest}) {
    fs::path base = fs::path(dir_path) / split_name(sp);
    fs::path seq_path = base / "seq.in";
    fs::path label_path = base / "label";
    if (!fs::exists(seq_path)) {
      throw std::runtime_error("missing dataset file " + seq_path.string());
    }
    if (!fs::exists(label_path)) {
      throw std::runtime_error("missing dataset file " + label_path.string());
    }
    std::vector<std::string> seq_lines = read_lines(seq_path);
    std::vector<std::string> label_lines = read_lines(label_path);
    if (seq_lines.size() != label_lines.size()) {
      throw std::runtime_error("line-count mismatch: " + seq_path.string() + " has " +
                               std::to_string(seq_lines.size()) + " lines, " + label_path.string() +
                               " has " + std::to_string(label_lines.size()));
    }
    SplitFiles sf;
    sf.split = sp;
    sf.label_lines = std::move(label_lines);
    sf.token_lists.reserve(seq_lines.size());
    for (std::size_t i = 0; i < seq_lines.size(); ++i) {
      std::vector<std::string> toks = tokenize(seq_lines[i]);
      if (toks.empty()) {
        throw std::runtime_error("empty utterance at " + seq_path.string() + ":" +
                                 std::to_string(i + 1));
      }
      sf.token_lists.push_back(std::move(toks));
    }
    splits.push_back(std::move(sf));
  }

  build_vocabs(splits[0].token_lists, bundle.word_vocab, bundle.char_vocab);

  // Intent list from train labels, first-occurrence order.
  std::vector<std::string> label_names;
  std::unordered_map<std::string, std::int32_t> label_index;
  for (const auto& name : splits[0].label_lines) {
    if (label_index.find(name) == label_index.end()) {
      label_index.emplace(name, static_cast<std::int32_t>(label_names.size()));
      label_names.push_back(name);
    }
  }

  for (auto& sf : splits) {
    LabeledDataset ds;
    ds.split = sf.split;
    ds.label_names = label_names;
    ds.sentences.reserve(sf.token_lists.size());
    ds.labels.reserve(sf.token_lists.size());
    for (std::size_t i = 0; i < sf.token_lists.size(); ++i) {
      ds.sentences.push_back(
          encode_sentence(sf.token_lists[i], bundle.word_vocab, bundle.char_vocab, t_max, l_max));
      auto it = label_index.find(sf.label_lines[i]);
      if (it != label_index.end()) {
        ds.labels.push_back(it->second);
      } else if (sf.split == Split::kTrain) {
        throw std::runtime_error("internal: train label missing from index");
      } else {
        ds.labels.push_back(kUnseenLabel);
      }
    }
    ds.raw_tokens = std::move(sf.token_lists);
    switch (sf.split) {
      case Split::kTrain: bundle.train = std::move(ds); break;
      case Split::kValid: bundle.valid = std::move(ds); break;
      case Split::kTest: bundle.test = std::move(ds); break;
    }
  }
  return bundle;
}

}  // namespace lidsnet
