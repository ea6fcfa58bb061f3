// core/include/stt/lm.h

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef STT_LM_H_
#define STT_LM_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace stt {

using Token = std::string;
using TokenSeq = std::vector<Token>;

inline const Token kSentStart = "<s>";
inline const Token kSentEnd = "</s>";
inline const Token kUnk = "<unk>";

// log10 score assigned to words the model cannot reach at all
// (out of vocabulary with no <unk> entry).
inline constexpr double kOovLog10Floor = -99.0;

enum class SmoothingMethod { kAddK, kKneserNey };

struct SmoothingConfig {
  SmoothingMethod method = SmoothingMethod::kAddK;
  double k = 1.0;        // add-k pseudo-count
  double discount = 0.75;  // Kneser-Ney absolute discount, in (0,1)
};

// Raw k-gram counts for 1 <= k <= order over sentence-padded input.
struct NGramCounts {
  int order = 0;
  // by_order[k-1]: k-token sequence -> count
  std::vector<std::map<TokenSeq, std::uint64_t>> by_order;
};

// Pads each sentence with <s> (context only) and </s>; k-grams ending in
// <s> are not counted, so <s> never receives probability mass.
NGramCounts CountNGrams(const std::vector<TokenSeq> &sentences, int order);

struct NGramEntry {
  double log10_prob = 0.0;
  double log10_backoff = 0.0;
  bool has_backoff = false;
};

// Backoff n-gram model with log10 probabilities, ARPA-compatible.
// Immutable after construction; queries are pure.
class NGramModel {
 public:
  NGramModel(int order, std::set<Token> vocabulary,
             std::vector<std::map<TokenSeq, NGramEntry>> tables);

  int order() const { return order_; }
  // Probability-bearing tokens (</s>, optionally <unk>; never <s>).
  const std::set<Token> &vocabulary() const { return vocab_; }
  const std::map<TokenSeq, NGramEntry> &Table(int k) const;

  // ARPA backoff query. Context longer than order-1 is truncated; OOV
  // tokens map to <unk> when present, else the score floor applies.
  double ScoreWord(const Token &word, const TokenSeq &context) const;

  // Sum of per-word scores with running history, plus sentence-end scoring.
  double ScoreSentence(const TokenSeq &tokens) const;

  // Per-token perplexity of a corpus (sentence-end events included).
  double Perplexity(const std::vector<TokenSeq> &sentences) const;

 private:
  Token MapToken(const Token &t) const;

  int order_;
  std::set<Token> vocab_;
  std::vector<std::map<TokenSeq, NGramEntry>> tables_;
};

// Estimates a backoff model from counts. The vocabulary must cover every
// counted token; <s> is handled as a context-only token automatically.
NGramModel Train(const NGramCounts &counts, const std::set<Token> &vocabulary,
                 const SmoothingConfig &smoothing);

// Uniform unigram model over the given words plus sentence end:
// P(w) = 1/(N+1) for each word and for </s>.
NGramModel BuildClosedVocabLm(const std::vector<Token> &words);

}  // namespace stt

#endif  // STT_LM_H_
