// core/src/lm.cc

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

#include "stt/lm.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "stt/error.h"

namespace stt {

NGramCounts CountNGrams(const std::vector<TokenSeq> &sentences, int order) {
  if (order < 1) throw ValidationError("n-gram order must be >= 1");
  NGramCounts counts;
  counts.order = order;
  counts.by_order.resize(static_cast<std::size_t>(order));
  for (const TokenSeq &sentence : sentences) {
    for (const Token &t : sentence) {
      if (t.empty()) throw ValidationError("empty token in sentence");
    }
    TokenSeq padded;
    padded.reserve(sentence.size() + 2);
    padded.push_back(kSentStart);
    padded.insert(padded.end(), sentence.begin(), sentence.end());
    padded.push_back(kSentEnd);
    for (int k = 1; k <= order; ++k) {
      for (std::size_t i = 0; i + static_cast<std::size_t>(k) <= padded.size();
           ++i) {
        // <s> is context only; no k-gram may end on it.
        if (padded[i + static_cast<std::size_t>(k) - 1] == kSentStart) continue;
        TokenSeq gram(padded.begin() + static_cast<std::ptrdiff_t>(i),
                      padded.begin() + static_cast<std::ptrdiff_t>(i) + k);
        ++counts.by_order[static_cast<std::size_t>(k) - 1][gram];
      }
    }
  }
  return counts;
}

NGramModel::NGramModel(int order, std::set<Token> vocabulary,
                       std::vector<std::map<TokenSeq, NGramEntry>> tables)
    : order_(order), vocab_(std::move(vocabulary)), tables_(std::move(tables)) {
  if (order_ < 1) throw ValidationError("n-gram order must be >= 1");
  if (tables_.size() != static_cast<std::size_t>(order_))
    throw ValidationError("table count does not match order");
  vocab_.erase(kSentStart);
}

const std::map<TokenSeq, NGramEntry> &NGramModel::Table(int k) const {
  if (k < 1 || k > order_) throw ValidationError("table order out of range");
  return tables_[static_cast<std::size_t>(k) - 1];
}

Token NGramModel::MapToken(const Token &t) const {
  if (t == kSentStart || vocab_.count(t)) return t;
  return kUnk;  // may itself be absent; ScoreWord then floors
}

double NGramModel::ScoreWord(const Token &word, const TokenSeq &context) const {
  TokenSeq ctx;
  std::size_t max_ctx = static_cast<std::size_t>(order_ - 1);
  std::size_t start = context.size() > max_ctx ? context.size() - max_ctx : 0;
  for (std::size_t i = start; i < context.size(); ++i)
    ctx.push_back(MapToken(context[i]));
  Token w = MapToken(word);

  while (true) {
    TokenSeq gram = ctx;
    gram.push_back(w);
    const auto &table = tables_[gram.size() - 1];
    auto it = table.find(gram);
    if (it != table.end()) return it->second.log10_prob;
    if (ctx.empty()) return kOovLog10Floor;
    // back off: add the context's weight (0 when none stored) and shorten
    double bow = 0.0;
    const auto &ctx_table = tables_[ctx.size() - 1];
    auto cit = ctx_table.find(ctx);
    if (cit != ctx_table.end() && cit->second.has_backoff)
      bow = cit->second.log10_backoff;
    ctx.erase(ctx.begin());
    TokenSeq rest_gram = ctx;
    rest_gram.push_back(w);
    // accumulate weights along the chain
    return bow + ScoreWord(w, ctx);
  }
}

double NGramModel::ScoreSentence(const TokenSeq &tokens) const {
  TokenSeq history{kSentStart};
  double total = 0.0;
  for (const Token &t : tokens) {
    total += ScoreWord(t, history);
    history.push_back(MapToken(t));
  }
  total += ScoreWord(kSentEnd, history);
  return total;
}

double NGramModel::Perplexity(const std::vector<TokenSeq> &sentences) const {
  double total_log10 = 0.0;
  std::size_t events = 0;
  for (const TokenSeq &s : sentences) {
    total_log10 += ScoreSentence(s);
    events += s.size() + 1;  // sentence-end event included
  }
  if (events == 0) throw ValidationError("empty corpus");
  return std::pow(10.0, -total_log10 / static_cast<double>(events));
}

namespace {

double SafeLog10(double p) {
  return p > 0.0 ? std::log10(p) : kOovLog10Floor;
}

// Backoff weight so that the backoff query rule distributes exactly the
// probability mass left over by the stored entries of this context.
void FillBackoffWeights(int order,
                        std::vector<std::map<TokenSeq, NGramEntry>> *tables,
                        const std::set<Token> &vocab) {
  NGramModel lower_view(order, vocab, *tables);  // snapshot for lower scores
  for (int k = 2; k <= order; ++k) {
    // group level-k entries by context
    std::map<TokenSeq, std::pair<double, double>> leftovers;  // num, den sums
    for (const auto &[gram, entry] : (*tables)[static_cast<std::size_t>(k) - 1]) {
      TokenSeq ctx(gram.begin(), gram.end() - 1);
      TokenSeq lower_ctx(ctx.begin() + 1, ctx.end());
      auto &acc = leftovers[ctx];
      acc.first += std::pow(10.0, entry.log10_prob);
      acc.second += std::pow(10.0, lower_view.ScoreWord(gram.back(), lower_ctx));
    }
    for (const auto &[ctx, acc] : leftovers) {
      double num = 1.0 - acc.first;
      double den = 1.0 - acc.second;
      auto &ctx_table = (*tables)[ctx.size() - 1];
      auto it = ctx_table.find(ctx);
      if (it == ctx_table.end())
        throw ValidationError("backoff context not stored at lower order");
      it->second.has_backoff = true;
      it->second.log10_backoff =
          (num <= 0.0 || den <= 0.0) ? 0.0 : std::log10(num / den);
    }
  }
}

std::uint64_t ContextTotal(const std::map<TokenSeq, std::uint64_t> &table,
                           const TokenSeq &ctx) {
  std::uint64_t total = 0;
  for (auto it = table.lower_bound(ctx); it != table.end(); ++it) {
    if (it->first.size() < ctx.size() ||
        !std::equal(ctx.begin(), ctx.end(), it->first.begin()))
      break;
    total += it->second;
  }
  return total;
}

}  // namespace

NGramModel Train(const NGramCounts &counts, const std::set<Token> &vocabulary,
                 const SmoothingConfig &smoothing) {
  int order = counts.order;
  if (order < 1) throw ValidationError("n-gram order must be >= 1");
  std::set<Token> vocab = vocabulary;
  vocab.erase(kSentStart);
  if (!vocab.count(kSentEnd))
    throw ValidationError("vocabulary must contain " + kSentEnd);
  for (const auto &table : counts.by_order) {
    for (const auto &[gram, n] : table) {
      (void)n;
      for (const Token &t : gram) {
        if (t != kSentStart && !vocab.count(t))
          throw ValidationError("counted token missing from vocabulary: " + t);
      }
    }
  }
  double vsize = static_cast<double>(vocab.size());

  std::vector<std::map<TokenSeq, NGramEntry>> tables(
      static_cast<std::size_t>(order));

  if (smoothing.method == SmoothingMethod::kAddK) {
    double a = smoothing.k;
    if (a <= 0.0) throw ValidationError("add-k smoothing needs k > 0");
    // unigrams over the full vocabulary
    std::uint64_t total1 = 0;
    for (const auto &[gram, n] : counts.by_order[0]) {
      (void)gram;
      total1 += n;
    }
    for (const Token &w : vocab) {
      auto it = counts.by_order[0].find({w});
      double c = it == counts.by_order[0].end()
                     ? 0.0
                     : static_cast<double>(it->second);
      tables[0][{w}].log10_prob =
          std::log10((c + a) / (static_cast<double>(total1) + a * vsize));
    }
    for (int k = 2; k <= order; ++k) {
      const auto &ctable = counts.by_order[static_cast<std::size_t>(k) - 1];
      for (const auto &[gram, n] : ctable) {
        TokenSeq ctx(gram.begin(), gram.end() - 1);
        double ctx_total = static_cast<double>(ContextTotal(ctable, ctx));
        tables[static_cast<std::size_t>(k) - 1][gram].log10_prob = std::log10(
            (static_cast<double>(n) + a) / (ctx_total + a * vsize));
      }
    }
  } else {
    double d = smoothing.discount;
    if (!(d > 0.0 && d < 1.0))
      throw ValidationError("Kneser-Ney discount must be in (0,1)");
    if (order < 2)
      throw ValidationError("Kneser-Ney smoothing needs order >= 2");
    // Adjusted counts: raw at the highest order, continuation type counts
    // below (except for grams anchored at <s>, which keep raw counts).
    std::vector<std::map<TokenSeq, double>> adj(static_cast<std::size_t>(order));
    for (const auto &[gram, n] : counts.by_order[static_cast<std::size_t>(order) - 1])
      adj[static_cast<std::size_t>(order) - 1][gram] = static_cast<double>(n);
    for (int k = order - 1; k >= 1; --k) {
      std::map<TokenSeq, std::set<Token>> predecessors;
      for (const auto &[gram, n] :
           counts.by_order[static_cast<std::size_t>(k)]) {
        (void)n;
        TokenSeq suffix(gram.begin() + 1, gram.end());
        predecessors[suffix].insert(gram.front());
      }
      for (const auto &[gram, n] : counts.by_order[static_cast<std::size_t>(k) - 1]) {
        if (gram.front() == kSentStart) {
          adj[static_cast<std::size_t>(k) - 1][gram] = static_cast<double>(n);
        } else {
          auto it = predecessors.find(gram);
          adj[static_cast<std::size_t>(k) - 1][gram] =
              it == predecessors.end() ? 0.0
                                       : static_cast<double>(it->second.size());
        }
      }
    }
    // Interpolated probabilities, bottom up.
    double tot1 = 0.0;
    std::size_t n1p = 0;
    for (const auto &[gram, c] : adj[0]) {
      if (gram.front() == kSentStart) continue;
      tot1 += c;
      if (c > 0.0) ++n1p;
    }
    if (tot1 <= 0.0) throw ValidationError("no counted tokens");
    std::map<TokenSeq, double> prev_prob;  // linear-space probs, level k-1
    for (const Token &w : vocab) {
      auto it = adj[0].find({w});
      double c = it == adj[0].end() ? 0.0 : it->second;
      double p = (std::max(c - d, 0.0) +
                  d * static_cast<double>(n1p) / vsize) /
                 tot1;
      tables[0][{w}].log10_prob = SafeLog10(p);
      prev_prob[{w}] = p;
    }
    for (int k = 2; k <= order; ++k) {
      const auto &level = adj[static_cast<std::size_t>(k) - 1];
      std::map<TokenSeq, std::pair<double, std::size_t>> ctx_stats;  // S, n1+
      for (const auto &[gram, c] : level) {
        TokenSeq ctx(gram.begin(), gram.end() - 1);
        auto &st = ctx_stats[ctx];
        st.first += c;
        if (c > 0.0) ++st.second;
      }
      std::map<TokenSeq, double> cur_prob;
      for (const auto &[gram, c] : level) {
        TokenSeq ctx(gram.begin(), gram.end() - 1);
        TokenSeq lower(gram.begin() + 1, gram.end());
        auto lit = prev_prob.find(lower);
        double plower;
        if (lit != prev_prob.end()) {
          plower = lit->second;
        } else {
          TokenSeq lower_ctx(lower.begin(), lower.end() - 1);
          plower = std::pow(
              10.0, NGramModel(k - 1, vocab,
                               std::vector<std::map<TokenSeq, NGramEntry>>(
                                   tables.begin(), tables.begin() + (k - 1)))
                        .ScoreWord(lower.back(), lower_ctx));
        }
        const auto &st = ctx_stats[ctx];
        double p;
        if (st.first <= 0.0) {
          p = plower;
        } else {
          p = (std::max(c - d, 0.0) +
               d * static_cast<double>(st.second) * plower) /
              st.first;
        }
        tables[static_cast<std::size_t>(k) - 1][gram].log10_prob = SafeLog10(p);
        cur_prob[gram] = p;
      }
      prev_prob = std::move(cur_prob);
    }
  }

  // context-only sentence start
  NGramEntry start_entry;
  start_entry.log10_prob = kOovLog10Floor;
  tables[0][{kSentStart}] = start_entry;

  FillBackoffWeights(order, &tables, vocab);
  return NGramModel(order, vocab, std::move(tables));
}

NGramModel BuildClosedVocabLm(const std::vector<Token> &words) {
  if (words.empty()) throw ValidationError("empty closed-vocabulary word list");
  std::set<Token> vocab;
  for (const Token &w : words) {
    if (w.empty()) throw ValidationError("empty word in closed vocabulary");
    if (w == kSentStart || w == kSentEnd || w == kUnk)
      throw ValidationError("reserved token in closed vocabulary: " + w);
    if (!vocab.insert(w).second)
      throw ValidationError("duplicate word in closed vocabulary: " + w);
  }
  vocab.insert(kSentEnd);
  double logp = std::log10(1.0 / static_cast<double>(words.size() + 1));
  std::vector<std::map<TokenSeq, NGramEntry>> tables(1);
  for (const Token &w : vocab) tables[0][{w}].log10_prob = logp;
  NGramEntry start_entry;
  start_entry.log10_prob = kOovLog10Floor;
  tables[0][{kSentStart}] = start_entry;
  return NGramModel(1, std::move(vocab), std::move(tables));
}

}  // namespace stt
