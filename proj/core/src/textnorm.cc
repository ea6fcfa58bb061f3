// core/src/textnorm.cc

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

#include "stt/textnorm.h"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "stt/error.h"
#include "stt/unicode.h"
#include "stt/utf8.h"

namespace stt {

namespace {

constexpr char32_t kApostrophe = U'\'';

std::vector<char32_t> NormalizeForm(const std::vector<char32_t> &cps,
                                    UnicodeForm form) {
  return form == UnicodeForm::kComposed ? ToNfc(cps) : ToNfd(cps);
}

// One pass of the pipeline: unicode form, case, replacements, stripping,
// then unicode form again (replacements may insert un-normalized text).
std::string NormalizePass(const std::string &text,
                          const NormalizationPolicy &policy) {
  std::vector<char32_t> cps = NormalizeForm(DecodeUtf8(text), policy.unicode_form);
  if (policy.lowercase)
    for (char32_t &cp : cps) cp = ToLower(cp);

  std::vector<char32_t> replaced;
  replaced.reserve(cps.size());
  for (char32_t cp : cps) {
    auto it = policy.replacement_map.find(cp);
    if (it == policy.replacement_map.end()) {
      replaced.push_back(cp);
    } else {
      for (char32_t r : DecodeUtf8(it->second)) replaced.push_back(r);
    }
  }

  std::vector<char32_t> stripped;
  stripped.reserve(replaced.size());
  for (char32_t cp : replaced) {
    if (cp == kApostrophe && policy.keep_apostrophe) {
      stripped.push_back(cp);
      continue;
    }
    if (policy.punctuation_to_strip.count(cp)) continue;
    stripped.push_back(cp);
  }
  return EncodeUtf8(NormalizeForm(stripped, policy.unicode_form));
}

}  // namespace

std::string Normalize(const std::string &text,
                      const NormalizationPolicy &policy) {
  // Iterate to a fixed point so replacement chains settle; capped to keep
  // the function total under cyclic maps.
  std::string cur = NormalizePass(text, policy);
  for (int iter = 0; iter < 8; ++iter) {
    std::string next = NormalizePass(cur, policy);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

AlphabetSpec::AlphabetSpec(std::vector<char32_t> symbols,
                           bool has_space_delimiter, std::string language_tag)
    : symbols_(std::move(symbols)),
      has_space_delimiter_(has_space_delimiter),
      language_tag_(std::move(language_tag)) {
  for (std::size_t i = 1; i < symbols_.size(); ++i) {
    if (symbols_[i - 1] >= symbols_[i])
      throw ValidationError("alphabet symbols must be strictly ascending");
  }
  if (has_space_delimiter_ &&
      !std::binary_search(symbols_.begin(), symbols_.end(), U' '))
    throw ValidationError("space delimiter claimed but U+0020 not in alphabet");
}

bool AlphabetSpec::Contains(char32_t cp) const {
  return std::binary_search(symbols_.begin(), symbols_.end(), cp);
}

std::optional<std::size_t> AlphabetSpec::IndexOf(char32_t cp) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), cp);
  if (it == symbols_.end() || *it != cp) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

AlphabetSpec DeriveAlphabet(const std::vector<std::string> &lines,
                            const NormalizationPolicy &policy,
                            const std::string &language_tag) {
  std::set<char32_t> seen;
  for (const std::string &line : lines) {
    for (char32_t cp : DecodeUtf8(Normalize(line, policy))) seen.insert(cp);
  }
  if (seen.empty()) throw ValidationError("empty corpus");
  std::vector<char32_t> symbols(seen.begin(), seen.end());
  bool has_space = seen.count(U' ') > 0;
  return AlphabetSpec(std::move(symbols), has_space, language_tag);
}

FilterResult FilterLine(const std::string &text, const AlphabetSpec &alphabet) {
  for (char32_t cp : DecodeUtf8(text)) {
    if (!alphabet.Contains(cp)) return {false, EncodeUtf8(cp)};
  }
  return {true, ""};
}

void WriteAlphabet(const AlphabetSpec &alphabet, std::ostream &os) {
  for (char32_t cp : alphabet.symbols()) {
    if (cp == U' ')
      os << "\\s\n";
    else
      os << EncodeUtf8(cp) << "\n";
  }
}

AlphabetSpec ReadAlphabet(std::istream &is, const std::string &language_tag) {
  std::vector<char32_t> symbols;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    char32_t cp;
    if (line == "\\s") {
      cp = U' ';
    } else {
      std::vector<char32_t> cps = DecodeUtf8(line);
      if (cps.size() != 1)
        throw ParseError("alphabet line must hold exactly one symbol", lineno);
      cp = cps[0];
    }
    symbols.push_back(cp);
  }
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  if (symbols.empty()) throw ParseError("empty alphabet file");
  bool has_space = std::binary_search(symbols.begin(), symbols.end(), U' ');
  return AlphabetSpec(std::move(symbols), has_space, language_tag);
}

AlphabetSpec ReadAlphabetFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open alphabet file: " + path);
  return ReadAlphabet(is);
}

void WriteAlphabetFile(const AlphabetSpec &alphabet, const std::string &path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot write alphabet file: " + path);
  WriteAlphabet(alphabet, os);
  if (!os) throw IoError("write failed: " + path);
}

namespace {

char32_t SingleScalar(const std::string &s, int lineno) {
  if (s == "\\s") return U' ';
  std::vector<char32_t> cps = DecodeUtf8(s);
  if (cps.size() != 1) throw ParseError("expected a single symbol: " + s, lineno);
  return cps[0];
}

}  // namespace

NormalizationPolicy ReadPolicy(std::istream &is) {
  NormalizationPolicy policy;
  std::string section;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      if (section != "replace" && section != "strip" && section != "options")
        throw ParseError("unknown policy section: " + section, lineno);
      continue;
    }
    if (section == "replace") {
      std::size_t tab = line.find('\t');
      if (tab == std::string::npos)
        throw ParseError("replace line needs <source>\\t<target>", lineno);
      char32_t src = SingleScalar(line.substr(0, tab), lineno);
      policy.replacement_map[src] = line.substr(tab + 1);
    } else if (section == "strip") {
      policy.punctuation_to_strip.insert(SingleScalar(line, lineno));
    } else if (section == "options") {
      std::size_t eq = line.find('=');
      if (eq == std::string::npos)
        throw ParseError("option line needs key=value", lineno);
      std::string key = line.substr(0, eq), value = line.substr(eq + 1);
      if (key == "unicode_form") {
        if (value == "composed")
          policy.unicode_form = UnicodeForm::kComposed;
        else if (value == "decomposed")
          policy.unicode_form = UnicodeForm::kDecomposed;
        else
          throw ParseError("unicode_form must be composed|decomposed", lineno);
      } else if (key == "keep_apostrophe" || key == "lowercase") {
        bool b;
        if (value == "true")
          b = true;
        else if (value == "false")
          b = false;
        else
          throw ParseError(key + " must be true|false", lineno);
        (key == "keep_apostrophe" ? policy.keep_apostrophe : policy.lowercase) = b;
      } else {
        throw ParseError("unknown option: " + key, lineno);
      }
    } else {
      throw ParseError("content before any [section]", lineno);
    }
  }
  return policy;
}

NormalizationPolicy ReadPolicyFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open policy file: " + path);
  return ReadPolicy(is);
}

}  // namespace stt
