// core/include/stt/textnorm.h

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

#ifndef STT_TEXTNORM_H_
#define STT_TEXTNORM_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace stt {

enum class UnicodeForm { kComposed, kDecomposed };

// Per-language cleanup rules applied before alphabet derivation.
struct NormalizationPolicy {
  UnicodeForm unicode_form = UnicodeForm::kComposed;
  // Scalar -> replacement string (empty string deletes the scalar).
  std::map<char32_t, std::string> replacement_map;
  std::set<char32_t> punctuation_to_strip;
  bool keep_apostrophe = true;
  bool lowercase = true;
};

// Ordered grapheme inventory; one Unicode scalar per symbol. The CTC blank
// is not a member, its index is Size() by convention.
class AlphabetSpec {
 public:
  AlphabetSpec() = default;
  // Throws ValidationError on duplicates or unsorted input, or when a space
  // delimiter is claimed but absent.
  AlphabetSpec(std::vector<char32_t> symbols, bool has_space_delimiter,
               std::string language_tag);

  const std::vector<char32_t> &symbols() const { return symbols_; }
  bool has_space_delimiter() const { return has_space_delimiter_; }
  const std::string &language_tag() const { return language_tag_; }
  std::size_t Size() const { return symbols_.size(); }
  std::size_t BlankIndex() const { return symbols_.size(); }

  bool Contains(char32_t cp) const;
  // Index of cp in the ordered inventory; nullopt if absent.
  std::optional<std::size_t> IndexOf(char32_t cp) const;

  bool operator==(const AlphabetSpec &other) const {
    return symbols_ == other.symbols_ &&
           has_space_delimiter_ == other.has_space_delimiter_;
  }

 private:
  std::vector<char32_t> symbols_;
  bool has_space_delimiter_ = false;
  std::string language_tag_;
};

struct FilterResult {
  bool accepted = false;
  std::string reason;  // first offending symbol when rejected
};

// Applies Unicode normalization, case folding, replacements and punctuation
// stripping. Total and idempotent for converging policies.
std::string Normalize(const std::string &text, const NormalizationPolicy &policy);

// Distinct scalars of the normalized lines, sorted by code point.
// Throws ValidationError("empty corpus") when no symbol survives.
AlphabetSpec DeriveAlphabet(const std::vector<std::string> &lines,
                            const NormalizationPolicy &policy,
                            const std::string &language_tag = "");

FilterResult FilterLine(const std::string &text, const AlphabetSpec &alphabet);

// Alphabet file: one symbol per line, '#' comments, space spelled "\s".
void WriteAlphabet(const AlphabetSpec &alphabet, std::ostream &os);
AlphabetSpec ReadAlphabet(std::istream &is, const std::string &language_tag = "");
AlphabetSpec ReadAlphabetFile(const std::string &path);
void WriteAlphabetFile(const AlphabetSpec &alphabet, const std::string &path);

// Policy file: sections [replace], [strip], [options].
NormalizationPolicy ReadPolicy(std::istream &is);
NormalizationPolicy ReadPolicyFile(const std::string &path);

}  // namespace stt

#endif  // STT_TEXTNORM_H_
