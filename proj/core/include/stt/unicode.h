// core/include/stt/unicode.h

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

#ifndef STT_UNICODE_H_
#define STT_UNICODE_H_

#include <vector>

namespace stt {

// Canonical decomposition + canonical ordering (NFD). Hangul syllables are
// passed through unchanged; they are outside this toolkit's language set.
std::vector<char32_t> ToNfd(const std::vector<char32_t> &cps);

// Canonical composition (NFC).
std::vector<char32_t> ToNfc(const std::vector<char32_t> &cps);

// Simple (single-scalar) lowercase mapping; identity when no mapping exists.
char32_t ToLower(char32_t cp);

int CombiningClass(char32_t cp);

}  // namespace stt

#endif  // STT_UNICODE_H_
