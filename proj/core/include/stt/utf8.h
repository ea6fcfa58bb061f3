// core/include/stt/utf8.h

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

#ifndef STT_UTF8_H_
#define STT_UTF8_H_

#include <string>
#include <vector>

namespace stt {

// Decodes UTF-8 into Unicode scalar values. Throws ValidationError on
// malformed input (overlong forms, surrogates, truncated sequences).
std::vector<char32_t> DecodeUtf8(const std::string &s);

std::string EncodeUtf8(const std::vector<char32_t> &cps);
std::string EncodeUtf8(char32_t cp);

}  // namespace stt

#endif  // STT_UTF8_H_
