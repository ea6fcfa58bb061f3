// core/include/stt/arpa.h

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

#ifndef STT_ARPA_H_
#define STT_ARPA_H_

#include <iosfwd>
#include <string>

#include "stt/lm.h"

namespace stt {

// ARPA text serialization: \data\ header, per-order "\k-grams:" sections of
// "log10prob<TAB>tokens<TAB>log10backoff" lines, terminated by \end\.
// Values are printed with 6 decimal places.
void WriteArpa(const NGramModel &model, std::ostream &os);
void WriteArpaFile(const NGramModel &model, const std::string &path);

// Throws ParseError (with line number) on malformed input, including
// header counts that disagree with actual section lengths.
NGramModel ReadArpa(std::istream &is);
NGramModel ReadArpaFile(const std::string &path);

}  // namespace stt

#endif  // STT_ARPA_H_
