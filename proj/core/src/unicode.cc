// core/src/unicode.cc

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

#include "stt/unicode.h"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace stt {

namespace {

struct DecompEntry {
  std::uint32_t cp, d1, d2;
};
struct CccEntry {
  std::uint32_t cp;
  std::uint8_t ccc;
};
struct ComposeEntry {
  std::uint32_t d1, d2, cp;
};
struct LowerEntry {
  std::uint32_t cp, lower;
};

#include "unicode_tables.inc"

const std::unordered_map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>> &
DecompMap() {
  static const auto *m = [] {
    auto *map = new std::unordered_map<std::uint32_t,
                                       std::pair<std::uint32_t, std::uint32_t>>();
    for (const auto &e : kDecompTable) (*map)[e.cp] = {e.d1, e.d2};
    return map;
  }();
  return *m;
}

const std::unordered_map<std::uint32_t, int> &CccMap() {
  static const auto *m = [] {
    auto *map = new std::unordered_map<std::uint32_t, int>();
    for (const auto &e : kCccTable) (*map)[e.cp] = e.ccc;
    return map;
  }();
  return *m;
}

const std::unordered_map<std::uint64_t, std::uint32_t> &ComposeMap() {
  static const auto *m = [] {
    auto *map = new std::unordered_map<std::uint64_t, std::uint32_t>();
    for (const auto &e : kComposeTable)
      (*map)[(static_cast<std::uint64_t>(e.d1) << 32) | e.d2] = e.cp;
    return map;
  }();
  return *m;
}

const std::unordered_map<std::uint32_t, std::uint32_t> &LowerMap() {
  static const auto *m = [] {
    auto *map = new std::unordered_map<std::uint32_t, std::uint32_t>();
    for (const auto &e : kLowerTable) (*map)[e.cp] = e.lower;
    return map;
  }();
  return *m;
}

void DecomposeInto(char32_t cp, std::vector<char32_t> *out) {
  auto it = DecompMap().find(cp);
  if (it == DecompMap().end()) {
    out->push_back(cp);
    return;
  }
  DecomposeInto(it->second.first, out);
  if (it->second.second != 0) DecomposeInto(it->second.second, out);
}

// Stable reorder of combining marks by combining class.
void CanonicalOrder(std::vector<char32_t> *cps) {
  for (std::size_t i = 1; i < cps->size(); ++i) {
    int cc = CombiningClass((*cps)[i]);
    if (cc == 0) continue;
    std::size_t j = i;
    while (j > 0 && CombiningClass((*cps)[j - 1]) > cc) {
      std::swap((*cps)[j - 1], (*cps)[j]);
      --j;
    }
  }
}

}  // namespace

int CombiningClass(char32_t cp) {
  auto it = CccMap().find(cp);
  return it == CccMap().end() ? 0 : it->second;
}

char32_t ToLower(char32_t cp) {
  auto it = LowerMap().find(cp);
  return it == LowerMap().end() ? cp : static_cast<char32_t>(it->second);
}

std::vector<char32_t> ToNfd(const std::vector<char32_t> &cps) {
  std::vector<char32_t> out;
  out.reserve(cps.size());
  for (char32_t cp : cps) DecomposeInto(cp, &out);
  CanonicalOrder(&out);
  return out;
}

std::vector<char32_t> ToNfc(const std::vector<char32_t> &cps) {
  std::vector<char32_t> d = ToNfd(cps);
  if (d.empty()) return d;
  // UAX #15 canonical composition over the decomposed, ordered sequence.
  std::vector<char32_t> out;
  out.reserve(d.size());
  std::ptrdiff_t last_starter = -1;
  for (char32_t c : d) {
    int cc = CombiningClass(c);
    if (last_starter >= 0) {
      bool blocked = false;
      // c is blocked if a char after the starter has ccc 0 or >= ccc(c).
      for (std::size_t k = static_cast<std::size_t>(last_starter) + 1;
           k < out.size(); ++k) {
        int bcc = CombiningClass(out[k]);
        if (bcc == 0 || bcc >= cc) {
          blocked = true;
          break;
        }
      }
      if (!blocked) {
        std::uint64_t key =
            (static_cast<std::uint64_t>(out[static_cast<std::size_t>(
                 last_starter)])
             << 32) |
            static_cast<std::uint32_t>(c);
        auto it = ComposeMap().find(key);
        if (it != ComposeMap().end()) {
          out[static_cast<std::size_t>(last_starter)] =
              static_cast<char32_t>(it->second);
          continue;
        }
      }
    }
    out.push_back(c);
    if (cc == 0) last_starter = static_cast<std::ptrdiff_t>(out.size()) - 1;
  }
  return out;
}

}  // namespace stt
