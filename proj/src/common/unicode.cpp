// Copyright 2026 The ONTS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "onts/common/unicode.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <stdexcept>

namespace onts::unicode {

namespace {

template <typename Fn>
void for_each_cp(std::string_view s, Fn&& fn) {
  const auto* data = reinterpret_cast<const uint8_t*>(s.data());
  const int32_t length = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c = 0;
    U8_NEXT(data, i, length, c);
    if (!fn(c, start, i)) return;
  }
}

template <typename Map>
std::string map_cps(std::string_view s, Map&& map) {
  std::string out;
  out.reserve(s.size());
  for_each_cp(s, [&](UChar32 c, int32_t start, int32_t end) {
    if (c < 0) {
      out.append(s.substr(start, end - start));
    } else {
      out += encode(static_cast<char32_t>(map(c)));
    }
    return true;
  });
  return out;
}

}  // namespace

bool is_valid_utf8(std::string_view s) {
  bool ok = true;
  for_each_cp(s, [&](UChar32 c, int32_t, int32_t) {
    if (c < 0) ok = false;
    return ok;
  });
  return ok;
}

std::size_t char_count(std::string_view s) {
  std::size_t n = 0;
  for_each_cp(s, [&](UChar32, int32_t, int32_t) {
    ++n;
    return true;
  });
  return n;
}

std::vector<std::size_t> char_offsets(std::string_view s) {
  std::vector<std::size_t> offsets;
  offsets.reserve(s.size() + 1);
  for_each_cp(s, [&](UChar32, int32_t start, int32_t) {
    offsets.push_back(static_cast<std::size_t>(start));
    return true;
  });
  offsets.push_back(s.size());
  return offsets;
}

std::string to_lower(std::string_view s) {
  return map_cps(s, [](UChar32 c) { return u_tolower(c); });
}

std::string to_upper(std::string_view s) {
  return map_cps(s, [](UChar32 c) { return u_toupper(c); });
}

std::string capitalize(std::string_view s) {
  if (s.empty()) return {};
  std::string out;
  bool first = true;
  for_each_cp(s, [&](UChar32 c, int32_t start, int32_t end) {
    if (first && c >= 0) {
      out += encode(static_cast<char32_t>(u_totitle(c)));
      out.append(s.substr(end));
      return false;
    }
    first = false;
    out.append(s.substr(start, end - start));
    return true;
  });
  return out;
}

bool has_upper(std::string_view s) {
  bool found = false;
  for_each_cp(s, [&](UChar32 c, int32_t, int32_t) {
    if (c >= 0 && (u_isupper(c) || u_istitle(c))) found = true;
    return !found;
  });
  return found;
}

bool starts_upper(std::string_view s) {
  const char32_t c = first_char(s);
  return u_isupper(static_cast<UChar32>(c)) || u_istitle(static_cast<UChar32>(c));
}

bool is_alphabetic(std::string_view s) {
  if (s.empty()) return false;
  bool ok = true;
  for_each_cp(s, [&](UChar32 c, int32_t, int32_t) {
    if (c < 0 || !u_isalpha(c)) ok = false;
    return ok;
  });
  return ok;
}

bool has_alpha(std::string_view s) {
  bool found = false;
  for_each_cp(s, [&](UChar32 c, int32_t, int32_t) {
    if (c >= 0 && u_isalpha(c)) found = true;
    return !found;
  });
  return found;
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  bool ok = true;
  for_each_cp(s, [&](UChar32 c, int32_t, int32_t) {
    if (c < 0 || !u_isdigit(c)) ok = false;
    return ok;
  });
  return ok;
}

std::string strip_diacritics(std::string_view s) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfd = icu::Normalizer2::getNFDInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFD normalizer unavailable");
  icu::UnicodeString decomposed =
      nfd->normalize(icu::UnicodeString::fromUTF8(icu::StringPiece(s.data(), s.size())), status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU normalization failed");
  icu::UnicodeString kept;
  for (int32_t i = 0; i < decomposed.length();) {
    const UChar32 c = decomposed.char32At(i);
    if (u_charType(c) != U_NON_SPACING_MARK) kept.append(c);
    i += U16_LENGTH(c);
  }
  std::string out;
  kept.toUTF8String(out);
  return out;
}

char32_t first_char(std::string_view s) {
  char32_t result = 0xFFFD;
  for_each_cp(s, [&](UChar32 c, int32_t, int32_t) {
    if (c >= 0) result = static_cast<char32_t>(c);
    return false;
  });
  return result;
}

char32_t last_char(std::string_view s) {
  char32_t result = 0xFFFD;
  for_each_cp(s, [&](UChar32 c, int32_t, int32_t) {
    result = c >= 0 ? static_cast<char32_t>(c) : 0xFFFD;
    return true;
  });
  return result;
}

std::string encode(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

}  // namespace onts::unicode
