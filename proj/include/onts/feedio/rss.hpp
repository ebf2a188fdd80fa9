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

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "onts/feedio/news_item.hpp"

namespace onts::feedio {

inline constexpr std::string_view kOntsNamespace = "urn:onts:enrichment:1";
inline constexpr std::string_view kDublinCoreNamespace = "http://purl.org/dc/elements/1.1/";

// An <item> that could not be mapped to a NewsItem.
struct SkipReport {
  std::size_t item_index = 0;  // 0-based position among the feed's items
  std::string title;
  std::string reason;

  bool operator==(const SkipReport&) const = default;
};

struct ParsedFeed {
  std::string channel_title;
  std::string channel_language;
  std::vector<NewsItem> items;  // document order
  std::vector<SkipReport> skipped;
};

// Parses an RSS 2.0 document. Item language comes from <language> or
// <dc:language> inside the item, else from the channel, else
// `fallback_language`. The description is
// treated as HTML and reduced with strip_html; the title is taken verbatim
// (outer whitespace trimmed). onts: elements restore categories, enrichment
// and errors. Items with no language or an empty title are skipped and
// reported. Throws onts::ParseError (with byte offset) for malformed XML or a
// document that is not <rss><channel>.
ParsedFeed parse_rss(std::string_view bytes, std::string_view fallback_language = {});

enum class EmitMode { kSource, kTranslated };

struct EmitOptions {
  EmitMode mode = EmitMode::kSource;
  std::string channel_title = "ONTS news";
  std::string channel_link = "http://localhost/";
  std::string channel_description = "Categorized and translated news";
};

// Emits RSS 2.0 with the onts: namespace. Output depends only on the inputs.
// In translated mode an item without enrichment (and without its own error)
// is emitted with <onts:error>.
std::string emit_rss(std::span<const NewsItem> items, const EmitOptions& options = {});

// Removes markup tags and decodes &amp; &lt; &gt; &quot; &apos; and numeric
// character references, then trims outer whitespace. A '<' not followed by a
// letter, '/', '!' or '?' is text.
std::string strip_html(std::string_view html);

// Stable id for items without a guid: "onts-" + 16 hex digits of a 64-bit
// FNV-1a hash over source_url, a separator and title.
std::string item_id(std::string_view source_url, std::string_view title);

}  // namespace onts::feedio
