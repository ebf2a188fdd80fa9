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

#include "onts/feedio/rss.hpp"

#include <expat.h>

#include <charconv>
#include <cstdint>
#include <memory>
#include <optional>
#include <type_traits>

#include "onts/common/error.hpp"
#include "onts/common/strings.hpp"
#include "onts/common/unicode.hpp"

namespace onts::feedio {

namespace {

constexpr char kNsSep = '\x1f';

std::string qualified(std::string_view ns, std::string_view local) {
  std::string s(ns);
  s += kNsSep;
  s += local;
  return s;
}

const std::string kOnts = qualified(kOntsNamespace, "");
const std::string kDc = qualified(kDublinCoreNamespace, "");

// Element name relative to the namespaces we understand: "title",
// "onts:msPerChar", "dc:language"; other namespaces keep the raw form.
std::string short_name(const char* raw) {
  std::string_view n(raw);
  if (n.starts_with(kOnts)) return "onts:" + std::string(n.substr(kOnts.size()));
  if (n.starts_with(kDc)) return "dc:" + std::string(n.substr(kDc.size()));
  return std::string(n);
}

std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

struct RawItem {
  std::string title, description, link, guid, pub_date, language;
  std::vector<std::string> rss_categories;
  std::optional<std::string> onts_categories;
  std::optional<std::string> translated_title, translated_body, ms_per_char, unknown_words, title_engine,
      content_engine, error;
};

class FeedBuilder {
 public:
  explicit FeedBuilder(XML_Parser parser) : parser_(parser) {}

  void start(const char* raw) {
    const std::string name = short_name(raw);
    if (path_.empty() && name != "rss") fail("root element is <" + name + ">, expected <rss>");
    if (path_.size() == 1 && name == "channel") saw_channel_ = true;
    if (name == "item" && in_channel()) item_.emplace();
    path_.push_back(name);
    text_.clear();
  }

  void end() {
    const std::string name = path_.back();
    path_.pop_back();
    if (item_ && name == "item" && path_.size() == 2) {
      items_.push_back(std::move(*item_));
      item_.reset();
    } else if (item_ && path_.size() == 3) {
      assign_item_field(name);
    } else if (path_.size() == 2 && in_channel()) {
      if (name == "title") channel_title_ = std::string(trim(text_));
      if (name == "language" || name == "dc:language") channel_language_ = std::string(trim(text_));
    }
    text_.clear();
  }

  void text(std::string_view s) { text_ += s; }

  ParsedFeed finish(std::string_view fallback_language) {
    if (!saw_channel_) throw ParseError("RSS document has no <channel>", 1, 1, 0);
    ParsedFeed feed;
    feed.channel_title = channel_title_;
    feed.channel_language = channel_language_;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      auto& raw = items_[i];
      const std::string title(trim(raw.title));
      std::string lang = !raw.language.empty()       ? raw.language
                         : !channel_language_.empty() ? channel_language_
                                                      : std::string(fallback_language);
      if (title.empty()) {
        feed.skipped.push_back({i, title, "item has no title"});
        continue;
      }
      if (lang.empty()) {
        feed.skipped.push_back({i, title, "language unknown"});
        continue;
      }
      NewsItem item;
      item.title = title;
      item.source_lang = std::move(lang);
      item.body = strip_html(raw.description);
      item.source_url = std::string(trim(raw.link));
      item.pub_date = std::string(trim(raw.pub_date));
      const std::string guid(trim(raw.guid));
      item.id = guid.empty() ? item_id(item.source_url, item.title) : guid;
      if (raw.onts_categories) {
        for (auto& c : split(*raw.onts_categories, ","))
          if (auto t = trim(c); !t.empty()) item.categories.emplace_back(t);
      } else {
        for (auto& c : raw.rss_categories)
          if (auto t = trim(c); !t.empty()) item.categories.emplace_back(t);
      }
      if (raw.translated_title || raw.translated_body || raw.ms_per_char) {
        Enrichment e;
        e.translated_title = raw.translated_title.value_or("");
        e.translated_body = raw.translated_body.value_or("");
        if (raw.ms_per_char) {
          const auto v = parse_double(trim(*raw.ms_per_char));
          if (!v || *v < 0.0) {
            feed.skipped.push_back({i, item.title, "bad onts:msPerChar value '" + *raw.ms_per_char + "'"});
            continue;
          }
          e.ms_per_char = *v;
        }
        if (raw.unknown_words) e.unknown_words = split_whitespace(*raw.unknown_words);
        e.engine_ids = {raw.title_engine.value_or(""), raw.content_engine.value_or("")};
        item.enrichment = std::move(e);
      }
      item.error = raw.error;
      feed.items.push_back(std::move(item));
    }
    return feed;
  }

 private:
  bool in_channel() const { return path_.size() == 2 && path_[1] == "channel"; }

  void assign_item_field(const std::string& name) {
    RawItem& it = *item_;
    if (name == "title") it.title = text_;
    else if (name == "description") it.description = text_;
    else if (name == "link") it.link = text_;
    else if (name == "guid") it.guid = text_;
    else if (name == "pubDate") it.pub_date = text_;
    else if (name == "language" || name == "dc:language") it.language = std::string(trim(text_));
    else if (name == "category") it.rss_categories.push_back(text_);
    else if (name == "onts:categories") it.onts_categories = text_;
    else if (name == "onts:translatedTitle") it.translated_title = text_;
    else if (name == "onts:translatedBody") it.translated_body = text_;
    else if (name == "onts:msPerChar") it.ms_per_char = text_;
    else if (name == "onts:unknownWords") it.unknown_words = text_;
    else if (name == "onts:titleEngine") it.title_engine = text_;
    else if (name == "onts:contentEngine") it.content_engine = text_;
    else if (name == "onts:error") it.error = text_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, XML_GetCurrentLineNumber(parser_), XML_GetCurrentColumnNumber(parser_) + 1,
                     static_cast<std::size_t>(XML_GetCurrentByteIndex(parser_)));
  }

  XML_Parser parser_;
  std::vector<std::string> path_;
  std::string text_;
  std::optional<RawItem> item_;
  std::vector<RawItem> items_;
  std::string channel_title_, channel_language_;
  bool saw_channel_ = false;
};

struct ParserDeleter {
  void operator()(XML_Parser p) const { XML_ParserFree(p); }
};

void append_escaped(std::string& out, std::string_view s) {
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
}

std::string escaped(std::string_view s) {
  std::string out;
  append_escaped(out, s);
  return out;
}

void element(std::string& out, std::string_view indent, std::string_view name, std::string_view value) {
  out += indent;
  out += '<';
  out += name;
  out += '>';
  append_escaped(out, value);
  out += "</";
  out += name;
  out += ">\n";
}

std::string format_double(double v) {
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::optional<std::string> decode_entity(std::string_view name) {
  if (name == "amp") return "&";
  if (name == "lt") return "<";
  if (name == "gt") return ">";
  if (name == "quot") return "\"";
  if (name == "apos") return "'";
  if (name.size() >= 2 && name[0] == '#') {
    const bool hex = name[1] == 'x' || name[1] == 'X';
    const auto digits = name.substr(hex ? 2 : 1);
    if (digits.empty()) return std::nullopt;
    std::uint32_t cp = 0;
    const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), cp, hex ? 16 : 10);
    if (ec != std::errc() || p != digits.data() + digits.size()) return std::nullopt;
    if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return std::nullopt;
    return unicode::encode(static_cast<char32_t>(cp));
  }
  return std::nullopt;
}

bool is_ascii_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

}  // namespace

ParsedFeed parse_rss(std::string_view bytes, std::string_view fallback_language) {
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, ParserDeleter> parser(XML_ParserCreateNS("UTF-8", kNsSep));
  if (!parser) throw Error("cannot create XML parser");
  FeedBuilder builder(parser.get());
  // Exceptions must not cross expat's C frames: handlers record the first
  // failure and stop the parser.
  struct Context {
    FeedBuilder* builder;
    XML_Parser parser;
    std::exception_ptr error;
  } ctx{&builder, parser.get(), nullptr};
  XML_SetUserData(parser.get(), &ctx);
  XML_SetElementHandler(
      parser.get(),
      [](void* data, const XML_Char* name, const XML_Char**) {
        auto* c = static_cast<Context*>(data);
        try {
          c->builder->start(name);
        } catch (...) {
          c->error = std::current_exception();
          XML_StopParser(c->parser, XML_FALSE);
        }
      },
      [](void* data, const XML_Char*) {
        auto* c = static_cast<Context*>(data);
        if (!c->error) c->builder->end();
      });
  XML_SetCharacterDataHandler(parser.get(), [](void* data, const XML_Char* s, int len) {
    auto* c = static_cast<Context*>(data);
    if (!c->error) c->builder->text(std::string_view(s, static_cast<std::size_t>(len)));
  });
  const auto status = XML_Parse(parser.get(), bytes.data(), static_cast<int>(bytes.size()), XML_TRUE);
  if (ctx.error) std::rethrow_exception(ctx.error);
  if (status != XML_STATUS_OK) {
    throw ParseError(std::string("malformed XML: ") + XML_ErrorString(XML_GetErrorCode(parser.get())),
                     XML_GetCurrentLineNumber(parser.get()), XML_GetCurrentColumnNumber(parser.get()) + 1,
                     static_cast<std::size_t>(XML_GetCurrentByteIndex(parser.get())));
  }
  return builder.finish(fallback_language);
}

std::string emit_rss(std::span<const NewsItem> items, const EmitOptions& options) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<rss version=\"2.0\" xmlns:onts=\"";
  out += kOntsNamespace;
  out += "\" xmlns:dc=\"";
  out += kDublinCoreNamespace;
  out += "\">\n<channel>\n";
  element(out, "  ", "title", options.channel_title);
  element(out, "  ", "link", options.channel_link);
  element(out, "  ", "description", options.channel_description);
  for (const auto& item : items) {
    out += "  <item>\n";
    const char* in = "    ";
    out += in;
    out += "<guid isPermaLink=\"false\">";
    append_escaped(out, item.id);
    out += "</guid>\n";
    element(out, in, "title", item.title);
    // The description is HTML: escape the plain-text body once for HTML and
    // once more for XML so strip_html restores it exactly.
    element(out, in, "description", escaped(item.body));
    if (!item.source_url.empty()) element(out, in, "link", item.source_url);
    if (!item.pub_date.empty()) element(out, in, "pubDate", item.pub_date);
    element(out, in, "dc:language", item.source_lang);
    if (!item.categories.empty()) element(out, in, "onts:categories", join(item.categories, ","));
    std::optional<std::string> error = item.error;
    if (item.enrichment) {
      const auto& e = *item.enrichment;
      element(out, in, "onts:translatedTitle", e.translated_title);
      element(out, in, "onts:translatedBody", e.translated_body);
      element(out, in, "onts:msPerChar", format_double(e.ms_per_char));
      element(out, in, "onts:unknownWords", join(e.unknown_words, " "));
      element(out, in, "onts:titleEngine", e.engine_ids.first);
      element(out, in, "onts:contentEngine", e.engine_ids.second);
    } else if (options.mode == EmitMode::kTranslated && !error) {
      error = "item has no translation";
    }
    if (error) element(out, in, "onts:error", *error);
    out += "  </item>\n";
  }
  out += "</channel>\n</rss>\n";
  return out;
}

std::string strip_html(std::string_view html) {
  std::string out;
  out.reserve(html.size());
  std::size_t i = 0;
  while (i < html.size()) {
    const char c = html[i];
    if (c == '<' && i + 1 < html.size() &&
        (is_ascii_letter(html[i + 1]) || html[i + 1] == '/' || html[i + 1] == '!' || html[i + 1] == '?')) {
      if (html.substr(i, 4) == "<!--") {
        const auto close = html.find("-->", i + 4);
        i = close == std::string_view::npos ? html.size() : close + 3;
      } else {
        const auto close = html.find('>', i + 1);
        i = close == std::string_view::npos ? html.size() : close + 1;
      }
      continue;
    }
    if (c == '&') {
      const auto semi = html.find(';', i + 1);
      if (semi != std::string_view::npos && semi - i <= 10) {
        if (auto decoded = decode_entity(html.substr(i + 1, semi - i - 1))) {
          out += *decoded;
          i = semi + 1;
          continue;
        }
      }
    }
    out += c;
    ++i;
  }
  return std::string(trim(out));
}

std::string item_id(std::string_view source_url, std::string_view title) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  mix(source_url);
  mix(std::string_view("\0", 1));
  mix(title);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string id = "onts-";
  for (int shift = 60; shift >= 0; shift -= 4) id += kHex[(h >> shift) & 0xF];
  return id;
}

}  // namespace onts::feedio
