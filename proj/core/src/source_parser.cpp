// Copyright 2026 The logfix Authors.
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

#include "logfix/source_parser.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "logfix/util.hpp"

namespace logfix {

namespace {

constexpr std::size_t npos = std::string_view::npos;

enum class Cls : unsigned char { kCode, kComment, kString, kChar };

// Character classes for a source buffer plus bracket partners. Every later
// scan consults `cls` so that braces, quotes and logger names inside
// comments or literals are ignored.
struct Lexed {
  std::string_view src;
  std::vector<Cls> cls;
  std::vector<std::size_t> partner;  // matching bracket for ( ) { } [ ]
  std::vector<std::size_t> line_starts;

  bool code(std::size_t i) const { return cls[i] == Cls::kCode; }

  std::size_t prev_code(std::size_t i) const {
    while (i > 0) {
      --i;
      if (code(i) && !std::isspace(static_cast<unsigned char>(src[i]))) return i;
    }
    return npos;
  }

  std::size_t next_code(std::size_t i) const {
    for (; i < src.size(); ++i) {
      if (code(i) && !std::isspace(static_cast<unsigned char>(src[i]))) return i;
    }
    return npos;
  }

  // Identifier ending at `end` (inclusive); returns its first index.
  std::size_t ident_start_back(std::size_t end) const {
    std::size_t a = end;
    while (a > 0 && code(a - 1) && is_ident_char(src[a - 1])) --a;
    return a;
  }

  std::size_t ident_end(std::size_t start) const {
    std::size_t e = start;
    while (e < src.size() && code(e) && is_ident_char(src[e])) ++e;
    return e;
  }

  int line_of(std::size_t offset) const {
    auto it = std::upper_bound(line_starts.begin(), line_starts.end(), offset);
    return static_cast<int>(it - line_starts.begin());
  }
};

std::size_t skip_quoted(std::string_view s, std::size_t i, char quote) {
  std::size_t j = i + 1;
  while (j < s.size()) {
    const char c = s[j];
    if (c == '\\') {
      j += 2;
    } else if (c == quote) {
      return j + 1;
    } else if (c == '\n') {
      return j;  // unterminated literal ends at the line break
    } else {
      ++j;
    }
  }
  return s.size();
}

Lexed lex(std::string_view s) {
  Lexed lx;
  lx.src = s;
  const std::size_t n = s.size();
  lx.cls.assign(n, Cls::kCode);
  lx.partner.assign(n, npos);
  lx.line_starts.push_back(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] == '\n') lx.line_starts.push_back(i + 1);
  }

  auto mark = [&](std::size_t b, std::size_t e, Cls c) {
    e = std::min(e, n);
    for (std::size_t k = b; k < e; ++k) lx.cls[k] = c;
  };

  std::size_t i = 0;
  while (i < n) {
    const char c = s[i];
    const char next = i + 1 < n ? s[i + 1] : '\0';
    if (c == '/' && next == '/') {
      std::size_t e = s.find('\n', i);
      if (e == npos) e = n;
      mark(i, e, Cls::kComment);
      i = e;
    } else if (c == '/' && next == '*') {
      std::size_t e = s.find("*/", i + 2);
      e = e == npos ? n : e + 2;
      mark(i, e, Cls::kComment);
      i = e;
    } else if (c == '"') {
      std::size_t e;
      if (s.substr(i, 3) == "\"\"\"") {
        e = i + 3;
        while (e < n) {
          if (s[e] == '\\') {
            e += 2;
          } else if (s.substr(e, 3) == "\"\"\"") {
            e += 3;
            break;
          } else {
            ++e;
          }
        }
        e = std::min(e, n);
      } else {
        e = skip_quoted(s, i, '"');
      }
      mark(i, e, Cls::kString);
      i = e;
    } else if (c == '\'') {
      const std::size_t e = skip_quoted(s, i, '\'');
      mark(i, e, Cls::kChar);
      i = e;
    } else {
      ++i;
    }
  }

  std::vector<std::size_t> parens, braces, brackets;
  auto close = [&](std::vector<std::size_t>& stack, std::size_t at) {
    if (!stack.empty()) {
      lx.partner[stack.back()] = at;
      lx.partner[at] = stack.back();
      stack.pop_back();
    }
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (lx.cls[k] != Cls::kCode) continue;
    switch (s[k]) {
      case '(': parens.push_back(k); break;
      case ')': close(parens, k); break;
      case '{': braces.push_back(k); break;
      case '}': close(braces, k); break;
      case '[': brackets.push_back(k); break;
      case ']': close(brackets, k); break;
      default: break;
    }
  }
  return lx;
}

using Span = std::pair<std::size_t, std::size_t>;

// Trims whitespace and comments from both ends of [b, e).
Span trim_span(const Lexed& lx, std::size_t b, std::size_t e) {
  auto blank = [&](std::size_t k) {
    return lx.cls[k] == Cls::kComment || std::isspace(static_cast<unsigned char>(lx.src[k]));
  };
  while (b < e && blank(b)) ++b;
  while (e > b && blank(e - 1)) --e;
  return {b, e};
}

// Splits [b, e) at depth-0 occurrences of `sep` that are code characters.
std::vector<Span> split_top_level(const Lexed& lx, std::size_t b, std::size_t e, char sep) {
  std::vector<Span> parts;
  int depth = 0;
  std::size_t start = b;
  for (std::size_t k = b; k < e; ++k) {
    if (!lx.code(k)) continue;
    const char c = lx.src[k];
    if (c == '(' || c == '[' || c == '{') {
      ++depth;
    } else if (c == ')' || c == ']' || c == '}') {
      --depth;
    } else if (c == sep && depth == 0) {
      if (sep == '+') {
        const bool doubled = (k + 1 < e && (lx.src[k + 1] == '+' || lx.src[k + 1] == '=')) ||
                             (k > b && lx.src[k - 1] == '+');
        if (doubled) continue;
      }
      parts.push_back(trim_span(lx, start, k));
      start = k + 1;
    }
  }
  parts.push_back(trim_span(lx, start, e));
  return parts;
}

bool is_pure_literal(const Lexed& lx, Span part) {
  if (part.first >= part.second) return false;
  if (lx.src[part.first] != '"') return false;
  for (std::size_t k = part.first; k < part.second; ++k) {
    if (lx.cls[k] != Cls::kString) return false;
  }
  // A single literal: the token that starts at part.first must run to the
  // end of the part.
  if (part.first > 0 && lx.cls[part.first - 1] == Cls::kString &&
      lx.src[part.first - 1] != '"') {
    return false;
  }
  return true;
}

Span literal_content(const Lexed& lx, Span part) {
  const std::string_view s = lx.src;
  const std::size_t len = part.second - part.first;
  if (len >= 3 && s.substr(part.first, 3) == "\"\"\"") {
    std::size_t e = part.second;
    if (len >= 6 && s.substr(e - 3, 3) == "\"\"\"") e -= 3;
    return {part.first + 3, e};
  }
  std::size_t e = part.second;
  if (len >= 2 && s[e - 1] == '"') --e;
  return {part.first + 1, e};
}

// Length of a printf-style conversion starting at content[k] == '%', or 0
// when the text is not an argument-consuming conversion.
std::size_t percent_spec_length(std::string_view content, std::size_t k) {
  std::size_t j = k + 1;
  const std::size_t n = content.size();
  if (j >= n) return 0;
  if (content[j] == '%' || content[j] == 'n') return 0;
  std::size_t d = j;
  while (d < n && std::isdigit(static_cast<unsigned char>(content[d]))) ++d;
  if (d > j && d < n && content[d] == '$') j = d + 1;
  while (j < n && std::string_view("-#+ 0,(<").find(content[j]) != npos) ++j;
  while (j < n && std::isdigit(static_cast<unsigned char>(content[j]))) ++j;
  if (j < n && content[j] == '.') {
    ++j;
    while (j < n && std::isdigit(static_cast<unsigned char>(content[j]))) ++j;
  }
  if (j >= n) return 0;
  const char conv = content[j];
  if (conv == 't' || conv == 'T') {
    return j + 1 < n && std::isalpha(static_cast<unsigned char>(content[j + 1])) ? j + 2 - k : 0;
  }
  if (std::string_view("bBhHsScCdoxXeEfgGaA").find(conv) != npos) return j + 1 - k;
  return 0;
}

void scan_placeholders(std::string_view content, std::size_t static_base,
                       std::vector<Placeholder>& out) {
  std::size_t k = 0;
  while (k < content.size()) {
    const char c = content[k];
    if (c == '{' && k + 1 < content.size() && content[k + 1] == '}') {
      const bool escaped = k >= 2 && content[k - 1] == '\\' && content[k - 2] == '\\' &&
                           !(k >= 3 && content[k - 3] == '\\');
      if (!escaped) {
        out.push_back({PlaceholderKind::kBraces, static_base + k, "{}"});
      }
      k += 2;
    } else if (c == '%') {
      if (k + 1 < content.size() && content[k + 1] == '%') {
        k += 2;
        continue;
      }
      const std::size_t len = percent_spec_length(content, k);
      if (len > 0) {
        out.push_back({PlaceholderKind::kPercent, static_base + k,
                       std::string(content.substr(k, len))});
        k += len;
      } else {
        ++k;
      }
    } else {
      ++k;
    }
  }
}

struct CallSyntax {
  std::string receiver;
  std::string method;
  std::size_t open_paren = 0;
  std::size_t close_paren = 0;
  std::vector<Span> args;
  bool complete = false;  // nothing but whitespace / ';' after the call
};

std::optional<CallSyntax> parse_call(const Lexed& lx) {
  const std::string_view s = lx.src;
  std::size_t i = lx.next_code(0);
  if (i == npos || !is_ident_start(s[i])) return std::nullopt;
  std::vector<std::string> chain;
  while (true) {
    const std::size_t e = lx.ident_end(i);
    chain.emplace_back(s.substr(i, e - i));
    const std::size_t d = lx.next_code(e);
    if (d == npos) return std::nullopt;
    if (s[d] == '.') {
      i = lx.next_code(d + 1);
      if (i == npos || !is_ident_start(s[i])) return std::nullopt;
      continue;
    }
    if (s[d] != '(') return std::nullopt;
    i = d;
    break;
  }
  if (chain.size() < 2) return std::nullopt;
  CallSyntax call;
  call.receiver = chain[chain.size() - 2];
  call.method = chain.back();
  call.open_paren = i;
  call.close_paren = lx.partner[i];
  if (call.close_paren == npos) return std::nullopt;

  auto args = split_top_level(lx, call.open_paren + 1, call.close_paren, ',');
  if (!(args.size() == 1 && args[0].first == args[0].second)) call.args = std::move(args);

  std::size_t t = lx.next_code(call.close_paren + 1);
  if (t != npos && s[t] == ';') t = lx.next_code(t + 1);
  call.complete = t == npos;
  return call;
}

struct Decomposition {
  std::string static_text;
  std::vector<Placeholder> placeholders;
  std::vector<std::string> variables;
  StatementLayout layout;
};

// Applies the format-chain rules to an argument list.
Decomposition decompose(const Lexed& lx, const std::vector<Span>& args) {
  Decomposition d;
  const std::string_view s = lx.src;

  std::size_t format_index = npos;
  std::vector<Span> format_parts;
  for (std::size_t a = 0; a < args.size() && format_index == npos; ++a) {
    auto parts = split_top_level(lx, args[a].first, args[a].second, '+');
    for (const auto& p : parts) {
      if (is_pure_literal(lx, p)) {
        format_index = a;
        format_parts = std::move(parts);
        break;
      }
    }
  }

  auto add_variable = [&](Span span) {
    d.variables.emplace_back(s.substr(span.first, span.second - span.first));
    d.layout.variable_spans.push_back(span);
  };

  for (std::size_t a = 0; a < args.size(); ++a) {
    if (a != format_index) {
      if (args[a].first < args[a].second) add_variable(args[a]);
      continue;
    }
    for (const auto& part : format_parts) {
      if (part.first >= part.second) continue;
      if (is_pure_literal(lx, part)) {
        const Span content = literal_content(lx, part);
        const std::size_t base = d.static_text.size();
        const auto text = s.substr(content.first, content.second - content.first);
        d.layout.literals.push_back({base, base + text.size(), content.first});
        d.static_text.append(text);
        scan_placeholders(text, base, d.placeholders);
      } else {
        d.placeholders.push_back({PlaceholderKind::kConcat, d.static_text.size(), "{}"});
        d.static_text.append("{}");
        add_variable(part);
      }
    }
  }
  std::stable_sort(d.placeholders.begin(), d.placeholders.end(),
                   [](const Placeholder& x, const Placeholder& y) { return x.offset < y.offset; });
  return d;
}

LoggingStatement build_statement(std::string_view raw, const std::string& path, int start_line,
                                 int end_line, const std::string& method_id) {
  LoggingStatement st;
  st.raw_text = std::string(raw);
  st.location = {path, start_line, end_line};
  st.method_id = method_id;
  st.id = statement_id(path, start_line, end_line, raw);
  return st;
}

// Fills the decomposition of `st` from its raw text. Marks the statement
// degraded when the call syntax cannot be recovered.
void decompose_into(LoggingStatement& st, const ParserConfig& config) {
  const Lexed lx = lex(st.raw_text);
  const auto call = parse_call(lx);
  if (!call) {
    st.parse_degraded = true;
    return;
  }
  st.receiver = call->receiver;
  st.method = call->method;
  if (auto level = config.level_for(call->method)) st.level = *level;
  auto d = decompose(lx, call->args);
  st.static_text = std::move(d.static_text);
  st.placeholders = std::move(d.placeholders);
  st.variables = std::move(d.variables);
  st.arity_mismatch = st.placeholders.size() != st.variables.size();
}

struct RawCall {
  std::size_t start = 0;
  std::size_t end = 0;
  LogLevel level = LogLevel::kInfo;
  std::string receiver;
  std::string method;
  bool degraded = false;
};

std::vector<RawCall> scan_calls(const Lexed& lx, const ParserConfig& config) {
  std::vector<RawCall> calls;
  const std::string_view s = lx.src;
  std::size_t i = 0;
  while (i < s.size()) {
    if (!lx.code(i) || !is_ident_start(s[i]) || (i > 0 && lx.code(i - 1) && is_ident_char(s[i - 1]))) {
      ++i;
      continue;
    }
    const std::size_t e = lx.ident_end(i);
    const std::string word(s.substr(i, e - i));
    const std::size_t start = i;
    i = e;
    if (!config.logger_receivers.contains(word)) continue;
    const std::size_t dot = lx.next_code(e);
    if (dot == npos || s[dot] != '.') continue;
    const std::size_t m0 = lx.next_code(dot + 1);
    if (m0 == npos || !is_ident_start(s[m0])) continue;
    const std::size_t m1 = lx.ident_end(m0);
    const std::string method(s.substr(m0, m1 - m0));
    const auto level = config.level_for(method);
    if (!level) continue;
    const std::size_t open = lx.next_code(m1);
    if (open == npos || s[open] != '(') continue;

    RawCall call;
    call.start = start;
    call.level = *level;
    call.receiver = word;
    call.method = method;
    const std::size_t close = lx.partner[open];
    if (close == npos) {
      std::size_t eol = s.find('\n', open);
      call.end = eol == npos ? s.size() : eol;
      while (call.end > start && std::isspace(static_cast<unsigned char>(s[call.end - 1]))) --call.end;
      call.degraded = true;
    } else {
      call.end = close + 1;
      const std::size_t semi = lx.next_code(call.end);
      if (semi != npos && s[semi] == ';') call.end = semi + 1;
    }
    calls.push_back(std::move(call));
    i = std::max(i, call.end);
  }
  return calls;
}

LoggingStatement statement_from_call(const Lexed& lx, const RawCall& call,
                                     const std::string& path, int line_offset,
                                     const std::string& method_id, const ParserConfig& config) {
  const auto raw = lx.src.substr(call.start, call.end - call.start);
  const int start_line = lx.line_of(call.start) + line_offset;
  const int end_line = lx.line_of(call.end == 0 ? 0 : call.end - 1) + line_offset;
  LoggingStatement st = build_statement(raw, path, start_line, end_line, method_id);
  st.level = call.level;
  st.receiver = call.receiver;
  st.method = call.method;
  if (call.degraded) {
    st.parse_degraded = true;
  } else {
    decompose_into(st, config);
  }
  return st;
}

const std::unordered_set<std::string>& non_method_names() {
  static const std::unordered_set<std::string> kWords = {
      "if", "for", "while", "switch", "catch", "synchronized", "try", "return",
      "else", "do", "new", "throw", "assert", "super", "this", "case", "default",
      "finally", "static", "class", "interface", "enum", "record", "yield"};
  return kWords;
}

const std::unordered_set<std::string>& non_type_prefixes() {
  static const std::unordered_set<std::string> kWords = {
      "new", "return", "throw", "else", "case", "record", "class", "interface",
      "enum", "extends", "implements", "assert", "yield", "instanceof", "package",
      "import", "throws"};
  return kWords;
}

struct Scope {
  std::string name;
  std::size_t name_pos = 0;
  std::size_t open = 0;
  std::size_t close = 0;
  bool is_method = false;
};

std::vector<Scope> find_classes(const Lexed& lx) {
  std::vector<Scope> classes;
  const std::string_view s = lx.src;
  static const std::unordered_set<std::string> kTypeWords = {"class", "interface", "enum", "record"};
  std::size_t i = 0;
  while (i < s.size()) {
    if (!lx.code(i) || !is_ident_start(s[i]) || (i > 0 && is_ident_char(s[i - 1]))) {
      ++i;
      continue;
    }
    const std::size_t e = lx.ident_end(i);
    const std::string word(s.substr(i, e - i));
    const std::size_t before = lx.prev_code(i);
    i = e;
    if (!kTypeWords.contains(word)) continue;
    if (before != npos && s[before] == '.') continue;
    const std::size_t n0 = lx.next_code(e);
    if (n0 == npos || !is_ident_start(s[n0])) continue;
    const std::size_t n1 = lx.ident_end(n0);
    std::size_t k = n1;
    std::size_t open = npos;
    while (k < s.size()) {
      if (lx.code(k)) {
        if (s[k] == '{') {
          open = k;
          break;
        }
        if (s[k] == ';') break;
        if (s[k] == '(' && lx.partner[k] != npos) k = lx.partner[k];
      }
      ++k;
    }
    if (open == npos || lx.partner[open] == npos) continue;
    classes.push_back({std::string(s.substr(n0, n1 - n0)), n0, open, lx.partner[open], false});
  }
  return classes;
}

const Scope* innermost(const std::vector<Scope>& scopes, std::size_t pos) {
  const Scope* best = nullptr;
  for (const auto& sc : scopes) {
    if (sc.open < pos && pos < sc.close) {
      if (best == nullptr || sc.open > best->open) best = &sc;
    }
  }
  return best;
}

// Recognizes `name(params) [throws X] {` ending at the brace `open`.
std::optional<Span> method_signature(const Lexed& lx, std::size_t open,
                                     const std::vector<Scope>& classes) {
  const std::string_view s = lx.src;
  std::size_t j = lx.prev_code(open);
  if (j == npos) return std::nullopt;
  std::size_t close_paren;
  if (s[j] == ')') {
    close_paren = j;
  } else if (is_ident_char(s[j])) {
    std::size_t k = j;
    auto allowed = [&](std::size_t x) {
      if (!lx.code(x)) return true;
      const char c = s[x];
      return is_ident_char(c) || std::isspace(static_cast<unsigned char>(c)) ||
             std::string_view(".,<>?[]@").find(c) != npos;
    };
    while (k > 0 && allowed(k)) --k;
    if (s[k] != ')' || !lx.code(k)) return std::nullopt;
    const std::size_t w = lx.next_code(k + 1);
    if (w == npos || s.substr(w, lx.ident_end(w) - w) != "throws") return std::nullopt;
    close_paren = k;
  } else {
    return std::nullopt;
  }
  const std::size_t open_paren = lx.partner[close_paren];
  if (open_paren == npos || open_paren > close_paren) return std::nullopt;
  const std::size_t n = lx.prev_code(open_paren);
  if (n == npos || !is_ident_char(s[n])) return std::nullopt;
  const std::size_t a = lx.ident_start_back(n);
  if (!is_ident_start(s[a])) return std::nullopt;
  const std::string name(s.substr(a, n + 1 - a));
  if (non_method_names().contains(name)) return std::nullopt;

  const std::size_t p = lx.prev_code(a);
  if (p == npos) return std::nullopt;
  const char ch = s[p];
  if (is_ident_char(ch)) {
    const std::size_t w = lx.ident_start_back(p);
    const std::string prev(s.substr(w, p + 1 - w));
    if (non_type_prefixes().contains(prev)) return std::nullopt;
    if (w > 0 && s[w - 1] == '.') return std::nullopt;
    return Span{a, n + 1};
  }
  if (ch == '>' || ch == ']') return Span{a, n + 1};
  if (ch == ';' || ch == '}' || ch == '{' || ch == ')') {
    const Scope* cls = innermost(classes, open);
    if (cls != nullptr && cls->name == name) return Span{a, n + 1};
  }
  return std::nullopt;
}

std::string qualified_name_for(const Scope& method, const std::vector<Scope>& classes,
                               const std::vector<Scope>& methods) {
  std::vector<const Scope*> chain;
  for (const auto& c : classes) {
    if (c.open < method.open && method.close < c.close) chain.push_back(&c);
  }
  for (const auto& m : methods) {
    if (&m != &method && m.open < method.open && method.close < m.close) chain.push_back(&m);
  }
  std::sort(chain.begin(), chain.end(), [](const Scope* x, const Scope* y) { return x->open < y->open; });
  std::string out;
  for (const auto* sc : chain) {
    out += sc->name;
    out += '.';
  }
  out += method.name;
  return out;
}

}  // namespace

std::map<std::string, LogLevel> ParserConfig::default_level_methods() {
  std::map<std::string, LogLevel> m;
  const std::pair<const char*, LogLevel> base[] = {
      {"trace", LogLevel::kTrace}, {"debug", LogLevel::kDebug},
      {"info", LogLevel::kInfo},   {"warn", LogLevel::kWarn},
      {"error", LogLevel::kError}, {"fatal", LogLevel::kFatal}};
  for (const auto& [name, level] : base) {
    m[name] = level;
    m[std::string(name) + "f"] = level;  // JBoss-style tracef/debugf/...
    m[std::string(name) + "v"] = level;
  }
  m["warning"] = LogLevel::kWarn;
  m["severe"] = LogLevel::kError;
  m["fine"] = LogLevel::kDebug;
  m["finer"] = LogLevel::kTrace;
  m["finest"] = LogLevel::kTrace;
  return m;
}

std::optional<LogLevel> ParserConfig::level_for(std::string_view method_name) const {
  auto it = level_methods.find(to_lower(method_name));
  if (it == level_methods.end()) return std::nullopt;
  return it->second;
}

std::string statement_id(const std::string& path, int start_line, int end_line,
                         std::string_view raw_text) {
  const auto a = std::to_string(start_line);
  const auto b = std::to_string(end_line);
  return content_id({path, a, b, raw_text});
}

ExtractResult extract_methods(std::string_view source, const std::string& path,
                              const ParserConfig& config, const std::string& project_id) {
  ExtractResult result;
  const Lexed lx = lex(source);
  const auto classes = find_classes(lx);

  std::vector<Scope> methods;
  for (std::size_t o = 0; o < source.size(); ++o) {
    if (!lx.code(o) || source[o] != '{') continue;
    const auto sig = method_signature(lx, o, classes);
    if (!sig) continue;
    if (lx.partner[o] == npos || lx.partner[o] < o) {
      result.errors.push_back({ErrorKind::kUnbalancedBraces, path, lx.line_of(o),
                               "unbalanced braces in body of '" +
                                   std::string(source.substr(sig->first, sig->second - sig->first)) +
                                   "'"});
      continue;
    }
    methods.push_back({std::string(source.substr(sig->first, sig->second - sig->first)),
                       sig->first, o, lx.partner[o], true});
  }
  // Braces that never close outside any recognized method still make the
  // enclosing region unreliable; report them once.
  for (const auto& c : classes) (void)c;
  for (std::size_t o = 0; o < source.size(); ++o) {
    if (lx.code(o) && source[o] == '{' && lx.partner[o] == npos) {
      bool reported = false;
      for (const auto& e : result.errors) reported = reported || e.line == lx.line_of(o);
      if (!reported) {
        result.errors.push_back({ErrorKind::kUnbalancedBraces, path, lx.line_of(o),
                                 "unmatched '{'"});
      }
    }
  }

  const auto calls = scan_calls(lx, config);
  std::vector<std::vector<std::size_t>> per_method(methods.size());
  for (std::size_t c = 0; c < calls.size(); ++c) {
    const Scope* owner = innermost(methods, calls[c].start);
    if (owner == nullptr) continue;
    per_method[static_cast<std::size_t>(owner - methods.data())].push_back(c);
  }

  for (std::size_t m = 0; m < methods.size(); ++m) {
    if (per_method[m].empty()) continue;
    const Scope& sc = methods[m];
    const int start_line = lx.line_of(sc.name_pos);
    const int end_line = lx.line_of(sc.close);
    if (end_line - start_line + 1 > config.max_method_lines) {
      result.errors.push_back({ErrorKind::kDataError, path, start_line,
                               "method '" + sc.name + "' exceeds max_method_lines"});
      continue;
    }
    MethodWithStatements entry;
    auto& ctx = entry.context;
    ctx.project_id = project_id;
    ctx.qualified_name = qualified_name_for(sc, classes, methods);
    ctx.path = path;
    ctx.start_line = start_line;
    ctx.end_line = end_line;
    const std::size_t line_begin = lx.line_starts[static_cast<std::size_t>(start_line - 1)];
    ctx.source_text = std::string(source.substr(line_begin, sc.close + 1 - line_begin));
    ctx.method_id = content_id({path, std::to_string(start_line), std::to_string(end_line),
                                ctx.qualified_name});
    for (std::size_t c : per_method[m]) {
      auto st = statement_from_call(lx, calls[c], path, 0, ctx.method_id, config);
      ctx.statement_ids.push_back(st.id);
      entry.statements.push_back(std::move(st));
    }
    result.methods.push_back(std::move(entry));
  }
  return result;
}

std::vector<LoggingStatement> find_logging_statements(const MethodContext& method,
                                                      const ParserConfig& config) {
  const Lexed lx = lex(method.source_text);
  std::vector<LoggingStatement> out;
  const int offset = std::max(method.start_line, 1) - 1;
  for (const auto& call : scan_calls(lx, config)) {
    out.push_back(statement_from_call(lx, call, method.path, offset, method.method_id, config));
  }
  return out;
}

DecomposedMessage decompose_message(std::string_view format,
                                    const std::vector<std::string>& args) {
  const std::string text(format);
  const Lexed lx = lex(text);
  auto d = decompose(lx, {trim_span(lx, 0, text.size())});
  DecomposedMessage out;
  out.static_text = std::move(d.static_text);
  out.placeholders = std::move(d.placeholders);
  out.variables = std::move(d.variables);
  for (const auto& a : args) out.variables.push_back(a);
  return out;
}

std::optional<LoggingStatement> parse_statement(std::string_view raw_text,
                                                const ParserConfig& config) {
  const std::string raw = trim(raw_text);
  const Lexed lx = lex(raw);
  const auto call = parse_call(lx);
  if (!call || !call->complete) return std::nullopt;
  if (!config.logger_receivers.contains(call->receiver)) return std::nullopt;
  if (!config.level_for(call->method)) return std::nullopt;
  LoggingStatement st = build_statement(raw, "", 0, 0, "");
  decompose_into(st, config);
  if (st.parse_degraded) return std::nullopt;
  return st;
}

std::optional<StatementLayout> layout_of(std::string_view raw_text) {
  const Lexed lx = lex(raw_text);
  const auto call = parse_call(lx);
  if (!call) return std::nullopt;
  return decompose(lx, call->args).layout;
}

std::string render_statement(const LoggingStatement& statement) {
  const auto layout = layout_of(statement.raw_text);
  if (!layout || statement.parse_degraded) return statement.raw_text;

  struct Slot {
    std::size_t begin, end;
    std::string_view text;
  };
  std::vector<Slot> slots;
  const std::string_view st = statement.static_text;
  for (const auto& lit : layout->literals) {
    const std::size_t len = lit.static_end - lit.static_begin;
    const auto text = lit.static_begin <= st.size() ? st.substr(lit.static_begin, len) : std::string_view();
    slots.push_back({lit.raw_begin, lit.raw_begin + len, text});
  }
  for (std::size_t v = 0; v < layout->variable_spans.size(); ++v) {
    const auto& span = layout->variable_spans[v];
    const std::string_view text = v < statement.variables.size() ? std::string_view(statement.variables[v])
                                                                 : std::string_view();
    slots.push_back({span.first, span.second, text});
  }
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return a.begin < b.begin; });

  std::string out;
  std::size_t cursor = 0;
  const std::string_view raw = statement.raw_text;
  for (const auto& slot : slots) {
    if (slot.begin < cursor) continue;
    out.append(raw.substr(cursor, slot.begin - cursor));
    out.append(slot.text);
    cursor = slot.end;
  }
  out.append(raw.substr(std::min(cursor, raw.size())));
  return out;
}

std::string splice_static(const LoggingStatement& statement, std::size_t offset,
                          std::size_t length, std::string_view replacement) {
  const auto layout = layout_of(statement.raw_text);
  if (layout) {
    for (const auto& lit : layout->literals) {
      if (lit.static_begin <= offset && offset + length <= lit.static_end) {
        const std::size_t at = lit.raw_begin + (offset - lit.static_begin);
        std::string out = statement.raw_text;
        out.replace(at, length, replacement);
        return out;
      }
    }
  }
  throw Error(ErrorKind::kDataError, "static-text range is not inside a string literal");
}

std::string splice_variable(const LoggingStatement& statement, std::size_t index,
                            std::string_view replacement) {
  const auto layout = layout_of(statement.raw_text);
  if (!layout || index >= layout->variable_spans.size()) {
    throw Error(ErrorKind::kDataError, "variable index out of range");
  }
  const auto [b, e] = layout->variable_spans[index];
  std::string out = statement.raw_text;
  out.replace(b, e - b, replacement);
  return out;
}

MethodContext replace_statement(const MethodContext& context, const LoggingStatement& original,
                                const LoggingStatement& replacement) {
  MethodContext out = context;
  const std::string& src = context.source_text;
  std::size_t line_offset = 0;
  const int rel = original.location.start_line - context.start_line;
  for (int l = 0; l < rel && line_offset != std::string::npos; ++l) {
    line_offset = src.find('\n', line_offset);
    if (line_offset != std::string::npos) ++line_offset;
  }
  if (line_offset == std::string::npos) line_offset = 0;
  std::size_t at = src.find(original.raw_text, line_offset);
  if (at == std::string::npos) at = src.find(original.raw_text);
  if (at == std::string::npos) {
    throw Error(ErrorKind::kDataError, "statement text not found in its method");
  }
  out.source_text.replace(at, original.raw_text.size(), replacement.raw_text);
  const auto lines = [](std::string_view t) {
    return static_cast<int>(std::count(t.begin(), t.end(), '\n'));
  };
  out.end_line += lines(replacement.raw_text) - lines(original.raw_text);
  for (auto& id : out.statement_ids) {
    if (id == original.id) id = replacement.id;
  }
  return out;
}

std::vector<std::string> in_scope_variables(const MethodContext& method) {
  const Lexed lx = lex(method.source_text);
  const std::string_view s = lx.src;

  // Tokenize code into identifiers and single punctuation characters.
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < s.size();) {
    if (!lx.code(i) || std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (is_ident_start(s[i])) {
      const std::size_t e = lx.ident_end(i);
      tokens.emplace_back(s.substr(i, e - i));
      i = e;
    } else {
      tokens.emplace_back(1, s[i]);
      ++i;
    }
  }

  static const std::unordered_set<std::string> kKeywords = {
      "return", "new", "throw", "else", "case", "package", "import", "instanceof",
      "assert", "yield", "break", "continue", "goto", "do", "if", "for", "while",
      "switch", "try", "catch", "finally", "synchronized", "this", "super",
      "default", "public", "private", "protected", "static", "abstract", "final",
      "throws", "class", "interface", "enum", "true", "false", "null", "void"};
  static const std::unordered_set<std::string> kOpeners = {";", "{", "}", "(", ",", "|", ")", "final"};

  auto is_ident = [](const std::string& t) { return !t.empty() && is_ident_start(t[0]); };
  auto at = [&](std::size_t k) -> const std::string& {
    static const std::string kEmpty;
    return k < tokens.size() ? tokens[k] : kEmpty;
  };

  std::vector<std::string> names;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    const auto& t = tokens[k];
    if (!is_ident(t) || kKeywords.contains(t)) continue;
    bool opener = k == 0 || kOpeners.contains(at(k - 1));
    if (!opener && k >= 2 && at(k - 2) == "@") opener = true;
    if (!opener && k >= 1 && is_ident(at(k - 1)) && k >= 2 && at(k - 2) == "@") opener = true;
    if (!opener) continue;

    std::size_t m = k;
    while (at(m + 1) == "." && is_ident(at(m + 2))) m += 2;
    if (at(m + 1) == "<") {
      int depth = 0;
      std::size_t g = m + 1;
      for (; g < tokens.size(); ++g) {
        const auto& x = tokens[g];
        if (x == "<") {
          ++depth;
        } else if (x == ">") {
          if (--depth == 0) break;
        } else if (!(is_ident(x) || x == "," || x == "?" || x == "." || x == "[" ||
                     x == "]" || x == "&")) {
          break;
        }
      }
      if (g >= tokens.size() || tokens[g] != ">") continue;
      m = g;
    }
    while (at(m + 1) == "[" && at(m + 2) == "]") m += 2;
    if (at(m + 1) == "." && at(m + 2) == "." && at(m + 3) == ".") m += 3;  // varargs
    const auto& name = at(m + 1);
    if (!is_ident(name) || kKeywords.contains(name)) continue;
    const auto& follow = at(m + 2);
    if (follow == "=" || follow == ";" || follow == ":" || follow == "," || follow == ")") {
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    }
  }
  return names;
}

}  // namespace logfix
