#include "wht/corpus_dsl.hpp"

#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "validation.hpp"

namespace wht {

namespace {

enum class Tok { Ident, String, Integer, LBrace, RBrace, Colon, LBracket, RBracket, Comma, End };

std::string_view describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::String: return "string";
    case Tok::Integer: return "integer";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Colon: return "':'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::End: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind = Tok::End;
  std::string text;  // identifier spelling, decoded string, or integer digits
  SourceSpan span;
};

struct SyntaxError {
  std::string message;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_trivia();
    Token tok;
    tok.span = here();
    if (pos_ >= text_.size()) return tok;

    const char c = text_[pos_];
    switch (c) {
      case '{': advance(); tok.kind = Tok::LBrace; return tok;
      case '}': advance(); tok.kind = Tok::RBrace; return tok;
      case ':': advance(); tok.kind = Tok::Colon; return tok;
      case '[': advance(); tok.kind = Tok::LBracket; return tok;
      case ']': advance(); tok.kind = Tok::RBracket; return tok;
      case ',': advance(); tok.kind = Tok::Comma; return tok;
      case '"': return lex_string(tok);
      default: break;
    }
    if (c == '-' || is_digit(c)) return lex_integer(tok);
    if (is_ident_start(c)) {
      tok.kind = Tok::Ident;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) tok.text += advance();
      return tok;
    }
    throw SyntaxError{"unexpected character " + quote_char(), tok.span};
  }

 private:
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c) || c == '-'; }

  SourceSpan here() const { return {line_, column_}; }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      // Columns count code points: UTF-8 continuation bytes do not advance.
      ++column_;
    }
    return c;
  }

  std::string quote_char() const {
    const auto c = static_cast<unsigned char>(text_[pos_]);
    if (c < 0x20 || c >= 0x7F) {
      static constexpr char kHex[] = "0123456789abcdef";
      return std::string("byte 0x") + kHex[c >> 4] + kHex[c & 0xF];
    }
    return std::string("'") + text_[pos_] + "'";
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token& lex_string(Token& tok) {
    tok.kind = Tok::String;
    advance();  // opening quote
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') {
        throw SyntaxError{"unterminated string", tok.span};
      }
      const char c = advance();
      if (c == '"') return tok;
      if (c != '\\') {
        tok.text += c;
        continue;
      }
      const SourceSpan escape_span{line_, column_ - 1};
      if (pos_ >= text_.size()) throw SyntaxError{"unterminated string", tok.span};
      switch (advance()) {
        case '"': tok.text += '"'; break;
        case '\\': tok.text += '\\'; break;
        case 'n': tok.text += '\n'; break;
        case 't': tok.text += '\t'; break;
        default: throw SyntaxError{"unknown escape sequence in string", escape_span};
      }
    }
  }

  Token& lex_integer(Token& tok) {
    tok.kind = Tok::Integer;
    if (text_[pos_] == '-') tok.text += advance();
    if (pos_ >= text_.size() || !is_digit(text_[pos_])) {
      throw SyntaxError{"expected digits after '-'", tok.span};
    }
    while (pos_ < text_.size() && is_digit(text_[pos_])) tok.text += advance();
    if (pos_ < text_.size() && is_ident_char(text_[pos_])) {
      throw SyntaxError{"malformed integer", tok.span};
    }
    return tok;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

/// Source positions remembered per application so validation findings can
/// point back into the document.
struct AppSpans {
  SourceSpan application;
  SourceSpan name;
  std::optional<SourceSpan> id;
  std::vector<SourceSpan> entities;
  std::vector<std::optional<SourceSpan>> counts;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) {}

  ParseResult run() {
    ParseResult result;
    try {
      bump();
      while (current_.kind != Tok::End) {
        if (current_.kind != Tok::Ident || current_.text != "application") {
          throw SyntaxError{"expected 'application', found " + found(), current_.span};
        }
        parse_application(result.corpus);
      }
    } catch (const SyntaxError& e) {
      diagnostics_.push_back({Severity::Error, e.message, e.span, std::nullopt, std::nullopt});
      return fail();
    }

    for (auto& finding : detail::validate_findings(result.corpus)) {
      // A missing id is already reported; its placeholder 0 proves nothing.
      if (finding.site == detail::Site::Id && !spans_[finding.position].id) continue;
      finding.diagnostic.location = locate(finding);
      diagnostics_.push_back(std::move(finding.diagnostic));
    }
    if (has_errors(diagnostics_)) return fail();

    result.diagnostics = std::move(diagnostics_);
    sort_by_location(result.diagnostics);
    return result;
  }

 private:
  ParseResult fail() {
    ParseResult result;
    result.diagnostics = std::move(diagnostics_);
    sort_by_location(result.diagnostics);
    return result;
  }

  static void sort_by_location(std::vector<Diagnostic>& diagnostics) {
    std::stable_sort(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& a, const Diagnostic& b) {
                       return a.location.value_or(SourceSpan{}) < b.location.value_or(SourceSpan{});
                     });
  }

  SourceSpan locate(const detail::Finding& finding) const {
    const AppSpans& s = spans_[finding.position];
    const auto& entity = finding.diagnostic.entity_index;
    switch (finding.site) {
      case detail::Site::Id: return s.id.value_or(s.application);
      case detail::Site::Name: return s.name;
      case detail::Site::Entity: return s.entities[*entity];
      case detail::Site::Count: return s.counts[*entity].value_or(s.entities[*entity]);
      case detail::Site::Application: break;
    }
    return s.application;
  }

  void bump() { current_ = lexer_.next(); }

  std::string found() const {
    switch (current_.kind) {
      case Tok::Ident: return "'" + current_.text + "'";
      case Tok::Integer: return "integer " + current_.text;
      case Tok::String: return "string \"" + current_.text + "\"";
      default: return std::string(describe(current_.kind));
    }
  }

  Token expect(Tok kind) {
    if (current_.kind != kind) {
      throw SyntaxError{"expected " + std::string(describe(kind)) + ", found " + found(),
                        current_.span};
    }
    Token tok = std::move(current_);
    bump();
    return tok;
  }

  void semantic_error(std::string message, SourceSpan span) {
    diagnostics_.push_back({Severity::Error, std::move(message), span, std::nullopt, std::nullopt});
  }

  std::int64_t to_int(const Token& tok) {
    std::int64_t value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw SyntaxError{"integer out of range", tok.span};
    return value;
  }

  // Claims a field key; false (with an error) when it was already given.
  bool claim(std::set<std::string>& seen, const Token& key) {
    if (seen.insert(key.text).second) return true;
    semantic_error("duplicate field '" + key.text + "'", key.span);
    return false;
  }

  void skip_value() {
    if (current_.kind == Tok::String || current_.kind == Tok::Integer ||
        current_.kind == Tok::Ident) {
      bump();
      return;
    }
    if (current_.kind == Tok::LBracket) {
      bump();
      if (current_.kind != Tok::RBracket) {
        skip_value();
        while (current_.kind == Tok::Comma) {
          bump();
          skip_value();
        }
      }
      expect(Tok::RBracket);
      return;
    }
    throw SyntaxError{"expected a value, found " + found(), current_.span};
  }

  void parse_application(Corpus& corpus) {
    AppSpans spans;
    spans.application = current_.span;
    bump();
    Application app;
    const Token name = expect(Tok::String);
    spans.name = name.span;
    app.name = name.text;
    expect(Tok::LBrace);

    std::set<std::string> seen;
    while (current_.kind != Tok::RBrace) {
      if (current_.kind != Tok::Ident) {
        throw SyntaxError{"expected a field or 'entity', found " + found(), current_.span};
      }
      if (current_.text == "entity") {
        parse_entity(app, spans);
        continue;
      }
      const Token key = expect(Tok::Ident);
      expect(Tok::Colon);
      if (key.text == "id" || key.text == "year") {
        const Token value = expect(Tok::Integer);
        if (!claim(seen, key)) continue;
        if (key.text == "id") {
          app.id = to_int(value);
          spans.id = value.span;
        } else {
          app.year = to_int(value);
        }
      } else if (key.text == "genre" || key.text == "subgenre") {
        const Token value = expect(Tok::String);
        if (!claim(seen, key)) continue;
        (key.text == "genre" ? app.genre : app.subgenre) = value.text;
      } else if (key.text == "refs") {
        std::vector<std::string> refs;
        expect(Tok::LBracket);
        if (current_.kind != Tok::RBracket) {
          refs.push_back(expect(Tok::String).text);
          while (current_.kind == Tok::Comma) {
            bump();
            refs.push_back(expect(Tok::String).text);
          }
        }
        expect(Tok::RBracket);
        if (claim(seen, key)) app.refs = std::move(refs);
      } else {
        diagnostics_.push_back({Severity::Warning, "unknown application field '" + key.text + "'",
                                key.span, std::nullopt, std::nullopt});
        skip_value();
      }
    }
    bump();  // '}'

    if (!spans.id) {
      semantic_error("application '" + app.name + "' is missing an id", spans.application);
    }
    corpus.applications.push_back(std::move(app));
    spans_.push_back(std::move(spans));
  }

  void parse_entity(Application& app, AppSpans& spans) {
    const SourceSpan at = current_.span;
    bump();
    Entity entity;
    entity.name = expect(Tok::String).text;
    expect(Tok::LBrace);

    std::set<std::string> seen;
    std::optional<SourceSpan> count_span;
    if (current_.kind == Tok::RBrace) {
      throw SyntaxError{"expected an entity field, found " + found(), current_.span};
    }
    while (current_.kind != Tok::RBrace) {
      const Token key = expect(Tok::Ident);
      expect(Tok::Colon);
      if (key.text == "what") {
        const Token value = expect(Tok::Ident);
        const auto role = role_from_keyword(value.text);
        if (!role) semantic_error("unknown role '" + value.text + "'", value.span);
        if (claim(seen, key) && role) entity.role = *role;
      } else if (key.text == "how") {
        const Token value = expect(Tok::Ident);
        const auto how = tangibility_from_keyword(value.text);
        if (!how) semantic_error("unknown tangibility '" + value.text + "'", value.span);
        if (claim(seen, key) && how) entity.tangibility = *how;
      } else if (key.text == "count") {
        const SourceSpan value_span = current_.span;
        if (current_.kind == Tok::Ident) {
          const Token value = expect(Tok::Ident);
          if (value.text != "many") {
            semantic_error("count must be an integer or 'many', found '" + value.text + "'",
                           value.span);
          } else if (claim(seen, key)) {
            entity.count = Count::many();
          }
        } else {
          const Token value = expect(Tok::Integer);
          const std::int64_t n = to_int(value);
          if (n < 0) {
            semantic_error("count must be positive (got " + value.text + ")", value.span);
          } else if (claim(seen, key)) {
            entity.count = Count::exact(static_cast<std::uint64_t>(n));
          }
        }
        count_span = value_span;
      } else if (key.text == "note") {
        const Token value = expect(Tok::String);
        if (claim(seen, key)) entity.note = value.text;
      } else {
        diagnostics_.push_back({Severity::Warning, "unknown entity field '" + key.text + "'",
                                key.span, std::nullopt, std::nullopt});
        skip_value();
      }
    }
    bump();  // '}'

    if (!seen.count("what")) semantic_error("entity '" + entity.name + "' is missing 'what'", at);
    if (!seen.count("how")) semantic_error("entity '" + entity.name + "' is missing 'how'", at);
    app.entities.push_back(std::move(entity));
    spans.entities.push_back(at);
    spans.counts.push_back(count_span);
  }

  Lexer lexer_;
  Token current_;
  std::vector<Diagnostic> diagnostics_;
  std::vector<AppSpans> spans_;
};

std::string quoted(std::string_view raw) {
  std::string out = "\"";
  for (const char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

}  // namespace

ParseResult parse_corpus(std::string_view text) { return Parser(text).run(); }

std::string serialize_corpus(const Corpus& corpus) {
  std::string out;
  for (const auto& app : corpus.applications) {
    if (!out.empty()) out += '\n';
    out += "application " + quoted(app.name) + " {\n";
    out += "  id: " + std::to_string(app.id) + "\n";
    if (app.year) out += "  year: " + std::to_string(*app.year) + "\n";
    if (app.genre) out += "  genre: " + quoted(*app.genre) + "\n";
    if (app.subgenre) out += "  subgenre: " + quoted(*app.subgenre) + "\n";
    if (!app.refs.empty()) {
      out += "  refs: [";
      for (std::size_t i = 0; i < app.refs.size(); ++i) {
        if (i > 0) out += ", ";
        out += quoted(app.refs[i]);
      }
      out += "]\n";
    }
    for (const auto& entity : app.entities) {
      out += "  entity " + quoted(entity.name) + " {\n";
      out += "    what: " + std::string(to_string(entity.role)) + "\n";
      out += "    how: " + std::string(to_string(entity.tangibility)) + "\n";
      if (entity.count.is_many()) {
        out += "    count: many\n";
      } else if (entity.count.value() != 1) {
        out += "    count: " + std::to_string(entity.count.value()) + "\n";
      }
      if (entity.note) out += "    note: " + quoted(*entity.note) + "\n";
      out += "  }\n";
    }
    out += "}\n";
  }
  return out;
}

}  // namespace wht
