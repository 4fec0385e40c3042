#ifndef FUZZYAF_FORMAT_HPP
#define FUZZYAF_FORMAT_HPP

// Reading and writing frameworks and fuzzy sets.
//
// fapx is line-oriented:
//
//   # comment
//   arg(A,0.8).
//   att(A,B,0.8).
//
// Whitespace is insignificant, several statements may share a line, and
// names match [A-Za-z0-9_]+. The structured form is JSON:
//
//   {"arguments": [{"id": "A", "degree": "0.8"}],
//    "attacks":   [{"from": "A", "to": "B", "degree": "0.8"}]}
//
// with degrees always written as decimal strings.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fuzzyaf/framework.hpp"

namespace fuzzyaf {

enum class InputFormat { automatic, fapx, structured };

inline InputFormat input_format_from_string(std::string_view s) {
  if (s == "auto") return InputFormat::automatic;
  if (s == "fapx") return InputFormat::fapx;
  if (s == "json" || s == "structured") return InputFormat::structured;
  throw std::invalid_argument("unknown input format '" + std::string(s) + "'");
}

/// Malformed or invalid input. line/column are 1-based; 0 means the position
/// is not known (e.g. a schema error inside a JSON document).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }
  std::size_t line_;
  std::size_t column_;
};

/// A fuzzy set names an argument the framework does not have.
class UnknownArgument : public std::runtime_error {
public:
  explicit UnknownArgument(const std::string& name)
      : std::runtime_error("unknown argument '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

namespace detail {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Statement {
  std::string keyword;
  std::vector<std::string> fields;
  std::vector<Position> field_pos;
  Position pos;
};

class FapxLexer {
public:
  explicit FapxLexer(std::string_view text) : text_(text) {}

  /// Next statement, or false at end of input.
  bool next(Statement& st) {
    skip_blank();
    if (at_end()) return false;
    st = Statement{};
    st.pos = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) st.keyword += take();
    if (st.keyword.empty()) fail(std::string("unexpected character '") + peek() + "'");
    skip_blank();
    expect('(');
    for (;;) {
      skip_blank();
      st.field_pos.push_back(pos_);
      std::string field;
      while (!at_end() && is_field_char(peek())) field += take();
      if (field.empty()) fail(at_end() ? "unexpected end of input" : std::string("unexpected character '") + peek() + "'");
      st.fields.push_back(std::move(field));
      skip_blank();
      if (!at_end() && peek() == ',') {
        take();
        continue;
      }
      expect(')');
      break;
    }
    skip_blank();
    expect('.');
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_.line, pos_.column); }

private:
  static bool is_field_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  }
  bool at_end() const { return i_ >= text_.size(); }
  char peek() const { return text_[i_]; }
  char take() {
    const char c = text_[i_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }
  void expect(char c) {
    if (at_end()) fail(std::string("expected '") + c + "' before end of input");
    if (peek() != c) fail(std::string("expected '") + c + "', found '" + peek() + "'");
    take();
  }
  void skip_blank() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        take();
      } else if (peek() == '#') {
        while (!at_end() && peek() != '\n') take();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Position pos_;
};

inline void check_name(const std::string& name, const Position& p) {
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      throw ParseError("invalid argument name '" + name + "'", p.line, p.column);
    }
  }
}

inline Degree field_degree(const std::string& text, const Position& p, bool allow_zero) {
  auto d = Degree::parse_decimal(text);
  if (!d) throw ParseError("invalid degree '" + text + "'", p.line, p.column);
  if (d->is_zero() && !allow_zero) throw ParseError("degree must lie in (0,1]", p.line, p.column);
  return *d;
}

inline Position offset_to_position(std::string_view text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

inline nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte is one past the offending character
    const Position p = offset_to_position(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", p.line, p.column);
  }
}

inline const std::string& json_string(const nlohmann::json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw ParseError(where + ": missing string field \"" + key + "\"", 0, 0);
  }
  return it->get_ref<const std::string&>();
}

inline Degree json_degree(const std::string& text, const std::string& where, bool allow_zero) {
  auto d = Degree::parse_decimal(text);
  if (!d) throw ParseError(where + ": invalid degree '" + text + "'", 0, 0);
  if (d->is_zero() && !allow_zero) throw ParseError(where + ": degree must lie in (0,1]", 0, 0);
  return *d;
}

inline InputFormat resolve_format(std::string_view text, InputFormat format) {
  if (format != InputFormat::automatic) return format;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' || c == '[' ? InputFormat::structured : InputFormat::fapx;
  }
  return InputFormat::fapx;
}

inline Framework parse_fapx(std::string_view text) {
  FapxLexer lex(text);
  FrameworkBuilder builder;
  struct PendingAttack {
    std::string from;
    std::string to;
    Degree degree;
    Position pos;
  };
  std::vector<PendingAttack> attacks;
  Statement st;
  while (lex.next(st)) {
    if (st.keyword == "arg") {
      if (st.fields.size() != 2) throw ParseError("arg expects 2 fields", st.pos.line, st.pos.column);
      check_name(st.fields[0], st.field_pos[0]);
      const Degree d = field_degree(st.fields[1], st.field_pos[1], false);
      if (builder.has_argument(st.fields[0])) {
        throw ParseError("duplicate argument '" + st.fields[0] + "'", st.pos.line, st.pos.column);
      }
      builder.argument(st.fields[0], d);
    } else if (st.keyword == "att") {
      if (st.fields.size() != 3) throw ParseError("att expects 3 fields", st.pos.line, st.pos.column);
      check_name(st.fields[0], st.field_pos[0]);
      check_name(st.fields[1], st.field_pos[1]);
      attacks.push_back({st.fields[0], st.fields[1], field_degree(st.fields[2], st.field_pos[2], false), st.pos});
    } else {
      throw ParseError("unknown statement '" + st.keyword + "'", st.pos.line, st.pos.column);
    }
  }
  for (std::size_t k = 0; k < attacks.size(); ++k) {
    const auto& a = attacks[k];
    for (const std::string* end : {&a.from, &a.to}) {
      if (!builder.has_argument(*end)) {
        throw ParseError("attack endpoint '" + *end + "' is not a declared argument", a.pos.line, a.pos.column);
      }
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (attacks[j].from == a.from && attacks[j].to == a.to) {
        throw ParseError("duplicate attack " + a.from + "->" + a.to, a.pos.line, a.pos.column);
      }
    }
    builder.attack(a.from, a.to, a.degree);
  }
  return builder.build();
}

inline Framework parse_structured(std::string_view text) {
  const nlohmann::json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("expected a JSON object", 1, 1);
  FrameworkBuilder builder;
  if (auto it = doc.find("arguments"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("\"arguments\" must be an array", 0, 0);
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string where = "arguments[" + std::to_string(k) + "]";
      const auto& a = (*it)[k];
      const std::string& id = json_string(a, "id", where);
      check_name(id, Position{0, 0});
      const Degree d = json_degree(json_string(a, "degree", where), where, false);
      if (builder.has_argument(id)) throw ParseError(where + ": duplicate argument '" + id + "'", 0, 0);
      builder.argument(id, d);
    }
  }
  if (auto it = doc.find("attacks"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("\"attacks\" must be an array", 0, 0);
    std::vector<std::pair<std::string, std::string>> seen;
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string where = "attacks[" + std::to_string(k) + "]";
      const auto& a = (*it)[k];
      const std::string& from = json_string(a, "from", where);
      const std::string& to = json_string(a, "to", where);
      const Degree d = json_degree(json_string(a, "degree", where), where, false);
      for (const std::string* end : {&from, &to}) {
        if (!builder.has_argument(*end)) {
          throw ParseError(where + ": attack endpoint '" + *end + "' is not a declared argument", 0, 0);
        }
      }
      for (const auto& [f, t] : seen) {
        if (f == from && t == to) throw ParseError(where + ": duplicate attack " + from + "->" + to, 0, 0);
      }
      seen.emplace_back(from, to);
      builder.attack(from, to, d);
    }
  }
  return builder.build();
}

}  // namespace detail

/// Parses a framework. Throws ParseError on syntax errors, duplicate
/// arguments or attacks, undeclared attack endpoints and degrees outside (0,1].
inline Framework parse_faf(std::string_view text, InputFormat format = InputFormat::automatic) {
  if (detail::resolve_format(text, format) == InputFormat::structured) return detail::parse_structured(text);
  return detail::parse_fapx(text);
}

/// Parses a fuzzy set of arguments over faf's universe. Accepts fapx arg(...)
/// statements, a structured {"arguments": [...]} document, a bare
/// [{"id", "degree"}] array as printed by solve, or a flat JSON object
/// {"A": "0.8", ...}. Degrees may be 0. Throws UnknownArgument for
/// names outside the universe.
inline FuzzySet parse_fuzzy_set(std::string_view text, const Framework& faf,
                                InputFormat format = InputFormat::automatic) {
  FuzzySet out = faf.empty_set();
  std::vector<bool> seen(faf.universe_size());
  auto assign = [&](const std::string& name, Degree d, const std::string& where, std::size_t line,
                    std::size_t col) {
    auto idx = faf.universe().find(name);
    if (!idx) throw UnknownArgument(name);
    if (seen[*idx]) throw ParseError(where + "duplicate entry for '" + name + "'", line, col);
    seen[*idx] = true;
    out.set(*idx, d);
  };
  if (detail::resolve_format(text, format) == InputFormat::structured) {
    const nlohmann::json doc = detail::parse_json(text);
    if (!doc.is_object() && !doc.is_array()) throw ParseError("expected a JSON object or array", 1, 1);
    if (doc.is_object() && doc.contains("attacks") && !doc["attacks"].empty()) {
      throw ParseError("a fuzzy set must not contain attacks", 0, 0);
    }
    const nlohmann::json* list = doc.is_array() ? &doc : nullptr;
    if (auto it = doc.find("arguments"); doc.is_object() && it != doc.end()) list = &*it;
    if (list) {
      if (!list->is_array()) throw ParseError("\"arguments\" must be an array", 0, 0);
      for (std::size_t k = 0; k < list->size(); ++k) {
        const std::string where = "arguments[" + std::to_string(k) + "]";
        const auto& a = (*list)[k];
        assign(detail::json_string(a, "id", where),
               detail::json_degree(detail::json_string(a, "degree", where), where, true), where + ": ", 0, 0);
      }
    } else {
      for (const auto& [key, value] : doc.items()) {
        if (key == "attacks") continue;
        if (!value.is_string()) throw ParseError("degree of '" + key + "' must be a decimal string", 0, 0);
        assign(key, detail::json_degree(value.get<std::string>(), key, true), "", 0, 0);
      }
    }
    return out;
  }
  detail::FapxLexer lex(text);
  detail::Statement st;
  while (lex.next(st)) {
    if (st.keyword != "arg" || st.fields.size() != 2) {
      throw ParseError("a fuzzy set may only contain arg(<name>,<degree>) statements", st.pos.line, st.pos.column);
    }
    detail::check_name(st.fields[0], st.field_pos[0]);
    assign(st.fields[0], detail::field_degree(st.fields[1], st.field_pos[1], true), "", st.pos.line,
           st.pos.column);
  }
  return out;
}

/// Canonical fapx text: arguments in name order, then attacks by (from, to).
inline std::string to_fapx(const Framework& faf) {
  std::ostringstream os;
  for (ArgIndex a : faf.arguments()) os << "arg(" << faf.name(a) << "," << faf.degree(a).to_string() << ").\n";
  for (const Attack& at : faf.attacks()) {
    os << "att(" << faf.name(at.from) << "," << faf.name(at.to) << "," << at.degree.to_string() << ").\n";
  }
  return os.str();
}

/// [{"id": ..., "degree": ...}, ...] over the non-zero entries in name order.
inline nlohmann::ordered_json fuzzy_set_to_json(const Universe& universe, const FuzzySet& s) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (ArgIndex a : s.support()) {
    arr.push_back({{"id", universe.name(a)}, {"degree", s[a].to_string()}});
  }
  return arr;
}

inline nlohmann::ordered_json to_structured(const Framework& faf) {
  nlohmann::ordered_json doc;
  doc["arguments"] = fuzzy_set_to_json(faf.universe(), faf.args());
  auto& attacks = doc["attacks"] = nlohmann::ordered_json::array();
  for (const Attack& at : faf.attacks()) {
    attacks.push_back({{"from", faf.name(at.from)}, {"to", faf.name(at.to)}, {"degree", at.degree.to_string()}});
  }
  return doc;
}

/// Compact "{A:0.8, B:0.2}" rendering, handy in messages and test output.
inline std::string to_display(const Universe& universe, const FuzzySet& s) {
  std::string out = "{";
  bool first = true;
  for (ArgIndex a : s.support()) {
    if (!first) out += ", ";
    first = false;
    out += universe.name(a) + ":" + s[a].to_string();
  }
  return out + "}";
}

}  // namespace fuzzyaf

#endif  // FUZZYAF_FORMAT_HPP
