#include "toml_lite.hpp"

#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "chargenus/error.hpp"

namespace chargenus::detail {

namespace {

using nlohmann::json;

class TomlReader {
 public:
  explicit TomlReader(std::string_view text) : text_(text) {}

  json run() {
    json root = json::object();
    json* current = &root;
    for (;;) {
      skip_blank_lines();
      if (at_end()) break;
      if (peek() == '[') {
        current = header(root);
      } else {
        key_value(*current);
      }
      end_of_line();
    }
    return root;
  }

 private:
  json* header(json& root) {
    get();
    const bool array = peek() == '[';
    if (array) get();
    skip_space();
    std::vector<std::string> path{key()};
    skip_space();
    while (peek() == '.') {
      get();
      skip_space();
      path.push_back(key());
      skip_space();
    }
    expect(']');
    if (array) expect(']');
    json* node = &root;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      json& next = (*node)[path[i]];
      if (next.is_null()) next = json::object();
      node = next.is_array() ? &next.back() : &next;
      if (!node->is_object()) fail("key '" + path[i] + "' is not a table");
    }
    json& leaf = (*node)[path.back()];
    if (array) {
      if (leaf.is_null()) leaf = json::array();
      if (!leaf.is_array()) fail("'" + path.back() + "' is not an array of tables");
      leaf.push_back(json::object());
      return &leaf.back();
    }
    if (leaf.is_null()) leaf = json::object();
    if (!leaf.is_object()) fail("'" + path.back() + "' is already a value");
    if (!defined_tables_.insert(path_key(path)).second) fail("table '" + path.back() + "' defined twice");
    return &leaf;
  }

  void key_value(json& table) {
    const std::size_t line = line_;
    const std::size_t col = column_;
    std::string k = key();
    skip_space();
    expect('=');
    skip_space();
    if (table.contains(k)) throw ParseError("duplicate key '" + k + "'", line, col);
    table[k] = value();
  }

  std::string key() {
    if (peek() == '"') return basic_string();
    if (peek() == '\'') return literal_string();
    std::string k;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-') k += get();
    if (k.empty()) fail("expected a key");
    return k;
  }

  json value() {
    char c = peek();
    if (c == '"') return basic_string();
    if (c == '\'') return literal_string();
    if (c == '[') {
      get();
      json arr = json::array();
      skip_ws_and_comments();
      while (peek() != ']') {
        arr.push_back(value());
        skip_ws_and_comments();
        if (peek() == ',') {
          get();
          skip_ws_and_comments();
        } else if (peek() != ']') {
          fail("expected ',' or ']'");
        }
      }
      get();
      return arr;
    }
    if (text_.substr(pos_, 4) == "true") {
      advance(4);
      return true;
    }
    if (text_.substr(pos_, 5) == "false") {
      advance(5);
      return false;
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      if (c == '-' || c == '+') digits += get();
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') {
        char d = get();
        if (d != '_') digits += d;
      }
      if (digits.empty() || digits == "-" || digits == "+") fail("expected an integer");
      if (peek() == '.' || peek() == 'e' || peek() == 'E') fail("floating-point values are not supported");
      try {
        return std::stoll(digits);
      } catch (const std::exception&) {
        fail("integer out of range");
      }
    }
    fail("expected a value");
  }

  std::string basic_string() {
    expect('"');
    std::string out;
    for (;;) {
      if (at_end() || peek() == '\n') fail("unterminated string");
      char c = get();
      if (c == '"') break;
      if (c == '\\') {
        char e = get();
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          default: fail(std::string("unsupported escape '\\") + e + "'");
        }
      } else {
        out += c;
      }
    }
    return out;
  }

  std::string literal_string() {
    expect('\'');
    std::string out;
    for (;;) {
      if (at_end() || peek() == '\n') fail("unterminated string");
      char c = get();
      if (c == '\'') break;
      out += c;
    }
    return out;
  }

  void end_of_line() {
    skip_space();
    if (peek() == '#') {
      while (!at_end() && peek() != '\n') get();
    }
    if (at_end()) return;
    if (peek() != '\n' && peek() != '\r') fail("expected end of line");
    while (!at_end() && (peek() == '\n' || peek() == '\r')) get();
  }

  void skip_blank_lines() { skip_ws_and_comments(); }

  void skip_ws_and_comments() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        get();
      } else if (peek() == '#') {
        while (!at_end() && peek() != '\n') get();
      } else {
        break;
      }
    }
  }

  void skip_space() {
    while (peek() == ' ' || peek() == '\t') get();
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  static std::string path_key(const std::vector<std::string>& path) {
    std::string out;
    for (const auto& p : path) out += p + '\x1f';
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) get();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::set<std::string> defined_tables_;
};

}  // namespace

nlohmann::json parse_toml(std::string_view text) { return TomlReader(text).run(); }

}  // namespace chargenus::detail
