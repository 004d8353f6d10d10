#include "avm/avm_text.hpp"

#include <cctype>
#include <sstream>

#include "common/error.hpp"

namespace lexlab::avm {

namespace {

bool is_token_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '-' || c == '\'' || c >= 0x80;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail_here(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string token() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_token_char(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) fail_here("expected a token");
    return std::string(text_.substr(start, pos_ - start));
  }

  int line() const { return line_; }

  [[noreturn]] void fail_here(const std::string& what) const {
    std::ostringstream os;
    os << "parse error at line " << line_ << ": " << what;
    fail(ErrorCode::kParse, os.str());
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

FeatureValue parse_value(Lexer& lx);

FeatureStructure parse_struct(Lexer& lx) {
  lx.expect('[');
  FeatureStructure fs;
  if (lx.accept(']')) return fs;
  while (true) {
    std::string name = lx.token();
    lx.expect(':');
    FeatureValue value = parse_value(lx);
    std::string upper = to_upper_ascii(name);
    if (fs.find(upper) != nullptr) {
      lx.fail_here("duplicate attribute '" + upper + "'");
    }
    fs.set(upper, std::move(value));
    if (lx.accept(']')) return fs;
    lx.expect(',');
  }
}

FeatureValue parse_value(Lexer& lx) {
  char c = lx.peek();
  if (c == '[') return FeatureValue::structure(parse_struct(lx));
  if (c == '?') {
    lx.expect('?');
    return FeatureValue::variable(lx.token());
  }
  return FeatureValue::atom(lx.token());
}

void print_value(const FeatureValue& v, std::string& out);

void print_struct(const FeatureStructure& fs, std::string& out) {
  out += '[';
  bool first = true;
  for (const auto& [name, value] : fs.attributes()) {
    if (!first) out += ", ";
    first = false;
    out += name;
    out += ':';
    print_value(value, out);
  }
  out += ']';
}

void print_value(const FeatureValue& v, std::string& out) {
  switch (v.kind()) {
    case FeatureValue::Kind::kAtom:
      out += v.atom_text();
      break;
    case FeatureValue::Kind::kVariable:
      out += '?';
      out += v.variable_name();
      break;
    case FeatureValue::Kind::kStructure:
      print_struct(v.structure(), out);
      break;
  }
}

}  // namespace

FeatureStructure parse_structure(std::string_view text) {
  Lexer lx(text);
  FeatureStructure fs = parse_struct(lx);
  if (!lx.at_end()) lx.fail_here("trailing input after structure");
  return fs;
}

std::vector<ParsedEntry> parse_structures(std::string_view text) {
  Lexer lx(text);
  std::vector<ParsedEntry> out;
  while (!lx.at_end()) {
    ParsedEntry entry;
    entry.line = lx.line();
    entry.fs = parse_struct(lx);
    out.push_back(std::move(entry));
  }
  return out;
}

std::string print_structure(const FeatureStructure& fs) {
  std::string out;
  print_struct(fs, out);
  return out;
}

}  // namespace lexlab::avm
