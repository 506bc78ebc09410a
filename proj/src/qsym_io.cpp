#include <cctype>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "nesto/qsym.hpp"

namespace nesto {

namespace {

std::string join_parts(const std::vector<int>& parts) {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + "]";
}

// Appends " + k*X" / " - k*X" (or the leading form) for one term.
void append_term(std::string& out, Coeff k, const std::string& body) {
  const bool first = out.empty();
  const bool negative = k < 0;
  // Unsigned magnitude so INT64_MIN renders correctly.
  const auto magnitude = negative ? 0 - static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (magnitude != 1) out += std::to_string(magnitude) + "*";
  out += body;
}

class TextParser {
 public:
  explicit TextParser(std::string_view s) : s_(s) {}

  QSymElement parse() {
    skip_ws();
    if (peek() == '0') {
      const std::size_t mark = pos_++;
      skip_ws();
      if (pos_ == s_.size()) return QSymElement(Basis::M);
      pos_ = mark;
    }
    std::optional<Basis> basis;
    QSymElement out(Basis::M);
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) {
        if (first) fail("empty expression");
        break;
      }
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Coeff k = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        k = parse_int();
        skip_ws();
        if (peek() == '*') ++pos_;
        skip_ws();
      }
      const char letter = peek();
      if (letter != 'M' && letter != 'L') fail("expected basis letter M or L");
      const Basis b = letter == 'M' ? Basis::M : Basis::L;
      if (!basis) {
        basis = b;
        out = QSymElement(b);
      } else if (*basis != b) {
        fail("mixed bases in one expression");
      }
      ++pos_;
      Composition c = parse_composition();
      out.add(c, negative ? checked_mul(k, -1) : k);
      first = false;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  Coeff parse_int() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    Coeff v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = checked_add(checked_mul(v, 10), peek() - '0');
      ++pos_;
    }
    return v;
  }

  Composition parse_composition() {
    skip_ws();
    if (peek() != '[') fail("expected '['");
    ++pos_;
    std::vector<int> parts;
    skip_ws();
    if (peek() == ']') {
      ++pos_;
      return Composition{};
    }
    while (true) {
      skip_ws();
      const std::size_t at = pos_;
      const Coeff v = parse_int();
      if (v < 1 || v > 1000) throw ParseError("composition part out of range", at);
      parts.push_back(static_cast<int>(v));
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ']') {
        ++pos_;
        break;
      }
      fail("expected ',' or ']'");
    }
    return Composition(std::move(parts));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

QSymElement parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("basis") || !j.contains("terms"))
    throw ParseError("QSym JSON needs 'basis' and 'terms'", 0);
  const auto& b = j.at("basis");
  if (!b.is_string() || (b != "M" && b != "L")) throw ParseError("basis must be \"M\" or \"L\"", 0);
  QSymElement out(b == "M" ? Basis::M : Basis::L);
  const auto& terms = j.at("terms");
  if (!terms.is_array()) throw ParseError("'terms' must be an array", 0);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (!t.is_object() || !t.contains("comp") || !t.contains("coeff") || !t["comp"].is_array() ||
        !t["coeff"].is_number_integer())
      throw ParseError("term needs an integer array 'comp' and integer 'coeff'", i);
    std::vector<int> parts;
    for (const auto& p : t["comp"]) {
      if (!p.is_number_integer() || p.get<long long>() < 1) throw ParseError("composition parts must be positive", i);
      parts.push_back(p.get<int>());
    }
    out.add(Composition(std::move(parts)), t["coeff"].get<Coeff>());
  }
  return out;
}

}  // namespace

std::string to_string(const Composition& c) { return join_parts(c.parts()); }
std::string to_string(const Partition& p) { return join_parts(p.parts()); }

std::string to_string(const Permutation& p) {
  std::string out;
  const bool compact = p.size() < 10;
  for (int i = 0; i < p.size(); ++i) {
    if (!compact && i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

std::string to_string(const QSymElement& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const char letter = basis_letter(f.basis());
  for (const auto& [c, k] : f.terms()) append_term(out, k, letter + to_string(c));
  return out;
}

std::string to_string(const QSymTensor& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [key, k] : t.terms())
    append_term(out, k, "M" + to_string(key.first) + "⊗M" + to_string(key.second));
  return out;
}

std::string to_json(const QSymElement& f) {
  nlohmann::ordered_json j;
  j["basis"] = std::string(1, basis_letter(f.basis()));
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [c, k] : f.terms()) {
    nlohmann::ordered_json t;
    t["comp"] = c.parts();
    t["coeff"] = k;
    j["terms"].push_back(std::move(t));
  }
  return j.dump();
}

QSymElement parse_qsym(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') return parse_json(text);
  return TextParser(text).parse();
}

}  // namespace nesto
