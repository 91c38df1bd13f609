#include "liemirror/exterior.hpp"

#include <cctype>
#include <sstream>

namespace liemirror {

ExtQ parse_form(const std::string& text, int ambient_dim) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty form expression");
  if (s == "0") return ExtQ(ambient_dim, 0);

  struct Term {
    Rat coeff;
    std::vector<int> indices;
  };
  std::vector<Term> terms;
  size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    Rat sign(1);
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (!first) {
      throw ParseError("malformed form expression: '" + text + "'");
    }
    first = false;
    Rat coeff(1);
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      size_t dig = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      boost::multiprecision::cpp_int num(s.substr(dig, pos - dig));
      boost::multiprecision::cpp_int den(1);
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t d2 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == d2) throw ParseError("malformed coefficient in '" + text + "'");
        den = boost::multiprecision::cpp_int(s.substr(d2, pos - d2));
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
      }
      coeff = Rat(num, den);
    }
    if (pos >= s.size() || s[pos] != 'e')
      throw ParseError("expected 'e' in form term: '" + text + "'");
    ++pos;
    std::vector<int> idx;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      int i = s[pos] - '0';
      if (i < 1 || i > ambient_dim)
        throw ParseError("index out of range in form term: '" + text + "'");
      idx.push_back(i - 1);
      ++pos;
    }
    if (idx.empty()) throw ParseError("missing indices in form term: '" + text + "'");
    terms.push_back({sign * coeff, idx});
  }

  int deg = static_cast<int>(terms[0].indices.size());
  ExtQ out(ambient_dim, deg);
  for (const auto& t : terms) {
    if (static_cast<int>(t.indices.size()) != deg)
      throw ParseError("mixed degrees in form expression: '" + text + "'");
    ExtQ b = ExtQ::basis(ambient_dim, t.indices);
    out = out + b.scaled(t.coeff);
  }
  return out;
}

namespace {

template <typename K>
std::string coeff_prefix(const K& c, bool lead);

template <>
std::string coeff_prefix<Rat>(const Rat& c, bool lead) {
  if (c == 1) return lead ? "" : "+";
  if (c == -1) return "-";
  std::string s = to_string(c);
  if (!lead && s[0] != '-') s = "+" + s;
  return s;
}

template <>
std::string coeff_prefix<CRat>(const CRat& c, bool lead) {
  if (c == CRat(1)) return lead ? "" : "+";
  if (c == CRat(-1)) return "-";
  std::string s = to_string(c);
  bool composite = !c.re.is_zero() && !c.im.is_zero();
  if (composite) s = "(" + s + ")";
  if (!lead && s[0] != '-') s = "+" + s;
  return s;
}

template <typename K>
std::string ext_to_string(const ExtElement<K>& a) {
  if (a.is_zero()) return "0";
  if (a.degree() == 0) return to_string(a.coefficient(0));
  std::ostringstream os;
  bool lead = true;
  for (const auto& [m, c] : a.terms()) {
    os << coeff_prefix<K>(c, lead) << "e";
    for (int i = 0; i < a.ambient_dim(); ++i)
      if (m & (1u << i)) os << (i + 1);
    lead = false;
  }
  return os.str();
}

}  // namespace

std::string to_string(const ExtQ& a) { return ext_to_string(a); }
std::string to_string(const ExtC& a) { return ext_to_string(a); }

}  // namespace liemirror
