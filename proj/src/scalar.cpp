#include "liemirror/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace liemirror {

namespace {

// Reads a signed rational "[-+]?digits(/digits)?" starting at pos.
Rat read_rational(const std::string& s, size_t& pos) {
  size_t start = pos;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = (s[pos] == '-');
    ++pos;
  }
  size_t dig = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == dig)
    throw std::runtime_error("malformed rational literal: '" + s.substr(start) + "'");
  boost::multiprecision::cpp_int num(s.substr(dig, pos - dig));
  boost::multiprecision::cpp_int den(1);
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t ddig = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == ddig)
      throw std::runtime_error("malformed rational literal: '" + s.substr(start) + "'");
    den = boost::multiprecision::cpp_int(s.substr(ddig, pos - ddig));
    if (den == 0) throw std::runtime_error("zero denominator in rational literal");
  }
  Rat r(num, den);
  return neg ? Rat(-r) : r;
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  std::string s = strip_spaces(text);
  size_t pos = 0;
  Rat r = read_rational(s, pos);
  if (pos != s.size())
    throw std::runtime_error("trailing characters in rational literal: '" + text + "'");
  return r;
}

CRat parse_crat(const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw std::runtime_error("empty scalar literal");
  CRat out;
  size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = (s[pos] == '-') ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw std::runtime_error("malformed scalar literal: '" + text + "'");
    }
    Rat mag(1);
    bool have_digits = pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    if (have_digits) {
      size_t p = pos;
      mag = read_rational(s, p);
      pos = p;
    }
    bool imag = false;
    if (pos < s.size() && (s[pos] == '*' || s[pos] == 'i')) {
      if (s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || s[pos] != 'i')
          throw std::runtime_error("malformed scalar literal: '" + text + "'");
      }
      ++pos;  // consume 'i'
      imag = true;
    }
    if (!have_digits && !imag)
      throw std::runtime_error("malformed scalar literal: '" + text + "'");
    if (sign < 0) mag = -mag;
    if (imag)
      out.im += mag;
    else
      out.re += mag;
    first = false;
  }
  return out;
}

std::string to_string(const Rat& r) { return r.str(); }

std::string to_string(const CRat& z) {
  if (is_zero(z)) return "0";
  std::string out;
  if (!z.re.is_zero()) out = z.re.str();
  if (!z.im.is_zero()) {
    std::string im;
    if (z.im == 1)
      im = "i";
    else if (z.im == -1)
      im = "-i";
    else
      im = z.im.str() + "*i";
    if (!out.empty() && im[0] != '-') out += "+";
    out += im;
  }
  return out;
}

}  // namespace liemirror
