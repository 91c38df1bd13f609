#ifndef LIEMIRROR_SCALAR_HPP
#define LIEMIRROR_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <string>

namespace liemirror {

/// Exact rational scalar. Always stored in canonical form (reduced,
/// positive denominator); all arithmetic is exact.
using Rat = boost::multiprecision::cpp_rational;

/// Gaussian rational re + im*i, the field Q(i).
struct CRat {
  Rat re;
  Rat im;

  CRat() = default;
  CRat(int v) : re(v) {}
  CRat(const Rat& r) : re(r) {}
  CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static CRat i() { return CRat(Rat(0), Rat(1)); }

  CRat operator-() const { return CRat(-re, -im); }
  CRat& operator+=(const CRat& o) { re += o.re; im += o.im; return *this; }
  CRat& operator-=(const CRat& o) { re -= o.re; im -= o.im; return *this; }
  CRat& operator*=(const CRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  CRat& operator/=(const CRat& o);

  friend CRat operator+(CRat a, const CRat& b) { return a += b; }
  friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
  friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
  friend CRat operator/(CRat a, const CRat& b) { return a /= b; }
  friend bool operator==(const CRat& a, const CRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }
  friend bool operator<(const CRat& a, const CRat& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

inline CRat conj(const CRat& z) { return CRat(z.re, -z.im); }
inline Rat conj(const Rat& r) { return r; }

inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline bool is_zero(const CRat& z) { return z.re.is_zero() && z.im.is_zero(); }

inline CRat& CRat::operator/=(const CRat& o) {
  Rat n = o.re * o.re + o.im * o.im;
  if (n.is_zero()) throw std::domain_error("CRat: division by zero");
  Rat r = (re * o.re + im * o.im) / n;
  Rat i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

/// Parses "p", "-p/q" etc. Throws std::runtime_error on malformed input.
Rat parse_rat(const std::string& text);

/// Parses Gaussian rationals: "p/q", "r/s*i", "p/q+r/s*i", "p/q-r/s*i",
/// with "i" and "-i" accepted for the units.
CRat parse_crat(const std::string& text);

std::string to_string(const Rat& r);
std::string to_string(const CRat& z);

inline std::ostream& operator<<(std::ostream& os, const CRat& z) {
  return os << to_string(z);
}

template <typename K> struct field {};
template <> struct field<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
};
template <> struct field<CRat> {
  static CRat zero() { return CRat(0); }
  static CRat one() { return CRat(1); }
};

}  // namespace liemirror

#endif
