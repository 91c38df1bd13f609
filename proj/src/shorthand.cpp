#include "liemirror/shorthand.hpp"

#include <cctype>
#include <sstream>

namespace liemirror {

namespace {

// Arithmetic over Q with named parameters; juxtaposition multiplies ("2b").
class CoeffParser {
 public:
  CoeffParser(const std::string& s, const std::map<std::string, Rat>& params)
      : s_(s), params_(params) {}

  Rat parse() {
    Rat v = expr();
    if (pos_ != s_.size()) throw ParseError("trailing characters in coefficient '" + s_ + "'");
    return v;
  }

 private:
  Rat expr() {
    Rat v = term();
    while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      char op = s_[pos_++];
      Rat w = term();
      if (op == '+')
        v += w;
      else
        v -= w;
    }
    return v;
  }

  Rat term() {
    Rat v = unary();
    for (;;) {
      if (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '/')) {
        char op = s_[pos_++];
        Rat w = unary();
        if (op == '/') {
          if (is_zero(w)) throw ParseError("division by zero in coefficient");
          v = v / w;
        } else {
          v = v * w;
        }
      } else if (pos_ < s_.size() &&
                 (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
        v = v * unary();  // juxtaposition
      } else {
        return v;
      }
    }
  }

  Rat unary() {
    if (pos_ < s_.size() && s_[pos_] == '-') {
      ++pos_;
      return -unary();
    }
    return primary();
  }

  Rat primary() {
    if (pos_ >= s_.size()) throw ParseError("unexpected end of coefficient '" + s_ + "'");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Rat v = expr();
      if (pos_ >= s_.size() || s_[pos_] != ')')
        throw ParseError("missing ')' in coefficient '" + s_ + "'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Rat(boost::multiprecision::cpp_int(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto it = params_.find(name);
      if (it == params_.end()) throw ParseError("unknown parameter '" + name + "'");
      return it->second;
    }
    throw ParseError(std::string("unexpected character '") + c + "' in coefficient");
  }

  const std::string& s_;
  const std::map<std::string, Rat>& params_;
  size_t pos_ = 0;
};

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

struct Term {
  Rat coeff;
  int i, j;  // 0-based
};

std::vector<Term> parse_entry(const std::string& entry,
                              const std::map<std::string, Rat>& params, int dim) {
  if (entry == "0") return {};
  if (entry.empty()) throw ParseError("empty shorthand entry");
  // Split into signed terms at depth-0 +/- (not at position 0).
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (size_t p = 0; p < entry.size(); ++p) {
    char c = entry[p];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == '+' || c == '-') && depth == 0 && p > 0) {
      parts.push_back(cur);
      cur.clear();
      if (c == '-') cur.push_back('-');
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);

  std::vector<Term> terms;
  for (auto part : parts) {
    if (part.size() < 2) throw ParseError("malformed shorthand term '" + part + "'");
    char cj = part.back();
    char ci = part[part.size() - 2];
    if (!std::isdigit(static_cast<unsigned char>(ci)) ||
        !std::isdigit(static_cast<unsigned char>(cj)))
      throw ParseError("shorthand term must end in two index digits: '" + part + "'");
    int i = ci - '0', j = cj - '0';
    if (i < 1 || j < 1 || i > dim || j > dim || i == j)
      throw ParseError("bad index pair in shorthand term '" + part + "'");
    std::string coeff_text = part.substr(0, part.size() - 2);
    Rat coeff(1);
    if (coeff_text == "-")
      coeff = -1;
    else if (!coeff_text.empty())
      coeff = CoeffParser(coeff_text, params).parse();
    terms.push_back({coeff, i - 1, j - 1});
  }
  return terms;
}

}  // namespace

LieQ parse_shorthand(const std::string& text, const std::map<std::string, Rat>& params) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError("shorthand must be a parenthesized tuple: '" + text + "'");
  auto entries = split_top_level(s.substr(1, s.size() - 2), ',');
  int dim = static_cast<int>(entries.size());
  if (dim < 1 || dim > 9) throw ParseError("shorthand arity out of range");
  BracketTable<Rat> b;
  for (int k = 0; k < dim; ++k)
    for (const auto& t : parse_entry(entries[k], params, dim)) {
      int i = t.i, j = t.j;
      Rat c = t.coeff;
      if (i > j) {
        std::swap(i, j);
        c = -c;
      }
      // de^k contains c e^i ^ e^j, so [e_i, e_j] contains -c e_k.
      b[{i, j}][k] += -c;
      if (is_zero(b[{i, j}][k])) b[{i, j}].erase(k);
    }
  return LieQ::create(dim, std::move(b));
}

std::string print_shorthand(const LieQ& l) {
  int n = l.dim();
  std::ostringstream os;
  os << "(";
  for (int k = 0; k < n; ++k) {
    if (k) os << ",";
    std::ostringstream entry;
    bool lead = true;
    for (const auto& [ij, comps] : l.brackets()) {
      auto it = comps.find(k);
      if (it == comps.end()) continue;
      Rat c = -it->second;  // de^k coefficient on e^i ^ e^j
      std::string prefix;
      if (c == 1)
        prefix = lead ? "" : "+";
      else if (c == -1)
        prefix = "-";
      else {
        prefix = to_string(c);
        if (!lead && prefix[0] != '-') prefix = "+" + prefix;
      }
      entry << prefix << (ij.first + 1) << (ij.second + 1);
      lead = false;
    }
    os << (lead ? "0" : entry.str());
  }
  os << ")";
  return os.str();
}

}  // namespace liemirror
