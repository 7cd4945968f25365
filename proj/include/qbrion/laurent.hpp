#pragma once

// Sparse multivariate Laurent polynomials over arbitrary-precision
// integers, with the exact binomial division (x_a - x_b) that the
// elimination recursion is built on.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qbrion/errors.hpp"

namespace qbrion {

// Exponent vector of fixed length = ambient ground-set size.
// Entries may be negative.
using ExponentVector = std::vector<int>;

// Descending lexicographic order on exponent vectors; this is the
// canonical term order used for iteration, text output and division.
struct LexDescending {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

// Exact rational evaluation point; coordinates must be nonzero
// whenever negative exponents may occur.
using RationalPoint = std::vector<mpq_class>;

class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVector, mpz_class, LexDescending>;

  LaurentPoly() : n_(0) {}
  explicit LaurentPoly(int ambient) : n_(ambient) {}

  static LaurentPoly zero(int ambient) { return LaurentPoly(ambient); }

  static LaurentPoly constant(int ambient, mpz_class c) {
    LaurentPoly p(ambient);
    if (c != 0) p.terms_.emplace(ExponentVector(ambient, 0), std::move(c));
    return p;
  }

  static LaurentPoly monomial(ExponentVector e, mpz_class c = 1) {
    LaurentPoly p(static_cast<int>(e.size()));
    if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
    return p;
  }

  // x_i as a polynomial, 1-indexed.
  static LaurentPoly variable(int ambient, int i, int power = 1) {
    ExponentVector e(ambient, 0);
    e[i - 1] = power;
    return monomial(std::move(e));
  }

  int ambient() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  bool operator==(const LaurentPoly& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // True when the polynomial is a single term with coefficient one,
  // i.e. a unit of the form x^m.
  bool is_unit_monomial() const {
    return terms_.size() == 1 && terms_.begin()->second == 1;
  }

  const ExponentVector& sole_exponent() const {
    if (terms_.size() != 1)
      throw InternalError("sole_exponent: polynomial is not a monomial");
    return terms_.begin()->first;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check_same_ambient(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    check_same_ambient(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  LaurentPoly operator-() const {
    LaurentPoly r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_ambient(b);
    LaurentPoly r(a.n_);
    ExponentVector e(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator*(const LaurentPoly& a, const mpz_class& s) {
    LaurentPoly r(a.n_);
    if (s != 0)
      for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * s);
    return r;
  }

  // Multiply by the monomial x^shift in place; cheaper than a general
  // product and used heavily by the elimination step.
  void shift_exponents(const ExponentVector& shift) {
    TermMap moved;
    ExponentVector e(n_);
    for (const auto& [m, c] : terms_) {
      for (int i = 0; i < n_; ++i) e[i] = m[i] + shift[i];
      moved.emplace(e, c);
    }
    terms_ = std::move(moved);
  }

  LaurentPoly times_ratio(int num_var, int den_var) const {
    LaurentPoly r = *this;
    ExponentVector shift(n_, 0);
    shift[num_var - 1] += 1;
    shift[den_var - 1] -= 1;
    r.shift_exponents(shift);
    return r;
  }

  LaurentPoly times_var(int var, int power = 1) const {
    LaurentPoly r = *this;
    ExponentVector shift(n_, 0);
    shift[var - 1] = power;
    r.shift_exponents(shift);
    return r;
  }

  // Inverts every variable: x^m -> x^{-m}.  An involution.
  LaurentPoly dual() const {
    LaurentPoly r(n_);
    ExponentVector e(n_);
    for (const auto& [m, c] : terms_) {
      for (int i = 0; i < n_; ++i) e[i] = -m[i];
      r.terms_.emplace(e, c);
    }
    return r;
  }

  // Substitutes x_a := x_b (1-indexed).  The result is zero exactly
  // when the polynomial is divisible by x_a - x_b.
  LaurentPoly substituted(int a, int b) const {
    LaurentPoly r(n_);
    ExponentVector e(n_);
    for (const auto& [m, c] : terms_) {
      e = m;
      e[b - 1] += e[a - 1];
      e[a - 1] = 0;
      r.add_term(e, c);
    }
    return r;
  }

  bool divisible_by_binomial(int a, int b) const {
    return substituted(a, b).is_zero();
  }

  // Exact division by (x_a - x_b).  Checks divisibility by the
  // substitution x_a := x_b first, then peels leading terms in the
  // canonical order; the quotient is verified by back-multiplication.
  LaurentPoly divide_binomial(int a, int b) const {
    if (a == b) throw InternalError("divide_binomial: a == b");
    if (!divisible_by_binomial(a, b)) {
      std::ostringstream os;
      os << "not divisible by (x" << a << " - x" << b << "): substitution leaves "
         << substituted(a, b).to_text();
      throw NotDivisible(os.str(), a, b);
    }
    if (a > b) return -(divide_binomial_ordered(b, a));
    return divide_binomial_ordered(a, b);
  }

  // Exact rational value at a point with nonzero coordinates.
  mpq_class eval(const RationalPoint& pt) const {
    if (static_cast<int>(pt.size()) != n_)
      throw InternalError("eval: point size mismatch");
    mpq_class total = 0;
    for (const auto& [m, c] : terms_) {
      mpq_class t(c);
      for (int i = 0; i < n_; ++i) {
        if (m[i] == 0) continue;
        if (pt[i] == 0) throw PoleHit("eval: zero coordinate with nonzero exponent");
        t *= pow_int(pt[i], m[i]);
      }
      total += t;
    }
    return total;
  }

  // Sum of coefficients, i.e. the value at x_1 = ... = x_n = 1.
  mpz_class specialize_ones() const {
    mpz_class s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  // Substitute x_i := 1 for every i in `mask` (1-indexed bitmask).
  LaurentPoly set_ones(unsigned mask) const {
    LaurentPoly r(n_);
    ExponentVector e(n_);
    for (const auto& [m, c] : terms_) {
      e = m;
      for (int i = 0; i < n_; ++i)
        if (mask & (1u << i)) e[i] = 0;
      r.add_term(e, c);
    }
    return r;
  }

  // Re-express over a smaller ambient: variable j of the result is
  // labels[j-1] of this polynomial.  Exponents of unmapped variables
  // must be zero.
  LaurentPoly project(const std::vector<int>& labels) const {
    const int k = static_cast<int>(labels.size());
    std::vector<int> pos(n_, -1);
    for (int j = 0; j < k; ++j) pos[labels[j] - 1] = j;
    LaurentPoly r(k);
    for (const auto& [m, c] : terms_) {
      ExponentVector e(k, 0);
      for (int i = 0; i < n_; ++i) {
        if (m[i] == 0) continue;
        if (pos[i] < 0)
          throw InternalError("project: nonzero exponent on dropped variable");
        e[pos[i]] = m[i];
      }
      r.add_term(e, c);
    }
    return r;
  }

  // Inverse of project: variable j becomes labels[j-1] inside an
  // ambient of size `ambient`.
  LaurentPoly embed(const std::vector<int>& labels, int ambient) const {
    LaurentPoly r(ambient);
    for (const auto& [m, c] : terms_) {
      ExponentVector e(ambient, 0);
      for (int j = 0; j < n_; ++j) e[labels[j] - 1] = m[j];
      r.add_term(e, c);
    }
    return r;
  }

  std::string to_text() const { return to_text(default_names(n_)); }

  std::string to_text(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != n_)
      throw InternalError("to_text: name list length mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      mpz_class mag = c < 0 ? mpz_class(-c) : c;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      std::vector<std::string> factors;
      for (int i = 0; i < n_; ++i) {
        if (e[i] == 0) continue;
        if (e[i] == 1)
          factors.push_back(names[i]);
        else
          factors.push_back(names[i] + "^" + std::to_string(e[i]));
      }
      if (factors.empty()) {
        os << mag.get_str();
      } else {
        if (mag != 1) os << mag.get_str() << "*";
        for (std::size_t j = 0; j < factors.size(); ++j) {
          if (j) os << "*";
          os << factors[j];
        }
      }
    }
    return os.str();
  }

  // Parses the canonical grammar: term ((+|-) term)*, where a term is
  // [coef *] var^exp (* var^exp)*.  Accepts an optional leading sign.
  static LaurentPoly parse(const std::string& text, int ambient) {
    return parse(text, ambient, default_names(ambient));
  }

  static LaurentPoly parse(const std::string& text, int ambient,
                           const std::vector<std::string>& names) {
    LaurentPoly result(ambient);
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw ParseError("empty polynomial text");
    bool expect_term = true;
    int sign = 1;
    if (text[pos] == '-') {
      sign = -1;
      ++pos;
    } else if (text[pos] == '+') {
      ++pos;
    }
    while (true) {
      skip_ws();
      if (!expect_term) {
        if (pos == text.size()) break;
        if (text[pos] == '+') sign = 1;
        else if (text[pos] == '-') sign = -1;
        else throw ParseError("expected '+' or '-' at offset " + std::to_string(pos));
        ++pos;
        expect_term = true;
        continue;
      }
      skip_ws();
      if (pos == text.size()) throw ParseError("dangling sign at end of input");
      mpz_class coef = 1;
      ExponentVector e(ambient, 0);
      bool saw_factor = false;
      bool want_factor = true;
      while (want_factor) {
        skip_ws();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          std::size_t start = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          coef *= mpz_class(text.substr(start, pos - start));
          saw_factor = true;
        } else {
          int var = match_name(text, pos, names);
          if (var < 0) {
            if (!saw_factor) throw ParseError("expected term at offset " + std::to_string(pos));
            break;
          }
          int exp = 1;
          skip_ws();
          if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            int esign = 1;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
              if (text[pos] == '-') esign = -1;
              ++pos;
            }
            if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
              throw ParseError("expected exponent at offset " + std::to_string(pos));
            long v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
              v = v * 10 + (text[pos] - '0');
              if (v > 1000000) throw ParseError("exponent out of range");
              ++pos;
            }
            exp = static_cast<int>(esign * v);
          }
          e[var] += exp;
          saw_factor = true;
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          want_factor = true;
        } else {
          want_factor = false;
        }
      }
      result.add_term(e, sign * coef);
      expect_term = false;
    }
    return result;
  }

  static std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
  }

  void add_term(const ExponentVector& e, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

 private:
  void check_same_ambient(const LaurentPoly& o) const {
    if (n_ != o.n_) throw InternalError("ambient size mismatch in polynomial arithmetic");
  }

  // Division by (x_a - x_b) with a < b, so the leading term of the
  // divisor in descending-lex order is x_a.  Divisibility has been
  // established; each pass removes the current leading quotient term.
  LaurentPoly divide_binomial_ordered(int a, int b) const {
    LaurentPoly quotient(n_);
    LaurentPoly rem = *this;
    while (!rem.is_zero()) {
      const ExponentVector lead = rem.terms_.begin()->first;
      const mpz_class coef = rem.terms_.begin()->second;
      ExponentVector qe = lead;
      qe[a - 1] -= 1;
      quotient.add_term(qe, coef);
      // rem -= coef * x^qe * (x_a - x_b)
      rem.add_term(lead, -coef);
      ExponentVector other = qe;
      other[b - 1] += 1;
      rem.add_term(other, coef);
    }
#ifndef NDEBUG
    LaurentPoly check = quotient * (variable(n_, a) - variable(n_, b));
    if (check != *this) throw InternalError("divide_binomial: back-multiplication mismatch");
#endif
    return quotient;
  }

  static mpq_class pow_int(const mpq_class& base, int e) {
    mpq_class b = base;
    int k = e;
    if (k < 0) {
      b = 1 / b;
      k = -k;
    }
    mpq_class r = 1;
    while (k) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }

  static int match_name(const std::string& text, std::size_t& pos,
                        const std::vector<std::string>& names) {
    // Longest match wins so that x12 is not read as x1 * garbage.
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
      const std::string& nm = names[i];
      if (nm.size() > best_len && text.compare(pos, nm.size(), nm) == 0) {
        best = static_cast<int>(i);
        best_len = nm.size();
      }
    }
    if (best >= 0) pos += best_len;
    return best;
  }

  int n_;
  TermMap terms_;
};

// True if substituting x_a := x_b kills p; the cheap side of the
// dual-route divisibility check.
inline bool is_divisible(const LaurentPoly& p, int a, int b) {
  return p.divisible_by_binomial(a, b);
}

}  // namespace qbrion
