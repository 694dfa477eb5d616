#include "thetamatch/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "thetamatch/errors.hpp"

namespace thetamatch {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t power) {
  std::vector<BigInt> cs(power + 1, BigInt(0));
  cs[power] = c;
  return IntPolynomial(std::move(cs));
}

IntPolynomial IntPolynomial::linear_root(const Rational& r) {
  return IntPolynomial(std::vector<BigInt>{-r.get_num(), r.get_den()});
}

BigInt IntPolynomial::content() const {
  if (coeffs_.empty()) return 0;
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return sgn(leading()) < 0 ? BigInt(-g) : g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt c = content();
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> out(k, BigInt(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_scale(const IntPolynomial& f, const BigInt& c) {
  std::vector<BigInt> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& v : out) v *= c;
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_derivative(const IntPolynomial& f) {
  if (f.degree() < 1) return {};
  std::vector<BigInt> out(f.degree());
  for (int k = 1; k <= f.degree(); ++k) out[k - 1] = f.coeff(k) * k;
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_pow(const IntPolynomial& f, unsigned k) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = f;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

PseudoDivision poly_divmod(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw InputError("polynomial division by zero");
  PseudoDivision out;
  if (f.degree() < g.degree()) {
    out.remainder = f;
    return out;
  }
  const int dg = g.degree();
  const BigInt& lc = g.leading();
  std::vector<BigInt> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<BigInt> quot(f.degree() - dg + 1, BigInt(0));
  // Standard pseudo-division: each step scales by lc(g).
  for (int k = f.degree(); k >= dg; --k) {
    BigInt t = rem[k];
    for (auto& q : quot) q *= lc;
    for (int i = 0; i <= k; ++i) rem[i] *= lc;
    quot[k - dg] += t;
    for (int i = 0; i <= dg; ++i) rem[k - dg + i] -= t * g.coeff(i);
    ++out.scale;
  }
  out.quotient = IntPolynomial(std::move(quot));
  rem.resize(dg);
  out.remainder = IntPolynomial(std::move(rem));
  return out;
}

bool divides_exactly(const IntPolynomial& f, const IntPolynomial& g) {
  return poly_divmod(f, g).remainder.is_zero();
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw InputError("polynomial division by zero");
  if (f.is_zero()) return IntPolynomial{};
  if (f.degree() < g.degree()) return std::nullopt;
  const int dg = g.degree();
  const BigInt& lc = g.leading();
  std::vector<BigInt> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<BigInt> quot(f.degree() - dg + 1);
  BigInt t;
  for (int k = f.degree(); k >= dg; --k) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_divexact(t.get_mpz_t(), rem[k].get_mpz_t(), lc.get_mpz_t());
    quot[k - dg] = t;
    for (int i = 0; i <= dg; ++i) {
      mpz_submul(rem[k - dg + i].get_mpz_t(), t.get_mpz_t(), g.coeffs()[i].get_mpz_t());
    }
  }
  for (int i = 0; i < dg; ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial poly_gcd(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() && g.is_zero()) throw InputError("gcd of two zero polynomials");
  IntPolynomial a = f.primitive_part();
  IntPolynomial b = g.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = poly_divmod(a, b).remainder;
    a = std::move(b);
    b = r.primitive_part();
  }
  return a.primitive_part();
}

IntPolynomial squarefree_part(const IntPolynomial& f) {
  if (f.is_zero()) throw InputError("square-free part of the zero polynomial");
  IntPolynomial p = f.primitive_part();
  if (p.degree() < 1) return IntPolynomial::constant(1);
  IntPolynomial g = poly_gcd(p, poly_derivative(p));
  auto q = exact_quotient(p, g);
  if (!q) throw InvariantError("gcd(f, f') does not divide f");
  return q->primitive_part();
}

Rational evaluate(const IntPolynomial& f, const Rational& r) {
  Rational acc = 0;
  for (int k = f.degree(); k >= 0; --k) {
    acc *= r;
    acc += Rational(f.coeff(k));
  }
  acc.canonicalize();
  return acc;
}

std::string to_string(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = f.degree(); k >= 0; --k) {
    const BigInt& c = f.coeffs()[k];
    if (c == 0) continue;
    bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    BigInt mag = abs(c);
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  IntPolynomial parse() {
    std::map<std::size_t, BigInt> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [coef, power] = term();
      terms[power] += coef * sign;
      first = false;
      skip_ws();
    }
    std::size_t top = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<BigInt> cs(top + 1, BigInt(0));
    for (const auto& [p, c] : terms) cs[p] = c;
    return IntPolynomial(std::move(cs));
  }

 private:
  std::pair<BigInt, std::size_t> term() {
    BigInt coef = 1;
    bool have_coef = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = BigInt(digits());
      have_coef = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'x') fail("expected 'x' after '*'");
      }
    }
    if (at_end() || peek() != 'x') {
      if (!have_coef) fail("expected a coefficient or 'x'");
      return {coef, 0};
    }
    ++pos_;
    skip_ws();
    std::size_t power = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
      std::string e = digits();
      if (e.size() > 6) fail("exponent too large");
      power = std::stoul(e);
    }
    return {coef, power};
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " in polynomial '" + std::string(s_) + "'", 1, static_cast<int>(pos_) + 1);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

// -------------------------------------------------------------------- Theta

Theta Theta::rational(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return Theta(IntPolynomial::linear_root(c));
}

Theta Theta::rational(const BigInt& p, const BigInt& q) {
  if (q == 0) throw ThetaError("rational theta with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return rational(r);
}

Theta Theta::algebraic(const IntPolynomial& m) {
  if (m.degree() < 1) throw ThetaError("theta polynomial must have degree >= 1, got '" + thetamatch::to_string(m) + "'");
  IntPolynomial p = m.primitive_part();
  if (poly_gcd(p, poly_derivative(p)).degree() > 0) {
    throw ThetaError("theta polynomial '" + thetamatch::to_string(m) + "' is not square-free");
  }
  return Theta(std::move(p));
}

Theta Theta::parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    return i < t.size() && std::all_of(t.begin() + static_cast<long>(i), t.end(),
                                       [](unsigned char c) { return std::isdigit(c); });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw ThetaError("theta must be an integer or fraction like -2/3, got '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  BigInt q(den);
  if (q <= 0) throw ThetaError("theta denominator must be positive");
  return rational(BigInt(num), q);
}

Theta Theta::parse_polynomial(std::string_view text) {
  return algebraic(thetamatch::parse_polynomial(text));
}

std::optional<Rational> Theta::rational_value() const {
  if (!is_rational()) return std::nullopt;
  Rational r(-poly_.coeff(0), poly_.coeff(1));
  r.canonicalize();
  return r;
}

bool Theta::is_zero() const { return poly_ == IntPolynomial::x(); }

std::string Theta::to_string() const {
  if (auto r = rational_value()) return r->get_str();
  return "root of " + thetamatch::to_string(poly_);
}

int root_multiplicity(const IntPolynomial& f, const Theta& t) {
  if (f.is_zero()) throw InputError("root multiplicity is undefined for the zero polynomial");
  // m is primitive, so m | f over Q iff the quotient is integral (Gauss).
  int k = 0;
  IntPolynomial rest = f;
  while (rest.degree() >= t.polynomial().degree()) {
    auto q = exact_quotient(rest, t.polynomial());
    if (!q) break;
    rest = std::move(*q);
    ++k;
  }
  return k;
}

}  // namespace thetamatch
