#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thetamatch {

using BigInt = mpz_class;
/// Canonical reduced fraction with positive denominator.
using Rational = mpq_class;

/// Dense polynomial with arbitrary-precision integer coefficients, constant
/// term first. The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t power);
  static IntPolynomial x() { return monomial(1, 1); }
  /// q*x - p.
  static IntPolynomial linear_root(const Rational& r);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^k, zero beyond the degree.
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  const BigInt& leading() const { return coeffs_.back(); }
  std::span<const BigInt> coeffs() const { return coeffs_; }

  /// gcd of the coefficients, sign of the leading coefficient; 0 for zero.
  BigInt content() const;
  /// Divided by its content, so the leading coefficient is positive.
  IntPolynomial primitive_part() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Multiply by x^k.
  IntPolynomial shifted(std::size_t k) const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial poly_scale(const IntPolynomial& f, const BigInt& c);
IntPolynomial poly_derivative(const IntPolynomial& f);
IntPolynomial poly_pow(const IntPolynomial& f, unsigned k);

/// lc(g)^scale * f = quotient * g + remainder, deg remainder < deg g.
struct PseudoDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
  unsigned scale = 0;
};
PseudoDivision poly_divmod(const IntPolynomial& f, const IntPolynomial& g);

/// True iff g divides f in Q[x].
bool divides_exactly(const IntPolynomial& f, const IntPolynomial& g);

/// f / g when the quotient exists in Z[x]; nullopt otherwise.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& f, const IntPolynomial& g);

/// Primitive gcd with positive leading coefficient (primitive PRS).
IntPolynomial poly_gcd(const IntPolynomial& f, const IntPolynomial& g);

/// f / gcd(f, f'), primitive: same roots as f, each simple.
IntPolynomial squarefree_part(const IntPolynomial& f);

Rational evaluate(const IntPolynomial& f, const Rational& r);

/// Canonical text, descending powers: "x^3 - 2x", "-x^2 + 1", "0".
std::string to_string(const IntPolynomial& f);
/// Accepts integer-coefficient polynomials in x, e.g. "x^2 - 2", "3*x^3-x+1".
IntPolynomial parse_polynomial(std::string_view text);

/// A real algebraic number given by a primitive square-free integer
/// polynomial m whose roots are treated together. A rational p/q is stored as
/// q*x - p.
///
/// Multiplicities are m-adic exponents. When m is irreducible this is the root
/// multiplicity of every root of m; irreducibility is the caller's contract
/// and is not checked. For a reducible m the exponent can understate the
/// multiplicity of individual roots.
class Theta {
 public:
  static Theta rational(const Rational& r);
  static Theta rational(const BigInt& p, const BigInt& q);
  /// Throws ThetaError unless deg m >= 1 and m is square-free.
  static Theta algebraic(const IntPolynomial& m);

  /// "1", "-2/3".
  static Theta parse_rational(std::string_view text);
  static Theta parse_polynomial(std::string_view text);

  const IntPolynomial& polynomial() const { return poly_; }
  bool is_rational() const { return poly_.degree() == 1; }
  std::optional<Rational> rational_value() const;
  /// The single root is 0 (m = x).
  bool is_zero() const;
  /// 0 is not among the roots (nonzero constant term).
  bool excludes_zero() const { return poly_.coeff(0) != 0; }

  std::string to_string() const;

  friend bool operator==(const Theta&, const Theta&) = default;

 private:
  explicit Theta(IntPolynomial m) : poly_(std::move(m)) {}
  IntPolynomial poly_;
};

/// Largest k with m^k | f, m the polynomial of t. Throws InputError on f = 0.
int root_multiplicity(const IntPolynomial& f, const Theta& t);

}  // namespace thetamatch
