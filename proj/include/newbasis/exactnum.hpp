#ifndef NEWBASIS_EXACTNUM_HPP
#define NEWBASIS_EXACTNUM_HPP

#include <array>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace newbasis {

using Rational = mpq_class;

// n/d in lowest terms; throws ArithmeticError when d == 0
Rational ratio(long n, long d);

std::string to_string(const Rational& q);

class ArithmeticError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Element of Q(z) with z = exp(2 pi i / 60), stored in the power basis
// 1, z, ..., z^15 modulo the 60th cyclotomic polynomial. Numerators share one
// positive denominator; the pair is kept in lowest terms.
class Cyclo {
public:
  static constexpr int conductor = 60;
  static constexpr int degree = 16;

  Cyclo();
  Cyclo(long v);
  Cyclo(const Rational& q);

  // z_60^k for any integer k
  static Cyclo zeta(long k);
  // z_n^k embedded as z_60^(60k/n); n must divide 60
  static Cyclo root_of_unity(int n, long k);

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o);
  Cyclo& operator*=(const Rational& q);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
  friend bool operator==(const Cyclo& a, const Cyclo& b);

  // Galois automorphism z -> z^a, gcd(a,60) = 1
  Cyclo galois(int a) const;
  Cyclo conj() const { return galois(conductor - 1); }
  Cyclo inverse() const;

  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const; // coefficients in Z
  Rational as_rational() const;
  bool is_real() const { return *this == conj(); }

  Rational coeff(int k) const;
  std::array<Rational, degree> coefficients() const;

  // Rational: "p/q"; otherwise "c0*z^0+..." over z = z_60.
  std::string str() const;

private:
  void normalize();
  std::array<mpz_class, degree> num_;
  mpz_class den_;
};

// Exact sign decision for a real cyclotomic number, by interval evaluation
// at increasing precision. Throws ArithmeticError on non-real input.
int sign(const Cyclo& x);
bool is_nonneg_real(const Cyclo& x);

// Floating approximation, diagnostics only.
double approx_real(const Cyclo& x);
double approx_imag(const Cyclo& x);

} // namespace newbasis

#endif
