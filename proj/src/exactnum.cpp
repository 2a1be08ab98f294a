#include "newbasis/exactnum.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include <mpfr.h>

namespace newbasis {

std::string to_string(const Rational& q)
{
  return q.get_str();
}

Rational ratio(long n, long d)
{
  if (d == 0) throw ArithmeticError("division by zero");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

namespace {

constexpr int N = Cyclo::conductor;
constexpr int DEG = Cyclo::degree;

// Phi_60(x) = x^16 + x^14 - x^10 - x^8 - x^6 + x^2 + 1
using Row = std::array<long, DEG>;

const std::array<Row, 2 * DEG>& power_table()
{
  static const std::array<Row, 2 * DEG> table = [] {
    std::array<Row, 2 * DEG> t{};
    Row top{}; // x^16 in the basis
    top[0] = -1; top[2] = -1; top[6] = 1; top[8] = 1; top[10] = 1; top[14] = -1;
    for (int k = 0; k < DEG; ++k) {
      t[k].fill(0);
      t[k][k] = 1;
    }
    t[DEG] = top;
    for (int k = DEG + 1; k < 2 * DEG; ++k) {
      Row r{};
      const Row& p = t[k - 1];
      for (int j = 0; j + 1 < DEG; ++j) r[j + 1] = p[j];
      long c = p[DEG - 1];
      for (int j = 0; j < DEG; ++j) r[j] += c * top[j];
      t[k] = r;
    }
    return t;
  }();
  return table;
}

// basis expansion of z^k, 0 <= k < 60
const std::array<Row, N>& zeta_table()
{
  static const std::array<Row, N> table = [] {
    std::array<Row, N> t{};
    const auto& p = power_table();
    t[0] = p[0];
    for (int k = 1; k < N; ++k) {
      Row r{};
      const Row& q = t[k - 1];
      for (int j = 0; j + 1 < DEG; ++j) r[j + 1] = q[j];
      long c = q[DEG - 1];
      for (int j = 0; j < DEG; ++j) r[j] += c * p[DEG][j];
      t[k] = r;
    }
    return t;
  }();
  return table;
}

long mod(long a, long m)
{
  long r = a % m;
  return r < 0 ? r + m : r;
}

} // namespace

Cyclo::Cyclo() : den_(1)
{
}

Cyclo::Cyclo(long v) : den_(1)
{
  num_[0] = v;
}

Cyclo::Cyclo(const Rational& q)
{
  num_[0] = q.get_num();
  den_ = q.get_den();
}

Cyclo Cyclo::zeta(long k)
{
  Cyclo c;
  const Row& r = zeta_table()[mod(k, N)];
  for (int j = 0; j < DEG; ++j) c.num_[j] = r[j];
  return c;
}

Cyclo Cyclo::root_of_unity(int n, long k)
{
  if (n <= 0 || N % n != 0)
    throw ArithmeticError("root_of_unity: order " + std::to_string(n) + " does not divide 60");
  return zeta(mod(k, n) * (N / n));
}

void Cyclo::normalize()
{
  if (den_ < 0) {
    den_ = -den_;
    for (auto& v : num_) v = -v;
  }
  mpz_class g = den_;
  for (const auto& v : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g != 1) {
    for (auto& v : num_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Cyclo Cyclo::operator-() const
{
  Cyclo c = *this;
  for (auto& v : c.num_) v = -v;
  return c;
}

Cyclo& Cyclo::operator+=(const Cyclo& o)
{
  if (den_ == o.den_) {
    for (int j = 0; j < DEG; ++j) num_[j] += o.num_[j];
  } else {
    for (int j = 0; j < DEG; ++j) num_[j] = num_[j] * o.den_ + o.num_[j] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o)
{
  return *this += -o;
}

Cyclo& Cyclo::operator*=(const Cyclo& o)
{
  std::array<mpz_class, 2 * DEG - 1> prod;
  for (int i = 0; i < DEG; ++i) {
    if (num_[i] == 0) continue;
    for (int j = 0; j < DEG; ++j) {
      if (o.num_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
    }
  }
  const auto& p = power_table();
  for (int j = 0; j < DEG; ++j) num_[j] = prod[j];
  for (int k = DEG; k < 2 * DEG - 1; ++k) {
    if (prod[k] == 0) continue;
    for (int j = 0; j < DEG; ++j)
      if (p[k][j] != 0) num_[j] += prod[k] * p[k][j];
  }
  den_ *= o.den_;
  normalize();
  return *this;
}

Cyclo& Cyclo::operator*=(const Rational& q)
{
  for (auto& v : num_) v *= q.get_num();
  den_ *= q.get_den();
  normalize();
  return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& o)
{
  return *this *= o.inverse();
}

bool operator==(const Cyclo& a, const Cyclo& b)
{
  return a.den_ == b.den_ && a.num_ == b.num_;
}

Cyclo Cyclo::galois(int a) const
{
  if (std::gcd(mod(a, N), static_cast<long>(N)) != 1)
    throw ArithmeticError("galois: exponent not coprime to 60");
  Cyclo c;
  c.num_.fill(0);
  const auto& z = zeta_table();
  for (int k = 0; k < DEG; ++k) {
    if (num_[k] == 0) continue;
    const Row& r = z[mod(static_cast<long>(a) * k, N)];
    for (int j = 0; j < DEG; ++j)
      if (r[j] != 0) c.num_[j] += num_[k] * r[j];
  }
  c.den_ = den_;
  c.normalize();
  return c;
}

Cyclo Cyclo::inverse() const
{
  if (is_zero()) throw ArithmeticError("division by zero");
  // product over the nontrivial Galois conjugates; x times it is the norm
  Cyclo rest(1);
  for (int a = 2; a < N; ++a)
    if (std::gcd(a, N) == 1) rest *= galois(a);
  Cyclo norm = *this * rest;
  if (!norm.is_rational()) throw ArithmeticError("inverse: norm is not rational");
  Rational q = norm.as_rational();
  rest *= Rational(1 / q);
  return rest;
}

bool Cyclo::is_zero() const
{
  for (const auto& v : num_)
    if (v != 0) return false;
  return true;
}

bool Cyclo::is_rational() const
{
  for (int j = 1; j < DEG; ++j)
    if (num_[j] != 0) return false;
  return true;
}

bool Cyclo::is_integral() const
{
  return den_ == 1;
}

Rational Cyclo::as_rational() const
{
  if (!is_rational()) throw ArithmeticError("as_rational: value is not rational: " + str());
  Rational q(num_[0], den_);
  q.canonicalize();
  return q;
}

Rational Cyclo::coeff(int k) const
{
  Rational q(num_.at(k), den_);
  q.canonicalize();
  return q;
}

std::array<Rational, Cyclo::degree> Cyclo::coefficients() const
{
  std::array<Rational, DEG> out;
  for (int j = 0; j < DEG; ++j) out[j] = coeff(j);
  return out;
}

std::string Cyclo::str() const
{
  if (is_rational()) return to_string(as_rational());
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < DEG; ++j) {
    if (num_[j] == 0) continue;
    Rational q = coeff(j);
    if (!first && q > 0) os << '+';
    os << to_string(q) << "*z^" << j;
    first = false;
  }
  return os.str();
}

namespace {

// value and error bound at the given precision
void evaluate(const Cyclo& x, mpfr_prec_t prec, mpfr_t val, mpfr_t err)
{
  mpfr_t pi, t, c, absum;
  mpfr_inits2(prec, pi, t, c, absum, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_set_zero(val, 1);
  mpfr_set_zero(absum, 1);
  auto coeffs = x.coefficients();
  for (int k = 0; k < DEG; ++k) {
    if (coeffs[k] == 0) continue;
    mpfr_mul_ui(t, pi, 2 * k, MPFR_RNDN);
    mpfr_div_ui(t, t, N, MPFR_RNDN);
    mpfr_cos(c, t, MPFR_RNDN);
    mpfr_mul_q(c, c, coeffs[k].get_mpq_t(), MPFR_RNDN);
    mpfr_add(val, val, c, MPFR_RNDN);
    mpfr_abs(c, c, MPFR_RNDN);
    mpfr_add(absum, absum, c, MPFR_RNDU);
  }
  // each term carries a few ulps, each addition one more
  mpfr_mul_2si(err, absum, -static_cast<long>(prec) + 7, MPFR_RNDU);
  mpfr_clears(pi, t, c, absum, static_cast<mpfr_ptr>(nullptr));
}

} // namespace

int sign(const Cyclo& x)
{
  if (!x.is_real()) throw ArithmeticError("sign: value is not real: " + x.str());
  if (x.is_zero()) return 0;
  if (x.is_rational()) return sgn(x.as_rational());
  for (mpfr_prec_t prec = 64; prec <= (1 << 16); prec *= 2) {
    mpfr_t val, err;
    mpfr_inits2(prec, val, err, static_cast<mpfr_ptr>(nullptr));
    evaluate(x, prec, val, err);
    mpfr_t a;
    mpfr_init2(a, prec);
    mpfr_abs(a, val, MPFR_RNDN);
    int decided = mpfr_cmp(a, err) > 0 ? mpfr_sgn(val) : 0;
    mpfr_clears(val, err, a, static_cast<mpfr_ptr>(nullptr));
    if (decided != 0) return decided;
  }
  throw ArithmeticError("sign: precision limit reached for " + x.str());
}

bool is_nonneg_real(const Cyclo& x)
{
  return sign(x) >= 0;
}

double approx_real(const Cyclo& x)
{
  double s = 0;
  for (int k = 0; k < DEG; ++k) s += x.coeff(k).get_d() * std::cos(2 * M_PI * k / N);
  return s;
}

double approx_imag(const Cyclo& x)
{
  double s = 0;
  for (int k = 0; k < DEG; ++k) s += x.coeff(k).get_d() * std::sin(2 * M_PI * k / N);
  return s;
}

} // namespace newbasis
