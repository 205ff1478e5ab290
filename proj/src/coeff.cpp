#include "qheis/coeff.hpp"

#include <sstream>

namespace qheis {

// ---- Poly ----

Poly::Poly(const Rational &c) {
  if (c != 0)
    coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto &c : coeffs_)
    c.canonicalize();
  trim();
}

Poly Poly::q_power(unsigned k) {
  std::vector<Rational> c(k + 1);
  c[k] = 1;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

std::size_t Poly::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      return i;
  return 0;
}

Rational Poly::eval(const Rational &x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero())
    return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

Poly &Poly::operator+=(const Poly &o) {
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly &Poly::operator-=(const Poly &o) {
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly &Poly::operator*=(const Rational &c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto &x : coeffs_)
    x *= c;
  return *this;
}

Poly operator*(const Poly &a, const Poly &b) {
  if (a.is_zero() || b.is_zero())
    return Poly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  Poly r;
  r.coeffs_ = std::move(out);
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly &a, const Poly &b) {
  if (b.is_zero())
    throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree())
    return {Poly(), a};
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quo(a.coeffs_.size() - b.coeffs_.size() + 1);
  const Rational inv_lead = 1 / b.leading();
  const std::size_t db = b.coeffs_.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rational c = rem[k + db] * inv_lead;
    quo[k] = c;
    if (c == 0)
      continue;
    for (std::size_t j = 0; j <= db; ++j)
      rem[k + j] -= c * b.coeffs_[j];
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
  if (a.is_zero())
    return b.monic();
  if (b.is_zero())
    return a.monic();
  if (a.is_constant() || b.is_constant())
    return Poly(1);
  // Monomial fast path: gcd(f, q^k) = q^min(k, ord f).
  if (a.order() == static_cast<std::size_t>(a.degree()) || b.order() == static_cast<std::size_t>(b.degree()))
    return q_power(static_cast<unsigned>(std::min(a.order(), b.order())));
  if (a.degree() < b.degree())
    std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
    if (b.is_constant() && !b.is_zero())
      return Poly(1);
  }
  return a.monic();
}

Integer Poly::coeff_denominator() const {
  Integer l = 1;
  for (const auto &c : coeffs_)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

std::string Poly::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational &c = coeffs_[i];
    if (c == 0)
      continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0)
        os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1)
      os << mag.get_str() << "*";
    os << "q";
    if (i > 1)
      os << "^" << i;
  }
  return os.str();
}

// ---- RationalFunction ----

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero())
    throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = Poly::divmod(num_, g).first;
      den_ = Poly::divmod(den_, g).first;
    }
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::constant_value() const {
  if (!is_constant())
    throw std::logic_error("rational function depends on q: " + to_string());
  return num_.coeff(0) / den_.coeff(0);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction &RationalFunction::operator+=(const RationalFunction &o) {
  if (o.is_zero())
    return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one())
      normalize();
    else if (num_.is_zero())
      den_ = Poly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction &RationalFunction::operator-=(const RationalFunction &o) { return *this += -o; }

RationalFunction &RationalFunction::operator*=(const RationalFunction &o) {
  if (is_zero())
    return *this;
  if (o.is_zero()) {
    *this = RationalFunction();
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  // Cross-cancel so the product stays reduced; dens are monic so their
  // product is monic as well.
  Poly a = num_, b = o.num_, da = den_, db = o.den_;
  if (!db.is_one()) {
    Poly g = Poly::gcd(a, db);
    if (!g.is_constant()) {
      a = Poly::divmod(a, g).first;
      db = Poly::divmod(db, g).first;
    }
  }
  if (!da.is_one()) {
    Poly g = Poly::gcd(b, da);
    if (!g.is_constant()) {
      b = Poly::divmod(b, g).first;
      da = Poly::divmod(da, g).first;
    }
  }
  num_ = a * b;
  den_ = da * db;
  return *this;
}

RationalFunction &RationalFunction::operator/=(const RationalFunction &o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero())
    throw DomainError("division by zero in Q(q)");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0)
    return inverse().pow(-e);
  RationalFunction result(1), base = *this;
  while (e > 0) {
    if (e & 1)
      result *= base;
    e >>= 1;
    if (e)
      base *= base;
  }
  return result;
}

std::string RationalFunction::to_string() const {
  Integer l = num_.coeff_denominator();
  Integer ld = den_.coeff_denominator();
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ld.get_mpz_t());
  Poly n = num_ * Rational(l), d = den_ * Rational(l);
  if (d.is_one())
    return n.to_string();
  // A product in the denominator needs parentheses too: a/2*q reads as (a/2)*q.
  auto wrap = [](const Poly &p, const char *breaks) {
    std::string s = p.to_string();
    bool atomic = p.coeffs().size() <= 1 || s.find_first_of(breaks) == std::string::npos;
    return atomic ? s : "(" + s + ")";
  };
  return wrap(n, " ") + "/" + wrap(d, " *");
}

// ---- QValue ----

QValue QValue::parse(const std::string &text) {
  if (text == "symbolic" || text == "q")
    return symbolic();
  Rational r;
  try {
    if (text.empty() || text.find_first_not_of("+-0123456789/") != std::string::npos)
      throw std::invalid_argument("");
    r = Rational(text);
    if (r.get_den() == 0)
      throw std::invalid_argument("");
  } catch (const std::invalid_argument &) {
    throw std::invalid_argument("invalid q value '" + text + "' (expected symbolic or p/r)");
  }
  return rational(r);
}

RationalFunction QValue::as_rf() const {
  return value_ ? RationalFunction(*value_) : RationalFunction::q();
}

std::string QValue::to_string() const { return value_ ? value_->get_str() : "symbolic"; }

// ---- q-special combinatorics ----

RationalFunction q_int(long n, const RationalFunction &z) {
  RationalFunction sum, term(1);
  for (long l = 0; l < n; ++l) {
    sum += term;
    term *= z;
  }
  return sum;
}

RationalFunction q_factorial(long n, const RationalFunction &z) {
  RationalFunction prod(1);
  for (long l = 1; l <= n; ++l)
    prod *= q_int(l, z);
  return prod;
}

RationalFunction q_binomial(long n, long i, const RationalFunction &z) {
  if (i < 0 || i > n)
    throw std::invalid_argument("q_binomial requires 0 <= i <= n (got n=" + std::to_string(n) +
                                ", i=" + std::to_string(i) + ")");
  return q_factorial(n, z) / (q_factorial(i, z) * q_factorial(n - i, z));
}

Rational binomial(long n, long i) {
  if (i < 0 || n < 0 || i > n)
    return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
  return Rational(r);
}

Rational specialize(const RationalFunction &f, const Rational &q0) {
  Rational d = f.den().eval(q0);
  if (d == 0) {
    Rational x = q0;
    std::string factor = x == 0 ? "q" : (x > 0 ? "q - " + x.get_str() : "q + " + Rational(-x).get_str());
    throw DomainError("cannot specialize " + f.to_string() + " at q = " + q0.get_str() +
                      ": denominator has the factor (" + factor + ")");
  }
  return f.num().eval(q0) / d;
}

} // namespace qheis
