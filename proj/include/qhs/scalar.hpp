#pragma once

#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "poly.hpp"

namespace qhs {

// Where q lives for a computation: a formal variable (exact rational
// functions) or a numeric value in (0,1).
struct QCtx {
  bool numeric = false;
  long double qval = 0.0L;

  static QCtx symbolic() { return QCtx{}; }
  static QCtx at(long double q) {
    if (!(q > 0.0L && q < 1.0L)) throw std::domain_error("q must lie in (0,1)");
    return QCtx{true, q};
  }
};

// Element of Q(q^{1/root}) in reduced canonical form, or a numeric value.
// Symbolic equality is syntactic after reduction.
class Scalar {
 public:
  Scalar() : numeric_(false), root_(2), num_(QPoly::zero()), den_(QPoly::one()) {}

  static Scalar integer(long v) { return rational(mpq_class(v)); }

  static Scalar rational(const mpq_class& v) {
    Scalar s;
    s.num_ = QPoly::monomial(0, v);
    return s;
  }

  static Scalar number(long double v) {
    Scalar s;
    s.numeric_ = true;
    s.val_ = v;
    return s;
  }

  // q^{p/r}
  static Scalar q_pow(const QCtx& ctx, long p, long r = 1) {
    if (r < 0) { p = -p; r = -r; }
    if (r == 0) throw std::domain_error("q_pow: zero denominator");
    if (ctx.numeric) return number(powl(ctx.qval, (long double)p / (long double)r));
    Scalar s;
    long root = std::lcm<long>(2, r);
    long e = p * (root / r);
    s.root_ = (int)root;
    if (e >= 0) {
      s.num_ = QPoly::monomial(e, 1);
    } else {
      s.num_ = QPoly::one();
      s.den_ = QPoly::monomial(-e, 1);
    }
    s.canonicalize();
    return s;
  }

  // q^{k/2}; the natural step of the K-eigenvalues
  static Scalar q_half(const QCtx& ctx, long k) { return q_pow(ctx, k, 2); }

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return integer(1); }

  bool numeric() const { return numeric_; }
  long double value() const { return val_; }

  bool is_zero() const { return numeric_ ? val_ == 0.0L : num_.is_zero(); }
  bool is_one() const {
    return numeric_ ? val_ == 1.0L : (num_.is_one() && den_.is_one());
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.numeric_ != b.numeric_) return false;
    if (a.numeric_) return a.val_ == b.val_;
    if (a.root_ == b.root_) return a.num_ == b.num_ && a.den_ == b.den_;
    long root = std::lcm<long>(a.root_, b.root_);
    return a.num_.stretched(root / a.root_) == b.num_.stretched(root / b.root_) &&
           a.den_.stretched(root / a.root_) == b.den_.stretched(root / b.root_);
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.numeric_ || b.numeric_) return number(a.as_number() + b.as_number());
    auto [x, y, root] = aligned(a, b);
    Scalar r;
    r.root_ = root;
    r.num_ = x.num_ * y.den_ + y.num_ * x.den_;
    r.den_ = x.den_ * y.den_;
    r.canonicalize();
    return r;
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  Scalar operator-() const {
    Scalar r(*this);
    if (numeric_) { r.val_ = -r.val_; return r; }
    r.num_ = -r.num_;
    return r;
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.numeric_ || b.numeric_) return number(a.as_number() * b.as_number());
    if (a.is_zero() || b.is_zero()) return zero();
    auto [x, y, root] = aligned(a, b);
    Scalar r;
    r.root_ = root;
    r.num_ = x.num_ * y.num_;
    r.den_ = x.den_ * y.den_;
    r.canonicalize();
    return r;
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
  Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

  Scalar inverse() const {
    if (numeric_) {
      if (val_ == 0.0L) throw std::domain_error("division by zero");
      return number(1.0L / val_);
    }
    if (num_.is_zero()) throw std::domain_error("division by zero");
    Scalar r;
    r.root_ = root_;
    r.num_ = den_;
    r.den_ = num_;
    r.canonicalize();
    return r;
  }

  Scalar pow(long k) const {
    if (k == 0) return one();
    Scalar base = k > 0 ? *this : inverse();
    long e = k > 0 ? k : -k;
    Scalar r = one();
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  // exact evaluation at q = rational point (symbolic values whose exponents
  // are integral in q; root must divide every exponent scaled value)
  mpq_class eval_exact(const mpq_class& q) const {
    if (numeric_) throw std::logic_error("eval_exact on numeric scalar");
    // require all exponents divisible by root so sigma powers stay rational
    auto evalp = [&](const QPoly& p) {
      mpq_class r = 0;
      for (const auto& [e, c] : p.terms()) {
        if (e % root_ != 0) throw std::domain_error("eval_exact: fractional q power");
        long k = e / root_;
        mpq_class t = 1;
        for (long i = 0; i < k; ++i) t *= q;
        r += c * t;
      }
      return r;
    };
    mpq_class dn = evalp(den_);
    if (dn == 0) throw std::domain_error("eval_exact: pole");
    return evalp(num_) / dn;
  }

  long double eval(long double q) const {
    if (numeric_) return val_;
    long double sigma = powl(q, 1.0L / (long double)root_);
    long double d = den_.eval(sigma);
    return num_.eval(sigma) / d;
  }

  long double as_number() const {
    if (numeric_) return val_;
    // rational constants participate in numeric arithmetic
    if (num_.degree() <= 0 && den_.degree() <= 0) {
      long double n = num_.is_zero() ? 0.0L : (long double)num_.terms()[0].second.get_d();
      long double d = (long double)den_.terms()[0].second.get_d();
      return n / d;
    }
    throw std::logic_error("symbolic scalar used as a number");
  }

  int root() const { return root_; }
  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  // printable as a rational function of q; fractional powers appear as q^(a/b)
  std::string str() const {
    if (numeric_) {
      std::ostringstream os;
      os.precision(17);
      os << (double)val_;
      return os.str();
    }
    std::string v = sigma_name();
    if (den_.is_one()) return num_.str(v);
    std::string n = num_.str(v);
    std::string d = den_.str(v);
    bool npar = num_.terms().size() > 1;
    bool dpar = den_.terms().size() > 1 || !den_.is_monomial() || den_.terms()[0].second != 1;
    std::string s = npar ? "(" + n + ")" : n;
    s += " / ";
    s += dpar ? "(" + d + ")" : d;
    return s;
  }

 private:
  std::string sigma_name() const {
    if (root_ == 1) return "q";
    return "q^(1/" + std::to_string(root_) + ")";
  }

  static std::tuple<Scalar, Scalar, int> aligned(const Scalar& a, const Scalar& b) {
    if (a.root_ == b.root_) return {a, b, a.root_};
    long root = std::lcm<long>(a.root_, b.root_);
    Scalar x = a, y = b;
    x.num_ = a.num_.stretched(root / a.root_);
    x.den_ = a.den_.stretched(root / a.root_);
    y.num_ = b.num_.stretched(root / b.root_);
    y.den_ = b.den_.stretched(root / b.root_);
    x.root_ = y.root_ = (int)root;
    return {x, y, (int)root};
  }

  void canonicalize() {
    if (numeric_) return;
    if (num_.is_zero()) {
      den_ = QPoly::one();
      root_ = 2;
      return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
    mpq_class ct = den_.content();
    if (ct != 1) {
      mpq_class inv = 1 / ct;
      num_ = num_ * QPoly::monomial(0, inv);
      den_ = den_ * QPoly::monomial(0, inv);
    }
    // shrink the root by the common exponent gcd
    long g2 = root_;
    for (const auto& [e, c] : num_.terms()) g2 = std::gcd(g2, e);
    for (const auto& [e, c] : den_.terms()) g2 = std::gcd(g2, e);
    if (g2 > 1) {
      QPoly nn, dd;
      for (const auto& [e, c] : num_.terms()) nn = nn + QPoly::monomial(e / g2, c);
      for (const auto& [e, c] : den_.terms()) dd = dd + QPoly::monomial(e / g2, c);
      num_ = nn;
      den_ = dd;
      root_ = (int)(root_ / g2);
    }
  }

  bool numeric_;
  long double val_ = 0.0L;
  int root_;
  QPoly num_, den_;
};

struct QPochResult {
  Scalar value;
  int order = 0;  // number of factors actually multiplied
};

// (a; t)_k = (1-a)(1-at)...(1-a t^{k-1}); k < 0 means the infinite product,
// numeric only, truncated once |a t^j| < tol.
inline QPochResult qpoch(const Scalar& a, const Scalar& t, long k, double tol = 1e-15) {
  QPochResult res;
  res.value = Scalar::one();
  if (k >= 0) {
    Scalar at = a;
    for (long j = 0; j < k; ++j) {
      res.value *= (Scalar::one() - at);
      at *= t;
      ++res.order;
    }
    return res;
  }
  if (!a.numeric() || !t.numeric())
    throw std::domain_error("qpoch: infinite product requires numeric mode");
  if (fabsl(t.value()) >= 1.0L)
    throw std::domain_error("qpoch: infinite product needs |t| < 1");
  if (tol <= 0) throw std::domain_error("qpoch: tol must be positive");
  long double av = a.value(), tv = t.value(), prod = 1.0L;
  int j = 0;
  while (fabsl(av) >= tol) {
    prod *= (1.0L - av);
    av *= tv;
    if (++j > 1000000) throw std::runtime_error("qpoch: no convergence");
  }
  res.value = Scalar::number(prod);
  res.order = j;
  return res;
}

// t-binomial coefficient (t;t)_m / ((t;t)_n (t;t)_{m-n})
inline Scalar qbinom(long m, long n, const Scalar& t) {
  if (n > m || n < 0) throw std::domain_error("qbinom: need 0 <= n <= m");
  // cancel (t;t)_n against the tail of (t;t)_m to avoid symbolic 0/0
  Scalar r = Scalar::one();
  long k = std::min(n, m - n);
  // (t;t)_m / (t;t)_{m-k} = prod_{j=m-k+1}^{m} (1 - t^j)
  for (long j = m - k + 1; j <= m; ++j) r *= (Scalar::one() - t.pow(j));
  for (long j = 1; j <= k; ++j) r /= (Scalar::one() - t.pow(j));
  return r;
}

// [m]_{q^2} = (q^{2m} - 1)/(q^2 - 1); the coefficient produced by the
// q-difference operator on a power t^m
inline Scalar qint2(const QCtx& ctx, long m) {
  if (m == 0) return Scalar::zero();
  Scalar q2 = Scalar::q_pow(ctx, 2);
  return (q2.pow(m) - Scalar::one()) / (q2 - Scalar::one());
}

}  // namespace qhs
