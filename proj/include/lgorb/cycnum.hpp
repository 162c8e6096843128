// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// Elements are stored in the power basis 1, z, ..., z^(phi(n)-1) reduced
// modulo the n-th cyclotomic polynomial, as integer numerators over one
// positive common denominator. The representation is canonical, so equality
// and hashing are structural.

#ifndef LGORB_CYCNUM_HPP_
#define LGORB_CYCNUM_HPP_

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lgorb {

using Integer = mpz_class;
using Rational = mpq_class;

struct ConductorMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::size_t hash_integer(const Integer& z) {
  std::size_t h = mpz_sgn(z.get_mpz_t()) < 0 ? 0x9e3779b97f4a7c15ULL : 0;
  const std::size_t limbs = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i)
    h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  return h;
}

inline long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// The field Q(zeta_n), shared by every element of that conductor.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int conductor) {
    if (conductor < 1) throw std::invalid_argument("conductor must be positive");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CyclotomicField>> registry;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = registry.find(conductor);
    if (it == registry.end())
      it = registry.emplace(conductor, std::unique_ptr<CyclotomicField>(
                                           new CyclotomicField(conductor))).first;
    return *it->second;
  }

  int conductor() const { return conductor_; }
  int degree() const { return degree_; }
  /// Coefficients of Phi_n, lowest degree first; monic.
  const std::vector<long>& modulus() const { return modulus_; }
  /// z^k for 0 <= k < n in the power basis.
  std::vector<long> power(int k) const {
    std::vector<long> out(degree_, 0);
    if (k < degree_) {
      out[k] = 1;
      return out;
    }
    for (int i = 0; i < degree_; ++i) out[i] = -modulus_[i];
    for (int e = degree_; e < k; ++e) out = times_z(out);
    return out;
  }

  std::vector<long> times_z(const std::vector<long>& v) const {
    std::vector<long> out(degree_, 0);
    const long top = v[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) out[i] = v[i - 1];
    for (int i = 0; i < degree_; ++i) out[i] -= top * modulus_[i];
    return out;
  }

 private:
  explicit CyclotomicField(int n)
      : conductor_(n), degree_(static_cast<int>(euler_phi(n))), modulus_(cyclotomic_polynomial(n)) {}

  static std::vector<long> cyclotomic_polynomial(int n) {
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      const std::vector<long> q = cyclotomic_polynomial(d);
      const int dq = static_cast<int>(q.size()) - 1;
      const int dp = static_cast<int>(p.size()) - 1;
      std::vector<long> quot(dp - dq + 1, 0);
      for (int i = dp; i >= dq; --i) {
        const long c = p[i];
        quot[i - dq] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
      }
      p = std::move(quot);
    }
    return p;
  }

  int conductor_;
  int degree_;
  std::vector<long> modulus_;
};

class CycNum {
 public:
  /// Zero of Q = Q(zeta_1).
  CycNum() : CycNum(1) {}

  explicit CycNum(int conductor)
      : field_(&CyclotomicField::get(conductor)), num_(field_->degree()), den_(1) {}

  CycNum(int conductor, const Rational& value) : CycNum(conductor) {
    const Rational q = make_rational(value.get_num(), value.get_den());
    num_[0] = q.get_num();
    den_ = q.get_den();
  }

  CycNum(int conductor, long value) : CycNum(conductor, Rational(value)) {}

  /// From rational coefficients over the power basis; reduces if longer than phi(n).
  static CycNum from_coeffs(int conductor, const std::vector<Rational>& coeffs) {
    CycNum out(conductor);
    Integer den = 1;
    for (const auto& c : coeffs) den = lcm(den, Integer(c.get_den()));
    std::vector<Integer> wide(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      wide[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    out.den_ = den;
    out.fold_into(wide);
    out.normalize();
    return out;
  }

  int conductor() const { return field_->conductor(); }
  int degree() const { return field_->degree(); }
  const CyclotomicField& field() const { return *field_; }

  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  Rational coeff(std::size_t i) const { return make_rational(num_.at(i), den_); }

  std::vector<Rational> coeffs() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (const auto& c : num_) out.push_back(make_rational(c, den_));
    return out;
  }

  bool is_zero() const {
    for (const auto& c : num_)
      if (sgn(c) != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
      if (sgn(num_[i]) != 0) return false;
    return true;
  }

  bool is_one() const { return is_rational() && den_ == 1 && num_[0] == 1; }

  /// Only valid when is_rational().
  Rational rational_value() const { return coeff(0); }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.field_ == b.field_ && a.den_ == b.den_ && a.num_ == b.num_;
  }

  CycNum operator-() const {
    CycNum out(*this);
    for (auto& c : out.num_) c = -c;
    return out;
  }

  CycNum& operator+=(const CycNum& b) { return accumulate(b, 1); }
  CycNum& operator-=(const CycNum& b) { return accumulate(b, -1); }

  CycNum& operator*=(const CycNum& b) {
    *this = *this * b;
    return *this;
  }

  CycNum& operator/=(const CycNum& b) {
    *this = *this * b.inverse();
    return *this;
  }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  friend CycNum operator*(const CycNum& a, const CycNum& b) {
    check_same(a, b);
    const int d = a.degree();
    CycNum out(a.conductor());
    if (a.is_zero() || b.is_zero()) return out;
    out.den_ = a.den_ * b.den_;
    if (a.is_rational() || b.is_rational()) {
      const CycNum& r = a.is_rational() ? a : b;
      const CycNum& o = a.is_rational() ? b : a;
      for (int i = 0; i < d; ++i)
        if (sgn(o.num_[i]) != 0) mpz_mul(out.num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), r.num_[0].get_mpz_t());
      out.normalize();
      return out;
    }
    std::vector<Integer> wide(2 * d - 1);
    for (int i = 0; i < d; ++i) {
      if (sgn(a.num_[i]) == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (sgn(b.num_[j]) == 0) continue;
        mpz_addmul(wide[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
      }
    }
    out.fold_into(wide);
    out.normalize();
    return out;
  }

  CycNum scaled(const Rational& r) const {
    return *this * CycNum(conductor(), r);
  }

  /// Multiplicative inverse via extended Euclid against Phi_n over Q[x].
  CycNum inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
    if (is_rational()) return CycNum(conductor(), 1 / rational_value());
    using QPoly = std::vector<Rational>;
    auto trim = [](QPoly& p) {
      while (!p.empty() && p.back() == 0) p.pop_back();
    };
    auto sub_scaled_shift = [](QPoly& p, const QPoly& q, const Rational& c, std::size_t shift) {
      if (p.size() < q.size() + shift) p.resize(q.size() + shift);
      for (std::size_t i = 0; i < q.size(); ++i) p[i + shift] -= c * q[i];
    };
    auto divmod = [&](QPoly a, const QPoly& b) {
      QPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 1);
      while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const Rational c = a.back() / b.back();
        quot[shift] = c;
        sub_scaled_shift(a, b, c, shift);
        a.back() = 0;
        trim(a);
      }
      trim(quot);
      return std::make_pair(quot, a);
    };
    auto mul = [](const QPoly& a, const QPoly& b) {
      if (a.empty() || b.empty()) return QPoly{};
      QPoly out(a.size() + b.size() - 1);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
      return out;
    };
    QPoly r0(field_->modulus().begin(), field_->modulus().end());
    QPoly r1 = coeffs();
    trim(r1);
    QPoly s0, s1{Rational(1)};  // coefficient of *this in r_i
    while (r1.size() > 1) {
      auto [q, r] = divmod(r0, r1);
      QPoly s = s0;
      const QPoly qs = mul(q, s1);
      if (s.size() < qs.size()) s.resize(qs.size());
      for (std::size_t i = 0; i < qs.size(); ++i) s[i] -= qs[i];
      trim(s);
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    // r1 is a nonzero constant since gcd(a, Phi_n) = 1.
    const Rational c = r1.at(0);
    for (auto& x : s1) x /= c;
    return from_coeffs(conductor(), s1);
  }

  /// Image under zeta_n -> zeta_m^(m/n).
  CycNum lifted(int m) const {
    const int n = conductor();
    if (m < 1 || m % n != 0)
      throw ConductorMismatch("cannot lift conductor " + std::to_string(n) + " to " +
                              std::to_string(m));
    if (m == n) return *this;
    const int step = m / n;
    const CyclotomicField& target = CyclotomicField::get(m);
    CycNum out(m);
    out.den_ = den_;
    for (int i = 0; i < degree(); ++i) {
      if (sgn(num_[i]) == 0) continue;
      const std::vector<long> p = target.power((i * step) % m);
      for (int j = 0; j < target.degree(); ++j)
        if (p[j] != 0) out.num_[j] += num_[i] * p[j];
    }
    out.normalize();
    return out;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(conductor()) * 0x100000001b3ULL;
    for (const auto& c : num_) h = h * 31 + hash_integer(c);
    return h * 31 + hash_integer(den_);
  }

  /// Diagnostics only; never used for decisions.
  std::complex<double> approx() const {
    std::complex<double> out = 0;
    const double step = 2 * std::numbers::pi / conductor();
    const double den = den_.get_d();
    for (int i = 0; i < degree(); ++i)
      out += std::polar(num_[i].get_d() / den, step * i);
    return out;
  }

  /// e.g. "1/7*z^2 - z^3 + 2" with z = zeta_n, highest power first.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree() - 1; i >= 0; --i) {
      if (sgn(num_[i]) == 0) continue;
      Rational c = make_rational(num_[i], den_);
      const bool neg = c < 0;
      if (neg) c = -c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (i == 0) {
        out += c.get_str();
      } else {
        if (c != 1) out += c.get_str() + "*";
        out += i == 1 ? std::string("z") : "z^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  static void check_same(const CycNum& a, const CycNum& b) {
    if (a.field_ != b.field_)
      throw ConductorMismatch("conductor mismatch: " + std::to_string(a.conductor()) + " vs " +
                              std::to_string(b.conductor()));
  }

  CycNum& accumulate(const CycNum& b, int sign) {
    check_same(*this, b);
    if (b.is_zero()) return *this;
    if (den_ == b.den_) {
      for (std::size_t i = 0; i < num_.size(); ++i) {
        if (sign > 0)
          num_[i] += b.num_[i];
        else
          num_[i] -= b.num_[i];
      }
    } else {
      const Integer l = lcm(den_, b.den_);
      const Integer fa = l / den_;
      const Integer fb = l / b.den_;
      for (std::size_t i = 0; i < num_.size(); ++i) {
        num_[i] *= fa;
        if (sign > 0)
          num_[i] += b.num_[i] * fb;
        else
          num_[i] -= b.num_[i] * fb;
      }
      den_ = l;
    }
    normalize();
    return *this;
  }

  // Reduces a coefficient vector of arbitrary length into num_ (den_ unchanged).
  void fold_into(std::vector<Integer>& wide) {
    const int d = degree();
    for (int k = static_cast<int>(wide.size()) - 1; k >= d; --k) {
      if (sgn(wide[k]) == 0) continue;
      // z^k = z^(k-d) * z^d, z^d = -sum modulus[i] z^i
      for (int i = 0; i < d; ++i) {
        const long m = field_->modulus()[i];
        if (m == 0) continue;
        if (m > 0)
          mpz_submul_ui(wide[k - d + i].get_mpz_t(), wide[k].get_mpz_t(), static_cast<unsigned long>(m));
        else
          mpz_addmul_ui(wide[k - d + i].get_mpz_t(), wide[k].get_mpz_t(), static_cast<unsigned long>(-m));
      }
      wide[k] = 0;
    }
    for (int i = 0; i < d; ++i)
      num_[i] = i < static_cast<int>(wide.size()) ? wide[i] : Integer(0);
  }

  void normalize() {
    Integer g = den_;
    for (const auto& c : num_) {
      if (g == 1) break;
      if (sgn(c) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (is_zero()) {
      den_ = 1;
      return;
    }
    if (g != 1) {
      for (auto& c : num_)
        if (sgn(c) != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }

  const CyclotomicField* field_;
  std::vector<Integer> num_;
  Integer den_;
};

inline CycNum zeta(int n, long k) {
  if (n < 1) throw std::invalid_argument("zeta: conductor must be positive");
  const long e = ((k % n) + n) % n;
  const CyclotomicField& field = CyclotomicField::get(n);
  const std::vector<long> p = field.power(static_cast<int>(e));
  std::vector<Rational> coeffs(p.begin(), p.end());
  return CycNum::from_coeffs(n, coeffs);
}

inline CycNum lift_conductor(const CycNum& a, int m) { return a.lifted(m); }
inline CycNum cyc_add(const CycNum& a, const CycNum& b) { return a + b; }
inline CycNum cyc_mul(const CycNum& a, const CycNum& b) { return a * b; }
inline CycNum cyc_inverse(const CycNum& a) { return a.inverse(); }

inline int lcm_conductor(int a, int b) { return std::lcm(a, b); }

struct CycNumHash {
  std::size_t operator()(const CycNum& c) const { return c.hash(); }
};

}  // namespace lgorb

#endif  // LGORB_CYCNUM_HPP_
