#include "qdouble/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "qdouble/error.hpp"

namespace qdouble {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Quotient and remainder of a by b (b nonzero) in Q[x].
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (sgn(a[i]) == 0) continue;
    Rational c = a[i] / lead;
    const std::size_t shift = i + 1 - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    if (i == 0) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::vector<long> compute_cyclotomic(unsigned n) {
  // x^n - 1 = prod_{d | n} Phi_d(x)
  std::vector<BigInt> num(n + 1, BigInt(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    // exact division by a monic integer polynomial
    std::vector<BigInt> q(num.size() - div.size() + 1, BigInt(0));
    for (std::size_t i = num.size(); i-- >= div.size();) {
      BigInt c = num[i];
      const std::size_t shift = i + 1 - div.size();
      q[shift] = c;
      if (c != 0)
        for (std::size_t j = 0; j < div.size(); ++j) num[shift + j] -= c * div[j];
      if (i == 0) break;
    }
    num = std::move(q);
  }
  std::vector<long> out;
  out.reserve(num.size());
  for (const auto& c : num) {
    require(c.fits_slong_p(), ErrorCode::internal, "cyclotomic coefficient overflow");
    out.push_back(c.get_si());
  }
  return out;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
  require(n >= 1, ErrorCode::invalid_argument, "cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<unsigned, std::vector<long>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<long> poly;
  if (n == 1) {
    poly = {-1, 1};
  } else {
    poly = compute_cyclotomic(n);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

unsigned lcm_order(unsigned a, unsigned b) { return std::lcm(a, b); }

CycScalar::CycScalar() : order_(1), coeffs_(1, Rational(0)) {}

CycScalar CycScalar::zero(unsigned order) {
  require(order >= 1, ErrorCode::invalid_argument, "invalid cyclotomic order 0");
  return CycScalar(order, Poly(euler_phi(order), Rational(0)));
}

CycScalar CycScalar::one(unsigned order) { return rational(order, Rational(1)); }

CycScalar CycScalar::rational(unsigned order, const Rational& q) {
  require(q.get_den() != 0, ErrorCode::division_by_zero, "zero denominator");
  CycScalar r = zero(order);
  r.coeffs_[0] = q;
  r.coeffs_[0].canonicalize();
  return r;
}

CycScalar CycScalar::root_of_unity(unsigned order, long long k) {
  require(order >= 1, ErrorCode::invalid_argument, "invalid cyclotomic order 0");
  long long e = k % static_cast<long long>(order);
  if (e < 0) e += order;
  Poly p(static_cast<std::size_t>(e) + 1, Rational(0));
  p[static_cast<std::size_t>(e)] = 1;
  CycScalar r(order, {});
  r.reduce_from(p);
  return r;
}

CycScalar CycScalar::from_coeffs(unsigned order, std::vector<Rational> coeffs) {
  require(order >= 1, ErrorCode::invalid_argument, "invalid cyclotomic order 0");
  for (auto& c : coeffs) {
    require(c.get_den() != 0, ErrorCode::division_by_zero, "zero denominator in coefficient");
    c.canonicalize();
  }
  CycScalar r(order, {});
  r.reduce_from(coeffs);
  return r;
}

void CycScalar::reduce_from(Poly& p) {
  const auto& phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    if (sgn(p[i]) == 0) continue;
    Rational c = p[i];
    const std::size_t shift = i - deg;
    for (std::size_t j = 0; j < deg; ++j)
      if (phi[j] != 0) p[shift + j] -= c * phi[j];
    p[i] = 0;
  }
  p.resize(deg, Rational(0));
  coeffs_ = std::move(p);
}

bool CycScalar::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycScalar::is_one() const noexcept {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

static void check_same_order(const CycScalar& a, const CycScalar& b) {
  if (a.order() != b.order())
    fail(ErrorCode::invalid_argument, "cyclotomic order mismatch: " + std::to_string(a.order()) + " vs " +
                                          std::to_string(b.order()));
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& b) {
  check_same_order(*this, b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& b) {
  check_same_order(*this, b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& b) { return *this = *this * b; }

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  check_same_order(a, b);
  if (a.coeffs_.size() == 1) return CycScalar(a.order_, {a.coeffs_[0] * b.coeffs_[0]});
  Poly p(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (sgn(b.coeffs_[j]) != 0) p[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  CycScalar r(a.order_, {});
  r.reduce_from(p);
  return r;
}

CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inverse(); }

bool operator==(const CycScalar& a, const CycScalar& b) {
  check_same_order(a, b);
  return a.coeffs_ == b.coeffs_;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) fail(ErrorCode::division_by_zero, "inverse of zero cyclotomic scalar");
  if (coeffs_.size() == 1) return CycScalar(order_, {1 / coeffs_[0]});
  const auto& phi_int = cyclotomic_polynomial(order_);
  Poly r0(phi_int.begin(), phi_int.end());
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since Phi_N is irreducible.
  const Rational c = r1.at(0);
  for (auto& x : s1) x /= c;
  CycScalar out(order_, {});
  out.reduce_from(s1);
  return out;
}

CycScalar CycScalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CycScalar result = one(order_);
  CycScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CycScalar CycScalar::embed(unsigned m) const {
  require(m >= 1 && m % order_ == 0, ErrorCode::invalid_argument,
          "cannot embed order " + std::to_string(order_) + " into order " + std::to_string(m));
  if (m == order_) return *this;
  const std::size_t step = m / order_;
  Poly p((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
  CycScalar r(m, {});
  r.reduce_from(p);
  return r;
}

unsigned CycScalar::root_order() const {
  const unsigned bound = order_ % 2 == 0 ? order_ : 2 * order_;
  CycScalar acc = *this;
  for (unsigned k = 1; k <= bound; ++k) {
    if (acc.is_one()) return k;
    acc *= *this;
  }
  return 0;
}

std::string CycScalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag.get_str();
      if (i > 0) os << '*';
    }
    if (i == 1) os << "z" << order_;
    if (i > 1) os << "z" << order_ << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

CycScalar root_of_unity(unsigned order, long long k) { return CycScalar::root_of_unity(order, k); }
CycScalar add(const CycScalar& a, const CycScalar& b) { return a + b; }
CycScalar mul(const CycScalar& a, const CycScalar& b) { return a * b; }
CycScalar neg(const CycScalar& a) { return -a; }
CycScalar inv(const CycScalar& a) { return a.inverse(); }
CycScalar embed(const CycScalar& a, unsigned m) { return a.embed(m); }

}  // namespace qdouble
