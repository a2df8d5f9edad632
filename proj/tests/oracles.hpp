#pragma once

// Reference computations for the tests. None of these call into the library
// code they are used to check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "qdouble/cochain.hpp"
#include "qdouble/cyclotomic.hpp"

namespace oracle {

using qdouble::CycScalar;
using qdouble::Rational;

// Phi_N by exact division of x^N - 1 by Phi_d for the proper divisors d.
inline std::vector<long> cyclotomic(unsigned n) {
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto den = cyclotomic(d);
    std::vector<long> q(num.size() - den.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
      q[i] = num[i + den.size() - 1];
      for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
    }
    num = q;
  }
  return num;
}

// x^k mod Phi_N by schoolbook long division, as rational coefficients.
inline std::vector<Rational> power_mod(unsigned n, unsigned k) {
  const auto phi = cyclotomic(n);
  const std::size_t deg = phi.size() - 1;
  std::vector<Rational> p(std::max<std::size_t>(k + 1, deg), 0);
  p[k] = 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    const Rational c = p[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) p[i - deg + j] -= c * phi[j];
  }
  p.resize(deg);
  return p;
}

// Evaluation Q(zeta_N) -> F_p at a primitive N-th root of unity, p = 1 mod N.
// A ring homomorphism wherever denominators are prime to p.
class PrimeFieldEval {
 public:
  explicit PrimeFieldEval(unsigned n, unsigned which = 0) : n_(n) {
    unsigned found = 0;
    for (std::uint64_t p = 1'000'000'007ull;; ++p) {
      if ((p - 1) % n || !is_prime(p)) continue;
      if (found++ < which) continue;
      p_ = p;
      break;
    }
    for (std::uint64_t g = 2;; ++g) {
      const std::uint64_t w = pow(g, (p_ - 1) / n);
      if (has_order(w, n)) {
        w_ = w;
        break;
      }
    }
  }

  std::uint64_t prime() const { return p_; }

  std::uint64_t operator()(const CycScalar& a) const {
    std::uint64_t acc = 0, wk = 1;
    for (const auto& q : a.coeffs()) {
      acc = (acc + mul(reduce(q), wk)) % p_;
      wk = mul(wk, w_);
    }
    return acc;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t b, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (b %= p_; e; e >>= 1, b = mul(b, b))
      if (e & 1) r = mul(r, b);
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }

 private:
  static bool is_prime(std::uint64_t p) {
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }
  bool has_order(std::uint64_t w, unsigned n) const {
    if (pow(w, n) != 1) return false;
    for (unsigned d = 1; d < n; ++d)
      if (n % d == 0 && pow(w, d) == 1) return false;
    return true;
  }
  std::uint64_t reduce(const Rational& q) const {
    const qdouble::BigInt P(std::to_string(p_));
    qdouble::BigInt a = q.get_num() % P, b = q.get_den() % P;
    if (a < 0) a += P;
    return mul(a.get_ui(), inv(b.get_ui()));
  }

  unsigned n_;
  std::uint64_t p_ = 0, w_ = 0;
};

inline CycScalar random_scalar(unsigned order, std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  while (true) {
    std::vector<Rational> c;
    for (unsigned i = 0; i < qdouble::euler_phi(order); ++i) c.emplace_back(num(rng), den(rng));
    for (auto& q : c) q.canonicalize();
    auto s = CycScalar::from_coeffs(order, std::move(c));
    if (!nonzero || !s.is_zero()) return s;
  }
}

// S3 as permutations of {0,1,2}, composed right to left.
using Perm = std::array<int, 3>;
inline std::vector<Perm> s3_perms() {
  std::vector<Perm> out;
  Perm p{0, 1, 2};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}
inline Perm compose(const Perm& a, const Perm& b) { return {a[b[0]], a[b[1]], a[b[2]]}; }
inline int perm_order(const Perm& p) {
  Perm q = p;
  for (int k = 1;; ++k) {
    if (q == Perm{0, 1, 2}) return k;
    q = compose(p, q);
  }
}

// Direct transcription of the twisted double's structure constants from phi.
struct DoubleOracle {
  const qdouble::Cochain3& phi;
  const qdouble::FiniteGroup& G;

  int inv(int x) const {
    for (int y = 0; y < G.size(); ++y)
      if (G.mul(x, y) == 0) return y;
    return -1;
  }
  int conj(int x, int s) const { return G.mul(G.mul(inv(x), s), x); }

  // chi(x,y)(s) = phi(x,y,(xy)^-1 s xy) phi(s,x,y) / phi(x,x^-1 s x,y)
  CycScalar chi(int x, int y, int s) const {
    const int xy = G.mul(x, y);
    return phi(x, y, conj(xy, s)) * phi(s, x, y) / phi(x, conj(x, s), y);
  }
  // r(x,a,b) = phi(x,x^-1 a x,x^-1 b x) phi(a,b,x) / phi(a,x,x^-1 b x)
  CycScalar ratio(int x, int a, int b) const {
    return phi(x, conj(x, a), conj(x, b)) * phi(a, b, x) / phi(a, x, conj(x, b));
  }
  // coefficient of (z (x) d_u) in (x (x) d_s)(y (x) d_t)
  CycScalar product(int x, int s, int y, int t, int z, int u) const {
    const unsigned N = phi.order();
    if (t != u || G.mul(G.mul(y, s), inv(y)) != t || z != G.mul(y, x)) return CycScalar::zero(N);
    return chi(y, x, t);
  }
};

}  // namespace oracle
