// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "fdim/matrix.hpp"

namespace fdalg {

/// Univariate polynomial over GF(p), coefficients lowest degree first, always trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(PrimeField f) : f_(f) {}
  Poly(PrimeField f, Vec coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }
  Poly(PrimeField f, std::initializer_list<long long> coeffs) : f_(f) {
    for (long long v : coeffs) c_.push_back(f.from_int(v));
    trim();
  }

  static Poly constant(PrimeField f, Scalar c) { return Poly(f, Vec{c}); }
  static Poly x(PrimeField f) { return Poly(f, Vec{0, 1}); }

  const PrimeField& field() const noexcept { return f_; }
  const Vec& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Scalar lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  Scalar operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly monic() const {
    if (is_zero()) return *this;
    const Scalar inv = f_.inv(lead());
    Vec c = c_;
    for (auto& x : c) x = f_.mul(x, inv);
    return Poly(f_, std::move(c));
  }

  Poly operator+(const Poly& o) const {
    Vec c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f_.add((*this)[i], o[i]);
    return Poly(f_, std::move(c));
  }
  Poly operator-(const Poly& o) const {
    Vec c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f_.sub((*this)[i], o[i]);
    return Poly(f_, std::move(c));
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(f_);
    std::vector<std::uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
    const std::uint64_t p = f_.p();
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t(c_[i]) * o.c_[j]) % p;
    return Poly(f_, Vec(acc.begin(), acc.end()));
  }
  Poly scaled(Scalar s) const {
    Vec c = c_;
    for (auto& x : c) x = f_.mul(x, s);
    return Poly(f_, std::move(c));
  }

  /// Quotient and remainder; throws on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    require(!d.is_zero(), ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    Vec r = c_;
    if (r.size() < d.c_.size()) return {Poly(f_), *this};
    Vec q(r.size() - d.c_.size() + 1, 0);
    const Scalar inv = f_.inv(d.lead());
    for (std::size_t k = q.size(); k-- > 0;) {
      const Scalar coef = f_.mul(r[k + d.c_.size() - 1], inv);
      q[k] = coef;
      if (!coef) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] = f_.sub(r[k + j], f_.mul(coef, d.c_[j]));
    }
    return {Poly(f_, std::move(q)), Poly(f_, std::move(r))};
  }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  Poly operator/(const Poly& d) const { return divmod(d).first; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(f_);
    Vec c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = f_.mul(c_[i], static_cast<Scalar>(i % f_.p()));
    return Poly(f_, std::move(c));
  }

  Poly pow_mod(std::uint64_t e, const Poly& m) const {
    Poly result = constant(f_, 1) % m, base = *this % m;
    while (e) {
      if (e & 1) result = (result * base) % m;
      base = (base * base) % m;
      e >>= 1;
    }
    return result;
  }

  Scalar eval(Scalar x) const {
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = (acc * x + c_[i]) % f_.p();
    return static_cast<Scalar>(acc);
  }

  /// Horner evaluation at a square matrix.
  Matrix eval(const Matrix& m) const {
    Matrix acc(f_, m.rows(), m.cols());
    const Matrix id = Matrix::identity(f_, m.rows());
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * m;
      acc.add_scaled(id, c_[i]);
    }
    return acc;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (!c_[i]) continue;
      if (!s.empty()) s += " + ";
      if (c_[i] != 1 || i == 0) s += std::to_string(c_[i]);
      if (i >= 1) s += (c_[i] != 1 ? "*x" : "x");
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  PrimeField f_;
  Vec c_;
};

inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
inline std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) {
  const PrimeField& f = a.field();
  Poly r0 = a, r1 = b, s0 = Poly::constant(f, 1), s1(f), t0(f), t1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Scalar inv = f.inv(r0.lead());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Minimal polynomial (monic) of a square matrix.
inline Poly min_poly(const Matrix& m) {
  require(m.rows() == m.cols(), ErrorKind::InvalidArgument, "min_poly needs a square matrix");
  const PrimeField& f = m.field();
  const std::size_t n = m.rows();
  const std::size_t len = n * n;
  // Echelon rows of vec(M^k) together with the polynomial each row represents.
  struct Row {
    Vec v;
    Vec coeff;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  Matrix power = Matrix::identity(f, n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vec v = power.data();
    Vec coeff(k + 1, 0);
    coeff[k] = 1;
    for (const Row& r : rows) {
      const Scalar c = v[r.pivot];
      if (!c) continue;
      const Scalar nc = f.neg(c);
      for (std::size_t j = 0; j < len; ++j)
        if (r.v[j]) v[j] = f.add(v[j], f.mul(nc, r.v[j]));
      for (std::size_t j = 0; j < r.coeff.size(); ++j) coeff[j] = f.add(coeff[j], f.mul(nc, r.coeff[j]));
    }
    std::size_t piv = 0;
    while (piv < len && v[piv] == 0) ++piv;
    if (piv == len) return Poly(f, coeff).monic();
    const Scalar inv = f.inv(v[piv]);
    for (auto& x : v) x = f.mul(x, inv);
    for (auto& x : coeff) x = f.mul(x, inv);
    rows.push_back({std::move(v), std::move(coeff), piv});
    power = power * m;
  }
  fail(ErrorKind::InvariantViolation, "Cayley-Hamilton bound exceeded in min_poly");
}

namespace detail {

// Square-free decomposition of a monic polynomial: list of (square-free factor, multiplicity).
inline std::vector<std::pair<Poly, unsigned>> squarefree(const Poly& f0) {
  const PrimeField& fld = f0.field();
  const Scalar p = fld.p();
  std::vector<std::pair<Poly, unsigned>> out;
  Poly f = f0.monic();
  if (f.degree() <= 0) return out;
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one() && c.degree() > 0) {
    // c is a polynomial in x^p; over a prime field the p-th root just spreads out the coefficients.
    Vec root;
    for (std::size_t k = 0; k < c.coeffs().size(); k += p) root.push_back(c.coeffs()[k]);
    for (auto& [g, m] : squarefree(Poly(fld, root))) out.emplace_back(g, m * p);
  }
  return out;
}

// Distinct-degree factorization of a monic square-free polynomial.
inline std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly g) {
  const PrimeField& fld = g.field();
  std::vector<std::pair<Poly, unsigned>> out;
  const Poly x = Poly::x(fld);
  Poly h = x % g;
  unsigned i = 1;
  while (g.degree() >= 2 * static_cast<int>(i)) {
    h = h.pow_mod(fld.p(), g);
    Poly d = gcd(g, h - x);
    if (!d.is_one()) {
      out.emplace_back(d, i);
      g = g / d;
      h = h % g;
    }
    ++i;
  }
  if (g.degree() > 0) out.emplace_back(g.monic(), static_cast<unsigned>(g.degree()));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting for odd p.
inline void equal_degree(const Poly& d, unsigned k, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (d.degree() == static_cast<int>(k)) {
    out.push_back(d.monic());
    return;
  }
  const PrimeField& fld = d.field();
  std::uniform_int_distribution<Scalar> dist(0, fld.p() - 1);
  for (;;) {
    Vec c(static_cast<std::size_t>(d.degree()));
    for (auto& x : c) x = dist(rng);
    Poly a(fld, c);
    if (a.degree() <= 0) continue;
    // a^((p^k - 1)/2) = (a * a^p * ... * a^(p^(k-1)))^((p-1)/2)
    Poly norm = a % d, frob = a % d;
    for (unsigned j = 1; j < k; ++j) {
      frob = frob.pow_mod(fld.p(), d);
      norm = (norm * frob) % d;
    }
    Poly b = norm.pow_mod((fld.p() - 1) / 2, d) - Poly::constant(fld, 1);
    Poly g = gcd(d, b);
    if (g.degree() > 0 && g.degree() < d.degree()) {
      equal_degree(g, k, rng, out);
      equal_degree(d / g, k, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Factor into monic irreducibles with multiplicities, sorted by degree and then by
/// coefficient vector (constant term first). The leading coefficient is dropped.
inline std::vector<std::pair<Poly, unsigned>> factor(const Poly& f, std::uint64_t seed = 0) {
  require(!f.is_zero(), ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Poly, unsigned>> out;
  for (auto& [sq, mult] : detail::squarefree(f))
    for (auto& [d, k] : detail::distinct_degree(sq)) {
      std::vector<Poly> parts;
      detail::equal_degree(d, k, rng, parts);
      for (auto& q : parts) out.emplace_back(q, mult);
    }
  // Merge equal irreducibles arising from different square-free layers.
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.coeffs() < b.first.coeffs();
  });
  std::vector<std::pair<Poly, unsigned>> merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(e);
  }
  return merged;
}

}  // namespace fdalg
