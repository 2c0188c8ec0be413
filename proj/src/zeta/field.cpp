#include "hoppe/zeta/field.hpp"

#include <string>

#include "hoppe/common/error.hpp"

namespace hoppe {

namespace {

using Poly = std::vector<unsigned>;  // over F_p, constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// f must be monic.
Poly poly_mod(Poly a, const Poly& f, unsigned p) {
  trim(a);
  const std::size_t n = f.size() - 1;
  while (a.size() > n) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t i = 0; i <= n; ++i)
      a[shift + i] = static_cast<unsigned>((a[shift + i] + (p - c) * f[i]) % p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, unsigned p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  Poly r(c.begin(), c.end());
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, unsigned p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, unsigned p) {
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // Make b monic, then reduce a modulo b.
    const std::uint64_t li = inv_mod(b.back(), p);
    for (auto& c : b) c = static_cast<unsigned>(c * li % p);
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible(const std::vector<unsigned>& f, unsigned p) {
  if (f.size() < 2 || f.back() != 1) throw InvalidArgument("irreducibility test needs a monic polynomial");
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  // Rabin: x^{p^n} = x mod f, and gcd(x^{p^{n/r}} - x, f) = 1 for primes r | n.
  std::vector<Poly> frob(n + 1);
  frob[0] = poly_mod(Poly{0, 1}, f, p);
  for (std::size_t i = 1; i <= n; ++i) frob[i] = poly_powmod(frob[i - 1], p, f, p);
  if (frob[n] != frob[0]) return false;
  for (auto r : prime_factors(n)) {
    Poly h = frob[n / r];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    const Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<unsigned> smallest_irreducible(unsigned p, unsigned n) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < n; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(n + 1, 0);
    std::uint64_t t = code;
    for (unsigned i = 0; i < n; ++i) {
      f[i] = static_cast<unsigned>(t % p);
      t /= p;
    }
    f[n] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw Error("Internal", "no irreducible polynomial found");
}

FqField::FqField(unsigned p, unsigned n) : p_(p), n_(n), q_(1) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (n < 1) throw InvalidArgument("extension degree must be at least 1");
  for (unsigned i = 0; i < n; ++i) {
    if (q_ > kSizeLimit / p) throw TooLarge("p^n exceeds 2^40");
    q_ *= p;
  }
  modulus_ = smallest_irreducible(p, n);
  find_generator();
  if (q_ <= kTableLimit) build_tables();
}

FqField make_field(unsigned p, unsigned n) { return FqField(p, n); }

FqField::Elem FqField::from_int(long long v) const {
  const long long m = v % static_cast<long long>(p_);
  return static_cast<Elem>(m < 0 ? m + p_ : m);
}

FqField::Elem FqField::add(Elem a, Elem b) const {
  if (n_ == 1) return (a + b) % p_;
  Elem r = 0, place = 1;
  for (unsigned i = 0; i < n_; ++i) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

FqField::Elem FqField::neg(Elem a) const {
  Elem r = 0, place = 1;
  for (unsigned i = 0; i < n_; ++i) {
    r += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return r;
}

FqField::Elem FqField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FqField::Elem FqField::mul_poly(Elem a, Elem b) const {
  Poly x(n_), y(n_);
  for (unsigned i = 0; i < n_; ++i) {
    x[i] = static_cast<unsigned>(a % p_);
    y[i] = static_cast<unsigned>(b % p_);
    a /= p_;
    b /= p_;
  }
  const Poly r = poly_mulmod(x, y, modulus_, p_);
  Elem out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
  return out;
}

FqField::Elem FqField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (has_tables()) {
    std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + static_cast<std::uint64_t>(log_[b]);
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  return mul_poly(a, b);
}

FqField::Elem FqField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (has_tables()) {
    const std::uint64_t m = q_ - 1;
    // Both factors are below 2^20 here.
    return exp_[static_cast<std::uint64_t>(log_[a]) * (e % m) % m];
  }
  Elem r = 1, b = a;
  while (e) {
    if (e & 1) r = mul_poly(r, b);
    b = mul_poly(b, b);
    e >>= 1;
  }
  return r;
}

FqField::Elem FqField::inv(Elem a) const {
  if (a == 0) throw InvalidArgument("zero has no inverse");
  return pow(a, q_ - 2);
}

int FqField::quad_char(Elem a) const {
  if (p_ == 2) throw EvenCharacteristic("the quadratic character needs odd characteristic");
  if (a == 0) return 0;
  if (has_tables()) return log_[a] % 2 == 0 ? 1 : -1;
  return pow(a, (q_ - 1) / 2) == 1 ? 1 : -1;
}

void FqField::find_generator() {
  const std::uint64_t order = q_ - 1;
  const auto factors = prime_factors(order);
  for (Elem g = 1; g < q_; ++g) {
    bool ok = true;
    for (auto r : factors)
      if (pow(g, order / r) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      generator_ = g;
      return;
    }
  }
  throw Error("Internal", "no generator found");
}

void FqField::build_tables() {
  const std::uint64_t order = q_ - 1;
  std::vector<Elem> ex(order);
  std::vector<std::int32_t> lg(q_, kZeroLog);
  Elem x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    ex[i] = x;
    lg[x] = static_cast<std::int32_t>(i);
    x = mul_poly(x, generator_);
  }
  std::vector<std::int32_t> z(order);
  for (std::uint64_t i = 0; i < order; ++i) {
    const Elem s = add(1, ex[i]);
    z[i] = s == 0 ? kZeroLog : lg[s];
  }
  exp_ = std::move(ex);
  log_ = std::move(lg);
  zech_ = std::move(z);
}

}  // namespace hoppe
