#include "hoppe/zeta/int_poly.hpp"

#include <sstream>

#include "hoppe/common/error.hpp"

namespace hoppe {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(std::size_t degree, const mpz_class& c) {
  std::vector<mpz_class> v(degree + 1, 0);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + o.scaled(-1); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpz_class> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::scaled(const mpz_class& k) const {
  std::vector<mpz_class> v = c_;
  for (auto& x : v) x *= k;
  return IntPoly(std::move(v));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

IntPoly IntPoly::derivative() const {
  std::vector<mpz_class> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(v));
}

std::string IntPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream o;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    mpz_class a = abs(c_[i]);
    o << (first ? (c_[i] < 0 ? "-" : "") : (c_[i] < 0 ? " - " : " + "));
    if (a != 1 || i == 0) o << a.get_str() << (i > 0 ? "*" : "");
    if (i > 0) o << var << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return o.str();
}

void divmod_monic(const IntPoly& a, const IntPoly& monic, IntPoly& quot, IntPoly& rem) {
  if (monic.is_zero() || monic.leading() != 1) throw InvalidArgument("divisor must be monic");
  std::vector<mpz_class> r = a.coeffs();
  const int d = monic.degree();
  if (a.degree() < d) {
    quot = IntPoly();
    rem = a;
    return;
  }
  std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - d + 1), 0);
  for (int i = a.degree(); i >= d; --i) {
    const mpz_class c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - d)] = c;
    for (int j = 0; j <= d; ++j) r[static_cast<std::size_t>(i - d + j)] -= c * monic.coeff(static_cast<std::size_t>(j));
  }
  quot = IntPoly(std::move(q));
  rem = IntPoly(std::move(r));
}

unsigned long euler_phi(unsigned long k) {
  unsigned long r = k;
  for (unsigned long p = 2; p * p <= k; ++p)
    if (k % p == 0) {
      while (k % p == 0) k /= p;
      r -= r / p;
    }
  if (k > 1) r -= r / k;
  return r;
}

namespace {

int moebius(unsigned long n) {
  int m = 1;
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  if (n > 1) m = -m;
  return m;
}

IntPoly t_pow_minus_one(unsigned long d) { return IntPoly::monomial(d) - IntPoly::monomial(0); }

}  // namespace

IntPoly cyclotomic(unsigned long k) {
  if (k == 0) throw InvalidArgument("cyclotomic index must be positive");
  // Phi_k = prod_{d | k} (T^d - 1)^{mu(k/d)}; the divisions are exact.
  IntPoly num = IntPoly::monomial(0);
  std::vector<unsigned long> den;
  for (unsigned long d = 1; d <= k; ++d) {
    if (k % d) continue;
    const int mu = moebius(k / d);
    if (mu == 1) num = num * t_pow_minus_one(d);
    if (mu == -1) den.push_back(d);
  }
  for (auto d : den) {
    IntPoly q, r;
    divmod_monic(num, t_pow_minus_one(d), q, r);
    num = q;
  }
  return num;
}

std::vector<CyclotomicFactor> cyclotomic_factors(const IntPoly& p, unsigned long max_phi) {
  std::vector<CyclotomicFactor> out;
  if (p.is_zero()) throw InvalidArgument("the zero polynomial has no factorization");
  const unsigned long k_max = 2 * max_phi * max_phi + 2;
  IntPoly rest = p;
  for (unsigned long k = 1; k <= k_max; ++k) {
    if (euler_phi(k) > max_phi) continue;
    const IntPoly phi = cyclotomic(k);
    int mult = 0;
    for (;;) {
      IntPoly q, r;
      if (rest.degree() < phi.degree()) break;
      divmod_monic(rest, phi, q, r);
      if (!r.is_zero()) break;
      rest = q;
      ++mult;
    }
    if (mult > 0) out.push_back({k, mult});
  }
  return out;
}

int cyclotomic_degree(const std::vector<CyclotomicFactor>& f) {
  int d = 0;
  for (const auto& x : f) d += static_cast<int>(euler_phi(x.k)) * x.multiplicity;
  return d;
}

namespace {

using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly to_q(const IntPoly& p) { return QPoly(p.coeffs().begin(), p.coeffs().end()); }

QPoly qrem(QPoly a, const QPoly& b) {
  qtrim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const mpq_class c = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    qtrim(a);
  }
  return a;
}

QPoly qquot(QPoly a, const QPoly& b) {
  qtrim(a);
  if (a.size() < b.size()) return {};
  const std::size_t db = b.size() - 1;
  QPoly q(a.size() - db, 0);
  while (a.size() >= b.size()) {
    const mpq_class c = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    q[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    qtrim(a);
  }
  return q;
}

QPoly qderiv(const QPoly& a) {
  QPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<unsigned long>(i));
  return d;
}

QPoly qgcd(QPoly a, QPoly b) {
  qtrim(a);
  qtrim(b);
  while (!b.empty()) {
    QPoly r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

mpq_class qeval(const QPoly& a, const mpq_class& x) {
  mpq_class r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

int sign_changes(const std::vector<QPoly>& seq, const mpq_class& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    const int s = sgn(qeval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

QPoly squarefree(const QPoly& p) {
  const QPoly g = qgcd(p, qderiv(p));
  return g.size() <= 1 ? p : qquot(p, g);
}

// Distinct roots in (lo, hi] of a squarefree polynomial with p(lo) != 0.
int sturm_count(const QPoly& p, const mpq_class& lo, const mpq_class& hi) {
  std::vector<QPoly> seq{p, qderiv(p)};
  while (seq.back().size() > 1) {
    QPoly r = qrem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

int distinct_roots_in(QPoly p, const mpq_class& lo, const mpq_class& hi) {
  qtrim(p);
  if (p.empty()) throw InvalidArgument("the zero polynomial has infinitely many roots");
  if (lo > hi) return 0;
  p = squarefree(p);
  int extra = 0;
  if (qeval(p, lo) == 0) {
    p = qquot(p, QPoly{-lo, 1});
    extra = 1;
  }
  if (p.size() <= 1) return extra;
  return extra + sturm_count(p, lo, hi);
}

}  // namespace

int real_roots_in(const IntPoly& p, const mpq_class& lo, const mpq_class& hi) {
  return distinct_roots_in(to_q(p), lo, hi);
}

bool roots_on_unit_circle(const IntPoly& p) {
  if (p.is_zero()) return false;
  const auto& c = p.coeffs();
  const std::size_t d = c.size() - 1;
  bool pal = true, anti = true;
  for (std::size_t i = 0; i <= d; ++i) {
    if (c[i] != c[d - i]) pal = false;
    if (c[i] != -c[d - i]) anti = false;
  }
  if (!pal && !anti) throw InvalidArgument("polynomial is neither palindromic nor antipalindromic");
  QPoly r = to_q(p);
  // Antipalindromic: remove the forced root 1. Odd palindromic: root -1.
  if (!pal) r = qquot(r, QPoly{-1, 1});
  if ((r.size() - 1) % 2 == 1) r = qquot(r, QPoly{1, 1});
  const std::size_t m = (r.size() - 1) / 2;
  if (m == 0) return true;
  // r(T) / T^m = g(T + 1/T), with T^k + T^-k = V_k(u).
  std::vector<QPoly> V{QPoly{2}, QPoly{0, 1}};
  for (std::size_t k = 2; k <= m; ++k) {
    QPoly next(k + 1, 0);
    for (std::size_t i = 0; i < V[k - 1].size(); ++i) next[i + 1] += V[k - 1][i];
    for (std::size_t i = 0; i < V[k - 2].size(); ++i) next[i] -= V[k - 2][i];
    V.push_back(next);
  }
  QPoly g(m + 1, 0);
  g[0] = r[m];
  for (std::size_t k = 1; k <= m; ++k)
    for (std::size_t i = 0; i < V[k].size(); ++i) g[i] += r[m + k] * V[k][i];
  const QPoly sf = squarefree(g);
  return distinct_roots_in(g, -2, 2) == static_cast<int>(sf.size()) - 1;
}

std::vector<mpq_class> newton_elementary(const std::vector<mpq_class>& s) {
  std::vector<mpq_class> e{1};
  for (std::size_t k = 1; k <= s.size(); ++k) {
    mpq_class acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      const mpq_class term = e[k - i] * s[i - 1];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    e.push_back(acc / static_cast<unsigned long>(k));
  }
  return e;
}

IntPoly from_elementary(const std::vector<mpz_class>& e) {
  const std::size_t d = e.size() - 1;
  std::vector<mpz_class> c(d + 1);
  for (std::size_t k = 0; k <= d; ++k) c[d - k] = (k % 2 == 0) ? e[k] : mpz_class(-e[k]);
  return IntPoly(std::move(c));
}

std::vector<mpz_class> power_sums(const IntPoly& monic, std::size_t m) {
  if (monic.is_zero() || monic.leading() != 1) throw InvalidArgument("power sums need a monic polynomial");
  const std::size_t d = static_cast<std::size_t>(monic.degree());
  auto e = [&](std::size_t k) -> mpz_class {
    if (k > d) return 0;
    const mpz_class a = monic.coeff(d - k);
    return k % 2 == 0 ? a : mpz_class(-a);
  };
  std::vector<mpz_class> s;
  for (std::size_t k = 1; k <= m; ++k) {
    mpz_class acc = (k % 2 == 1 ? 1 : -1) * mpz_class(static_cast<unsigned long>(k)) * e(k);
    for (std::size_t i = 1; i < k; ++i) {
      const mpz_class term = e(i) * s[k - i - 1];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    s.push_back(acc);
  }
  return s;
}

}  // namespace hoppe
