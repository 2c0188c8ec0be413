#include "hoppe/k3lat/lattice.hpp"

#include <numeric>
#include <regex>

#include "hoppe/common/error.hpp"
#include "hoppe/polycore/exact_matrix.hpp"

namespace hoppe {

mpz_class int_determinant(const IntMatrix& m) {
  ExactMatrix e(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) throw InvalidArgument("determinant of a non-square matrix");
    for (std::size_t j = 0; j < m.size(); ++j) e.at(i, j) = static_cast<long>(m[i][j]);
  }
  return mpz_class(determinant(e).get_num());
}

GramLattice::GramLattice(std::string name, std::vector<std::string> basis, IntMatrix gram)
    : name_(std::move(name)), basis_(std::move(basis)), gram_(std::move(gram)) {
  const std::size_t n = basis_.size();
  if (gram_.size() != n) throw InvalidArgument("Gram matrix size does not match the basis");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw InvalidArgument("Gram matrix must be square");
    for (std::size_t j = 0; j < n; ++j)
      if (gram_[i][j] != gram_[j][i]) throw InvalidArgument("Gram matrix must be symmetric");
    if (gram_[i][i] % 2 != 0) throw OddSquare("lattice " + name_ + " is not even");
  }
  if (n > 0 && determinant() == 0) throw InvalidArgument("lattice " + name_ + " is degenerate");
}

mpz_class GramLattice::determinant() const { return int_determinant(gram_); }

LatticeRef make_lattice(std::string name, std::vector<std::string> basis, IntMatrix gram) {
  return std::make_shared<const GramLattice>(std::move(name), std::move(basis), std::move(gram));
}

LatticeRef direct_sum(const std::string& name, const std::vector<LatticeRef>& parts) {
  std::vector<std::string> basis;
  std::size_t n = 0;
  for (const auto& p : parts) n += p->rank();
  IntMatrix g(n, std::vector<long long>(n, 0));
  std::size_t off = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& p = *parts[k];
    for (const auto& b : p.basis()) basis.push_back(b + "_" + std::to_string(k + 1));
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (std::size_t j = 0; j < p.rank(); ++j) g[off + i][off + j] = p.entry(i, j);
    off += p.rank();
  }
  return make_lattice(name, std::move(basis), std::move(g));
}

namespace {

LatticeRef e8_negative() {
  IntMatrix g(8, std::vector<long long>(8, 0));
  for (int i = 0; i < 8; ++i) g[i][i] = -2;
  auto edge = [&](int a, int b) { g[a][b] = g[b][a] = 1; };
  for (int i = 0; i + 1 < 7; ++i) edge(i, i + 1);
  edge(4, 7);
  return make_lattice("E8(-1)", {"r1", "r2", "r3", "r4", "r5", "r6", "r7", "r8"}, g);
}

}  // namespace

LatticeRef catalogue_lattice(std::string_view name) {
  if (name == "U") return make_lattice("U", {"E1", "E2"}, {{0, 1}, {1, 0}});
  if (name == "U(2)") return make_lattice("U(2)", {"E1", "E2"}, {{0, 2}, {2, 0}});
  if (name == "<2>") return make_lattice("<2>", {"H"}, {{2}});
  if (name == "<-2>") return make_lattice("<-2>", {"R"}, {{-2}});
  if (name == "E8(-1)") return e8_negative();
  if (name == "K3") {
    auto u = catalogue_lattice("U");
    auto e8 = e8_negative();
    return direct_sum("K3", {u, u, u, e8, e8});
  }
  static const std::regex bracket(R"(\[\s*(-?\d+)\s+(-?\d+)\s+(-?\d+)\s*\])");
  std::cmatch mt;
  const std::string s(name);
  if (std::regex_match(s.c_str(), mt, bracket)) {
    const long long a = std::stoll(mt[1]), b = std::stoll(mt[2]), c = std::stoll(mt[3]);
    std::vector<std::string> basis = {"E1", "E2"};
    if (a == 4 && b == 5 && c == 2) basis = {"H", "C"};
    return make_lattice("[" + std::to_string(a) + " " + std::to_string(b) + " " +
                            std::to_string(c) + "]",
                        basis, {{a, b}, {b, c}});
  }
  throw InvalidArgument("unknown lattice '" + s + "'");
}

std::vector<std::string> catalogue_names() {
  return {"U", "U(2)", "<2>", "<-2>", "[4 5 2]", "E8(-1)", "K3"};
}

LatticeClass::LatticeClass(LatticeRef lattice, std::vector<long long> coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (!lattice_) throw InvalidArgument("class without a lattice");
  if (coords_.size() != lattice_->rank())
    throw InvalidArgument("class has " + std::to_string(coords_.size()) +
                          " coordinates, lattice rank is " + std::to_string(lattice_->rank()));
}

bool LatticeClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](long long v) { return v == 0; });
}

static void check_same(const LatticeClass& a, const LatticeClass& b) {
  if (a.lattice() != b.lattice() && !(*a.lattice() == *b.lattice()))
    throw LatticeMismatch("classes live in " + a.lattice()->name() + " and " +
                          b.lattice()->name());
}

LatticeClass LatticeClass::operator+(const LatticeClass& o) const {
  check_same(*this, o);
  auto c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return {lattice_, c};
}

LatticeClass LatticeClass::operator-(const LatticeClass& o) const { return *this + o.scaled(-1); }

LatticeClass LatticeClass::scaled(long long k) const {
  auto c = coords_;
  for (auto& v : c) v *= k;
  return {lattice_, c};
}

bool LatticeClass::operator==(const LatticeClass& o) const {
  return *lattice_ == *o.lattice_ && coords_ == o.coords_;
}

std::string LatticeClass::str() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const long long v = coords_[i];
    if (!v) continue;
    if (s.empty())
      s += v < 0 ? "-" : "";
    else
      s += v < 0 ? " - " : " + ";
    const long long mag = v < 0 ? -v : v;
    if (mag != 1) s += std::to_string(mag) + "*";
    s += lattice_->basis()[i];
  }
  return s.empty() ? "0" : s;
}

long long pair(const LatticeClass& a, const LatticeClass& b) {
  check_same(a, b);
  const auto& g = a.lattice()->gram();
  long long total = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) total += a.coords()[i] * g[i][j] * b.coords()[j];
  return total;
}

long long self_int(const LatticeClass& d) { return pair(d, d); }

long long genus(const LatticeClass& d) {
  const long long sq = self_int(d);
  if (sq % 2 != 0) throw OddSquare("D^2 = " + std::to_string(sq));
  return sq / 2 + 1;
}

GramResult gram_of(const std::vector<LatticeClass>& classes) {
  GramResult r;
  r.gram.assign(classes.size(), std::vector<long long>(classes.size(), 0));
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j) r.gram[i][j] = pair(classes[i], classes[j]);
  r.det = int_determinant(r.gram);
  return r;
}

std::vector<long long> kernel_relation(const IntMatrix& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(g[i][j]);
  // Reduced row echelon form.
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    const mpq_class inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpq_class f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col_of_row.push_back(static_cast<int>(c));
    is_pivot[c] = true;
    ++r;
  }
  if (n - r != 1)
    throw InvalidArgument("null space has dimension " + std::to_string(n - r) + ", expected 1");
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<mpq_class> v(n, 0);
  v[free_col] = 1;
  for (std::size_t i = 0; i < r; ++i) v[static_cast<std::size_t>(pivot_col_of_row[i])] = -a[i][free_col];
  mpz_class l = 1, gg = 0;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> w;
  for (const auto& x : v) {
    mpz_class num = x.get_num() * (l / x.get_den());
    w.push_back(num);
    mpz_gcd(gg.get_mpz_t(), gg.get_mpz_t(), num.get_mpz_t());
  }
  int sign = 0;
  for (const auto& x : w)
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  std::vector<long long> out;
  for (const auto& x : w) out.push_back(mpz_class(x / gg * sign).get_si());
  return out;
}

}  // namespace hoppe
