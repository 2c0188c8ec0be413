#include "hoppe/polycore/ambient.hpp"

#include <algorithm>
#include <set>

#include "hoppe/common/error.hpp"

namespace hoppe {

MultiDegree MultiDegree::operator+(const MultiDegree& o) const {
  if (arity() != o.arity()) throw AmbientMismatch("multidegree arity mismatch");
  MultiDegree r = *this;
  for (std::size_t i = 0; i < arity(); ++i) r.c_[i] += o.c_[i];
  return r;
}

MultiDegree MultiDegree::operator-(const MultiDegree& o) const { return *this + (-o); }

MultiDegree MultiDegree::operator-() const { return scaled(-1); }

MultiDegree MultiDegree::scaled(int k) const {
  MultiDegree r = *this;
  for (auto& v : r.c_) v *= k;
  return r;
}

bool MultiDegree::leq(const MultiDegree& o) const {
  if (arity() != o.arity()) return false;
  for (std::size_t i = 0; i < arity(); ++i)
    if (c_[i] > o.c_[i]) return false;
  return true;
}

bool MultiDegree::any_negative() const {
  return std::any_of(c_.begin(), c_.end(), [](int v) { return v < 0; });
}

std::string MultiDegree::str() const {
  if (c_.size() == 1) return std::to_string(c_[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

Ambient::Ambient(Kind kind, std::vector<int> dims, std::vector<std::string> names)
    : kind_(kind), dims_(std::move(dims)), names_(std::move(names)) {
  int expected = 0;
  for (int d : dims_) {
    if (d < 1) throw InvalidArgument("projective factor dimension must be >= 1");
    expected += d + 1;
  }
  if (static_cast<int>(names_.size()) != expected)
    throw InvalidArgument("ambient needs " + std::to_string(expected) + " variable names");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || n[0] < 'a' || n[0] > 'z' ||
        !std::all_of(n.begin() + 1, n.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw InvalidArgument("variable name '" + n + "' does not match [a-z][0-9]*");
    if (!seen.insert(n).second) throw InvalidArgument("duplicate variable name '" + n + "'");
  }
}

static std::vector<std::string> numbered(char letter, int count) {
  std::vector<std::string> v;
  for (int i = 0; i < count; ++i) v.push_back(std::string(1, letter) + std::to_string(i));
  return v;
}

Ambient Ambient::projective(int n) { return projective(n, numbered('x', n + 1)); }

Ambient Ambient::projective(int n, std::vector<std::string> names) {
  return Ambient(Kind::Projective, {n}, std::move(names));
}

Ambient Ambient::product(int n1, int n2) {
  auto names = numbered('x', n1 + 1);
  auto ys = numbered('y', n2 + 1);
  names.insert(names.end(), ys.begin(), ys.end());
  return product(n1, n2, std::move(names));
}

Ambient Ambient::product(int n1, int n2, std::vector<std::string> names) {
  return Ambient(Kind::ProductProjective, {n1, n2}, std::move(names));
}

int Ambient::dimension() const {
  int d = 0;
  for (int v : dims_) d += v;
  return d;
}

std::optional<int> Ambient::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

int Ambient::group_begin(std::size_t g) const {
  int b = 0;
  for (std::size_t i = 0; i < g; ++i) b += dims_[i] + 1;
  return b;
}

int Ambient::group_of(int var) const {
  int b = 0;
  for (std::size_t g = 0; g < dims_.size(); ++g) {
    b += dims_[g] + 1;
    if (var < b) return static_cast<int>(g);
  }
  throw IndexOutOfRange("variable index " + std::to_string(var));
}

MultiDegree Ambient::var_degree(int var) const {
  MultiDegree d = MultiDegree::zero(grading());
  d[static_cast<std::size_t>(group_of(var))] = 1;
  return d;
}

long long Ambient::intersect(const MultiDegree& a, const MultiDegree& b) const {
  if (a.arity() != grading() || b.arity() != grading())
    throw AmbientMismatch("class arity does not match ambient grading");
  if (kind_ == Kind::Projective) {
    if (dims_[0] < 2) return 0;
    return static_cast<long long>(a[0]) * b[0];
  }
  if (dims_[0] == 1 && dims_[1] == 1)
    return static_cast<long long>(a[0]) * b[1] + static_cast<long long>(a[1]) * b[0];
  throw UnsupportedOperation("intersection form only implemented for P^n and P^1xP^1");
}

std::string Ambient::describe() const {
  if (kind_ == Kind::Projective) return "P^" + std::to_string(dims_[0]);
  return "P^" + std::to_string(dims_[0]) + "xP^" + std::to_string(dims_[1]);
}

}  // namespace hoppe
