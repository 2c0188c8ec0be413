#include "hoppe/polycore/polynomial.hpp"

#include <algorithm>

#include "hoppe/common/error.hpp"

namespace hoppe {

bool canonical_before(const Ambient& ambient, const Exponent& a, const Exponent& b) {
  for (std::size_t g = 0; g < ambient.grading(); ++g) {
    const int begin = ambient.group_begin(g);
    const int end = begin + ambient.group_size(g);
    int da = 0, db = 0;
    for (int i = begin; i < end; ++i) {
      da += a[static_cast<std::size_t>(i)];
      db += b[static_cast<std::size_t>(i)];
    }
    if (da != db) return da > db;
    for (int i = begin; i < end; ++i) {
      const auto ai = a[static_cast<std::size_t>(i)], bi = b[static_cast<std::size_t>(i)];
      if (ai != bi) return ai > bi;
    }
  }
  return false;
}

MultiDegree exponent_degree(const Ambient& ambient, const Exponent& e) {
  MultiDegree d = MultiDegree::zero(ambient.grading());
  for (int i = 0; i < ambient.num_vars(); ++i)
    d[static_cast<std::size_t>(ambient.group_of(i))] += e[static_cast<std::size_t>(i)];
  return d;
}

namespace {

// Exponent tuples of length `len` summing to `deg`, lexicographically descending.
void compositions(int len, int deg, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (len == 1) {
    cur.push_back(deg);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = deg; v >= 0; --v) {
    cur.push_back(v);
    compositions(len - 1, deg - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Exponent> monomial_basis(const Ambient& ambient, const MultiDegree& d) {
  if (d.arity() != ambient.grading()) throw AmbientMismatch("degree arity " + d.str());
  if (d.any_negative()) return {};
  std::vector<std::vector<std::vector<int>>> per_group;
  for (std::size_t g = 0; g < ambient.grading(); ++g) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    compositions(ambient.group_size(g), d[g], cur, parts);
    per_group.push_back(std::move(parts));
  }
  std::vector<Exponent> out{Exponent{}};
  for (const auto& parts : per_group) {
    std::vector<Exponent> next;
    next.reserve(out.size() * parts.size());
    for (const auto& prefix : out)
      for (const auto& part : parts) {
        Exponent e = prefix;
        e.insert(e.end(), part.begin(), part.end());
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

RationalPolynomial::RationalPolynomial(Ambient ambient) : ambient_(std::move(ambient)) {}

RationalPolynomial RationalPolynomial::constant(const Ambient& ambient, const mpq_class& c) {
  return monomial(ambient, Exponent(static_cast<std::size_t>(ambient.num_vars()), 0), c);
}

RationalPolynomial RationalPolynomial::variable(const Ambient& ambient, int index) {
  if (index < 0 || index >= ambient.num_vars()) throw IndexOutOfRange("variable index");
  Exponent e(static_cast<std::size_t>(ambient.num_vars()), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(ambient, std::move(e));
}

RationalPolynomial RationalPolynomial::monomial(const Ambient& ambient, Exponent e,
                                                const mpq_class& c) {
  if (static_cast<int>(e.size()) != ambient.num_vars())
    throw AmbientMismatch("exponent length does not match ambient");
  for (int v : e)
    if (v < 0) throw InvalidArgument("negative exponent");
  RationalPolynomial p(ambient);
  p.add_term(e, c);
  return p;
}

bool RationalPolynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

mpq_class RationalPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

std::optional<MultiDegree> RationalPolynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  MultiDegree d = exponent_degree(ambient_, terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (exponent_degree(ambient_, e) != d) return std::nullopt;
  return d;
}

bool RationalPolynomial::is_homogeneous_of(const MultiDegree& d) const {
  for (const auto& [e, c] : terms_)
    if (exponent_degree(ambient_, e) != d) return false;
  return true;
}

void RationalPolynomial::add_term(const Exponent& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void RationalPolynomial::check_same_ambient(const RationalPolynomial& o) const {
  if (!(ambient_ == o.ambient_)) throw AmbientMismatch("polynomials live in different ambients");
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  check_same_ambient(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
  RationalPolynomial r = *this;
  r += o;
  return r;
}

RationalPolynomial RationalPolynomial::operator-() const { return scaled(-1); }

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const {
  return *this + (-o);
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
  check_same_ambient(o);
  RationalPolynomial r(ambient_);
  Exponent e(static_cast<std::size_t>(ambient_.num_vars()));
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

RationalPolynomial RationalPolynomial::scaled(const mpq_class& c) const {
  RationalPolynomial r(ambient_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

RationalPolynomial RationalPolynomial::pow(unsigned k) const {
  RationalPolynomial result = constant(ambient_, 1);
  RationalPolynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

bool RationalPolynomial::operator==(const RationalPolynomial& o) const {
  return ambient_ == o.ambient_ && terms_ == o.terms_;
}

std::string RationalPolynomial::render() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [this](auto* a, auto* b) {
    return canonical_before(ambient_, a->first, b->first);
  });
  std::string out;
  bool first = true;
  for (const auto* term : order) {
    const auto& [e, c] = *term;
    mpq_class mag = abs(c);
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < ambient_.num_vars(); ++i) {
      const int v = e[static_cast<std::size_t>(i)];
      if (!v) continue;
      if (!mono.empty()) mono += "*";
      mono += ambient_.var_name(i);
      if (v > 1) mono += "^" + std::to_string(v);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

RationalPolynomial substitute(const RationalPolynomial& p,
                              const std::map<std::string, RationalPolynomial>& assignment,
                              const Ambient& target) {
  for (const auto& [name, value] : assignment) {
    if (!p.ambient().var_index(name))
      throw AmbientMismatch("assigned variable '" + name + "' is not in the source ambient");
    if (!(value.ambient() == target))
      throw AmbientMismatch("value for '" + name + "' does not live in the target ambient");
  }
  const Ambient& src = p.ambient();
  std::vector<RationalPolynomial> images;
  for (int i = 0; i < src.num_vars(); ++i) {
    const auto& name = src.var_name(i);
    auto it = assignment.find(name);
    if (it != assignment.end()) {
      images.push_back(it->second);
    } else if (auto j = target.var_index(name)) {
      images.push_back(RationalPolynomial::variable(target, *j));
    } else {
      images.push_back(RationalPolynomial(target));
      // Only an error if the variable actually occurs.
      for (const auto& [e, c] : p.terms())
        if (e[static_cast<std::size_t>(i)] > 0)
          throw AmbientMismatch("variable '" + name + "' is neither assigned nor in the target");
    }
  }
  RationalPolynomial result(target);
  for (const auto& [e, c] : p.terms()) {
    RationalPolynomial term = RationalPolynomial::constant(target, c);
    for (int i = 0; i < src.num_vars(); ++i) {
      const int v = e[static_cast<std::size_t>(i)];
      if (v) term = term * images[static_cast<std::size_t>(i)].pow(static_cast<unsigned>(v));
      if (term.is_zero()) break;
    }
    result += term;
  }
  return result;
}

}  // namespace hoppe
