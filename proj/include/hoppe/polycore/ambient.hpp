#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hoppe {

// A tuple of integers, one per grading component. Used for twists,
// multidegrees of polynomials and first Chern classes.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<int> components) : c_(std::move(components)) {}
  MultiDegree(std::initializer_list<int> components) : c_(components) {}

  static MultiDegree zero(std::size_t arity) { return MultiDegree(std::vector<int>(arity, 0)); }

  std::size_t arity() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<int>& components() const { return c_; }

  MultiDegree operator+(const MultiDegree& o) const;
  MultiDegree operator-(const MultiDegree& o) const;
  MultiDegree operator-() const;
  MultiDegree scaled(int k) const;

  // Componentwise partial order.
  bool leq(const MultiDegree& o) const;
  bool any_negative() const;

  // Lexicographic total order, for use as a map key.
  auto operator<=>(const MultiDegree&) const = default;
  bool operator==(const MultiDegree&) const = default;

  // "3" for arity 1, "(1,-2)" otherwise.
  std::string str() const;

 private:
  std::vector<int> c_;
};

class Ambient {
 public:
  enum class Kind { Projective, ProductProjective };

  static Ambient projective(int n);
  static Ambient projective(int n, std::vector<std::string> names);
  static Ambient product(int n1, int n2);
  static Ambient product(int n1, int n2, std::vector<std::string> names);

  Kind kind() const { return kind_; }
  bool is_product() const { return kind_ == Kind::ProductProjective; }
  std::size_t grading() const { return dims_.size(); }
  const std::vector<int>& dims() const { return dims_; }
  int dimension() const;
  int num_vars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& var_names() const { return names_; }
  const std::string& var_name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  std::optional<int> var_index(std::string_view name) const;

  int group_of(int var) const;
  int group_begin(std::size_t g) const;
  int group_size(std::size_t g) const { return dims_[g] + 1; }

  // Multidegree of the single variable `var` (a standard basis vector).
  MultiDegree var_degree(int var) const;

  // Intersection product of two divisor classes given in the hyperplane
  // basis. On P^n (n >= 2) it is the coefficient of h^2, on P^1 x P^1 it is
  // (a,b).(c,d) = ad + bc, and on curves it is 0.
  long long intersect(const MultiDegree& a, const MultiDegree& b) const;

  bool is_surface() const { return dimension() == 2; }

  // "P^2", "P^1xP^1".
  std::string describe() const;

  bool operator==(const Ambient&) const = default;

 private:
  Ambient(Kind kind, std::vector<int> dims, std::vector<std::string> names);

  Kind kind_;
  std::vector<int> dims_;
  std::vector<std::string> names_;
};

}  // namespace hoppe
