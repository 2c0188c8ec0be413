#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace hoppe {

using IntMatrix = std::vector<std::vector<long long>>;

// Integral symmetric bilinear form with a named basis. Catalogued lattices
// are even and nondegenerate; both properties are checked on construction.
class GramLattice {
 public:
  GramLattice(std::string name, std::vector<std::string> basis, IntMatrix gram);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const IntMatrix& gram() const { return gram_; }
  long long entry(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  mpz_class determinant() const;

  bool operator==(const GramLattice& o) const { return basis_ == o.basis_ && gram_ == o.gram_; }

 private:
  std::string name_;
  std::vector<std::string> basis_;
  IntMatrix gram_;
};

using LatticeRef = std::shared_ptr<const GramLattice>;

LatticeRef make_lattice(std::string name, std::vector<std::string> basis, IntMatrix gram);

// Catalogue: "U", "U(2)", "<2>", "<-2>", "[4 5 2]", "E8(-1)", "K3", and any
// rank-2 "[a b c]" in the notation Gram = [[a,b],[b,c]].
LatticeRef catalogue_lattice(std::string_view name);
std::vector<std::string> catalogue_names();

// Orthogonal direct sum.
LatticeRef direct_sum(const std::string& name, const std::vector<LatticeRef>& parts);

class LatticeClass {
 public:
  LatticeClass(LatticeRef lattice, std::vector<long long> coords);

  const LatticeRef& lattice() const { return lattice_; }
  const std::vector<long long>& coords() const { return coords_; }
  bool is_zero() const;

  LatticeClass operator+(const LatticeClass& o) const;
  LatticeClass operator-(const LatticeClass& o) const;
  LatticeClass scaled(long long k) const;
  bool operator==(const LatticeClass& o) const;

  std::string str() const;  // "2*E1 + 2*E2"

 private:
  LatticeRef lattice_;
  std::vector<long long> coords_;
};

long long pair(const LatticeClass& a, const LatticeClass& b);
long long self_int(const LatticeClass& d);
// Adjunction on a K3 surface: D^2 = 2g - 2.
long long genus(const LatticeClass& d);

struct GramResult {
  IntMatrix gram;
  mpz_class det;
};

GramResult gram_of(const std::vector<LatticeClass>& classes);
mpz_class int_determinant(const IntMatrix& m);

// A primitive integer vector c with G c = 0, when the null space of the
// symmetric matrix G is one-dimensional. A numerical relation
// sum c_i v_i == 0 between the classes whose Gram matrix is G.
std::vector<long long> kernel_relation(const IntMatrix& g);

}  // namespace hoppe
