#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hoppe/polycore/poly_matrix.hpp"

namespace hoppe {

struct FreeSheaf {
  Ambient ambient;
  std::vector<MultiDegree> twists;

  std::size_t rank() const { return twists.size(); }
};

enum class MonadKind { Kernel, Homology };

// A -a-> B -b-> C. map_b has rank(C) rows and rank(B) columns; map_a has
// rank(B) rows and rank(A) columns and is absent exactly when A = 0.
class MonadComplex {
 public:
  MonadComplex(std::string name, FreeSheaf a, FreeSheaf b, FreeSheaf c,
               std::optional<PolyMatrix> map_a, PolyMatrix map_b);

  const std::string& name() const { return name_; }
  MonadKind kind() const { return A_.rank() == 0 ? MonadKind::Kernel : MonadKind::Homology; }
  const Ambient& ambient() const { return B_.ambient; }
  const FreeSheaf& A() const { return A_; }
  const FreeSheaf& B() const { return B_; }
  const FreeSheaf& C() const { return C_; }
  const std::optional<PolyMatrix>& map_a() const { return map_a_; }
  const PolyMatrix& map_b() const { return map_b_; }

  // Rank of the bundle the monad describes.
  std::size_t bundle_rank() const;

  // Extension hook for Gaussian-rational coefficients: entry (i,j) of a map
  // is re + i*im where `im` is stored here. Absent means purely rational.
  void set_imaginary_parts(std::optional<PolyMatrix> a_im, std::optional<PolyMatrix> b_im);
  const std::optional<PolyMatrix>& imaginary_a() const { return imag_a_; }
  const std::optional<PolyMatrix>& imaginary_b() const { return imag_b_; }

 private:
  std::string name_;
  FreeSheaf A_, B_, C_;
  std::optional<PolyMatrix> map_a_;
  PolyMatrix map_b_;
  std::optional<PolyMatrix> imag_a_, imag_b_;
};

enum class MapStatus {
  ProvedByMonomialCover,
  ProvedByRandomizedRank,
  RefutedByCommonZero,
  RefutedAtSamplePoint,
  Unknown,
  NotApplicable,
};

std::string to_string(MapStatus s);

struct ValidationReport {
  bool homogeneous = true;
  std::string homogeneity_detail;
  bool composite_zero = true;
  MapStatus surjectivity_b = MapStatus::Unknown;
  MapStatus injectivity_a = MapStatus::NotApplicable;
  int randomized_trials = 0;

  // Homogeneity and b.a = 0: the conditions downstream computations rely on.
  bool structural_ok() const { return homogeneous && composite_zero; }
};

ValidationReport validate(const MonadComplex& m, int random_trials = 16);

// Throws ValidationError unless validate() passes its structural checks.
void require_valid(const MonadComplex& m);

// True iff every coefficient is rational, i.e. no imaginary part is attached.
bool is_real(const MonadComplex& m);

// Substitutes the variable group `axis` (1 or 2) of a P^1 x P^1 monad at
// the point [a:b], giving a monad on the surviving P^1.
MonadComplex restrict_to_fiber(const MonadComplex& m, int axis, std::pair<long, long> point);

}  // namespace hoppe
