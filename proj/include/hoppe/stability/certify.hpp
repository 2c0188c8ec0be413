#pragma once

#include "hoppe/k3lat/cover.hpp"
#include "hoppe/stability/certificate.hpp"

namespace hoppe {

// Generalised Hoppe criterion on P^2 or P^1 x P^1: Stable when
// h^0((Lambda^s E)(L)) = 0 for every 1 <= s < rank and every L in the
// region deg_H(L) <= -s*mu(E). A nonzero h^0 gives Inconclusive.
StabilityCertificate certify(const MonadComplex& m, const Polarization& H,
                             const CertifyOptions& options = {});

struct TransferredStatement {
  std::string rule;
  std::string statement;
  CoverChern cover_chern;
  // Degree bounds -s*mu doubled on the cover, per s.
  std::vector<long long> cover_degree_bounds;
};

// Stability of pi^*E on a double cover, given a Stable certificate for E.
TransferredStatement pullback_transfer(const StabilityCertificate& cert, const CoverSpec& cover);

}  // namespace hoppe
