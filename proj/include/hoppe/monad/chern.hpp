#pragma once

#include <string>

#include "hoppe/monad/monad.hpp"

namespace hoppe {

// Chern data of a bundle on a surface (or P^n with c2 in h^2 units): c1 in
// the hyperplane-class basis, c2 an integer against the intersection form.
struct ChernData {
  long long rank = 0;
  MultiDegree c1;
  long long c2 = 0;

  bool operator==(const ChernData&) const = default;
  std::string str() const;
};

ChernData chern_free(const FreeSheaf& f);

// Total Chern class product truncated at degree 2.
ChernData whitney(const Ambient& amb, const ChernData& f, const ChernData& g);

// c(G) / c(Q): the Chern data of the third term of a short exact sequence
// whose other terms are G (middle) and Q.
ChernData chern_divide(const Ambient& amb, const ChernData& g, const ChernData& q);

ChernData chern_monad(const MonadComplex& m);

// c1 -> -c1, c2 unchanged.
ChernData dual(const ChernData& c);

long long c1_squared(const Ambient& amb, const ChernData& c);

}  // namespace hoppe
