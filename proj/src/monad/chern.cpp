#include "hoppe/monad/chern.hpp"

#include "hoppe/common/error.hpp"

namespace hoppe {

std::string ChernData::str() const {
  return "rank " + std::to_string(rank) + ", c1 = " + c1.str() + ", c2 = " + std::to_string(c2);
}

ChernData chern_free(const FreeSheaf& f) {
  const Ambient& amb = f.ambient;
  ChernData c{static_cast<long long>(f.rank()), MultiDegree::zero(amb.grading()), 0};
  for (std::size_t i = 0; i < f.twists.size(); ++i) {
    c.c1 = c.c1 + f.twists[i];
    for (std::size_t j = i + 1; j < f.twists.size(); ++j)
      c.c2 += amb.intersect(f.twists[i], f.twists[j]);
  }
  return c;
}

ChernData whitney(const Ambient& amb, const ChernData& f, const ChernData& g) {
  return {f.rank + g.rank, f.c1 + g.c1, f.c2 + g.c2 + amb.intersect(f.c1, g.c1)};
}

ChernData chern_divide(const Ambient& amb, const ChernData& g, const ChernData& q) {
  // c(F) = c(G) / c(Q), truncated: c1 = c1G - c1Q,
  // c2 = c2G - c1G.c1Q + c1Q^2 - c2Q.
  return {g.rank - q.rank, g.c1 - q.c1,
          g.c2 - amb.intersect(g.c1, q.c1) + amb.intersect(q.c1, q.c1) - q.c2};
}

ChernData chern_monad(const MonadComplex& m) {
  require_valid(m);
  const Ambient& amb = m.ambient();
  ChernData k = chern_divide(amb, chern_free(m.B()), chern_free(m.C()));
  if (m.kind() == MonadKind::Kernel) return k;
  // 0 -> A -> K -> E -> 0 gives c(E) = c(K) / c(A).
  return chern_divide(amb, k, chern_free(m.A()));
}

ChernData dual(const ChernData& c) { return {c.rank, -c.c1, c.c2}; }

long long c1_squared(const Ambient& amb, const ChernData& c) { return amb.intersect(c.c1, c.c1); }

}  // namespace hoppe
