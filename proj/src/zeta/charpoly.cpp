#include "hoppe/zeta/charpoly.hpp"

#include <algorithm>
#include <map>

#include "hoppe/common/error.hpp"
#include "hoppe/zeta/field.hpp"

namespace hoppe {

namespace {

mpz_class ipow(unsigned long b, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

IntPoly normalize(const IntPoly& P, unsigned p) {
  const std::size_t d = static_cast<std::size_t>(P.degree());
  const unsigned long f = d / 2;
  std::vector<mpz_class> r(d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    const mpz_class v = P.coeff(j) * ipow(p, j);
    // Exact by the functional equation.
    mpz_divexact(r[j].get_mpz_t(), v.get_mpz_t(), ipow(p, f).get_mpz_t());
  }
  return IntPoly(std::move(r));
}

// Returns an empty string when P passes, otherwise the reason it fails.
std::string weil_failure(const IntPoly& P, const IntPoly& normalized, unsigned p, int k_alg,
                         int b2) {
  const std::size_t d = static_cast<std::size_t>(P.degree());
  const auto s = power_sums(P, d);
  for (std::size_t i = 1; i <= d; ++i) {
    const mpz_class qi = ipow(p, i);
    const mpz_class t = s[i - 1] + k_alg * qi;
    if (abs(t) > b2 * qi)
      return "implied trace t_" + std::to_string(i) + " = " + t.get_str() + " violates |t| <= " +
             std::to_string(b2) + "q^" + std::to_string(i);
  }
  if (!roots_on_unit_circle(normalized)) return "some root has |alpha| != q";
  return "";
}

std::vector<unsigned long> cyclotomic_indices(unsigned long max_phi) {
  std::vector<unsigned long> ks;
  for (unsigned long k = 1; k <= 2 * max_phi * max_phi + 2; ++k)
    if (euler_phi(k) <= max_phi) ks.push_back(k);
  return ks;
}

void analyse_family(CharpolyCandidate& c, unsigned p, int k_alg, int b2) {
  const std::size_t d = static_cast<std::size_t>(c.poly.degree());
  const std::size_t m = d / 2;
  const IntPoly Tm = IntPoly::monomial(m);
  std::map<mpz_class, std::vector<unsigned long>> values;
  for (auto k : cyclotomic_indices(d)) {
    const IntPoly phi = cyclotomic(k);
    IntPoly q0, r0, q1, r1;
    divmod_monic(c.normalized, phi, q0, r0);
    divmod_monic(Tm, phi, q1, r1);
    // Solve r0 + A r1 = 0 coefficientwise; r1 != 0 since Phi_k does not divide T^m.
    std::size_t i = 0;
    while (r1.coeff(i) == 0) ++i;
    const mpz_class num = -r0.coeff(i);
    if (!mpz_divisible_p(num.get_mpz_t(), r1.coeff(i).get_mpz_t())) continue;
    mpz_class A;
    mpz_divexact(A.get_mpz_t(), num.get_mpz_t(), r1.coeff(i).get_mpz_t());
    if (!(r0 + r1.scaled(A)).is_zero()) continue;
    values[A].push_back(k);
  }
  c.contribution = 0;
  for (const auto& [A, ks] : values) {
    SpecialMiddle s;
    s.middle = A;
    s.forced_by = ks;
    std::vector<mpz_class> a = c.poly.coeffs();
    a[m] = A;
    const IntPoly P(a);
    const IntPoly R = c.normalized + Tm.scaled(A);
    s.factors = cyclotomic_factors(R, d);
    s.cyclotomic_degree = cyclotomic_degree(s.factors);
    s.reason = weil_failure(P, R, p, k_alg, b2);
    s.admissible = s.reason.empty();
    if (s.admissible) {
      s.reason = "all roots on |T| = q";
      c.contribution = std::max(c.contribution, s.cyclotomic_degree);
    }
    c.specials.push_back(std::move(s));
  }
}

}  // namespace

ZetaProfile assemble_charpoly(const std::vector<std::uint64_t>& counts, unsigned p, int k_alg) {
  if (k_alg < 0 || k_alg > 4) throw InvalidArgument("k_alg must lie in 0..4");
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  ZetaProfile prof;
  prof.p = p;
  prof.k_alg = k_alg;
  prof.counts = counts;
  const std::size_t d = static_cast<std::size_t>(prof.b2 - k_alg);
  const std::size_t needed = (d - 1) / 2;
  if (counts.size() < needed)
    throw InsufficientCounts("need N_1..N_" + std::to_string(needed) + ", got " +
                             std::to_string(counts.size()));

  std::vector<mpq_class> s;
  for (std::size_t i = 1; i <= counts.size(); ++i) {
    const mpz_class qi = ipow(p, i);
    const mpz_class t = mpz_class(static_cast<unsigned long>(counts[i - 1])) - 1 - qi * qi;
    if (!t.fits_slong_p()) throw TooLarge("trace does not fit in 64 bits");
    prof.traces.push_back(t.get_si());
    prof.weil_ok.push_back(abs(t) <= prof.b2 * qi);
    prof.power_sums.push_back(t - k_alg * qi);
    s.emplace_back(prof.power_sums.back());
  }
  for (const auto& e : newton_elementary(s)) {
    if (e.get_den() != 1)
      throw NoConsistentCandidate("Newton's identities give the non-integer " + e.get_str());
    prof.elementary.push_back(e.get_num());
  }
  for (std::size_t k = d + 1; k < prof.elementary.size(); ++k)
    if (prof.elementary[k] != 0)
      throw NoConsistentCandidate("e_" + std::to_string(k) + " != 0 beyond the degree " +
                                  std::to_string(d));
  const std::size_t known = std::min(prof.elementary.size() - 1, d);
  auto coeff_from_e = [&](std::size_t k) -> mpz_class {
    return k % 2 == 0 ? prof.elementary[k] : mpz_class(-prof.elementary[k]);
  };

  for (int sign : {1, -1}) {
    CharpolyCandidate c;
    c.sign = sign;
    std::vector<mpz_class> a(d + 1, 0);
    a[d] = 1;
    const std::size_t upper = d / 2 + 1;  // a_j for j >= upper come from the counts
    for (std::size_t k = 1; d - k >= upper && k <= known; ++k) a[d - k] = coeff_from_e(k);
    const bool has_middle = d % 2 == 0;
    const std::size_t m = d / 2;
    if (has_middle) {
      if (sign == -1) {
        a[m] = 0;
        if (known >= m && prof.elementary[m] != 0) {
          c.eliminated = true;
          c.reason = "sign -1 forces e_" + std::to_string(m) + " = 0, counts give " +
                     prof.elementary[m].get_str();
        }
      } else if (known >= m) {
        a[m] = coeff_from_e(m);
      } else {
        c.free_middle = true;
      }
    }
    for (std::size_t j = 0; 2 * j < d; ++j) a[j] = sign * ipow(p, d - 2 * j) * a[d - j];
    c.poly = IntPoly(a);
    c.normalized = normalize(c.poly, p);

    if (!c.eliminated && !c.free_middle) {
      const auto ps = power_sums(c.poly, counts.size());
      for (std::size_t i = 0; i < ps.size() && !c.eliminated; ++i)
        if (ps[i] != prof.power_sums[i]) {
          c.eliminated = true;
          c.reason = "predicts a different N_" + std::to_string(i + 1);
        }
      if (!c.eliminated) {
        c.reason = weil_failure(c.poly, c.normalized, p, k_alg, prof.b2);
        c.eliminated = !c.reason.empty();
      }
      if (!c.eliminated) {
        c.factors = cyclotomic_factors(c.normalized, d);
        c.contribution = cyclotomic_degree(c.factors);
        c.reason = "all roots on |T| = q";
      }
    } else if (c.free_middle) {
      c.reason = "N_1..N_" + std::to_string(counts.size()) + " leave a_" + std::to_string(m) +
                 " free; the bound is taken over every admissible value";
      analyse_family(c, p, k_alg, prof.b2);
    }
    prof.candidates.push_back(std::move(c));
  }
  return prof;
}

int rank_upper_bound(const ZetaProfile& profile) {
  int best = -1;
  for (const auto& c : profile.candidates)
    if (!c.eliminated) best = std::max(best, c.contribution);
  if (best < 0) throw NoCandidate("every characteristic polynomial candidate was eliminated");
  return profile.k_alg + best;
}

namespace {

nlohmann::ordered_json coeff_list(const IntPoly& P) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (int i = 0; i <= P.degree(); ++i) a.push_back(P.coeff(static_cast<std::size_t>(i)).get_str());
  return a;
}

nlohmann::ordered_json factor_list(const std::vector<CyclotomicFactor>& f) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& x : f) a.push_back({{"k", x.k}, {"multiplicity", x.multiplicity}});
  return a;
}

}  // namespace

nlohmann::ordered_json to_json(const ZetaProfile& prof) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["kind"] = "zeta-profile";
  j["p"] = prof.p;
  j["k_alg"] = prof.k_alg;
  j["b2"] = prof.b2;
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < prof.counts.size(); ++i) {
    ordered_json r;
    r["n"] = i + 1;
    r["q"] = ipow(prof.p, i + 1).get_str();
    r["N"] = prof.counts[i];
    r["trace"] = prof.traces[i];
    r["weil_ok"] = static_cast<bool>(prof.weil_ok[i]);
    rows.push_back(r);
  }
  j["counts"] = rows;
  ordered_json ps = ordered_json::array(), es = ordered_json::array();
  for (const auto& v : prof.power_sums) ps.push_back(v.get_str());
  for (const auto& v : prof.elementary) es.push_back(v.get_str());
  j["power_sums"] = ps;
  j["elementary"] = es;
  ordered_json cands = ordered_json::array();
  for (const auto& c : prof.candidates) {
    ordered_json x;
    x["sign"] = c.sign;
    x["free_middle"] = c.free_middle;
    x["eliminated"] = c.eliminated;
    x["reason"] = c.reason;
    x["coefficients"] = coeff_list(c.poly);
    x["normalized"] = coeff_list(c.normalized);
    x["cyclotomic"] = factor_list(c.factors);
    ordered_json sp = ordered_json::array();
    for (const auto& s : c.specials) {
      ordered_json y;
      y["middle"] = s.middle.get_str();
      y["forced_by"] = s.forced_by;
      y["cyclotomic"] = factor_list(s.factors);
      y["cyclotomic_degree"] = s.cyclotomic_degree;
      y["admissible"] = s.admissible;
      y["reason"] = s.reason;
      sp.push_back(y);
    }
    x["specials"] = sp;
    x["contribution"] = c.contribution;
    cands.push_back(x);
  }
  j["candidates"] = cands;
  try {
    j["rank_upper_bound"] = rank_upper_bound(prof);
  } catch (const NoCandidate&) {
    j["rank_upper_bound"] = nullptr;
  }
  return j;
}

}  // namespace hoppe
