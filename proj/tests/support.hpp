#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "foliate/cli/expression.hpp"
#include "foliate/jet.hpp"
#include "foliate/rational_function.hpp"

namespace testing {

using namespace foliate;

using Rng = std::mt19937_64;

inline MultiPoly P(const std::string& text, const VarList& vars) { return cli::parse_polynomial(text, vars); }
inline RationalFunction R(const std::string& text, const VarList& vars) { return cli::parse_rational(text, vars); }

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long range = 5, long max_den = 3) {
  return Rational(uniform(rng, -range, range), uniform(rng, 1, max_den));
}

inline GaussianRational random_nonzero(Rng& rng) {
  Rational r;
  while (r.is_zero()) r = random_rational(rng);
  return r;
}

inline Exponent random_exponent(Rng& rng, std::size_t n, int max_degree) {
  Exponent e(n, 0);
  int budget = static_cast<int>(uniform(rng, 0, max_degree));
  while (budget > 0) {
    e[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1))] += 1;
    --budget;
  }
  return e;
}

inline MultiPoly random_poly(Rng& rng, const std::shared_ptr<const VarList>& vars, int max_degree, int max_terms) {
  MultiPoly p(vars);
  const long terms = uniform(rng, 0, max_terms);
  for (long t = 0; t < terms; ++t) p.add_term(random_exponent(rng, vars->size(), max_degree), random_rational(rng));
  return p;
}

inline MultiPoly random_poly(Rng& rng, const IdealSpec& ideal, int max_degree = 3, int max_terms = 4) {
  return random_poly(rng, ideal.variable_handle(), max_degree, max_terms);
}

/// Random polynomial with a nonzero constant term.
inline MultiPoly random_unit(Rng& rng, const std::shared_ptr<const VarList>& vars, int max_degree, int max_terms) {
  MultiPoly p = random_poly(rng, vars, max_degree, max_terms);
  p -= MultiPoly(vars).constant_like(p.constant_term());
  return p + MultiPoly(vars).constant_like(random_nonzero(rng));
}

/// Random element of I_S^power.
inline MultiPoly random_in_power(Rng& rng, const IdealSpec& ideal, int power, int max_degree = 2, int max_terms = 3) {
  MultiPoly out = ideal.zero();
  const std::size_t m = ideal.num_normal();
  for (int t = 0; t < max_terms; ++t) {
    Exponent mu(ideal.num_variables(), 0);
    for (int d = 0; d < power; ++d) mu[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(m) - 1))] += 1;
    MultiPoly mono(ideal.variable_handle());
    mono.add_term(mu, GaussianRational(1));
    out += mono * random_poly(rng, ideal, max_degree, 2);
  }
  return out;
}

/// Raw field whose normal components lie in I_S.
inline VectorFieldRep random_log_rep(Rng& rng, const IdealSpec& ideal) {
  VectorFieldRep r = VectorFieldRep::zero(ideal);
  for (std::size_t h = 0; h < ideal.num_variables(); ++h) {
    r.components[h] = ideal.is_normal(h) ? random_in_power(rng, ideal, 1) : random_poly(rng, ideal);
  }
  return r;
}

inline VectorFieldJet random_log_field(Rng& rng, const IdealSpec& ideal) {
  return classify_field(random_log_rep(rng, ideal));
}

/// Field plus a random I_S^{k+1} perturbation of every component.
inline VectorFieldRep perturb(Rng& rng, const VectorFieldRep& v) {
  VectorFieldRep out = v;
  for (auto& c : out.components) c += random_in_power(rng, v.ideal, v.ideal.order() + 1);
  return out;
}

/// Tangent to S(1) and preserving the foliation along S: non-foliation
/// tangential components do not depend on foliation variables on S.
inline VectorFieldJet random_tangential_field(Rng& rng, const IdealSpec& ideal, const VarList& foliation) {
  VectorFieldRep r = VectorFieldRep::zero(ideal);
  for (std::size_t h = 0; h < ideal.num_variables(); ++h) {
    const std::string& name = ideal.variables()[h];
    if (ideal.is_normal(h)) {
      r.components[h] = random_in_power(rng, ideal, 1);
    } else if (std::find(foliation.begin(), foliation.end(), name) != foliation.end()) {
      r.components[h] = random_poly(rng, ideal);
    } else {
      MultiPoly on_s = random_poly(rng, ideal);
      for (const auto& f : foliation) on_s = on_s.bind(f, GaussianRational());
      r.components[h] = on_s + random_in_power(rng, ideal, 1);
    }
  }
  return classify_field(r);
}

}  // namespace testing
