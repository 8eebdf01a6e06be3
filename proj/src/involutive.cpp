#include "foliate/involutive.hpp"

#include <map>
#include <utility>

#include "foliate/error.hpp"
#include "foliate/linear_solve.hpp"

namespace foliate {

namespace {

std::vector<Exponent> monomials_up_to(std::size_t nvars, int degree) {
  std::vector<Exponent> out;
  Exponent e(nvars, 0);
  // Enumerate all exponent vectors with total degree <= degree.
  auto rec = [&](auto&& self, std::size_t var, int left) -> void {
    if (var == nvars) {
      out.push_back(e);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[var] = d;
      self(self, var + 1, left - d);
    }
    e[var] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

MultiPoly monomial_on(const std::shared_ptr<const VarList>& vars, const Exponent& e) {
  MultiPoly m(vars);
  m.add_term(e, GaussianRational(1));
  return m;
}

// Solves target = sum_j c^j * gens[j] where each c^j ranges over the given
// monomials; `reduce` maps a raw polynomial to the quotient in which the
// identity is tested.
template <typename Reduce>
std::optional<std::vector<MultiPoly>> solve_membership(const std::vector<std::vector<MultiPoly>>& gens,
                                                       const std::vector<MultiPoly>& target,
                                                       const std::vector<Exponent>& monos,
                                                       const std::shared_ptr<const VarList>& vars,
                                                       Reduce reduce) {
  const std::size_t unknowns = gens.size() * monos.size();
  std::map<std::pair<std::size_t, Exponent>, std::size_t> row_of;
  Matrix a;
  std::vector<GaussianRational> b;
  auto row = [&](std::size_t h, const Exponent& e) -> std::size_t {
    auto [it, inserted] = row_of.try_emplace({h, e}, a.size());
    if (inserted) {
      a.emplace_back(unknowns);
      b.emplace_back();
    }
    return it->second;
  };
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t m = 0; m < monos.size(); ++m) {
      const MultiPoly mono = monomial_on(vars, monos[m]);
      for (std::size_t h = 0; h < gens[j].size(); ++h) {
        const MultiPoly r = reduce(mono * gens[j][h]);
        for (const auto& [e, c] : r.terms()) a[row(h, e)][j * monos.size() + m] += c;
      }
    }
  }
  for (std::size_t h = 0; h < target.size(); ++h) {
    const MultiPoly r = reduce(target[h]);
    for (const auto& [e, c] : r.terms()) b[row(h, e)] += c;
  }
  auto x = solve_linear(std::move(a), std::move(b), unknowns);
  if (!x) return std::nullopt;
  std::vector<MultiPoly> coeffs(gens.size(), MultiPoly(vars));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t m = 0; m < monos.size(); ++m) coeffs[j].add_term(monos[m], (*x)[j * monos.size() + m]);
  }
  return coeffs;
}

}  // namespace

std::string_view verdict_name(InvolutivityVerdict v) {
  switch (v) {
    case InvolutivityVerdict::Involutive: return "involutive";
    case InvolutivityVerdict::NotInvolutive: return "not-involutive";
    case InvolutivityVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

InvolutivityResult involutivity_check(const std::vector<VectorFieldJet>& gens, int degree_bound) {
  if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "no generators given");
  if (degree_bound < 0) throw Error(ErrorCode::InvalidArgument, "degree bound must be nonnegative");
  const IdealSpec& ideal = gens.front().ideal();
  for (const auto& g : gens) {
    if (!(g.ideal() == ideal)) throw Error(ErrorCode::VariableMismatch, "generators over different ideals");
    if (!g.is_logarithmic()) throw Error(ErrorCode::NotLogarithmic, "generator " + g.to_string() + " is not tangent to S(k)");
  }
  std::vector<std::vector<MultiPoly>> raw;
  for (const auto& g : gens) raw.push_back(g.rep().components);

  std::vector<Exponent> monos;
  for (const auto& e : monomials_up_to(ideal.num_variables(), degree_bound)) {
    if (ideal.normal_degree(e) <= ideal.order()) monos.push_back(e);
  }
  auto jet_reduce = [&](const MultiPoly& p) { return truncate_rep(p, ideal.num_normal(), ideal.order()); };

  std::vector<VectorFieldJet> on_s;
  for (const auto& g : gens) on_s.push_back(restrict_to_S(g));
  const IdealSpec& s_ideal = on_s.front().ideal();
  std::vector<std::vector<MultiPoly>> raw_s;
  for (const auto& g : on_s) raw_s.push_back(g.rep().components);

  InvolutivityResult result;
  result.verdict = InvolutivityVerdict::Involutive;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      BracketWitness w{a, b, jet_bracket(gens[a], gens[b]), {}};
      const auto target = w.bracket.rep().components;
      if (auto c = solve_membership(raw, target, monos, ideal.variable_handle(), jet_reduce)) {
        for (const auto& p : *c) w.coefficients.emplace_back(ideal, p);
        result.witnesses.push_back(std::move(w));
        continue;
      }
      // Certificate on S: membership must survive every truncation modulo m^{D+1}.
      const auto target_s = restrict_to_S(w.bracket).rep().components;
      int failed_at = -1;
      for (int d = 0; d <= degree_bound && failed_at < 0; ++d) {
        auto reduce = [d](const MultiPoly& p) {
          return p.filter([d](const Exponent& e) { return total_degree(e) <= d; });
        };
        const auto monos_s = monomials_up_to(s_ideal.num_variables(), d);
        if (!solve_membership(raw_s, target_s, monos_s, s_ideal.variable_handle(), reduce)) failed_at = d;
      }
      result.failure = std::move(w);
      if (failed_at >= 0) {
        result.verdict = InvolutivityVerdict::NotInvolutive;
        result.obstruction_degree = failed_at;
      } else {
        result.verdict = InvolutivityVerdict::Inconclusive;
      }
      return result;
    }
  }
  return result;
}

std::size_t rank_on_S(const std::vector<VectorFieldJet>& gens, std::span<const GaussianRational> point) {
  if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "no generators given");
  const IdealSpec& ideal = gens.front().ideal();
  if (point.size() != ideal.tangential_vars().size()) {
    throw Error(ErrorCode::InvalidArgument, "point needs one value per tangential variable");
  }
  std::vector<GaussianRational> full(ideal.num_variables());
  for (std::size_t t = 0; t < point.size(); ++t) full[ideal.num_normal() + t] = point[t];
  Matrix m;
  for (const auto& g : gens) {
    if (!(g.ideal() == ideal)) throw Error(ErrorCode::VariableMismatch, "generators over different ideals");
    std::vector<GaussianRational> row;
    for (const auto& c : g.components()) row.push_back(c.rep().evaluate(std::span<const GaussianRational>(full)));
    m.push_back(std::move(row));
  }
  return matrix_rank(std::move(m));
}

}  // namespace foliate
