#include "foliate/rational_jet.hpp"

#include "foliate/error.hpp"

namespace foliate {

namespace {

MultiPoly normal_free_part(const MultiPoly& p, const IdealSpec& ideal) {
  return p.filter([&](const Exponent& e) { return ideal.normal_degree(e) == 0; });
}

}  // namespace

RationalJet::RationalJet(IdealSpec ideal, const MultiPoly& num)
    : RationalJet(ideal, num, ideal.constant(GaussianRational(1))) {}

RationalJet::RationalJet(IdealSpec ideal, const MultiPoly& num, const MultiPoly& den)
    : ideal_(std::move(ideal)) {
  den_ = ideal_.adopt(den);
  if (den_.constant_term().is_zero()) {
    throw Error(ErrorCode::ZeroDenominator, "denominator " + den_.to_string() + " vanishes at the chart center");
  }
  for (const auto& [e, c] : den_.terms()) {
    if (ideal_.normal_degree(e) > 0) {
      throw Error(ErrorCode::InvalidArgument, "denominator of a rational class must not involve normal variables");
    }
  }
  num_ = truncate_rep(ideal_.adopt(num), ideal_.num_normal(), ideal_.order());
  if (num_.is_zero()) {
    den_ = ideal_.constant(GaussianRational(1));
  } else if (!den_.is_constant()) {
    // Common factors of den are normal-free units, so cancelling them commutes with truncation.
    const RationalFunction reduced(num_, den_);
    num_ = reduced.num();
    den_ = reduced.den();
  }
}

RationalJet RationalJet::from_function(const IdealSpec& ideal, const RationalFunction& f) {
  const MultiPoly num = ideal.adopt(f.num());
  const MultiPoly den = ideal.adopt(f.den());
  if (den.constant_term().is_zero()) {
    throw Error(ErrorCode::ZeroDenominator, "denominator " + den.to_string() + " vanishes at the chart center");
  }
  const MultiPoly d0 = normal_free_part(den, ideal);
  const MultiPoly d1 = den - d0;
  if (d1.is_zero()) return RationalJet(ideal, num, den);
  const int k = ideal.order();
  const std::size_t m = ideal.num_normal();
  // N/D = N * sum_{j<=k} (-D1)^j D0^{k-j} / D0^{k+1}  (mod I^{k+1}).
  MultiPoly series = ideal.zero();
  MultiPoly neg_d1_pow = ideal.constant(GaussianRational(1));
  for (int j = 0; j <= k; ++j) {
    series += neg_d1_pow * d0.pow(static_cast<unsigned>(k - j));
    neg_d1_pow = truncate_rep(neg_d1_pow * (-d1), m, k);
  }
  return RationalJet(ideal, truncate_rep(num * series, m, k), d0.pow(static_cast<unsigned>(k + 1)));
}

JetClass RationalJet::as_jet() const {
  if (!den_.is_constant()) {
    throw Error(ErrorCode::NonPolynomial, "class " + to_string() + " has a non-constant denominator");
  }
  return JetClass(ideal_, num_ * den_.constant_term().inverse());
}

RationalJet RationalJet::compose(const std::map<std::string, RationalFunction>& images) const {
  std::map<std::string, RationalFunction> adopted;
  for (const auto& [name, f] : images) adopted.emplace(name, f.with_variables(ideal_.variables()));
  return from_function(ideal_, RationalFunction(num_, den_).compose(adopted));
}

RationalJet RationalJet::operator-() const {
  RationalJet r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalJet operator+(const RationalJet& a, const RationalJet& b) {
  if (!(a.ideal_ == b.ideal_)) throw Error(ErrorCode::VariableMismatch, "classes over different ideals");
  if (a.den_ == b.den_) return RationalJet(a.ideal_, a.num_ + b.num_, a.den_);
  if (b.den_.is_constant()) return RationalJet(a.ideal_, a.num_ + b.num_ * a.den_ * b.den_.constant_term().inverse(), a.den_);
  if (a.den_.is_constant()) return RationalJet(a.ideal_, a.num_ * b.den_ * a.den_.constant_term().inverse() + b.num_, b.den_);
  return RationalJet(a.ideal_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalJet operator-(const RationalJet& a, const RationalJet& b) { return a + (-b); }

RationalJet operator*(const RationalJet& a, const RationalJet& b) {
  if (!(a.ideal_ == b.ideal_)) throw Error(ErrorCode::VariableMismatch, "classes over different ideals");
  return RationalJet(a.ideal_, a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const RationalJet& a, const RationalJet& b) {
  if (!(a.ideal_ == b.ideal_)) return false;
  const std::size_t m = a.ideal_.num_normal();
  const int k = a.ideal_.order();
  return truncate_rep(a.num_ * b.den_ - b.num_ * a.den_, m, k).is_zero();
}

}  // namespace foliate
