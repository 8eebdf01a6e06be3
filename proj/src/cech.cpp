#include "foliate/cech.hpp"

#include <algorithm>

#include "foliate/error.hpp"

namespace foliate {

namespace {

RationalFunction on_s(const RationalFunction& f, const VarList& normal) {
  RationalFunction r = f;
  for (const auto& name : normal) r = r.bind(name, GaussianRational());
  return r;
}

RationalJet entry_of(const IdealSpec& ideal, const RationalFunction& f) {
  return RationalJet::from_function(ideal, f.with_variables(ideal.variables()));
}

std::size_t position(const VarList& list, const std::string& name) {
  return static_cast<std::size_t>(std::find(list.begin(), list.end(), name) - list.begin());
}

std::string fiber_name(const std::string& normal) { return std::string(kFiberPrefix) + normal; }

void require_adapted_to_foliation(const TransitionAtlas& atlas) {
  const CheckReport r = check_extension_condition(atlas, 0);
  if (!r.passed()) {
    const auto& f = r.failures.front();
    throw Error(ErrorCode::NotAdapted, "transition " + f.from + "->" + f.to + " does not preserve the foliation on S (" +
                                           f.component + " = " + f.value + ")");
  }
}

// Moves `entries` from the frames/coordinates of `to` into those of `from`;
// slots flagged in `native` are already expressed in the frames of `from`.
Tensor transport_impl(const CechCochain& shape, Tensor entries, const TransitionAtlas& atlas, const OverlapGeometry& g,
                      const std::vector<bool>& native) {
  const IdealSpec& ideal = shape.ideal;
  const VarList all = atlas.roles().all();
  std::map<std::string, RationalFunction> images;
  for (const auto& [name, f] : g.phi) images.emplace(name, f.with_variables(ideal.variables()));
  if (shape.kind == CochainKind::NormalExtension) {
    // v_to^s = sum_s' (d z_to^s / d z_from^s') v_from^s'.
    for (const auto& s : atlas.roles().normal) {
      RationalFunction acc(ideal.zero());
      for (const auto& t : atlas.roles().normal) {
        const RationalFunction& p = g.jacobian[position(all, s)][position(all, t)];
        if (p.is_zero()) continue;
        acc = acc + p.with_variables(ideal.variables()) * RationalFunction(ideal.variable(fiber_name(t)));
      }
      images.emplace(fiber_name(s), acc);
    }
  }
  for (auto& e : entries) {
    if (!e.is_zero()) e = e.compose(images);
  }
  std::vector<std::size_t> dims;
  for (const auto& slot : shape.slots) dims.push_back(slot.indices.size());
  for (std::size_t k = 0; k < shape.slots.size(); ++k) {
    if (native[k]) continue;
    const FrameSlot& slot = shape.slots[k];
    const bool covariant = slot.kind == SlotKind::FoliationDual || slot.kind == SlotKind::Conormal;
    const std::size_t d = dims[k];
    std::vector<std::vector<RationalJet>> m(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t pi = position(all, slot.indices[i]);
        const std::size_t pj = position(all, slot.indices[j]);
        m[i].push_back(entry_of(ideal, covariant ? g.jacobian[pj][pi] : g.inverse_jacobian[pi][pj]));
      }
    }
    Tensor out = shape.zero_tensor();
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
      std::vector<std::size_t> idx = shape.multi_index(flat);
      const std::size_t i = idx[k];
      for (std::size_t j = 0; j < d; ++j) {
        if (m[i][j].is_zero()) continue;
        idx[k] = j;
        const RationalJet& src = entries[shape.flat_index(idx)];
        if (!src.is_zero()) out[flat] = out[flat] + m[i][j] * src;
      }
    }
    entries = std::move(out);
  }
  return entries;
}

const Tensor& pair_component(const CechCochain& c, const std::string& a, const std::string& b) {
  const auto it = c.pair_components.find({a, b});
  if (it == c.pair_components.end()) throw Error(ErrorCode::MissingPair, "cochain has no component on " + a + "/" + b);
  return it->second;
}

const Tensor& chart_component(const CechCochain& c, const std::string& a) {
  const auto it = c.chart_components.find(a);
  if (it == c.chart_components.end()) throw Error(ErrorCode::MissingPair, "cochain has no component on chart " + a);
  return it->second;
}

bool tensor_is_zero(const Tensor& t) {
  return std::all_of(t.begin(), t.end(), [](const RationalJet& e) { return e.is_zero(); });
}

bool tensors_equal(const Tensor& a, const Tensor& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

}  // namespace

std::string_view slot_name(SlotKind k) {
  switch (k) {
    case SlotKind::FoliationDual: return "foliation-dual";
    case SlotKind::Conormal: return "conormal";
    case SlotKind::QuotientNormal: return "quotient-normal";
    case SlotKind::Vertical: return "vertical";
  }
  return "";
}

std::string_view cochain_kind_name(CochainKind k) { return k == CochainKind::Atiyah ? "atiyah" : "normal"; }

std::size_t CechCochain::entry_count() const {
  std::size_t n = 1;
  for (const auto& s : slots) n *= s.indices.size();
  return n;
}

std::size_t CechCochain::flat_index(const std::vector<std::size_t>& index) const {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < slots.size(); ++k) flat = flat * slots[k].indices.size() + index[k];
  return flat;
}

std::vector<std::size_t> CechCochain::multi_index(std::size_t flat) const {
  std::vector<std::size_t> idx(slots.size());
  for (std::size_t k = slots.size(); k-- > 0;) {
    idx[k] = flat % slots[k].indices.size();
    flat /= slots[k].indices.size();
  }
  return idx;
}

Tensor CechCochain::zero_tensor() const { return Tensor(entry_count(), RationalJet(ideal, ideal.zero())); }

bool CechCochain::is_zero() const {
  for (const auto& [k, t] : chart_components) {
    if (!tensor_is_zero(t)) return false;
  }
  for (const auto& [k, t] : pair_components) {
    if (!tensor_is_zero(t)) return false;
  }
  return true;
}

CechCochain empty_cochain(CochainKind kind, int degree, const TransitionAtlas& atlas) {
  if (degree != 0 && degree != 1) throw Error(ErrorCode::InvalidArgument, "cochain degree must be 0 or 1");
  const VariableRoles& roles = atlas.roles();
  CechCochain c;
  c.kind = kind;
  c.degree = degree;
  if (kind == CochainKind::Atiyah) {
    c.ideal = IdealSpec(roles.normal, roles.tangential, 0);
    c.slots = {{SlotKind::QuotientNormal, roles.non_foliation()},
               {SlotKind::FoliationDual, roles.foliation},
               {SlotKind::Conormal, roles.normal}};
  } else {
    VarList fibers;
    for (const auto& n : roles.normal) fibers.push_back(fiber_name(n));
    c.ideal = IdealSpec(fibers, roles.tangential, 1);
    c.slots = {{SlotKind::Vertical, roles.normal}, {SlotKind::FoliationDual, roles.foliation}};
  }
  return c;
}

Tensor transport(const CechCochain& shape, const Tensor& entries, const TransitionAtlas& atlas, const std::string& from,
                 const std::string& to) {
  if (entries.size() != shape.entry_count()) throw Error(ErrorCode::FrameMismatch, "tensor size does not match frames");
  const OverlapGeometry g(atlas, from, to);
  return transport_impl(shape, entries, atlas, g, std::vector<bool>(shape.slots.size(), false));
}

CechCochain atiyah_obstruction(const TransitionAtlas& atlas) {
  require_adapted_to_foliation(atlas);
  CechCochain c = empty_cochain(CochainKind::Atiyah, 1, atlas);
  const VariableRoles& roles = atlas.roles();
  for (const auto& [a, b] : atlas.overlaps()) {
    const Transition& back = atlas.transition(b, a);
    Tensor raw = c.zero_tensor();
    for (std::size_t t = 0; t < c.slots[0].indices.size(); ++t) {
      const RationalFunction& zt = back.map.at(c.slots[0].indices[t]);
      for (std::size_t j = 0; j < c.slots[1].indices.size(); ++j) {
        const RationalFunction dj = zt.derivative(c.slots[1].indices[j]);
        for (std::size_t r = 0; r < c.slots[2].indices.size(); ++r) {
          // d^2 z_a^t / (d z_b^r d z_b^j) on S, in the coordinates of b.
          raw[c.flat_index({t, j, r})] = entry_of(c.ideal, on_s(dj.derivative(c.slots[2].indices[r]), roles.normal));
        }
      }
    }
    const OverlapGeometry g(atlas, a, b);
    c.pair_components.emplace(ChartPair{a, b}, transport_impl(c, std::move(raw), atlas, g, {true, false, false}));
  }
  return c;
}

CechCochain normal_extension_obstruction(const TransitionAtlas& atlas) {
  require_adapted_to_foliation(atlas);
  CechCochain c = empty_cochain(CochainKind::NormalExtension, 1, atlas);
  const VariableRoles& roles = atlas.roles();
  for (const auto& [a, b] : atlas.overlaps()) {
    const Transition& back = atlas.transition(b, a);
    Tensor raw = c.zero_tensor();
    for (std::size_t r = 0; r < roles.normal.size(); ++r) {
      const RationalFunction& zr = back.map.at(roles.normal[r]);
      for (std::size_t i = 0; i < roles.foliation.size(); ++i) {
        const RationalFunction di = zr.derivative(roles.foliation[i]);
        // sum_s v_b^s d^2 z_a^r / (d z_b^s d z_b^i) on S.
        RationalFunction acc(c.ideal.zero());
        for (const auto& s : roles.normal) {
          const RationalFunction second = on_s(di.derivative(s), roles.normal);
          if (second.is_zero()) continue;
          acc = acc + second.with_variables(c.ideal.variables()) * RationalFunction(c.ideal.variable(fiber_name(s)));
        }
        raw[c.flat_index({r, i})] = entry_of(c.ideal, acc);
      }
    }
    const OverlapGeometry g(atlas, a, b);
    Tensor moved = transport_impl(c, std::move(raw), atlas, g, {true, false});
    for (const auto& e : moved) {
      for (const auto& [exp, coeff] : e.num().terms()) {
        if (c.ideal.normal_degree(exp) != 1) {
          throw Error(ErrorCode::InternalError, "normal-extension entry " + e.to_string() + " is not fiber-linear");
        }
      }
    }
    c.pair_components.emplace(ChartPair{a, b}, std::move(moved));
  }
  return c;
}

CechCochain coboundary(const CechCochain& sigma, const TransitionAtlas& atlas) {
  if (sigma.degree != 0) throw Error(ErrorCode::InvalidArgument, "coboundary expects a degree-0 cochain");
  CechCochain out = sigma;
  out.degree = 1;
  out.chart_components.clear();
  for (const auto& [a, b] : atlas.overlaps()) {
    const Tensor moved = transport(sigma, chart_component(sigma, b), atlas, a, b);
    const Tensor& here = chart_component(sigma, a);
    Tensor diff(moved.size());
    for (std::size_t i = 0; i < moved.size(); ++i) diff[i] = moved[i] - here[i];
    out.pair_components.emplace(ChartPair{a, b}, std::move(diff));
  }
  return out;
}

bool verify_cocycle(const CechCochain& c, const TransitionAtlas& atlas) {
  if (c.degree != 1) throw Error(ErrorCode::InvalidArgument, "cocycle check expects a degree-1 cochain");
  for (const auto& t : atlas.triples()) {
    const Tensor& ab = pair_component(c, t[0], t[1]);
    const Tensor bc = transport(c, pair_component(c, t[1], t[2]), atlas, t[0], t[1]);
    const Tensor& ac = pair_component(c, t[0], t[2]);
    for (std::size_t i = 0; i < ab.size(); ++i) {
      if (!(ab[i] + bc[i] - ac[i]).is_zero()) return false;
    }
  }
  return true;
}

bool verify_splitting(const CechCochain& c, const CechCochain& sigma, const TransitionAtlas& atlas) {
  if (c.degree != 1 || sigma.degree != 0) {
    throw Error(ErrorCode::FrameMismatch, "expected a degree-1 cochain and a degree-0 cochain");
  }
  if (c.kind != sigma.kind || !(c.slots == sigma.slots) || !(c.ideal == sigma.ideal)) {
    throw Error(ErrorCode::FrameMismatch, "cochain frames or orders differ");
  }
  const CechCochain d = coboundary(sigma, atlas);
  for (const auto& [key, expected] : d.pair_components) {
    if (!tensors_equal(pair_component(c, key.first, key.second), expected)) return false;
  }
  return true;
}

std::map<std::string, std::vector<VectorFieldJet>> extension_generators(const CechCochain& sigma,
                                                                        const TransitionAtlas& atlas) {
  if (sigma.kind != CochainKind::NormalExtension || sigma.degree != 0) {
    throw Error(ErrorCode::FrameMismatch, "extension generators need a degree-0 normal-extension cochain");
  }
  const CechCochain shape = empty_cochain(CochainKind::NormalExtension, 0, atlas);
  if (!(shape.slots == sigma.slots) || !(shape.ideal == sigma.ideal)) {
    throw Error(ErrorCode::FrameMismatch, "cochain frames differ from the atlas roles");
  }
  const VariableRoles& roles = atlas.roles();
  std::map<std::string, std::vector<VectorFieldJet>> out;
  for (const auto& [chart, entries] : sigma.chart_components) {
    if (!atlas.has_chart(chart)) throw Error(ErrorCode::InvalidArgument, "unknown chart '" + chart + "'");
    auto& fields = out[chart];
    for (std::size_t j = 0; j < roles.foliation.size(); ++j) {
      VectorFieldRep v = VectorFieldRep::zero(sigma.ideal);
      v.components[sigma.ideal.index_of(roles.foliation[j])] = sigma.ideal.constant(GaussianRational(1));
      for (std::size_t s = 0; s < roles.normal.size(); ++s) {
        const RationalJet& c = entries[sigma.flat_index({s, j})];
        for (const auto& [e, coeff] : c.num().terms()) {
          if (sigma.ideal.normal_degree(e) == 0) {
            throw Error(ErrorCode::NotNormalized, "entry " + c.to_string() + " on chart " + chart +
                                                      " does not vanish on S");
          }
        }
        if (!c.is_polynomial()) {
          throw Error(ErrorCode::NonPolynomial, "entry " + c.to_string() + " on chart " + chart + " is not polynomial");
        }
        v.components[s] = -c.as_jet().rep();
      }
      fields.push_back(classify_field(v));
    }
  }
  return out;
}

}  // namespace foliate
