#pragma once

#include <map>
#include <string>
#include <vector>

#include "foliate/atlas.hpp"
#include "foliate/rational_jet.hpp"

namespace foliate {

/// How one tensor index of a cochain entry changes between charts.
///   FoliationDual, Conormal: covariant, transported by d z_b / d z_a.
///   QuotientNormal, Vertical: contravariant, transported by d z_a / d z_b.
enum class SlotKind { FoliationDual, Conormal, QuotientNormal, Vertical };

std::string_view slot_name(SlotKind k);

struct FrameSlot {
  SlotKind kind;
  VarList indices;
  friend bool operator==(const FrameSlot&, const FrameSlot&) = default;
};

enum class CochainKind { Atiyah, NormalExtension };

std::string_view cochain_kind_name(CochainKind k);

/// Prefix of normal-bundle fiber coordinates: the fiber coordinate dual to
/// normal variable x is named v_x.
inline constexpr std::string_view kFiberPrefix = "v_";

using Tensor = std::vector<RationalJet>;

/// Degree-0 or degree-1 Cech cochain with tensor-valued entries.
/// Atiyah cochains have slots (QuotientNormal t, FoliationDual j, Conormal s)
/// and entries in O_S. NormalExtension cochains have slots (Vertical r,
/// FoliationDual i) and entries linear in the fiber coordinates.
/// Degree-1 components are stored once per overlap, keyed by the sorted pair
/// (a, b), as sigma_b - sigma_a written in the frames and coordinates of a.
struct CechCochain {
  CochainKind kind = CochainKind::Atiyah;
  int degree = 0;
  IdealSpec ideal;
  std::vector<FrameSlot> slots;
  std::map<std::string, Tensor> chart_components;
  std::map<ChartPair, Tensor> pair_components;

  std::size_t entry_count() const;
  /// Row-major position of a multi-index.
  std::size_t flat_index(const std::vector<std::size_t>& index) const;
  std::vector<std::size_t> multi_index(std::size_t flat) const;
  Tensor zero_tensor() const;
  bool is_zero() const;
};

/// Shape (kind, frames, entry ring) of the cochains of one kind on an atlas.
CechCochain empty_cochain(CochainKind kind, int degree, const TransitionAtlas& atlas);

/// Rewrites a tensor given in the frames and coordinates of `to` in those of
/// `from`.
Tensor transport(const CechCochain& shape, const Tensor& entries, const TransitionAtlas& atlas, const std::string& from,
                 const std::string& to);

CechCochain atiyah_obstruction(const TransitionAtlas& atlas);
CechCochain normal_extension_obstruction(const TransitionAtlas& atlas);

/// (delta sigma)_{ab} = sigma_b (transported) - sigma_a on every overlap.
CechCochain coboundary(const CechCochain& sigma, const TransitionAtlas& atlas);

/// c_ab + c_bc - c_ac = 0 on every declared triple, after transport to the
/// first chart. Throws MissingPair.
bool verify_cocycle(const CechCochain& c, const TransitionAtlas& atlas);

/// delta sigma = c on every overlap. Throws FrameMismatch, MissingPair.
bool verify_splitting(const CechCochain& c, const CechCochain& sigma, const TransitionAtlas& atlas);

/// Per chart and foliation index j: d/dz^j - sum_s c^s_j d/dv_s, over the
/// first neighborhood of the zero section of the normal bundle.
/// Throws NotNormalized, NonPolynomial.
std::map<std::string, std::vector<VectorFieldJet>> extension_generators(const CechCochain& sigma,
                                                                        const TransitionAtlas& atlas);

}  // namespace foliate
