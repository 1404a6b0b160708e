#pragma once

#include <optional>
#include <vector>

#include "chainlift/ideal.hpp"

namespace chainlift {

// A finitely presented algebra: ambient polynomial ring modulo a relations
// ideal. A plain polynomial ring has zero relations.
struct PresentedRing {
  RingPtr ambient;
  Ideal relations;

  static PresentedRing plain(RingPtr r) {
    Ideal rel = Ideal::zero(r);
    return PresentedRing{std::move(r), std::move(rel)};
  }
  static PresentedRing make_quotient(RingPtr r, Ideal rel);
  bool is_plain() const { return relations.is_zero_ideal(); }
};

struct WellDefinedResult {
  bool ok;
  // A source relation whose image does not lie in the target relations.
  std::optional<Polynomial> violation;
};

// Substitutes the images into each source relation and tests membership in
// the target relations ideal.
WellDefinedResult check_well_defined(const PresentedRing& source,
                                     const PresentedRing& target,
                                     const std::vector<Polynomial>& images);

// A ring homomorphism between presented rings, given by one target image per
// source variable. Construction validates arity, characteristic and
// well-definedness.
class RingMap {
public:
  RingMap(PresentedRing source, PresentedRing target,
          std::vector<Polynomial> images);

  const PresentedRing& source() const { return source_; }
  const PresentedRing& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }

private:
  PresentedRing source_;
  PresentedRing target_;
  std::vector<Polynomial> images_;
};

inline WellDefinedResult check_well_defined(const RingMap& map) {
  return check_well_defined(map.source(), map.target(), map.images());
}

// Substitute images, then reduce modulo the target relations.
Polynomial apply(const RingMap& map, const Polynomial& f);

// IB: the ideal generated by the images of I's generators plus the target
// relations.
Ideal extend_ideal(const RingMap& map, const Ideal& I);

// φ⁻¹(J), computed from the graph ideal: in K[target vars][source vars],
// eliminate the target block from J + target relations + (s - φ(s)).
Ideal contract_ideal(const RingMap& map, const Ideal& J);

// φ⁻¹(0) = contraction of the target relations.
Ideal kernel(const RingMap& map);

struct ContractionCheck {
  bool holds;
  Ideal contraction;                  // φ⁻¹(IB)
  std::optional<Polynomial> witness;  // in φ⁻¹(IB) \ I when the check fails
};

// Does I = φ⁻¹(IB) hold for this particular ideal? The containment
// I ⊆ φ⁻¹(IB) always holds and is asserted.
ContractionCheck contraction_property_check(const RingMap& map,
                                            const Ideal& I);

}  // namespace chainlift
