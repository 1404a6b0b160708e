#include "chainlift/ringmap.hpp"

#include <stdexcept>

#include "chainlift/error.hpp"

namespace chainlift {

PresentedRing PresentedRing::make_quotient(RingPtr r, Ideal rel) {
  require_same_ring(r, rel.ring());
  return PresentedRing{std::move(r), std::move(rel)};
}

namespace {

Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      const std::vector<Polynomial>& images) {
  Polynomial out = Polynomial::zero(target);
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) term = term * images[i].pow(static_cast<unsigned>(m[i]));
    out = out + term;
  }
  return out;
}

}  // namespace

WellDefinedResult check_well_defined(const PresentedRing& source,
                                     const PresentedRing& target,
                                     const std::vector<Polynomial>& images) {
  for (const auto& rel : source.relations.gens()) {
    Polynomial img = substitute(rel, target.ambient, images);
    if (!membership(img, target.relations)) return {false, rel};
  }
  return {true, std::nullopt};
}

RingMap::RingMap(PresentedRing source, PresentedRing target,
                 std::vector<Polynomial> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  if (images_.size() != source_.ambient->nvars())
    fail(ErrorKind::ArityMismatch, "one image per source variable required");
  if (source_.ambient->characteristic() != target_.ambient->characteristic())
    fail(ErrorKind::RingMismatch, "source and target characteristics differ");
  for (const auto& img : images_)
    require_same_ring(target_.ambient, img.ring());
  WellDefinedResult wd = check_well_defined(source_, target_, images_);
  if (!wd.ok)
    fail(ErrorKind::InvalidArgument,
         "map not well-defined: relation " + wd.violation->str() +
             " is not sent into the target relations");
}

Polynomial apply(const RingMap& map, const Polynomial& f) {
  require_same_ring(f.ring(), map.source().ambient);
  Polynomial img = substitute(f, map.target().ambient, map.images());
  if (map.target().is_plain()) return img;
  return reduce(img, map.target().relations.groebner());
}

Ideal extend_ideal(const RingMap& map, const Ideal& I) {
  require_same_ring(I.ring(), map.source().ambient);
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(apply(map, g));
  for (const auto& r : map.target().relations.gens()) gens.push_back(r);
  return Ideal(map.target().ambient, std::move(gens));
}

Ideal contract_ideal(const RingMap& map, const Ideal& J) {
  require_same_ring(J.ring(), map.target().ambient);
  const RingPtr& src = map.source().ambient;
  const RingPtr& tgt = map.target().ambient;
  const std::size_t nt = tgt->nvars();
  const std::size_t ns = src->nvars();

  // Big ring [target vars][aliased source vars]; aliases avoid collisions
  // between source and target variable names.
  std::vector<std::string> vars = tgt->vars();
  for (std::size_t i = 0; i < ns; ++i)
    vars.push_back("#s" + std::to_string(i));
  RingPtr big = PolyRing::make(std::move(vars), tgt->characteristic());

  std::vector<Polynomial> gens;
  for (const auto& g : J.gens()) gens.push_back(lift_at(g, big, 0));
  for (const auto& r : map.target().relations.gens())
    gens.push_back(lift_at(r, big, 0));
  for (std::size_t i = 0; i < ns; ++i)
    gens.push_back(Polynomial::variable(big, nt + i) -
                   lift_at(map.images()[i], big, 0));

  return eliminate(Ideal(big, std::move(gens)), nt, src);
}

Ideal kernel(const RingMap& map) {
  return contract_ideal(map, Ideal::zero(map.target().ambient));
}

ContractionCheck contraction_property_check(const RingMap& map,
                                            const Ideal& I) {
  Ideal extension = extend_ideal(map, I);
  Ideal contraction = contract_ideal(map, extension);
  Ideal expected = add(I, map.source().relations);
  for (const auto& g : expected.gens()) {
    if (!membership(g, contraction))
      throw std::logic_error("I ⊆ φ⁻¹(IB) violated; contraction is broken");
  }
  ContractionCheck out{true, contraction, std::nullopt};
  if (!ideal_equal(contraction, expected)) {
    out.holds = false;
    for (const auto& g : contraction.canonical_gens()) {
      if (!membership(g, expected)) {
        out.witness = g;
        break;
      }
    }
  }
  return out;
}

}  // namespace chainlift
