#include "chainlift/ladder.hpp"

#include <fstream>
#include <map>
#include <numeric>

#include "chainlift/error.hpp"
#include "chainlift/parser.hpp"

namespace chainlift {

MultiplicativeSetFG::MultiplicativeSetFG(RingPtr ring,
                                         std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  if (gens_.empty())
    fail(ErrorKind::InvalidArgument, "multiplicative set needs generators");
  for (const auto& g : gens_) {
    if (g.is_zero())
      fail(ErrorKind::ZeroElement, "0 cannot generate a multiplicative set");
    require_same_ring(ring_, g.ring());
  }
}

Polynomial MultiplicativeSetFG::product(
    const std::vector<unsigned>& exps) const {
  if (exps.size() != gens_.size())
    fail(ErrorKind::ArityMismatch, "one exponent per generator required");
  Polynomial p = Polynomial::constant(ring_, 1);
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (exps[i] > 0) p = p * gens_[i].pow(exps[i]);
  return p;
}

LadderSpec::LadderSpec(RingPtr ring_in, std::vector<Ideal> ideals_in,
                       std::vector<MultiplicativeSetFG> msets_in)
    : ring(std::move(ring_in)),
      ideals(std::move(ideals_in)),
      msets(std::move(msets_in)) {
  if (ideals.empty() || ideals.size() != msets.size())
    fail(ErrorKind::LengthMismatch,
         "ladder needs r+1 ideals and r+1 multiplicative sets");
  for (const auto& I : ideals) require_same_ring(ring, I.ring());
  for (const auto& F : msets) require_same_ring(ring, F.ring());
}

TelescopedGens telescoped_generators(const LadderSpec& ladder,
                                     const PickVector& picks) {
  if (picks.size() != ladder.ideals.size())
    fail(ErrorKind::ArityMismatch, "one pick per ladder level required");
  TelescopedGens out;
  Polynomial prefix = Polynomial::constant(ladder.ring, 1);
  for (std::size_t i = 0; i < picks.size(); ++i) {
    out.picks.push_back(ladder.msets[i].product(picks[i]));
    out.prefixes.push_back(prefix);
    std::vector<Polynomial> level;
    for (const auto& g : ladder.ideals[i].gens()) level.push_back(prefix * g);
    out.gens.push_back(std::move(level));
    prefix = prefix * out.picks.back();
  }
  return out;
}

std::vector<Polynomial> TelescopedGens::flat() const {
  std::vector<Polynomial> out;
  for (const auto& level : gens)
    out.insert(out.end(), level.begin(), level.end());
  return out;
}

Ideal telescoped_ideal(const LadderSpec& ladder, const PickVector& picks) {
  return Ideal(ladder.ring, telescoped_generators(ladder, picks).flat());
}

CertificateCheck verify_certificate(const ObstructionCertificate& cert) {
  TelescopedGens tg = telescoped_generators(cert.ladder, cert.picks);
  Polynomial lhs = Polynomial::constant(cert.ladder.ring, 1);
  for (const auto& f : tg.picks) lhs = lhs * f;
  Polynomial rhs = Polynomial::zero(cert.ladder.ring);
  if (cert.coefficients.size() != tg.gens.size())
    fail(ErrorKind::ArityMismatch, "one coefficient row per level required");
  for (std::size_t i = 0; i < tg.gens.size(); ++i) {
    if (cert.coefficients[i].size() != tg.gens[i].size())
      fail(ErrorKind::ArityMismatch,
           "one coefficient per level generator required");
    for (std::size_t j = 0; j < tg.gens[i].size(); ++j)
      rhs = rhs + cert.coefficients[i][j] * tg.gens[i][j];
  }
  Polynomial diff = lhs - rhs;
  return {diff.is_zero(), diff};
}

namespace {

// All exponent vectors with entries <= bound, by increasing total sum, then
// lexicographically ascending.
class PickEnumerator {
public:
  PickEnumerator(std::vector<std::size_t> level_sizes, unsigned bound)
      : sizes_(std::move(level_sizes)), bound_(bound) {
    total_slots_ = std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0});
  }

  template <typename Fn>
  bool for_each(Fn&& fn) const {
    std::vector<unsigned> slot(total_slots_, 0);
    const unsigned max_total = bound_ * static_cast<unsigned>(total_slots_);
    for (unsigned total = 0; total <= max_total; ++total) {
      if (emit(slot, 0, total, fn)) return true;
      if (total_slots_ == 0) break;  // only the empty pick exists
    }
    return false;
  }

  PickVector split(const std::vector<unsigned>& slot) const {
    PickVector picks;
    std::size_t at = 0;
    for (std::size_t n : sizes_) {
      picks.emplace_back(slot.begin() + static_cast<std::ptrdiff_t>(at),
                         slot.begin() + static_cast<std::ptrdiff_t>(at + n));
      at += n;
    }
    return picks;
  }

private:
  template <typename Fn>
  bool emit(std::vector<unsigned>& slot, std::size_t at, unsigned remaining,
            Fn&& fn) const {
    if (at == slot.size()) {
      if (remaining != 0) return false;
      return fn(static_cast<const std::vector<unsigned>&>(slot));
    }
    unsigned cap = std::min(bound_, remaining);
    for (unsigned e = 0; e <= cap; ++e) {
      slot[at] = e;
      if (emit(slot, at + 1, remaining - e, fn)) return true;
    }
    slot[at] = 0;
    return false;
  }

  std::vector<std::size_t> sizes_;
  unsigned bound_;
  std::size_t total_slots_ = 0;
};

}  // namespace

ObstructionResult obstruction_search(const LadderSpec& ladder, unsigned bound) {
  std::vector<std::size_t> sizes;
  for (const auto& F : ladder.msets) sizes.push_back(F.gens().size());
  PickEnumerator en(sizes, bound);

  // The telescoped ideal only involves f_0..f_{r-1}; memoize its cofactored
  // basis per prefix so the innermost level reuses it.
  const std::size_t last_level_slots = sizes.back();
  std::map<std::vector<unsigned>, Ideal> memo;

  ObstructionResult out;
  out.bound = bound;

  en.for_each([&](const std::vector<unsigned>& slot) {
    PickVector picks = en.split(slot);
    std::vector<unsigned> prefix_key(slot.begin(),
                                     slot.end() - static_cast<std::ptrdiff_t>(
                                                      last_level_slots));
    auto it = memo.find(prefix_key);
    if (it == memo.end())
      it = memo.emplace(prefix_key, telescoped_ideal(ladder, picks)).first;
    const Ideal& T = it->second;

    TelescopedGens tg = telescoped_generators(ladder, picks);
    Polynomial product = Polynomial::constant(ladder.ring, 1);
    for (const auto& f : tg.picks) product = product * f;

    ExtendedReduction red =
        extended_reduce(product, T.groebner(MonomialOrder::grevlex(), true));
    if (!red.remainder.is_zero()) return false;

    ObstructionCertificate cert{ladder, picks, {}};
    std::size_t at = 0;
    for (const auto& level : tg.gens) {
      cert.coefficients.emplace_back(red.combination.begin() +
                                         static_cast<std::ptrdiff_t>(at),
                                     red.combination.begin() +
                                         static_cast<std::ptrdiff_t>(at + level.size()));
      at += level.size();
    }
    CertificateCheck check = verify_certificate(cert);
    if (!check.ok)
      throw std::logic_error("obstruction certificate failed to replay");
    out.obstructed = true;
    out.certificate = std::move(cert);
    return true;
  });
  return out;
}

// --- certificate files ----------------------------------------------------

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

nlohmann::ordered_json certificate_body(const ObstructionCertificate& cert) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json ring;
  ring["vars"] = cert.ladder.ring->vars();
  ring["char"] = cert.ladder.ring->characteristic();
  nlohmann::ordered_json ladder;
  ladder["ring"] = ring;
  ladder["r"] = cert.ladder.r();
  nlohmann::ordered_json ideals = nlohmann::ordered_json::array();
  for (const auto& I : cert.ladder.ideals) {
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const auto& g : I.gens()) gens.push_back(g.str());
    ideals.push_back(gens);
  }
  ladder["ideals"] = ideals;
  nlohmann::ordered_json msets = nlohmann::ordered_json::array();
  for (const auto& F : cert.ladder.msets) {
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const auto& g : F.gens()) gens.push_back(g.str());
    msets.push_back(gens);
  }
  ladder["mset_generators"] = msets;
  j["ladder"] = ladder;
  j["picks"] = cert.picks;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& level : cert.coefficients) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& c : level) row.push_back(c.str());
    coeffs.push_back(row);
  }
  j["coefficients"] = coeffs;
  return j;
}

}  // namespace

std::string certificate_identity_hash(const ObstructionCertificate& cert) {
  return hex64(fnv1a(certificate_body(cert).dump()));
}

nlohmann::ordered_json certificate_to_json(const ObstructionCertificate& cert) {
  nlohmann::ordered_json j = certificate_body(cert);
  j["identity_hash"] = certificate_identity_hash(cert);
  return j;
}

ObstructionCertificate certificate_from_json(const nlohmann::ordered_json& j) {
  try {
    const auto& jr = j.at("ladder").at("ring");
    std::vector<std::string> vars =
        jr.at("vars").get<std::vector<std::string>>();
    std::uint32_t chr = jr.at("char").get<std::uint32_t>();
    RingPtr ring = PolyRing::make(vars, chr);

    std::vector<Ideal> ideals;
    for (const auto& gens : j.at("ladder").at("ideals")) {
      std::vector<Polynomial> ps;
      for (const auto& s : gens)
        ps.push_back(parse_poly(s.get<std::string>(), ring));
      ideals.emplace_back(ring, std::move(ps));
    }
    std::vector<MultiplicativeSetFG> msets;
    for (const auto& gens : j.at("ladder").at("mset_generators")) {
      std::vector<Polynomial> ps;
      for (const auto& s : gens)
        ps.push_back(parse_poly(s.get<std::string>(), ring));
      msets.emplace_back(ring, std::move(ps));
    }
    LadderSpec ladder(ring, std::move(ideals), std::move(msets));

    PickVector picks = j.at("picks").get<PickVector>();
    std::vector<std::vector<Polynomial>> coeffs;
    for (const auto& row : j.at("coefficients")) {
      std::vector<Polynomial> level;
      for (const auto& s : row)
        level.push_back(parse_poly(s.get<std::string>(), ring));
      coeffs.push_back(std::move(level));
    }
    ObstructionCertificate cert{std::move(ladder), std::move(picks),
                                std::move(coeffs)};
    if (j.contains("identity_hash") &&
        j.at("identity_hash").get<std::string>() !=
            certificate_identity_hash(cert))
      fail(ErrorKind::ResolutionError, "certificate hash mismatch");
    return cert;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::SyntaxError, std::string("malformed certificate: ") + e.what());
  }
}

void write_certificate_file(const std::string& path,
                            const ObstructionCertificate& cert) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + path);
  out << certificate_to_json(cert).dump(2) << '\n';
}

ObstructionCertificate read_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot read " + path);
  nlohmann::ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::SyntaxError, std::string("malformed certificate: ") + e.what());
  }
  return certificate_from_json(j);
}

}  // namespace chainlift
