#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chainlift {

// Integer weight per variable; weights may be negative.
using Grading = std::vector<long>;

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// A polynomial ring over an exact field: ordered variable names,
// characteristic (0 or a prime p < 2^31), optional default grading.
// Immutable after construction; shared freely between threads.
class PolyRing {
public:
  static RingPtr make(std::vector<std::string> vars,
                      std::uint32_t characteristic = 0,
                      std::optional<Grading> grading = std::nullopt);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  std::uint32_t characteristic() const { return char_; }
  const std::optional<Grading>& grading() const { return grading_; }

  std::optional<std::size_t> var_index(std::string_view name) const;

  // Arithmetic compatibility: same variable list and same characteristic.
  bool compatible(const PolyRing& other) const {
    return char_ == other.char_ && vars_ == other.vars_;
  }

private:
  PolyRing() = default;

  std::vector<std::string> vars_;
  std::uint32_t char_ = 0;
  std::optional<Grading> grading_;
};

// RingMismatch unless the two rings are compatible.
void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace chainlift
