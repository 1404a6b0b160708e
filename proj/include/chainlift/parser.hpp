#pragma once

#include <string_view>

#include "chainlift/polynomial.hpp"

namespace chainlift {

// Parses the polynomial expression grammar
//   expr     := ('+'|'-')? term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nat)?
//   base     := rational | var | '(' expr ')'
//   rational := int ('/' nat)?
// Implicit multiplication is not allowed; variable names must be declared in
// the ring. Errors: SyntaxError (with 0-based position), UnknownVariable,
// BadCharacteristic (fraction denominator divisible by the characteristic).
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace chainlift
