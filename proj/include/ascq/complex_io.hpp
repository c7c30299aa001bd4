#pragma once

#include "ascq/core.hpp"

#include <string>
#include <string_view>

namespace ascq
{

/// Locale-independent %.17g; negative zero prints as "0".
std::string format_real(double x);

/// Canonical cartesian text "RE+IMi" / "RE-IMi", or just "RE" when the imaginary part is zero.
std::string format_complex(Complex z);

/// Parses a complex argument.
///
/// Accepted forms: cartesian "1+1i", "-2", "0.5i", "-i", "1e-3-2.5e-1i" and polar "R@THETA"
/// with THETA in radians ("0.8@0.5235987755982988"). Throws Parameter on malformed text.
Complex parse_complex(std::string_view text);

} // namespace ascq
