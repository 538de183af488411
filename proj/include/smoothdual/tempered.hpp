#pragma once

#include "smoothdual/params.hpp"

namespace smoothdual {

// The tempered locus and the deformation retraction onto it. Everything here
// moves only the exponent coordinate s of each segment; angles, labels and
// lengths are untouched.

// True iff every segment has central exponent zero, i.e. raw exponent
// s = (1-r)/2 with a unitary twist on the normalized base point.
bool is_tempered(const WDParam& p);

// Sets every segment's central exponent to zero. Idempotent, and fixes
// exactly the tempered parameters.
WDParam retract(const WDParam& p);

// Linear path from the identity (t = 0) to the retraction (t = 1): each
// segment's central exponent is scaled by (1 - t). Throws ValidationError
// when t is outside [0, 1].
WDParam homotopy(const WDParam& p, const Rational& t);

// The component of the extended variety the parameter lands on; constant
// along the homotopy.
ComponentIndex stratum_of(const WDParam& p);

}  // namespace smoothdual
