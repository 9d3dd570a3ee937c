#pragma once

namespace bec {

// Bloch-sphere angles. theta = 0 is the south pole |J,-J>, theta = pi the
// north pole; phi in (-pi, pi]. Note theta runs opposite to the usual
// spherical polar angle.
struct AngleCoordinates {
    double theta = 0.0;
    double phi = 0.0;
};

}  // namespace bec
