#pragma once

#include "madlie/matrix.hpp"

namespace madlie {

// Smith normal form over the univariate Laurent ring Q[t, t^-1] (a
// Euclidean domain: units are c*t^m, width of the support is a Euclidean
// function).
struct SmithResult {
    RingMatrix U;  // rows x rows, det a unit
    RingMatrix D;  // rows x cols, diagonal, d_i | d_{i+1}
    RingMatrix V;  // cols x cols, det a unit
};

// U * m * V = D exactly.  Each nonzero d_i is normalized to a polynomial
// with constant term 1 (its lowest term scaled away).
SmithResult smith_normal_form(const RingMatrix& m);

// Units of Q[t,t^-1]: c * t^k.  Exposed for reuse by the solvers.
bool laurent_is_unit(const RingElement& e);
RingElement laurent_unit_inverse(const RingElement& e);

}  // namespace madlie
