#ifndef ASSOCLAB_TORUS_H_
#define ASSOCLAB_TORUS_H_

#include "assoclab/exterior.h"

namespace assoclab {

// The linear automorphism of Z^4 inducing the torus diffeomorphism, rows
// indexed by the image coordinate: theta_i o phi = sum_j m[i][j] theta_j.
RationalMatrix TorusMap();

// The expected action on degree-2 forms in the basis 12, 13, 14, 23, 24, 34.
RationalMatrix TorusReferenceInducedMatrix();

FormElement Omega0();  // dθ12 + dθ34
FormElement Omega1();  // -dθ12 - dθ13 + dθ24
FormElement OmegaT();  // t Omega1 + (1 - t) Omega0
FormElement VolumeForm4();

// 3t^2 - 3t + 1
PolyScalar TorusQuadratic();

}  // namespace assoclab

#endif  // ASSOCLAB_TORUS_H_
