#pragma once

#include <vector>

#include "lckcert/operators.hpp"

namespace lckcert {

struct CohomologyDegree {
  int degree = 0;
  std::size_t dim_forms = 0;
  std::size_t dim_kernel = 0;  // of d_θ on Λ^k
  std::size_t dim_image = 0;   // of d_θ from Λ^{k-1}
  std::size_t betti = 0;
  std::vector<Vec<Rational>> representatives;  // e-coordinates, closed and not exact
};

/// Morse–Novikov cohomology of the invariant complex (Λ g*, d_θ).
struct CohomologyTable {
  std::vector<CohomologyDegree> degrees;
  std::vector<std::size_t> betti() const;
  long euler_characteristic() const;
};

/// Exact ranks. Throws std::invalid_argument when θ is not closed.
CohomologyTable morse_novikov(const TwistedComplex& tc);

/// Real (1,1)-forms η with d_θ η = 0: reduced-echelon basis of the kernel inside the Hermitian slice.
std::vector<GradedForm> ker_d_theta_11(const TwistedComplex& tc);

/// True iff ⟨T, η⟩ = 0 for every η in basis.
bool annihilator_check(const std::vector<GradedForm>& basis, const Current& t, const ComplexFrame& frame);

}  // namespace lckcert
