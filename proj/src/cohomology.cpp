#include "lckcert/cohomology.hpp"

#include "lckcert/slice.hpp"

namespace lckcert {

std::vector<std::size_t> CohomologyTable::betti() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.betti);
  return out;
}

long CohomologyTable::euler_characteristic() const {
  long chi = 0;
  for (const auto& d : degrees) chi += (d.degree % 2 == 0 ? 1 : -1) * static_cast<long>(d.betti);
  return chi;
}

CohomologyTable morse_novikov(const TwistedComplex& tc) {
  const int dim = tc.dim();
  // TwistedComplex only exists for validated models, but d_θ∘d_θ = 0 is what the ranks rely on.
  for (int k = 0; k + 1 < dim; ++k)
    if (!(tc.d_theta(k + 1) * tc.d_theta(k)).is_zero())
      throw std::invalid_argument("morse_novikov: d_theta does not square to zero (theta not closed)");

  CohomologyTable table;
  std::vector<std::vector<Vec<Rational>>> images(dim + 2);
  for (int k = 0; k < dim; ++k) images[k + 1] = column_space(tc.d_theta(k));

  for (int k = 0; k <= dim; ++k) {
    CohomologyDegree deg;
    deg.degree = k;
    deg.dim_forms = ExteriorBasis::get(dim).size(k);
    const auto kernel = nullspace(tc.d_theta(k));
    deg.dim_kernel = kernel.size();
    deg.dim_image = images[k].size();
    deg.betti = deg.dim_kernel - deg.dim_image;

    // Complete the image basis with kernel vectors, in order.
    auto spanning = images[k];
    std::size_t current_rank = spanning.size();
    for (const auto& v : kernel) {
      if (deg.representatives.size() == deg.betti) break;
      spanning.push_back(v);
      const auto r = rank(QMatrix::from_columns(deg.dim_forms, spanning));
      if (r > current_rank) {
        current_rank = r;
        deg.representatives.push_back(v);
      } else {
        spanning.pop_back();
      }
    }
    table.degrees.push_back(std::move(deg));
  }
  return table;
}

std::vector<GradedForm> ker_d_theta_11(const TwistedComplex& tc) {
  const HermitianSlice slice(tc, 1);
  std::vector<GradedForm> out;
  for (const auto& x : slice.kernel_basis()) out.push_back(slice.form_from_coordinates(x));
  return out;
}

bool annihilator_check(const std::vector<GradedForm>& basis, const Current& t, const ComplexFrame& frame) {
  for (const auto& eta : basis)
    if (!pair(t, eta, frame).is_zero()) return false;
  return true;
}

}  // namespace lckcert
