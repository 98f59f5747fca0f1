#include "quadspec/galerkin.hpp"

#include "quadspec/errors.hpp"
#include "quadspec/lapack.hpp"

namespace quadspec {

std::vector<double> galerkin_eigenvalues(const AssembledForms& forms, int count) {
  const int N = forms.A0.dim;
  if (count < 1 || count > N) throw InvalidArgument("galerkin_eigenvalues: count must be in [1, N]");
  std::vector<double> all = lapack::sym_generalized_values(forms.A1.to_dense(), forms.A0.to_dense());
  all.resize(count);
  return all;
}

}  // namespace quadspec
