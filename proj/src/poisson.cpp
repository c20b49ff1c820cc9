#include "necklace/poisson.hpp"

#include "necklace/calculus.hpp"

namespace necklace {

const std::vector<std::pair<std::string, std::string>>& conventions() {
  static const std::vector<std::pair<std::string, std::string>> block = {
      {"orientation", "d_x^d_y with coordinates in chart order is positive"},
      {"schouten", "[X,f] = X(f), [X,Y] = Lie bracket, [P,Q] = -(-1)^((p-1)(q-1)) [Q,P]"},
      {"poisson_bracket", "{h,k} = pi(dh,dk)"},
      {"pi_sharp", "pi_sharp(alpha) = pi(alpha, .)"},
      {"hamiltonian_vector_field", "X_h = [pi,h] = -pi_sharp(dh), so X_h(k) = {k,h}"},
      {"modular_vector_field", "L_{X_h} mu = Delta(h) mu"},
      {"volume_change", "Delta_{g mu} = Delta_mu - (1/g) X_g"},
      {"symplectic_form", "omega = (1/f) dx^dy for pi = f d_x^d_y"},
      {"interior_product", "left contraction"},
      {"wirtinger", "d/dw = (d/dx - i d/dy)/2, d/dwbar = (d/dx + i d/dy)/2"},
  };
  return block;
}

PoissonStructure::PoissonStructure(Multivector bivector, std::string label, std::optional<Scalar> c)
    : bivector_(std::move(bivector)), label_(std::move(label)), c_(std::move(c)) {
  for (const auto& [m, f] : bivector_.components()) {
    if (mask_degree(m) != 2) throw Error(ErrorCode::NotPoisson, label_ + ": not a bivector");
  }
  Multivector square = schouten(bivector_, bivector_);
  if (!square.is_zero()) throw Error(ErrorCode::NotPoisson, label_ + ": [pi,pi] = " + square.str());
}

}  // namespace necklace
