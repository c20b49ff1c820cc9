#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "necklace/multivector.hpp"

namespace necklace {

/// The fixed sign conventions every computation uses, as key/value pairs.
/// Reports embed this block verbatim.
const std::vector<std::pair<std::string, std::string>>& conventions();

/// A bivector whose Schouten square vanishes. Construction runs the Jacobi
/// check and throws NotPoisson when it fails.
class PoissonStructure {
 public:
  PoissonStructure(Multivector bivector, std::string label, std::optional<Scalar> c = std::nullopt);

  const Multivector& bivector() const { return bivector_; }
  const ChartPtr& chart() const { return bivector_.chart(); }
  const std::string& label() const { return label_; }
  const std::optional<Scalar>& family_param_c() const { return c_; }

 private:
  Multivector bivector_;
  std::string label_;
  std::optional<Scalar> c_;
};

}  // namespace necklace
