#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nambu/scalar_field.hpp"

namespace nambu {

struct BracketResult {
  double value;
  // Largest |entry| of the derivative matrix.
  double conditioning;
};

// N-dimensional Nambu system: N-1 ordered Hamiltonians and an optional
// normalization factor multiplying every bracket (constant 1 when absent).
// Reordering the Hamiltonians flips the sign of the flow.
class NambuSystem {
 public:
  NambuSystem(PhaseSpace space, std::vector<ScalarField> hamiltonians,
              std::optional<ScalarField> normalization = std::nullopt);

  const PhaseSpace& space() const noexcept { return space_; }
  const std::vector<ScalarField>& hamiltonians() const noexcept {
    return hamiltonians_;
  }
  const std::optional<ScalarField>& normalization() const noexcept {
    return normalization_;
  }

 private:
  PhaseSpace space_;
  std::vector<ScalarField> hamiltonians_;
  std::optional<ScalarField> normalization_;
};

// Sum over conjugate pairs of (d_q f d_p g - d_p f d_q g).
double poisson_bracket(const ScalarField& f, const ScalarField& g,
                       PointView x);

// det[grad f_1; ...; grad f_N] (times `normalization` if given), via LU with
// partial pivoting.
BracketResult nambu_bracket(std::span<const ScalarField> fields, PointView x,
                            const std::optional<ScalarField>& normalization =
                                std::nullopt);

// The bracket {f_1, ..., f_N} as a field of its own. Its gradient is taken by
// central differences.
ScalarField bracket_field(std::vector<ScalarField> fields);

// x_dot_i = {x_i, H_1, ..., H_{N-1}}.
Point flow_field(const NambuSystem& system, PointView x);

// {f1,f2,{g1,g2,g3}} - {{f1,f2,g1},g2,g3} - {g1,{f1,f2,g2},g3}
//   - {g1,g2,{f1,f2,g3}} for the three-dimensional Jacobian bracket.
double fundamental_identity_residual(const ScalarField& f1,
                                     const ScalarField& f2,
                                     const ScalarField& g1,
                                     const ScalarField& g2,
                                     const ScalarField& g3, PointView x);

}  // namespace nambu
