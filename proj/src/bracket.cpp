#include "nambu/bracket.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>

#include "nambu/errors.hpp"

namespace nambu {

NambuSystem::NambuSystem(PhaseSpace space,
                         std::vector<ScalarField> hamiltonians,
                         std::optional<ScalarField> normalization)
    : space_(std::move(space)),
      hamiltonians_(std::move(hamiltonians)),
      normalization_(std::move(normalization)) {
  if (hamiltonians_.size() + 1 != space_.dim()) {
    throw DomainError("a Nambu system on an N-dimensional space needs N-1 "
                      "Hamiltonians");
  }
  for (const auto& h : hamiltonians_) {
    if (!(h.space() == space_)) {
      throw DomainError("Hamiltonian defined on a different phase space");
    }
  }
  if (normalization_ && !(normalization_->space() == space_)) {
    throw DomainError("normalization defined on a different phase space");
  }
}

double poisson_bracket(const ScalarField& f, const ScalarField& g,
                       PointView x) {
  const PhaseSpace& space = f.space();
  if (!space.is_canonical()) {
    throw DomainError("Poisson bracket needs a canonical phase space");
  }
  if (!(g.space() == space)) {
    throw DomainError("fields live on different phase spaces");
  }
  const Point df = f.gradient(x);
  const Point dg = g.gradient(x);
  double sum = 0.0;
  for (const auto& [q, p] : space.pairs()) {
    sum += df[q] * dg[p] - df[p] * dg[q];
  }
  return sum;
}

namespace {

BracketResult determinant_of(const Eigen::MatrixXd& m) {
  const double cond = m.cwiseAbs().maxCoeff();
  return {m.partialPivLu().determinant(), cond};
}

}  // namespace

BracketResult nambu_bracket(std::span<const ScalarField> fields, PointView x,
                            const std::optional<ScalarField>& normalization) {
  if (fields.empty()) throw DomainError("no fields given to the bracket");
  const PhaseSpace& space = fields.front().space();
  const std::size_t n = space.dim();
  if (fields.size() != n) {
    throw DomainError("Nambu bracket on an N-dimensional space takes N fields");
  }
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(fields[i].space() == space)) {
      throw DomainError("fields live on different phase spaces");
    }
    const Point g = fields[i].gradient(x);
    for (std::size_t j = 0; j < n; ++j) m(i, j) = g[j];
  }
  BracketResult r = determinant_of(m);
  if (normalization) r.value *= (*normalization)(x);
  return r;
}

ScalarField bracket_field(std::vector<ScalarField> fields) {
  if (fields.empty()) throw DomainError("no fields given to the bracket");
  PhaseSpace space = fields.front().space();
  return ScalarField::native(
      std::move(space), [fields = std::move(fields)](PointView x) {
        return nambu_bracket(fields, x).value;
      });
}

Point flow_field(const NambuSystem& system, PointView x) {
  const std::size_t n = system.space().dim();
  require_dim(system.space(), x);
  Eigen::MatrixXd m(n, n);
  for (std::size_t k = 0; k < n - 1; ++k) {
    const Point g = system.hamiltonians()[k].gradient(x);
    for (std::size_t j = 0; j < n; ++j) m(k + 1, j) = g[j];
  }
  const double scale =
      system.normalization() ? (*system.normalization())(x) : 1.0;
  Point v(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Row 0 is grad x_i = e_i.
    m.row(0).setZero();
    m(0, i) = 1.0;
    v[i] = scale * determinant_of(m).value;
  }
  return v;
}

double fundamental_identity_residual(const ScalarField& f1,
                                     const ScalarField& f2,
                                     const ScalarField& g1,
                                     const ScalarField& g2,
                                     const ScalarField& g3, PointView x) {
  if (f1.space().dim() != 3) {
    throw DomainError("fundamental identity is checked on three-dimensional "
                      "spaces");
  }
  auto br = [&](ScalarField a, ScalarField b, ScalarField c) {
    return nambu_bracket(std::vector<ScalarField>{a, b, c}, x).value;
  };
  const ScalarField inner_g = bracket_field({g1, g2, g3});
  const ScalarField inner_1 = bracket_field({f1, f2, g1});
  const ScalarField inner_2 = bracket_field({f1, f2, g2});
  const ScalarField inner_3 = bracket_field({f1, f2, g3});
  return br(f1, f2, inner_g) - br(inner_1, g2, g3) - br(g1, inner_2, g3) -
         br(g1, g2, inner_3);
}

}  // namespace nambu
