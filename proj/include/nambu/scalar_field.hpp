#pragma once

#include <functional>
#include <memory>
#include <string>

#include "nambu/expression.hpp"
#include "nambu/phase_space.hpp"

namespace nambu {

enum class GradientMode { Analytic, CentralDifference };

// Real-valued function on a phase space. Immutable and cheap to copy; copies
// share the underlying body.
class ScalarField {
 public:
  using ValueFn = std::function<double(PointView)>;
  using GradientFn = std::function<Point(PointView)>;

  // Closure-backed field. Without `gradient` the field differentiates by
  // central differences.
  static ScalarField native(PhaseSpace space, ValueFn value,
                            GradientFn gradient = {});
  static ScalarField from_expression(Expression expression);
  static ScalarField parse(std::string_view text, const PhaseSpace& space,
                           const ParameterMap& params = {});
  static ScalarField coordinate(const PhaseSpace& space, std::size_t index);
  static ScalarField constant(const PhaseSpace& space, double value);

  const PhaseSpace& space() const noexcept { return body_->space; }
  GradientMode gradient_mode() const noexcept { return mode_; }

  // Same field, differentiated by central differences regardless of whether
  // an analytic gradient exists.
  ScalarField central_difference() const;

  // Throws SingularEvaluation on a non-finite value.
  double operator()(PointView x) const;
  double eval(PointView x) const { return (*this)(x); }

  Point gradient(PointView x) const;

  // Pointwise algebra. Analytic gradients compose when both operands have one.
  friend ScalarField operator+(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator-(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(double s, const ScalarField& a);

 private:
  struct Body {
    PhaseSpace space;
    ValueFn value;
    GradientFn gradient;  // empty: no analytic gradient
  };

  ScalarField(std::shared_ptr<const Body> body, GradientMode mode)
      : body_(std::move(body)), mode_(mode) {}

  std::shared_ptr<const Body> body_;
  GradientMode mode_;
};

// (f(x + h e_i) - f(x - h e_i)) / 2h with h_i = cbrt(eps) * max(1, |x_i|).
Point central_difference_gradient(const ScalarField& field, PointView x);

double finite_difference_step(double coordinate);

}  // namespace nambu
