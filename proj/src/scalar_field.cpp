#include "nambu/scalar_field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nambu/errors.hpp"

namespace nambu {

namespace {

void require_same_space(const ScalarField& a, const ScalarField& b) {
  if (!(a.space() == b.space())) {
    throw DomainError("fields live on different phase spaces");
  }
}

}  // namespace

ScalarField ScalarField::native(PhaseSpace space, ValueFn value,
                                GradientFn gradient) {
  const GradientMode mode =
      gradient ? GradientMode::Analytic : GradientMode::CentralDifference;
  return ScalarField(std::make_shared<const Body>(Body{
                         std::move(space), std::move(value),
                         std::move(gradient)}),
                     mode);
}

ScalarField ScalarField::from_expression(Expression expression) {
  PhaseSpace space = expression.space();
  return native(std::move(space),
                [e = std::move(expression)](PointView x) {
                  return e.evaluate(x);
                });
}

ScalarField ScalarField::parse(std::string_view text, const PhaseSpace& space,
                               const ParameterMap& params) {
  return from_expression(parse_expression(text, space, params));
}

ScalarField ScalarField::coordinate(const PhaseSpace& space,
                                    std::size_t index) {
  if (index >= space.dim()) throw DomainError("coordinate index out of range");
  const std::size_t n = space.dim();
  return native(
      space, [index](PointView x) { return x[index]; },
      [index, n](PointView) {
        Point g(n, 0.0);
        g[index] = 1.0;
        return g;
      });
}

ScalarField ScalarField::constant(const PhaseSpace& space, double value) {
  const std::size_t n = space.dim();
  return native(
      space, [value](PointView) { return value; },
      [n](PointView) { return Point(n, 0.0); });
}

ScalarField ScalarField::central_difference() const {
  return ScalarField(body_, GradientMode::CentralDifference);
}

double ScalarField::operator()(PointView x) const {
  require_dim(space(), x);
  const double v = body_->value(x);
  if (!std::isfinite(v)) {
    throw SingularEvaluation("field is singular at the evaluation point");
  }
  return v;
}

Point ScalarField::gradient(PointView x) const {
  require_dim(space(), x);
  if (mode_ == GradientMode::Analytic) {
    Point g = body_->gradient(x);
    for (double gi : g) {
      if (!std::isfinite(gi)) {
        throw SingularEvaluation("gradient is singular at the evaluation point");
      }
    }
    return g;
  }
  return central_difference_gradient(*this, x);
}

double finite_difference_step(double coordinate) {
  static const double kBase = std::cbrt(std::numeric_limits<double>::epsilon());
  return kBase * std::max(1.0, std::abs(coordinate));
}

Point central_difference_gradient(const ScalarField& field, PointView x) {
  Point probe(x.begin(), x.end());
  Point g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double h = finite_difference_step(x[i]);
    probe[i] = x[i] + h;
    const double up = field(probe);
    probe[i] = x[i] - h;
    const double down = field(probe);
    probe[i] = x[i];
    g[i] = (up - down) / (2.0 * h);
  }
  return g;
}

namespace {

ScalarField combine(const ScalarField& a, const ScalarField& b,
                    ScalarField::ValueFn value,
                    ScalarField::GradientFn gradient) {
  require_same_space(a, b);
  const bool analytic = a.gradient_mode() == GradientMode::Analytic &&
                        b.gradient_mode() == GradientMode::Analytic;
  return ScalarField::native(a.space(), std::move(value),
                             analytic ? std::move(gradient)
                                      : ScalarField::GradientFn{});
}

}  // namespace

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return combine(
      a, b, [a, b](PointView x) { return a(x) + b(x); },
      [a, b](PointView x) {
        Point g = a.gradient(x);
        const Point gb = b.gradient(x);
        for (std::size_t i = 0; i < g.size(); ++i) g[i] += gb[i];
        return g;
      });
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  return combine(
      a, b, [a, b](PointView x) { return a(x) - b(x); },
      [a, b](PointView x) {
        Point g = a.gradient(x);
        const Point gb = b.gradient(x);
        for (std::size_t i = 0; i < g.size(); ++i) g[i] -= gb[i];
        return g;
      });
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  return combine(
      a, b, [a, b](PointView x) { return a(x) * b(x); },
      [a, b](PointView x) {
        const double va = a(x);
        const double vb = b(x);
        Point g = a.gradient(x);
        const Point gb = b.gradient(x);
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = g[i] * vb + va * gb[i];
        return g;
      });
}

ScalarField operator*(double s, const ScalarField& a) {
  return a * ScalarField::constant(a.space(), s);
}

}  // namespace nambu
