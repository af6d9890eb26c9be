#include "sphertrans/transforms.hpp"

#include <cmath>
#include <string>

namespace sphertrans {

void require_unit_interval(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
    throw Error(ErrorCode::InvalidParameter,
                std::string(name) + " must lie in [0,1], got " + std::to_string(value));
  }
}

OperatorTuple duggal(const SphericalPolar& polar) {
  std::vector<ComplexMatrix> out;
  out.reserve(polar.v.size());
  for (const auto& vk : polar.v) out.push_back(polar.p * vk);
  return OperatorTuple(std::move(out));
}

OperatorTuple duggal(const OperatorTuple& t) { return duggal(spherical_polar(t)); }

OperatorTuple generalized_aluthge(const SphericalPolar& polar, double param) {
  require_unit_interval(param, "t");
  const ComplexMatrix left = polar.power(param);
  const ComplexMatrix right = polar.power(1.0 - param);
  std::vector<ComplexMatrix> out;
  out.reserve(polar.v.size());
  for (const auto& vk : polar.v) out.push_back(left * vk * right);
  return OperatorTuple(std::move(out));
}

OperatorTuple generalized_aluthge(const OperatorTuple& t, double param) {
  require_unit_interval(param, "t");
  if (param == 0.0) return t;
  return generalized_aluthge(spherical_polar(t), param);
}

OperatorTuple aluthge(const SphericalPolar& polar) { return generalized_aluthge(polar, 0.5); }
OperatorTuple aluthge(const OperatorTuple& t) { return aluthge(spherical_polar(t)); }

OperatorTuple heinz(const SphericalPolar& polar, double param) {
  require_unit_interval(param, "t");
  // Symmetric in t ↔ 1−t by construction: both orders are summed identically.
  const double lo = std::min(param, 1.0 - param);
  const ComplexMatrix a = polar.power(lo);
  const ComplexMatrix b = polar.power(1.0 - lo);
  std::vector<ComplexMatrix> out;
  out.reserve(polar.v.size());
  for (const auto& vk : polar.v) out.push_back(0.5 * (a * vk * b + b * vk * a));
  return OperatorTuple(std::move(out));
}

OperatorTuple heinz(const OperatorTuple& t, double param) { return heinz(spherical_polar(t), param); }

OperatorTuple lambda_mean(const OperatorTuple& t, const SphericalPolar& polar, double lambda) {
  require_unit_interval(lambda, "lambda");
  if (lambda == 1.0) return t;
  return affine_combination(lambda, t, 1.0 - lambda, duggal(polar));
}

OperatorTuple lambda_mean(const OperatorTuple& t, double lambda) {
  require_unit_interval(lambda, "lambda");
  if (lambda == 1.0) return t;
  return lambda_mean(t, spherical_polar(t), lambda);
}

OperatorTuple mean(const OperatorTuple& t, const SphericalPolar& polar) { return lambda_mean(t, polar, 0.5); }
OperatorTuple mean(const OperatorTuple& t) { return lambda_mean(t, 0.5); }

}  // namespace sphertrans
