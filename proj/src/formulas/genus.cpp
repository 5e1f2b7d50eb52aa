#include "chow/genus.hpp"

#include "chow/errors.hpp"

namespace chow {

void FibrationGenusData::validate() const {
  if (auto r = rho.constant_value(); r && *r < 1) {
    throw ConstraintError("rho = " + r->get_str() +
                          " violates rho >= 1: C -> B can never be unramified");
  }
  if (hyperelliptic) {
    auto qv = q.constant_value();
    auto r = rho.constant_value();
    if (qv && r && *qv >= 1 && *r != 1 && *r != 2) {
      throw ConstraintError("rho = " + r->get_str() +
                            ": a hyperelliptic C over a base of positive genus needs rho in {1, 2}");
    }
  }
}

ParamPoly genus_of_zero_curve(const FibrationGenusData& data) {
  data.validate();
  const ParamPoly twice = data.two_g_minus_two();
  if (auto v = twice.constant_value()) {
    if (!is_integer(*v) || v->get_num() % 2 != 0) {
      throw ConstraintError("d(2q-2+rho) = " + v->get_str() + " is odd: genus would not be integral");
    }
  }
  return Rational(1, 2) * twice + 1;
}

ParamPoly zero_curve_euler(const FibrationGenusData& data) { return -data.two_g_minus_two(); }

}  // namespace chow
