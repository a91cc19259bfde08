#include "molsens/sensitivity.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "molsens/errors.hpp"
#include "molsens/solver.hpp"

namespace molsens {

namespace {

constexpr double kHalfPi = 0.5 * kPi;

// Offset of `angle` from `anchor`, taken in [-pi/2, 3pi/2): the normal-cone
// bounds sit within one exterior angle (< pi) of the anchor.
double offset_from(double anchor, double angle) { return reduce_angle(angle - anchor, kHalfPi); }

std::string deg(double radians) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << degrees(radians);
  return os.str();
}

}  // namespace

AngularInterval mono_tolerance(const Polygon& polygon, Vec2 form, Tolerance tol) {
  const double phi = to_polar(form).phi;
  const Face face = argmax_face(polygon, form, tol);
  if (!face.is_vertex()) {
    throw GeometryError(ErrorKind::EdgeOptimal,
                        "form is normal to edge " + to_string(face) +
                            "; its optimal set is not a single vertex");
  }
  const EdgeAngles ea = edge_angles(polygon, face.first);
  const double lo = phi - offset_from(ea.theta1 - kHalfPi, phi);
  return make_interval(lo, lo + (ea.theta2 - ea.theta1));
}

SensitivityClass molp_sensitivity(const Polygon& polygon, const ObjectiveBundle& bundle,
                                  Tolerance tol) {
  const EfficientSet eff = efficient_chain(polygon, bundle, tol);
  SensitivityClass cls;
  cls.k1 = eff.cone.k1;
  cls.k2 = eff.cone.k2;
  cls.g1 = bundle.gradient(eff.cone.k1);
  cls.g2 = bundle.gradient(eff.cone.k2);
  cls.phi1 = eff.cone.phi1;
  cls.phi2 = eff.cone.phi2;
  cls.chain = eff.chain;

  const std::size_t end = eff.vs.back();
  const double lo = cls.phi1 - offset_from(edge_angles(polygon, eff.chain.start).theta1 - kHalfPi,
                                           cls.phi1);
  const double hi = cls.phi2 + offset_from(cls.phi2, edge_angles(polygon, end).theta2 - kHalfPi);
  cls.tolerance = make_interval(lo, hi);
  cls.theta1 = lo + kHalfPi;
  cls.theta2 = hi + kHalfPi;
  return cls;
}

AngularInterval single_gradient_window(const SensitivityClass& cls) {
  return make_interval(std::max(cls.tolerance.lo, cls.phi2 - kPi),
                       std::min(cls.tolerance.hi, cls.phi1 + kPi));
}

ObjectiveBundle sample_member(const SensitivityClass& cls, std::size_t K,
                              std::span<const double> thetas, Tolerance tol) {
  if (K < 2 || thetas.size() != K - 2) {
    throw GeometryError(ErrorKind::InvalidArgument,
                        "K = " + std::to_string(K) + " needs exactly K - 2 extra angles, got " +
                            std::to_string(thetas.size()));
  }
  std::vector<Vec2> gradients{cls.g1, cls.g2};
  double lo = cls.phi1;
  double hi = cls.phi2;
  const double r = norm(cls.g1);
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (!interval_contains(cls.tolerance, thetas[i], tol)) {
      throw GeometryError(ErrorKind::AngleOutOfTolerance,
                          "extra angle " + std::to_string(i + 1) + " = " + deg(thetas[i]) +
                              " deg is outside ]" + deg(cls.tolerance.lo) + ", " +
                              deg(cls.tolerance.hi) + "[");
    }
    const double w = reduce_angle(thetas[i], cls.tolerance.midpoint());
    lo = std::min(lo, w);
    hi = std::max(hi, w);
    gradients.push_back(r * unit_vector(w));
  }
  if (hi - lo >= kPi - tol.eps) {
    throw GeometryError(ErrorKind::ConeWidened,
                        "extra angles spread the gradient cone over " + deg(hi - lo) +
                            " deg; members need a pointed cone");
  }
  return ObjectiveBundle(std::move(gradients));
}

bool is_equivalent(const Polygon& polygon, const ObjectiveBundle& g, const ObjectiveBundle& h,
                   Tolerance tol) {
  // Chains with equal (start, count) are the same point set and vice versa.
  return efficient_chain(polygon, g, tol).chain == efficient_chain(polygon, h, tol).chain;
}

bool in_class(const Polygon& polygon, const SensitivityClass& cls, const ObjectiveBundle& g,
              Tolerance tol) {
  try {
    return efficient_chain(polygon, g, tol).chain == cls.chain;
  } catch (const GeometryError& e) {
    if (e.kind() == ErrorKind::WideCone) return false;
    throw;
  }
}

}  // namespace molsens
