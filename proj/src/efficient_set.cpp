#include "molsens/efficient_set.hpp"

namespace molsens {

EfficientSet efficient_chain(const Polygon& polygon, const ObjectiveBundle& bundle, Tolerance tol) {
  EfficientSet out;
  out.cone = extreme_rays(bundle, tol);
  out.first_face = argmax_face(polygon, bundle.gradient(out.cone.k1), tol);
  out.last_face = argmax_face(polygon, bundle.gradient(out.cone.k2), tol);

  const std::size_t n = polygon.size();
  const std::size_t start = out.first_face.first;
  const std::size_t end = out.last_face.second;
  out.chain = {start, ((end + n - start) % n) + 1};
  out.vs = chain_vertices(polygon, out.chain);
  return out;
}

ObjectiveBundle reduce_to_tolp(const ObjectiveBundle& bundle, Tolerance tol) {
  const GradientCone cone = extreme_rays(bundle, tol);
  return ObjectiveBundle({bundle.gradient(cone.k1), bundle.gradient(cone.k2)});
}

}  // namespace molsens
