#include "molsens/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "molsens/errors.hpp"

namespace molsens {

namespace {

constexpr double kCanvas = 480.0;
constexpr double kMargin = 48.0;

std::string fixed3(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

// World to screen: uniform scale, y axis flipped.
struct Frame {
  Vec2 lo;
  Vec2 hi;
  double scale = 1.0;

  Vec2 map(Vec2 p) const { return {kMargin + (p.x - lo.x) * scale, kMargin + (hi.y - p.y) * scale}; }
  double width() const { return 2.0 * kMargin + (hi.x - lo.x) * scale; }
  double height() const { return 2.0 * kMargin + (hi.y - lo.y) * scale; }
};

Frame frame_for(const Polygon& polygon) {
  Frame f{polygon.vertex(1), polygon.vertex(1), 1.0};
  for (const Vec2& v : polygon.vertices()) {
    f.lo = {std::min(f.lo.x, v.x), std::min(f.lo.y, v.y)};
    f.hi = {std::max(f.hi.x, v.x), std::max(f.hi.y, v.y)};
  }
  const double extent = std::max(f.hi.x - f.lo.x, f.hi.y - f.lo.y);
  f.scale = (kCanvas - 2.0 * kMargin) / extent;
  return f;
}

std::string point(Vec2 p) { return fixed3(p.x) + "," + fixed3(p.y); }

}  // namespace

std::string render_svg(const Polygon& polygon, const GradientCone& cone, const Chain& chain) {
  validate_chain(polygon, chain);
  const Frame f = frame_for(polygon);
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed3(f.width()) << "\" height=\""
      << fixed3(f.height()) << "\" viewBox=\"0 0 " << fixed3(f.width()) << " " << fixed3(f.height()) << "\">\n"
      << "  <defs>\n"
      << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"8\" markerHeight=\"8\" "
         "orient=\"auto\">\n"
      << "      <path d=\"M0,0 L10,5 L0,10 z\" fill=\"#1f4e9c\"/>\n"
      << "    </marker>\n"
      << "  </defs>\n";

  svg << "  <polygon class=\"region\" points=\"";
  for (std::size_t j = 1; j <= polygon.size(); ++j) svg << (j > 1 ? " " : "") << point(f.map(polygon.vertex(j)));
  svg << "\" fill=\"#eef2f7\" stroke=\"#555555\" stroke-width=\"1.5\"/>\n";

  const std::vector<std::size_t> ids = chain_vertices(polygon, chain);
  if (ids.size() == 1) {
    svg << "  <circle class=\"chain\" cx=\"" << fixed3(f.map(polygon.vertex(ids[0])).x) << "\" cy=\""
        << fixed3(f.map(polygon.vertex(ids[0])).y) << "\" r=\"6.000\" fill=\"#c0392b\"/>\n";
  } else {
    svg << "  <polyline class=\"chain\" points=\"";
    for (std::size_t i = 0; i < ids.size(); ++i) svg << (i > 0 ? " " : "") << point(f.map(polygon.vertex(ids[i])));
    svg << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"4\"/>\n";
  }

  const Vec2 c = polygon.centroid();
  const double reach = 0.3 * std::max(f.hi.x - f.lo.x, f.hi.y - f.lo.y);
  const std::pair<std::size_t, double> rays[] = {{cone.k1, cone.phi1}, {cone.k2, cone.phi2}};
  for (const auto& [k, phi] : rays) {
    const Vec2 a = f.map(c);
    const Vec2 b = f.map(c + reach * unit_vector(phi));
    svg << "  <line class=\"generator\" x1=\"" << fixed3(a.x) << "\" y1=\"" << fixed3(a.y) << "\" x2=\""
        << fixed3(b.x) << "\" y2=\"" << fixed3(b.y)
        << "\" stroke=\"#1f4e9c\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
    const Vec2 t = f.map(c + 1.12 * reach * unit_vector(phi));
    svg << "  <text x=\"" << fixed3(t.x) << "\" y=\"" << fixed3(t.y)
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#1f4e9c\">c" << k << "</text>\n";
  }

  for (std::size_t j = 1; j <= polygon.size(); ++j) {
    const Vec2 v = polygon.vertex(j);
    const Vec2 out = v - c;
    const Vec2 p = f.map(v);
    const Vec2 l = f.map(v + (14.0 / f.scale) * (out / std::max(norm(out), 1e-12)));
    svg << "  <circle cx=\"" << fixed3(p.x) << "\" cy=\"" << fixed3(p.y) << "\" r=\"2.500\" fill=\"#333333\"/>\n";
    svg << "  <text class=\"label\" x=\"" << fixed3(l.x) << "\" y=\"" << fixed3(l.y)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">v"
        << j << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void emit_svg(const Polygon& polygon, const GradientCone& cone, const Chain& chain,
              const std::filesystem::path& path) {
  const std::string doc = render_svg(polygon, cone, chain);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileWriteError("cannot open '" + path.string() + "' for writing");
  out << doc;
  out.flush();
  if (!out) throw FileWriteError("write to '" + path.string() + "' failed");
}

}  // namespace molsens
