#include "polytess/scene.hpp"

#include "polytess/constructions.hpp"
#include "polytess/index_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace polytess {

namespace {

std::string fmt(const char* pattern, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, value);
  return buf;
}

// HSV with full saturation and value, hue given as a fraction of the circle.
std::string hue_color(double hue_fraction) {
  const double h = hue_fraction * 6.0;
  const int sector = static_cast<int>(std::floor(h)) % 6;
  const double f = h - std::floor(h);
  double r = 0, g = 0, b = 0;
  switch (sector) {
    case 0: r = 1; g = f; b = 0; break;
    case 1: r = 1 - f; g = 1; b = 0; break;
    case 2: r = 0; g = 1; b = f; break;
    case 3: r = 0; g = 1 - f; b = 1; break;
    case 4: r = f; g = 0; b = 1; break;
    default: r = 1; g = 0; b = 1 - f; break;
  }
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02X%02X%02X", int(std::lround(255 * r)),
                int(std::lround(255 * g)), int(std::lround(255 * b)));
  return buf;
}

struct EdgeStyle {
  std::string color;
  int width;
};

EdgeStyle edge_style(ElementClass cls) {
  switch (cls) {
    case ElementClass::CubeEdge: return {"#808080", 1};
    case ElementClass::BaseHighlight: return {"#808080", 2};
    case ElementClass::ConeEdge: return {hue_color(0.0), 2};
    case ElementClass::SimplexEdge: return {hue_color(0.5), 3};
    case ElementClass::CuboidStick: return {hue_color(0.7), 2};
    default: throw std::invalid_argument("edge_style: not an edge class");
  }
}

Eigen::VectorXd to_float(const RatVec& v) {
  Eigen::VectorXd f(v.size());
  for (Eigen::Index j = 0; j < v.size(); ++j) f(j) = to_double(v(j));
  return f;
}

}  // namespace

Scene build_scene(int n) {
  if (n < 1) throw std::invalid_argument("build_scene: n must be >= 1");
  const int m = n + 1;
  Scene scene;
  scene.ambient = m;

  const uint64_t cube_count = uint64_t(1) << m;
  for (uint64_t mask = 0; mask < cube_count; ++mask) {
    const RatVec from = subset_vertex(IndexSet::from_mask(m, mask));
    for (int b = 0; b < m; ++b) {
      if (mask & (uint64_t(1) << b)) continue;
      scene.edges.push_back(
          {from, subset_vertex(IndexSet::from_mask(m, mask | (uint64_t(1) << b))),
           ElementClass::CubeEdge});
    }
  }

  const RatVec origin = RatVec::Zero(m);
  const uint64_t ceiling_bit = uint64_t(1) << n;
  const uint64_t base_count = uint64_t(1) << n;
  for (uint64_t mask = 0; mask < base_count; ++mask) {
    scene.edges.push_back(
        {origin, subset_vertex(IndexSet::from_mask(m, mask | ceiling_bit)),
         ElementClass::ConeEdge});
  }

  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      scene.edges.push_back({subset_vertex(IndexSet(m, {i})),
                             subset_vertex(IndexSet(m, {j})),
                             ElementClass::SimplexEdge});
    }
  }

  for (uint64_t mask = 0; mask < base_count; ++mask) {
    const uint64_t full = mask | ceiling_bit;
    const RatVec from = barycenter(IndexSet::from_mask(m, full)).coords;
    for (int j = 1; j <= n; ++j) {
      if (full & (uint64_t(1) << (j - 1))) continue;
      scene.edges.push_back(
          {from,
           barycenter(IndexSet::from_mask(m, full | (uint64_t(1) << (j - 1)))).coords,
           ElementClass::CuboidStick});
    }
  }

  for (uint64_t mask = 0; mask < base_count; ++mask) {
    scene.points.push_back(
        {barycenter(IndexSet::from_mask(m, mask | ceiling_bit)).coords,
         ElementClass::BarycenterDot});
  }
  scene.points.push_back({origin, ElementClass::OriginDot});
  return scene;
}

namespace {

std::string render_svg(const std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>>& edges,
                       const std::vector<Eigen::VectorXd>& dots, const Scene& scene,
                       const FrameSpec& spec, long long label) {
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  auto grow = [&](const Eigen::VectorXd& p) {
    if (first) {
      minx = maxx = p(0);
      miny = maxy = p(1);
      first = false;
      return;
    }
    minx = std::min(minx, p(0));
    maxx = std::max(maxx, p(0));
    miny = std::min(miny, p(1));
    maxy = std::max(maxy, p(1));
  };
  for (const auto& [a, b] : edges) {
    grow(a);
    grow(b);
  }
  for (const Eigen::VectorXd& p : dots) grow(p);

  const double size = spec.size_px;
  const double extent = std::max(maxx - minx, maxy - miny);
  const double scale = extent > 0 ? 0.8 * size / extent : 1.0;
  const double cx = (minx + maxx) / 2;
  const double cy = (miny + maxy) / 2;
  auto px = [&](double x) { return size / 2 + (x - cx) * scale; };
  auto py = [&](double y) { return size / 2 - (y - cy) * scale; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(spec.size_px) + "\" height=\"" + std::to_string(spec.size_px) +
         "\" viewBox=\"0 0 " + std::to_string(spec.size_px) + " " +
         std::to_string(spec.size_px) + "\">\n<g>\n";
  for (size_t e = 0; e < edges.size(); ++e) {
    const EdgeStyle style = edge_style(scene.edges[e].cls);
    out += "<line x1=\"" + fmt("%.3f", px(edges[e].first(0))) + "\" y1=\"" +
           fmt("%.3f", py(edges[e].first(1))) + "\" x2=\"" +
           fmt("%.3f", px(edges[e].second(0))) + "\" y2=\"" +
           fmt("%.3f", py(edges[e].second(1))) + "\" stroke=\"" + style.color +
           "\" stroke-width=\"" + std::to_string(style.width) + "\"/>\n";
  }
  for (size_t d = 0; d < dots.size(); ++d) {
    const bool origin = scene.points[d].cls == ElementClass::OriginDot;
    const double radius = (origin ? 0.010 : 0.005) * size;
    const std::string color = origin ? "#000000" : hue_color(0.99);
    out += "<circle cx=\"" + fmt("%.3f", px(dots[d](0))) + "\" cy=\"" +
           fmt("%.3f", py(dots[d](1))) + "\" r=\"" + fmt("%.3f", radius) +
           "\" fill=\"" + color + "\"/>\n";
  }
  out += "<text x=\"10\" y=\"20\" fill=\"#1A1A1A\">" + std::to_string(label) +
         "</text>\n</g>\n</svg>\n";
  return out;
}

std::string render_obj(const std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>>& edges,
                       const std::vector<Eigen::VectorXd>& dots) {
  std::string out = "# wireframe frame\n";
  std::map<std::string, int> index;
  std::string vertex_lines;
  auto vertex_id = [&](const Eigen::VectorXd& p) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "v %.6f %.6f %.6f", p(0), p(1), p(2));
    auto [it, inserted] = index.emplace(buf, static_cast<int>(index.size()) + 1);
    if (inserted) {
      vertex_lines += buf;
      vertex_lines += '\n';
    }
    return it->second;
  };
  std::string element_lines;
  for (const auto& [a, b] : edges) {
    const int ia = vertex_id(a);
    const int ib = vertex_id(b);
    element_lines += "l " + std::to_string(ia) + " " + std::to_string(ib) + "\n";
  }
  for (const Eigen::VectorXd& p : dots) {
    element_lines += "p " + std::to_string(vertex_id(p)) + "\n";
  }
  out += vertex_lines;
  out += element_lines;
  return out;
}

}  // namespace

std::string render_frame(const Scene& scene, const FrameSpec& spec) {
  const int m = scene.ambient;
  const ProjectionMatrix proj = make_projection(spec.kind, m);
  const int need_rows = spec.format == FrameFormat::Svg ? 2 : 3;
  if (proj.rows() != need_rows) {
    throw std::invalid_argument("render_frame: projection rows do not match format");
  }
  const Eigen::MatrixXd map = proj * rotation_schedule(m, spec.t);

  std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> edges;
  edges.reserve(scene.edges.size());
  for (const SceneEdge& e : scene.edges) {
    edges.emplace_back(map * to_float(e.from), map * to_float(e.to));
  }
  std::vector<Eigen::VectorXd> dots;
  dots.reserve(scene.points.size());
  for (const ScenePoint& p : scene.points) dots.push_back(map * to_float(p.at));

  const int pair_count = m * (m - 1) / 2;
  const long long label = static_cast<long long>(
      std::floor(spec.t * pair_count * spec.frames_per_interval + 1e-9));

  if (spec.format == FrameFormat::Svg) {
    return render_svg(edges, dots, scene, spec, label);
  }
  return render_obj(edges, dots);
}

}  // namespace polytess
