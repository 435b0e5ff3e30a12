#pragma once

#include "polytess/projection.hpp"
#include "polytess/rational.hpp"

#include <string>
#include <vector>

namespace polytess {

enum class ElementClass {
  CubeEdge,
  BaseHighlight,  // reserved for a highlighted base facet; build_scene emits none
  ConeEdge,
  SimplexEdge,
  CuboidStick,
  BarycenterDot,
  OriginDot,
};

struct ScenePoint {
  RatVec at;
  ElementClass cls;
};

struct SceneEdge {
  RatVec from;
  RatVec to;
  ElementClass cls;
};

struct Scene {
  int ambient = 0;
  std::vector<SceneEdge> edges;
  std::vector<ScenePoint> points;
};

// The full figure at dimension m = n+1: every cube edge, the cone from the
// origin to the ceiling vertices, the simplex edges, the cuboid sticks
// p_J -> p_{J u {j}} for n+1 in J, the barycenter dots, and the origin dot.
// Counts: m*2^{m-1}, 2^n, C(m,2), n*2^{n-1} edges and 2^n + 1 dots.
Scene build_scene(int n);

enum class FrameFormat { Svg, Obj };

struct FrameSpec {
  double t = 0.0;
  ProjectionKind kind = ProjectionKind::Roots2D;
  FrameFormat format = FrameFormat::Svg;
  int size_px = 640;
  // Frame label = floor(t * C(m,2) * frames_per_interval); an animation with
  // F frames passes F / C(m,2) so labels run 0..F-1.
  double frames_per_interval = 1.0;
};

// Rotates by rotation_schedule(m, t), projects, and serializes. SVG for
// 2-row projections, OBJ for 3-row ones; anything else throws. Output is a
// pure function of (scene, spec): reruns are byte-identical.
std::string render_frame(const Scene& scene, const FrameSpec& spec);

}  // namespace polytess
