#include "traverse/figures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>

namespace traverse {

namespace {

constexpr std::array<const char*, 11> kPalette{"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948",
                                               "#b07aa1", "#9c755f", "#ff9da7", "#8cd17d", "#bab0ac"};

struct Frame {
  double xmin, ymin, xmax, ymax, scale;
  int width, height;

  double px(double x) const { return (x - xmin) * scale; }
  double py(double y) const { return (ymax - y) * scale; }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double eval(const BPoly& f, double x, double y) {
  double v = 0;
  for (const auto& [e, c] : f.terms()) v += to_double(c) * std::pow(x, e.first) * std::pow(y, e.second);
  return v;
}

void draw_line(std::ostringstream& out, const Frame& fr, double x0, double y0, double x1, double y1,
               const std::string& style) {
  out << "<line x1=\"" << fmt(fr.px(x0)) << "\" y1=\"" << fmt(fr.py(y0)) << "\" x2=\"" << fmt(fr.px(x1))
      << "\" y2=\"" << fmt(fr.py(y1)) << "\" " << style << "/>\n";
}

void draw_curve(std::ostringstream& out, const Frame& fr, const BPoly& f, int n) {
  const double dx = (fr.xmax - fr.xmin) / n, dy = (fr.ymax - fr.ymin) / n;
  std::vector<double> values((n + 1) * (n + 1));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) values[i * (n + 1) + j] = eval(f, fr.xmin + i * dx, fr.ymin + j * dy);
  }
  auto v = [&](int i, int j) { return values[i * (n + 1) + j]; };
  out << "<path fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\" d=\"";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::array<std::pair<double, double>, 4> corner{
          {{fr.xmin + i * dx, fr.ymin + j * dy},
           {fr.xmin + (i + 1) * dx, fr.ymin + j * dy},
           {fr.xmin + (i + 1) * dx, fr.ymin + (j + 1) * dy},
           {fr.xmin + i * dx, fr.ymin + (j + 1) * dy}}};
      const std::array<double, 4> val{v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)};
      std::vector<std::pair<double, double>> hits;
      for (int k = 0; k < 4; ++k) {
        const double a = val[k], b = val[(k + 1) % 4];
        if ((a < 0) == (b < 0)) continue;
        const double t = a / (a - b);
        hits.push_back({corner[k].first + t * (corner[(k + 1) % 4].first - corner[k].first),
                        corner[k].second + t * (corner[(k + 1) % 4].second - corner[k].second)});
      }
      for (std::size_t k = 0; k + 1 < hits.size(); k += 2) {
        out << "M" << fmt(fr.px(hits[k].first)) << " " << fmt(fr.py(hits[k].second)) << "L"
            << fmt(fr.px(hits[k + 1].first)) << " " << fmt(fr.py(hits[k + 1].second));
      }
    }
  }
  out << "\"/>\n";
}

// Points where the line meets the boundary, in line order.
std::vector<std::pair<double, double>> line_hits(const Scene& scene, const Line& line) {
  std::vector<std::pair<double, std::pair<double, double>>> hits;
  for (std::size_t c = 0; c < scene.component_count(); ++c) {
    const UPoly p = restrict_to_line(scene.component(c).implicit, line);
    if (p.is_constant()) continue;
    for (auto& r : isolate_real_roots(squarefree_part(p))) {
      r.refine_until(Rational(1, 1000000000));
      const double t = r.approx();
      if (line.ray && t <= 0) continue;
      hits.push_back({t, {to_double(line.px) + t * to_double(line.dx), to_double(line.py) + t * to_double(line.dy)}});
    }
  }
  std::sort(hits.begin(), hits.end());
  std::vector<std::pair<double, double>> out;
  for (const auto& h : hits) out.push_back(h.second);
  return out;
}

std::vector<Rational> spread(const Rational& lo, const Rational& hi, int count) {
  const Rational eps = (hi - lo) / 1000;
  std::vector<Rational> out;
  for (int k = 0; k < count; ++k) out.push_back(lo + eps + (hi - lo - 2 * eps) * make_rational(k, count - 1));
  return out;
}

// Parameters from `from` towards infinity in direction `sign`, dense near `from`.
std::vector<Rational> spread_to_infinity(const Rational& from, int sign, int count) {
  std::vector<Rational> out;
  for (int k = 0; k < count; ++k) {
    const Rational u = make_rational(2 * k + 1, 2 * count + 2);
    out.push_back(from + sign * (u / (1 - u) + Rational(1, 100000)));
  }
  if (sign < 0) std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::string render_svg(const Scene& scene, const TrajectoryGraph& graph, const FigureOptions& options) {
  Frame fr{};
  fr.xmin = to_double(scene.bbox.xmin);
  fr.ymin = to_double(scene.bbox.ymin);
  fr.xmax = to_double(scene.bbox.xmax);
  fr.ymax = to_double(scene.bbox.ymax);
  fr.scale = options.width / (fr.xmax - fr.xmin);
  fr.width = options.width;
  fr.height = static_cast<int>(std::lround((fr.ymax - fr.ymin) * fr.scale));

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fr.width << "\" height=\"" << fr.height
      << "\" viewBox=\"0 0 " << fr.width << " " << fr.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_of;
  for (const auto& e : graph.edges) {
    for (const auto& m : e.members) edge_of[m] = e.id;
  }
  const LineFamily family = LineFamily::of(scene.field, graph.chart);
  const std::size_t n = graph.events.size();
  std::vector<std::pair<std::size_t, std::vector<Rational>>> tint;
  for (std::size_t i = 1; i < n; ++i) {
    tint.push_back({i, spread(graph.events[i - 1].parameter.hi(), graph.events[i].parameter.lo(), options.tint_lines)});
  }
  if (graph.radial) {
    if (n == 0) {
      auto params = spread_to_infinity(0, -1, 2 * options.tint_lines);
      for (const auto& p : spread_to_infinity(0, 1, 2 * options.tint_lines)) params.push_back(p);
      tint.push_back({0, params});
    } else {
      const Rational last = graph.events[n - 1].parameter.hi(), first = graph.events[0].parameter.lo();
      auto params = spread_to_infinity(last, 1, 2 * options.tint_lines);
      for (const auto& p : spread_to_infinity(first, -1, 2 * options.tint_lines)) params.push_back(p);
      tint.push_back({0, params});
    }
  }
  out << "<g stroke=\"none\" fill-opacity=\"0.45\">\n";
  for (const auto& [sample, params] : tint) {
    std::optional<CrossingList> prev;
    for (const auto& p : params) {
      CrossingList cl = interval_structure(scene, family, p);
      if (prev && prev->segment_count() == cl.segment_count()) {
        for (std::size_t j = 0; j < cl.segment_count(); ++j) {
          const auto it = edge_of.find({sample, j});
          if (it == edge_of.end()) continue;
          const auto& a0 = prev->crossings[2 * j];
          const auto& b0 = prev->crossings[2 * j + 1];
          const auto& a1 = cl.crossings[2 * j];
          const auto& b1 = cl.crossings[2 * j + 1];
          out << "<polygon class=\"slab\" fill=\"" << kPalette[it->second % kPalette.size()] << "\" points=\"";
          for (const auto* c : {&a0, &b0, &b1, &a1}) out << fmt(fr.px(c->x)) << "," << fmt(fr.py(c->y)) << " ";
          out << "\"/>\n";
        }
      }
      prev = std::move(cl);
    }
  }
  out << "</g>\n";

  for (std::size_t c = 0; c < scene.component_count(); ++c) draw_curve(out, fr, scene.component(c).implicit, options.grid);

  const double gap = 1e-3 * (fr.xmax - fr.xmin);
  for (const auto& e : graph.events) {
    if (e.trajectory_pattern.is_singleton()) continue;
    RealAlgebraic s = e.parameter;
    s.refine_until(Rational(1, 1000000000));
    const Line line = family.line(midpoint(s.lo(), s.hi()));
    const auto hits = line_hits(scene, line);
    const double dlx = to_double(line.dx), dly = to_double(line.dy);
    const double at = (e.x - to_double(line.px)) * dlx + (e.y - to_double(line.py)) * dly;
    std::optional<std::pair<double, double>> before, after;
    for (const auto& h : hits) {
      const double along = (h.first - to_double(line.px)) * dlx + (h.second - to_double(line.py)) * dly;
      if (std::hypot(h.first - e.x, h.second - e.y) < gap) continue;
      if (along < at) before = h;
      if (along > at && !after) after = h;
    }
    if (before && after) {
      draw_line(out, fr, before->first, before->second, after->first, after->second,
                "stroke=\"#c00\" stroke-width=\"1.2\" stroke-dasharray=\"4 2\"");
    }
  }
  for (const auto& e : graph.events) {
    out << "<circle cx=\"" << fmt(fr.px(e.x)) << "\" cy=\"" << fmt(fr.py(e.y)) << "\" r=\"3.5\" fill=\""
        << (e.trajectory_pattern.is_singleton() ? "#06c" : "#c00") << "\" class=\"tangency\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace traverse
