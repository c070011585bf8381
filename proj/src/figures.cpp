#include "mirrorkit/figures.hpp"

#include "mirrorkit/tropical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

namespace mirrorkit {

std::string to_string(FigureKind kind) {
  switch (kind) {
    case FigureKind::AnnulusCurves: return "annulus-curves";
    case FigureKind::CoverLifts: return "cover-lifts";
    case FigureKind::CoverSurgery: return "cover-surgery";
    case FigureKind::PolytopeWeights: return "polytope-weights";
  }
  return "unknown";
}

std::optional<FigureKind> parse_figure_kind(const std::string& s) {
  for (auto k : {FigureKind::AnnulusCurves, FigureKind::CoverLifts, FigureKind::CoverSurgery, FigureKind::PolytopeWeights})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

Index figure_dimension(FigureKind kind) { return kind == FigureKind::PolytopeWeights ? 2 : 1; }

std::complex<double> annulus_curve(long k, double t) {
  const double radius = std::numbers::e * t + (1 - t) / std::numbers::e;
  return std::polar(radius, 2 * std::numbers::pi * static_cast<double>(k) * t);
}

namespace {

using Point = std::pair<double, double>;

std::string num(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string signed_label(const Integer& h) { return h > 0 ? "+" + h.get_str() : h.get_str(); }

class Svg {
 public:
  Svg(int width, int height, double stroke) : stroke_(stroke) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << height << "\" width=\""
         << width << "\" height=\"" << height << "\">\n";
    out_ << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  }

  void polyline(const std::string& cls, const std::vector<Point>& pts, const std::string& color,
                const std::string& extra = {}) {
    out_ << "<polyline class=\"" << cls << "\"" << extra << " fill=\"none\" stroke=\"" << color
         << "\" stroke-width=\"" << num(stroke_) << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
      out_ << (i ? " " : "") << num(pts[i].first) << ',' << num(pts[i].second);
    out_ << "\"/>\n";
  }

  void circle(const std::string& cls, Point c, double r, const std::string& stroke, const std::string& fill) {
    out_ << "<circle class=\"" << cls << "\" cx=\"" << num(c.first) << "\" cy=\"" << num(c.second) << "\" r=\""
         << num(r) << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(stroke_ / 2)
         << "\"/>\n";
  }

  void text(const std::string& cls, Point at, const std::string& label, const std::string& anchor = "middle") {
    out_ << "<text class=\"" << cls << "\" x=\"" << num(at.first) << "\" y=\"" << num(at.second)
         << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"" << anchor << "\">" << label << "</text>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
  double stroke_;
};

std::string annulus_figure(const FigureSpec& spec) {
  Svg svg(400, 400, spec.stroke_width);
  const double cx = 200, cy = 200, scale = 60;
  auto to_svg = [&](std::complex<double> z) { return Point{cx + scale * z.real(), cy - scale * z.imag()}; };
  svg.circle("annulus-boundary", {cx, cy}, scale / std::numbers::e, "gray", "none");
  svg.circle("annulus-boundary", {cx, cy}, scale * std::numbers::e, "gray", "none");
  const std::vector<std::pair<long, std::string>> curves{{0, "red"}, {-1, "blue"}, {-2, "purple"}};
  for (const auto& [k, color] : curves) {
    std::vector<Point> pts;
    for (int j = 0; j < spec.samples; ++j) pts.push_back(to_svg(annulus_curve(k, double(j) / (spec.samples - 1))));
    svg.polyline("section", pts, color, " data-k=\"" + std::to_string(k) + "\"");
  }
  svg.text("label", {cx, 30}, "O (red), O(-1) (blue), O(-2) (purple)");
  return svg.finish();
}

// Cover pictures: base coordinate s in [-1, 1], fibre height y.
Point cover_point(double s, double y) { return {200 + 150 * s, 200 - 80 * y}; }

Integer end_height(const AffineLift& lift, bool left) {
  const bool first_is_left = lift.vertices()[0][0] < lift.vertices()[1][0];
  return lift.height(first_is_left == left ? 0 : 1)[0];
}

double lift_height(const AffineLift& lift, double s) {
  const double left = end_height(lift, true).get_d();
  const double right = end_height(lift, false).get_d();
  return left + (right - left) * (s + 1) / 2;
}

std::vector<Point> sample_lift(const AffineLift& lift, double from, double to, int samples) {
  std::vector<Point> pts;
  for (int j = 0; j < samples; ++j) {
    const double s = from + (to - from) * j / (samples - 1);
    pts.push_back(cover_point(s, lift_height(lift, s)));
  }
  return pts;
}

void cover_axes(Svg& svg) {
  svg.polyline("axis", {cover_point(-1.2, 0), cover_point(1.2, 0)}, "lightgray");
  svg.polyline("axis", {cover_point(-1, -1.6), cover_point(-1, 1.6)}, "lightgray");
  svg.polyline("axis", {cover_point(1, -1.6), cover_point(1, 1.6)}, "lightgray");
  svg.text("vertex-label", {cover_point(-1, -1.9)}, "-1");
  svg.text("vertex-label", {cover_point(1, -1.9)}, "+1");
}

std::string cover_lifts_figure(const FigureSpec& spec) {
  const MultiSection euler = euler_multisection(1);
  const AffineLift zero = zero_section(euler.vertices());
  Svg svg(400, 400, spec.stroke_width);
  cover_axes(svg);
  const std::vector<std::string> colors{"blue", "teal"};
  for (std::size_t c = 0; c < euler.components().size(); ++c) {
    const AffineLift& lift = euler.components()[c];
    svg.polyline("lift", sample_lift(lift, -1, 1, spec.samples), colors[c % colors.size()],
                 " data-component=\"" + std::to_string(c) + "\"");
  }
  svg.polyline("zero-section", sample_lift(zero, -1, 1, spec.samples), "red");
  for (const auto& lift : euler.components())
    for (double s : {-1.0, 1.0}) {
      const double y = lift_height(lift, s);
      const Point at = cover_point(s, y);
      svg.text("height-label", {at.first + (s < 0 ? -12 : 12), at.second + 5}, signed_label(end_height(lift, s < 0)),
               s < 0 ? "end" : "start");
    }
  return svg.finish();
}

// Handle spliced at p where the path arrives along direction u and leaves along v.
std::vector<Point> handle_arc(Point p, Point u, Point v, double eps, int samples) {
  std::vector<Point> pts;
  for (int j = 0; j < samples; ++j) {
    const Rational t = Rational(2 * j) / (samples - 1) - 1;
    const PlanarPoint h = handle_curve(t);
    const double a = h.x.get_d(), b = h.y.get_d();
    pts.push_back(cover_point(p.first + eps * (a * u.first + b * v.first), p.second + eps * (a * u.second + b * v.second)));
  }
  return pts;
}

std::string cover_surgery_figure(const FigureSpec& spec) {
  const MultiSection euler = euler_multisection(1);
  const AffineLift zero = zero_section(euler.vertices());
  const SurgeredSection surgered = surgery(euler, zero);
  const double eps = 0.25;

  Svg svg(400, 400, spec.stroke_width);
  cover_axes(svg);

  // Each component is trimmed near its own surgery point; the zero section
  // survives only between the two handles.
  double zero_from = -1, zero_to = 1;
  std::vector<std::vector<Point>> handles;
  for (const SurgeryPoint& sp : surgered.surgery_points()) {
    const AffineLift& lift = euler.components()[sp.component];
    const double s0 = lift.vertices()[sp.vertex][0].get_d();
    const double slope = lift_height(lift, 1) / 2 - lift_height(lift, -1) / 2;
    const double from = s0 < 0 ? -1 + eps : -1;
    const double to = s0 < 0 ? 1 : 1 - eps;
    svg.polyline("lift", sample_lift(lift, from, to, spec.samples), "blue",
                 " data-component=\"" + std::to_string(sp.component) + "\"");
    if (s0 < 0) {
      zero_from = -1 + eps;
      handles.push_back(handle_arc({s0, 0}, {-1, 0}, {1, slope}, eps, spec.samples));
    } else {
      zero_to = 1 - eps;
      handles.push_back(handle_arc({s0, 0}, {1, slope}, {-1, 0}, eps, spec.samples));
    }
  }
  svg.polyline("zero-section", sample_lift(zero, zero_from, zero_to, spec.samples), "red");
  for (const auto& h : handles) svg.polyline("handle", h, "black");

  for (std::size_t v = 0; v < euler.vertices().size(); ++v) {
    const double s = euler.vertices()[v][0].get_d();
    for (const auto& w : lagrangian_weights(surgered, v)) {
      const Point at = cover_point(s, w[0].get_d());
      svg.text("surgered", {at.first + (s < 0 ? -12 : 12), at.second + 5}, signed_label(w[0]), s < 0 ? "end" : "start");
    }
  }
  svg.text("label", {200, 30}, "rotation class " + rotation_class(surgered).get_str());
  return svg.finish();
}

std::string weight_label(const std::set<MVector>& ws) {
  std::string out = "{";
  bool first = true;
  for (const auto& w : ws) {
    out += (first ? "" : ",") + to_string(w);
    first = false;
  }
  return out + "}";
}

template <class Tag>
void draw_polygon(Svg& svg, const Polytope<Tag>& p, Point origin, double scale, const std::string& color) {
  auto at = [&](const RatVector& x) { return Point{origin.first + scale * x[0].get_d(), origin.second - scale * x[1].get_d()}; };
  // Cyclic order around the centroid.
  std::vector<RatVector> verts = p.vertices();
  double cx = 0, cy = 0;
  for (const auto& v : verts) cx += v[0].get_d(), cy += v[1].get_d();
  cx /= verts.size(), cy /= verts.size();
  std::sort(verts.begin(), verts.end(), [&](const RatVector& a, const RatVector& b) {
    return std::atan2(a[1].get_d() - cy, a[0].get_d() - cx) < std::atan2(b[1].get_d() - cy, b[0].get_d() - cx);
  });
  std::vector<Point> pts;
  for (const auto& v : verts) pts.push_back(at(v));
  pts.push_back(pts.front());
  svg.polyline("polytope", pts, color);
  for (const auto& lp : lattice_points(p)) svg.circle("lattice-point", at(lp.rational()), 3, "black", "black");
}

std::string polytope_weights_figure(const FigureSpec& spec) {
  const ProjectiveSpace space = projective_space(2);
  const TheoremReport report = verify_main_theorem(2);
  Svg svg(640, 340, spec.stroke_width);
  const Point m_origin{160, 200}, n_origin{480, 170};
  const double scale = 60;
  draw_polygon(svg, space.anticanonical, m_origin, scale, "blue");
  draw_polygon(svg, space.fano, n_origin, scale, "red");
  svg.text("title", {m_origin.first + 30, 320}, "Delta");
  svg.text("title", {n_origin.first, 320}, "Delta polar");
  for (const auto& row : report.cones) {
    const double x = m_origin.first + scale * row.vertex[0].get_d();
    const double y = m_origin.second - scale * row.vertex[1].get_d();
    const double dx = row.vertex[0] > 0 ? 10 : -10;
    const double dy = row.vertex[1] > 0 ? -10 : 20;
    svg.text("weights", {x + dx, y + dy}, weight_label(row.surgered), row.vertex[0] > 0 ? "start" : "middle");
  }
  return svg.finish();
}

}  // namespace

std::string emit_figure(const FigureSpec& spec) {
  if (spec.samples < 16) throw FigureError("figures need at least 16 samples per curve");
  if (spec.n != figure_dimension(spec.kind))
    throw FigureError(to_string(spec.kind) + " is only drawn for n = " + std::to_string(figure_dimension(spec.kind)));
  switch (spec.kind) {
    case FigureKind::AnnulusCurves: return annulus_figure(spec);
    case FigureKind::CoverLifts: return cover_lifts_figure(spec);
    case FigureKind::CoverSurgery: return cover_surgery_figure(spec);
    case FigureKind::PolytopeWeights: return polytope_weights_figure(spec);
  }
  throw FigureError("unknown figure kind");
}

}  // namespace mirrorkit
