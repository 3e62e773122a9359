#include "kbar/render.hpp"

#include <cmath>
#include <sstream>

namespace kbar {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCx = 200.0, kCy = 200.0, kR = 170.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct Svg {
  std::ostringstream body;

  void circle(double x, double y, double r, const char* style) {
    body << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\""
         << num(r) << "\" " << style << "/>\n";
  }
  void dot(double x, double y, const std::string& label, const char* fill) {
    body << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y)
         << "\" r=\"4\" fill=\"" << fill << "\"/>\n";
    body << "  <text x=\"" << num(x + 6) << "\" y=\"" << num(y - 6)
         << "\" font-size=\"11\">" << label << "</text>\n";
  }
  void arc(double a0, double a1, double pull) {
    // Quadratic curve between two rim points, control point pulled toward
    // the center; deeper arcs pull less.
    double x0 = kCx + kR * std::cos(a0), y0 = kCy + kR * std::sin(a0);
    double x1 = kCx + kR * std::cos(a1), y1 = kCy + kR * std::sin(a1);
    double mid = (a0 + a1) / 2;
    double cr = kR * (1 - pull);
    double cx = kCx + cr * std::cos(mid), cy = kCy + cr * std::sin(mid);
    body << "  <path d=\"M " << num(x0) << " " << num(y0) << " Q " << num(cx)
         << " " << num(cy) << " " << num(x1) << " " << num(y1)
         << "\" fill=\"none\" stroke=\"#444\"/>\n";
  }
};

// Draw interior items clustered around (x, y) within radius r.
void draw_interior(Svg& svg, const InteriorItem& it, double x, double y,
                   double r) {
  if (it.is_particle()) {
    svg.dot(x, y, "p" + std::to_string(it.particle), "#1b6");
    return;
  }
  svg.circle(x, y, r, "fill=\"none\" stroke=\"#c33\"");
  std::size_t k = it.children.size();
  for (std::size_t i = 0; i < k; ++i) {
    double a = 2 * kPi * static_cast<double>(i) / static_cast<double>(k);
    double rr = r * 0.55;
    draw_interior(svg, it.children[i], x + rr * std::cos(a),
                  y + rr * std::sin(a), r * 0.35);
  }
}

void draw_boundary(Svg& svg, const BoundaryItem& it, double a0, double a1,
                   int depth);

void draw_boundary_span(Svg& svg, const std::vector<BoundaryItem>& items,
                        double a0, double a1, int depth) {
  std::size_t k = items.size();
  if (k == 0) return;
  double step = (a1 - a0) / static_cast<double>(k);
  for (std::size_t i = 0; i < k; ++i)
    draw_boundary(svg, items[i], a0 + step * static_cast<double>(i),
                  a0 + step * static_cast<double>(i + 1), depth);
}

void draw_boundary(Svg& svg, const BoundaryItem& it, double a0, double a1,
                   int depth) {
  double mid = (a0 + a1) / 2;
  if (it.is_particle()) {
    svg.dot(kCx + kR * std::cos(mid), kCy + kR * std::sin(mid),
            "q" + std::to_string(it.particle), "#36c");
    return;
  }
  double pull = 0.45 / static_cast<double>(depth);
  svg.arc(a0 + 0.02, a1 - 0.02, pull);
  // Interior content near the rim inside the enclosed region.
  std::size_t ni = it.interior.size();
  for (std::size_t i = 0; i < ni; ++i) {
    double a = a0 + (a1 - a0) * (static_cast<double>(i) + 0.5) /
                        static_cast<double>(ni);
    double rr = kR * (1 - pull * 0.5);
    draw_interior(svg, it.interior[i], kCx + rr * std::cos(a),
                  kCy + rr * std::sin(a), kR * pull * 0.3);
  }
  draw_boundary_span(svg, it.boundary, a0 + 0.04, a1 - 0.04, depth + 1);
}

}  // namespace

std::string render_disk_svg(const BubbleTree& t) {
  require_valid(t);
  Svg svg;
  svg.circle(kCx, kCy, kR, "fill=\"#fafafa\" stroke=\"#000\"");
  draw_boundary_span(svg, t.boundary, -kPi / 2, 3 * kPi / 2, 1);
  std::size_t ni = t.interior.size();
  for (std::size_t i = 0; i < ni; ++i) {
    double a = 2 * kPi * static_cast<double>(i) / static_cast<double>(ni);
    double rr = ni == 1 ? 0.0 : kR * 0.35;
    draw_interior(svg, t.interior[i], kCx + rr * std::cos(a),
                  kCy + rr * std::sin(a), kR * 0.22);
  }
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
      "viewBox=\"0 0 400 400\">\n";
  out += svg.body.str();
  out += "</svg>\n";
  return out;
}

namespace {

void dual_dot_node(std::ostringstream& os, const DualTree::Node& n, int& id,
                   int parent, bool spatial_edge) {
  int me = id++;
  switch (n.kind) {
    case DualTree::Node::Kind::Vertex:
      os << "  v" << me << " [shape=point];\n";
      break;
    case DualTree::Node::Kind::InteriorLeaf:
      os << "  v" << me << " [label=\"p" << n.label << "\" shape=circle];\n";
      break;
    case DualTree::Node::Kind::BoundaryLeaf:
      os << "  v" << me << " [label=\"q" << n.label << "\" shape=box];\n";
      break;
  }
  if (parent >= 0)
    os << "  v" << parent << " -- v" << me
       << (spatial_edge ? " [style=dashed color=red];\n" : ";\n");
  for (const auto& c : n.spatial) dual_dot_node(os, c, id, me, true);
  for (const auto& c : n.planar) dual_dot_node(os, c, id, me, false);
}

}  // namespace

std::string render_dual_dot(const BubbleTree& t) {
  DualTree d = dual_tree(t);
  std::ostringstream os;
  os << "graph dual {\n";
  int id = 0;
  dual_dot_node(os, d.root, id, -1, false);
  os << "}\n";
  return os.str();
}

}  // namespace kbar
