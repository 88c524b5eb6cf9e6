#include "sheafradon/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "sheafradon/parallel.hpp"

namespace sheafradon {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  std::string s = buf;
  if (s == "-0.000000000000") s = "0.000000000000";
  return s;
}

namespace {

std::string birth_decoration(const Bar& b) { return to_string(b.birth.kind); }
std::string death_decoration(const Bar& b) { return to_string(b.death.kind); }

}  // namespace

std::string barcode_csv(const RadonSummary& s, Norm norm) {
  std::ostringstream os;
  os << "dir_index,dx,dy,degree,birth_scaled,birth_unit,birth_dec,death_scaled,death_unit,death_dec,mult\n";
  for (std::size_t i = 0; i < s.directions.size(); ++i) {
    const Direction& d = s.directions[i];
    for (const auto& b : s.barcodes[i].bars()) {
      os << i << ',' << d.p << ',' << d.q << ',' << b.degree << ',';
      if (b.birth.kind == BirthKind::minus_infinity) {
        os << "-inf,-inf,";
      } else {
        os << b.birth.level.to_string() << ',' << format_double(to_unit(b.birth.level, d, norm).to_double()) << ',';
      }
      os << birth_decoration(b) << ',';
      if (b.death.kind == DeathKind::plus_infinity) {
        os << "inf,inf,";
      } else {
        os << b.death.level.to_string() << ',' << format_double(to_unit(b.death.level, d, norm).to_double()) << ',';
      }
      os << death_decoration(b) << ',' << b.mult << '\n';
    }
  }
  return os.str();
}

namespace {

struct Canvas {
  double width = 640, height = 420, pad = 40;
  double x0, x1, y0, y1;

  double sx(double x) const { return pad + (x - x0) / (x1 - x0) * (width - 2 * pad); }
  double sy(double y) const { return height - pad - (y - y0) / (y1 - y0) * (height - 2 * pad); }
};

std::string svg_open(const Canvas& c) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.width << "\" height=\"" << c.height
     << "\" viewBox=\"0 0 " << c.width << ' ' << c.height << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

std::string polygon(const std::vector<std::pair<double, double>>& pts, const Canvas& c, const std::string& style) {
  std::ostringstream os;
  os << "<polygon points=\"";
  for (const auto& [x, y] : pts) os << format_double(c.sx(x)) << ',' << format_double(c.sy(y)) << ' ';
  os << "\" " << style << "/>\n";
  return os.str();
}

}  // namespace

std::string profile_svg(const RadonSummary& s, Norm norm, const std::optional<Rational>& shift) {
  const double two_pi = 2 * std::numbers::pi;
  struct Item {
    double angle, level;
    bool epigraph;
  };
  std::vector<Item> items;
  double lo = -1, hi = 1;
  for (std::size_t i = 0; i < s.directions.size(); ++i) {
    double ang = s.directions[i].angle();
    if (ang < 0) ang += two_pi;
    for (const auto& b : s.barcodes[i].bars()) {
      if (b.birth.kind == BirthKind::minus_infinity) continue;
      double v = to_unit(b.birth.level, s.directions[i], norm).to_double();
      items.push_back({ang, v, s.phi[i].has_value()});
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  const double a = shift ? to_double(*shift) : 0.0;
  Canvas c;
  c.x0 = 0;
  c.x1 = two_pi;
  c.y0 = std::floor(lo - a - 1);
  c.y1 = std::ceil(hi + 1);
  std::ostringstream os;
  os << svg_open(c);
  os << "<line x1=\"" << c.sx(0) << "\" y1=\"" << format_double(c.sy(0)) << "\" x2=\"" << c.sx(two_pi) << "\" y2=\""
     << format_double(c.sy(0)) << "\" stroke=\"#999\"/>\n";
  if (s.has_phi()) {
    std::vector<std::pair<double, double>> curve;
    for (const auto& it : items) curve.emplace_back(it.angle, it.level);
    std::sort(curve.begin(), curve.end());
    auto region = [&](double down, const std::string& style) {
      std::vector<std::pair<double, double>> pts{{0, c.y1}};
      for (const auto& [x, y] : curve) pts.emplace_back(x, y - down);
      pts.emplace_back(two_pi, curve.empty() ? c.y1 : curve.front().second - down);
      pts.emplace_back(two_pi, c.y1);
      return polygon(pts, c, style);
    };
    os << region(0, "fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#3182bd\"");
    if (shift) os << region(a, "fill=\"#fdae6b\" fill-opacity=\"0.4\" stroke=\"#e6550d\"");
  }
  for (const auto& it : items) {
    os << "<circle cx=\"" << format_double(c.sx(it.angle)) << "\" cy=\"" << format_double(c.sy(it.level))
       << "\" r=\"2\" fill=\"" << (it.epigraph ? "#08519c" : "#a50f15") << "\"/>\n";
  }
  os << "<text x=\"" << c.pad << "\" y=\"20\" font-family=\"sans-serif\" font-size=\"12\">birth level per direction angle ("
     << to_string(norm) << " units)</text>\n";
  os << "</svg>\n";
  return os.str();
}

StalkSamples sample_convolution(const SheafObject& f, const BallSpec& ball, int per_side) {
  if (per_side < 2) throw std::invalid_argument("need at least two samples per side");
  StalkSamples s;
  s.window = f.window();
  const Rational dx = (s.window.xmax - s.window.xmin) / (per_side - 1);
  const Rational dy = (s.window.ymax - s.window.ymin) / (per_side - 1);
  for (int i = 0; i < per_side; ++i) {
    for (int j = 0; j < per_side; ++j) s.points.emplace_back(s.window.xmin + dx * i, s.window.ymin + dy * j);
  }
  s.dims.resize(s.points.size());
  parallel_for(s.points.size(), [&](std::size_t k) { s.dims[k] = convolve_stalk(f, ball, s.points[k]); });
  return s;
}

std::string stalk_field_csv(const StalkField& sf) {
  std::ostringstream os;
  os << "cell,dim,x,y,degree,rank\n";
  const auto& c = *sf.complex;
  for (std::size_t cell = 0; cell < c.cell_count(); ++cell) {
    Point p = c.representative(cell);
    for (const auto& [k, v] : sf.dims[cell].entries()) {
      os << cell << ',' << c.dim(cell) << ',' << to_string(p.x) << ',' << to_string(p.y) << ',' << k << ',' << v << '\n';
    }
  }
  return os.str();
}

std::string stalk_samples_csv(const StalkSamples& s) {
  std::ostringstream os;
  os << "x,y,degree,rank\n";
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    for (const auto& [k, v] : s.dims[i].entries()) {
      os << to_string(s.points[i].x) << ',' << to_string(s.points[i].y) << ',' << k << ',' << v << '\n';
    }
  }
  return os.str();
}

namespace {

const char* degree_color(const GradedDims& g) {
  const bool h0 = g.at(0) > 0, h1 = g.at(1) > 0;
  if (h0 && h1) return "#756bb1";
  if (h0) return "#6baed6";
  if (h1) return "#fd8d3c";
  if (!g.is_zero()) return "#74c476";
  return "none";
}

Canvas square_canvas(const Box& w) {
  Canvas c;
  c.width = c.height = 520;
  c.x0 = to_double(w.xmin);
  c.x1 = to_double(w.xmax);
  c.y0 = to_double(w.ymin);
  c.y1 = to_double(w.ymax);
  return c;
}

std::string legend(const Canvas& c) {
  std::ostringstream os;
  os << "<rect x=\"" << c.pad << "\" y=\"" << c.height - c.pad + 12 << "\" width=\"10\" height=\"10\" fill=\"#6baed6\"/>"
     << "<text x=\"" << c.pad + 14 << "\" y=\"" << c.height - c.pad + 21
     << "\" font-family=\"sans-serif\" font-size=\"11\">H0</text>\n"
     << "<rect x=\"" << c.pad + 50 << "\" y=\"" << c.height - c.pad + 12
     << "\" width=\"10\" height=\"10\" fill=\"#fd8d3c\"/>"
     << "<text x=\"" << c.pad + 64 << "\" y=\"" << c.height - c.pad + 21
     << "\" font-family=\"sans-serif\" font-size=\"11\">H1</text>\n";
  return os.str();
}

}  // namespace

std::string stalk_field_svg(const StalkField& sf) {
  const auto& cx = *sf.complex;
  Canvas c = square_canvas(cx.bounds());
  std::ostringstream os;
  os << svg_open(c);
  for (std::size_t f = 0; f < cx.face_count(); ++f) {
    const char* col = degree_color(sf.dims[cx.face_cell(f)]);
    if (std::string(col) == "none") continue;
    std::vector<std::pair<double, double>> pts;
    for (auto v : cx.face_cycle(f)) pts.emplace_back(to_double(cx.vertex(v).x), to_double(cx.vertex(v).y));
    os << polygon(pts, c, std::string("fill=\"") + col + "\" stroke=\"none\"");
  }
  for (std::size_t e = 0; e < cx.edge_count(); ++e) {
    const char* col = degree_color(sf.dims[cx.edge_cell(e)]);
    const Point& a = cx.vertex(cx.edge(e).tail);
    const Point& b = cx.vertex(cx.edge(e).head);
    os << "<line x1=\"" << format_double(c.sx(to_double(a.x))) << "\" y1=\"" << format_double(c.sy(to_double(a.y)))
       << "\" x2=\"" << format_double(c.sx(to_double(b.x))) << "\" y2=\"" << format_double(c.sy(to_double(b.y)))
       << "\" stroke=\"" << (std::string(col) == "none" ? "#dddddd" : col) << "\" stroke-width=\""
       << (std::string(col) == "none" ? 0.5 : 2.5) << "\"/>\n";
  }
  for (std::size_t v = 0; v < cx.vertex_count(); ++v) {
    const char* col = degree_color(sf.dims[v]);
    if (std::string(col) == "none") continue;
    os << "<circle cx=\"" << format_double(c.sx(to_double(cx.vertex(v).x))) << "\" cy=\""
       << format_double(c.sy(to_double(cx.vertex(v).y))) << "\" r=\"3\" fill=\"" << col << "\"/>\n";
  }
  os << legend(c) << "</svg>\n";
  return os.str();
}

std::string stalk_samples_svg(const StalkSamples& s) {
  Canvas c = square_canvas(s.window);
  std::ostringstream os;
  os << svg_open(c);
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const char* col = degree_color(s.dims[i]);
    if (std::string(col) == "none") continue;
    os << "<circle cx=\"" << format_double(c.sx(to_double(s.points[i].x))) << "\" cy=\""
       << format_double(c.sy(to_double(s.points[i].y))) << "\" r=\"2.5\" fill=\"" << col << "\"/>\n";
  }
  os << legend(c) << "</svg>\n";
  return os.str();
}

}  // namespace sheafradon
