#include "knotid/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>
#include <variant>

namespace knotid {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> fields_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<double> to_double(std::string_view s) {
  double v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<long long> to_int(std::string_view s) {
  long long v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

std::string_view strip_comment(std::string_view line) {
  const std::size_t pos = line.find('#');
  return pos == std::string_view::npos ? line : line.substr(0, pos);
}

std::vector<Polyline3D> parse_plain(std::string_view text) {
  std::vector<Polyline3D> out;
  std::vector<Vec3> current;
  auto flush = [&] {
    if (current.empty()) return;
    try {
      out.emplace_back(std::move(current));
    } catch (const GeometryError& e) {
      throw GeometryError("component " + std::to_string(out.size() + 1) + ": " + e.what());
    }
    current.clear();
  };
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (trim(raw).empty()) {
      flush();
      continue;
    }
    if (trim(raw).front() == '#') continue;
    const auto f = fields_of(strip_comment(raw));
    if (f.size() != 3) {
      throw GeometryError("line " + std::to_string(line_no) + ": expected 3 coordinates, got " +
                          std::to_string(f.size()) + " fields");
    }
    Vec3 v;
    double* slots[3] = {&v.x, &v.y, &v.z};
    for (int k = 0; k < 3; ++k) {
      const auto d = to_double(f[static_cast<std::size_t>(k)]);
      if (!d) {
        throw GeometryError("line " + std::to_string(line_no) + ": not a number: '" +
                            std::string(f[static_cast<std::size_t>(k)]) + "'");
      }
      *slots[k] = *d;
    }
    current.push_back(v);
  }
  flush();
  return out;
}

std::vector<Polyline3D> parse_vect(std::string_view text) {
  std::vector<std::string_view> tok;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    for (auto f : fields_of(strip_comment(text.substr(start, end - start)))) tok.push_back(f);
    start = end + 1;
  }
  std::size_t i = 0;
  auto next_int = [&](const char* what) {
    if (i >= tok.size()) throw GeometryError(std::string("VECT: missing ") + what);
    const auto v = to_int(tok[i]);
    if (!v) throw GeometryError(std::string("VECT: bad ") + what + " '" + std::string(tok[i]) + "'");
    ++i;
    return *v;
  };
  auto next_double = [&] {
    if (i >= tok.size()) throw GeometryError("VECT: truncated vertex list");
    const auto v = to_double(tok[i]);
    if (!v) throw GeometryError("VECT: bad coordinate '" + std::string(tok[i]) + "'");
    ++i;
    return *v;
  };
  if (tok.empty() || tok[0] != "VECT") throw GeometryError("VECT: missing header");
  ++i;
  const long long polylines = next_int("polyline count");
  const long long vertices = next_int("vertex count");
  const long long colors = next_int("color count");
  if (polylines < 1 || vertices < 0 || colors < 0) throw GeometryError("VECT: bad counts");
  std::vector<long long> counts;
  long long total = 0;
  for (long long p = 0; p < polylines; ++p) {
    const long long n = next_int("polyline vertex count");
    if (n >= 0) throw GeometryError("VECT: only closed polylines (negative vertex counts) are supported");
    counts.push_back(-n);
    total += -n;
  }
  if (total != vertices) throw GeometryError("VECT: polyline vertex counts do not sum to the vertex total");
  for (long long p = 0; p < polylines; ++p) next_int("color count");
  std::vector<Polyline3D> out;
  for (long long n : counts) {
    std::vector<Vec3> pts;
    for (long long k = 0; k < n; ++k) {
      Vec3 v;
      v.x = next_double();
      v.y = next_double();
      v.z = next_double();
      pts.push_back(v);
    }
    try {
      out.emplace_back(std::move(pts));
    } catch (const GeometryError& e) {
      throw GeometryError("VECT component " + std::to_string(out.size() + 1) + ": " + e.what());
    }
  }
  return out;
}

struct Vec2 {
  double x = 0;
  double y = 0;
};

double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double norm(Vec2 a) { return std::hypot(a.x, a.y); }
Vec2 sub(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  }
  return r;
}

Vec3 apply(const Mat3& m, const Vec3& v) {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z, m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

Mat3 rotation_matrix(Vec3 axis, double angle) {
  const double len = std::sqrt(axis.x * axis.x + axis.y * axis.y + axis.z * axis.z);
  if (!(len > 0)) throw GeometryError("rotation axis must be nonzero");
  const double x = axis.x / len;
  const double y = axis.y / len;
  const double z = axis.z / len;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double t = 1 - c;
  return {{{t * x * x + c, t * x * y - s * z, t * x * z + s * y},
           {t * x * y + s * z, t * y * y + c, t * y * z - s * x},
           {t * x * z - s * y, t * y * z + s * x, t * z * z + c}}};
}

struct Edge {
  std::size_t comp = 0;
  std::size_t index = 0;
  Vec3 from;
  Vec3 to;
  Vec2 p;  // projected start
  Vec2 d;  // projected direction
};

struct Event {
  double param = 0;
  std::size_t crossing = 0;
  Strand strand = Strand::over;
};

struct Degenerate {
  std::string where;
};

Degenerate degenerate(const Edge& a, const Edge& b, const char* why) {
  std::ostringstream os;
  os << why << " between component " << a.comp + 1 << " edge " << a.index + 1 << " and component " << b.comp + 1
     << " edge " << b.index + 1;
  return Degenerate{os.str()};
}

// One attempt at a fixed rotation; returns the degenerate edge pair on failure.
std::variant<Diagram, Degenerate> project(const std::vector<Polyline3D>& components, const Mat3& rotation,
                                          double tolerance) {
  std::vector<Edge> edges;
  std::vector<std::size_t> first_edge;
  double lo[3] = {HUGE_VAL, HUGE_VAL, HUGE_VAL};
  double hi[3] = {-HUGE_VAL, -HUGE_VAL, -HUGE_VAL};
  std::vector<std::vector<Vec3>> rotated;
  for (const auto& c : components) {
    auto& pts = rotated.emplace_back();
    for (const auto& v : c.vertices()) {
      const Vec3 r = apply(rotation, v);
      pts.push_back(r);
      const double xyz[3] = {r.x, r.y, r.z};
      for (int k = 0; k < 3; ++k) {
        lo[k] = std::min(lo[k], xyz[k]);
        hi[k] = std::max(hi[k], xyz[k]);
      }
    }
  }
  const double scale = std::max({hi[0] - lo[0], hi[1] - lo[1], hi[2] - lo[2], 1e-300});
  const double eps = tolerance * scale;

  for (std::size_t c = 0; c < rotated.size(); ++c) {
    first_edge.push_back(edges.size());
    const auto& pts = rotated[c];
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Vec3& a = pts[i];
      const Vec3& b = pts[(i + 1) % pts.size()];
      edges.push_back(Edge{c, i, a, b, {a.x, a.y}, {b.x - a.x, b.y - a.y}});
      if (norm(edges.back().d) <= eps) {
        return degenerate(edges.back(), edges.back(), "edge projects to a point");
      }
    }
  }
  first_edge.push_back(edges.size());

  std::vector<std::vector<Event>> events(edges.size());
  std::vector<int> signs;

  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const double ex0 = std::min(e.p.x, e.p.x + e.d.x) - eps;
    const double ex1 = std::max(e.p.x, e.p.x + e.d.x) + eps;
    const double ey0 = std::min(e.p.y, e.p.y + e.d.y) - eps;
    const double ey1 = std::max(e.p.y, e.p.y + e.d.y) + eps;
    const double len_e = norm(e.d);
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& f = edges[j];
      const double len_f = norm(f.d);
      const std::size_t n = components[f.comp].edge_count();
      const bool adjacent =
          e.comp == f.comp && (f.index == e.index + 1 || (e.index == 0 && f.index == n - 1));
      const double denom = cross(e.d, f.d);
      const bool parallel = std::abs(denom) <= tolerance * len_e * len_f;
      if (adjacent) {
        // Consecutive edges folding back onto each other in projection.
        if (parallel && dot(e.d, f.d) < 0) return degenerate(e, f, "edges overlap in projection");
        continue;
      }
      if (std::max(f.p.x, f.p.x + f.d.x) < ex0 || std::min(f.p.x, f.p.x + f.d.x) > ex1 ||
          std::max(f.p.y, f.p.y + f.d.y) < ey0 || std::min(f.p.y, f.p.y + f.d.y) > ey1) {
        continue;
      }
      const Vec2 w = sub(f.p, e.p);
      if (parallel) {
        if (std::abs(cross(w, e.d)) > eps * len_e) continue;
        const double a0 = 0;
        const double a1 = len_e;
        const double b0 = dot(w, e.d) / len_e;
        const double b1 = dot(sub(Vec2{f.p.x + f.d.x, f.p.y + f.d.y}, e.p), e.d) / len_e;
        if (std::max(b0, b1) < a0 - eps || std::min(b0, b1) > a1 + eps) continue;
        return degenerate(e, f, "collinear overlapping edges");
      }
      const double t = cross(w, f.d) / denom;
      const double u = cross(w, e.d) / denom;
      const double te = eps / len_e;
      const double ue = eps / len_f;
      if (t < -te || t > 1 + te || u < -ue || u > 1 + ue) continue;
      if (t <= te || t >= 1 - te || u <= ue || u >= 1 - ue) {
        return degenerate(e, f, "crossing at a vertex");
      }
      const double ze = e.from.z + t * (e.to.z - e.from.z);
      const double zf = f.from.z + u * (f.to.z - f.from.z);
      if (std::abs(ze - zf) <= eps) return degenerate(e, f, "edges intersect in space");
      const bool e_over = ze > zf;
      const Vec2 d_over = e_over ? e.d : f.d;
      const Vec2 d_under = e_over ? f.d : e.d;
      const std::size_t id = signs.size();
      signs.push_back(cross(d_over, d_under) > 0 ? 1 : -1);
      events[i].push_back(Event{t, id, e_over ? Strand::over : Strand::under});
      events[j].push_back(Event{u, id, e_over ? Strand::under : Strand::over});
    }
  }

  std::vector<int> label_of(signs.size(), 0);
  int next_label = 1;
  std::vector<Component> comps;
  for (std::size_t c = 0; c < components.size(); ++c) {
    Component comp;
    for (std::size_t k = first_edge[c]; k < first_edge[c + 1]; ++k) {
      auto& ev = events[k];
      std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) { return a.param < b.param; });
      const double te = eps / norm(edges[k].d);
      for (std::size_t m = 0; m < ev.size(); ++m) {
        if (m > 0 && ev[m].param - ev[m - 1].param <= te) {
          return degenerate(edges[k], edges[k], "two crossings coincide on an edge");
        }
        int& label = label_of[ev[m].crossing];
        if (label == 0) label = next_label++;
        comp.push_back(Token{ev[m].strand, label, signs[ev[m].crossing]});
      }
    }
    if (comp.empty()) {
      const int label = next_label++;
      comp = {Token{Strand::under, label, -1}, Token{Strand::over, label, -1}};
    }
    comps.push_back(std::move(comp));
  }
  return Diagram(std::move(comps));
}

}  // namespace

Polyline3D::Polyline3D(std::vector<Vec3> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw GeometryError("component needs at least 3 vertices, got " + std::to_string(vertices_.size()));
  }
  double mag = 0;
  for (const auto& v : vertices_) mag = std::max({mag, std::abs(v.x), std::abs(v.y), std::abs(v.z)});
  const double eps = 1e-12 * (1 + mag);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vec3& a = vertices_[i];
    const Vec3& b = vertices_[(i + 1) % vertices_.size()];
    if (std::abs(a.x - b.x) <= eps && std::abs(a.y - b.y) <= eps && std::abs(a.z - b.z) <= eps) {
      throw GeometryError("consecutive vertices " + std::to_string(i + 1) + " and " +
                          std::to_string((i + 1) % vertices_.size() + 1) + " coincide");
    }
  }
}

ProjectionFrame ProjectionFrame::identity(std::uint64_t seed) {
  ProjectionFrame f;
  f.seed = seed;
  return f;
}

ProjectionFrame ProjectionFrame::axis_angle(Vec3 axis, double angle, std::uint64_t seed) {
  ProjectionFrame f;
  f.rotation = rotation_matrix(axis, angle);
  f.seed = seed;
  return f;
}

void ProjectionFrame::validate() const {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += rotation[i][k] * rotation[j][k];
      if (std::abs(s - (i == j ? 1.0 : 0.0)) > 1e-12) throw GeometryError("projection rotation is not orthonormal");
    }
  }
  const auto& m = rotation;
  const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (std::abs(det - 1) > 1e-12) throw GeometryError("projection rotation must have determinant +1");
}

std::vector<Polyline3D> parse_coordinates(std::string_view text) {
  std::string_view first;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(strip_comment(text.substr(start, end - start)));
    start = end + 1;
    if (!line.empty()) {
      first = line;
      break;
    }
  }
  if (first.empty()) throw GeometryError("no coordinates found");
  auto comps = fields_of(first).front() == "VECT" ? parse_vect(text) : parse_plain(text);
  if (comps.empty()) throw GeometryError("no coordinates found");
  return comps;
}

Diagram compute_egc(const std::vector<Polyline3D>& components, const ProjectionFrame& frame,
                    const EgcOptions& options) {
  if (components.empty()) throw GeometryError("no components");
  frame.validate();
  std::mt19937_64 rng(frame.seed);
  std::normal_distribution<double> gauss;
  Mat3 rotation = frame.rotation;
  std::string last;
  for (int attempt = frame.attempt; attempt < options.max_attempts; ++attempt) {
    if (attempt > frame.attempt) {
      const Vec3 axis{gauss(rng), gauss(rng), gauss(rng)};
      rotation = multiply(rotation_matrix(axis, options.perturbation), rotation);
    }
    auto result = project(components, rotation, options.tolerance);
    if (auto* d = std::get_if<Diagram>(&result)) return std::move(*d);
    last = std::get<Degenerate>(result).where;
  }
  throw GeometryError("degenerate projection after " + std::to_string(options.max_attempts) +
                      " attempts: " + last);
}

}  // namespace knotid
