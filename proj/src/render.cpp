#include "render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace riccati {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

// y axis flipped to mathematical orientation
std::string pt(Vec2 p) { return fmt(p.x) + "," + fmt(-p.y); }

std::vector<Vec2> thin(const std::vector<Vec2>& pl, std::size_t max_pts) {
  if (pl.size() <= max_pts) return pl;
  std::vector<Vec2> out;
  double stride = double(pl.size() - 1) / double(max_pts - 1);
  for (std::size_t i = 0; i < max_pts; ++i)
    out.push_back(pl[(std::size_t)std::lround(i * stride)]);
  return out;
}

void emit_path(std::ostringstream& os, const std::vector<Vec2>& pl,
               const char* stroke, double width, const char* dash,
               bool arrow) {
  if (pl.size() < 2) return;
  os << "<path d=\"M " << pt(pl[0]);
  for (std::size_t i = 1; i < pl.size(); ++i) os << " L " << pt(pl[i]);
  os << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
     << fmt(width) << "\"";
  if (dash) os << " stroke-dasharray=\"" << dash << "\"";
  os << "/>\n";
  if (!arrow) return;
  // direction arrowhead at the midpoint
  std::size_t m = pl.size() / 2;
  std::size_t m2 = std::min(m + 1, pl.size() - 1);
  Vec2 a = pl[m], b = pl[m2];
  Vec2 d = (b - a).normalized();
  if (d.norm() == 0.0) return;
  Vec2 n{-d.y, d.x};
  const double L = 0.03, W = 0.018;
  Vec2 tip = a + d * L;
  Vec2 l = a + n * (W / 2), r = a - n * (W / 2);
  os << "<path d=\"M " << pt(tip) << " L " << pt(l) << " L " << pt(r)
     << " Z\" fill=\"" << stroke << "\" stroke=\"none\"/>\n";
}

void emit_glyph(std::ostringstream& os, const SkeletonNode& n,
                const RenderSpec& spec) {
  const double r = spec.glyph_radius;
  Vec2 p = n.disk_pos;
  switch (n.topo) {
    case TopoClass::Sink:
      os << "<circle class=\"glyph\" cx=\"" << fmt(p.x) << "\" cy=\""
         << fmt(-p.y) << "\" r=\"" << fmt(r)
         << "\" fill=\"#1a4c9c\" stroke=\"none\"/>\n";
      break;
    case TopoClass::Source:
      os << "<circle class=\"glyph\" cx=\"" << fmt(p.x) << "\" cy=\""
         << fmt(-p.y) << "\" r=\"" << fmt(r)
         << "\" fill=\"#ffffff\" stroke=\"#b02020\" stroke-width=\""
         << fmt(r * 0.45) << "\"/>\n";
      break;
    case TopoClass::Saddle: {
      const double s = r * 1.1;
      os << "<path class=\"glyph\" d=\"M " << pt({p.x - s, p.y - s}) << " L "
         << pt({p.x + s, p.y + s}) << " M " << pt({p.x - s, p.y + s}) << " L "
         << pt({p.x + s, p.y - s}) << "\" stroke=\"#111111\" stroke-width=\""
         << fmt(r * 0.5) << "\" fill=\"none\"/>\n";
      break;
    }
    case TopoClass::SaddleNode: {
      // half-filled disk
      os << "<g class=\"glyph\"><circle cx=\"" << fmt(p.x) << "\" cy=\""
         << fmt(-p.y) << "\" r=\"" << fmt(r)
         << "\" fill=\"#ffffff\" stroke=\"#6a2d8f\" stroke-width=\""
         << fmt(r * 0.4) << "\"/><path d=\"M " << pt({p.x, p.y + r}) << " A "
         << fmt(r) << " " << fmt(r) << " 0 0 1 " << pt({p.x, p.y - r})
         << " Z\" fill=\"#6a2d8f\" stroke=\"none\"/></g>\n";
      break;
    }
  }
}

} // namespace

std::string render_disk(const SeparatrixSkeleton& skeleton,
                        const std::vector<Trajectory>& extra_orbits,
                        const RenderSpec& spec) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.size_px
     << "\" height=\"" << spec.size_px
     << "\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n";
  os << "<rect x=\"-1.05\" y=\"-1.05\" width=\"2.1\" height=\"2.1\" "
        "fill=\"#ffffff\"/>\n";
  os << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"#fcfcff\" "
        "stroke=\"#333333\" stroke-width=\"0.008\"/>\n";

  for (const auto& orb : extra_orbits) {
    std::vector<Vec2> pl;
    pl.reserve(orb.samples.size());
    for (const auto& s : orb.samples) pl.push_back(s.disk);
    emit_path(os, thin(pl, 300), "#9bb3c9", spec.orbit_width, nullptr, false);
  }

  for (const auto& e : skeleton.edges) {
    const char* color = "#111111";
    if (e.kind == EdgeKind::EquatorArc) color = "#333333";
    else if (e.kind == EdgeKind::InvariantLine) color = "#0a6640";
    emit_path(os, thin(e.polyline, 400), color, spec.separatrix_width,
              e.unresolved ? "0.03,0.02" : nullptr,
              e.kind != EdgeKind::EquatorArc);
  }

  for (const auto& n : skeleton.nodes) emit_glyph(os, n, spec);

  if (spec.show_labels) {
    for (const auto& n : skeleton.nodes) {
      Vec2 p = n.disk_pos * 1.08;
      if (!n.at_infinity) p = n.disk_pos + Vec2{0.03, 0.03};
      os << "<text x=\"" << fmt(p.x) << "\" y=\"" << fmt(-p.y)
         << "\" font-size=\"0.06\" font-family=\"sans-serif\" "
            "fill=\"#222222\">"
         << n.label << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::vector<Trajectory> grid_orbits(const NormalForm& nf,
                                    const SignPolicy& policy, int per_axis,
                                    const FlowOptions& opt) {
  CompactifiedSystem cs(nf);
  std::vector<Equilibrium> eqs = finite_equilibria(nf, policy);
  std::vector<Equilibrium> inf = infinite_equilibria(nf, policy);
  eqs.insert(eqs.end(), inf.begin(), inf.end());

  FlowOptions o = opt;
  o.arc_budget = 40.0;
  std::vector<Trajectory> out;
  for (int i = 0; i < per_axis; ++i) {
    for (int j = 0; j < per_axis; ++j) {
      // disk-uniform grid mapped into the plane
      double dx = -0.82 + 1.64 * (i + 0.5) / per_axis;
      double dy = -0.82 + 1.64 * (j + 0.5) / per_axis;
      double rr = std::hypot(dx, dy);
      if (rr >= 0.92) continue;
      double f = 1.0 / std::sqrt(1.0 - rr * rr);
      DiskPoint start = DiskPoint::affine(dx * f, dy * f);
      bool on_eq = false;
      Vec3 sd = sphere_project(start);
      for (const auto& e : eqs)
        if (sphere_dist(sd, sphere_project(e.pt)) < 1e-7) on_eq = true;
      if (on_eq) continue;
      for (bool fwd : {true, false}) out.push_back(integrate(cs, eqs, start, fwd, o));
    }
  }
  return out;
}

} // namespace riccati
