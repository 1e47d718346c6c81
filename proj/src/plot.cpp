#include "veto/plot.hpp"

#include <algorithm>
#include <sstream>

namespace veto {

namespace {

struct Frame {
  Rational lo;
  Rational hi;
};

Frame frame_of(const Representation& rep) {
  Frame f{0, 1};
  bool first = true;
  for (const auto& iv : rep.intervals) {
    if (first || iv.left < f.lo) f.lo = iv.left;
    if (first || iv.right > f.hi) f.hi = iv.right;
    first = false;
  }
  if (f.hi == f.lo) f.hi = f.lo + 1;
  return f;
}

// Nearest column in [0, width-1].
int column(const Frame& f, const Rational& x, int width) {
  Rational t = (x - f.lo) / (f.hi - f.lo) * (width - 1) + Rational(1, 2);
  return static_cast<int>(floor(t).convert_to<long long>());
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace

std::string plot_text(const Representation& rep, int width) {
  width = std::max(width, 8);
  const Frame f = frame_of(rep);
  const int label = static_cast<int>(std::to_string(std::max(0, rep.size() - 1)).size());
  std::ostringstream out;
  for (int i = 0; i < rep.size(); ++i) {
    const auto& iv = rep.intervals[i];
    std::string row(width, ' ');
    const int a = column(f, iv.left, width);
    const int b = column(f, iv.right, width);
    for (int c = a; c <= b; ++c) row[c] = '-';
    for (const auto& m : iv.marks) row[column(f, m, width)] = '|';
    row[a] = '[';
    row[b] = ']';
    while (!row.empty() && row.back() == ' ') row.pop_back();
    std::string id = std::to_string(i);
    out << std::string(label - id.size(), ' ') << id << ' ' << row << '\n';
  }
  out << std::string(label + 1, ' ') << format_rational(f.lo) << " .. " << format_rational(f.hi) << '\n';
  return out.str();
}

std::string plot_svg(const Representation& rep) {
  const Frame f = frame_of(rep);
  const double width = 640;
  const double row = 18;
  const double margin = 30;
  const double scale = (width - 2 * margin) / to_double(f.hi - f.lo);
  auto x = [&](const Rational& v) { return margin + (to_double(v - f.lo)) * scale; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << (rep.size() + 1) * row + margin << "\">\n";
  for (int i = 0; i < rep.size(); ++i) {
    const auto& iv = rep.intervals[i];
    const double y = margin / 2 + (i + 1) * row;
    out << "  <text x=\"4\" y=\"" << y + 4 << "\" font-size=\"11\">" << i << "</text>\n";
    out << "  <line x1=\"" << x(iv.left) << "\" y1=\"" << y << "\" x2=\"" << x(iv.right) << "\" y2=\"" << y
        << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (const auto& m : iv.marks) {
      out << "  <line x1=\"" << x(m) << "\" y1=\"" << y - 6 << "\" x2=\"" << x(m) << "\" y2=\"" << y + 6
          << "\" stroke=\"crimson\" stroke-width=\"2\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace veto
