#include "leg/render.hpp"

#include <algorithm>
#include <sstream>

namespace leg {

namespace {

constexpr double kLetter = 36, kGap = 10, kSlide = 8, kRow = 22, kPad = 16;

struct Layout {
  std::vector<double> gap_x;  // left edge of each gap
  std::vector<double> letter_x;
  double width = 0;
  int strands = 0;
};

Layout layout(const PlatWord& w, const McfSlice* c) {
  Layout l;
  double x = kPad;
  for (int g = 0; g <= w.size(); ++g) {
    l.gap_x.push_back(x);
    int n = c ? static_cast<int>(c->slides[g].size()) : 0;
    x += kGap + kSlide * n;
    if (g < w.size()) {
      l.letter_x.push_back(x);
      x += kLetter;
    }
    l.strands = std::max(l.strands, w.width(g));
  }
  l.width = x + kPad;
  return l;
}

double y_of(int pos, double top) { return top + kRow * (pos - 1); }

void line(std::ostringstream& o, double x0, double y0, double x1, double y1, const char* color = "black") {
  o << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y1 << "\" stroke=\"" << color
    << "\" stroke-width=\"1.5\"/>\n";
}

void curve(std::ostringstream& o, double x0, double y0, double x1, double y1) {
  // cusp end at (x0, y0): leaves horizontally toward x1
  double mx = (x0 + x1) / 2;
  o << "<path d=\"M " << x0 << " " << y0 << " C " << mx << " " << y0 << ", " << mx << " " << y1 << ", " << x1 << " "
    << y1 << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
}

double draw(std::ostringstream& o, const PlatWord& w, const McfSlice* c, double top) {
  Layout l = layout(w, c);
  for (int g = 0; g <= w.size(); ++g) {
    double x0 = l.gap_x[g], x1 = g < w.size() ? l.letter_x[g] : l.width - kPad;
    for (int p = 1; p <= w.width(g); ++p) line(o, x0, y_of(p, top), x1, y_of(p, top));
    if (c)
      for (size_t t = 0; t < c->slides[g].size(); ++t) {
        const Slide& s = c->slides[g][t];
        double x = x0 + kGap / 2 + kSlide * t + kSlide / 2;
        line(o, x, y_of(s.u, top), x, y_of(s.l, top), "red");
      }
  }
  for (int i = 0; i < w.size(); ++i) {
    const Letter& L = w.letters[i];
    double x0 = l.letter_x[i], x1 = x0 + kLetter;
    int n = w.width(i);
    switch (L.kind) {
      case Kind::Cross:
        for (int p = 1; p <= n; ++p) {
          if (p == L.k)
            line(o, x0, y_of(p, top), x1, y_of(p + 1, top));
          else if (p == L.k + 1)
            line(o, x0, y_of(p, top), x1, y_of(p - 1, top));
          else
            line(o, x0, y_of(p, top), x1, y_of(p, top));
        }
        break;
      case Kind::Left: {
        for (int p = 1; p <= n; ++p) line(o, x0, y_of(p, top), x1, y_of(p < L.k ? p : p + 2, top));
        double ym = (y_of(L.k, top) + y_of(L.k + 1, top)) / 2;
        double xc = x0 + kLetter / 2;
        curve(o, xc, ym, x1, y_of(L.k, top));
        curve(o, xc, ym, x1, y_of(L.k + 1, top));
        break;
      }
      case Kind::Right: {
        for (int p = 1; p <= n; ++p)
          if (p < L.k || p > L.k + 1) line(o, x0, y_of(p, top), x1, y_of(p < L.k ? p : p - 2, top));
        double ym = (y_of(L.k, top) + y_of(L.k + 1, top)) / 2;
        double xc = x0 + kLetter / 2;
        curve(o, xc, ym, x0, y_of(L.k, top));
        curve(o, xc, ym, x0, y_of(L.k + 1, top));
        break;
      }
    }
  }
  return l.width;
}

std::string wrap(const std::string& body, double w, double h) {
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
    << " " << h << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << body << "</svg>\n";
  return o.str();
}

int max_width(const PlatWord& w) {
  int m = 0;
  for (int v : w.profile) m = std::max(m, v);
  return m;
}

}  // namespace

std::string front_svg(const PlatWord& w, const McfSlice* slice) {
  std::ostringstream o;
  double width = draw(o, w, slice, kPad);
  double height = 2 * kPad + kRow * std::max(0, max_width(w) - 1);
  return wrap(o.str(), std::max(width, 2 * kPad), height);
}

std::string frames_svg(const std::vector<PlatWord>& frames, const std::vector<McfSlice>* slices) {
  std::ostringstream o;
  double top = kPad + 12, width = 2 * kPad;
  for (size_t i = 0; i < frames.size(); ++i) {
    o << "<text x=\"4\" y=\"" << top - 8 << "\" font-size=\"10\" font-family=\"monospace\">" << i << ": "
      << render_word(frames[i]) << "</text>\n";
    const McfSlice* s = slices && i < slices->size() ? &(*slices)[i] : nullptr;
    width = std::max(width, draw(o, frames[i], s, top));
    top += kRow * std::max(0, max_width(frames[i]) - 1) + kPad + 16;
  }
  return wrap(o.str(), std::max(width, 320.0), top);
}

}  // namespace leg
