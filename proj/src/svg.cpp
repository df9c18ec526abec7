#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>

#include "scurve/common.hpp"
#include "scurve/export.hpp"

namespace scurve {

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&')
            out += "&amp;";
        else if (c == '<')
            out += "&lt;";
        else if (c == '>')
            out += "&gt;";
        else if (c == '"')
            out += "&quot;";
        else
            out += c;
    }
    return out;
}

struct Point {
    double x, y;
};

// Circle position p out of m, starting at the top and running clockwise.
Point on_circle(int p, int m, double radius, double center) {
    const double angle = 2.0 * 3.14159265358979323846 * p / m - 1.5707963267948966;
    return {center + radius * std::cos(angle), center + radius * std::sin(angle)};
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << v;
    return os.str();
}

}  // namespace

std::string chord_text(const ChordDiagram& diagram, bool side_arcs) {
    const int m = static_cast<int>(diagram.position_label.size());
    if (m == 0) return "empty diagram\n";
    check(m % 2 == 0, "odd position count");
    std::ostringstream os;
    os << "positions";
    for (int p = 0; p < m; ++p) os << ' ' << diagram.names[diagram.position_label[p]];
    os << '\n';
    for (std::size_t c = 0; c < diagram.chords.size(); ++c)
        os << "chord " << diagram.names[c] << ' ' << diagram.chords[c][0] << ' '
           << diagram.chords[c][1] << '\n';
    if (side_arcs)
        for (int j = 0; j < m / 2; ++j)
            os << "arc " << j << ' ' << diagram.names[diagram.position_label[2 * j]] << '-'
               << diagram.names[diagram.position_label[2 * j + 1]] << '\n';
    for (std::size_t a = 0; a < diagram.chords.size(); ++a) {
        os << "interleave " << diagram.names[a];
        for (std::size_t b = 0; b < diagram.chords.size(); ++b)
            os << ' '
               << (a == b ? '.'
                          : interleaves(diagram, diagram.names[a], diagram.names[b]) ? 'x' : 'o');
        os << '\n';
    }
    return os.str();
}

std::string chord_svg(const ChordDiagram& diagram, bool side_arcs) {
    const int m = static_cast<int>(diagram.position_label.size());
    const double size = 400.0, center = size / 2, radius = 160.0;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    os << "  <circle cx=\"" << center << "\" cy=\"" << center << "\" r=\"" << radius
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    if (side_arcs)
        for (int j = 0; j < m / 2; ++j) {
            const Point s = on_circle(2 * j, m, radius, center);
            const Point e = on_circle(2 * j + 1, m, radius, center);
            os << "  <path d=\"M " << fmt(s.x) << ' ' << fmt(s.y) << " A " << radius << ' '
               << radius << " 0 0 1 " << fmt(e.x) << ' ' << fmt(e.y)
               << "\" fill=\"none\" stroke=\"black\" stroke-width=\"6\"/>\n";
        }
    for (const auto& chord : diagram.chords) {
        const Point s = on_circle(chord[0], m, radius, center);
        const Point e = on_circle(chord[1], m, radius, center);
        os << "  <line x1=\"" << fmt(s.x) << "\" y1=\"" << fmt(s.y) << "\" x2=\"" << fmt(e.x)
           << "\" y2=\"" << fmt(e.y) << "\" stroke=\"gray\"/>\n";
    }
    for (int p = 0; p < m; ++p) {
        const Point t = on_circle(p, m, radius + 18, center);
        os << "  <text x=\"" << fmt(t.x) << "\" y=\"" << fmt(t.y)
           << "\" font-size=\"12\" text-anchor=\"middle\">"
           << xml_escape(diagram.names[diagram.position_label[p]]) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace scurve
