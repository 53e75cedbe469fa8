#include "bimatch/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace bimatch {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

bool blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace((unsigned char)c)) return false;
    return true;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

[[noreturn]] void bad_line(std::size_t lineno, const std::string& what) {
    throw InputError("line " + std::to_string(lineno + 1) + ": " + what);
}

std::size_t parse_count(const std::vector<std::string>& lines, std::size_t& at) {
    while (at < lines.size() && blank(lines[at])) ++at;
    if (at >= lines.size()) throw InputError("missing count line");
    auto t = tokens(lines[at]);
    if (t.size() != 1) bad_line(at, "expected a single count");
    long n;
    try {
        std::size_t used;
        n = std::stol(t[0], &used);
        if (used != t[0].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        bad_line(at, "count is not an integer");
    }
    if (n < 1) bad_line(at, "count must be positive");
    ++at;
    return (std::size_t)n;
}

}  // namespace

std::shared_ptr<const PointSet> parse_pointset(const std::string& text) {
    auto lines = split_lines(text);
    std::size_t at = 0;
    std::size_t n = parse_count(lines, at);
    std::vector<Point> pts;
    pts.reserve(2 * n);
    for (std::size_t k = 0; k < 2 * n; ++k) {
        while (at < lines.size() && blank(lines[at])) ++at;
        if (at >= lines.size())
            throw InputError("expected " + std::to_string(2 * n) + " point lines, got " +
                             std::to_string(k));
        auto t = tokens(lines[at]);
        if (t.size() != 3) bad_line(at, "expected 'x y color'");
        Rat x, y;
        try {
            x = parse_rat(t[0]);
            y = parse_rat(t[1]);
        } catch (const InputError& e) {
            bad_line(at, e.what());
        }
        Color c;
        if (t[2] == "W")
            c = Color::White;
        else if (t[2] == "B")
            c = Color::Black;
        else
            bad_line(at, "color must be W or B");
        pts.push_back({{x, y}, c});
        ++at;
    }
    while (at < lines.size()) {
        if (!blank(lines[at])) bad_line(at, "unexpected trailing content");
        ++at;
    }
    auto ps = std::make_shared<const PointSet>(std::move(pts));
    ps->validate();
    return ps;
}

std::string serialize_pointset(const PointSet& ps) {
    std::string out = std::to_string(ps.pairs()) + "\n";
    for (const Point& p : ps.points()) {
        out += format_rat(p.pos.x) + " " + format_rat(p.pos.y) + " " +
               (p.color == Color::White ? "W" : "B") + "\n";
    }
    return out;
}

BRMatching parse_matching(const std::string& text, std::shared_ptr<const PointSet> ps) {
    auto lines = split_lines(text);
    std::size_t at = 0;
    std::size_t n = parse_count(lines, at);
    if (n != ps->pairs()) throw InputError("matching size does not match the point set");
    std::vector<Segment> segs;
    segs.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        while (at < lines.size() && blank(lines[at])) ++at;
        if (at >= lines.size()) throw InputError("expected " + std::to_string(n) + " segment lines");
        auto t = tokens(lines[at]);
        if (t.size() != 2) bad_line(at, "expected 'white black'");
        long w, b;
        try {
            w = std::stol(t[0]);
            b = std::stol(t[1]);
        } catch (const std::exception&) {
            bad_line(at, "segment endpoints must be integers");
        }
        if (w < 0 || b < 0 || (std::size_t)w >= ps->size() || (std::size_t)b >= ps->size())
            bad_line(at, "point index out of range");
        segs.push_back({(std::size_t)w, (std::size_t)b});
        ++at;
    }
    return BRMatching(std::move(ps), std::move(segs));
}

std::string serialize_matching(const BRMatching& m) {
    std::string out = std::to_string(m.size()) + "\n";
    for (const Segment& s : m.segments())
        out += std::to_string(s.white) + " " + std::to_string(s.black) + "\n";
    return out;
}

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

struct View {
    double x0, y0, x1, y1, w, h;
    // SVG y grows downward; flip so the figure matches plane coordinates.
    double sx(double x) const { return (x - x0) / (x1 - x0) * w; }
    double sy(double y) const { return h - (y - y0) / (y1 - y0) * h; }
};

}  // namespace

std::string render_svg(const PointSet& ps, const BRMatching* m, const SvgOverlays& overlays) {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    bool first = true;
    for (const Point& p : ps.points()) {
        double x = p.pos.x.get_d(), y = p.pos.y.get_d();
        if (first) {
            x0 = x1 = x;
            y0 = y1 = y;
            first = false;
        }
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    }
    double mx = (x1 - x0) * 0.1 + 1, my = (y1 - y0) * 0.1 + 1;
    View v{x0 - mx, y0 - my, x1 + mx, y1 + my, 640, 480};
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    svg += "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
           "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">"
           "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"black\"/></marker></defs>\n";
    for (const DirectedLine& l : overlays.lines) {
        // Stretch far past the viewport; the SVG clip does the rest.
        double ox = l.origin.x.get_d(), oy = l.origin.y.get_d();
        double dx = l.dir.x.get_d(), dy = l.dir.y.get_d();
        double len = std::hypot(dx, dy);
        if (len == 0) continue;
        double span = std::hypot(v.x1 - v.x0, v.y1 - v.y0) * 2 / len;
        svg += "<line x1=\"" + fmt6(v.sx(ox - dx * span)) + "\" y1=\"" +
               fmt6(v.sy(oy - dy * span)) + "\" x2=\"" + fmt6(v.sx(ox + dx * span)) +
               "\" y2=\"" + fmt6(v.sy(oy + dy * span)) +
               "\" stroke=\"#d06020\" stroke-dasharray=\"6 4\" stroke-width=\"1.5\"/>\n";
    }
    if (m) {
        std::vector<std::size_t> label(m->size(), 0);
        bool labeled = overlays.order.size() == m->size();
        for (std::size_t pos = 0; pos < overlays.order.size() && labeled; ++pos)
            label[overlays.order[pos]] = pos;
        for (std::size_t i = 0; i < m->size(); ++i) {
            const Pt& w = m->white_pt(i);
            const Pt& b = m->black_pt(i);
            svg += "<line x1=\"" + fmt6(v.sx(w.x.get_d())) + "\" y1=\"" +
                   fmt6(v.sy(w.y.get_d())) + "\" x2=\"" + fmt6(v.sx(b.x.get_d())) + "\" y2=\"" +
                   fmt6(v.sy(b.y.get_d())) +
                   "\" stroke=\"black\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
            if (labeled) {
                double cx = (v.sx(w.x.get_d()) + v.sx(b.x.get_d())) / 2;
                double cy = (v.sy(w.y.get_d()) + v.sy(b.y.get_d())) / 2;
                svg += "<text x=\"" + fmt6(cx + 6) + "\" y=\"" + fmt6(cy - 6) +
                       "\" font-size=\"13\">" + std::to_string(label[i]) + "</text>\n";
            }
        }
    }
    for (const Point& p : ps.points()) {
        svg += "<circle cx=\"" + fmt6(v.sx(p.pos.x.get_d())) + "\" cy=\"" +
               fmt6(v.sy(p.pos.y.get_d())) + "\" r=\"4\" stroke=\"black\" fill=\"" +
               (p.color == Color::White ? "white" : "black") + "\"/>\n";
    }
    double ty = 16;
    for (const std::string& note : overlays.annotations) {
        svg += "<text x=\"8\" y=\"" + fmt6(ty) + "\" font-size=\"14\">" + note + "</text>\n";
        ty += 18;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace bimatch
