#include "fareykit/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "fareykit/error.hpp"

namespace fareykit {

namespace {

using Edge = std::pair<Slope, Slope>;

Edge ordered(const Slope& a, const Slope& b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// The vertex across edge (u, w) from the opposite vertex o.
Slope reflect_across(const Slope& u, const Slope& w, const Slope& o) {
    Slope plus = Slope::from_vector(u.x() + w.x(), u.y() + w.y());
    if (plus != o) {
        return plus;
    }
    return Slope::from_vector(u.x() - w.x(), u.y() - w.y());
}

struct Frontier {
    Slope u, w, opposite;
};

}  // namespace

FareyTessellation build_tessellation(unsigned depth, unsigned max_depth) {
    if (depth > max_depth) {
        throw Error(ErrorKind::DepthExceeded,
                    "depth " + std::to_string(depth) + " exceeds the maximum " + std::to_string(max_depth));
    }
    FareyTessellation t;
    std::set<Edge> seen;
    auto add_edge = [&](const Slope& a, const Slope& b) {
        if (seen.insert(ordered(a, b)).second) {
            t.edges.emplace_back(a, b);
        }
    };
    const Slope zero = make_slope(0, 1), inf = make_slope(1, 0), one = make_slope(1, 1);
    t.vertices = {zero, inf, one};
    t.vertex_depth = {0, 0, 0};
    t.triangles.push_back({zero, inf, one});
    add_edge(zero, inf);
    add_edge(inf, one);
    add_edge(one, zero);
    std::vector<Frontier> frontier{{zero, inf, one}, {inf, one, zero}, {one, zero, inf}};
    for (unsigned level = 1; level <= depth; ++level) {
        std::vector<Frontier> next;
        for (const auto& f : frontier) {
            Slope v = reflect_across(f.u, f.w, f.opposite);
            t.vertices.push_back(v);
            t.vertex_depth.push_back(level);
            t.triangles.push_back({f.u, v, f.w});
            add_edge(f.u, v);
            add_edge(v, f.w);
            next.push_back({f.u, v, f.w});
            next.push_back({v, f.w, f.u});
        }
        frontier.swap(next);
    }
    return t;
}

std::complex<double> disk_point(const Slope& s) {
    // i (t - i) / (t + i) with t = y/x, written for the vector (x, y).
    const double x = s.x().convert_to<double>();
    const double y = s.y().convert_to<double>();
    const std::complex<double> i(0.0, 1.0);
    return i * std::complex<double>(y, -x) / std::complex<double>(y, x);
}

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    return s == "-0.000" ? "0.000" : s;
}

struct Canvas {
    double centre;
    double radius;

    std::pair<double, double> at(std::complex<double> z) const {
        return {centre + radius * z.real(), centre - radius * z.imag()};
    }
};

std::string geodesic_path(const Canvas& c, const Slope& a, const Slope& b) {
    const std::complex<double> p = disk_point(a), q = disk_point(b);
    const auto [x1, y1] = c.at(p);
    const auto [x2, y2] = c.at(q);
    const std::string start = "M" + num(x1) + " " + num(y1);
    const double sep = std::acos(std::clamp((std::conj(p) * q).real(), -1.0, 1.0));
    if (std::abs(p + q) < 1e-9) {
        return start + " L" + num(x2) + " " + num(y2);
    }
    const std::complex<double> toward = (p + q) / std::abs(p + q);
    const std::complex<double> centre = toward / std::cos(sep / 2);
    const double r = std::tan(sep / 2) * c.radius;
    const auto [cx, cy] = c.at(centre);
    const double cross = (x1 - cx) * (y2 - cy) - (y1 - cy) * (x2 - cx);
    return start + " A" + num(r) + " " + num(r) + " 0 0 " + (cross > 0 ? "1 " : "0 ") + num(x2) + " " + num(y2);
}

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        out += ch == '<' ? "&lt;" : ch == '>' ? "&gt;" : ch == '&' ? "&amp;" : std::string(1, ch);
    }
    return out;
}

}  // namespace

std::string render_farey(const RenderSpec& spec) {
    const FareyTessellation t = build_tessellation(spec.depth, spec.max_depth);
    const double size = spec.size;
    const Canvas canvas{size / 2, size / 2 - 48};
    const std::string s = std::to_string(spec.size);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + s + "\" height=\"" + s + "\" viewBox=\"0 0 " + s +
           " " + s + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    out += "<circle cx=\"" + num(canvas.centre) + "\" cy=\"" + num(canvas.centre) + "\" r=\"" + num(canvas.radius) +
           "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n";

    out += "<g class=\"edges\" fill=\"none\" stroke=\"#4a6fa5\" stroke-width=\"0.8\">\n";
    for (const auto& [a, b] : t.edges) {
        out += "<path d=\"" + geodesic_path(canvas, a, b) + "\"/>\n";
    }
    out += "</g>\n";

    std::vector<Slope> marked;
    for (const auto& h : spec.highlight) {
        if (std::find(marked.begin(), marked.end(), h) == marked.end()) {
            marked.push_back(h);
        }
    }
    if (!marked.empty()) {
        out += "<g class=\"highlight-edges\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2.5\">\n";
        for (std::size_t i = 0; i < marked.size(); ++i) {
            for (std::size_t j = i + 1; j < marked.size(); ++j) {
                if (is_farey_edge(marked[i], marked[j])) {
                    out += "<path d=\"" + geodesic_path(canvas, marked[i], marked[j]) + "\"/>\n";
                }
            }
        }
        out += "</g>\n";
        out += "<g class=\"highlight-vertices\" fill=\"#c0392b\">\n";
        for (const auto& h : marked) {
            const auto [x, y] = canvas.at(disk_point(h));
            out += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"4.000\"/>\n";
        }
        out += "</g>\n";
    }

    out += "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
           "dominant-baseline=\"middle\" fill=\"#111111\">\n";
    std::vector<Slope> labelled;
    for (std::size_t i = 0; i < t.vertices.size(); ++i) {
        if (t.vertex_depth[i] <= spec.label_depth) {
            labelled.push_back(t.vertices[i]);
        }
    }
    for (const auto& h : marked) {
        if (std::find(labelled.begin(), labelled.end(), h) == labelled.end()) {
            labelled.push_back(h);
        }
    }
    const Canvas outside{canvas.centre, canvas.radius + 22};
    for (const auto& v : labelled) {
        const auto [x, y] = outside.at(disk_point(v));
        out += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\">" + escape(to_string(v)) + "</text>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace fareykit
