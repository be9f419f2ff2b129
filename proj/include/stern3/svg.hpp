#pragma once

// Standalone SVG of the triangle subdivision. Every new vertex sits at the
// barycenter of the triangle it subdivides.

#include <array>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "stern3/seqcore.hpp"
#include "stern3/types.hpp"

namespace stern3 {

inline constexpr int max_svg_depth = 7;

enum class SvgLabels { values, addresses };

namespace detail {

struct Pt {
    double x;
    double y;
};

// A vertex as an integer combination c1 v1 + c2 v2 + c3 v3.
using Combo = std::array<std::uint64_t, 3>;

struct SvgCorner {
    Pt at;
    Combo combo;
};

inline std::string combo_label(const Combo& c) {
    std::string out;
    for (std::size_t i = 0; i < 3; ++i) {
        if (c[i] == 0)
            continue;
        if (!out.empty())
            out += "+";
        if (c[i] != 1)
            out += std::to_string(c[i]);
        out += "v" + std::to_string(i + 1);
    }
    return out;
}

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace detail

inline std::string render_subdivision_svg(int depth, SvgLabels labels = SvgLabels::values) {
    using namespace detail;
    if (depth < 0 || depth > max_svg_depth)
        throw std::invalid_argument("svg depth must be in 0.." + std::to_string(max_svg_depth));

    const double w = 800, h = 700, margin = 60;
    const SvgCorner c1{{margin, h + margin}, {1, 0, 0}};
    const SvgCorner c2{{w + margin, h + margin}, {0, 1, 0}};
    const SvgCorner c3{{margin + w / 2, margin}, {0, 0, 1}};
    const double font = depth <= 2 ? 16.0 : 16.0 / (depth - 1);

    struct Tri {
        std::array<SvgCorner, 3> v;
        Digits address;
    };

    std::ostringstream edges;
    std::ostringstream text;
    auto line = [&](const Pt& a, const Pt& b, const char* cls) {
        edges << "<line class=\"" << cls << "\" x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\""
              << fmt(b.x) << "\" y2=\"" << fmt(b.y) << "\"/>\n";
    };
    auto label = [&](const Pt& p, const std::string& s, const char* cls) {
        text << "<text class=\"" << cls << "\" x=\"" << fmt(p.x) << "\" y=\"" << fmt(p.y) << "\">" << s
             << "</text>\n";
    };

    line(c1.at, c2.at, "outer");
    line(c2.at, c3.at, "outer");
    line(c3.at, c1.at, "outer");
    if (labels == SvgLabels::values) {
        label(c1.at, "v1", "vertex");
        label(c2.at, "v2", "vertex");
        label(c3.at, "v3", "vertex");
    }

    std::vector<Tri> level{{{c1, c2, c3}, {}}};
    for (int j = 0; j < depth; ++j) {
        std::vector<Tri> next;
        next.reserve(level.size() * 3);
        for (const auto& t : level) {
            SvgCorner mid{{(t.v[0].at.x + t.v[1].at.x + t.v[2].at.x) / 3,
                           (t.v[0].at.y + t.v[1].at.y + t.v[2].at.y) / 3},
                          {}};
            for (std::size_t i = 0; i < 3; ++i)
                mid.combo[i] = t.v[0].combo[i] + t.v[1].combo[i] + t.v[2].combo[i];
            for (const auto& corner : t.v)
                line(corner.at, mid.at, "inner");
            if (labels == SvgLabels::values)
                label(mid.at, combo_label(mid.combo), "vertex");
            const std::array<std::array<std::size_t, 2>, 3> keep{{{0, 1}, {1, 2}, {2, 0}}};
            for (std::size_t d = 0; d < 3; ++d) {
                Tri child{{t.v[keep[d][0]], t.v[keep[d][1]], mid}, t.address};
                child.address.push_back(static_cast<Trit>(d));
                next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }
    if (labels == SvgLabels::addresses)
        for (const auto& t : level) {
            const Pt c{(t.v[0].at.x + t.v[1].at.x + t.v[2].at.x) / 3, (t.v[0].at.y + t.v[1].at.y + t.v[2].at.y) / 3};
            label(c, "\xce\x94(" + format_digits(t.address) + ")", "address");
        }

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w + 2 * margin) << "\" height=\""
       << fmt(h + 2 * margin) << "\" viewBox=\"0 0 " << fmt(w + 2 * margin) << ' ' << fmt(h + 2 * margin)
       << "\">\n"
       << "<style>line{stroke:#000;stroke-width:1}line.outer{stroke-width:2}"
       << "text{font-family:serif;font-size:" << fmt(font) << "px;text-anchor:middle}</style>\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n"
       << edges.str() << text.str() << "</svg>\n";
    return os.str();
}

} // namespace stern3
