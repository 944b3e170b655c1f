/*
   Copyright 2026 The zerofree authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace zf::cli {

namespace {

constexpr double kSize = 640.0;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

struct Frame {
    double xmin, xmax, ymin, ymax;

    double px(double x) const { return (x - xmin) / (xmax - xmin) * kSize; }
    double py(double y) const { return (ymax - y) / (ymax - ymin) * kSize; }
    std::string pt(double x, double y) const { return num(px(x)) + "," + num(py(y)); }
};

}  // namespace

std::string render_svg(const Sector& sector, const std::optional<Lens>& lens, const RootSet& roots,
                       const Precision& prec) {
    const double v = sector.vertex.upper().get_d();
    const double theta = std::numbers::pi / sector.angle_denominator();

    double extent = std::max(1.0, std::fabs(v) + 1.0);
    for (const auto& z : roots.roots) extent = std::max({extent, std::fabs(z.real()) * 1.2, std::fabs(z.imag()) * 1.2});
    double cx = 0, r = 0;
    if (lens) {
        cx = lens->center_x().get_d();
        r = lens->radius(prec).upper().get_d();
        extent = std::max(extent, 2.2 * cx);
    }
    extent = std::min(extent, 1e6);
    const Frame fr{-extent, extent, -extent, extent};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
        << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<line x1=\"0\" y1=\"" << num(fr.py(0)) << "\" x2=\"" << kSize << "\" y2=\"" << num(fr.py(0))
        << "\" stroke=\"#999\"/>\n";
    out << "<line x1=\"" << num(fr.px(0)) << "\" y1=\"0\" x2=\"" << num(fr.px(0)) << "\" y2=\"" << kSize
        << "\" stroke=\"#999\"/>\n";

    const double reach = 4 * extent;
    out << "<polygon fill=\"#4a90d9\" fill-opacity=\"0.25\" stroke=\"#4a90d9\" points=\"" << fr.pt(v, 0) << " "
        << fr.pt(v + reach * std::cos(theta), reach * std::sin(theta)) << " "
        << fr.pt(v + reach * std::cos(theta), -reach * std::sin(theta)) << "\"/>\n";

    if (lens) {
        // Upper boundary: arc of the circle centred below the axis, and its mirror image.
        const double cy = cx / std::tan(std::numbers::pi / lens->n);
        const double a0 = std::atan2(cy, -cx), a1 = std::atan2(cy, cx);
        std::vector<std::pair<double, double>> upper;
        const int steps = 96;
        for (int i = 0; i <= steps; ++i) {
            const double t = a0 + (a1 - a0) * i / steps;
            upper.emplace_back(cx + r * std::cos(t), -cy + r * std::sin(t));
        }
        out << "<polygon fill=\"#d98a4a\" fill-opacity=\"0.3\" stroke=\"#d98a4a\" points=\"";
        for (const auto& [x, y] : upper) out << fr.pt(x, y) << " ";
        for (auto it = upper.rbegin(); it != upper.rend(); ++it) out << fr.pt(it->first, -it->second) << " ";
        out << "\"/>\n";
    }

    for (const auto& z : roots.roots)
        out << "<circle cx=\"" << num(fr.px(z.real())) << "\" cy=\"" << num(fr.py(z.imag()))
            << "\" r=\"3\" fill=\"#c0392b\"/>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace zf::cli
