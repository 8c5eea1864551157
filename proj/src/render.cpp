#include "kcover/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kcover {

namespace {

constexpr double kScale = 40.0;
constexpr double kMargin = 0.6;

const char* dash_pattern(int set) {
    static const char* patterns[] = {"none", "6,3", "2,3", "8,3,2,3", "4,4", "1,3"};
    return patterns[set % 6];
}

}  // namespace

std::string render_svg(const InstanceFile& file, const SolutionFile* solution,
                       double tau) {
    double xmin = 0.0, ymin = 0.0, xmax = 4.0, ymax = 4.0;
    bool seeded = false;
    auto grow = [&](double x, double y, double pad) {
        if (!seeded) {
            xmin = x - pad;
            xmax = x + pad;
            ymin = y - pad;
            ymax = y + pad;
            seeded = true;
            return;
        }
        xmin = std::min(xmin, x - pad);
        xmax = std::max(xmax, x + pad);
        ymin = std::min(ymin, y - pad);
        ymax = std::max(ymax, y + pad);
    };
    for (const auto& p : file.inst.points) grow(p.x, p.y, 0.0);
    for (const auto& d : file.inst.disks) grow(d.center.x, d.center.y, 1.0);
    if (file.segments) {
        for (const auto& s : *file.segments) {
            grow(s.a.x, s.a.y, 0.0);
            grow(s.b.x, s.b.y, 0.0);
        }
    }
    if (file.region) {
        grow(file.region->xmin, file.region->ymin, 0.0);
        grow(file.region->xmax, file.region->ymax, 0.0);
    }
    xmin = std::max(0.0, xmin - kMargin);
    ymin = std::max(0.0, ymin - kMargin);
    xmax += kMargin;
    ymax += kMargin;

    const double w = (xmax - xmin) * kScale;
    const double h = (ymax - ymin) * kScale;
    auto sx = [&](double x) { return (x - xmin) * kScale; };
    auto sy = [&](double y) { return (ymax - y) * kScale; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
        << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h
        << "\" fill=\"white\"/>\n";

    // Grid at multiples of tau, with cell id labels.
    const int i0 = static_cast<int>(std::floor(xmin / tau));
    const int i1 = static_cast<int>(std::ceil(xmax / tau));
    const int j0 = static_cast<int>(std::floor(ymin / tau));
    const int j1 = static_cast<int>(std::ceil(ymax / tau));
    for (int i = i0; i <= i1; ++i) {
        svg << "<line x1=\"" << sx(i * tau) << "\" y1=\"" << sy(ymin) << "\" x2=\""
            << sx(i * tau) << "\" y2=\"" << sy(ymax)
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    }
    for (int j = j0; j <= j1; ++j) {
        svg << "<line x1=\"" << sx(xmin) << "\" y1=\"" << sy(j * tau) << "\" x2=\""
            << sx(xmax) << "\" y2=\"" << sy(j * tau)
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    }
    for (int i = std::max(0, i0); i < i1; ++i) {
        for (int j = std::max(0, j0); j < j1; ++j) {
            svg << "<text x=\"" << sx((i + 0.08) * tau) << "\" y=\""
                << sy((j + 0.92) * tau) + 10
                << "\" font-size=\"10\" fill=\"#aaaaaa\">[" << i << "," << j
                << "]</text>\n";
        }
    }

    if (file.region) {
        svg << "<rect x=\"" << sx(file.region->xmin) << "\" y=\"" << sy(file.region->ymax)
            << "\" width=\"" << (file.region->width() * kScale) << "\" height=\""
            << (file.region->height() * kScale)
            << "\" fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"4,3\"/>\n";
    }

    const int k = std::max(1, file.inst.k);
    const int hues = solution ? std::max(1, solution->num_colors) : 1;
    for (int d = 0; d < static_cast<int>(file.inst.disks.size()); ++d) {
        const auto& c = file.inst.disks[d].center;
        std::string fill = "none";
        std::string dash = "none";
        if (solution) {
            auto it = solution->colors.find(d);
            if (it != solution->colors.end()) {
                const int hue = (360 * it->second) / hues;
                fill = "hsl(" + std::to_string(hue) + ",70%,55%)";
                dash = dash_pattern(it->second / k);
            }
        }
        svg << "<circle cx=\"" << sx(c.x) << "\" cy=\"" << sy(c.y) << "\" r=\"" << kScale
            << "\" fill=\"" << fill << "\" fill-opacity=\"0.35\" stroke=\"#444444\""
            << " stroke-width=\"1.5\" stroke-dasharray=\"" << dash << "\"/>\n";
    }

    if (file.segments) {
        for (const auto& s : *file.segments) {
            svg << "<line x1=\"" << sx(s.a.x) << "\" y1=\"" << sy(s.a.y) << "\" x2=\""
                << sx(s.b.x) << "\" y2=\"" << sy(s.b.y)
                << "\" stroke=\"#222222\" stroke-width=\"2\"/>\n";
        }
    }
    for (const auto& p : file.inst.points) {
        svg << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y)
            << "\" r=\"3\" fill=\"#111111\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace kcover
