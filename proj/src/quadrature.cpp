// quadrature.cpp — Window segmentation

#include "abdqd/quadrature.hpp"

namespace abdqd {

std::vector<Segment> window_segments(double cutoff, std::vector<double> breakpoints, bool with_tails)
{
    std::vector<double> points{-cutoff, cutoff};
    for (double p : breakpoints) {
        if (std::isfinite(p) && p > -cutoff && p < cutoff) points.push_back(p);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end(),
                             [cutoff](double x, double y) { return std::abs(x - y) <= 1e-14 * cutoff; }),
                 points.end());

    std::vector<Segment> segments;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        segments.push_back({points[i], points[i + 1], PanelMap::identity});
    }
    if (with_tails) {
        segments.push_back({0.0, 1.0 / cutoff, PanelMap::lower_tail});
        segments.push_back({0.0, 1.0 / cutoff, PanelMap::upper_tail});
    }
    return segments;
}

std::vector<Segment> limit_width(const std::vector<Segment>& segments, double max_width)
{
    if (!(max_width > 0.0)) throw std::invalid_argument("limit_width: max_width must be positive");
    std::vector<Segment> out;
    for (const auto& seg : segments) {
        const double width = seg.b - seg.a;
        if (seg.map != PanelMap::identity || width <= max_width) {
            out.push_back(seg);
            continue;
        }
        const int pieces = static_cast<int>(std::ceil(width / max_width));
        const double step = width / pieces;
        for (int i = 0; i < pieces; ++i) {
            const double a = seg.a + i * step;
            const double b = i + 1 == pieces ? seg.b : seg.a + (i + 1) * step;
            out.push_back({a, b, PanelMap::identity});
        }
    }
    return out;
}

} // namespace abdqd
