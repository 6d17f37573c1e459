// quadrature.hpp — Globally adaptive Gauss-Kronrod (7/15) panel integration
//
// Panels are bisected worst-first until the summed error estimate meets the
// tolerance. Semi-infinite tails are integrated after the substitution
// omega = +-1/s, which turns an integrand decaying like 1/omega^2 into a
// bounded one on (0, 1/D].

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "abdqd/core.hpp"

namespace abdqd {

struct QuadratureSpec {
    double abs_tol{1e-9};
    double rel_tol{1e-10};
    int max_panels{20000};
    bool tail_correction{false};
};

class QuadratureNotConverged : public std::runtime_error {
public:
    QuadratureNotConverged(const std::string& what, double achieved_error, int panels)
        : std::runtime_error(what), achieved_error_(achieved_error), panels_(panels) {}

    double achieved_error() const { return achieved_error_; }
    int panels() const { return panels_; }

private:
    double achieved_error_;
    int panels_;
};

// How a panel coordinate maps onto omega.
enum class PanelMap {
    identity,   // omega = x
    upper_tail, // omega = 1/x,  x in (0, 1/D]
    lower_tail, // omega = -1/x, x in (0, 1/D]
};

struct Segment {
    double a;
    double b;
    PanelMap map{PanelMap::identity};
};

template <class V>
struct QuadratureResult {
    V value;
    double error{0.0};
    int panels{0};
};

namespace detail {

inline double max_abs(double x) { return std::abs(x); }
inline double max_abs(const ComplexMat2& m) { return m.cwiseAbs().maxCoeff(); }

template <class V>
V zero_like();
template <>
inline double zero_like<double>() { return 0.0; }
template <>
inline ComplexMat2 zero_like<ComplexMat2>() { return ComplexMat2::Zero(); }

// QUADPACK qk15 abscissae/weights; the 7-point Gauss rule sits on the odd nodes.
inline constexpr std::array<double, 8> kronrod_x{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_w{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss_w{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class V, class F>
V mapped_eval(F& f, double x, PanelMap map)
{
    switch (map) {
    case PanelMap::identity:
        return f(x);
    case PanelMap::upper_tail:
        return f(1.0 / x) * (1.0 / (x * x));
    case PanelMap::lower_tail:
        return f(-1.0 / x) * (1.0 / (x * x));
    }
    return f(x);
}

template <class V>
struct Panel {
    Segment seg;
    std::size_t order; // insertion order, for deterministic tie breaking
    V value;
    double error;
};

template <class V, class F>
Panel<V> kronrod_panel(F& f, const Segment& seg, std::size_t order)
{
    const double centre = 0.5 * (seg.a + seg.b);
    const double half = 0.5 * (seg.b - seg.a);

    const V fc = mapped_eval<V>(f, centre, seg.map);
    V kronrod = fc * kronrod_w[7];
    V gauss = fc * gauss_w[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kronrod_x[j];
        const V f1 = mapped_eval<V>(f, centre - dx, seg.map);
        const V f2 = mapped_eval<V>(f, centre + dx, seg.map);
        const V sum = f1 + f2;
        kronrod += sum * kronrod_w[j];
        if (j % 2 == 1) gauss += sum * gauss_w[j / 2];
    }
    kronrod *= half;
    gauss *= half;
    const V diff = kronrod - gauss;
    return Panel<V>{seg, order, kronrod, max_abs(diff)};
}

} // namespace detail

// Integrate f over the union of segments. f takes omega and returns V.
template <class V, class F>
QuadratureResult<V> integrate_segments(F&& f, const std::vector<Segment>& segments,
                                       const QuadratureSpec& spec)
{
    using detail::Panel;
    auto worse = [](const Panel<V>& x, const Panel<V>& y) {
        if (x.error != y.error) return x.error < y.error;
        return x.order > y.order;
    };
    std::priority_queue<Panel<V>, std::vector<Panel<V>>, decltype(worse)> queue(worse);

    std::size_t order = 0;
    for (const auto& seg : segments) {
        if (!(seg.b > seg.a)) continue;
        queue.push(detail::kronrod_panel<V>(f, seg, order++));
    }

    auto totals = [&]() {
        // Sum in a fixed order so the result does not depend on the split history.
        auto copy = queue;
        std::vector<Panel<V>> store;
        store.reserve(copy.size());
        while (!copy.empty()) {
            store.push_back(copy.top());
            copy.pop();
        }
        std::sort(store.begin(), store.end(), [](const Panel<V>& x, const Panel<V>& y) {
            if (x.seg.map != y.seg.map) return x.seg.map < y.seg.map;
            return x.seg.a < y.seg.a;
        });
        QuadratureResult<V> r{detail::zero_like<V>(), 0.0, static_cast<int>(store.size())};
        for (const auto& p : store) {
            r.value += p.value;
            r.error += p.error;
        }
        return r;
    };

    // Running sums drive the loop; the reported value is re-summed in fixed order.
    V value = detail::zero_like<V>();
    double error = 0.0;
    {
        auto copy = queue;
        while (!copy.empty()) {
            value += copy.top().value;
            error += copy.top().error;
            copy.pop();
        }
    }

    int panels = static_cast<int>(queue.size());
    while (!queue.empty()) {
        const double tol = std::max(spec.abs_tol, spec.rel_tol * detail::max_abs(value));
        if (error <= tol) break;
        if (panels >= spec.max_panels) {
            throw QuadratureNotConverged("quadrature did not converge within " +
                                             std::to_string(spec.max_panels) + " panels (error estimate " +
                                             std::to_string(error) + ")",
                                         error, panels);
        }
        Panel<V> worst = queue.top();
        const double mid = 0.5 * (worst.seg.a + worst.seg.b);
        if (!(mid > worst.seg.a && mid < worst.seg.b)) {
            throw QuadratureNotConverged("quadrature panel became too narrow to bisect (error estimate " +
                                             std::to_string(error) + ")",
                                         error, panels);
        }
        queue.pop();
        auto left = detail::kronrod_panel<V>(f, Segment{worst.seg.a, mid, worst.seg.map}, order++);
        auto right = detail::kronrod_panel<V>(f, Segment{mid, worst.seg.b, worst.seg.map}, order++);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        queue.push(std::move(left));
        queue.push(std::move(right));
        ++panels;
    }
    return totals();
}

// Segments covering [-D, D] split at the given points, plus the two mapped
// tails when requested.
std::vector<Segment> window_segments(double cutoff, std::vector<double> breakpoints, bool with_tails);

// Splits identity-mapped segments into equal pieces no wider than max_width.
// Needed for oscillatory integrands, where a wide first panel can agree with
// its own embedded estimate by accident.
std::vector<Segment> limit_width(const std::vector<Segment>& segments, double max_width);

} // namespace abdqd
