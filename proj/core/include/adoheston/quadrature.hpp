#pragma once

#include "adoheston/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace adoheston {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    int intervals = 0;
    bool converged = false;
};

namespace detail {

// 15-point Kronrod abscissae (nonnegative half) with the embedded 7-point
// Gauss weights.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error, abs_value;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gk15(F& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = fc * kWgk[7];
    double gauss = fc * kWg[3];
    double absk = std::abs(kron);
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        kron += kWgk[j] * (f1 + f2);
        absk += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1)
            gauss += kWg[j / 2] * (f1 + f2);
    }
    return {a, b, kron * h, std::abs((kron - gauss) * h), absk * std::abs(h)};
}

} // namespace detail

// Globally adaptive Gauss-Kronrod (7/15) on a finite interval. Splits the
// segment with the largest error estimate until the summed estimate meets
// max(rel_tol |I|, abs_tol) or the roundoff floor of the integrand magnitude.
template <class F>
QuadResult integrate_gk15(F&& f, double a, double b, double rel_tol, double abs_tol,
                          int max_subdivisions)
{
    QuadResult out;
    if (a == b)
        return {0.0, 0.0, 0, true};
    std::priority_queue<detail::Segment> heap;
    heap.push(detail::gk15(f, a, b));
    double value = heap.top().value;
    double error = heap.top().error;
    double magnitude = heap.top().abs_value;
    const double floor_scale = 50.0 * std::numeric_limits<double>::epsilon();
    int n = 1;
    while (error > std::max({rel_tol * std::abs(value), abs_tol, floor_scale * magnitude})) {
        if (n >= max_subdivisions) {
            out = {value, error, n, false};
            return out;
        }
        const detail::Segment s = heap.top();
        heap.pop();
        const double m = 0.5 * (s.a + s.b);
        const detail::Segment l = detail::gk15(f, s.a, m);
        const detail::Segment r = detail::gk15(f, m, s.b);
        value += l.value + r.value - s.value;
        error += l.error + r.error - s.error;
        magnitude += l.abs_value + r.abs_value - s.abs_value;
        heap.push(l);
        heap.push(r);
        ++n;
    }
    // Re-sum to shed the drift of the running updates.
    value = 0.0;
    error = 0.0;
    while (!heap.empty()) {
        value += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    return {value, error, n, true};
}

} // namespace adoheston
