#pragma once

#include <polydiff/poly.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace polydiff {

class UnboundedDetectedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Box {
    std::vector<double> lo, hi;
    int dim() const { return static_cast<int>(lo.size()); }
};

// True when p lies in the same connected component of {Q != 0} as x0,
// certified by a sign scan along the segment [x0, p].
inline bool same_component(const Poly& q, const std::vector<double>& x0,
                           const std::vector<double>& p, int segment_samples = 64)
{
    double s0 = q.evaluate(x0);
    if (s0 == 0.0)
        throw std::invalid_argument("same_component: reference point lies on {Q=0}");
    const int d = q.dim();
    std::vector<double> x(d);
    for (int k = 1; k <= segment_samples; ++k) {
        double t = double(k) / segment_samples;
        for (int i = 0; i < d; ++i)
            x[i] = (1.0 - t) * x0[i] + t * p[i];
        double v = q.evaluate(x);
        if (v == 0.0 || std::signbit(v) != std::signbit(s0))
            return false;
    }
    return true;
}

// Box certified (numerically) to contain the component of x0: coordinate-wise
// bisection for the nearest sign change of Q along axis-parallel rays, then an
// expansion margin.
inline Box component_box(const Poly& q, const std::vector<double>& x0, double margin = 2.0,
                         double ray_limit = 64.0)
{
    const int d = q.dim();
    double s0 = q.evaluate(x0);
    if (s0 == 0.0)
        throw std::invalid_argument("component_box: interior point lies on {Q=0}");
    Box box;
    box.lo.resize(d);
    box.hi.resize(d);
    for (int i = 0; i < d; ++i) {
        for (int dir = 0; dir < 2; ++dir) {
            double sgn = dir == 0 ? 1.0 : -1.0;
            std::vector<double> x = x0;
            double t_in = 0.0, t_out = -1.0;
            for (double t = 1.0 / 1024; t <= ray_limit; t *= 2) {
                x[i] = x0[i] + sgn * t;
                double v = q.evaluate(x);
                if (v == 0.0 || std::signbit(v) != std::signbit(s0)) {
                    t_out = t;
                    break;
                }
                t_in = t;
            }
            if (t_out < 0)
                throw UnboundedDetectedError("component_box: no sign change along axis " +
                                             std::to_string(i));
            for (int it = 0; it < 60; ++it) {
                double tm = 0.5 * (t_in + t_out);
                x[i] = x0[i] + sgn * tm;
                double v = q.evaluate(x);
                if (v == 0.0 || std::signbit(v) != std::signbit(s0))
                    t_out = tm;
                else
                    t_in = tm;
            }
            double extent = margin * t_out;
            if (dir == 0)
                box.hi[i] = x0[i] + extent;
            else
                box.lo[i] = x0[i] - extent;
        }
    }
    return box;
}

}  // namespace polydiff
