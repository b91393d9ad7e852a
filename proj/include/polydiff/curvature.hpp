#pragma once

#include <polydiff/model.hpp>
#include <polydiff/poly.hpp>

#include <stdexcept>
#include <vector>

namespace polydiff {

class DegenerateAtPointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Rational function num/den with exact arithmetic; never simplified.
struct RatFun {
    Poly num, den;

    static RatFun from(const Poly& p) { return {p, Poly::constant(p.dim(), 1)}; }

    RatFun derivative(int i) const
    {
        return {num.derivative(i) * den - num * den.derivative(i), den * den};
    }
    Rational evaluate(const std::vector<Rational>& x) const
    {
        Rational d = den.evaluate(x);
        if (d == 0)
            throw DegenerateAtPointError("rational function denominator vanishes");
        return num.evaluate(x) / d;
    }
};

}  // namespace detail

// Gaussian curvature of the Riemannian metric (g_ij) = (g^{ij})^{-1} of a 2D
// model, via the Brioschi formula with exact symbolic derivatives, evaluated
// at a rational interior point.
inline double gaussian_curvature(const Model& m, const std::vector<Rational>& point)
{
    if (m.d != 2)
        throw std::invalid_argument("gaussian_curvature: model must be two-dimensional");
    using detail::RatFun;
    Poly det = m.metric.determinant();
    if (det.evaluate(point) == 0)
        throw DegenerateAtPointError("co-metric degenerate at the given point");

    // first fundamental form E,F,G = adj(co-metric)/det(co-metric)
    RatFun E{m.metric.at(1, 1), det};
    RatFun F{-m.metric.at(0, 1), det};
    RatFun G{m.metric.at(0, 0), det};

    RatFun Eu = E.derivative(0), Ev = E.derivative(1), Evv = Ev.derivative(1);
    RatFun Fu = F.derivative(0), Fv = F.derivative(1), Fuv = Fu.derivative(1);
    RatFun Gu = G.derivative(0), Gv = G.derivative(1), Guu = Gu.derivative(0);

    auto ev = [&](const RatFun& f) { return f.evaluate(point); };
    Rational e = ev(E), f = ev(F), g = ev(G);
    Rational eu = ev(Eu), evx = ev(Ev), evv = ev(Evv);
    Rational fu = ev(Fu), fv = ev(Fv), fuv = ev(Fuv);
    Rational gu = ev(Gu), gv = ev(Gv), guu = ev(Guu);

    const Rational h(1, 2);
    auto det3 = [](Rational a11, Rational a12, Rational a13, Rational a21, Rational a22,
                   Rational a23, Rational a31, Rational a32, Rational a33) {
        return a11 * (a22 * a33 - a23 * a32) - a12 * (a21 * a33 - a23 * a31) +
               a13 * (a21 * a32 - a22 * a31);
    };
    Rational m1 = det3(-h * evv + fuv - h * guu, h * eu, fu - h * evx,
                       fv - h * gu, e, f,
                       h * gv, f, g);
    Rational m2 = det3(0, h * evx, h * gu,
                       h * evx, e, f,
                       h * gu, f, g);
    Rational denom = e * g - f * f;
    if (denom == 0)
        throw DegenerateAtPointError("first fundamental form degenerate at the given point");
    return to_double((m1 - m2) / (denom * denom));
}

}  // namespace polydiff
