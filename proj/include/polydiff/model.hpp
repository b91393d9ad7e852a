#pragma once

#include <polydiff/poly.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polydiff {

class NotAdmissibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class DegreeViolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// d x d symmetric co-metric matrix g^{ij} of polynomials.
class Metric {
public:
    Metric() : d_(0) {}
    explicit Metric(int d) : d_(d), entries_(size_t(d) * d, Poly(d)) {}

    int dim() const { return d_; }
    Poly& at(int i, int j) { return entries_[size_t(i) * d_ + j]; }
    const Poly& at(int i, int j) const { return entries_[size_t(i) * d_ + j]; }

    void set(int i, int j, const Poly& p)
    {
        at(i, j) = p;
        at(j, i) = p;
    }

    bool is_symmetric() const
    {
        for (int i = 0; i < d_; ++i)
            for (int j = i + 1; j < d_; ++j)
                if (at(i, j) != at(j, i))
                    return false;
        return true;
    }

    Poly determinant() const
    {
        std::vector<int> cols(d_);
        for (int i = 0; i < d_; ++i)
            cols[i] = i;
        return det_rec(0, cols);
    }

private:
    Poly det_rec(int row, std::vector<int>& cols) const
    {
        if (cols.empty())
            return Poly::constant(d_, 1);
        Poly sum(d_);
        for (size_t k = 0; k < cols.size(); ++k) {
            int c = cols[k];
            std::vector<int> rest;
            for (size_t j = 0; j < cols.size(); ++j)
                if (j != k)
                    rest.push_back(cols[j]);
            Poly term = at(row, c) * det_rec(row + 1, rest);
            sum += (k % 2 == 0) ? term : -term;
        }
        return sum;
    }

    int d_;
    std::vector<Poly> entries_;
};

// Reduced boundary polynomial with its (supplied irreducible) factors and
// the measure exponents r_k of the density prod Q_k^{r_k}.
struct BoundarySpec {
    Poly q;
    std::vector<Poly> factors;
    std::vector<Rational> exponents;

    // product of factors must equal q up to a nonzero rational constant
    void validate() const
    {
        if (factors.size() != exponents.size())
            throw std::invalid_argument("BoundarySpec: factor/exponent count mismatch");
        Poly prod = Poly::constant(q.dim(), 1);
        for (auto& f : factors)
            prod = prod * f;
        if (prod.is_zero() || q.is_zero())
            throw std::invalid_argument("BoundarySpec: zero boundary polynomial");
        const auto& [mq, cq] = *q.terms().rbegin();
        const auto& [mp, cp] = *prod.terms().rbegin();
        if (mq != mp || (cq / cp) * prod != q)
            throw std::invalid_argument(
                "BoundarySpec: factors do not multiply to the boundary polynomial");
    }
};

// A Markov triple candidate: co-metric, drift, boundary, relations.
struct Model {
    std::string name;
    int d = 0;
    std::vector<std::string> names;
    DegreeWeights weights;
    Metric metric;
    std::vector<Poly> drift;
    std::optional<BoundarySpec> boundary;
    RelationSet relations;
    std::vector<Rational> interior_point;
    std::vector<Poly> exp_weights;  // density is multiplied by exp(sum of these)

    // deg_a(g^{ij}) <= a_i+a_j and deg_a(b^i) <= a_i
    void check_degrees() const
    {
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j)
                if (weighted_degree(metric.at(i, j), weights) > weights.a[i] + weights.a[j])
                    throw DegreeViolationError("metric entry (" + std::to_string(i) + "," +
                                               std::to_string(j) + ") exceeds degree bound");
            if (weighted_degree(drift[i], weights) > weights.a[i])
                throw DegreeViolationError("drift component " + std::to_string(i) +
                                           " exceeds degree bound");
        }
    }
};

// Carre du champ: Gamma(f,h) = sum_ij g^{ij} d_i f d_j h.
inline Poly gamma(const Model& m, const Poly& f, const Poly& h)
{
    if (f.dim() != m.d || h.dim() != m.d)
        throw std::invalid_argument("gamma: dimension mismatch");
    Poly r(m.d);
    for (int i = 0; i < m.d; ++i) {
        Poly dfi = f.derivative(i);
        if (dfi.is_zero())
            continue;
        for (int j = 0; j < m.d; ++j)
            r += m.metric.at(i, j) * dfi * h.derivative(j);
    }
    return r;
}

// L f = sum_ij g^{ij} d2_ij f + sum_i b^i d_i f.
inline Poly apply_L(const Model& m, const Poly& f)
{
    if (f.dim() != m.d)
        throw std::invalid_argument("apply_L: dimension mismatch");
    Poly r(m.d);
    for (int i = 0; i < m.d; ++i) {
        Poly dfi = f.derivative(i);
        r += m.drift[i] * dfi;
        for (int j = 0; j < m.d; ++j)
            r += m.metric.at(i, j) * dfi.derivative(j);
    }
    return r;
}

// L(Phi(f_1..f_k)) via the chain rule; outer lives in k abstract variables.
inline Poly chain_rule(const Model& m, const std::vector<Poly>& maps, const Poly& outer)
{
    if (outer.dim() != static_cast<int>(maps.size()))
        throw std::invalid_argument("chain_rule: arity mismatch");
    const int k = outer.dim();
    Poly r(m.d);
    for (int i = 0; i < k; ++i) {
        Poly di = outer.derivative(i).substitute(maps);
        if (!di.is_zero())
            r += di * apply_L(m, maps[i]);
        for (int j = 0; j < k; ++j) {
            Poly dij = outer.derivative(i).derivative(j).substitute(maps);
            if (!dij.is_zero())
                r += dij * gamma(m, maps[i], maps[j]);
        }
    }
    return r;
}

// Drift of the measure prod Q_k^{r_k} * exp(sum W_j):
//   b^i = sum_j d_j g^{ij} + sum_k r_k L_i^{(k)} + sum_j g^{ij} d_j W.
// Each factor must satisfy the cofactor equation sum_j g^{ij} d_j Q_k = L_i^{(k)} Q_k.
inline std::vector<Poly> drift_from_measure(const Metric& g,
                                            const std::optional<BoundarySpec>& boundary,
                                            const std::vector<Poly>& exp_weights,
                                            const DegreeWeights& weights)
{
    const int d = g.dim();
    std::vector<Poly> b(d, Poly(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            b[i] += g.at(i, j).derivative(j);
    if (boundary) {
        for (size_t k = 0; k < boundary->factors.size(); ++k) {
            const Poly& qk = boundary->factors[k];
            for (int i = 0; i < d; ++i) {
                Poly num(d);
                for (int j = 0; j < d; ++j)
                    num += g.at(i, j) * qk.derivative(j);
                auto cof = exact_divide(num, qk);
                if (!cof)
                    throw NotAdmissibleError("factor " + std::to_string(k) +
                                             " fails the cofactor divisibility");
                b[i] += boundary->exponents[k] * (*cof);
            }
        }
    }
    if (!exp_weights.empty()) {
        Poly w(d);
        for (auto& p : exp_weights)
            w += p;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                b[i] += g.at(i, j) * w.derivative(j);
    }
    for (int i = 0; i < d; ++i)
        if (weighted_degree(b[i], weights) > weights.a[i])
            throw DegreeViolationError("derived drift " + std::to_string(i) +
                                       " exceeds degree bound a_i");
    return b;
}

// ---- complex two-variable specs (Z, Zbar) -> real model pieces ----

// swaps Z and Zbar exponents (coefficient conjugation is trivial over Q)
inline Poly conjugate_mirror(const Poly& p)
{
    if (p.dim() != 2)
        throw std::invalid_argument("conjugate_mirror: expects a (Z,Zbar) polynomial");
    Poly r(2);
    for (auto& [m, c] : p.terms())
        r.set_coeff({m[1], m[0]}, c);
    return r;
}

struct ComplexGammaSpec {
    Poly gamma_zz;    // Gamma(Z,Z) as a polynomial in (Z, Zbar)
    Poly gamma_zzb;   // Gamma(Z,Zbar)
    Poly gamma_zbzb;  // Gamma(Zbar,Zbar)
    Poly l_z;         // L Z
};

struct RealModelPieces {
    Metric metric;  // in (x,y)
    std::vector<Poly> drift;
};

namespace detail {
// real/imag pair of polynomials in (x,y)
struct CPoly {
    Poly re, im;
};
inline CPoly cadd(const CPoly& a, const CPoly& b) { return {a.re + b.re, a.im + b.im}; }
inline CPoly cmul(const CPoly& a, const CPoly& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
// substitutes Z = x+iy, Zbar = x-iy into a (Z,Zbar) polynomial
inline CPoly realize(const Poly& p)
{
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    CPoly z{x, y}, zb{x, -y};
    CPoly r{Poly(2), Poly(2)};
    for (auto& [m, c] : p.terms()) {
        CPoly t{Poly::constant(2, c), Poly(2)};
        for (int k = 0; k < m[0]; ++k)
            t = cmul(t, z);
        for (int k = 0; k < m[1]; ++k)
            t = cmul(t, zb);
        r = cadd(r, t);
    }
    return r;
}
}  // namespace detail

// Builds the real (x,y) model pieces from a complex (Z,Zbar) spec, Z = x+iy.
inline RealModelPieces complex_to_real(const ComplexGammaSpec& spec)
{
    if (spec.gamma_zbzb != conjugate_mirror(spec.gamma_zz))
        throw std::invalid_argument("complex_to_real: Gamma(Zb,Zb) is not the mirror of Gamma(Z,Z)");
    if (spec.gamma_zzb != conjugate_mirror(spec.gamma_zzb))
        throw std::invalid_argument("complex_to_real: Gamma(Z,Zb) is not conjugation-symmetric");

    using detail::CPoly;
    CPoly gzz = detail::realize(spec.gamma_zz);
    CPoly gzzb = detail::realize(spec.gamma_zzb);
    CPoly gzbzb = detail::realize(spec.gamma_zbzb);
    CPoly lz = detail::realize(spec.l_z);
    CPoly lzb = detail::realize(conjugate_mirror(spec.l_z));

    const Rational q14(1, 4), q12(1, 2), two(2);
    // Gamma(x,x) = (GZZ + 2 GZZb + GZbZb)/4
    CPoly gxx{q14 * (gzz.re + two * gzzb.re + gzbzb.re),
              q14 * (gzz.im + two * gzzb.im + gzbzb.im)};
    // Gamma(y,y) = -(GZZ - 2 GZZb + GZbZb)/4
    CPoly gyy{q14 * (two * gzzb.re - gzz.re - gzbzb.re),
              q14 * (two * gzzb.im - gzz.im - gzbzb.im)};
    // Gamma(x,y) = (GZZ - GZbZb)/(4i): real part = im/4, imaginary = -re/4
    CPoly diff{gzz.re - gzbzb.re, gzz.im - gzbzb.im};
    Poly gxy = q14 * diff.im;
    Poly gxy_im = -q14 * diff.re;
    // Lx = (LZ + LZb)/2, Ly = (LZ - LZb)/(2i)
    Poly lx = q12 * (lz.re + lzb.re);
    Poly lx_im = q12 * (lz.im + lzb.im);
    Poly ly = q12 * (lz.im - lzb.im);
    Poly ly_im = -q12 * (lz.re - lzb.re);

    for (const Poly* imag : {&gxx.im, &gyy.im, &gxy_im, &lx_im, &ly_im})
        if (!imag->is_zero())
            throw std::invalid_argument("complex_to_real: non-real result, inconsistent input");

    RealModelPieces out;
    out.metric = Metric(2);
    out.metric.set(0, 0, gxx.re);
    out.metric.set(1, 1, gyy.re);
    out.metric.set(0, 1, gxy);
    out.drift = {lx, ly};
    return out;
}

}  // namespace polydiff
