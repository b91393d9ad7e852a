#pragma once

#include <polydiff/linalg.hpp>
#include <polydiff/poly.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polydiff {

struct ExpressResult {
    Poly g;                         // polynomial in the image variables
    std::vector<Poly> multipliers;  // one per relation, in the source variables
};

// Writes target as G(f_1,...,f_k) modulo the relation ideal, with
// deg_w(G) <= degree_cap. The relation multipliers are truncated at
// working_degree (auto when < 0). Returns nullopt when infeasible.
inline std::optional<ExpressResult> express_in(const Poly& target,
                                               const std::vector<Poly>& generators,
                                               const RelationSet& relations,
                                               long degree_cap,
                                               const DegreeWeights& image_weights,
                                               long working_degree = -1)
{
    if (generators.empty())
        throw std::invalid_argument("express_in: no generators");
    const int src_dim = target.dim();
    const int k = static_cast<int>(generators.size());
    if (image_weights.dim() != k)
        throw std::invalid_argument("express_in: image weight count mismatch");
    for (auto& g : generators)
        if (g.dim() != src_dim)
            throw std::invalid_argument("express_in: generator dimension mismatch");
    for (auto& r : relations.generators)
        if (r.dim() != src_dim)
            throw std::invalid_argument("express_in: relation dimension mismatch");

    std::vector<Monomial> g_basis = monomials_up_to(image_weights, degree_cap);
    std::vector<Poly> substituted;
    substituted.reserve(g_basis.size());
    long max_sub_deg = std::max(0L, target.total_degree());
    for (auto& m : g_basis) {
        Poly s = Poly::constant(src_dim, 1);
        for (int i = 0; i < k; ++i)
            if (m[i] > 0)
                s = s * generators[i].pow(m[i]);
        max_sub_deg = std::max(max_sub_deg, s.total_degree());
        substituted.push_back(std::move(s));
    }
    long max_rel_deg = 0;
    for (auto& r : relations.generators)
        max_rel_deg = std::max(max_rel_deg, r.total_degree());
    if (working_degree < 0)
        working_degree = max_sub_deg + max_rel_deg;

    // unknown columns: G coefficients, then multiplier coefficients per relation
    struct Column {
        Poly contribution;  // polynomial in source variables multiplying the unknown
    };
    std::vector<Column> cols;
    for (auto& s : substituted)
        cols.push_back({s});
    DegreeWeights src_unit = DegreeWeights::unit(src_dim);
    std::vector<std::pair<size_t, size_t>> mult_cols;  // (relation idx, monomial idx)
    std::vector<std::vector<Monomial>> mult_basis(relations.generators.size());
    for (size_t r = 0; r < relations.generators.size(); ++r) {
        long cap = working_degree - relations.generators[r].total_degree();
        mult_basis[r] = monomials_up_to(src_unit, cap);
        for (size_t mi = 0; mi < mult_basis[r].size(); ++mi) {
            Poly mono(src_dim);
            mono.set_coeff(mult_basis[r][mi], 1);
            cols.push_back({mono * relations.generators[r]});
            mult_cols.emplace_back(r, mi);
        }
    }

    // collect all source monomials appearing anywhere
    std::map<Monomial, int, GradedLexLess> row_of;
    auto note = [&](const Poly& p) {
        for (auto& [m, c] : p.terms())
            row_of.emplace(m, 0);
    };
    note(target);
    for (auto& col : cols)
        note(col.contribution);
    int nrows = 0;
    for (auto& [m, idx] : row_of)
        idx = nrows++;

    RatMatrix a(nrows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (auto& [m, c] : cols[j].contribution.terms())
            a(row_of[m], static_cast<int>(j)) = c;
    std::vector<Rational> rhs(nrows, 0);
    for (auto& [m, c] : target.terms())
        rhs[row_of[m]] = c;

    auto x = solve(std::move(a), rhs);
    if (!x)
        return std::nullopt;

    ExpressResult res;
    res.g = Poly(k);
    for (size_t j = 0; j < g_basis.size(); ++j)
        if ((*x)[j] != 0)
            res.g.set_coeff(g_basis[j], (*x)[j]);
    res.multipliers.assign(relations.generators.size(), Poly(src_dim));
    for (size_t c = 0; c < mult_cols.size(); ++c) {
        auto [r, mi] = mult_cols[c];
        Rational v = (*x)[g_basis.size() + c];
        if (v != 0)
            res.multipliers[r].add_term(mult_basis[r][mi], v);
    }
    return res;
}

}  // namespace polydiff
