#pragma once

#include <polydiff/rational.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace polydiff {

using Monomial = std::vector<int>;

// Per-variable positive integer degree weights; deg_a(x^p) = sum a_i p_i.
struct DegreeWeights {
    std::vector<int> a;

    DegreeWeights() = default;
    explicit DegreeWeights(std::vector<int> w) : a(std::move(w))
    {
        for (int ai : a)
            if (ai < 1)
                throw std::invalid_argument("DegreeWeights: entries must be >= 1");
    }
    static DegreeWeights unit(int d) { return DegreeWeights(std::vector<int>(d, 1)); }

    int dim() const { return static_cast<int>(a.size()); }
    long degree_of(const Monomial& m) const
    {
        long s = 0;
        for (size_t i = 0; i < a.size(); ++i)
            s += static_cast<long>(a[i]) * m[i];
        return s;
    }
};

// Graded order (by total degree), ties broken lexicographically.
struct GradedLexLess {
    bool operator()(const Monomial& x, const Monomial& y) const
    {
        long dx = std::accumulate(x.begin(), x.end(), 0L);
        long dy = std::accumulate(y.begin(), y.end(), 0L);
        if (dx != dy)
            return dx < dy;
        return x < y;
    }
};

inline constexpr long kNegInfinityDegree = std::numeric_limits<long>::min();

// Sparse multivariate polynomial with exact rational coefficients.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    Poly() : dim_(0) {}
    explicit Poly(int dim) : dim_(dim) {}

    static Poly constant(int dim, const Rational& c)
    {
        Poly p(dim);
        if (c != 0)
            p.terms_[Monomial(dim, 0)] = c;
        return p;
    }
    static Poly variable(int dim, int i, int power = 1)
    {
        if (i < 0 || i >= dim)
            throw std::invalid_argument("Poly::variable: index out of range");
        Poly p(dim);
        Monomial m(dim, 0);
        m[i] = power;
        p.terms_[m] = 1;
        return p;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void set_coeff(const Monomial& m, const Rational& c)
    {
        if (static_cast<int>(m.size()) != dim_)
            throw std::invalid_argument("Poly::set_coeff: exponent length mismatch");
        if (c == 0)
            terms_.erase(m);
        else
            terms_[m] = c;
    }

    void add_term(const Monomial& m, const Rational& c)
    {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0)
                terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Poly operator-() const
    {
        Poly r(dim_);
        for (auto& [m, c] : terms_)
            r.terms_[m] = -c;
        return r;
    }

    Poly& operator+=(const Poly& q)
    {
        check_dim(q);
        for (auto& [m, c] : q.terms_)
            add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& q)
    {
        check_dim(q);
        for (auto& [m, c] : q.terms_)
            add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly p, const Poly& q) { return p += q; }
    friend Poly operator-(Poly p, const Poly& q) { return p -= q; }

    friend Poly operator*(const Poly& p, const Poly& q)
    {
        p.check_dim(q);
        Poly r(p.dim_);
        for (auto& [mp, cp] : p.terms_)
            for (auto& [mq, cq] : q.terms_) {
                Monomial m(p.dim_);
                for (int i = 0; i < p.dim_; ++i)
                    m[i] = mp[i] + mq[i];
                r.add_term(m, cp * cq);
            }
        return r;
    }

    friend Poly operator*(const Rational& c, const Poly& p)
    {
        Poly r(p.dim_);
        if (c != 0)
            for (auto& [m, cp] : p.terms_)
                r.terms_[m] = c * cp;
        return r;
    }
    friend Poly operator*(const Poly& p, const Rational& c) { return c * p; }

    bool operator==(const Poly& q) const { return dim_ == q.dim_ && terms_ == q.terms_; }
    bool operator!=(const Poly& q) const { return !(*this == q); }

    Poly derivative(int i) const
    {
        if (i < 0 || i >= dim_)
            throw std::invalid_argument("Poly::derivative: index out of range");
        Poly r(dim_);
        for (auto& [m, c] : terms_) {
            if (m[i] == 0)
                continue;
            Monomial n = m;
            n[i] -= 1;
            r.add_term(n, c * m[i]);
        }
        return r;
    }

    Poly pow(int k) const
    {
        if (k < 0)
            throw std::invalid_argument("Poly::pow: negative exponent");
        Poly r = constant(dim_, 1);
        Poly base = *this;
        while (k > 0) {
            if (k & 1)
                r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    long total_degree() const
    {
        if (terms_.empty())
            return kNegInfinityDegree;
        long s = 0;
        for (int e : terms_.rbegin()->first)
            s += e;
        return s;
    }

    Rational evaluate(const std::vector<Rational>& x) const
    {
        if (static_cast<int>(x.size()) != dim_)
            throw std::invalid_argument("Poly::evaluate: point length mismatch");
        Rational s = 0;
        for (auto& [m, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < dim_; ++i)
                for (int k = 0; k < m[i]; ++k)
                    t *= x[i];
            s += t;
        }
        return s;
    }

    double evaluate(const std::vector<double>& x) const
    {
        if (static_cast<int>(x.size()) != dim_)
            throw std::invalid_argument("Poly::evaluate: point length mismatch");
        double s = 0;
        for (auto& [m, c] : terms_) {
            double t = to_double(c);
            for (int i = 0; i < dim_; ++i)
                for (int k = 0; k < m[i]; ++k)
                    t *= x[i];
            s += t;
        }
        return s;
    }

    // Composition: this in d variables, args[i] gives the value of variable i.
    Poly substitute(const std::vector<Poly>& args) const
    {
        if (static_cast<int>(args.size()) != dim_)
            throw std::invalid_argument("Poly::substitute: argument count mismatch");
        int out_dim = args.empty() ? 0 : args[0].dim();
        for (auto& a : args)
            if (a.dim() != out_dim)
                throw std::invalid_argument("Poly::substitute: mixed argument dimensions");
        Poly r(out_dim);
        for (auto& [m, c] : terms_) {
            Poly t = constant(out_dim, c);
            for (int i = 0; i < dim_; ++i)
                if (m[i] > 0)
                    t = t * args[i].pow(m[i]);
            r += t;
        }
        return r;
    }

    std::string to_string(const std::vector<std::string>& names) const;
    static Poly parse(const std::string& text, const std::vector<std::string>& names);

private:
    void check_dim(const Poly& q) const
    {
        if (dim_ != q.dim_)
            throw std::invalid_argument("Poly: dimension mismatch");
    }

    int dim_;
    TermMap terms_;
};

// Algebraic relations that vanish identically on the model's carrier.
struct RelationSet {
    std::vector<Poly> generators;

    RelationSet() = default;
    explicit RelationSet(std::vector<Poly> gens) : generators(std::move(gens))
    {
        for (auto& g : generators)
            if (g.is_zero())
                throw std::invalid_argument("RelationSet: zero generator");
    }
    bool empty() const { return generators.empty(); }
};

inline long weighted_degree(const Poly& p, const DegreeWeights& w)
{
    if (p.dim() != w.dim())
        throw std::invalid_argument("weighted_degree: dimension mismatch");
    if (p.is_zero())
        return kNegInfinityDegree;
    long best = kNegInfinityDegree;
    for (auto& [m, c] : p.terms())
        best = std::max(best, w.degree_of(m));
    return best;
}

// Exact multivariate division: returns r with p = q*r, or nullopt.
inline std::optional<Poly> exact_divide(const Poly& p, const Poly& q)
{
    if (p.dim() != q.dim())
        throw std::invalid_argument("exact_divide: dimension mismatch");
    if (q.is_zero())
        throw std::invalid_argument("exact_divide: division by zero polynomial");
    Poly rem = p;
    Poly quot(p.dim());
    const auto& lt_q = *q.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& lt_r = *rem.terms().rbegin();
        Monomial m(p.dim());
        for (int i = 0; i < p.dim(); ++i) {
            int e = lt_r.first[i] - lt_q.first[i];
            if (e < 0)
                return std::nullopt;
            m[i] = e;
        }
        Rational c = lt_r.second / lt_q.second;
        Poly t(p.dim());
        t.set_coeff(m, c);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

// All exponent vectors with weighted degree <= n, graded order (weighted), ties lex.
inline std::vector<Monomial> monomials_up_to(const DegreeWeights& w, long n)
{
    int d = w.dim();
    std::vector<Monomial> out;
    Monomial cur(d, 0);
    // depth-first enumeration, then sort canonically
    std::function<void(int, long)> rec = [&](int i, long budget) {
        if (i == d) {
            out.push_back(cur);
            return;
        }
        for (int e = 0;; ++e) {
            long cost = static_cast<long>(e) * w.a[i];
            if (cost > budget)
                break;
            cur[i] = e;
            rec(i + 1, budget - cost);
        }
        cur[i] = 0;
    };
    if (n >= 0)
        rec(0, n);
    std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) {
        long dx = w.degree_of(x), dy = w.degree_of(y);
        if (dx != dy)
            return dx < dy;
        return x < y;
    });
    return out;
}

inline std::vector<std::string> default_names(int d)
{
    std::vector<std::string> names;
    for (int i = 0; i < d; ++i)
        names.push_back("x" + std::to_string(i + 1));
    return names;
}

inline std::string Poly::to_string(const std::vector<std::string>& names) const
{
    if (static_cast<int>(names.size()) != dim_)
        throw std::invalid_argument("Poly::to_string: name count mismatch");
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_var = std::any_of(m.begin(), m.end(), [](int e) { return e > 0; });
        if (ac != 1 || !has_var) {
            os << polydiff::to_string(ac);
            if (has_var)
                os << "*";
        }
        bool first_var = true;
        for (int i = 0; i < dim_; ++i) {
            if (m[i] == 0)
                continue;
            if (!first_var)
                os << "*";
            first_var = false;
            os << names[i];
            if (m[i] > 1)
                os << "^" << m[i];
        }
    }
    return os.str();
}

inline Poly Poly::parse(const std::string& text, const std::vector<std::string>& names)
{
    int d = static_cast<int>(names.size());
    Poly result(d);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    if (i == text.size())
        throw std::invalid_argument("Poly::parse: empty input");
    bool first_term = true;
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-')
                sign = -1;
            ++i;
        } else if (!first_term) {
            throw std::invalid_argument("Poly::parse: expected '+' or '-' at position " +
                                        std::to_string(i));
        }
        first_term = false;
        // one term: factors separated by '*'
        Rational coeff = sign;
        Monomial m(d, 0);
        bool any_factor = false;
        while (true) {
            skip_ws();
            if (i >= text.size())
                break;
            if (std::isdigit(static_cast<unsigned char>(text[i]))) {
                size_t j = i;
                while (j < text.size() &&
                       (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/' ||
                        text[j] == '.'))
                    ++j;
                coeff *= parse_rational(text.substr(i, j - i));
                i = j;
                any_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
                size_t j = i;
                while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                           text[j] == '_'))
                    ++j;
                std::string name = text.substr(i, j - i);
                auto it = std::find(names.begin(), names.end(), name);
                if (it == names.end())
                    throw std::invalid_argument("Poly::parse: unknown variable '" + name + "'");
                i = j;
                int e = 1;
                skip_ws();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip_ws();
                    size_t k = i;
                    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])))
                        ++k;
                    if (k == i)
                        throw std::invalid_argument("Poly::parse: missing exponent");
                    e = std::stoi(text.substr(i, k - i));
                    i = k;
                }
                m[static_cast<size_t>(it - names.begin())] += e;
                any_factor = true;
            } else {
                throw std::invalid_argument("Poly::parse: unexpected character '" +
                                            std::string(1, text[i]) + "'");
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!any_factor)
            throw std::invalid_argument("Poly::parse: empty term");
        result.add_term(m, coeff);
        skip_ws();
    }
    return result;
}

}  // namespace polydiff
