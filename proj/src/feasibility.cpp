#include "toroidal/feasibility.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace toroidal {

namespace {

void check_shapes(const RatMatrix& a, std::span<const Rational> b)
{
    if (a.rows() != b.size())
        throw DimensionError("right-hand side length differs from row count");
}

// Inequality coeffs . y <= rhs over the free variables.
struct Inequality {
    std::vector<Rational> coeffs;
    Rational rhs;

    bool operator<(const Inequality& o) const
    {
        if (coeffs != o.coeffs)
            return coeffs < o.coeffs;
        return rhs < o.rhs;
    }
};

// Scales so the first nonzero coefficient has absolute value one.
Inequality normalized(Inequality q)
{
    for (const auto& c : q.coeffs) {
        if (c == 0)
            continue;
        Rational s = abs(c);
        for (auto& x : q.coeffs)
            x /= s;
        q.rhs /= s;
        break;
    }
    return q;
}

bool all_zero(const std::vector<Rational>& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

} // namespace

std::optional<Feasibility> feasible_fourier_motzkin(const RatMatrix& a_in, std::span<const Rational> b_in,
                                                    std::size_t max_constraints)
{
    check_shapes(a_in, b_in);
    const std::size_t m = a_in.rows();
    const std::size_t n = a_in.cols();

    // Reduced row echelon form of [A | b].
    RatMatrix a(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = a_in(i, j);
        a(i, n) = b_in[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && a(p, c) == 0)
            ++p;
        if (p == m)
            continue;
        for (std::size_t j = 0; j <= n; ++j)
            std::swap(a(p, j), a(r, j));
        Rational inv = 1 / a(r, c);
        for (std::size_t j = 0; j <= n; ++j)
            a(r, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a(i, c) == 0)
                continue;
            Rational f = a(i, c);
            for (std::size_t j = 0; j <= n; ++j)
                a(i, j) -= f * a(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (a(i, n) != 0)
            return Feasibility{};

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end())
            free_cols.push_back(c);
    const std::size_t k = free_cols.size();

    // z_pivot = rhs - sum R y >= 0  <=>  sum R y <= rhs;  y >= 0  <=>  -y <= 0.
    std::set<Inequality> system;
    for (std::size_t i = 0; i < r; ++i) {
        Inequality q{std::vector<Rational>(k), a(i, n)};
        for (std::size_t f = 0; f < k; ++f)
            q.coeffs[f] = a(i, free_cols[f]);
        system.insert(normalized(std::move(q)));
    }
    for (std::size_t f = 0; f < k; ++f) {
        Inequality q{std::vector<Rational>(k), 0};
        q.coeffs[f] = -1;
        system.insert(std::move(q));
    }

    // stages[v] is the system in which y_v is eliminated next.
    std::vector<std::vector<Inequality>> stages;
    for (std::size_t v = 0; v < k; ++v) {
        stages.emplace_back(system.begin(), system.end());
        std::vector<const Inequality*> upper, lower;
        std::set<Inequality> next;
        for (const auto& q : stages.back()) {
            if (q.coeffs[v] > 0)
                upper.push_back(&q);
            else if (q.coeffs[v] < 0)
                lower.push_back(&q);
            else
                next.insert(q);
        }
        for (const auto* u : upper)
            for (const auto* l : lower) {
                // u.c[v] > 0, l.c[v] < 0: combine to cancel y_v.
                Rational su = -l->coeffs[v];
                Rational sl = u->coeffs[v];
                Inequality q{std::vector<Rational>(k), su * u->rhs + sl * l->rhs};
                for (std::size_t f = 0; f < k; ++f)
                    q.coeffs[f] = su * u->coeffs[f] + sl * l->coeffs[f];
                q.coeffs[v] = 0;
                if (all_zero(q.coeffs)) {
                    if (q.rhs < 0)
                        return Feasibility{};
                    continue;
                }
                next.insert(normalized(std::move(q)));
                if (next.size() > max_constraints)
                    return std::nullopt;
            }
        system = std::move(next);
    }
    for (const auto& q : system)
        if (q.rhs < 0)
            return Feasibility{};

    // Back substitution: y_v is bounded by stage v given y_{v+1..k-1}.
    std::vector<Rational> y(k);
    for (std::size_t v = k; v-- > 0;) {
        std::optional<Rational> lo, hi;
        for (const auto& q : stages[v]) {
            if (q.coeffs[v] == 0)
                continue;
            Rational rest = q.rhs;
            for (std::size_t f = v + 1; f < k; ++f)
                rest -= q.coeffs[f] * y[f];
            Rational bound = rest / q.coeffs[v];
            if (q.coeffs[v] > 0) {
                if (!hi || bound < *hi)
                    hi = bound;
            } else if (!lo || bound > *lo) {
                lo = bound;
            }
        }
        if (lo && hi)
            y[v] = (*lo + *hi) / 2;
        else if (lo)
            y[v] = *lo;
        else if (hi)
            y[v] = std::min(*hi, Rational(0));
        else
            y[v] = 0;
    }

    Feasibility out{true, std::vector<Rational>(n)};
    for (std::size_t f = 0; f < k; ++f)
        out.witness[free_cols[f]] = y[f];
    for (std::size_t i = 0; i < r; ++i) {
        Rational z = a(i, n);
        for (std::size_t f = 0; f < k; ++f)
            z -= a(i, free_cols[f]) * y[f];
        out.witness[pivot_col[i]] = z;
    }
    return out;
}

Feasibility feasible_simplex(const RatMatrix& a_in, std::span<const Rational> b_in)
{
    check_shapes(a_in, b_in);
    const std::size_t m = a_in.rows();
    const std::size_t n = a_in.cols();
    // Tableau columns: n originals, m artificials, rhs.
    const std::size_t width = n + m + 1;
    RatMatrix t(m + 1, width);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool flip = b_in[i] < 0;
        for (std::size_t j = 0; j < n; ++j)
            t(i, j) = flip ? Rational(-a_in(i, j)) : a_in(i, j);
        t(i, n + i) = 1;
        t(i, n + m) = flip ? Rational(-b_in[i]) : b_in[i];
        basis[i] = n + i;
    }
    // Objective row: minimize sum of artificials, expressed in nonbasics.
    for (std::size_t j = 0; j < width; ++j) {
        if (j >= n && j < n + m)
            continue;
        Rational s = 0;
        for (std::size_t i = 0; i < m; ++i)
            s += t(i, j);
        t(m, j) = -s;
    }

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (t(m, j) < 0) {
                enter = j;
                break;
            }
        if (enter == width)
            break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t(i, enter) <= 0)
                continue;
            Rational ratio = t(i, width - 1) / t(i, enter);
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m)
            break; // unbounded cannot happen for phase one
        Rational inv = 1 / t(leave, enter);
        for (std::size_t j = 0; j < width; ++j)
            t(leave, j) *= inv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t(i, enter) == 0)
                continue;
            Rational f = t(i, enter);
            for (std::size_t j = 0; j < width; ++j)
                t(i, j) -= f * t(leave, j);
        }
        basis[leave] = enter;
    }

    if (t(m, width - 1) != 0)
        return Feasibility{};
    Feasibility out{true, std::vector<Rational>(n)};
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n)
            out.witness[basis[i]] = t(i, width - 1);
    return out;
}

Feasibility feasible(const RatMatrix& a, std::span<const Rational> b)
{
    if (a.cols() <= fourier_motzkin_variable_cap) {
        if (auto fm = feasible_fourier_motzkin(a, b))
            return *std::move(fm);
    }
    return feasible_simplex(a, b);
}

} // namespace toroidal
