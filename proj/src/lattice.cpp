#include "toroidal/lattice.hpp"

#include <utility>

namespace toroidal {

namespace {

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2)
{
    if (r1 == r2)
        return;
    for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a(r1, j), a(r2, j));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2)
{
    if (c1 == c2)
        return;
    for (std::size_t i = 0; i < a.rows(); ++i)
        std::swap(a(i, c1), a(i, c2));
}

// Moves the entry of least nonzero absolute value in the trailing block to
// (t, t). Returns false if the block is zero.
bool place_min_pivot(IntMatrix& a, std::size_t t)
{
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j)
            if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(bi, bj)))) {
                bi = i;
                bj = j;
                found = true;
            }
    if (!found)
        return false;
    swap_rows(a, t, bi);
    swap_cols(a, t, bj);
    return true;
}

} // namespace

std::vector<Integer> smith_invariants(const IntMatrix& m)
{
    IntMatrix a = m;
    std::vector<Integer> out;
    const std::size_t limit = std::min(a.rows(), a.cols());
    Integer q;
    for (std::size_t t = 0; t < limit; ++t) {
        if (!place_min_pivot(a, t))
            break;
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t j = t; j < a.cols(); ++j)
                    a(i, j) -= q * a(t, j);
                dirty = dirty || a(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t i = t; i < a.rows(); ++i)
                    a(i, j) -= q * a(i, t);
                dirty = dirty || a(t, j) != 0;
            }
            if (dirty) {
                place_min_pivot(a, t);
                continue;
            }
            // Pivot row and column are clear; enforce divisibility of the rest.
            bool divides = true;
            for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < a.cols(); ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        for (std::size_t k = t; k < a.cols(); ++k)
                            a(t, k) += a(i, k);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        out.push_back(abs(a(t, t)));
    }
    return out;
}

std::optional<std::size_t> psd_rank(const RatMatrix& m)
{
    if (!m.is_symmetric())
        return std::nullopt;
    RatMatrix a = m;
    const std::size_t n = a.rows();
    std::vector<bool> active(n, true);
    std::size_t rank = 0;
    for (;;) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i])
                continue;
            if (a(i, i) < 0)
                return std::nullopt;
            if (a(i, i) > 0 && pivot == n)
                pivot = i;
        }
        if (pivot == n) {
            // Zero diagonal: a PSD remainder must vanish identically.
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (active[i] && active[j] && a(i, j) != 0)
                        return std::nullopt;
            return rank;
        }
        active[pivot] = false;
        ++rank;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || a(i, pivot) == 0)
                continue;
            Rational f = a(i, pivot) / a(pivot, pivot);
            for (std::size_t j = 0; j < n; ++j)
                if (active[j])
                    a(i, j) -= f * a(pivot, j);
        }
    }
}

} // namespace toroidal
