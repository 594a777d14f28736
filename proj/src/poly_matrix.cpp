#include "toroidal/poly_matrix.hpp"

#include "toroidal/errors.hpp"

#include <algorithm>
#include <utility>

namespace toroidal {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), entries_(rows * cols, MultiPoly(nvars))
{
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<MultiPoly> entries)
    : rows_(rows), cols_(cols), nvars_(entries.empty() ? 1 : entries.front().nvars()), entries_(std::move(entries))
{
    if (entries_.size() != rows_ * cols_)
        throw DimensionError("entry count does not match rows*cols");
    for (const auto& e : entries_)
        if (e.nvars() != nvars_)
            throw DimensionError("matrix entries have different variable counts");
}

void PolyMatrix::set(std::size_t i, std::size_t j, MultiPoly p)
{
    if (p.nvars() != nvars_)
        throw DimensionError("entry variable count differs from matrix");
    entries_[i * cols_ + j] = std::move(p);
}

bool PolyMatrix::is_symmetric() const
{
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (!((*this)(i, j) == (*this)(j, i)))
                return false;
    return true;
}

PolyMatrix PolyMatrix::delete_rows_cols(std::span<const std::size_t> drop) const
{
    auto dropped = [&](std::size_t k) { return std::find(drop.begin(), drop.end(), k) != drop.end(); };
    std::vector<std::size_t> keep_r, keep_c;
    for (std::size_t i = 0; i < rows_; ++i)
        if (!dropped(i))
            keep_r.push_back(i);
    for (std::size_t j = 0; j < cols_; ++j)
        if (!dropped(j))
            keep_c.push_back(j);
    PolyMatrix out(keep_r.size(), keep_c.size(), nvars_);
    for (std::size_t i = 0; i < keep_r.size(); ++i)
        for (std::size_t j = 0; j < keep_c.size(); ++j)
            out.entries_[i * out.cols_ + j] = (*this)(keep_r[i], keep_c[j]);
    return out;
}

RatMatrix PolyMatrix::eval(std::span<const Rational> point) const
{
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(i, j) = (*this)(i, j).eval(point);
    return out;
}

namespace {

void require_square(const PolyMatrix& m)
{
    if (!m.is_square())
        throw DimensionError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " matrix");
}

MultiPoly cofactor_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row)
{
    const std::size_t n = cols.size();
    if (n == 1)
        return m(row, cols[0]);
    if (n == 2)
        return m(row, cols[0]) * m(row + 1, cols[1]) - m(row, cols[1]) * m(row + 1, cols[0]);
    MultiPoly sum(m.nvars());
    for (std::size_t k = 0; k < n; ++k) {
        const MultiPoly& a = m(row, cols[k]);
        if (a.is_zero())
            continue;
        std::size_t c = cols[k];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
        MultiPoly minor = cofactor_rec(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
        if (k % 2 == 0)
            sum += a * minor;
        else
            sum -= a * minor;
    }
    return sum;
}

} // namespace

MultiPoly det_cofactor(const PolyMatrix& m)
{
    require_square(m);
    if (m.rows() == 0)
        return MultiPoly::constant(m.nvars(), Rational(1));
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t j = 0; j < cols.size(); ++j)
        cols[j] = j;
    return cofactor_rec(m, cols, 0);
}

MultiPoly det_bareiss(const PolyMatrix& m)
{
    require_square(m);
    const std::size_t n = m.rows();
    const std::size_t nv = m.nvars();
    if (n == 0)
        return MultiPoly::constant(nv, Rational(1));
    std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(n, MultiPoly(nv)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m(i, j);

    bool negate = false;
    MultiPoly prev = MultiPoly::constant(nv, Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero())
                ++swap_row;
            if (swap_row == n)
                return MultiPoly(nv);
            std::swap(a[k], a[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] = divide_exact(num, prev);
            }
        }
        prev = a[k][k];
    }
    MultiPoly det = a[n - 1][n - 1];
    return negate ? -det : det;
}

MultiPoly polymat_det(const PolyMatrix& m)
{
    require_square(m);
    if (m.rows() <= 4)
        return det_cofactor(m);
    return det_bareiss(m);
}

MultiPoly pencil_det(std::span<const RatMatrix> mats)
{
    if (mats.empty())
        throw DimensionError("pencil needs at least one matrix");
    const std::size_t g = mats.front().rows();
    const std::size_t nv = mats.size();
    for (const auto& a : mats) {
        if (a.rows() != g || a.cols() != g)
            throw DimensionError("pencil matrices must all be " + std::to_string(g) + "x" + std::to_string(g));
        if (!a.is_symmetric())
            throw DomainError("pencil matrices must be symmetric");
    }
    PolyMatrix lin(g, g, nv);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            std::vector<Term> terms;
            for (std::size_t v = 0; v < nv; ++v) {
                if (mats[v](i, j) == 0)
                    continue;
                Exponent e(nv, 0);
                e[v] = 1;
                terms.push_back(Term{std::move(e), mats[v](i, j)});
            }
            lin.set(i, j, MultiPoly::from_terms(nv, std::move(terms)));
        }
    return polymat_det(lin);
}

} // namespace toroidal
