#ifndef TOROIDAL_POLY_MATRIX_HPP
#define TOROIDAL_POLY_MATRIX_HPP

#include "toroidal/matrix.hpp"
#include "toroidal/multi_poly.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace toroidal {

// Dense matrix of polynomials sharing one variable count.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);
    PolyMatrix(std::size_t rows, std::size_t cols, std::vector<MultiPoly> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }
    bool is_square() const { return rows_ == cols_; }

    const MultiPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, MultiPoly p);

    bool is_symmetric() const;
    // Matrix with the listed rows and columns removed.
    PolyMatrix delete_rows_cols(std::span<const std::size_t> drop) const;
    RatMatrix eval(std::span<const Rational> point) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t nvars_;
    std::vector<MultiPoly> entries_;
};

// Laplace expansion along the first row.
MultiPoly det_cofactor(const PolyMatrix& m);
// Fraction-free (Bareiss) elimination over Q[x]; every division is exact.
MultiPoly det_bareiss(const PolyMatrix& m);
// Cofactor expansion up to size 4, Bareiss beyond.
MultiPoly polymat_det(const PolyMatrix& m);

// det(sum_i x_i mats[i]) as a polynomial in mats.size() variables.
MultiPoly pencil_det(std::span<const RatMatrix> mats);

} // namespace toroidal

#endif
