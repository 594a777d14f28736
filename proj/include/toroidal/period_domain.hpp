#ifndef TOROIDAL_PERIOD_DOMAIN_HPP
#define TOROIDAL_PERIOD_DOMAIN_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>

namespace toroidal {

using ComplexMat = Eigen::MatrixXcd;
using RealMat = Eigen::MatrixXd;

// psi = [[0, -I_g], [I_g, 0]], so psi(e_i, e_{g+i}) = -1.
RealMat symplectic_form(Eigen::Index g);

// tau symmetric and Im tau positive definite, both to tol.
bool siegel_membership(const ComplexMat& tau, double tol);

// Basis of F^1: the columns of [tau; I_g].
ComplexMat filtration_from_tau(const ComplexMat& tau, double tol = 1e-12);

// Hermitian form H = i F^T psi conj(F); for F from tau this is 2 Im tau.
ComplexMat hodge_hermitian_form(const ComplexMat& F);

// F^T psi F = 0 and H positive definite, both to tol. F must have rank g.
bool riemann_check(const ComplexMat& F, double tol);

// Nilpotent in the positive cone of the cusp attached to V^(k): the only
// nonzero block is u in rows k..g-1, columns g+k..2g-1.
class CuspNilpotent {
public:
    CuspNilpotent(Eigen::Index g, Eigen::Index k, RealMat u);
    // Validates that n has the block shape for (g, k) and extracts u.
    static CuspNilpotent from_matrix(Eigen::Index g, Eigen::Index k, const RealMat& n, double tol);

    Eigen::Index g() const { return g_; }
    Eigen::Index k() const { return k_; }
    const RealMat& u() const { return u_; }
    const RealMat& matrix() const { return n_; }

private:
    Eigen::Index g_;
    Eigen::Index k_;
    RealMat u_;
    RealMat n_;
};

// u symmetric positive definite beyond tol.
bool positive_cone_membership(const CuspNilpotent& n, double tol);

struct WeightFiltration {
    Eigen::Index dim_image;
    Eigen::Index dim_kernel;
    RealMat image_basis;  // orthonormal columns
    RealMat kernel_basis; // orthonormal columns
    bool image_in_kernel;
};

WeightFiltration weight_filtration(const CuspNilpotent& n, double tol);

// exp(iN) = I + iN because N^2 = 0.
ComplexMat exp_i_nilpotent(const CuspNilpotent& n);

// Dual filtration: e_{g+k+1..2g} together with the columns of the boundary
// point tau_boundary (k x k, in H_k) placed on e_1..e_k, e_{g+1}..e_{g+k}.
ComplexMat dual_filtration(Eigen::Index g, const ComplexMat& tau_boundary);

// Runs riemann_check on exp(iN) Fdual.
bool nilpotent_orbit_check(const ComplexMat& Fdual, const CuspNilpotent& n, double tol);

// tau = [[tau', A - tau' B], [(A - tau' B)^T, Z + B^T tau' B - (A^T B + B^T A)/2]]
// for S = A + iB.
ComplexMat assemble_block_tau(const ComplexMat& tau_prime, const ComplexMat& Z, const ComplexMat& S);

// |det Im tau - det Im tau' det Im Z| <= tol (1 + |det Im tau|) and tau in H_g.
bool block_volume_identity(const ComplexMat& tau_prime, const ComplexMat& Z, const ComplexMat& S, double tol);

// (A tau + B)(C tau + D)^{-1} for M = [[A, B], [C, D]].
ComplexMat symplectic_act(const RealMat& M, const ComplexMat& tau);

// X + i(Q Q^T + eps I) with X symmetric and X, Q entries uniform in [-1, 1].
ComplexMat random_siegel_point(Eigen::Index g, std::mt19937_64& rng, double eps = 0.1);

// Random point with Im tau eigenvalues in [lo, hi].
ComplexMat random_conditioned_siegel_point(Eigen::Index g, std::mt19937_64& rng, double lo = 0.5, double hi = 2.0);

} // namespace toroidal

#endif
