#include "toroidal/period_domain.hpp"

#include "toroidal/errors.hpp"

#include <cmath>
#include <string>

namespace toroidal {

namespace {

void require_finite(const ComplexMat& m, const char* what)
{
    if (!m.allFinite())
        throw DomainError(std::string(what) + " has non-finite entries");
}

void require_square(const ComplexMat& m, const char* what)
{
    if (m.rows() != m.cols() || m.rows() == 0)
        throw DimensionError(std::string(what) + " must be a nonempty square matrix");
}

double min_symmetric_eigenvalue(const RealMat& m)
{
    RealMat sym = (m + m.transpose()) / 2.0;
    Eigen::SelfAdjointEigenSolver<RealMat> es(sym, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double min_hermitian_eigenvalue(const ComplexMat& m)
{
    ComplexMat herm = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMat> es(herm, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

const std::complex<double> I{0.0, 1.0};

} // namespace

RealMat symplectic_form(Eigen::Index g)
{
    RealMat psi = RealMat::Zero(2 * g, 2 * g);
    psi.topRightCorner(g, g) = -RealMat::Identity(g, g);
    psi.bottomLeftCorner(g, g) = RealMat::Identity(g, g);
    return psi;
}

bool siegel_membership(const ComplexMat& tau, double tol)
{
    require_square(tau, "tau");
    require_finite(tau, "tau");
    if ((tau - tau.transpose()).cwiseAbs().maxCoeff() > tol)
        return false;
    return min_symmetric_eigenvalue(tau.imag()) > tol;
}

ComplexMat filtration_from_tau(const ComplexMat& tau, double tol)
{
    if (!siegel_membership(tau, tol))
        throw DomainError("tau is not a point of the Siegel space");
    const Eigen::Index g = tau.rows();
    ComplexMat F(2 * g, g);
    F.topRows(g) = tau;
    F.bottomRows(g) = ComplexMat::Identity(g, g);
    return F;
}

ComplexMat hodge_hermitian_form(const ComplexMat& F)
{
    const Eigen::Index g = F.rows() / 2;
    ComplexMat psi = symplectic_form(g).cast<std::complex<double>>();
    return I * (F.transpose() * psi * F.conjugate());
}

bool riemann_check(const ComplexMat& F, double tol)
{
    require_finite(F, "filtration basis");
    if (F.rows() % 2 != 0 || F.cols() * 2 != F.rows())
        throw DimensionError("filtration basis must be 2g x g");
    const Eigen::Index g = F.cols();
    Eigen::JacobiSVD<ComplexMat> svd(F);
    if (svd.singularValues()(g - 1) <= tol)
        throw DegenerateError("filtration basis is rank deficient");
    ComplexMat psi = symplectic_form(g).cast<std::complex<double>>();
    if ((F.transpose() * psi * F).cwiseAbs().maxCoeff() > tol)
        return false;
    return min_hermitian_eigenvalue(hodge_hermitian_form(F)) > tol;
}

CuspNilpotent::CuspNilpotent(Eigen::Index g, Eigen::Index k, RealMat u) : g_(g), k_(k), u_(std::move(u))
{
    if (g < 1 || k < 0 || k >= g)
        throw DomainError("cusp parameters need 0 <= k < g");
    if (u_.rows() != g - k || u_.cols() != g - k)
        throw DimensionError("u must be (g-k) x (g-k)");
    if (!u_.allFinite())
        throw DomainError("u has non-finite entries");
    n_ = RealMat::Zero(2 * g, 2 * g);
    n_.block(k, g + k, g - k, g - k) = u_;
}

CuspNilpotent CuspNilpotent::from_matrix(Eigen::Index g, Eigen::Index k, const RealMat& n, double tol)
{
    if (n.rows() != 2 * g || n.cols() != 2 * g)
        throw DimensionError("nilpotent must be 2g x 2g");
    if (k < 0 || k >= g)
        throw DomainError("cusp parameters need 0 <= k < g");
    RealMat rest = n;
    rest.block(k, g + k, g - k, g - k).setZero();
    if (rest.cwiseAbs().maxCoeff() > tol)
        throw DomainError("nilpotent is nonzero outside its designated block");
    return CuspNilpotent(g, k, n.block(k, g + k, g - k, g - k));
}

bool positive_cone_membership(const CuspNilpotent& n, double tol)
{
    const RealMat& u = n.u();
    if ((u - u.transpose()).cwiseAbs().maxCoeff() > tol)
        return false;
    return min_symmetric_eigenvalue(u) > tol;
}

WeightFiltration weight_filtration(const CuspNilpotent& n, double tol)
{
    const RealMat& N = n.matrix();
    if ((N * N).cwiseAbs().maxCoeff() > tol)
        throw DomainError("N^2 != 0");
    if (N.cwiseAbs().maxCoeff() <= tol)
        throw DomainError("nilpotent is zero");
    Eigen::JacobiSVD<RealMat> svd(N, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    Eigen::Index r = 0;
    while (r < s.size() && s(r) > tol)
        ++r;
    WeightFiltration w;
    w.dim_image = r;
    w.dim_kernel = N.cols() - r;
    w.image_basis = svd.matrixU().leftCols(r);
    w.kernel_basis = svd.matrixV().rightCols(N.cols() - r);
    // Im N lies in Ker N iff N annihilates the image basis.
    w.image_in_kernel = r == 0 || (N * w.image_basis).cwiseAbs().maxCoeff() <= tol;
    return w;
}

ComplexMat exp_i_nilpotent(const CuspNilpotent& n)
{
    const Eigen::Index m = n.matrix().rows();
    return ComplexMat::Identity(m, m) + I * n.matrix().cast<std::complex<double>>();
}

ComplexMat dual_filtration(Eigen::Index g, const ComplexMat& tau_boundary)
{
    const Eigen::Index k = tau_boundary.rows();
    if (tau_boundary.cols() != k || k >= g)
        throw DimensionError("boundary point must be k x k with k < g");
    ComplexMat F = ComplexMat::Zero(2 * g, g);
    if (k > 0) {
        F.block(0, 0, k, k) = tau_boundary;
        F.block(g, 0, k, k) = ComplexMat::Identity(k, k);
    }
    for (Eigen::Index j = 0; j < g - k; ++j)
        F(g + k + j, k + j) = 1.0;
    return F;
}

bool nilpotent_orbit_check(const ComplexMat& Fdual, const CuspNilpotent& n, double tol)
{
    if (!positive_cone_membership(n, tol))
        throw PreconditionError("nilpotent is not in the positive cone");
    if (Fdual.rows() != 2 * n.g() || Fdual.cols() != n.g())
        throw DimensionError("dual filtration basis must be 2g x g");
    return riemann_check(exp_i_nilpotent(n) * Fdual, tol);
}

ComplexMat assemble_block_tau(const ComplexMat& tau_prime, const ComplexMat& Z, const ComplexMat& S)
{
    require_square(tau_prime, "tau'");
    require_square(Z, "Z");
    const Eigen::Index a = tau_prime.rows();
    const Eigen::Index b = Z.rows();
    if (S.rows() != a || S.cols() != b)
        throw DimensionError("S must be (g-k) x k");
    ComplexMat A = S.real().cast<std::complex<double>>();
    ComplexMat B = S.imag().cast<std::complex<double>>();
    ComplexMat off = A - tau_prime * B;
    ComplexMat tau(a + b, a + b);
    tau.topLeftCorner(a, a) = tau_prime;
    tau.topRightCorner(a, b) = off;
    tau.bottomLeftCorner(b, a) = off.transpose();
    tau.bottomRightCorner(b, b) = Z + B.transpose() * tau_prime * B - (A.transpose() * B + B.transpose() * A) / 2.0;
    return tau;
}

bool block_volume_identity(const ComplexMat& tau_prime, const ComplexMat& Z, const ComplexMat& S, double tol)
{
    if (!siegel_membership(tau_prime, tol))
        throw DomainError("tau' is not a Siegel point");
    if (!siegel_membership(Z, tol))
        throw DomainError("Z is not a Siegel point");
    require_finite(S, "S");
    ComplexMat tau = assemble_block_tau(tau_prime, Z, S);
    if (!siegel_membership(tau, tol))
        return false;
    double lhs = tau.imag().determinant();
    double rhs = tau_prime.imag().determinant() * Z.imag().determinant();
    return std::abs(lhs - rhs) <= tol * (1.0 + std::abs(lhs));
}

ComplexMat symplectic_act(const RealMat& M, const ComplexMat& tau)
{
    const Eigen::Index g = tau.rows();
    if (M.rows() != 2 * g || M.cols() != 2 * g)
        throw DimensionError("symplectic matrix must be 2g x 2g");
    ComplexMat Mc = M.cast<std::complex<double>>();
    ComplexMat num = Mc.topLeftCorner(g, g) * tau + Mc.topRightCorner(g, g);
    ComplexMat den = Mc.bottomLeftCorner(g, g) * tau + Mc.bottomRightCorner(g, g);
    // X = num den^{-1}  <=>  den^T X^T = num^T.
    return den.transpose().partialPivLu().solve(num.transpose()).transpose();
}

ComplexMat random_siegel_point(Eigen::Index g, std::mt19937_64& rng, double eps)
{
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    RealMat X(g, g), Q(g, g);
    for (Eigen::Index i = 0; i < g; ++i)
        for (Eigen::Index j = 0; j < g; ++j) {
            X(i, j) = unit(rng);
            Q(i, j) = unit(rng);
        }
    RealMat re = (X + X.transpose()) / 2.0;
    RealMat im = Q * Q.transpose() + eps * RealMat::Identity(g, g);
    ComplexMat tau(g, g);
    tau.real() = re;
    tau.imag() = im;
    return tau;
}

ComplexMat random_conditioned_siegel_point(Eigen::Index g, std::mt19937_64& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> spectrum(lo, hi);
    RealMat X(g, g), R(g, g);
    for (Eigen::Index i = 0; i < g; ++i)
        for (Eigen::Index j = 0; j < g; ++j) {
            X(i, j) = unit(rng);
            R(i, j) = unit(rng);
        }
    RealMat O = Eigen::HouseholderQR<RealMat>(R).householderQ();
    Eigen::VectorXd lambda(g);
    for (Eigen::Index i = 0; i < g; ++i)
        lambda(i) = spectrum(rng);
    RealMat im = O * lambda.asDiagonal() * O.transpose();
    ComplexMat tau(g, g);
    tau.real() = (X + X.transpose()) / 2.0;
    tau.imag() = (im + im.transpose()) / 2.0;
    return tau;
}

} // namespace toroidal
