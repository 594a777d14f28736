#include "toroidal/volume_ke.hpp"

#include "toroidal/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

namespace toroidal {

VolumeFunction volume_function(const MarkedCone& c)
{
    if (!c.is_top_dimensional())
        throw DimensionError("volume function needs " + std::to_string(c.dim()) + " generators, cone has " +
                             std::to_string(c.size()));
    Integer vol = lattice_volume(c);
    auto pencil = c.normalized_pencil();
    MultiPoly F = pencil_det(pencil);
    if (F.is_zero())
        throw DegenerateError("degenerate pencil: volume function vanishes identically");
    return VolumeFunction{c.g(), c.dim(), c, std::move(pencil), std::move(F), std::move(vol)};
}

namespace {

struct Derivatives {
    std::vector<MultiPoly> grad;
    // Upper triangle, row-major: hess[i][j - i].
    std::vector<std::vector<MultiPoly>> hess;
};

Derivatives derivatives(const MultiPoly& F)
{
    const std::size_t n = F.nvars();
    Derivatives d;
    for (std::size_t i = 0; i < n; ++i)
        d.grad.push_back(F.partial(i));
    d.hess.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            d.hess[i].push_back(d.grad[i].partial(j));
    return d;
}

PolyMatrix t_matrix_of(const MultiPoly& F)
{
    const std::size_t n = F.nvars();
    Derivatives d = derivatives(F);
    PolyMatrix t(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            MultiPoly e = F * d.hess[i][j - i] - d.grad[i] * d.grad[j];
            t.set(i, j, e);
            if (i != j)
                t.set(j, i, std::move(e));
        }
    return t;
}

unsigned ma_exponent(std::size_t g)
{
    return static_cast<unsigned>((g + 1) * (g - 1));
}

// Exact value of det T at a point, from F and its derivatives.
Rational det_t_at(const MultiPoly& F, const Derivatives& d, std::span<const Rational> x)
{
    const std::size_t n = F.nvars();
    Rational f = F.eval(x);
    std::vector<Rational> gr(n);
    for (std::size_t i = 0; i < n; ++i)
        gr[i] = d.grad[i].eval(x);
    RatMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            t(i, j) = f * d.hess[i][j - i].eval(x) - gr[i] * gr[j];
            t(j, i) = t(i, j);
        }
    return determinant(t);
}

IntMatrix coordinates(std::span<const SymIntMat> mats)
{
    if (mats.empty())
        throw DimensionError("empty matrix list");
    const std::size_t g = mats.front().g();
    const std::size_t n = sym_dim(g);
    if (mats.size() != n)
        throw DimensionError("genus " + std::to_string(g) + " needs " + std::to_string(n) + " matrices, got " +
                             std::to_string(mats.size()));
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (mats[r].g() != g)
            throw DimensionError("matrices have different sizes");
        auto c = coords_in_lattice(mats[r], Integer(1));
        for (std::size_t k = 0; k < n; ++k)
            m(r, k) = c[k];
    }
    return m;
}

std::vector<RatMatrix> rational_pencil(std::span<const SymIntMat> mats)
{
    std::vector<RatMatrix> out;
    for (const auto& m : mats)
        out.push_back(m.to_rational());
    return out;
}

} // namespace

PolyMatrix t_matrix(const VolumeFunction& v)
{
    return t_matrix_of(v.F);
}

Rational ma_constant(std::size_t g, const Integer& vol)
{
    const std::size_t n = sym_dim(g);
    Rational c = pow(Rational(2), static_cast<unsigned>(g * (g - 1) / 2)) * Rational(vol * vol);
    return n % 2 == 0 ? c : Rational(-c);
}

std::vector<Rational> random_rational_point(std::size_t n, std::uint64_t seed, std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    constexpr std::uint64_t range = 1000000;
    std::vector<Rational> point;
    point.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t num = rng() % range + 1;
        std::uint64_t den = rng() % range + 1;
        Rational q{Integer(std::to_string(num)), Integer(std::to_string(den))};
        q.canonicalize();
        point.push_back(std::move(q));
    }
    return point;
}

MaReport verify_ma_identity(const VolumeFunction& v, MaMode mode, std::size_t trials, std::uint64_t seed,
                            std::size_t threads)
{
    const Rational c = ma_constant(v.g, v.vol);
    const unsigned k = ma_exponent(v.g);
    MaReport report;
    report.mode = mode;
    Derivatives d = derivatives(v.F);

    if (mode == MaMode::symbolic) {
        if (v.n > symbolic_variable_limit)
            throw PreconditionError("symbolic Monge-Ampere check is limited to N <= " +
                                    std::to_string(symbolic_variable_limit) + " variables (N = " +
                                    std::to_string(v.n) + "); use randomized mode");
        MultiPoly lhs = polymat_det(t_matrix(v));
        MultiPoly rhs = c * v.F.pow(k);
        report.holds = lhs == rhs;
        if (!report.holds) {
            // Exhibit a point where the two sides differ.
            for (std::uint64_t i = 0; i < 64; ++i) {
                auto x = random_rational_point(v.n, seed, i);
                Rational l = lhs.eval(x);
                Rational r = rhs.eval(x);
                if (l != r) {
                    report.witnesses.push_back({std::move(x), std::move(l), std::move(r)});
                    break;
                }
            }
        }
        return report;
    }

    if (trials == 0)
        throw PreconditionError("randomized mode needs at least one trial");
    report.seed = seed;
    std::vector<std::optional<MaWitness>> results(trials);
    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t t = begin; t < trials; t += step) {
            auto x = random_rational_point(v.n, seed, t);
            Rational l = det_t_at(v.F, d, x);
            Rational r = c * pow(v.F.eval(x), k);
            if (l != r)
                results[t] = MaWitness{std::move(x), std::move(l), std::move(r)};
        }
    };
    threads = std::max<std::size_t>(1, std::min(threads, trials));
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(work, t, threads);
    }
    for (auto& w : results)
        if (w)
            report.witnesses.push_back(*std::move(w));
    report.holds = report.witnesses.empty();
    return report;
}

MultiPoly ke_defect(std::span<const SymIntMat> mats)
{
    IntMatrix coords = coordinates(mats);
    Integer D = abs(determinant(coords));
    if (D == 0)
        throw DegenerateError("matrices are linearly dependent: not a point of the general linear locus");
    const std::size_t g = mats.front().g();
    MultiPoly F = pencil_det(rational_pencil(mats));
    MultiPoly lhs = polymat_det(t_matrix_of(F));
    return lhs - ma_constant(g, D) * F.pow(ma_exponent(g));
}

bool is_ke_point(std::span<const SymIntMat> mats)
{
    return ke_defect(mats).is_zero();
}

Rational ke_coefficient(std::span<const SymIntMat> mats, const Exponent& index)
{
    if (mats.empty())
        throw DimensionError("empty matrix list");
    const std::size_t g = mats.front().g();
    const std::size_t expected = g * (g * g - 1);
    if (index.size() != mats.size())
        throw DimensionError("multi-index length differs from the number of matrices");
    std::size_t sum = std::accumulate(index.begin(), index.end(), std::size_t{0});
    if (sum != expected)
        throw DomainError("multi-index sums to " + std::to_string(sum) + ", expected g(g^2-1) = " +
                          std::to_string(expected));
    return ke_defect(mats).coefficient(index);
}

bool permutation_check(std::span<const SymIntMat> mats, std::span<const std::size_t> perm, std::size_t trials,
                       std::uint64_t seed)
{
    const std::size_t n = mats.size();
    if (perm.size() != n)
        throw DimensionError("permutation length differs from the number of matrices");
    std::vector<std::size_t> inverse(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || inverse[perm[i]] != n)
            throw DomainError("not a permutation");
        inverse[perm[i]] = i;
    }
    std::vector<SymIntMat> permuted;
    for (std::size_t i = 0; i < n; ++i)
        permuted.push_back(mats[perm[i]]);
    const std::size_t g = mats.front().g();

    auto pencil_value = [g](std::span<const SymIntMat> ms, std::span<const Rational> x) {
        RatMatrix sum(g, g);
        for (std::size_t i = 0; i < ms.size(); ++i)
            for (std::size_t r = 0; r < g; ++r)
                for (std::size_t s = 0; s < g; ++s)
                    sum(r, s) += x[i] * Rational(ms[i](r, s));
        return determinant(sum);
    };
    for (std::size_t t = 0; t < trials; ++t) {
        auto x = random_rational_point(n, seed, t);
        std::vector<Rational> y(n);
        for (std::size_t i = 0; i < n; ++i)
            y[i] = x[inverse[i]];
        if (pencil_value(permuted, x) != pencil_value(mats, y))
            return false;
    }
    return is_ke_point(mats) == is_ke_point(permuted);
}

G2Coefficients g2_closed_form(const IntMatrix& a)
{
    if (a.rows() != 3 || a.cols() != 3)
        throw DimensionError("genus-two closed form needs a 3x3 matrix");
    auto e = [&](std::size_t i, std::size_t j) -> const Integer& { return a(i - 1, j - 1); };
    G2Coefficients c;
    c.A = e(1, 1) * e(1, 3) - e(1, 2) * e(1, 2);
    c.B = e(2, 1) * e(2, 3) - e(2, 2) * e(2, 2);
    c.C = e(3, 1) * e(3, 3) - e(3, 2) * e(3, 2);
    c.L = e(1, 1) * e(2, 3) + e(2, 1) * e(1, 3) - 2 * e(1, 2) * e(2, 2);
    c.M = e(1, 1) * e(3, 3) + e(1, 3) * e(3, 1) - 2 * e(1, 2) * e(3, 2);
    c.N = e(2, 1) * e(3, 3) + e(2, 3) * e(3, 1) - 2 * e(2, 2) * e(3, 2);
    return c;
}

std::vector<SymIntMat> g2_pencil_from_rows(const IntMatrix& a)
{
    if (a.rows() != 3 || a.cols() != 3)
        throw DimensionError("genus-two pencil needs a 3x3 matrix");
    std::vector<SymIntMat> out;
    for (std::size_t i = 0; i < 3; ++i)
        out.emplace_back(IntMatrix{{a(i, 0), a(i, 1)}, {a(i, 1), a(i, 2)}});
    return out;
}

} // namespace toroidal
