#include "toroidal/cone.hpp"

#include "toroidal/errors.hpp"
#include "toroidal/feasibility.hpp"
#include "toroidal/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace toroidal {

SymIntMat::SymIntMat(IntMatrix entries) : m_(std::move(entries))
{
    if (m_.rows() == 0)
        throw DimensionError("symmetric matrix must be at least 1x1");
    if (!m_.is_square())
        throw DimensionError("symmetric matrix must be square");
    if (!m_.is_symmetric())
        throw DomainError("matrix is not symmetric: " + to_string());
}

bool SymIntMat::is_zero() const
{
    return std::all_of(m_.data().begin(), m_.data().end(), [](const Integer& x) { return x == 0; });
}

Integer SymIntMat::content() const
{
    Integer c = 0;
    for (const auto& x : m_.data())
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    return c;
}

SymIntMat SymIntMat::primitive() const
{
    Integer c = content();
    if (c == 0)
        return *this;
    IntMatrix out = m_;
    for (std::size_t i = 0; i < g(); ++i)
        for (std::size_t j = 0; j < g(); ++j)
            mpz_divexact(out(i, j).get_mpz_t(), m_(i, j).get_mpz_t(), c.get_mpz_t());
    return SymIntMat(std::move(out));
}

SymIntMat SymIntMat::scaled(const Integer& factor) const
{
    IntMatrix out = m_;
    for (std::size_t i = 0; i < g(); ++i)
        for (std::size_t j = 0; j < g(); ++j)
            out(i, j) *= factor;
    return SymIntMat(std::move(out));
}

std::string SymIntMat::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m_.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m_.cols(); ++j)
            os << (j ? "," : "") << m_(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

bool same_ray(const SymIntMat& a, const SymIntMat& b)
{
    return a.g() == b.g() && !a.is_zero() && !b.is_zero() && a.primitive() == b.primitive();
}

std::vector<SymIntMat> delta_basis(std::size_t g)
{
    if (g == 0)
        throw DimensionError("genus must be positive");
    std::vector<SymIntMat> out;
    out.reserve(sym_dim(g));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i; j < g; ++j) {
            IntMatrix e(g, g);
            e(i, j) = 1;
            e(j, i) = 1;
            out.emplace_back(std::move(e));
        }
    return out;
}

std::vector<Integer> coords_in_lattice(const SymIntMat& m, const Integer& scale)
{
    if (scale <= 0)
        throw DomainError("lattice scale must be positive");
    std::vector<Integer> out;
    out.reserve(sym_dim(m.g()));
    for (std::size_t i = 0; i < m.g(); ++i)
        for (std::size_t j = i; j < m.g(); ++j) {
            if (!mpz_divisible_p(m(i, j).get_mpz_t(), scale.get_mpz_t()))
                throw NotInLatticeError("matrix " + m.to_string() + " is not in " + scale.get_str() +
                                        "*Sym_g(Z)");
            Integer c;
            mpz_divexact(c.get_mpz_t(), m(i, j).get_mpz_t(), scale.get_mpz_t());
            out.push_back(std::move(c));
        }
    return out;
}

GroupElement::GroupElement(IntMatrix gamma) : gamma_(std::move(gamma))
{
    if (!gamma_.is_square() || gamma_.rows() == 0)
        throw DimensionError("group element must be a nonempty square matrix");
    if (abs(determinant(gamma_)) != 1)
        throw DomainError("group element is not unimodular (|det| != 1)");
}

SymIntMat GroupElement::act(const SymIntMat& a) const
{
    if (a.g() != g())
        throw DimensionError("group element and matrix sizes differ");
    return SymIntMat(gamma_ * a.matrix() * gamma_.transpose());
}

MarkedCone::MarkedCone(std::size_t g, Integer scale, std::vector<SymIntMat> generators,
                       std::vector<std::string> labels, ConeValidation validation)
    : g_(g), scale_(std::move(scale)), generators_(std::move(generators)), labels_(std::move(labels))
{
    if (g_ == 0)
        throw DimensionError("genus must be positive");
    if (scale_ <= 0)
        throw DomainError("lattice scale must be positive");
    if (generators_.empty())
        throw DomainError("cone needs at least one generator");
    if (generators_.size() > sym_dim(g_))
        throw DimensionError("cone has " + std::to_string(generators_.size()) + " generators, at most " +
                             std::to_string(sym_dim(g_)) + " allowed");
    if (!labels_.empty() && labels_.size() != generators_.size())
        throw DimensionError("label count differs from generator count");
    if (labels_.empty())
        for (std::size_t k = 0; k < generators_.size(); ++k)
            labels_.push_back("e" + std::to_string(k));
    for (std::size_t k = 0; k < generators_.size(); ++k) {
        const auto& a = generators_[k];
        if (a.g() != g_)
            throw DimensionError("generator " + labels_[k] + " is not " + std::to_string(g_) + "x" +
                                 std::to_string(g_));
        if (a.is_zero())
            throw DomainError("generator " + labels_[k] + " is zero");
        coords_in_lattice(a, scale_);
        if (validation == ConeValidation::full && !psd_rank(a.to_rational()))
            throw DomainError("generator " + labels_[k] + " is not positive semidefinite");
        for (std::size_t j = 0; j < k; ++j)
            if (a.primitive() == generators_[j].primitive() || a.primitive() == generators_[j].primitive().negated())
                throw DomainError("generators " + labels_[j] + " and " + labels_[k] + " are proportional");
    }
}

IntMatrix MarkedCone::coordinate_matrix() const
{
    IntMatrix m(generators_.size(), dim());
    for (std::size_t r = 0; r < generators_.size(); ++r) {
        auto c = coords_in_lattice(generators_[r], scale_);
        for (std::size_t k = 0; k < c.size(); ++k)
            m(r, k) = std::move(c[k]);
    }
    return m;
}

std::vector<RatMatrix> MarkedCone::normalized_pencil() const
{
    std::vector<RatMatrix> out;
    out.reserve(generators_.size());
    for (const auto& a : generators_) {
        RatMatrix m = a.to_rational();
        for (std::size_t i = 0; i < g_; ++i)
            for (std::size_t j = 0; j < g_; ++j)
                m(i, j) /= scale_;
        out.push_back(std::move(m));
    }
    return out;
}

MarkedCone MarkedCone::permuted(std::span<const std::size_t> perm) const
{
    if (perm.size() != generators_.size())
        throw DimensionError("permutation length differs from generator count");
    std::vector<bool> seen(perm.size(), false);
    std::vector<SymIntMat> gens;
    std::vector<std::string> labels;
    for (auto p : perm) {
        if (p >= perm.size() || seen[p])
            throw DomainError("not a permutation");
        seen[p] = true;
        gens.push_back(generators_[p]);
        labels.push_back(labels_[p]);
    }
    return MarkedCone(g_, scale_, std::move(gens), std::move(labels), ConeValidation::structural);
}

std::optional<std::size_t> MarkedCone::find_ray(const SymIntMat& m) const
{
    for (std::size_t k = 0; k < generators_.size(); ++k)
        if (same_ray(generators_[k], m))
            return k;
    return std::nullopt;
}

Integer lattice_volume(const MarkedCone& c)
{
    if (!c.is_top_dimensional())
        throw DimensionError("lattice volume needs " + std::to_string(c.dim()) + " generators, cone has " +
                             std::to_string(c.size()));
    Integer v = abs(determinant(c.coordinate_matrix()));
    if (v == 0)
        throw DegenerateError("degenerate cone: generators are linearly dependent");
    return v;
}

bool is_simplicial(const MarkedCone& c)
{
    return rank(to_rational(c.coordinate_matrix())) == c.size();
}

bool is_regular(const MarkedCone& c)
{
    auto inv = smith_invariants(c.coordinate_matrix());
    if (inv.size() != c.size())
        throw DegenerateError("cone is not simplicial: generators are linearly dependent");
    return std::all_of(inv.begin(), inv.end(), [](const Integer& d) { return d == 1; });
}

EdgeClass edge_class(const SymIntMat& m)
{
    if (m.is_zero())
        throw DomainError("edge generator is zero");
    auto r = psd_rank(m.to_rational());
    if (!r)
        return EdgeClass{EdgeKind::invalid, rank(m.to_rational()), false};
    if (*r == m.g())
        return EdgeClass{EdgeKind::interior, *r, false};
    return EdgeClass{EdgeKind::boundary, *r, *r > 1};
}

std::string to_string(EdgeKind kind)
{
    switch (kind) {
    case EdgeKind::interior:
        return "interior";
    case EdgeKind::boundary:
        return "boundary";
    case EdgeKind::invalid:
        return "invalid";
    }
    return "invalid";
}

MarkedCone gl_act(const GroupElement& gamma, const MarkedCone& c)
{
    if (gamma.g() != c.g())
        throw DimensionError("group element is " + std::to_string(gamma.g()) + "x" + std::to_string(gamma.g()) +
                             " but the cone has g = " + std::to_string(c.g()));
    std::vector<SymIntMat> gens;
    gens.reserve(c.size());
    for (const auto& a : c.generators())
        gens.push_back(gamma.act(a));
    return MarkedCone(c.g(), c.scale(), std::move(gens), c.labels(), ConeValidation::structural);
}

namespace {

std::vector<Rational> upper_coords(const SymIntMat& m)
{
    std::vector<Rational> out;
    for (std::size_t i = 0; i < m.g(); ++i)
        for (std::size_t j = i; j < m.g(); ++j)
            out.emplace_back(m(i, j));
    return out;
}

// Solves sum lambda_i a_i = sum mu_j b_j with lambda, mu >= 0 and
// sum_i wa_i lambda_i + sum_j wb_j mu_j = 1.
Feasibility common_point(std::span<const SymIntMat> a, std::span<const SymIntMat> b, const std::vector<bool>& wa,
                         const std::vector<bool>& wb)
{
    const std::size_t g = a.front().g();
    const std::size_t n = sym_dim(g);
    RatMatrix sys(n + 1, a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto c = upper_coords(a[i]);
        for (std::size_t k = 0; k < n; ++k)
            sys(k, i) = c[k];
        sys(n, i) = wa[i] ? 1 : 0;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        auto c = upper_coords(b[j]);
        for (std::size_t k = 0; k < n; ++k)
            sys(k, a.size() + j) = -c[k];
        sys(n, a.size() + j) = wb[j] ? 1 : 0;
    }
    std::vector<Rational> rhs(n + 1);
    rhs[n] = 1;
    return feasible(sys, rhs);
}

} // namespace

bool cones_meet_nontrivially(std::span<const SymIntMat> a, std::span<const SymIntMat> b)
{
    if (a.empty() || b.empty())
        return false;
    if (a.front().g() != b.front().g())
        throw DimensionError("cones live in different Sym_g");
    return common_point(a, b, std::vector<bool>(a.size(), true), std::vector<bool>(b.size(), false)).feasible;
}

bool cones_meet_nontrivially(const MarkedCone& a, const MarkedCone& b)
{
    return cones_meet_nontrivially(std::span<const SymIntMat>(a.generators()), std::span<const SymIntMat>(b.generators()));
}

Fan::Fan(std::vector<MarkedCone> cones) : cones_(std::move(cones))
{
    if (cones_.empty())
        throw DomainError("fan needs at least one cone");
    g_ = cones_.front().g();
    scale_ = cones_.front().scale();
    for (const auto& c : cones_) {
        if (c.g() != g_ || c.scale() != scale_)
            throw DomainError("fan cones must share g and scale");
        if (!is_simplicial(c))
            throw DegenerateError("fan cone is not simplicial");
    }
}

std::vector<SymIntMat> Fan::rays() const
{
    std::vector<SymIntMat> out;
    for (const auto& c : cones_)
        for (const auto& a : c.generators()) {
            SymIntMat p = a.primitive();
            if (std::find(out.begin(), out.end(), p) == out.end())
                out.push_back(std::move(p));
        }
    return out;
}

bool Fan::is_regular() const
{
    return std::all_of(cones_.begin(), cones_.end(), [](const MarkedCone& c) { return toroidal::is_regular(c); });
}

namespace {

std::optional<FanViolation> check_pair(const MarkedCone& a, const MarkedCone& b, std::size_t i, std::size_t j)
{
    std::vector<bool> wa(a.size()), wb(b.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        wa[k] = !b.find_ray(a.generators()[k]).has_value();
    for (std::size_t k = 0; k < b.size(); ++k)
        wb[k] = !a.find_ray(b.generators()[k]).has_value();
    auto res = common_point(a.generators(), b.generators(), wa, wb);
    if (!res.feasible)
        return std::nullopt;
    RatMatrix point(a.g(), a.g());
    for (std::size_t k = 0; k < a.size(); ++k) {
        RatMatrix m = a.generators()[k].to_rational();
        for (std::size_t r = 0; r < a.g(); ++r)
            for (std::size_t s = 0; s < a.g(); ++s)
                point(r, s) += res.witness[k] * m(r, s);
    }
    return FanViolation{i, j, std::move(point)};
}

} // namespace

FanReport is_fan(std::span<const MarkedCone> cones, std::size_t threads)
{
    if (cones.empty())
        return {};
    for (const auto& c : cones) {
        if (c.g() != cones.front().g() || c.scale() != cones.front().scale())
            throw DomainError("fan cones must share g and scale");
        if (!is_simplicial(c))
            throw DegenerateError("fan cone is not simplicial");
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = i + 1; j < cones.size(); ++j)
            pairs.emplace_back(i, j);
    std::vector<std::optional<FanViolation>> results(pairs.size());
    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t p = begin; p < pairs.size(); p += step) {
            auto [i, j] = pairs[p];
            results[p] = check_pair(cones[i], cones[j], i, j);
        }
    };
    threads = std::max<std::size_t>(1, std::min(threads, pairs.size()));
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(work, t, threads);
    }
    FanReport report;
    for (auto& r : results)
        if (r) {
            report.is_fan = false;
            report.violations.push_back(*std::move(r));
        }
    return report;
}

SeparabilityReport is_separable(std::span<const MarkedCone> cones, std::span<const GroupElement> group)
{
    SeparabilityReport report;
    for (std::size_t c = 0; c < cones.size(); ++c) {
        const auto& sigma = cones[c];
        for (std::size_t e = 0; e < group.size(); ++e) {
            MarkedCone image = gl_act(group[e], sigma);
            if (!cones_meet_nontrivially(image, sigma))
                continue;
            bool fixes_pointwise = image.generators() == sigma.generators();
            if (!fixes_pointwise) {
                report.separable = false;
                report.violations.push_back({c, e});
            }
        }
    }
    return report;
}

Integer component_count(const Integer& index, const Integer& interior_orbits)
{
    if (index <= 0)
        throw DomainError("group index must be positive");
    if (interior_orbits < 0)
        throw DomainError("orbit count must be nonnegative");
    return index * (1 + interior_orbits);
}

} // namespace toroidal
