#include "toroidal/residue.hpp"

#include "toroidal/errors.hpp"

#include <algorithm>

namespace toroidal {

std::vector<DegreeEntry> degree_profile(const VolumeFunction& v)
{
    std::vector<DegreeEntry> out;
    for (std::size_t i = 0; i < v.n; ++i)
        out.push_back({v.F.degree_in(i), rank(v.pencil[i])});
    return out;
}

DegreeBoundReport t_degree_bounds(const VolumeFunction& v)
{
    DegreeBoundReport report;
    PolyMatrix t = t_matrix(v);
    auto fail = [&](std::string msg) {
        report.holds = false;
        report.violations.push_back(std::move(msg));
    };
    std::optional<MultiPoly> det;
    if (v.n <= symbolic_variable_limit) {
        det = polymat_det(t);
        report.det_checked = true;
    }
    for (std::size_t k = 0; k < v.n; ++k) {
        const int fk = v.F.degree_in(k);
        const std::string var = "x" + std::to_string(k);
        if (int dk = t(k, k).degree_in(k); dk != 2 * fk - 2)
            fail("deg_" + var + " T_kk = " + std::to_string(dk) + ", expected " + std::to_string(2 * fk - 2));
        for (std::size_t i = 0; i < v.n; ++i)
            for (std::size_t j = i; j < v.n; ++j) {
                if (i == k && j == k)
                    continue;
                int bound = (i == k || j == k) ? 2 * fk - 1 : 2 * fk;
                if (int dij = t(i, j).degree_in(k); dij > bound)
                    fail("deg_" + var + " T_" + std::to_string(i) + std::to_string(j) + " = " + std::to_string(dij) +
                         " exceeds " + std::to_string(bound));
            }
        if (det) {
            int bound = 2 * static_cast<int>(v.n) * fk - 2;
            if (int dd = det->degree_in(k); dd > bound)
                fail("deg_" + var + " det T = " + std::to_string(dd) + " exceeds " + std::to_string(bound));
        }
    }
    return report;
}

ResidueChain residue_chain(const VolumeFunction& v, std::size_t d)
{
    if (d < 1 || d + 1 > v.n)
        throw PreconditionError("residue depth d = " + std::to_string(d) + " must lie in [1, N-1] = [1, " +
                                std::to_string(v.n == 0 ? 0 : v.n - 1) + "]");
    ResidueChain rc{d, v.g, v.n, v.vol, {v.F}, {}, MultiPoly(v.n)};
    for (std::size_t k = 1; k <= d; ++k) {
        const MultiPoly& prev = rc.S.back();
        if (prev.is_zero())
            throw DegenerateError("residue chain reached the zero polynomial at step " + std::to_string(k));
        auto lc = leading_coeff(prev, k - 1);
        if (lc.degree == 0)
            throw DegenerateError("degenerate residue: S_" + std::to_string(k - 1) + " does not involve x" +
                                  std::to_string(k - 1));
        rc.leading_degrees.push_back(lc.degree);
        rc.S.push_back(std::move(lc.coeff));
    }
    const MultiPoly& s = rc.S.back();
    std::vector<MultiPoly> grad;
    for (std::size_t l = 0; l < v.n; ++l)
        grad.push_back(s.partial(l));
    // Rows and columns 0..d-1 vanish and are removed.
    const std::size_t m = v.n - d;
    PolyMatrix p(m, m, v.n);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) {
            std::size_t l = a + d, r = b + d;
            MultiPoly e = s * grad[l].partial(r) - grad[l] * grad[r];
            p.set(a, b, e);
            if (a != b)
                p.set(b, a, std::move(e));
        }
    rc.gd = polymat_det(p);
    return rc;
}

bool residue_bounds_hold(const ResidueChain& rc)
{
    for (std::size_t k = 0; k < rc.S.size(); ++k)
        if (rc.S[k].degree() > static_cast<int>(rc.g) - static_cast<int>(k))
            return false;
    if (rc.gd.is_zero())
        return true;
    long bound = 2L * static_cast<long>(rc.n - rc.d) * (static_cast<long>(rc.g) - static_cast<long>(rc.d) - 1);
    return rc.gd.degree() <= bound;
}

ChiDescriptor chi_descriptor(const ResidueChain& rc)
{
    const unsigned m = static_cast<unsigned>(rc.n - rc.d);
    Rational base(Integer(static_cast<unsigned long>(rc.g + 1)), Integer(4));
    base.canonicalize();
    Rational c = pow(base, m);
    for (unsigned i = 2; i <= m; ++i)
        c *= i;
    if (m % 2 == 1)
        c = -c;
    return ChiDescriptor{c, rc.gd, rc.S.back(), 2 * m};
}

std::string to_string(VerdictValue v)
{
    switch (v) {
    case VerdictValue::zero:
        return "zero";
    case VerdictValue::one:
        return "one";
    case VerdictValue::unknown:
        return "unknown";
    }
    return "unknown";
}

std::string to_string(ZeroReason r)
{
    switch (r) {
    case ZeroReason::d_ge_g_minus_1:
        return "d_ge_g_minus_1";
    case ZeroReason::interior_edge:
        return "interior_edge";
    case ZeroReason::genus_two_top:
        return "genus_two_top";
    case ZeroReason::toric_empty:
        return "toric_empty";
    case ZeroReason::toric_common_cone:
        return "toric_common_cone";
    }
    return "";
}

IntersectionVerdict intersection_vanishing(const MarkedCone& c, std::span<const std::size_t> selected)
{
    const std::size_t d = selected.size();
    if (d == 0)
        throw PreconditionError("select at least one edge");
    if (d + 1 > c.dim())
        throw PreconditionError("at most N-1 = " + std::to_string(c.dim() - 1) + " edges may be selected");
    for (std::size_t a = 0; a < d; ++a) {
        if (selected[a] >= c.size())
            throw DomainError("edge index " + std::to_string(selected[a]) + " out of range");
        for (std::size_t b = 0; b < a; ++b)
            if (selected[a] == selected[b])
                throw DomainError("edge index " + std::to_string(selected[a]) + " selected twice");
    }

    IntersectionVerdict verdict;
    const std::size_t g = c.g();
    if (d + 1 >= g) {
        verdict.value = VerdictValue::zero;
        verdict.reason = ZeroReason::d_ge_g_minus_1;
        return verdict;
    }
    for (auto idx : selected)
        if (edge_class(c.generators()[idx]).kind == EdgeKind::interior) {
            verdict.value = VerdictValue::zero;
            verdict.reason = ZeroReason::interior_edge;
            return verdict;
        }
    if (g == 2 && d == 1) {
        verdict.value = VerdictValue::zero;
        verdict.reason = ZeroReason::genus_two_top;
        return verdict;
    }
    // Renumber so the selected edges come first, then attach the integrand.
    if (c.is_top_dimensional()) {
        std::vector<std::size_t> perm(selected.begin(), selected.end());
        for (std::size_t k = 0; k < c.size(); ++k)
            if (std::find(selected.begin(), selected.end(), k) == selected.end())
                perm.push_back(k);
        try {
            auto vf = volume_function(c.permuted(perm));
            verdict.chi = chi_descriptor(residue_chain(vf, d));
        } catch (const DegenerateError&) {
            verdict.chi.reset();
        }
    }
    return verdict;
}

int toric_full_intersection(const Fan& f, std::span<const SymIntMat> edges)
{
    const std::size_t n = sym_dim(f.g());
    if (edges.size() != n)
        throw PreconditionError("full intersection needs exactly N = " + std::to_string(n) + " edges");
    for (std::size_t a = 0; a < edges.size(); ++a) {
        if (edges[a].g() != f.g() || edges[a].is_zero())
            throw DomainError("edge " + std::to_string(a) + " is not a nonzero " + std::to_string(f.g()) + "x" +
                              std::to_string(f.g()) + " matrix");
        for (std::size_t b = 0; b < a; ++b)
            if (same_ray(edges[a], edges[b]))
                throw DomainError("edge list contains the same ray twice");
    }
    if (!f.is_regular())
        throw PreconditionError("toric intersection numbers are only supported for regular fans");
    for (const auto& cone : f.cones()) {
        if (!cone.is_top_dimensional())
            continue;
        bool all = std::all_of(edges.begin(), edges.end(),
                               [&](const SymIntMat& e) { return cone.find_ray(e).has_value(); });
        if (all)
            return 1;
    }
    return 0;
}

} // namespace toroidal
