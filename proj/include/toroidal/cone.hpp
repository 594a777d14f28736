#ifndef TOROIDAL_CONE_HPP
#define TOROIDAL_CONE_HPP

#include "toroidal/matrix.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toroidal {

// N = g(g+1)/2, the dimension of Sym_g.
constexpr std::size_t sym_dim(std::size_t g) { return g * (g + 1) / 2; }

// Symmetric g x g integer matrix: an element of Sym_g(Z).
class SymIntMat {
public:
    explicit SymIntMat(IntMatrix entries);
    SymIntMat(std::initializer_list<std::initializer_list<Integer>> rows) : SymIntMat(IntMatrix(rows)) {}

    std::size_t g() const { return m_.rows(); }
    const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const IntMatrix& matrix() const { return m_; }
    RatMatrix to_rational() const { return toroidal::to_rational(m_); }

    bool is_zero() const;
    // Entrywise gcd; zero for the zero matrix.
    Integer content() const;
    // This matrix divided by its content: the primitive generator of its ray.
    SymIntMat primitive() const;
    SymIntMat scaled(const Integer& factor) const;
    SymIntMat negated() const { return scaled(Integer(-1)); }

    std::string to_string() const;

    friend bool operator==(const SymIntMat&, const SymIntMat&) = default;

private:
    IntMatrix m_;
};

// Same ray: positive multiples of one another.
bool same_ray(const SymIntMat& a, const SymIntMat& b);

// The Z-basis delta_{ii} = E_ii, delta_{ij} = E_ij + E_ji of Sym_g(Z) in the
// order (1,1),(1,2),...,(1,g),(2,2),...,(g,g).
std::vector<SymIntMat> delta_basis(std::size_t g);

// Integer coordinates c with m = scale * sum_k c_k delta_k.
std::vector<Integer> coords_in_lattice(const SymIntMat& m, const Integer& scale);

// Unimodular g x g integer matrix acting by A -> gamma A gamma^T.
class GroupElement {
public:
    explicit GroupElement(IntMatrix gamma);
    GroupElement(std::initializer_list<std::initializer_list<Integer>> rows) : GroupElement(IntMatrix(rows)) {}

    std::size_t g() const { return gamma_.rows(); }
    const IntMatrix& matrix() const { return gamma_; }
    SymIntMat act(const SymIntMat& a) const;

private:
    IntMatrix gamma_;
};

enum class ConeValidation {
    full,       // structural checks plus positive semidefinite generators
    structural, // skips the PSD check, for sign-flipped test cones and reports
};

// Simplicial-or-smaller cone in Sym_g(R) with marked (ordered) generators,
// relative to the lattice scale * Sym_g(Z).
class MarkedCone {
public:
    MarkedCone(std::size_t g, Integer scale, std::vector<SymIntMat> generators, std::vector<std::string> labels = {},
               ConeValidation validation = ConeValidation::full);

    std::size_t g() const { return g_; }
    std::size_t dim() const { return sym_dim(g_); }
    const Integer& scale() const { return scale_; }
    const std::vector<SymIntMat>& generators() const { return generators_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t size() const { return generators_.size(); }
    bool is_top_dimensional() const { return generators_.size() == dim(); }

    // Rows are coords_in_lattice of the generators.
    IntMatrix coordinate_matrix() const;
    // Generators divided by the scale, as rational matrices.
    std::vector<RatMatrix> normalized_pencil() const;
    // Same cone with generators (and labels) listed in the order perm[0], perm[1], ...
    MarkedCone permuted(std::span<const std::size_t> perm) const;
    // Index of the generator spanning the same ray as m, if any.
    std::optional<std::size_t> find_ray(const SymIntMat& m) const;

private:
    std::size_t g_;
    Integer scale_;
    std::vector<SymIntMat> generators_;
    std::vector<std::string> labels_;
};

// |det| of the coordinate matrix of a top-dimensional cone.
Integer lattice_volume(const MarkedCone& c);

// Generators extend to a Z-basis of the lattice.
bool is_regular(const MarkedCone& c);

// Linearly independent generators.
bool is_simplicial(const MarkedCone& c);

enum class EdgeKind { interior, boundary, invalid };

struct EdgeClass {
    EdgeKind kind = EdgeKind::invalid;
    std::size_t rank = 0;
    // Boundary edge with 1 < rank < g.
    bool unexpected_rank = false;

    friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

EdgeClass edge_class(const SymIntMat& m);
std::string to_string(EdgeKind kind);

MarkedCone gl_act(const GroupElement& gamma, const MarkedCone& c);

// Whether the cones spanned by two generator lists share a nonzero point.
bool cones_meet_nontrivially(std::span<const SymIntMat> a, std::span<const SymIntMat> b);
bool cones_meet_nontrivially(const MarkedCone& a, const MarkedCone& b);

class Fan {
public:
    explicit Fan(std::vector<MarkedCone> cones);

    std::size_t g() const { return g_; }
    const Integer& scale() const { return scale_; }
    const std::vector<MarkedCone>& cones() const { return cones_; }
    // Distinct rays (primitive generators) in order of first appearance.
    std::vector<SymIntMat> rays() const;
    bool is_regular() const;

private:
    std::size_t g_;
    Integer scale_;
    std::vector<MarkedCone> cones_;
};

struct FanViolation {
    std::size_t first;
    std::size_t second;
    // A point of the intersection outside the span of the shared generators.
    RatMatrix witness;
};

struct FanReport {
    bool is_fan = true;
    std::vector<FanViolation> violations;
};

FanReport is_fan(std::span<const MarkedCone> cones, std::size_t threads = 1);

struct SeparabilityViolation {
    std::size_t cone;
    std::size_t element;
};

struct SeparabilityReport {
    bool separable = true;
    std::vector<SeparabilityViolation> violations;
};

// Checked only against the listed group elements.
SeparabilityReport is_separable(std::span<const MarkedCone> cones, std::span<const GroupElement> group);

// Number of boundary components: index * (1 + interior_orbits).
Integer component_count(const Integer& index, const Integer& interior_orbits);

} // namespace toroidal

#endif
