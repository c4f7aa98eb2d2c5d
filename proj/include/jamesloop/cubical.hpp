#ifndef JAMESLOOP_CUBICAL_HPP
#define JAMESLOOP_CUBICAL_HPP

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jamesloop/rational.hpp"

namespace jamesloop
{

/// A possibly degenerate cube s_{d_1} s_{d_2} ... s_{d_k}(base), stored in
/// normal form: `degens` is strictly decreasing. Read as a set, `degens` lists
/// the positions of the dummy coordinates of the resulting cube, so equality
/// of FaceRefs is equality of the elements they denote.
struct FaceRef
{
    std::string base;
    std::vector<int> degens;

    bool degenerate() const { return !degens.empty(); }
    friend bool operator==(const FaceRef&, const FaceRef&) = default;
    friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

/// A nondegenerate cube with its 2*dim faces. `faces[2*(i-1)+eps]` is d^eps_i.
struct Cube
{
    std::string id;
    int dim = 0;
    std::vector<FaceRef> faces;

    const FaceRef& face(int i, int eps) const { return faces[2 * (i - 1) + eps]; }
    friend bool operator==(const Cube&, const Cube&) = default;
};

/// Set of cube ids closed under faces (checked by the operations that need it).
using SubComplex = std::set<std::string>;

/// A finitely presented pointed cubical set. Construction checks structure
/// (known ids, face arities, degeneracy words) and throws StructureError; the
/// face-commutation relations are checked separately by validate().
class CubicalSet
{
public:
    CubicalSet(std::string basepoint, std::vector<Cube> cubes);

    const std::string& basepoint() const { return basepoint_; }
    const std::vector<Cube>& cubes() const { return cubes_; }

    bool contains(std::string_view id) const;
    const Cube& cube(std::string_view id) const;
    int dim(std::string_view id) const { return cube(id).dim; }
    int top_dim() const;

    /// Ids of the nondegenerate n-cubes in presentation order.
    std::vector<std::string> cubes_of_dim(int n) const;

    int dim(const FaceRef& ref) const;

    /// d^eps_i of a possibly degenerate cube, in normal form.
    FaceRef face(const FaceRef& cell, int i, int eps) const;
    FaceRef face(std::string_view id, int i, int eps) const;

    /// Every cube of `sub` has all its face bases in `sub`.
    bool face_closed(const SubComplex& sub) const;

    friend bool operator==(const CubicalSet& a, const CubicalSet& b)
    {
        return a.basepoint_ == b.basepoint_ && a.cubes_ == b.cubes_;
    }

private:
    std::string basepoint_;
    std::vector<Cube> cubes_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// One violated relation d^eps_i d^eta_j = d^eta_{j-1} d^eps_i (i < j).
struct RelationViolation
{
    std::string cube;
    int i = 0;
    int j = 0;
    int eps = 0;
    int eta = 0;
    friend bool operator==(const RelationViolation&, const RelationViolation&) = default;
};

std::vector<RelationViolation> validate(const CubicalSet& complex);

/// Nondegenerate cubes of A⊗B are pairs "a|b"; faces with index <= dim(a)
/// act on the left factor.
CubicalSet tensor_product(const CubicalSet& a, const CubicalSet& b);

std::string tensor_name(std::string_view a, std::string_view b);

/// Identify every cube of `sub` with the full degeneracy of a new vertex
/// named `vertex`, which becomes the basepoint.
CubicalSet quotient_collapse(const CubicalSet& complex, const SubComplex& sub,
                             const std::string& vertex = "*");

/// E⊗B / (E⊗{b0} ∪ {v-,v+}⊗B) where E is the interval v- --i-- m --i+-- v+.
/// Cube "i-|c" carries heights in [-1,0] on its first coordinate, "i+|c"
/// heights in [0,1], and "m|c" the slice at height 0.
struct SuspensionModel
{
    CubicalSet complex;
    SubComplex minus;
    SubComplex plus;
    std::string star;
};

SuspensionModel suspension_model(const CubicalSet& base);

/// A canonical point of |K|: nondegenerate cube and coordinates in (0,1).
struct RealizationPoint
{
    std::string cube;
    std::vector<Rational> coords;

    friend bool operator==(const RealizationPoint&, const RealizationPoint&) = default;
};

bool operator<(const RealizationPoint& a, const RealizationPoint& b);

/// Push boundary coordinates through faces and drop degenerate directions
/// until every coordinate lies strictly inside (0,1).
RealizationPoint normalize_point(const CubicalSet& complex, std::string_view cube,
                                 std::vector<Rational> coords);

bool is_canonical(const CubicalSet& complex, const RealizationPoint& point);

/// The collapse r: [0,1] -> [0,1] (0 on [0,1/3], 1 on [2/3,1], affine between).
Rational collapse_coordinate(const Rational& s);

/// R_1 applied to a point, renormalized.
RealizationPoint r_collapse(const CubicalSet& complex, const RealizationPoint& point);

/// Membership in A = R_1^{-1}(|L|).
bool in_A(const CubicalSet& complex, const RealizationPoint& point, const SubComplex& sub);

/// Lowest vertex of a cube (all coordinates 0).
std::string minimal_vertex(const CubicalSet& complex, std::string_view cube);

namespace detail
{
// Apply one face step: the coordinate at `index` must be 0 or 1. Exposed so
// tests can strip boundary coordinates in arbitrary orders.
void strip_coordinate(const CubicalSet& complex, FaceRef& cell, std::vector<Rational>& coords,
                      std::size_t index);
// Drop dummy coordinates of a degenerate cell.
void drop_degenerate(FaceRef& cell, std::vector<Rational>& coords);
} // namespace detail

} // namespace jamesloop

#endif
