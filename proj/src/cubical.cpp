#include "jamesloop/cubical.hpp"

#include <algorithm>

#include "jamesloop/errors.hpp"

namespace jamesloop
{

namespace
{

std::vector<int> ascending(const std::vector<int>& degens)
{
    return {degens.rbegin(), degens.rend()};
}

std::vector<int> descending(std::vector<int> positions)
{
    std::sort(positions.begin(), positions.end(), std::greater<>());
    return positions;
}

bool is_boundary(const Rational& s)
{
    return s == 0 || s == 1;
}

} // namespace

CubicalSet::CubicalSet(std::string basepoint, std::vector<Cube> cubes)
    : basepoint_(std::move(basepoint)), cubes_(std::move(cubes))
{
    for (std::size_t k = 0; k < cubes_.size(); ++k)
    {
        const Cube& c = cubes_[k];
        if (c.id.empty())
            throw StructureError("cube with empty id");
        if (c.dim < 0)
            throw StructureError("cube \"" + c.id + "\" has negative dimension");
        if (!index_.emplace(c.id, k).second)
            throw StructureError("duplicate cube id \"" + c.id + "\"");
    }
    if (!contains(basepoint_))
        throw StructureError("basepoint \"" + basepoint_ + "\" is not a cube");
    if (cube(basepoint_).dim != 0)
        throw StructureError("basepoint \"" + basepoint_ + "\" is not a vertex");

    for (const Cube& c : cubes_)
    {
        if (c.faces.size() != static_cast<std::size_t>(2 * c.dim))
            throw StructureError("cube \"" + c.id + "\" of dimension " + std::to_string(c.dim) +
                                 " needs " + std::to_string(2 * c.dim) + " faces");
        for (const FaceRef& f : c.faces)
        {
            if (!contains(f.base))
                throw StructureError("cube \"" + c.id + "\" references unknown cube \"" +
                                     f.base + "\"");
            int base_dim = cube(f.base).dim;
            int k = static_cast<int>(f.degens.size());
            if (base_dim + k != c.dim - 1)
                throw StructureError("face of \"" + c.id + "\" has dimension " +
                                     std::to_string(base_dim + k) + ", expected " +
                                     std::to_string(c.dim - 1));
            for (std::size_t m = 0; m < f.degens.size(); ++m)
            {
                if (m > 0 && f.degens[m] >= f.degens[m - 1])
                    throw StructureError("degeneracy word of a face of \"" + c.id +
                                         "\" is not strictly decreasing");
                // Reading right to left, the r-th degeneracy (0-based) lands in
                // dimension base_dim + r + 1.
                int from_end = static_cast<int>(f.degens.size() - 1 - m);
                if (f.degens[m] < 1 || f.degens[m] > base_dim + from_end + 1)
                    throw StructureError("degeneracy index out of range in a face of \"" +
                                         c.id + "\"");
            }
        }
    }
}

bool CubicalSet::contains(std::string_view id) const
{
    return index_.find(std::string(id)) != index_.end();
}

const Cube& CubicalSet::cube(std::string_view id) const
{
    auto it = index_.find(std::string(id));
    if (it == index_.end())
        throw StructureError("unknown cube \"" + std::string(id) + "\"");
    return cubes_[it->second];
}

int CubicalSet::top_dim() const
{
    int top = 0;
    for (const Cube& c : cubes_)
        top = std::max(top, c.dim);
    return top;
}

std::vector<std::string> CubicalSet::cubes_of_dim(int n) const
{
    std::vector<std::string> out;
    for (const Cube& c : cubes_)
        if (c.dim == n)
            out.push_back(c.id);
    return out;
}

int CubicalSet::dim(const FaceRef& ref) const
{
    return cube(ref.base).dim + static_cast<int>(ref.degens.size());
}

FaceRef CubicalSet::face(const FaceRef& cell, int i, int eps) const
{
    const int n = dim(cell);
    if (i < 1 || i > n)
        throw DomainError("face index " + std::to_string(i) + " out of range for dimension " +
                          std::to_string(n));
    std::vector<int> dummies = ascending(cell.degens);

    // Removing a dummy direction: s_i followed by d_i is the identity there.
    if (std::find(dummies.begin(), dummies.end(), i) != dummies.end())
    {
        std::vector<int> rest;
        for (int d : dummies)
            if (d != i)
                rest.push_back(d > i ? d - 1 : d);
        return {cell.base, descending(std::move(rest))};
    }

    int below = static_cast<int>(std::count_if(dummies.begin(), dummies.end(),
                                               [i](int d) { return d < i; }));
    const FaceRef& inner = cube(cell.base).face(i - below, eps);

    std::vector<int> outer;
    for (int d : dummies)
        outer.push_back(d > i ? d - 1 : d);
    std::vector<int> free_positions;
    for (int pos = 1; pos <= n - 1; ++pos)
        if (std::find(outer.begin(), outer.end(), pos) == outer.end())
            free_positions.push_back(pos);
    for (int e : inner.degens)
        outer.push_back(free_positions[e - 1]);
    return {inner.base, descending(std::move(outer))};
}

FaceRef CubicalSet::face(std::string_view id, int i, int eps) const
{
    return face(FaceRef{std::string(id), {}}, i, eps);
}

bool CubicalSet::face_closed(const SubComplex& sub) const
{
    for (const auto& id : sub)
    {
        if (!contains(id))
            return false;
        for (const FaceRef& f : cube(id).faces)
            if (!sub.count(f.base))
                return false;
    }
    return true;
}

std::vector<RelationViolation> validate(const CubicalSet& complex)
{
    std::vector<RelationViolation> report;
    for (const Cube& c : complex.cubes())
    {
        if (c.dim < 2)
            continue;
        FaceRef self{c.id, {}};
        for (int j = 2; j <= c.dim; ++j)
            for (int i = 1; i < j; ++i)
                for (int eps = 0; eps <= 1; ++eps)
                    for (int eta = 0; eta <= 1; ++eta)
                    {
                        FaceRef lhs = complex.face(complex.face(self, j, eta), i, eps);
                        FaceRef rhs = complex.face(complex.face(self, i, eps), j - 1, eta);
                        if (lhs != rhs)
                            report.push_back({c.id, i, j, eps, eta});
                    }
    }
    return report;
}

std::string tensor_name(std::string_view a, std::string_view b)
{
    std::string name(a);
    name += '|';
    name += b;
    return name;
}

CubicalSet tensor_product(const CubicalSet& a, const CubicalSet& b)
{
    std::vector<Cube> cubes;
    const int top = a.top_dim() + b.top_dim();
    for (int n = 0; n <= top; ++n)
        for (const Cube& ca : a.cubes())
            for (const Cube& cb : b.cubes())
            {
                if (ca.dim + cb.dim != n)
                    continue;
                Cube c{tensor_name(ca.id, cb.id), n, {}};
                const int p = ca.dim;
                for (int i = 1; i <= n; ++i)
                    for (int eps = 0; eps <= 1; ++eps)
                    {
                        if (i <= p)
                        {
                            const FaceRef& f = ca.face(i, eps);
                            c.faces.push_back({tensor_name(f.base, cb.id), f.degens});
                        }
                        else
                        {
                            const FaceRef& f = cb.face(i - p, eps);
                            std::vector<int> shifted;
                            for (int d : f.degens)
                                shifted.push_back(d + p);
                            c.faces.push_back({tensor_name(ca.id, f.base), shifted});
                        }
                    }
                cubes.push_back(std::move(c));
            }
    return CubicalSet(tensor_name(a.basepoint(), b.basepoint()), std::move(cubes));
}

CubicalSet quotient_collapse(const CubicalSet& complex, const SubComplex& sub,
                             const std::string& vertex)
{
    if (sub.empty())
        throw DomainError("quotient_collapse: the collapsed sub-complex is empty");
    for (const auto& id : sub)
        if (!complex.contains(id))
            throw StructureError("quotient_collapse: unknown cube \"" + id + "\"");
    if (!complex.face_closed(sub))
        throw DomainError("quotient_collapse: the collapsed sub-complex is not closed under faces");
    if (complex.contains(vertex) && !sub.count(vertex))
        throw DomainError("quotient_collapse: vertex name \"" + vertex + "\" already in use");

    std::vector<Cube> cubes;
    cubes.push_back({vertex, 0, {}});
    for (const Cube& c : complex.cubes())
    {
        if (sub.count(c.id))
            continue;
        Cube out{c.id, c.dim, {}};
        for (const FaceRef& f : c.faces)
        {
            if (sub.count(f.base))
            {
                std::vector<int> all;
                for (int pos = c.dim - 1; pos >= 1; --pos)
                    all.push_back(pos);
                out.faces.push_back({vertex, all});
            }
            else
                out.faces.push_back(f);
        }
        cubes.push_back(std::move(out));
    }
    return CubicalSet(vertex, std::move(cubes));
}

SuspensionModel suspension_model(const CubicalSet& base)
{
    CubicalSet interval("v-", {{"v-", 0, {}},
                               {"m", 0, {}},
                               {"v+", 0, {}},
                               {"i-", 1, {{"v-", {}}, {"m", {}}}},
                               {"i+", 1, {{"m", {}}, {"v+", {}}}}});
    CubicalSet product = tensor_product(interval, base);

    SubComplex collapsed;
    for (const Cube& e : interval.cubes())
        collapsed.insert(tensor_name(e.id, base.basepoint()));
    for (const Cube& c : base.cubes())
    {
        collapsed.insert(tensor_name("v-", c.id));
        collapsed.insert(tensor_name("v+", c.id));
    }

    const std::string star = "*";
    CubicalSet k = quotient_collapse(product, collapsed, star);
    SubComplex minus{star}, plus{star};
    for (const Cube& c : k.cubes())
    {
        if (c.id.rfind("i-|", 0) == 0 || c.id.rfind("m|", 0) == 0)
            minus.insert(c.id);
        if (c.id.rfind("i+|", 0) == 0 || c.id.rfind("m|", 0) == 0)
            plus.insert(c.id);
    }
    return {std::move(k), std::move(minus), std::move(plus), star};
}

bool operator<(const RealizationPoint& a, const RealizationPoint& b)
{
    if (a.cube != b.cube)
        return a.cube < b.cube;
    return a.coords < b.coords;
}

namespace detail
{

void strip_coordinate(const CubicalSet& complex, FaceRef& cell, std::vector<Rational>& coords,
                      std::size_t index)
{
    const Rational& s = coords.at(index);
    if (!is_boundary(s))
        throw DomainError("strip_coordinate: coordinate is not 0 or 1");
    int eps = s == 0 ? 0 : 1;
    cell = complex.face(cell, static_cast<int>(index) + 1, eps);
    coords.erase(coords.begin() + static_cast<std::ptrdiff_t>(index));
}

void drop_degenerate(FaceRef& cell, std::vector<Rational>& coords)
{
    // degens are strictly decreasing, so erasing in order keeps positions valid.
    for (int d : cell.degens)
        coords.erase(coords.begin() + (d - 1));
    cell.degens.clear();
}

} // namespace detail

RealizationPoint normalize_point(const CubicalSet& complex, std::string_view cube,
                                 std::vector<Rational> coords)
{
    FaceRef cell{std::string(cube), {}};
    if (static_cast<int>(coords.size()) != complex.dim(cube))
        throw DomainError("point in \"" + std::string(cube) + "\" needs " +
                          std::to_string(complex.dim(cube)) + " coordinates, got " +
                          std::to_string(coords.size()));
    for (const Rational& s : coords)
        if (s < 0 || s > 1)
            throw DomainError("point coordinate " + format_rational(s) + " outside [0,1]");

    for (;;)
    {
        detail::drop_degenerate(cell, coords);
        auto it = std::find_if(coords.begin(), coords.end(), is_boundary);
        if (it == coords.end())
            break;
        detail::strip_coordinate(complex, cell, coords,
                                 static_cast<std::size_t>(it - coords.begin()));
    }
    return {cell.base, std::move(coords)};
}

bool is_canonical(const CubicalSet& complex, const RealizationPoint& point)
{
    if (!complex.contains(point.cube))
        return false;
    if (static_cast<int>(point.coords.size()) != complex.dim(point.cube))
        return false;
    return std::all_of(point.coords.begin(), point.coords.end(),
                       [](const Rational& s) { return s > 0 && s < 1; });
}

Rational collapse_coordinate(const Rational& s)
{
    static const Rational third(1, 3);
    static const Rational two_thirds(2, 3);
    static const Rational half(1, 2);
    if (s <= third)
        return 0;
    if (s >= two_thirds)
        return 1;
    return 3 * (s - half) + half;
}

RealizationPoint r_collapse(const CubicalSet& complex, const RealizationPoint& point)
{
    std::vector<Rational> coords;
    coords.reserve(point.coords.size());
    for (const Rational& s : point.coords)
        coords.push_back(collapse_coordinate(s));
    return normalize_point(complex, point.cube, std::move(coords));
}

bool in_A(const CubicalSet& complex, const RealizationPoint& point, const SubComplex& sub)
{
    return sub.count(r_collapse(complex, point).cube) > 0;
}

std::string minimal_vertex(const CubicalSet& complex, std::string_view cube)
{
    std::vector<Rational> zeros(static_cast<std::size_t>(complex.dim(cube)), Rational(0));
    return normalize_point(complex, cube, std::move(zeros)).cube;
}

} // namespace jamesloop
