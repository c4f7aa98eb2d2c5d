#include "jamesloop/io.hpp"

#include <fstream>
#include <regex>

#include "jamesloop/errors.hpp"

namespace jamesloop
{

namespace
{

const Json& field(const Json& doc, const char* key, const char* what)
{
    if (!doc.is_object() || !doc.contains(key))
        throw ParseError(std::string(what) + ": missing \"" + key + "\"");
    return doc.at(key);
}

std::string string_field(const Json& doc, const char* key, const char* what)
{
    const Json& v = field(doc, key, what);
    if (!v.is_string())
        throw ParseError(std::string(what) + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

Rational rational_value(const Json& v, const char* what)
{
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<std::int64_t>());
    throw ParseError(std::string(what) + ": rationals must be strings \"p/q\"");
}

std::vector<Rational> rational_list(const Json& v, const char* what)
{
    if (!v.is_array())
        throw ParseError(std::string(what) + ": expected an array of rationals");
    std::vector<Rational> out;
    for (const Json& item : v)
        out.push_back(rational_value(item, what));
    return out;
}

Json rational_list_json(const std::vector<Rational>& values)
{
    Json arr = Json::array();
    for (const Rational& r : values)
        arr.push_back(format_rational(r));
    return arr;
}

} // namespace

Json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open \"" + path + "\"");
    try
    {
        return Json::parse(in);
    }
    catch (const nlohmann::json::exception& e)
    {
        throw ParseError("\"" + path + "\" is not valid JSON: " + e.what());
    }
}

Json to_json(const CubicalSet& complex)
{
    Json cubes = Json::array();
    for (const Cube& c : complex.cubes())
    {
        Json faces = Json::object();
        for (int i = 1; i <= c.dim; ++i)
            for (int eps = 0; eps <= 1; ++eps)
            {
                const FaceRef& f = c.face(i, eps);
                faces["d" + std::to_string(eps) + "_" + std::to_string(i)] =
                    Json{{"base", f.base}, {"degens", f.degens}};
            }
        cubes.push_back(Json{{"id", c.id}, {"dim", c.dim}, {"faces", faces}});
    }
    return Json{{"basepoint", complex.basepoint()}, {"cubes", cubes}};
}

CubicalSet complex_from_json(const Json& doc)
{
    static const std::regex face_key(R"(d([01])_([1-9][0-9]*))");
    std::string basepoint = string_field(doc, "basepoint", "complex");
    const Json& cube_list = field(doc, "cubes", "complex");
    if (!cube_list.is_array())
        throw ParseError("complex: \"cubes\" must be an array");

    std::vector<Cube> cubes;
    bool has_basepoint = false;
    for (const Json& item : cube_list)
    {
        Cube c;
        c.id = string_field(item, "id", "cube");
        const Json& dim = field(item, "dim", "cube");
        if (!dim.is_number_integer() || dim.get<int>() < 0)
            throw ParseError("cube \"" + c.id + "\": \"dim\" must be a nonnegative integer");
        c.dim = dim.get<int>();
        c.faces.resize(static_cast<std::size_t>(2 * c.dim));
        std::vector<bool> seen(c.faces.size(), false);
        if (item.contains("faces"))
        {
            const Json& faces = item.at("faces");
            if (!faces.is_object())
                throw ParseError("cube \"" + c.id + "\": \"faces\" must be an object");
            for (const auto& [key, value] : faces.items())
            {
                std::smatch m;
                if (!std::regex_match(key, m, face_key))
                    throw ParseError("cube \"" + c.id + "\": bad face key \"" + key + "\"");
                int eps = std::stoi(m[1]);
                int i = std::stoi(m[2]);
                if (i > c.dim)
                    throw StructureError("cube \"" + c.id + "\": face index " +
                                         std::to_string(i) + " exceeds its dimension");
                FaceRef ref;
                ref.base = string_field(value, "base", "face");
                if (value.contains("degens"))
                {
                    const Json& degens = value.at("degens");
                    if (!degens.is_array())
                        throw ParseError("face \"" + key + "\" of \"" + c.id +
                                         "\": \"degens\" must be an array");
                    for (const Json& d : degens)
                    {
                        if (!d.is_number_integer())
                            throw ParseError("face \"" + key + "\" of \"" + c.id +
                                             "\": degeneracy indices must be integers");
                        ref.degens.push_back(d.get<int>());
                    }
                }
                auto slot = static_cast<std::size_t>(2 * (i - 1) + eps);
                c.faces[slot] = std::move(ref);
                seen[slot] = true;
            }
        }
        for (std::size_t k = 0; k < seen.size(); ++k)
            if (!seen[k])
                throw StructureError("cube \"" + c.id + "\": missing face d" +
                                     std::to_string(k % 2) + "_" + std::to_string(k / 2 + 1));
        has_basepoint = has_basepoint || c.id == basepoint;
        cubes.push_back(std::move(c));
    }
    if (!has_basepoint)
        cubes.insert(cubes.begin(), Cube{basepoint, 0, {}});
    return CubicalSet(std::move(basepoint), std::move(cubes));
}

Json to_json(const RealizationPoint& point)
{
    return Json{{"cube", point.cube}, {"coords", rational_list_json(point.coords)}};
}

RealizationPoint point_from_json(const Json& doc, const CubicalSet& base)
{
    std::string cube = string_field(doc, "cube", "point");
    if (!base.contains(cube))
        throw StructureError("point refers to unknown cube \"" + cube + "\"");
    std::vector<Rational> coords =
        doc.contains("coords") ? rational_list(doc.at("coords"), "point") : std::vector<Rational>{};
    if (static_cast<int>(coords.size()) != base.dim(cube))
        throw ParseError("point in \"" + cube + "\" needs " + std::to_string(base.dim(cube)) +
                         " coordinates");
    for (const Rational& s : coords)
        if (s < 0 || s > 1)
            throw ParseError("point coordinate " + format_rational(s) + " outside [0,1]");
    return normalize_point(base, cube, std::move(coords));
}

Json to_json(const SuspensionPoint& point)
{
    if (point.star)
        return Json{{"star", true}};
    return Json{{"star", false}, {"h", format_rational(point.h)}, {"x", to_json(point.x)}};
}

Json to_json(const MoorePath& path)
{
    Json segments = Json::array();
    for (const Segment& seg : path.segments)
    {
        if (seg.is_star())
        {
            segments.push_back(Json{{"kind", "star"}, {"dur", format_rational(seg.duration)}});
            continue;
        }
        const Track& tr = seg.track();
        segments.push_back(Json{{"kind", "track"},
                                {"dur", format_rational(seg.duration)},
                                {"h", Json::array({format_rational(tr.h_start),
                                                   format_rational(tr.h_end)})},
                                {"cube", tr.cube},
                                {"c0", rational_list_json(tr.c_start)},
                                {"c1", rational_list_json(tr.c_end)}});
    }
    return Json{{"segments", segments}};
}

MoorePath path_from_json(const Json& doc, const CubicalSet& base)
{
    const Json& segments = field(doc, "segments", "path");
    if (!segments.is_array())
        throw ParseError("path: \"segments\" must be an array");
    MoorePath path;
    for (const Json& item : segments)
    {
        std::string kind = string_field(item, "kind", "segment");
        Rational duration = rational_value(field(item, "dur", "segment"), "segment");
        if (duration < 0)
            throw ParseError("segment duration must be nonnegative");
        if (kind == "star")
        {
            path.segments.push_back({duration, StarBody{}});
            continue;
        }
        if (kind != "track")
            throw ParseError("segment kind must be \"star\" or \"track\", got \"" + kind + "\"");
        Track tr;
        std::vector<Rational> h = rational_list(field(item, "h", "track"), "track");
        if (h.size() != 2)
            throw ParseError("track: \"h\" needs exactly two heights");
        tr.h_start = h[0];
        tr.h_end = h[1];
        tr.cube = string_field(item, "cube", "track");
        if (!base.contains(tr.cube))
            throw StructureError("track refers to unknown cube \"" + tr.cube + "\"");
        const auto dim = static_cast<std::size_t>(base.dim(tr.cube));
        tr.c_start = item.contains("c0") ? rational_list(item.at("c0"), "track")
                                         : std::vector<Rational>{};
        tr.c_end = item.contains("c1") ? rational_list(item.at("c1"), "track") : tr.c_start;
        if (tr.c_start.size() != dim || tr.c_end.size() != dim)
            throw ParseError("track in \"" + tr.cube + "\" needs " + std::to_string(dim) +
                             " coordinates");
        for (std::size_t k = 0; k < dim; ++k)
            if (tr.c_start[k] < 0 || tr.c_start[k] > 1 || tr.c_end[k] < 0 || tr.c_end[k] > 1)
                throw ParseError("track coordinate outside [0,1]");
        path.segments.push_back({duration, std::move(tr)});
    }
    return path;
}

Json to_json(const JamesWord& word)
{
    Json arr = Json::array();
    for (const RealizationPoint& x : word.letters)
        arr.push_back(to_json(x));
    return arr;
}

JamesWord word_from_json(const Json& doc, const CubicalSet& base)
{
    if (!doc.is_array())
        throw ParseError("word: expected an array of points");
    std::vector<RealizationPoint> letters;
    for (const Json& item : doc)
        letters.push_back(point_from_json(item, base));
    return reduce_word(base, std::move(letters));
}

std::vector<XPrimeLetter> xprime_word_from_json(const Json& doc, const CubicalSet& base)
{
    if (!doc.is_array())
        throw ParseError("word: expected an array of letters");
    std::vector<XPrimeLetter> word;
    for (const Json& item : doc)
    {
        if (item.is_object() && item.contains("interval"))
        {
            Rational t = rational_value(item.at("interval"), "interval letter");
            if (t < 0 || t > 1)
                throw ParseError("interval letter outside [0,1]");
            word.emplace_back(IntervalLetter{t});
        }
        else
            word.emplace_back(point_from_json(item, base));
    }
    return word;
}

Json to_json(const std::vector<XPrimeLetter>& word)
{
    Json arr = Json::array();
    for (const XPrimeLetter& letter : word)
    {
        if (const auto* x = std::get_if<RealizationPoint>(&letter))
            arr.push_back(to_json(*x));
        else
            arr.push_back(Json{{"interval", format_rational(std::get<IntervalLetter>(letter).t)}});
    }
    return arr;
}

Json to_json(const GradedDims& dims)
{
    Json table = Json::object();
    for (const auto& [degree, dim] : dims.dims)
        table[std::to_string(degree)] = dim;
    return Json{{"dims", table}};
}

Json to_json(const HilbertSeries& series)
{
    return Json{{"series", series.coefficients}};
}

Json to_json(const std::vector<RelationViolation>& report)
{
    Json arr = Json::array();
    for (const auto& v : report)
        arr.push_back(Json{{"cube", v.cube}, {"i", v.i}, {"j", v.j}, {"eps", v.eps}, {"eta", v.eta}});
    return arr;
}

Json to_json(const SubComplex& sub)
{
    return Json(std::vector<std::string>(sub.begin(), sub.end()));
}

} // namespace jamesloop
