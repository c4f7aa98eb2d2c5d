#ifndef JAMESLOOP_IO_HPP
#define JAMESLOOP_IO_HPP

#include <string>

#include <json.hpp>

#include "jamesloop/cubical.hpp"
#include "jamesloop/homology.hpp"
#include "jamesloop/james.hpp"
#include "jamesloop/loop_algebra.hpp"
#include "jamesloop/suspension_paths.hpp"

namespace jamesloop
{

using Json = nlohmann::ordered_json;

// Every reader throws ParseError (or StructureError) on malformed input.

Json load_json_file(const std::string& path);

Json to_json(const CubicalSet& complex);
CubicalSet complex_from_json(const Json& doc);

Json to_json(const RealizationPoint& point);
RealizationPoint point_from_json(const Json& doc, const CubicalSet& base);

Json to_json(const SuspensionPoint& point);

Json to_json(const MoorePath& path);
MoorePath path_from_json(const Json& doc, const CubicalSet& base);

Json to_json(const JamesWord& word);
JamesWord word_from_json(const Json& doc, const CubicalSet& base);

/// Letters are points {"cube","coords"} or whisker letters {"interval":"t"}.
std::vector<XPrimeLetter> xprime_word_from_json(const Json& doc, const CubicalSet& base);
Json to_json(const std::vector<XPrimeLetter>& word);

Json to_json(const GradedDims& dims);
Json to_json(const HilbertSeries& series);
Json to_json(const std::vector<RelationViolation>& report);
Json to_json(const SubComplex& sub);

} // namespace jamesloop

#endif
