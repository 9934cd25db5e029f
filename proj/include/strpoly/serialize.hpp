#pragma once

// JSON views of the library's results, shared by the command-line tool and
// the tests.  Rationals are written as "p/q" strings; ray sets as lists of
// ray labels.

#include "json.hpp"
#include "strpoly/moves_index.hpp"
#include "strpoly/polytope.hpp"
#include "strpoly/potential.hpp"
#include "strpoly/resolution.hpp"
#include "strpoly/toric_fan.hpp"
#include "strpoly/weyl_words.hpp"
#include "strpoly/wiring.hpp"

namespace strpoly {

using Json = nlohmann::ordered_json;

Json to_json(const RigorousPath& p);
Json paths_json(const ReducedWord& word, const std::vector<RigorousPath>& paths);
Json to_json(const HPolytope& p);
Json to_json(const VertexSet& vs);
Json to_json(const Fan& f);
Json ray_set_json(RaySet s, const std::vector<std::string>& labels);
Json to_json(const SmallIndices& s);
Json to_json(const BpfViolation& v, const std::vector<std::string>& labels);
Json to_json(const ResolutionVerdict& v);
Json bott_json(const BottData& b);
Json to_json(const LaurentPotential& p);

}  // namespace strpoly
