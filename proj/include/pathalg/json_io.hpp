#pragma once

#include <string>

#include <json.hpp>

#include "pathalg/chen.hpp"
#include "pathalg/connection.hpp"
#include "pathalg/homology.hpp"
#include "pathalg/mpoly.hpp"
#include "pathalg/ncop.hpp"
#include "pathalg/palg.hpp"

namespace pathalg {

// Stable field order for byte-reproducible output.
using Json = nlohmann::ordered_json;

Json mpoly_to_json(const MPoly& p);
MPoly mpoly_from_json(const Json& j);

Json matpoly_to_json(const MatPoly& m);
MatPoly matpoly_from_json(const Json& j);

Json ratmat_to_json(const RatMat& m);
RatMat ratmat_from_json(const Json& j);

Json ncop_to_json(const NCOp& p);
NCOp ncop_from_json(const Json& j);

Json pelem_to_json(const PElem& x);
PElem pelem_from_json(const Json& j);

Json connection_to_json(const Connection& c);
Connection connection_from_json(const Json& j);

Json jetdata_to_json(const JetData& j);
JetData jetdata_from_json(const Json& j);

Json plpath_to_json(const PLPath& p);
PLPath plpath_from_json(const Json& j);

Json chen_to_json(const ChenSeries& e);
ChenSeries chen_from_json(const Json& j);

Json freeness_to_json(const std::vector<FreenessRow>& rows);

// Parse a file, mapping parse failures to pathalg errors.
Json load_json_file(const std::string& path);

// Standard bracketing string ("[1,[1,2]]") -> Lyndon word; rejects keys
// that are not the canonical bracketing.
Word hall_key_parse(const std::string& s);

}
