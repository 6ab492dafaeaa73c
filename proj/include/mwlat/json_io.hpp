#pragma once

#include "mwlat/abelian.hpp"
#include "mwlat/fibration.hpp"
#include "mwlat/lattice.hpp"

#include <json.hpp>

namespace mwlat {

using json = nlohmann::ordered_json;

json int_to_json(const Int& v);
Int int_from_json(const json& j);

json vector_to_json(const std::vector<Int>& v);
std::vector<Int> vector_from_json(const json& j);

json matrix_to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const json& j);

json group_to_json(const FgAbelianGroup& g);

json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const json& j);

json cycles_to_json(const CycleTuple& t);
CycleTuple cycles_from_json(const json& j);

json fibration_to_json(const FibrationDescription& f);
FibrationDescription fibration_from_json(const json& j);

// Comma-separated integer list, e.g. "3,-1,-1".
std::vector<Int> parse_int_list(const std::string& text);

} // namespace mwlat
