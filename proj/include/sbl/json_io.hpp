#pragma once
#include "sbl/hamiltonian.hpp"
#include "sbl/invariants.hpp"
#include "sbl/persistence.hpp"
#include "sbl/sheaf.hpp"
#include <json.hpp>

namespace sbl {

// Exact rationals serialize as "p/q" (or "p") strings; parsing accepts
// those forms and JSON numbers (every finite double is an exact rational).
// Infinite endpoints use the "-inf"/"inf" sentinels.
std::string rat_str(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);
nlohmann::json extrat_to_json(const ExtRat& e);
ExtRat extrat_from_json(const nlohmann::json& j);

nlohmann::json dims_to_json(const GradedDims& d);
GradedDims dims_from_json(const nlohmann::json& j);

// SheafOnR: {"field": "f2"|"q", "summands":
//   [{left, left_closed, right, right_closed, shift, mult}, ...]}
nlohmann::json sheaf_to_json(const SheafOnR& f);
SheafOnR sheaf_from_json(const nlohmann::json& j);

// Barcode: {"field": ..., "bars": [{birth, death, degree, mult}, ...]}
nlohmann::json barcode_to_json(const Barcode& b);
Barcode barcode_from_json(const nlohmann::json& j);

// HamiltonianSpec: {"type":"radial", "capacity", "alpha",
//   "profile": {"breaks":[...], "pieces":[[c0,c1,...],...]}}
// or {"type":"sampled", "box", "nx", "ny", "values":[...]}.
nlohmann::json hamiltonian_to_json(const HamiltonianSpec& h);
HamiltonianSpec hamiltonian_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const InvariantReport& r);
nlohmann::json nine_diagram_to_json(const NineDiagramReport& r);

} // namespace sbl
