#pragma once

#include <string>

#include "stw/fpmod.hpp"
#include "stw/theorems.hpp"

namespace stw::io {

// Presentation JSON:
// {"algebra": "TwistedA1",
//  "generators": [{"name": "g", "degree": 0}],
//  "relations": [[{"coef": "1 | Sq2", "gen": "g"}]]}
// Coefficients use the shared expression grammar.
fpmod::Presentation presentation_from_json(const std::string& text);
std::string presentation_to_json(const fpmod::Presentation& p);

std::string realization_to_json(const fpmod::Realization& r, bool include_tables);
std::string realization_to_text(const fpmod::Realization& r, bool include_tables);

// Report JSON: {"check": ..., "max_degree": ..., "status": ...,
//               "ledger": [{"degree": d, "lhs": n, "rhs": m}], "ms": t,
//               "notes": [...]}.
std::string report_to_json(const theorems::CheckReport& r);
std::string report_to_text(const theorems::CheckReport& r, bool verbose);

std::string census_to_json(const std::vector<theorems::CensusEntry>& entries,
                           const theorems::CheckReport& r);
std::string census_to_text(const std::vector<theorems::CensusEntry>& entries,
                           const theorems::CheckReport& r);

}  // namespace stw::io
