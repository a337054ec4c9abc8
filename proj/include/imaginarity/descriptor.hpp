#pragma once

#include <string>

#include "imaginarity/density.hpp"
#include <json.hpp>

namespace imag {

/// Builds a state from a JSON descriptor holding exactly one of the keys
/// "dense", "bloch", "werner", "isotropic", "remark1", "pure".
/// Schema problems throw ParseError; invalid physics (e.g. |r| > 1) throws
/// the matching domain error.
DensityMatrix parse_state(const nlohmann::json& j);

/// Parses text (inline JSON). Throws ParseError on malformed JSON.
DensityMatrix parse_state(const std::string& text);

/// {"dense": {"dim": d, "re": [[...]], "im": [[...]]}}
nlohmann::json to_dense_descriptor(const ComplexMatrix& m);
nlohmann::json to_dense_descriptor(const DensityMatrix& rho);

}  // namespace imag
