#pragma once

#include "ferrand/doubling.hpp"
#include "ferrand/ideal.hpp"

#include <string>

namespace ferrand {

/// {"vars": [...], "field": "QQ" | "Fp:p", "order": "...", "generators": [...]}
std::string ideal_to_json(const Ideal& ideal);
/// Inverse of ideal_to_json. Throws InputError on malformed documents.
Ideal ideal_from_json(const std::string& text);

/// {"r": r, "n": n, "a": a, "block1": [...], "block2": [...]}, plus "field"
/// when it is not QQ.
std::string mu_to_json(const MuMap& mu);
MuMap mu_from_json(const std::string& text);

}  // namespace ferrand
