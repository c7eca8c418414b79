#pragma once

#include "marangoni/exp_poly.hpp"
#include "marangoni/pade.hpp"

#include "json.hpp"

namespace marangoni {

/// [{"decay_index": k, "coefficients": ["p/q", ...]}, ...] in ascending decay index.
nlohmann::json to_json(const ExpPoly& f);
ExpPoly exp_poly_from_json(const nlohmann::json& j);

/// Exact strings plus float renderings of both coefficient lists.
nlohmann::json to_json(const PadeApproximant& r);

}  // namespace marangoni
