#pragma once

#include <json.hpp>

#include <string>

#include "hoppe/monad/monad.hpp"

namespace hoppe {

Ambient ambient_from_json(const nlohmann::json& j);
nlohmann::ordered_json ambient_to_json(const Ambient& amb);

// Reads a monad document. Unknown fields are rejected with DocumentError.
MonadComplex monad_from_json(const nlohmann::json& j);
MonadComplex load_monad(const std::string& path);

// Canonical form: twists as arrays, maps as rendered polynomial strings.
nlohmann::ordered_json monad_to_json(const MonadComplex& m);

}  // namespace hoppe
