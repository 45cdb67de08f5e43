#pragma once

#include <optional>

#include <json.hpp>

#include "symq/symplectic.hpp"

namespace symq {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// {"kind":"zmod","n":9} or {"kind":"quotient","n":3,"poly":[1,0,1]}
RingDescriptor ring_from_json(const nlohmann::json& j);
nlohmann::json ring_to_json(const RingDescriptor& d);

/// Form given either by explicit gram entries (integers coerced via m*1_R, or
/// coefficient arrays for quotient rings), or by the "standard" / "scaled"
/// shortcuts.
GramForm form_from_json(const Ring& ring, int rank, const nlohmann::json& config);

/// A parsed instance config: either a symplectic build
/// {"ring":{...},"rank":k,...form...} or an ad-hoc table {"size":N,"op":[[...]]}.
struct LoadedInstance {
    std::optional<SymplecticQuandle> symplectic;  // present for ring configs
    FiniteQuandle quandle;
};

LoadedInstance load_instance(const nlohmann::json& config,
                             long long size_cap = kDefaultSizeCap);
LoadedInstance load_instance_file(const std::string& path,
                                  long long size_cap = kDefaultSizeCap);

}  // namespace symq
