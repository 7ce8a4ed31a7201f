#pragma once

// JSON encoding for exact values. Big integers are always decimal strings so
// the encoding is identical on every platform.

#include <json.hpp>

#include "beatty_lab/quadratic.hpp"

namespace beatty_lab {

template <unsigned R>
void to_json(nlohmann::json& j, const Quadratic<R>& x) {
  j = nlohmann::json{{"p", x.p().get_str()}, {"q", x.q().get_str()}, {"d", x.d().get_str()}};
}

/// Accepts the {"p", "q", "d"} object; the result is re-canonicalized.
template <unsigned R>
void from_json(const nlohmann::json& j, Quadratic<R>& x) {
  x = Quadratic<R>::make(BigInt(j.at("p").get<std::string>()), BigInt(j.at("q").get<std::string>()),
                         BigInt(j.at("d").get<std::string>()));
}

}  // namespace beatty_lab
