#pragma once

#include <json.hpp>

#include "cgzic/chain_decompose.hpp"
#include "cgzic/channel_model.hpp"
#include "cgzic/hk_core.hpp"
#include "cgzic/hk_polytope.hpp"
#include "cgzic/regimes3.hpp"
#include "cgzic/sweep.hpp"

namespace cgzic::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Rounds to 9 significant digits so printed rates are stable across builds.
double round9(double v);

/// Accepts {"K": .., "a": [..], "P": [..]} or
/// {"general": {"d": [..], "c": [..], "sigma2": [..], "Q": [..]}}; the general
/// form is normalized. Throws InvalidChannel on schema or value errors.
ChannelConfig parse_channel(const Json& j);

/// `spec` is inline JSON when it starts with '{', otherwise a file path.
ChannelConfig load_channel(const std::string& spec);

Json to_json(const ChannelConfig& cfg);
Json to_json(const RegimeReport& rep);
Json to_json(const SumRateResult& res);
Json to_json(const Segmentation& seg);
Json to_json(const OracleReport& rep);
Json to_json(const VerifyReport& rep);

} // namespace cgzic::io
