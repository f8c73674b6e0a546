#pragma once

#include <json.hpp>

#include "qmap/classify.h"
#include "qmap/docmap.h"
#include "qmap/oracle.h"
#include "qmap/pauli.h"

namespace qmap {

// Complex numbers are [re, im] pairs. Non-finite doubles become null.

nlohmann::json to_json(cplx z);
nlohmann::json to_json(const MapParams &p);
nlohmann::json to_json(const ChoiMatrix &c);
nlohmann::json to_json(const Classification &c);
nlohmann::json to_json(const VolumeEstimate &v);
nlohmann::json to_json(const AgreementReport &r);

/// Inverse of to_json(MapParams). Throws InvalidParams on a malformed document.
MapParams map_params_from_json(const nlohmann::json &j);

}  // namespace qmap
