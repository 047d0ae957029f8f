#pragma once

#include <qnormal/coordinates.hpp>
#include <qnormal/enumeration.hpp>
#include <qnormal/surface.hpp>
#include <qnormal/unknot.hpp>

#include "json.hpp"

#include <string>

namespace qnormal {

inline constexpr int kJsonSchema = 1;

/// Decimal-string array, e.g. ["0","2","1"].
nlohmann::json vector_json(std::span<const Integer> v);
std::vector<Integer> vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AdmissibilityReport& report);
/// Wall time is omitted unless `timing` is set, so output stays reproducible.
nlohmann::json to_json(const EnumerationResult& result, bool timing = false);
nlohmann::json to_json(const SurfaceInvariants& inv);
nlohmann::json to_json(const SurveyRow& row);
nlohmann::json survey_json(const std::vector<SurveyRow>& rows, CoordKind coords);
nlohmann::json to_json(const RecognitionReport& report);
nlohmann::json to_json(const CrossCheckReport& report);
nlohmann::json to_json(const BoundarySurface& boundary);

/// One vector per line in sparse `index:value` form.
std::string sparse_rays(const EnumerationResult& result);

}  // namespace qnormal
