#pragma once

#include <json.hpp>

#include "ifns/afp.hpp"
#include "ifns/classifier.hpp"
#include "ifns/fuzzy_norm.hpp"
#include "ifns/map_spec.hpp"
#include "ifns/report.hpp"

// JSON forms of every report type. Field names mirror the C++ members.
namespace ifns {

nlohmann::json vector_json(const Vector& v);

void to_json(nlohmann::json& j, const AxiomCheck& c);
void to_json(nlohmann::json& j, const AxiomReport& r);
void to_json(nlohmann::json& j, const ConvergenceVerdict& v);
void to_json(nlohmann::json& j, const SelfMapReport& r);
void to_json(nlohmann::json& j, const ClassSpec& s);
void to_json(nlohmann::json& j, const ClassVerdict& v);
void to_json(nlohmann::json& j, const ModulusFit& f);
void to_json(nlohmann::json& j, const EpsResidual& r);
void to_json(nlohmann::json& j, const EpsMember& m);
void to_json(nlohmann::json& j, const EpsFixedPointSet& s);
void to_json(nlohmann::json& j, const OrbitRecord& o);
void to_json(nlohmann::json& j, const RegularityVerdict& v);
void to_json(nlohmann::json& j, const BoundReport& r);
void to_json(nlohmann::json& j, const DiameterResult& d);
void to_json(nlohmann::json& j, const ChainReport& c);
void to_json(nlohmann::json& j, const SetAfppReport& r);

/// One CSV row per member: coordinates, mu_res, nu_res, eps_star (17 significant digits).
std::string members_csv(const EpsFixedPointSet& set, std::size_t dimension);

/// "%.17g" rendering, exact for binary64.
std::string format_g17(double v);

}  // namespace ifns
