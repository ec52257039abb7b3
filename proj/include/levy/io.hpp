#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "levy/models.hpp"
#include "levy/report.hpp"

namespace levy {

// Model specification JSON, e.g. {"family":"brownian","sigma":1.0,"drift":0.0}.
// Field names are documented in docs/formats.md.
inline LevyModel model_from_json(const nlohmann::json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "brownian")
    return LevyModel::brownian(j.at("sigma").get<double>(), j.at("drift").get<double>());
  if (family == "cauchy") return LevyModel::cauchy(j.at("scale").get<double>());
  if (family == "stable")
    return LevyModel::stable(j.at("alpha").get<double>(), j.at("beta").get<double>(),
                             j.at("scale").get<double>());
  if (family == "gamma") return LevyModel::gamma_subordinator();
  throw std::invalid_argument("unknown model family: " + family);
}

inline nlohmann::json model_to_json(const LevyModel& m) {
  nlohmann::json j;
  j["family"] = m.name();
  switch (m.family()) {
    case Family::brownian_drift:
      j["sigma"] = m.sigma();
      j["drift"] = m.drift();
      break;
    case Family::cauchy:
      j["scale"] = m.scale();
      break;
    case Family::stable:
      j["alpha"] = m.alpha();
      j["beta"] = m.beta();
      j["scale"] = m.scale();
      break;
    case Family::gamma_subordinator:
      break;
  }
  return j;
}

inline LevyModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  nlohmann::json j;
  in >> j;
  return model_from_json(j);
}

}  // namespace levy
