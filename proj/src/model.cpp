#include "beamgeneric/model.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <sstream>

#include "beamgeneric/errors.hpp"

namespace beamgeneric {

namespace {

struct IdNames {
  ModelId id;
  std::string_view camel;
  std::string_view kebab;
};

constexpr std::array<IdNames, 10> kIds{{
    {ModelId::TimoshenkoUndamped, "TimoshenkoUndamped", "timoshenko-undamped"},
    {ModelId::TimoshenkoFrictional, "TimoshenkoFrictional", "timoshenko-frictional"},
    {ModelId::TimoshenkoHeatI, "TimoshenkoHeatI", "timoshenko-heat1"},
    {ModelId::TimoshenkoHeatII, "TimoshenkoHeatII", "timoshenko-heat2"},
    {ModelId::TimoshenkoHeatIII, "TimoshenkoHeatIII", "timoshenko-heat3"},
    {ModelId::TimoshenkoNew, "TimoshenkoNew", "timoshenko-new"},
    {ModelId::BresseUndamped, "BresseUndamped", "bresse-undamped"},
    {ModelId::BresseFrictional, "BresseFrictional", "bresse-frictional"},
    {ModelId::BresseHeatI, "BresseHeatI", "bresse-heat1"},
    {ModelId::BresseHeatII, "BresseHeatII", "bresse-heat2"},
}};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

struct ParamRef {
  std::string_view name;
  double ModelParams::*member;
};

constexpr std::array<ParamRef, 17> kParams{{
    {"k", &ModelParams::k},
    {"b", &ModelParams::b},
    {"k0", &ModelParams::k0},
    {"l", &ModelParams::l},
    {"delta1", &ModelParams::delta1},
    {"delta2", &ModelParams::delta2},
    {"gamma1", &ModelParams::gamma1},
    {"gamma2", &ModelParams::gamma2},
    {"gamma3", &ModelParams::gamma3},
    {"gamma", &ModelParams::gamma},
    {"delta", &ModelParams::delta},
    {"beta", &ModelParams::beta},
    {"kappa", &ModelParams::kappa},
    {"kappa1", &ModelParams::kappa1},
    {"kappa2", &ModelParams::kappa2},
    {"K", &ModelParams::K},
    {"alpha", &ModelParams::alpha},
}};

const ParamRef* find_param(std::string_view name) {
  for (const auto& p : kParams) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

}  // namespace

const std::vector<ModelId>& all_model_ids() {
  static const std::vector<ModelId> ids = [] {
    std::vector<ModelId> v;
    for (const auto& e : kIds) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::string_view to_string(ModelId id) {
  for (const auto& e : kIds) {
    if (e.id == id) return e.camel;
  }
  return "?";
}

std::optional<ModelId> parse_model_id(std::string_view text) {
  for (const auto& e : kIds) {
    if (iequals(text, e.camel) || iequals(text, e.kebab)) return e.id;
  }
  return std::nullopt;
}

bool is_bresse(ModelId id) {
  return id == ModelId::BresseUndamped || id == ModelId::BresseFrictional ||
         id == ModelId::BresseHeatI || id == ModelId::BresseHeatII;
}

bool is_damped(ModelId id) {
  return id != ModelId::TimoshenkoUndamped && id != ModelId::BresseUndamped;
}

const std::vector<std::string>& ModelParams::names() {
  static const std::vector<std::string> v = [] {
    std::vector<std::string> out;
    for (const auto& p : kParams) out.emplace_back(p.name);
    return out;
  }();
  return v;
}

void ModelParams::set(std::string_view name, double value) {
  const ParamRef* p = find_param(name);
  if (!p) throw ValidationError("unknown model parameter '" + std::string(name) + "'");
  this->*(p->member) = value;
}

double ModelParams::get(std::string_view name) const {
  const ParamRef* p = find_param(name);
  if (!p) throw ValidationError("unknown model parameter '" + std::string(name) + "'");
  return this->*(p->member);
}

void ModelParams::validate(ModelId id) const {
  std::vector<std::string> violations;
  for (const auto& p : kParams) {
    const double v = this->*(p.member);
    if (!std::isfinite(v)) {
      violations.push_back(std::string(p.name) + " must be finite");
    } else if (p.name != "alpha" && v < 0.0) {
      violations.push_back(std::string(p.name) + " must be >= 0");
    }
  }
  // A negative alpha would flip the sign of M and break positive semidefiniteness.
  if (std::isfinite(alpha) && !(alpha > 0.0)) violations.push_back("alpha must be > 0");
  auto require_positive = [&](std::string_view name, double v) {
    if (std::isfinite(v) && !(v > 0.0)) violations.push_back(std::string(name) + " must be > 0");
  };
  require_positive("k", k);
  require_positive("b", b);
  if (is_bresse(id)) {
    require_positive("k0", k0);
    require_positive("l", l);
  }
  if (!violations.empty()) {
    std::ostringstream os;
    os << "invalid parameters for " << to_string(id) << ":";
    for (const auto& v : violations) os << " " << v << ";";
    throw ValidationError(os.str());
  }
}

void Model::require_layout(const SlotVector& z) const {
  if (!(z.layout() == *layout_)) {
    throw StructuralError("state layout does not match model " + std::string(to_string(id_)));
  }
}

}  // namespace beamgeneric
