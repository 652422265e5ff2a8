// Copyright 2026 The jamgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jamgame/harness/scenario.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <random>
#include <sstream>

namespace jamgame::harness {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string Join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

void CheckKeys(const json& obj, const std::string& path,
               std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ScenarioError(path, "expected an object");
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw ScenarioError(Join(path, item.key()), "unknown key");
    }
  }
}

double AsNumber(const json& value, const std::string& field) {
  if (!value.is_number()) throw ScenarioError(field, "expected a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) throw ScenarioError(field, "must be finite");
  return x;
}

bool AsBool(const json& value, const std::string& field) {
  if (!value.is_boolean()) throw ScenarioError(field, "expected true or false");
  return value.get<bool>();
}

std::string AsString(const json& value, const std::string& field) {
  if (!value.is_string()) throw ScenarioError(field, "expected a string");
  return value.get<std::string>();
}

std::int64_t AsInteger(const json& value, const std::string& field) {
  if (value.is_number_integer()) return value.get<std::int64_t>();
  if (value.is_number_float()) {
    const double x = value.get<double>();
    if (std::isfinite(x) && x == std::floor(x) && std::abs(x) < 9e15) {
      return static_cast<std::int64_t>(x);
    }
  }
  throw ScenarioError(field, "expected an integer");
}

std::vector<double> AsVector(const json& value, const std::string& field) {
  if (!value.is_array()) throw ScenarioError(field, "expected an array");
  std::vector<double> out;
  for (size_t i = 0; i < value.size(); ++i) {
    out.push_back(AsNumber(value[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Eigen::MatrixXd AsMatrix(const json& value, const std::string& field) {
  if (!value.is_array() || value.empty()) {
    throw ScenarioError(field, "expected a non-empty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(value.size());
  Eigen::MatrixXd m;
  for (Eigen::Index r = 0; r < rows; ++r) {
    const std::string row_field = field + "[" + std::to_string(r) + "]";
    const std::vector<double> row = AsVector(value[r], row_field);
    if (r == 0) m.resize(rows, static_cast<Eigen::Index>(row.size()));
    if (static_cast<Eigen::Index>(row.size()) != m.cols()) {
      throw ScenarioError(row_field, "ragged matrix row");
    }
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = row[c];
  }
  return m;
}

Point AsPoint(const json& value, const std::string& field) {
  const std::vector<double> xy = AsVector(value, field);
  if (xy.size() != 2) throw ScenarioError(field, "expected [x, y]");
  return {xy[0], xy[1]};
}

template <typename T>
const json* Find(const json& obj, const T& key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const json& Require(const json& obj, const std::string& path,
                    const char* key) {
  const json* v = Find(obj, key);
  if (v == nullptr) throw ScenarioError(Join(path, key), "missing required key");
  return *v;
}

std::optional<CostCategory> ParseCategory(std::string_view name) {
  if (name == "connectivity") return CostCategory::kConnectivity;
  if (name == "throughput") return CostCategory::kThroughput;
  return std::nullopt;
}

RandomGainSpec ParseRandomGains(const json& obj, const std::string& path) {
  CheckKeys(obj, path,
            {"seed", "distribution", "low", "high", "mean", "symmetric"});
  RandomGainSpec spec;
  const json& seed = Require(obj, path, "seed");
  if (!seed.is_number_unsigned()) {
    throw ScenarioError(Join(path, "seed"), "expected a non-negative integer");
  }
  spec.seed = seed.get<std::uint64_t>();
  if (const json* v = Find(obj, "distribution")) {
    spec.distribution = AsString(*v, Join(path, "distribution"));
  }
  if (spec.distribution != "uniform" && spec.distribution != "exponential") {
    throw ScenarioError(Join(path, "distribution"),
                        "must be \"uniform\" or \"exponential\"");
  }
  if (const json* v = Find(obj, "low")) spec.low = AsNumber(*v, Join(path, "low"));
  if (const json* v = Find(obj, "high")) {
    spec.high = AsNumber(*v, Join(path, "high"));
  }
  if (const json* v = Find(obj, "mean")) {
    spec.mean = AsNumber(*v, Join(path, "mean"));
  }
  if (const json* v = Find(obj, "symmetric")) {
    spec.symmetric = AsBool(*v, Join(path, "symmetric"));
  }
  if (spec.distribution == "uniform" && !(spec.low >= 0.0 && spec.high >= spec.low)) {
    throw ScenarioError(Join(path, "low"), "need 0 <= low <= high");
  }
  if (spec.distribution == "exponential" && !(spec.mean > 0.0)) {
    throw ScenarioError(Join(path, "mean"), "must be > 0");
  }
  return spec;
}

Eigen::MatrixXd ExpandPowers(const NetworkSpec& net) {
  return NetworkModel::UniformPowerMatrix(*net.node_powers);
}

NetworkSpec ParseNetwork(const json& obj) {
  const std::string path = "network";
  CheckKeys(obj, path,
            {"n", "positions", "h", "h_random", "powers", "sigma2", "omega"});
  NetworkSpec net;
  const std::int64_t n = AsInteger(Require(obj, path, "n"), "network.n");
  if (n < 3 || n > 4096) throw ScenarioError("network.n", "must lie in [3, 4096]");
  net.n = static_cast<int>(n);

  if (const json* v = Find(obj, "positions")) {
    if (!v->is_array()) throw ScenarioError("network.positions", "expected an array");
    for (size_t i = 0; i < v->size(); ++i) {
      net.positions.push_back(
          AsPoint((*v)[i], "network.positions[" + std::to_string(i) + "]"));
    }
  }

  const json* h = Find(obj, "h");
  const json* h_random = Find(obj, "h_random");
  if ((h == nullptr) == (h_random == nullptr)) {
    throw ScenarioError("network.h", "supply exactly one of h and h_random");
  }
  if (h != nullptr) {
    net.h = AsMatrix(*h, "network.h");
  } else {
    net.h_random = ParseRandomGains(*h_random, "network.h_random");
    net.h = GenerateGains(net.n, *net.h_random);
  }

  const json& powers = Require(obj, path, "powers");
  if (powers.is_array() && !powers.empty() && powers[0].is_array()) {
    net.powers = AsMatrix(powers, "network.powers");
  } else {
    net.node_powers = AsVector(powers, "network.powers");
    if (static_cast<int>(net.node_powers->size()) != net.n) {
      throw ScenarioError("network.powers", "expected " + std::to_string(n) +
                                                " per-node powers");
    }
    net.powers = ExpandPowers(net);
  }
  if (const json* v = Find(obj, "sigma2")) {
    net.sigma2 = AsNumber(*v, "network.sigma2");
  }
  net.omega = AsNumber(Require(obj, path, "omega"), "network.omega");
  return net;
}

void ParseCategoryGame(const json& obj, const std::string& path,
                       CategoryGame& game) {
  if (const json* v = Find(obj, "C_h")) game.C_h = AsNumber(*v, Join(path, "C_h"));
  if (const json* v = Find(obj, "gamma")) {
    game.gamma = AsNumber(*v, Join(path, "gamma"));
    game.alpha.reset();
    game.delta.reset();
  }
  const json* alpha = Find(obj, "alpha");
  const json* delta = Find(obj, "delta");
  if (alpha != nullptr || delta != nullptr) {
    if (Find(obj, "gamma") != nullptr) {
      throw ScenarioError(Join(path, "gamma"),
                          "supply either gamma or alpha and delta, not both");
    }
    if (alpha == nullptr || delta == nullptr) {
      throw ScenarioError(Join(path, alpha ? "delta" : "alpha"),
                          "alpha and delta must be given together");
    }
    game.alpha = AsNumber(*alpha, Join(path, "alpha"));
    game.delta = AsNumber(*delta, Join(path, "delta"));
    game.gamma.reset();
  }
}

GameSpec ParseGame(const json& obj) {
  CheckKeys(obj, "game", {"C_h", "gamma", "alpha", "delta", "connectivity",
                          "throughput"});
  CategoryGame shared;
  bool has_shared_c = Find(obj, "C_h") != nullptr;
  ParseCategoryGame(obj, "game", shared);
  GameSpec game{shared, shared};
  for (CostCategory category :
       {CostCategory::kConnectivity, CostCategory::kThroughput}) {
    const std::string name(CategoryName(category));
    const std::string path = "game." + name;
    const json* override = Find(obj, name);
    bool has_c = has_shared_c;
    if (override != nullptr) {
      CheckKeys(*override, path, {"C_h", "gamma", "alpha", "delta"});
      ParseCategoryGame(*override, path, game.For(category));
      has_c = has_c || Find(*override, "C_h") != nullptr;
    }
    if (!has_c) throw ScenarioError(path + ".C_h", "missing required key");
    const CategoryGame& g = game.For(category);
    if (!g.gamma && !g.alpha) {
      throw ScenarioError(path + ".gamma",
                          "supply gamma, or alpha and delta");
    }
  }
  return game;
}

std::vector<SweepAxis> ParseAxes(const json& value) {
  if (!value.is_array()) throw ScenarioError("sweep.axes", "expected an array");
  std::vector<SweepAxis> axes;
  for (size_t i = 0; i < value.size(); ++i) {
    const std::string path = "sweep.axes[" + std::to_string(i) + "]";
    const json& obj = value[i];
    CheckKeys(obj, path, {"param", "values", "linspace", "logspace"});
    SweepAxis axis;
    axis.param = AsString(Require(obj, path, "param"), Join(path, "param"));
    int kinds = 0;
    for (const char* kind : {"values", "linspace", "logspace"}) {
      if (const json* v = Find(obj, kind)) {
        ++kinds;
        axis.kind = kind;
        axis.args = AsVector(*v, Join(path, kind));
      }
    }
    if (kinds != 1) {
      throw ScenarioError(path, "supply exactly one of values, linspace, logspace");
    }
    axis.values = ExpandAxis(axis.kind, axis.args, Join(path, axis.kind));
    axes.push_back(std::move(axis));
  }
  return axes;
}

SweepSpec ParseSweep(const json& obj) {
  CheckKeys(obj, "sweep", {"mode", "axes", "category", "tol"});
  SweepSpec sweep;
  if (const json* v = Find(obj, "mode")) {
    const std::string mode = AsString(*v, "sweep.mode");
    if (mode == "grid") {
      sweep.mode = SweepMode::kGrid;
    } else if (mode == "trace") {
      sweep.mode = SweepMode::kTrace;
    } else {
      throw ScenarioError("sweep.mode", "must be \"grid\" or \"trace\"");
    }
  }
  if (const json* v = Find(obj, "axes")) sweep.axes = ParseAxes(*v);
  if (const json* v = Find(obj, "category")) {
    const auto c = ParseCategory(AsString(*v, "sweep.category"));
    if (!c) {
      throw ScenarioError("sweep.category",
                          "must be \"connectivity\" or \"throughput\"");
    }
    sweep.category = *c;
  }
  if (const json* v = Find(obj, "tol")) {
    sweep.tol = AsNumber(*v, "sweep.tol");
    if (!(sweep.tol > 0.0)) throw ScenarioError("sweep.tol", "must be > 0");
  }
  return sweep;
}

ordered_json MatrixToJson(const Eigen::MatrixXd& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json CategoryGameToJson(const CategoryGame& g) {
  ordered_json out;
  out["C_h"] = g.C_h;
  if (g.gamma) {
    out["gamma"] = *g.gamma;
  } else {
    out["alpha"] = *g.alpha;
    out["delta"] = *g.delta;
  }
  return out;
}

// Rewrites "h: ..." style messages from the model into scenario fields.
[[noreturn]] void RethrowModelError(const std::exception& e) {
  const std::string message = e.what();
  const auto colon = message.find(':');
  const std::string prefix = message.substr(0, colon);
  static const std::pair<const char*, const char*> kFields[] = {
      {"h", "network.h"},           {"P", "network.powers"},
      {"sigma2", "network.sigma2"}, {"omega", "network.omega"},
      {"positions", "network.positions"}, {"C_h", "game.C_h"},
      {"gamma", "game.gamma"},      {"alpha", "game.alpha"},
      {"delta", "game.delta"}};
  for (const auto& [name, field] : kFields) {
    if (colon != std::string::npos && prefix == name) {
      throw ScenarioError(field, message.substr(colon + 2));
    }
  }
  throw ScenarioError("", message);
}

bool IsFlat(const ordered_json& value) {
  return std::none_of(value.begin(), value.end(), [](const ordered_json& v) {
    return v.is_structured();
  });
}

void DumpTo(const ordered_json& value, int indent, std::string& out) {
  const std::string pad(indent + 2, ' ');
  if (value.is_object() && !value.empty()) {
    out += "{\n";
    bool first = true;
    for (const auto& item : value.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + ordered_json(item.key()).dump() + ": ";
      DumpTo(item.value(), indent + 2, out);
    }
    out += "\n" + std::string(indent, ' ') + "}";
  } else if (value.is_array() && !value.empty() && !IsFlat(value)) {
    out += "[\n";
    for (size_t i = 0; i < value.size(); ++i) {
      if (i > 0) out += ",\n";
      out += pad;
      DumpTo(value[i], indent + 2, out);
    }
    out += "\n" + std::string(indent, ' ') + "]";
  } else if (value.is_array()) {
    out += "[";
    for (size_t i = 0; i < value.size(); ++i) {
      if (i > 0) out += ", ";
      out += value[i].dump();
    }
    out += "]";
  } else {
    out += value.dump();
  }
}

}  // namespace

std::string DumpJson(const ordered_json& doc) {
  std::string out;
  DumpTo(doc, 0, out);
  out += '\n';
  return out;
}

Eigen::MatrixXd GenerateGains(int n, const RandomGainSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  auto draw = [&] {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (spec.distribution == "exponential") return -spec.mean * std::log1p(-u);
    return spec.low + (spec.high - spec.low) * u;
  };
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = spec.symmetric ? i + 1 : 0; j < n; ++j) {
      if (i == j) continue;
      h(i, j) = draw();
      if (spec.symmetric) h(j, i) = h(i, j);
    }
  }
  return h;
}

GameParameters CategoryGame::Resolve() const {
  try {
    if (gamma) return GameParameters::FromGamma(C_h, *gamma);
    return GameParameters::FromDetection(C_h, alpha.value(), delta.value());
  } catch (const std::bad_optional_access&) {
    throw ScenarioError("game.gamma", "supply gamma, or alpha and delta");
  }
}

const CategoryGame& GameSpec::For(CostCategory category) const {
  return category == CostCategory::kConnectivity ? connectivity : throughput;
}

CategoryGame& GameSpec::For(CostCategory category) {
  return category == CostCategory::kConnectivity ? connectivity : throughput;
}

NetworkModel Scenario::BuildNetwork() const {
  if (!network) throw ScenarioError("network", "scenario has no network");
  return NetworkModel(network->h, network->powers, network->sigma2,
                      network->omega, flags.include_interference,
                      network->positions);
}

std::optional<JammerModel> Scenario::BuildJammer() const {
  if (!jammer) return std::nullopt;
  return JammerModel(jammer->position, jammer->J, jammer->g);
}

std::vector<CostCategory> Scenario::Categories() const {
  if (costs) return {costs->category};
  return {CostCategory::kConnectivity, CostCategory::kThroughput};
}

std::vector<double> ExpandAxis(const std::string& kind,
                               const std::vector<double>& args,
                               const std::string& field) {
  if (kind == "values") {
    if (args.empty()) throw ScenarioError(field, "empty value list");
    return args;
  }
  if (args.size() != 3 || args[2] != std::floor(args[2]) || args[2] < 1 ||
      args[2] > 1e6) {
    throw ScenarioError(field, "expected [start, stop, count] with count >= 1");
  }
  const double start = args[0];
  const double stop = args[1];
  const int count = static_cast<int>(args[2]);
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = count == 1 ? start
             : i == count - 1
                 ? stop
                 : start + (stop - start) * static_cast<double>(i) / (count - 1);
  }
  if (kind == "logspace") {
    for (double& x : out) x = std::pow(10.0, x);
  }
  return out;
}

void ApplyParameter(Scenario& scenario, const std::string& param,
                    double value) {
  auto need_network = [&]() -> NetworkSpec& {
    if (!scenario.network) {
      throw ScenarioError("sweep.axes", "parameter " + param + " needs a network");
    }
    return *scenario.network;
  };
  if (param == "omega") {
    need_network().omega = value;
  } else if (param == "sigma2") {
    need_network().sigma2 = value;
  } else if (param == "gamma") {
    for (CategoryGame* g : {&scenario.game.connectivity, &scenario.game.throughput}) {
      g->gamma = value;
      g->alpha.reset();
      g->delta.reset();
    }
  } else if (param == "C_h") {
    scenario.game.connectivity.C_h = value;
    scenario.game.throughput.C_h = value;
  } else if (param == "J") {
    if (!scenario.jammer) {
      throw ScenarioError("sweep.axes", "parameter J needs a jammer");
    }
    scenario.jammer->J = value;
  } else if (param.size() > 1 && param[0] == 'P' &&
             std::all_of(param.begin() + 1, param.end(),
                         [](char ch) { return ch >= '0' && ch <= '9'; })) {
    NetworkSpec& net = need_network();
    if (!net.node_powers) {
      throw ScenarioError("sweep.axes",
                          "parameter " + param + " needs per-node powers");
    }
    const int node = std::stoi(param.substr(1));
    if (node < 1 || node > net.n) {
      throw ScenarioError("sweep.axes", "node index out of range in " + param);
    }
    (*net.node_powers)[node - 1] = value;
    net.powers = ExpandPowers(net);
  } else {
    throw ScenarioError("sweep.axes", "unknown parameter \"" + param + "\"");
  }
}

void ValidateScenario(const Scenario& s) {
  if (s.schema_version != kSchemaVersion) {
    throw ScenarioError("schema_version",
                        "unsupported version " + std::to_string(s.schema_version));
  }
  if (s.network.has_value() == s.costs.has_value()) {
    throw ScenarioError("network", "supply exactly one of network and costs");
  }
  std::optional<double> shared_gamma;
  for (CostCategory category : s.Categories()) {
    try {
      const double gamma = s.game.For(category).Resolve().gamma();
      if (shared_gamma && *shared_gamma != gamma) {
        throw ScenarioError("game.gamma",
                            "both categories must resolve to the same gamma");
      }
      shared_gamma = gamma;
    } catch (const std::invalid_argument& e) {
      RethrowModelError(e);
    }
  }
  if (s.costs) {
    try {
      CostVector(s.costs->category, s.costs->values);
    } catch (const std::exception& e) {
      throw ScenarioError("costs.values", e.what());
    }
  }
  if (s.network) {
    const NetworkSpec& net = s.network.value();
    if (net.h.rows() != net.n || net.h.cols() != net.n) {
      throw ScenarioError("network.h", "expected a " + std::to_string(net.n) +
                                           "x" + std::to_string(net.n) +
                                           " matrix");
    }
    if (net.powers.rows() != net.n || net.powers.cols() != net.n) {
      throw ScenarioError("network.powers",
                          "expected " + std::to_string(net.n) + "x" +
                              std::to_string(net.n) + " powers");
    }
    if (!net.positions.empty() && static_cast<int>(net.positions.size()) != net.n) {
      throw ScenarioError("network.positions",
                          "expected " + std::to_string(net.n) + " positions");
    }
    try {
      s.BuildNetwork();
    } catch (const std::invalid_argument& e) {
      RethrowModelError(e);
    }
  }
  if (s.jammer) {
    if (!s.network || s.network->positions.empty()) {
      throw ScenarioError("jammer", "a jammer needs network positions");
    }
    if (static_cast<int>(s.jammer->g.size()) != s.network->n) {
      throw ScenarioError("jammer.g", "expected one gain per node");
    }
    if (!(s.jammer->J >= 0.0)) throw ScenarioError("jammer.J", "must be >= 0");
    for (double g : s.jammer->g) {
      if (!(g >= 0.0)) throw ScenarioError("jammer.g", "gains must be >= 0");
    }
  }
  if (s.sweep) {
    if (s.sweep->mode == SweepMode::kTrace) {
      if (!s.sweep->axes.empty()) {
        throw ScenarioError("sweep.axes", "trace mode takes no axes");
      }
      const auto categories = s.Categories();
      if (std::find(categories.begin(), categories.end(), s.sweep->category) ==
          categories.end()) {
        throw ScenarioError("sweep.category", "category not available");
      }
      if (!(s.game.For(s.sweep->category).Resolve().gamma() > 0.0)) {
        throw ScenarioError("game.gamma", "trace mode needs gamma > 0");
      }
    }
  }
}

Scenario ScenarioFromJson(const json& doc) {
  CheckKeys(doc, "", {"schema_version", "network", "costs", "jammer", "game",
                      "flags", "sweep"});
  Scenario s;
  s.schema_version = static_cast<int>(
      AsInteger(Require(doc, "", "schema_version"), "schema_version"));
  if (s.schema_version != kSchemaVersion) {
    throw ScenarioError("schema_version", "unsupported version " +
                                              std::to_string(s.schema_version));
  }
  if (const json* v = Find(doc, "network")) s.network = ParseNetwork(*v);
  if (const json* v = Find(doc, "costs")) {
    CheckKeys(*v, "costs", {"category", "values"});
    InjectedCosts costs;
    if (const json* c = Find(*v, "category")) {
      const auto category = ParseCategory(AsString(*c, "costs.category"));
      if (!category) {
        throw ScenarioError("costs.category",
                            "must be \"connectivity\" or \"throughput\"");
      }
      costs.category = *category;
    }
    costs.values = AsVector(Require(*v, "costs", "values"), "costs.values");
    s.costs = std::move(costs);
  }
  if (const json* v = Find(doc, "jammer")) {
    CheckKeys(*v, "jammer", {"position", "J", "g"});
    JammerSpec jammer;
    jammer.position = AsPoint(Require(*v, "jammer", "position"), "jammer.position");
    jammer.J = AsNumber(Require(*v, "jammer", "J"), "jammer.J");
    if (const json* g = Find(*v, "g")) {
      jammer.g = AsVector(*g, "jammer.g");
    } else if (s.network) {
      jammer.g.assign(s.network->n, 1.0);
    }
    s.jammer = std::move(jammer);
  }
  s.game = ParseGame(Require(doc, "", "game"));
  if (const json* v = Find(doc, "flags")) {
    CheckKeys(*v, "flags", {"include_interference", "throughput_on_links_only"});
    if (const json* f = Find(*v, "include_interference")) {
      s.flags.include_interference = AsBool(*f, "flags.include_interference");
    }
    if (const json* f = Find(*v, "throughput_on_links_only")) {
      s.flags.throughput_on_links_only =
          AsBool(*f, "flags.throughput_on_links_only");
    }
  }
  if (const json* v = Find(doc, "sweep")) s.sweep = ParseSweep(*v);

  ValidateScenario(s);
  // Every grid coordinate must itself give a valid scenario.
  if (s.sweep) {
    for (const SweepAxis& axis : s.sweep->axes) {
      for (double value : axis.values) {
        Scenario probe = s;
        ApplyParameter(probe, axis.param, value);
        try {
          ValidateScenario(probe);
        } catch (const ScenarioError& e) {
          throw ScenarioError(e.field(), std::string(e.what()) + " (sweep " +
                                             axis.param + " value)");
        }
      }
    }
  }
  return s;
}

Scenario ParseScenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const size_t offset = std::min<size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + offset, '\n');
    const size_t line_start = text.rfind('\n', offset == 0 ? 0 : offset - 1);
    const size_t column =
        offset - (line_start == std::string_view::npos ? 0 : line_start + 1) + 1;
    std::ostringstream msg;
    msg << "parse error at line " << line << ", column " << column;
    throw ScenarioError("", msg.str());
  }
  return ScenarioFromJson(doc);
}

Scenario LoadScenario(const std::filesystem::path& path) {
  return ParseScenario(ReadFile(path));
}

ordered_json ScenarioToJson(const Scenario& s) {
  ordered_json out;
  out["schema_version"] = s.schema_version;
  if (s.network) {
    const NetworkSpec& net = *s.network;
    ordered_json n;
    n["n"] = net.n;
    if (!net.positions.empty()) {
      ordered_json pos = ordered_json::array();
      for (const Point& p : net.positions) pos.push_back({p.x, p.y});
      n["positions"] = std::move(pos);
    }
    if (net.h_random) {
      const RandomGainSpec& r = *net.h_random;
      ordered_json h;
      h["seed"] = r.seed;
      h["distribution"] = r.distribution;
      if (r.distribution == "uniform") {
        h["low"] = r.low;
        h["high"] = r.high;
      } else {
        h["mean"] = r.mean;
      }
      h["symmetric"] = r.symmetric;
      n["h_random"] = std::move(h);
    } else {
      n["h"] = MatrixToJson(net.h);
    }
    if (net.node_powers) {
      n["powers"] = *net.node_powers;
    } else {
      n["powers"] = MatrixToJson(net.powers);
    }
    n["sigma2"] = net.sigma2;
    n["omega"] = net.omega;
    out["network"] = std::move(n);
  }
  if (s.costs) {
    ordered_json c;
    c["category"] = std::string(CategoryName(s.costs->category));
    c["values"] = s.costs->values;
    out["costs"] = std::move(c);
  }
  if (s.jammer) {
    ordered_json j;
    j["position"] = {s.jammer->position.x, s.jammer->position.y};
    j["J"] = s.jammer->J;
    j["g"] = s.jammer->g;
    out["jammer"] = std::move(j);
  }
  ordered_json game;
  game["connectivity"] = CategoryGameToJson(s.game.connectivity);
  game["throughput"] = CategoryGameToJson(s.game.throughput);
  out["game"] = std::move(game);
  ordered_json flags;
  flags["include_interference"] = s.flags.include_interference;
  flags["throughput_on_links_only"] = s.flags.throughput_on_links_only;
  out["flags"] = std::move(flags);
  if (s.sweep) {
    ordered_json sweep;
    sweep["mode"] = s.sweep->mode == SweepMode::kGrid ? "grid" : "trace";
    if (s.sweep->mode == SweepMode::kTrace) {
      sweep["category"] = std::string(CategoryName(s.sweep->category));
      sweep["tol"] = s.sweep->tol;
    }
    ordered_json axes = ordered_json::array();
    for (const SweepAxis& axis : s.sweep->axes) {
      ordered_json a;
      a["param"] = axis.param;
      if (axis.kind == "values") {
        a[axis.kind] = axis.args;
      } else {
        a[axis.kind] = {axis.args[0], axis.args[1],
                        static_cast<std::int64_t>(axis.args[2])};
      }
      axes.push_back(std::move(a));
    }
    sweep["axes"] = std::move(axes);
    out["sweep"] = std::move(sweep);
  }
  return out;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path.string());
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace jamgame::harness
