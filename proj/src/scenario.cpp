#include "encircle/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace encircle {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ParseError(field + ": " + message);
}

const Json& require(const Json& object, const char* key, const std::string& field) {
  const auto it = object.find(key);
  if (it == object.end()) fail(field, "missing required field");
  return *it;
}

double read_number(const Json& value, const std::string& field) {
  if (!value.is_number()) fail(field, "expected a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) fail(field, "must be finite");
  return x;
}

std::uint64_t read_unsigned(const Json& value, const std::string& field) {
  if (!value.is_number_unsigned()) fail(field, "expected a nonnegative integer");
  return value.get<std::uint64_t>();
}

double number_field(const Json& object, const char* key, const std::string& prefix, double fallback) {
  const auto it = object.find(key);
  if (it == object.end()) return fallback;
  return read_number(*it, prefix + "." + key);
}

const Json* optional_object(const Json& root, const char* key) {
  const auto it = root.find(key);
  if (it == root.end()) return nullptr;
  if (!it->is_object()) fail(key, "expected an object");
  return &*it;
}

std::vector<Point2d> positions(const Scenario& s) {
  std::vector<Point2d> pts;
  pts.reserve(s.nodes.size());
  for (const auto& n : s.nodes) pts.push_back(n.point);
  return pts;
}

}  // namespace

bool Scenario::operator==(const Scenario& o) const {
  if (nodes.size() != o.nodes.size()) return false;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].point != o.nodes[i].point || nodes[i].weight != o.nodes[i].weight) return false;
  return capacity == o.capacity && altitude == o.altitude && los.a == o.los.a && los.b == o.los.b &&
         channel.beta0 == o.channel.beta0 && channel.alpha_los == o.channel.alpha_los &&
         channel.alpha_nlos == o.channel.alpha_nlos && channel.mu == o.channel.mu &&
         seed.value == o.seed.value && tolerance.eps_contain == o.tolerance.eps_contain &&
         tolerance.eps_degenerate == o.tolerance.eps_degenerate;
}

void validate(const Scenario& s) {
  if (s.nodes.size() < 2) fail("nodes", "at least two nodes are required");
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    const std::string field = "nodes[" + std::to_string(i) + "]";
    if (!is_finite(s.nodes[i].point)) fail(field, "coordinates must be finite");
    if (!std::isfinite(s.nodes[i].weight) || s.nodes[i].weight < 0.0) fail(field + ".w", "weight must be finite and >= 0");
  }
  if (s.capacity < 2) fail("capacity", "must be at least 2");
  if (!std::isfinite(s.altitude) || s.altitude <= 0.0) fail("altitude", "must be finite and > 0");
  if (!s.los.valid()) fail("los", "a and b must be finite and > 0");
  if (!s.channel.valid())
    fail("channel", "requires beta0 > 0, alpha_los >= 1, alpha_nlos >= alpha_los, 0 < mu <= 1");
  if (!s.tolerance.valid()) fail("tolerance", "requires eps_contain >= 0 and eps_degenerate > 0, both finite");
}

Scenario parse_scenario(std::string_view json_text) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    // e.what() carries "line L, column C".
    throw ParseError(std::string("json: ") + e.what());
  } catch (const Json::exception& e) {
    // Number overflow and similar lexer-level failures.
    throw ParseError(std::string("json: ") + e.what());
  }
  if (!root.is_object()) fail("scenario", "expected a JSON object at top level");

  Scenario s;
  const Json& nodes = require(root, "nodes", "nodes");
  if (!nodes.is_array()) fail("nodes", "expected an array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string field = "nodes[" + std::to_string(i) + "]";
    const Json& node = nodes[i];
    if (!node.is_object()) fail(field, "expected an object");
    WeightedPointd wp;
    wp.point.x() = read_number(require(node, "x", field + ".x"), field + ".x");
    wp.point.y() = read_number(require(node, "y", field + ".y"), field + ".y");
    wp.weight = read_number(require(node, "w", field + ".w"), field + ".w");
    if (wp.weight < 0.0) fail(field + ".w", "weight must be >= 0");
    s.nodes.push_back(wp);
  }

  s.capacity = static_cast<std::size_t>(read_unsigned(require(root, "capacity", "capacity"), "capacity"));
  s.altitude = read_number(require(root, "altitude", "altitude"), "altitude");

  if (const Json* los = optional_object(root, "los")) {
    s.los.a = number_field(*los, "a", "los", s.los.a);
    s.los.b = number_field(*los, "b", "los", s.los.b);
  }
  if (const Json* ch = optional_object(root, "channel")) {
    s.channel.beta0 = number_field(*ch, "beta0", "channel", s.channel.beta0);
    s.channel.alpha_los = number_field(*ch, "alpha_los", "channel", s.channel.alpha_los);
    s.channel.alpha_nlos = number_field(*ch, "alpha_nlos", "channel", s.channel.alpha_nlos);
    s.channel.mu = number_field(*ch, "mu", "channel", s.channel.mu);
  }
  if (const auto it = root.find("seed"); it != root.end()) s.seed.value = read_unsigned(*it, "seed");

  const auto pts = positions(s);
  s.tolerance = Toleranced::for_points(pts);
  if (const Json* tol = optional_object(root, "tolerance")) {
    s.tolerance.eps_contain = number_field(*tol, "eps_contain", "tolerance", s.tolerance.eps_contain);
    s.tolerance.eps_degenerate = number_field(*tol, "eps_degenerate", "tolerance", s.tolerance.eps_degenerate);
  }

  validate(s);
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path.string());
  return parse_scenario(buffer.str());
}

std::string scenario_to_json(const Scenario& s) {
  Json root;
  Json nodes = Json::array();
  for (const auto& n : s.nodes) nodes.push_back({{"x", n.point.x()}, {"y", n.point.y()}, {"w", n.weight}});
  root["nodes"] = std::move(nodes);
  root["capacity"] = s.capacity;
  root["altitude"] = s.altitude;
  root["los"] = {{"a", s.los.a}, {"b", s.los.b}};
  root["channel"] = {{"beta0", s.channel.beta0},
                     {"alpha_los", s.channel.alpha_los},
                     {"alpha_nlos", s.channel.alpha_nlos},
                     {"mu", s.channel.mu}};
  root["seed"] = s.seed.value;
  root["tolerance"] = {{"eps_contain", s.tolerance.eps_contain}, {"eps_degenerate", s.tolerance.eps_degenerate}};
  return root.dump(2) + "\n";
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) { write_text(path, scenario_to_json(s)); }

Scenario generate_scenario(std::size_t count, std::size_t capacity, double extent, Seed seed, double altitude) {
  if (count < 2) throw std::invalid_argument("generate_scenario: count must be at least 2");
  if (!std::isfinite(extent) || extent < 0.0) throw std::invalid_argument("generate_scenario: extent must be >= 0");

  Scenario s;
  s.capacity = capacity;
  s.altitude = altitude;
  s.seed = seed;
  Stream stream = make_stream(seed);
  s.nodes.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    WeightedPointd wp;
    wp.point.x() = extent * uniform01(stream);
    wp.point.y() = extent * uniform01(stream);
    wp.weight = uniform01(stream);
    s.nodes.push_back(wp);
  }
  const auto pts = positions(s);
  s.tolerance = Toleranced::for_points(pts);
  validate(s);
  return s;
}

}  // namespace encircle
