#pragma once

#include "encircle/channel.hpp"
#include "encircle/cmec.hpp"
#include "encircle/geom.hpp"
#include "encircle/random.hpp"

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace encircle {

/// Malformed scenario input; the message names the offending field or the
/// line/column of the JSON syntax error.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr double kDefaultAltitude = 100.0;

struct Scenario {
  std::vector<WeightedPointd> nodes;
  std::size_t capacity = 2;  // may exceed nodes.size(); acts as "all"
  double altitude = kDefaultAltitude;
  LosParamsd los;
  ChannelParamsd channel;
  Seed seed;
  Toleranced tolerance;

  bool operator==(const Scenario& other) const;
};

/// Throws ParseError if any invariant is violated.
void validate(const Scenario& scenario);

/// Parses scenario JSON. Missing `los`, `channel` and `seed` take the library
/// defaults; missing `tolerance` is derived from the node coordinates.
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::filesystem::path& path);

std::string scenario_to_json(const Scenario& scenario);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

/// `count` nodes uniform in [0, extent]^2 with weights uniform in [0, 1].
Scenario generate_scenario(std::size_t count, std::size_t capacity, double extent, Seed seed,
                           double altitude = kDefaultAltitude);

/// Writes `text` to `path`, throwing IoError on failure.
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace encircle
