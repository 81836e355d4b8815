#pragma once

// Numerical settings shared by the command-line pipeline, read from a
// line-oriented `key = value` file with `#` comments.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "sgb/bounds.hpp"
#include "sgb/eigensolver.hpp"
#include "sgb/error.hpp"

namespace sgb {

struct Settings {
  std::size_t grid_points = 4096;
  double golden_tol = 1e-9;
  double ode_step = 1e-3;
  double eig_tol = 1e-8;
  std::uint64_t eig_seed = 20240607;
  int iter_cap = 5000;

  SupremumOptions supremum() const { return {grid_points, golden_tol}; }
  EigenOptions eigen() const {
    EigenOptions o;
    o.tol = eig_tol;
    o.seed = eig_seed;
    o.iter_cap = iter_cap;
    return o;
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_setting(std::string_view key, std::string_view text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ValidationError("config: bad value '" + std::string(text) + "' for key '" + std::string(key) + "'");
  return value;
}

}  // namespace detail

/// Applies one `key = value` assignment.
inline void apply_setting(Settings& s, std::string_view key, std::string_view value) {
  if (key == "grid_points") {
    s.grid_points = detail::parse_setting<std::size_t>(key, value);
  } else if (key == "golden_tol") {
    s.golden_tol = detail::parse_setting<double>(key, value);
  } else if (key == "ode_step") {
    s.ode_step = detail::parse_setting<double>(key, value);
  } else if (key == "eig_tol") {
    s.eig_tol = detail::parse_setting<double>(key, value);
  } else if (key == "eig_seed") {
    s.eig_seed = detail::parse_setting<std::uint64_t>(key, value);
  } else if (key == "iter_cap") {
    s.iter_cap = detail::parse_setting<int>(key, value);
  } else {
    throw ValidationError("config: unknown key '" + std::string(key) + "'");
  }
}

inline void validate(const Settings& s) {
  if (s.grid_points < 4096) throw ValidationError("config: grid_points >= 4096 required");
  if (!(s.golden_tol > 0.0)) throw ValidationError("config: golden_tol > 0 required");
  if (!(s.ode_step > 0.0)) throw ValidationError("config: ode_step > 0 required");
  if (!(s.eig_tol > 1e-14 && s.eig_tol < 1e-4)) throw ValidationError("config: eig_tol must lie in (1e-14, 1e-4)");
  if (s.iter_cap < 1) throw ValidationError("config: iter_cap >= 1 required");
}

/// Parses config text on top of `base`. Pass check = false when further
/// overrides are still to come; call validate() afterwards.
inline Settings parse_settings(std::string_view text, Settings base = {}, bool check = true) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ValidationError("config: line " + std::to_string(line_no) + " is not of the form key = value");
    apply_setting(base, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
  }
  if (check) validate(base);
  return base;
}

inline Settings load_settings(const std::string& path, Settings base = {}, bool check = true) {
  std::ifstream is(path);
  if (!is) throw ValidationError("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_settings(ss.str(), base, check);
}

}  // namespace sgb
