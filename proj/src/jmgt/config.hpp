// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef JMGT_CONFIG_HPP
#define JMGT_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fourier.hpp"
#include "model.hpp"
#include "nonlinear.hpp"
#include "studies.hpp"

namespace jmgt
{

struct ConfigEntry
{
  std::string value;
  int line = 0;  // 0 for command-line overrides
};

// Untyped section -> key -> value tree in INI syntax.
struct RawConfig
{
  std::map<std::string, std::map<std::string, ConfigEntry>> sections;
  std::string base_dir = ".";

  // "section.key" with the key after the last dot, e.g. "bc.left.gamma".
  void set(std::string_view dotted_key, std::string value);
  void apply_override(std::string_view assignment);  // "section.key=value"
};

RawConfig parse_config(std::string_view text, std::string base_dir = ".");
RawConfig load_config(const std::string &path);

struct ForcingSpec
{
  std::optional<ManufacturedCase> manufactured;
  double amplitude = 1e-3;
  std::string profile = "sine";
  std::vector<double> amplitudes;  // per harmonic, starting at m = 0
};

struct StudySettings
{
  std::vector<double> taus{0.4, 0.2, 0.1, 0.05, 0.025, 0.0};
  std::vector<double> eps{1e-2, 1e-3, 1e-4};
  std::vector<int> grids{65, 129, 257};
  int steps_per_period = 512;
  int max_periods = 200;
  double period_tol = 1e-8;
  std::string direction_profile = "sine2";
  int direction_harmonic = 1;
  double taylor_tol = 1e-14;
};

struct RunConfig
{
  Model model;
  EquationKind kind = EquationKind::Linear;
  ForcingSpec forcing;
  FixedPointOptions solver;
  StudySettings study;
  std::string hash;
};

// Typed view of a raw tree. Unknown sections or keys raise UnknownKey,
// unparsable values TypeMismatch. Structural validation is separate.
RunConfig build_config(const RawConfig &raw);

std::string_view to_string(EquationKind kind) noexcept;
EquationKind parse_equation(std::string_view name);

// Real nodal profile by name: sine, sine2, gaussian, bump, constant.
RVector spatial_profile(const Grid &grid, std::string_view name);

HarmonicField build_forcing(const RunConfig &cfg);

// Unit-size probe along direction_profile at direction_harmonic.
HarmonicField build_direction(const RunConfig &cfg);

}  // namespace jmgt

#endif  // JMGT_CONFIG_HPP
