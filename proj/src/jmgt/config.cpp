// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#include "config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace jmgt
{

namespace
{

std::string trim(std::string_view s)
{
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string where(const std::string &section, const std::string &key, const ConfigEntry &e)
{
  std::string s = "[" + section + "] " + key;
  s += e.line > 0 ? " (line " + std::to_string(e.line) + ")" : " (override)";
  return s;
}

const std::map<std::string, std::set<std::string>> &schema()
{
  static const std::map<std::string, std::set<std::string>> s{
      {"domain", {"L", "Nx"}},
      {"time", {"T", "M"}},
      {"physics", {"model", "tau", "taubar", "b", "c2", "eta", "eta_tilde"}},
      {"bc.left", {"kind", "beta", "gamma"}},
      {"bc.right", {"kind", "beta", "gamma"}},
      {"forcing", {"case", "amplitude", "profile", "amplitudes"}},
      {"solver", {"tol", "max_iter", "relaxation", "degeneracy_floor", "ball_radius"}},
      {"study",
       {"taus", "eps", "grids", "steps_per_period", "max_periods", "period_tol", "direction_profile",
        "direction_harmonic", "taylor_tol"}},
  };
  return s;
}

bool parse_double(const std::string &text, double &out)
{
  if (text.empty())
    return false;
  errno = 0;
  char *end = nullptr;
  out = std::strtod(text.c_str(), &end);
  return errno == 0 && end == text.c_str() + text.size() && std::isfinite(out);
}

std::vector<std::string> split_list(const std::string &text)
{
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(trim(item));
  return out;
}

class Reader
{
public:
  explicit Reader(const RawConfig &raw) : raw_(raw) {}

  const ConfigEntry *find(const std::string &section, const std::string &key) const
  {
    const auto s = raw_.sections.find(section);
    if (s == raw_.sections.end())
      return nullptr;
    const auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
  }

  double number(const std::string &section, const std::string &key, double fallback) const
  {
    const ConfigEntry *e = find(section, key);
    if (!e)
      return fallback;
    double v = 0.0;
    if (!parse_double(e->value, v))
      throw Error(ErrorKind::TypeMismatch, where(section, key, *e) + ": expected a number, got '" + e->value + "'");
    return v;
  }

  int integer(const std::string &section, const std::string &key, int fallback) const
  {
    const ConfigEntry *e = find(section, key);
    if (!e)
      return fallback;
    double v = 0.0;
    if (!parse_double(e->value, v) || v != std::floor(v) || std::abs(v) > 1e9)
      throw Error(ErrorKind::TypeMismatch, where(section, key, *e) + ": expected an integer, got '" + e->value + "'");
    return static_cast<int>(v);
  }

  std::string text(const std::string &section, const std::string &key, const std::string &fallback) const
  {
    const ConfigEntry *e = find(section, key);
    return e ? e->value : fallback;
  }

  std::vector<double> numbers(const std::string &section, const std::string &key,
                              std::vector<double> fallback) const
  {
    const ConfigEntry *e = find(section, key);
    if (!e)
      return fallback;
    std::vector<double> out;
    for (const auto &item : split_list(e->value))
    {
      double v = 0.0;
      if (!parse_double(item, v))
        throw Error(ErrorKind::TypeMismatch,
                    where(section, key, *e) + ": expected a comma-separated list of numbers, got '" + e->value + "'");
      out.push_back(v);
    }
    return out;
  }

  std::vector<int> integers(const std::string &section, const std::string &key, std::vector<int> fallback) const
  {
    const ConfigEntry *e = find(section, key);
    if (!e)
      return fallback;
    std::vector<int> out;
    for (double v : numbers(section, key, {}))
    {
      if (v != std::floor(v) || std::abs(v) > 1e9)
        throw Error(ErrorKind::TypeMismatch, where(section, key, *e) + ": expected integers");
      out.push_back(static_cast<int>(v));
    }
    return out;
  }

  // Scalar broadcast or a whitespace-separated file of exactly `nodes` values.
  RVector coefficient(const std::string &key, double fallback, int nodes) const
  {
    const ConfigEntry *e = find("physics", key);
    if (!e)
      return RVector::Constant(nodes, fallback);
    double v = 0.0;
    if (parse_double(e->value, v))
      return RVector::Constant(nodes, v);
    std::filesystem::path path(e->value);
    if (path.is_relative())
      path = std::filesystem::path(raw_.base_dir) / path;
    std::ifstream in(path);
    if (!in)
      throw Error(ErrorKind::IoError, where("physics", key, *e) + ": cannot read coefficient file " + path.string());
    std::vector<double> values;
    std::string token;
    while (in >> token)
    {
      double x = 0.0;
      if (!parse_double(token, x))
        throw Error(ErrorKind::TypeMismatch, "coefficient file " + path.string() + ": bad number '" + token + "'");
      values.push_back(x);
    }
    if (static_cast<int>(values.size()) != nodes)
      throw Error(ErrorKind::TypeMismatch, "coefficient file " + path.string() + " has " +
                                               std::to_string(values.size()) + " values, expected Nx = " +
                                               std::to_string(nodes));
    return Eigen::Map<RVector>(values.data(), nodes);
  }

private:
  const RawConfig &raw_;
};

BcKind parse_bc_kind(const std::string &text, const std::string &section)
{
  for (auto k : {BcKind::Absorbing, BcKind::Impedance, BcKind::Neumann, BcKind::Dirichlet})
    if (to_string(k) == text)
      return k;
  throw Error(ErrorKind::TypeMismatch,
              "[" + section + "] kind: expected absorbing, impedance, neumann or dirichlet, got '" + text + "'");
}

}  // namespace

void RawConfig::set(std::string_view dotted_key, std::string value)
{
  const auto dot = dotted_key.rfind('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 1 == dotted_key.size())
    throw Error(ErrorKind::SyntaxError, "override key must look like section.key, got '" + std::string(dotted_key) + "'");
  sections[std::string(dotted_key.substr(0, dot))][std::string(dotted_key.substr(dot + 1))] = {std::move(value), 0};
}

void RawConfig::apply_override(std::string_view assignment)
{
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos)
    throw Error(ErrorKind::SyntaxError, "override must look like section.key=value, got '" + std::string(assignment) + "'");
  set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

RawConfig parse_config(std::string_view text, std::string base_dir)
{
  RawConfig raw;
  raw.base_dir = std::move(base_dir);
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size())
  {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto hash = line.find_first_of("#;");
    std::string body = trim(line.substr(0, hash));
    if (body.empty())
      continue;
    const auto err = [&](const std::string &msg) {
      throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line_no) + ": " + msg);
    };
    if (body.front() == '[')
    {
      if (body.back() != ']' || body.size() < 3)
        err("malformed section header '" + body + "'");
      section = trim(std::string_view(body).substr(1, body.size() - 2));
      if (section.empty())
        err("empty section name");
      raw.sections[section];
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      err("expected key = value, got '" + body + "'");
    if (section.empty())
      err("key outside of any section");
    std::string key = trim(std::string_view(body).substr(0, eq));
    std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty())
      err("missing key before '='");
    if (value.empty())
      err("missing value for '" + key + "'");
    auto &keys = raw.sections[section];
    if (keys.count(key))
      err("duplicate key '" + key + "' in [" + section + "]");
    keys[key] = {std::move(value), line_no};
  }
  return raw;
}

RawConfig load_config(const std::string &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::IoError, "cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto parent = std::filesystem::path(path).parent_path();
  return parse_config(ss.str(), parent.empty() ? "." : parent.string());
}

std::string_view to_string(EquationKind kind) noexcept
{
  switch (kind)
  {
  case EquationKind::Linear:
    return "linear";
  case EquationKind::Westervelt:
    return "westervelt";
  case EquationKind::Kuznetsov:
    return "kuznetsov";
  }
  return "unknown";
}

EquationKind parse_equation(std::string_view name)
{
  for (auto k : {EquationKind::Linear, EquationKind::Westervelt, EquationKind::Kuznetsov})
    if (to_string(k) == name)
      return k;
  throw Error(ErrorKind::TypeMismatch,
              "[physics] model: expected linear, westervelt or kuznetsov, got '" + std::string(name) + "'");
}

RunConfig build_config(const RawConfig &raw)
{
  for (const auto &[section, keys] : raw.sections)
  {
    const auto s = schema().find(section);
    if (s == schema().end())
      throw Error(ErrorKind::UnknownKey, "unknown section [" + section + "]");
    for (const auto &[key, entry] : keys)
      if (!s->second.count(key))
        throw Error(ErrorKind::UnknownKey, "unknown key " + where(section, key, entry));
  }

  const Reader r(raw);
  RunConfig cfg;
  Model &m = cfg.model;
  m.grid.length = r.number("domain", "L", 1.0);
  m.grid.nodes = r.integer("domain", "Nx", 65);
  m.params.period = r.number("time", "T", 1.0);
  m.harmonics = r.integer("time", "M", 4);
  if (m.grid.nodes < 3)
    throw Error(ErrorKind::BadGrid, "[domain] Nx must be at least 3");

  cfg.kind = parse_equation(r.text("physics", "model", "linear"));
  auto &p = m.params;
  p.tau = r.number("physics", "tau", 0.0);
  p.taubar = r.number("physics", "taubar", p.tau);
  const int nx = m.grid.nodes;
  p.b = r.coefficient("b", 1.0, nx);
  p.c2 = r.coefficient("c2", 1.0, nx);
  p.eta = r.coefficient("eta", 0.0, nx);
  p.eta_tilde = r.coefficient("eta_tilde", 0.0, nx);

  for (auto [section, bc] : {std::pair{"bc.left", &m.left}, std::pair{"bc.right", &m.right}})
  {
    bc->kind = parse_bc_kind(r.text(section, "kind", "dirichlet"), section);
    bc->beta = r.number(section, "beta", 0.0);
    bc->gamma = r.number(section, "gamma", 0.0);
  }

  auto &f = cfg.forcing;
  if (const auto *e = r.find("forcing", "case"))
    f.manufactured = parse_case(e->value);
  f.amplitude = r.number("forcing", "amplitude", 1e-3);
  f.profile = r.text("forcing", "profile", "sine");
  f.amplitudes = r.numbers("forcing", "amplitudes", {});
  if (f.manufactured && (r.find("forcing", "amplitudes") || r.find("forcing", "profile")))
    throw Error(ErrorKind::InvalidArgument, "[forcing] case excludes profile and amplitudes");
  if (!f.manufactured && r.find("forcing", "amplitude"))
    throw Error(ErrorKind::InvalidArgument, "[forcing] amplitude applies only to a manufactured case");

  auto &s = cfg.solver;
  s.tol = r.number("solver", "tol", s.tol);
  s.max_iter = r.integer("solver", "max_iter", s.max_iter);
  s.relaxation = r.number("solver", "relaxation", s.relaxation);
  s.degeneracy_floor = r.number("solver", "degeneracy_floor", s.degeneracy_floor);
  if (r.find("solver", "ball_radius"))
    s.ball_radius = r.number("solver", "ball_radius", s.ball_radius);

  auto &st = cfg.study;
  st.taus = r.numbers("study", "taus", st.taus);
  st.eps = r.numbers("study", "eps", st.eps);
  st.grids = r.integers("study", "grids", st.grids);
  st.steps_per_period = r.integer("study", "steps_per_period", st.steps_per_period);
  st.max_periods = r.integer("study", "max_periods", st.max_periods);
  st.period_tol = r.number("study", "period_tol", st.period_tol);
  st.direction_profile = r.text("study", "direction_profile", st.direction_profile);
  st.direction_harmonic = r.integer("study", "direction_harmonic", st.direction_harmonic);
  st.taylor_tol = r.number("study", "taylor_tol", st.taylor_tol);

  std::string canonical;
  for (const auto &[section, keys] : raw.sections)
    for (const auto &[key, entry] : keys)
      canonical += section + "." + key + "=" + entry.value + "\n";
  canonical += fingerprint(m);
  cfg.hash = digest_hex(canonical);
  return cfg;
}

RVector spatial_profile(const Grid &grid, std::string_view name)
{
  const RVector x = grid.coordinates();
  const double L = grid.length;
  if (name == "sine")
    return (M_PI / L * x.array()).sin();
  if (name == "sine2")
    return (2.0 * M_PI / L * x.array()).sin();
  if (name == "gaussian")
    return (-((x.array() - 0.5 * L) / (0.1 * L)).square()).exp();
  if (name == "bump")
    return 4.0 / (L * L) * x.array() * (L - x.array());
  if (name == "constant")
    return RVector::Ones(grid.nodes);
  throw Error(ErrorKind::InvalidArgument,
              "unknown profile '" + std::string(name) + "' (sine, sine2, gaussian, bump, constant)");
}

HarmonicField build_forcing(const RunConfig &cfg)
{
  const Model &m = cfg.model;
  if (cfg.forcing.manufactured)
    return manufactured_case(*cfg.forcing.manufactured, m, cfg.forcing.amplitude).f;
  HarmonicField f(m.harmonics, m.grid.nodes);
  const auto &amps = cfg.forcing.amplitudes;
  if (static_cast<int>(amps.size()) > m.harmonics + 1)
    throw Error(ErrorKind::TypeMismatch, "[forcing] amplitudes has " + std::to_string(amps.size()) +
                                             " entries but only M + 1 = " + std::to_string(m.harmonics + 1) +
                                             " harmonics exist");
  if (amps.empty())
    return f;
  const RVector shape = spatial_profile(m.grid, cfg.forcing.profile);
  for (std::size_t k = 0; k < amps.size(); ++k)
    f[static_cast<int>(k)] = (amps[k] * shape).cast<Complex>();
  return f;
}

HarmonicField build_direction(const RunConfig &cfg)
{
  const Model &m = cfg.model;
  const int k = cfg.study.direction_harmonic;
  if (k < 0 || k > m.harmonics)
    throw Error(ErrorKind::InvalidArgument, "[study] direction_harmonic must lie in 0..M");
  HarmonicField d(m.harmonics, m.grid.nodes);
  d[k] = spatial_profile(m.grid, cfg.study.direction_profile).cast<Complex>();
  return d;
}

}  // namespace jmgt
