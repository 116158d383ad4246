// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#include "model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <sstream>

#include "fourier.hpp"

namespace jmgt
{

std::string_view to_string(ErrorKind kind) noexcept
{
  switch (kind)
  {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownKey: return "UnknownKey";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::NonPositiveCoefficient: return "NonPositiveCoefficient";
    case ErrorKind::StabilityViolation: return "StabilityViolation";
    case ErrorKind::MeasureAssumptionViolation: return "MeasureAssumptionViolation";
    case ErrorKind::BadGrid: return "BadGrid";
    case ErrorKind::UnknownCase: return "UnknownCase";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UndersampledTime: return "UndersampledTime";
    case ErrorKind::SingularMeanMode: return "SingularMeanMode";
    case ErrorKind::SingularOperator: return "SingularOperator";
    case ErrorKind::SolveFailure: return "SolveFailure";
    case ErrorKind::NonConvergedIteration: return "NonConvergedIteration";
    case ErrorKind::NonContraction: return "NonContraction";
    case ErrorKind::DegeneracyDetected: return "DegeneracyDetected";
    case ErrorKind::MaxIterExceeded: return "MaxIterExceeded";
    case ErrorKind::ContractionLost: return "ContractionLost";
    case ErrorKind::NoPeriodicAttractor: return "NoPeriodicAttractor";
    case ErrorKind::StepRejected: return "StepRejected";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_validation_error(ErrorKind kind) noexcept
{
  switch (kind)
  {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownKey:
    case ErrorKind::TypeMismatch:
    case ErrorKind::NonPositiveCoefficient:
    case ErrorKind::StabilityViolation:
    case ErrorKind::MeasureAssumptionViolation:
    case ErrorKind::BadGrid:
    case ErrorKind::UnknownCase:
    case ErrorKind::InvalidArgument:
    case ErrorKind::IoError:
      return true;
    default:
      return false;
  }
}

std::string_view to_string(BcKind kind) noexcept
{
  switch (kind)
  {
    case BcKind::Absorbing: return "absorbing";
    case BcKind::Impedance: return "impedance";
    case BcKind::Neumann: return "neumann";
    case BcKind::Dirichlet: return "dirichlet";
  }
  return "unknown";
}

RVector Grid::coordinates() const
{
  RVector x(nodes);
  for (int j = 0; j < nodes; ++j)
    x[j] = node(j);
  return x;
}

Model make_model(const ConstantCoefficients &c)
{
  Model model;
  model.grid = Grid{c.length, c.nodes};
  model.harmonics = c.harmonics;
  model.left = c.left;
  model.right = c.right;
  auto &p = model.params;
  p.tau = c.tau;
  p.taubar = c.taubar;
  p.period = c.period;
  p.b = RVector::Constant(c.nodes, c.b);
  p.c2 = RVector::Constant(c.nodes, c.c2);
  p.eta = RVector::Constant(c.nodes, c.eta);
  p.eta_tilde = RVector::Constant(c.nodes, c.eta_tilde);
  return model;
}

double stability_margin(const PhysicalParams &params, double alpha)
{
  if (params.b.size() == 0 || params.b.size() != params.c2.size())
    return std::numeric_limits<double>::quiet_NaN();
  return (params.b.array() / params.c2.array()).minCoeff() - params.taubar / alpha;
}

bool mean_mode_regular(const BoundaryCondition &left, const BoundaryCondition &right)
{
  auto pins = [](const BoundaryCondition &bc) {
    return bc.is_dirichlet() || (bc.kind != BcKind::Neumann && bc.gamma > 0.0);
  };
  return pins(left) || pins(right);
}

namespace
{

void check_boundary(const BoundaryCondition &bc, const char *side, std::vector<Violation> &out)
{
  auto add = [&](ErrorKind kind, const std::string &msg) {
    out.push_back({kind, std::string(side) + " boundary: " + msg});
  };
  if (!std::isfinite(bc.beta) || !std::isfinite(bc.gamma) || bc.beta < 0.0 || bc.gamma < 0.0)
    add(ErrorKind::NonPositiveCoefficient, "beta and gamma must be finite and >= 0");
  switch (bc.kind)
  {
    case BcKind::Neumann:
      if (bc.gamma != 0.0 || bc.beta != 0.0)
        add(ErrorKind::InvalidArgument, "neumann requires beta = gamma = 0");
      break;
    case BcKind::Impedance:
      if (bc.beta != 0.0)
        add(ErrorKind::InvalidArgument, "impedance requires beta = 0");
      if (!(bc.gamma > 0.0))
        add(ErrorKind::NonPositiveCoefficient, "impedance requires gamma > 0");
      break;
    case BcKind::Absorbing:
      if (!(bc.beta > 0.0))
        add(ErrorKind::NonPositiveCoefficient, "absorbing requires beta > 0");
      break;
    case BcKind::Dirichlet:
      break;
  }
}

bool all_finite(const RVector &v) { return v.allFinite(); }

}  // namespace

ValidationResult validate_config(const Model &model)
{
  ValidationResult result;
  auto &out = result.violations;
  const auto &g = model.grid;
  const auto &p = model.params;

  bool grid_ok = true;
  if (g.nodes < 3 || !(g.length > 0.0) || !std::isfinite(g.length))
  {
    out.push_back({ErrorKind::BadGrid, "need Nx >= 3 and 0 < L < inf"});
    grid_ok = false;
  }
  if (model.harmonics < 0)
    out.push_back({ErrorKind::BadGrid, "harmonic order M must be >= 0"});
  if (!(p.period > 0.0) || !std::isfinite(p.period))
    out.push_back({ErrorKind::NonPositiveCoefficient, "period T must be positive"});
  if (!(p.tau >= 0.0) || !std::isfinite(p.tau))
    out.push_back({ErrorKind::NonPositiveCoefficient, "tau must be >= 0"});
  if (!(p.taubar >= p.tau) || !std::isfinite(p.taubar))
    out.push_back({ErrorKind::InvalidArgument, "need 0 <= tau <= taubar"});

  bool coeff_ok = grid_ok;
  auto check_len = [&](const RVector &v, const char *name) {
    if (grid_ok && v.size() != g.nodes)
    {
      out.push_back({ErrorKind::TypeMismatch, std::string(name) + " must have Nx = " +
                                                  std::to_string(g.nodes) + " entries, got " +
                                                  std::to_string(v.size())});
      coeff_ok = false;
    }
    else if (!all_finite(v))
    {
      out.push_back({ErrorKind::NonPositiveCoefficient, std::string(name) + " has non-finite entries"});
      coeff_ok = false;
    }
  };
  check_len(p.b, "b");
  check_len(p.c2, "c2");
  check_len(p.eta, "eta");
  check_len(p.eta_tilde, "eta_tilde");

  if (coeff_ok)
  {
    if (!(p.b.minCoeff() > 0.0))
    {
      out.push_back({ErrorKind::NonPositiveCoefficient, "b must be > 0 at every node"});
      coeff_ok = false;
    }
    if (!(p.c2.minCoeff() > 0.0))
    {
      out.push_back({ErrorKind::NonPositiveCoefficient, "c2 must be > 0 at every node"});
      coeff_ok = false;
    }
  }

  check_boundary(model.left, "left", out);
  check_boundary(model.right, "right", out);
  auto anchors = [](const BoundaryCondition &bc) {
    return bc.kind == BcKind::Impedance || bc.kind == BcKind::Dirichlet;
  };
  if (!anchors(model.left) && !anchors(model.right))
    out.push_back({ErrorKind::MeasureAssumptionViolation,
                   "at least one endpoint must be impedance or dirichlet"});

  if (coeff_ok)
  {
    result.stability_margin = stability_margin(p, 1.0);
    if (!(result.stability_margin > 0.0))
    {
      char buf[160];
      std::snprintf(buf, sizeof buf, "min(b/c2) - taubar = %.6g must be > 0",
                    result.stability_margin);
      out.push_back({ErrorKind::StabilityViolation, buf});
    }
  }
  else
  {
    result.stability_margin = std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

void require_valid(const Model &model)
{
  auto result = validate_config(model);
  if (result.ok())
    return;
  std::string msg = result.violations.front().message;
  for (std::size_t i = 1; i < result.violations.size(); ++i)
    msg += "; " + std::string(to_string(result.violations[i].kind)) + ": " +
           result.violations[i].message;
  throw Error(result.violations.front().kind, msg);
}

namespace
{

// FNV-1a over a canonical text rendering.
class Digest
{
public:
  void add(std::string_view s)
  {
    for (unsigned char ch : s)
    {
      state_ ^= ch;
      state_ *= 1099511628211ull;
    }
    state_ ^= 0xff;
    state_ *= 1099511628211ull;
  }
  void add(double v)
  {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    add(std::string_view(buf));
  }
  void add(const RVector &v)
  {
    add(static_cast<double>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i)
      add(v[i]);
  }
  std::string hex() const
  {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(state_));
    return buf;
  }

private:
  std::uint64_t state_ = 14695981039346656037ull;
};

}  // namespace

std::string fingerprint(const Model &model)
{
  Digest d;
  d.add(model.grid.length);
  d.add(static_cast<double>(model.grid.nodes));
  d.add(static_cast<double>(model.harmonics));
  const auto &p = model.params;
  d.add(p.tau);
  d.add(p.taubar);
  d.add(p.period);
  d.add(p.b);
  d.add(p.c2);
  d.add(p.eta);
  d.add(p.eta_tilde);
  for (const auto *bc : {&model.left, &model.right})
  {
    d.add(to_string(bc->kind));
    d.add(bc->beta);
    d.add(bc->gamma);
  }
  return d.hex();
}

std::string digest_hex(std::string_view text)
{
  Digest d;
  d.add(text);
  return d.hex();
}

std::string fingerprint(const Model &model, EquationKind kind, const HarmonicField &forcing)
{
  Digest d;
  d.add(fingerprint(model));
  d.add(static_cast<double>(static_cast<int>(kind)));
  for (int m = 0; m <= forcing.harmonics(); ++m)
    for (Eigen::Index j = 0; j < forcing[m].size(); ++j)
    {
      d.add(forcing[m][j].real());
      d.add(forcing[m][j].imag());
    }
  return d.hex();
}

Model with_tau(Model model, double tau)
{
  model.params.tau = tau;
  return model;
}

namespace
{

RVector resample(const RVector &v, const Grid &from, const Grid &to)
{
  RVector out(to.nodes);
  const double h = from.spacing();
  for (int j = 0; j < to.nodes; ++j)
  {
    const double s = to.node(j) / h;
    int i = static_cast<int>(std::floor(s));
    i = std::clamp(i, 0, from.nodes - 2);
    const double w = s - i;
    out[j] = (1.0 - w) * v[i] + w * v[i + 1];
  }
  return out;
}

}  // namespace

Model with_nodes(const Model &model, int nodes)
{
  Model out = model;
  out.grid.nodes = nodes;
  auto &p = out.params;
  p.b = resample(model.params.b, model.grid, out.grid);
  p.c2 = resample(model.params.c2, model.grid, out.grid);
  p.eta = resample(model.params.eta, model.grid, out.grid);
  p.eta_tilde = resample(model.params.eta_tilde, model.grid, out.grid);
  return out;
}

}  // namespace jmgt
