// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef JMGT_MODEL_HPP
#define JMGT_MODEL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "types.hpp"

namespace jmgt
{

// Uniform grid on (0, L) with nodes x_j = j h, j = 0..Nx-1.
struct Grid
{
  double length = 1.0;
  int nodes = 65;

  double spacing() const { return length / (nodes - 1); }
  double node(int j) const { return j * spacing(); }
  RVector coordinates() const;
};

// Coefficients of tau u_ttt + u_tt - c^2 u_xx - b u_txx + N(u) + f = 0.
// Spatially varying coefficients are nodal arrays of length Nx. The angular
// frequency is always derived from the period.
struct PhysicalParams
{
  double tau = 0.0;
  double taubar = 0.0;
  RVector b;
  RVector c2;
  RVector eta;
  RVector eta_tilde;
  double period = 1.0;

  double omega() const { return kTwoPi / period; }
};

enum class BcKind
{
  Absorbing,  // du/dn + beta u_t + gamma u = 0, beta > 0
  Impedance,  // du/dn + gamma u = 0, gamma > 0
  Neumann,    // du/dn = 0
  Dirichlet,  // u = 0
};

std::string_view to_string(BcKind kind) noexcept;

struct BoundaryCondition
{
  BcKind kind = BcKind::Dirichlet;
  double beta = 0.0;
  double gamma = 0.0;

  static BoundaryCondition dirichlet() { return {BcKind::Dirichlet, 0.0, 0.0}; }
  static BoundaryCondition neumann() { return {BcKind::Neumann, 0.0, 0.0}; }
  static BoundaryCondition impedance(double gamma) { return {BcKind::Impedance, 0.0, gamma}; }
  static BoundaryCondition absorbing(double beta, double gamma = 0.0)
  {
    return {BcKind::Absorbing, beta, gamma};
  }

  bool is_dirichlet() const { return kind == BcKind::Dirichlet; }

  // Robin coefficient i m omega beta + gamma of the harmonic-m boundary row.
  Complex robin_coefficient(int m, double omega) const
  {
    return Complex(gamma, m * omega * beta);
  }
};

// Complete discrete problem description: grid, physics, boundary data and the
// harmonic truncation order M.
struct Model
{
  Grid grid;
  PhysicalParams params;
  BoundaryCondition left;
  BoundaryCondition right;
  int harmonics = 4;
};

// Convenience constructor for constant coefficients broadcast to every node.
struct ConstantCoefficients
{
  double length = 1.0;
  int nodes = 65;
  double period = 1.0;
  int harmonics = 4;
  double tau = 0.0;
  double taubar = 0.0;
  double b = 1.0;
  double c2 = 1.0;
  double eta = 0.0;
  double eta_tilde = 0.0;
  BoundaryCondition left = BoundaryCondition::dirichlet();
  BoundaryCondition right = BoundaryCondition::dirichlet();
};

Model make_model(const ConstantCoefficients &c);

struct Violation
{
  ErrorKind kind;
  std::string message;
};

struct ValidationResult
{
  std::vector<Violation> violations;
  // min_x (b/c^2 - taubar/alpha) with alpha = 1; NaN when coefficients are unusable.
  double stability_margin = 0.0;

  bool ok() const { return violations.empty(); }
};

// Checks every structural assumption on the model. Deterministic and free of
// side effects: the same model always yields the same violation list.
ValidationResult validate_config(const Model &model);

// Throws the first violation (the message carries the full list).
void require_valid(const Model &model);

// a-priori stability margin min_x (b/c^2 - taubar/alpha) for a constant alpha.
double stability_margin(const PhysicalParams &params, double alpha = 1.0);

// True when the m = 0 operator is invertible (some Dirichlet or impedance-type
// endpoint with gamma > 0).
bool mean_mode_regular(const BoundaryCondition &left, const BoundaryCondition &right);

// Stable hex digest of the model content, used to key study rows.
std::string fingerprint(const Model &model);

// FNV-1a hex digest of arbitrary text.
std::string digest_hex(std::string_view text);

class HarmonicField;

// Also covers the equation kind and the forcing coefficients.
std::string fingerprint(const Model &model, EquationKind kind, const HarmonicField &forcing);

Model with_tau(Model model, double tau);

// Re-discretizes on Nx nodes; nodal coefficients are linearly interpolated.
Model with_nodes(const Model &model, int nodes);

}  // namespace jmgt

#endif  // JMGT_MODEL_HPP
