// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#include "jmgt/jmgt.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <optional>
#include <string>

#include "config.hpp"
#include "diagnostics.hpp"
#include "harmonic_solver.hpp"
#include "nonlinear.hpp"
#include "norms.hpp"
#include "results_io.hpp"
#include "studies.hpp"

struct jmgt_config
{
  jmgt::RawConfig raw;
};

struct jmgt_field
{
  jmgt::HarmonicField u;
  jmgt::Grid grid;
  std::optional<jmgt::SolveReport> report;
};

struct jmgt_study
{
  jmgt::StudyResult result;
};

namespace
{

thread_local std::string g_last_error;

static_assert(static_cast<int>(jmgt::ErrorKind::IoError) + 1 == JMGT_IO_ERROR,
              "status codes mirror the error kinds");

jmgt_status to_status(jmgt::ErrorKind kind)
{
  return static_cast<jmgt_status>(static_cast<int>(kind) + 1);
}

template <class Fn>
jmgt_status guarded(Fn &&fn)
{
  try
  {
    g_last_error.clear();
    fn();
    return JMGT_OK;
  }
  catch (const jmgt::Error &e)
  {
    g_last_error = e.what();
    return to_status(e.kind());
  }
  catch (const std::exception &e)
  {
    g_last_error = std::string("internal error: ") + e.what();
    return JMGT_INTERNAL_ERROR;
  }
  catch (...)
  {
    g_last_error = "internal error";
    return JMGT_INTERNAL_ERROR;
  }
}

jmgt_status null_argument()
{
  g_last_error = "InvalidArgument: null argument";
  return JMGT_INVALID_ARGUMENT;
}

struct Prepared
{
  jmgt::RunConfig cfg;
  jmgt::HarmonicField forcing;
};

Prepared prepare(const jmgt_config *c)
{
  Prepared p{jmgt::build_config(c->raw), {}};
  jmgt::require_valid(p.cfg.model);
  jmgt::validate(p.cfg.solver);
  p.forcing = jmgt::build_forcing(p.cfg);
  return p;
}

jmgt_status make_study(const jmgt_config *cfg, jmgt_study **out,
                       jmgt::StudyResult (*run)(const Prepared &))
{
  if (!cfg || !out)
    return null_argument();
  *out = nullptr;
  return guarded([&] {
    const Prepared p = prepare(cfg);
    *out = new jmgt_study{run(p)};
  });
}

}  // namespace

extern "C" {

const char *jmgt_status_name(jmgt_status status)
{
  if (status == JMGT_OK)
    return "Ok";
  if (status == JMGT_INTERNAL_ERROR || status < 0 || status > JMGT_INTERNAL_ERROR)
    return "InternalError";
  return jmgt::to_string(static_cast<jmgt::ErrorKind>(status - 1)).data();
}

int jmgt_status_exit_code(jmgt_status status)
{
  if (status == JMGT_OK)
    return 0;
  if (status == JMGT_INTERNAL_ERROR || status < 0 || status > JMGT_INTERNAL_ERROR)
    return 2;
  return jmgt::is_validation_error(static_cast<jmgt::ErrorKind>(status - 1)) ? 1 : 2;
}

const char *jmgt_last_error(void) { return g_last_error.c_str(); }

jmgt_status jmgt_config_load(const char *path, jmgt_config **out)
{
  if (!path || !out)
    return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new jmgt_config{jmgt::load_config(path)}; });
}

jmgt_status jmgt_config_parse(const char *text, const char *base_dir, jmgt_config **out)
{
  if (!text || !out)
    return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new jmgt_config{jmgt::parse_config(text, base_dir ? base_dir : ".")}; });
}

jmgt_status jmgt_config_override(jmgt_config *cfg, const char *assignment)
{
  if (!cfg || !assignment)
    return null_argument();
  return guarded([&] { cfg->raw.apply_override(assignment); });
}

jmgt_status jmgt_config_validate(const jmgt_config *cfg, double *stability_margin)
{
  if (!cfg)
    return null_argument();
  return guarded([&] {
    const Prepared p = prepare(cfg);
    if (stability_margin)
      *stability_margin = jmgt::stability_margin(p.cfg.model.params);
  });
}

jmgt_status jmgt_config_hash(const jmgt_config *cfg, char *buf, size_t len)
{
  if (!cfg || !buf)
    return null_argument();
  return guarded([&] {
    const std::string h = jmgt::build_config(cfg->raw).hash;
    if (len < h.size() + 1)
      throw jmgt::Error(jmgt::ErrorKind::InvalidArgument, "hash buffer too small");
    std::memcpy(buf, h.c_str(), h.size() + 1);
  });
}

jmgt_status jmgt_config_model(const jmgt_config *cfg, const char **name)
{
  if (!cfg || !name)
    return null_argument();
  return guarded([&] { *name = jmgt::to_string(jmgt::build_config(cfg->raw).kind).data(); });
}

void jmgt_config_free(jmgt_config *cfg) { delete cfg; }

jmgt_status jmgt_solve(const jmgt_config *cfg, jmgt_field **out)
{
  if (!cfg || !out)
    return null_argument();
  *out = nullptr;
  return guarded([&] {
    const Prepared p = prepare(cfg);
    try
    {
      jmgt::SolveReport rep = jmgt::solve_state(p.cfg.model, p.forcing, p.cfg.kind, p.cfg.solver);
      *out = new jmgt_field{rep.u, p.cfg.model.grid, std::move(rep)};
    }
    catch (const jmgt::FixedPointError &e)
    {
      *out = new jmgt_field{e.report().u, p.cfg.model.grid, e.report()};
      throw;
    }
  });
}

jmgt_status jmgt_solve_info_get(const jmgt_field *field, jmgt_solve_info *info)
{
  if (!field || !info)
    return null_argument();
  if (!field->report)
  {
    g_last_error = "InvalidArgument: field carries no solve report";
    return JMGT_INVALID_ARGUMENT;
  }
  const auto &r = *field->report;
  info->iterations = r.iterations;
  info->final_residual = r.final_residual;
  info->alpha_min = r.degeneracy.alpha_min;
  info->alpha_max = r.degeneracy.alpha_max;
  info->stability_margin = r.stability_margin;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  info->last_contraction_ratio = r.contraction_ratios.empty() ? nan : r.contraction_ratios.back();
  info->max_contraction_ratio = nan;
  for (double q : r.contraction_ratios)
    if (std::isnan(info->max_contraction_ratio) || q > info->max_contraction_ratio)
      info->max_contraction_ratio = q;
  return JMGT_OK;
}

int jmgt_field_harmonics(const jmgt_field *field) { return field ? field->u.harmonics() : -1; }

int jmgt_field_nodes(const jmgt_field *field) { return field ? field->u.nodes() : -1; }

jmgt_status jmgt_field_coefficient(const jmgt_field *field, int harmonic, int node, double *re, double *im)
{
  if (!field || !re || !im)
    return null_argument();
  if (harmonic < 0 || harmonic > field->u.harmonics() || node < 0 || node >= field->u.nodes())
  {
    g_last_error = "InvalidArgument: coefficient index out of range";
    return JMGT_INVALID_ARGUMENT;
  }
  *re = field->u[harmonic][node].real();
  *im = field->u[harmonic][node].imag();
  return JMGT_OK;
}

jmgt_status jmgt_field_write_csv(const jmgt_field *field, const char *path)
{
  if (!field || !path)
    return null_argument();
  return guarded([&] { jmgt::write_solution_csv(path, field->u, field->grid); });
}

jmgt_status jmgt_field_read_csv(const char *path, jmgt_field **out)
{
  if (!path || !out)
    return null_argument();
  *out = nullptr;
  return guarded([&] {
    jmgt::HarmonicField u = jmgt::read_solution_csv(path);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    double length = 1.0;
    // grid length from the last node's x
    while (std::getline(in, line))
      if (!line.empty())
      {
        const auto a = line.find(',');
        const auto b = line.find(',', a + 1);
        const auto c = line.find(',', b + 1);
        length = std::strtod(line.substr(b + 1, c - b - 1).c_str(), nullptr);
      }
    *out = new jmgt_field{u, jmgt::Grid{length, u.nodes()}, std::nullopt};
  });
}

jmgt_status jmgt_field_manufactured_error(const jmgt_config *cfg, const jmgt_field *field, double *relative_error)
{
  if (!cfg || !field || !relative_error)
    return null_argument();
  return guarded([&] {
    const Prepared p = prepare(cfg);
    if (!p.cfg.forcing.manufactured)
      throw jmgt::Error(jmgt::ErrorKind::InvalidArgument, "configuration has no manufactured case");
    const auto mf = jmgt::manufactured_case(*p.cfg.forcing.manufactured, p.cfg.model, p.cfg.forcing.amplitude);
    const double ref = jmgt::l2l2_norm(mf.u_star, p.cfg.model);
    const double err = jmgt::l2l2_norm(field->u - mf.u_star, p.cfg.model);
    *relative_error = ref > 0.0 ? err / ref : err;
  });
}

void jmgt_field_free(jmgt_field *field) { delete field; }

jmgt_status jmgt_energy_write_csv(const jmgt_config *cfg, const jmgt_field *field, const char *path)
{
  if (!cfg || !field || !path)
    return null_argument();
  return guarded([&] {
    const Prepared p = prepare(cfg);
    const jmgt::Model &m = p.cfg.model;
    auto rows = jmgt::energy_rows(jmgt::compute_energies(field->u, m));
    const jmgt::Multipliers mu = jmgt::choose_multipliers(m.params);
    rows.push_back({"sigma", "multiplier", mu.sigma});
    rows.push_back({"rho", "multiplier", mu.rho});
    const jmgt::HarmonicField rtilde = p.forcing.resized(m.harmonics) +
                                       jmgt::eval_nonlinearity(m, field->u, p.cfg.kind);
    rows.push_back({"identity_residual", "lo", jmgt::energy_identity_residual(field->u, rtilde, mu, m)});
    for (const auto &nv : jmgt::coefficient_smallness_report(m.params, m.grid))
      rows.push_back({nv.name, "coefficient", nv.value});
    jmgt::write_energy_csv(path, rows);
  });
}

jmgt_status jmgt_study_tau_sweep(const jmgt_config *cfg, jmgt_study **out)
{
  return make_study(cfg, out, [](const Prepared &p) {
    return jmgt::tau_sweep(p.cfg.model, p.forcing, p.cfg.study.taus, p.cfg.kind, p.cfg.solver);
  });
}

jmgt_status jmgt_study_taylor(const jmgt_config *cfg, jmgt_study **out)
{
  return make_study(cfg, out, [](const Prepared &p) {
    jmgt::TaylorOptions opts;
    opts.solver = p.cfg.solver;
    opts.solver.tol = p.cfg.study.taylor_tol;
    opts.solver.max_iter = std::max(p.cfg.solver.max_iter, 200);
    return jmgt::taylor_test(p.cfg.model, p.forcing, jmgt::build_direction(p.cfg), p.cfg.kind, p.cfg.study.eps,
                             opts);
  });
}

jmgt_status jmgt_study_convergence(const jmgt_config *cfg, jmgt_study **out)
{
  return make_study(cfg, out, [](const Prepared &p) {
    if (!p.cfg.forcing.manufactured)
      throw jmgt::Error(jmgt::ErrorKind::InvalidArgument, "convergence needs [forcing] case");
    jmgt::ConvergenceOptions opts;
    opts.amplitude = p.cfg.forcing.amplitude;
    opts.solver = p.cfg.solver;
    return jmgt::convergence_study(*p.cfg.forcing.manufactured, p.cfg.model, p.cfg.study.grids, opts);
  });
}

jmgt_status jmgt_study_oracle(const jmgt_config *cfg, jmgt_study **out)
{
  return make_study(cfg, out, [](const Prepared &p) {
    jmgt::OracleOptions opts;
    opts.steps_per_period = p.cfg.study.steps_per_period;
    opts.max_periods = p.cfg.study.max_periods;
    opts.period_tol = p.cfg.study.period_tol;
    return jmgt::oracle_compare(p.cfg.model, p.forcing, p.cfg.kind, opts, p.cfg.solver);
  });
}

jmgt_status jmgt_study_write_csv(const jmgt_study *study, const char *path)
{
  if (!study || !path)
    return null_argument();
  return guarded([&] { jmgt::write_study_csv(path, study->result); });
}

int jmgt_study_rows(const jmgt_study *study) { return study ? static_cast<int>(study->result.rows.size()) : -1; }

int jmgt_study_columns(const jmgt_study *study)
{
  return study ? static_cast<int>(study->result.columns.size()) : -1;
}

const char *jmgt_study_column_name(const jmgt_study *study, int column)
{
  if (!study || column < 0 || column >= jmgt_study_columns(study))
    return nullptr;
  return study->result.columns[column].c_str();
}

const char *jmgt_study_row_label(const jmgt_study *study, int row)
{
  if (!study || row < 0 || row >= static_cast<int>(study->result.row_labels.size()))
    return nullptr;
  return study->result.row_labels[row].c_str();
}

const char *jmgt_study_row_hash(const jmgt_study *study, int row)
{
  if (!study || row < 0 || row >= jmgt_study_rows(study))
    return nullptr;
  return study->result.row_hashes[row].c_str();
}

double jmgt_study_value(const jmgt_study *study, int row, int column)
{
  if (!study || row < 0 || row >= jmgt_study_rows(study) || column < 0 || column >= jmgt_study_columns(study))
    return std::numeric_limits<double>::quiet_NaN();
  return study->result.rows[row][column];
}

int jmgt_study_metadata_count(const jmgt_study *study)
{
  return study ? static_cast<int>(study->result.metadata.size()) : -1;
}

const char *jmgt_study_metadata_key(const jmgt_study *study, int index)
{
  if (!study || index < 0 || index >= jmgt_study_metadata_count(study))
    return nullptr;
  return study->result.metadata[index].first.c_str();
}

const char *jmgt_study_metadata_value(const jmgt_study *study, int index)
{
  if (!study || index < 0 || index >= jmgt_study_metadata_count(study))
    return nullptr;
  return study->result.metadata[index].second.c_str();
}

const char *jmgt_study_kind(const jmgt_study *study)
{
  return study ? jmgt::to_string(study->result.kind).data() : nullptr;
}

void jmgt_study_free(jmgt_study *study) { delete study; }

}  // extern "C"
