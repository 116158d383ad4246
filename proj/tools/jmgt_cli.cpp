// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end over the C interface.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jmgt/jmgt.h"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace
{

struct Options
{
  std::string verb;
  std::string config_path;
  std::string output_dir = "jmgt_out";
  std::vector<std::string> overrides;
};

// Thrown after a library call fails; carries the status for the exit code.
struct Failure
{
  jmgt_status status;
  std::string message;
  ordered_json detail = ordered_json::object();
};

void check(jmgt_status s)
{
  if (s != JMGT_OK)
    throw Failure{s, jmgt_last_error()};
}

void write_json_atomic(const fs::path &path, const ordered_json &doc)
{
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << doc.dump(2) << "\n";
    if (!out)
      throw Failure{JMGT_IO_ERROR, "cannot write " + tmp.string()};
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec)
    throw Failure{JMGT_IO_ERROR, "cannot rename " + tmp.string() + ": " + ec.message()};
}

ordered_json number(double v)
{
  return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
}

class Handles
{
public:
  ~Handles()
  {
    jmgt_study_free(study);
    jmgt_field_free(field);
    jmgt_config_free(config);
  }
  jmgt_config *config = nullptr;
  jmgt_field *field = nullptr;
  jmgt_study *study = nullptr;
};

ordered_json solve_summary(const jmgt_field *field)
{
  jmgt_solve_info info{};
  if (!field || jmgt_solve_info_get(field, &info) != JMGT_OK)
    return ordered_json::object();
  return {{"iterations", info.iterations},
          {"final_residual", number(info.final_residual)},
          {"alpha_min", number(info.alpha_min)},
          {"alpha_max", number(info.alpha_max)},
          {"stability_margin", number(info.stability_margin)},
          {"last_contraction_ratio", number(info.last_contraction_ratio)},
          {"max_contraction_ratio", number(info.max_contraction_ratio)}};
}

// Deterministic sidecar: kind, metadata and the per-row configuration digests.
void write_study(const jmgt_study *study, const fs::path &csv, std::vector<std::string> &outputs)
{
  check(jmgt_study_write_csv(study, csv.c_str()));
  ordered_json meta;
  meta["kind"] = jmgt_study_kind(study);
  ordered_json md = ordered_json::object();
  for (int i = 0; i < jmgt_study_metadata_count(study); ++i)
    md[jmgt_study_metadata_key(study, i)] = jmgt_study_metadata_value(study, i);
  meta["metadata"] = md;
  ordered_json hashes = ordered_json::array();
  for (int r = 0; r < jmgt_study_rows(study); ++r)
    hashes.push_back(jmgt_study_row_hash(study, r));
  meta["row_hashes"] = hashes;
  fs::path meta_path = csv;
  meta_path.replace_extension(".meta.json");
  write_json_atomic(meta_path, meta);
  outputs.push_back(csv.filename().string());
  outputs.push_back(meta_path.filename().string());
}

ordered_json run(const Options &opt, const fs::path &out, std::vector<std::string> &outputs, Handles &h)
{
  check(jmgt_config_load(opt.config_path.c_str(), &h.config));
  for (const auto &o : opt.overrides)
    check(jmgt_config_override(h.config, o.c_str()));
  double margin = 0.0;
  check(jmgt_config_validate(h.config, &margin));
  ordered_json info;
  info["stability_margin"] = margin;

  if (opt.verb == "validate")
    return info;

  if (opt.verb == "solve" || opt.verb == "energy")
  {
    const jmgt_status s = jmgt_solve(h.config, &h.field);
    if (s != JMGT_OK)
    {
      Failure f{s, jmgt_last_error()};
      f.detail = solve_summary(h.field);
      throw f;
    }
    info["solve"] = solve_summary(h.field);
    double rel = 0.0;
    if (jmgt_field_manufactured_error(h.config, h.field, &rel) == JMGT_OK)
      info["manufactured_relative_error"] = number(rel);
    if (opt.verb == "solve")
    {
      check(jmgt_field_write_csv(h.field, (out / "solution.csv").c_str()));
      outputs.push_back("solution.csv");
    }
    check(jmgt_energy_write_csv(h.config, h.field, (out / "energy.csv").c_str()));
    outputs.push_back("energy.csv");
    return info;
  }

  struct StudyVerb
  {
    const char *verb;
    jmgt_status (*fn)(const jmgt_config *, jmgt_study **);
    const char *file;
  };
  static const StudyVerb verbs[] = {
      {"sweep-tau", jmgt_study_tau_sweep, "tau_sweep.csv"},
      {"deriv-check", jmgt_study_taylor, "taylor.csv"},
      {"converge", jmgt_study_convergence, "convergence.csv"},
      {"oracle-compare", jmgt_study_oracle, "oracle.csv"},
  };
  for (const auto &v : verbs)
    if (opt.verb == v.verb)
    {
      check(v.fn(h.config, &h.study));
      write_study(h.study, out / v.file, outputs);
      return info;
    }
  throw Failure{JMGT_INVALID_ARGUMENT, "unknown verb " + opt.verb};
}

std::string utc_timestamp()
{
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Periodic JMGT / Westervelt / Kuznetsov harmonic-balance solver"};
  app.require_subcommand(1, 1);
  Options opt;
  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"solve", "Solve for the periodic state; writes solution.csv and energy.csv"},
      {"sweep-tau", "Relaxation-time sweep against tau = 0; writes tau_sweep.csv"},
      {"energy", "Energies, multipliers and identity residual; writes energy.csv"},
      {"deriv-check", "Taylor test of the source-to-state derivative; writes taylor.csv"},
      {"converge", "Grid refinement study on a manufactured case; writes convergence.csv"},
      {"oracle-compare", "Compare against time stepping to the periodic attractor; writes oracle.csv"},
      {"validate", "Check the configuration against the model assumptions"},
  };
  for (const auto &[name, help] : verbs)
  {
    auto *sub = app.add_subcommand(name, help);
    sub->add_option("config", opt.config_path, "Configuration file")->required();
    sub->add_option("-o,--output", opt.output_dir, "Output directory")->capture_default_str();
    sub->add_option("--set", opt.overrides, "Override section.key=value (repeatable)");
    sub->callback([&opt, name = name] { opt.verb = name; });
  }
  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp &e)
  {
    return app.exit(e);
  }
  catch (const CLI::ParseError &e)
  {
    app.exit(e);
    std::cerr << app.help();
    return 1;
  }

  const fs::path out(opt.output_dir);
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec)
  {
    std::cerr << "IoError: cannot create output directory " << out << ": " << ec.message() << "\n";
    return 1;
  }
  fs::remove(out / "error.json", ec);

  std::vector<std::string> outputs;
  ordered_json run_info;
  run_info["verb"] = opt.verb;
  run_info["config"] = opt.config_path;
  run_info["overrides"] = opt.overrides;
  run_info["started_utc"] = utc_timestamp();
  int code = 0;
  try
  {
    Handles h;
    const ordered_json info = run(opt, out, outputs, h);
    char hash[32] = {0};
    if (jmgt_config_hash(h.config, hash, sizeof hash) == JMGT_OK)
      run_info["config_hash"] = hash;
    run_info["result"] = info;
    for (const auto &f : outputs)
      if (!fs::exists(out / f))
        throw Failure{JMGT_IO_ERROR, "expected output missing: " + f};
    run_info["outputs"] = outputs;
    run_info["status"] = "Ok";
  }
  catch (const Failure &f)
  {
    code = jmgt_status_exit_code(f.status);
    ordered_json err;
    err["kind"] = jmgt_status_name(f.status);
    err["message"] = f.message;
    err["exit_code"] = code;
    err["verb"] = opt.verb;
    err["detail"] = f.detail;
    std::cerr << f.message << "\n";
    try
    {
      write_json_atomic(out / "error.json", err);
    }
    catch (const Failure &again)
    {
      std::cerr << again.message << "\n";
    }
    run_info["status"] = jmgt_status_name(f.status);
  }
  run_info["finished_utc"] = utc_timestamp();
  try
  {
    write_json_atomic(out / "run_info.json", run_info);
  }
  catch (const Failure &f)
  {
    std::cerr << f.message << "\n";
    return code == 0 ? 1 : code;
  }
  if (code == 0)
    std::cout << opt.verb << ": ok (" << out.string() << ")\n";
  return code;
}
