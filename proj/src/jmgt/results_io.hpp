// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef JMGT_RESULTS_IO_HPP
#define JMGT_RESULTS_IO_HPP

#include <string>
#include <vector>

#include "diagnostics.hpp"
#include "fourier.hpp"
#include "model.hpp"
#include "studies.hpp"

namespace jmgt
{

// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::string &path, const std::string &content);

// 17 significant digits; "nan"/"inf" for non-finite values.
std::string format_number(double v);

// Header m,node_index,x,re,im.
std::string solution_csv(const HarmonicField &u, const Grid &grid);
void write_solution_csv(const std::string &path, const HarmonicField &u, const Grid &grid);
HarmonicField read_solution_csv(const std::string &path);

struct EnergyRow
{
  std::string term;
  std::string level;
  double value = 0.0;
};

std::vector<EnergyRow> energy_rows(const EnergyReport &report);
// Header term_name,level,value.
void write_energy_csv(const std::string &path, const std::vector<EnergyRow> &rows);

std::string study_csv(const StudyResult &study);
void write_study_csv(const std::string &path, const StudyResult &study);

}  // namespace jmgt

#endif  // JMGT_RESULTS_IO_HPP
