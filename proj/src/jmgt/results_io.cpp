// Copyright 2026 The jmgt-periodic Authors
// SPDX-License-Identifier: Apache-2.0

#include "results_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace jmgt
{

void write_file_atomic(const std::string &path, const std::string &content)
{
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  std::FILE *fp = std::fopen(tmp.c_str(), "wb");
  if (!fp)
    throw Error(ErrorKind::IoError, "cannot create " + tmp + ": " + std::strerror(errno));
  const bool written = std::fwrite(content.data(), 1, content.size(), fp) == content.size();
  const bool flushed = std::fflush(fp) == 0 && ::fsync(::fileno(fp)) == 0;
  const bool closed = std::fclose(fp) == 0;
  if (!written || !flushed || !closed)
  {
    std::remove(tmp.c_str());
    throw Error(ErrorKind::IoError, "failed writing " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
  {
    const std::string why = std::strerror(errno);
    std::remove(tmp.c_str());
    throw Error(ErrorKind::IoError, "cannot rename " + tmp + " to " + path + ": " + why);
  }
}

std::string format_number(double v)
{
  if (std::isnan(v))
    return "nan";
  if (std::isinf(v))
    return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string solution_csv(const HarmonicField &u, const Grid &grid)
{
  std::string out = "m,node_index,x,re,im\n";
  for (int m = 0; m <= u.harmonics(); ++m)
    for (int j = 0; j < u.nodes(); ++j)
    {
      out += std::to_string(m) + "," + std::to_string(j) + "," + format_number(grid.node(j)) + "," +
             format_number(u[m][j].real()) + "," + format_number(u[m][j].imag()) + "\n";
    }
  return out;
}

void write_solution_csv(const std::string &path, const HarmonicField &u, const Grid &grid)
{
  write_file_atomic(path, solution_csv(u, grid));
}

HarmonicField read_solution_csv(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::IoError, "cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != "m,node_index,x,re,im")
    throw Error(ErrorKind::IoError, path + ": missing solution header");
  struct Entry
  {
    int m, j;
    double re, im;
  };
  std::vector<Entry> entries;
  int max_m = -1, max_j = -1;
  int line_no = 1;
  while (std::getline(in, line))
  {
    ++line_no;
    if (line.empty())
      continue;
    Entry e{};
    double x = 0.0;
    char *p = line.data();
    char *end = nullptr;
    bool ok = true;
    const auto next_field = [&](auto parse) {
      errno = 0;
      auto v = parse(p, &end);
      ok = ok && end != p && errno == 0 && (*end == ',' || *end == '\0');
      p = *end == ',' ? end + 1 : end;
      return v;
    };
    e.m = static_cast<int>(next_field([](const char *s, char **e2) { return std::strtol(s, e2, 10); }));
    e.j = static_cast<int>(next_field([](const char *s, char **e2) { return std::strtol(s, e2, 10); }));
    x = next_field([](const char *s, char **e2) { return std::strtod(s, e2); });
    e.re = next_field([](const char *s, char **e2) { return std::strtod(s, e2); });
    e.im = next_field([](const char *s, char **e2) { return std::strtod(s, e2); });
    (void)x;
    if (!ok || *end != '\0' || e.m < 0 || e.j < 0)
      throw Error(ErrorKind::IoError, path + ": malformed row at line " + std::to_string(line_no));
    max_m = std::max(max_m, e.m);
    max_j = std::max(max_j, e.j);
    entries.push_back(e);
  }
  if (max_m < 0)
    throw Error(ErrorKind::IoError, path + ": no rows");
  HarmonicField u(max_m, max_j + 1);
  if (entries.size() != static_cast<std::size_t>((max_m + 1) * (max_j + 1)))
    throw Error(ErrorKind::IoError, path + ": incomplete harmonic table");
  for (const auto &e : entries)
    u[e.m][e.j] = Complex(e.re, e.im);
  return u;
}

std::vector<EnergyRow> energy_rows(const EnergyReport &report)
{
  std::vector<EnergyRow> rows;
  for (const auto &[level, data] : {std::pair{"lo", &report.lo}, std::pair{"me", &report.me}, std::pair{"hi", &report.hi}})
  {
    for (const auto &t : data->terms)
      rows.push_back({t.name, level, t.value});
    rows.push_back({"total", level, data->total});
  }
  return rows;
}

void write_energy_csv(const std::string &path, const std::vector<EnergyRow> &rows)
{
  std::string out = "term_name,level,value\n";
  for (const auto &r : rows)
    out += r.term + "," + r.level + "," + format_number(r.value) + "\n";
  write_file_atomic(path, out);
}

std::string study_csv(const StudyResult &study)
{
  std::string out;
  bool first = true;
  if (!study.label_column.empty())
  {
    out += study.label_column;
    first = false;
  }
  for (const auto &c : study.columns)
  {
    out += (first ? "" : ",") + c;
    first = false;
  }
  out += "\n";
  for (std::size_t i = 0; i < study.rows.size(); ++i)
  {
    first = true;
    if (!study.label_column.empty())
    {
      out += study.row_labels[i];
      first = false;
    }
    for (double v : study.rows[i])
    {
      out += (first ? "" : ",") + format_number(v);
      first = false;
    }
    out += "\n";
  }
  return out;
}

void write_study_csv(const std::string &path, const StudyResult &study)
{
  write_file_atomic(path, study_csv(study));
}

}  // namespace jmgt
