#pragma once

#include <string>
#include <vector>

#include "lpfr/grid.hpp"

// Plain CSV I/O. All writers use a fixed %.17g format so identical inputs
// produce byte-identical files. Lines starting with '#' are comments; the
// first real row is the column header.

namespace lpfr {

std::string format_number(double v);

// Single column, header `f` (velocity files may use header `a`).
std::vector<double> read_density_csv(const std::string& path);

void write_density_csv(const std::string& path, const DensityField& mu);

// Columns t,f0,...,f{n-1}; preamble lines (if any) are written as comments.
void write_path_csv(const std::string& path, const PathGrid& pg,
                    const std::vector<std::string>& preamble = {});

void write_columns_csv(const std::string& path,
                       const std::vector<std::string>& names,
                       const std::vector<std::vector<double>>& columns,
                       const std::vector<std::string>& preamble = {});

}  // namespace lpfr
