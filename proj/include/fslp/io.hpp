#pragma once
/// Field output: CSV (plotting interface) and legacy VTK structured points.

#include <string>
#include <vector>

#include "fslp/grid.hpp"

namespace fslp {

enum class FieldFormat { Csv, VtkLegacy };

FieldFormat format_from_string(const std::string& s);
std::string extension(FieldFormat f);

/// CSV header: x,y,rho,u,v,p,e,mach; one row per interior cell, row-major,
/// 17 significant digits.
void write_fields(const Grid& grid, const GasParams& gas, FieldFormat format, const std::string& path);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};
CsvTable read_csv(const std::string& path);

}  // namespace fslp
