#include "fslp/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fslp {

namespace {

struct Row {
  double rho, u, v, p, e, mach;
};

Row row(const ConservativeState& U, const GasParams& gas) {
  const PrimitiveState V = cons_to_prim(U, gas);
  const double e = V.p / ((gas.gamma - 1.0) * V.rho);
  const double c = sound_speed(gas.gamma, V.rho, V.p);
  return {V.rho, V.u, V.v, V.p, e, std::hypot(V.u, V.v) / c};
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  return f;
}

}  // namespace

FieldFormat format_from_string(const std::string& s) {
  if (s == "csv") return FieldFormat::Csv;
  if (s == "vtk" || s == "vtk-legacy" || s == "vtk_legacy") return FieldFormat::VtkLegacy;
  throw std::invalid_argument("unknown output format '" + s + "'");
}

std::string extension(FieldFormat f) { return f == FieldFormat::Csv ? ".csv" : ".vtk"; }

void write_fields(const Grid& g, const GasParams& gas, FieldFormat format, const std::string& path) {
  std::ofstream f = open_out(path);
  if (format == FieldFormat::Csv) {
    f << "x,y,rho,u,v,p,e,mach\n";
    g.for_each_interior([&](int i, int j) {
      const Row r = row(g.at(i, j), gas);
      f << num(g.x_center(i)) << ',' << num(g.y_center(j)) << ',' << num(r.rho) << ',' << num(r.u) << ','
        << num(r.v) << ',' << num(r.p) << ',' << num(r.e) << ',' << num(r.mach) << '\n';
    });
  } else {
    const std::size_t n = static_cast<std::size_t>(g.nx()) * g.ny();
    std::vector<Row> rows;
    rows.reserve(n);
    g.for_each_interior([&](int i, int j) { rows.push_back(row(g.at(i, j), gas)); });
    f << "# vtk DataFile Version 3.0\nfslp fields\nASCII\nDATASET STRUCTURED_POINTS\n";
    f << "DIMENSIONS " << g.nx() << ' ' << g.ny() << " 1\n";
    f << "ORIGIN " << num(g.x_center(0)) << ' ' << num(g.y_center(0)) << " 0\n";
    f << "SPACING " << num(g.dx()) << ' ' << num(g.dy()) << " 1\n";
    f << "POINT_DATA " << n << '\n';
    auto scalar = [&](const char* name, double Row::*m) {
      f << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
      for (const Row& r : rows) f << num(r.*m) << '\n';
    };
    scalar("rho", &Row::rho);
    scalar("p", &Row::p);
    scalar("e", &Row::e);
    scalar("mach", &Row::mach);
    f << "VECTORS velocity double\n";
    for (const Row& r : rows) f << num(r.u) << ' ' << num(r.v) << " 0\n";
  }
  if (!f) throw std::runtime_error("write failed for '" + path + "'");
}

CsvTable read_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  CsvTable t;
  std::string line;
  if (!std::getline(f, line)) throw std::runtime_error("'" + path + "' is empty");
  std::stringstream hs(line);
  for (std::string h; std::getline(hs, h, ',');) t.header.push_back(h);
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::vector<double> r;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) r.push_back(std::strtod(c.c_str(), nullptr));
    if (r.size() != t.header.size()) throw std::runtime_error("'" + path + "': ragged row");
    t.rows.push_back(std::move(r));
  }
  return t;
}

}  // namespace fslp
