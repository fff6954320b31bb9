#include "aho/grid_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "aho/errors.hpp"

namespace aho {

std::string to_string(Normalization n) {
  return n == Normalization::Paper ? "paper" : "standard";
}

Normalization normalization_from_string(const std::string& s) {
  if (s == "paper") return Normalization::Paper;
  if (s == "standard") return Normalization::Standard;
  throw config_error("unknown normalization '" + s + "'");
}

namespace {

std::string fmt(const char* spec, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

}  // namespace

void write_grid_csv(const PhaseGrid& grid, Normalization norm, double time,
                    std::ostream& os) {
  os << "# window: " << fmt("%.17g", grid.re_min) << ' '
     << fmt("%.17g", grid.re_max) << ' ' << fmt("%.17g", grid.im_min) << ' '
     << fmt("%.17g", grid.im_max) << '\n';
  os << "# resolution: " << grid.nx << ' ' << grid.ny << '\n';
  os << "# normalization: " << to_string(norm) << '\n';
  os << "# time: " << fmt("%.17g", time) << '\n';
  const double scale = norm == Normalization::Standard ? 2.0 : 1.0;
  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      if (ix) os << ',';
      os << fmt("%.12e", scale * grid.at(ix, iy));
    }
    os << '\n';
  }
}

void write_grid_csv(const PhaseGrid& grid, Normalization norm, double time,
                    const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw config_error("cannot open " + path.string() + " for writing");
  write_grid_csv(grid, norm, time, os);
}

GridFile read_grid_csv(std::istream& is) {
  std::string line;
  auto header = [&](const std::string& tag) {
    if (!std::getline(is, line) || line.rfind("# " + tag + ":", 0) != 0)
      throw invariant_error("grid file header line '" + tag + "' missing");
    return std::istringstream(line.substr(tag.size() + 3));
  };

  GridFile out;
  double re_min, re_max, im_min, im_max;
  int nx, ny;
  {
    auto ss = header("window");
    if (!(ss >> re_min >> re_max >> im_min >> im_max))
      throw invariant_error("malformed window header");
  }
  {
    auto ss = header("resolution");
    if (!(ss >> nx >> ny)) throw invariant_error("malformed resolution header");
  }
  {
    auto ss = header("normalization");
    std::string word;
    ss >> word;
    out.norm = normalization_from_string(word);
  }
  {
    auto ss = header("time");
    if (!(ss >> out.time)) throw invariant_error("malformed time header");
  }

  out.grid = PhaseGrid::make(re_min, re_max, im_min, im_max, nx, ny);
  for (int iy = 0; iy < ny; ++iy) {
    if (!std::getline(is, line))
      throw invariant_error("grid file truncated at row " + std::to_string(iy));
    std::istringstream ss(line);
    std::string cell;
    for (int ix = 0; ix < nx; ++ix) {
      if (!std::getline(ss, cell, ','))
        throw invariant_error("grid row " + std::to_string(iy) + " truncated");
      out.grid.at(ix, iy) = std::stod(cell);
    }
  }
  return out;
}

GridFile read_grid_csv(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw config_error("cannot open " + path.string());
  return read_grid_csv(is);
}

void write_grid_pgm(const PhaseGrid& grid, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw config_error("cannot open " + path.string() + " for writing");
  double vmax = 0.0;
  for (double v : grid.values) vmax = std::max(vmax, std::abs(v));
  os << "P5\n" << grid.nx << ' ' << grid.ny << "\n255\n";
  std::string row(static_cast<std::size_t>(grid.nx), '\0');
  for (int iy = grid.ny - 1; iy >= 0; --iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      const double u = vmax > 0.0 ? grid.at(ix, iy) / vmax : 0.0;
      const int pix = static_cast<int>(std::lround(127.5 + 127.5 * u));
      row[static_cast<std::size_t>(ix)] =
          static_cast<char>(std::clamp(pix, 0, 255));
    }
    os.write(row.data(), grid.nx);
  }
}

}  // namespace aho
