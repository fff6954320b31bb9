#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "aho/phasespace.hpp"

namespace aho {

/// Scaling convention of emitted grids.  Paper keeps the native 1/2
/// total mass of the Pi basis; Standard multiplies samples by 2 so
/// distributions integrate to one.
enum class Normalization { Paper, Standard };

std::string to_string(Normalization n);
Normalization normalization_from_string(const std::string& s);

/// Grid file layout: four '#' header lines (window, resolution,
/// normalization, time), then ny comma-separated rows of nx values in
/// "%.12e", row-major with Re alpha varying fastest.  Writing is
/// byte-stable: the same grid always serializes to the same bytes.
void write_grid_csv(const PhaseGrid& grid, Normalization norm, double time,
                    std::ostream& os);
void write_grid_csv(const PhaseGrid& grid, Normalization norm, double time,
                    const std::filesystem::path& path);

struct GridFile {
  PhaseGrid grid;
  Normalization norm = Normalization::Paper;
  double time = 0.0;
};

GridFile read_grid_csv(std::istream& is);
GridFile read_grid_csv(const std::filesystem::path& path);

/// 8-bit grayscale PGM heatmap, top row = im_max.  Zero maps to
/// mid-gray so negative regions render darker than the background.
void write_grid_pgm(const PhaseGrid& grid, const std::filesystem::path& path);

}  // namespace aho
