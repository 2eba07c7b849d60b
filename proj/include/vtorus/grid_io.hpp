#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "vtorus/extremal.hpp"

namespace vtorus {

/// Which planar chart of the variety the grid walks.
///  - LeafRealZ1Z2:   real (z1, z2), z3 lifted to the leaf
///  - LeafComplexZ1:  z2 = 0, axes Re z1 x Im z1, z3 on the leaf
///  - Glued*:         same axes, value = min over the two outer sheets
///    (the multivalued graph collapsed along the branch cut)
enum class GridChart { LeafRealZ1Z2, LeafComplexZ1, GluedRealZ1Z2, GluedComplexZ1 };

const char* to_string(GridChart chart);
GridChart grid_chart_from_string(const std::string& name);

struct GridSpec {
  GridChart chart = GridChart::LeafRealZ1Z2;
  LeafIndex leaf;
  double x_min, x_max;
  double y_min, y_max;
  int nx, ny;
  TorusParams params;
};

struct GridNode {
  double value;
  ActiveBranch branch;
  double residual;  // variety residual of the lifted point
};

struct GridResult {
  GridSpec spec;
  std::vector<GridNode> values;  // y-major: index iy * nx + ix

  double node_x(int ix) const;
  double node_y(int iy) const;
  const GridNode& at(int ix, int iy) const;
};

/// Evaluate the grid.  Nodes are independent; `threads` > 1 splits rows,
/// output is identical for any thread count.
GridResult evaluate_grid(const GridSpec& spec, int threads = 1);

/// Columns: x,y,value,branch,residual.  Shortest round-trip decimals, LF
/// line endings, deterministic bytes.
void write_csv(const GridResult& g, const std::filesystem::path& path);
std::string to_csv(const GridResult& g);

void write_json(const GridResult& g, const std::filesystem::path& path);
std::string to_json(const GridResult& g);
GridResult grid_from_json(const std::string& text);

enum class ColorMap { Grayscale, Viridis };

/// Rectangular heatmap, linear color scale from 0 to the grid maximum,
/// deterministic bytes for fixed input.
void render_svg(const GridResult& g, const std::filesystem::path& path, ColorMap map);
std::string to_svg(const GridResult& g, ColorMap map);

/// The six committed figure grids: four single-leaf panels (real chart and
/// complex-z1 chart, outer sheet +1 and -1) and the two glued charts.
/// R = 2, r = 1; real chart on [-4,4]^2, complex chart on [-4,4] x [-3,3],
/// 65 x 65 nodes.
std::vector<std::pair<std::string, GridSpec>> figure_fixture_specs();

}  // namespace vtorus
