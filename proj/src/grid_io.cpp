#include "vtorus/grid_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace vtorus {

const char* to_string(GridChart chart) {
  switch (chart) {
    case GridChart::LeafRealZ1Z2: return "real-z1z2";
    case GridChart::LeafComplexZ1: return "complex-z1";
    case GridChart::GluedRealZ1Z2: return "glued-real-z1z2";
    case GridChart::GluedComplexZ1: return "glued-complex-z1";
  }
  return "?";
}

GridChart grid_chart_from_string(const std::string& name) {
  if (name == "real-z1z2") return GridChart::LeafRealZ1Z2;
  if (name == "complex-z1") return GridChart::LeafComplexZ1;
  if (name == "glued-real-z1z2") return GridChart::GluedRealZ1Z2;
  if (name == "glued-complex-z1") return GridChart::GluedComplexZ1;
  throw std::invalid_argument("unknown grid chart: " + name);
}

namespace {

void validate(const GridSpec& spec) {
  if (spec.nx < 2 || spec.ny < 2) throw std::invalid_argument("GridSpec: need nx, ny >= 2");
  if (!(spec.x_min < spec.x_max) || !(spec.y_min < spec.y_max)) {
    throw std::invalid_argument("GridSpec: ranges must be nondegenerate");
  }
  if ((spec.leaf.outer_sign != 1 && spec.leaf.outer_sign != -1) ||
      (spec.leaf.z3_sign != 1 && spec.leaf.z3_sign != -1)) {
    throw std::invalid_argument("GridSpec: leaf signs must be +1 or -1");
  }
}

GridNode evaluate_node(const GridSpec& spec, double x, double y) {
  const bool complex_chart =
      spec.chart == GridChart::LeafComplexZ1 || spec.chart == GridChart::GluedComplexZ1;
  const bool glued =
      spec.chart == GridChart::GluedRealZ1Z2 || spec.chart == GridChart::GluedComplexZ1;
  const Complex z1 = complex_chart ? Complex(x, y) : Complex(x, 0.0);
  const Complex z2 = complex_chart ? Complex(0.0, 0.0) : Complex(y, 0.0);

  GridNode best{std::numeric_limits<double>::infinity(), ActiveBranch::SimplexTerm,
                std::numeric_limits<double>::infinity()};
  const int outer_first = spec.leaf.outer_sign;
  for (int pass = 0; pass < (glued ? 2 : 1); ++pass) {
    LeafIndex leaf{pass == 0 ? outer_first : -outer_first, spec.leaf.z3_sign};
    const Complex z3 = leaf_z3(spec.params, z1, z2, leaf);
    const ComplexPoint3 z(z1, z2, z3);
    const double res = membership_residual(spec.params, z);
    double value;
    ActiveBranch branch;
    if (res > kApiResidualTol) {
      // numerically fell off the variety (possible only near branch cuts)
      value = std::numeric_limits<double>::quiet_NaN();
      branch = ActiveBranch::SimplexTerm;
    } else {
      const EvalResult ev = v_torus(spec.params, z);
      value = ev.value;
      branch = ev.active_branch;
    }
    if (pass == 0 || (std::isfinite(value) && !(value >= best.value))) {
      best = GridNode{value, branch, res};
    }
  }
  return best;
}

void append_double(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

struct Rgb {
  unsigned char r, g, b;
};

// 16 anchor stops of the viridis map
constexpr unsigned char kViridis[16][3] = {
    {68, 1, 84},   {72, 26, 108},  {71, 47, 125},  {65, 68, 135},
    {57, 86, 140}, {49, 104, 142}, {42, 120, 142}, {35, 136, 142},
    {31, 152, 139}, {34, 168, 132}, {53, 183, 121}, {84, 197, 104},
    {122, 209, 81}, {165, 219, 54}, {210, 226, 27}, {253, 231, 37}};

Rgb colorize(double t, ColorMap map) {
  t = std::clamp(t, 0.0, 1.0);
  if (map == ColorMap::Grayscale) {
    const auto v = static_cast<unsigned char>(std::lround(255.0 * t));
    return {v, v, v};
  }
  const double pos = t * 15.0;
  const int i = std::min(14, static_cast<int>(pos));
  const double f = pos - i;
  auto mix = [f](unsigned char a, unsigned char b) {
    return static_cast<unsigned char>(std::lround(a + f * (b - a)));
  };
  return {mix(kViridis[i][0], kViridis[i + 1][0]), mix(kViridis[i][1], kViridis[i + 1][1]),
          mix(kViridis[i][2], kViridis[i + 1][2])};
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

double GridResult::node_x(int ix) const {
  return spec.x_min + (spec.x_max - spec.x_min) * ix / (spec.nx - 1);
}

double GridResult::node_y(int iy) const {
  return spec.y_min + (spec.y_max - spec.y_min) * iy / (spec.ny - 1);
}

const GridNode& GridResult::at(int ix, int iy) const {
  return values[static_cast<size_t>(iy) * static_cast<size_t>(spec.nx) + static_cast<size_t>(ix)];
}

GridResult evaluate_grid(const GridSpec& spec, int threads) {
  validate(spec);
  GridResult g{spec, {}};
  g.values.resize(static_cast<size_t>(spec.nx) * static_cast<size_t>(spec.ny));
  auto run_rows = [&](int iy_begin, int iy_end) {
    for (int iy = iy_begin; iy < iy_end; ++iy) {
      const double y = g.node_y(iy);
      for (int ix = 0; ix < spec.nx; ++ix) {
        g.values[static_cast<size_t>(iy) * static_cast<size_t>(spec.nx) +
                 static_cast<size_t>(ix)] = evaluate_node(spec, g.node_x(ix), y);
      }
    }
  };
  threads = std::max(1, std::min(threads, spec.ny));
  if (threads == 1) {
    run_rows(0, spec.ny);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (spec.ny + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int lo = t * chunk;
      const int hi = std::min(spec.ny, lo + chunk);
      if (lo < hi) pool.emplace_back(run_rows, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return g;
}

std::string to_csv(const GridResult& g) {
  std::string out = "x,y,value,branch,residual\n";
  for (int iy = 0; iy < g.spec.ny; ++iy) {
    for (int ix = 0; ix < g.spec.nx; ++ix) {
      const GridNode& node = g.at(ix, iy);
      append_double(out, g.node_x(ix));
      out.push_back(',');
      append_double(out, g.node_y(iy));
      out.push_back(',');
      append_double(out, node.value);
      out.push_back(',');
      out += to_string(node.branch);
      out.push_back(',');
      append_double(out, node.residual);
      out.push_back('\n');
    }
  }
  return out;
}

void write_csv(const GridResult& g, const std::filesystem::path& path) {
  write_file(path, to_csv(g));
}

std::string to_json(const GridResult& g) {
  nlohmann::json j;
  j["spec"] = {{"chart", to_string(g.spec.chart)},
               {"leaf", {{"outer_sign", g.spec.leaf.outer_sign}, {"z3_sign", g.spec.leaf.z3_sign}}},
               {"x_range", {g.spec.x_min, g.spec.x_max}},
               {"y_range", {g.spec.y_min, g.spec.y_max}},
               {"nx", g.spec.nx},
               {"ny", g.spec.ny},
               {"params", {{"R", g.spec.params.R}, {"r", g.spec.params.r}}}};
  nlohmann::json rows = nlohmann::json::array();
  for (const GridNode& node : g.values) {
    rows.push_back({node.value, node.branch == ActiveBranch::IntervalTerm ? 0 : 1, node.residual});
  }
  j["values"] = std::move(rows);
  return j.dump();
}

void write_json(const GridResult& g, const std::filesystem::path& path) {
  write_file(path, to_json(g));
}

GridResult grid_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const auto& s = j.at("spec");
  GridSpec spec{grid_chart_from_string(s.at("chart").get<std::string>()),
                LeafIndex{s.at("leaf").at("outer_sign").get<int>(),
                          s.at("leaf").at("z3_sign").get<int>()},
                s.at("x_range").at(0).get<double>(),
                s.at("x_range").at(1).get<double>(),
                s.at("y_range").at(0).get<double>(),
                s.at("y_range").at(1).get<double>(),
                s.at("nx").get<int>(),
                s.at("ny").get<int>(),
                TorusParams(s.at("params").at("R").get<double>(),
                            s.at("params").at("r").get<double>())};
  GridResult g{spec, {}};
  for (const auto& row : j.at("values")) {
    g.values.push_back(GridNode{row.at(0).get<double>(),
                                row.at(1).get<int>() == 0 ? ActiveBranch::IntervalTerm
                                                          : ActiveBranch::SimplexTerm,
                                row.at(2).get<double>()});
  }
  if (g.values.size() != static_cast<size_t>(spec.nx) * static_cast<size_t>(spec.ny)) {
    throw std::invalid_argument("grid_from_json: value count does not match nx * ny");
  }
  return g;
}

std::string to_svg(const GridResult& g, ColorMap map) {
  const int margin = 60;
  const int plot_w = 640;
  const int plot_h = 480;
  const int width = plot_w + 2 * margin;
  const int height = plot_h + 2 * margin;
  double vmax = 0.0;
  for (const GridNode& node : g.values) {
    if (std::isfinite(node.value)) vmax = std::max(vmax, node.value);
  }
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
  out += std::to_string(width);
  out += "\" height=\"";
  out += std::to_string(height);
  out += "\">\n";
  const double cell_w = static_cast<double>(plot_w) / g.spec.nx;
  const double cell_h = static_cast<double>(plot_h) / g.spec.ny;
  char buf[160];
  for (int iy = 0; iy < g.spec.ny; ++iy) {
    for (int ix = 0; ix < g.spec.nx; ++ix) {
      const GridNode& node = g.at(ix, iy);
      const double t = vmax > 0.0 && std::isfinite(node.value) ? node.value / vmax : 0.0;
      const Rgb c = colorize(t, map);
      // y axis points up: row 0 at the bottom
      const double px = margin + ix * cell_w;
      const double py = margin + (g.spec.ny - 1 - iy) * cell_h;
      std::snprintf(buf, sizeof(buf),
                    "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
                    "fill=\"#%02x%02x%02x\"/>\n",
                    px, py, cell_w, cell_h, c.r, c.g, c.b);
      out += buf;
    }
  }
  auto label = [&](double x, double y, const std::string& text, const char* anchor) {
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"14\" font-family=\"monospace\" "
                  "text-anchor=\"%s\">%s</text>\n",
                  x, y, anchor, text.c_str());
    out += buf;
  };
  auto fmt = [](double v) {
    std::string s;
    append_double(s, v);
    return s;
  };
  label(margin, height - margin + 20.0, fmt(g.spec.x_min), "middle");
  label(margin + plot_w, height - margin + 20.0, fmt(g.spec.x_max), "middle");
  label(margin - 8.0, height - margin, fmt(g.spec.y_min), "end");
  label(margin - 8.0, margin + 12.0, fmt(g.spec.y_max), "end");
  label(width / 2.0, margin - 16.0,
        std::string(to_string(g.spec.chart)) + " max=" + fmt(vmax), "middle");
  out += "</svg>\n";
  return out;
}

void render_svg(const GridResult& g, const std::filesystem::path& path, ColorMap map) {
  write_file(path, to_svg(g, map));
}

std::vector<std::pair<std::string, GridSpec>> figure_fixture_specs() {
  const TorusParams p(2.0, 1.0);
  std::vector<std::pair<std::string, GridSpec>> out;
  const int n = 65;
  out.emplace_back("fig1_real_leaf_plus",
                   GridSpec{GridChart::LeafRealZ1Z2, LeafIndex{+1, +1}, -4, 4, -4, 4, n, n, p});
  out.emplace_back("fig1_real_leaf_minus",
                   GridSpec{GridChart::LeafRealZ1Z2, LeafIndex{-1, +1}, -4, 4, -4, 4, n, n, p});
  out.emplace_back("fig1_cz1_leaf_plus",
                   GridSpec{GridChart::LeafComplexZ1, LeafIndex{+1, +1}, -4, 4, -3, 3, n, n, p});
  out.emplace_back("fig1_cz1_leaf_minus",
                   GridSpec{GridChart::LeafComplexZ1, LeafIndex{-1, +1}, -4, 4, -3, 3, n, n, p});
  out.emplace_back("fig2_real_glued",
                   GridSpec{GridChart::GluedRealZ1Z2, LeafIndex{+1, +1}, -4, 4, -4, 4, n, n, p});
  out.emplace_back("fig2_cz1_glued",
                   GridSpec{GridChart::GluedComplexZ1, LeafIndex{+1, +1}, -4, 4, -3, 3, n, n, p});
  return out;
}

}  // namespace vtorus
