// Writes the reference figures as SVG files:
//   delta1_heights.svg  Delta0 clipped by (h+1)(x-y) < 1 for h = 3/2, 2, 3
//   delta2_heights.svg  Delta0 clipped by (h+1)x - y < 1 for the same h
//   deltaM_<M>.svg      Delta_M and its reference lines for M = 3..6
//
// usage: figures [output-dir]   (default: current directory)

#include "maxregion/plot.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace maxregion;

namespace {

bool write(const std::filesystem::path& path, const PlotSpec& spec) {
  std::ofstream out(path, std::ios::binary);
  out << render(spec);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return false;
  }
  std::cout << path.string() << "\n";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : ".";
  std::filesystem::create_directories(dir);
  const std::vector<Rational> heights{make_rational(3, 2), Rational(2), Rational(3)};
  bool ok = write(dir / "delta1_heights.svg", figure_height_family(heights, false));
  ok = write(dir / "delta2_heights.svg", figure_height_family(heights, true)) && ok;
  for (unsigned M = 3; M <= 6; ++M) ok = write(dir / ("deltaM_" + std::to_string(M) + ".svg"), figure_deltaM(M)) && ok;
  return ok ? 0 : 1;
}
