// maxregion: classify a homogeneous polynomial, compute its (1/p, 1/q)
// regions, run the numerical cross-checks, or draw the regions as SVG.
//
//   maxregion <classify|region|verify|plot> <poly> [--c zero|nonzero|<rational>]
//             [--svg PATH] [--json PATH] [--seed N] [--tol X] [--grid N] [--smax X]
//
// Exit codes: 0 ok, 1 I/O failure, 2 usage, 3 parse or classification error,
// 4 verification failure.

#include "maxregion/numverify.hpp"
#include "maxregion/plot.hpp"
#include "maxregion/serialize.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

namespace {

using namespace maxregion;

constexpr int kIoError = 1;
constexpr int kUsage = 2;
constexpr int kClassification = 3;
constexpr int kVerifyFailed = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string verb;
  std::string polynomial;
  std::string c_mode = "zero";
  std::string svg_path;
  std::string json_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<unsigned> grid;
  std::optional<double> smax;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!(out << text)) throw IoError("cannot write " + path);
}

bool c_nonzero(const std::string& mode) {
  if (mode == "zero") return false;
  if (mode == "nonzero") return true;
  Rational c;
  try {
    c = Rational(mode);
    c.canonicalize();
  } catch (const std::invalid_argument&) {
    throw UsageError("--c expects zero, nonzero or a rational, got '" + mode + "'");
  }
  if (c.get_den() == 0) throw UsageError("--c: zero denominator");
  std::cerr << "notice: only whether c is zero enters the regions; using c " << (c == 0 ? "= 0" : "!= 0") << "\n";
  return c != 0;
}

std::uint64_t seed_of(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("MAXREGION_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*env == '\0' || *end != '\0' || *env == '-') throw UsageError(std::string("MAXREGION_SEED is not a seed: ") + env);
    return v;
  }
  return 0;
}

// Region and plot need case III with a nonvanishing Hessian.
Classification classify_for_regions(const std::string& text) {
  Classification c = classify(parse(text));
  if (c.case_tag() != CaseTag::III || c.profile.hessian_identically_zero) throw NotApplicable(c.notice);
  return c;
}

int run(const Options& o) {
  if (o.verb == "classify") {
    emit(dump(to_json(classify(parse(o.polynomial)))), o.json_path);
    return 0;
  }
  if (o.verb == "region") {
    const bool nz = c_nonzero(o.c_mode);
    const Classification c = classify_for_regions(o.polynomial);
    emit(dump(region_report(c, nz)), o.json_path);
    if (!o.svg_path.empty()) emit(render(figure_regions(c, nz)), o.svg_path);
    return 0;
  }
  if (o.verb == "plot") {
    const bool nz = c_nonzero(o.c_mode);
    emit(render(figure_regions(classify_for_regions(o.polynomial), nz)), o.svg_path);
    return 0;
  }
  // verify
  VerifyOptions v;
  v.seed = seed_of(o);
  if (o.tol) v.flatness.coeff_tol = *o.tol;
  if (o.grid) v.flatness.n_grid = *o.grid;
  if (o.smax) v.flatness.s_max = *o.smax;
  const VerificationReport rep = verify(classify(parse(o.polynomial)), v);
  emit(dump(to_json(rep)), o.json_path);
  return rep.passed() ? 0 : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lp-improving regions for maximal operators along homogeneous surfaces"};
  app.set_help_flag("-h,--help", "Print this help message and exit");
  Options o;
  app.add_option("verb", o.verb, "classify | region | verify | plot")
      ->required()
      ->check(CLI::IsMember({"classify", "region", "verify", "plot"}));
  app.add_option("polynomial", o.polynomial, "homogeneous polynomial in x1, x2, e.g. \"x1^3+x2^3\"")->required();
  app.add_option("--c", o.c_mode, "zero | nonzero | a rational value (only its sign class is used)");
  app.add_option("--svg", o.svg_path, "write SVG here (plot: default stdout)");
  app.add_option("--json", o.json_path, "write JSON here instead of stdout");
  app.add_option("--seed", o.seed, "seed for randomized checks (default: $MAXREGION_SEED or 0)");
  app.add_option("--tol", o.tol, "flatness coefficient tolerance")->check(CLI::PositiveNumber);
  app.add_option("--grid", o.grid, "flatness grid points")->check(CLI::Range(3u, 100001u));
  app.add_option("--smax", o.smax, "flatness half-window")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << "usage: maxregion <classify|region|verify|plot> <poly> [options]\n";
    return kUsage;
  }

  try {
    return run(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const maxregion::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kClassification;
  }
}
