#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cdyn/config.hpp"
#include "cdyn/csv_report.hpp"
#include "cdyn/error.hpp"
#include "cdyn/labs.hpp"
#include "cdyn/rc_diagnostics.hpp"
#include "cdyn/suites.hpp"

namespace fs = std::filesystem;
using namespace cdyn;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All output is assembled first and written once.
void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  const fs::path p(out_path);
  if (p.has_parent_path() && !fs::is_directory(p.parent_path()))
    throw UsageError("output directory does not exist: " + p.parent_path().string());
  std::ofstream f(p, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out_path);
  f << text;
}

struct VerifyArgs {
  std::string config;
  std::string suite = "all";
  std::uint64_t seed = 1;
  double tol = 1e-9;
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  const SystemConfig cfg = load_config(a.config);
  std::ostringstream os;
  os << "# config " << fs::path(a.config).filename().string() << ", seed " << a.seed << ", tol " << csv_number(a.tol)
     << "\n";
  bool ok = true;
  for (const SuiteReport& r : run_suites(cfg.system, a.suite, a.seed, a.tol)) {
    write_report(os, r);
    ok = ok && r.pass();
  }
  os << "result " << (ok ? "pass" : "FAIL") << "\n";
  emit(a.out, os.str());
  return ok ? kPass : kCheckFailed;
}

struct RcArgs {
  std::string config;
  std::string pair = "identity,identity";
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_rc_modulus(const RcArgs& a) {
  const SystemConfig cfg = load_config(a.config);
  const auto comma = a.pair.find(',');
  if (comma == std::string::npos) throw UsageError("--pair expects two names separated by a comma");
  const std::string pn = a.pair.substr(0, comma), qn = a.pair.substr(comma + 1);
  std::mt19937_64 rng(a.seed);
  auto lookup = [&](const std::string& name) -> Mat {
    if (auto it = cfg.elements.find(name); it != cfg.elements.end()) return it->second;
    if (name == "identity") return Mat::Identity(cfg.system.dim(), cfg.system.dim());
    if (name == "random") return cfg.system.random_element(rng);
    throw UsageError("unknown element '" + name + "'");
  };
  const Mat p = lookup(pn);
  const Mat q = lookup(qn);
  const RcTable t = rc_modulus(cfg.system, p, q);
  std::ostringstream os;
  write_rc_csv(os, cfg.system, t, pn, qn);
  emit(a.out, os.str());
  return kPass;
}

struct LabArgs {
  std::string experiment;
  int window = 64;
  int grid = 0;  // experiment default when 0
  double tol = 1e-10;
  std::string phi, psi, delta;
  std::vector<std::string> family{"e0", "e1", "e2", "e3"};
  std::vector<double> weights{1.0, 0.5, 0.25, 0.125};
  std::string out;
};

std::vector<cplx> circle_grid(int m) {
  std::vector<cplx> z;
  for (int k = 0; k < m; ++k) z.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / m));
  return z;
}

int cmd_shift_lab(const LabArgs& a) {
  const labs::ShiftWindow w{a.window};
  auto pick = [&](const std::string& name, const char* fallback) { return name.empty() ? std::string(fallback) : name; };
  std::ostringstream os;
  bool ok = true;
  const std::string& e = a.experiment;

  if (e == "sum") {
    const std::string pn = pick(a.phi, "smooth-phi");
    const labs::CircleFunction phi = labs::named_fixture(pn, w);
    const int B = phi.bandwidth();
    std::vector<int> ks{0, a.window / 8, a.window / 4, a.window / 2, a.window - B};
    ks.erase(std::remove_if(ks.begin(), ks.end(), [&](int k) { return k < 0 || k > a.window - B; }), ks.end());
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    if (ks.empty()) throw WindowError("shift-lab sum: bandwidth exceeds the window");
    std::vector<labs::ShiftSumReport> rows;
    for (int k : ks) {
      rows.push_back(labs::shift_sum_check(phi, w, k));
      ok = ok && rows.back().residual <= a.tol;
    }
    write_shift_sum_csv(os, pn, rows, B);
  } else if (e == "fourier") {
    const std::string pn = pick(a.phi, "smooth-phi");
    const labs::CircleFunction phi = labs::named_fixture(pn, w);
    std::vector<labs::FourierShiftReport> rows;
    for (cplx z : circle_grid(a.grid ? a.grid : 16)) {
      rows.push_back(labs::fourier_coeff_shift(phi, z, w));
      ok = ok && rows.back().residual <= a.tol;
    }
    write_fourier_shift_csv(os, pn, a.window, phi.bandwidth(), rows);
  } else if (e == "dichotomy") {
    const std::string pn = pick(a.phi, "smooth-phi"), qn = pick(a.psi, "smooth-psi");
    const int g = a.grid ? a.grid : 64;
    const labs::DichotomyTable t =
        labs::rc_dichotomy(labs::named_fixture(pn, w), labs::named_fixture(qn, w), w, g, g);
    ok = t.all_pass();
    write_dichotomy_csv(os, t, pn, qn);
  } else if (e == "cube") {
    const std::string pn = pick(a.phi, "smooth-phi"), qn = pick(a.psi, "smooth-psi");
    const labs::CircleFunction phi = labs::named_fixture(pn, w), psi = labs::named_fixture(qn, w);
    std::vector<labs::CubeReport> rows;
    for (cplx z : circle_grid(a.grid ? a.grid : 16)) {
      rows.push_back(labs::reverse_cube_bound(phi, psi, w, z));
      ok = ok && rows.back().holds();
    }
    write_cube_csv(os, pn, qn, a.window, rows);
  } else if (e == "twist") {
    const std::string dn = pick(a.delta, "phase-step"), pn = pick(a.phi, "e0"), qn = pick(a.psi, "e0");
    const int g = a.grid ? a.grid : 64;
    const labs::TwistReport r = labs::delta_twist_demo(labs::named_fixture(dn, w), labs::named_fixture(pn, w),
                                                       labs::named_fixture(qn, w), w, g, g);
    ok = r.commute_residual <= a.tol;
    write_twist_csv(os, r, dn, pn, qn);
  } else if (e == "positive") {
    if (a.family.size() != a.weights.size()) throw UsageError("--family and --weights differ in length");
    std::vector<labs::CircleFunction> phis;
    for (const auto& n : a.family) phis.push_back(labs::named_fixture(n, w));
    const labs::PositiveReport r = labs::positive_decomposition(a.weights, phis, w);
    ok = r.agree;
    write_positive_csv(os, a.weights, a.family, a.window, r);
  } else {
    throw UsageError("unknown experiment '" + e + "'");
  }
  emit(a.out, os.str());
  return ok ? kPass : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite crossed-product verification and shift-lab experiments"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification suite on a configured system");
  verify->add_option("--config", va.config, "System config (JSON)")->required();
  verify->add_option("--suite", va.suite, "module, crossed, fourier, rc, fell or all")
      ->check(CLI::IsMember({"module", "crossed", "fourier", "rc", "fell", "all"}));
  verify->add_option("--seed", va.seed, "Seed for the random test elements");
  verify->add_option("--tol", va.tol, "Threshold on relative residuals");
  verify->add_option("--out", va.out, "Report path (default stdout)");

  RcArgs ra;
  auto* rc = app.add_subcommand("rc-modulus", "Tabulate the relative continuity modulus of a pair");
  rc->add_option("--config", ra.config, "System config (JSON)")->required();
  rc->add_option("--pair", ra.pair, "p,q: element names, 'identity' or 'random'");
  rc->add_option("--seed", ra.seed, "Seed used by 'random' elements");
  rc->add_option("--out", ra.out, "CSV path (default stdout)");

  LabArgs la;
  auto* lab = app.add_subcommand("shift-lab", "Truncated bilateral-shift experiments");
  lab->add_option("experiment", la.experiment, "sum, fourier, dichotomy, cube, twist or positive")
      ->required()
      ->check(CLI::IsMember({"sum", "fourier", "dichotomy", "cube", "twist", "positive"}));
  lab->add_option("--window", la.window, "Window half-width N");
  lab->add_option("--grid", la.grid, "Circle grid size");
  lab->add_option("--tol", la.tol, "Threshold for exactness residuals");
  lab->add_option("--phi", la.phi, "Circle fixture for phi");
  lab->add_option("--psi", la.psi, "Circle fixture for psi");
  lab->add_option("--delta", la.delta, "Unimodular fixture for the twist");
  lab->add_option("--family", la.family, "Orthonormal fixtures for positive")->delimiter(',');
  lab->add_option("--weights", la.weights, "Positive weights for positive")->delimiter(',');
  lab->add_option("--out", la.out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(va);
    if (*rc) return cmd_rc_modulus(ra);
    if (*lab) return cmd_shift_lab(la);
  } catch (const UsageError& e) {
    std::cerr << "cdyn: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "cdyn: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
