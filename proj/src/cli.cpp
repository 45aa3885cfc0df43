#include "vlt/cli.hpp"

#include <cstdio>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "vlt/config.hpp"
#include "vlt/container_io.hpp"
#include "vlt/csvio.hpp"
#include "vlt/phantom.hpp"
#include "vlt/projector.hpp"
#include "vlt/recon.hpp"
#include "vlt/solver.hpp"

namespace vlt {
namespace {

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError("expected a comma separated number list, got \"" +
                                 text + "\"");
    }
    if (used != item.size())
      throw CLI::ValidationError("expected a comma separated number list, got \"" +
                                 text + "\"");
    out.push_back(v);
  }
  if (out.empty())
    throw CLI::ValidationError("expected a non-empty number list");
  return out;
}

void print_timings(const ReconTimings& tm) {
  const auto line = [](const char* stage, double secs) {
    std::printf("%-11s %9.6f s\n", stage, secs);
  };
  line("analyze", tm.analyze_s);
  line("assemble", tm.assemble_s);
  line("solve", tm.solve_s);
  line("synthesize", tm.synthesize_s);
  line("resample", tm.resample_s);
  line("total", tm.total());
}

struct PhantomArgs {
  std::string preset = "three-discs";
  std::string file;
  int M = 100;
  double R = 8.0;
  std::string output;
};

struct ForwardArgs {
  double mu = 0.15;
  int P = 100;
  int Q = 100;
  std::string input;
  std::string output;
};

struct NoiseArgs {
  long long total_counts = 0;
  std::uint64_t seed = 1;
  std::string input;
  std::string output;
};

struct ReconArgs {
  double lambda = 8e-4;
  double lambda0 = 0.0;
  double mu = 0.15;
  bool mu_given = false;
  int M = 100;
  bool timings = false;
  std::string input;
  std::string output;
};

struct SweepArgs {
  std::string lambdas;
  double lambda0 = 0.0;
  double mu = 0.15;
  bool mu_given = false;
  std::string input;
  std::string ref;
  std::string output;
};

struct DiagArgs {
  bool cond = false;
  int n_max = 50;
  int kernel_n = 0;
  bool kernel_given = false;
  double mu = 0.15;
  double R = 8.0;
  int Q = 100;
  std::string output;
  std::string spectra;
};

struct ErrorArgs {
  std::string a;
  std::string b;
};

struct ExportArgs {
  std::string input;
  std::string output;
};

int run_phantom(const PhantomArgs& a) {
  EllipsePhantom ph;
  if (!a.file.empty())
    ph = load_phantom(a.file);
  else if (a.preset == "disc")
    ph = centered_disc_preset();
  else
    ph = three_discs_preset();
  save_image(a.output, rasterize(ph, a.M, a.R));
  return 0;
}

int run_forward(const ForwardArgs& a) {
  const CartesianImage img = load_image(a.input);
  const ScanConfig cfg = ScanConfig::with_uniform_lambda(
      img.radius_R(), a.mu, a.P, a.Q, img.half_width_M(), 0.0);
  save_sinogram(a.output, forward_vline(img, cfg));
  return 0;
}

int run_noise(const NoiseArgs& a) {
  const VSinogram sino = load_sinogram(a.input);
  const NoisySinogram noisy = poisson_noise(sino, a.total_counts, a.seed);
  save_sinogram(a.output, noisy.sino);
  std::cout << "max bin count: " << noisy.max_bin_count << '\n';
  return 0;
}

int run_recon(const ReconArgs& a) {
  const VSinogram sino = load_sinogram(a.input);
  const double mu = a.mu_given ? a.mu : sino.mu;
  const ScanConfig cfg = ScanConfig::with_uniform_lambda(
      sino.radius_R, mu, sino.P, sino.Q, a.M, a.lambda, a.lambda0);
  ReconTimings tm;
  const CartesianImage img = reconstruct(sino, cfg, &tm);
  save_image(a.output, img);
  if (a.timings) print_timings(tm);
  return 0;
}

int run_sweep(const SweepArgs& a) {
  const std::vector<double> lambdas = parse_number_list(a.lambdas);
  const VSinogram sino = load_sinogram(a.input);
  const CartesianImage ref = load_image(a.ref);
  const double mu = a.mu_given ? a.mu : sino.mu;
  const ScanConfig cfg = ScanConfig::with_uniform_lambda(
      sino.radius_R, mu, sino.P, sino.Q, ref.half_width_M(), 0.0, a.lambda0);
  const auto curve = lambda_sweep(sino, cfg, lambdas, ref);
  std::vector<std::vector<double>> rows;
  rows.reserve(curve.size());
  for (const auto& [lambda, err] : curve) rows.push_back({lambda, err});
  write_csv(a.output, {"lambda", "rel_l2_error"}, rows);
  return 0;
}

int run_diag(const DiagArgs& a) {
  const ScanConfig cfg =
      ScanConfig::with_uniform_lambda(a.R, a.mu, 2, a.Q, 1, 0.0);
  if (a.kernel_given) {
    save_kernel_matrix(a.output, assemble_kernel_matrix(a.kernel_n, cfg), a.mu,
                       a.R);
    return 0;
  }
  std::vector<std::vector<double>> cond_rows;
  std::vector<std::vector<double>> spectra_rows;
  for (int n = 0; n <= a.n_max; ++n) {
    const AbelKernelMatrix K = assemble_kernel_matrix(n, cfg);
    const auto sigma = singular_values(K);
    const double kappa =
        sigma.back() > 0.0
            ? sigma.front() / sigma.back()
            : std::numeric_limits<double>::infinity();
    cond_rows.push_back({static_cast<double>(n), kappa});
    if (!a.spectra.empty())
      for (std::size_t i = 0; i < sigma.size(); ++i)
        spectra_rows.push_back(
            {static_cast<double>(n), static_cast<double>(i), sigma[i]});
  }
  write_csv(a.output, {"n", "condition_number"}, cond_rows);
  if (!a.spectra.empty())
    write_csv(a.spectra, {"n", "index", "sigma"}, spectra_rows);
  return 0;
}

int run_error(const ErrorArgs& a) {
  const CartesianImage lhs = load_image(a.a);
  const CartesianImage rhs = load_image(a.b);
  std::cout << to_string_shortest(relative_l2_error(lhs, rhs)) << '\n';
  return 0;
}

int run_export(const ExportArgs& a) {
  export_pgm(a.output, load_image(a.input));
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"attenuated V-line transform: simulation and inversion"};
  app.require_subcommand(1);

  PhantomArgs phantom_args;
  auto* phantom = app.add_subcommand(
      "phantom", "rasterize a preset or JSON phantom description");
  phantom->add_option("--preset", phantom_args.preset, "three-discs or disc")
      ->check(CLI::IsMember({"three-discs", "disc"}));
  phantom->add_option("--file", phantom_args.file,
                      "JSON phantom description (overrides --preset)");
  phantom->add_option("--M", phantom_args.M, "grid half-width");
  phantom->add_option("--R", phantom_args.R, "scan radius");
  phantom->add_option("-o,--output", phantom_args.output, "image container")
      ->required();

  ForwardArgs forward_args;
  auto* forward =
      app.add_subcommand("forward", "simulate an attenuated V-line scan");
  forward->add_option("--mu", forward_args.mu, "attenuation coefficient");
  forward->add_option("--P", forward_args.P, "vertex angle count");
  forward->add_option("--Q", forward_args.Q, "opening angle count");
  forward->add_option("-i,--input", forward_args.input, "image container")
      ->required();
  forward->add_option("-o,--output", forward_args.output, "sinogram container")
      ->required();

  NoiseArgs noise_args;
  auto* noise =
      app.add_subcommand("noise", "apply Poisson photon statistics to data");
  noise->add_option("--total-counts", noise_args.total_counts,
                    "expected photon budget over the whole scan")
      ->required();
  noise->add_option("--seed", noise_args.seed, "RNG seed");
  noise->add_option("-i,--input", noise_args.input, "sinogram container")
      ->required();
  noise->add_option("-o,--output", noise_args.output, "sinogram container")
      ->required();

  ReconArgs recon_args;
  auto* recon = app.add_subcommand("recon", "invert a V-line sinogram");
  recon->add_option("--lambda", recon_args.lambda,
                    "Tikhonov parameter for harmonics n != 0");
  recon->add_option("--lambda0", recon_args.lambda0,
                    "Tikhonov parameter for harmonic 0");
  auto* recon_mu = recon->add_option(
      "--mu", recon_args.mu,
      "assumed attenuation (defaults to the value recorded in the data)");
  recon->add_option("--M", recon_args.M, "output grid half-width");
  recon->add_flag("--timings", recon_args.timings,
                  "print per-stage wall-clock seconds");
  recon->add_option("-i,--input", recon_args.input, "sinogram container")
      ->required();
  recon->add_option("-o,--output", recon_args.output, "image container")
      ->required();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand(
      "sweep", "reconstruction error across a Tikhonov parameter ladder");
  sweep->add_option("--lambdas", sweep_args.lambdas,
                    "comma separated, positive, strictly increasing")
      ->required();
  sweep->add_option("--lambda0", sweep_args.lambda0,
                    "Tikhonov parameter for harmonic 0");
  auto* sweep_mu = sweep->add_option(
      "--mu", sweep_args.mu,
      "assumed attenuation (defaults to the value recorded in the data)");
  sweep->add_option("-i,--input", sweep_args.input, "sinogram container")
      ->required();
  sweep->add_option("--ref", sweep_args.ref, "reference image container")
      ->required();
  sweep->add_option("-o,--output", sweep_args.output, "CSV path")->required();

  DiagArgs diag_args;
  auto* diag =
      app.add_subcommand("diag", "kernel matrix diagnostics for one geometry");
  diag->add_flag("--cond", diag_args.cond,
                 "write condition numbers for harmonics 0..n-max");
  diag->add_option("--n-max", diag_args.n_max, "largest harmonic for --cond");
  auto* diag_kernel = diag->add_option("--kernel", diag_args.kernel_n,
                                       "dump the kernel matrix for one harmonic");
  diag->add_option("--mu", diag_args.mu, "attenuation coefficient");
  diag->add_option("--R", diag_args.R, "scan radius");
  diag->add_option("--Q", diag_args.Q, "radial sample count");
  diag->add_option("-o,--output", diag_args.output, "CSV path (or container "
                   "base for --kernel)")
      ->required();
  diag->add_option("--spectra", diag_args.spectra,
                   "also write full singular spectra to this CSV");

  ErrorArgs error_args;
  auto* error_cmd = app.add_subcommand(
      "error", "relative L2 distance between two image containers");
  error_cmd->add_option("-a", error_args.a, "image container")->required();
  error_cmd->add_option("-b", error_args.b, "reference image container")
      ->required();

  ExportArgs export_args;
  auto* export_cmd =
      app.add_subcommand("export-pgm", "8-bit preview of an image container");
  export_cmd->add_option("-i,--input", export_args.input, "image container")
      ->required();
  export_cmd->add_option("-o,--output", export_args.output, "PGM path")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  recon_args.mu_given = recon_mu->count() > 0;
  sweep_args.mu_given = sweep_mu->count() > 0;
  diag_args.kernel_given = diag_kernel->count() > 0;

  try {
    if (app.got_subcommand(phantom)) return run_phantom(phantom_args);
    if (app.got_subcommand(forward)) return run_forward(forward_args);
    if (app.got_subcommand(noise)) return run_noise(noise_args);
    if (app.got_subcommand(recon)) return run_recon(recon_args);
    if (app.got_subcommand(sweep)) return run_sweep(sweep_args);
    if (app.got_subcommand(diag)) {
      if (!diag_args.cond && !diag_args.kernel_given) {
        std::cerr << "diag: pass --cond and/or --kernel\n";
        return 1;
      }
      return run_diag(diag_args);
    }
    if (app.got_subcommand(error_cmd)) return run_error(error_args);
    if (app.got_subcommand(export_cmd)) return run_export(export_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("vlt");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace vlt
