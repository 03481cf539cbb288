#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ttomo/commands.hpp"

using namespace ttomo;

namespace {

struct Flags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<double> tolerance;
  std::optional<int> k_max;
  std::optional<std::string> psi;
  std::optional<std::string> sinogram;
  std::optional<int> order;
  std::optional<std::string> attenuation_file;
  bool oracle = false;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON config file");
  sub->add_option("--seed", f.seed, "phantom seed");
  sub->add_option("--out-dir", f.out_dir, "output directory");
  sub->add_option("--tolerance", f.tolerance, "range residual tolerance");
  sub->add_option("--kmax", f.k_max, "number of augmented odd-order conditions");
  sub->add_option("--sinogram", f.sinogram, "input sinogram header (.json)");
  sub->add_option("--order", f.order, "tensor order m");
  sub->add_option("--attenuation-file", f.attenuation_file, "grid attenuation header (.json)");
}

Config resolve(const Flags& f) {
  Config c = f.config.empty() ? Config{} : load_config(f.config);
  if (f.seed) c.seed = *f.seed;
  if (f.out_dir) c.out_dir = *f.out_dir;
  if (f.tolerance) c.tolerance = *f.tolerance;
  if (f.k_max) c.k_max = *f.k_max;
  if (f.psi) c.psi = *f.psi;
  if (f.sinogram) c.sinogram = *f.sinogram;
  if (f.order) c.order = *f.order;
  if (f.attenuation_file) {
    c.attenuation.kind = "file";
    c.attenuation.file = *f.attenuation_file;
  }
  if (f.oracle) c.oracle = true;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tensor tomography toolkit: forward data, range checks, reconstruction"};
  app.require_subcommand(1);
  Flags flags;
  SelfcheckOptions sc;

  auto* forward = app.add_subcommand("forward", "synthesize a phantom and its sinogram");
  auto* check = app.add_subcommand("check", "test a sinogram against the range conditions");
  auto* recon = app.add_subcommand("reconstruct", "reconstruct a tensor field from a sinogram");
  auto* dump = app.add_subcommand("dump-modes", "write the angular Fourier modes of a sinogram");
  auto* self = app.add_subcommand("selfcheck", "fast invariant suite");
  for (auto* s : {forward, check, recon, dump}) add_common(s, flags);
  recon->add_option("--psi", flags.psi, "free-mode strategy")->check(CLI::IsMember({"zero", "harmonic", "oracle"}));
  recon->add_flag("--oracle", flags.oracle, "rebuild the configured phantom for oracle modes and field error");
  self->add_flag("--mutate-law", sc.mutate_law, "flip one sign of the tensor conversion law");
  self->add_option("--probe-n-theta", sc.probe_n_theta, "angular samples of the sampling-bound probe");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*self) return cmd_selfcheck(sc, std::cout);
    const Config c = resolve(flags);
    if (*forward) return cmd_forward(c, std::cout);
    if (*check) return cmd_check(c, std::cout);
    if (*recon) return cmd_reconstruct(c, std::cout);
    if (*dump) return cmd_dump_modes(c, std::cout);
  } catch (const Error& e) {
    std::cerr << error_json(e).dump(2) << "\n";
    return exit_code_for(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << error_json(Error(ErrorKind::Io, e.what())).dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << error_json(Error(ErrorKind::InvalidArgument, e.what())).dump(2) << "\n";
    return 3;
  }
  return 0;
}
