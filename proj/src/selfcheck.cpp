#include "ttomo/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ttomo/a_analytic.hpp"
#include "ttomo/attenuation.hpp"
#include "ttomo/errors.hpp"
#include "ttomo/mode_sequence.hpp"
#include "ttomo/tensor_algebra.hpp"

namespace ttomo {

namespace {

SelfcheckItem below(std::string name, double v, double thr, std::string detail = {}) {
  return {std::move(name), v, thr, std::isfinite(v) && v <= thr, std::move(detail)};
}

}  // namespace

std::vector<SelfcheckItem> run_selfcheck(const SelfcheckOptions& opt) {
  std::vector<SelfcheckItem> out;
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);

  // Conversions and contractions against the (possibly mutated) law.
  double conv = 0.0, contr = 0.0;
  for (int m = 0; m <= 6; ++m) {
    TensorLaw law = build_tensor_law(m);
    if (opt.mutate_law && m >= 1) law.to_complex[1] = -law.to_complex[1];
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> ft(m + 1);
      for (auto& v : ft) v = U(rng);
      const auto F = pseudovector_to_complex(ft, law);
      std::vector<double> back;
      try {
        back = complex_to_pseudovector(F, tensor_law(m));
      } catch (const Error&) {
        conv = INFINITY;
        continue;
      }
      for (int k = 0; k <= m; ++k) conv = std::max(conv, std::abs(back[k] - ft[k]));
      const auto modes = modes_from_complex(F);
      for (int j = 0; j < 16; ++j) {
        const Direction d(kTwoPi * j / 16 + 0.1);
        contr = std::max(contr, std::abs(contract_direct(ft, d) - contract_modes(modes, d)));
      }
    }
  }
  out.push_back(below("conversion roundtrip m<=6", conv, 1e-12));
  out.push_back(below("contraction direct vs modes", contr, 1e-10));

  // e^{-+h}: one-sided spectra and e^{G} e^{-G} = I.
  const ConvexDomain disk = ConvexDomain::unit_disk();
  RadialSmoothAttenuation a(disk, 0.5, 1.0, 0.4);
  std::vector<cplx> pts = {{0.0, 0.0}, {0.3, -0.2}, {-0.5, 0.4}, {0.0, 0.9}, {0.99, 0.0}};
  const auto b = build_bundle(a, pts, 64, 24);
  out.push_back(below("negative modes of e^{-h}", b.max_negative_mode, 1e-6));
  out.push_back(below("alpha * beta - delta", b.max_convolution_defect, 1e-8));
  ModeSequence s(pts.size(), 20, 0, 1, Parity::Full);
  for (auto& v : s.raw()) v = {U(rng), U(rng)};
  const auto back = apply_eG(apply_eG(s, -1, b), 1, b);
  double inv = 0.0;
  for (std::size_t k = 0; k < s.raw().size(); ++k) inv = std::max(inv, std::abs(back.raw()[k] - s.raw()[k]));
  out.push_back(below("e^{G} e^{-G} - I", inv, 1e-8));

  // Hilbert transform of the constant sequence <1, 0, ...>.
  ModeSequence one(128, 8, 0, 1, Parity::Full);
  for (std::size_t p = 0; p < one.points(); ++p) one.at(p, 0) = 1.0;
  const auto h = bukhgeim_hilbert(one, disk, 1);
  double hc = 0.0;
  for (std::size_t p = 0; p < h.points(); ++p) hc = std::max(hc, std::abs(h.at(p, 0) - kI));
  out.push_back(below("H<1,0,...>_0 = i", hc, 1e-6));

  // Sampling bound on the angular modes.
  SelfcheckItem probe{"undersampling surfaced", 0.0, 0.0, false, {}};
  try {
    Sinogram sg(disk, 16, opt.probe_n_theta);
    fourier_modes(sg, opt.probe_n_modes);
    probe.pass = opt.probe_n_theta >= 4 * opt.probe_n_modes;
    probe.detail = probe.pass ? "sampling bound met" : "no error raised below the sampling bound";
  } catch (const Error& e) {
    probe.pass = e.kind() == ErrorKind::Undersampled;
    probe.detail = std::string(error_name(e.kind())) + ": " + e.what();
  }
  out.push_back(probe);
  return out;
}

}  // namespace ttomo
