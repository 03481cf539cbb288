#include "ttomo/commands.hpp"

#include <cstdio>
#include <ostream>

#include "ttomo/io.hpp"
#include "ttomo/psi_class.hpp"
#include "ttomo/range.hpp"
#include "ttomo/reconstruct.hpp"
#include "ttomo/sources.hpp"
#include "ttomo/transport.hpp"

namespace ttomo {

namespace {

PipelineOptions pipeline(const Config& c) {
  PipelineOptions o;
  o.n_modes = c.n_modes;
  o.k_max = c.k_max;
  o.tolerance = c.tolerance;
  return o;
}

fs::path out_path(const Config& c, const std::string& name) {
  fs::create_directories(c.out_dir);
  return fs::path(c.out_dir) / name;
}

fs::path sinogram_path(const Config& c) {
  return c.sinogram.empty() ? fs::path(c.out_dir) / "sinogram.json" : fs::path(c.sinogram);
}

Lattice make_lattice(const Config& c, const ConvexDomain& dom) {
  return Lattice(GridSpec::square(c.grid, dom.bounding_radius()), dom);
}

std::unique_ptr<BumpPhantom> phantom(const Config& c, int m, const ConvexDomain& dom) {
  return make_phantom(c.phantom.kind, m, c.seed, dom, c.phantom.delta, c.phantom.amplitude, c.phantom.sigma);
}

json meta_for(const Config& c) { return json{{"config", to_json(c)}}; }

}  // namespace

json error_json(const Error& e) {
  return json{{"error", error_name(e.kind())}, {"message", e.what()}, {"exit_code", exit_code_for(e.kind())}};
}

int cmd_forward(const Config& c, std::ostream& log) {
  const ConvexDomain dom = c.domain.make();
  const auto f = phantom(c, c.order, dom);
  const auto a = make_attenuation(c.attenuation, dom);
  const Sinogram s = trace_data(*f, a.get(), dom, c.n_b, c.n_theta);
  const json meta = meta_for(c);
  write_sinogram(s, out_path(c, "sinogram.json"), meta);
  write_tensor_field(sample_source(*f, make_lattice(c, dom)), out_path(c, "phantom.json"), meta);
  log << "forward: m=" << c.order << " N_b=" << c.n_b << " N_theta=" << c.n_theta
      << " max|g|=" << s.max_abs() << "\n";
  return 0;
}

int cmd_check(const Config& c, std::ostream& log) {
  const Sinogram g = read_sinogram(sinogram_path(c));
  const ConvexDomain dom = g.make_domain();
  const auto a = make_attenuation(c.attenuation, dom);
  const RangeReport r = check_range(g, g.order, a.get(), pipeline(c));
  json j = to_json(r);
  j["config"] = to_json(c);
  write_json(j, out_path(c, "report.json"));
  for (const auto& cond : r.conditions) {
    char line[160];
    std::snprintf(line, sizeof line, "  %-36s %.3e %s\n", cond.name.c_str(), cond.residual,
                  cond.pass ? "pass" : "FAIL");
    log << line;
  }
  log << "check: max residual " << r.max_residual() << (r.pass() ? " (pass)\n" : " (fail)\n");
  return r.pass() ? 0 : 1;
}

int cmd_reconstruct(const Config& c, std::ostream& log) {
  const Sinogram g = read_sinogram(sinogram_path(c));
  const int m = g.order;
  const ConvexDomain dom = g.make_domain();
  const auto a = make_attenuation(c.attenuation, dom);
  const Lattice lat = make_lattice(c, dom);
  ReconstructOptions opt;
  static_cast<PipelineOptions&>(opt) = pipeline(c);

  const PsiStrategy strategy = parse_psi_strategy(c.psi);
  std::unique_ptr<BumpPhantom> truth;
  if (c.oracle) truth = phantom(c, m, dom);
  if (strategy == PsiStrategy::Oracle && !truth)
    fail(ErrorKind::InvalidArgument, "psi strategy 'oracle' requires the --oracle phantom flag");
  OracleSource oracle{truth.get(), a.get(), c.n_theta};

  const ModeSequence full = fourier_modes(g, c.n_modes);
  const PsiClassElement psi = default_psi(full, lat, m, a.get(), strategy, opt, truth ? &oracle : nullptr);
  const Reconstruction rec = reconstruct(g, m, a.get(), psi, lat, opt);
  const Sinogram reproj = trace_data(rec.field, a.get(), dom, g.n_b, g.n_theta);
  const double consistency = sinogram_relative_error(reproj, g);

  const json meta = meta_for(c);
  write_tensor_field(rec.field, out_path(c, "field.json"), meta);
  write_sinogram(reproj, out_path(c, "reprojected.json"), meta);

  json j;
  j["config"] = to_json(c);
  j["order"] = m;
  j["data_consistency"] = consistency;
  j["psi"] = {{"kind", psi_kind_name(psi.kind)},
              {"provenance", psi_provenance_name(psi.provenance)},
              {"indices", psi.indices},
              {"trace_residual", std::isnan(psi.trace_residual) ? json(nullptr) : json(psi.trace_residual)},
              {"gradient_residual", std::isnan(psi.gradient_residual) ? json(nullptr) : json(psi.gradient_residual)},
              {"gradient_ok", psi.gradient_ok},
              {"notes", psi.notes}};
  j["collar"] = {{"width_d_min", opt.collar}, {"nodes", rec.collar_nodes}, {"fill", rec.collar_fill}};
  if (rec.range) j["range"] = to_json(*rec.range);
  j["warnings"] = rec.warnings;
  log << "reconstruct: m=" << m << " psi=" << c.psi << " data consistency " << consistency << "\n";
  if (truth) {
    const double err = relative_l2_error(rec.field, sample_source(*truth, lat));
    j["field_error"] = err;
    log << "reconstruct: field error against the phantom " << err << "\n";
  }
  write_json(j, out_path(c, "report.json"));
  return 0;
}

int cmd_dump_modes(const Config& c, std::ostream& log) {
  const Sinogram g = read_sinogram(sinogram_path(c));
  const ModeSequence full = fourier_modes(g, c.n_modes);
  write_mode_dump(full, out_path(c, "modes.csv"));
  const auto a = make_attenuation(c.attenuation, g.make_domain());
  if (a) {
    const BoundaryGrid bg = g.make_domain().sample_boundary(g.n_b);
    write_bundle(build_bundle(*a, bg.zeta, PipelineOptions{}.bundle_n_theta, PipelineOptions{}.bundle_k_h),
                 out_path(c, "bundle.json"));
  }
  log << "dump-modes: " << full.points() << " boundary nodes, " << c.n_modes << " modes\n";
  return 0;
}

int cmd_selfcheck(const SelfcheckOptions& opt, std::ostream& log) {
  bool ok = true;
  for (const auto& item : run_selfcheck(opt)) {
    char line[200];
    std::snprintf(line, sizeof line, "%-32s %-4s %.3e (<= %.1e) %s\n", item.name.c_str(), item.pass ? "pass" : "FAIL",
                  item.value, item.threshold, item.detail.c_str());
    log << line;
    ok = ok && item.pass;
  }
  return ok ? 0 : 1;
}

}  // namespace ttomo
