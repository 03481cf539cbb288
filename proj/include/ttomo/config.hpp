#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "json.hpp"
#include "ttomo/domain.hpp"
#include "ttomo/sources.hpp"

namespace ttomo {

struct DomainConfig {
  std::string kind = "disk";  // disk | param
  double semi_a = 1.0, semi_b = 1.0;
  ConvexDomain make() const;
};

struct PhantomConfig {
  std::string kind = "radial-gaussian";
  double amplitude = 1.0;
  double sigma = 0.2;
  double delta = 0.05;
};

struct AttenuationConfig {
  std::string kind = "zero";  // zero | constant | radial-smooth | file
  double c = 1.0;
  double a0 = 0.5, a1 = 1.0, width = 0.4;
  std::string file;
};

// Every numerical default lives here and is echoed into output metadata.
struct Config {
  int order = 0;
  std::uint64_t seed = 1;
  DomainConfig domain;
  PhantomConfig phantom;
  AttenuationConfig attenuation;
  int n_b = 256;
  int n_theta = 256;
  int n_modes = 64;
  int grid = 256;
  double tolerance = 1e-3;
  int k_max = -1;
  std::string psi = "harmonic";
  bool oracle = false;
  std::string sinogram;  // input for check / reconstruct / dump-modes
  std::string out_dir = ".";
};

// Strict parser: unknown keys and wrong types are errors naming the field;
// syntax errors name the line and column.
Config parse_config(const std::string& text, const std::string& source = "<config>");
Config load_config(const std::string& path);
nlohmann::json to_json(const Config& c);

// Attenuation described by the config; null for "zero".
std::unique_ptr<Attenuation> make_attenuation(const AttenuationConfig& c, const ConvexDomain& dom);

}  // namespace ttomo
