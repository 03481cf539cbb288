#pragma once

#include <string>
#include <vector>

namespace ttomo {

struct SelfcheckItem {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string detail;
};

struct SelfcheckOptions {
  // Flip one sign of the Cartesian-to-complex law (mutation harness).
  bool mutate_law = false;
  // Angular samples for the sampling-bound probe; below 4 N_modes it must
  // surface Undersampled.
  int probe_n_theta = 16;
  int probe_n_modes = 8;
  unsigned seed = 7;
};

std::vector<SelfcheckItem> run_selfcheck(const SelfcheckOptions& opt = {});

}  // namespace ttomo
