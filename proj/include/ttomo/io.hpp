#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "ttomo/attenuation.hpp"
#include "ttomo/mode_sequence.hpp"
#include "ttomo/range.hpp"
#include "ttomo/tensor_algebra.hpp"
#include "ttomo/transport.hpp"

namespace ttomo {

namespace fs = std::filesystem;
using json = nlohmann::json;

// Tensor field: <stem>.json header plus <stem>_<k>.csv for each component,
// one grid row per line.
void write_tensor_field(const SymmetricTensorField& f, const fs::path& header, const json& meta = json::object());
SymmetricTensorField read_tensor_field(const fs::path& header);

// Sinogram: <stem>.json header plus <stem>.csv rows (i, j, beta, theta, value, region).
void write_sinogram(const Sinogram& s, const fs::path& header, const json& meta = json::object());
Sinogram read_sinogram(const fs::path& header);

// node_index, mode_index, re, im
void write_mode_dump(const ModeSequence& s, const fs::path& csv);

// Grid attenuation in the tensor-component layout.
void write_attenuation(const GridAttenuation& a, const fs::path& header);
GridAttenuation read_attenuation(const fs::path& header);

// alpha/beta coefficients: header plus CSV (point, k, alpha_re, alpha_im, beta_re, beta_im).
void write_bundle(const AttenuationBundle& b, const fs::path& header);
AttenuationBundle read_bundle(const fs::path& header);

json to_json(const RangeReport& r);
void write_json(const json& j, const fs::path& path);
json read_json(const fs::path& path);

}  // namespace ttomo
