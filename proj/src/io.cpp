#include "ttomo/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ttomo/errors.hpp"

namespace ttomo {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const fs::path& p) {
  if (p.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
  }
  std::ofstream os(p);
  if (!os) fail(ErrorKind::Io, "cannot write " + p.string());
  return os;
}

std::ifstream open_in(const fs::path& p) {
  std::ifstream is(p);
  if (!is) fail(ErrorKind::Io, "cannot read " + p.string());
  return is;
}

fs::path sibling(const fs::path& header, const std::string& suffix) {
  fs::path p = header;
  p.replace_filename(header.stem().string() + suffix);
  return p;
}

template <class T>
T field(const json& j, const char* key, const fs::path& src) {
  if (!j.contains(key)) fail(ErrorKind::Io, src.string() + ": missing header field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    fail(ErrorKind::Io, src.string() + ": header field '" + key + "' has the wrong type");
  }
}

std::vector<double> split_numbers(const std::string& line, const fs::path& src, std::size_t lineno) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t end = line.find(',', start);
    if (end == std::string::npos) end = line.size();
    const std::string tok = line.substr(start, end - start);
    char* stop = nullptr;
    const double v = std::strtod(tok.c_str(), &stop);
    if (tok.empty() || stop == tok.c_str())
      fail(ErrorKind::Io, src.string() + ":" + std::to_string(lineno) + ": not a number '" + tok + "'");
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

json grid_header(const GridSpec& g, const ConvexDomain& dom) {
  return {{"nx", g.nx},         {"ny", g.ny},         {"x_min", g.x_min},   {"x_max", g.x_max},
          {"y_min", g.y_min},   {"y_max", g.y_max},   {"domain", dom.name()}, {"semi_a", dom.semi_a()},
          {"semi_b", dom.semi_b()}};
}

ConvexDomain domain_from(const std::string& name, double sa, double sb, const fs::path& src) {
  if (name == "disk") return ConvexDomain::unit_disk();
  if (name == "param") return ConvexDomain::ellipse(sa, sb);
  fail(ErrorKind::Io, src.string() + ": unknown domain '" + name + "'");
}

Lattice lattice_from(const json& h, const fs::path& src) {
  GridSpec g;
  g.nx = field<int>(h, "nx", src);
  g.ny = field<int>(h, "ny", src);
  g.x_min = field<double>(h, "x_min", src);
  g.x_max = field<double>(h, "x_max", src);
  g.y_min = field<double>(h, "y_min", src);
  g.y_max = field<double>(h, "y_max", src);
  if (g.nx < 2 || g.ny < 2) fail(ErrorKind::Io, src.string() + ": grid must be at least 2 x 2");
  const std::string d = field<std::string>(h, "domain", src);
  const double sa = h.value("semi_a", 1.0), sb = h.value("semi_b", 1.0);
  return Lattice(g, domain_from(d, sa, sb, src));
}

void write_grid_csv(const std::vector<double>& v, const GridSpec& g, const fs::path& p) {
  auto os = open_out(p);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (i) os << ',';
      os << num(v[g.index(i, j)]);
    }
    os << '\n';
  }
}

std::vector<double> read_grid_csv(const GridSpec& g, const fs::path& p) {
  auto is = open_in(p);
  std::vector<double> v;
  v.reserve(g.size());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto row = split_numbers(line, p, lineno);
    if (static_cast<int>(row.size()) != g.nx)
      fail(ErrorKind::Io, p.string() + ":" + std::to_string(lineno) + ": expected " + std::to_string(g.nx) + " values");
    v.insert(v.end(), row.begin(), row.end());
  }
  if (v.size() != g.size()) fail(ErrorKind::Io, p.string() + ": expected " + std::to_string(g.ny) + " rows");
  return v;
}

}  // namespace

void write_json(const json& j, const fs::path& path) {
  auto os = open_out(path);
  os << j.dump(2) << '\n';
}

json read_json(const fs::path& path) {
  auto is = open_in(path);
  try {
    return json::parse(is);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Io, path.string() + ": " + e.what());
  }
}

void write_tensor_field(const SymmetricTensorField& f, const fs::path& header, const json& meta) {
  json h = grid_header(f.grid(), f.lattice().domain());
  h["order"] = f.order();
  json files = json::array();
  for (int k = 0; k <= f.order(); ++k) {
    const fs::path csv = sibling(header, "_" + std::to_string(k) + ".csv");
    write_grid_csv(f.component(k), f.grid(), csv);
    files.push_back(csv.filename().string());
  }
  h["components"] = files;
  if (!meta.empty()) h["meta"] = meta;
  write_json(h, header);
}

SymmetricTensorField read_tensor_field(const fs::path& header) {
  const json h = read_json(header);
  const int m = field<int>(h, "order", header);
  if (m < 0 || m > kMaxOrder) fail(ErrorKind::Io, header.string() + ": order out of range");
  const Lattice lat = lattice_from(h, header);
  SymmetricTensorField f(m, lat);
  for (int k = 0; k <= m; ++k) {
    fs::path csv = sibling(header, "_" + std::to_string(k) + ".csv");
    if (h.contains("components")) csv = header.parent_path() / h["components"].at(k).get<std::string>();
    f.component(k) = read_grid_csv(lat.spec(), csv);
  }
  return f;
}

void write_sinogram(const Sinogram& s, const fs::path& header, const json& meta) {
  const fs::path csv = sibling(header, ".csv");
  json h = {{"N_b", s.n_b},         {"N_theta", s.n_theta},   {"domain", s.domain},
            {"semi_a", s.semi_a},   {"semi_b", s.semi_b},     {"order_m", s.order},
            {"attenuation_tag", s.attenuation_tag},           {"csv", csv.filename().string()}};
  if (!meta.empty()) h["meta"] = meta;
  auto os = open_out(csv);
  os << "i,j,beta,theta,value,region\n";
  for (int i = 0; i < s.n_b; ++i)
    for (int j = 0; j < s.n_theta; ++j)
      os << i << ',' << j << ',' << num(s.beta[i]) << ',' << num(s.theta[j]) << ',' << num(s.at(i, j)) << ','
         << region_name(s.region_at(i, j)) << '\n';
  write_json(h, header);
}

Sinogram read_sinogram(const fs::path& header) {
  const json h = read_json(header);
  const int nb = field<int>(h, "N_b", header);
  const int nt = field<int>(h, "N_theta", header);
  const std::string dname = field<std::string>(h, "domain", header);
  const ConvexDomain dom = domain_from(dname, h.value("semi_a", 1.0), h.value("semi_b", 1.0), header);
  if (nb < 4 || nt < 2 || nt % 2) fail(ErrorKind::Io, header.string() + ": invalid N_b / N_theta");
  Sinogram s(dom, nb, nt);
  s.order = field<int>(h, "order_m", header);
  s.attenuation_tag = field<std::string>(h, "attenuation_tag", header);
  const fs::path csv = header.parent_path() / h.value("csv", sibling(header, ".csv").filename().string());
  auto is = open_in(csv);
  std::string line;
  std::getline(is, line);  // column names
  std::size_t lineno = 1, count = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cut = line.rfind(',');
    if (cut == std::string::npos) fail(ErrorKind::Io, csv.string() + ":" + std::to_string(lineno) + ": malformed row");
    const auto v = split_numbers(line.substr(0, cut), csv, lineno);
    if (v.size() != 5) fail(ErrorKind::Io, csv.string() + ":" + std::to_string(lineno) + ": expected 6 columns");
    const int i = static_cast<int>(v[0]), j = static_cast<int>(v[1]);
    if (i < 0 || i >= nb || j < 0 || j >= nt)
      fail(ErrorKind::Io, csv.string() + ":" + std::to_string(lineno) + ": sample index out of range");
    s.at(i, j) = v[4];
    ++count;
  }
  if (count != static_cast<std::size_t>(nb) * nt)
    fail(ErrorKind::Io, csv.string() + ": expected " + std::to_string(static_cast<long>(nb) * nt) + " samples");
  return s;
}

void write_mode_dump(const ModeSequence& s, const fs::path& csv) {
  auto os = open_out(csv);
  os << "node_index,mode_index,re,im\n";
  for (std::size_t p = 0; p < s.points(); ++p)
    for (std::size_t j = 0; j < s.length(); ++j) {
      const cplx v = s.at(p, j);
      os << p << ',' << s.index_at(j) << ',' << num(v.real()) << ',' << num(v.imag()) << '\n';
    }
}

void write_attenuation(const GridAttenuation& a, const fs::path& header) {
  json h = grid_header(a.lattice().spec(), a.domain());
  const fs::path csv = sibling(header, ".csv");
  write_grid_csv(a.values(), a.lattice().spec(), csv);
  h["values"] = csv.filename().string();
  write_json(h, header);
}

GridAttenuation read_attenuation(const fs::path& header) {
  const json h = read_json(header);
  const Lattice lat = lattice_from(h, header);
  const fs::path csv = header.parent_path() / h.value("values", sibling(header, ".csv").filename().string());
  auto v = read_grid_csv(lat.spec(), csv);
  for (double x : v)
    if (x < 0.0) fail(ErrorKind::Io, csv.string() + ": negative attenuation value");
  return GridAttenuation(lat, std::move(v));
}

void write_bundle(const AttenuationBundle& b, const fs::path& header) {
  const fs::path csv = sibling(header, ".csv");
  json pts = json::array();
  for (const cplx& z : b.points) pts.push_back({z.real(), z.imag()});
  json h = {{"n_theta", b.n_theta},
            {"k_h", b.k_h},
            {"tag", b.tag},
            {"points", pts},
            {"max_negative_mode", b.max_negative_mode},
            {"max_negative_mode_plus", b.max_negative_mode_plus},
            {"max_convolution_defect", b.max_convolution_defect},
            {"max_alpha_tail", b.max_alpha_tail},
            {"csv", csv.filename().string()}};
  auto os = open_out(csv);
  os << "point,k,alpha_re,alpha_im,beta_re,beta_im\n";
  for (std::size_t p = 0; p < b.points.size(); ++p)
    for (int k = 0; k < b.k_h; ++k) {
      const cplx al = b.alpha_at(p)[k], be = b.beta_at(p)[k];
      os << p << ',' << k << ',' << num(al.real()) << ',' << num(al.imag()) << ',' << num(be.real()) << ','
         << num(be.imag()) << '\n';
    }
  write_json(h, header);
}

AttenuationBundle read_bundle(const fs::path& header) {
  const json h = read_json(header);
  AttenuationBundle b;
  b.n_theta = field<int>(h, "n_theta", header);
  b.k_h = field<int>(h, "k_h", header);
  b.tag = field<std::string>(h, "tag", header);
  for (const auto& p : h.at("points")) b.points.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
  b.max_negative_mode = h.value("max_negative_mode", 0.0);
  b.max_negative_mode_plus = h.value("max_negative_mode_plus", 0.0);
  b.max_convolution_defect = h.value("max_convolution_defect", 0.0);
  b.max_alpha_tail = h.value("max_alpha_tail", 0.0);
  if (b.k_h < 1) fail(ErrorKind::Io, header.string() + ": k_h must be positive");
  b.alpha.assign(b.points.size() * b.k_h, cplx{});
  b.beta.assign(b.points.size() * b.k_h, cplx{});
  const fs::path csv = header.parent_path() / h.value("csv", sibling(header, ".csv").filename().string());
  auto is = open_in(csv);
  std::string line;
  std::getline(is, line);
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto v = split_numbers(line, csv, lineno);
    if (v.size() != 6) fail(ErrorKind::Io, csv.string() + ":" + std::to_string(lineno) + ": expected 6 columns");
    const auto p = static_cast<std::size_t>(v[0]);
    const auto k = static_cast<std::size_t>(v[1]);
    if (p >= b.points.size() || k >= static_cast<std::size_t>(b.k_h))
      fail(ErrorKind::Io, csv.string() + ":" + std::to_string(lineno) + ": index out of range");
    b.alpha[p * b.k_h + k] = {v[2], v[3]};
    b.beta[p * b.k_h + k] = {v[4], v[5]};
  }
  return b;
}

json to_json(const RangeReport& r) {
  json conds = json::array();
  for (const auto& c : r.conditions) conds.push_back({{"name", c.name}, {"residual", c.residual}, {"pass", c.pass}});
  return {{"order", r.order},
          {"attenuated", r.attenuated},
          {"attenuation_tag", r.attenuation_tag},
          {"N_b", r.n_b},
          {"N_theta", r.n_theta},
          {"N_modes", r.n_modes},
          {"K_max", r.k_max},
          {"tolerance", r.tolerance},
          {"conditions", conds},
          {"max_residual", r.max_residual()},
          {"tail_mass", r.tail_mass},
          {"tail_warning", r.tail_warning},
          {"warnings", r.warnings},
          {"pass", r.pass()}};
}

}  // namespace ttomo
