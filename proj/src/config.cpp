#include "ttomo/config.hpp"

#include <fstream>
#include <sstream>

#include "ttomo/errors.hpp"
#include "ttomo/io.hpp"

namespace ttomo {

ConvexDomain DomainConfig::make() const {
  if (kind == "disk") return ConvexDomain::unit_disk();
  if (kind == "param") return ConvexDomain::ellipse(semi_a, semi_b);
  fail(ErrorKind::Config, "field 'domain.kind': unknown domain '" + kind + "'");
}

namespace {

class Reader {
 public:
  Reader(const json& j, std::string path, std::string source) : j_(j), path_(std::move(path)), source_(std::move(source)) {
    if (!j_.is_object()) fail(ErrorKind::Config, where() + " must be an object");
    for (auto it = j_.begin(); it != j_.end(); ++it) pending_.push_back(it.key());
  }

  template <class T>
  void get(const char* key, T& out) {
    if (!j_.contains(key)) return;
    take(key);
    const json& v = j_.at(key);
    bool ok = false;
    if constexpr (std::is_same_v<T, bool>) ok = v.is_boolean();
    else if constexpr (std::is_same_v<T, std::string>) ok = v.is_string();
    else if constexpr (std::is_integral_v<T>) ok = v.is_number_integer();
    else ok = v.is_number();
    if (!ok) fail(ErrorKind::Config, source_ + ": field '" + name(key) + "' has the wrong type");
    out = v.get<T>();
  }

  Reader child(const char* key) {
    take(key);
    return Reader(j_.at(key), name(key), source_);
  }
  bool has(const char* key) const { return j_.contains(key); }

  void finish() const {
    if (!pending_.empty()) fail(ErrorKind::Config, source_ + ": unknown field '" + name(pending_.front().c_str()) + "'");
  }

 private:
  std::string name(const char* key) const { return path_.empty() ? key : path_ + "." + key; }
  std::string where() const { return source_ + ": " + (path_.empty() ? "document" : "field '" + path_ + "'"); }
  void take(const char* key) { std::erase(pending_, std::string(key)); }

  const json& j_;
  std::string path_, source_;
  std::vector<std::string> pending_;
};

void require(bool ok, const std::string& source, const std::string& field, const std::string& what) {
  if (!ok) fail(ErrorKind::Config, source + ": field '" + field + "' " + what);
}

}  // namespace

Config parse_config(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset to line and column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(ErrorKind::Config, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": JSON syntax error");
  }
  Config c;
  Reader r(j, "", source);
  r.get("order", c.order);
  r.get("seed", c.seed);
  r.get("n_b", c.n_b);
  r.get("n_theta", c.n_theta);
  r.get("n_modes", c.n_modes);
  r.get("grid", c.grid);
  r.get("tolerance", c.tolerance);
  r.get("k_max", c.k_max);
  r.get("psi", c.psi);
  r.get("oracle", c.oracle);
  r.get("sinogram", c.sinogram);
  r.get("out_dir", c.out_dir);
  if (r.has("domain")) {
    auto d = r.child("domain");
    d.get("kind", c.domain.kind);
    d.get("semi_a", c.domain.semi_a);
    d.get("semi_b", c.domain.semi_b);
    d.finish();
  }
  if (r.has("phantom")) {
    auto p = r.child("phantom");
    p.get("kind", c.phantom.kind);
    p.get("amplitude", c.phantom.amplitude);
    p.get("sigma", c.phantom.sigma);
    p.get("delta", c.phantom.delta);
    p.finish();
  }
  if (r.has("attenuation")) {
    auto a = r.child("attenuation");
    a.get("kind", c.attenuation.kind);
    a.get("c", c.attenuation.c);
    a.get("a0", c.attenuation.a0);
    a.get("a1", c.attenuation.a1);
    a.get("width", c.attenuation.width);
    a.get("file", c.attenuation.file);
    a.finish();
  }
  r.finish();

  require(c.order >= 0 && c.order <= kMaxOrder, source, "order", "must lie in [0, 20]");
  require(c.n_b >= 8, source, "n_b", "must be at least 8");
  require(c.n_theta >= 8 && c.n_theta % 2 == 0, source, "n_theta", "must be even and at least 8");
  require(c.n_modes >= 1, source, "n_modes", "must be positive");
  require(c.grid >= 8, source, "grid", "must be at least 8");
  require(c.tolerance > 0.0, source, "tolerance", "must be positive");
  require(c.k_max >= -1, source, "k_max", "must be -1 (default m + 4) or non-negative");
  require(c.domain.kind == "disk" || c.domain.kind == "param", source, "domain.kind", "must be disk or param");
  require(c.domain.semi_a > 0.0 && c.domain.semi_b > 0.0, source, "domain.semi_a", "semi-axes must be positive");
  require(c.psi == "zero" || c.psi == "harmonic" || c.psi == "oracle", source, "psi", "must be zero, harmonic or oracle");
  const auto& ak = c.attenuation.kind;
  require(ak == "zero" || ak == "constant" || ak == "radial-smooth" || ak == "file", source, "attenuation.kind",
          "must be zero, constant, radial-smooth or file");
  require(ak != "file" || !c.attenuation.file.empty(), source, "attenuation.file", "is required for kind 'file'");
  require(c.attenuation.c >= 0.0 && c.attenuation.a0 >= 0.0 && c.attenuation.a1 >= 0.0 && c.attenuation.width > 0.0,
          source, "attenuation", "parameters must be non-negative with positive width");
  const auto& pk = c.phantom.kind;
  require(pk == "zero" || pk == "radial-gaussian" || pk == "offset-bumps" || pk == "random-smooth", source,
          "phantom.kind", "must be zero, radial-gaussian, offset-bumps or random-smooth");
  require(c.phantom.sigma > 0.0 && c.phantom.delta > 0.0 && c.phantom.delta < 0.3, source, "phantom",
          "needs sigma > 0 and 0 < delta < 0.3");
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) fail(ErrorKind::Io, "cannot read config " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config(ss.str(), path);
}

json to_json(const Config& c) {
  return {{"order", c.order},
          {"seed", c.seed},
          {"domain", {{"kind", c.domain.kind}, {"semi_a", c.domain.semi_a}, {"semi_b", c.domain.semi_b}}},
          {"phantom",
           {{"kind", c.phantom.kind}, {"amplitude", c.phantom.amplitude}, {"sigma", c.phantom.sigma}, {"delta", c.phantom.delta}}},
          {"attenuation",
           {{"kind", c.attenuation.kind},
            {"c", c.attenuation.c},
            {"a0", c.attenuation.a0},
            {"a1", c.attenuation.a1},
            {"width", c.attenuation.width},
            {"file", c.attenuation.file}}},
          {"n_b", c.n_b},
          {"n_theta", c.n_theta},
          {"n_modes", c.n_modes},
          {"grid", c.grid},
          {"tolerance", c.tolerance},
          {"k_max", c.k_max},
          {"psi", c.psi},
          {"oracle", c.oracle},
          {"sinogram", c.sinogram},
          {"out_dir", c.out_dir}};
}

std::unique_ptr<Attenuation> make_attenuation(const AttenuationConfig& c, const ConvexDomain& dom) {
  if (c.kind == "zero") return nullptr;
  if (c.kind == "constant") return std::make_unique<ConstantAttenuation>(dom, c.c);
  if (c.kind == "radial-smooth") return std::make_unique<RadialSmoothAttenuation>(dom, c.a0, c.a1, c.width);
  if (c.kind == "file") return std::make_unique<GridAttenuation>(read_attenuation(c.file));
  fail(ErrorKind::Config, "field 'attenuation.kind': unknown kind '" + c.kind + "'");
}

}  // namespace ttomo
