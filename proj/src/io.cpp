#include "walshkit/io.hpp"

#include <cmath>
#include <fstream>

#include "walshkit/fwht.hpp"
#include "walshkit/numeric.hpp"

namespace walshkit::io {

namespace {

nlohmann::json complex_table_to_json(int n, std::string_view kind,
                                     std::span<const Complex> table) {
  nlohmann::json j;
  j["n"] = n;
  j["kind"] = std::string(kind);
  std::vector<double> re(table.size());
  std::vector<double> im(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    re[i] = table[i].real();
    im[i] = table[i].imag();
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

std::vector<Complex> complex_table_from_json(const nlohmann::json& j, int n) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  const std::size_t size = table_size(n);
  if (!re.is_array() || !im.is_array() || re.size() != size ||
      im.size() != size) {
    throw DomainError("function arrays must have length 2^n");
  }
  std::vector<Complex> table(size);
  for (std::size_t i = 0; i < size; ++i) {
    const double a = re[i].get<double>();
    const double b = im[i].get<double>();
    if (!std::isfinite(a) || !std::isfinite(b)) {
      throw DomainError("function entries must be finite");
    }
    table[i] = Complex(a, b);
  }
  return table;
}

}  // namespace

nlohmann::json function_to_json(const CubeFunction& f) {
  return complex_table_to_json(f.n(), "point", f.values());
}

nlohmann::json spectrum_to_json(const Spectrum& s) {
  return complex_table_to_json(s.n(), "walsh", s.coeffs());
}

int LoadedFunction::n() const { return point ? point->n() : walsh->n(); }

CubeFunction LoadedFunction::as_function() const {
  if (point) return *point;
  return fwht_inverse(*walsh);
}

Spectrum LoadedFunction::as_spectrum() const {
  if (walsh) return *walsh;
  return fwht_forward(*point);
}

LoadedFunction function_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("kind")) {
    throw DomainError("function file must be an object with n and kind");
  }
  if (!j.at("n").is_number_integer()) {
    throw DomainError("field n must be an integer");
  }
  const int n = j.at("n").get<int>();
  const std::string kind = j.at("kind").get<std::string>();
  LoadedFunction loaded;
  loaded.kind = kind;
  if (kind == "point") {
    loaded.point = CubeFunction(n, complex_table_from_json(j, n));
  } else if (kind == "walsh") {
    loaded.walsh = Spectrum(n, complex_table_from_json(j, n));
  } else {
    throw DomainError("unknown function kind: " + kind);
  }
  return loaded;
}

nlohmann::json multiplier_to_json(const spectral::LevelMultiplier& m) {
  using spectral::MultiplierKind;
  nlohmann::json j;
  switch (m.kind()) {
    case MultiplierKind::identity:
      j["kind"] = "identity";
      break;
    case MultiplierKind::power:
      j["kind"] = "power";
      j["gamma"] = m.gamma();
      j["z"] = {m.exponent().real(), m.exponent().imag()};
      break;
    case MultiplierKind::heat:
      j["kind"] = "heat";
      j["gamma"] = m.gamma();
      j["t"] = m.time();
      break;
    case MultiplierKind::project_low:
      j["kind"] = "project-low";
      j["d"] = m.level_cut();
      break;
    case MultiplierKind::project_tail:
      j["kind"] = "project-tail";
      j["d"] = m.level_cut();
      break;
    case MultiplierKind::custom:
      j["kind"] = "custom";
      break;
  }
  return j;
}

std::string canonical_dump(const nlohmann::json& j) { return j.dump() + "\n"; }

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw DomainError("cannot open " + path.string() + " for writing");
  }
  out << canonical_dump(j);
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DomainError("cannot open " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("malformed JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

}  // namespace walshkit::io
