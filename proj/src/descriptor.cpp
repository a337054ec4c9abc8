#include "imaginarity/descriptor.hpp"

#include <array>

#include "imaginarity/errors.hpp"
#include "imaginarity/states.hpp"

namespace imag {

using nlohmann::json;

namespace {

constexpr std::array<const char*, 6> kKinds{"dense", "bloch", "werner", "isotropic", "remark1", "pure"};

double number(const json& j, const std::string& what) {
  if (!j.is_number()) throw ParseError(what + ": expected a number");
  return j.get<double>();
}

std::vector<double> number_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(number(v, what));
  return out;
}

ComplexMatrix parse_dense(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("re")) {
    throw ParseError("dense: requires \"dim\" and \"re\"");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
    throw ParseError("dense: \"dim\" must be a positive integer");
  }
  const auto d = static_cast<std::size_t>(j["dim"].get<long long>());
  auto rows = [&](const char* key) {
    std::vector<std::vector<double>> out;
    const json& block = j[key];
    if (!block.is_array() || block.size() != d) throw ParseError(std::string("dense: \"") + key + "\" must have dim rows");
    for (const auto& row : block) {
      out.push_back(number_list(row, std::string("dense.") + key));
      if (out.back().size() != d) throw ParseError(std::string("dense: \"") + key + "\" must have dim columns");
    }
    return out;
  };
  const auto re = rows("re");
  const auto im = j.contains("im") ? rows("im") : std::vector<std::vector<double>>(d, std::vector<double>(d, 0.0));
  ComplexMatrix m(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = cplx(re[r][c], im[r][c]);
  return m;
}

std::vector<cplx> parse_pure(const json& j) {
  if (!j.is_object() || !j.contains("re")) throw ParseError("pure: requires \"re\"");
  const auto re = number_list(j["re"], "pure.re");
  const auto im = j.contains("im") ? number_list(j["im"], "pure.im") : std::vector<double>(re.size(), 0.0);
  if (re.empty() || im.size() != re.size()) throw ParseError("pure: \"re\" and \"im\" must be nonempty and equal length");
  std::vector<cplx> psi(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) psi[i] = cplx(re[i], im[i]);
  return psi;
}

}  // namespace

DensityMatrix parse_state(const json& j) {
  if (!j.is_object() || j.size() != 1) throw ParseError("state descriptor must be an object with exactly one key");
  const std::string kind = j.begin().key();
  const json& body = j.begin().value();
  if (kind == "dense") return DensityMatrix(parse_dense(body));
  if (kind == "bloch") {
    const auto v = number_list(body, "bloch");
    if (v.size() != 3) throw ParseError("bloch: expected three components");
    return bloch_to_density({v[0], v[1], v[2]});
  }
  if (kind == "werner") return werner(number(body, "werner"));
  if (kind == "isotropic") return isotropic(number(body, "isotropic"));
  if (kind == "remark1") {
    if (body != json(true)) throw ParseError("remark1: value must be true");
    return remark1_state();
  }
  if (kind == "pure") return pure_state(parse_pure(body));
  std::string known;
  for (const char* k : kKinds) known += std::string(known.empty() ? "" : ", ") + k;
  throw ParseError("unknown state kind \"" + kind + "\" (expected one of " + known + ")");
}

DensityMatrix parse_state(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_state(j);
}

json to_dense_descriptor(const ComplexMatrix& m) {
  json re = json::array(), im = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json rr = json::array(), ir = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) {
      rr.push_back(m(r, c).real() + 0.0);  // drops negative zero
      ir.push_back(m(r, c).imag() + 0.0);
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  return json{{"dense", json{{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}}}};
}

json to_dense_descriptor(const DensityMatrix& rho) { return to_dense_descriptor(rho.mat()); }

}  // namespace imag
