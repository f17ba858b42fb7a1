#include "povmcoh/povm_json.hpp"

#include <fstream>

#include "povmcoh/error.hpp"

namespace povmcoh {

nlohmann::json povm_to_json(const Povm& p) {
  nlohmann::json effects = nlohmann::json::array();
  for (const auto& e : p.effects()) {
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index i = 0; i < e.rows(); ++i) {
      for (Eigen::Index j = 0; j < e.cols(); ++j) entries.push_back({e(i, j).real(), e(i, j).imag()});
    }
    effects.push_back(std::move(entries));
  }
  return {{"dim", p.dim()}, {"effects", std::move(effects)}};
}

Povm povm_from_json(const nlohmann::json& j) {
  try {
    const auto dim = j.at("dim").get<Eigen::Index>();
    if (dim <= 0) throw Error(ErrorCode::ParseError, "\"dim\" must be positive");
    const auto& raw = j.at("effects");
    if (!raw.is_array()) throw Error(ErrorCode::ParseError, "\"effects\" must be an array");
    std::vector<CMatrix> effects;
    for (const auto& entries : raw) {
      if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != dim * dim) {
        throw Error(ErrorCode::ParseError, "each effect needs dim*dim [re, im] entries");
      }
      CMatrix e(dim, dim);
      for (Eigen::Index k = 0; k < dim * dim; ++k) {
        const auto& z = entries[static_cast<std::size_t>(k)];
        if (!z.is_array() || z.size() != 2) throw Error(ErrorCode::ParseError, "entry must be [re, im]");
        e(k / dim, k % dim) = Complex(z[0].get<double>(), z[1].get<double>());
      }
      effects.push_back(std::move(e));
    }
    return Povm(dim, std::move(effects));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

void write_povm_file(const Povm& p, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << povm_to_json(p).dump(2) << '\n';
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

Povm read_povm_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + ex.what());
  }
  return povm_from_json(j);
}

}  // namespace povmcoh
