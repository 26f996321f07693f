#include "wzw/serialize.hpp"

#include <fstream>
#include <iostream>
#include <random>

namespace wzw {

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json matrix_json(const CMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMat matrix_from_json(const Json& j) {
  const auto n = static_cast<Eigen::Index>(j.size());
  const auto m = n == 0 ? 0 : static_cast<Eigen::Index>(j.at(0).size());
  CMat out(n, m);
  for (Eigen::Index r = 0; r < n; ++r) {
    if (static_cast<Eigen::Index>(j.at(r).size()) != m)
      throw Error(ErrorCode::CacheCorrupt, "ragged matrix");
    for (Eigen::Index c = 0; c < m; ++c)
      out(r, c) = {j.at(r).at(c).at(0).get<double>(), j.at(r).at(c).at(1).get<double>()};
  }
  return out;
}

Json residuals_json(const Residuals& r) {
  Json o = Json::object();
  for (const auto& [name, v] : r) o[name] = v;
  return o;
}

Json to_json(const ModularData& md, const std::string& algebra, std::int64_t level) {
  Json j;
  j["version"] = kSchemaVersion;
  j["algebra"] = algebra;
  j["level"] = level;
  j["name"] = md.name;
  j["names"] = md.labels;
  Json labels = Json::array();
  for (const auto& w : md.weights) labels.push_back(std::vector<std::int64_t>(w.data(), w.data() + w.size()));
  j["labels"] = labels;
  j["vacuum"] = md.vacuum;
  j["S"] = matrix_json(md.S);
  Json delta = Json::array();
  for (const auto& d : md.delta) delta.push_back(to_string(d));
  j["Delta"] = delta;
  j["c"] = to_string(md.c);
  return j;
}

ModularData modular_data_from_json(const Json& j) {
  try {
    if (j.at("version").get<int>() != kSchemaVersion)
      throw Error(ErrorCode::CacheCorrupt, "schema version " + j.at("version").dump() + " is not " +
                                               std::to_string(kSchemaVersion));
    ModularData md;
    md.name = j.at("name").get<std::string>();
    md.labels = j.at("names").get<std::vector<std::string>>();
    for (const auto& w : j.at("labels")) {
      const auto v = w.get<std::vector<std::int64_t>>();
      md.weights.push_back(Eigen::Map<const IVec>(v.data(), static_cast<Eigen::Index>(v.size())));
    }
    md.vacuum = j.at("vacuum").get<int>();
    md.S = matrix_from_json(j.at("S"));
    for (const auto& d : j.at("Delta")) md.delta.push_back(parse_rational(d.get<std::string>()));
    md.c = parse_rational(j.at("c").get<std::string>());
    const auto n = static_cast<Eigen::Index>(md.labels.size());
    if (md.S.rows() != n || md.S.cols() != n || md.delta.size() != md.labels.size() ||
        (!md.weights.empty() && md.weights.size() != md.labels.size()) || md.vacuum < 0 ||
        md.vacuum >= n)
      throw Error(ErrorCode::CacheCorrupt, "inconsistent sizes in modular data document");
    return md;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CacheCorrupt) throw;
    throw Error(ErrorCode::CacheCorrupt, e.what());
  } catch (const std::exception& e) {
    throw Error(ErrorCode::CacheCorrupt, std::string("malformed modular data document: ") + e.what());
  }
}

std::filesystem::path ModularDataCache::path(const SimpleLieAlgebra& alg, std::int64_t k) const {
  return dir_ / (alg.name() + "_k" + std::to_string(k) + ".json");
}

ModularData ModularDataCache::get(const SimpleLieAlgebra& alg, std::int64_t k, std::size_t weyl_cap) {
  const auto p = path(alg, k);
  if (std::filesystem::exists(p)) {
    try {
      std::ifstream in(p);
      const Json j = Json::parse(in);
      if (j.at("algebra") != alg.name() || j.at("level") != k)
        throw Error(ErrorCode::CacheCorrupt, "entry belongs to another algebra or level");
      ModularData md = modular_data_from_json(j);
      ++hits_;
      return md;
    } catch (const std::exception& e) {
      std::cerr << "warning: discarding cache entry " << p.string() << ": " << e.what() << "\n";
      ++invalidated_;
    }
  }
  ++misses_;
  ModularData md = kac_peterson(alg, k, weyl_cap);
  std::filesystem::create_directories(dir_);
  std::random_device rd;
  const auto tmp = p.string() + ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    out << to_json(md, alg.name(), k).dump() << "\n";
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write cache file " + tmp);
  }
  std::filesystem::rename(tmp, p);
  return md;
}

}  // namespace wzw
