#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "wzw/affine.hpp"

namespace wzw {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json complex_json(const Complex& z);
Json matrix_json(const CMat& m);
CMat matrix_from_json(const Json& j);
Json residuals_json(const Residuals& r);

// Doubles are written with 17 significant digits, so a roundtrip is exact.
Json to_json(const ModularData& md, const std::string& algebra, std::int64_t level);
// Throws E_CACHE_CORRUPT on a malformed document or a schema mismatch.
ModularData modular_data_from_json(const Json& j);

// Kac-Peterson data on disk, one file per "X<rank>_k<level>". Writes replace
// the whole file atomically; a corrupt or outdated entry is recomputed.
class ModularDataCache {
 public:
  explicit ModularDataCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  ModularData get(const SimpleLieAlgebra& alg, std::int64_t k, std::size_t weyl_cap = kDefaultWeylCap);
  std::filesystem::path path(const SimpleLieAlgebra& alg, std::int64_t k) const;
  int hits() const { return hits_; }
  int misses() const { return misses_; }
  int invalidated() const { return invalidated_; }

 private:
  std::filesystem::path dir_;
  int hits_ = 0, misses_ = 0, invalidated_ = 0;
};

}  // namespace wzw
