#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fermat/groebner.hpp"

namespace fermat {

/// On-disk store of reduced Groebner bases, one file per basis, keyed by a content
/// hash of (ring, order, field, sorted generator text). Files start with a
/// versioned header; unreadable or mismatching files count as misses.
///
///   fermat-gb-cache 1
///   ring: x,y,z
///   order: grevlex
///   field: Q
///   generators: <16 hex digits>
///   size: <k>
///   <k lines, one basis polynomial each>
class GbCache {
 public:
  static constexpr int kFormatVersion = 1;

  explicit GbCache(std::filesystem::path directory);

  /// Directory from FERMAT_CACHE_DIR when set, otherwise `fallback`; nullptr when
  /// both are empty.
  static std::shared_ptr<GbCache> from_environment(const std::string& fallback = "");

  const std::filesystem::path& directory() const { return directory_; }

  std::optional<GroebnerBasis> load(const std::vector<QPoly>& gens, const RingPtr& ring) const;
  void store(const std::vector<QPoly>& gens, const GroebnerBasis& basis) const;

  /// 64-bit FNV-1a of the canonical key text, as 16 hex digits.
  static std::string key(const std::vector<QPoly>& gens, const Ring& ring);

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path directory_;
  mutable std::mutex write_mu_;
};

}  // namespace fermat
