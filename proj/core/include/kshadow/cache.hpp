#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "kshadow/characters.hpp"
#include "kshadow/serialize.hpp"

namespace kshadow {

inline constexpr const char* kCacheEnvVar = "KSHADOW_CACHE_DIR";

struct CacheEntry {
  int schema_version = kSchemaVersion;
  std::string fingerprint;
  std::string kind;
  Json payload;
  std::string checksum;  // SHA-256 of payload.dump()
};

std::string sha256_hex(const std::string& data);
Json entry_json(const CacheEntry& e);

/// JSON cache of Weyl enumerations and character tables. One process owns a
/// directory at a time through an advisory lock; when the lock or the disk is
/// unavailable the cache degrades to a no-op and computation proceeds in memory.
/// Problems are reported on stderr and never change a result.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir, int schema_version = kSchemaVersion);
  ~Cache();
  Cache(const Cache&) = delete;
  Cache& operator=(const Cache&) = delete;

  /// $KSHADOW_CACHE_DIR, else $XDG_CACHE_HOME/kshadow, else ~/.cache/kshadow.
  static std::filesystem::path default_dir();

  bool usable() const { return lock_fd_ >= 0; }
  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path path_for(const std::string& kind, const std::string& fingerprint) const;
  std::optional<CacheEntry> load(const std::string& kind, const std::string& fingerprint) const;
  bool store(const std::string& kind, const std::string& fingerprint, const Json& payload);

  /// Weyl group rebuilt from cached reduced words, or enumerated and stored.
  WeylGroup weyl_group(const RootDatum& rd);
  /// Character of V_mu through the cache.
  LaurentPoly character(const WeylGroup& w, const LatticeVector& mu);

 private:
  std::filesystem::path dir_;
  int schema_version_;
  int lock_fd_ = -1;
};

}  // namespace kshadow
