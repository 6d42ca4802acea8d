#include "kshadow/cache.hpp"

#include <fcntl.h>
#include <openssl/evp.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace kshadow {

namespace fs = std::filesystem;

namespace {

void warn(const std::string& msg) { std::cerr << "kshadow cache: " << msg << "\n"; }

std::string sanitize(std::string s) {
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  return s;
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

Json entry_json(const CacheEntry& e) {
  return {{"schema_version", e.schema_version},
          {"fingerprint", e.fingerprint},
          {"kind", e.kind},
          {"payload", e.payload},
          {"checksum", e.checksum}};
}

Cache::Cache(fs::path dir, int schema_version) : dir_(std::move(dir)), schema_version_(schema_version) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) {
    warn("cannot create " + dir_.string() + ": " + ec.message() + "; using memory only");
    return;
  }
  const auto lock_path = dir_ / ".lock";
  const int fd = ::open(lock_path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
  if (fd < 0) {
    warn("cannot open lock file " + lock_path.string() + "; using memory only");
    return;
  }
  if (::flock(fd, LOCK_EX | LOCK_NB) != 0) {
    warn(dir_.string() + " is locked by another process; using memory only");
    ::close(fd);
    return;
  }
  lock_fd_ = fd;
}

Cache::~Cache() {
  if (lock_fd_ >= 0) {
    ::flock(lock_fd_, LOCK_UN);
    ::close(lock_fd_);
  }
}

fs::path Cache::default_dir() {
  if (const char* env = std::getenv(kCacheEnvVar); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "kshadow";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "kshadow";
  return fs::temp_directory_path() / "kshadow-cache";
}

fs::path Cache::path_for(const std::string& kind, const std::string& fingerprint) const {
  return dir_ / (sanitize(kind) + "-" + sanitize(fingerprint) + ".json");
}

std::optional<CacheEntry> Cache::load(const std::string& kind, const std::string& fingerprint) const {
  if (!usable()) return std::nullopt;
  const auto path = path_for(kind, fingerprint);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const Json j = Json::parse(in);
    CacheEntry e;
    e.schema_version = j.at("schema_version").get<int>();
    e.fingerprint = j.at("fingerprint").get<std::string>();
    e.kind = j.at("kind").get<std::string>();
    e.payload = j.at("payload");
    e.checksum = j.at("checksum").get<std::string>();
    if (e.schema_version != schema_version_) {
      warn(path.string() + ": schema version " + std::to_string(e.schema_version) + " != " +
           std::to_string(schema_version_) + ", recomputing");
      return std::nullopt;
    }
    if (e.fingerprint != fingerprint || e.kind != kind) {
      warn(path.string() + ": entry belongs to another key, recomputing");
      return std::nullopt;
    }
    if (sha256_hex(e.payload.dump()) != e.checksum) {
      warn(path.string() + ": checksum mismatch, recomputing");
      return std::nullopt;
    }
    return e;
  } catch (const std::exception& ex) {
    warn(path.string() + ": unreadable (" + ex.what() + "), recomputing");
    return std::nullopt;
  }
}

bool Cache::store(const std::string& kind, const std::string& fingerprint, const Json& payload) {
  if (!usable()) return false;
  CacheEntry e{schema_version_, fingerprint, kind, payload, sha256_hex(payload.dump())};
  const auto path = path_for(kind, fingerprint);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      warn("cannot write " + tmp.string());
      return false;
    }
    out << entry_json(e).dump(1) << "\n";
    if (!out) {
      warn("write failed for " + tmp.string());
      return false;
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    warn("cannot move " + tmp.string() + " into place: " + ec.message());
    return false;
  }
  return true;
}

WeylGroup Cache::weyl_group(const RootDatum& rd) {
  if (auto e = load("weyl", rd.fingerprint())) {
    try {
      return WeylGroup::from_words(rd, e->payload.at("words").get<std::vector<std::vector<int>>>());
    } catch (const std::exception& ex) {
      warn(std::string("cached Weyl table rejected (") + ex.what() + "), recomputing");
    }
  }
  WeylGroup w(rd);
  Json words = Json::array();
  Json matrices = Json::array();
  for (const auto& el : w.elements()) {
    words.push_back(el.word);
    matrices.push_back(el.matrix);
  }
  store("weyl", rd.fingerprint(), {{"words", words}, {"matrices", matrices}});
  return w;
}

LaurentPoly Cache::character(const WeylGroup& w, const LatticeVector& mu) {
  const auto& rd = w.root_datum();
  const std::string key = rd.fingerprint() + "-mu" + mu.to_string();
  if (auto e = load("character", key)) {
    try {
      return laurent_from_json(e->payload.at("character"), rd.rank());
    } catch (const std::exception& ex) {
      warn(std::string("cached character rejected (") + ex.what() + "), recomputing");
    }
  }
  auto chi = weyl_character(w, mu);
  store("character", key, {{"mu", to_json(mu)}, {"character", to_json(chi)}});
  return chi;
}

}  // namespace kshadow
