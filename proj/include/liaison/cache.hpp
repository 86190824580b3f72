#pragma once

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "liaison/groebner.hpp"
#include "liaison/parse.hpp"

namespace liaison {

/// On-disk Groebner cache: one self-verifying text file per
/// (ring, generators, order) digest. Corrupt or stale entries are treated
/// as misses and rewritten; IO failures switch the cache off for the rest
/// of the process with a single warning, never an error. Writes go through
/// a temp file plus rename, so concurrent processes stay consistent.
class GbDiskCache {
public:
  explicit GbDiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  static std::filesystem::path default_dir() {
    if (const char* env = std::getenv("LIAISON_CACHE_DIR"); env && *env) return env;
    return ".liaison-cache";
  }

  bool enabled() const { return enabled_.load(); }

  std::optional<GroebnerBasis> load(const std::string& key, const RingPtr& ring,
                                    const TermOrderSpec& order) {
    if (!enabled_.load()) return std::nullopt;
    std::string blob;
    {
      std::ifstream in(dir_ / (key + ".gb"), std::ios::binary);
      if (!in) return std::nullopt;  // plain miss
      std::ostringstream buf;
      buf << in.rdbuf();
      if (in.bad()) return std::nullopt;
      blob = buf.str();
    }
    try {
      return parse_entry(blob, ring, order);
    } catch (const std::exception&) {
      return std::nullopt;  // corrupt or stale: recompute and overwrite
    }
  }

  void store(const std::string& key, const RingPtr& ring, const GroebnerBasis& gb) {
    if (!enabled_.load()) return;
    try {
      std::filesystem::create_directories(dir_);
      std::string body = render_body(ring, gb);
      std::string payload = std::string(magic) + " " + detail::hex64(detail::fnv1a64(body)) +
                            "\n" + body;
      static std::atomic<std::uint64_t> counter{0};
      std::filesystem::path tmp =
          dir_ / (key + ".tmp" + std::to_string(::getpid()) + "-" +
                  std::to_string(counter.fetch_add(1)));
      {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << payload;
        if (!out) throw std::filesystem::filesystem_error(
            "write failed", tmp, std::make_error_code(std::errc::io_error));
      }
      std::filesystem::rename(tmp, dir_ / (key + ".gb"));
    } catch (const std::exception& e) {
      disable(e.what());
    }
  }

private:
  static constexpr const char* magic = "liaison-gb 1";

  static std::string render_body(const RingPtr& ring, const GroebnerBasis& gb) {
    std::string body = ring->signature() + "\n" + gb.order.signature() + "\n" +
                       std::to_string(gb.elements.size()) + "\n";
    for (const auto& g : gb.elements) {
      body += g.str();
      body += '\n';
    }
    return body;
  }

  static GroebnerBasis parse_entry(const std::string& blob, const RingPtr& ring,
                                   const TermOrderSpec& order) {
    std::istringstream in(blob);
    std::string line;
    if (!std::getline(in, line)) throw value_error("cache entry: empty");
    std::string expect = std::string(magic) + " ";
    if (line.rfind(expect, 0) != 0) throw value_error("cache entry: bad magic");
    std::string rest = blob.substr(line.size() + 1);
    if (line.substr(expect.size()) != detail::hex64(detail::fnv1a64(rest)))
      throw value_error("cache entry: digest mismatch");

    std::string ring_sig, order_sig, count_line;
    if (!std::getline(in, ring_sig) || !std::getline(in, order_sig) ||
        !std::getline(in, count_line))
      throw value_error("cache entry: truncated header");
    if (ring_sig != ring->signature()) throw value_error("cache entry: ring mismatch");
    if (order_sig != order.signature()) throw value_error("cache entry: order mismatch");

    std::size_t n = std::stoul(count_line);
    std::vector<Polynomial> elements;
    elements.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::getline(in, line)) throw value_error("cache entry: truncated body");
      elements.push_back(parse_polynomial(line, ring));
    }
    return {std::move(elements), order};
  }

  void disable(const std::string& why) {
    if (!enabled_.exchange(false)) return;
    std::cerr << "liaison: warning: disk cache disabled (" << why << ")\n";
  }

  std::filesystem::path dir_;
  std::atomic<bool> enabled_{true};
};

/// Wires the disk cache into every subsequent groebner() call. Returns the
/// cache so callers can inspect enabled(); pass the result of default_dir()
/// for the documented LIAISON_CACHE_DIR behavior.
inline std::shared_ptr<GbDiskCache> install_gb_disk_cache(
    std::filesystem::path dir = GbDiskCache::default_dir()) {
  auto cache = std::make_shared<GbDiskCache>(std::move(dir));
  gb_cache_hooks().load = [cache](const std::string& key, const RingPtr& ring,
                                  const TermOrderSpec& order) {
    return cache->load(key, ring, order);
  };
  gb_cache_hooks().store = [cache](const std::string& key, const RingPtr& ring,
                                   const GroebnerBasis& gb) { cache->store(key, ring, gb); };
  return cache;
}

inline void uninstall_gb_disk_cache() {
  gb_cache_hooks().load = nullptr;
  gb_cache_hooks().store = nullptr;
}

}  // namespace liaison
