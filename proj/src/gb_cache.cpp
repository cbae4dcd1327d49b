#include "fermat/gb_cache.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fermat/errors.hpp"
#include "fermat/poly_text.hpp"

namespace fermat {

namespace {

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

std::string join_vars(const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.vars.size(); ++i) {
    if (i) out += ',';
    out += ring.vars[i];
  }
  return out;
}

std::string field_name(const Ring& ring) {
  return ring.is_rational() ? "Q" : "Q(z_" + std::to_string(ring.conductor()) + ")";
}

}  // namespace

GbCache::GbCache(std::filesystem::path directory) : directory_(std::move(directory)) {
  std::filesystem::create_directories(directory_);
}

std::shared_ptr<GbCache> GbCache::from_environment(const std::string& fallback) {
  const char* env = std::getenv("FERMAT_CACHE_DIR");
  std::string dir = env && *env ? std::string(env) : fallback;
  if (dir.empty()) return nullptr;
  return std::make_shared<GbCache>(dir);
}

std::string GbCache::key(const std::vector<QPoly>& gens, const Ring& ring) {
  std::vector<std::string> texts;
  texts.reserve(gens.size());
  for (const auto& g : gens) texts.push_back(primitive_part(g.in_ring(with_order(g.ring(), ring.order))).str());
  std::sort(texts.begin(), texts.end());
  texts.erase(std::unique(texts.begin(), texts.end()), texts.end());
  std::string canon = "v" + std::to_string(kFormatVersion) + "|" + join_vars(ring) + "|" + ring.order.name() +
                      "|" + field_name(ring);
  for (const auto& t : texts) canon += "|" + t;
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return hex64(h);
}

std::filesystem::path GbCache::path_for(const std::string& key) const { return directory_ / (key + ".gb"); }

std::optional<GroebnerBasis> GbCache::load(const std::vector<QPoly>& gens, const RingPtr& ring) const {
  std::string k = key(gens, *ring);
  std::ifstream in(path_for(k));
  if (!in) return std::nullopt;
  std::string line;
  auto expect = [&](const std::string& want) { return std::getline(in, line) && line == want; };
  if (!expect("fermat-gb-cache " + std::to_string(kFormatVersion))) return std::nullopt;
  if (!expect("ring: " + join_vars(*ring))) return std::nullopt;
  if (!expect("order: " + ring->order.name())) return std::nullopt;
  if (!expect("field: " + field_name(*ring))) return std::nullopt;
  if (!expect("generators: " + k)) return std::nullopt;
  if (!std::getline(in, line) || line.rfind("size: ", 0) != 0) return std::nullopt;
  std::size_t size = std::stoul(line.substr(6));
  GroebnerBasis gb{ring, {}};
  try {
    for (std::size_t i = 0; i < size; ++i) {
      if (!std::getline(in, line)) return std::nullopt;
      gb.polys.push_back(parse_qpoly(line, ring));
    }
  } catch (const ParseError&) {
    return std::nullopt;
  }
  return gb;
}

void GbCache::store(const std::vector<QPoly>& gens, const GroebnerBasis& basis) const {
  std::string k = key(gens, *basis.ring);
  std::ostringstream body;
  body << "fermat-gb-cache " << kFormatVersion << '\n'
       << "ring: " << join_vars(*basis.ring) << '\n'
       << "order: " << basis.order().name() << '\n'
       << "field: " << field_name(*basis.ring) << '\n'
       << "generators: " << k << '\n'
       << "size: " << basis.polys.size() << '\n';
  for (const auto& g : basis.polys) body << g.str() << '\n';

  std::lock_guard<std::mutex> lock(write_mu_);
  auto final_path = path_for(k);
  auto tmp = final_path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;  // read-only cache directories simply do not persist
    out << body.str();
  }
  std::error_code ec;
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace fermat
