#include "fermat/fermat.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fermat/errors.hpp"
#include "fermat/poly_text.hpp"

namespace fermat {

namespace {

QPoly var(const RingPtr& ring, int i) { return QPoly::variable(ring, i); }

Ideal coordinate_ideal(const RingPtr& ring, int i, int j, const std::shared_ptr<const GbCache>& cache) {
  return Ideal(ring, {var(ring, i), var(ring, j)}, cache);
}

// Ideals generated by pairs of coordinates: (x,y), (y,z), (z,x).
constexpr std::array<std::array<int, 2>, 3> kCoordinatePairs{{{0, 1}, {1, 2}, {2, 0}}};

// (fgh)^k f^e for the n >= 4 families; nullopt when e would be negative.
std::optional<QPoly> fgh_family(const FermatData& d, int m) {
  int n = d.n;
  QPoly fgh = d.f * d.g * d.h;
  if (m <= n) return fgh * d.f.pow(m - 3);
  int k = (m + n - 1) / n;
  int a = k * n - m;
  int e = k * (n - 3) - a;
  if (e < 0) return std::nullopt;
  return fgh.pow(k) * d.f.pow(e);
}

std::optional<QPoly> witness_n2(const FermatData& d, int m) {
  const RingPtr& r = d.ring;
  QPoly x = var(r, 0), y = var(r, 1), z = var(r, 2);
  QPoly a = x.pow(2) - y.pow(2);  // x^2 - y^2
  QPoly b = y.pow(2) - z.pow(2);  // y^2 - z^2
  QPoly c = z.pow(2) - x.pow(2);  // z^2 - x^2
  int k = m / 4;
  switch (m % 4) {
    case 0:
      return a.pow(2 * k) * b.pow(k) * c.pow(k) * z.pow(2 * k);
    case 1:
      return a.pow(2 * k + 1) * b.pow(k) * c.pow(k) * z.pow(2 * k + 1);
    case 2:
      if (k < 1) return std::nullopt;
      return a.pow(2 * k) * b.pow(k + 1) * c.pow(k + 1) * x * y * z.pow(2 * k - 1);
    default:
      return a.pow(2 * k + 1) * b.pow(k + 1) * c.pow(k + 1) * x * y * z.pow(2 * k);
  }
}

}  // namespace

FermatData fermat_ideal(int n, std::shared_ptr<const GbCache> cache) {
  if (n < 2) throw Error("fermat_ideal: n must be >= 2");
  RingPtr ring = xyz_ring();
  QPoly x = var(ring, 0), y = var(ring, 1), z = var(ring, 2);
  QPoly f = y.pow(n) - z.pow(n);
  QPoly g = z.pow(n) - x.pow(n);
  QPoly h = x.pow(n) - y.pow(n);
  Ideal ideal(ring, {x * f, y * g, z * h}, cache);
  Ideal K = n == 2 ? Ideal(ring, {h, f}, cache) : Ideal(ring, {f, g}, cache);
  std::array<Ideal, 3> coords{coordinate_ideal(ring, 0, 1, cache), coordinate_ideal(ring, 1, 2, cache),
                              coordinate_ideal(ring, 2, 0, cache)};
  return FermatData{n, ring, f, g, h, std::move(ideal), std::move(K), std::move(coords)};
}

PointConfiguration fermat_points(int n) {
  if (n < 2) throw Error("fermat_points: n must be >= 2");
  auto field = CycloField::make(n);
  CycloNumber zero(field), one(field, Rational(1));
  PointConfiguration config{field, {}};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      config.points.push_back({one, CycloNumber::zeta_power(field, a), CycloNumber::zeta_power(field, b)});
    }
  }
  config.points.push_back({one, zero, zero});
  config.points.push_back({zero, one, zero});
  config.points.push_back({zero, zero, one});
  return config;
}

std::vector<CycloNumber> normalized(const std::vector<CycloNumber>& point) {
  for (const auto& c : point) {
    if (c.is_zero()) continue;
    CycloNumber inv = c.inverse();
    std::vector<CycloNumber> out;
    out.reserve(point.size());
    for (const auto& v : point) out.push_back(v * inv);
    return out;
  }
  throw Error("point has all coordinates zero");
}

void validate_configuration(const PointConfiguration& config) {
  std::vector<std::vector<CycloNumber>> seen;
  for (const auto& p : config.points) {
    if (p.size() != 3) throw Error("points must have three coordinates");
    auto rep = normalized(p);
    for (const auto& q : seen) {
      if (q == rep) throw Error("configuration repeats a projective point");
    }
    seen.push_back(std::move(rep));
  }
}

PointConfiguration read_point_configuration(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<PointConfiguration> config;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    int offset = static_cast<int>(first);  // columns are reported against the raw line
    if (line.rfind("conductor:", 0) == 0) {
      if (config) throw ParseError("duplicate conductor header", line_no, 1);
      int conductor = 0;
      try {
        conductor = std::stoi(line.substr(10));
      } catch (const std::exception&) {
        throw ParseError("malformed conductor header", line_no, 1);
      }
      if (conductor < 1) throw ParseError("conductor must be >= 1", line_no, 11);
      config = PointConfiguration{CycloField::make(conductor), {}};
      continue;
    }
    if (!config) throw ParseError("expected 'conductor: n' before the first point", line_no, 1);
    std::string body = line;
    if (!body.empty() && body.front() == '[') {
      if (body.back() != ']') throw ParseError("unterminated '['", line_no, offset + static_cast<int>(body.size()));
      body = body.substr(1, body.size() - 2);
      ++offset;
    }
    std::vector<CycloNumber> point;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i < body.size() && body[i] == '(') ++depth;
      if (i < body.size() && body[i] == ')') --depth;
      if (i == body.size() || (depth == 0 && (body[i] == ':' || body[i] == ','))) {
        try {
          point.push_back(parse_cyclo(body.substr(start, i - start), config->field));
        } catch (const ParseError& e) {
          throw ParseError(e.detail(), line_no, offset + static_cast<int>(start) + std::max(e.column(), 1));
        } catch (const Error& e) {
          throw ParseError(e.what(), line_no, offset + static_cast<int>(start) + 1);
        }
        start = i + 1;
      }
    }
    if (point.size() != 3) {
      throw ParseError("expected 3 coordinates, found " + std::to_string(point.size()), line_no, 1);
    }
    bool all_zero = true;
    for (const auto& c : point) all_zero = all_zero && c.is_zero();
    if (all_zero) throw ParseError("the zero vector is not a projective point", line_no, 1);
    config->points.push_back(std::move(point));
  }
  if (!config) throw ParseError("missing 'conductor: n' header", line_no, 1);
  return *config;
}

PointConfiguration read_point_configuration_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open point file '" + path + "'");
  return read_point_configuration(in);
}

Ideal symbolic_power(const FermatData& data, int m) {
  if (m < 1) throw Error("symbolic_power: m must be >= 1");
  std::vector<Ideal> parts;
  parts.push_back(m == 1 ? data.K : ideal_power(data.K, m));
  for (const auto& c : data.coordinate_ideals) parts.push_back(m == 1 ? c : ideal_power(c, m));
  Ideal result = intersect_all(std::move(parts));
  if (m == 1) {
    if (!ideal_equal(result, data.ideal)) throw Error("symbolic_power: I_n differs from its decomposition");
    return data.ideal;
  }
  return result;
}

int predicted_alpha(int n, int m) {
  if (n < 2 || m < 1) throw Error("predicted_alpha: need n >= 2 and m >= 1");
  if (m == 1) return n + 1;
  if (m == 2) return 2 * (n + 1);
  if (n == 2) return m % 2 == 0 ? 5 * (m / 2) : 5 * (m / 2) + 3;
  if (n == 3) {
    static constexpr int kOffset[3] = {0, 4, 8};
    return 9 * (m / 3) + kOffset[m % 3];
  }
  if (n == 4 && m == 5) return 21;
  return n * m;
}

bool in_coordinate_power(const QPoly& p, int i, int j, int m) {
  for (const auto& t : p.terms()) {
    if (t.mono[i] + t.mono[j] < m) return false;
  }
  return true;
}

std::optional<QPoly> witness(const FermatData& d, int m) {
  if (m < 1) return std::nullopt;
  const QPoly& first = d.ideal.generators().front();
  if (d.n == 2) {
    if (m == 2) return first.pow(2);
    return witness_n2(d, m);
  }
  if (m == 1) return first;
  if (m == 2) return first.pow(2);
  if (d.n == 3) {
    if (m % 3 != 1) return std::nullopt;
    int j = m / 3;
    return d.f.pow(j) * d.g.pow(j) * d.h.pow(j + 1) * QPoly::variable(d.ring, 2);
  }
  if (d.n == 4 && m == 5) {
    return QPoly::variable(d.ring, 2) * d.f.pow(2) * d.g * d.h.pow(2);
  }
  return fgh_family(d, m);
}

std::optional<WitnessCheck> verify_witness(const FermatData& data, int m) {
  auto w = witness(data, m);
  if (!w) return std::nullopt;
  WitnessCheck check{data.n, m, *w, w->degree(), predicted_alpha(data.n, m), false, {}};
  check.in_K_power = w->is_homogeneous() && ideal_power(data.K, m).contains(*w);
  for (std::size_t c = 0; c < kCoordinatePairs.size(); ++c) {
    check.in_coordinate_powers[c] = in_coordinate_power(*w, kCoordinatePairs[c][0], kCoordinatePairs[c][1], m);
  }
  return check;
}

FermatWorkspace::FermatWorkspace(int n, std::shared_ptr<const GbCache> cache)
    : cache_(cache), data_(fermat_ideal(n, std::move(cache))) {}

Ideal FermatWorkspace::symbolic_power(int m) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = symbolic_.find(m); it != symbolic_.end()) return it->second;
  }
  Ideal result = fermat::symbolic_power(data_, m);
  std::lock_guard<std::mutex> lock(mu_);
  return symbolic_.emplace(m, std::move(result)).first->second;
}

Ideal FermatWorkspace::ordinary_power(int r) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = ordinary_.find(r); it != ordinary_.end()) return it->second;
  }
  Ideal result = r == 1 ? data_.ideal : ideal_power(data_.ideal, r);
  std::lock_guard<std::mutex> lock(mu_);
  return ordinary_.emplace(r, std::move(result)).first->second;
}

Ideal FermatWorkspace::containment_target(int a, int r) {
  if (a == 0) return ordinary_power(r);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = targets_.find({a, r}); it != targets_.end()) return it->second;
  }
  Ideal result = ideal_product(maximal_ideal_power(data_.ring, a, cache_), ordinary_power(r));
  std::lock_guard<std::mutex> lock(mu_);
  return targets_.emplace(std::make_pair(a, r), std::move(result)).first->second;
}

}  // namespace fermat
