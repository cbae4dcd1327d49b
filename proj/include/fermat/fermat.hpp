#pragma once

#include <array>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fermat/cyclotomic.hpp"
#include "fermat/groebner.hpp"
#include "fermat/poly.hpp"

namespace fermat {

/// I_n = (x f, y g, z h) with f = y^n - z^n, g = z^n - x^n, h = x^n - y^n, together
/// with the pieces of its primary decomposition K, (x,y), (y,z), (z,x).
struct FermatData {
  int n;
  RingPtr ring;
  QPoly f, g, h;
  Ideal ideal;
  /// (f, g) for n >= 3 and (x^2 - y^2, y^2 - z^2) for n = 2.
  Ideal K;
  /// (x,y), (y,z), (z,x) in that order.
  std::array<Ideal, 3> coordinate_ideals;
};

FermatData fermat_ideal(int n, std::shared_ptr<const GbCache> cache = nullptr);

/// Projective points over Q(zeta_conductor), one coordinate vector per point.
struct PointConfiguration {
  CycloFieldPtr field;
  std::vector<std::vector<CycloNumber>> points;

  int conductor() const { return field->conductor(); }
  std::size_t size() const { return points.size(); }
};

struct FatPointScheme {
  PointConfiguration configuration;
  int multiplicity = 1;
};

/// The n^2 points [1 : z^a : z^b] followed by [1:0:0], [0:1:0], [0:0:1].
PointConfiguration fermat_points(int n);

/// Reads the point-configuration file format:
///   # comment
///   conductor: 3
///   [1 : z_3 : z_3^2]      (brackets optional; ':' or ',' separates coordinates)
/// Parse errors carry the line number.
PointConfiguration read_point_configuration(std::istream& in);
PointConfiguration read_point_configuration_file(const std::string& path);

/// Throws unless no point is zero and the points are pairwise distinct up to scalar.
void validate_configuration(const PointConfiguration& config);

/// Affine representative: first nonzero coordinate scaled to 1.
std::vector<CycloNumber> normalized(const std::vector<CycloNumber>& point);

/// I_n^(m) = K^m ∩ (x,y)^m ∩ (y,z)^m ∩ (z,x)^m. For m = 1 the defining ideal is
/// returned after checking it equals the intersection.
Ideal symbolic_power(const FermatData& data, int m);

/// Least degree of I_n^(m) predicted by the closed forms of the reference table.
int predicted_alpha(int n, int m);

/// True when every term of p has exponent sum >= m in the two given variables,
/// i.e. p lies in (x_i, x_j)^m.
bool in_coordinate_power(const QPoly& p, int i, int j, int m);

/// Explicit element of I_n^(m) of least degree from the known constructions, or
/// nullopt when no construction covers (n, m).
std::optional<QPoly> witness(const FermatData& data, int m);

struct WitnessCheck {
  int n = 0;
  int m = 0;
  QPoly witness;
  int degree = 0;
  int expected_degree = 0;
  bool in_K_power = false;
  std::array<bool, 3> in_coordinate_powers{};

  bool verified() const {
    return in_K_power && in_coordinate_powers[0] && in_coordinate_powers[1] && in_coordinate_powers[2] &&
           degree == expected_degree;
  }
};

std::optional<WitnessCheck> verify_witness(const FermatData& data, int m);

/// Memoises I_n, its symbolic and ordinary powers for one n. Thread-safe.
class FermatWorkspace {
 public:
  explicit FermatWorkspace(int n, std::shared_ptr<const GbCache> cache = nullptr);

  int n() const { return data_.n; }
  const FermatData& data() const { return data_; }
  const std::shared_ptr<const GbCache>& cache() const { return cache_; }

  Ideal symbolic_power(int m);
  Ideal ordinary_power(int r);
  /// m^a * I_n^r (a may be 0).
  Ideal containment_target(int a, int r);

 private:
  std::shared_ptr<const GbCache> cache_;
  FermatData data_;
  std::mutex mu_;
  std::map<int, Ideal> symbolic_;
  std::map<int, Ideal> ordinary_;
  std::map<std::pair<int, int>, Ideal> targets_;
};

}  // namespace fermat
