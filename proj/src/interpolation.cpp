#include "fermat/interpolation.hpp"

#include "fermat/errors.hpp"

namespace fermat {

namespace {

long falling_factorial(int a, int d) {
  long r = 1;
  for (int s = 0; s < d; ++s) r *= a - s;
  return r;
}

}  // namespace

std::vector<std::array<int, 3>> derivative_indices(int order) {
  std::vector<std::array<int, 3>> out;
  for (int a = order; a >= 0; --a) {
    for (int b = order - a; b >= 0; --b) out.push_back({a, b, order - a - b});
  }
  return out;
}

ConditionMatrix build_condition_matrix(const FatPointScheme& scheme, int t, const InterpolationOptions& options) {
  if (scheme.multiplicity < 1) throw Error("fat point multiplicity must be >= 1");
  ConditionMatrix matrix;
  if (t < 0) return matrix;
  matrix.columns = monomials_of_degree(3, t);
  const auto& field = scheme.configuration.field;
  int m = scheme.multiplicity;

  std::vector<std::array<int, 3>> derivs;
  for (int order = options.all_orders ? 0 : m - 1; order <= m - 1; ++order) {
    auto d = derivative_indices(order);
    derivs.insert(derivs.end(), d.begin(), d.end());
  }
  for (const auto& raw : scheme.configuration.points) {
    if (raw.size() != 3) throw Error("points must have three coordinates");
    std::vector<CycloNumber> p = options.normalize_points ? normalized(raw) : raw;
    // powers[i][e] = p_i^e for e <= t
    std::vector<std::vector<CycloNumber>> powers(3);
    for (int i = 0; i < 3; ++i) {
      powers[i].emplace_back(field, Rational(1));
      for (int e = 1; e <= t; ++e) powers[i].push_back(powers[i].back() * p[i]);
    }
    for (const auto& d : derivs) {
      Row<CycloNumber> row;
      row.reserve(matrix.columns.size());
      for (Monomial mu : matrix.columns) {
        CycloNumber entry(field);
        if (mu[0] >= d[0] && mu[1] >= d[1] && mu[2] >= d[2]) {
          long c = falling_factorial(mu[0], d[0]) * falling_factorial(mu[1], d[1]) * falling_factorial(mu[2], d[2]);
          entry = powers[0][mu[0] - d[0]] * powers[1][mu[1] - d[1]] * powers[2][mu[2] - d[2]] * Rational(c);
        }
        row.push_back(std::move(entry));
      }
      matrix.rows.push_back(std::move(row));
    }
  }
  return matrix;
}

long fatpoint_dim(const FatPointScheme& scheme, int t, const InterpolationOptions& options) {
  if (t < 0) return 0;
  // A nonzero degree-t form has multiplicity <= t at any point; below m - 1 the
  // exact-order rows are identically zero and would report the whole space.
  if (!options.all_orders && t < scheme.multiplicity - 1) return 0;
  ConditionMatrix matrix = build_condition_matrix(scheme, t, options);
  std::size_t cols = matrix.column_count();
  std::size_t rows = matrix.row_count();
  std::size_t r = rows == 0 ? 0 : row_echelon(matrix.rows, false).rank;
  long kernel = static_cast<long>(cols - r);
  if (options.trace) {
    *options.trace << "rank conductor=" << scheme.configuration.conductor()
                   << " points=" << scheme.configuration.size() << " m=" << scheme.multiplicity << " t=" << t
                   << " rows=" << rows << " cols=" << cols << " rank=" << r << " kernel=" << kernel << '\n';
  }
  return kernel;
}

int alpha_interp(const FatPointScheme& scheme, const InterpolationOptions& options) {
  int cap = options.alpha_cap > 0 ? options.alpha_cap
                                  : scheme.multiplicity * static_cast<int>(std::max<std::size_t>(1, scheme.configuration.size()));
  for (int t = 0; t <= cap; ++t) {
    if (fatpoint_dim(scheme, t, options) > 0) return t;
  }
  throw ScanCapExceeded("alpha_interp: no form of degree <= " + std::to_string(cap) + " found");
}

}  // namespace fermat
