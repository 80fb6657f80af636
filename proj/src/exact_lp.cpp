#include "polynet/exact_lp.hpp"

#include "polynet/errors.hpp"

namespace polynet {

namespace {

class Tableau {
 public:
  // rows: constraint rows then the objective row; last column is the rhs.
  std::vector<std::vector<mpq_class>> t;
  std::vector<std::size_t> basis;
  std::size_t columns = 0;  // structural + artificial columns

  std::size_t rows() const { return basis.size(); }
  std::vector<mpq_class>& objective() { return t.back(); }

  void pivot(std::size_t r, std::size_t c) {
    const mpq_class p = t[r][c];
    for (auto& v : t[r]) v /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || sgn(t[i][c]) == 0) continue;
      const mpq_class f = t[i][c];
      for (std::size_t j = 0; j <= columns; ++j) {
        if (sgn(t[r][j]) != 0) t[i][j] -= f * t[r][j];
      }
    }
    basis[r] = c;
  }

  // Maximizes; objective row holds reduced costs z_j - c_j. Columns >= allowed are frozen.
  // Returns false if unbounded.
  bool optimize(std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(objective()[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return true;
      std::size_t leave = rows();
      mpq_class best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (sgn(t[i][enter]) <= 0) continue;
        mpq_class ratio = t[i][columns] / t[i][enter];
        if (leave == rows() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const std::vector<RatVector>& a, const RatVector& b, const RatVector& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw DimensionError("solve_lp: rhs length mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw DimensionError("solve_lp: constraint row length mismatch");
  }

  Tableau tab;
  tab.columns = n + m;
  tab.t.assign(m + 1, std::vector<mpq_class>(n + m + 1, mpq_class(0)));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = flip ? mpq_class(-a[i][j].raw()) : a[i][j].raw();
    tab.t[i][n + i] = 1;
    tab.t[i][n + m] = flip ? mpq_class(-b[i].raw()) : b[i].raw();
    tab.basis[i] = n + i;
  }
  // Phase 1: maximize -(sum of artificials).
  auto& z = tab.objective();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) z[j] -= tab.t[i][j];
    z[n + m] -= tab.t[i][n + m];
  }
  tab.optimize(n + m);
  if (sgn(tab.objective()[n + m]) != 0) return {LpStatus::Infeasible, 0, {}};

  // Drive zero-valued artificials out of the basis; drop rows that are redundant.
  for (std::size_t i = 0; i < tab.rows();) {
    if (tab.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(tab.t[i][j]) != 0) {
        col = j;
        break;
      }
    }
    if (col < n) {
      tab.pivot(i, col);
      ++i;
    } else {
      tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  // Phase 2 objective row: z_j - c_j expressed in the current basis.
  auto& obj = tab.objective();
  std::fill(obj.begin(), obj.end(), mpq_class(0));
  for (std::size_t j = 0; j < n; ++j) obj[j] = -c[j].raw();
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    const mpq_class cb = c[tab.basis[i]].raw();
    if (sgn(cb) == 0) continue;
    for (std::size_t j = 0; j <= n + m; ++j) obj[j] += cb * tab.t[i][j];
  }
  if (!tab.optimize(n)) return {LpStatus::Unbounded, 0, {}};

  LpResult result;
  result.status = LpStatus::Optimal;
  result.value = Rational(tab.objective()[n + m]);
  result.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.rows(); ++i) result.x[tab.basis[i]] = Rational(tab.t[i][n + m]);
  return result;
}

}  // namespace polynet
