#include "strateq/lp.hpp"

#include <stdexcept>

namespace strateq {

namespace {

// Dense simplex tableau. Maintains the reduced-cost row d[j] = z_j - c_j and
// the current objective value; a maximization step enters the lowest-index
// column with d[j] < 0 and leaves on the minimum ratio, ties broken by the
// lowest basic variable index (Bland's rule, so the walk never cycles).
struct Tableau {
  std::vector<RatVector> rows;
  RatVector rhs;
  RatVector d;
  Rational z;
  std::vector<int> basis;

  int num_rows() const { return static_cast<int>(rows.size()); }
  int num_cols() const { return static_cast<int>(d.size()); }

  void pivot(int r, int j) {
    Rational inv = rows[r][j].inverse();
    for (auto& v : rows[r]) v *= inv;
    rhs[r] *= inv;
    for (int r2 = 0; r2 < num_rows(); ++r2) {
      if (r2 == r || rows[r2][j].is_zero()) continue;
      Rational factor = rows[r2][j];
      for (int c = 0; c < num_cols(); ++c) rows[r2][c] -= factor * rows[r][c];
      rhs[r2] -= factor * rhs[r];
    }
    Rational factor = d[j];
    if (!factor.is_zero()) {
      for (int c = 0; c < num_cols(); ++c) d[c] -= factor * rows[r][c];
      z -= factor * rhs[r];
    }
    basis[r] = j;
  }

  void run() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < num_cols(); ++j) {
        if (d[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return;

      int leave = -1;
      Rational best_ratio;
      for (int r = 0; r < num_rows(); ++r) {
        if (rows[r][enter].sign() <= 0) continue;
        Rational ratio = rhs[r] / rows[r][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave < 0) throw std::runtime_error("linear program is unbounded");
      pivot(leave, enter);
    }
  }

  RatVector solution(int num_vars) const {
    RatVector x(num_vars, Rational(0));
    for (int r = 0; r < num_rows(); ++r) {
      if (basis[r] < num_vars) x[basis[r]] = rhs[r];
    }
    return x;
  }
};

}  // namespace

SimplexResult simplex_max(const std::vector<RatVector>& a_rows, const RatVector& b,
                          const RatVector& c) {
  const int m = static_cast<int>(a_rows.size());
  const int n = static_cast<int>(c.size());
  if (m == 0 || n == 0 || static_cast<int>(b.size()) != m)
    throw std::invalid_argument("simplex_max shape mismatch");

  Tableau t;
  t.rows.assign(m, RatVector(n + m, Rational(0)));
  t.rhs = b;
  t.d.assign(n + m, Rational(0));
  t.basis.resize(m);
  for (int r = 0; r < m; ++r) {
    if (static_cast<int>(a_rows[r].size()) != n)
      throw std::invalid_argument("simplex_max shape mismatch");
    if (b[r].sign() < 0) throw std::invalid_argument("simplex_max requires b >= 0");
    for (int j = 0; j < n; ++j) t.rows[r][j] = a_rows[r][j];
    t.rows[r][n + r] = 1;
    t.basis[r] = n + r;
  }
  for (int j = 0; j < n; ++j) t.d[j] = -c[j];

  t.run();

  SimplexResult result;
  result.objective = t.z;
  result.x = t.solution(n);
  result.dual.assign(m, Rational(0));
  for (int r = 0; r < m; ++r) result.dual[r] = t.d[n + r];
  return result;
}

std::optional<RatVector> find_feasible_point(const std::vector<RatVector>& eq_rows,
                                             const RatVector& eq_rhs,
                                             const std::vector<RatVector>& le_rows,
                                             const RatVector& le_rhs, int num_vars) {
  const int ne = static_cast<int>(eq_rows.size());
  const int nl = static_cast<int>(le_rows.size());
  if (static_cast<int>(eq_rhs.size()) != ne || static_cast<int>(le_rhs.size()) != nl)
    throw std::invalid_argument("find_feasible_point shape mismatch");

  const int cols = num_vars + nl + ne;  // variables, slacks, artificials
  Tableau t;
  t.rows.assign(ne + nl, RatVector(cols, Rational(0)));
  t.rhs.assign(ne + nl, Rational(0));
  t.d.assign(cols, Rational(0));
  t.basis.resize(ne + nl);

  for (int r = 0; r < ne; ++r) {
    if (static_cast<int>(eq_rows[r].size()) != num_vars)
      throw std::invalid_argument("find_feasible_point shape mismatch");
    bool flip = eq_rhs[r].sign() < 0;
    for (int j = 0; j < num_vars; ++j)
      t.rows[r][j] = flip ? -eq_rows[r][j] : eq_rows[r][j];
    t.rhs[r] = flip ? -eq_rhs[r] : eq_rhs[r];
    t.rows[r][num_vars + nl + r] = 1;
    t.basis[r] = num_vars + nl + r;
  }
  for (int r = 0; r < nl; ++r) {
    if (static_cast<int>(le_rows[r].size()) != num_vars)
      throw std::invalid_argument("find_feasible_point shape mismatch");
    if (le_rhs[r].sign() < 0)
      throw std::invalid_argument("find_feasible_point requires le_rhs >= 0");
    for (int j = 0; j < num_vars; ++j) t.rows[ne + r][j] = le_rows[r][j];
    t.rhs[ne + r] = le_rhs[r];
    t.rows[ne + r][num_vars + r] = 1;
    t.basis[ne + r] = num_vars + r;
  }

  // Phase 1: maximize minus the artificial sum. With artificials basic at
  // cost -1, the initial reduced costs are the negated equality-row sums.
  for (int j = 0; j < cols; ++j) {
    Rational sum;
    for (int r = 0; r < ne; ++r) sum += t.rows[r][j];
    t.d[j] = -sum;
    if (j >= num_vars + nl) t.d[j] += 1;
  }
  for (int r = 0; r < ne; ++r) t.z -= t.rhs[r];

  t.run();

  if (!t.z.is_zero()) return std::nullopt;
  return t.solution(num_vars);
}

}  // namespace strateq
