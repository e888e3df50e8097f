#include "strateq/subspace.hpp"

#include <stdexcept>
#include <utility>

namespace strateq {

ResidualParts residual(const GameMatrix& f, int i, int j) {
  const int m = f.rows();
  const int n = f.cols();
  if (i < 1 || i > m || j < 1 || j > n) throw std::out_of_range("reference index out of range");

  GameMatrix row_part = replicate_row(RatVector(f.row(i).begin(), f.row(i).end()), m);

  RatVector shifted_col(m);
  for (int s = 1; s <= m; ++s) shifted_col[s - 1] = f.at(s, j) - f.at(i, j);
  GameMatrix col_part = replicate_col(shifted_col, n);

  GameMatrix f_hat(m, n);
  for (int s = 1; s <= m; ++s) {
    for (int t = 1; t <= n; ++t) {
      f_hat.at(s, t) = f.at(s, t) - f.at(i, t) - f.at(s, j) + f.at(i, j);
    }
  }
  return {std::move(f_hat), std::move(row_part), std::move(col_part)};
}

MembershipResult is_in_subspace_m(const GameMatrix& f) {
  const int m = f.rows();
  const int n = f.cols();
  ResidualParts parts = residual(f, 1, 1);

  MembershipResult result{.in_m = true,
                          .alpha = Rational(0),
                          .l = m,
                          .k = n,
                          .row_part = std::move(parts.row_part),
                          .col_part = std::move(parts.col_part),
                          .ref_i = 1,
                          .ref_j = 1};
  for (int l = 1; l <= m && result.in_m; ++l) {
    for (int k = 1; k <= n; ++k) {
      if (!parts.f_hat.at(l, k).is_zero()) {
        result.in_m = false;
        result.alpha = parts.f_hat.at(l, k);
        result.l = l;
        result.k = k;
        break;
      }
    }
  }
  return result;
}

std::optional<WzWitness> witness_wz(const GameMatrix& f) {
  MembershipResult mem = is_in_subspace_m(f);
  if (mem.in_m) return std::nullopt;

  WzWitness wit;
  wit.w.assign(f.rows(), Rational(0));
  wit.z.assign(f.cols(), Rational(0));
  wit.w[mem.l - 1] += 1;
  wit.w[mem.ref_i - 1] -= 1;
  wit.z[mem.k - 1] += 1;
  wit.z[mem.ref_j - 1] -= 1;
  wit.value = mem.alpha;
  return wit;
}

GameMatrix wedderburn_step(const GameMatrix& c, const RatVector& x, const RatVector& y) {
  const int m = c.rows();
  const int n = c.cols();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != m)
    throw std::invalid_argument("wedderburn step dimension mismatch");

  RatVector cx(m);
  for (int i = 1; i <= m; ++i) {
    Rational sum;
    auto row = c.row(i);
    for (int j = 0; j < n; ++j) {
      if (!x[j].is_zero()) sum += row[j] * x[j];
    }
    cx[i - 1] = sum;
  }
  RatVector yc(n, Rational(0));
  for (int i = 1; i <= m; ++i) {
    if (y[i - 1].is_zero()) continue;
    auto row = c.row(i);
    for (int j = 0; j < n; ++j) yc[j] += y[i - 1] * row[j];
  }

  Rational w1;
  for (int i = 0; i < m; ++i) w1 += y[i] * cx[i];
  if (w1.is_zero()) throw std::domain_error("wedderburn step requires y^T C x != 0");

  Rational inv = w1.inverse();
  GameMatrix next(m, n);
  for (int s = 1; s <= m; ++s) {
    for (int t = 1; t <= n; ++t) {
      next.at(s, t) = c.at(s, t) - inv * cx[s - 1] * yc[t - 1];
    }
  }
  return next;
}

std::vector<GameMatrix> wedderburn_decompose(GameMatrix c) {
  const int m = c.rows();
  const int n = c.cols();
  std::vector<GameMatrix> terms;

  for (;;) {
    int pi = 0;
    int pj = 0;
    for (int i = 1; i <= m && pi == 0; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (!c.at(i, j).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == 0) break;

    // Pivot entry is nonzero, so x = e_pj, y = e_pi give w1 = c(pi, pj) != 0
    // and the rank-1 term is the scaled outer product of column pj and row pi.
    Rational inv = c.at(pi, pj).inverse();
    GameMatrix term(m, n);
    for (int s = 1; s <= m; ++s) {
      for (int t = 1; t <= n; ++t) {
        term.at(s, t) = inv * c.at(s, pj) * c.at(pi, t);
      }
    }
    c -= term;
    terms.push_back(std::move(term));
  }
  return terms;
}

}  // namespace strateq
