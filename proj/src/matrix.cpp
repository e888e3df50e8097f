#include "strateq/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace strateq {

GameMatrix::GameMatrix(int rows, int cols) : m_(rows), n_(cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be >= 1");
  entries_.resize(static_cast<std::size_t>(rows) * cols);
}

GameMatrix::GameMatrix(int rows, int cols, std::vector<Rational> entries)
    : m_(rows), n_(cols), entries_(std::move(entries)) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("entry count does not match matrix dimensions");
}

GameMatrix GameMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatVector> converted;
  converted.reserve(rows.size());
  for (const auto& r : rows) converted.emplace_back(r.begin(), r.end());
  return from_rows(converted);
}

GameMatrix GameMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty() || rows.front().empty())
    throw std::invalid_argument("matrix dimensions must be >= 1");
  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(rows.front().size());
  std::vector<Rational> entries;
  entries.reserve(static_cast<std::size_t>(m) * n);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw std::invalid_argument("ragged rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return GameMatrix(m, n, std::move(entries));
}

std::size_t GameMatrix::index(int i, int j) const {
  if (i < 1 || i > m_ || j < 1 || j > n_)
    throw std::out_of_range("matrix index out of range");
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

const Rational& GameMatrix::at(int i, int j) const { return entries_[index(i, j)]; }

Rational& GameMatrix::at(int i, int j) { return entries_[index(i, j)]; }

std::span<const Rational> GameMatrix::row(int i) const {
  if (i < 1 || i > m_) throw std::out_of_range("row index out of range");
  return {entries_.data() + static_cast<std::size_t>(i - 1) * n_, static_cast<std::size_t>(n_)};
}

GameMatrix::ColumnView GameMatrix::col(int j) const {
  if (j < 1 || j > n_) throw std::out_of_range("column index out of range");
  return ColumnView(entries_.data() + (j - 1), m_, n_);
}

bool GameMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

GameMatrix GameMatrix::operator-() const {
  GameMatrix r(m_, n_);
  for (std::size_t idx = 0; idx < entries_.size(); ++idx) r.entries_[idx] = -entries_[idx];
  return r;
}

GameMatrix& GameMatrix::operator+=(const GameMatrix& rhs) {
  if (m_ != rhs.m_ || n_ != rhs.n_) throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t idx = 0; idx < entries_.size(); ++idx) entries_[idx] += rhs.entries_[idx];
  return *this;
}

GameMatrix& GameMatrix::operator-=(const GameMatrix& rhs) {
  if (m_ != rhs.m_ || n_ != rhs.n_) throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t idx = 0; idx < entries_.size(); ++idx) entries_[idx] -= rhs.entries_[idx];
  return *this;
}

GameMatrix operator*(const Rational& s, const GameMatrix& f) {
  GameMatrix r(f.m_, f.n_);
  for (std::size_t idx = 0; idx < f.entries_.size(); ++idx) r.entries_[idx] = s * f.entries_[idx];
  return r;
}

bool operator==(const GameMatrix& a, const GameMatrix& b) {
  return a.m_ == b.m_ && a.n_ == b.n_ && a.entries_ == b.entries_;
}

GameMatrix replicate_row(const RatVector& u, int m) {
  GameMatrix r(m, static_cast<int>(u.size()));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= static_cast<int>(u.size()); ++j) r.at(i, j) = u[j - 1];
  }
  return r;
}

GameMatrix replicate_col(const RatVector& v, int n) {
  GameMatrix r(static_cast<int>(v.size()), n);
  for (int i = 1; i <= static_cast<int>(v.size()); ++i) {
    for (int j = 1; j <= n; ++j) r.at(i, j) = v[i - 1];
  }
  return r;
}

int matrix_rank(const GameMatrix& f) {
  const int m = f.rows();
  const int n = f.cols();
  std::vector<RatVector> w(m, RatVector(n));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = f.at(i + 1, j + 1);
  }

  int rank = 0;
  int pivot_row = 0;
  for (int col = 0; col < n && pivot_row < m; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < m; ++r) {
      if (!w[r][col].is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(w[sel], w[pivot_row]);
    for (int r = pivot_row + 1; r < m; ++r) {
      if (w[r][col].is_zero()) continue;
      Rational factor = w[r][col] / w[pivot_row][col];
      for (int j = col; j < n; ++j) w[r][j] -= factor * w[pivot_row][j];
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

Rational bilinear_form(std::span<const Rational> w, const GameMatrix& f,
                       std::span<const Rational> z) {
  if (static_cast<int>(w.size()) != f.rows() || static_cast<int>(z.size()) != f.cols())
    throw std::invalid_argument("bilinear form dimension mismatch");
  Rational total;
  for (int i = 1; i <= f.rows(); ++i) {
    if (w[i - 1].is_zero()) continue;
    Rational row_sum;
    auto row = f.row(i);
    for (int j = 0; j < f.cols(); ++j) {
      if (z[j].is_zero()) continue;
      row_sum += row[j] * z[j];
    }
    total += w[i - 1] * row_sum;
  }
  return total;
}

BimatrixGame::BimatrixGame(GameMatrix a, GameMatrix b)
    : a_tilde(std::move(a)), b_tilde(std::move(b)) {
  if (a_tilde.rows() != b_tilde.rows() || a_tilde.cols() != b_tilde.cols())
    throw std::invalid_argument("payoff matrices must share dimensions");
}

}  // namespace strateq
