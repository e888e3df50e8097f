#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "strateq/rational.hpp"

namespace strateq {

using RatVector = std::vector<Rational>;

/// Dense m-by-n matrix of exact rationals, stored row-major.
///
/// Matrix positions are addressed 1-based: at(i, j) with 1 <= i <= rows()
/// and 1 <= j <= cols(). Row and column views expose contiguous /
/// strided slices and iterate 0-based like any other range.
class GameMatrix {
 public:
  GameMatrix(int rows, int cols);  // zero-filled
  GameMatrix(int rows, int cols, std::vector<Rational> entries);

  static GameMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static GameMatrix from_rows(const std::vector<RatVector>& rows);

  int rows() const { return m_; }
  int cols() const { return n_; }

  const Rational& at(int i, int j) const;
  Rational& at(int i, int j);

  std::span<const Rational> row(int i) const;

  class ColumnView {
   public:
    ColumnView(const Rational* base, int rows, int stride) : base_(base), rows_(rows), stride_(stride) {}
    const Rational& operator[](int idx) const { return base_[static_cast<std::size_t>(idx) * stride_]; }
    int size() const { return rows_; }

   private:
    const Rational* base_;
    int rows_;
    int stride_;
  };
  ColumnView col(int j) const;

  bool is_zero() const;

  GameMatrix operator-() const;
  GameMatrix& operator+=(const GameMatrix& rhs);
  GameMatrix& operator-=(const GameMatrix& rhs);
  friend GameMatrix operator+(GameMatrix lhs, const GameMatrix& rhs) { return lhs += rhs; }
  friend GameMatrix operator-(GameMatrix lhs, const GameMatrix& rhs) { return lhs -= rhs; }
  friend GameMatrix operator*(const Rational& s, const GameMatrix& f);
  friend bool operator==(const GameMatrix& a, const GameMatrix& b);

 private:
  std::size_t index(int i, int j) const;

  int m_;
  int n_;
  std::vector<Rational> entries_;
};

/// 1_m u^T: every row equals u.
GameMatrix replicate_row(const RatVector& u, int m);
/// v 1_n^T: every column equals v.
GameMatrix replicate_col(const RatVector& v, int n);

/// Exact rank via rational Gaussian elimination. No tolerances.
int matrix_rank(const GameMatrix& f);

/// w^T F z, exact. Throws std::invalid_argument on dimension mismatch.
Rational bilinear_form(std::span<const Rational> w, const GameMatrix& f,
                       std::span<const Rational> z);

/// A bimatrix game: row player's payoffs a_tilde, column player's b_tilde,
/// both m-by-n.
struct BimatrixGame {
  BimatrixGame(GameMatrix a, GameMatrix b);

  int rows() const { return a_tilde.rows(); }
  int cols() const { return a_tilde.cols(); }

  GameMatrix a_tilde;
  GameMatrix b_tilde;
};

}  // namespace strateq
