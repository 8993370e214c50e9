#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "projconn/ring.hpp"

namespace projconn {

/// Column vector over a RingContext; entries are kept in normal form.
class RingVector {
 public:
  RingVector(RingPtr ctx, std::vector<Polynomial> entries);
  static RingVector zero(RingPtr ctx, std::size_t n);
  static RingVector unit(RingPtr ctx, std::size_t n, std::size_t i);

  const RingPtr& ctx() const { return ctx_; }
  std::size_t size() const { return entries_.size(); }
  const Polynomial& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Polynomial>& entries() const { return entries_; }
  bool is_zero() const;

  RingVector operator+(const RingVector& other) const;
  RingVector operator-(const RingVector& other) const;
  RingVector scaled(const Polynomial& a) const;
  /// Same entries re-reduced in another ring that shares the leading variables.
  RingVector in(RingPtr other) const;

  friend bool operator==(const RingVector& a, const RingVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  RingPtr ctx_;
  std::vector<Polynomial> entries_;
};

/// Row-major matrix over a RingContext; entries are kept in normal form.
class RingMatrix {
 public:
  RingMatrix(RingPtr ctx, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);
  static RingMatrix zero(RingPtr ctx, std::size_t rows, std::size_t cols);
  static RingMatrix identity(RingPtr ctx, std::size_t n);
  static RingMatrix diagonal(RingPtr ctx, const std::vector<Polynomial>& diag);
  /// Entry (i, j) = f(i, j).
  static RingMatrix generate(RingPtr ctx, std::size_t rows, std::size_t cols,
                             const std::function<Polynomial(std::size_t, std::size_t)>& f);
  /// Column vector times row vector.
  static RingMatrix outer(const RingVector& column, const RingVector& row);

  const RingPtr& ctx() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<Polynomial>& entries() const { return entries_; }
  bool is_zero() const;

  RingVector row(std::size_t i) const;
  RingVector column(std::size_t j) const;
  RingMatrix transpose() const;
  /// Applies f to every entry and reduces.
  RingMatrix map(const std::function<Polynomial(const Polynomial&)>& f) const;
  RingMatrix scaled(const Polynomial& a) const;
  RingMatrix in(RingPtr other) const;
  /// Returns a copy with entry (i, j) replaced.
  RingMatrix with_entry(std::size_t i, std::size_t j, const Polynomial& value) const;

  RingMatrix operator+(const RingMatrix& other) const;
  RingMatrix operator-(const RingMatrix& other) const;
  RingMatrix operator*(const RingMatrix& other) const;
  RingVector operator*(const RingVector& v) const;

  friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  RingPtr ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// Row-vector dot column-vector, reduced.
Polynomial dot(const RingVector& row, const RingVector& column);

RingMatrix commutator(const RingMatrix& a, const RingMatrix& b);
Polynomial matrix_trace(const RingMatrix& a);

/// Coefficient invariants of a 3x3 matrix. `p_a` is the classical
/// expression a11a22 + a11a33 + a22a33 + a21a12 + a31a13 + a32a23; the
/// lambda coefficient of det(lambda I - A) is the principal-minor sum
/// `minor_sum`, which differs from `p_a` in the sign of the off-diagonal
/// products.
struct CharPoly3 {
  Polynomial trace;
  Polynomial p_a;
  Polynomial minor_sum;
  Polynomial det;
};
CharPoly3 charpoly3(const RingMatrix& a);

/// Laplace expansion, n <= 4.
Polynomial det(const RingMatrix& a);

nlohmann::json to_json(const RingMatrix& m);
RingMatrix matrix_from_json(const nlohmann::json& j, RingPtr ctx);
nlohmann::json to_json(const RingVector& v);

}  // namespace projconn
