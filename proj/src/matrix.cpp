#include "projconn/matrix.hpp"

#include "projconn/error.hpp"

namespace projconn {

namespace {
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* op) {
  if (a != b) throw InputError(std::string(op) + ": operands live in different rings");
}
}  // namespace

RingVector::RingVector(RingPtr ctx, std::vector<Polynomial> entries)
    : ctx_(std::move(ctx)), entries_(std::move(entries)) {
  for (auto& e : entries_) e = ctx_->reduce(e);
}

RingVector RingVector::zero(RingPtr ctx, std::size_t n) {
  return RingVector(std::move(ctx), std::vector<Polynomial>(n));
}

RingVector RingVector::unit(RingPtr ctx, std::size_t n, std::size_t i) {
  std::vector<Polynomial> e(n);
  e.at(i) = 1;
  return RingVector(std::move(ctx), std::move(e));
}

bool RingVector::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

RingVector RingVector::operator+(const RingVector& other) const {
  require_same_ring(ctx_, other.ctx_, "vector +");
  if (size() != other.size()) throw InputError("vector +: length mismatch");
  std::vector<Polynomial> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[i] + other.entries_[i];
  return RingVector(ctx_, std::move(out));
}

RingVector RingVector::operator-(const RingVector& other) const {
  require_same_ring(ctx_, other.ctx_, "vector -");
  if (size() != other.size()) throw InputError("vector -: length mismatch");
  std::vector<Polynomial> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[i] - other.entries_[i];
  return RingVector(ctx_, std::move(out));
}

RingVector RingVector::scaled(const Polynomial& a) const {
  std::vector<Polynomial> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = a * entries_[i];
  return RingVector(ctx_, std::move(out));
}

RingVector RingVector::in(RingPtr other) const { return RingVector(std::move(other), entries_); }

RingMatrix::RingMatrix(RingPtr ctx, std::size_t rows, std::size_t cols,
                       std::vector<Polynomial> entries)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw InputError("matrix dimensions must be positive");
  if (entries_.size() != rows_ * cols_) throw InputError("matrix entry count mismatch");
  for (auto& e : entries_) e = ctx_->reduce(e);
}

RingMatrix RingMatrix::zero(RingPtr ctx, std::size_t rows, std::size_t cols) {
  return RingMatrix(std::move(ctx), rows, cols, std::vector<Polynomial>(rows * cols));
}

RingMatrix RingMatrix::identity(RingPtr ctx, std::size_t n) {
  std::vector<Polynomial> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return RingMatrix(std::move(ctx), n, n, std::move(e));
}

RingMatrix RingMatrix::diagonal(RingPtr ctx, const std::vector<Polynomial>& diag) {
  std::size_t n = diag.size();
  std::vector<Polynomial> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
  return RingMatrix(std::move(ctx), n, n, std::move(e));
}

RingMatrix RingMatrix::generate(RingPtr ctx, std::size_t rows, std::size_t cols,
                                const std::function<Polynomial(std::size_t, std::size_t)>& f) {
  std::vector<Polynomial> e;
  e.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) e.push_back(f(i, j));
  }
  return RingMatrix(std::move(ctx), rows, cols, std::move(e));
}

RingMatrix RingMatrix::outer(const RingVector& column, const RingVector& row) {
  require_same_ring(column.ctx(), row.ctx(), "outer");
  return generate(column.ctx(), column.size(), row.size(),
                  [&](std::size_t i, std::size_t j) { return column[i] * row[j]; });
}

bool RingMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

RingVector RingMatrix::row(std::size_t i) const {
  std::vector<Polynomial> r(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                            entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  return RingVector(ctx_, std::move(r));
}

RingVector RingMatrix::column(std::size_t j) const {
  std::vector<Polynomial> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return RingVector(ctx_, std::move(c));
}

RingMatrix RingMatrix::transpose() const {
  return generate(ctx_, cols_, rows_, [&](std::size_t i, std::size_t j) { return (*this)(j, i); });
}

RingMatrix RingMatrix::map(const std::function<Polynomial(const Polynomial&)>& f) const {
  std::vector<Polynomial> e;
  e.reserve(entries_.size());
  for (const auto& x : entries_) e.push_back(f(x));
  return RingMatrix(ctx_, rows_, cols_, std::move(e));
}

RingMatrix RingMatrix::scaled(const Polynomial& a) const {
  return map([&](const Polynomial& x) { return a * x; });
}

RingMatrix RingMatrix::in(RingPtr other) const {
  return RingMatrix(std::move(other), rows_, cols_, entries_);
}

RingMatrix RingMatrix::with_entry(std::size_t i, std::size_t j, const Polynomial& value) const {
  auto e = entries_;
  e.at(i * cols_ + j) = value;
  return RingMatrix(ctx_, rows_, cols_, std::move(e));
}

RingMatrix RingMatrix::operator+(const RingMatrix& other) const {
  require_same_ring(ctx_, other.ctx_, "matrix +");
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix +: shape mismatch");
  auto e = entries_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.entries_[i];
  return RingMatrix(ctx_, rows_, cols_, std::move(e));
}

RingMatrix RingMatrix::operator-(const RingMatrix& other) const {
  require_same_ring(ctx_, other.ctx_, "matrix -");
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix -: shape mismatch");
  auto e = entries_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.entries_[i];
  return RingMatrix(ctx_, rows_, cols_, std::move(e));
}

RingMatrix RingMatrix::operator*(const RingMatrix& other) const {
  require_same_ring(ctx_, other.ctx_, "matrix *");
  if (cols_ != other.rows_) throw InputError("matrix *: shape mismatch");
  return generate(ctx_, rows_, other.cols_, [&](std::size_t i, std::size_t j) {
    Polynomial s;
    for (std::size_t m = 0; m < cols_; ++m) s += (*this)(i, m) * other(m, j);
    return s;
  });
}

RingVector RingMatrix::operator*(const RingVector& v) const {
  require_same_ring(ctx_, v.ctx(), "matrix * vector");
  if (cols_ != v.size()) throw InputError("matrix * vector: shape mismatch");
  std::vector<Polynomial> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t m = 0; m < cols_; ++m) out[i] += (*this)(i, m) * v[m];
  }
  return RingVector(ctx_, std::move(out));
}

Polynomial dot(const RingVector& row, const RingVector& column) {
  require_same_ring(row.ctx(), column.ctx(), "dot");
  if (row.size() != column.size()) throw InputError("dot: length mismatch");
  Polynomial s;
  for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * column[i];
  return row.ctx()->reduce(s);
}

RingMatrix commutator(const RingMatrix& a, const RingMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw InputError("commutator: operands must be square of the same size");
  }
  require_same_ring(a.ctx(), b.ctx(), "commutator");
  return a * b - b * a;
}

Polynomial matrix_trace(const RingMatrix& a) {
  if (!a.is_square()) throw InputError("trace: matrix must be square");
  Polynomial s;
  for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
  return a.ctx()->reduce(s);
}

CharPoly3 charpoly3(const RingMatrix& a) {
  if (a.rows() != 3 || a.cols() != 3) throw InputError("charpoly3: matrix must be 3x3");
  const auto& r = *a.ctx();
  auto e = [&](std::size_t i, std::size_t j) { return a(i - 1, j - 1); };
  Polynomial diag = e(1, 1) * e(2, 2) + e(1, 1) * e(3, 3) + e(2, 2) * e(3, 3);
  Polynomial off = e(2, 1) * e(1, 2) + e(3, 1) * e(1, 3) + e(3, 2) * e(2, 3);
  return CharPoly3{matrix_trace(a), r.reduce(diag + off), r.reduce(diag - off), det(a)};
}

namespace {
Polynomial det_rec(const RingMatrix& a, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
  if (rows.size() == 1) return a(rows[0], cols[0]);
  Polynomial sum;
  std::size_t r0 = rows.front();
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Polynomial& entry = a(r0, cols[c]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_cols = cols;
    sub_cols.erase(sub_cols.begin() + static_cast<std::ptrdiff_t>(c));
    Polynomial minor = det_rec(a, sub_rows, sub_cols);
    if (c % 2 == 0) sum += entry * minor;
    else sum -= entry * minor;
  }
  return sum;
}
}  // namespace

Polynomial det(const RingMatrix& a) {
  if (!a.is_square()) throw InputError("det: matrix must be square");
  if (a.rows() > 4) {
    throw UnsupportedSizeError("det: only sizes up to 4x4 are supported, got " +
                               std::to_string(a.rows()));
  }
  std::vector<std::size_t> idx(a.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return a.ctx()->reduce(det_rec(a, idx, idx));
}

nlohmann::json to_json(const RingMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.ctx()->format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

RingMatrix matrix_from_json(const nlohmann::json& j, RingPtr ctx) {
  try {
    auto rows = j.at("rows").get<std::size_t>();
    auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows) throw InputError("matrix json: row count mismatch");
    std::vector<Polynomial> e;
    for (const auto& row : entries) {
      if (row.size() != cols) throw InputError("matrix json: column count mismatch");
      for (const auto& cell : row) e.push_back(ctx->parse(cell.get<std::string>()));
    }
    return RingMatrix(std::move(ctx), rows, cols, std::move(e));
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("matrix json: ") + ex.what());
  }
}

nlohmann::json to_json(const RingVector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : v.entries()) arr.push_back(v.ctx()->format(e));
  return arr;
}

}  // namespace projconn
