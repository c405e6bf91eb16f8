#include "taured/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace taured {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long>>& rows, Field field) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols,
                         Field field) {
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void Matrix::set_row(std::size_t r, const std::vector<Scalar>& values) {
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = values[c];
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw std::invalid_argument("stacked: column mismatch");
  Matrix m(rows_ + below.rows_, cols_, field_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return m;
}

Matrix Matrix::beside(const Matrix& right) const {
  if (rows_ != right.rows_) throw std::invalid_argument("beside: row mismatch");
  Matrix m(rows_, cols_ + right.cols_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) m(r, cols_ + c) = right(r, c);
  }
  return m;
}

Matrix Matrix::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                         std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_)
    throw std::out_of_range("submatrix out of range");
  Matrix m(nrows, ncols, field_);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) m(r, c) = (*this)(row0 + r, col0 + c);
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& which) const {
  Matrix m(which.size(), cols_, field_);
  for (std::size_t i = 0; i < which.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(which[i], c);
  return m;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& which) const {
  Matrix m(rows_, which.size(), field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < which.size(); ++i) m(r, i) = (*this)(r, which[i]);
  return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("product shape mismatch");
  Matrix m(lhs.rows_, rhs.cols_, lhs.field_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Scalar& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (!rhs(k, j).is_zero()) m(i, j) += a * rhs(k, j);
    }
  return m;
}

Matrix operator*(const Scalar& s, Matrix m) {
  for (auto& x : m.data_) x *= s;
  return m;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
  }
  os << "]";
  return os.str();
}

std::vector<Scalar> row_times(const std::vector<Scalar>& v, const Matrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("row_times: shape mismatch");
  std::vector<Scalar> out(m.cols(), m.field().zero());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(k, j).is_zero()) out[j] += v[k] * m(k, j);
  }
  return out;
}

namespace {

using IntRow = std::vector<mpz_class>;

void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row)
    if (x != 0) g = gcd(g, x);
  if (g > 1)
    for (auto& x : row)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

Echelon echelon_rational(const Matrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<IntRow> rows(nr, IntRow(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    mpz_class den = 1;
    for (std::size_t c = 0; c < nc; ++c) {
      const mpq_class q = m(r, c).to_rational();
      if (q != 0) den = lcm(den, q.get_den());
    }
    for (std::size_t c = 0; c < nc; ++c) {
      const mpq_class q = m(r, c).to_rational();
      rows[r][c] = q.get_num() * (den / q.get_den());
    }
    make_primitive(rows[r]);
  }

  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < nc && next < nr; ++c) {
    std::size_t piv = nr;
    for (std::size_t r = next; r < nr; ++r)
      if (rows[r][c] != 0 && (piv == nr || abs(rows[r][c]) < abs(rows[piv][c]))) piv = r;
    if (piv == nr) continue;
    std::swap(rows[next], rows[piv]);
    const IntRow& p = rows[next];
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == next || rows[r][c] == 0) continue;
      const mpz_class a = p[c], b = rows[r][c];
      for (std::size_t k = 0; k < nc; ++k) rows[r][k] = a * rows[r][k] - b * p[k];
      make_primitive(rows[r]);
    }
    pivots.push_back(c);
    ++next;
  }

  Field field = m.field();
  Matrix basis(pivots.size(), nc, field);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const mpz_class& lead = rows[i][pivots[i]];
    for (std::size_t k = 0; k < nc; ++k)
      if (rows[i][k] != 0) {
        mpq_class ratio(rows[i][k], lead);
        ratio.canonicalize();
        basis(i, k) = field.from_rational(ratio);
      }
  }
  return {std::move(basis), std::move(pivots)};
}

Echelon echelon_generic(const Matrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < nc && next < nr; ++c) {
    std::size_t piv = nr;
    for (std::size_t r = next; r < nr; ++r)
      if (!a(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv == nr) continue;
    if (piv != next)
      for (std::size_t k = 0; k < nc; ++k) std::swap(a(piv, k), a(next, k));
    const Scalar inv = a(next, c).inverse();
    for (std::size_t k = 0; k < nc; ++k) a(next, k) *= inv;
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == next || a(r, c).is_zero()) continue;
      const Scalar f = a(r, c);
      for (std::size_t k = 0; k < nc; ++k)
        if (!a(next, k).is_zero()) a(r, k) -= f * a(next, k);
    }
    pivots.push_back(c);
    ++next;
  }
  return {a.submatrix(0, 0, pivots.size(), nc), std::move(pivots)};
}

}  // namespace

Echelon echelon(const Matrix& m) {
  return m.field().is_rational() ? echelon_rational(m) : echelon_generic(m);
}

RankAndBasis rank_and_rowbasis(const Matrix& m) {
  Echelon e = echelon(m);
  return {e.rank(), std::move(e.basis)};
}

std::size_t rank(const Matrix& m) { return echelon(m).rank(); }

Matrix nullspace(const Matrix& m) {
  const Echelon e = echelon(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  const Field field = m.field();
  Matrix out(nc - e.rank(), nc, field);
  std::size_t row = 0;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    out(row, f) = field.one();
    for (std::size_t i = 0; i < e.rank(); ++i) out(row, e.pivots[i]) = -e.basis(i, f);
    ++row;
  }
  return out;
}

Matrix left_nullspace(const Matrix& m) { return nullspace(m.transpose()); }

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  const Field field = m.field();
  Matrix rhs(m.rows(), 1, field);
  for (std::size_t r = 0; r < m.rows(); ++r) rhs(r, 0) = b[r];
  const Echelon e = echelon(m.beside(rhs));
  const std::size_t nc = m.cols();
  std::vector<Scalar> x(nc, field.zero());
  for (std::size_t i = 0; i < e.rank(); ++i) {
    if (e.pivots[i] == nc) return std::nullopt;
    x[e.pivots[i]] = e.basis(i, nc);
  }
  return x;
}

std::optional<std::vector<Scalar>> row_coordinates(const Matrix& rows,
                                                   const std::vector<Scalar>& target) {
  return solve(rows.transpose(), target);
}

bool same_row_space(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) return false;
  const std::size_t ra = rank(a), rb = rank(b);
  return ra == rb && rank(a.stacked(b)) == ra;
}

}  // namespace taured
