#include "gorjdt/linalg.hpp"

#include <stdexcept>

namespace gorjdt {

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not match");
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out.at(i, j) = a.field().normalize(out.at(i, j));
  return out;
}

namespace {

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a, std::size_t cols) {
  const std::size_t n = a.size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < n; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = a[rank][c] * a[r][k] - a[r][c] * a[rank][k];
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

std::size_t modular_rank(std::vector<std::vector<std::uint64_t>> a, std::size_t cols,
                         std::uint64_t p) {
  const std::size_t n = a.size();
  std::size_t rank = 0;
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  for (std::size_t c = 0; c < cols && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[rank]);
    std::uint64_t iv = inv(a[rank][c]);
    for (std::size_t r = rank + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      std::uint64_t f = a[r][c] * iv % p;
      for (std::size_t k = c; k < cols; ++k) a[r][k] = (a[r][k] + (p - f) * a[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_of_rows(Field field, std::size_t cols, const std::vector<Vec>& rows) {
  if (rows.empty() || cols == 0) return 0;
  if (field.is_rational()) {
    std::vector<std::vector<mpz_class>> a;
    a.reserve(rows.size());
    for (const auto& row : rows) {
      mpz_class l = 1;
      for (const auto& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
      std::vector<mpz_class> ir(cols);
      for (std::size_t c = 0; c < cols; ++c) ir[c] = row[c].get_num() * (l / row[c].get_den());
      a.push_back(std::move(ir));
    }
    return bareiss_rank(std::move(a), cols);
  }
  const std::uint64_t p = field.characteristic();
  std::vector<std::vector<std::uint64_t>> a;
  a.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<std::uint64_t> ir(cols);
    for (std::size_t c = 0; c < cols; ++c) ir[c] = field.residue(row[c]);
    a.push_back(std::move(ir));
  }
  return modular_rank(std::move(a), cols, p);
}

std::size_t rank(const Matrix& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rank_of_rows(m.field(), m.cols(), rows);
}

bool is_zero(const Vec& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

Echelon row_echelon(Field field, std::size_t cols, const std::vector<Vec>& input) {
  std::vector<Vec> a = input;
  for (auto& row : a)
    for (auto& v : row) v = field.normalize(v);
  Echelon e;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    Coeff iv = field.inv(a[rank][c]);
    for (std::size_t k = c; k < cols; ++k) a[rank][k] = field.mul(a[rank][k], iv);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Coeff f = a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] = field.sub(a[r][k], field.mul(f, a[rank][k]));
    }
    e.pivots.push_back(c);
    ++rank;
  }
  a.resize(rank);
  e.rows = std::move(a);
  return e;
}

Vec reduce(const Field& field, const Echelon& e, Vec v) {
  for (auto& c : v) c = field.normalize(c);
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    const std::size_t c = e.pivots[i];
    if (v[c] == 0) continue;
    Coeff f = v[c];
    for (std::size_t k = c; k < v.size(); ++k) v[k] = field.sub(v[k], field.mul(f, e.rows[i][k]));
  }
  return v;
}

std::vector<Vec> left_kernel(const Matrix& m) {
  // kernel of the transpose, read off the reduced echelon form
  const Matrix t = m.transpose();
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < t.rows(); ++r) rows.push_back(t.row(r));
  const std::size_t n = t.cols();
  Echelon e = row_echelon(m.field(), n, rows);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = m.field().neg(e.rows[i][f]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gorjdt
