#include "strat/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "strat/error.hpp"

namespace strat {

Scalar parseScalar(std::string_view text) {
  std::string s(text);
  auto bad = [&] {
    return Error(ErrorCode::InvalidScalar, "invalid scalar \"" + s + "\"");
  };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  auto validInt = [](const std::string &t) {
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!validInt(num) || !validInt(den)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw bad();
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string formatScalar(const Scalar &s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols)
    throw Error(ErrorCode::DimensionMismatch, "matrix data size mismatch");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::fromRows(const std::vector<std::vector<Scalar>> &rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::fromColumns(const std::vector<Vector> &cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::setBlock(std::size_t r0, std::size_t c0, const Matrix &b) {
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::selectColumns(const std::vector<std::size_t> &idx) const {
  Matrix m(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < idx.size(); ++j) m(r, j) = (*this)(r, idx[j]);
  return m;
}

Matrix Matrix::selectRows(const std::vector<std::size_t> &idx) const {
  Matrix m(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(idx[i], c);
  return m;
}

bool Matrix::isZero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar &s) { return sgn(s) == 0; });
}

bool Matrix::isIdentity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix &o) const {
  if (cols_ != o.rows_)
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar &a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar &b = o(k, j);
        if (sgn(b) != 0) p(i, j) += a * b;
      }
    }
  return p;
}

Vector Matrix::operator*(const Vector &v) const {
  if (cols_ != v.size())
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (sgn((*this)(i, k)) != 0 && sgn(v[k]) != 0) out[i] += (*this)(i, k) * v[k];
  return out;
}

Matrix Matrix::operator+(const Matrix &o) const {
  Matrix s = *this;
  s += o;
  return s;
}

Matrix &Matrix::operator+=(const Matrix &o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix Matrix::operator-(const Matrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  Matrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
  return s;
}

Matrix Matrix::operator*(const Scalar &s) const {
  Matrix m = *this;
  for (auto &x : m.data_) x *= s;
  return m;
}

Matrix hstack(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "hstack row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.setBlock(0, 0, a);
  m.setBlock(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "vstack column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.setBlock(0, 0, a);
  m.setBlock(a.rows(), 0, b);
  return m;
}

Matrix blockDiagonal(const std::vector<Matrix> &blocks) {
  std::size_t r = 0, c = 0;
  for (const auto &b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(r, c);
  r = c = 0;
  for (const auto &b : blocks) {
    m.setBlock(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

// ---------------------------------------------------------- elimination

Echelon rowReduce(Matrix m) {
  Echelon e;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t r = pr; r < rows; ++r)
      if (sgn(m(r, c)) != 0) {
        sel = r;
        break;
      }
    if (sel == rows) continue;
    if (sel != pr)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(sel, k), m(pr, k));
    Scalar inv = 1 / m(pr, c);
    for (std::size_t k = c; k < cols; ++k)
      if (sgn(m(pr, k)) != 0) m(pr, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || sgn(m(r, c)) == 0) continue;
      Scalar f = m(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (sgn(m(pr, k)) != 0) m(r, k) -= f * m(pr, k);
    }
    e.pivots.push_back(c);
    ++pr;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix &m) { return rowReduce(m).pivots.size(); }

std::vector<Vector> kernelBasis(const Matrix &m) {
  Echelon e = rowReduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> isPivot(cols, false);
  for (auto p : e.pivots) isPivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (isPivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> imageBasis(const Matrix &m) {
  Echelon e = rowReduce(m);
  std::vector<Vector> basis;
  for (auto p : e.pivots) basis.push_back(m.column(p));
  return basis;
}

Matrix kernelMatrix(const Matrix &m) { return Matrix::fromColumns(kernelBasis(m), m.cols()); }

Matrix imageMatrix(const Matrix &m) {
  Echelon e = rowReduce(m);
  return m.selectColumns(e.pivots);
}

std::optional<Vector> solve(const Matrix &m, const Vector &b) {
  if (b.size() != m.rows())
    throw Error(ErrorCode::DimensionMismatch, "solve: right-hand side length mismatch");
  auto x = solve(m, Matrix::fromColumns({b}, b.size()));
  if (!x) return std::nullopt;
  return x->column(0);
}

std::optional<Matrix> solve(const Matrix &m, const Matrix &b) {
  if (b.rows() != m.rows())
    throw Error(ErrorCode::DimensionMismatch, "solve: right-hand side rows mismatch");
  const std::size_t n = m.cols();
  Echelon e = rowReduce(hstack(m, b));
  Matrix x(n, b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.reduced(i, n + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix &m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.rows()));
}

SplitBasis::SplitBasis(const Matrix &spanning, std::size_t n) : n_(n) {
  Matrix span = spanning.cols() == 0 ? Matrix(n, 0) : spanning;
  if (span.rows() != n)
    throw Error(ErrorCode::DimensionMismatch, "SplitBasis: ambient dimension mismatch");
  Matrix full = hstack(span, Matrix::identity(n));
  Echelon e = rowReduce(full);
  std::vector<std::size_t> subCols, compCols;
  for (auto p : e.pivots) (p < span.cols() ? subCols : compCols).push_back(p);
  sub_ = full.selectColumns(subCols);
  complement_ = full.selectColumns(compCols);
  inv_ = *inverse(hstack(sub_, complement_));
}

Matrix SplitBasis::subCoords() const { return inv_.block(0, 0, subDim(), n_); }

Matrix SplitBasis::quotCoords() const { return inv_.block(subDim(), 0, quotDim(), n_); }

Matrix intersectColumnSpaces(const Matrix &a, const Matrix &b) {
  if (a.cols() == 0 || b.cols() == 0) return Matrix(a.rows(), 0);
  Matrix k = kernelMatrix(hstack(a, b * Scalar(-1)));
  Matrix coeffs = k.block(0, 0, a.cols(), k.cols());
  return imageMatrix(a * coeffs);
}

// ------------------------------------------------------------ polynomials

std::vector<Scalar> characteristicPolynomial(const Matrix &m) {
  const std::size_t n = m.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    Matrix amk = m * mk;
    Scalar tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    c[n - k] = -tr / Scalar(static_cast<long>(k));
  }
  return c;
}

namespace {

std::optional<std::vector<std::uint64_t>> divisorsOf(const mpz_class &value) {
  mpz_class v = abs(value);
  if (v == 0 || v > mpz_class("1000000000000")) return std::nullopt;
  std::uint64_t x = v.get_ui();
  std::vector<std::pair<std::uint64_t, int>> factors;
  for (std::uint64_t p = 2; p * p <= x; ++p) {
    int e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (x > 1) factors.emplace_back(x, 1);
  std::vector<std::uint64_t> divs{1};
  for (auto [p, e] : factors) {
    std::size_t sz = divs.size();
    std::uint64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::optional<std::vector<Scalar>> rationalRoots(const std::vector<Scalar> &poly) {
  std::vector<mpz_class> ic;
  mpz_class l = 1;
  for (const auto &c : poly) l = lcm(l, c.get_den());
  for (const auto &c : poly) ic.push_back(mpz_class(c * l));
  while (!ic.empty() && ic.back() == 0) ic.pop_back();
  std::vector<Scalar> roots;
  if (ic.size() <= 1) return roots;
  std::size_t low = 0;
  while (ic[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  std::vector<mpz_class> q(ic.begin() + static_cast<std::ptrdiff_t>(low), ic.end());
  if (q.size() <= 1) return roots;
  auto pd = divisorsOf(q.front());
  auto qd = divisorsOf(q.back());
  if (!pd || !qd) return std::nullopt;
  std::vector<Scalar> cands;
  for (auto p : *pd)
    for (auto d : *qd)
      for (int s : {1, -1}) {
        Scalar r(mpz_class(static_cast<unsigned long>(p)) * s,
                 mpz_class(static_cast<unsigned long>(d)));
        r.canonicalize();
        cands.push_back(r);
      }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (const auto &r : cands) {
    Scalar acc = 0;
    for (std::size_t i = q.size(); i-- > 0;) acc = acc * r + Scalar(q[i]);
    if (acc == 0) roots.push_back(r);
  }
  return roots;
}

}  // namespace strat
