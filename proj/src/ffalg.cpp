#include "clusterhall/ffalg.hpp"

#include <algorithm>

#include "clusterhall/error.hpp"
#include "clusterhall/kernels.hpp"

namespace clusterhall {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

const std::vector<std::uint32_t>& supported_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> v;
    for (std::uint32_t p = 2; p <= kernels::kMaxPrime; ++p)
      if (is_prime(p)) v.push_back(p);
    return v;
  }();
  return primes;
}

BigInt gaussian_binomial(int n, int k, const BigInt& q) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(q, n - i) - 1;
    den *= boost::multiprecision::pow(q, i + 1) - 1;
  }
  return num / den;
}

std::string to_string(const Rational& x) {
  if (boost::multiprecision::denominator(x) == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw InvariantViolation("inverse of zero mod " + std::to_string(p));
  std::uint32_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

namespace {

std::uint32_t reduce(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

void check_prime(std::uint32_t p) {
  if (p > kernels::kMaxPrime || !is_prime(p))
    throw InvalidInput("unsupported field size " + std::to_string(p) + " (need a prime <= 64)");
}

}  // namespace

FMatrix::FMatrix(int rows, int cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(static_cast<std::size_t>(rows) * cols, 0) {
  check_prime(p);
  if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimension");
}

FMatrix FMatrix::identity(int n, std::uint32_t p) {
  FMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.data_[m.idx(i, i)] = 1;
  return m;
}

FMatrix FMatrix::from_rows(const std::vector<std::vector<long long>>& rows, std::uint32_t p) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  FMatrix m(r, c, p);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InvalidInput("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.data_[m.idx(i, j)] = reduce(rows[i][j], p);
  }
  return m;
}

void FMatrix::set(int r, int c, long long v) { data_[idx(r, c)] = reduce(v, p_); }

FMatrix FMatrix::transpose() const {
  FMatrix t(cols_, rows_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.data_[t.idx(j, i)] = data_[idx(i, j)];
  return t;
}

FMatrix FMatrix::operator*(const FMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw InvalidInput("matrix product shape/prime mismatch");
  FMatrix r(rows_, o.cols_, p_);
  if (o.cols_ == 0) return r;
  const auto& k = kernels::active();
  for (int i = 0; i < rows_; ++i)
    for (int t = 0; t < cols_; ++t) {
      const std::uint32_t a = data_[idx(i, t)];
      if (a) k.axpy(r.data_.data() + r.idx(i, 0), o.data_.data() + o.idx(t, 0), o.cols_, a, p_);
    }
  return r;
}

FMatrix FMatrix::operator+(const FMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw InvalidInput("matrix sum mismatch");
  FMatrix r(*this);
  if (!data_.empty()) kernels::active().axpy(r.data_.data(), o.data_.data(), data_.size(), 1, p_);
  return r;
}

FMatrix FMatrix::operator-(const FMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw InvalidInput("matrix sum mismatch");
  FMatrix r(*this);
  if (!data_.empty())
    kernels::active().axpy(r.data_.data(), o.data_.data(), data_.size(), p_ - 1, p_);
  return r;
}

FMatrix FMatrix::scaled(std::uint32_t c) const {
  FMatrix r(*this);
  if (!data_.empty()) kernels::active().scale(r.data_.data(), data_.size(), c % p_, p_);
  return r;
}

bool FMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

FMatrix FMatrix::columns(int c0, int n) const {
  FMatrix r(rows_, n, p_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < n; ++j) r.data_[r.idx(i, j)] = data_[idx(i, c0 + j)];
  return r;
}

FMatrix FMatrix::row_block(int r0, int n) const {
  FMatrix r(n, cols_, p_);
  std::copy(data_.begin() + idx(r0, 0), data_.begin() + idx(r0 + n, 0), r.data_.begin());
  return r;
}

FMatrix FMatrix::select_columns(const std::vector<int>& cols) const {
  FMatrix r(rows_, static_cast<int>(cols.size()), p_);
  for (int i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r.data_[r.idx(i, static_cast<int>(j))] = data_[idx(i, cols[j])];
  return r;
}

FMatrix FMatrix::select_rows(const std::vector<int>& rows) const {
  FMatrix r(static_cast<int>(rows.size()), cols_, p_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols_; ++j) r.data_[r.idx(static_cast<int>(i), j)] = data_[idx(rows[i], j)];
  return r;
}

void FMatrix::copy_block(const FMatrix& src, int r0, int c0) {
  if (src.p_ != p_ || r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_)
    throw InvalidInput("block does not fit");
  for (int i = 0; i < src.rows_; ++i)
    for (int j = 0; j < src.cols_; ++j) data_[idx(r0 + i, c0 + j)] = src.data_[src.idx(i, j)];
}

FMatrix hstack(const FMatrix& a, const FMatrix& b) {
  if (a.rows() != b.rows() || a.prime() != b.prime()) throw InvalidInput("hstack mismatch");
  FMatrix r(a.rows(), a.cols() + b.cols(), a.prime());
  r.copy_block(a, 0, 0);
  r.copy_block(b, 0, a.cols());
  return r;
}

FMatrix vstack(const FMatrix& a, const FMatrix& b) {
  if (a.cols() != b.cols() || a.prime() != b.prime()) throw InvalidInput("vstack mismatch");
  FMatrix r(a.rows() + b.rows(), a.cols(), a.prime());
  r.copy_block(a, 0, 0);
  r.copy_block(b, a.rows(), 0);
  return r;
}

Echelon rref(FMatrix m) {
  const auto& k = kernels::active();
  const std::uint32_t p = m.prime();
  Echelon out;
  int row = 0;
  for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m(r, c)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) {
      auto a = m.row(piv), b = m.row(row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const std::size_t len = static_cast<std::size_t>(m.cols() - c);
    std::uint32_t* prow = m.row(row).data() + c;
    k.scale(prow, len, inv_mod(m(row, c), p), p);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const std::uint32_t f = m(r, c);
      if (f) k.axpy(m.row(r).data() + c, prow, len, p - f, p);
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

int rank(const FMatrix& m) { return rref(m).rank(); }

int rank_reference(const FMatrix& m) {
  const std::uint32_t p = m.prime();
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  int rk = 0;
  for (int c = m.cols() - 1; c >= 0 && rk < m.rows(); --c) {
    int piv = -1;
    for (int r = rk; r < m.rows(); ++r)
      if (a[r][c] % p) piv = r;
    if (piv < 0) continue;
    std::swap(a[piv], a[rk]);
    const std::uint64_t inv = inv_mod(static_cast<std::uint32_t>(a[rk][c] % p), p);
    for (int r = rk + 1; r < m.rows(); ++r) {
      const std::uint64_t f = a[r][c] % p * inv % p;
      for (int j = 0; j < m.cols(); ++j) a[r][j] = (a[r][j] + (p - f) * (a[rk][j] % p)) % p;
    }
    ++rk;
  }
  return rk;
}

FMatrix solve_kernel(const FMatrix& m) {
  const Echelon e = rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : e.pivots) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const std::uint32_t p = m.prime();
  FMatrix basis(m.cols(), static_cast<int>(free_cols.size()), p);
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    const int f = free_cols[t];
    basis.set(f, static_cast<int>(t), 1);
    for (int r = 0; r < e.rank(); ++r) {
      const std::uint32_t v = e.reduced(r, f);
      if (v) basis.set(e.pivots[r], static_cast<int>(t), p - v);
    }
  }
  return basis;
}

FMatrix left_kernel(const FMatrix& m) { return solve_kernel(m.transpose()).transpose(); }

FMatrix column_basis(const FMatrix& m) { return m.select_columns(rref(m).pivots); }

FMatrix complement_in(const FMatrix& sub, const FMatrix& ambient) {
  const Echelon e = rref(hstack(sub, ambient));
  std::vector<int> extra;
  int sub_pivots = 0;
  for (int c : e.pivots) {
    if (c < sub.cols())
      ++sub_pivots;
    else
      extra.push_back(c - sub.cols());
  }
  if (sub_pivots != sub.cols()) throw InvariantViolation("complement_in: dependent sub-basis");
  return ambient.select_columns(extra);
}

FMatrix solve_left(const FMatrix& a, const FMatrix& b) {
  const Echelon e = rref(hstack(a, b));
  const int k = a.cols();
  for (int r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] >= k) throw InvariantViolation("solve_left: right-hand side outside the image");
    if (e.pivots[r] != r) throw InvariantViolation("solve_left: dependent columns");
  }
  if (e.rank() < k) throw InvariantViolation("solve_left: dependent columns");
  FMatrix x(k, b.cols(), a.prime());
  for (int r = 0; r < k; ++r)
    for (int j = 0; j < b.cols(); ++j) x.set(r, j, e.reduced(r, k + j));
  return x;
}

SubspaceStream::SubspaceStream(int ambient, int sub_dim, std::uint32_t p)
    : ambient_(ambient), dim_(sub_dim), p_(p) {
  if (sub_dim < 0 || sub_dim > ambient) throw InvalidInput("subspace dimension out of range");
}

BigInt SubspaceStream::total() const { return gaussian_binomial(ambient_, dim_, BigInt(p_)); }

void SubspaceStream::reset_free() {
  free_.clear();
  std::vector<char> is_pivot(ambient_, 0);
  for (int c : pivots_) is_pivot[c] = 1;
  for (int r = 0; r < dim_; ++r)
    for (int c = pivots_[r] + 1; c < ambient_; ++c)
      if (!is_pivot[c]) free_.emplace_back(r, c);
  digits_.assign(free_.size(), 0);
}

bool SubspaceStream::advance_pivots() {
  int i = dim_ - 1;
  while (i >= 0 && pivots_[i] == ambient_ - dim_ + i) --i;
  if (i < 0) return false;
  ++pivots_[i];
  for (int j = i + 1; j < dim_; ++j) pivots_[j] = pivots_[j - 1] + 1;
  return true;
}

bool SubspaceStream::next(FMatrix& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    pivots_.resize(dim_);
    for (int i = 0; i < dim_; ++i) pivots_[i] = i;
    reset_free();
  } else {
    int t = static_cast<int>(digits_.size()) - 1;
    while (t >= 0 && digits_[t] == p_ - 1) digits_[t--] = 0;
    if (t >= 0) {
      ++digits_[t];
    } else {
      if (!advance_pivots()) {
        done_ = true;
        return false;
      }
      reset_free();
    }
  }
  out = FMatrix(dim_, ambient_, p_);
  for (int r = 0; r < dim_; ++r) out.set(r, pivots_[r], 1);
  for (std::size_t t = 0; t < free_.size(); ++t) out.set(free_[t].first, free_[t].second, digits_[t]);
  return true;
}

SubspaceStream subspaces(int ambient, int sub_dim, std::uint32_t p, std::uint64_t budget) {
  SubspaceStream s(ambient, sub_dim, p);
  const BigInt total = s.total();
  if (total > budget)
    throw BudgetExceeded("subspace enumeration of [" + std::to_string(ambient) + " choose " +
                         std::to_string(sub_dim) + "]_" + std::to_string(p) + " = " + total.str() +
                         " exceeds budget " + std::to_string(budget));
  return s;
}

}  // namespace clusterhall
