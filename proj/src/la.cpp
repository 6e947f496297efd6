#include "feq/la.hpp"

#include <algorithm>
#include <sstream>

namespace feq {

MatFF::MatFF(Field f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), e_(rows * cols, field_.zero()) {}

MatFF::MatFF(Field f, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(f)), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_) raise(errc::dimension_mismatch, "entry count does not match shape");
  for (const auto& x : e_)
    if (!x.valid() || !(x.field() == field_)) raise(errc::field_mismatch, "matrix entry field mismatch");
}

MatFF MatFF::identity(const Field& f, std::size_t n) {
  MatFF I(f, n, n);
  for (std::size_t i = 0; i < n; ++i) I.set(i, i, f.one());
  return I;
}

MatFF MatFF::from_ints(const Field& f, const std::vector<std::vector<int>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  MatFF A(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) raise(errc::dimension_mismatch, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) A.set(i, j, f.from_int(rows[i][j]));
  }
  return A;
}

void MatFF::set(std::size_t i, std::size_t j, Elem v) {
  if (!(v.field() == field_)) raise(errc::field_mismatch, "matrix entry field mismatch");
  e_[i * cols_ + j] = std::move(v);
}

MatFF MatFF::transpose() const {
  MatFF T(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) T.set(j, i, at(i, j));
  return T;
}

MatFF MatFF::scalar_mul(const Elem& c) const {
  MatFF R = *this;
  for (auto& x : R.e_) x = x * c;
  return R;
}

MatFF operator+(const MatFF& A, const MatFF& B) {
  if (!(A.field_ == B.field_)) raise(errc::field_mismatch, "matrix field mismatch");
  if (A.rows_ != B.rows_ || A.cols_ != B.cols_) raise(errc::dimension_mismatch, "shape mismatch in add");
  MatFF R = A;
  for (std::size_t i = 0; i < R.e_.size(); ++i) R.e_[i] = R.e_[i] + B.e_[i];
  return R;
}

MatFF operator-(const MatFF& A, const MatFF& B) {
  if (!(A.field_ == B.field_)) raise(errc::field_mismatch, "matrix field mismatch");
  if (A.rows_ != B.rows_ || A.cols_ != B.cols_) raise(errc::dimension_mismatch, "shape mismatch in sub");
  MatFF R = A;
  for (std::size_t i = 0; i < R.e_.size(); ++i) R.e_[i] = R.e_[i] - B.e_[i];
  return R;
}

MatFF operator*(const MatFF& A, const MatFF& B) {
  if (!(A.field_ == B.field_)) raise(errc::field_mismatch, "matrix field mismatch");
  if (A.cols_ != B.rows_) raise(errc::dimension_mismatch, "inner dimensions disagree");
  MatFF R(A.field_, A.rows_, B.cols_);
  for (std::size_t i = 0; i < A.rows_; ++i)
    for (std::size_t k = 0; k < A.cols_; ++k) {
      const Elem& aik = A.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < B.cols_; ++j) R.set(i, j, R.at(i, j) + aik * B.at(k, j));
    }
  return R;
}

bool operator==(const MatFF& A, const MatFF& B) {
  return A.field_ == B.field_ && A.rows_ == B.rows_ && A.cols_ == B.cols_ && A.e_ == B.e_;
}

bool MatFF::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Elem& x) { return x.is_zero(); });
}

std::string MatFF::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ";";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << at(i, j).str();
    }
  }
  return os.str();
}

MatFF MatFF::parse(const Field& f, std::string_view text) {
  std::vector<std::vector<Elem>> rows;
  std::size_t pos = 0;
  std::string s(text);
  while (pos <= s.size()) {
    std::size_t semi = s.find(';', pos);
    std::string row = s.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    rows.emplace_back();
    std::size_t rp = 0;
    while (rp <= row.size()) {
      std::size_t comma = row.find(',', rp);
      std::string entry = row.substr(rp, comma == std::string::npos ? std::string::npos : comma - rp);
      rows.back().push_back(f.parse(entry));
      if (comma == std::string::npos) break;
      rp = comma + 1;
    }
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  std::size_t c = rows[0].size();
  std::vector<Elem> entries;
  for (auto& r : rows) {
    if (r.size() != c) raise(errc::dimension_mismatch, "ragged matrix text");
    for (auto& e : r) entries.push_back(std::move(e));
  }
  return MatFF(f, rows.size(), c, std::move(entries));
}

// --- elimination ---------------------------------------------------------------

namespace {

struct Echelon {
  MatFF R;
  std::vector<std::size_t> pivot_cols;
};

Echelon rref_impl(const MatFF& A) {
  MatFF R = A;
  const Field& f = A.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < A.cols() && row < A.rows(); ++col) {
    std::size_t sel = row;
    while (sel < A.rows() && R.at(sel, col).is_zero()) ++sel;
    if (sel == A.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < A.cols(); ++j) {
        Elem t = R.at(row, j);
        R.set(row, j, R.at(sel, j));
        R.set(sel, j, t);
      }
    Elem inv = R.at(row, col).inv();
    for (std::size_t j = col; j < A.cols(); ++j) R.set(row, j, R.at(row, j) * inv);
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (i == row) continue;
      Elem c = R.at(i, col);
      if (c.is_zero()) continue;
      for (std::size_t j = col; j < A.cols(); ++j) R.set(i, j, R.at(i, j) - c * R.at(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  (void)f;
  return {std::move(R), std::move(pivots)};
}

}  // namespace

MatFF rref(const MatFF& A) { return rref_impl(A).R; }

std::size_t rank(const MatFF& A) { return rref_impl(A).pivot_cols.size(); }

KernelBasis kernel(const MatFF& A) {
  Echelon e = rref_impl(A);
  const Field& f = A.field();
  KernelBasis kb;
  kb.ambient = A.cols();
  std::vector<long> pivot_row_of_col(A.cols(), -1);
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) pivot_row_of_col[e.pivot_cols[r]] = static_cast<long>(r);
  for (std::size_t j = 0; j < A.cols(); ++j) {
    if (pivot_row_of_col[j] >= 0) continue;
    std::vector<Elem> v(A.cols(), f.zero());
    v[j] = f.one();
    for (std::size_t c = 0; c < A.cols(); ++c) {
      long pr = pivot_row_of_col[c];
      if (pr >= 0) v[c] = -e.R.at(static_cast<std::size_t>(pr), j);
    }
    kb.vectors.push_back(std::move(v));
  }
  return kb;
}

std::optional<std::vector<Elem>> solve(const MatFF& A, const std::vector<Elem>& b) {
  if (b.size() != A.rows()) raise(errc::dimension_mismatch, "rhs length mismatch");
  MatFF aug(A.field(), A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug.set(i, j, A.at(i, j));
    aug.set(i, A.cols(), b[i]);
  }
  Echelon e = rref_impl(aug);
  for (std::size_t c : e.pivot_cols)
    if (c == A.cols()) return std::nullopt;  // inconsistent
  std::vector<Elem> x(A.cols(), A.field().zero());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.R.at(r, A.cols());
  return x;
}

std::vector<Elem> mat_apply(const MatFF& A, const std::vector<Elem>& v) {
  if (v.size() != A.cols()) raise(errc::dimension_mismatch, "vector length mismatch");
  std::vector<Elem> out(A.rows(), A.field().zero());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out[i] = out[i] + A.at(i, j) * v[j];
  return out;
}

// --- characteristic polynomial ---------------------------------------------------

PolyFF char_poly(const MatFF& A) {
  if (A.rows() != A.cols()) raise(errc::not_square, "characteristic polynomial of a non-square matrix");
  const Field& f = A.field();
  std::size_t m = A.rows();
  if (m == 0) return PolyFF::constant(f, f.one());
  // Berkowitz iteration: descending coefficient vector of det(tI - A_r) for
  // leading principal submatrices A_r, expanded one row/column at a time.
  std::vector<Elem> c{f.one(), -A.at(0, 0)};
  for (std::size_t r = 1; r < m; ++r) {
    // Toeplitz column (1, -d, -R C, -R M C, ..., -R M^{r-2} C) for the
    // bordering row R, column C and corner d of the (r+1)x(r+1) principal block.
    std::vector<Elem> t;
    t.reserve(r + 2);
    t.push_back(f.one());
    t.push_back(-A.at(r, r));
    std::vector<Elem> w(r);  // M^k C
    for (std::size_t i = 0; i < r; ++i) w[i] = A.at(i, r);
    for (std::size_t k = 0; k + 2 <= r + 1; ++k) {
      Elem dot = f.zero();
      for (std::size_t i = 0; i < r; ++i) dot = dot + A.at(r, i) * w[i];
      t.push_back(-dot);
      if (k + 3 > r + 1) break;
      std::vector<Elem> w2(r, f.zero());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) w2[i] = w2[i] + A.at(i, j) * w[j];
      w = std::move(w2);
    }
    std::vector<Elem> nc(r + 2, f.zero());
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j)
        if (i + j < nc.size()) nc[i + j] = nc[i + j] + t[i] * c[j];
    c = std::move(nc);
  }
  // c is descending; PolyFF wants ascending
  std::reverse(c.begin(), c.end());
  return PolyFF(f, std::move(c));
}

std::vector<std::pair<Elem, std::size_t>> roots_in_field(const PolyFF& f) {
  if (f.is_zero()) raise(errc::zero_polynomial, "root extraction from the zero polynomial");
  const Field& k = f.field();
  if (k.order() > max_enumeration()) raise(errc::field_too_large, "field exceeds the enumeration bound");
  std::vector<std::pair<Elem, std::size_t>> roots;
  for (std::uint64_t i = 0; i < k.order(); ++i) {
    Elem x = k.from_index(i);
    if (!f.eval(x).is_zero()) continue;
    PolyFF lin(k, {-x, k.one()});
    PolyFF g = f;
    std::size_t mult = 0;
    while (true) {
      auto [q, rem] = PolyFF::divrem(g, lin);
      if (!rem.is_zero()) break;
      ++mult;
      g = q;
    }
    roots.emplace_back(x, mult);
  }
  return roots;
}

KernelBasis eigenspace(const MatFF& A, const Elem& gamma) {
  if (A.rows() != A.cols()) raise(errc::not_square, "eigenspace of a non-square matrix");
  return kernel(A - MatFF::identity(A.field(), A.rows()).scalar_mul(gamma));
}

}  // namespace feq
