#ifndef FEQ_LA_HPP
#define FEQ_LA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "feq/ff.hpp"

namespace feq {

/// Dense row-major matrix over a Field.
class MatFF {
 public:
  MatFF(Field f, std::size_t rows, std::size_t cols);
  MatFF(Field f, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static MatFF identity(const Field& f, std::size_t n);
  /// Entries given as integers, embedded through Field::from_int.
  static MatFF from_ints(const Field& f, const std::vector<std::vector<int>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Elem& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Elem v);

  MatFF transpose() const;
  MatFF scalar_mul(const Elem& c) const;

  friend MatFF operator+(const MatFF& A, const MatFF& B);
  friend MatFF operator-(const MatFF& A, const MatFF& B);
  friend MatFF operator*(const MatFF& A, const MatFF& B);
  friend bool operator==(const MatFF& A, const MatFF& B);
  friend bool operator!=(const MatFF& A, const MatFF& B) { return !(A == B); }

  bool is_zero() const;

  /// Rows separated by ';', entries by ',', each entry in element text syntax.
  std::string str() const;
  static MatFF parse(const Field& f, std::string_view text);

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Elem> e_;
};

struct KernelBasis {
  std::size_t ambient = 0;
  std::vector<std::vector<Elem>> vectors;  // right null space, deterministic order
  std::size_t dimension() const { return vectors.size(); }
};

/// Reduced row echelon form by Gaussian elimination with leftmost-pivot order.
MatFF rref(const MatFF& A);
std::size_t rank(const MatFF& A);
/// Basis of the right null space; vectors appear in increasing free-column
/// order with a 1 in their free coordinate.
KernelBasis kernel(const MatFF& A);
/// One solution of A x = b, if consistent.
std::optional<std::vector<Elem>> solve(const MatFF& A, const std::vector<Elem>& b);

/// Monic characteristic polynomial det(t I - A), computed division-free.
PolyFF char_poly(const MatFF& A);

/// All roots in the coefficient field by exhaustive evaluation, with
/// multiplicities obtained by repeated division; ascending canonical index.
std::vector<std::pair<Elem, std::size_t>> roots_in_field(const PolyFF& f);

/// kernel(A - gamma I); empty basis iff gamma is not an eigenvalue.
KernelBasis eigenspace(const MatFF& A, const Elem& gamma);

std::vector<Elem> mat_apply(const MatFF& A, const std::vector<Elem>& v);  // A * column vector

}  // namespace feq

#endif
