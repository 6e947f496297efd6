#ifndef FEQ_FF_HPP
#define FEQ_FF_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "feq/error.hpp"

namespace feq {

// Process-wide cap on operations that enumerate a whole field.
// Overridable through set_max_enumeration (the CLI wires FUNCEQ_MAX_ENUM to it).
std::uint64_t max_enumeration();
void set_max_enumeration(std::uint64_t bound);

class Field;

/// Element of GF(p^n), stored as coefficients over Z_p with respect to the
/// basis 1, a, a^2, ..., a^{n-1}.  Immutable after construction.
class Elem {
 public:
  struct FieldData;  // shared immutable field description

  Elem() = default;

  Field field() const;
  bool valid() const { return fd_ != nullptr; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  /// Canonical integer encoding sum c_i p^i, a bijection onto [0, p^n).
  std::uint64_t index() const;

  bool is_zero() const;
  bool in_prime_field() const;

  friend bool operator==(const Elem& u, const Elem& v);
  friend bool operator!=(const Elem& u, const Elem& v) { return !(u == v); }

  Elem operator-() const;
  friend Elem operator+(const Elem& u, const Elem& v);
  friend Elem operator-(const Elem& u, const Elem& v);
  friend Elem operator*(const Elem& u, const Elem& v);
  friend Elem operator/(const Elem& u, const Elem& v);

  Elem inv() const;
  Elem pow(std::uint64_t e) const;
  Elem frobenius(std::uint32_t j) const;  // u^{p^j}, 0 <= j < n

  std::string str() const;

 private:
  friend class Field;
  Elem(std::shared_ptr<const FieldData> fd, std::vector<std::uint32_t> c);

  std::shared_ptr<const FieldData> fd_;
  std::vector<std::uint32_t> c_;
};

/// GF(p^n) with the canonical modulus: monic degree-n polynomials over Z_p are
/// scanned in increasing order of the integer encoding of their non-leading
/// coefficients and the first irreducible one is taken.  For n = 1 the modulus
/// is x and arithmetic is plain Z_p.
class Field {
 public:
  Field() = default;  // empty handle; usable only after assignment
  Field(std::uint64_t p, std::uint32_t n);
  bool valid() const { return fd_ != nullptr; }

  std::uint64_t p() const;
  std::uint32_t degree() const;
  std::uint64_t order() const;  // p^n
  /// Ascending coefficient vector of the modulus, length n+1, last entry 1.
  const std::vector<std::uint32_t>& modulus() const;

  bool same(const Field& other) const;

  Elem zero() const;
  Elem one() const;
  Elem gen() const;  // the basis element a (for n = 1 this is 0, the root of x)
  Elem from_coeffs(std::vector<std::uint32_t> c) const;  // entries reduced mod p
  Elem from_index(std::uint64_t idx) const;
  Elem from_int(std::int64_t v) const;  // embeds v mod p into the prime subfield

  /// All q elements in canonical index order.  Refuses fields beyond the
  /// enumeration bound.
  std::vector<Elem> elements() const;

  /// Element text: "c0+c1*a+c2*a^2+..." with zero terms omitted ("0" for the
  /// zero element); a bare integer is read as the canonical index.
  Elem parse(std::string_view text) const;

 private:
  friend class Elem;
  std::shared_ptr<const Elem::FieldData> fd_;
};

bool operator==(const Field& f, const Field& g);
inline bool operator!=(const Field& f, const Field& g) { return !(f == g); }

/// Dense univariate polynomial over a Field; ascending coefficients with no
/// trailing zero (the zero polynomial has an empty coefficient vector).
class PolyFF {
 public:
  explicit PolyFF(Field f) : field_(std::move(f)) {}
  PolyFF(Field f, std::vector<Elem> ascending);

  static PolyFF x(const Field& f);
  static PolyFF constant(const Field& f, const Elem& c);
  /// Monic x^e.
  static PolyFF monomial(const Field& f, std::size_t e);

  const Field& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Elem coeff(std::size_t i) const;  // zero beyond degree
  Elem lead() const;
  bool is_monic() const;

  Elem eval(const Elem& x) const;

  friend PolyFF operator+(const PolyFF& f, const PolyFF& g);
  friend PolyFF operator-(const PolyFF& f, const PolyFF& g);
  friend PolyFF operator*(const PolyFF& f, const PolyFF& g);
  friend bool operator==(const PolyFF& f, const PolyFF& g);
  friend bool operator!=(const PolyFF& f, const PolyFF& g) { return !(f == g); }

  PolyFF scaled(const Elem& c) const;

  /// Quotient and remainder; divisor must be non-zero.
  static std::pair<PolyFF, PolyFF> divrem(const PolyFF& f, const PolyFF& g);
  static PolyFF gcd_monic(PolyFF f, PolyFF g);
  /// x^e mod m via square-and-multiply on a word exponent.
  static PolyFF pow_mod(const PolyFF& base, std::uint64_t e, const PolyFF& m);

  /// Text form, emitted with descending powers ("x^2+x+1"); extension-field
  /// coefficients are parenthesized.  Parsing accepts either power order.
  std::string str(const std::string& var = "x") const;
  static PolyFF parse(const Field& f, std::string_view text, const std::string& var = "x");

 private:
  void normalize();
  Field field_;
  std::vector<Elem> c_;
};

/// Monic least-degree polynomial over Z_p vanishing at u, returned over the
/// prime field GF(p).  Equals the product of (x - u^{p^k}) over the Frobenius
/// orbit of u.
PolyFF minimal_poly(const Elem& u);

struct Subfield {
  std::uint32_t degree;        // d | n, subfield of size p^d
  std::vector<Elem> members;   // canonical index order
  bool contains(const Elem& u) const;
};

/// One entry per divisor d of n; membership(u) <=> u^{p^d} = u.
std::vector<Subfield> subfields(const Field& f);

bool is_prime(std::uint64_t m);

}  // namespace feq

#endif
