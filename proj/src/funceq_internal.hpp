#ifndef FEQ_FUNCEQ_INTERNAL_HPP
#define FEQ_FUNCEQ_INTERNAL_HPP

#include <cstdint>
#include <vector>

#include "feq/funceq.hpp"

namespace feq::detail {

// Index-level field arithmetic tables; the hot paths work on canonical
// element indices instead of Elem values.
struct FieldTables {
  std::uint32_t q = 0;
  std::vector<std::uint16_t> add, mul;  // q*q, row-major
  std::vector<std::uint16_t> neg, inv;  // inv[0] unused

  static FieldTables build(const Field& f);

  std::uint16_t a(std::uint16_t x, std::uint16_t y) const { return add[std::size_t{x} * q + y]; }
  std::uint16_t m(std::uint16_t x, std::uint16_t y) const { return mul[std::size_t{x} * q + y]; }
  std::uint16_t s(std::uint16_t x, std::uint16_t y) const { return a(x, neg[y]); }
};

// (GF(q))^dim with points encoded base q.
struct PointSpace {
  std::uint32_t q = 0, dim = 1;
  std::uint64_t size = 1;

  PointSpace() = default;
  PointSpace(const Field& f, std::uint32_t d);

  std::uint32_t add(const FieldTables& ft, std::uint32_t x, std::uint32_t y) const;
  std::uint32_t scale(const FieldTables& ft, std::uint16_t c, std::uint32_t x) const;
};

struct Ctx {
  const EquationSpec* eq = nullptr;
  FieldTables ft;
  PointSpace px, py;
  std::uint64_t S = 1, T = 1, domain = 1;
  std::size_t nfunc = 0;
  std::vector<std::uint16_t> ai, bi;               // coefficient element indices
  std::vector<std::vector<std::uint16_t>> gi;      // gamma indices
  std::uint16_t half = 0;                          // 1/2, rectangle over odd characteristic

  static Ctx make(const EquationSpec& eq);

  std::uint64_t pair_point(std::uint32_t x, std::uint32_t y) const { return std::uint64_t{x} * T + y; }
  std::uint64_t tuple_count() const;
  void decode_tuple(std::uint64_t code, std::vector<std::uint32_t>& xs, std::vector<std::uint32_t>& ys) const;
  // sparse equation row for one substitution tuple, origin unknowns pinned away
  std::vector<std::pair<std::uint32_t, std::uint16_t>> row(const std::vector<std::uint32_t>& xs,
                                                           const std::vector<std::uint32_t>& ys) const;
  // residual of the row against an assignment (0 iff satisfied)
  std::uint16_t residual(const std::vector<std::pair<std::uint32_t, std::uint16_t>>& row,
                         const Assignment& a) const;
};

// Zero-pattern normalization for two-variable equations with arity 2.
struct Norm {
  bool swap_xy = false;
  bool swap_x = false;
  bool swap_y = false;
  std::string label;  // canonical case label
};

Norm classify(const EquationSpec& eq);
EquationSpec normalized_spec(const EquationSpec& eq, const Norm& nm);
Assignment push_assignment(const EquationSpec& eq, const Norm& nm, const Assignment& a);
Assignment pull_assignment(const EquationSpec& eq, const Norm& nm, const Assignment& a);
std::vector<std::vector<Elem>> normalized_gammas(const EquationSpec& eq, const Norm& nm);

// multiplicative order of a non-zero element
std::uint64_t mult_order(const Elem& c);

}  // namespace feq::detail

#endif
