#ifndef FEQ_FUNCEQ_HPP
#define FEQ_FUNCEQ_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "feq/semihom.hpp"

namespace feq {

/// Finite module GF(q)^s.
struct ModuleSpace {
  Field field;
  std::uint32_t dim = 1;  // s >= 1
  std::uint64_t points() const;
};

enum class Variant {
  one_var,                  // f(sum alpha_i x_i) = sum f_i(x_i)
  multi_unknown,            // f(sum alpha_i x_i, sum beta_i y_i) = sum f_ij(x_i, y_j)
  single_unknown_weighted,  // f(...) = sum gamma_ij f(x_i, y_j)
  biadditivity,             // f(x1+x2, y1+y2) = f(x1,y1)+f(x1,y2)+f(x2,y1)+f(x2,y2)
  rectangle,                // midpoint mean form; over characteristic 2 the four-term zero sum
  cauchy_xy,                // f(x1+x2, y1+y2) = g(x1,y1) + h(x2,y2)
};

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& s);

struct EquationSpec {
  Variant variant = Variant::multi_unknown;
  std::uint32_t arity = 2;  // n >= 2
  std::vector<Elem> alphas, betas;
  std::vector<std::vector<Elem>> gammas;  // arity x arity, single_unknown_weighted only
  ModuleSpace X, Y;

  const Field& field() const { return X.field; }
  std::size_t function_count() const;
  /// Points of the domain every unknown function lives on
  /// (q^s for one_var, q^s * q^t otherwise).
  std::uint64_t domain_points() const;

  static EquationSpec one_var(ModuleSpace X, std::vector<Elem> alphas);
  static EquationSpec multi_unknown(ModuleSpace X, ModuleSpace Y, std::vector<Elem> alphas,
                                    std::vector<Elem> betas);
  static EquationSpec single_unknown(ModuleSpace X, ModuleSpace Y, std::vector<Elem> alphas,
                                     std::vector<Elem> betas, std::vector<std::vector<Elem>> gammas);
  static EquationSpec preset_biadditivity(ModuleSpace X, ModuleSpace Y);
  static EquationSpec preset_rectangle(ModuleSpace X, ModuleSpace Y);
  static EquationSpec preset_cauchy(ModuleSpace X, ModuleSpace Y);
};

/// Value table of one unknown function: element index per domain point.
/// Index 0 is the origin and is always pinned to 0.
using ValueTable = std::vector<std::uint16_t>;
/// One value table per unknown function.
using Assignment = std::vector<ValueTable>;

struct Limits {
  std::size_t max_unknowns = 10000;
  std::size_t max_rows = 1000000;
};

struct LinearSystem {
  std::size_t unknowns = 0;   // origin values pinned away
  std::size_t functions = 0;
  std::uint64_t domain = 0;   // points per function
  // one row per substitution tuple; entries (unknown index, coefficient index)
  std::vector<std::vector<std::pair<std::uint32_t, std::uint16_t>>> rows;
};

LinearSystem build_system(const EquationSpec& eq, const Limits& limits = {});

struct SolutionSpace {
  std::size_t dimension = 0;
  std::vector<Assignment> basis;  // canonical echelon order
};

/// Kernel of the equation system; every basis element is re-verified against
/// 100 random substitution tuples before being returned.
SolutionSpace solution_space(const EquationSpec& eq, const Limits& limits = {});

/// Does the assignment satisfy every instance of the equation?
bool satisfies(const EquationSpec& eq, const Assignment& a);

struct Predicted {
  std::size_t dimension = 0;
  std::string label;
  std::vector<std::pair<std::string, std::size_t>> parts;  // component breakdown
};

/// Closed-form solution-space dimension from the governing structure result
/// for the equation's zero pattern.
Predicted predicted_dim(const EquationSpec& eq);

/// Structured components of a solution.  For a two-variable function g the
/// split is g(x,z) = cross(x,z) + g(x,0) + g(0,z) with cross vanishing on both
/// axes; A, chi, zeta are the components of f and chi_ij, zeta_ij the
/// marginals of the f_ij.  Which parts carry additivity or determination
/// constraints depends on the case label.
struct StructuredSolution {
  std::string case_label;
  ValueTable A;                      // cross part of f on the full pair domain
  ValueTable chi, zeta;              // marginals of f (chi doubles as f itself for one_var)
  std::vector<ValueTable> chi_ij;    // per f_ij, row-major (i*n + j)
  std::vector<ValueTable> zeta_ij;
};

/// Extract and validate the structured components of a solution.
StructuredSolution decompose(const EquationSpec& eq, const Assignment& a);

/// Rebuild the full assignment from structured components; the result is
/// verified exhaustively against the equation.
Assignment synthesize_solution(const EquationSpec& eq, const StructuredSolution& s);

struct Reduction {
  EquationSpec reduced;                      // two-variable equation
  std::size_t lambda, kappa, mu, nu;         // 0-based distinguished indices
};

/// Substitute zero at all indices other than lambda/kappa (x side) and
/// mu/nu (y side); solutions of the full equation transform to solutions of
/// the reduced one through transform_solution.
Reduction reduce_to_two(const EquationSpec& eq, std::size_t lambda, std::size_t kappa, std::size_t mu,
                        std::size_t nu);

Assignment transform_solution(const EquationSpec& eq, const Reduction& red, const Assignment& a);

struct ComponentVerdict {
  bool supported = false;   // closed form available for this component
  std::size_t dimension = 0;
  std::string note;
};

struct NontrivialReport {
  std::string case_label;
  bool structural_supported = false;  // all components have closed forms
  std::string note;
  ComponentVerdict biadd, chi, zeta;
  ComponentVerdict free_part;         // unconstrained block, where one exists
  std::size_t structural_dim = 0;     // sum of supported component dimensions
  std::size_t brute_dim = 0;
  bool consistent = true;             // structural existence agrees with brute_dim > 0
};

/// Existence analysis for the single-unknown weighted equation (arity 2):
/// component verdicts from the semi-homogeneous map decisions plus the
/// brute-force solution-space dimension, with a consistency flag.
NontrivialReport nontrivial_report(const EquationSpec& eq, const Limits& limits = {});

}  // namespace feq

#endif
