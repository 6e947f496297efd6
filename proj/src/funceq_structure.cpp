#include <algorithm>

#include "funceq_internal.hpp"

namespace feq {

using detail::Ctx;
using detail::FieldTables;
using detail::Norm;
using detail::PointSpace;

namespace {

std::size_t fid(std::size_t i, std::size_t j, std::size_t n = 2) { return 1 + i * n + j; }

struct Tab {
  // two-variable table helpers over element indices
  const FieldTables& ft;
  const PointSpace& px;
  const PointSpace& py;
  std::uint64_t S, T;

  std::uint16_t at(const ValueTable& g, std::uint64_t x, std::uint64_t y) const { return g[x * T + y]; }

  ValueTable marg_x(const ValueTable& g) const {
    ValueTable out(S);
    for (std::uint64_t x = 0; x < S; ++x) out[x] = at(g, x, 0);
    return out;
  }
  ValueTable marg_y(const ValueTable& g) const {
    ValueTable out(T);
    for (std::uint64_t y = 0; y < T; ++y) out[y] = at(g, 0, y);
    return out;
  }
  ValueTable cross(const ValueTable& g) const {
    ValueTable out(S * T);
    for (std::uint64_t x = 0; x < S; ++x)
      for (std::uint64_t y = 0; y < T; ++y)
        out[x * T + y] = ft.s(ft.s(at(g, x, y), at(g, x, 0)), at(g, 0, y));
    return out;
  }
  bool additive(const ValueTable& one_var_tab, const PointSpace& sp) const {
    for (std::uint32_t x = 0; x < sp.size; ++x)
      for (std::uint32_t y = 0; y < sp.size; ++y)
        if (one_var_tab[sp.add(ft, x, y)] != ft.a(one_var_tab[x], one_var_tab[y])) return false;
    return true;
  }
  bool additive_in_first(const ValueTable& g) const {
    for (std::uint32_t x = 0; x < S; ++x)
      for (std::uint32_t x2 = 0; x2 < S; ++x2)
        for (std::uint64_t y = 0; y < T; ++y)
          if (at(g, px.add(ft, x, x2), y) != ft.a(at(g, x, y), at(g, x2, y))) return false;
    return true;
  }
  bool additive_in_second(const ValueTable& g) const {
    for (std::uint64_t x = 0; x < S; ++x)
      for (std::uint32_t y = 0; y < T; ++y)
        for (std::uint32_t y2 = 0; y2 < T; ++y2)
          if (at(g, x, py.add(ft, y, y2)) != ft.a(at(g, x, y), at(g, x, y2))) return false;
    return true;
  }
  bool zero(const ValueTable& g) const {
    return std::all_of(g.begin(), g.end(), [](std::uint16_t v) { return v == 0; });
  }
};

void structure_check(bool ok, const std::string& what) {
  if (!ok) raise(errc::not_a_solution, "structured form violated: " + what);
}

}  // namespace

// --- decompose -------------------------------------------------------------------

namespace {

StructuredSolution decompose_canonical(const EquationSpec& eq, const Assignment& a, const std::string& label) {
  // eq and a are in canonical orientation already
  Ctx c = Ctx::make(eq);
  Tab tb{c.ft, c.px, c.py, c.S, c.T};
  const FieldTables& ft = c.ft;
  StructuredSolution s;
  s.case_label = label;

  if (eq.variant == Variant::one_var) {
    s.chi = a[0];
    std::size_t k = 0;
    for (const auto& al : eq.alphas)
      if (!al.is_zero()) ++k;
    for (std::size_t i = 0; i < eq.arity; ++i) {
      if (eq.alphas[i].is_zero()) {
        structure_check(tb.zero(a[1 + i]), "coefficient-free component must vanish");
      } else {
        std::uint16_t ai = static_cast<std::uint16_t>(eq.alphas[i].index());
        for (std::uint32_t x = 0; x < c.S; ++x)
          structure_check(a[1 + i][x] == a[0][c.px.scale(ft, ai, x)], "component must be a rescaled f");
      }
    }
    if (k >= 2) {
      PointSpace px = c.px;
      structure_check(tb.additive(a[0], px), "f must be additive");
    }
    return s;
  }

  auto scale_x = [&](std::uint16_t ci, std::uint64_t x) { return c.px.scale(ft, ci, static_cast<std::uint32_t>(x)); };
  auto scale_y = [&](std::uint16_t ci, std::uint64_t y) { return c.py.scale(ft, ci, static_cast<std::uint32_t>(y)); };

  s.A = tb.cross(a[0]);
  s.chi = tb.marg_x(a[0]);
  s.zeta = tb.marg_y(a[0]);

  if (eq.variant == Variant::biadditivity) {
    structure_check(tb.zero(s.chi) && tb.zero(s.zeta), "bi-additive solution has zero marginals");
    structure_check(tb.additive_in_first(s.A) && tb.additive_in_second(s.A), "A must be bi-additive");
    return s;
  }
  if (eq.variant == Variant::rectangle) {
    if (eq.field().p() == 2) {
      structure_check(tb.zero(s.A), "solution must split into chi + zeta");
    } else {
      structure_check(tb.additive_in_first(s.A) && tb.additive_in_second(s.A), "A must be bi-additive");
      structure_check(tb.additive(s.chi, c.px), "chi must be additive");
      structure_check(tb.additive(s.zeta, c.py), "zeta must be additive");
    }
    return s;
  }
  if (eq.variant == Variant::cauchy_xy) {
    structure_check(a[1] == a[0] && a[2] == a[0], "all three unknowns must coincide");
    structure_check(tb.zero(s.A), "solution must split into chi + zeta");
    structure_check(tb.additive(s.chi, c.px), "chi must be additive");
    structure_check(tb.additive(s.zeta, c.py), "zeta must be additive");
    return s;
  }

  // two-variable equation with four component functions
  for (std::size_t k = 0; k < 4; ++k) {
    s.chi_ij.push_back(tb.marg_x(a[1 + k]));
    s.zeta_ij.push_back(tb.marg_y(a[1 + k]));
  }
  std::uint16_t a1 = c.ai[0], a2 = c.ai[1], b1 = c.bi[0], b2 = c.bi[1];
  auto sum_form = [&](std::size_t k, const ValueTable& chi, const ValueTable& zeta, bool neg_chi,
                      bool neg_zeta) {
    const ValueTable& g = a[1 + k];
    for (std::uint64_t x = 0; x < c.S; ++x)
      for (std::uint64_t y = 0; y < c.T; ++y) {
        std::uint16_t cx = neg_chi ? ft.neg[chi[x]] : chi[x];
        std::uint16_t zy = neg_zeta ? ft.neg[zeta[y]] : zeta[y];
        if (tb.at(g, x, y) != ft.a(cx, zy)) return false;
      }
    return true;
  };

  if (label == "all_zero") {
    for (std::size_t k = 0; k < 4; ++k)
      structure_check(sum_form(k, s.chi_ij[k], s.zeta_ij[k], false, false), "components must split");
    structure_check(sum_form(1, s.chi_ij[0], s.zeta_ij[1], true, false), "chi_12 = -chi_11");
    structure_check(sum_form(3, s.chi_ij[2], s.zeta_ij[3], true, false), "chi_22 = -chi_21");
    structure_check(sum_form(2, s.chi_ij[2], s.zeta_ij[0], false, true), "zeta_21 = -zeta_11");
    structure_check(sum_form(3, s.chi_ij[3], s.zeta_ij[1], false, true), "zeta_22 = -zeta_12");
  } else if (label == "single_nonzero") {
    for (std::size_t k = 0; k < 4; ++k)
      structure_check(sum_form(k, s.chi_ij[k], s.zeta_ij[k], false, false), "components must split");
    structure_check(sum_form(1, s.chi_ij[0], s.zeta_ij[1], true, false), "chi_12 = -chi_11");
    structure_check(sum_form(3, s.chi_ij[2], s.zeta_ij[3], true, false), "chi_22 = -chi_21");
    structure_check(sum_form(2, s.chi_ij[2], s.zeta_ij[0], false, true), "zeta_21 = -zeta_11");
    for (std::uint64_t z = 0; z < c.T; ++z)
      structure_check(s.zeta[scale_y(b2, z)] == ft.a(s.zeta_ij[1][z], s.zeta_ij[3][z]),
                      "f(0, b2 z) = zeta_12 + zeta_22");
  } else if (label == "one_side") {
    structure_check(tb.additive(s.chi, c.px), "f(.,0) must be additive");
    for (std::size_t k = 0; k < 4; ++k)
      structure_check(sum_form(k, s.chi_ij[k], s.zeta_ij[k], false, false), "components must split");
    for (std::uint64_t x = 0; x < c.S; ++x) {
      structure_check(ft.a(s.chi_ij[0][x], s.chi_ij[1][x]) == s.chi[scale_x(a1, x)],
                      "chi_11 + chi_12 = chi(a1 x)");
      structure_check(ft.a(s.chi_ij[2][x], s.chi_ij[3][x]) == s.chi[scale_x(a2, x)],
                      "chi_21 + chi_22 = chi(a2 x)");
    }
    for (std::uint64_t z = 0; z < c.T; ++z) {
      structure_check(s.zeta_ij[2][z] == ft.neg[s.zeta_ij[0][z]], "zeta_21 = -zeta_11");
      structure_check(s.zeta_ij[3][z] == ft.neg[s.zeta_ij[1][z]], "zeta_22 = -zeta_12");
    }
  } else if (label == "matched_pair") {
    for (std::uint64_t x = 0; x < c.S; ++x)
      for (std::uint64_t y = 0; y < c.T; ++y) {
        std::uint16_t want = ft.s(ft.s(tb.at(a[0], scale_x(a1, x), scale_y(b1, y)), s.chi_ij[1][x]),
                                  s.zeta_ij[2][y]);
        structure_check(tb.at(a[1 + 0], x, y) == want, "f_11 = f(a1 x, b1 z) - chi_12 - zeta_21");
      }
    structure_check(sum_form(1, s.chi_ij[1], s.zeta_ij[1], false, false), "f_12 splits");
    structure_check(sum_form(2, s.chi_ij[2], s.zeta_ij[2], false, false), "f_21 splits");
    structure_check(sum_form(3, s.chi_ij[2], s.zeta_ij[1], true, true), "f_22 = -chi_21 - zeta_12");
  } else if (label == "three_nonzero") {
    structure_check(tb.additive(s.chi, c.px), "f(.,0) must be additive");
    structure_check(tb.additive_in_first(s.A), "cross part must be additive in x");
    for (std::uint64_t x = 0; x < c.S; ++x)
      for (std::uint64_t y = 0; y < c.T; ++y) {
        std::uint64_t xa1 = scale_x(a1, x), xa2 = scale_x(a2, x), yb1 = scale_y(b1, y);
        std::uint16_t f11 = ft.s(ft.a(ft.a(tb.at(s.A, xa1, yb1), s.chi[xa1]), s.zeta_ij[0][y]),
                                 s.chi_ij[1][x]);
        structure_check(tb.at(a[1 + 0], x, y) == f11, "f_11 structure");
        std::uint16_t f21 = ft.s(ft.a(ft.a(tb.at(s.A, xa2, yb1), s.chi[xa2]), s.zeta_ij[2][y]),
                                 s.chi_ij[3][x]);
        structure_check(tb.at(a[1 + 2], x, y) == f21, "f_21 structure");
      }
    structure_check(sum_form(1, s.chi_ij[1], s.zeta_ij[1], false, false), "f_12 splits");
    structure_check(sum_form(3, s.chi_ij[3], s.zeta_ij[1], false, true), "f_22 = chi_22 - zeta_12");
    for (std::uint64_t z = 0; z < c.T; ++z)
      structure_check(s.zeta[scale_y(b1, z)] == ft.a(s.zeta_ij[0][z], s.zeta_ij[2][z]),
                      "zeta(b1 z) = zeta_11 + zeta_21");
  } else {  // nondegenerate
    if (eq.field().p() == 2)
      raise(errc::unsupported_case, "nondegenerate structure needs characteristic != 2");
    structure_check(tb.additive_in_first(s.A) && tb.additive_in_second(s.A), "A must be bi-additive");
    structure_check(tb.additive(s.chi, c.px), "chi must be additive");
    structure_check(tb.additive(s.zeta, c.py), "zeta must be additive");
    std::uint16_t ab[2] = {a1, a2}, bb[2] = {b1, b2};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        std::size_t k = i * 2 + j;
        for (std::uint64_t x = 0; x < c.S; ++x)
          for (std::uint64_t y = 0; y < c.T; ++y) {
            std::uint16_t want =
                ft.a(ft.a(tb.at(s.A, scale_x(ab[i], x), scale_y(bb[j], y)), s.chi_ij[k][x]),
                     s.zeta_ij[k][y]);
            structure_check(tb.at(a[1 + k], x, y) == want, "f_ij = A(a_i x, b_j z) + chi_ij + zeta_ij");
          }
      }
    for (std::uint64_t x = 0; x < c.S; ++x) {
      structure_check(s.chi[scale_x(a1, x)] == ft.a(s.chi_ij[0][x], s.chi_ij[1][x]), "chi(a1 x) sum");
      structure_check(s.chi[scale_x(a2, x)] == ft.a(s.chi_ij[2][x], s.chi_ij[3][x]), "chi(a2 x) sum");
    }
    for (std::uint64_t z = 0; z < c.T; ++z) {
      structure_check(s.zeta[scale_y(b1, z)] == ft.a(s.zeta_ij[0][z], s.zeta_ij[2][z]), "zeta(b1 z) sum");
      structure_check(s.zeta[scale_y(b2, z)] == ft.a(s.zeta_ij[1][z], s.zeta_ij[3][z]), "zeta(b2 z) sum");
    }
  }
  return s;
}

}  // namespace

StructuredSolution decompose(const EquationSpec& eq, const Assignment& a) {
  if (!satisfies(eq, a)) raise(errc::not_a_solution, "assignment does not satisfy the equation");
  if (eq.variant == Variant::one_var || eq.variant == Variant::biadditivity ||
      eq.variant == Variant::rectangle || eq.variant == Variant::cauchy_xy) {
    Predicted p = predicted_dim(eq);
    return decompose_canonical(eq, a, p.label);
  }
  if (eq.variant != Variant::multi_unknown)
    raise(errc::unsupported_case, "decompose covers the unweighted equation and presets");
  if (eq.arity != 2)
    raise(errc::unsupported_case, "decompose covers arity 2; reduce larger equations first");
  Norm nm = detail::classify(eq);
  EquationSpec ceq = detail::normalized_spec(eq, nm);
  Assignment ca = detail::push_assignment(eq, nm, a);
  return decompose_canonical(ceq, ca, nm.label);
}

// --- synthesize -------------------------------------------------------------------

namespace {

Assignment synthesize_canonical(const EquationSpec& eq, const StructuredSolution& s) {
  Ctx c = Ctx::make(eq);
  const FieldTables& ft = c.ft;
  auto shape = [&](const ValueTable& t, std::uint64_t len, const char* what) {
    if (t.size() != len) raise(errc::bad_parameter_shape, std::string("bad table size for ") + what);
    for (std::uint16_t v : t)
      if (v >= ft.q) raise(errc::bad_parameter_shape, std::string("value out of field range in ") + what);
    if (t[0] != 0) raise(errc::bad_parameter_shape, std::string(what) + " must vanish at the origin");
  };

  if (eq.variant == Variant::one_var) {
    shape(s.chi, c.S, "chi");
    Assignment a(c.nfunc, ValueTable(c.S, 0));
    a[0] = s.chi;
    for (std::size_t i = 0; i < eq.arity; ++i) {
      if (eq.alphas[i].is_zero()) continue;
      std::uint16_t ai = static_cast<std::uint16_t>(eq.alphas[i].index());
      for (std::uint32_t x = 0; x < c.S; ++x) a[1 + i][x] = s.chi[c.px.scale(ft, ai, x)];
    }
    return a;
  }

  shape(s.A, c.S * c.T, "A");
  shape(s.chi, c.S, "chi");
  shape(s.zeta, c.T, "zeta");
  auto combine = [&](std::uint64_t x, std::uint64_t y) {
    return ft.a(ft.a(s.A[x * c.T + y], s.chi[x]), s.zeta[y]);
  };
  ValueTable f(c.S * c.T);
  for (std::uint64_t x = 0; x < c.S; ++x)
    for (std::uint64_t y = 0; y < c.T; ++y) f[x * c.T + y] = combine(x, y);

  if (eq.variant == Variant::biadditivity || eq.variant == Variant::rectangle) return {f};
  if (eq.variant == Variant::cauchy_xy) return {f, f, f};

  if (s.chi_ij.size() != 4 || s.zeta_ij.size() != 4)
    raise(errc::bad_parameter_shape, "need four chi_ij and zeta_ij tables");
  for (std::size_t k = 0; k < 4; ++k) {
    shape(s.chi_ij[k], c.S, "chi_ij");
    shape(s.zeta_ij[k], c.T, "zeta_ij");
  }
  std::uint16_t a1 = c.ai[0], a2 = c.ai[1], b1 = c.bi[0], b2 = c.bi[1];
  (void)b2;
  auto scale_x = [&](std::uint16_t ci, std::uint64_t x) { return c.px.scale(ft, ci, static_cast<std::uint32_t>(x)); };
  auto scale_y = [&](std::uint16_t ci, std::uint64_t y) { return c.py.scale(ft, ci, static_cast<std::uint32_t>(y)); };

  Assignment a(5, ValueTable(c.S * c.T, 0));
  a[0] = f;
  const std::string& label = s.case_label;
  auto fill_sum = [&](std::size_t k, const ValueTable& chi, const ValueTable& zeta, bool nchi, bool nzeta) {
    for (std::uint64_t x = 0; x < c.S; ++x)
      for (std::uint64_t y = 0; y < c.T; ++y)
        a[1 + k][x * c.T + y] =
            ft.a(nchi ? ft.neg[chi[x]] : chi[x], nzeta ? ft.neg[zeta[y]] : zeta[y]);
  };
  if (label == "all_zero" || label == "single_nonzero" || label == "one_side") {
    for (std::size_t k = 0; k < 4; ++k) fill_sum(k, s.chi_ij[k], s.zeta_ij[k], false, false);
  } else if (label == "matched_pair") {
    for (std::uint64_t x = 0; x < c.S; ++x)
      for (std::uint64_t y = 0; y < c.T; ++y)
        a[1][x * c.T + y] =
            ft.s(ft.s(f[scale_x(a1, x) * c.T + scale_y(b1, y)], s.chi_ij[1][x]), s.zeta_ij[2][y]);
    fill_sum(1, s.chi_ij[1], s.zeta_ij[1], false, false);
    fill_sum(2, s.chi_ij[2], s.zeta_ij[2], false, false);
    fill_sum(3, s.chi_ij[2], s.zeta_ij[1], true, true);
  } else if (label == "three_nonzero") {
    for (std::uint64_t x = 0; x < c.S; ++x)
      for (std::uint64_t y = 0; y < c.T; ++y) {
        std::uint64_t xa1 = scale_x(a1, x), xa2 = scale_x(a2, x), yb1 = scale_y(b1, y);
        a[1][x * c.T + y] = ft.s(ft.a(ft.a(s.A[xa1 * c.T + yb1], s.chi[xa1]), s.zeta_ij[0][y]),
                                 s.chi_ij[1][x]);
        a[3][x * c.T + y] = ft.s(ft.a(ft.a(s.A[xa2 * c.T + yb1], s.chi[xa2]), s.zeta_ij[2][y]),
                                 s.chi_ij[3][x]);
      }
    fill_sum(1, s.chi_ij[1], s.zeta_ij[1], false, false);
    fill_sum(3, s.chi_ij[3], s.zeta_ij[1], false, true);
  } else if (label == "nondegenerate") {
    std::uint16_t ab[2] = {c.ai[0], c.ai[1]}, bb[2] = {c.bi[0], c.bi[1]};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        std::size_t k = i * 2 + j;
        for (std::uint64_t x = 0; x < c.S; ++x)
          for (std::uint64_t y = 0; y < c.T; ++y)
            a[1 + k][x * c.T + y] =
                ft.a(ft.a(s.A[scale_x(ab[i], x) * c.T + scale_y(bb[j], y)], s.chi_ij[k][x]),
                     s.zeta_ij[k][y]);
      }
  } else {
    raise(errc::bad_parameter_shape, "unknown case label '" + label + "'");
  }
  return a;
}

}  // namespace

Assignment synthesize_solution(const EquationSpec& eq, const StructuredSolution& s) {
  Assignment out;
  if (eq.variant == Variant::multi_unknown) {
    if (eq.arity != 2) raise(errc::unsupported_case, "synthesis covers arity 2");
    Norm nm = detail::classify(eq);
    if (nm.label != s.case_label)
      raise(errc::bad_parameter_shape, "components were built for case '" + s.case_label +
                                           "' but the equation classifies as '" + nm.label + "'");
    EquationSpec ceq = detail::normalized_spec(eq, nm);
    Assignment ca = synthesize_canonical(ceq, s);
    out = detail::pull_assignment(eq, nm, ca);
  } else {
    out = synthesize_canonical(eq, s);
  }
  if (!satisfies(eq, out))
    raise(errc::bad_parameter_shape, "components do not assemble into a solution");
  return out;
}

// --- reduction of higher arity ------------------------------------------------------

Reduction reduce_to_two(const EquationSpec& eq, std::size_t lambda, std::size_t kappa, std::size_t mu,
                        std::size_t nu) {
  if (eq.variant != Variant::multi_unknown) raise(errc::unsupported_case, "reduction needs the unweighted equation");
  if (eq.arity <= 2) raise(errc::bad_indices, "equation already has arity 2");
  std::size_t n = eq.arity;
  if (lambda >= n || kappa >= n || mu >= n || nu >= n)
    raise(errc::bad_indices, "distinguished index out of range");
  if (lambda == kappa || mu == nu) raise(errc::bad_indices, "distinguished indices must differ");
  Reduction red;
  red.lambda = lambda;
  red.kappa = kappa;
  red.mu = mu;
  red.nu = nu;
  red.reduced = EquationSpec::multi_unknown(eq.X, eq.Y, {eq.alphas[lambda], eq.alphas[kappa]},
                                            {eq.betas[mu], eq.betas[nu]});
  return red;
}

Assignment transform_solution(const EquationSpec& eq, const Reduction& red, const Assignment& a) {
  Ctx c = Ctx::make(eq);
  const FieldTables& ft = c.ft;
  std::size_t n = eq.arity;
  if (a.size() != c.nfunc) raise(errc::bad_parameter_shape, "wrong function count");
  Assignment out(5, ValueTable(c.S * c.T, 0));
  out[0] = a[0];
  auto absorbed = [&](std::size_t row_index, std::size_t col_index) {
    // f_{row,col} plus the marginals of the dropped components
    ValueTable t = a[fid(row_index, col_index, n)];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == red.mu || j == red.nu) continue;
      const ValueTable& g = a[fid(row_index, j, n)];
      for (std::uint64_t x = 0; x < c.S; ++x)
        for (std::uint64_t y = 0; y < c.T; ++y) t[x * c.T + y] = ft.a(t[x * c.T + y], g[x * c.T + 0]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == red.lambda || i == red.kappa) continue;
      const ValueTable& g = a[fid(i, col_index, n)];
      for (std::uint64_t x = 0; x < c.S; ++x)
        for (std::uint64_t y = 0; y < c.T; ++y) t[x * c.T + y] = ft.a(t[x * c.T + y], g[0 * c.T + y]);
    }
    return t;
  };
  out[1] = absorbed(red.lambda, red.mu);
  out[2] = a[fid(red.lambda, red.nu, n)];
  out[3] = a[fid(red.kappa, red.mu, n)];
  out[4] = absorbed(red.kappa, red.nu);
  return out;
}

// --- non-trivial solution reports ----------------------------------------------------

namespace {

// dimension of { h : D -> K, h(0) = 0, h(b x) = c h(x) } for invertible b:
// one free value per multiplication orbit when c^ord(b) = 1 and c != 0
std::size_t orbit_dim(const Elem& b, const Elem& c, std::uint64_t space_points) {
  if (c.is_zero()) return 0;
  std::uint64_t ord = detail::mult_order(b);
  if (!(c.pow(ord) == c.field().one())) return 0;
  return (space_points - 1) / ord;
}

// GF(q)-dimension of additive maps K -> K with L(a_i x) = c_i L(x)
std::size_t add_space_dim(const Field& f, const std::vector<AddConstraint>& cs) {
  WitnessSpace ws = additive_constraint_space(f, cs);
  return ws.dimension / f.degree();
}

}  // namespace

NontrivialReport nontrivial_report(const EquationSpec& eq, const Limits& limits) {
  if (eq.variant != Variant::single_unknown_weighted)
    raise(errc::unsupported_case, "report needs the single-unknown weighted equation");
  if (eq.arity != 2) raise(errc::unsupported_case, "report covers arity 2");
  const Field& f = eq.field();
  Norm nm = detail::classify(eq);
  auto g = detail::normalized_gammas(eq, nm);
  EquationSpec ceq = detail::normalized_spec(eq, nm);

  std::uint64_t S = ceq.X.points(), T = ceq.Y.points();
  std::uint64_t s = ceq.X.dim, t = ceq.Y.dim;
  const Elem &a1 = ceq.alphas[0], &a2 = ceq.alphas[1], &b1 = ceq.betas[0], &b2 = ceq.betas[1];
  Elem row1 = g[0][0] + g[0][1], row2 = g[1][0] + g[1][1];
  Elem col1 = g[0][0] + g[1][0], col2 = g[0][1] + g[1][1];
  bool all_gamma_zero =
      g[0][0].is_zero() && g[0][1].is_zero() && g[1][0].is_zero() && g[1][1].is_zero();

  NontrivialReport rep;
  rep.case_label = nm.label;
  rep.brute_dim = solution_space(eq, limits).dimension;

  auto supported = [](std::size_t dim, const std::string& note = "") {
    return ComponentVerdict{true, dim, note};
  };
  auto unsupported = [](const std::string& note) { return ComponentVerdict{false, 0, note}; };

  if (all_gamma_zero) {
    rep.case_label += "/unconstrained";
    std::size_t free_dim = 0;
    if (nm.label == "all_zero")
      free_dim = S * T - 1;
    else if (nm.label == "single_nonzero")
      free_dim = T * (S - 1);
    else if (nm.label == "one_side")
      free_dim = S * (T - 1);
    else
      free_dim = 0;  // the left side covers every argument pair, forcing f = 0
    rep.free_part = supported(free_dim, "f is unconstrained away from the pinned values");
    rep.biadd = supported(0);
    rep.chi = supported(0);
    rep.zeta = supported(0);
    rep.structural_supported = true;
    rep.structural_dim = free_dim;
  } else if (nm.label == "all_zero") {
    rep.chi = supported((row1.is_zero() && row2.is_zero()) ? S - 1 : 0);
    rep.zeta = supported((col1.is_zero() && col2.is_zero()) ? T - 1 : 0);
    rep.biadd = supported(0, "solutions split as chi + zeta");
    rep.free_part = supported(0);
    rep.structural_supported = true;
    rep.structural_dim = rep.chi.dimension + rep.zeta.dimension;
  } else if (nm.label == "single_nonzero") {
    rep.chi = supported((row1.is_zero() && row2.is_zero()) ? S - 1 : 0);
    rep.zeta = supported(col1.is_zero() ? orbit_dim(b2, col2, T) : 0);
    rep.biadd = supported(0, "solutions split as chi + zeta");
    rep.free_part = supported(0);
    rep.structural_supported = true;
    rep.structural_dim = rep.chi.dimension + rep.zeta.dimension;
  } else if (nm.label == "one_side") {
    rep.chi = supported(s * add_space_dim(f, {{a1, row1}, {a2, row2}}), "additive");
    rep.zeta = supported((col1.is_zero() && col2.is_zero()) ? T - 1 : 0);
    rep.biadd = supported(0, "solutions split as chi + zeta");
    rep.free_part = supported(0);
    rep.structural_supported = true;
    rep.structural_dim = rep.chi.dimension + rep.zeta.dimension;
  } else if (nm.label == "matched_pair") {
    if (g[0][1].is_zero() && g[1][0].is_zero() && g[1][1].is_zero()) {
      rep.case_label += "/single_scaling";
      rep.free_part = unsupported("arbitrary f with f(a1 x, b1 y) = g11 f(x, y); no closed form");
      rep.biadd = unsupported("");
      rep.chi = unsupported("");
      rep.zeta = unsupported("");
      rep.structural_supported = false;
    } else {
      rep.chi = supported(row2.is_zero() ? orbit_dim(a1, row1, S) : 0);
      rep.zeta = supported(col2.is_zero() ? orbit_dim(b1, col1, T) : 0);
      rep.biadd = supported(0, "solutions split as chi + zeta");
      rep.free_part = supported(0);
      rep.structural_supported = true;
      rep.structural_dim = rep.chi.dimension + rep.zeta.dimension;
    }
  } else if (nm.label == "three_nonzero") {
    if (g[0][1].is_zero() && g[1][1].is_zero()) {
      rep.case_label += "/coupled";
      rep.free_part = unsupported("first-variable-additive part couples with chi; no closed form");
      rep.biadd = unsupported("");
      rep.chi = unsupported("");
      rep.zeta = unsupported("");
      rep.structural_supported = false;
    } else {
      rep.chi = supported(s * add_space_dim(f, {{a1, g[0][0]}, {a2, g[1][0]}}), "additive");
      rep.zeta = supported(col2.is_zero() ? orbit_dim(b1, col1, T) : 0);
      rep.biadd = supported(0, "collapses into the additive x component");
      rep.free_part = supported(0);
      rep.structural_supported = true;
      rep.structural_dim = rep.chi.dimension + rep.zeta.dimension;
    }
  } else {  // nondegenerate
    if (f.p() == 2) {
      rep.note = "characteristic 2: structural path unavailable, brute force only";
      rep.biadd = unsupported("");
      rep.chi = unsupported("");
      rep.zeta = unsupported("");
      rep.structural_supported = false;
    } else {
      WitnessSpace ws = intersect_constraints(
          f, {{a1, b1, g[0][0]}, {a1, b2, g[0][1]}, {a2, b1, g[1][0]}, {a2, b2, g[1][1]}});
      rep.biadd = supported(s * t * ws.dimension, "bi-additive");
      rep.chi = supported(s * add_space_dim(f, {{a1, row1}, {a2, row2}}), "additive");
      rep.zeta = supported(t * add_space_dim(f, {{b1, col1}, {b2, col2}}), "additive");
      rep.free_part = supported(0);
      rep.structural_supported = true;
      rep.structural_dim = rep.biadd.dimension + rep.chi.dimension + rep.zeta.dimension;
    }
  }

  if (rep.structural_supported) {
    rep.consistent = (rep.brute_dim > 0) == (rep.structural_dim > 0);
  } else {
    std::size_t known = 0;
    for (const ComponentVerdict* cv : {&rep.biadd, &rep.chi, &rep.zeta, &rep.free_part})
      if (cv->supported) known += cv->dimension;
    rep.consistent = (known == 0) || rep.brute_dim > 0;
  }
  return rep;
}

}  // namespace feq
