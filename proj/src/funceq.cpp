#include "feq/funceq.hpp"

#include <algorithm>
#include <cstring>
#include <random>

#include "funceq_internal.hpp"

namespace feq {

using detail::Ctx;
using detail::FieldTables;
using detail::PointSpace;

namespace detail {

FieldTables FieldTables::build(const Field& f) {
  if (f.order() > 4096) raise(errc::too_large, "field too large for table-driven solving");
  FieldTables ft;
  ft.q = static_cast<std::uint32_t>(f.order());
  ft.add.resize(std::size_t{ft.q} * ft.q);
  ft.mul.resize(std::size_t{ft.q} * ft.q);
  ft.neg.resize(ft.q);
  ft.inv.resize(ft.q, 0);
  std::vector<Elem> elems;
  elems.reserve(ft.q);
  for (std::uint32_t i = 0; i < ft.q; ++i) elems.push_back(f.from_index(i));
  for (std::uint32_t i = 0; i < ft.q; ++i) {
    ft.neg[i] = static_cast<std::uint16_t>((-elems[i]).index());
    if (i) ft.inv[i] = static_cast<std::uint16_t>(elems[i].inv().index());
    for (std::uint32_t j = 0; j < ft.q; ++j) {
      ft.add[std::size_t{i} * ft.q + j] = static_cast<std::uint16_t>((elems[i] + elems[j]).index());
      ft.mul[std::size_t{i} * ft.q + j] = static_cast<std::uint16_t>((elems[i] * elems[j]).index());
    }
  }
  return ft;
}

PointSpace::PointSpace(const Field& f, std::uint32_t d) : q(static_cast<std::uint32_t>(f.order())), dim(d) {
  if (d < 1) raise(errc::bad_parameter_shape, "module dimension must be at least 1");
  size = 1;
  for (std::uint32_t i = 0; i < d; ++i) size *= q;
}

std::uint32_t PointSpace::add(const FieldTables& ft, std::uint32_t x, std::uint32_t y) const {
  std::uint32_t out = 0, mul = 1;
  for (std::uint32_t i = 0; i < dim; ++i) {
    out += mul * ft.a(static_cast<std::uint16_t>(x % q), static_cast<std::uint16_t>(y % q));
    x /= q;
    y /= q;
    mul *= q;
  }
  return out;
}

std::uint32_t PointSpace::scale(const FieldTables& ft, std::uint16_t c, std::uint32_t x) const {
  std::uint32_t out = 0, mul = 1;
  for (std::uint32_t i = 0; i < dim; ++i) {
    out += mul * ft.m(c, static_cast<std::uint16_t>(x % q));
    x /= q;
    mul *= q;
  }
  return out;
}

Ctx Ctx::make(const EquationSpec& eq) {
  Ctx c;
  c.eq = &eq;
  const Field& f = eq.field();
  c.ft = FieldTables::build(f);
  c.px = PointSpace(f, eq.X.dim);
  c.S = c.px.size;
  if (eq.variant != Variant::one_var) {
    if (!(eq.Y.field == f)) raise(errc::field_mismatch, "X and Y must share the field");
    c.py = PointSpace(f, eq.Y.dim);
    c.T = c.py.size;
  }
  c.domain = eq.domain_points();
  c.nfunc = eq.function_count();
  for (const auto& a : eq.alphas) c.ai.push_back(static_cast<std::uint16_t>(a.index()));
  for (const auto& b : eq.betas) c.bi.push_back(static_cast<std::uint16_t>(b.index()));
  for (const auto& row : eq.gammas) {
    c.gi.emplace_back();
    for (const auto& g : row) c.gi.back().push_back(static_cast<std::uint16_t>(g.index()));
  }
  if (eq.variant == Variant::rectangle && f.p() != 2)
    c.half = static_cast<std::uint16_t>(f.from_int(2).inv().index());
  return c;
}

std::uint64_t Ctx::tuple_count() const {
  std::uint64_t total = 1;
  std::uint32_t n = eq->arity;
  for (std::uint32_t i = 0; i < n; ++i) total *= S;
  if (eq->variant != Variant::one_var)
    for (std::uint32_t i = 0; i < n; ++i) total *= T;
  return total;
}

void Ctx::decode_tuple(std::uint64_t code, std::vector<std::uint32_t>& xs, std::vector<std::uint32_t>& ys) const {
  std::uint32_t n = eq->arity;
  xs.resize(n);
  ys.clear();
  for (std::uint32_t i = 0; i < n; ++i) {
    xs[i] = static_cast<std::uint32_t>(code % S);
    code /= S;
  }
  if (eq->variant != Variant::one_var) {
    ys.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      ys[i] = static_cast<std::uint32_t>(code % T);
      code /= T;
    }
  }
}

std::vector<std::pair<std::uint32_t, std::uint16_t>> Ctx::row(const std::vector<std::uint32_t>& xs,
                                                              const std::vector<std::uint32_t>& ys) const {
  // accumulate (function, point) -> coefficient, then pin the origin away
  std::vector<std::pair<std::uint64_t, std::uint16_t>> terms;  // key = func * domain + point
  auto put = [&](std::size_t func, std::uint64_t point, std::uint16_t coeff) {
    if (coeff == 0) return;
    std::uint64_t key = func * domain + point;
    for (auto& [k, c] : terms)
      if (k == key) {
        c = ft.a(c, coeff);
        return;
      }
    terms.emplace_back(key, coeff);
  };
  const std::uint16_t one = 1 % ft.q;
  const std::uint16_t minus_one = ft.neg[one];
  std::uint32_t n = eq->arity;
  switch (eq->variant) {
    case Variant::one_var: {
      std::uint32_t lhs = 0;
      for (std::uint32_t i = 0; i < n; ++i) lhs = px.add(ft, lhs, px.scale(ft, ai[i], xs[i]));
      put(0, lhs, one);
      for (std::uint32_t i = 0; i < n; ++i) put(1 + i, xs[i], minus_one);
      break;
    }
    case Variant::multi_unknown: {
      std::uint32_t lx = 0, ly = 0;
      for (std::uint32_t i = 0; i < n; ++i) lx = px.add(ft, lx, px.scale(ft, ai[i], xs[i]));
      for (std::uint32_t i = 0; i < n; ++i) ly = py.add(ft, ly, py.scale(ft, bi[i], ys[i]));
      put(0, pair_point(lx, ly), one);
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) put(1 + std::size_t{i} * n + j, pair_point(xs[i], ys[j]), minus_one);
      break;
    }
    case Variant::single_unknown_weighted: {
      std::uint32_t lx = 0, ly = 0;
      for (std::uint32_t i = 0; i < n; ++i) lx = px.add(ft, lx, px.scale(ft, ai[i], xs[i]));
      for (std::uint32_t i = 0; i < n; ++i) ly = py.add(ft, ly, py.scale(ft, bi[i], ys[i]));
      put(0, pair_point(lx, ly), one);
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) put(0, pair_point(xs[i], ys[j]), ft.neg[gi[i][j]]);
      break;
    }
    case Variant::biadditivity: {
      put(0, pair_point(px.add(ft, xs[0], xs[1]), py.add(ft, ys[0], ys[1])), one);
      for (std::uint32_t i = 0; i < 2; ++i)
        for (std::uint32_t j = 0; j < 2; ++j) put(0, pair_point(xs[i], ys[j]), minus_one);
      break;
    }
    case Variant::rectangle: {
      if (eq->field().p() == 2) {
        for (std::uint32_t i = 0; i < 2; ++i)
          for (std::uint32_t j = 0; j < 2; ++j) put(0, pair_point(xs[i], ys[j]), one);
      } else {
        std::uint32_t mx = px.scale(ft, half, px.add(ft, xs[0], xs[1]));
        std::uint32_t my = py.scale(ft, half, py.add(ft, ys[0], ys[1]));
        std::uint16_t four = static_cast<std::uint16_t>(eq->field().from_int(4).index());
        put(0, pair_point(mx, my), four);
        for (std::uint32_t i = 0; i < 2; ++i)
          for (std::uint32_t j = 0; j < 2; ++j) put(0, pair_point(xs[i], ys[j]), minus_one);
      }
      break;
    }
    case Variant::cauchy_xy: {
      put(0, pair_point(px.add(ft, xs[0], xs[1]), py.add(ft, ys[0], ys[1])), one);
      put(1, pair_point(xs[0], ys[0]), minus_one);
      put(2, pair_point(xs[1], ys[1]), minus_one);
      break;
    }
  }
  std::vector<std::pair<std::uint32_t, std::uint16_t>> out;
  out.reserve(terms.size());
  for (auto& [key, c] : terms) {
    if (c == 0) continue;
    std::uint64_t point = key % domain;
    if (point == 0) continue;  // pinned to zero
    std::uint64_t func = key / domain;
    out.emplace_back(static_cast<std::uint32_t>(func * (domain - 1) + (point - 1)), c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint16_t Ctx::residual(const std::vector<std::pair<std::uint32_t, std::uint16_t>>& row,
                            const Assignment& a) const {
  std::uint16_t acc = 0;
  for (auto [u, c] : row) {
    std::uint64_t func = u / (domain - 1);
    std::uint64_t point = u % (domain - 1) + 1;
    acc = ft.a(acc, ft.m(c, a[func][point]));
  }
  return acc;
}

std::uint64_t mult_order(const Elem& c) {
  if (c.is_zero()) raise(errc::zero_parameter, "order of zero");
  Elem x = c;
  Elem one = c.field().one();
  std::uint64_t m = 1;
  while (!(x == one)) {
    x = x * c;
    ++m;
  }
  return m;
}

}  // namespace detail

// --- EquationSpec ---------------------------------------------------------------

std::uint64_t ModuleSpace::points() const {
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < dim; ++i) n *= field.order();
  return n;
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::one_var: return "one_var";
    case Variant::multi_unknown: return "multi_unknown";
    case Variant::single_unknown_weighted: return "single_unknown_weighted";
    case Variant::biadditivity: return "biadditivity";
    case Variant::rectangle: return "rectangle";
    case Variant::cauchy_xy: return "cauchy_xy";
  }
  return "?";
}

Variant variant_from_name(const std::string& s) {
  for (Variant v : {Variant::one_var, Variant::multi_unknown, Variant::single_unknown_weighted,
                    Variant::biadditivity, Variant::rectangle, Variant::cauchy_xy})
    if (s == variant_name(v)) return v;
  raise(errc::parse_error, "unknown variant '" + s + "'");
}

std::size_t EquationSpec::function_count() const {
  switch (variant) {
    case Variant::one_var: return arity + 1;
    case Variant::multi_unknown: return 1 + std::size_t{arity} * arity;
    case Variant::single_unknown_weighted: return 1;
    case Variant::biadditivity: return 1;
    case Variant::rectangle: return 1;
    case Variant::cauchy_xy: return 3;
  }
  return 0;
}

std::uint64_t EquationSpec::domain_points() const {
  return variant == Variant::one_var ? X.points() : X.points() * Y.points();
}

namespace {

void check_coeffs(const Field& f, const std::vector<Elem>& v, std::size_t n, const char* what) {
  if (v.size() != n) raise(errc::bad_parameter_shape, std::string(what) + " must have length n");
  for (const auto& e : v)
    if (!e.valid() || !(e.field() == f)) raise(errc::field_mismatch, std::string(what) + " field mismatch");
}

}  // namespace

EquationSpec EquationSpec::one_var(ModuleSpace X, std::vector<Elem> alphas) {
  EquationSpec eq;
  eq.variant = Variant::one_var;
  if (alphas.size() < 2) raise(errc::bad_parameter_shape, "arity must be at least 2");
  eq.arity = static_cast<std::uint32_t>(alphas.size());
  check_coeffs(X.field, alphas, alphas.size(), "alphas");
  eq.alphas = std::move(alphas);
  eq.X = X;
  eq.Y = ModuleSpace{X.field, 1};
  return eq;
}

EquationSpec EquationSpec::multi_unknown(ModuleSpace X, ModuleSpace Y, std::vector<Elem> alphas,
                                         std::vector<Elem> betas) {
  EquationSpec eq;
  eq.variant = Variant::multi_unknown;
  if (alphas.size() < 2 || alphas.size() != betas.size())
    raise(errc::bad_parameter_shape, "coefficient vectors must share a length of at least 2");
  eq.arity = static_cast<std::uint32_t>(alphas.size());
  check_coeffs(X.field, alphas, alphas.size(), "alphas");
  check_coeffs(X.field, betas, betas.size(), "betas");
  if (!(X.field == Y.field)) raise(errc::field_mismatch, "X and Y must share the field");
  eq.alphas = std::move(alphas);
  eq.betas = std::move(betas);
  eq.X = std::move(X);
  eq.Y = std::move(Y);
  return eq;
}

EquationSpec EquationSpec::single_unknown(ModuleSpace X, ModuleSpace Y, std::vector<Elem> alphas,
                                          std::vector<Elem> betas, std::vector<std::vector<Elem>> gammas) {
  EquationSpec eq = multi_unknown(std::move(X), std::move(Y), std::move(alphas), std::move(betas));
  eq.variant = Variant::single_unknown_weighted;
  if (gammas.size() != eq.arity) raise(errc::bad_parameter_shape, "gamma matrix must be n x n");
  for (const auto& row : gammas) check_coeffs(eq.field(), row, eq.arity, "gammas");
  eq.gammas = std::move(gammas);
  return eq;
}

namespace {
EquationSpec pair_preset(Variant v, ModuleSpace X, ModuleSpace Y) {
  const Field f = X.field;
  EquationSpec eq = EquationSpec::multi_unknown(std::move(X), std::move(Y), {f.one(), f.one()},
                                                {f.one(), f.one()});
  eq.variant = v;
  return eq;
}
}  // namespace

EquationSpec EquationSpec::preset_biadditivity(ModuleSpace X, ModuleSpace Y) {
  return pair_preset(Variant::biadditivity, std::move(X), std::move(Y));
}

EquationSpec EquationSpec::preset_rectangle(ModuleSpace X, ModuleSpace Y) {
  return pair_preset(Variant::rectangle, std::move(X), std::move(Y));
}

EquationSpec EquationSpec::preset_cauchy(ModuleSpace X, ModuleSpace Y) {
  return pair_preset(Variant::cauchy_xy, std::move(X), std::move(Y));
}

// --- system assembly --------------------------------------------------------------

LinearSystem build_system(const EquationSpec& eq, const Limits& limits) {
  Ctx c = Ctx::make(eq);
  LinearSystem sys;
  sys.functions = c.nfunc;
  sys.domain = c.domain;
  sys.unknowns = c.nfunc * (c.domain - 1);
  if (sys.unknowns > limits.max_unknowns) raise(errc::too_large, "unknown count exceeds the configured bound");
  std::uint64_t total = c.tuple_count();
  if (total > limits.max_rows) raise(errc::too_large, "equation instance count exceeds the configured bound");
  sys.rows.reserve(total);
  std::vector<std::uint32_t> xs, ys;
  for (std::uint64_t code = 0; code < total; ++code) {
    c.decode_tuple(code, xs, ys);
    sys.rows.push_back(c.row(xs, ys));
  }
  return sys;
}

// --- kernel of the system ------------------------------------------------------------

namespace {

// Kernel by iterated constraint intersection.  The basis is held as an
// N x dim table T with T[k][j] = (j-th basis vector)[k]; a sparse row is
// dotted against all basis vectors at once, and a non-orthogonal basis vector
// is eliminated in place.
std::vector<std::vector<std::uint16_t>> system_kernel(const LinearSystem& sys, const FieldTables& ft) {
  const std::size_t N = sys.unknowns;
  const std::uint32_t q = ft.q;
  std::vector<std::uint16_t> T(N * N, 0);
  for (std::size_t k = 0; k < N; ++k) T[k * N + k] = 1;
  std::size_t dim = N;
  std::vector<std::uint16_t> acc(N), nf(N);
  const std::uint16_t* addt = ft.add.data();
  for (const auto& row : sys.rows) {
    if (row.empty() || dim == 0) continue;
    std::fill(acc.begin(), acc.begin() + dim, 0);
    for (auto [k, cf] : row) {
      const std::uint16_t* mrow = ft.mul.data() + std::size_t{cf} * q;
      const std::uint16_t* Tk = T.data() + std::size_t{k} * N;
      for (std::size_t j = 0; j < dim; ++j) acc[j] = addt[std::size_t{acc[j]} * q + mrow[Tk[j]]];
    }
    std::size_t piv = dim;
    for (std::size_t j = 0; j < dim; ++j)
      if (acc[j]) {
        piv = j;
        break;
      }
    if (piv == dim) continue;
    const std::uint16_t pinv = ft.inv[acc[piv]];
    for (std::size_t j = 0; j < dim; ++j) nf[j] = ft.neg[ft.mul[std::size_t{acc[j]} * q + pinv]];
    for (std::size_t k = 0; k < N; ++k) {
      std::uint16_t* Tk = T.data() + k * N;
      const std::uint16_t pv = Tk[piv];
      if (pv == 0) {
        std::memmove(Tk + piv, Tk + piv + 1, (dim - piv - 1) * sizeof(std::uint16_t));
        continue;
      }
      const std::uint16_t* mpv = ft.mul.data() + std::size_t{pv} * q;
      std::size_t w = 0;
      for (std::size_t j = 0; j < dim; ++j) {
        if (j == piv) continue;
        Tk[w++] = addt[std::size_t{Tk[j]} * q + mpv[nf[j]]];
      }
    }
    --dim;
  }
  // canonical form: reduced echelon over the unknown order
  std::vector<std::vector<std::uint16_t>> rows(dim, std::vector<std::uint16_t>(N));
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < N; ++k) rows[j][k] = T[k * N + j];
  std::size_t r = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  for (std::size_t col = 0; col < N && r < dim; ++col) {
    std::size_t sel = r;
    while (sel < dim && rows[sel][col] == 0) ++sel;
    if (sel == dim) continue;
    std::swap(rows[r], rows[sel]);
    std::uint16_t piv_inv = ft.inv[rows[r][col]];
    for (std::size_t k = col; k < N; ++k) rows[r][k] = ft.m(rows[r][k], piv_inv);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == r || rows[i][col] == 0) continue;
      std::uint16_t c = rows[i][col];
      for (std::size_t k = col; k < N; ++k) rows[i][k] = ft.s(rows[i][k], ft.m(c, rows[r][k]));
    }
    pivots.emplace_back(r, col);
    ++r;
  }
  return rows;
}

}  // namespace

bool satisfies(const EquationSpec& eq, const Assignment& a) {
  Ctx c = Ctx::make(eq);
  if (a.size() != c.nfunc) raise(errc::bad_parameter_shape, "wrong function count");
  for (const auto& t : a) {
    if (t.size() != c.domain) raise(errc::bad_parameter_shape, "wrong table size");
    if (t[0] != 0) return false;
  }
  std::vector<std::uint32_t> xs, ys;
  std::uint64_t total = c.tuple_count();
  for (std::uint64_t code = 0; code < total; ++code) {
    c.decode_tuple(code, xs, ys);
    if (c.residual(c.row(xs, ys), a) != 0) return false;
  }
  return true;
}

SolutionSpace solution_space(const EquationSpec& eq, const Limits& limits) {
  Ctx c = Ctx::make(eq);
  LinearSystem sys = build_system(eq, limits);
  auto vectors = system_kernel(sys, c.ft);
  SolutionSpace out;
  out.dimension = vectors.size();
  std::uint64_t dom = c.domain;
  for (const auto& v : vectors) {
    Assignment a(c.nfunc, ValueTable(dom, 0));
    for (std::size_t u = 0; u < v.size(); ++u) {
      if (v[u] == 0) continue;
      a[u / (dom - 1)][u % (dom - 1) + 1] = v[u];
    }
    out.basis.push_back(std::move(a));
  }
  // spot re-verification against random substitution tuples
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_int_distribution<std::uint64_t> pick(0, c.tuple_count() - 1);
  std::vector<std::uint32_t> xs, ys;
  for (const auto& a : out.basis)
    for (int trial = 0; trial < 100; ++trial) {
      c.decode_tuple(pick(rng), xs, ys);
      if (c.residual(c.row(xs, ys), a) != 0)
        raise(errc::not_a_solution, "internal: kernel vector fails the equation");
    }
  return out;
}

// --- predicted dimensions --------------------------------------------------------------

namespace detail {

Norm classify(const EquationSpec& eq) {
  if (eq.variant != Variant::multi_unknown && eq.variant != Variant::single_unknown_weighted)
    raise(errc::unsupported_case, "zero-pattern classification needs a two-variable equation");
  if (eq.arity != 2) raise(errc::unsupported_case, "direct structure results cover arity 2 only");
  Norm nm;
  auto nz = [](const Elem& e) { return !e.is_zero(); };
  int ka = nz(eq.alphas[0]) + nz(eq.alphas[1]);
  int kb = nz(eq.betas[0]) + nz(eq.betas[1]);
  if ((ka == 0 && kb == 1) || (ka == 1 && kb == 0)) {
    // canonical: x side all zero, non-zero coefficient in the second y slot
    nm.swap_xy = (ka == 1);
    const auto& betas = nm.swap_xy ? eq.alphas : eq.betas;
    nm.swap_y = nz(betas[0]);
    nm.label = "single_nonzero";
    return nm;
  }
  if ((ka == 2 && kb == 0) || (ka == 0 && kb == 2)) {
    nm.swap_xy = (ka == 0);
    nm.label = "one_side";
    return nm;
  }
  if (ka == 1 && kb == 1) {
    nm.swap_x = nz(eq.alphas[1]);
    nm.swap_y = nz(eq.betas[1]);
    nm.label = "matched_pair";
    return nm;
  }
  if ((ka == 2 && kb == 1) || (ka == 1 && kb == 2)) {
    nm.swap_xy = (ka == 1);
    const auto& betas = nm.swap_xy ? eq.alphas : eq.betas;
    nm.swap_y = !nz(betas[0]);  // zero coefficient goes to the second slot
    nm.label = "three_nonzero";
    return nm;
  }
  nm.label = (ka == 0 && kb == 0) ? "all_zero" : "nondegenerate";
  return nm;
}

EquationSpec normalized_spec(const EquationSpec& eq, const Norm& nm) {
  std::vector<Elem> al = eq.alphas, be = eq.betas;
  ModuleSpace NX = eq.X, NY = eq.Y;
  if (nm.swap_xy) {
    std::swap(al, be);
    std::swap(NX, NY);
  }
  if (nm.swap_x) std::swap(al[0], al[1]);
  if (nm.swap_y) std::swap(be[0], be[1]);
  EquationSpec out = EquationSpec::multi_unknown(NX, NY, al, be);
  out.variant = eq.variant;
  if (eq.variant == Variant::single_unknown_weighted) out.gammas = normalized_gammas(eq, nm);
  return out;
}

std::vector<std::vector<Elem>> normalized_gammas(const EquationSpec& eq, const Norm& nm) {
  auto g = eq.gammas;
  if (nm.swap_xy) {
    auto t = g;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) t[i][j] = g[j][i];
    g = t;
  }
  if (nm.swap_x) std::swap(g[0], g[1]);
  if (nm.swap_y)
    for (int i = 0; i < 2; ++i) std::swap(g[i][0], g[i][1]);
  return g;
}

namespace {

// function id of f_{ij} in a two-variable assignment (f itself is id 0)
std::size_t fid(std::size_t i, std::size_t j) { return 1 + i * 2 + j; }

}  // namespace

Assignment push_assignment(const EquationSpec& eq, const Norm& nm, const Assignment& a) {
  Ctx c = Ctx::make(eq);
  std::uint64_t S = c.S, T = c.T;
  std::size_t sx[2] = {nm.swap_x ? std::size_t{1} : 0, nm.swap_x ? std::size_t{0} : 1};
  std::size_t sy[2] = {nm.swap_y ? std::size_t{1} : 0, nm.swap_y ? std::size_t{0} : 1};
  Assignment out(a.size());
  std::uint64_t Sn = nm.swap_xy ? T : S;
  std::uint64_t Tn = nm.swap_xy ? S : T;
  auto old_table = [&](std::size_t i, std::size_t j) -> const ValueTable& {
    // new f_{ij} = old f_{sx(i), sy(j)}, transposed when the sides swap
    return nm.swap_xy ? a[fid(sy[j], sx[i])] : a[fid(sx[i], sy[j])];
  };
  auto transform = [&](const ValueTable& src) {
    ValueTable dst(Sn * Tn);
    for (std::uint64_t u = 0; u < Sn; ++u)
      for (std::uint64_t v = 0; v < Tn; ++v) dst[u * Tn + v] = nm.swap_xy ? src[v * T + u] : src[u * T + v];
    return dst;
  };
  out[0] = transform(a[0]);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out[fid(i, j)] = transform(old_table(i, j));
  return out;
}

Assignment pull_assignment(const EquationSpec& eq, const Norm& nm, const Assignment& b) {
  Ctx c = Ctx::make(eq);
  std::uint64_t S = c.S, T = c.T;
  auto sigma = [&](std::size_t i) { return nm.swap_x ? 1 - i : i; };
  auto tau = [&](std::size_t j) { return nm.swap_y ? 1 - j : j; };
  auto transform_back = [&](const ValueTable& src) {
    ValueTable dst(S * T);
    for (std::uint64_t x = 0; x < S; ++x)
      for (std::uint64_t y = 0; y < T; ++y)
        dst[x * T + y] = nm.swap_xy ? src[y * S + x] : src[x * T + y];
    return dst;
  };
  Assignment out(b.size());
  out[0] = transform_back(b[0]);
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q) {
      std::size_t i = nm.swap_xy ? sigma(q) : sigma(p);
      std::size_t j = nm.swap_xy ? tau(p) : tau(q);
      out[fid(p, q)] = transform_back(b[fid(i, j)]);
    }
  return out;
}

}  // namespace detail

Predicted predicted_dim(const EquationSpec& eq) {
  const Field& f = eq.field();
  std::uint64_t nf = f.degree();
  Predicted out;
  auto add_part = [&](const std::string& name, std::size_t d) {
    out.parts.emplace_back(name, d);
    out.dimension += d;
  };
  if (eq.variant == Variant::one_var) {
    std::uint64_t S = eq.X.points();
    std::size_t k = 0;
    for (const auto& a : eq.alphas)
      if (!a.is_zero()) ++k;
    if (k == 0) {
      out.label = "all_coefficients_zero";
      add_part("free f", S - 1);
    } else if (k == 1) {
      out.label = "single_coefficient";
      add_part("free f", S - 1);
    } else {
      out.label = "additive";
      add_part("additive chi", eq.X.dim * nf);
    }
    return out;
  }
  std::uint64_t S = eq.X.points(), T = eq.Y.points();
  std::uint64_t s = eq.X.dim, t = eq.Y.dim;
  if (eq.variant == Variant::biadditivity) {
    if (f.p() == 2) raise(errc::unsupported_case, "bi-additivity structure needs characteristic != 2");
    out.label = "biadditivity";
    add_part("bi-additive A", s * t * nf * nf);
    return out;
  }
  if (eq.variant == Variant::rectangle) {
    if (f.p() == 2) {
      out.label = "rectangle_char2";
      add_part("chi", S - 1);
      add_part("zeta", T - 1);
    } else {
      out.label = "rectangle";
      add_part("bi-additive A", s * t * nf * nf);
      add_part("additive chi", s * nf);
      add_part("additive zeta", t * nf);
    }
    return out;
  }
  if (eq.variant == Variant::cauchy_xy) {
    out.label = "cauchy";
    add_part("additive chi", s * nf);
    add_part("additive zeta", t * nf);
    return out;
  }
  if (eq.variant != Variant::multi_unknown)
    raise(errc::unsupported_case, "predicted dimension covers the unweighted equation and presets");
  detail::Norm nm = detail::classify(eq);
  if (nm.swap_xy) {
    std::swap(S, T);
    std::swap(s, t);
  }
  out.label = nm.label;
  if (nm.label == "all_zero") {
    add_part("free f", S * T - 1);
    add_part("chi_11, chi_21", 2 * (S - 1));
    add_part("zeta_11, zeta_12", 2 * (T - 1));
  } else if (nm.label == "single_nonzero") {
    add_part("free f off the axis", (S - 1) * T);
    add_part("chi_11, chi_21", 2 * (S - 1));
    add_part("zeta_11, zeta_12, zeta_22", 3 * (T - 1));
  } else if (nm.label == "one_side") {
    add_part("additive chi", s * nf);
    add_part("free f off the slice", S * (T - 1));
    add_part("chi_11, chi_21", 2 * (S - 1));
    add_part("zeta_11, zeta_12", 2 * (T - 1));
  } else if (nm.label == "matched_pair") {
    add_part("free f_11", S * T - 1);
    add_part("chi_12, chi_21", 2 * (S - 1));
    add_part("zeta_21, zeta_12", 2 * (T - 1));
  } else if (nm.label == "three_nonzero") {
    add_part("first-variable-additive A", s * nf * T);
    add_part("chi_12, chi_22", 2 * (S - 1));
    add_part("zeta_11, zeta_21, zeta_12", 3 * (T - 1));
  } else {  // nondegenerate
    if (f.p() == 2) raise(errc::unsupported_case, "nondegenerate structure needs characteristic != 2");
    add_part("bi-additive A", s * t * nf * nf);
    add_part("additive chi", s * nf);
    add_part("additive zeta", t * nf);
    add_part("chi_11, chi_21", 2 * (S - 1));
    add_part("zeta_11, zeta_12", 2 * (T - 1));
  }
  return out;
}

}  // namespace feq
