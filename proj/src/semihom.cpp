#include "feq/semihom.hpp"

#include <algorithm>

namespace feq {

namespace {

std::uint64_t pow_u64(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void require_enumerable(const Field& f) {
  if (f.order() > max_enumeration()) raise(errc::field_too_large, "field exceeds the enumeration bound");
}

Elem embed(const Field& big, const Elem& small) {
  // prime-subfield element into the extension
  return big.from_int(static_cast<std::int64_t>(small.coeffs()[0]));
}

}  // namespace

std::vector<MatFF> translation_matrices(const Field& f) {
  Field zp(f.p(), 1);
  std::uint32_t n = f.degree();
  std::vector<MatFF> out;
  out.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    Elem bi = f.gen().pow(i);
    MatFF M(zp, n, n);
    for (std::uint32_t k = 0; k < n; ++k) {
      Elem prod = bi * f.gen().pow(k);
      for (std::uint32_t j = 0; j < n; ++j)
        M.set(j, k, zp.from_int(static_cast<std::int64_t>(prod.coeffs()[j])));
    }
    out.push_back(std::move(M));
  }
  return out;
}

OperatorRep operator_matrix(const Field& f, const Elem& alpha, const Elem& beta) {
  if (!(alpha.field() == f) || !(beta.field() == f)) raise(errc::field_mismatch, "parameter field mismatch");
  std::uint32_t n = f.degree();
  auto trans = translation_matrices(f);
  // m[i](r, k) as plain integers
  auto m = [&](std::uint32_t i, std::uint32_t r, std::uint32_t k) -> std::uint64_t {
    return trans[i].at(r, k).coeffs()[0];
  };
  const auto& ac = alpha.coeffs();
  const auto& bc = beta.coeffs();
  MatFF P(f, std::size_t{n} * n, std::size_t{n} * n);
  for (std::uint32_t k = 0; k < n; ++k)
    for (std::uint32_t l = 0; l < n; ++l)
      for (std::uint32_t r = 0; r < n; ++r)
        for (std::uint32_t s = 0; s < n; ++s) {
          std::uint64_t acc = 0;
          for (std::uint32_t i = 0; i < n; ++i) {
            if (ac[i] == 0) continue;
            for (std::uint32_t j = 0; j < n; ++j) {
              if (bc[j] == 0) continue;
              acc = (acc + std::uint64_t{ac[i]} * bc[j] % f.p() * (m(i, r, k) * m(j, s, l) % f.p())) % f.p();
            }
          }
          P.set(std::size_t{k} * n + l, std::size_t{r} * n + s, f.from_int(static_cast<std::int64_t>(acc)));
        }
  return OperatorRep{f, alpha, beta, std::move(P)};
}

std::vector<std::pair<Elem, std::size_t>> biadd_gammas(const Field& f, const Elem& alpha, const Elem& beta) {
  if (alpha.is_zero() || beta.is_zero()) raise(errc::zero_parameter, "alpha and beta must be non-zero");
  OperatorRep rep = operator_matrix(f, alpha, beta);
  auto roots = roots_in_field(char_poly(rep.P));
  std::vector<std::pair<Elem, std::size_t>> out;
  for (auto& [g, mult] : roots)
    if (!g.is_zero()) out.emplace_back(g, mult);
  return out;
}

std::optional<BiAddWitness> biadd_decide(const Field& f, const Elem& alpha, const Elem& beta,
                                         const Elem& gamma) {
  if (alpha.is_zero() || beta.is_zero()) raise(errc::zero_parameter, "alpha and beta must be non-zero");
  if (gamma.is_zero()) raise(errc::zero_parameter, "gamma must be non-zero");
  OperatorRep rep = operator_matrix(f, alpha, beta);
  KernelBasis eig = eigenspace(rep.P, gamma);
  if (eig.vectors.empty()) return std::nullopt;
  std::uint32_t n = f.degree();
  MatFF B(f, n, n);
  const auto& v = eig.vectors.front();
  for (std::uint32_t k = 0; k < n; ++k)
    for (std::uint32_t l = 0; l < n; ++l) B.set(k, l, v[std::size_t{k} * n + l]);
  return BiAddWitness{f, alpha, beta, gamma, std::move(B)};
}

namespace {

// B extended Z_p-bilinearly from basis values: B(u, v) = sum u_k v_l B(k, l).
Elem biadd_eval(const Field& f, const MatFF& B, const Elem& u, const Elem& v) {
  Elem acc = f.zero();
  const auto& uc = u.coeffs();
  const auto& vc = v.coeffs();
  std::uint32_t n = f.degree();
  for (std::uint32_t k = 0; k < n; ++k) {
    if (uc[k] == 0) continue;
    for (std::uint32_t l = 0; l < n; ++l) {
      if (vc[l] == 0) continue;
      Elem c = f.from_int(static_cast<std::int64_t>(std::uint64_t{uc[k]} * vc[l] % f.p()));
      acc = acc + c * B.at(k, l);
    }
  }
  return acc;
}

}  // namespace

bool biadd_verify(const BiAddWitness& w) {
  require_enumerable(w.field);
  const Field& f = w.field;
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    Elem u = f.from_index(i);
    for (std::uint64_t j = 0; j < f.order(); ++j) {
      Elem v = f.from_index(j);
      Elem lhs = biadd_eval(f, w.B, w.alpha * u, w.beta * v);
      Elem rhs = w.gamma * biadd_eval(f, w.B, u, v);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

Elem apply_zp_linear(const Field& f, const MatFF& L, const Elem& u) {
  std::uint32_t n = f.degree();
  std::vector<std::uint32_t> out(n, 0);
  const auto& uc = u.coeffs();
  for (std::uint32_t j = 0; j < n; ++j) {
    if (uc[j] == 0) continue;
    for (std::uint32_t i = 0; i < n; ++i) {
      std::uint64_t add = std::uint64_t{L.at(i, j).coeffs()[0]} * uc[j] % f.p();
      out[i] = static_cast<std::uint32_t>((out[i] + add) % f.p());
    }
  }
  return f.from_coeffs(std::move(out));
}

std::optional<AddWitness> add_decide(const Field& f, const Elem& alpha, const Elem& beta) {
  if (alpha.is_zero() || beta.is_zero()) raise(errc::zero_parameter, "alpha and beta must be non-zero");
  if (!(minimal_poly(alpha) == minimal_poly(beta))) return std::nullopt;

  Field zp(f.p(), 1);
  std::uint32_t n = f.degree();
  std::uint32_t d = static_cast<std::uint32_t>(minimal_poly(alpha).degree());

  // Z_p-coordinates of the products alpha^j * e_i for the chosen complement
  // basis e_1 = 1, e_2, ... of K over Z_p(alpha); greedy scan in index order.
  std::vector<Elem> span_elems;   // alpha^j * e_i, column order (i, j)
  std::vector<Elem> complement;   // e_i
  auto coords_mat = [&](const std::vector<Elem>& gens) {
    MatFF M(zp, n, gens.size());
    for (std::size_t c = 0; c < gens.size(); ++c)
      for (std::uint32_t r = 0; r < n; ++r)
        M.set(r, c, zp.from_int(static_cast<std::int64_t>(gens[c].coeffs()[r])));
    return M;
  };
  auto in_span = [&](const Elem& u) {
    if (span_elems.empty()) return u.is_zero();
    std::vector<Elem> rhs(n, zp.zero());
    for (std::uint32_t r = 0; r < n; ++r) rhs[r] = zp.from_int(static_cast<std::int64_t>(u.coeffs()[r]));
    return solve(coords_mat(span_elems), rhs).has_value();
  };
  for (std::uint64_t idx = 1; idx < f.order() && span_elems.size() < n; ++idx) {
    Elem cand = f.from_index(idx);
    if (in_span(cand)) continue;
    complement.push_back(cand);
    for (std::uint32_t j = 0; j < d; ++j) span_elems.push_back(alpha.pow(j) * cand);
  }

  // a(x): solve x = sum_{i,j} lambda_{i,j} alpha^j e_i, then map the e_1
  // component through alpha^j |-> beta^j and drop the rest.
  MatFF basis_mat = coords_mat(span_elems);
  MatFF L(zp, n, n);
  for (std::uint32_t k = 0; k < n; ++k) {
    Elem x = f.gen().pow(k);
    std::vector<Elem> rhs(n, zp.zero());
    for (std::uint32_t r = 0; r < n; ++r) rhs[r] = zp.from_int(static_cast<std::int64_t>(x.coeffs()[r]));
    auto lambda = solve(basis_mat, rhs);
    if (!lambda) raise(errc::not_a_subfield, "semi-linear extension basis failed to span");
    Elem val = f.zero();
    for (std::uint32_t j = 0; j < d; ++j)
      val = val + embed(f, (*lambda)[j]) * beta.pow(j);
    for (std::uint32_t r = 0; r < n; ++r)
      L.set(r, k, zp.from_int(static_cast<std::int64_t>(val.coeffs()[r])));
  }
  AddWitness w{f, alpha, beta, std::move(L)};
  return w;
}

bool add_verify(const AddWitness& w) {
  require_enumerable(w.field);
  const Field& f = w.field;
  if (w.L.is_zero()) return false;
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    Elem x = f.from_index(i);
    if (!(apply_zp_linear(f, w.L, w.alpha * x) == w.beta * apply_zp_linear(f, w.L, x))) return false;
  }
  return true;
}

HomogeneityField homogeneity_field(const Field& f, const MatFF& L) {
  require_enumerable(f);
  std::uint32_t n = f.degree();
  HomogeneityField h;
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    Elem alpha = f.from_index(i);
    bool ok = true;
    for (std::uint32_t k = 0; k < n && ok; ++k) {
      Elem x = f.gen().pow(k);
      ok = apply_zp_linear(f, L, alpha * x) == alpha * apply_zp_linear(f, L, x);
    }
    if (ok) h.members.push_back(alpha);
  }
  // closure checks: subtraction and division never leave the set
  auto member = [&](const Elem& u) {
    return std::any_of(h.members.begin(), h.members.end(), [&](const Elem& m) { return m == u; });
  };
  for (const auto& u : h.members)
    for (const auto& v : h.members) {
      if (!member(u - v)) raise(errc::not_a_subfield, "homogeneity set not closed under subtraction");
      if (!v.is_zero() && !member(u / v)) raise(errc::not_a_subfield, "homogeneity set not closed under division");
    }
  std::uint64_t size = h.members.size();
  std::uint32_t d = 0;
  std::uint64_t pd = 1;
  while (pd < size) {
    pd *= f.p();
    ++d;
  }
  if (pd != size || d == 0 || f.degree() % d != 0)
    raise(errc::not_a_subfield, "homogeneity set size is not a subfield order");
  // membership must match the zeros of x^{p^d} - x
  for (const auto& u : h.members)
    if (!(u.pow(pow_u64(f.p(), d)) == u)) raise(errc::not_a_subfield, "member fails the subfield equation");
  h.degree = d;
  return h;
}

WitnessSpace intersect_constraints(const Field& f, const std::vector<ConstraintTriple>& constraints) {
  std::uint32_t n = f.degree();
  std::size_t nn = std::size_t{n} * n;
  for (const auto& c : constraints)
    if (c.alpha.is_zero() || c.beta.is_zero()) raise(errc::zero_parameter, "alpha and beta must be non-zero");
  MatFF stacked(f, std::max<std::size_t>(1, constraints.size() * nn), nn);
  for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
    OperatorRep rep = operator_matrix(f, constraints[ci].alpha, constraints[ci].beta);
    MatFF block = rep.P - MatFF::identity(f, nn).scalar_mul(constraints[ci].gamma);
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = 0; j < nn; ++j) stacked.set(ci * nn + i, j, block.at(i, j));
  }
  KernelBasis kb = kernel(stacked);
  WitnessSpace ws;
  ws.dimension = kb.dimension();
  for (const auto& v : kb.vectors) {
    MatFF B(f, n, n);
    for (std::uint32_t k = 0; k < n; ++k)
      for (std::uint32_t l = 0; l < n; ++l) B.set(k, l, v[std::size_t{k} * n + l]);
    ws.basis.push_back(std::move(B));
  }
  return ws;
}

WitnessSpace additive_constraint_space(const Field& f, const std::vector<AddConstraint>& constraints) {
  for (const auto& c : constraints)
    if (c.alpha.is_zero()) raise(errc::zero_parameter, "alpha must be non-zero");
  Field zp(f.p(), 1);
  std::uint32_t n = f.degree();
  std::size_t nn = std::size_t{n} * n;
  // multiplication-by-c matrix over Z_p
  auto mult_mat = [&](const Elem& c) {
    MatFF M(zp, n, n);
    for (std::uint32_t k = 0; k < n; ++k) {
      Elem prod = c * f.gen().pow(k);
      for (std::uint32_t r = 0; r < n; ++r)
        M.set(r, k, zp.from_int(static_cast<std::int64_t>(prod.coeffs()[r])));
    }
    return M;
  };
  // unknowns L[r][s] at index r*n+s; rows demand L M_alpha - M_beta L = 0
  MatFF sys(zp, std::max<std::size_t>(1, constraints.size() * nn), nn);
  for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
    MatFF Ma = mult_mat(constraints[ci].alpha);
    MatFF Mb = mult_mat(constraints[ci].beta);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        std::size_t row = ci * nn + std::size_t{i} * n + j;
        for (std::uint32_t s = 0; s < n; ++s)
          sys.set(row, std::size_t{i} * n + s, sys.at(row, std::size_t{i} * n + s) + Ma.at(s, j));
        for (std::uint32_t r = 0; r < n; ++r)
          sys.set(row, std::size_t{r} * n + j, sys.at(row, std::size_t{r} * n + j) - Mb.at(i, r));
      }
  }
  KernelBasis kb = kernel(sys);
  WitnessSpace ws;
  ws.dimension = kb.dimension();
  for (const auto& v : kb.vectors) {
    MatFF L(zp, n, n);
    for (std::uint32_t r = 0; r < n; ++r)
      for (std::uint32_t s = 0; s < n; ++s) L.set(r, s, v[std::size_t{r} * n + s]);
    ws.basis.push_back(std::move(L));
  }
  return ws;
}

}  // namespace feq
