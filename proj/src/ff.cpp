#include "feq/ff.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>

namespace feq {

namespace {

std::atomic<std::uint64_t> g_max_enum{std::uint64_t{1} << 20};

// --- polynomial arithmetic over Z_p on plain coefficient vectors -----------
// Used for modulus selection and element reduction; ascending order, not
// necessarily normalized.

using ZpPoly = std::vector<std::uint32_t>;

void zp_trim(ZpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZpPoly zp_mul(const ZpPoly& f, const ZpPoly& g, std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  ZpPoly r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{f[i]} * g[j]) % p);
  }
  zp_trim(r);
  return r;
}

// f mod g, g non-zero with invertible leading coefficient.
ZpPoly zp_mod(ZpPoly f, const ZpPoly& g, std::uint64_t p) {
  zp_trim(f);
  std::uint64_t lg = g.back();
  // leading coefficient inverse mod p
  std::uint64_t linv = 1;
  {
    std::int64_t t0 = 0, t1 = 1;
    std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(lg);
    while (r1 != 0) {
      std::int64_t qq = r0 / r1;
      std::int64_t tmp = r0 - qq * r1;
      r0 = r1;
      r1 = tmp;
      tmp = t0 - qq * t1;
      t0 = t1;
      t1 = tmp;
    }
    linv = static_cast<std::uint64_t>((t0 % static_cast<std::int64_t>(p) + static_cast<std::int64_t>(p)) %
                                      static_cast<std::int64_t>(p));
  }
  while (f.size() >= g.size()) {
    std::uint64_t c = (std::uint64_t{f.back()} * linv) % p;
    if (c != 0) {
      std::size_t off = f.size() - g.size();
      for (std::size_t i = 0; i < g.size(); ++i) {
        std::uint64_t sub = (c * g[i]) % p;
        f[off + i] = static_cast<std::uint32_t>((f[off + i] + p - sub) % p);
      }
    }
    f.pop_back();
    zp_trim(f);
    if (f.empty()) break;
  }
  return f;
}

ZpPoly zp_pow_x_mod(std::uint64_t e, const ZpPoly& m, std::uint64_t p) {
  // x^e mod m
  ZpPoly result{1};
  ZpPoly base{0, 1};
  base = zp_mod(base, m, p);
  while (e > 0) {
    if (e & 1) result = zp_mod(zp_mul(result, base, p), m, p);
    base = zp_mod(zp_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

ZpPoly zp_gcd(ZpPoly f, ZpPoly g, std::uint64_t p) {
  zp_trim(f);
  zp_trim(g);
  while (!g.empty()) {
    ZpPoly r = zp_mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

std::uint64_t pow_u64(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// f monic of degree n over Z_p: irreducible iff x^{p^n} = x mod f and
// gcd(x^{p^{n/l}} - x, f) = 1 for every prime l | n.
bool zp_irreducible(const ZpPoly& f, std::uint64_t p, std::uint32_t n) {
  if (n == 1) return true;
  ZpPoly xq = zp_pow_x_mod(pow_u64(p, n), f, p);
  ZpPoly x{0, 1};
  zp_trim(x);
  if (xq != x) return false;
  for (std::uint64_t ell : prime_factors(n)) {
    std::uint32_t d = static_cast<std::uint32_t>(n / ell);
    ZpPoly xd = zp_pow_x_mod(pow_u64(p, d), f, p);
    // x^{p^d} - x
    ZpPoly diff = xd;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
    zp_trim(diff);
    ZpPoly g = zp_gcd(f, diff, p);
    if (!(g.size() == 1)) return false;  // non-constant gcd
  }
  return true;
}

}  // namespace

std::uint64_t max_enumeration() { return g_max_enum.load(); }
void set_max_enumeration(std::uint64_t bound) { g_max_enum.store(bound); }

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

// --- field data --------------------------------------------------------------

struct Elem::FieldData {
  std::uint64_t p;
  std::uint32_t n;
  std::uint64_t q;
  std::vector<std::uint32_t> modulus;  // ascending, length n+1, monic

  bool same(const FieldData& o) const { return p == o.p && n == o.n && modulus == o.modulus; }
};

namespace {

std::vector<std::uint32_t> canonical_modulus(std::uint64_t p, std::uint32_t n) {
  if (n == 1) return {0, 1};  // x
  // Scan monic degree-n polynomials in increasing order of the integer
  // encoding of the non-leading coefficients; first irreducible wins.
  std::uint64_t count = pow_u64(p, n);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint32_t> f(n + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < n; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[n] = 1;
    if (zp_irreducible(f, p, n)) return f;
  }
  raise(errc::not_prime, "no irreducible modulus found (p not prime?)");
}

}  // namespace

// --- Field -------------------------------------------------------------------

Field::Field(std::uint64_t p, std::uint32_t n) {
  if (!is_prime(p)) raise(errc::not_prime, std::to_string(p) + " is not prime");
  if (n < 1) raise(errc::degree_out_of_range, "degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (q > max_enumeration() / p)
      raise(errc::degree_out_of_range, "p^n exceeds the enumeration bound");
    q *= p;
  }
  auto fd = std::make_shared<Elem::FieldData>();
  fd->p = p;
  fd->n = n;
  fd->q = q;
  fd->modulus = canonical_modulus(p, n);
  fd_ = std::move(fd);
}

std::uint64_t Field::p() const { return fd_->p; }
std::uint32_t Field::degree() const { return fd_->n; }
std::uint64_t Field::order() const { return fd_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return fd_->modulus; }

bool Field::same(const Field& other) const { return fd_ == other.fd_ || fd_->same(*other.fd_); }
bool operator==(const Field& f, const Field& g) { return f.same(g); }

Elem Field::zero() const { return Elem(fd_, std::vector<std::uint32_t>(fd_->n, 0)); }

Elem Field::one() const {
  std::vector<std::uint32_t> c(fd_->n, 0);
  c[0] = 1;
  return Elem(fd_, std::move(c));
}

Elem Field::gen() const {
  std::vector<std::uint32_t> c(fd_->n, 0);
  if (fd_->n > 1) c[1] = 1;
  return Elem(fd_, std::move(c));
}

Elem Field::from_coeffs(std::vector<std::uint32_t> c) const {
  c.resize(fd_->n, 0);
  for (auto& x : c) x = static_cast<std::uint32_t>(x % fd_->p);
  return Elem(fd_, std::move(c));
}

Elem Field::from_index(std::uint64_t idx) const {
  if (idx >= fd_->q) raise(errc::index_out_of_range, "element index out of range");
  std::vector<std::uint32_t> c(fd_->n, 0);
  for (std::uint32_t i = 0; i < fd_->n; ++i) {
    c[i] = static_cast<std::uint32_t>(idx % fd_->p);
    idx /= fd_->p;
  }
  return Elem(fd_, std::move(c));
}

Elem Field::from_int(std::int64_t v) const {
  std::int64_t p = static_cast<std::int64_t>(fd_->p);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  std::vector<std::uint32_t> c(fd_->n, 0);
  c[0] = static_cast<std::uint32_t>(r);
  return Elem(fd_, std::move(c));
}

std::vector<Elem> Field::elements() const {
  if (fd_->q > max_enumeration()) raise(errc::field_too_large, "field exceeds the enumeration bound");
  std::vector<Elem> out;
  out.reserve(fd_->q);
  for (std::uint64_t i = 0; i < fd_->q; ++i) out.push_back(from_index(i));
  return out;
}

// --- Elem --------------------------------------------------------------------

Elem::Elem(std::shared_ptr<const FieldData> fd, std::vector<std::uint32_t> c)
    : fd_(std::move(fd)), c_(std::move(c)) {}

Field Elem::field() const {
  Field f;
  f.fd_ = fd_;
  return f;
}

std::uint64_t Elem::index() const {
  std::uint64_t idx = 0;
  for (std::size_t i = c_.size(); i-- > 0;) idx = idx * fd_->p + c_[i];
  return idx;
}

bool Elem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
}

bool Elem::in_prime_field() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool operator==(const Elem& u, const Elem& v) {
  if (!u.fd_ || !v.fd_) return u.fd_ == v.fd_;
  return u.fd_->same(*v.fd_) && u.c_ == v.c_;
}

namespace {
void check_same_field(const std::shared_ptr<const Elem::FieldData>& a,
                      const std::shared_ptr<const Elem::FieldData>& b) {
  if (!a || !b) raise(errc::field_mismatch, "operation on an uninitialized element");
  if (a != b && !a->same(*b)) raise(errc::field_mismatch, "elements belong to different fields");
}
}  // namespace

Elem Elem::operator-() const {
  std::vector<std::uint32_t> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = static_cast<std::uint32_t>((fd_->p - c_[i]) % fd_->p);
  return Elem(fd_, std::move(c));
}

Elem operator+(const Elem& u, const Elem& v) {
  check_same_field(u.fd_, v.fd_);
  std::vector<std::uint32_t> c(u.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = static_cast<std::uint32_t>((std::uint64_t{u.c_[i]} + v.c_[i]) % u.fd_->p);
  return Elem(u.fd_, std::move(c));
}

Elem operator-(const Elem& u, const Elem& v) { return u + (-v); }

Elem operator*(const Elem& u, const Elem& v) {
  check_same_field(u.fd_, v.fd_);
  const auto& fd = *u.fd_;
  ZpPoly prod = zp_mul(u.c_, v.c_, fd.p);
  prod = zp_mod(std::move(prod), fd.modulus, fd.p);
  prod.resize(fd.n, 0);
  return Elem(u.fd_, std::move(prod));
}

Elem Elem::inv() const {
  if (is_zero()) raise(errc::division_by_zero, "inverse of zero");
  // extended Euclid on (modulus, this) over Z_p
  const auto& fd = *fd_;
  ZpPoly r0 = fd.modulus, r1 = c_;
  zp_trim(r1);
  ZpPoly s0 = {}, s1 = {1};
  auto p = fd.p;
  auto scalar_inv = [p](std::uint64_t a) {
    std::int64_t t0 = 0, t1 = 1, m0 = static_cast<std::int64_t>(p), m1 = static_cast<std::int64_t>(a);
    while (m1 != 0) {
      std::int64_t qq = m0 / m1;
      std::int64_t tmp = m0 - qq * m1;
      m0 = m1;
      m1 = tmp;
      tmp = t0 - qq * t1;
      t0 = t1;
      t1 = tmp;
    }
    return static_cast<std::uint64_t>((t0 % static_cast<std::int64_t>(p) + static_cast<std::int64_t>(p)) %
                                      static_cast<std::int64_t>(p));
  };
  while (!r1.empty()) {
    // r0 = q*r1 + r; track s
    ZpPoly q(r0.size() > r1.size() - 1 ? r0.size() - r1.size() + 1 : 1, 0);
    ZpPoly rem = r0;
    std::uint64_t linv = scalar_inv(r1.back());
    while (rem.size() >= r1.size() && !rem.empty()) {
      std::uint64_t c = (std::uint64_t{rem.back()} * linv) % p;
      std::size_t off = rem.size() - r1.size();
      if (c != 0) {
        q[off] = static_cast<std::uint32_t>(c);
        for (std::size_t i = 0; i < r1.size(); ++i) {
          std::uint64_t sub = (c * r1[i]) % p;
          rem[off + i] = static_cast<std::uint32_t>((rem[off + i] + p - sub) % p);
        }
      }
      rem.pop_back();
      zp_trim(rem);
      if (rem.empty()) break;
    }
    zp_trim(q);
    // s = s0 - q*s1
    ZpPoly qs1 = zp_mul(q, s1, p);
    ZpPoly s = s0;
    if (s.size() < qs1.size()) s.resize(qs1.size(), 0);
    for (std::size_t i = 0; i < qs1.size(); ++i)
      s[i] = static_cast<std::uint32_t>((s[i] + p - qs1[i]) % p);
    zp_trim(s);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a unit (gcd with irreducible modulus); divide s0 by it
  std::uint64_t u = scalar_inv(r0.empty() ? 1 : r0[0]);
  ZpPoly res = s0;
  for (auto& x : res) x = static_cast<std::uint32_t>((std::uint64_t{x} * u) % p);
  res.resize(fd.n, 0);
  return Elem(fd_, std::move(res));
}

Elem operator/(const Elem& u, const Elem& v) { return u * v.inv(); }

Elem Elem::pow(std::uint64_t e) const {
  Elem base = *this;
  Elem result = field().one();
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Elem Elem::frobenius(std::uint32_t j) const {
  if (j >= fd_->n) raise(errc::index_out_of_range, "automorphism index must satisfy 0 <= j < n");
  return pow(pow_u64(fd_->p, j));
}

std::string Elem::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (k == 0) {
      os << c_[k];
    } else {
      if (c_[k] != 1) os << c_[k] << "*";
      os << "a";
      if (k >= 2) os << "^" << k;
    }
  }
  return os.str();
}

Elem Field::parse(std::string_view text) const {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) raise(errc::parse_error, "empty element text");
  if (std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    std::uint64_t idx = std::stoull(s);
    if (idx >= fd_->q) raise(errc::parse_error, "element index " + s + " out of range");
    return from_index(idx);
  }
  std::vector<std::uint32_t> c(fd_->n, 0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find('+', pos);
    std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    pos = next == std::string::npos ? s.size() : next + 1;
    if (term.empty()) raise(errc::parse_error, "malformed element text '" + std::string(text) + "'");
    std::uint64_t coeff = 1;
    std::size_t vp = term.find('a');
    std::string coeff_part, var_part;
    if (vp == std::string::npos) {
      coeff_part = term;
    } else {
      coeff_part = term.substr(0, vp);
      var_part = term.substr(vp);
      if (!coeff_part.empty()) {
        if (coeff_part.back() != '*') raise(errc::parse_error, "expected '*' before 'a' in '" + term + "'");
        coeff_part.pop_back();
      }
    }
    if (!coeff_part.empty()) {
      if (!std::all_of(coeff_part.begin(), coeff_part.end(),
                       [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        raise(errc::parse_error, "bad coefficient '" + coeff_part + "'");
      coeff = std::stoull(coeff_part);
      if (coeff >= fd_->p) raise(errc::parse_error, "coefficient " + coeff_part + " not reduced mod p");
    }
    std::size_t power = 0;
    if (!var_part.empty()) {
      power = 1;
      if (var_part.size() > 1) {
        if (var_part[1] != '^') raise(errc::parse_error, "malformed term '" + term + "'");
        std::string e = var_part.substr(2);
        if (e.empty() || !std::all_of(e.begin(), e.end(), [](char ch) {
              return std::isdigit(static_cast<unsigned char>(ch));
            }))
          raise(errc::parse_error, "bad exponent in '" + term + "'");
        power = std::stoull(e);
      }
    } else if (coeff_part.empty()) {
      raise(errc::parse_error, "empty term in '" + std::string(text) + "'");
    }
    if (power >= fd_->n) raise(errc::parse_error, "power a^" + std::to_string(power) + " out of basis range");
    c[power] = static_cast<std::uint32_t>((c[power] + coeff) % fd_->p);
  }
  return Elem(fd_, std::move(c));
}

// --- PolyFF ------------------------------------------------------------------

PolyFF::PolyFF(Field f, std::vector<Elem> ascending) : field_(std::move(f)), c_(std::move(ascending)) {
  for (const auto& e : c_)
    if (!e.valid() || !(e.field() == field_)) raise(errc::field_mismatch, "polynomial coefficient field mismatch");
  normalize();
}

void PolyFF::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyFF PolyFF::x(const Field& f) { return PolyFF(f, {f.zero(), f.one()}); }

PolyFF PolyFF::constant(const Field& f, const Elem& c) { return PolyFF(f, {c}); }

PolyFF PolyFF::monomial(const Field& f, std::size_t e) {
  std::vector<Elem> c(e + 1, f.zero());
  c[e] = f.one();
  return PolyFF(f, std::move(c));
}

Elem PolyFF::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

Elem PolyFF::lead() const {
  if (c_.empty()) raise(errc::zero_polynomial, "zero polynomial has no leading coefficient");
  return c_.back();
}

bool PolyFF::is_monic() const { return !c_.empty() && c_.back() == field_.one(); }

Elem PolyFF::eval(const Elem& x) const {
  Elem acc = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

PolyFF operator+(const PolyFF& f, const PolyFF& g) {
  if (!(f.field_ == g.field_)) raise(errc::field_mismatch, "polynomial field mismatch");
  std::vector<Elem> c(std::max(f.c_.size(), g.c_.size()), f.field_.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) + g.coeff(i);
  return PolyFF(f.field_, std::move(c));
}

PolyFF operator-(const PolyFF& f, const PolyFF& g) {
  if (!(f.field_ == g.field_)) raise(errc::field_mismatch, "polynomial field mismatch");
  std::vector<Elem> c(std::max(f.c_.size(), g.c_.size()), f.field_.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) - g.coeff(i);
  return PolyFF(f.field_, std::move(c));
}

PolyFF operator*(const PolyFF& f, const PolyFF& g) {
  if (!(f.field_ == g.field_)) raise(errc::field_mismatch, "polynomial field mismatch");
  if (f.is_zero() || g.is_zero()) return PolyFF(f.field_);
  std::vector<Elem> c(f.c_.size() + g.c_.size() - 1, f.field_.zero());
  for (std::size_t i = 0; i < f.c_.size(); ++i)
    for (std::size_t j = 0; j < g.c_.size(); ++j) c[i + j] = c[i + j] + f.c_[i] * g.c_[j];
  return PolyFF(f.field_, std::move(c));
}

bool operator==(const PolyFF& f, const PolyFF& g) { return f.field_ == g.field_ && f.c_ == g.c_; }

PolyFF PolyFF::scaled(const Elem& c) const {
  std::vector<Elem> out(c_);
  for (auto& e : out) e = e * c;
  return PolyFF(field_, std::move(out));
}

std::pair<PolyFF, PolyFF> PolyFF::divrem(const PolyFF& f, const PolyFF& g) {
  if (g.is_zero()) raise(errc::division_by_zero, "polynomial division by zero");
  if (!(f.field_ == g.field_)) raise(errc::field_mismatch, "polynomial field mismatch");
  PolyFF q(f.field_);
  std::vector<Elem> rem = f.c_;
  Elem linv = g.lead().inv();
  std::vector<Elem> qc;
  if (rem.size() >= g.c_.size()) qc.assign(rem.size() - g.c_.size() + 1, f.field_.zero());
  while (rem.size() >= g.c_.size()) {
    Elem c = rem.back() * linv;
    std::size_t off = rem.size() - g.c_.size();
    if (!c.is_zero()) {
      qc[off] = c;
      for (std::size_t i = 0; i < g.c_.size(); ++i) rem[off + i] = rem[off + i] - c * g.c_[i];
    }
    rem.pop_back();
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
  }
  return {PolyFF(f.field_, std::move(qc)), PolyFF(f.field_, std::move(rem))};
}

PolyFF PolyFF::gcd_monic(PolyFF f, PolyFF g) {
  while (!g.is_zero()) {
    PolyFF r = divrem(f, g).second;
    f = std::move(g);
    g = std::move(r);
  }
  if (f.is_zero()) return f;
  return f.scaled(f.lead().inv());
}

PolyFF PolyFF::pow_mod(const PolyFF& base, std::uint64_t e, const PolyFF& m) {
  PolyFF result = constant(base.field_, base.field_.one());
  PolyFF b = divrem(base, m).second;
  while (e > 0) {
    if (e & 1) result = divrem(result * b, m).second;
    b = divrem(b * b, m).second;
    e >>= 1;
  }
  return result;
}

std::string PolyFF::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << "+";
    first = false;
    std::string cs = c_[i].str();
    bool unit = (cs == "1");
    bool simple = cs.find('+') == std::string::npos;
    if (i == 0) {
      os << (simple ? cs : "(" + cs + ")");
      continue;
    }
    if (!unit) {
      os << (simple ? cs : "(" + cs + ")") << "*";
    }
    os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

PolyFF PolyFF::parse(const Field& f, std::string_view text, const std::string& var) {
  if (var == "a") raise(errc::parse_error, "'a' is reserved for the field generator");
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) raise(errc::parse_error, "empty polynomial text");
  if (s == "0") return PolyFF(f);
  std::vector<Elem> coeffs;
  auto bump = [&](std::size_t power, const Elem& c) {
    if (coeffs.size() <= power) coeffs.resize(power + 1, f.zero());
    coeffs[power] = coeffs[power] + c;
  };
  std::size_t pos = 0;
  while (pos < s.size()) {
    // split on '+' at paren depth 0
    int depth = 0;
    std::size_t end = pos;
    for (; end < s.size(); ++end) {
      if (s[end] == '(') ++depth;
      if (s[end] == ')') --depth;
      if (s[end] == '+' && depth == 0) break;
    }
    std::string term = s.substr(pos, end - pos);
    pos = end + (end < s.size() ? 1 : 0);
    if (term.empty()) raise(errc::parse_error, "malformed polynomial text");
    // find var occurrence outside parens
    std::size_t vp = std::string::npos;
    depth = 0;
    for (std::size_t i = 0; i + var.size() <= term.size(); ++i) {
      if (term[i] == '(') ++depth;
      if (term[i] == ')') --depth;
      if (depth == 0 && term.compare(i, var.size(), var) == 0) {
        vp = i;
        break;
      }
    }
    if (vp == std::string::npos) {
      std::string ct = term;
      if (ct.size() >= 2 && ct.front() == '(' && ct.back() == ')') ct = ct.substr(1, ct.size() - 2);
      bump(0, f.parse(ct));
      continue;
    }
    std::string coeff_part = term.substr(0, vp);
    std::string rest = term.substr(vp + var.size());
    Elem c = f.one();
    if (!coeff_part.empty()) {
      if (coeff_part.back() != '*') raise(errc::parse_error, "expected '*' before '" + var + "'");
      coeff_part.pop_back();
      if (coeff_part.size() >= 2 && coeff_part.front() == '(' && coeff_part.back() == ')')
        coeff_part = coeff_part.substr(1, coeff_part.size() - 2);
      c = f.parse(coeff_part);
    }
    std::size_t power = 1;
    if (!rest.empty()) {
      if (rest[0] != '^') raise(errc::parse_error, "malformed term '" + term + "'");
      std::string e = rest.substr(1);
      if (e.empty() || !std::all_of(e.begin(), e.end(),
                                    [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        raise(errc::parse_error, "bad exponent in '" + term + "'");
      power = std::stoull(e);
    }
    bump(power, c);
  }
  return PolyFF(f, std::move(coeffs));
}

// --- minimal polynomial and subfields -----------------------------------------

PolyFF minimal_poly(const Elem& u) {
  Field k = u.field();
  Field zp(k.p(), 1);
  std::vector<Elem> orbit{u};
  if (k.degree() > 1) {
    Elem v = u.pow(k.p());
    while (!(v == u)) {
      orbit.push_back(v);
      v = v.pow(k.p());
    }
  }
  PolyFF prod = PolyFF::constant(k, k.one());
  for (const auto& r : orbit) prod = prod * PolyFF(k, {-r, k.one()});
  // coefficients lie in the prime subfield; project down
  std::vector<Elem> proj;
  proj.reserve(prod.coeffs().size());
  for (const auto& c : prod.coeffs()) {
    if (!c.in_prime_field()) raise(errc::not_a_subfield, "minimal polynomial coefficient outside Z_p");
    proj.push_back(zp.from_int(static_cast<std::int64_t>(c.coeffs()[0])));
  }
  return PolyFF(zp, std::move(proj));
}

bool Subfield::contains(const Elem& u) const {
  return std::any_of(members.begin(), members.end(), [&](const Elem& m) { return m == u; });
}

std::vector<Subfield> subfields(const Field& f) {
  if (f.order() > max_enumeration()) raise(errc::field_too_large, "field exceeds the enumeration bound");
  std::vector<Subfield> out;
  std::uint32_t n = f.degree();
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Subfield sf;
    sf.degree = d;
    std::uint64_t pd = pow_u64(f.p(), d);
    for (std::uint64_t i = 0; i < f.order(); ++i) {
      Elem u = f.from_index(i);
      if (u.pow(pd) == u) sf.members.push_back(u);
    }
    out.push_back(std::move(sf));
  }
  return out;
}

// --- error names ---------------------------------------------------------------

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::degree_out_of_range: return "DegreeOutOfRange";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::field_too_large: return "FieldTooLarge";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::not_square: return "NotSquare";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::zero_parameter: return "ZeroParameter";
    case errc::not_a_subfield: return "NotASubfield";
    case errc::too_large: return "TooLarge";
    case errc::unsupported_case: return "UnsupportedCase";
    case errc::bad_parameter_shape: return "BadParameterShape";
    case errc::not_a_solution: return "NotASolution";
    case errc::bad_indices: return "BadIndices";
    case errc::not_squarefree: return "NotSquarefree";
    case errc::parse_error: return "ParseError";
  }
  return "Error";
}

}  // namespace feq
