#include "indsub/field.hpp"

#include <algorithm>

#include "indsub/errors.hpp"

namespace indsub {

namespace detail {

struct FieldData {
  int p = 0;
  int m = 0;
  int q = 0;
  std::vector<int> modulus;
  std::vector<std::vector<int>> coeffs;  // index -> coefficient vector
  std::vector<int> add, mul;             // q*q tables
  std::vector<int> neg, inv;
};

}  // namespace detail

namespace {

using Poly = std::vector<int>;  // constant-first, no trailing zeros except for 0

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw DomainError("no inverse modulo p");
}

Poly poly_rem(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int lead_inv = inv_mod(b.back(), p);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int factor = a.back() * lead_inv % p;
    for (int i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

// Every monic polynomial of the given degree, in lexicographic
// constant-first coefficient order.
std::vector<Poly> monic_polys(int p, int degree) {
  std::vector<Poly> out;
  int count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (int code = 0; code < count; ++code) {
    Poly poly(degree + 1, 0);
    int c = code;
    for (int i = degree - 1; i >= 0; --i) {
      poly[i] = c % p;
      c /= p;
    }
    poly[degree] = 1;
    out.push_back(poly);
  }
  return out;
}

bool is_irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d)
    for (const auto& g : monic_polys(p, d))
      if (poly_rem(f, g, p).empty()) return false;
  return true;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec field_make(int p, int m) {
  if (!is_prime(p)) throw InputError("field characteristic must be prime: " + std::to_string(p));
  if (m < 1) throw InputError("field degree must be positive");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > 64) throw InputError("field order p^m exceeds 64");
  }
  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->m = m;
  d->q = static_cast<int>(q);
  for (const auto& cand : monic_polys(p, m))
    if (is_irreducible(cand, p)) {
      d->modulus = cand;
      break;
    }
  const int n = d->q;
  d->coeffs.resize(n);
  for (int idx = 0; idx < n; ++idx) {
    std::vector<int> c(m);
    int x = idx;
    for (int i = m - 1; i >= 0; --i) {
      c[i] = x % p;
      x /= p;
    }
    d->coeffs[idx] = c;
  }
  auto index_of = [&](const std::vector<int>& c) {
    int idx = 0;
    for (int i = 0; i < m; ++i) idx = idx * p + c[i];
    return idx;
  };
  d->add.assign(n * n, 0);
  d->mul.assign(n * n, 0);
  d->neg.assign(n, 0);
  d->inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    std::vector<int> c(m);
    for (int i = 0; i < m; ++i) c[i] = (p - d->coeffs[a][i]) % p;
    d->neg[a] = index_of(c);
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < m; ++i) c[i] = (d->coeffs[a][i] + d->coeffs[b][i]) % p;
      d->add[a * n + b] = index_of(c);
      Poly prod(2 * m, 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          prod[i + j] = (prod[i + j] + d->coeffs[a][i] * d->coeffs[b][j]) % p;
      Poly r = poly_rem(prod, d->modulus, p);
      r.resize(m, 0);
      d->mul[a * n + b] = index_of(r);
    }
  }
  const int one = index_of([&] {
    std::vector<int> c(m, 0);
    c[0] = 1;
    return c;
  }());
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      if (d->mul[a * n + b] == one) d->inv[a] = b;
  return FieldSpec(std::move(d));
}

int FieldSpec::p() const { return d_->p; }
int FieldSpec::m() const { return d_->m; }
int FieldSpec::order() const { return d_->q; }
const std::vector<int>& FieldSpec::modulus() const { return d_->modulus; }

FieldElem FieldSpec::element(int index) const { return FieldElem(*this, index); }

FieldElem FieldSpec::from_coeffs(std::span<const int> c) const {
  if (static_cast<int>(c.size()) != d_->m) throw InputError("coefficient vector has wrong length");
  int idx = 0;
  for (int x : c) {
    if (x < 0 || x >= d_->p) throw InputError("coefficient out of range");
    idx = idx * d_->p + x;
  }
  return FieldElem(*this, idx);
}

FieldElem FieldSpec::zero() const { return FieldElem(*this, 0); }

FieldElem FieldSpec::one() const {
  std::vector<int> c(d_->m, 0);
  c[0] = 1;
  return from_coeffs(c);
}

std::vector<FieldElem> FieldSpec::elements() const {
  std::vector<FieldElem> out;
  for (int i = 0; i < d_->q; ++i) out.emplace_back(*this, i);
  return out;
}

int FieldSpec::add(int a, int b) const { return d_->add[a * d_->q + b]; }
int FieldSpec::neg(int a) const { return d_->neg[a]; }
int FieldSpec::sub(int a, int b) const { return add(a, neg(b)); }
int FieldSpec::mul(int a, int b) const { return d_->mul[a * d_->q + b]; }

int FieldSpec::inv(int a) const {
  if (a == 0) throw DomainError("inverse of zero");
  return d_->inv[a];
}

std::vector<int> FieldSpec::coeffs(int index) const { return d_->coeffs.at(index); }

std::string FieldSpec::format(int index) const {
  const auto& c = d_->coeffs.at(index);
  if (d_->m == 1) return std::to_string(c[0]);
  std::string s = "(";
  for (int i = 0; i < d_->m; ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

FieldElem::FieldElem(FieldSpec f, int index) : f_(std::move(f)), index_(index) {
  if (index < 0 || index >= f_.order()) throw InputError("field element index out of range");
}

FieldElem FieldElem::inv() const { return FieldElem(f_, f_.inv(index_)); }

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  if (!(a.f_ == b.f_)) throw InputError("field mismatch");
  return FieldElem(a.f_, a.f_.add(a.index_, b.index_));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  if (!(a.f_ == b.f_)) throw InputError("field mismatch");
  return FieldElem(a.f_, a.f_.sub(a.index_, b.index_));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  if (!(a.f_ == b.f_)) throw InputError("field mismatch");
  return FieldElem(a.f_, a.f_.mul(a.index_, b.index_));
}

FieldElem operator-(const FieldElem& a) { return FieldElem(a.f_, a.f_.neg(a.index_)); }

std::vector<FieldElem> plus_set(const FieldSpec& f) {
  std::vector<FieldElem> out;
  for (int x = 1; x < f.order(); ++x)
    if (x <= f.neg(x)) out.emplace_back(f, x);
  return out;
}

}  // namespace indsub
