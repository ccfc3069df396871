#include "hrmc/finite_field.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hrmc/errors.hpp"

namespace hrmc {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t n = 0;  // 2m
  std::uint32_t q = 0;
  std::uint32_t order = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> pow_p;
  std::vector<std::uint32_t> exp_table;  // length 2*(order-1)
  std::vector<std::uint32_t> log_table;
  std::vector<Field::Code> neg_table;
  std::vector<Field::Code> add_table;  // order*order, only for small odd-p fields
  std::vector<Field::Code> subfield;
  std::vector<std::int32_t> sub_index;
  Field::Code omega = 0;
  std::vector<std::pair<Field::Code, Field::Code>> split_table;
  std::vector<Field::Code> join_table;  // q*q, indexed by subfield positions
};

}  // namespace detail

namespace {

using Poly = std::vector<std::uint32_t>;  // low coefficient first

// Conway polynomials for the common sizes, keyed by (p, degree).
const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly>& conway_table() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
      {{3, 8}, {2, 2, 2, 0, 1, 2, 0, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 4}, {2, 1, 4, 0, 1}},
      {{5, 6}, {2, 0, 1, 4, 1, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 4}, {3, 4, 5, 0, 1}},
      {{11, 2}, {2, 7, 1}},
      {{11, 4}, {2, 10, 8, 0, 1}},
      {{13, 2}, {2, 12, 1}},
      {{13, 4}, {2, 12, 3, 0, 1}},
  };
  return table;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of f modulo a monic g over F_p.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t i = f.size(); i-- > dg;) {
    std::uint32_t c = f[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) {
      std::size_t k = i - dg + j;
      f[k] = static_cast<std::uint32_t>((f[k] + static_cast<std::uint64_t>(p - c) * g[j]) % p);
    }
  }
  f.resize(dg);
  return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t v = idx;
      for (std::uint32_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      Poly r = poly_mod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

Poly code_to_poly(Field::Code c, std::uint32_t p, std::uint32_t n) {
  Poly out(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    out[i] = c % p;
    c /= p;
  }
  return out;
}

Field::Code poly_to_code(const Poly& f, std::uint32_t p) {
  Field::Code c = 0;
  for (std::size_t i = f.size(); i-- > 0;) c = c * p + f[i];
  return c;
}

Field::Code slow_mul(Field::Code a, Field::Code b, const detail::FieldData& d) {
  Poly x = code_to_poly(a, d.p, d.n);
  Poly y = code_to_poly(b, d.p, d.n);
  Poly prod(2 * d.n, 0);
  for (std::uint32_t i = 0; i < d.n; ++i) {
    if (!x[i]) continue;
    for (std::uint32_t j = 0; j < d.n; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % d.p);
    }
  }
  return poly_to_code(poly_mod(prod, d.modulus, d.p), d.p);
}

Field::Code digit_add(Field::Code a, Field::Code b, const detail::FieldData& d) {
  Field::Code out = 0;
  for (std::uint32_t i = 0; i < d.n; ++i) {
    out += ((a % d.p + b % d.p) % d.p) * d.pow_p[i];
    a /= d.p;
    b /= d.p;
  }
  return out;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::shared_ptr<detail::FieldData> build(std::uint32_t p, std::uint32_t m, Poly modulus) {
  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->m = m;
  d->n = 2 * m;
  d->modulus = std::move(modulus);
  d->pow_p.resize(d->n + 1);
  d->pow_p[0] = 1;
  for (std::uint32_t i = 1; i <= d->n; ++i) d->pow_p[i] = d->pow_p[i - 1] * p;
  d->q = d->pow_p[m];
  d->order = d->pow_p[d->n];

  const std::uint32_t units = d->order - 1;
  const auto factors = prime_factors(units);
  auto slow_pow = [&](Field::Code g, std::uint32_t e) {
    Field::Code r = 1;
    while (e) {
      if (e & 1U) r = slow_mul(r, g, *d);
      g = slow_mul(g, g, *d);
      e >>= 1U;
    }
    return r;
  };
  Field::Code generator = 0;
  for (Field::Code g = 1; g < d->order && !generator; ++g) {
    if (slow_pow(g, units) != 1) continue;
    bool primitive = std::all_of(factors.begin(), factors.end(),
                                 [&](std::uint32_t r) { return slow_pow(g, units / r) != 1; });
    if (primitive) generator = g;
  }
  d->exp_table.resize(2 * static_cast<std::size_t>(units));
  d->log_table.assign(d->order, 0);
  Field::Code x = 1;
  for (std::uint32_t i = 0; i < units; ++i) {
    d->exp_table[i] = x;
    d->exp_table[i + units] = x;
    d->log_table[x] = i;
    x = slow_mul(x, generator, *d);
  }

  d->neg_table.resize(d->order);
  for (Field::Code c = 0; c < d->order; ++c) {
    Field::Code out = 0;
    Field::Code v = c;
    for (std::uint32_t i = 0; i < d->n; ++i) {
      out += ((p - v % p) % p) * d->pow_p[i];
      v /= p;
    }
    d->neg_table[c] = out;
  }
  if (p != 2 && d->order <= 1024) {
    d->add_table.resize(static_cast<std::size_t>(d->order) * d->order);
    for (Field::Code a = 0; a < d->order; ++a)
      for (Field::Code b = 0; b < d->order; ++b)
        d->add_table[static_cast<std::size_t>(a) * d->order + b] = digit_add(a, b, *d);
  }
  return d;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p) ++p;
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), m);
}

std::vector<std::uint32_t> Field::default_modulus(std::uint32_t p, std::uint32_t degree) {
  auto it = conway_table().find({p, degree});
  if (it != conway_table().end()) return it->second;
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < degree; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f(degree + 1, 0);
    f[degree] = 1;
    std::uint64_t v = idx;
    for (std::uint32_t i = 0; i < degree; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (f[0] != 0 && is_irreducible(f, p)) return f;
  }
  throw ReducibleModulus("no irreducible polynomial found");
}

Field Field::make(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw NonPrimeModulus("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1 || 2 * m > kMaxDegree) {
    throw UnsupportedSize("extension degree 2m = " + std::to_string(2 * m) + " outside [2, 8]");
  }
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < 2 * m; ++i) order *= p;
  if (order > kMaxOrder) throw UnsupportedSize("field order " + std::to_string(order) + " exceeds 2^16");

  Poly f;
  if (modulus) {
    f = *modulus;
    if (f.size() != 2 * m + 1) {
      throw ReducibleModulus("modulus must have degree " + std::to_string(2 * m));
    }
    for (auto& c : f) {
      if (c >= p) throw ReducibleModulus("modulus coefficient out of range");
    }
    if (f.back() == 0) throw ReducibleModulus("modulus has degree below 2m");
    if (f.back() != 1) {
      const std::uint32_t lead = inv_mod(f.back(), p);
      for (auto& c : f) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * lead % p);
    }
  } else {
    f = default_modulus(p, 2 * m);
  }
  if (!is_irreducible(f, p)) throw ReducibleModulus("modulus is reducible over F_" + std::to_string(p));

  auto data = build(p, m, std::move(f));
  Field field(data);
  for (Code c = 0; c < data->order; ++c)
    if (field.conj(c) == c) data->subfield.push_back(c);
  data->sub_index.assign(data->order, -1);
  for (std::size_t i = 0; i < data->subfield.size(); ++i) data->sub_index[data->subfield[i]] = static_cast<std::int32_t>(i);
  for (Code c = 0; c < data->order; ++c) {
    if (data->sub_index[c] < 0) {
      data->omega = c;
      break;
    }
  }
  data->split_table.resize(data->order);
  data->join_table.resize(static_cast<std::size_t>(data->q) * data->q);
  for (std::uint32_t ia = 0; ia < data->q; ++ia) {
    for (std::uint32_t ib = 0; ib < data->q; ++ib) {
      Code a = data->subfield[ia];
      Code b = data->subfield[ib];
      Code x = field.add(a, field.mul(b, data->omega));
      data->split_table[x] = {a, b};
      data->join_table[static_cast<std::size_t>(ia) * data->q + ib] = x;
    }
  }
  return field;
}

Field Field::for_q(std::uint64_t q) {
  auto pm = prime_power(q);
  if (!pm) throw UnsupportedField("q = " + std::to_string(q) + " is not a prime power");
  try {
    return make(pm->first, pm->second);
  } catch (const UnsupportedSize& e) {
    throw UnsupportedField("q = " + std::to_string(q) + ": " + e.what());
  }
}

std::uint32_t Field::p() const { return data_->p; }
std::uint32_t Field::m() const { return data_->m; }
std::uint32_t Field::degree() const { return data_->n; }
std::uint32_t Field::q() const { return data_->q; }
std::uint32_t Field::order() const { return data_->order; }
const std::vector<std::uint32_t>& Field::modulus() const { return data_->modulus; }

FieldElement Field::zero() const { return {*this, 0}; }
FieldElement Field::one() const { return {*this, 1}; }

FieldElement Field::element(Code code) const {
  if (code >= data_->order) throw InvalidArgument("element code out of range");
  return {*this, code};
}

FieldElement Field::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != data_->n) {
    throw InvalidArgument("element needs " + std::to_string(data_->n) + " digits");
  }
  Code c = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= data_->p) throw InvalidArgument("element digit out of range");
    c = c * data_->p + digits[i];
  }
  return {*this, c};
}

std::vector<std::uint32_t> Field::digits(Code code) const { return code_to_poly(code, data_->p, data_->n); }

Field::Code Field::add(Code x, Code y) const {
  const auto& d = *data_;
  if (d.p == 2) return x ^ y;
  if (!d.add_table.empty()) return d.add_table[static_cast<std::size_t>(x) * d.order + y];
  return digit_add(x, y, d);
}

Field::Code Field::neg(Code x) const { return data_->neg_table[x]; }
Field::Code Field::sub(Code x, Code y) const { return add(x, neg(y)); }

Field::Code Field::mul(Code x, Code y) const {
  if (x == 0 || y == 0) return 0;
  const auto& d = *data_;
  return d.exp_table[d.log_table[x] + d.log_table[y]];
}

Field::Code Field::inv(Code x) const {
  if (x == 0) throw DivisionByZero("inverse of zero");
  const auto& d = *data_;
  const std::uint32_t units = d.order - 1;
  return d.exp_table[(units - d.log_table[x]) % units];
}

Field::Code Field::div(Code x, Code y) const { return mul(x, inv(y)); }

Field::Code Field::pow(Code x, std::uint64_t e) const {
  Code result = 1;
  while (e) {
    if (e & 1U) result = mul(result, x);
    x = mul(x, x);
    e >>= 1U;
  }
  return result;
}

Field::Code Field::conj(Code x) const { return pow(x, data_->q); }

const std::vector<Field::Code>& Field::subfield() const { return data_->subfield; }
bool Field::in_subfield(Code x) const { return data_->sub_index[x] >= 0; }

std::uint32_t Field::subfield_index(Code x) const {
  const std::int32_t i = data_->sub_index[x];
  if (i < 0) throw InvalidArgument("element is not in the subfield");
  return static_cast<std::uint32_t>(i);
}

Field::Code Field::omega() const { return data_->omega; }
std::pair<Field::Code, Field::Code> Field::split(Code x) const { return data_->split_table[x]; }

Field::Code Field::join(Code a, Code b) const {
  return data_->join_table[static_cast<std::size_t>(subfield_index(a)) * data_->q + subfield_index(b)];
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << data_->p << "^" << data_->n << ") modulus [";
  for (std::size_t i = 0; i < data_->modulus.size(); ++i) os << (i ? "," : "") << data_->modulus[i];
  os << "]";
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->p == b.data_->p && a.data_->m == b.data_->m && a.data_->modulus == b.data_->modulus;
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw FieldMismatch("operands belong to different fields: " + a.describe() + " vs " + b.describe());
}

FieldElement::FieldElement(Field field, Field::Code code) : field_(std::move(field)), code_(code) {}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  require_same_field(x.field_, y.field_);
  return {x.field_, x.field_.add(x.code_, y.code_)};
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  require_same_field(x.field_, y.field_);
  return {x.field_, x.field_.sub(x.code_, y.code_)};
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  require_same_field(x.field_, y.field_);
  return {x.field_, x.field_.mul(x.code_, y.code_)};
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) {
  require_same_field(x.field_, y.field_);
  return {x.field_, x.field_.div(x.code_, y.code_)};
}

bool operator==(const FieldElement& x, const FieldElement& y) {
  return x.code_ == y.code_ && x.field_ == y.field_;
}

}  // namespace hrmc
