#include "hrmc/hermitian.hpp"

#include <utility>

#include "hrmc/errors.hpp"
#include "hrmc/parallel.hpp"

namespace hrmc {

Matrix::Matrix(Field field, std::size_t t) : field_(std::move(field)), t_(t), entries_(t * t, 0) {
  if (t == 0) throw InvalidArgument("matrix side must be at least 1");
}

Matrix::Matrix(Field field, std::size_t t, std::vector<Field::Code> entries)
    : field_(std::move(field)), t_(t), entries_(std::move(entries)) {
  if (t == 0) throw InvalidArgument("matrix side must be at least 1");
  if (entries_.size() != t * t) throw DimensionMismatch("expected " + std::to_string(t * t) + " entries");
  for (auto c : entries_)
    if (c >= field_.order()) throw InvalidArgument("matrix entry code out of range");
}

void Matrix::set(std::size_t i, std::size_t j, const FieldElement& x) {
  require_same_field(field_, x.field());
  (*this)(i, j) = x.code();
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.t_ == b.t_ && a.field_ == b.field_ && a.entries_ == b.entries_;
}

bool is_hermitian(const Matrix& m) {
  const Field& f = m.field();
  for (std::size_t i = 0; i < m.t(); ++i)
    for (std::size_t j = i; j < m.t(); ++j)
      if (m(i, j) != f.conj(m(j, i))) return false;
  return true;
}

std::size_t rank(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t t = m.t();
  // cols[c][r] = m(r, c); reduce the column set.
  std::vector<std::vector<Field::Code>> cols(t, std::vector<Field::Code>(t));
  for (std::size_t r = 0; r < t; ++r)
    for (std::size_t c = 0; c < t; ++c) cols[c][r] = m(r, c);

  std::size_t rk = 0;
  for (std::size_t row = 0; row < t && rk < t; ++row) {
    std::size_t pivot = rk;
    while (pivot < t && cols[pivot][row] == 0) ++pivot;
    if (pivot == t) continue;
    std::swap(cols[rk], cols[pivot]);
    const Field::Code inv = f.inv(cols[rk][row]);
    for (std::size_t c = rk + 1; c < t; ++c) {
      if (cols[c][row] == 0) continue;
      const Field::Code factor = f.mul(cols[c][row], inv);
      for (std::size_t r = row; r < t; ++r) cols[c][r] = f.sub(cols[c][r], f.mul(factor, cols[rk][r]));
    }
    ++rk;
  }
  return rk;
}

HermitianMatrix::HermitianMatrix(Matrix m) : m_(std::move(m)) {
  if (!is_hermitian(m_)) throw NotHermitian("matrix is not equal to its conjugate transpose");
}

HermitianMatrix HermitianMatrix::zero(const Field& field, std::size_t t) {
  return {Matrix(field, t), Unchecked{}};
}

HermitianMatrix HermitianMatrix::identity(const Field& field, std::size_t t) {
  Matrix m(field, t);
  for (std::size_t i = 0; i < t; ++i) m(i, i) = 1;
  return {std::move(m), Unchecked{}};
}

HermitianMatrix HermitianMatrix::from_coordinates(const Field& field, std::size_t t,
                                                  std::span<const Field::Code> coords) {
  if (coords.size() != t * t) throw DimensionMismatch("expected " + std::to_string(t * t) + " coordinates");
  Matrix m(field, t);
  std::size_t k = 0;
  for (std::size_t i = 0; i < t; ++i) {
    if (!field.in_subfield(coords[k])) throw NotHermitian("coordinate outside F_q");
    m(i, i) = coords[k++];
  }
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      const Field::Code x = field.join(coords[k], coords[k + 1]);
      k += 2;
      m(i, j) = x;
      m(j, i) = field.conj(x);
    }
  }
  return {std::move(m), Unchecked{}};
}

std::vector<Field::Code> HermitianMatrix::coordinates() const {
  const Field& f = field();
  const std::size_t n = t();
  std::vector<Field::Code> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(m_(i, i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto [a, b] = f.split(m_(i, j));
      out.push_back(a);
      out.push_back(b);
    }
  }
  return out;
}

namespace {

void require_compatible(const HermitianMatrix& a, const HermitianMatrix& b) {
  require_same_field(a.field(), b.field());
  if (a.t() != b.t()) throw DimensionMismatch("matrices have different sizes");
}

}  // namespace

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  require_compatible(a, b);
  Matrix m(a.field(), a.t());
  for (std::size_t i = 0; i < a.t(); ++i)
    for (std::size_t j = 0; j < a.t(); ++j) m(i, j) = a.field().add(a(i, j), b(i, j));
  return {std::move(m), HermitianMatrix::Unchecked{}};
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  require_compatible(a, b);
  Matrix m(a.field(), a.t());
  for (std::size_t i = 0; i < a.t(); ++i)
    for (std::size_t j = 0; j < a.t(); ++j) m(i, j) = a.field().sub(a(i, j), b(i, j));
  return {std::move(m), HermitianMatrix::Unchecked{}};
}

HermitianMatrix operator*(const FieldElement& c, const HermitianMatrix& h) {
  require_same_field(c.field(), h.field());
  if (!c.in_subfield()) throw NotHermitian("scalar outside F_q breaks the Hermitian property");
  Matrix m(h.field(), h.t());
  for (std::size_t i = 0; i < h.t(); ++i)
    for (std::size_t j = 0; j < h.t(); ++j) m(i, j) = h.field().mul(c.code(), h(i, j));
  return {std::move(m), HermitianMatrix::Unchecked{}};
}

FieldElement inner_product(const HermitianMatrix& h, const HermitianMatrix& j) {
  require_compatible(h, j);
  const Field& f = h.field();
  Field::Code acc = 0;
  for (std::size_t r = 0; r < h.t(); ++r)
    for (std::size_t c = 0; c < h.t(); ++c) acc = f.add(acc, f.mul(f.conj(h(r, c)), j(r, c)));
  return {f, acc};
}

std::size_t rank_distance(const HermitianMatrix& h, const HermitianMatrix& j) { return (h - j).rank(); }

std::uint64_t hermitian_count(const Field& field, std::size_t t, std::uint64_t guard) {
  if (t == 0) throw InvalidArgument("matrix side must be at least 1");
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < t * t; ++i) {
    if (count > guard / field.q()) {
      throw EnumerationTooLarge("q^(t^2) exceeds the enumeration guard " + std::to_string(guard));
    }
    count *= field.q();
  }
  if (count > guard) throw EnumerationTooLarge("q^(t^2) exceeds the enumeration guard " + std::to_string(guard));
  return count;
}

HermitianMatrix hermitian_at(const Field& field, std::size_t t, std::uint64_t index) {
  Matrix m(field, t);
  const std::uint64_t q = field.q();
  const std::uint64_t q2 = field.order();
  for (std::size_t i = t; i-- > 0;) {
    for (std::size_t j = t; j-- > i + 1;) {
      const auto x = static_cast<Field::Code>(index % q2);
      index /= q2;
      m(i, j) = x;
      m(j, i) = field.conj(x);
    }
  }
  for (std::size_t i = t; i-- > 0;) {
    m(i, i) = field.subfield()[index % q];
    index /= q;
  }
  return HermitianMatrix(std::move(m));
}

std::vector<std::uint64_t> rank_census(const Field& field, std::size_t t, unsigned workers, std::uint64_t guard) {
  const std::uint64_t count = hermitian_count(field, t, guard);
  std::vector<std::vector<std::uint64_t>> partial(chunk_count(count, workers), std::vector<std::uint64_t>(t + 1, 0));
  parallel_chunks(count, workers, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    auto& tally = partial[chunk];
    for (std::uint64_t i = begin; i < end; ++i) ++tally[hermitian_at(field, t, i).rank()];
  });
  std::vector<std::uint64_t> out(t + 1, 0);
  for (const auto& tally : partial)
    for (std::size_t h = 0; h <= t; ++h) out[h] += tally[h];
  return out;
}

}  // namespace hrmc
