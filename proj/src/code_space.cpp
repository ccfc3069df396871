#include "hrmc/code_space.hpp"

#include <utility>

#include "hrmc/errors.hpp"
#include "hrmc/parallel.hpp"

namespace hrmc {

namespace {

using Row = std::vector<Field::Code>;

// Reduced row echelon form over F_q; zero rows are dropped. Returns pivot columns.
std::vector<std::size_t> rref(const Field& f, std::vector<Row>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Field::Code inv = f.inv(rows[r][col]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Field::Code factor = rows[i][col];
      for (std::size_t c = col; c < n; ++c) rows[i][c] = f.sub(rows[i][c], f.mul(factor, rows[r][c]));
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

Row unit_row(std::size_t n, std::size_t m) {
  Row e(n, 0);
  e[m] = 1;
  return e;
}

}  // namespace

LinearCode::LinearCode(Field field, std::size_t t, std::vector<Row> rows)
    : field_(std::move(field)), t_(t), rows_(std::move(rows)) {
  rref(field_, rows_);
}

LinearCode::LinearCode(Field field, std::size_t t, const std::vector<HermitianMatrix>& generators)
    : field_(std::move(field)), t_(t) {
  if (t == 0) throw InvalidArgument("matrix side must be at least 1");
  for (const auto& g : generators) {
    require_same_field(field_, g.field());
    if (g.t() != t) throw MixedDimensions("generator of size " + std::to_string(g.t()) + " in a code of size " + std::to_string(t));
    rows_.push_back(g.coordinates());
  }
  rref(field_, rows_);
}

LinearCode LinearCode::full(const Field& field, std::size_t t) {
  std::vector<Row> rows;
  for (std::size_t m = 0; m < t * t; ++m) rows.push_back(unit_row(t * t, m));
  return {field, t, std::move(rows)};
}

BigInt LinearCode::size() const { return pow_int(BigInt(field_.q()), dimension()); }

std::vector<HermitianMatrix> LinearCode::basis() const {
  std::vector<HermitianMatrix> out;
  for (const auto& r : rows_) out.push_back(HermitianMatrix::from_coordinates(field_, t_, r));
  return out;
}

HermitianMatrix LinearCode::codeword(std::uint64_t index) const {
  const std::size_t n = t_ * t_;
  Row acc(n, 0);
  const std::uint64_t q = field_.q();
  for (std::size_t i = rows_.size(); i-- > 0;) {
    const Field::Code c = field_.subfield()[index % q];
    index /= q;
    if (c == 0) continue;
    for (std::size_t m = 0; m < n; ++m) acc[m] = field_.add(acc[m], field_.mul(c, rows_[i][m]));
  }
  return HermitianMatrix::from_coordinates(field_, t_, acc);
}

bool LinearCode::contains(const HermitianMatrix& h) const {
  require_same_field(field_, h.field());
  if (h.t() != t_) throw DimensionMismatch("matrix size differs from code size");
  std::vector<Row> rows = rows_;
  rows.push_back(h.coordinates());
  rref(field_, rows);
  return rows.size() == rows_.size();
}

bool operator==(const LinearCode& a, const LinearCode& b) {
  return a.t_ == b.t_ && a.field_ == b.field_ && a.rows_ == b.rows_;
}

LinearCode make_code(const Field& field, std::size_t t, const std::vector<Matrix>& generators) {
  std::vector<HermitianMatrix> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.t() != t) throw MixedDimensions("generator of size " + std::to_string(g.t()) + " in a code of size " + std::to_string(t));
    gens.emplace_back(g);
  }
  return {field, t, gens};
}

std::uint64_t codeword_count(const LinearCode& code, std::uint64_t guard) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < code.dimension(); ++i) {
    if (count > guard / code.field().q()) {
      throw EnumerationTooLarge("q^k exceeds the enumeration guard " + std::to_string(guard));
    }
    count *= code.field().q();
  }
  if (count > guard) throw EnumerationTooLarge("q^k exceeds the enumeration guard " + std::to_string(guard));
  return count;
}

WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& opts) {
  const std::uint64_t count = codeword_count(code, opts.guard);
  const std::size_t t = code.t();
  std::vector<std::vector<std::uint64_t>> partial(chunk_count(count, opts.workers), std::vector<std::uint64_t>(t + 1, 0));
  parallel_chunks(count, opts.workers, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    auto& tally = partial[chunk];
    for (std::uint64_t i = begin; i < end; ++i) ++tally[code.codeword(i).rank()];
  });
  WeightDistribution w;
  w.counts.assign(t + 1, 0);
  for (const auto& tally : partial)
    for (std::size_t h = 0; h <= t; ++h) w.counts[h] += tally[h];
  return w;
}

LinearCode dual_code(const LinearCode& code) {
  const Field& f = code.field();
  const std::size_t t = code.t();
  const std::size_t n = t * t;
  std::vector<HermitianMatrix> units;
  for (std::size_t m = 0; m < n; ++m) units.push_back(HermitianMatrix::from_coordinates(f, t, unit_row(n, m)));

  std::vector<Row> system;
  for (const auto& g : code.basis()) {
    Row r(n);
    for (std::size_t m = 0; m < n; ++m) r[m] = inner_product(units[m], g).code();
    system.push_back(std::move(r));
  }
  const auto pivots = rref(f, system);

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Row> null_basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Row v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(system[r][free]);
    null_basis.push_back(std::move(v));
  }
  return {f, t, std::move(null_basis)};
}

LinearCode dual_code_brute_force(const LinearCode& code, const EnumerationOptions& opts) {
  const Field& f = code.field();
  const std::size_t t = code.t();
  const std::uint64_t count = hermitian_count(f, t, opts.guard);
  const auto basis = code.basis();
  std::vector<std::vector<Row>> partial(chunk_count(count, opts.workers));
  parallel_chunks(count, opts.workers, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const HermitianMatrix h = hermitian_at(f, t, i);
      bool orthogonal = true;
      for (const auto& g : basis) {
        if (!inner_product(h, g).is_zero()) {
          orthogonal = false;
          break;
        }
      }
      if (orthogonal) partial[chunk].push_back(h.coordinates());
    }
  });
  std::vector<Row> rows;
  for (auto& p : partial)
    for (auto& r : p) rows.push_back(std::move(r));
  return {f, t, std::move(rows)};
}

std::size_t min_distance(const LinearCode& code, const EnumerationOptions& opts) {
  if (code.dimension() == 0) throw ZeroCode("the zero code has no minimum distance");
  return *weight_distribution(code, opts).min_distance();
}

SingletonResult singleton_check(const LinearCode& code, const EnumerationOptions& opts) {
  SingletonResult out;
  out.min_distance = min_distance(code, opts);
  const std::size_t t = code.t();
  out.bound = pow_int(BigInt(code.field().q()), t * (t - out.min_distance + 1));
  const BigInt size = code.size();
  if (size > out.bound) throw BoundViolated("code size " + size.str() + " exceeds the Singleton bound " + out.bound.str());
  out.is_mhrd = size == out.bound;
  return out;
}

}  // namespace hrmc
