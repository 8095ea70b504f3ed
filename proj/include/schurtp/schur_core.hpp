#pragma once

#include <limits>
#include <map>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "schurtp/partition.hpp"
#include "schurtp/poly.hpp"

namespace schurtp {

namespace detail {

/// Counts Littlewood-Richardson skew tableaux of shape outer/inner with
/// content `content`: column-strict fillings whose reverse reading word
/// (rows top to bottom, each row right to left) is a lattice word.
///
/// Cells are filled in reverse-reading-word order, so the lattice condition
/// and both tableau conditions can be checked incrementally.
inline Int count_lr_fillings(const Partition& outer, const Partition& inner,
                             const Partition& content) {
  struct Cell {
    unsigned row, col;
  };
  std::vector<Cell> cells;
  for (unsigned row = 0; row < outer.length(); ++row) {
    unsigned lo = inner.part(row), hi = outer.part(row);
    for (unsigned col = hi; col > lo; --col) cells.push_back({row, col - 1});
  }
  if (cells.size() != content.weight()) return 0;
  if (cells.empty()) return 1;

  unsigned letters = static_cast<unsigned>(content.length());
  std::vector<unsigned> counts(letters + 2, 0);
  // entry[row] holds the current filling of that row (0 = empty), sized to outer.
  std::vector<std::vector<unsigned>> entry(outer.length());
  for (unsigned row = 0; row < outer.length(); ++row) entry[row].assign(outer.part(row), 0);

  Int total = 0;
  auto place = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      ++total;
      return;
    }
    auto [row, col] = cells[idx];
    unsigned max_value = letters;
    if (col + 1 < outer.part(row)) max_value = std::min(max_value, entry[row][col + 1]);
    unsigned min_value = 1;
    if (row > 0 && col < outer.part(row - 1) && col >= inner.part(row - 1))
      min_value = std::max(min_value, entry[row - 1][col] + 1);
    for (unsigned value = min_value; value <= max_value; ++value) {
      if (counts[value] + 1 > content.part(value - 1)) continue;          // content bound
      if (value > 1 && counts[value] + 1 > counts[value - 1]) continue;   // lattice word
      ++counts[value];
      entry[row][col] = value;
      self(self, idx + 1);
      entry[row][col] = 0;
      --counts[value];
    }
  };
  place(place, 0);
  return total;
}

}  // namespace detail

/// Littlewood-Richardson structure constants: all K with c^K_{left,right} > 0.
/// Results are cached (the Grassmannian pairing path reuses products heavily);
/// the cache is guarded by a mutex and cleared when it grows past a bound.
inline std::map<Partition, Int> lr_coefficients(const Partition& left, const Partition& right) {
  using Key = std::pair<Partition, Partition>;
  static std::map<Key, std::map<Partition, Int>> cache;
  static std::mutex cache_mutex;
  constexpr std::size_t kCacheBound = 200000;

  Key key = right < left ? Key{right, left} : Key{left, right};  // c^K_{IJ} = c^K_{JI}
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  const Partition& inner = key.first;
  const Partition& content = key.second;
  std::map<Partition, Int> result;
  unsigned weight = inner.weight() + content.weight();
  unsigned max_len = static_cast<unsigned>(inner.length() + content.length());
  unsigned max_part = inner.part(0) + content.part(0);
  for (const Partition& candidate : partitions_of_weight(weight, max_len, max_part)) {
    if (!candidate.contains(inner)) continue;
    Int count = detail::count_lr_fillings(candidate, inner, content);
    if (count != 0) result.emplace(candidate, std::move(count));
  }

  std::lock_guard<std::mutex> lock(cache_mutex);
  if (cache.size() >= kCacheBound) cache.clear();
  cache.emplace(std::move(key), result);
  return result;
}

/// Element of the Schur-basis ring: finite integer combination of S_I,
/// truncated so that S_I = 0 once the length of I exceeds the ambient
/// variable count (kFreeRank = untruncated ring).
class SchurVector {
 public:
  static constexpr unsigned kFreeRank = std::numeric_limits<unsigned>::max();

  explicit SchurVector(unsigned rank = kFreeRank) : rank_(rank) {}

  static SchurVector unit(unsigned rank = kFreeRank) {
    SchurVector v(rank);
    v.add_term(Partition{}, 1);
    return v;
  }
  static SchurVector basis(const Partition& shape, unsigned rank = kFreeRank) {
    SchurVector v(rank);
    v.add_term(shape, 1);
    return v;
  }

  unsigned rank() const noexcept { return rank_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Partition, Int>& terms() const noexcept { return terms_; }

  void add_term(const Partition& shape, const Int& coeff) {
    if (coeff == 0) return;
    if (rank_ != kFreeRank && shape.length() > rank_) return;
    auto [it, inserted] = terms_.try_emplace(shape, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SchurVector& operator+=(const SchurVector& other) {
    require_same_rank(other);
    if (&other == this) return *this *= Int(2);
    for (const auto& [shape, coeff] : other.terms_) add_term(shape, coeff);
    return *this;
  }
  SchurVector& operator*=(const Int& scalar) {
    if (scalar == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [shape, coeff] : terms_) coeff *= scalar;
    return *this;
  }

  friend bool operator==(const SchurVector& a, const SchurVector& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_rank(const SchurVector& other) const {
    if (rank_ != other.rank_)
      throw Error("RankMismatch", "Schur vectors live in different truncations");
  }

  unsigned rank_;
  std::map<Partition, Int> terms_;
  friend SchurVector schur_multiply(const SchurVector&, const SchurVector&);
};

/// Bilinear extension of the LR rule; keys longer than the ambient rank drop out.
inline SchurVector schur_multiply(const SchurVector& a, const SchurVector& b) {
  a.require_same_rank(b);
  SchurVector out(a.rank());
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      Int c = ca * cb;
      for (const auto& [shape, lr] : lr_coefficients(sa, sb)) out.add_term(shape, c * lr);
    }
  }
  return out;
}

/// Degree-indexed series coefficients; entry d is the exact homogeneous
/// degree-d polynomial.  A Segre series always has entry 0 equal to 1.
using PowerSeriesSlice = std::vector<Poly>;

/// det( S_{i_p - p + q} ) over a degree-indexed series slice: entry with
/// negative subscript is 0, subscript 0 is 1, subscript d is series[d].
/// Throws InsufficientDegrees when the slice is shorter than
/// i_1 + length - 1.
inline Poly jacobi_trudi(const Partition& shape, std::span<const Poly> series) {
  if (shape.empty()) return Poly::one();
  std::size_t size = shape.length();
  unsigned needed = shape.part(0) + static_cast<unsigned>(size) - 1;
  if (series.size() <= needed)
    throw Error("InsufficientDegrees",
                "series provides " + std::to_string(series.size() ? series.size() - 1 : 0) +
                    " degrees, need " + std::to_string(needed));
  std::vector<std::vector<Poly>> matrix(size, std::vector<Poly>(size));
  for (std::size_t p = 0; p < size; ++p) {
    for (std::size_t q = 0; q < size; ++q) {
      long sub = static_cast<long>(shape.part(p)) - static_cast<long>(p) + static_cast<long>(q);
      if (sub < 0) continue;  // zero entry
      matrix[p][q] = sub == 0 ? Poly::one() : series[static_cast<std::size_t>(sub)];
    }
  }
  return determinant(matrix);
}

/// Brute-force Schur polynomial s_shape(x_1..x_nvars) as a sum over
/// semistandard tableaux.  Independent oracle for the LR and Jacobi-Trudi
/// paths; zero when the shape is longer than the variable count.
inline Poly monomial_oracle(const Partition& shape, unsigned nvars) {
  if (nvars < 1) throw Error("InvalidArgument", "oracle needs at least one variable");
  if (shape.length() > nvars) return {};
  if (shape.empty()) return Poly::one();

  std::vector<std::vector<unsigned>> entry(shape.length());
  for (std::size_t row = 0; row < shape.length(); ++row) entry[row].assign(shape.part(row), 0);
  Mono exponents(nvars, 0);
  Poly out;
  auto fill = [&](auto&& self, std::size_t row, std::size_t col) -> void {
    if (row == shape.length()) {
      out.add_term(exponents, 1);
      return;
    }
    std::size_t next_row = row, next_col = col + 1;
    if (next_col == shape.part(row)) {
      ++next_row;
      next_col = 0;
    }
    unsigned lo = 1;
    if (col > 0) lo = std::max(lo, entry[row][col - 1]);
    if (row > 0 && col < entry[row - 1].size()) lo = std::max(lo, entry[row - 1][col] + 1);
    for (unsigned value = lo; value <= nvars; ++value) {
      entry[row][col] = value;
      ++exponents[value - 1];
      self(self, next_row, next_col);
      --exponents[value - 1];
      entry[row][col] = 0;
    }
  };
  fill(fill, 0, 0);
  return out;
}

}  // namespace schurtp
