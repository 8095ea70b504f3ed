#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "schurtp/common.hpp"

namespace schurtp {

/// Exponent vector in canonical form (no trailing zeros).  The meaning of
/// each variable index is supplied by context (Chern variables of a bundle
/// ring, or splitting-principle root variables).
using Mono = std::vector<std::uint32_t>;

/// Lexicographic order with earlier variables more significant; missing
/// exponents compare as zero.
struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const noexcept {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t ea = i < a.size() ? a[i] : 0;
      std::uint32_t eb = i < b.size() ? b[i] : 0;
      if (ea != eb) return ea < eb;
    }
    return false;
  }
};

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

/// Sparse multivariate polynomial with exact integer coefficients.
class Poly {
 public:
  using TermMap = std::map<Mono, Int, MonoLess>;

  Poly() = default;
  explicit Poly(Int constant) {
    if (constant != 0) terms_.emplace(Mono{}, std::move(constant));
  }
  Poly(Int coeff, Mono mono) {
    if (coeff != 0) {
      while (!mono.empty() && mono.back() == 0) mono.pop_back();
      terms_.emplace(std::move(mono), std::move(coeff));
    }
  }

  static Poly one() { return Poly(Int(1)); }
  static Poly variable(std::size_t index) {
    Mono m(index + 1, 0);
    m[index] = 1;
    return Poly(Int(1), std::move(m));
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  void add_term(const Mono& mono, const Int& coeff) {
    if (coeff == 0) return;
    Mono key = mono;
    while (!key.empty() && key.back() == 0) key.pop_back();
    auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& other) {
    if (&other == this) return *this *= Int(2);
    for (const auto& [mono, coeff] : other.terms_) add_term(mono, coeff);
    return *this;
  }
  Poly& operator-=(const Poly& other) {
    if (&other == this) {
      terms_.clear();
      return *this;
    }
    for (const auto& [mono, coeff] : other.terms_) add_term(mono, -coeff);
    return *this;
  }
  Poly& operator*=(const Int& scalar) {
    if (scalar == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [mono, coeff] : terms_) coeff *= scalar;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly out(a);
    for (auto& [mono, coeff] : out.terms_) coeff = -coeff;
    return out;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
  }
  friend Poly operator*(Poly a, const Int& s) { return a *= s; }
  friend Poly operator*(const Int& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Lexicographically greatest term; the polynomial must be nonzero.
  const std::pair<const Mono, Int>& leading_term() const { return *terms_.rbegin(); }

  /// Total degree with per-variable weights (variables beyond the weight
  /// span count with weight 1).
  unsigned degree(std::span<const unsigned> weights = {}) const noexcept {
    unsigned best = 0;
    for (const auto& [mono, coeff] : terms_) best = std::max(best, mono_degree(mono, weights));
    return best;
  }

  bool is_homogeneous(std::span<const unsigned> weights = {}) const noexcept {
    bool first = true;
    unsigned d = 0;
    for (const auto& [mono, coeff] : terms_) {
      unsigned md = mono_degree(mono, weights);
      if (first) {
        d = md;
        first = false;
      } else if (md != d) {
        return false;
      }
    }
    return true;
  }

  static unsigned mono_degree(const Mono& mono, std::span<const unsigned> weights = {}) noexcept {
    unsigned d = 0;
    for (std::size_t i = 0; i < mono.size(); ++i)
      d += mono[i] * (i < weights.size() ? weights[i] : 1u);
    return d;
  }

  /// Substitutes image[i] for variable i (indices beyond the table are an error).
  Poly substitute(std::span<const Poly> images) const {
    Poly out;
    for (const auto& [mono, coeff] : terms_) {
      Poly term(coeff);
      for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0) continue;
        if (i >= images.size())
          throw Error("InvalidArgument", "substitution table too short");
        Poly power = images[i];
        for (std::uint32_t rep = 1; rep < mono[i]; ++rep) power = power * images[i];
        term = term * power;
      }
      out += term;
    }
    return out;
  }

  /// Shifts every variable index upward by the offset.
  Poly shift_variables(std::size_t offset) const {
    Poly out;
    for (const auto& [mono, coeff] : terms_) {
      Mono shifted(mono.size() + offset, 0);
      std::copy(mono.begin(), mono.end(), shifted.begin() + static_cast<std::ptrdiff_t>(offset));
      out.add_term(shifted, coeff);
    }
    return out;
  }

 private:
  TermMap terms_;
};

/// Truncated product of degree-indexed series (entry d = homogeneous degree-d
/// coefficient; missing entries are zero).
inline std::vector<Poly> series_multiply(std::span<const Poly> a, std::span<const Poly> b,
                                         unsigned up_to) {
  std::vector<Poly> out(up_to + 1);
  for (unsigned i = 0; i < a.size() && i <= up_to; ++i) {
    if (a[i].is_zero()) continue;
    for (unsigned j = 0; j < b.size() && i + j <= up_to; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

/// Inverse of a series with constant term 1.
inline std::vector<Poly> series_inverse(std::span<const Poly> a, unsigned up_to) {
  if (a.empty() || a[0] != Poly::one())
    throw Error("InvalidArgument", "series inversion requires constant term 1");
  std::vector<Poly> out(up_to + 1);
  out[0] = Poly::one();
  for (unsigned d = 1; d <= up_to; ++d) {
    Poly acc;
    for (unsigned i = 1; i <= d && i < a.size(); ++i) acc += a[i] * out[d - i];
    out[d] = -acc;
  }
  return out;
}

/// Determinant over any commutative ring value type with +, unary -, and a
/// caller-supplied product.  Expansion along rows with memoization on the
/// column subset; `zero` seeds the accumulators (rings whose values carry
/// context, like Schubert classes, are not default-constructible).
template <typename T, typename Mul>
T determinant(const std::vector<std::vector<T>>& matrix, Mul&& mul, const T& zero) {
  std::size_t n = matrix.size();
  if (n == 0 || n > 63) throw Error("InvalidArgument", "bad determinant size");
  std::map<std::uint64_t, T> memo;
  auto solve = [&](auto&& self, std::size_t row, std::uint64_t cols) -> T {
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    T acc = zero;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::uint64_t bit = 1ull << c;
      if (!(cols & bit)) continue;
      T contribution = row + 1 == n ? matrix[row][c]
                                    : mul(matrix[row][c], self(self, row + 1, cols & ~bit));
      if (sign > 0) {
        acc = acc + contribution;
      } else {
        acc = acc + (-contribution);
      }
      sign = -sign;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return solve(solve, 0, (1ull << n) - 1);
}

template <typename T>
T determinant(const std::vector<std::vector<T>>& matrix) {
  return determinant(
      matrix, [](const T& a, const T& b) { return a * b; }, T{});
}

}  // namespace schurtp
