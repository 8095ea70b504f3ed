#pragma once

#include <map>
#include <span>
#include <vector>

#include "schurtp/chern.hpp"
#include "schurtp/partition.hpp"
#include "schurtp/schur_core.hpp"

namespace schurtp {

/// One Grassmannian factor: Schubert classes are indexed by partitions with
/// at most `rows` parts, each at most `cols` (the tautological quotient
/// bundle has rank `cols`).
struct GrassBox {
  unsigned rows = 0;
  unsigned cols = 0;

  friend bool operator==(const GrassBox& a, const GrassBox& b) {
    return a.rows == b.rows && a.cols == b.cols;
  }
};

/// Box-truncated cohomology ring of a product of Grassmannians.
class GrassmannRing {
 public:
  explicit GrassmannRing(std::vector<GrassBox> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw Error("InvalidArgument", "ring needs at least one factor");
  }

  std::size_t factor_count() const noexcept { return factors_.size(); }
  const GrassBox& factor(std::size_t i) const { return factors_.at(i); }

  bool fits(const PartitionTuple& tuple) const noexcept {
    if (tuple.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      if (!tuple[i].fits_box(factors_[i].rows, factors_[i].cols)) return false;
    return true;
  }

  /// Index tuple of the top class (every factor's full box).
  PartitionTuple top_tuple() const {
    PartitionTuple out(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
      out[i] = Partition(std::vector<unsigned>(factors_[i].rows, factors_[i].cols));
    return out;
  }

  unsigned top_degree() const noexcept {
    unsigned d = 0;
    for (const GrassBox& b : factors_) d += b.rows * b.cols;
    return d;
  }

  friend bool operator==(const GrassmannRing& a, const GrassmannRing& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator!=(const GrassmannRing& a, const GrassmannRing& b) { return !(a == b); }

 private:
  std::vector<GrassBox> factors_;
};

/// Integer combination of Schubert-class tuples in a product ring.
class GrassmannClass {
 public:
  explicit GrassmannClass(GrassmannRing ring) : ring_(std::move(ring)) {}

  const GrassmannRing& ring() const noexcept { return ring_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<PartitionTuple, Int, TupleLess>& terms() const noexcept { return terms_; }

  /// Adds coeff * sigma_tuple; tuples outside the boxes are dropped (they
  /// vanish in the truncated ring).
  void add_term(const PartitionTuple& tuple, const Int& coeff) {
    if (coeff == 0 || !ring_.fits(tuple)) return;
    auto [it, inserted] = terms_.try_emplace(tuple, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GrassmannClass& operator+=(const GrassmannClass& other) {
    require_same_ring(other);
    if (&other == this) return *this *= Int(2);
    for (const auto& [tuple, coeff] : other.terms_) add_term(tuple, coeff);
    return *this;
  }
  friend GrassmannClass operator+(GrassmannClass a, const GrassmannClass& b) { return a += b; }
  friend GrassmannClass operator-(const GrassmannClass& a) {
    GrassmannClass out(a.ring_);
    for (const auto& [tuple, coeff] : a.terms_) out.terms_.emplace(tuple, -coeff);
    return out;
  }
  GrassmannClass& operator*=(const Int& scalar) {
    if (scalar == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [tuple, coeff] : terms_) coeff *= scalar;
    return *this;
  }

  friend bool operator==(const GrassmannClass& a, const GrassmannClass& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  void require_same_ring(const GrassmannClass& other) const {
    if (!(ring_ == other.ring_))
      throw Error("RingMismatch", "classes live in different Grassmannian rings");
  }

 private:
  GrassmannRing ring_;
  std::map<PartitionTuple, Int, TupleLess> terms_;
};

/// Basis class sigma_tuple; throws BoxOverflow when an index leaves its box.
inline GrassmannClass schubert_class(const GrassmannRing& ring, const PartitionTuple& tuple) {
  if (tuple.size() != ring.factor_count())
    throw Error("InvalidArgument", "tuple length does not match factor count");
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (!tuple[i].fits_box(ring.factor(i).rows, ring.factor(i).cols))
      throw Error("BoxOverflow", "partition " + tuple[i].to_string() + " does not fit factor " +
                                     std::to_string(i));
  }
  GrassmannClass out(ring);
  out.add_term(tuple, 1);
  return out;
}

inline GrassmannClass unit_class(const GrassmannRing& ring) {
  return schubert_class(ring, PartitionTuple(ring.factor_count()));
}

/// Product in the truncated ring: factor-wise Littlewood-Richardson
/// expansion; keys leaving any box vanish.
inline GrassmannClass schubert_multiply(const GrassmannClass& a, const GrassmannClass& b) {
  a.require_same_ring(b);
  const GrassmannRing& ring = a.ring();
  GrassmannClass out(ring);
  for (const auto& [ta, ca] : a.terms()) {
    for (const auto& [tb, cb] : b.terms()) {
      // cartesian product of the per-factor LR expansions
      std::vector<std::pair<PartitionTuple, Int>> partial{{PartitionTuple{}, ca * cb}};
      for (std::size_t i = 0; i < ring.factor_count() && !partial.empty(); ++i) {
        std::vector<std::pair<PartitionTuple, Int>> next;
        std::map<Partition, Int> factor_product;
        if (ta[i].empty()) {
          factor_product.emplace(tb[i], 1);
        } else if (tb[i].empty()) {
          factor_product.emplace(ta[i], 1);
        } else {
          factor_product = lr_coefficients(ta[i], tb[i]);
        }
        for (const auto& [shape, lr] : factor_product) {
          if (!shape.fits_box(ring.factor(i).rows, ring.factor(i).cols)) continue;
          for (const auto& [tuple, coeff] : partial) {
            PartitionTuple extended = tuple;
            extended.push_back(shape);
            next.emplace_back(std::move(extended), coeff * lr);
          }
        }
        partial = std::move(next);
      }
      for (auto& [tuple, coeff] : partial) out.add_term(tuple, coeff);
    }
  }
  return out;
}

inline GrassmannClass operator*(const GrassmannClass& a, const GrassmannClass& b) {
  return schubert_multiply(a, b);
}

/// Degree map: coefficient of the tuple of full boxes.
inline Int integrate(const GrassmannClass& cls) {
  auto it = cls.terms().find(cls.ring().top_tuple());
  return it == cls.terms().end() ? Int(0) : it->second;
}

namespace detail {

/// c_j(Q) of one factor's tautological quotient bundle: the single-row class
/// sigma_(j), zero beyond the box width (rank Q = cols).
inline GrassmannClass quotient_chern(const GrassmannRing& ring, std::size_t factor, unsigned j) {
  GrassmannClass out(ring);
  if (j > ring.factor(factor).cols) return out;
  PartitionTuple tuple(ring.factor_count());
  if (j > 0) tuple[factor] = Partition{j};
  out.add_term(tuple, 1);
  return out;
}

}  // namespace detail

/// Giambelli determinant det(c_{i_p-p+q}(Q)) evaluated inside the ring;
/// reproduces the basis class sigma_shape.
inline GrassmannClass giambelli(const GrassmannRing& ring, std::size_t factor,
                                const Partition& shape) {
  const GrassBox& box = ring.factor(factor);
  if (!shape.fits_box(box.rows, box.cols))
    throw Error("BoxOverflow", "partition " + shape.to_string() + " does not fit a " +
                                   std::to_string(box.rows) + "x" + std::to_string(box.cols) +
                                   " box");
  if (shape.empty()) return unit_class(ring);
  std::size_t size = shape.length();
  std::vector<std::vector<GrassmannClass>> matrix(
      size, std::vector<GrassmannClass>(size, GrassmannClass(ring)));
  for (std::size_t p = 0; p < size; ++p) {
    for (std::size_t q = 0; q < size; ++q) {
      long sub = static_cast<long>(shape.part(p)) - static_cast<long>(p) + static_cast<long>(q);
      if (sub < 0) continue;
      matrix[p][q] = sub == 0 ? unit_class(ring)
                              : detail::quotient_chern(ring, factor, static_cast<unsigned>(sub));
    }
  }
  return determinant(
      matrix,
      [](const GrassmannClass& a, const GrassmannClass& b) { return schubert_multiply(a, b); },
      GrassmannClass(ring));
}

/// Evaluates a Chern-class polynomial at the tautological quotient bundles:
/// c_i(slot k) -> c_i(Q_k) = sigma_(i) in factor k.
inline GrassmannClass evaluate_at_quotients(const BundleRing& bundles, const Poly& input,
                                            const GrassmannRing& ring) {
  if (ring.factor_count() != bundles.slot_count())
    throw Error("InvalidArgument", "factor count does not match slot count");
  GrassmannClass out(ring);
  for (const auto& [mono, coeff] : input.terms()) {
    GrassmannClass term = unit_class(ring);
    term *= coeff;
    for (std::size_t k = 0; k < bundles.slot_count(); ++k) {
      for (unsigned i = 1; i <= bundles.slot(k).rank; ++i) {
        std::size_t var = bundles.chern_var(k, i);
        if (var >= mono.size()) continue;
        for (std::uint32_t rep = 0; rep < mono[var]; ++rep)
          term = schubert_multiply(term, detail::quotient_chern(ring, k, i));
      }
    }
    out += term;
  }
  return out;
}

/// Coefficient alpha_{I_1..I_p} of prod_k S_{I_k}(E_k) in a Chern-class
/// polynomial, computed geometrically: evaluate at the tautological quotient
/// bundles on a product of Grassmannians (boxes `box_rows` x rank_k), pair
/// with the complementary classes of the conjugates, and integrate.
inline Int extract_coefficient(const BundleRing& bundles, const Poly& input,
                               const PartitionTuple& tuple, unsigned box_rows) {
  if (tuple.size() != bundles.slot_count())
    throw Error("InvalidArgument", "tuple length does not match slot count");
  unsigned degree = bundles.degree(input);
  if (box_rows < degree)
    throw Error("BoxTooSmall", "boxes of height " + std::to_string(box_rows) +
                                   " cannot hold a degree-" + std::to_string(degree) + " class");

  std::vector<GrassBox> boxes;
  for (const Slot& s : bundles.slots()) boxes.push_back({box_rows, s.rank});
  GrassmannRing ring(std::move(boxes));

  PartitionTuple pairing(tuple.size());
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    Partition conj = tuple[k].conjugate();
    if (!conj.fits_box(ring.factor(k).rows, ring.factor(k).cols))
      throw Error("BoxOverflow", "index " + tuple[k].to_string() + " does not fit slot " +
                                     bundles.slot(k).name);
    pairing[k] = box_complement(conj, ring.factor(k).rows, ring.factor(k).cols);
  }

  GrassmannClass evaluated = evaluate_at_quotients(bundles, input, ring);
  return integrate(schubert_multiply(evaluated, schubert_class(ring, pairing)));
}

}  // namespace schurtp
