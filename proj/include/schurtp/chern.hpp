#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "schurtp/partition.hpp"
#include "schurtp/poly.hpp"
#include "schurtp/schur_core.hpp"

namespace schurtp {

struct Slot {
  std::string name;
  unsigned rank = 0;

  friend bool operator==(const Slot& a, const Slot& b) {
    return a.name == b.name && a.rank == b.rank;
  }
};

/// Declared primitive bundles E_1..E_p with their ranks.  Fixes two variable
/// spaces: Chern variables c_i(E_k) (1 <= i <= rank, cohomological weight i)
/// and splitting-principle root variables (rank-many per slot, weight 1).
class BundleRing {
 public:
  explicit BundleRing(std::vector<Slot> slots) : slots_(std::move(slots)) {
    std::size_t chern = 0, root = 0;
    for (const Slot& s : slots_) {
      if (s.name.empty() || (!std::isalpha(static_cast<unsigned char>(s.name[0])) && s.name[0] != '_'))
        throw Error("InvalidArgument", "bad bundle name '" + s.name + "'");
      for (char ch : s.name)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
          throw Error("InvalidArgument", "bad bundle name '" + s.name + "'");
      chern_offsets_.push_back(chern);
      root_offsets_.push_back(root);
      chern += s.rank;
      root += s.rank;
      for (unsigned i = 1; i <= s.rank; ++i) chern_weights_.push_back(i);
    }
    chern_count_ = chern;
    root_count_ = root;
    for (std::size_t a = 0; a < slots_.size(); ++a)
      for (std::size_t b = a + 1; b < slots_.size(); ++b)
        if (slots_[a].name == slots_[b].name)
          throw Error("InvalidArgument", "duplicate bundle name '" + slots_[a].name + "'");
  }

  std::size_t slot_count() const noexcept { return slots_.size(); }
  const Slot& slot(std::size_t k) const { return slots_.at(k); }
  const std::vector<Slot>& slots() const noexcept { return slots_; }

  int find_slot(std::string_view name) const noexcept {
    for (std::size_t k = 0; k < slots_.size(); ++k)
      if (slots_[k].name == name) return static_cast<int>(k);
    return -1;
  }

  /// Index of the variable c_i(slot k), 1 <= i <= rank.
  std::size_t chern_var(std::size_t k, unsigned i) const {
    if (i < 1 || i > slots_.at(k).rank)
      throw Error("DegreeOverflow", "c" + std::to_string(i) + "(" + slots_[k].name +
                                        ") exceeds rank " + std::to_string(slots_[k].rank));
    return chern_offsets_[k] + i - 1;
  }

  /// Index of the j-th root variable of slot k, 0 <= j < rank.
  std::size_t root_var(std::size_t k, unsigned j) const { return root_offsets_[k] + j; }
  std::size_t root_offset(std::size_t k) const { return root_offsets_[k]; }

  std::size_t chern_count() const noexcept { return chern_count_; }
  std::size_t root_count() const noexcept { return root_count_; }

  std::span<const unsigned> chern_weights() const noexcept { return chern_weights_; }

  /// Cohomological degree of a polynomial in Chern variables.
  unsigned degree(const Poly& p) const noexcept { return p.degree(chern_weights_); }
  bool is_homogeneous(const Poly& p) const noexcept { return p.is_homogeneous(chern_weights_); }

  friend bool operator==(const BundleRing& a, const BundleRing& b) { return a.slots_ == b.slots_; }

 private:
  std::vector<Slot> slots_;
  std::vector<std::size_t> chern_offsets_, root_offsets_;
  std::vector<unsigned> chern_weights_;
  std::size_t chern_count_ = 0, root_count_ = 0;
};

/// Symbolic bundle built from the declared slots by the functor calculus:
/// dual, direct sum, tensor by a line bundle, symmetric powers, and jet
/// bundles (sum of Sym^i of the dual, 1 <= i <= k, tensored with the fibre).
/// Immutable expression tree with value semantics.
class FormalBundle {
 public:
  static FormalBundle zero() { return FormalBundle(make_node(Kind::Zero)); }
  static FormalBundle slot(std::size_t index) {
    auto n = make_node(Kind::Slot);
    n->slot = index;
    return FormalBundle(std::move(n));
  }
  static FormalBundle dual(FormalBundle base) {
    auto n = make_node(Kind::Dual);
    n->left = std::move(base.node_);
    return FormalBundle(std::move(n));
  }
  static FormalBundle sum(FormalBundle a, FormalBundle b) {
    auto n = make_node(Kind::Sum);
    n->left = std::move(a.node_);
    n->right = std::move(b.node_);
    return FormalBundle(std::move(n));
  }
  static FormalBundle tensor_line(FormalBundle base, FormalBundle line) {
    auto n = make_node(Kind::TensorLine);
    n->left = std::move(base.node_);
    n->right = std::move(line.node_);
    return FormalBundle(std::move(n));
  }
  static FormalBundle sym_power(FormalBundle base, unsigned k) {
    auto n = make_node(Kind::SymPower);
    n->left = std::move(base.node_);
    n->arg = k;
    return FormalBundle(std::move(n));
  }
  static FormalBundle jets(FormalBundle base, FormalBundle fibre, unsigned k) {
    auto n = make_node(Kind::Jets);
    n->left = std::move(base.node_);
    n->right = std::move(fibre.node_);
    n->arg = k;
    return FormalBundle(std::move(n));
  }

  unsigned rank(const BundleRing& ring) const { return rank_of(*node_, ring); }

  /// Chern roots as linear forms in the ring's root variables.
  std::vector<Poly> roots(const BundleRing& ring) const {
    std::vector<Poly> out;
    collect_roots(*node_, ring, out);
    return out;
  }

 private:
  enum class Kind { Zero, Slot, Dual, Sum, TensorLine, SymPower, Jets };
  struct Node {
    Kind kind = Kind::Zero;
    std::shared_ptr<const Node> left, right;
    std::size_t slot = 0;
    unsigned arg = 0;
  };

  static std::shared_ptr<Node> make_node(Kind kind) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    return n;
  }

  explicit FormalBundle(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static unsigned rank_of(const Node& n, const BundleRing& ring) {
    switch (n.kind) {
      case Kind::Zero:
        return 0;
      case Kind::Slot:
        return ring.slot(n.slot).rank;
      case Kind::Dual:
        return rank_of(*n.left, ring);
      case Kind::Sum:
        return rank_of(*n.left, ring) + rank_of(*n.right, ring);
      case Kind::TensorLine: {
        if (rank_of(*n.right, ring) != 1)
          throw Error("RankMismatch", "tensor_line requires a rank-1 twist");
        return rank_of(*n.left, ring);
      }
      case Kind::SymPower: {
        Int r = binomial(Int(rank_of(*n.left, ring)) + n.arg - 1, n.arg);
        return static_cast<unsigned>(r);
      }
      case Kind::Jets: {
        Int total = 0;
        unsigned base = rank_of(*n.left, ring);
        for (unsigned i = 1; i <= n.arg; ++i) total += binomial(Int(base) + i - 1, i);
        return static_cast<unsigned>(total * rank_of(*n.right, ring));
      }
    }
    return 0;
  }

  static void collect_roots(const Node& n, const BundleRing& ring, std::vector<Poly>& out) {
    switch (n.kind) {
      case Kind::Zero:
        return;
      case Kind::Slot: {
        const Slot& s = ring.slot(n.slot);
        for (unsigned j = 0; j < s.rank; ++j)
          out.push_back(Poly::variable(ring.root_var(n.slot, j)));
        return;
      }
      case Kind::Dual: {
        std::vector<Poly> base;
        collect_roots(*n.left, ring, base);
        for (Poly& r : base) out.push_back(-r);
        return;
      }
      case Kind::Sum:
        collect_roots(*n.left, ring, out);
        collect_roots(*n.right, ring, out);
        return;
      case Kind::TensorLine: {
        std::vector<Poly> base, line;
        collect_roots(*n.left, ring, base);
        collect_roots(*n.right, ring, line);
        if (line.size() != 1)
          throw Error("RankMismatch", "tensor_line requires a rank-1 twist");
        for (Poly& r : base) out.push_back(r + line[0]);
        return;
      }
      case Kind::SymPower: {
        std::vector<Poly> base;
        collect_roots(*n.left, ring, base);
        // multisets of size arg: weakly increasing index sequences
        std::vector<std::size_t> pick;
        auto recurse = [&](auto&& self, std::size_t from, unsigned left) -> void {
          if (left == 0) {
            Poly sum;
            for (std::size_t idx : pick) sum += base[idx];
            out.push_back(std::move(sum));
            return;
          }
          for (std::size_t idx = from; idx < base.size(); ++idx) {
            pick.push_back(idx);
            self(self, idx, left - 1);
            pick.pop_back();
          }
        };
        recurse(recurse, 0, n.arg);
        return;
      }
      case Kind::Jets: {
        std::vector<Poly> fibre;
        collect_roots(*n.right, ring, fibre);
        auto dual_node = make_node(Kind::Dual);
        dual_node->left = n.left;
        for (unsigned i = 1; i <= n.arg; ++i) {
          std::vector<Poly> sym;
          auto sym_node = make_node(Kind::SymPower);
          sym_node->left = dual_node;
          sym_node->arg = i;
          collect_roots(*sym_node, ring, sym);
          for (const Poly& s : sym)
            for (const Poly& f : fibre) out.push_back(s + f);
        }
        return;
      }
    }
  }

  std::shared_ptr<const Node> node_;
};

namespace detail {

/// e_0..e_up_to of the given root forms, built incrementally.
inline std::vector<Poly> elementary_all(std::span<const Poly> roots, unsigned up_to) {
  std::vector<Poly> e(up_to + 1);
  e[0] = Poly::one();
  unsigned filled = 0;
  for (const Poly& r : roots) {
    unsigned top = std::min<unsigned>(up_to, filled + 1);
    for (unsigned d = top; d >= 1; --d) e[d] += e[d - 1] * r;
    filled = top;
  }
  return e;
}

/// Rewrites a polynomial that is symmetric within every slot's root block
/// as a polynomial in the Chern variables, by repeatedly stripping the
/// lexicographically leading term against products of elementary symmetric
/// polynomials.
inline Poly roots_to_chern(const BundleRing& ring, Poly root_poly) {
  // per-slot elementary symmetric polynomials in the block variables
  std::vector<std::vector<Poly>> block_elem(ring.slot_count());
  for (std::size_t k = 0; k < ring.slot_count(); ++k) {
    unsigned rank = ring.slot(k).rank;
    std::vector<Poly> vars;
    for (unsigned j = 0; j < rank; ++j) vars.push_back(Poly::variable(ring.root_var(k, j)));
    block_elem[k] = elementary_all(vars, rank);
  }

  Poly out;
  while (!root_poly.is_zero()) {
    const auto [mono, coeff] = root_poly.leading_term();
    Mono chern_mono(ring.chern_count(), 0);
    Poly product = Poly::one();
    for (std::size_t k = 0; k < ring.slot_count(); ++k) {
      unsigned rank = ring.slot(k).rank;
      std::size_t base = ring.root_offset(k);
      auto exp_at = [&](unsigned j) -> std::uint32_t {
        std::size_t idx = base + j;
        return idx < mono.size() ? mono[idx] : 0;
      };
      for (unsigned j = 0; j + 1 < rank; ++j)
        if (exp_at(j) < exp_at(j + 1))
          throw Error("InvalidArgument", "polynomial is not symmetric in the slot roots");
      for (unsigned j = 0; j < rank; ++j) {
        std::uint32_t step = exp_at(j) - (j + 1 < rank ? exp_at(j + 1) : 0);
        if (step == 0) continue;
        chern_mono[ring.chern_var(k, j + 1)] += step;
        for (std::uint32_t rep = 0; rep < step; ++rep) product = product * block_elem[k][j + 1];
      }
    }
    out.add_term(chern_mono, coeff);
    root_poly -= coeff * product;
  }
  return out;
}

/// Substitutes c_i(slot) -> e_i(slot roots) everywhere.
inline Poly chern_to_roots(const BundleRing& ring, const Poly& chern_poly) {
  std::vector<Poly> images(ring.chern_count());
  for (std::size_t k = 0; k < ring.slot_count(); ++k) {
    unsigned rank = ring.slot(k).rank;
    std::vector<Poly> vars;
    for (unsigned j = 0; j < rank; ++j) vars.push_back(Poly::variable(ring.root_var(k, j)));
    std::vector<Poly> elem = elementary_all(vars, rank);
    for (unsigned i = 1; i <= rank; ++i) images[ring.chern_var(k, i)] = elem[i];
  }
  return chern_poly.substitute(images);
}

/// Schur polynomial s_shape in `nvars` variables indexed 0..nvars-1, by
/// Jacobi-Trudi over the complete homogeneous series.  Cached globally.
inline Poly schur_root_poly(unsigned nvars, const Partition& shape) {
  if (shape.length() > nvars) return {};
  if (shape.empty()) return Poly::one();
  static std::map<std::pair<unsigned, Partition>, Poly> cache;
  static std::mutex cache_mutex;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({nvars, shape});
    if (it != cache.end()) return it->second;
  }
  unsigned needed = shape.part(0) + static_cast<unsigned>(shape.length()) - 1;
  std::vector<Poly> vars;
  for (unsigned j = 0; j < nvars; ++j) vars.push_back(Poly::variable(j));
  std::vector<Poly> elem = elementary_all(vars, std::min(nvars, needed));
  std::vector<Poly> signed_elem(needed + 1);
  for (unsigned d = 0; d <= needed; ++d) {
    if (d < elem.size()) signed_elem[d] = (d % 2 == 0) ? elem[d] : -elem[d];
  }
  std::vector<Poly> complete = series_inverse(signed_elem, needed);
  Poly result = jacobi_trudi(shape, complete);
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::make_pair(nvars, shape), result);
  return result;
}

}  // namespace detail

/// i-th Chern class of a formal bundle, as an exact polynomial in the
/// primitive Chern variables (splitting principle).
inline Poly chern_class(const BundleRing& ring, const FormalBundle& bundle, unsigned i) {
  unsigned r = bundle.rank(ring);
  if (i > r)
    throw Error("DegreeOverflow",
                "c" + std::to_string(i) + " of a rank-" + std::to_string(r) + " bundle");
  if (i == 0) return Poly::one();
  std::vector<Poly> roots = bundle.roots(ring);
  std::vector<Poly> elem = detail::elementary_all(roots, i);
  return detail::roots_to_chern(ring, elem[i]);
}

/// Segre classes of the virtual bundle E - F:
///   sum_i S_i(E - F) = prod_b (1 - b) / prod_a (1 - a),
/// a = roots of E, b = roots of F.  Entry d of the result is the exact
/// degree-d class in Chern variables.
inline PowerSeriesSlice segre_series(const BundleRing& ring, const FormalBundle& e,
                                     const FormalBundle& f, unsigned up_to) {
  unsigned rank_e = e.rank(ring), rank_f = f.rank(ring);
  std::vector<Poly> numerator(std::min(rank_f, up_to) + 1);
  for (unsigned j = 0; j < numerator.size(); ++j) {
    numerator[j] = chern_class(ring, f, j);
    if (j % 2 == 1) numerator[j] = -numerator[j];
  }
  std::vector<Poly> denominator(std::min(rank_e, up_to) + 1);
  for (unsigned j = 0; j < denominator.size(); ++j) {
    denominator[j] = chern_class(ring, e, j);
    if (j % 2 == 1) denominator[j] = -denominator[j];
  }
  return series_multiply(numerator, series_inverse(denominator, up_to), up_to);
}

/// Chern series of the virtual bundle E - F: c(E)/c(F), truncated.
inline PowerSeriesSlice virtual_chern_series(const BundleRing& ring, const FormalBundle& e,
                                             const FormalBundle& f, unsigned up_to) {
  unsigned rank_e = e.rank(ring), rank_f = f.rank(ring);
  std::vector<Poly> numerator(std::min(rank_e, up_to) + 1);
  for (unsigned j = 0; j < numerator.size(); ++j) numerator[j] = chern_class(ring, e, j);
  std::vector<Poly> denominator(std::min(rank_f, up_to) + 1);
  for (unsigned j = 0; j < denominator.size(); ++j) denominator[j] = chern_class(ring, f, j);
  return series_multiply(numerator, series_inverse(denominator, up_to), up_to);
}

/// Schur function of a virtual bundle: S_I(E - F) = det(S_{i_p-p+q}(E - F)).
inline Poly super_schur(const BundleRing& ring, const Partition& shape, const FormalBundle& e,
                        const FormalBundle& f) {
  if (shape.empty()) return Poly::one();
  unsigned needed = shape.part(0) + static_cast<unsigned>(shape.length()) - 1;
  return jacobi_trudi(shape, segre_series(ring, e, f, needed));
}

/// Expansion of a Chern-class polynomial in the basis of products of Schur
/// functions, one factor per slot, with a per-slot variance flag (true =
/// the slot enters through its dual).
struct ProductSchurExpansion {
  BundleRing ring;
  std::vector<bool> dual;
  std::map<PartitionTuple, Int, TupleLess> terms;
};

inline ProductSchurExpansion expand_product_schur(const BundleRing& ring, const Poly& input,
                                                  std::vector<bool> dual = {}) {
  if (dual.empty()) dual.assign(ring.slot_count(), false);
  if (dual.size() != ring.slot_count())
    throw Error("InvalidArgument", "variance flag count does not match slot count");

  ProductSchurExpansion out{ring, dual, {}};
  Poly rest = detail::chern_to_roots(ring, input);
  while (!rest.is_zero()) {
    const auto [mono, coeff] = rest.leading_term();
    PartitionTuple tuple(ring.slot_count());
    int sign = 1;
    Poly basis = Poly::one();
    for (std::size_t k = 0; k < ring.slot_count(); ++k) {
      unsigned rank = ring.slot(k).rank;
      std::size_t base = ring.root_offset(k);
      std::vector<unsigned> exps;
      for (unsigned j = 0; j < rank; ++j) {
        std::size_t idx = base + j;
        exps.push_back(idx < mono.size() ? mono[idx] : 0);
      }
      Partition shape(std::move(exps));  // throws if not weakly decreasing
      if (dual[k] && shape.weight() % 2 == 1) sign = -sign;
      if (!shape.empty())
        basis = basis * detail::schur_root_poly(rank, shape).shift_variables(base);
      tuple[k] = std::move(shape);
    }
    Int alpha = sign > 0 ? coeff : -coeff;
    auto [it, inserted] = out.terms.try_emplace(std::move(tuple), alpha);
    if (!inserted) {
      it->second += alpha;
      if (it->second == 0) out.terms.erase(it);
    }
    rest -= coeff * basis;  // alpha * (sign * basis)
  }
  return out;
}

/// Re-evaluates an expansion through super_schur; exact inverse of
/// expand_product_schur.
inline Poly evaluate_expansion(const ProductSchurExpansion& expansion) {
  Poly out;
  for (const auto& [tuple, coeff] : expansion.terms) {
    Poly term(coeff);
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      if (tuple[k].empty()) continue;
      FormalBundle base = FormalBundle::slot(k);
      if (expansion.dual[k]) base = FormalBundle::dual(std::move(base));
      term = term * super_schur(expansion.ring, tuple[k], base, FormalBundle::zero());
    }
    out += term;
  }
  return out;
}

/// Stable expansion of a homogeneous class in S_I(E* - F*): coefficients
/// alpha_I are read off as beta_{I,empty} from the product expansion in
/// S_I(E*) S_J(F), then validated by exact reconstruction.
struct StableExpansion {
  BundleRing ring;
  std::size_t e_slot, f_slot;
  std::map<Partition, Int> terms;
};

inline StableExpansion stable_expand(const BundleRing& ring, const Poly& input,
                                     std::size_t e_slot = 0, std::size_t f_slot = 1) {
  if (ring.slot_count() != 2 || e_slot == f_slot || e_slot > 1 || f_slot > 1)
    throw Error("InvalidArgument", "stable_expand needs a two-slot ring");
  if (!ring.is_homogeneous(input))
    throw Error("InvalidArgument", "stable_expand requires a homogeneous input");

  std::vector<bool> dual(2, false);
  dual[e_slot] = true;
  ProductSchurExpansion beta = expand_product_schur(ring, input, dual);

  StableExpansion out{ring, e_slot, f_slot, {}};
  for (const auto& [tuple, coeff] : beta.terms)
    if (tuple[f_slot].empty()) out.terms.emplace(tuple[e_slot], coeff);

  FormalBundle e_dual = FormalBundle::dual(FormalBundle::slot(e_slot));
  FormalBundle f_dual = FormalBundle::dual(FormalBundle::slot(f_slot));
  Poly reconstructed;
  for (const auto& [shape, coeff] : out.terms)
    reconstructed += coeff * super_schur(ring, shape, e_dual, f_dual);
  if (reconstructed != input)
    throw Error("NotSupersymmetric",
                "class is not a polynomial in the virtual difference of the two slots");
  return out;
}

/// Thom polynomial of the A1 singularity: c_{n-m+1}(F - E) over slots
/// E (rank m) and F (rank n >= m).
inline Poly a1_thom(const BundleRing& ring, std::size_t e_slot = 0, std::size_t f_slot = 1) {
  unsigned m = ring.slot(e_slot).rank, n = ring.slot(f_slot).rank;
  if (n < m) throw Error("RankOrder", "a1_thom needs rank(F) >= rank(E)");
  unsigned degree = n - m + 1;
  return virtual_chern_series(ring, FormalBundle::slot(f_slot), FormalBundle::slot(e_slot),
                              degree)[degree];
}

struct A1Thom {
  BundleRing ring;
  Poly tp;
};

inline A1Thom a1_thom(unsigned m, unsigned n) {
  BundleRing ring({{"E", m}, {"F", n}});
  Poly tp = a1_thom(ring);
  return {std::move(ring), std::move(tp)};
}

/// Exact check of the two published forms of the A1 Thom polynomial:
/// c_{n-m+1}(F - E) against sum_i S_{n-m+1-i}(E*) c_i(F).
inline bool verify_a1_identity(unsigned m, unsigned n) {
  if (n < m) throw Error("RankOrder", "verify_a1_identity needs n >= m");
  BundleRing ring({{"E", m}, {"F", n}});
  Poly lhs = a1_thom(ring);
  unsigned degree = n - m + 1;
  FormalBundle e_dual = FormalBundle::dual(FormalBundle::slot(0));
  FormalBundle f = FormalBundle::slot(1);
  Poly rhs;
  for (unsigned i = 0; i <= degree && i <= n; ++i) {
    Partition row = degree - i == 0 ? Partition{} : Partition{degree - i};
    rhs += super_schur(ring, row, e_dual, FormalBundle::zero()) * chern_class(ring, f, i);
  }
  return lhs == rhs;
}

}  // namespace schurtp
