#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "schurtp/common.hpp"

namespace schurtp {

/// Weakly decreasing sequence of nonnegative integers in canonical form
/// (no trailing zeros).  Indexes Schur functions and Schubert classes.
///
/// The canonical total order -- weight first, then lexicographic on the
/// parts -- is the order used by every enumeration and report in the
/// library, so iteration over a std::map<Partition, ...> is already the
/// documented output order.
class Partition {
 public:
  Partition() = default;

  Partition(std::initializer_list<unsigned> parts)
      : Partition(std::vector<unsigned>(parts)) {}

  explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 1; i < parts_.size(); ++i) {
      if (parts_[i - 1] < parts_[i]) {
        throw Error("InvalidPartition", "parts must be weakly decreasing: " + to_string());
      }
    }
  }

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Part at 0-based row index; zero beyond the length.
  unsigned part(std::size_t row) const noexcept {
    return row < parts_.size() ? parts_[row] : 0u;
  }

  unsigned weight() const noexcept {
    unsigned total = 0;
    for (unsigned p : parts_) total += p;
    return total;
  }

  /// Transpose of the Young diagram.
  Partition conjugate() const {
    if (parts_.empty()) return {};
    std::vector<unsigned> cols(parts_[0], 0);
    for (unsigned p : parts_)
      for (unsigned col = 0; col < p; ++col) ++cols[col];
    return Partition(std::move(cols));
  }

  /// True iff the other diagram fits inside this one.
  bool contains(const Partition& inner) const noexcept {
    if (inner.length() > length()) return false;
    for (std::size_t row = 0; row < inner.length(); ++row)
      if (inner.parts_[row] > parts_[row]) return false;
    return true;
  }

  bool fits_box(unsigned rows, unsigned cols) const noexcept {
    return length() <= rows && part(0) <= cols;
  }

  /// Parts zero-padded to the requested length.
  std::vector<unsigned> padded(std::size_t len) const {
    if (len < parts_.size())
      throw Error("LengthOverflow", "partition " + to_string() + " is longer than " +
                                        std::to_string(len));
    std::vector<unsigned> out(parts_);
    out.resize(len, 0);
    return out;
  }

  /// Text form "(3,1)"; "()" for the empty partition.
  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
  }

  friend bool operator==(const Partition& a, const Partition& b) noexcept {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) noexcept {
    return !(a == b);
  }

  /// Canonical order: weight, then lexicographic on parts.
  friend bool operator<(const Partition& a, const Partition& b) noexcept {
    unsigned wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return std::lexicographical_compare(a.parts_.begin(), a.parts_.end(),
                                        b.parts_.begin(), b.parts_.end());
  }

 private:
  std::vector<unsigned> parts_;
};

/// J = (n - i_m, ..., n - i_1): the index of the complementary Schubert
/// class inside the m x n box.  |I| + |result| = m*n.
inline Partition box_complement(const Partition& shape, unsigned rows, unsigned cols) {
  if (!shape.fits_box(rows, cols)) {
    throw Error("BoxOverflow", "partition " + shape.to_string() + " does not fit a " +
                                   std::to_string(rows) + "x" + std::to_string(cols) + " box");
  }
  std::vector<unsigned> out(rows);
  for (unsigned row = 0; row < rows; ++row) out[row] = cols - shape.part(rows - 1 - row);
  return Partition(std::move(out));
}

/// rho_q = (q, q-1, ..., 1).
inline Partition staircase(unsigned q) {
  std::vector<unsigned> parts(q);
  for (unsigned i = 0; i < q; ++i) parts[i] = q - i;
  return Partition(std::move(parts));
}

namespace detail {

template <typename Fn>
void enumerate_decreasing(std::vector<unsigned>& row_values, unsigned row, unsigned rows,
                          unsigned max_part, Fn&& emit) {
  if (row == rows) {
    emit(row_values);
    return;
  }
  for (unsigned value = 0; value <= max_part; ++value) {
    row_values.push_back(value);
    enumerate_decreasing(row_values, row + 1, rows, value, emit);
    row_values.pop_back();
  }
}

}  // namespace detail

/// All partitions inside the m x n box, in canonical order.
inline std::vector<Partition> partitions_in_box(unsigned rows, unsigned cols) {
  std::vector<Partition> out;
  std::vector<unsigned> scratch;
  detail::enumerate_decreasing(scratch, 0, rows, cols, [&](const std::vector<unsigned>& v) {
    out.emplace_back(v);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// All subdiagrams of the given shape, in canonical order.
inline std::vector<Partition> partitions_contained_in(const Partition& shape) {
  std::vector<Partition> out;
  std::vector<unsigned> scratch;
  auto recurse = [&](auto&& self, std::size_t row, unsigned cap) -> void {
    if (row == shape.length()) {
      out.emplace_back(scratch);
      return;
    }
    unsigned bound = std::min(cap, shape.part(row));
    for (unsigned value = 0; value <= bound; ++value) {
      scratch.push_back(value);
      self(self, row + 1, value);
      scratch.pop_back();
    }
  };
  recurse(recurse, 0, shape.part(0));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// All partitions of the given weight with length/part bounds, canonical order.
inline std::vector<Partition> partitions_of_weight(unsigned weight, unsigned max_len,
                                                   unsigned max_part) {
  std::vector<Partition> out;
  std::vector<unsigned> scratch;
  auto recurse = [&](auto&& self, unsigned remaining, unsigned cap, unsigned rows_left) -> void {
    if (remaining == 0) {
      out.emplace_back(scratch);
      return;
    }
    if (rows_left == 0) return;
    for (unsigned value = std::min(cap, remaining); value >= 1; --value) {
      scratch.push_back(value);
      self(self, remaining - value, value, rows_left - 1);
      scratch.pop_back();
    }
  };
  recurse(recurse, weight, max_part, max_len);
  std::sort(out.begin(), out.end());
  return out;
}

/// Parses "(3,1)" (optional spaces) or "()".  Zero parts are accepted and
/// stripped; increasing sequences are rejected.
inline Partition parse_partition(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> Error {
    return Error("SyntaxError", "bad partition '" + std::string(text) + "': " + what, pos);
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '(') throw fail("expected '('");
  ++pos;
  std::vector<unsigned> parts;
  skip_ws();
  if (pos < text.size() && text[pos] == ')') {
    ++pos;
  } else {
    while (true) {
      skip_ws();
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw fail("expected integer");
      unsigned long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
        if (value > 1'000'000) throw fail("part too large");
        ++pos;
      }
      parts.push_back(static_cast<unsigned>(value));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw fail("expected ',' or ')'");
    }
  }
  skip_ws();
  if (pos != text.size()) throw fail("trailing characters");
  try {
    return Partition(std::move(parts));
  } catch (const Error&) {
    throw fail("parts must be weakly decreasing");
  }
}

/// Tuple of partitions, one per ring factor / bundle slot.
using PartitionTuple = std::vector<Partition>;

inline unsigned tuple_weight(const PartitionTuple& tuple) {
  unsigned total = 0;
  for (const Partition& p : tuple) total += p.weight();
  return total;
}

/// Order for reports and class storage: total weight, then componentwise
/// canonical partition order.
struct TupleLess {
  bool operator()(const PartitionTuple& a, const PartitionTuple& b) const noexcept {
    unsigned wa = tuple_weight(a), wb = tuple_weight(b);
    if (wa != wb) return wa < wb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

inline std::string tuple_to_string(const PartitionTuple& tuple) {
  std::string out;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ';';
    out += tuple[i].to_string();
  }
  return out;
}

}  // namespace schurtp
