#pragma once

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "schurtp/chern.hpp"
#include "schurtp/grassmann.hpp"
#include "schurtp/poly.hpp"
#include "schurtp/thom.hpp"

namespace schurtp {

using Json = nlohmann::ordered_json;

namespace detail {

inline void append_signed_term(std::string& out, const Int& coeff, const std::string& monomial) {
  Int magnitude = coeff < 0 ? Int(-coeff) : coeff;
  if (out.empty()) {
    if (coeff < 0) out += '-';
  } else {
    out += coeff < 0 ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += magnitude.str();
  } else {
    if (magnitude != 1) out += magnitude.str() + "*";
    out += monomial;
  }
}

}  // namespace detail

/// Grammar-compatible text for a polynomial in Chern variables; terms in
/// degree order, then ascending lexicographic on the exponent vector.
inline std::string poly_to_expression(const BundleRing& ring, const Poly& poly) {
  if (poly.is_zero()) return "0";
  std::vector<std::pair<Mono, Int>> ordered(poly.terms().begin(), poly.terms().end());
  std::span<const unsigned> weights = ring.chern_weights();
  std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
    unsigned da = Poly::mono_degree(a.first, weights), db = Poly::mono_degree(b.first, weights);
    if (da != db) return da < db;
    return MonoLess{}(a.first, b.first);
  });
  std::string out;
  for (const auto& [mono, coeff] : ordered) {
    std::string factors;
    for (std::size_t k = 0; k < ring.slot_count(); ++k) {
      for (unsigned i = 1; i <= ring.slot(k).rank; ++i) {
        std::size_t var = ring.chern_var(k, i);
        if (var >= mono.size() || mono[var] == 0) continue;
        if (!factors.empty()) factors += '*';
        factors += "c" + std::to_string(i) + "(" + ring.slot(k).name + ")";
        if (mono[var] > 1) factors += "^" + std::to_string(mono[var]);
      }
    }
    detail::append_signed_term(out, coeff, factors);
  }
  return out;
}

/// Grammar-compatible text for a product-Schur expansion, e.g.
/// "S[(1)](E~) + S[(1)](F)".
inline std::string expansion_to_expression(const ProductSchurExpansion& expansion) {
  if (expansion.terms.empty()) return "0";
  std::string out;
  for (const auto& [tuple, coeff] : expansion.terms) {
    std::string factors;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      if (tuple[k].empty()) continue;
      if (!factors.empty()) factors += '*';
      factors += "S[" + tuple[k].to_string() + "](" + expansion.ring.slot(k).name +
                 (expansion.dual[k] ? "~)" : ")");
    }
    detail::append_signed_term(out, coeff, factors);
  }
  return out;
}

/// Text for a stable expansion, e.g. "S[(2)](E~ - F~)".
inline std::string stable_to_expression(const StableExpansion& expansion) {
  if (expansion.terms.empty()) return "0";
  std::string pair = "(" + expansion.ring.slot(expansion.e_slot).name + "~ - " +
                     expansion.ring.slot(expansion.f_slot).name + "~)";
  std::string out;
  for (const auto& [shape, coeff] : expansion.terms)
    detail::append_signed_term(out, coeff, "S[" + shape.to_string() + "]" + pair);
  return out;
}

inline Json partition_json(const Partition& shape) {
  Json arr = Json::array();
  for (unsigned p : shape.parts()) arr.push_back(p);
  return arr;
}

inline Json ring_json(const BundleRing& ring) {
  Json arr = Json::array();
  for (const Slot& s : ring.slots()) arr.push_back({{"name", s.name}, {"rank", s.rank}});
  return arr;
}

inline Json tuple_monomial_json(const BundleRing& ring, const PartitionTuple& tuple) {
  Json obj = Json::object();
  for (std::size_t k = 0; k < tuple.size(); ++k) obj[ring.slot(k).name] = partition_json(tuple[k]);
  return obj;
}

inline Json positivity_json(const BundleRing& ring, const PositivityReport& report) {
  Json negatives = Json::array();
  for (const auto& [tuple, coeff] : report.negative_terms)
    negatives.push_back({{"monomial", tuple_monomial_json(ring, tuple)}, {"coeff", coeff.str()}});
  return {{"nonnegative", report.all_nonnegative},
          {"sum", report.coefficient_sum.str()},
          {"negative_terms", std::move(negatives)}};
}

/// Report object for `expand` and friends:
///   {"ring":[...], "degree":N, "terms":[{"monomial":..,"dual":..,"coeff":".."}..],
///    "positivity":{...}}
inline Json expansion_json(const ProductSchurExpansion& expansion,
                           const PositivityReport* report = nullptr) {
  const BundleRing& ring = expansion.ring;
  unsigned degree = 0;
  for (const auto& [tuple, coeff] : expansion.terms)
    degree = std::max(degree, tuple_weight(tuple));
  Json dual = Json::object();
  for (std::size_t k = 0; k < ring.slot_count(); ++k)
    dual[ring.slot(k).name] = static_cast<bool>(expansion.dual[k]);
  Json terms = Json::array();
  for (const auto& [tuple, coeff] : expansion.terms)
    terms.push_back({{"monomial", tuple_monomial_json(ring, tuple)},
                     {"dual", dual},
                     {"coeff", coeff.str()}});
  Json out{{"ring", ring_json(ring)}, {"degree", degree}, {"terms", std::move(terms)}};
  if (report) out["positivity"] = positivity_json(ring, *report);
  return out;
}

inline Json stable_json(const StableExpansion& expansion) {
  Json terms = Json::array();
  for (const auto& [shape, coeff] : expansion.terms)
    terms.push_back({{"partition", partition_json(shape)}, {"coeff", coeff.str()}});
  unsigned degree = expansion.terms.empty() ? 0 : expansion.terms.begin()->first.weight();
  return {{"ring", ring_json(expansion.ring)},
          {"degree", degree},
          {"dual_pair", {expansion.ring.slot(expansion.e_slot).name,
                         expansion.ring.slot(expansion.f_slot).name}},
          {"terms", std::move(terms)},
          {"expression", stable_to_expression(expansion)}};
}

inline Json class_json(const GrassmannClass& cls) {
  Json boxes = Json::array();
  for (std::size_t i = 0; i < cls.ring().factor_count(); ++i)
    boxes.push_back({{"m", cls.ring().factor(i).rows}, {"n", cls.ring().factor(i).cols}});
  Json terms = Json::array();
  for (const auto& [tuple, coeff] : cls.terms()) {
    Json parts = Json::array();
    for (const Partition& p : tuple) parts.push_back(partition_json(p));
    terms.push_back({{"classes", std::move(parts)}, {"coeff", coeff.str()}});
  }
  return {{"boxes", std::move(boxes)}, {"terms", std::move(terms)}};
}

inline std::string class_to_string(const GrassmannClass& cls) {
  if (cls.is_zero()) return "0";
  std::string out;
  for (const auto& [tuple, coeff] : cls.terms())
    detail::append_signed_term(out, coeff, "sigma[" + tuple_to_string(tuple) + "]");
  return out;
}

inline Json error_json(const Error& error) {
  Json obj{{"code", error.code()}, {"message", error.what()}};
  if (error.position()) obj["position"] = *error.position();
  return Json{{"error", std::move(obj)}};
}

}  // namespace schurtp
