// Command-line front end: declares bundle rings, parses Chern-class
// expressions, and prints deterministic text or JSON reports.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "schurtp/schurtp.hpp"

namespace {

using namespace schurtp;

struct Report {
  std::string text;
  Json json;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(sep, start);
    out.push_back(text.substr(start, end == std::string::npos ? end : end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

PartitionTuple parse_tuple(const std::string& text) {
  PartitionTuple out;
  for (const std::string& part : split(text, ';')) out.push_back(parse_partition(part));
  return out;
}

std::vector<GrassBox> parse_boxes(const std::string& text) {
  std::vector<GrassBox> out;
  for (const std::string& item : split(text, ';')) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    };
    auto fail = [&] { return Error("SyntaxError", "bad box '" + item + "', expected (m,n)", pos); };
    auto number = [&]() -> unsigned {
      skip_ws();
      if (pos >= item.size() || !std::isdigit(static_cast<unsigned char>(item[pos]))) throw fail();
      unsigned long v = 0;
      while (pos < item.size() && std::isdigit(static_cast<unsigned char>(item[pos]))) {
        v = v * 10 + static_cast<unsigned long>(item[pos] - '0');
        if (v > 1000) throw fail();
        ++pos;
      }
      return static_cast<unsigned>(v);
    };
    skip_ws();
    if (pos >= item.size() || item[pos] != '(') throw fail();
    ++pos;
    unsigned rows = number();
    skip_ws();
    if (pos >= item.size() || item[pos] != ',') throw fail();
    ++pos;
    unsigned cols = number();
    skip_ws();
    if (pos >= item.size() || item[pos] != ')') throw fail();
    ++pos;
    skip_ws();
    if (pos != item.size()) throw fail();
    out.push_back({rows, cols});
  }
  return out;
}

std::string positivity_text(const PositivityReport& report) {
  std::string out;
  out += "nonnegative: " + std::string(report.all_nonnegative ? "true" : "false") + "\n";
  out += "sum: " + report.coefficient_sum.str() + "\n";
  for (const auto& [tuple, coeff] : report.negative_terms)
    out += "negative: " + tuple_to_string(tuple) + " = " + coeff.str() + "\n";
  return out;
}

Report run_expand(const std::string& ring_text, const std::string& expr_text,
                  const std::string& dual_text, std::optional<unsigned> max_degree) {
  RingDecl decl = parse_ring_decl(ring_text);
  decl.max_degree = max_degree;
  BundleRing ring(decl.slots);
  std::vector<bool> dual(ring.slot_count(), false);
  if (!dual_text.empty()) {
    for (const std::string& name : split(dual_text, ',')) {
      int slot = ring.find_slot(name);
      if (slot < 0) throw Error("UnknownBundle", "unknown bundle '" + name + "' in --dual");
      dual[static_cast<std::size_t>(slot)] = true;
    }
  }
  Poly value = evaluate_expr(ring, parse_expr(expr_text, ring), decl.max_degree);
  ProductSchurExpansion expansion = expand_product_schur(ring, value, dual);
  PositivityReport report = check_positivity(expansion);

  Report out;
  out.text = "expansion: " + expansion_to_expression(expansion) + "\n" +
             "terms: " + std::to_string(expansion.terms.size()) + "\n" +
             positivity_text(report);
  out.json = expansion_json(expansion, &report);
  return out;
}

Report run_stable(const std::string& ring_text, const std::string& expr_text,
                  std::optional<unsigned> max_degree) {
  RingDecl decl = parse_ring_decl(ring_text);
  decl.max_degree = max_degree;
  BundleRing ring(decl.slots);
  Poly value = evaluate_expr(ring, parse_expr(expr_text, ring), decl.max_degree);
  StableExpansion stable = stable_expand(ring, value);
  Report out;
  out.text = "expansion: " + stable_to_expression(stable) + "\n" +
             "terms: " + std::to_string(stable.terms.size()) + "\n";
  out.json = stable_json(stable);
  return out;
}

Report run_lr(const std::string& left_text, const std::string& right_text) {
  Partition left = parse_partition(left_text), right = parse_partition(right_text);
  auto coefficients = lr_coefficients(left, right);
  Report out;
  Json terms = Json::array();
  for (const auto& [shape, coeff] : coefficients) {
    out.text += shape.to_string() + ": " + coeff.str() + "\n";
    terms.push_back({{"partition", partition_json(shape)}, {"coeff", coeff.str()}});
  }
  out.json = {{"left", partition_json(left)},
              {"right", partition_json(right)},
              {"terms", std::move(terms)}};
  return out;
}

Report run_giambelli(const std::string& partition_text, unsigned rows, unsigned cols) {
  Partition shape = parse_partition(partition_text);
  GrassmannRing ring({{rows, cols}});
  GrassmannClass via_determinant = giambelli(ring, 0, shape);
  bool matches = via_determinant == schubert_class(ring, {shape});
  Report out;
  out.text = "class: " + class_to_string(via_determinant) + "\n" +
             "matches basis: " + (matches ? "true" : "false") + "\n";
  out.json = {{"partition", partition_json(shape)},
              {"m", rows},
              {"n", cols},
              {"class", class_json(via_determinant)},
              {"matches_basis", matches}};
  return out;
}

Report run_pair(const std::string& boxes_text, const std::string& left_text,
                const std::string& right_text) {
  GrassmannRing ring(parse_boxes(boxes_text));
  PartitionTuple left = parse_tuple(left_text), right = parse_tuple(right_text);
  Int value = integrate(schubert_class(ring, left) * schubert_class(ring, right));
  auto tuple_json = [](const PartitionTuple& tuple) {
    Json arr = Json::array();
    for (const Partition& p : tuple) arr.push_back(partition_json(p));
    return arr;
  };
  Report out;
  out.text = value.str() + "\n";
  out.json = {{"left", tuple_json(left)}, {"right", tuple_json(right)}, {"value", value.str()}};
  return out;
}

Report run_dij(const std::string& top_text, const std::string& bottom_text, unsigned size) {
  Partition top = parse_partition(top_text), bottom = parse_partition(bottom_text);
  Int value = binomial_det(top, bottom, size);
  Report out;
  out.text = value.str() + "\n";
  out.json = {{"I", partition_json(top)},
              {"J", partition_json(bottom)},
              {"m", size},
              {"value", value.str()}};
  return out;
}

Report run_corank(unsigned q, unsigned m) {
  CorankFormulaResult result = corank_thom(q, m);
  PositivityReport report = check_positivity(result.expansion);
  Report out;
  out.text = "thom: " + expansion_to_expression(result.expansion) + "\n" +
             "scale: " + result.scale.str() + "\n" +
             "integral: " + (result.integral ? "true" : "false") + "\n" +
             positivity_text(report);
  Json json{{"q", result.q},
            {"m", result.m},
            {"scale", result.scale.str()},
            {"integral", result.integral}};
  Json body = expansion_json(result.expansion, &report);
  for (auto& [key, value] : body.items()) json[key] = value;
  out.json = std::move(json);
  return out;
}

Report run_a1(unsigned m, unsigned n, bool verify) {
  auto [ring, tp] = a1_thom(m, n);
  Report out;
  out.text = poly_to_expression(ring, tp) + "\n";
  out.json = {{"m", m},
              {"n", n},
              {"degree", n - m + 1},
              {"expression", poly_to_expression(ring, tp)}};
  if (verify) {
    bool ok = verify_a1_identity(m, n);
    out.text += "identity: " + std::string(ok ? "true" : "false") + "\n";
    out.json["identity"] = ok;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Schur-function calculus for Thom polynomials of invariant cones"};
  app.require_subcommand(1);
  app.fallthrough();  // --json / --out may follow the subcommand

  bool json_mode = false;
  std::string out_path;
  app.add_flag("--json", json_mode, "emit the JSON report on stdout");
  app.add_option("--out", out_path, "also write the JSON report to this file");

  std::string ring_text, expr_text, dual_text;
  std::optional<unsigned> max_degree;
  auto* expand = app.add_subcommand("expand", "expand a class in products of Schur functions");
  expand->add_option("--ring", ring_text, "bundle slots, e.g. E:2,F:2")->required();
  expand->add_option("--expr", expr_text, "Chern-class expression")->required();
  expand->add_option("--dual", dual_text, "comma-separated slots expanded through their duals");
  expand->add_option("--max-degree", max_degree, "working-degree bound");

  std::string st_ring, st_expr;
  std::optional<unsigned> st_max_degree;
  auto* stable = app.add_subcommand("stable-expand",
                                    "expand in Schur functions of the virtual difference");
  stable->add_option("--ring", st_ring, "exactly two slots, e.g. E:2,F:3")->required();
  stable->add_option("--expr", st_expr, "homogeneous Chern-class expression")->required();
  stable->add_option("--max-degree", st_max_degree, "working-degree bound");

  std::string lr_left, lr_right;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
  lr->add_option("--left", lr_left, "partition, e.g. (2,1)")->required();
  lr->add_option("--right", lr_right, "partition")->required();

  std::string gi_partition;
  unsigned gi_rows = 0, gi_cols = 0;
  auto* gi = app.add_subcommand("giambelli", "Giambelli determinant inside a Grassmannian ring");
  gi->add_option("--partition", gi_partition, "Schubert index")->required();
  gi->add_option("--m", gi_rows, "box rows")->required();
  gi->add_option("--n", gi_cols, "box columns")->required();

  std::string pair_boxes, pair_left, pair_right;
  auto* pair = app.add_subcommand("pair", "intersection number of two Schubert classes");
  pair->add_option("--boxes", pair_boxes, "factor boxes, e.g. (2,3);(2,3)")->required();
  pair->add_option("--left", pair_left, "partition tuple, e.g. (2,1);(1)")->required();
  pair->add_option("--right", pair_right, "partition tuple")->required();

  std::string dij_top, dij_bottom;
  unsigned dij_size = 0;
  auto* dij = app.add_subcommand("dIJ", "Lascoux binomial determinant");
  dij->add_option("--I", dij_top, "row partition")->required();
  dij->add_option("--J", dij_bottom, "column partition")->required();
  dij->add_option("--m", dij_size, "determinant size")->required();

  unsigned ct_q = 0, ct_m = 0;
  auto* corank = app.add_subcommand("corank-thom", "Thom polynomial of the corank->=q locus");
  corank->add_option("--q", ct_q, "corank")->required();
  corank->add_option("--m", ct_m, "rank of the base bundle")->required();

  unsigned a1_m = 0, a1_n = 0;
  bool a1_verify = false;
  auto* a1 = app.add_subcommand("a1", "A1 Thom polynomial c_{n-m+1}(F - E)");
  a1->add_option("--m", a1_m, "source rank")->required();
  a1->add_option("--n", a1_n, "target rank")->required();
  a1->add_flag("--verify", a1_verify, "check the Segre-class form of the identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    Report report;
    if (expand->parsed()) {
      report = run_expand(ring_text, expr_text, dual_text, max_degree);
    } else if (stable->parsed()) {
      report = run_stable(st_ring, st_expr, st_max_degree);
    } else if (lr->parsed()) {
      report = run_lr(lr_left, lr_right);
    } else if (gi->parsed()) {
      report = run_giambelli(gi_partition, gi_rows, gi_cols);
    } else if (pair->parsed()) {
      report = run_pair(pair_boxes, pair_left, pair_right);
    } else if (dij->parsed()) {
      report = run_dij(dij_top, dij_bottom, dij_size);
    } else if (corank->parsed()) {
      report = run_corank(ct_q, ct_m);
    } else if (a1->parsed()) {
      report = run_a1(a1_m, a1_n, a1_verify);
    }
    if (!out_path.empty()) {
      std::ofstream file(out_path);
      if (!file) throw Error("InvalidArgument", "cannot open '" + out_path + "'");
      file << report.json.dump(2) << "\n";
    }
    if (json_mode) {
      std::cout << report.json.dump() << "\n";
    } else {
      std::cout << report.text;
    }
    return 0;
  } catch (const Error& e) {
    int exit_code = e.code() == "SyntaxError" ? 2 : 1;
    if (json_mode) {
      std::cout << error_json(e).dump() << "\n";
    } else {
      std::cerr << e.code() << ": " << e.what() << "\n";
    }
    return exit_code;
  }
}
