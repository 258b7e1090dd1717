#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "latinauto/autotopy.hpp"
#include "latinauto/bounds.hpp"
#include "latinauto/invariants.hpp"
#include "latinauto/latin.hpp"
#include "latinauto/perm.hpp"

namespace {

using namespace latinauto;

constexpr int kExitInputError = 2;
constexpr int kExitGuard = 3;

LatinSquare read_square(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(path + ": cannot open file");
  try {
    return LatinSquare::parse(in);
  } catch (const std::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

Isotopism read_isotopism(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Isotopism::parse(buf.str());
  } catch (const std::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int cmd_compute(const std::string& path, bool json, bool parallel) {
  LatinSquare square = read_square(path);
  Reduction red = reduce(square);
  AutotopyGroup reduced_group = autotopy_group(red.square, parallel);
  AutotopyGroup group = square.is_reduced()
                            ? std::move(reduced_group)
                            : conjugate_group(reduced_group, red.iso.inverse());
  if (json) {
    std::cout << group_to_json(group) << '\n';
    return 0;
  }
  std::cout << "n: " << group.n << '\n';
  std::cout << "pivot_row: " << pivot_product_bound(red.square).pivot << '\n';
  std::cout << "group_order: " << group.order() << '\n';
  int index = 0;
  for (const Isotopism& g : group.elements) {
    std::cout << "# element " << ++index << '\n';
    std::cout << "# alpha cycles: " << cycles(g.alpha).str() << '\n';
    std::cout << "# beta cycles:  " << cycles(g.beta).str() << '\n';
    std::cout << "# gamma cycles: " << cycles(g.gamma).str() << '\n';
    std::cout << g.to_text();
  }
  return 0;
}

int cmd_bounds(const std::string& path) {
  LatinSquare square = read_square(path);
  bool was_reduced = square.is_reduced();
  if (!was_reduced) {
    std::cerr << "note: input is not reduced; reporting bounds of its reduction\n";
    square = reduce(square).square;
  }
  BoundReport report = make_bound_report(square);
  SquareInvariants inv = compute_invariants(square);
  AutotopyGroup group = autotopy_group(square);

  nlohmann::json doc;
  doc["n"] = report.n;
  doc["universal"] = report.universal.str();
  doc["parity"] = report.parity.str();
  doc["cycle_partition"] = report.cycle_partition.str();
  doc["pivot_product"] = report.pivot_product.str();
  doc["pivot_row"] = report.pivot_row;
  doc["line_cycle"] = report.line_cycle.str();
  doc["line_cycle_count"] = report.line_cycle_count;
  doc["group_order"] = group.order();
  doc["invariants"] = {{"min_cycle_count", inv.min_cycle_count},
                       {"min_cycle_rows", inv.min_cycle_rows},
                       {"max_multiplicity", inv.max_multiplicity},
                       {"row_multiplicity", inv.row_multiplicity},
                       {"stable_rows", inv.stable_rows},
                       {"stable_count", inv.stable_count()}};
  if (!was_reduced) doc["note"] = "input was not reduced; values describe its reduction";
  std::cout << doc.dump(2) << '\n';
  return 0;
}

int cmd_gen(int n, std::uint64_t seed, int count, bool reduced) {
  for (int idx = 0; idx < count; ++idx)
    std::cout << jm_random(n, derive_seed(seed, idx), reduced).to_text();
  return 0;
}

int cmd_oracle(const std::string& path, bool force) {
  LatinSquare square = read_square(path);
  if (!square.is_reduced()) {
    std::cerr << "note: input is not reduced; the group of its reduction has the same order\n";
    square = reduce(square).square;
  }
  AutotopyGroup group = autotopy_group_brute(square, force);
  std::cout << "group_order: " << group.order() << '\n';
  return 0;
}

int cmd_verify(const std::string& square_path, const std::string& iso_path) {
  LatinSquare square = read_square(square_path);
  Isotopism theta = read_isotopism(iso_path);
  if (theta.size() != square.size())
    throw std::invalid_argument(iso_path + ": order " + std::to_string(theta.size()) +
                                " does not match square order " +
                                std::to_string(square.size()));
  std::cout << (verify_autotopism(square, theta) ? "member\n" : "non-member\n");
  return 0;
}

int cmd_bench(int n, int count, std::uint64_t seed, bool parallel) {
  std::vector<LatinSquare> squares;
  squares.reserve(count);
  for (int idx = 0; idx < count; ++idx)
    squares.push_back(jm_random(n, derive_seed(seed, idx), /*reduced=*/true));

  std::vector<double> times_ms;
  times_ms.reserve(count);
  long long total_order = 0;
  for (const LatinSquare& square : squares) {
    auto start = std::chrono::steady_clock::now();
    AutotopyGroup group = autotopy_group(square, parallel);
    auto stop = std::chrono::steady_clock::now();
    times_ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    total_order += group.order();
  }
  std::vector<double> sorted = times_ms;
  std::sort(sorted.begin(), sorted.end());
  const double total = std::accumulate(sorted.begin(), sorted.end(), 0.0);
  const double median = count % 2 ? sorted[count / 2]
                                  : 0.5 * (sorted[count / 2 - 1] + sorted[count / 2]);
  std::cout << "order: " << n << '\n'
            << "squares: " << count << '\n';
  std::cout.setf(std::ios::fixed);
  std::cout.precision(4);
  std::cout << "min_ms: " << sorted.front() << '\n'
            << "median_ms: " << median << '\n'
            << "mean_ms: " << total / count << '\n'
            << "max_ms: " << sorted.back() << '\n'
            << "total_ms: " << total << '\n';
  std::cout << "mean_group_order: " << static_cast<double>(total_order) / count << '\n';
  std::cout << "note: timing corpus is JM-random squares only; the structured"
               " low-autotopism corpora used elsewhere are not publicly available"
               " and are not reproduced here\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Autotopy groups of Latin squares via row cycle structure"};
  app.require_subcommand(1);

  std::string path, square_path, iso_path;
  bool json = false, parallel = false, reduced = false, force = false;
  int n = 0, count = 1;
  std::uint64_t seed = 0;

  CLI::App* compute = app.add_subcommand("compute", "Compute the autotopy group of a square");
  compute->add_option("file", path, "square file")->required();
  compute->add_flag("--json", json, "emit the group as JSON");
  compute->add_flag("--parallel", parallel, "parallel candidate search");

  CLI::App* bounds = app.add_subcommand("bounds", "Report group-order bounds as JSON");
  bounds->add_option("file", path, "square file")->required();

  CLI::App* gen = app.add_subcommand("gen", "Generate random squares");
  gen->add_option("-n", n, "order")->required();
  gen->add_option("--seed", seed, "seed");
  gen->add_option("--count", count, "number of squares");
  gen->add_flag("--reduced", reduced, "reduce each square");

  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive group computation (small orders)");
  oracle->add_option("file", path, "square file")->required();
  oracle->add_flag("--force", force, "override the order guard");

  CLI::App* verify = app.add_subcommand("verify", "Test an isotopism for membership");
  verify->add_option("square", square_path, "square file")->required();
  verify->add_option("isotopism", iso_path, "isotopism file (alpha, beta, gamma lines)")
      ->required();

  CLI::App* bench = app.add_subcommand("bench", "Time group computation on random squares");
  bench->add_option("-n", n, "order")->required();
  bench->add_option("--count", count, "number of squares")->required();
  bench->add_option("--seed", seed, "seed");
  bench->add_flag("--parallel", parallel, "parallel candidate search");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return cmd_compute(path, json, parallel);
    if (bounds->parsed()) return cmd_bounds(path);
    if (gen->parsed()) return cmd_gen(n, seed, count, reduced);
    if (oracle->parsed()) return cmd_oracle(path, force);
    if (verify->parsed()) return cmd_verify(square_path, iso_path);
    if (bench->parsed()) return cmd_bench(n, count, seed, parallel);
  } catch (const latinauto::guard_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return 0;
}
