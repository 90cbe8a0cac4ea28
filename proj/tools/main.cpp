// Command-line front end: evaluation, minimax reports, partition listings,
// oracle cross-checks, bundled demonstrations and a small benchmark.
// Exit codes: 0 success, 1 failed identity or demo, 2 usage or parse
// error, 3 precondition violation.

#include "symsum/symsum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using symsum::Int;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Wrong flag syntax (distinct from violated library preconditions, which
// surface as std::invalid_argument and exit 3).
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Int parse_flag_int(const std::string& text, const std::string& flag) {
  try {
    return symsum::parse_int(text);
  } catch (const std::invalid_argument&) {
    throw usage_error(flag + ": expected an integer, got '" + text + "'");
  }
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

symsum::ExponentMultiset parse_exponents(const std::string& text) {
  std::vector<Int> values;
  for (const std::string& part : split_commas(text))
    values.push_back(parse_flag_int(part, "--exponents"));
  return symsum::ExponentMultiset(std::move(values));
}

symsum::UnitSubgroup make_subgroup(const symsum::ModRing& ring, const std::string& spec) {
  if (spec == "units") return symsum::full_unit_group(ring);
  if (spec.rfind("nth:", 0) == 0)
    return symsum::nth_residue_subgroup(ring, parse_flag_int(spec.substr(4), "--subgroup"));
  if (spec.rfind("gen:", 0) == 0) {
    std::vector<Int> generators;
    for (const std::string& part : split_commas(spec.substr(4)))
      generators.push_back(parse_flag_int(part, "--subgroup"));
    return symsum::generated_subgroup(ring, generators);
  }
  throw usage_error("--subgroup: expected units, nth:<n> or gen:<g1,g2,...>, got '" +
                    spec + "'");
}

std::vector<std::string> exponent_strings(const symsum::ExponentMultiset& exponents) {
  std::vector<std::string> out;
  for (const Int& a : exponents.exponents()) out.push_back(a.str());
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Positions are 0-based in the library; printed 1-based to match x1...xk.
std::vector<int> displayed_positions(const std::vector<std::size_t>& positions) {
  std::vector<int> out;
  for (std::size_t p : positions) out.push_back(static_cast<int>(p) + 1);
  return out;
}

std::string format_positions(const std::vector<std::size_t>& positions) {
  std::vector<std::string> parts;
  for (std::size_t p : positions) parts.push_back(std::to_string(p + 1));
  return "{" + join(parts, ",") + "}";
}

std::string format_partition(const symsum::Partition& partition) {
  std::vector<std::string> blocks;
  for (const auto& block : partition) blocks.push_back(format_positions(block));
  return join(blocks, ",");
}

void emit(const json& out, bool as_json) {
  if (as_json) {
    std::cout << out.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : out.items()) {
    if (key == "command") continue;
    std::cout << key << ": "
              << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

struct CommonFlags {
  std::string modulus;
  std::string subgroup = "units";
  std::string exponents;
  bool as_json = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool exponents_required) {
  cmd->add_option("--modulus", flags.modulus, "ring modulus m (>= 2)")->required();
  cmd->add_option("--subgroup", flags.subgroup,
                  "units | nth:<n> | gen:<g1,g2,...> (default units)");
  auto* exp =
      cmd->add_option("--exponents", flags.exponents, "comma-separated exponents a1,a2,...");
  if (exponents_required) exp->required();
  cmd->add_flag("--json", flags.as_json, "emit JSON instead of text");
}

json niceness_json(const symsum::NicenessReport& report) {
  json out;
  out["nice"] = report.nice;
  out["threshold"] = report.threshold;
  out["worst_value"] = report.worst_value;
  out["worst_subset"] = displayed_positions(report.worst_subset);
  out["family_size"] = report.family_size;
  out["vacuous"] = report.vacuous;
  return out;
}

int cmd_eval(const CommonFlags& flags, bool poly_mode, const std::string& poly,
             std::size_t arity, bool force) {
  const auto start = Clock::now();
  symsum::ModRing ring = symsum::make_ring(parse_flag_int(flags.modulus, "--modulus"));
  symsum::UnitSubgroup group = make_subgroup(ring, flags.subgroup);

  json out;
  out["command"] = "eval";
  out["modulus"] = ring.modulus().str();
  out["subgroup"] = flags.subgroup;

  if (poly_mode) {
    symsum::MonomialPolynomial f = symsum::parse_polynomial(poly, arity);
    symsum::PolynomialEvaluation result = symsum::eval_sum(group, f);
    out["poly"] = symsum::to_string(f);
    out["value"] = result.value.value().str();
    bool all_nice = true;
    bool mixed = false;
    json terms = json::array();
    for (std::size_t i = 0; i < result.terms.size(); ++i) {
      const auto& term = result.terms[i];
      all_nice = all_nice && term.details.nice;
      mixed = mixed || term.details.method != result.terms.front().details.method;
      json t;
      t["coefficient"] = term.coefficient.str();
      t["exponents"] = exponent_strings(f.terms[i].exponents);
      t["contribution"] = term.contribution.value().str();
      t["value"] = term.details.value.value().str();
      t["method"] = symsum::method_name(term.details.method);
      t["nice"] = term.details.nice;
      terms.push_back(std::move(t));
    }
    out["method"] = result.terms.empty() ? "closed_form"
                    : mixed              ? "mixed"
                         : symsum::method_name(result.terms.front().details.method);
    out["nice"] = all_nice;
    out["terms"] = std::move(terms);
  } else {
    symsum::ExponentMultiset exponents = parse_exponents(flags.exponents);
    symsum::Evaluation result = symsum::evaluate(group, exponents, force);
    out["exponents"] = exponent_strings(exponents);
    out["value"] = result.value.value().str();
    out["method"] = symsum::method_name(result.method);
    out["nice"] = result.nice;
    out["prefactor"] = result.prefactor.str();
    if (result.niceness) {
      out["threshold"] = result.niceness->threshold;
      out["worst_subset"] = displayed_positions(result.niceness->worst_subset);
    }
  }
  out["timing_ms"] = ms_since(start);
  emit(out, flags.as_json);
  return 0;
}

int cmd_nice(const CommonFlags& flags) {
  const auto start = Clock::now();
  symsum::ModRing ring = symsum::make_ring(parse_flag_int(flags.modulus, "--modulus"));
  symsum::UnitSubgroup group = make_subgroup(ring, flags.subgroup);
  symsum::ExponentMultiset exponents = parse_exponents(flags.exponents);
  symsum::NicenessReport report = symsum::is_a_nice(group, exponents);

  json out;
  out["command"] = "nice";
  out["modulus"] = ring.modulus().str();
  out["subgroup"] = flags.subgroup;
  out["exponents"] = exponent_strings(exponents);
  out.update(niceness_json(report));

  const Int total = exponents.total();
  if (report.nice && total % group.exponent() != 0) {
    if (auto witness = symsum::vanishing_witness(group, total)) {
      json w;
      w["base"] = witness->base.value().str();
      w["power"] = witness->power.value().str();
      w["shift_regular"] =
          ring.is_regular(witness->power + (-ring.one()));
      out["witness"] = std::move(w);
    } else {
      out["witness"] = nullptr;
    }
  }
  out["timing_ms"] = ms_since(start);
  emit(out, flags.as_json);
  return 0;
}

int cmd_partitions(const std::string& exponents_text, const std::string& lambda_text,
                   const std::string& order_text, const std::string& modulus_text,
                   const std::string& subgroup_spec, bool as_json) {
  const auto start = Clock::now();
  symsum::ExponentMultiset exponents = parse_exponents(exponents_text);

  std::int64_t lambda = 0;
  std::int64_t order = 0;
  std::optional<symsum::ModRing> ring;
  if (!modulus_text.empty()) {
    ring = symsum::make_ring(parse_flag_int(modulus_text, "--modulus"));
    symsum::UnitSubgroup group = make_subgroup(*ring, subgroup_spec);
    lambda = group.exponent();
    order = static_cast<std::int64_t>(group.size());
  } else if (!lambda_text.empty()) {
    lambda = parse_flag_int(lambda_text, "--lambda").convert_to<std::int64_t>();
    if (lambda < 1) throw std::invalid_argument("--lambda must be positive");
    // chi needs a group order; default to lambda when none is given
    order = order_text.empty()
                ? lambda
                : parse_flag_int(order_text, "--order").convert_to<std::int64_t>();
    if (order < 1) throw std::invalid_argument("--order must be positive");
  } else {
    throw usage_error("partitions: need --lambda or --modulus");
  }

  symsum::PartitionFamily family = symsum::valid_partitions(exponents, lambda);
  json out;
  out["command"] = "partitions";
  out["exponents"] = exponent_strings(exponents);
  out["lambda"] = lambda;
  out["order"] = order;
  if (ring) {
    out["modulus"] = ring->modulus().str();
    out["subgroup"] = subgroup_spec;
  }

  Int total = 0;
  json rows = json::array();
  for (const symsum::Partition& partition : family.partitions) {
    Int product = 1;
    json sums = json::array();
    json chis = json::array();
    for (const auto& block : partition) {
      Int sum = exponents.subset_sum(block);
      Int chi_value = symsum::chi(block.size(), order);
      product *= chi_value;
      sums.push_back(sum.str());
      chis.push_back(chi_value.str());
    }
    total += product;
    json row;
    row["blocks"] = format_partition(partition);
    row["sums"] = std::move(sums);
    row["chi"] = std::move(chis);
    row["product"] = product.str();
    rows.push_back(std::move(row));
  }
  out["partitions"] = std::move(rows);
  out["count"] = family.size();
  out["total"] = total.str();
  if (ring) out["value"] = ring->element(total).value().str();
  out["timing_ms"] = ms_since(start);

  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::size_t index = 0;
    for (const auto& row : out["partitions"]) {
      std::cout << "partition " << ++index << ": " << row["blocks"].get<std::string>()
                << " chi " << join(row["chi"].get<std::vector<std::string>>(), ",")
                << " product " << row["product"].get<std::string>() << "\n";
    }
    std::cout << "count: " << family.size() << "\n";
    std::cout << "lambda: " << lambda << "\norder: " << order << "\n";
    std::cout << "total: " << total.str() << "\n";
    if (ring)
      std::cout << "value: " << ring->element(total).value().str() << " (mod "
                << ring->modulus().str() << ")\n";
  }
  return 0;
}

int cmd_oracle(const CommonFlags& flags, const std::string& check) {
  const auto start = Clock::now();
  symsum::ModRing ring = symsum::make_ring(parse_flag_int(flags.modulus, "--modulus"));
  symsum::UnitSubgroup group = make_subgroup(ring, flags.subgroup);
  symsum::ExponentMultiset exponents = parse_exponents(flags.exponents);

  json out;
  out["command"] = "oracle";
  out["modulus"] = ring.modulus().str();
  out["subgroup"] = flags.subgroup;
  out["exponents"] = exponent_strings(exponents);
  out["check"] = check;

  bool holds = false;
  if (check == "p") {
    // pipeline vs exhaustive sum
    symsum::RingElement oracle = symsum::brute_force_p(group, exponents);
    symsum::Evaluation pipeline = symsum::evaluate(group, exponents);
    holds = oracle == pipeline.value;
    out["value"] = oracle.value().str();
    out["lhs"] = pipeline.value.value().str();
    out["rhs"] = oracle.value().str();
    out["method"] = symsum::method_name(pipeline.method);
    out["nice"] = pipeline.nice;
  } else if (check == "psharp") {
    // machine-word path vs arbitrary-precision path
    symsum::RingElement fast = symsum::brute_force_p_sharp(group, exponents);
    symsum::RingElement wide = symsum::detail::brute_force_p_wide(group, exponents, true);
    holds = fast == wide;
    out["value"] = fast.value().str();
    out["lhs"] = fast.value().str();
    out["rhs"] = wide.value().str();
  } else if (check == "eq4") {
    // truncated sum vs alternating subset sum
    symsum::InclusionExclusionCheck result =
        symsum::check_inclusion_exclusion(group, exponents);
    holds = result.holds;
    out["value"] = result.lhs.value().str();
    out["lhs"] = result.lhs.value().str();
    out["rhs"] = result.rhs.value().str();
  } else if (check == "npsharp") {
    if (exponents.total() % group.exponent() != 0)
      throw std::invalid_argument(
          "npsharp needs the exponent sum divisible by the group exponent");
    symsum::RingElement p = symsum::brute_force_p(group, exponents);
    symsum::RingElement n = ring.element(Int(group.size()));
    holds = true;
    for (std::size_t a = 0; a < exponents.size(); ++a) {
      symsum::RingElement rhs =
          n * symsum::brute_force_p_sharp(group, exponents.without(a));
      if (!(p == rhs)) {
        holds = false;
        out["counterexample_position"] = static_cast<int>(a) + 1;
        out["rhs"] = rhs.value().str();
        break;
      }
    }
    out["value"] = p.value().str();
    out["lhs"] = p.value().str();
  } else {
    throw usage_error("--check: expected p, psharp, eq4 or npsharp, got '" + check + "'");
  }

  out["holds"] = holds;
  out["timing_ms"] = ms_since(start);
  emit(out, flags.as_json);
  return holds ? 0 : 1;
}

struct DemoRow {
  const char* name;
  int modulus;
  const char* subgroup;
  std::vector<Int> exponents;
  std::uint64_t order_divisor;  // divide by k! for unordered statements
  int expected;
  const char* note;
};

const std::vector<DemoRow>& demo_rows() {
  static const std::vector<DemoRow> rows = {
      {"pierce-5-2", 5, "nth:2", {2}, 1, 2, "squares mod 5, sum of x^2"},
      {"pierce-13-3", 13, "nth:3", {2, 2}, 2, 11,
       "cubes mod 13, unordered pairs x^2 y^2"},
      {"wilson-7", 7, "units", {1, 1, 1, 1, 1, 1}, 720, 6,
       "product of all units mod 7"},
      {"abstract-9", 9, "units", {1, 5}, 1, 3, "units mod 9, x y^5"},
      {"abstract-27", 27, "units", {1, 17}, 1, 9, "units mod 27, x y^17"},
      {"example2-299", 299, "units", {1, 131}, 1, 35, "units mod 299, x y^131"},
  };
  return rows;
}

int cmd_demo(const std::string& only, bool as_json) {
  const auto start = Clock::now();
  json rows = json::array();
  bool all_ok = true;
  bool matched = false;
  for (const DemoRow& demo : demo_rows()) {
    if (!only.empty() && only != demo.name) continue;
    matched = true;
    symsum::ModRing ring = symsum::make_ring(demo.modulus);
    symsum::UnitSubgroup group = make_subgroup(ring, demo.subgroup);
    symsum::ExponentMultiset exponents(demo.exponents);
    symsum::Evaluation result = symsum::evaluate(group, exponents);
    symsum::RingElement brute = symsum::brute_force_p(group, exponents);
    symsum::RingElement computed = result.value;
    bool ok = result.value == brute;
    if (demo.order_divisor != 1) {
      auto inverse = ring.inverse(ring.element(symsum::factorial(
          static_cast<std::uint64_t>(exponents.size()))));
      if (inverse)
        computed = computed * *inverse;
      else
        ok = false;
    }
    ok = ok && computed.value() == demo.expected;
    all_ok = all_ok && ok;

    json row;
    row["name"] = demo.name;
    row["note"] = demo.note;
    row["modulus"] = std::to_string(demo.modulus);
    row["subgroup"] = demo.subgroup;
    row["exponents"] = exponent_strings(exponents);
    row["expected"] = std::to_string(demo.expected);
    row["computed"] = computed.value().str();
    row["method"] = symsum::method_name(result.method);
    row["ok"] = ok;
    rows.push_back(std::move(row));
  }
  if (!matched) throw usage_error("--name: no demo named '" + only + "'");

  if (as_json) {
    json out;
    out["command"] = "demo";
    out["demos"] = std::move(rows);
    out["ok"] = all_ok;
    out["timing_ms"] = ms_since(start);
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& row : rows) {
      std::cout << row["name"].get<std::string>() << ": expected "
                << row["expected"].get<std::string>() << ", computed "
                << row["computed"].get<std::string>() << " ("
                << row["note"].get<std::string>() << ") "
                << (row["ok"].get<bool>() ? "ok" : "MISMATCH") << "\n";
    }
    std::cout << (all_ok ? "all demos passed" : "demo mismatch") << "\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_bench(const std::string& modulus_text, const std::string& subgroup_spec,
              std::int64_t kmax, std::uint64_t seed, bool as_json) {
  const auto start = Clock::now();
  if (kmax < 1) throw std::invalid_argument("--kmax must be positive");
  symsum::ModRing ring = symsum::make_ring(parse_flag_int(modulus_text, "--modulus"));
  symsum::UnitSubgroup group = make_subgroup(ring, subgroup_spec);
  const std::int64_t lambda = group.exponent();
  std::mt19937_64 rng(seed);

  json rows = json::array();
  bool all_agree = true;
  for (std::int64_t k = std::min<std::int64_t>(2, kmax); k <= kmax; ++k) {
    if (k > static_cast<std::int64_t>(group.size())) break;
    // random sequence with exponent sum divisible by lambda, re-drawn
    // until the minimax test passes so the formula is actually justified
    std::vector<Int> exponents;
    symsum::NicenessReport report;
    for (int attempt = 0; attempt < 500; ++attempt) {
      exponents.clear();
      std::int64_t sum = 0;
      std::uniform_int_distribution<std::int64_t> draw(1, 2 * lambda);
      for (std::int64_t i = 0; i + 1 < k; ++i) {
        std::int64_t a = draw(rng);
        exponents.push_back(a);
        sum += a;
      }
      std::int64_t rest = (lambda - sum % lambda) % lambda;
      exponents.push_back(rest == 0 ? lambda : rest);
      report = symsum::is_a_nice(group, symsum::ExponentMultiset(exponents));
      if (report.nice) break;
    }
    symsum::ExponentMultiset sequence(exponents);

    const auto oracle_start = Clock::now();
    symsum::RingElement oracle = symsum::brute_force_p(group, sequence);
    const double oracle_ms = ms_since(oracle_start);

    const auto closed_start = Clock::now();
    symsum::Evaluation closed = symsum::evaluate(group, sequence, true);
    const double closed_ms = ms_since(closed_start);

    const bool agree = oracle == closed.value;
    all_agree = all_agree && agree;
    json row;
    row["k"] = k;
    row["exponents"] = exponent_strings(sequence);
    row["nice"] = report.nice;
    row["oracle_ms"] = oracle_ms;
    row["closed_ms"] = closed_ms;
    row["speedup"] = closed_ms > 0 ? oracle_ms / closed_ms : 0.0;
    row["value"] = oracle.value().str();
    row["agree"] = agree;
    rows.push_back(std::move(row));
  }

  if (as_json) {
    json out;
    out["command"] = "bench";
    out["modulus"] = ring.modulus().str();
    out["subgroup"] = subgroup_spec;
    out["kmax"] = kmax;
    out["rows"] = std::move(rows);
    out["agree"] = all_agree;
    out["timing_ms"] = ms_since(start);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "k  oracle_ms  closed_ms  speedup  agree  value\n";
    for (const auto& row : rows) {
      std::cout << row["k"].get<std::int64_t>() << "  " << row["oracle_ms"].get<double>()
                << "  " << row["closed_ms"].get<double>() << "  "
                << row["speedup"].get<double>() << "  "
                << (row["agree"].get<bool>() ? "yes" : "NO") << "  "
                << row["value"].get<std::string>() << "\n";
    }
  }
  return all_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Symmetric sums of monomials over pairwise-distinct elements of a "
      "subgroup of units of Z/mZ.\n"
      "Polynomial grammar: polynomial := ['+'|'-']? term (('+'|'-') term)*;\n"
      "term := [integer '*']? factor ('*' factor)*; factor := 'x' index "
      "['^' integer].\n"};
  app.require_subcommand(1);

  CommonFlags eval_flags;
  std::string eval_poly;
  std::size_t eval_arity = 0;
  bool eval_force = false;
  auto* eval = app.add_subcommand("eval", "evaluate a symmetric power sum");
  eval->add_option("--modulus", eval_flags.modulus, "ring modulus m (>= 2)")->required();
  eval->add_option("--subgroup", eval_flags.subgroup,
                   "units | nth:<n> | gen:<g1,g2,...> (default units)");
  auto* eval_exp = eval->add_option("--exponents", eval_flags.exponents,
                                    "comma-separated exponents a1,a2,...");
  auto* eval_poly_opt =
      eval->add_option("--poly", eval_poly, "polynomial text over x1..xk");
  auto* eval_arity_opt =
      eval->add_option("--arity", eval_arity, "variable count k for --poly");
  eval->add_flag("--force-closed-form", eval_force,
                 "apply the partition formula even when the minimax test fails");
  eval->add_flag("--json", eval_flags.as_json, "emit JSON instead of text");
  eval_exp->excludes(eval_poly_opt);
  eval_poly_opt->needs(eval_arity_opt);

  CommonFlags nice_flags;
  auto* nice = app.add_subcommand("nice", "minimax condition report");
  add_common(nice, nice_flags, true);

  std::string part_exponents, part_lambda, part_order, part_modulus;
  std::string part_subgroup = "units";
  bool part_json = false;
  auto* partitions =
      app.add_subcommand("partitions", "list divisible-sum partitions of the positions");
  partitions->add_option("--exponents", part_exponents, "comma-separated exponents")
      ->required();
  partitions->add_option("--lambda", part_lambda, "group exponent to test divisibility");
  partitions->add_option("--order", part_order,
                         "group order for the block weights (default: lambda)");
  partitions->add_option("--modulus", part_modulus, "derive lambda and order from a ring");
  partitions->add_option("--subgroup", part_subgroup, "subgroup spec used with --modulus");
  partitions->add_flag("--json", part_json, "emit JSON instead of text");

  CommonFlags oracle_flags;
  std::string oracle_check;
  auto* oracle = app.add_subcommand("oracle", "exhaustive cross-checks and identities");
  add_common(oracle, oracle_flags, true);
  oracle->add_option("--check", oracle_check, "p | psharp | eq4 | npsharp")->required();

  std::string demo_name;
  bool demo_json = false;
  auto* demo = app.add_subcommand("demo", "bundled checked demonstrations");
  demo->add_option("--name", demo_name, "run a single demonstration by name");
  demo->add_flag("--json", demo_json, "emit JSON instead of text");

  std::string bench_modulus;
  std::string bench_subgroup = "units";
  std::int64_t bench_kmax = 3;
  std::uint64_t bench_seed = 20240915;
  bool bench_json = false;
  auto* bench = app.add_subcommand("bench", "time the oracle against the formula");
  bench->add_option("--modulus", bench_modulus, "ring modulus m (>= 2)")->required();
  bench->add_option("--subgroup", bench_subgroup, "subgroup spec (default units)");
  bench->add_option("--kmax", bench_kmax, "largest sequence length (default 3)");
  bench->add_option("--seed", bench_seed, "random seed for the exponent draws");
  bench->add_flag("--json", bench_json, "emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (eval->parsed()) {
      if (eval_poly_opt->count() == 0 && eval_exp->count() == 0)
        throw usage_error("eval: need --exponents or --poly");
      return cmd_eval(eval_flags, eval_poly_opt->count() > 0, eval_poly, eval_arity,
                      eval_force);
    }
    if (nice->parsed()) return cmd_nice(nice_flags);
    if (partitions->parsed())
      return cmd_partitions(part_exponents, part_lambda, part_order, part_modulus,
                            part_subgroup, part_json);
    if (oracle->parsed()) return cmd_oracle(oracle_flags, oracle_check);
    if (demo->parsed()) return cmd_demo(demo_name, demo_json);
    if (bench->parsed())
      return cmd_bench(bench_modulus, bench_subgroup, bench_kmax, bench_seed, bench_json);
  } catch (const usage_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const symsum::parse_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  return 0;
}
