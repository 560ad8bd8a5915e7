#include "cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "qapblock/cut_solver.hpp"
#include "qapblock/generators.hpp"
#include "qapblock/pattern_analysis.hpp"
#include "qapblock/product_block.hpp"
#include "qapblock/reductions.hpp"
#include "verify/criteria.hpp"

namespace qapblock::cli {

namespace {

Json rationals_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json one_based(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto i : v) out.push_back(i + 1);
  return out;
}

struct NormalForm {
  MultiCutSpec spec;
  Permutation sigma;  // sigma[new position] = old position
};

NormalForm to_normal_form(const MultiCutSpec& spec) {
  const auto& sizes = spec.sizes();
  std::vector<std::size_t> start(sizes.size(), 0);
  std::partial_sum(sizes.begin(), sizes.end() - 1, start.begin() + 1);
  std::vector<std::size_t> order(sizes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sizes[x] < sizes[y]; });
  std::vector<std::size_t> image, sorted_sizes;
  for (auto k : order) {
    sorted_sizes.push_back(sizes[k]);
    for (std::size_t p = 0; p < sizes[k]; ++p) image.push_back(start[k] + p);
  }
  return NormalForm{MultiCutSpec(std::move(sorted_sizes)), Permutation(std::move(image))};
}

Rational product_divisor(const SymMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a(i, i).sign() > 0) return a(i, i);
  }
  return 1;
}

// Factor beta and divisor c with a_ij = beta_i beta_j / c and beta >= 0.
std::optional<std::pair<ProductSpec, Rational>> product_form(const MatrixOrSpec& spec, const SymMatrix& a) {
  if (const auto* p = std::get_if<ProductSpec>(&spec)) return std::pair{*p, Rational(1)};
  auto beta = recognize_product(a);
  if (!beta || std::any_of(beta->begin(), beta->end(), [](const Rational& x) { return x.sign() < 0; })) {
    return std::nullopt;
  }
  return std::pair{ProductSpec(std::move(*beta)), product_divisor(a)};
}

SolveReport checked(const QapInstance& inst, SolveReport report) {
  if (evaluate(inst, report.permutation) != report.value) {
    throw std::logic_error("solver " + report.solver + " reported a value its permutation does not attain");
  }
  return report;
}

}  // namespace

SolveReport solve_instance(const InstanceFile& file, const SolveOptions& options) {
  if (!file.a || !file.b) throw InvalidInput("solve needs both A and B in the instance file");
  const SymMatrix a = materialize(*file.a);
  const SymMatrix b = materialize(*file.b);
  const QapInstance inst(a, b);

  if (options.oracle) {
    OracleOptions oracle;
    oracle.max_n = options.max_n;
    OracleResult r = brute_force_optimum(inst, oracle);
    return SolveReport{"oracle", std::move(r.value), std::move(r.argmin), "oracle-exact", std::nullopt};
  }

  std::vector<std::string> reasons;
  if (auto mc = recognize_multicut(b)) {
    const NormalForm nf = to_normal_form(mc->spec);
    // Z_rho(A, B') = Z_{rho o sigma^-1}(A, B) for B'_ij = b_{sigma(i) sigma(j)}.
    const Permutation back = nf.sigma.inverse();
    const auto& sizes = nf.spec.sizes();

    if (sizes.size() <= 2) {
      if (auto gen = recognize_one_lambda_one(a, 2)) {
        const std::size_t u = sizes.size() == 2 ? sizes[0] : 0;
        const std::size_t v = sizes.back();
        if (gen->s() + gen->t() <= 2 * v) {
          const TwoBlockSolution cf = closed_form_two_block(TwoBlockShape(gen->r(), gen->s(), gen->t(), u, v));
          return checked(inst, SolveReport{"two-block-closed-form", cf.value, back, "theorem-optimal", std::nullopt});
        }
      }
    }
    if (is_monotone(a) && is_anti_monge(a)) {
      const CutSolution sol = solve_multicut_monotone_antimonge(a, nf.spec);
      return checked(inst, SolveReport{"multicut-monotone-anti-monge", sol.value, sol.permutation.compose(back),
                                       "theorem-optimal", std::nullopt});
    }
    const bool equal = std::all_of(sizes.begin(), sizes.end(), [&](std::size_t x) { return x == sizes[0]; });
    if (equal && is_anti_monge(a)) {
      const CutSolution sol = solve_equal_blocks_antimonge(a, nf.spec);
      return checked(inst, SolveReport{"multicut-equal-blocks-anti-monge", sol.value, sol.permutation.compose(back),
                                       "theorem-optimal", std::nullopt});
    }
    reasons.emplace_back(equal ? "B is a multi-cut matrix with equal blocks but A is not anti-Monge"
                               : "B is a multi-cut matrix with unequal blocks but A is not monotone anti-Monge");
  } else {
    reasons.emplace_back("B is not a multi-cut matrix");
  }

  if (auto pf = product_form(*file.a, a)) {
    const auto* given = std::get_if<BlockSpec>(&*file.b);
    const BlockSpec blocks = given ? *given : recognize_block_structure(b);
    if (pattern_certified_polynomial(blocks.pattern()) || options.force) {
      const SortedIngestion ingested = ingest_product_block(pf->first, blocks);
      ProductBlockOptions pb;
      pb.attest = options.force;
      const ProductBlockSolution sol = solve_product_block(ingested.instance, pb);
      return checked(inst, SolveReport{"product-block", sol.value / pf->second,
                                       ingested.sorted_to_original.compose(sol.permutation),
                                       std::string(to_string(sol.certification)), sol.block_order});
    }
    reasons.emplace_back("A is a product matrix but the block pattern of B is not certified polynomial (use --force to attest)");
  } else {
    reasons.emplace_back("A is not a product matrix");
  }

  std::string message = "no structured solver applies:";
  for (const auto& r : reasons) message += "\n  - " + r;
  message += "\nrerun with --oracle for exhaustive search (n <= --max-n)";
  throw UnsupportedStructure(message);
}

Json recognize_matrix(const SymMatrix& m, std::string_view kind) {
  Json out;
  out["kind"] = std::string(kind);
  out["n"] = m.size();
  out["monotone"] = is_monotone(m);
  out["anti_monge"] = is_anti_monge(m);
  const auto sum = recognize_sum(m);
  out["sum"] = sum.has_value();
  if (sum) out["sum_alpha"] = rationals_json(sum->alpha());
  const auto product = recognize_product(m);
  const bool nonneg = product && std::all_of(product->begin(), product->end(), [](const Rational& x) { return x.sign() >= 0; });
  out["product"] = nonneg;
  if (nonneg) {
    out["product_factor"] = rationals_json(*product);
    out["product_divisor"] = to_json(product_divisor(m));
  }
  const BlockSpec blocks = recognize_block_structure(m);
  out["block_pattern"] = to_json(blocks.pattern());
  out["block_sizes"] = blocks.sizes();
  const auto mc = recognize_multicut(m);
  out["multicut"] = mc.has_value();
  if (mc) {
    out["multicut_sizes"] = mc->spec.sizes();
    out["normal_form"] = mc->normal_form;
  }
  return out;
}

Json classify_report(const SymMatrix& pattern) {
  Json out;
  out["q"] = pattern.size();
  out["condition14"] = satisfies_condition14(pattern);
  const PatternVerdict verdict = classify_pattern(pattern);
  if (std::holds_alternative<PolynomialByCondition14>(verdict)) {
    out["verdict"] = "PolynomialByCondition14";
  } else if (const auto* hard = std::get_if<NPHardByCondition16>(&verdict)) {
    out["verdict"] = "NPHardByCondition16";
    Json w;
    w["r"] = hard->witness.r() + 1;
    w["s"] = hard->witness.s() + 1;
    w["lower"] = rationals_json(hard->witness.lower());
    w["upper"] = rationals_json(hard->witness.upper());
    w["x_star"] = rationals_json(hard->minimizer.x);
    w["z_star"] = to_json(hard->minimizer.value);
    out["witness"] = std::move(w);
  } else {
    out["verdict"] = "UnknownComplexity";
  }
  if (pattern.size() == 2) {
    out["two_by_two"] = classify_2x2(pattern) == TwoByTwoVerdict::kPolynomial ? "polynomial" : "np-hard";
  }
  return out;
}

InstanceFile reduce_partition_file(const Json& input) {
  if (!input.is_object()) throw ParseError("", "expected an object with \"pattern\" and \"values\"");
  for (auto it = input.begin(); it != input.end(); ++it) {
    if (it.key() != "pattern" && it.key() != "values") throw ParseError("/" + it.key(), "unknown key");
  }
  if (!input.contains("pattern")) throw ParseError("", "missing key \"pattern\"");
  if (!input.contains("values")) throw ParseError("", "missing key \"values\"");
  const SymMatrix pattern = matrix_from_json(input["pattern"], "/pattern");
  const Json& vj = input["values"];
  if (!vj.is_array()) throw ParseError("/values", "expected an array of rationals");
  std::vector<Rational> values;
  for (std::size_t i = 0; i < vj.size(); ++i) values.push_back(rational_from_json(vj[i], "/values/" + std::to_string(i)));

  const PartitionReduction red = reduce_partition(pattern, PartitionInstance(std::move(values)));
  InstanceFile file;
  file.a = ProductSpec(red.alpha);
  file.b = red.blocks;
  file.metadata.provenance = "partition reduction";
  file.metadata.threshold = red.threshold;
  Json side;
  side["K"] = red.k;
  side["L"] = red.l;
  side["n"] = red.n;
  side["block_sizes"] = red.blocks.sizes();
  side["r"] = red.r + 1;
  side["s"] = red.s + 1;
  side["lower"] = rationals_json(red.ensemble.lower());
  side["upper"] = rationals_json(red.ensemble.upper());
  side["x_star"] = rationals_json(red.x_star.x);
  side["z_star"] = to_json(red.x_star.value);
  file.sidecar = std::move(side);
  return file;
}

InstanceFile reduce_bisection_file(const Json& input) {
  if (!input.is_object()) throw ParseError("", "expected an object with \"vertices\", \"edges\" and \"t\"");
  for (auto it = input.begin(); it != input.end(); ++it) {
    if (it.key() != "vertices" && it.key() != "edges" && it.key() != "t") throw ParseError("/" + it.key(), "unknown key");
  }
  for (const char* key : {"vertices", "edges", "t"}) {
    if (!input.contains(key)) throw ParseError("", std::string("missing key \"") + key + "\"");
  }
  const std::size_t n = count_from_json(input["vertices"], "/vertices");
  const auto t = static_cast<std::int64_t>(count_from_json(input["t"], "/t"));
  const Json& ej = input["edges"];
  if (!ej.is_array()) throw ParseError("/edges", "expected an array of [u, v] pairs");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < ej.size(); ++i) {
    const std::string ptr = "/edges/" + std::to_string(i);
    if (!ej[i].is_array() || ej[i].size() != 2) throw ParseError(ptr, "expected a pair [u, v]");
    const std::size_t u = count_from_json(ej[i][0], ptr + "/0");
    const std::size_t v = count_from_json(ej[i][1], ptr + "/1");
    if (u == 0 || v == 0) throw ParseError(ptr, "vertices are numbered from 1");
    edges.emplace_back(u - 1, v - 1);
  }
  const BisectionReduction red = reduce_bisection(GraphBisectionInstance(n, std::move(edges), t));
  InstanceFile file;
  file.a = red.instance.a();
  file.b = MultiCutSpec({n / 2, n / 2});
  file.metadata.provenance = "bisection reduction";
  file.metadata.threshold = red.threshold;
  return file;
}

namespace {

struct Settings {
  std::string output;
  std::uint64_t seed = 1;
  std::size_t max_n = kDefaultOracleCap;
  bool oracle = false;
  bool force = false;
  std::string file;
  std::size_t n = 0, k = 3, q = 2;
  std::string family = "any";
  std::vector<int> criteria;
  double scale = 1.0;
  std::size_t two_block_max = 9;
};

InstanceFile load(const std::string& path) { return parse_instance(read_text(path)); }

PatternFamily family_from(const std::string& name) {
  if (name == "condition14") return PatternFamily::kCondition14;
  if (name == "condition16") return PatternFamily::kCondition16;
  return PatternFamily::kAny;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers, recognizers and reductions for block-structured quadratic assignment problems",
               "qapblock"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings set;
  app.add_option("-o,--output", set.output, "Write the result to this file instead of stdout");
  auto* seed_opt = app.add_option("--seed", set.seed, "Random seed (gen, verify)");
  auto* max_n_opt = app.add_option("--max-n", set.max_n, "Size cap for exhaustive search");

  auto* recognize = app.add_subcommand("recognize", "Report the matrix classes of A and B");
  recognize->add_option("file", set.file, "Instance file")->required();

  auto* solve = app.add_subcommand("solve", "Solve an instance with the matching structured solver");
  solve->add_option("file", set.file, "Instance file")->required();
  solve->add_flag("--oracle", set.oracle, "Exhaustive search over all permutations");
  solve->add_flag("--force", set.force, "Run the product-block solver on an uncertified pattern");

  auto* classify = app.add_subcommand("classify", "Classify a block pattern");
  classify->add_option("file", set.file, "Instance file with \"pattern\" (or a block-spec B)")->required();

  auto* reduce = app.add_subcommand("reduce", "Build a QAP instance from a hard source problem");
  reduce->require_subcommand(1);
  auto* reduce_partition_cmd = reduce->add_subcommand("partition", "Partition to product-block QAP");
  reduce_partition_cmd->add_option("file", set.file, "JSON with \"pattern\" and \"values\"")->required();
  auto* reduce_bisection_cmd = reduce->add_subcommand("bisection", "Graph bisection to monotone x multi-cut QAP");
  reduce_bisection_cmd->add_option("file", set.file, "JSON with \"vertices\", \"edges\" and \"t\"")->required();

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> gens;
  for (const char* kind : {"anti-monge", "monotone-anti-monge", "product", "multicut", "pattern"}) {
    auto* sub = gen->add_subcommand(kind, std::string("Random ") + kind + " data");
    if (std::string_view(kind) == "pattern") {
      sub->add_option("--q", set.q, "Pattern size")->required();
      sub->add_option("--family", set.family, "condition14 | condition16 | any")
          ->check(CLI::IsMember({"condition14", "condition16", "any"}));
    } else {
      sub->add_option("--n", set.n, "Dimension")->required();
      if (std::string_view(kind) == "multicut") sub->add_option("--q", set.q, "Number of blocks")->required();
      if (std::string_view(kind).find("anti-monge") != std::string_view::npos) {
        sub->add_option("--k", set.k, "Number of 1-2-1 generators");
      }
    }
    gens.emplace_back(kind, sub);
  }

  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_option("--criteria", set.criteria, "Criterion numbers (default: all)");
  verify->add_option("--scale", set.scale, "Multiplier for random sample counts")->check(CLI::PositiveNumber);
  verify->add_option("--two-block-max", set.two_block_max, "Largest r + s + t in the two-block sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  std::ostringstream result;
  int code = kExitOk;
  try {
    if (recognize->parsed()) {
      const InstanceFile file = load(set.file);
      if (!file.a && !file.b) throw InvalidInput("instance file has neither A nor B");
      Json report = Json::object();
      if (file.a) report["A"] = recognize_matrix(materialize(*file.a), kind_name(*file.a));
      if (file.b) report["B"] = recognize_matrix(materialize(*file.b), kind_name(*file.b));
      result << report.dump(2) << '\n';
    } else if (solve->parsed()) {
      SolveOptions options;
      options.oracle = set.oracle;
      options.force = set.force;
      options.max_n = set.max_n;
      const SolveReport rep = solve_instance(load(set.file), options);
      Json report;
      report["solver"] = rep.solver;
      report["value"] = to_json(rep.value);
      report["permutation"] = rep.permutation.one_based();
      report["identity"] = rep.permutation.is_identity();
      report["certification"] = rep.certification;
      if (rep.block_order) report["block_order"] = one_based(*rep.block_order);
      result << report.dump(2) << '\n';
    } else if (classify->parsed()) {
      const InstanceFile file = load(set.file);
      std::optional<SymMatrix> pattern = file.pattern;
      if (!pattern && file.b) {
        if (const auto* spec = std::get_if<BlockSpec>(&*file.b)) pattern = spec->pattern();
      }
      if (!pattern) throw InvalidInput("file has no \"pattern\" and B is not a block spec");
      result << classify_report(*pattern).dump(2) << '\n';
    } else if (reduce_partition_cmd->parsed()) {
      result << write_instance(reduce_partition_file(parse_json(read_text(set.file))));
    } else if (reduce_bisection_cmd->parsed()) {
      result << write_instance(reduce_bisection_file(parse_json(read_text(set.file))));
    } else if (gen->parsed()) {
      InstanceFile file;
      file.metadata.seed = set.seed;
      for (const auto& [kind, sub] : gens) {
        if (!sub->parsed()) continue;
        file.metadata.provenance = "gen " + kind;
        if (kind == "anti-monge") file.a = gen_anti_monge(set.n, set.k, set.seed);
        if (kind == "monotone-anti-monge") file.a = gen_monotone_anti_monge(set.n, set.k, set.seed);
        if (kind == "product") file.a = gen_product(set.n, set.seed);
        if (kind == "multicut") file.b = gen_multicut(set.n, set.q, set.seed);
        if (kind == "pattern") file.pattern = gen_pattern(set.q, family_from(set.family), set.seed);
      }
      result << write_instance(file);
    } else if (verify->parsed()) {
      verify::VerifyConfig config;
      if (seed_opt->count()) config.seed = set.seed;
      if (max_n_opt->count()) config.max_n = set.max_n;
      config.sample_scale = set.scale;
      config.two_block_max = set.two_block_max;
      std::vector<int> ids = set.criteria;
      if (ids.empty()) {
        ids.resize(verify::kCriterionCount);
        std::iota(ids.begin(), ids.end(), 1);
      }
      std::size_t passed = 0;
      for (const auto& r : verify::run_criteria(ids, config)) {
        result << verify::format_result(r) << '\n';
        passed += r.passed();
      }
      result << "summary: " << passed << '/' << ids.size() << " criteria passed\n";
      if (passed != ids.size()) code = kExitVerificationFailed;
    }
  } catch (const UnsupportedStructure& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const SizeLimitError& e) {
    err << "size limit: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const ClassificationError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }

  if (set.output.empty()) {
    out << result.str();
  } else {
    std::ofstream file(set.output, std::ios::binary);
    if (!file || !(file << result.str())) {
      err << "cannot write " << set.output << '\n';
      return kExitBadInput;
    }
  }
  return code;
}

}  // namespace qapblock::cli
