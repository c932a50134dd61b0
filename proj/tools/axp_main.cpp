#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "axp/dataset.hpp"
#include "axp/report.hpp"

namespace {

using namespace axp;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << text;
}

std::vector<int> parse_order(const std::string& text, const FeatureSpace& space) {
  std::vector<int> order;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    order.push_back(space.require(tok.substr(b, e - b + 1)));
  }
  return order;
}

struct SubjectArgs {
  std::string individual;
  std::string dataset_path;
  int row = -1;
};

std::vector<Individual> resolve_subjects(const SubjectArgs& args,
                                         const FeatureSpace& space) {
  if (!args.individual.empty()) {
    return {parse_individual(args.individual, space)};
  }
  if (args.dataset_path.empty()) {
    throw ParseError("provide --individual or --dataset");
  }
  Dataset ds = Dataset::parse(read_file(args.dataset_path));
  if (!(ds.space == space)) {
    throw ParseError("dataset features do not match the model's");
  }
  if (args.row >= 0) {
    if (args.row >= static_cast<int>(ds.rows.size())) {
      throw ParseError("dataset row out of range");
    }
    return {ds.rows[args.row]};
  }
  return ds.rows;
}

FeatureSpace space_from_flags(const std::string& model_path,
                              const std::string& features) {
  if (!model_path.empty()) {
    return DecisionModel::from_json(read_file(model_path)).space();
  }
  if (features.empty()) throw ParseError("provide --model or --features");
  std::vector<std::string> names;
  std::istringstream in(features);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    if (b != std::string::npos) names.push_back(tok.substr(b, e - b + 1));
  }
  return FeatureSpace(names);
}

int run(int argc, char** argv) {
  CLI::App app{"Abductive-explanation bias and fairness auditor for Boolean classifiers"};
  app.require_subcommand(1);

  // explain
  auto* explain = app.add_subcommand("explain", "Compute a minimal explanation");
  std::string model_path, bk_path, order_text;
  SubjectArgs subj;
  bool trace_flag = false;
  explain->add_option("--model", model_path)->required();
  explain->add_option("--individual", subj.individual);
  explain->add_option("--dataset", subj.dataset_path);
  explain->add_option("--row", subj.row);
  explain->add_option("--order", order_text);
  explain->add_option("--bk", bk_path);
  explain->add_flag("--trace", trace_flag);
  explain->callback([&] {
    DecisionModel m = DecisionModel::from_json(read_file(model_path));
    std::optional<ConstraintSet> k;
    if (!bk_path.empty()) k = parse_bk(read_file(bk_path), m.space());
    Individual x = resolve_subjects(subj, m.space()).at(0);
    std::vector<int> order = order_text.empty()
                                 ? ascending_order(m.feature_count())
                                 : parse_order(order_text, m.space());
    auto [expl, trace] = compute_explanation(m, x, order, k ? &*k : nullptr);
    if (trace_flag) std::cout << render_trace(trace, m.space());
    std::cout << "decision: " << (expl.decision ? 1 : 0) << "\n";
    std::cout << "explanation: " << explanation_line(expl, m.space()) << "\n";
  });

  // audit
  auto* audit = app.add_subcommand("audit", "Bias, proxy and fairness audit");
  std::string protected_name, mapping_path, partition_path;
  int context_arity = 2;
  audit->add_option("--model", model_path)->required();
  audit->add_option("--individual", subj.individual);
  audit->add_option("--dataset", subj.dataset_path);
  audit->add_option("--row", subj.row);
  audit->add_option("--protected", protected_name)->required();
  audit->add_option("--bk", bk_path);
  audit->add_option("--mapping", mapping_path);
  audit->add_option("--partition", partition_path);
  audit->add_option("--context-arity", context_arity);
  audit->callback([&] {
    auto start = std::chrono::steady_clock::now();
    std::string model_text = read_file(model_path);
    DecisionModel m = DecisionModel::from_json(model_text);
    AuditRun run;
    run.command = "audit";
    run.input_digests.push_back({"model", fnv1a_hex(model_text)});

    AuditOptions opts;
    opts.protected_feature = m.space().require(protected_name);
    opts.context_arity = context_arity;
    std::optional<ConstraintSet> k;
    std::optional<FeaturePartition> fp;
    std::optional<MappingSpec> ms;
    if (!bk_path.empty()) {
      std::string text = read_file(bk_path);
      run.input_digests.push_back({"bk", fnv1a_hex(text)});
      k = parse_bk(text, m.space());
      opts.bk = &*k;
    }
    if (!partition_path.empty()) {
      std::string text = read_file(partition_path);
      run.input_digests.push_back({"partition", fnv1a_hex(text)});
      fp = parse_partition(text, m.space());
      opts.partition = &*fp;
    }
    if (!mapping_path.empty()) {
      if (!fp) throw ParseError("--mapping requires --partition");
      std::string text = read_file(mapping_path);
      run.input_digests.push_back({"mapping", fnv1a_hex(text)});
      ms = parse_mapping(text, m.space(), *fp);
      opts.mapping = &*ms;
    }
    run.parameters.push_back({"context-arity", std::to_string(context_arity)});

    std::vector<Individual> subjects = resolve_subjects(subj, m.space());
    std::cout << audit_report(m, subjects, opts, run);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cerr << "elapsed: " << elapsed.count() << "s\n";
  });

  // mine-bk
  auto* mine = app.add_subcommand("mine-bk", "Mine forbidden patterns from a dataset");
  std::string out_path;
  int max_arity = 3;
  mine->add_option("--dataset", subj.dataset_path)->required();
  mine->add_option("--max-arity", max_arity);
  mine->add_option("--output,-o", out_path);
  mine->callback([&] {
    Dataset ds = Dataset::parse(read_file(subj.dataset_path));
    ConstraintSet k = mine_forbidden_patterns(ds.rows, ds.space.size(), max_arity);
    std::string text = serialize_bk(k, ds.space);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_file(out_path, text);
    }
  });

  // find-proxies
  auto* proxies = app.add_subcommand("find-proxies", "List proxy witnesses of a BK");
  std::string features_text;
  proxies->add_option("--bk", bk_path)->required();
  proxies->add_option("--protected", protected_name)->required();
  proxies->add_option("--context-arity", context_arity);
  proxies->add_option("--model", model_path);
  proxies->add_option("--features", features_text);
  proxies->callback([&] {
    FeatureSpace space = space_from_flags(model_path, features_text);
    ConstraintSet k = parse_bk(read_file(bk_path), space);
    int p = space.require(protected_name);
    for (const ProxyWitness& w : find_proxies(k, p, context_arity, space.size())) {
      std::cout << "q=" << space.name(w.proxy) << " ctx="
                << format_assignment(w.context, space) << " q:=" << (w.nu_q ? 1 : 0)
                << " => " << space.name(p) << ":=" << (w.nu_p ? 1 : 0) << "\n";
    }
  });

  // check-mapping
  auto* checkmap = app.add_subcommand("check-mapping", "Check a mapping against a BK");
  checkmap->add_option("--mapping", mapping_path)->required();
  checkmap->add_option("--partition", partition_path)->required();
  checkmap->add_option("--bk", bk_path)->required();
  checkmap->add_option("--model", model_path);
  checkmap->add_option("--features", features_text);
  checkmap->callback([&] {
    FeatureSpace space = space_from_flags(model_path, features_text);
    FeaturePartition fp = parse_partition(read_file(partition_path), space);
    MappingSpec ms = parse_mapping(read_file(mapping_path), space, fp);
    ConstraintSet k = parse_bk(read_file(bk_path), space);
    MappingReport report = check_mapping_consistency(ms, fp, k, space.size());
    if (report.consistent()) {
      std::cout << "consistent\n";
      return;
    }
    for (const auto& [a, b] : report.target_collisions) {
      std::cout << "injectivity violation: " << format_assignment(a, space) << " and "
                << format_assignment(b, space) << " share a target\n";
    }
    for (Individual x : report.uncovered) {
      std::cout << "uncovered real individual: " << format_individual(x, space)
                << "\n";
    }
  });

  // verify-bundle
  auto* verify = app.add_subcommand("verify-bundle", "Re-run the bundle's golden checks");
  std::string bundle_dir = "bundle";
  verify->add_option("--bundle", bundle_dir);
  verify->callback([&] {
    std::string dir = bundle_dir + "/";
    DecisionModel m = DecisionModel::from_json(read_file(dir + "credit_model.json"));
    const FeatureSpace& space = m.space();
    ConstraintSet k = parse_bk(read_file(dir + "credit.bk"), space);
    FeaturePartition fp = parse_partition(read_file(dir + "credit.partition"), space);
    MappingSpec ms = parse_mapping(read_file(dir + "credit.mapping"), space, fp);
    Dataset ds = Dataset::parse(read_file(dir + "credit_dataset.csv"));

    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
      std::cout << (ok ? "pass" : "FAIL") << "  " << name << "\n";
      if (!ok) ++failures;
    };

    Individual hawa = parse_individual(
        "A=1,G=0,J=0,H=0,S=0,B=1,C=0,D=0,P=1,M=1", space);
    auto [hawa_expl, hawa_trace] =
        compute_explanation(m, hawa, ascending_order(space.size()));
    std::string pattern;
    for (const TraceStep& s : hawa_trace.steps) pattern += s.flip_exists ? 'T' : 'F';
    check("trace verdicts TFFFFTFTTF", pattern == "TFFFFTFTTF");
    check("minimal explanation {A, B, !D, P}",
          hawa_expl.literals == PartialAssignment::of({{space.require("A"), true},
                                                       {space.require("B"), true},
                                                       {space.require("D"), false},
                                                       {space.require("P"), true}}));

    Individual yahya = parse_individual(
        "A=1,G=1,J=0,H=0,S=0,B=0,C=0,D=0,P=1,M=1", space);
    int g = space.require("G");
    BiasVerdict explicit_v = audit_explicit_bias(m, yahya, g);
    check("explicit_bias false", !explicit_v.explicit_bias);
    BiasVerdict bk_v = audit_bk_aware_bias(m, yahya, k, g);
    check("bk_aware_bias true", bk_v.bk_aware_bias == true);
    FairnessVerdict fv = audit_individual_fairness(m, yahya, ms, fp, &k);
    check("fair true", fv.fair);

    ConstraintSet mined = mine_forbidden_patterns(ds.rows, space.size(), 3);
    check("mined BK is the bundled constraint",
          serialize_bk(mined, space) == read_file(dir + "credit.bk"));

    auto witnesses = find_proxies(k, g, 1, space.size());
    ProxyWitness expected{space.require("M"),
                          PartialAssignment::of({{space.require("P"), true}}), true,
                          true};
    bool found = false;
    for (const ProxyWitness& w : witnesses) {
      if (w == expected) found = true;
    }
    check("proxy witness q=M ctx={P} present", found);
    check("mapping consistent",
          check_mapping_consistency(ms, fp, k, space.size()).consistent());

    if (failures > 0) throw std::runtime_error("bundle verification failed");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const axp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const axp::CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const axp::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
