#include "qperm/cli/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qperm/cost_guard.hpp"
#include "qperm/gradings/classify.hpp"
#include "qperm/groups/subgroups.hpp"
#include "qperm/qperm/checks.hpp"
#include "qperm/qperm/identities.hpp"
#include "qperm/qperm/quotient.hpp"
#include "qperm/rewrite/filtration.hpp"
#include "qperm/rewrite/presentation_io.hpp"

namespace qperm::cli {

namespace {

constexpr const char* kSchema = "qperm-run-report/1";

struct Section {
  std::string kind;
  Json json;
  std::string text;
  Verdict verdict = Verdict::verified;
};

struct Run {
  Json config = Json::object();
  std::vector<Section> sections;
};

struct Options {
  std::string format = "text";
  std::string output;
  bool verbose = false;
  bool serial = false;
  Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
};

Section certificate(const CertificateReport& r, const Options& o) {
  Json j = r.to_json();
  return {"certificate", std::move(j), r.to_text(o.verbose), r.verdict};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, sep);)
    if (!part.empty()) out.push_back(part);
  return out;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::verified: return kExitVerified;
    case Verdict::refuted: return kExitRefuted;
    case Verdict::inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

std::string echo(int argc, const char* const* argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--output" || a == "-o") {
      ++i;
      continue;
    }
    if (a.rfind("--output=", 0) == 0) continue;
    out += (out.empty() ? "" : " ") + a;
  }
  return out;
}

std::string file_stem(const std::string& command) {
  std::string s;
  for (char c : command) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return s.empty() ? "report" : s;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << content;
}

// Subcommands

void run_present(Run& run, int n, bool semi, int cap, const std::string& input,
                 const std::string& emit, int basis_degree) {
  run.config.update({{"n", n}, {"semi", semi}, {"cap", cap}, {"basis_degree", basis_degree}});
  Section s;
  s.kind = "presentation";
  std::ostringstream text;
  auto finish = [&](const auto& result, const std::string& name, std::size_t generators, Json relation_info) {
    s.json["name"] = name;
    s.json["generators"] = generators;
    s.json["relations"] = std::move(relation_info);
    s.json["completion"] = completion_report(result, basis_degree);
    s.verdict = result.status.is_confluent() ? Verdict::verified : Verdict::inconclusive;
    const auto counts = result.system.index().count_irreducible(static_cast<std::size_t>(basis_degree));
    text << "[" << to_string(s.verdict) << "] presentation " << name << "\n";
    text << "  generators: " << generators << ", rules after completion: " << result.system.rule_count()
         << ", status: " << result.status.to_string() << "\n";
    text << "  irreducible words by length 0.." << basis_degree << ":";
    for (auto c : counts) text << " " << c;
    text << "\n";
  };
  if (!input.empty()) {
    run.config["input"] = std::filesystem::path(input).filename().string();
    const auto pres = read_presentation_file(input);
    Json info = {{"count", pres.relations.size()},
                 {"field", pres.field_order == 1 ? std::string("Q") : "Q(z" + std::to_string(pres.field_order) + ")"}};
    if (pres.field_order == 1) {
      const auto rels = rational_relations(pres);
      auto sys = RewriteSystem<Rational>::from_relations(pres.alphabet, rels, pres.order);
      finish(complete(sys, std::max(cap, sys.max_rule_degree())), input, pres.alphabet->size(), std::move(info));
    } else {
      const auto rels = cyclotomic_relations(pres);
      auto sys = RewriteSystem<Cyclotomic>::from_relations(pres.alphabet, rels, pres.order);
      finish(complete(sys, std::max(cap, sys.max_rule_degree())), input, pres.alphabet->size(), std::move(info));
    }
  } else {
    const auto hopf = semi ? semi_magic_presentation(n) : magic_presentation(n);
    if (!emit.empty()) {
      write_file(emit, write_presentation(hopf.alphabet(), MonomialOrder::deglex, 1, hopf.algebra.relation_polys()));
      run.config["emit"] = std::filesystem::path(emit).filename().string();
    }
    Json info = relation_summary(hopf.algebra);
    info["count"] = hopf.algebra.relations.size();
    finish(complete_presentation(hopf.algebra, cap), hopf.algebra.name, hopf.alphabet()->size(), std::move(info));
  }
  s.text = text.str();
  run.sections.push_back(std::move(s));
}

void run_pi_n(Run& run, const Options& o, int n, const std::string& poly_file) {
  run.config["n"] = n;
  if (poly_file.empty()) {
    run.sections.push_back(certificate(e_sigma_product_check(n, o.exec()), o));
    const auto hopf = magic_presentation(n);
    CertificateReport r;
    r.claim = "pi_" + std::to_string(n) + " kills every defining relation";
    for (const auto& rel : hopf.algebra.relations)
      r.add_fact(rel.label, "pi_n(" + rel.poly.to_string() + ") = 0", pi_n(rel.poly, n, o.exec()).is_zero());
    r.details["n"] = n;
    r.finalize();
    run.sections.push_back(certificate(r, o));
    return;
  }
  run.config["poly"] = std::filesystem::path(poly_file).filename().string();
  std::ifstream in(poly_file);
  if (!in) throw std::invalid_argument("cannot open '" + poly_file + "'");
  const auto alphabet = matrix_alphabet("u", n);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const NCPoly p = parse_ncpoly(line, alphabet);
    const auto f = pi_n(p, n, o.exec());
    Section s;
    s.kind = "function";
    s.json = {{"poly", p.to_string()}, {"n", n}, {"is_zero", f.is_zero()}, {"support", f.to_json()}};
    std::ostringstream text;
    text << "pi_" << n << "(" << p.to_string() << ") = ";
    if (f.is_zero()) {
      text << "0";
    } else {
      bool first = true;
      const Json support = f.to_json();
      for (const auto& [sigma, v] : support.items()) {
        text << (first ? "" : " + ") << v.get<std::string>() << "*e" << sigma;
        first = false;
      }
    }
    s.text = text.str() + "\n";
    run.sections.push_back(std::move(s));
  }
}

void run_subgroups(Run& run, const Options& o, int n, const std::string& mode_text) {
  const auto mode = parse_subgroup_mode(mode_text);
  run.config.update({{"n", n}, {"mode", to_string(mode)}});
  const auto groups = transitive_abelian_subgroups(n, mode, o.exec());
  CertificateReport r;
  r.claim = "transitive abelian subgroups of S_" + std::to_string(n) + " (" + to_string(mode) + ")";
  Json list = Json::array();
  for (const auto& g : groups) {
    const std::string name = g.type.to_string();
    r.add_fact("order[" + name + "]", "order equals " + std::to_string(n), g.elements.size() == static_cast<std::size_t>(n));
    r.add_fact("transitive[" + name + "]", "acts transitively", is_transitive(n, g.elements));
    r.add_fact("abelian[" + name + "]", "elements commute", is_commutative(g.elements));
    r.add_fact("regular[" + name + "]", "point stabilizers are trivial", is_semiregular(n, g.elements));
    Json gens = Json::array();
    for (const auto& p : g.generators) gens.push_back(p.cycle_notation());
    list.push_back({{"group", name}, {"order", g.elements.size()}, {"generators", std::move(gens)}});
  }
  r.details["n"] = n;
  r.details["count"] = groups.size();
  r.details["subgroups"] = std::move(list);
  r.finalize();
  run.sections.push_back(certificate(r, o));
}

void run_classify(Run& run, const Options& o, int n, bool ergodic_only, int max_n, bool cross_check) {
  run.config.update({{"n", n}, {"ergodic_only", ergodic_only}, {"max_n", max_n}, {"cross_check", cross_check}});
  auto c = classify_gradings(n, ergodic_only, max_n, o.exec());
  if (cross_check) {
    const auto classified = transitive_abelian_subgroups(n, SubgroupMode::classified, o.exec());
    const auto brute = transitive_abelian_subgroups(n, SubgroupMode::brute_force, o.exec());
    std::vector<std::vector<std::size_t>> a, b;
    for (const auto& g : classified) a.push_back(conjugacy_key(n, g.elements));
    for (const auto& g : brute) b.push_back(conjugacy_key(n, g.elements));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    c.report.add_fact("brute_force_agreement",
                      "classified list (" + std::to_string(a.size()) + ") matches brute-force enumeration (" +
                          std::to_string(b.size()) + ") up to conjugacy",
                      a == b);
    c.report.finalize();
  }
  auto s = certificate(c.report, o);
  s.kind = "classification";
  std::ostringstream text;
  text << s.text << "  ergodic gradings: " << c.ergodic.size();
  for (const auto& e : c.ergodic) text << " " << e.groups.front().to_string();
  text << "\n";
  if (!ergodic_only) text << "  (partition, group choice) gradings: " << c.general.size() << "\n";
  s.text = text.str();
  run.sections.push_back(std::move(s));
}

void run_coaction(Run& run, const Options& o, int n, const std::string& example, int cap) {
  run.config.update({{"n", n}, {"example", example}, {"cap", cap}});
  if (example == "diag-g") {
    const auto hopf = group_algebra_presentation();
    auto ambient = std::make_shared<const RewriteSystem<Rational>>(complete_presentation(hopf.algebra, cap).system);
    const NCPoly g = NCPoly::generator(hopf.alphabet(), 0);
    const NCPoly zero(hopf.alphabet());
    MatrixOverAlgebra x{2, {g, zero, zero, g}, ambient};
    run.config["n"] = 2;
    run.sections.push_back(certificate(coaction_algebra_map_check(x, &hopf, o.exec()), o));
    return;
  }
  if (example != "magic" && example != "semi")
    throw std::invalid_argument("unknown example '" + example + "' (magic, semi or diag-g)");
  const auto hopf = example == "magic" ? magic_presentation(n) : semi_magic_presentation(n);
  auto ambient = std::make_shared<const RewriteSystem<Rational>>(complete_presentation(hopf.algebra, cap).system);
  run.sections.push_back(
      certificate(coaction_algebra_map_check(generating_matrix(hopf, ambient), &hopf, o.exec()), o));
}

Section grading_section(const Grading& g) {
  Section s;
  s.kind = "grading";
  s.json = g.to_json();
  s.text = write_grading(g);
  return s;
}

void run_grade(Run& run, const Options& o, const std::string& blocks_text, const std::string& groups_text,
               const std::string& emit) {
  std::vector<int> blocks;
  for (const auto& b : split(blocks_text, ',')) blocks.push_back(std::stoi(b));
  std::vector<FiniteAbelianGroup> groups;
  for (const auto& g : split(groups_text, ',')) groups.push_back(FiniteAbelianGroup::parse(g));
  run.config.update({{"blocks", blocks}, {"groups", groups_text}});
  const Grading g = grading_from_partition(blocks, groups);
  if (!emit.empty()) {
    write_file(emit, write_grading(g));
    run.config["emit"] = std::filesystem::path(emit).filename().string();
  }
  run.sections.push_back(grading_section(g));
  run.sections.push_back(certificate(verify_grading(g, o.exec()), o));
}

void run_verify_grading(Run& run, const Options& o, const std::string& input, bool decompose) {
  run.config["input"] = std::filesystem::path(input).filename().string();
  const Grading g = read_grading_file(input);
  const auto report = verify_grading(g, o.exec());
  run.sections.push_back(certificate(report, o));
  if (!decompose) return;
  if (report.verdict != Verdict::verified) {
    run.sections.back().text += "  orbit decomposition skipped: grading not verified\n";
    return;
  }
  const auto orbits = orbit_decompose(g);
  Section s;
  s.kind = "orbit";
  s.json = orbits.to_json();
  bool all_ergodic = true;
  for (const auto& b : orbits.blocks) all_ergodic = all_ergodic && b.ergodic;
  s.verdict = all_ergodic ? Verdict::verified : Verdict::refuted;
  std::ostringstream text;
  text << "[" << to_string(s.verdict) << "] orbit decomposition: partition (";
  for (std::size_t i = 0; i < orbits.partition.size(); ++i) text << (i ? "," : "") << orbits.partition[i];
  text << "), k = " << orbits.k << "\n";
  for (const auto& b : orbits.blocks) {
    text << "  block {";
    for (std::size_t i = 0; i < b.coordinates.size(); ++i) text << (i ? "," : "") << b.coordinates[i] + 1;
    text << "}: " << (b.ergodic ? "ergodic" : "NOT ergodic") << "\n";
  }
  s.text = text.str();
  run.sections.push_back(std::move(s));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of quantum permutation algebras and gradings of K^n", "qperm"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options opts;
  app.add_option("--format", opts.format, "text or json on standard output")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", opts.output, "also write the JSON report to this file");
  app.add_flag("-v,--verbose", opts.verbose, "list every checked identity in text output");
  app.add_flag("--serial", opts.serial, "use the serial reference kernels");

  Run run;
  std::function<void()> action;

  int n = 3, cap = 8, depth = 10, basis_degree = 4, max_n = kDefaultClassifyLimit, iso_max_n = 7;
  bool semi = false, ergodic_only = false, cross_check = false;
  std::string input, emit, families = "1,2,3", poly_file, blocks, groups, mode = "classified";

  auto* present = app.add_subcommand("present", "build and complete a presentation");
  present->add_option("--n", n, "matrix size")->check(CLI::Range(1, 12));
  present->add_flag("--semi", semi, "semi-magic bialgebra instead of A_s(n)");
  present->add_option("--cap", cap, "completion degree cap")->check(CLI::Range(1, 64));
  present->add_option("--input", input, "presentation file")->check(CLI::ExistingFile);
  present->add_option("--emit", emit, "write the generated presentation to this file");
  present->add_option("--basis-degree", basis_degree, "longest basis word listed")->check(CLI::Range(0, 32));
  present->callback([&] { action = [&] { run_present(run, n, semi, cap, input, emit, basis_degree); }; });

  auto* hopf = app.add_subcommand("verify-hopf", "verify the Hopf (or bialgebra) axioms");
  hopf->add_option("--n", n, "matrix size")->check(CLI::Range(1, 12));
  hopf->add_option("--cap", cap, "completion degree cap")->check(CLI::Range(1, 64));
  hopf->add_flag("--semi", semi, "semi-magic bialgebra");
  hopf->callback([&] {
    action = [&] {
      run.config.update({{"n", n}, {"cap", cap}, {"semi", semi}});
      const auto h = semi ? semi_magic_presentation(n) : magic_presentation(n);
      run.sections.push_back(certificate(verify_hopf_axioms(h, cap, opts.exec()), opts));
    };
  });

  auto* l36 = app.add_subcommand("lemma36", "x.x^t = I (or x^t.x = I) from three relation families");
  l36->add_option("--n", n, "matrix size")->check(CLI::Range(1, 12));
  l36->add_option("--families", families, "three of 1-4 (row_orthogonality, row_sum, column_orthogonality, column_sum)");
  l36->add_option("--cap", cap, "completion degree cap")->check(CLI::Range(1, 64));
  l36->callback([&] {
    action = [&] {
      std::vector<RelationFamily> fs;
      for (const auto& f : split(families, ',')) fs.push_back(parse_relation_family(f));
      run.config.update({{"n", n}, {"families", families}, {"cap", cap}});
      run.sections.push_back(certificate(derive_transpose_inverse(n, fs, cap, opts.exec()), opts));
    };
  });

  auto* l37 = app.add_subcommand("lemma37", "x^t.x = diag(u_i) over the semi-magic presentation");
  l37->add_option("--n", n, "matrix size")->check(CLI::Range(1, 12));
  l37->add_option("--cap", cap, "completion degree cap")->check(CLI::Range(1, 64));
  l37->callback([&] {
    action = [&] {
      run.config.update({{"n", n}, {"cap", cap}});
      run.sections.push_back(certificate(derive_gram_diagonal(n, cap, opts.exec()), opts));
    };
  });

  auto* pin = app.add_subcommand("pi-n", "evaluate u_ij -> p_ij on S_n");
  pin->add_option("--n", n, "degree")->check(CLI::Range(1, 8));
  pin->add_option("--poly", poly_file, "file with one polynomial per line")->check(CLI::ExistingFile);
  pin->callback([&] { action = [&] { run_pi_n(run, opts, n, poly_file); }; });

  std::string example = "magic";
  auto* coact = app.add_subcommand("coaction", "algebra-map leg against the semi-magic leg for a matrix");
  coact->add_option("--n", n, "matrix size")->check(CLI::Range(1, 12));
  coact->add_option("--example", example, "magic, semi or diag-g");
  coact->add_option("--cap", cap, "completion degree cap")->check(CLI::Range(1, 64));
  coact->callback([&] { action = [&] { run_coaction(run, opts, n, example, cap); }; });

  auto* iso = app.add_subcommand("iso-check", "pi_n: surjectivity, isomorphism for n <= 3, kernel for n = 4");
  iso->add_option("--n", n, "degree")->check(CLI::Range(1, 12));
  iso->add_option("--cap", cap, "completion degree cap")->check(CLI::Range(1, 64));
  iso->add_option("--max-n", iso_max_n, "cost guard on n");
  iso->callback([&] {
    action = [&] {
      if (n > iso_max_n)
        throw CostGuardError("iso-check is limited to n <= " + std::to_string(iso_max_n),
                             "pass --max-n to raise the limit; the work grows like n!");
      run.config.update({{"n", n}, {"cap", cap}});
      run.sections.push_back(certificate(pi_n_isomorphism_check(n, cap, opts.exec()), opts));
    };
  });

  auto* wang = app.add_subcommand("wang", "noncommutativity and infinite dimension via the block witness");
  wang->add_option("--n", n, "degree (at least 4)")->check(CLI::Range(4, 64));
  wang->add_option("--depth", depth, "filtration depth")->check(CLI::Range(0, 60));
  wang->callback([&] {
    action = [&] {
      run.config.update({{"n", n}, {"depth", depth}});
      run.sections.push_back(certificate(block_witness(n, depth, opts.exec()), opts));
    };
  });

  auto* sub = app.add_subcommand("subgroups", "transitive abelian subgroups of S_n");
  sub->add_option("--n", n, "degree")->check(CLI::Range(1, 64));
  sub->add_option("--mode", mode, "classified or brute_force");
  sub->callback([&] { action = [&] { run_subgroups(run, opts, n, mode); }; });

  auto* cls = app.add_subcommand("classify", "classify gradings of K^n");
  cls->add_option("--n", n, "dimension")->check(CLI::PositiveNumber);
  cls->add_flag("--ergodic-only", ergodic_only, "only the ergodic case");
  cls->add_option("--max-n", max_n, "cost guard on n");
  cls->add_flag("--cross-check", cross_check, "compare with brute-force subgroup enumeration (n <= 6)");
  cls->callback([&] { action = [&] { run_classify(run, opts, n, ergodic_only, max_n, cross_check); }; });

  auto* grade = app.add_subcommand("grade", "grading from a partition and per-block groups");
  grade->add_option("--blocks", blocks, "block sizes, e.g. 3,2")->required();
  grade->add_option("--groups", groups, "one group per block, e.g. Z3,Z2")->required();
  grade->add_option("--emit", emit, "write the grading file");
  grade->callback([&] { action = [&] { run_grade(run, opts, blocks, groups, emit); }; });

  auto* orbit = app.add_subcommand("orbit-decompose", "blocks and ergodic restrictions of a grading");
  orbit->add_option("--input", input, "grading file")->required()->check(CLI::ExistingFile);
  orbit->callback([&] { action = [&] { run_verify_grading(run, opts, input, true); }; });

  auto* vg = app.add_subcommand("verify-grading", "check a grading file");
  vg->add_option("--input", input, "grading file")->required()->check(CLI::ExistingFile);
  vg->callback([&] { action = [&] { run_verify_grading(run, opts, input, false); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitVerified;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitVerified;
  } catch (const CLI::ParseError& e) {
    err << "qperm: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string command = echo(argc, argv);
  const auto start = std::chrono::steady_clock::now();
  try {
    action();
  } catch (const CostGuardError& e) {
    err << "qperm: " << e.what() << "\n  hint: " << e.hint() << "\n";
    return kExitUsage;
  } catch (const InsufficientCompletion& e) {
    err << "qperm: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "qperm: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qperm: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  Verdict overall = Verdict::verified;
  for (const auto& s : run.sections) overall = combine(overall, s.verdict);

  Json report;
  report["schema"] = kSchema;
  report["command"] = command;
  report["config"] = run.config;
  Json sections = Json::array();
  for (const auto& s : run.sections) {
    Json j = s.json;
    j["kind"] = s.kind;
    if (s.kind != "certificate" && s.kind != "classification") j["verdict"] = to_string(s.verdict);
    sections.push_back(std::move(j));
  }
  report["reports"] = std::move(sections);
  report["verdict"] = to_string(overall);
  report["exit_code"] = exit_code(overall);
  report["wall_time_ms"] = wall_ms;
  const std::string json_text = report.dump(2) + "\n";

  try {
    if (!opts.output.empty()) write_file(opts.output, json_text);
    if (const char* dir = std::getenv("QPERM_REPORT_DIR"); dir && *dir) {
      std::filesystem::create_directories(dir);
      write_file((std::filesystem::path(dir) / (file_stem(command) + ".json")).string(), json_text);
    }
  } catch (const std::exception& e) {
    err << "qperm: " << e.what() << "\n";
    return kExitUsage;
  }

  if (opts.format == "json") {
    out << json_text;
  } else {
    for (const auto& s : run.sections) out << s.text;
    out << "verdict: " << to_string(overall) << " (exit " << exit_code(overall) << ")\n";
  }
  return exit_code(overall);
}

}  // namespace qperm::cli
