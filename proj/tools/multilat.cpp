// multilat: finite multilattices, residuated structures, and concept systems.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "multilat/concepts.hpp"
#include "multilat/dot.hpp"
#include "multilat/json_io.hpp"
#include "multilat/reproduce.hpp"
#include "multilat/search.hpp"

namespace {

using namespace multilat;

int report_exit(const VerificationReport& rep) {
  std::cout << rep.to_string();
  return rep.ok() ? 0 : 1;
}

SubmlKind parse_kind(const std::string& kind) {
  if (kind == "full") return SubmlKind::Full;
  if (kind == "restricted") return SubmlKind::Restricted;
  fail(Err::ParseError, "unknown kind '" + kind + "' (use full or restricted)");
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

unsigned parse_axioms(const std::string& csv) {
  unsigned axioms = 0;
  for (const auto& a : split_csv(csv)) {
    if (a == "p3") axioms |= kAxiomP3;
    else if (a == "p4") axioms |= kAxiomP4Imp;
    else if (a == "p5") axioms |= kAxiomP5;
    else if (a == "weak") axioms |= kAxiomWeakening;
    else if (a == "topid") axioms |= kAxiomTopIdentity;
    else fail(Err::ParseError, "unknown axiom '" + a + "' (use p3,p4,p5,weak,topid)");
  }
  return axioms;
}

void print_classification(const Poset& p) {
  auto rep = classify(p);
  std::cout << "elements: " << p.size() << "\n";
  std::cout << "multilattice: " << (rep.is_multilattice ? "yes" : "no") << "\n";
  std::cout << "complete: " << (rep.is_complete ? "yes" : "no") << "\n";
  std::cout << "lattice: " << (rep.is_lattice ? "yes" : "no") << "\n";
  std::cout << "pure: " << (rep.is_pure ? "yes" : "no") << "\n";
  if (rep.witness)
    std::cout << "witness: (" << p.label(rep.witness->first) << ", " << p.label(rep.witness->second)
              << ")\n";
}

std::string tuple_of(const Poset& carrier, const ValuedFunction& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (i) s += ",";
    s += carrier.label(f.values[i]);
  }
  return s + ")";
}

int run(int argc, char** argv) {
  CLI::App app{"finite multilattices, pocrims, and concept multilattices"};
  app.require_subcommand(1);

  // verify
  std::string verify_kind, verify_file;
  int sample = 0;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "check a structure file against its axioms");
  verify->add_option("kind", verify_kind, "poset|pocrim|rml|galois")->required();
  verify->add_option("file", verify_file)->required();
  verify->add_option("--sample", sample, "sampled checks instead of exhaustive (galois)");
  verify->add_option("--seed", seed, "seed for sampled checks");

  // classify
  std::string classify_file;
  auto* classify_cmd = app.add_subcommand("classify", "multilattice classification of a poset");
  classify_cmd->add_option("file", classify_file)->required();

  // subml
  std::string subml_file, subml_set, subml_kind = "restricted";
  auto* subml = app.add_subcommand("subml", "submultilattice check for a subset");
  subml->add_option("file", subml_file)->required();
  subml->add_option("--set", subml_set, "comma-separated element labels")->required();
  subml->add_option("--kind", subml_kind, "full|restricted");

  // find-ml6
  std::string fm_file, fm_kind = "restricted";
  auto* fm = app.add_subcommand("find-ml6", "six-element pure-pattern copies in a poset");
  fm->add_option("file", fm_file)->required();
  fm->add_option("--kind", fm_kind, "full|restricted");

  // search pocrims / implications
  auto* search = app.add_subcommand("search", "exhaustive structure searches");
  search->require_subcommand(1);
  std::string sp_file, si_file, si_axioms = "p3,p4,p5,weak,topid", out_dir;
  std::size_t cap = 1000000;
  int jobs = 1;
  auto* sp = search->add_subcommand("pocrims", "all pocrim structures on a poset");
  sp->add_option("file", sp_file)->required();
  sp->add_option("--cap", cap);
  sp->add_option("--jobs", jobs);
  sp->add_option("--out-dir", out_dir, "write each structure as an algebra file");
  auto* si = search->add_subcommand("implications", "implication tables under axiom subsets");
  si->add_option("file", si_file)->required();
  si->add_option("--axioms", si_axioms, "subset of p3,p4,p5,weak,topid");
  si->add_option("--cap", cap);
  si->add_option("--jobs", jobs);
  si->add_option("--out-dir", out_dir);

  // gen posets
  auto* gen = app.add_subcommand("gen", "generators");
  gen->require_subcommand(1);
  int gen_n = 0;
  auto* gp = gen->add_subcommand("posets", "bounded posets up to isomorphism");
  gp->add_option("--n", gen_n, "number of elements (1..7)")->required();
  gp->add_option("--out-dir", out_dir);

  // sum
  std::string sum_a, sum_b, sum_out;
  auto* sum = app.add_subcommand("sum", "ordinal sum of two pocrims");
  sum->add_option("a", sum_a)->required();
  sum->add_option("b", sum_b)->required();
  sum->add_option("-o,--out", sum_out)->required();

  // builtin
  std::string bi_name, bi_out;
  auto* bi = app.add_subcommand("builtin", "write a catalog structure to a file");
  bi->add_option("name", bi_name)->required();
  bi->add_option("-o,--out", bi_out)->required();

  // concepts
  std::string co_file, co_emit, co_dot;
  auto* co = app.add_subcommand("concepts", "enumerate the concept system of a Galois pair");
  co->add_option("file", co_file)->required();
  co->add_option("--emit-algebra", co_emit, "write the concept algebra (needs closedness)");
  co->add_option("--dot", co_dot, "write the concept order as DOT");

  // export dot
  auto* exp = app.add_subcommand("export", "exporters");
  exp->require_subcommand(1);
  std::string ed_file, ed_out, ed_kind = "poset";
  auto* ed = exp->add_subcommand("dot", "Hasse diagram as DOT");
  ed->add_option("file", ed_file)->required();
  ed->add_option("-o,--out", ed_out)->required();
  ed->add_option("--kind", ed_kind, "poset|concepts");

  // reproduce
  std::string rp_only, rp_json;
  auto* rp = app.add_subcommand("reproduce", "run the full desk-scale result suite");
  rp->add_option("--only", rp_only, "run one check by id");
  rp->add_option("--seed", seed);
  rp->add_option("--jobs", jobs);
  rp->add_option("--json", rp_json, "write the machine-readable summary here");

  CLI11_PARSE(app, argc, argv);

  if (*verify) {
    if (verify_kind == "poset") {
      Poset p = load_poset(verify_file);
      std::cout << "PASS poset-axioms (" << p.size() << " elements)\n";
      return 0;
    }
    if (verify_kind == "pocrim") return report_exit(verify_pocrim(load_algebra(verify_file)));
    if (verify_kind == "rml") return report_exit(verify_rml(load_algebra(verify_file)));
    if (verify_kind == "galois") {
      VerifyMode mode;
      if (sample > 0) {
        mode.exhaustive = false;
        mode.samples = sample;
        mode.seed = seed;
      }
      return report_exit(verify_galois(load_galois(verify_file), mode));
    }
    fail(Err::ParseError, "unknown verify kind '" + verify_kind + "'");
  }

  if (*classify_cmd) {
    print_classification(load_poset(classify_file));
    return 0;
  }

  if (*subml) {
    Poset p = load_poset(subml_file);
    auto s = p.indices_of(split_csv(subml_set));
    bool ok = subml_check(p, s, parse_kind(subml_kind));
    std::cout << (ok ? "yes" : "no") << "\n";
    return 0;
  }

  if (*fm) {
    Poset p = load_poset(fm_file);
    auto embeddings = find_ml6(p, parse_kind(fm_kind));
    std::cout << embeddings.size() << " copies\n";
    const Poset& pat = ml6_pattern();
    for (const auto& e : embeddings) {
      std::cout << "  " << format_set(p, e.image) << "  via";
      for (int i = 0; i < pat.size(); ++i)
        std::cout << " " << pat.label(i) << "->" << p.label(e.map[static_cast<std::size_t>(i)]);
      std::cout << "\n";
    }
    return 0;
  }

  if (*sp || *si) {
    Poset p = load_poset(*sp ? sp_file : si_file);
    auto mx = p.maximum();
    if (!mx) fail(Err::NotAMaximum, "poset has no maximum");
    SearchConfig cfg;
    cfg.cap = cap;
    cfg.jobs = jobs;
    nlohmann::json summary;
    summary["schema"] = kSchemaVersion;
    if (*sp) {
      auto res = enumerate_pocrims(p, *mx, cfg);
      std::cout << res.found.size() << " structures, " << res.nodes << " nodes, "
                << (res.exhaustive ? "exhaustive" : "capped") << "\n";
      summary["command"] = "search pocrims";
      summary["found"] = res.found.size();
      summary["nodes"] = res.nodes;
      summary["exhaustive"] = res.exhaustive;
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < res.found.size(); ++i) {
          Algebra a;
          a.poset = p.renamed(p.name() + "-pocrim" + std::to_string(i));
          a.top = *mx;
          if (auto mn = p.minimum()) a.bottom = *mn;
          a.mul = res.found[i].mul;
          a.imp = res.found[i].imp;
          write_file(std::filesystem::path(out_dir) / ("pocrim" + std::to_string(i) + ".json"),
                     algebra_to_json(a));
        }
        write_file(std::filesystem::path(out_dir) / "summary.json", summary);
      }
    } else {
      auto res = enumerate_implications(p, *mx, parse_axioms(si_axioms), cfg);
      std::cout << res.found.size() << " tables, " << res.nodes << " nodes, "
                << (res.exhaustive ? "exhaustive" : "capped") << "\n";
      summary["command"] = "search implications";
      summary["found"] = res.found.size();
      summary["nodes"] = res.nodes;
      summary["exhaustive"] = res.exhaustive;
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < res.found.size(); ++i) {
          Algebra a;
          a.poset = p.renamed(p.name() + "-imp" + std::to_string(i));
          a.top = *mx;
          if (auto mn = p.minimum()) a.bottom = *mn;
          a.imp = res.found[i];
          write_file(std::filesystem::path(out_dir) / ("imp" + std::to_string(i) + ".json"),
                     algebra_to_json(a));
        }
        write_file(std::filesystem::path(out_dir) / "summary.json", summary);
      }
    }
    return 0;
  }

  if (*gp) {
    auto posets = enumerate_bounded_posets(gen_n);
    std::cout << posets.size() << " bounded posets on " << gen_n << " elements\n";
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      for (const auto& p : posets)
        write_file(std::filesystem::path(out_dir) / (p.name() + ".json"), poset_to_json(p));
    }
    return 0;
  }

  if (*sum) {
    Algebra result = ordinal_sum(load_algebra(sum_a), load_algebra(sum_b));
    write_file(sum_out, algebra_to_json(result));
    std::cout << "wrote " << sum_out << " (" << result.poset.size() << " elements)\n";
    return 0;
  }

  if (*bi) {
    switch (builtin_kind(bi_name)) {
      case BuiltinKind::PosetOnly:
        write_file(bi_out, poset_to_json(builtin_poset(bi_name)));
        break;
      default:
        write_file(bi_out, algebra_to_json(builtin_algebra(bi_name)));
        break;
    }
    std::cout << "wrote " << bi_out << "\n";
    return 0;
  }

  if (*co) {
    GaloisPair pair = load_galois(co_file);
    ConceptSystem sys = enumerate_concepts(pair);
    std::cout << sys.size() << " concepts\n";
    for (int i = 0; i < sys.size(); ++i) {
      const auto& c = sys.concepts[static_cast<std::size_t>(i)];
      std::cout << "  c" << i << ": extent " << tuple_of(pair.alg1().poset, c.extent)
                << "  intent " << tuple_of(pair.alg2().poset, c.intent) << "\n";
    }
    Poset order = sys.order_poset(pair.alg1().poset, "concepts");
    print_classification(order);
    if (!co_dot.empty()) {
      std::ofstream os(co_dot);
      concepts_to_dot(pair, sys, os);
    }
    if (!co_emit.empty()) {
      try {
        Algebra calg = build_concept_rml(pair, sys);
        write_file(co_emit, algebra_to_json(calg));
        std::cout << "wrote " << co_emit << "\n";
      } catch (const Error& e) {
        if (e.kind() != Err::ClosednessViolated) throw;
        std::cout << "closedness fails: " << e.what() << "\n";
        auto diag = concept_tables_diagnostic(pair, sys);
        std::cout << "adjointness violations at " << diag.adjointness_violations.size()
                  << " concept triples";
        for (std::size_t i = 0; i < diag.adjointness_violations.size() && i < 5; ++i)
          std::cout << (i ? ", " : ": ") << diag.adjointness_violations[i];
        std::cout << "\n";
        return 1;
      }
    }
    return 0;
  }

  if (*ed) {
    std::ofstream os(ed_out);
    if (!os) fail(Err::ParseError, "cannot write " + ed_out);
    if (ed_kind == "poset") {
      poset_to_dot(load_poset(ed_file), os);
    } else if (ed_kind == "concepts") {
      GaloisPair pair = load_galois(ed_file);
      concepts_to_dot(pair, enumerate_concepts(pair), os);
    } else {
      fail(Err::ParseError, "unknown export kind '" + ed_kind + "'");
    }
    std::cout << "wrote " << ed_out << "\n";
    return 0;
  }

  if (*rp) {
    ReproduceOptions opt;
    opt.only = rp_only;
    opt.seed = seed;
    opt.jobs = jobs;
    RunReport report = run_reproduce(opt);
    if (report.outcomes.empty()) fail(Err::UnknownName, "no check named '" + rp_only + "'");
    std::cout << report_table(report);
    if (!rp_json.empty()) write_file(rp_json, report_to_json(report, opt));
    return report.ok() ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const multilat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return multilat::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
