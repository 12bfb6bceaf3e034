// Command-line front end: analyze arrangements, classify coverings, decide
// admissibility with certificates, and compute wedge-complex dimensions.
// Exit codes: 0 success, 2 input error, 3 internal invariant violation.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "lineadm/admissibility.hpp"
#include "lineadm/aomoto.hpp"
#include "lineadm/classify.hpp"
#include "lineadm/corpus.hpp"
#include "lineadm/errors.hpp"
#include "lineadm/io.hpp"

namespace {

using lineadm::Json;

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_classification(const lineadm::CkClassification& cls) {
  std::cout << "class: C_" << cls.k;
  if (cls.k == 3) std::cout << (cls.concurrent_flag ? " (concurrent cover)" : " (no concurrent cover)");
  std::cout << "\nminimal covers:";
  for (const auto& cover : cls.minimal_covers) {
    std::cout << " {";
    for (std::size_t i = 0; i < cover.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << cover[i];
    }
    std::cout << "}";
  }
  std::cout << "\n";
}

int cmd_analyze(const std::string& path, bool json) {
  const lineadm::Arrangement arr = lineadm::load_arrangement(path);
  if (json) {
    print_json(lineadm::analyze_report(arr));
    return 0;
  }
  std::cout << "lines: " << arr.size() << "\n";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::cout << "  " << i << ": " << arr.lines()[i].str();
    if (arr.infinity_line() == i) std::cout << " (infinity)";
    std::cout << "\n";
  }
  const auto multiple = arr.multiple_points();
  std::cout << "points: " << arr.points().size() << " (" << multiple.size() << " multiple)\n";
  for (const lineadm::MultiplePoint& mp : multiple) {
    std::cout << "  " << mp.point.str() << " multiplicity " << mp.multiplicity << " lines";
    for (std::size_t j : mp.incident) std::cout << " " << j;
    std::cout << "\n";
  }
  print_classification(lineadm::classify(arr));
  return 0;
}

int cmd_classify(const std::string& path, bool json) {
  const lineadm::Arrangement arr = lineadm::load_arrangement(path);
  if (json) {
    print_json(lineadm::classify_report(arr));
    return 0;
  }
  print_classification(lineadm::classify(arr));
  return 0;
}

int cmd_admissible(const std::string& arr_path, const std::string& sys_path, long long bound,
                   bool json) {
  const lineadm::Arrangement arr = lineadm::load_arrangement(arr_path);
  const lineadm::LocalSystem system = lineadm::load_local_system(sys_path);
  if (system.size() != arr.size()) {
    throw lineadm::input_error("local system has " + std::to_string(system.size()) +
                               " classes for " + std::to_string(arr.size()) + " lines");
  }
  const lineadm::Verdict verdict = lineadm::decide(arr, system, bound);
  if (json) {
    print_json(lineadm::admissible_report(arr, system, verdict));
    return 0;
  }
  if (verdict.admissible) {
    const lineadm::Certificate& cert = *verdict.certificate;
    std::cout << "verdict: ADMISSIBLE (method " << lineadm::method_name(cert.method);
    if (!cert.cover_used.empty()) {
      std::cout << ", cover";
      for (std::size_t j : cert.cover_used) std::cout << " " << j;
    }
    std::cout << ")\nalpha:";
    for (const lineadm::QComplex& e : cert.alpha.entries()) std::cout << " " << e.str();
    std::cout << "\n";
    for (const lineadm::PointResidue& pr : cert.point_residues) {
      std::cout << "  a(" << pr.point.point.str() << ") = " << pr.a.str() << "\n";
    }
  } else {
    std::cout << "verdict: UNKNOWN\n";
    for (const lineadm::AttemptNote& a : verdict.attempts) {
      std::cout << "  " << a.method;
      if (!a.cover.empty()) {
        std::cout << " cover";
        for (std::size_t j : a.cover) std::cout << " " << j;
      }
      std::cout << ": " << a.reason << "\n";
    }
  }
  return 0;
}

int cmd_aomoto(const std::string& arr_path, const std::string& sys_path,
               long long base_opt, bool base_set, long long bound, bool json) {
  const lineadm::Arrangement arr = lineadm::load_arrangement(arr_path);
  const lineadm::LocalSystem system = lineadm::load_local_system(sys_path);
  if (system.size() != arr.size()) {
    throw lineadm::input_error("local system has " + std::to_string(system.size()) +
                               " classes for " + std::to_string(arr.size()) + " lines");
  }
  const std::size_t base = base_set ? static_cast<std::size_t>(base_opt)
                                    : arr.infinity_line().value_or(0);
  if (base_set && (base_opt < 0 || base >= arr.size())) {
    throw lineadm::input_error("invalid base index " + std::to_string(base_opt));
  }

  // The h-values depend on the lift. With an ADMISSIBLE verdict the
  // certificate's lift is the one for which they compute twisted
  // cohomology; otherwise fall back to the standard lift and flag it.
  const lineadm::Verdict verdict = lineadm::decide(arr, system, bound);
  const lineadm::ResidueVector alpha = verdict.admissible
                                           ? verdict.certificate->alpha
                                           : lineadm::standard_lift(system, base);
  const lineadm::AomotoResult r = lineadm::aomoto_dims(arr, alpha, base);
  if (json) {
    print_json(lineadm::aomoto_report(arr, base, alpha, verdict.admissible,
                                      verdict.admissible, r));
    return 0;
  }
  std::cout << "h = (" << r.h0 << ", " << r.h1 << ", " << r.h2 << ") at base " << base << "\n";
  const auto b = lineadm::betti(arr, base);
  std::cout << "betti = (" << b[0] << ", " << b[1] << ", " << b[2] << ")\n";
  if (!verdict.admissible) {
    std::cout << "caveat: admissibility undecided; h-values are the dimensions of the "
                 "wedge complex only\n";
  }
  return 0;
}

int cmd_corpus_list(bool json) {
  if (json) {
    Json j;
    j["names"] = lineadm::corpus_names();
    print_json(j);
    return 0;
  }
  for (const std::string& name : lineadm::corpus_names()) std::cout << name << "\n";
  return 0;
}

int cmd_corpus_get(const std::string& name, bool json) {
  const lineadm::CorpusEntry& e = lineadm::corpus_get(name);
  if (json) {
    print_json(lineadm::corpus_entry_to_json(e));
    return 0;
  }
  std::cout << e.name << ": " << e.lines.size() << " lines, documented k = "
            << e.documented_k << "\n";
  for (const auto& dp : e.documented_multiple_points) {
    std::cout << "  " << dp.label << " = " << dp.point.str() << " lines";
    for (std::size_t j : dp.incident) std::cout << " " << j;
    std::cout << "\n";
  }
  for (const std::string& note : e.notes) std::cout << "  note: " << note << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"line arrangement admissibility toolkit"};
  app.require_subcommand(1);

  std::string arr_path;
  std::string sys_path;
  std::string corpus_name;
  long long bound = 3;
  long long base = 0;
  bool json = false;

  CLI::App* analyze = app.add_subcommand("analyze", "incidence, multiple points, classification");
  analyze->add_option("arrangement", arr_path, "arrangement JSON file")->required();
  analyze->add_flag("--json", json, "machine-readable output");

  CLI::App* classify = app.add_subcommand("classify", "covering class C_k and minimal covers");
  classify->add_option("arrangement", arr_path, "arrangement JSON file")->required();
  classify->add_flag("--json", json, "machine-readable output");

  CLI::App* admissible =
      app.add_subcommand("admissible", "decide admissibility and print a certificate");
  admissible->add_option("arrangement", arr_path, "arrangement JSON file")->required();
  admissible->add_option("system", sys_path, "local system JSON file")->required();
  admissible->add_option("--bound", bound, "search bound for the shift fallback");
  admissible->add_flag("--json", json, "machine-readable output");

  CLI::App* aomoto = app.add_subcommand("aomoto", "wedge-complex cohomology dimensions");
  aomoto->add_option("arrangement", arr_path, "arrangement JSON file")->required();
  aomoto->add_option("system", sys_path, "local system JSON file")->required();
  CLI::Option* base_opt = aomoto->add_option("--base", base, "decone base line index");
  aomoto->add_option("--bound", bound, "search bound used by the admissibility check");
  aomoto->add_flag("--json", json, "machine-readable output");

  CLI::App* corpus = app.add_subcommand("corpus", "built-in reference arrangements");
  corpus->require_subcommand(1);
  CLI::App* corpus_list = corpus->add_subcommand("list", "list entry names");
  corpus_list->add_flag("--json", json, "machine-readable output");
  CLI::App* corpus_get = corpus->add_subcommand("get", "print one entry");
  corpus_get->add_option("name", corpus_name, "entry name")->required();
  corpus_get->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help and version are not errors
  }

  try {
    if (*analyze) return cmd_analyze(arr_path, json);
    if (*classify) return cmd_classify(arr_path, json);
    if (*admissible) return cmd_admissible(arr_path, sys_path, bound, json);
    if (*aomoto) return cmd_aomoto(arr_path, sys_path, base, !base_opt->empty(), bound, json);
    if (*corpus_list) return cmd_corpus_list(json);
    if (*corpus_get) return cmd_corpus_get(corpus_name, json);
  } catch (const lineadm::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const lineadm::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
