#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kbraid/braid.hpp"
#include "kbraid/dynamics.hpp"
#include "kbraid/picture.hpp"
#include "kbraid/reduce.hpp"
#include "kbraid/word_io.hpp"

using namespace kbraid;
using nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kBudget = 3, kNotPleasant = 4 };

struct Args {
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::size_t budget = kDefaultBudget;
  std::string format = "text";
  std::string out;
  std::string file;
  std::string shape = "radial";
  std::vector<std::string> inputs;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Positional inputs, or the non-empty lines of --file.
std::vector<std::string> inputs(const Args& a, std::size_t expected) {
  std::vector<std::string> out = a.inputs;
  if (!a.file.empty()) {
    std::istringstream lines(read_file(a.file));
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
    }
  }
  if (out.size() != expected) {
    throw Error(Errc::parse_error,
                "expected " + std::to_string(expected) + " input(s), got " + std::to_string(out.size()));
  }
  return out;
}

void emit(const Args& a, const std::string& text) {
  if (a.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(a.out);
  if (!f) throw Error(Errc::invalid_argument, "cannot write " + a.out);
  f << text;
}

Signature signature(const Args& a) { return make_signature(a.n, a.k); }

ReduceOptions reduce_options(const Args& a) { return ReduceOptions{a.budget}; }

InvariantOptions invariant_options(const Args& a) {
  InvariantOptions o;
  o.seed = a.seed;
  o.realize.shape = a.shape == "apex" ? DetourShape::apex : DetourShape::radial;
  return o;
}

int cmd_reduce(const Args& a) {
  const Word word = parse_word(inputs(a, 1)[0], signature(a));
  Word best;
  bool exact = true;
  if (a.k == 2) {
    best = canonical_form(word, reduce_options(a));
  } else {
    Reduction r = reduce(word, reduce_options(a));
    best = r.minimal.front();
    exact = !r.exhausted;
  }
  if (a.format == "json") {
    ordered_json j;
    j["minimal"] = format_word(best);
    j["complexity"] = best.size();
    j["exact"] = exact;
    emit(a, j.dump() + "\n");
  } else {
    emit(a, format_word(best) + "\ncomplexity " + std::to_string(best.size()) + "\n");
  }
  if (!exact) {
    std::cerr << "search budget of " << a.budget << " classes exhausted; result is an upper bound\n";
    return kBudget;
  }
  return kOk;
}

int cmd_compare(const Args& a, bool conjugacy) {
  const auto texts = inputs(a, 2);
  const Verdict v = conjugacy ? are_conjugate(parse_cyclic_word(texts[0], signature(a)),
                                              parse_cyclic_word(texts[1], signature(a)), reduce_options(a))
                              : are_equal(parse_word(texts[0], signature(a)), parse_word(texts[1], signature(a)),
                                          reduce_options(a));
  if (a.format == "json") {
    emit(a, ordered_json{{"verdict", to_string(v)}}.dump() + "\n");
  } else {
    emit(a, std::string(to_string(v)) + "\n");
  }
  return kOk;
}

int cmd_invariant(const Args& a) {
  const BraidWord braid = parse_artin(inputs(a, 1)[0], a.n);
  const int k = a.k == 0 ? 3 : a.k;
  if (k != 3 && k != 4) throw Error(Errc::invalid_argument, "--k must be 3 or 4");
  const Word c = k == 3 ? invariant_c(braid, invariant_options(a)) : invariant_c4(braid, invariant_options(a));
  if (a.format == "json") {
    ordered_json j;
    j["braid"] = format_artin(braid);
    j["invariant"] = format_word(c);
    j["length"] = c.size();
    emit(a, j.dump() + "\n");
  } else {
    emit(a, format_word(c) + "\n");
  }
  return kOk;
}

int cmd_lowerbound(const Args& a) {
  const BraidWord braid = parse_artin(inputs(a, 1)[0], a.n);
  const TrisecantCertificate cert = trisecant_certificate(braid, invariant_options(a), reduce_options(a));
  if (a.format == "text") {
    emit(a, "events " + std::to_string(cert.events) + "\nlower_bound " + std::to_string(cert.lower_bound) +
                "\nexact " + (cert.exact ? "true" : "false") + "\nok " + (cert.ok ? "true" : "false") + "\n");
  } else {
    emit(a, to_json(cert) + "\n");
  }
  return cert.ok ? kOk : kFailure;
}

int cmd_draw(const Args& a) {
  const Word word = parse_word(inputs(a, 1)[0], signature(a));
  if (a.format == "dot") {
    emit(a, render_minimal_graph(word, reduce_options(a)));
  } else {
    emit(a, render_svg(layout(word)));
  }
  return kOk;
}

int cmd_relations(const Args& a) {
  const auto relations = enumerate_tetrahedron_relations(signature(a));
  if (a.format == "json") {
    ordered_json j;
    j["count"] = relations.size();
    j["relations"] = ordered_json::array();
    for (const Relation& r : relations) j["relations"].push_back({format_word(r.left), format_word(r.right)});
    emit(a, j.dump() + "\n");
  } else {
    emit(a, format_relations(relations) + "count " + std::to_string(relations.size()) + "\n");
  }
  return kOk;
}

int cmd_scan(const Args& a) {
  const std::string text = a.file.empty() ? inputs(a, 1)[0] : read_file(a.file);
  const DynamicalSystem system = parse_system(text);
  const int k = a.k == 0 ? 3 : a.k;
  if (k != 3 && k != 4) throw Error(Errc::invalid_argument, "--k must be 3 or 4");
  const PropertyDetector detector = k == 3 ? collinearity_detector() : concyclicity_detector();
  const EventScan scan = isolate_event_times(system, detector);
  const PleasantnessReport report = pleasantness_check(system, detector, scan);
  const auto tuple = [](const std::vector<int>& particles) {
    std::string s = "(";
    for (int p : particles) s += (s.size() > 1 ? " " : "") + std::to_string(p);
    return s + ")";
  };
  if (a.format == "json") {
    ordered_json j;
    j["events"] = ordered_json::array();
    for (const CriticalEvent& e : scan.events) {
      j["events"].push_back({{"lo", e.interval.lo.get_str()},
                             {"hi", e.interval.hi.get_str()},
                             {"multiindex", e.multiindex.to_string()},
                             {"direction", e.direction}});
    }
    j["pleasant"] = report.pleasant();
    j["violations"] = ordered_json::array();
    for (const Violation& v : report.violations) {
      j["violations"].push_back({{"kind", to_string(v.kind)}, {"particles", tuple(v.particles)}});
    }
    if (report.pleasant() && system.particle_count() >= k) j["type"] = format_word(event_word(scan));
    emit(a, j.dump() + "\n");
  } else {
    std::string out = format_events(scan);
    out += std::string("pleasant ") + (report.pleasant() ? "yes" : "no") + "\n";
    for (const Violation& v : report.violations) out += std::string("violation ") + to_string(v.kind) + " " + tuple(v.particles) + "\n";
    if (report.pleasant() && system.particle_count() >= k) out += "type " + format_word(event_word(scan)) + "\n";
    emit(a, out);
  }
  return report.pleasant() ? kOk : kNotPleasant;
}

int exit_code(Errc code) {
  switch (code) {
    case Errc::parse_error:
    case Errc::invalid_argument:
    case Errc::unsupported_signature:
    case Errc::signature_mismatch:
      return kUsage;
    case Errc::budget_exhausted:
      return kBudget;
    case Errc::not_pleasant:
    case Errc::degenerate_input:
      return kNotPleasant;
    case Errc::move_not_applicable:
      break;
  }
  return kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free k-braid groups G_n^k: word problem, braid invariants, pictures"};
  app.require_subcommand(1);
  Args args;

  const auto sub = [&](const char* name, const char* about, bool needs_k, bool takes_input) {
    CLI::App* s = app.add_subcommand(name, about);
    s->add_option("--n", args.n, "number of strands")->required()->check(CLI::Range(1, kMaxStrands));
    auto* k = s->add_option("--k", args.k, "multiindex size");
    if (needs_k) k->required();
    s->add_option("--seed", args.seed, "perturbation seed")->capture_default_str();
    s->add_option("--budget", args.budget, "maximum classes visited by a reduction")->capture_default_str();
    s->add_option("--format", args.format, "output format")->capture_default_str();
    s->add_option("--out", args.out, "write output to this file instead of stdout");
    s->add_option("--file", args.file, "read inputs from this file, one per line");
    if (takes_input) s->add_option("inputs", args.inputs, "word or braid text");
    return s;
  };

  CLI::App* reduce_cmd = sub("reduce", "minimal representative and complexity of a word", true, true);
  CLI::App* equal_cmd = sub("equal", "word problem: are two words equal", true, true);
  CLI::App* conjugate_cmd = sub("conjugate", "conjugacy problem for two cyclic words", true, true);
  CLI::App* invariant_cmd = sub("invariant", "invariant c of a classical braid (--k 3 or 4)", false, true);
  invariant_cmd->add_option("--shape", args.shape, "swap detour: radial or apex")
      ->check(CLI::IsMember({"radial", "apex"}))
      ->capture_default_str();
  CLI::App* lowerbound_cmd = sub("lowerbound", "trisecant lower-bound certificate of a braid", false, true);
  CLI::App* draw_cmd = sub("draw", "SVG diagram, or minimal graph with --format dot", true, true);
  CLI::App* relations_cmd = sub("relations", "list the tetrahedron relations", true, false);
  CLI::App* scan_cmd = app.add_subcommand("scan", "critical events of a PL system file");
  scan_cmd->add_option("--k", args.k, "3 for collinearity, 4 for concyclicity")->capture_default_str();
  scan_cmd->add_option("--format", args.format, "output format")->capture_default_str();
  scan_cmd->add_option("--out", args.out, "write output to this file instead of stdout");
  scan_cmd->add_option("--file", args.file, "system file");
  scan_cmd->add_option("inputs", args.inputs, "system text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*reduce_cmd) return cmd_reduce(args);
    if (*equal_cmd) return cmd_compare(args, false);
    if (*conjugate_cmd) return cmd_compare(args, true);
    if (*invariant_cmd) return cmd_invariant(args);
    if (*lowerbound_cmd) {
      if (lowerbound_cmd->get_option("--format")->count() == 0) args.format = "json";
      return cmd_lowerbound(args);
    }
    if (*draw_cmd) {
      if (draw_cmd->get_option("--format")->count() == 0) args.format = "svg";
      return cmd_draw(args);
    }
    if (*relations_cmd) return cmd_relations(args);
    if (*scan_cmd) return cmd_scan(args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
