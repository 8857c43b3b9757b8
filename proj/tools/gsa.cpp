// gsa: command-line driver for atlas validation, functors and law suites.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "gsa/dsl.hpp"
#include "gsa/laws.hpp"
#include "gsa/parity.hpp"
#include "gsa/polar.hpp"
#include "gsa/symmetry.hpp"
#include "gsa/tangent.hpp"

using namespace gsa;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kParse = 3, kInternal = 4 };

struct Precondition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input = "-";
  std::string output;
  std::string format = "dsl";
};

Document read_input(const std::string& path) {
  if (path != "-") {
    std::ifstream probe(path);
    if (!probe) throw std::ios_base::failure("cannot open '" + path + "'");
    return load_document(path);
  }
  std::stringstream ss;
  ss << std::cin.rdbuf();
  std::string text = ss.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("<stdin>", 0, e.byte, e.what());
    }
    return gsa::from_json(j, "<stdin>");
  }
  return parse_document(text, "<stdin>");
}

void write_output(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw std::ios_base::failure("cannot write '" + cfg.output + "'");
  out << text;
}

void write_document(const Config& cfg, const Document& doc) {
  write_output(cfg, cfg.format == "json" ? to_json(doc).dump(2) + "\n" : emit_document(doc));
}

// Inputs to transformations must be valid; a failing report ends the run with exit 2.
void require_valid(const Document& doc) {
  auto r = validate_atlas(*doc.atlas);
  if (doc.action) r.merge(validate_action(*doc.action), "action: ");
  if (!r.ok()) throw ValidationError(r);
}

const ActionTable& require_action(const Document& doc, const char* what) {
  if (!doc.action) throw Precondition(std::string(what) + " needs a document with an action block");
  return *doc.action;
}

int run_validate(const Config& cfg) {
  auto doc = read_input(cfg.input);
  auto r = validate_atlas(*doc.atlas);
  if (doc.action) r.merge(validate_action(*doc.action), "action: ");
  if (cfg.format == "json") {
    nlohmann::json j{{"ok", r.ok()}, {"report", r.to_string()}};
    write_output(cfg, j.dump(2) + "\n");
  } else {
    auto text = r.ok() ? std::string("ok") : r.to_string();
    if (text.back() != '\n') text += '\n';
    write_output(cfg, text);
  }
  return r.ok() ? kOk : kInvalid;
}

std::string render_map(const PolynomialMap& m) {
  std::string out;
  for (std::size_t i = 0; i < m.vars()->size(); ++i)
    out += "    " + (*m.vars())[i].name + " = " + to_string(m.image(i)) + "\n";
  return out;
}

int run_flip(const Config& cfg, const std::vector<int>& perm) {
  auto doc = read_input(cfg.input);
  require_valid(doc);
  const auto& table = require_action(doc, "flip");
  Permutation s;
  try {
    s = Permutation::from_one_based(perm);
  } catch (const std::invalid_argument& e) {
    throw Precondition(std::string("--perm: ") + e.what());
  }
  if (s.size() != table.atlas->kind.vector_slots)
    throw Precondition("--perm has " + std::to_string(s.size()) + " entries, the atlas has " +
                       std::to_string(table.atlas->kind.vector_slots) + " vector slots");
  const auto& maps = table.maps.at(s);
  if (cfg.format == "json") {
    nlohmann::json j{{"perm", perm}, {"flavor", std::string(to_string(table.flavor))}};
    for (const auto& m : maps) {
      nlohmann::json images = nlohmann::json::array();
      for (std::size_t i = 0; i < m.vars()->size(); ++i)
        images.push_back({(*m.vars())[i].name, to_string(m.image(i))});
      j["charts"][m.vars()->name()] = images;
    }
    write_output(cfg, j.dump(2) + "\n");
    return kOk;
  }
  std::string out = "perm";
  for (int p : perm) out += " " + std::to_string(p);
  out += " {\n";
  for (const auto& m : maps) out += "  chart " + m.vars()->name() + " {\n" + render_map(m) + "  }\n";
  write_output(cfg, out + "}\n");
  return kOk;
}

int run_check_laws(const Config& cfg, const std::string& suite, std::uint64_t seed, std::size_t n_max,
                   std::size_t count, bool timing) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    names.push_back(suite);
  }
  SuiteOptions opts{seed, n_max, count};
  std::ostringstream out;
  nlohmann::json j = nlohmann::json::array();
  bool all_ok = true;
  for (const auto& name : names) {
    SuiteReport r;
    try {
      r = run_suite(name, opts);
    } catch (const std::invalid_argument& e) {
      throw Precondition(e.what());
    }
    all_ok = all_ok && r.ok();
    out << (r.ok() ? "PASS " : "FAIL ") << name;
    if (timing) out << "  (" << std::fixed << std::setprecision(3) << r.seconds << " s)";
    out << "\n";
    nlohmann::json laws = nlohmann::json::array();
    for (const auto& l : r.laws) {
      const char* status = l.ok() ? "pass" : l.informational ? "note" : "FAIL";
      out << "  " << std::left << std::setw(5) << status << std::right << std::setw(7) << l.cases << " cases  "
          << l.law;
      if (l.failures) out << "  [" << l.failures << " failing; first: " << l.first_failure << "]";
      out << "\n";
      laws.push_back({{"law", l.law},
                      {"cases", l.cases},
                      {"failures", l.failures},
                      {"informational", l.informational},
                      {"first_failure", l.first_failure}});
    }
    nlohmann::json entry{{"suite", name}, {"ok", r.ok()}, {"laws", laws}};
    if (timing) entry["seconds"] = r.seconds;
    j.push_back(entry);
  }
  write_output(cfg, cfg.format == "json" ? nlohmann::json{{"seed", seed}, {"n_max", n_max}, {"suites", j}}.dump(2) + "\n"
                                         : out.str());
  return all_ok ? kOk : kInvalid;
}

std::vector<int> int_list(const std::string& text, const char* option) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Precondition(std::string(option) + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("GSA_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      std::cerr << "gsa: ignoring non-numeric GSA_SEED\n";
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gsa: exact computations on graded superbundle atlases"};
  app.require_subcommand(1);
  Config cfg;
  auto io = [&cfg](CLI::App* sub, bool takes_input = true) {
    if (takes_input) sub->add_option("input", cfg.input, "atlas document (.gsa or .json; - for stdin)");
    sub->add_option("-o,--output", cfg.output, "write to a file instead of stdout");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"dsl", "json"}));
  };

  auto* validate = app.add_subcommand("validate", "check an atlas (and its action)");
  io(validate);

  std::size_t k = 1;
  auto* tangent = app.add_subcommand("tangent", "k-fold tangent bundle, with its flip action when k > 1");
  io(tangent);
  tangent->add_option("-k", k, "order")->check(CLI::PositiveNumber);

  std::size_t n = 0;
  auto* polar = app.add_subcommand("polarize", "n-fold polarization of an N-weighted atlas");
  io(polar);
  polar->add_option("-n", n, "number of vector slots (default: the degree)");

  std::string slots_arg;
  auto* reverse = app.add_subcommand("reverse-parity", "parity reversion along vector slots");
  io(reverse);
  reverse->add_option("--slots", slots_arg, "comma-separated 1-based slots read as a composition, rightmost applied first (default: all, renamed _pi)");

  std::string perm_arg;
  auto* flip = app.add_subcommand("flip", "print the action map I^sigma on every chart");
  io(flip);
  flip->add_option("--perm", perm_arg, "permutation in one-line notation, 1-based, e.g. 2,1,3")->required();

  auto* nice = app.add_subcommand("nice-coords", "change to coordinates in which the action is linear");
  io(nice);

  auto* desuper = app.add_subcommand("desuperize", "purely even skew n-vector bundle of an N-manifold");
  io(desuper);
  desuper->add_option("-n", n, "number of vector slots (default: the degree)");

  auto* diag = app.add_subcommand("diagonalize", "N-weighted atlas of a symmetric n-vector bundle");
  io(diag);

  std::string suite = "all";
  std::uint64_t seed = default_seed();
  std::size_t n_max = 3, count = 0;
  bool timing = false;
  auto* laws = app.add_subcommand("check-laws", "run randomized law suites and print a pass/fail matrix");
  io(laws, false);
  std::vector<std::string> choices{"all"};
  for (const auto& s : suite_names()) choices.push_back(s);
  laws->add_option("--suite", suite, "suite name or all")->check(CLI::IsMember(choices));
  laws->add_option("--seed", seed, "random seed (default: $GSA_SEED or 1)");
  laws->add_option("--n-max", n_max, "largest number of vector slots or tangent order")->check(CLI::Range(1, 5));
  laws->add_option("--count", count, "random instances per suite (0: suite default)");
  laws->add_flag("--timing", timing, "include run times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  auto degree_or = [](const Atlas& a, std::size_t given) {
    if (given) return given;
    if (!a.kind.degree || a.kind.vector_slots) throw Precondition("expected an N-weighted atlas (kind weighted D)");
    return static_cast<std::size_t>(*a.kind.degree);
  };

  try {
    if (*validate) return run_validate(cfg);
    if (*flip) return run_flip(cfg, int_list(perm_arg, "--perm"));
    if (*laws) return run_check_laws(cfg, suite, seed, n_max, count, timing);

    auto doc = read_input(cfg.input);
    if (*polar) {
      auto p = polarize(doc.atlas, degree_or(*doc.atlas, n));
      write_document(cfg, {p.atlas, p.action});
    } else if (*desuper) {
      auto l = desuperize(doc.atlas, degree_or(*doc.atlas, n));
      write_document(cfg, {l.atlas, l});
    } else {
      require_valid(doc);
      if (*tangent) {
        auto it = iterated_tangent(*doc.atlas, k);
        std::optional<ActionTable> act;
        if (k > 1) act = flip_action(it);
        write_document(cfg, {it.atlas(), act});
      } else if (*reverse) {
        const std::size_t m = doc.atlas->kind.vector_slots;
        if (m == 0) throw Precondition("reverse-parity needs an atlas with vector slots");
        Atlas out = *doc.atlas;
        auto slots = int_list(slots_arg, "--slots");
        if (slots.empty()) {
          out = total_reversion(out);
        } else {
          for (auto it = slots.rbegin(); it != slots.rend(); ++it) {
            const int s = *it;
            if (s < 1 || static_cast<std::size_t>(s) > m) throw Precondition("--slots entry " + std::to_string(s) + " out of range 1.." + std::to_string(m));
            out = reverse_parity(out, static_cast<std::size_t>(s - 1));
          }
        }
        write_document(cfg, {std::make_shared<const Atlas>(out), std::nullopt});
      } else if (*nice) {
        auto nc = nice_coordinates(require_action(doc, "nice-coords"));
        write_document(cfg, {nc.atlas, nc.action});
      } else if (*diag) {
        auto d = diagonalize(require_action(doc, "diagonalize"));
        write_document(cfg, {d.atlas, std::nullopt});
      }
    }
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "gsa: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    std::cerr << "gsa: validation failed:\n" << e.what() << "\n";
    return kInvalid;
  } catch (const Precondition& e) {
    std::cerr << "gsa: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "gsa: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gsa: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "gsa: internal error: " << e.what() << "\n";
    return kInternal;
  }
}
