#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <exception>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "garside/garside.hpp"

namespace garside::cli {
namespace {

using Json = nlohmann::ordered_json;
using braid::BraidContext;
using El = Element<BraidContext>;

struct Options {
  int strands = 0;
  bool json = false;
  bool dot = false;
  bool oracle = false;
  int steps = 1;
  std::uint64_t seed = 1;
  int count = 20;
  int length = 8;
  std::vector<std::string> words;
};

Json stats_json(const RunStats& s) {
  return Json{{"T", s.T},
              {"N", s.N},
              {"M", s.M},
              {"R_max", s.R_max},
              {"pullback_max", s.pullback_max},
              {"sc_size", s.sc_size},
              {"contract_calls", s.contract_calls}};
}

void print_stats(std::ostream& out, const RunStats& s) {
  out << "T: " << s.T << "\nN: " << s.N << "\nM: " << s.M << "\nR_max: " << s.R_max
      << "\npullback_max: " << s.pullback_max << "\nsc_size: " << s.sc_size
      << "\ncontract_calls: " << s.contract_calls << "\n";
}

Json envelope(const Options& o, Json result, Json witness, const RunStats& stats) {
  Json input = Json::array();
  for (const auto& w : o.words) input.push_back(w);
  return Json{{"input", input},
              {"n", o.strands},
              {"result", std::move(result)},
              {"witness", std::move(witness)},
              {"stats", stats_json(stats)}};
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err)
      : o_(o), out_(out), err_(err), ctx_(o.strands), calls_before_(ctx_.contract_calls()) {}

  El element(std::size_t k) const { return braid::parse_element(ctx_, o_.words.at(k)); }

  void finish(RunStats& stats) const { stats.contract_calls = ctx_.contract_calls() - calls_before_; }

  void emit(Json result, Json witness, RunStats stats) {
    finish(stats);
    out_ << envelope(o_, std::move(result), std::move(witness), stats).dump(2) << "\n";
  }

  int nf() {
    const El x = element(0);
    const std::string nf = braid::word_from_element(x);
    if (o_.json) {
      emit(nf, nullptr, {});
    } else {
      out_ << nf << "\n";
    }
    return kSuccess;
  }

  int slide() {
    El x = element(0);
    Json trail = Json::array({braid::word_from_element(x)});
    for (int k = 0; k < o_.steps; ++k) {
      x = cyclic_sliding(x);
      trail.push_back(braid::word_from_element(x));
    }
    if (o_.json) {
      emit(trail, nullptr, {});
    } else {
      for (const auto& line : trail) out_ << line.get<std::string>() << "\n";
    }
    return kSuccess;
  }

  int circuit() {
    const SlideResult<BraidContext> r = slide_to_circuit(element(0));
    const Circuit<BraidContext> c = make_circuit(r.representative);
    RunStats stats;
    stats.T = r.entry_index;
    stats.N = r.period;
    stats.M = r.period;
    Json elements = Json::array();
    for (const auto& e : c.elements) elements.push_back(braid::word_from_element(e));
    if (o_.json) {
      emit(Json{{"representative", braid::word_from_element(r.representative)},
                {"period", r.period},
                {"circuit", elements}},
           braid::word_from_element(r.conjugator), stats);
    } else {
      out_ << "representative: " << braid::word_from_element(r.representative) << "\n"
           << "conjugator: " << braid::word_from_element(r.conjugator) << "\n"
           << "T: " << r.entry_index << "\n"
           << "period: " << r.period << "\n";
      for (const auto& e : elements) out_ << "  " << e.get<std::string>() << "\n";
    }
    return kSuccess;
  }

  int sc(bool with_arrows) {
    RunStats stats;
    const SCGraph<BraidContext> g = enumerate_sc(element(0), SearchOptions{}, stats);
    finish(stats);
    std::vector<std::string> names;
    for (const auto& v : g.vertices) names.push_back(braid::word_from_element(v));
    if (o_.dot) {
      out_ << "digraph SCG {\n";
      for (std::size_t i = 0; i < names.size(); ++i) {
        out_ << "  v" << i << " [label=\"" << dot_escape(names[i]) << "\"];\n";
      }
      for (const auto& a : g.arrows) {
        out_ << "  v" << a.source << " -> v" << a.target << " [label=\""
             << braid::simple_word(ctx_, a.label) << "\"];\n";
      }
      out_ << "}\n";
      return kSuccess;
    }
    if (o_.json) {
      Json result = Json{{"vertices", names}};
      if (with_arrows) {
        Json arrows = Json::array();
        for (const auto& a : g.arrows) {
          arrows.push_back(
              Json{{"source", a.source}, {"target", a.target}, {"label", braid::simple_word(ctx_, a.label)}});
        }
        Json tree = Json::array();
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (g.parent[i]) {
            tree.push_back(Json{{"vertex", i},
                                {"parent", g.parent[i]->vertex},
                                {"label", braid::simple_word(ctx_, g.parent[i]->label)}});
          }
        }
        result["arrows"] = arrows;
        result["tree"] = tree;
      }
      emit(result, nullptr, stats);
      return kSuccess;
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      out_ << (with_arrows ? std::to_string(i) + ": " : "") << names[i] << "\n";
    }
    if (with_arrows) {
      for (const auto& a : g.arrows) {
        out_ << a.source << " -> " << a.target << " (" << braid::simple_word(ctx_, a.label) << ")\n";
      }
      out_ << "arrows: " << g.arrows.size() << "\n";
    }
    out_ << "size: " << g.size() << "\n";
    return kSuccess;
  }

  int conj() {
    const El x = element(0);
    const El y = element(1);
    ConjugacyResult<BraidContext> r = solve_conjugacy(x, y);
    std::optional<bool> agreed;
    if (o_.oracle) {
      const ConjugacyResult<BraidContext> naive = naive_solve(x, y);
      agreed = naive.conjugate == r.conjugate;
    }
    const Json witness = r.witness ? Json(braid::word_from_element(*r.witness)) : Json(nullptr);
    if (o_.json) {
      Json result = r.conjugate;
      RunStats stats = r.stats;
      finish(stats);
      Json doc = envelope(o_, result, witness, stats);
      if (agreed) doc["oracle_agrees"] = *agreed;
      out_ << doc.dump(2) << "\n";
    } else {
      out_ << (r.conjugate ? "conjugate" : "not conjugate") << "\n";
      if (r.witness) out_ << "witness: " << witness.get<std::string>() << "\n";
      if (agreed) out_ << "oracle: " << (*agreed ? "agrees" : "DISAGREES") << "\n";
    }
    if (agreed && !*agreed) {
      err_ << "error: reference solver disagrees\n";
      return kInternalError;
    }
    return r.conjugate ? kSuccess : kNotConjugate;
  }

  int stats() {
    RunStats stats;
    if (o_.words.size() == 2) {
      stats = solve_conjugacy(element(0), element(1)).stats;
    } else {
      enumerate_sc(element(0), SearchOptions{}, stats);
    }
    finish(stats);
    if (o_.json) {
      emit(nullptr, nullptr, stats);
    } else {
      print_stats(out_, stats);
    }
    return kSuccess;
  }

  int oracle_check() {
    (void)enumerate_simples(ctx_);
    std::mt19937_64 rng(o_.seed);
    std::uniform_int_distribution<int> len(0, o_.length);
    std::bernoulli_distribution make_conjugate(0.5);
    int agreed = 0;
    int conjugate_pairs = 0;
    Json failures = Json::array();
    for (int k = 0; k < o_.count; ++k) {
      const El x = braid::element_from_word(ctx_, braid::random_word(rng, ctx_.strands(), len(rng)));
      El y(ctx_);
      if (make_conjugate(rng)) {
        const El w = braid::element_from_word(ctx_, braid::random_word(rng, ctx_.strands(), len(rng)));
        y = conjugate(x, w);
      } else {
        y = braid::element_from_word(ctx_, braid::random_word(rng, ctx_.strands(), len(rng)));
      }
      const auto fast = solve_conjugacy(x, y);
      const auto naive = naive_solve(x, y);
      const bool ok = fast.conjugate == naive.conjugate &&
                      (!fast.witness || conjugate(x, *fast.witness) == y) &&
                      (!naive.witness || conjugate(x, *naive.witness) == y);
      if (ok) {
        ++agreed;
      } else {
        failures.push_back(Json{{"x", braid::word_from_element(x)}, {"y", braid::word_from_element(y)}});
      }
      if (fast.conjugate) ++conjugate_pairs;
    }
    if (o_.json) {
      emit(Json{{"pairs", o_.count}, {"conjugate", conjugate_pairs}, {"agreed", agreed}, {"failures", failures}},
           nullptr, {});
    } else {
      out_ << "pairs: " << o_.count << "\nconjugate: " << conjugate_pairs << "\nagreed: " << agreed << "\n";
      for (const auto& f : failures) {
        out_ << "mismatch: " << f["x"].get<std::string>() << " vs " << f["y"].get<std::string>() << "\n";
      }
    }
    return agreed == o_.count ? kSuccess : kInternalError;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  BraidContext ctx_;
  std::uint64_t calls_before_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Conjugacy in braid groups by cyclic sliding", "garside"};
  app.require_subcommand(1, 1);

  auto common = [&o](CLI::App* sub, std::size_t words_min, std::size_t words_max) {
    sub->add_option("-n,--strands", o.strands, "number of strands")->required()->check(CLI::Range(2, braid::kMaxStrands));
    sub->add_flag("--json", o.json, "machine-readable output");
    if (words_max > 0) {
      sub->add_option("words", o.words, "braid words")->required(words_min > 0)->expected(
          static_cast<int>(words_min), static_cast<int>(words_max));
    }
  };

  auto* nf = app.add_subcommand("nf", "left normal form of a braid");
  common(nf, 1, 1);
  auto* slide = app.add_subcommand("slide", "apply cyclic sliding");
  common(slide, 1, 1);
  slide->add_option("--steps", o.steps, "number of slidings")->check(CLI::NonNegativeNumber);
  auto* circuit = app.add_subcommand("circuit", "slide to a sliding circuit");
  common(circuit, 1, 1);
  auto* sc = app.add_subcommand("sc", "list the set of sliding circuits");
  common(sc, 1, 1);
  auto* scg = app.add_subcommand("scg", "the sliding circuits graph");
  common(scg, 1, 1);
  auto* dot = scg->add_flag("--dot", o.dot, "Graphviz output");
  dot->excludes(scg->get_option("--json"));
  auto* conj = app.add_subcommand("conj", "decide conjugacy and find a conjugator");
  common(conj, 2, 2);
  conj->add_flag("--oracle", o.oracle, "cross-check with the reference solver (small groups only)");
  auto* stats = app.add_subcommand("stats", "instrumentation counters for one or two braids");
  common(stats, 1, 2);
  auto* check = app.add_subcommand("oracle-check", "compare both solvers on random pairs");
  common(check, 0, 0);
  check->add_option("--seed", o.seed, "random seed");
  check->add_option("--count", o.count, "number of pairs")->check(CLI::NonNegativeNumber);
  check->add_option("--length", o.length, "maximum word length")->check(CLI::NonNegativeNumber);

  std::vector<std::string> argv_storage{"garside"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    Runner runner(o, out, err);
    if (nf->parsed()) return runner.nf();
    if (slide->parsed()) return runner.slide();
    if (circuit->parsed()) return runner.circuit();
    if (sc->parsed()) return runner.sc(false);
    if (scg->parsed()) return runner.sc(true);
    if (conj->parsed()) return runner.conj();
    if (stats->parsed()) return runner.stats();
    if (check->parsed()) return runner.oracle_check();
  } catch (const braid::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const EnumerationTooLarge& e) {
    err << "refused: " << e.what() << " (the reference solver is limited to small braid groups)\n";
    return kUsageError;
  } catch (const InternalInvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const ContractViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace garside::cli
