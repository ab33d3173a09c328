// Command-line front end. Exit codes: 0 success, 1 definitive negative answer,
// 2 usage or input error, 3 resource cap exceeded.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "qcsp/covering_array.hpp"
#include "qcsp/demos.hpp"
#include "qcsp/embeddings.hpp"
#include "qcsp/games.hpp"
#include "qcsp/geometry.hpp"
#include "qcsp/io.hpp"
#include "qcsp/patterns.hpp"
#include "qcsp/powers.hpp"
#include "qcsp/quantum.hpp"
#include "qcsp/structure.hpp"

using namespace qcsp;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

struct Globals {
  double tol = kDefaultTol;
  std::string output;
};

Globals g;

void emit(const Json &j) {
  if (g.output.empty() || g.output == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw InputError(g.output + ": cannot open for writing");
  out << j.dump(2) << '\n';
}

void emit_text(const std::string &text) {
  if (g.output.empty() || g.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw InputError(g.output + ": cannot open for writing");
  out << text;
}

Json embedding_to_json(const PowerEmbedding &e, const RelationalStructure &y, Channel channel) {
  Json images = Json::array();
  if (channel == Channel::alice) {
    AlicePowerView view(y, e.k);
    for (Vertex v : e.map) images.push_back(view.decode(v));
  } else {
    BobPowerView view(y, e.k);
    for (Vertex v : e.map) images.push_back({view.slot(v), view.value(v)});
  }
  return {{"k", e.k}, {"source", structure_to_json(e.source)}, {"map", e.map}, {"images", images}};
}

Channel parse_direction(const std::string &s) {
  try {
    return channel_from_string(s);
  } catch (const std::invalid_argument &) {
    throw CLI::ValidationError("--direction", "expected none, alice or bob");
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Two-prover CSP games: powers, patterns, strategies, PVMs and frames"};
  app.require_subcommand(1);
  app.add_option("--tol", g.tol, "Numeric tolerance for residual checks")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", g.output, "Write the result here instead of standard output");

  std::function<int()> action;

  // Common positional holders.
  std::string x_src, y_src, aux_src;
  std::size_t k = 1, n = 1;
  std::uint64_t seed = 0;

  // hom
  auto *hom = app.add_subcommand("hom", "Homomorphism search and checking")->require_subcommand(1);
  bool injective = false;
  auto *hom_find = hom->add_subcommand("find", "Find a homomorphism X -> Y");
  hom_find->add_option("X", x_src, "Source structure (file, '-', or inline JSON)")->required();
  hom_find->add_option("Y", y_src, "Target structure")->required();
  hom_find->add_flag("--injective", injective, "Require an injective map");
  hom_find->callback([&] {
    action = [&] {
      auto x = load_structure(x_src);
      auto y = load_structure(y_src);
      auto h = find_homomorphism(x, y, SearchOptions{injective, {}});
      emit({{"homomorphism", h ? Json(*h) : Json(nullptr)}});
      return h ? kOk : kNegative;
    };
  });
  auto *hom_check = hom->add_subcommand("check", "Check a vertex map X -> Y");
  hom_check->add_option("X", x_src)->required();
  hom_check->add_option("Y", y_src)->required();
  hom_check->add_option("MAP", aux_src, "Vertex map as a JSON array")->required();
  hom_check->callback([&] {
    action = [&] {
      auto x = load_structure(x_src);
      auto y = load_structure(y_src);
      bool ok = is_homomorphism(vertex_map_from_json(read_json(aux_src)), x, y);
      emit({{"homomorphism", ok}});
      return ok ? kOk : kNegative;
    };
  });

  // core / iso
  auto *core = app.add_subcommand("core", "Core of a structure");
  core->add_option("Y", y_src)->required();
  core->callback([&] {
    action = [&] {
      auto y = load_structure(y_src);
      auto vertices = core_vertices(y);
      emit({{"vertices", vertices}, {"core", structure_to_json(induced_substructure(y, vertices))}});
      return kOk;
    };
  });
  auto *iso = app.add_subcommand("iso", "Isomorphism between two structures");
  iso->add_option("A", x_src)->required();
  iso->add_option("B", y_src)->required();
  iso->callback([&] {
    action = [&] {
      auto iso_map = find_isomorphism(load_structure(x_src), load_structure(y_src));
      emit({{"isomorphism", iso_map ? Json(*iso_map) : Json(nullptr)}});
      return iso_map ? kOk : kNegative;
    };
  });

  // power
  std::string mode;
  auto *power = app.add_subcommand("power", "Materialize an Alice or Bob power");
  power->add_option("--mode", mode, "alice or bob")->required()->check(CLI::IsMember({"alice", "bob"}));
  power->add_option("Y", y_src)->required();
  power->add_option("--k", k, "Number of messages")->required()->check(CLI::PositiveNumber);
  power->callback([&] {
    action = [&] {
      auto y = load_structure(y_src);
      emit(structure_to_json(mode == "alice" ? alice_power(y, k) : bob_power(y, k)));
      return kOk;
    };
  });

  // pattern
  auto *pattern = app.add_subcommand("pattern", "Pattern calculus")->require_subcommand(1);
  auto *pat_show = pattern->add_subcommand("show", "Pattern of a structure (0-based blocks)");
  pat_show->add_option("Y", y_src)->required();
  pat_show->callback([&] {
    action = [&] {
      emit(pattern_to_json(pattern_of(load_structure(y_src))));
      return kOk;
    };
  });
  auto *pat_complete = pattern->add_subcommand("complete", "Complete structure on the pattern of Y");
  pat_complete->add_option("Y", y_src)->required();
  pat_complete->add_option("--n", n, "Domain size")->required()->check(CLI::PositiveNumber);
  pat_complete->callback([&] {
    action = [&] {
      emit(structure_to_json(complete_structure(n, pattern_of(load_structure(y_src)))));
      return kOk;
    };
  });
  auto *pat_chromatic = pattern->add_subcommand("chromatic", "Generalized chromatic number");
  pat_chromatic->add_option("Y", y_src)->required();
  pat_chromatic->callback([&] {
    action = [&] {
      emit({{"chromatic_number", chromatic_number(load_structure(y_src))}});
      return kOk;
    };
  });
  auto *pat_central = pattern->add_subcommand("central", "Central vertices");
  pat_central->add_option("Y", y_src)->required();
  pat_central->callback([&] {
    action = [&] {
      auto c = central_vertices(load_structure(y_src));
      emit({{"central", c}});
      return c.empty() ? kNegative : kOk;
    };
  });

  // embed
  auto *embed = app.add_subcommand("embed", "Complete structures inside powers")->require_subcommand(1);
  bool csv = false;
  std::size_t strength = 2;
  auto *emb_alice = embed->add_subcommand("clique-alice", "Complete structure into an Alice power via covering arrays");
  emb_alice->add_option("Y", y_src)->required();
  emb_alice->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  emb_alice->add_option("--seed", seed, "Random seed");
  emb_alice->add_flag("--csv", csv, "Print the image tuples as CSV rows");
  emb_alice->callback([&] {
    action = [&] {
      auto y = load_structure(y_src);
      auto e = clique_into_alice_power(y, n, seed);
      if (csv) {
        AlicePowerView view(y, e.k);
        std::ostringstream out;
        for (Vertex v : e.map) {
          Tuple t = view.decode(v);
          for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
          out << '\n';
        }
        emit_text(out.str());
      } else {
        emit(embedding_to_json(e, y, Channel::alice));
      }
      return kOk;
    };
  });
  auto *emb_digraph = embed->add_subcommand("clique-alice-digraph", "K_m into an Alice power of a digraph via balanced tuples");
  emb_digraph->add_option("Y", y_src)->required();
  emb_digraph->add_option("--m", n, "Clique size")->required()->check(CLI::PositiveNumber);
  emb_digraph->callback([&] {
    action = [&] {
      auto y = load_structure(y_src);
      emit(embedding_to_json(clique_into_alice_power_digraph(y, n), y, Channel::alice));
      return kOk;
    };
  });
  auto *emb_bob = embed->add_subcommand("complete-bob", "Complete structure into a Bob power via a central vertex");
  emb_bob->add_option("Y", y_src)->required();
  emb_bob->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  emb_bob->callback([&] {
    action = [&] {
      auto y = load_structure(y_src);
      auto e = complete_into_bob_power(y, n);
      if (!e) {
        emit({{"embedding", nullptr}, {"reason", "no central vertex"}});
        return kNegative;
      }
      emit(embedding_to_json(*e, y, Channel::bob));
      return kOk;
    };
  });
  auto *emb_ca = embed->add_subcommand("covering-array", "Covering array over {0..q-1} as CSV");
  emb_ca->add_option("--n", n, "Rows")->required()->check(CLI::PositiveNumber);
  emb_ca->add_option("--r", strength, "Strength")->required()->check(CLI::PositiveNumber);
  emb_ca->add_option("--q", k, "Alphabet size")->required()->check(CLI::PositiveNumber);
  emb_ca->add_option("--seed", seed, "Random seed");
  emb_ca->callback([&] {
    action = [&] {
      std::vector<Vertex> alphabet(k);
      for (std::size_t i = 0; i < k; ++i) alphabet[i] = i;
      emit_text(to_csv(covering_array(n, strength, alphabet, seed)));
      return kOk;
    };
  });

  // game
  auto *game = app.add_subcommand("game", "Classical strategies")->require_subcommand(1);
  std::string direction = "none";
  auto *game_verify = game->add_subcommand("verify", "Check that a strategy is perfect");
  game_verify->add_option("X", x_src)->required();
  game_verify->add_option("Y", y_src)->required();
  game_verify->add_option("STRATEGY", aux_src)->required();
  game_verify->callback([&] {
    action = [&] {
      auto x = load_structure(x_src);
      auto y = load_structure(y_src);
      auto verdict = verify_perfect(x, y, strategy_from_json(read_json(aux_src), x, y));
      Json out = {{"perfect", verdict.perfect}};
      if (verdict.counterexample) out["counterexample"] = counterexample_to_json(*verdict.counterexample, x);
      emit(out);
      return verdict.perfect ? kOk : kNegative;
    };
  });
  auto *game_synth = game->add_subcommand("synth", "Strategy from a homomorphism into Y or one of its powers");
  game_synth->add_option("X", x_src)->required();
  game_synth->add_option("Y", y_src)->required();
  game_synth->add_option("--from-hom", aux_src, "Vertex map (power vertex ids for alice/bob)")->required();
  game_synth->add_option("--direction", direction, "none, alice or bob");
  game_synth->add_option("--k", k, "Number of messages")->check(CLI::PositiveNumber);
  game_synth->callback([&] {
    action = [&] {
      auto x = load_structure(x_src);
      auto y = load_structure(y_src);
      auto h = vertex_map_from_json(read_json(aux_src));
      Strategy s;
      switch (parse_direction(direction)) {
        case Channel::none:
          if (!is_homomorphism(h, x, y)) throw std::invalid_argument("map is not a homomorphism X -> Y");
          s = strategy_from_hom(h, x, y);
          break;
        case Channel::alice:
          if (!is_homomorphism(h, x, AlicePowerView(y, k))) {
            throw std::invalid_argument("map is not a homomorphism into the Alice power");
          }
          s = alice_strategy_from_hom(h, x, y, k);
          break;
        case Channel::bob:
          s = bob_strategy_from_hom(h, x, y, k);
          break;
      }
      emit(strategy_to_json(s, x));
      return kOk;
    };
  });
  auto *game_brute = game->add_subcommand("brute", "Exhaustive search for a perfect strategy");
  game_brute->add_option("X", x_src)->required();
  game_brute->add_option("Y", y_src)->required();
  game_brute->add_option("--k", k, "Number of messages")->check(CLI::PositiveNumber);
  game_brute->add_option("--direction", direction, "none, alice or bob");
  game_brute->callback([&] {
    action = [&] {
      auto x = load_structure(x_src);
      auto y = load_structure(y_src);
      Channel c = parse_direction(direction);
      if (c == Channel::none && k != 1) throw CLI::ValidationError("--k", "must be 1 without a channel");
      auto s = brute_force_search(x, y, k, c);
      const double space = strategy_space_size(x, y, k, c);
      if (!s) {
        emit({{"strategy", nullptr}, {"space_size", space}});
        return kNegative;
      }
      Json out = strategy_to_json(*s, x);
      out["space_size"] = space;
      emit(out);
      return kOk;
    };
  });

  // quantum
  auto *quantum = app.add_subcommand("quantum", "PVMs and quantum strategies")->require_subcommand(1);
  std::string symbol;
  std::size_t trials = 100;
  auto *q_validate = quantum->add_subcommand("validate", "Check the PVM axioms");
  q_validate->add_option("PVM", aux_src)->required();
  q_validate->callback([&] {
    action = [&] {
      auto d = validate_pvm(pvm_from_json(read_json(aux_src)), g.tol);
      emit({{"valid", d.valid}, {"idempotence", d.idempotence}, {"self_adjointness", d.self_adjointness},
            {"completeness", d.completeness}, {"orthogonality", d.orthogonality}});
      return d.valid ? kOk : kNegative;
    };
  });
  auto *q_member = quantum->add_subcommand("member", "Membership of a PVM tuple in a quantised relation");
  q_member->add_option("Y", y_src, "Template structure")->required();
  q_member->add_option("PVMS", aux_src, "JSON array of PVMs")->required();
  q_member->add_option("--symbol", symbol, "Relation symbol (default: the first)");
  q_member->callback([&] {
    action = [&] {
      auto y = load_structure(y_src);
      std::size_t s = 0;
      if (!symbol.empty()) {
        auto found = y.signature().find(symbol);
        if (!found) throw InputError("--symbol: " + symbol + " is not in the signature");
        s = *found;
      }
      if (y.signature().size() == 0) throw InputError("template has no relations");
      Json in = read_json(aux_src);
      const Json &list = in.is_object() ? in.at("pvms") : in;
      std::vector<PVM> pvms;
      for (const Json &p : list) pvms.push_back(pvm_from_json(p));
      auto witness = quantum_relation_membership(pvms, y.relation(s), g.tol);
      Json out = {{"member", witness.has_value()}};
      if (witness) {
        out["support"] = witness->support;
        out["marginal_residual"] = marginal_residual(pvms, *witness);
      }
      emit(out);
      return witness ? kOk : kNegative;
    };
  });
  auto *q_verify = quantum->add_subcommand("verify", "Check that a quantum strategy is perfect");
  q_verify->add_option("X", x_src)->required();
  q_verify->add_option("Y", y_src)->required();
  q_verify->add_option("STRATEGY", aux_src)->required();
  q_verify->callback([&] {
    action = [&] {
      auto x = load_structure(x_src);
      auto y = load_structure(y_src);
      auto v = verify_perfect_quantum(x, y, quantum_strategy_from_json(read_json(aux_src), x), g.tol);
      Json out = {{"perfect", v.perfect}};
      if (v.counterexample) {
        out["counterexample"] = counterexample_to_json(*v.counterexample, x);
        out["losing_probability"] = v.losing_probability;
      }
      emit(out);
      return v.perfect ? kOk : kNegative;
    };
  });
  std::size_t dim = 2;
  auto *q_audit = quantum->add_subcommand("certificate-audit", "Audit the commuting-PVM equality certificate on random pairs");
  q_audit->add_option("--d", dim, "Dimension")->check(CLI::Range(1, 16));
  q_audit->add_option("--trials", trials, "Number of random pairs");
  q_audit->add_option("--seed", seed, "Random seed");
  q_audit->callback([&] {
    action = [&] {
      auto audit = audit_close_pvm_certificate(dim, dim, trials, seed, g.tol);
      emit(certificate_audit_to_json(audit));
      return audit.false_certificates == 0 && audit.missed_equal_pairs == 0 ? kOk : kNegative;
    };
  });

  // geom
  auto *geom = app.add_subcommand("geom", "Orthogonal colorings and frames")->require_subcommand(1);
  std::size_t pairs = 0;
  auto *g_color = geom->add_subcommand("color-sphere", "Build an orthogonal coloring of the unit sphere");
  g_color->add_option("--dim", dim, "Ambient dimension")->required()->check(CLI::Range(2, 64));
  g_color->add_option("--seed", seed, "Random seed");
  g_color->add_option("--audit", pairs, "Also sample this many orthogonal pairs");
  g_color->callback([&] {
    action = [&] {
      auto c = build_sphere_coloring(dim, seed);
      Json out = coloring_to_json(c);
      std::size_t violations = 0;
      if (pairs > 0) {
        std::mt19937_64 rng(seed);
        violations = orthogonality_violations(c, pairs, rng);
        out["audit"] = {{"pairs", pairs}, {"violations", violations}};
      }
      emit(out);
      return violations == 0 ? kOk : kNegative;
    };
  });
  bool audit = false;
  auto *g_frames = geom->add_subcommand("frames", "Sample adjacent frames with a witness");
  g_frames->add_option("--n", n, "Number of frame rows")->required()->check(CLI::Range(2, 64));
  g_frames->add_option("--d", dim, "Complex dimension")->required()->check(CLI::Range(1, 16));
  g_frames->add_option("--seed", seed, "Random seed");
  g_frames->add_flag("--audit", audit, "Check the witness and color both frames");
  g_frames->callback([&] {
    action = [&] {
      auto f = sample_adjacent_frames(n, dim, seed);
      Json out = {{"m", matrix_to_json(f.m)}, {"m_prime", matrix_to_json(f.m_prime)},
                  {"witness", matrix_to_json(f.witness)}};
      int code = kOk;
      if (audit) {
        auto adj = check_frame_adjacency(f.m, f.m_prime, f.witness, g.tol);
        auto coloring = build_sphere_coloring(2 * dim, seed);
        auto a = color_frame(coloring, realify_frame(f.m, g.tol), g.tol);
        auto b = color_frame(coloring, realify_frame(f.m_prime, g.tol), g.tol);
        bool distinct = !(a == b);
        out["audit"] = {{"adjacent", adj.adjacent},
                        {"outgoing_residual", adj.outgoing},
                        {"incoming_residual", adj.incoming},
                        {"coloring_mode", to_string(coloring.mode)},
                        {"color_m", {a.row, a.cap}},
                        {"color_m_prime", {b.row, b.cap}},
                        {"distinct", distinct}};
        if (!adj.adjacent || !distinct) code = kNegative;
      }
      emit(out);
      return code;
    };
  });

  // demo
  std::string demo_name;
  bool all = false, list = false;
  auto *demo = app.add_subcommand("demo", "Run reproduction fixtures");
  demo->add_option("NAME", demo_name, "Fixture name");
  demo->add_flag("--all", all, "Run every fixture");
  demo->add_flag("--list", list, "List fixture names");
  demo->add_option("--seed", seed, "Random seed");
  demo->callback([&] {
    action = [&] {
      if (list) {
        emit(demo_names());
        return kOk;
      }
      if (all == !demo_name.empty()) throw CLI::ValidationError("demo", "give a fixture name or --all");
      std::vector<std::string> names = all ? demo_names() : std::vector<std::string>{demo_name};
      Json reports = Json::array();
      bool passed = true;
      for (const auto &name : names) {
        auto report = run_demo(name, DemoOptions{seed, g.tol});
        passed = passed && report.passed;
        std::cerr << (report.passed ? "PASS " : "FAIL ") << name << '\n';
        reports.push_back(report_to_json(report));
      }
      emit(all ? Json{{"passed", passed}, {"reports", reports}} : reports.front());
      return passed ? kOk : kNegative;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SizeCapExceeded &e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
