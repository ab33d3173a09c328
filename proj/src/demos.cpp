#include "qcsp/demos.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "qcsp/covering_array.hpp"
#include "qcsp/embeddings.hpp"
#include "qcsp/patterns.hpp"
#include "qcsp/powers.hpp"

namespace qcsp {

std::vector<RelationalStructure> small_digraphs(std::size_t max_vertices, std::size_t max_edges) {
  std::vector<RelationalStructure> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<Tuple> pairs;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) pairs.push_back({a, b});
    }
    // Subsets of `pairs` of size <= max_edges, via bitmasks.
    for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_edges) continue;
      std::vector<Tuple> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1) edges.push_back(pairs[i]);
      }
      out.push_back(digraph(n, std::move(edges)));
    }
  }
  return out;
}

std::vector<std::pair<std::string, RelationalStructure>> demo_catalog() {
  return {{"loop", loop()},       {"D2", directed_edge()}, {"K2", clique(2)},
          {"K3", clique(3)},      {"NAE2", nae(2)},        {"RB3", rainbow(3)},
          {"1-in-3", one_in_three()}};
}

RelationalStructure bob_advantage_instance() { return single_relation(2, 4, {{0, 0, 1, 1}}); }

RelationalStructure bob_advantage_template() {
  return single_relation(2, 4, {{0, 1, 1, 1}, {1, 1, 1, 0}});
}

RelationalStructure central_example() {
  return single_relation(8, 4, {{1, 1, 2, 3}, {4, 5, 1, 1}, {6, 6, 7, 7}});
}

CertificateAudit audit_close_pvm_certificate(std::size_t min_dimension, std::size_t max_dimension,
                                             std::size_t trials, std::uint64_t seed, double tol) {
  if (min_dimension < 1 || max_dimension < min_dimension || max_dimension > kMaxDimension) {
    throw std::invalid_argument("dimension range must satisfy 1 <= min <= max <= 16");
  }
  std::mt19937_64 rng(seed);
  CertificateAudit audit;
  audit.trials = trials;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t d = min_dimension + trial % (max_dimension - min_dimension + 1);
    const std::size_t outcomes = 2 + rng() % 2;
    CMatrix eigen = random_unitary(d, rng);
    std::vector<std::size_t> lp(d), lq(d);
    for (auto &l : lp) l = rng() % outcomes;
    bool same = rng() % 2 == 0;
    for (std::size_t j = 0; j < d; ++j) lq[j] = same ? lp[j] : rng() % outcomes;
    PVM p = pvm_from_basis(eigen, lp, outcomes);
    PVM q = pvm_from_basis(eigen, lq, outcomes);
    bool equal = pvms_equal(p, q, tol);
    audit.equal_pairs += equal;
    // Test basis: the eigenbasis turned by a small unitary.
    CMatrix twist = CMatrix::Identity(d, d) + 1e-2 * (random_unitary(d, rng) - CMatrix::Identity(d, d));
    Eigen::HouseholderQR<CMatrix> qr(eigen * twist);
    CMatrix basis = qr.householderQ() * CMatrix::Identity(d, d);
    bool fired = false;
    std::size_t labelings = 1;
    for (std::size_t j = 0; j < d; ++j) labelings *= outcomes;
    for (std::size_t idx = 0; idx < labelings && !fired; ++idx) {
      Tuple tau = outcome_tuple(idx, outcomes, d);
      fired = close_pvm_equality(p, q, basis, std::vector<std::size_t>(tau.begin(), tau.end()), tol).certified;
    }
    audit.labelings += labelings;
    audit.false_certificates += fired && !equal;
    audit.missed_equal_pairs += equal && !fired;
  }
  return audit;
}

Json certificate_audit_to_json(const CertificateAudit &a) {
  return {{"trials", a.trials},
          {"equal_pairs", a.equal_pairs},
          {"labelings", a.labelings},
          {"false_certificates", a.false_certificates},
          {"missed_equal_pairs", a.missed_equal_pairs}};
}

Json report_to_json(const DemoReport &r) {
  return {{"name", r.name}, {"topic", r.topic}, {"passed", r.passed}, {"details", r.details}};
}

namespace {

DemoReport clique_powers(const DemoOptions &) {
  DemoReport r{"clique-powers", "Alice and Bob powers of cliques, NAE and rainbow structures", true, Json::array()};
  struct Case {
    std::string label;
    RelationalStructure power;
    RelationalStructure expected;
  };
  std::vector<Case> cases;
  cases.push_back({"alice_power(K2,2) = K4", alice_power(clique(2), 2), clique(4)});
  cases.push_back({"alice_power(K3,2) = K9", alice_power(clique(3), 2), clique(9)});
  cases.push_back({"alice_power(NAE2,2) = NAE4", alice_power(nae(2), 2), nae(4)});
  cases.push_back({"bob_power(K3,2) = K6", bob_power(clique(3), 2), clique(6)});
  cases.push_back({"bob_power(NAE2,3) = NAE6", bob_power(nae(2), 3), nae(6)});
  cases.push_back({"bob_power(RB3,2) = RB6", bob_power(rainbow(3), 2), rainbow(6)});
  for (const Case &c : cases) {
    auto iso = find_isomorphism(c.power, c.expected);
    r.passed = r.passed && iso.has_value();
    Json entry = {{"identity", c.label}, {"isomorphic", iso.has_value()}};
    if (iso) entry["witness"] = *iso;
    r.details.push_back(std::move(entry));
  }
  return r;
}

DemoReport edge_versus_digon(const DemoOptions &) {
  DemoReport r{"edge-versus-directed-edge", "two messages: Alice can help, Bob cannot, for K2 against D2", false, {}};
  const auto x = clique(2);
  const auto y = directed_edge();
  auto bob = brute_force_search(x, y, 2, Channel::bob);
  auto alice = brute_force_search(x, y, 2, Channel::alice);
  r.details["bob_channel"] = bob ? "perfect strategy found" : "no perfect Bob-channel strategy";
  r.details["alice_channel"] = alice ? "perfect strategy found" : "no perfect Alice-channel strategy";
  if (alice) r.details["alice_strategy"] = strategy_to_json(*alice, x);
  r.passed = !bob && alice && verify_perfect(x, y, *alice).perfect;
  return r;
}

DemoReport bob_advantage(const DemoOptions &) {
  DemoReport r{"bob-advantage", "a two-message Bob channel wins where Alice channels up to three messages lose", false, {}};
  const auto x = bob_advantage_instance();
  const auto y = bob_advantage_template();
  const auto bp = bob_power(y, 2);
  auto h = find_homomorphism(x, bp);
  bool ok = h.has_value();
  if (h) {
    r.details["bob_power_homomorphism"] = *h;
    auto s = bob_strategy_from_hom(*h, x, y, 2);
    r.details["bob_strategy"] = strategy_to_json(s, x);
    ok = ok && verify_perfect(x, y, s).perfect;
    auto brute = brute_force_search(x, y, 2, Channel::bob);
    ok = ok && brute.has_value();
  }
  Json alice = Json::array();
  for (std::size_t k = 1; k <= 3; ++k) {
    bool hom = find_homomorphism(x, alice_power(y, k)).has_value();
    bool strategy = brute_force_search(x, y, k, Channel::alice).has_value();
    alice.push_back({{"k", k}, {"homomorphism", hom}, {"strategy", strategy}});
    ok = ok && !hom && !strategy;
  }
  r.details["alice_channel"] = std::move(alice);
  r.passed = ok;
  return r;
}

DemoReport channel_oracle(const std::string &name, Channel channel) {
  DemoReport r{name, std::string("perfect ") + to_string(channel) +
                         "-channel strategies exist iff X maps to the power",
               false, {}};
  std::size_t cases = 0, agree = 0, positive = 0;
  Json disagreements = Json::array();
  for (const auto &[yname, y] : std::vector<std::pair<std::string, RelationalStructure>>{
           {"D2", directed_edge()}, {"K2", clique(2)}}) {
    for (std::size_t k = 1; k <= 2; ++k) {
      auto power = channel == Channel::alice ? alice_power(y, k) : bob_power(y, k);
      for (const auto &x : small_digraphs(2, 2)) {
        bool hom = find_homomorphism(x, power).has_value();
        bool game = brute_force_search(x, y, k, channel).has_value();
        ++cases;
        positive += hom;
        if (hom == game) {
          ++agree;
        } else {
          disagreements.push_back({{"Y", yname}, {"k", k}, {"X", structure_to_json(x)}});
        }
      }
    }
  }
  r.details = {{"cases", cases}, {"agreements", agree}, {"homomorphisms", positive},
               {"disagreements", disagreements}};
  r.passed = agree == cases;
  if (channel == Channel::bob) {
    auto extra = bob_advantage({});
    r.details["bob_advantage_fixture"] = extra.passed;
    r.passed = r.passed && extra.passed;
  }
  return r;
}

DemoReport one_bit_predicates(const DemoOptions &) {
  DemoReport r{"one-bit-predicates", "when a single bit of communication enlarges the CSP", true, Json::array()};
  for (const auto &[name, y] : demo_catalog()) {
    bool a = alice_one_bit_helps(y);
    bool as = alice_one_bit_helps_by_search(y);
    bool b = bob_one_bit_helps(y);
    bool bs = bob_one_bit_helps_by_search(y);
    r.passed = r.passed && a == as && b == bs;
    r.details.push_back({{"Y", name}, {"alice_helps", a}, {"alice_by_search", as},
                         {"bob_helps", b}, {"bob_by_search", bs}});
  }
  return r;
}

DemoReport covering_arrays(const DemoOptions &opts) {
  DemoReport r{"covering-arrays", "covering arrays of strength 2 and 3 with O(log n) columns", true, Json::array()};
  for (std::size_t strength : {2, 3}) {
    for (std::size_t q : {2, 3}) {
      std::vector<Vertex> alphabet(q);
      for (std::size_t i = 0; i < q; ++i) alphabet[i] = i;
      Json columns = Json::array();
      Json constants = Json::array();
      bool verified = true;
      for (std::size_t n = 4; n <= 20; ++n) {
        if (covering_requirements(n, strength, q) > 1'000'000) continue;
        auto ca = covering_array(n, strength, alphabet, opts.seed);
        verified = verified && verify_covering_array(ca) && ca.rows == n;
        columns.push_back(ca.cols);
        constants.push_back(static_cast<double>(ca.cols) / std::log2(static_cast<double>(n)));
      }
      r.passed = r.passed && verified;
      r.details.push_back({{"strength", strength}, {"alphabet", q}, {"verified", verified},
                           {"columns_n4_to_n20", columns}, {"columns_per_log2n", constants}});
    }
  }
  return r;
}

DemoReport clique_embeddings(const DemoOptions &opts) {
  DemoReport r{"clique-embeddings", "complete structures inside Alice powers", true, Json::array()};
  for (const auto &[name, y] : std::vector<std::pair<std::string, RelationalStructure>>{
           {"K2", clique(2)}, {"D2", directed_edge()}, {"NAE2", nae(2)}}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto e = clique_into_alice_power(y, n, opts.seed);
      bool ok = is_homomorphism(e.map, e.source, AlicePowerView(y, e.k));
      r.passed = r.passed && ok;
      r.details.push_back({{"construction", "covering"}, {"Y", name}, {"n", n}, {"k", e.k},
                           {"verified", ok}});
    }
  }
  const auto d2 = directed_edge();
  for (std::size_t m = 2; m <= 8; ++m) {
    auto e = clique_into_alice_power_digraph(d2, m);
    bool ok = e.k == balanced_tuple_length(m) && is_homomorphism(e.map, e.source, AlicePowerView(d2, e.k));
    r.passed = r.passed && ok;
    AlicePowerView view(d2, e.k);
    Json tuples = Json::array();
    for (Vertex v : e.map) tuples.push_back(view.decode(v));
    r.details.push_back({{"construction", "balanced"}, {"Y", "D2"}, {"m", m}, {"k", e.k},
                         {"tuples", tuples}, {"verified", ok}});
  }
  return r;
}

DemoReport central_vertex_demo(const DemoOptions &) {
  DemoReport r{"central-vertices", "complete structures in Bob powers exist iff a central vertex exists", true, Json::array()};
  auto fixtures = demo_catalog();
  fixtures.insert(fixtures.begin(), {"central-example", central_example()});
  fixtures.push_back({"C3", directed_cycle(3)});
  for (const auto &[name, y] : fixtures) {
    auto central = central_vertices(y);
    auto embedding = complete_into_bob_power(y, 2);
    auto complete = complete_structure(2, pattern_of(y));
    bool searched = false;
    for (std::size_t k = 1; k <= 2 && !searched; ++k) {
      searched = find_homomorphism(complete, bob_power(y, k)).has_value();
    }
    bool ok = embedding.has_value() == !central.empty() && searched == !central.empty();
    if (embedding) ok = ok && is_homomorphism(embedding->map, embedding->source, BobPowerView(y, embedding->k));
    r.passed = r.passed && ok;
    Json entry = {{"Y", name}, {"central", central}, {"embedding", embedding.has_value()},
                  {"search_k_le_2", searched}, {"agree", ok}};
    if (embedding) entry["map"] = embedding->map;
    r.details.push_back(std::move(entry));
  }
  return r;
}

DemoReport pvm_validation(const DemoOptions &opts) {
  DemoReport r{"pvm-validation", "projection-valued measurements from random eigenbases", true, {}};
  std::mt19937_64 rng(opts.seed);
  double worst = 0;
  std::size_t valid = 0;
  for (std::size_t trial = 0; trial < 100; ++trial) {
    std::size_t d = 1 + trial % 8;
    std::size_t outcomes = 1 + rng() % 4;
    auto diag = validate_pvm(random_pvm(d, outcomes, rng), opts.tol);
    valid += diag.valid;
    worst = std::max({worst, diag.idempotence, diag.self_adjointness, diag.completeness,
                      diag.orthogonality});
  }
  r.details = {{"trials", 100}, {"valid", valid}, {"largest_residual", worst}};
  r.passed = valid == 100 && worst <= 1e-9;
  return r;
}

DemoReport quantum_membership(const DemoOptions &opts) {
  DemoReport r{"quantum-membership", "relations of the quantised template on deterministic and mixed PVM tuples", true, Json::array()};
  std::mt19937_64 rng(opts.seed);
  double worst_marginal = 0;
  for (const auto &[name, y] : demo_catalog()) {
    for (std::size_t s = 0; s < y.signature().size(); ++s) {
      const auto &rel = y.relation(s);
      const std::size_t arity = y.signature()[s].arity;
      std::size_t accepted = 0, rejected = 0, on = 0, off = 0;
      std::size_t total = 1;
      for (std::size_t i = 0; i < arity; ++i) total *= y.size();
      for (std::size_t idx = 0; idx < total; ++idx) {
        Tuple t = outcome_tuple(idx, y.size(), arity);
        bool member = std::binary_search(rel.begin(), rel.end(), t);
        std::vector<PVM> pvms = deterministic_pvm_tuple(t, y.size(), 2);
        auto witness = quantum_relation_membership(pvms, rel, opts.tol);
        if (member) {
          ++on;
          accepted += witness.has_value();
          if (witness) worst_marginal = std::max(worst_marginal, marginal_residual(pvms, *witness));
        } else {
          ++off;
          rejected += !witness.has_value();
        }
      }
      // Mixed members: a shared random eigenbasis with a relation tuple per
      // basis vector.
      std::size_t mixed_accepted = 0;
      const std::size_t mixed_trials = rel.empty() ? 0 : 5;
      for (std::size_t trial = 0; trial < mixed_trials; ++trial) {
        const std::size_t d = 2 + trial % 3;
        CMatrix basis = random_unitary(d, rng);
        std::vector<Tuple> labels(d);
        for (auto &l : labels) l = rel[rng() % rel.size()];
        std::vector<PVM> pvms;
        for (std::size_t i = 0; i < arity; ++i) {
          std::vector<std::size_t> coord(d);
          for (std::size_t j = 0; j < d; ++j) coord[j] = labels[j][i];
          pvms.push_back(pvm_from_basis(basis, coord, y.size()));
        }
        auto witness = quantum_relation_membership(pvms, rel, opts.tol);
        if (witness) {
          ++mixed_accepted;
          worst_marginal = std::max(worst_marginal, marginal_residual(pvms, *witness));
        }
      }
      bool ok = accepted == on && rejected == off && mixed_accepted == mixed_trials;
      r.passed = r.passed && ok;
      r.details.push_back({{"Y", name}, {"symbol", y.signature()[s].name},
                           {"classical_members_accepted", std::to_string(accepted) + "/" + std::to_string(on)},
                           {"non_members_rejected", std::to_string(rejected) + "/" + std::to_string(off)},
                           {"mixed_members_accepted", std::to_string(mixed_accepted) + "/" + std::to_string(mixed_trials)}});
    }
  }
  r.passed = r.passed && worst_marginal <= 1e-8;
  r.details.push_back({{"largest_marginal_residual", worst_marginal}});
  return r;
}

DemoReport commuting_certificate(const DemoOptions &opts) {
  DemoReport r{"commuting-pvm-certificate", "two commuting PVMs with large overlaps on a basis coincide", false, {}};
  auto audit = audit_close_pvm_certificate(1, 6, 500, opts.seed, opts.tol);
  r.details = certificate_audit_to_json(audit);
  r.passed = audit.false_certificates == 0 && audit.missed_equal_pairs == 0;
  return r;
}

// Random X with a homomorphism h into y: tuples are sampled from the preimage
// of each relation.
std::pair<RelationalStructure, VertexMap> random_instance(const RelationalStructure &y, std::mt19937_64 &rng) {
  const std::size_t n = 2 + rng() % 3;
  VertexMap h(n);
  for (auto &v : h) v = rng() % y.size();
  std::vector<std::vector<Tuple>> rels(y.signature().size());
  for (std::size_t s = 0; s < y.signature().size(); ++s) {
    const std::size_t arity = y.signature()[s].arity;
    for (std::size_t attempt = 0; attempt < 12; ++attempt) {
      Tuple t(arity);
      for (auto &v : t) v = rng() % n;
      if (y.contains(s, map_tuple(h, t))) rels[s].push_back(std::move(t));
    }
  }
  return {RelationalStructure(y.signature(), n, std::move(rels)), std::move(h)};
}

// Index of a vertex of x occurring in some tuple, if any.
std::optional<Vertex> occurring_vertex(const RelationalStructure &x) {
  for (const auto &rel : x.relations()) {
    if (!rel.empty()) return rel.front().front();
  }
  return std::nullopt;
}

DemoReport quantum_verifier(const DemoOptions &opts) {
  DemoReport r{"quantum-verifier", "the quantum referee agrees with the classical one on deterministic strategies", true, {}};
  std::mt19937_64 rng(opts.seed);
  auto catalog = demo_catalog();
  std::size_t honest = 0, tampered = 0, agree = 0, reported = 0;
  while (honest < 25 || tampered < 25) {
    const auto &y = catalog[1 + rng() % (catalog.size() - 1)].second;
    auto [x, h] = random_instance(y, rng);
    auto vertex = occurring_vertex(x);
    const bool tamper = honest >= 25;
    if (tamper && !vertex) continue;
    const std::size_t d = 1 + rng() % 3;
    NoChannelStrategy classical = strategy_from_hom(h, x, y);
    QuantumStrategy quantum = quantum_strategy_from_hom(h, x, y, d);
    if (tamper) {
      Vertex v = *vertex;
      classical.bob[v] = (classical.bob[v] + 1) % y.size();
      auto &proj = quantum.bob[v].projectors;
      std::rotate(proj.rbegin(), proj.rbegin() + 1, proj.rend());
      ++tampered;
    } else {
      ++honest;
    }
    auto cv = verify_perfect(x, y, classical);
    auto qv = verify_perfect_quantum(x, y, quantum, opts.tol);
    bool same = cv.perfect == qv.perfect;
    if (same && !cv.perfect) {
      same = qv.counterexample && cv.counterexample->symbol == qv.counterexample->symbol &&
             cv.counterexample->tuple == qv.counterexample->tuple &&
             cv.counterexample->vertex == qv.counterexample->vertex &&
             cv.counterexample->reason == qv.counterexample->reason;
    }
    agree += same;
    if (tamper) reported += qv.counterexample.has_value();
  }
  r.details = {{"fixtures", honest + tampered}, {"tampered", tampered}, {"agreements", agree},
               {"tampered_with_counterexample", reported}};
  r.passed = agree == honest + tampered && reported == tampered;
  return r;
}

DemoReport adjacent_frames(const DemoOptions &opts) {
  DemoReport r{"adjacent-frames", "sampled adjacent frames and their witnesses", false, {}};
  std::mt19937_64 rng(opts.seed);
  std::size_t ok = 0;
  double worst = 0;
  for (std::size_t trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const std::size_t d = 1 + (trial / 3) % 3;
    auto f = sample_adjacent_frames(n, d, rng);
    auto adj = check_frame_adjacency(f.m, f.m_prime, f.witness, opts.tol);
    bool pass = is_frame(f.m, opts.tol) && is_frame(f.m_prime, opts.tol) &&
                is_frame(f.witness, opts.tol) && adj.adjacent;
    ok += pass;
    worst = std::max({worst, adj.outgoing, adj.incoming, adj.witness.off_diagonal,
                      adj.witness.trace_error});
  }
  r.details = {{"samples", 1000}, {"passed", ok}, {"largest_residual", worst}};
  r.passed = ok == 1000;
  return r;
}

DemoReport sphere_colorings(const DemoOptions &opts) {
  DemoReport r{"sphere-colorings", "orthogonal colorings of low-dimensional spheres", true, Json::array()};
  for (std::size_t dim = 2; dim <= 5; ++dim) {
    auto c = build_sphere_coloring(dim, opts.seed);
    std::mt19937_64 rng(opts.seed + dim);
    std::size_t violations = orthogonality_violations(c, 100'000, rng);
    bool ok = c.mode == ColoringMode::certified && violations == 0;
    r.passed = r.passed && ok;
    r.details.push_back({{"dimension", dim}, {"mode", to_string(c.mode)}, {"colors", c.centers.size()},
                         {"theta", c.theta}, {"slack", c.slack}, {"covering_angle", c.covering_angle},
                         {"orthogonal_pairs", 100'000}, {"violations", violations}});
  }
  return r;
}

DemoReport frame_coloring(const DemoOptions &opts) {
  DemoReport r{"frame-coloring", "rounding adjacent frames to distinct colors", false, {}};
  std::map<std::size_t, SphereColoring> colorings;
  std::mt19937_64 rng(opts.seed);
  std::size_t distinct = 0;
  Json modes = Json::object();
  for (std::size_t trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const std::size_t d = 1 + (trial / 3) % 3;
    auto it = colorings.find(2 * d);
    if (it == colorings.end()) {
      it = colorings.emplace(2 * d, build_sphere_coloring(2 * d, opts.seed)).first;
      modes[std::to_string(2 * d)] = to_string(it->second.mode);
    }
    auto f = sample_adjacent_frames(n, d, rng);
    auto a = color_frame(it->second, realify_frame(f.m, opts.tol), opts.tol);
    auto b = color_frame(it->second, realify_frame(f.m_prime, opts.tol), opts.tol);
    distinct += !(a == b);
  }
  r.details = {{"pairs", 200}, {"distinct", distinct}, {"coloring_modes", modes}};
  r.passed = distinct == 200;
  return r;
}

using DemoFn = std::function<DemoReport(const DemoOptions &)>;

const std::vector<std::pair<std::string, DemoFn>> &registry() {
  static const std::vector<std::pair<std::string, DemoFn>> demos = {
      {"clique-powers", clique_powers},
      {"edge-versus-directed-edge", edge_versus_digon},
      {"bob-advantage", bob_advantage},
      {"alice-channel-oracle", [](const DemoOptions &) { return channel_oracle("alice-channel-oracle", Channel::alice); }},
      {"bob-channel-oracle", [](const DemoOptions &) { return channel_oracle("bob-channel-oracle", Channel::bob); }},
      {"one-bit-predicates", one_bit_predicates},
      {"covering-arrays", covering_arrays},
      {"clique-embeddings", clique_embeddings},
      {"central-vertices", central_vertex_demo},
      {"pvm-validation", pvm_validation},
      {"quantum-membership", quantum_membership},
      {"commuting-pvm-certificate", commuting_certificate},
      {"quantum-verifier", quantum_verifier},
      {"adjacent-frames", adjacent_frames},
      {"sphere-colorings", sphere_colorings},
      {"frame-coloring", frame_coloring},
  };
  return demos;
}

}  // namespace

std::vector<std::string> demo_names() {
  std::vector<std::string> names;
  for (const auto &[name, fn] : registry()) names.push_back(name);
  return names;
}

DemoReport run_demo(const std::string &name, const DemoOptions &options) {
  for (const auto &[n, fn] : registry()) {
    if (n == name) return fn(options);
  }
  throw std::invalid_argument("unknown demo: " + name);
}

}  // namespace qcsp
