#include "qcsp/io.hpp"

#include <algorithm>
#include <complex>
#include <fstream>
#include <iostream>
#include <iterator>
#include <type_traits>

namespace qcsp {

namespace {

[[noreturn]] void fail(const std::string &where, const std::string &what) {
  throw InputError(where + ": " + what);
}

const Json &field(const Json &j, const char *key, const std::string &where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t to_count(const Json &j, const std::string &where) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) fail(where, "expected an integer");
  long long v = j.get<long long>();
  if (v < 0) fail(where, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

Tuple to_tuple(const Json &j, const std::string &where) {
  if (!j.is_array()) fail(where, "expected an array of vertices");
  Tuple t;
  t.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    t.push_back(to_count(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return t;
}

void check_vertices(const Tuple &t, std::size_t domain, const std::string &where) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= domain) {
      fail(where, "vertex " + std::to_string(t[i]) + " at position " + std::to_string(i) +
                      " is outside the domain of size " + std::to_string(domain));
    }
  }
}

// Position of a tuple in a sorted relation.
std::size_t tuple_position(const std::vector<Tuple> &relation, const Tuple &t,
                           const std::string &where) {
  auto it = std::lower_bound(relation.begin(), relation.end(), t);
  if (it == relation.end() || *it != t) fail(where, "tuple is not in the relation of X");
  return static_cast<std::size_t>(it - relation.begin());
}

std::complex<double> to_complex(const Json &j, const std::string &where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(where, "expected a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json read_json(const std::string &source) {
  std::string text;
  std::string origin = source;
  auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
    text = source;
    origin = "<inline>";
  } else if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    origin = "<stdin>";
  } else {
    std::ifstream in(source);
    if (!in) throw InputError(source + ": cannot open file");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": JSON parse error");
  }
}

Json structure_to_json(const RelationalStructure &s) {
  Json sig = Json::array();
  Json rels = Json::object();
  for (std::size_t i = 0; i < s.signature().size(); ++i) {
    const Symbol &sym = s.signature()[i];
    sig.push_back({{"name", sym.name}, {"arity", sym.arity}});
    Json tuples = Json::array();
    for (const Tuple &t : s.relation(i)) tuples.push_back(t);
    rels[sym.name] = std::move(tuples);
  }
  return {{"signature", sig}, {"domain", s.size()}, {"relations", rels}};
}

RelationalStructure structure_from_json(const Json &j) {
  const Json &sig = field(j, "signature", "structure");
  if (!sig.is_array()) fail("signature", "expected an array");
  std::vector<Symbol> symbols;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    std::string where = "signature[" + std::to_string(i) + "]";
    const Json &name = field(sig[i], "name", where);
    if (!name.is_string()) fail(where + ".name", "expected a string");
    symbols.push_back({name.get<std::string>(), to_count(field(sig[i], "arity", where), where + ".arity")});
    for (std::size_t p = 0; p < i; ++p) {
      if (symbols[p].name == symbols[i].name) fail(where, "duplicate symbol " + symbols[i].name);
    }
  }
  std::size_t domain = to_count(field(j, "domain", "structure"), "domain");
  const Json &rels = field(j, "relations", "structure");
  if (!rels.is_object()) fail("relations", "expected an object");
  for (auto it = rels.begin(); it != rels.end(); ++it) {
    bool known = std::any_of(symbols.begin(), symbols.end(),
                             [&](const Symbol &s) { return s.name == it.key(); });
    if (!known) fail("relations." + it.key(), "symbol not in the signature");
  }
  std::vector<std::vector<Tuple>> relations(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    auto it = rels.find(symbols[i].name);
    if (it == rels.end()) continue;
    std::string where = "relations." + symbols[i].name;
    if (!it->is_array()) fail(where, "expected an array of tuples");
    for (std::size_t t = 0; t < it->size(); ++t) {
      std::string at = where + "[" + std::to_string(t) + "]";
      Tuple tuple = to_tuple((*it)[t], at);
      if (tuple.size() != symbols[i].arity) {
        fail(at, "tuple has length " + std::to_string(tuple.size()) + ", arity is " +
                     std::to_string(symbols[i].arity));
      }
      check_vertices(tuple, domain, at);
      relations[i].push_back(std::move(tuple));
    }
  }
  return RelationalStructure(Signature(std::move(symbols)), domain, std::move(relations));
}

RelationalStructure load_structure(const std::string &source) {
  return structure_from_json(read_json(source));
}

Json vertex_map_to_json(const VertexMap &f) { return Json(f); }

VertexMap vertex_map_from_json(const Json &j) {
  const Json &arr = j.is_object() ? field(j, "map", "vertex map") : j;
  return to_tuple(arr, "map");
}

Json pattern_to_json(const SigmaPattern &p) {
  Json out = Json::object();
  for (std::size_t s = 0; s < p.signature.size(); ++s) {
    Json parts = Json::array();
    for (const Partition &pi : p.by_symbol[s]) parts.push_back(pi.blocks());
    out[p.signature[s].name] = std::move(parts);
  }
  return out;
}

Json strategy_to_json(const Strategy &s, const RelationalStructure &x) {
  const Signature &sig = x.signature();
  Json out = {{"variant", to_string(channel_of(s))}, {"k", message_count(s)}};
  Json answers = Json::object();
  Json bob = Json::array();
  std::visit(
      [&](const auto &st) {
        using T = std::decay_t<decltype(st)>;
        for (std::size_t r = 0; r < sig.size(); ++r) {
          Json entries = Json::array();
          const auto &rel = x.relation(r);
          for (std::size_t i = 0; i < rel.size(); ++i) {
            if constexpr (std::is_same_v<T, NoChannelStrategy>) {
              entries.push_back({rel[i], st.answers[r][i]});
            } else if constexpr (std::is_same_v<T, AliceChannelStrategy>) {
              entries.push_back({rel[i], st.answers[r][i], st.messages[r][i]});
            } else {
              for (std::size_t m = 0; m < st.k; ++m) {
                entries.push_back({rel[i], st.answer(r, i, m), m});
              }
            }
          }
          answers[sig[r].name] = std::move(entries);
        }
        for (Vertex v = 0; v < x.size(); ++v) {
          if constexpr (std::is_same_v<T, NoChannelStrategy>) {
            bob.push_back({v, st.bob[v]});
          } else if constexpr (std::is_same_v<T, AliceChannelStrategy>) {
            for (std::size_t m = 0; m < st.k; ++m) bob.push_back({v, m, st.reply(v, m)});
          } else {
            bob.push_back({v, st.messages[v], st.bob[v]});
          }
        }
      },
      s);
  out["answers"] = std::move(answers);
  out["bob"] = std::move(bob);
  return out;
}

Strategy strategy_from_json(const Json &j, const RelationalStructure &x,
                            const RelationalStructure &y) {
  const Json &variant = field(j, "variant", "strategy");
  if (!variant.is_string()) fail("variant", "expected a string");
  Channel channel;
  try {
    channel = channel_from_string(variant.get<std::string>());
  } catch (const std::invalid_argument &) {
    fail("variant", "expected \"none\", \"alice\" or \"bob\"");
  }
  std::size_t k = 1;
  if (j.contains("k")) k = to_count(j["k"], "k");
  if (k == 0) fail("k", "message count must be positive");
  if (channel == Channel::none && k != 1) fail("k", "the none variant has k = 1");

  const Signature &sig = x.signature();
  const Json &answers = field(j, "answers", "strategy");
  if (!answers.is_object()) fail("answers", "expected an object");
  const std::size_t entry_len = channel == Channel::none ? 2 : 3;
  const std::size_t per_tuple = channel == Channel::bob ? k : 1;

  std::vector<std::vector<Tuple>> table(sig.size());
  std::vector<std::vector<std::size_t>> messages(sig.size());
  for (std::size_t r = 0; r < sig.size(); ++r) {
    const auto &rel = x.relation(r);
    table[r].assign(rel.size() * per_tuple, Tuple());
    messages[r].assign(rel.size(), 0);
    std::vector<bool> seen(rel.size() * per_tuple, false);
    std::string where = "answers." + sig[r].name;
    auto it = answers.find(sig[r].name);
    if (it == answers.end()) {
      if (rel.empty()) continue;
      fail(where, "missing");
    }
    if (!it->is_array()) fail(where, "expected an array");
    for (std::size_t e = 0; e < it->size(); ++e) {
      std::string at = where + "[" + std::to_string(e) + "]";
      const Json &entry = (*it)[e];
      if (!entry.is_array() || entry.size() != entry_len) {
        fail(at, "expected an array of " + std::to_string(entry_len) + " entries");
      }
      Tuple question = to_tuple(entry[0], at + "[0]");
      std::size_t pos = tuple_position(rel, question, at + "[0]");
      Tuple answer = to_tuple(entry[1], at + "[1]");
      if (answer.size() != sig[r].arity) fail(at + "[1]", "answer has the wrong arity");
      check_vertices(answer, y.size(), at + "[1]");
      std::size_t msg = entry_len == 3 ? to_count(entry[2], at + "[2]") : 0;
      if (msg >= k) fail(at + "[2]", "message out of range");
      std::size_t slot = channel == Channel::bob ? pos * k + msg : pos;
      if (seen[slot]) fail(at, "duplicate entry");
      seen[slot] = true;
      table[r][slot] = std::move(answer);
      if (channel == Channel::alice) messages[r][pos] = msg;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      fail(where, "table is not total");
    }
  }

  const Json &bob = field(j, "bob", "strategy");
  if (!bob.is_array()) fail("bob", "expected an array");
  const std::size_t bob_slots = channel == Channel::alice ? x.size() * k : x.size();
  std::vector<Vertex> replies(bob_slots, 0);
  std::vector<std::size_t> sent(x.size(), 0);
  std::vector<bool> seen(bob_slots, false);
  for (std::size_t e = 0; e < bob.size(); ++e) {
    std::string at = "bob[" + std::to_string(e) + "]";
    Tuple entry = to_tuple(bob[e], at);
    if (entry.size() != entry_len) fail(at, "expected " + std::to_string(entry_len) + " entries");
    Vertex v = entry[0];
    if (v >= x.size()) fail(at, "question vertex outside X");
    Vertex reply = entry.back();
    if (reply >= y.size()) fail(at, "reply outside Y");
    std::size_t msg = entry_len == 3 ? entry[1] : 0;
    if (msg >= k) fail(at, "message out of range");
    std::size_t slot = channel == Channel::alice ? v * k + msg : v;
    if (seen[slot]) fail(at, "duplicate entry");
    seen[slot] = true;
    replies[slot] = reply;
    sent[v] = msg;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) fail("bob", "table is not total");

  switch (channel) {
    case Channel::none:
      return NoChannelStrategy{std::move(table), std::move(replies)};
    case Channel::alice:
      return AliceChannelStrategy{k, std::move(table), std::move(messages), std::move(replies)};
    case Channel::bob:
      break;
  }
  return BobChannelStrategy{k, std::move(replies), std::move(sent), std::move(table)};
}

Json counterexample_to_json(const Counterexample &c, const RelationalStructure &x) {
  return {{"symbol", x.signature()[c.symbol].name},
          {"tuple", c.tuple},
          {"vertex", c.vertex},
          {"reason", to_string(c.reason)},
          {"answer", c.answer},
          {"reply", c.reply}};
}

Json matrix_to_json(const CMatrix &m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix cmatrix_from_json(const Json &j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) fail("matrix", "expected an array of rows");
  const std::size_t cols = j[0].size();
  CMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      fail("matrix row " + std::to_string(i), "rows must have equal length");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(i, c) = to_complex(j[i][c], "matrix[" + std::to_string(i) + "][" + std::to_string(c) + "]");
    }
  }
  return m;
}

Json matrix_to_json(const RMatrix &m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const CVector &v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

CVector cvector_from_json(const Json &j) {
  if (!j.is_array()) fail("vector", "expected an array");
  CVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = to_complex(j[i], "vector[" + std::to_string(i) + "]");
  return v;
}

Json pvm_to_json(const PVM &p) {
  Json list = Json::array();
  for (const CMatrix &e : p.projectors) list.push_back(matrix_to_json(e));
  return {{"projectors", list}};
}

PVM pvm_from_json(const Json &j) {
  const Json &list = j.is_array() ? j : field(j, "projectors", "pvm");
  if (!list.is_array() || list.empty()) fail("pvm", "expected a nonempty list of projectors");
  PVM p;
  for (const Json &m : list) p.projectors.push_back(cmatrix_from_json(m));
  return p;
}

Json quantum_strategy_to_json(const QuantumStrategy &s, const RelationalStructure &x) {
  Json alice = Json::object();
  for (std::size_t r = 0; r < x.signature().size(); ++r) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < x.relation(r).size(); ++i) {
      entries.push_back({x.relation(r)[i], pvm_to_json(s.alice[r][i])});
    }
    alice[x.signature()[r].name] = std::move(entries);
  }
  Json bob = Json::array();
  for (const PVM &p : s.bob) bob.push_back(pvm_to_json(p));
  return {{"dimension", s.dimension}, {"state", vector_to_json(s.state)}, {"alice", alice}, {"bob", bob}};
}

QuantumStrategy quantum_strategy_from_json(const Json &j, const RelationalStructure &x) {
  QuantumStrategy s;
  s.dimension = to_count(field(j, "dimension", "strategy"), "dimension");
  s.state = cvector_from_json(field(j, "state", "strategy"));
  const Json &alice = field(j, "alice", "strategy");
  s.alice.resize(x.signature().size());
  for (std::size_t r = 0; r < x.signature().size(); ++r) {
    const auto &rel = x.relation(r);
    s.alice[r].assign(rel.size(), PVM{});
    std::vector<bool> seen(rel.size(), false);
    std::string where = "alice." + x.signature()[r].name;
    auto it = alice.find(x.signature()[r].name);
    if (it == alice.end()) {
      if (rel.empty()) continue;
      fail(where, "missing");
    }
    for (std::size_t e = 0; e < it->size(); ++e) {
      std::string at = where + "[" + std::to_string(e) + "]";
      const Json &entry = (*it)[e];
      if (!entry.is_array() || entry.size() != 2) fail(at, "expected [tuple, pvm]");
      std::size_t pos = tuple_position(rel, to_tuple(entry[0], at + "[0]"), at + "[0]");
      if (seen[pos]) fail(at, "duplicate entry");
      seen[pos] = true;
      s.alice[r][pos] = pvm_from_json(entry[1]);
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) fail(where, "table is not total");
  }
  const Json &bob = field(j, "bob", "strategy");
  if (!bob.is_array() || bob.size() != x.size()) fail("bob", "expected one PVM per vertex of X");
  for (const Json &p : bob) s.bob.push_back(pvm_from_json(p));
  return s;
}

Json coloring_to_json(const SphereColoring &c) {
  Json centers = Json::array();
  for (const RVector &v : c.centers) centers.push_back(std::vector<double>(v.data(), v.data() + v.size()));
  return {{"dimension", c.dimension},   {"theta", c.theta},
          {"mode", to_string(c.mode)},   {"slack", c.slack},
          {"checked_points", c.checked_points}, {"covering_angle", c.covering_angle},
          {"centers", centers}};
}

SphereColoring coloring_from_json(const Json &j) {
  SphereColoring c;
  c.dimension = to_count(field(j, "dimension", "coloring"), "dimension");
  c.theta = field(j, "theta", "coloring").get<double>();
  std::string mode = field(j, "mode", "coloring").get<std::string>();
  if (mode == "certified") {
    c.mode = ColoringMode::certified;
  } else if (mode == "statistical") {
    c.mode = ColoringMode::statistical;
  } else {
    fail("mode", "expected \"certified\" or \"statistical\"");
  }
  c.slack = j.value("slack", 0.0);
  c.checked_points = j.value("checked_points", std::size_t{0});
  c.covering_angle = j.value("covering_angle", 0.0);
  const Json &centers = field(j, "centers", "coloring");
  for (std::size_t i = 0; i < centers.size(); ++i) {
    const Json &row = centers[i];
    if (!row.is_array() || row.size() != c.dimension) {
      fail("centers[" + std::to_string(i) + "]", "expected a vector of length " + std::to_string(c.dimension));
    }
    RVector v(c.dimension);
    for (std::size_t k = 0; k < c.dimension; ++k) v(k) = row[k].get<double>();
    c.centers.push_back(std::move(v));
  }
  return c;
}

}  // namespace qcsp
