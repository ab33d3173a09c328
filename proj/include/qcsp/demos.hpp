#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcsp/io.hpp"

namespace qcsp {

struct DemoOptions {
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
};

struct DemoReport {
  std::string name;
  /// The construction or statement being reproduced.
  std::string topic;
  bool passed = false;
  /// Computed witnesses and counts.
  Json details;
};

/// Registered fixture names, in the order `demo --all` runs them.
std::vector<std::string> demo_names();

/// Throws std::invalid_argument for an unknown name.
DemoReport run_demo(const std::string &name, const DemoOptions &options = {});

Json report_to_json(const DemoReport &r);

/// Every structure with at most `max_vertices` vertices (at least one) and at
/// most `max_edges` tuples of a single binary relation "E".
std::vector<RelationalStructure> small_digraphs(std::size_t max_vertices, std::size_t max_edges);

/// loop, D2, K2, K3, NAE2, RB3, 1-in-3.
std::vector<std::pair<std::string, RelationalStructure>> demo_catalog();

struct CertificateAudit {
  std::size_t trials = 0;
  std::size_t equal_pairs = 0;
  std::size_t labelings = 0;
  std::size_t false_certificates = 0;
  std::size_t missed_equal_pairs = 0;
};

/// Random commuting PVM pairs on a shared eigenbasis, equal in about half the
/// trials. For each pair every labelling of a slightly rotated eigenbasis is
/// tried; the audit counts certificates issued for unequal pairs and equal
/// pairs no labelling certifies. Dimensions cycle through the given range.
CertificateAudit audit_close_pvm_certificate(std::size_t min_dimension, std::size_t max_dimension,
                                             std::size_t trials, std::uint64_t seed,
                                             double tol = kDefaultTol);
Json certificate_audit_to_json(const CertificateAudit &a);

/// The four-ary structure pair on which a Bob channel beats an Alice channel
/// of any size up to three.
RelationalStructure bob_advantage_instance();
RelationalStructure bob_advantage_template();

/// Seven-vertex four-ary structure whose vertex 1 is central without lying in
/// a tuple of the coarsest pattern. Vertex 0 is isolated.
RelationalStructure central_example();

}  // namespace qcsp
