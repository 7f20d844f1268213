// SPDX-License-Identifier: Apache-2.0
//
// Run reports. Every report carries the same top-level keys in the same order so equal runs give equal bytes.
#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "fdim/harness.hpp"
#include "json.hpp"

namespace fdalg {

using Json = nlohmann::ordered_json;

struct RunSettings {
  std::string command;
  Scalar prime = PrimeField::kDefaultPrime;
  std::uint64_t seed = 0;
  std::size_t syzygy_cutoff = 64;
  std::optional<std::size_t> pd_cutoff;

  std::size_t effective_pd_cutoff() const { return pd_cutoff.value_or(syzygy_cutoff); }
};

/// 0 success, 1 hypothesis or probe failure, 2 input error, 3 indeterminate.
enum ExitCode : int { kExitOk = 0, kExitHypothesis = 1, kExitInput = 2, kExitIndeterminate = 3 };

inline int exit_code(CertificateVerdict v) {
  switch (v) {
    case CertificateVerdict::Certified:
    case CertificateVerdict::Conditional: return kExitOk;
    case CertificateVerdict::HypothesisFailed:
    case CertificateVerdict::ProbeFailure: return kExitHypothesis;
    case CertificateVerdict::Indeterminate: return kExitIndeterminate;
  }
  return kExitIndeterminate;
}

inline Json report_skeleton(const RunSettings& s) {
  Json j;
  j["command"] = s.command;
  j["prime"] = s.prime;
  j["seed"] = s.seed;
  j["cutoffs"] = Json{{"syzygy", s.syzygy_cutoff}, {"pd", s.effective_pd_cutoff()}};
  j["hypotheses"] = Json::array();
  j["witnesses"] = Json::array();
  j["bound"] = nullptr;
  j["psi_transcript"] = nullptr;
  j["probe_results"] = Json::array();
  j["registry_snapshot"] = Json::array();
  j["verdict"] = "";
  return j;
}

inline Json to_json(const PdVerdict& v) {
  Json j;
  j["kind"] = std::string(to_string(v.kind));
  if (v.finite()) j["value"] = v.value;
  if (v.unknown()) j["cutoff"] = v.value;
  if (v.infinite()) j["cycle"] = v.cycle;
  j["text"] = v.describe();
  return j;
}

inline Json to_json(const ClassVector& v) {
  Json j = Json::object();
  for (const auto& [id, c] : v) j["#" + std::to_string(id)] = c;
  return j;
}

inline Json to_json(const BigClassVector& v) {
  Json j = Json::object();
  for (const auto& [id, c] : v) j["#" + std::to_string(id)] = c.str();
  return j;
}

inline Json to_json(const PsiComputation& p) {
  Json j;
  j["input"] = to_json(p.input);
  j["reachable"] = p.reachable;
  j["stable_rank"] = p.stable_rank;
  j["phi"] = p.phi;
  j["psi"] = p.psi;
  Json levels = Json::array();
  for (const PsiLevel& l : p.levels)
    levels.push_back(Json{{"level", l.level}, {"classes", to_json(l.classes)}, {"distinct", l.distinct}, {"rank", l.rank}});
  j["levels"] = std::move(levels);
  Json ev = Json::array();
  for (const auto& [id, pd] : p.pd_evidence) ev.push_back(Json{{"class", id}, {"pd", to_json(pd)}});
  j["pd_evidence"] = std::move(ev);
  return j;
}

inline Json registry_json(const std::string& algebra, const IsoClassRegistry& reg) {
  Json classes = Json::array();
  for (const auto& e : reg.entries()) {
    Json c;
    c["id"] = e.id;
    c["dim"] = e.dim;
    c["layers"] = e.layers;
    c["dimvec"] = e.dimvec;
    c["projective"] = e.projective;
    c["omega"] = e.omega ? to_json(*e.omega) : Json(nullptr);
    classes.push_back(std::move(c));
  }
  return Json{{"algebra", algebra}, {"dim", reg.algebra().dim()}, {"classes", std::move(classes)}};
}

inline Json to_json(const Hypothesis& h) {
  return Json{{"name", h.name}, {"status", std::string(to_string(h.status))}, {"evidence", h.evidence}};
}

inline Json to_json(const SyzygyFinitenessWitness& w) {
  return Json{{"target", w.target},         {"algebra", w.algebra},
              {"level", w.level},           {"family_size", w.family.size()},
              {"classes", to_json(w.classes)}, {"completeness", std::string(to_string(w.completeness))},
              {"evidence", w.evidence}};
}

inline Json to_json(const ProbeResult& p) {
  Json checks = Json::array();
  for (const ProbeCheck& c : p.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"binding", c.binding}});
  return Json{{"name", p.name}, {"dim", p.dim}, {"pd", to_json(p.pd)}, {"within_bound", p.within_bound}, {"checks", std::move(checks)}};
}

/// Fills the standard keys from a certificate; the verdict key holds the certificate verdict.
inline void fill_certificate(Json& j, const BoundCertificate& c) {
  for (const Hypothesis& h : c.hypotheses) j["hypotheses"].push_back(to_json(h));
  for (const SyzygyFinitenessWitness& w : c.witnesses) j["witnesses"].push_back(to_json(w));
  if (c.bound)
    j["bound"] = Json{{"theorem", c.theorem}, {"value", *c.bound}, {"formula", c.formula}, {"n", c.level},
                      {"conditional", c.verdict != CertificateVerdict::Certified}, {"conditions", c.conditions}};
  else
    j["bound"] = nullptr;
  if (c.psi) {
    Json t = to_json(*c.psi);
    t["algebra"] = c.psi_algebra;
    j["psi_transcript"] = std::move(t);
  }
  for (const ProbeResult& p : c.probes) j["probe_results"].push_back(to_json(p));
  for (const NamedRegistry& r : c.registries) j["registry_snapshot"].push_back(registry_json(r.algebra, *r.registry));
  j["verdict"] = std::string(to_string(c.verdict));
  if (!c.failure.empty()) j["failure"] = c.failure;
}

/// JSON, or one line per key with nested values kept compact.
inline std::string render(const Json& j, std::string_view format) {
  if (format == "json") return j.dump(2) + "\n";
  std::ostringstream os;
  for (const auto& [key, value] : j.items()) {
    if (value.is_array() && !value.empty()) {
      os << key << ":\n";
      for (const auto& item : value) os << "  - " << item.dump() << "\n";
    } else if (value.is_string()) {
      os << key << ": " << value.get<std::string>() << "\n";
    } else {
      os << key << ": " << value.dump() << "\n";
    }
  }
  return os.str();
}

}  // namespace fdalg
