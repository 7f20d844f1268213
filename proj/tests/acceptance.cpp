// SPDX-License-Identifier: Apache-2.0
//
// Acceptance run: one line per criterion, nonzero exit when any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "fdim/fdim.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fdalg;
using fdalg::testing::load_data;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

using Probes = std::vector<std::pair<std::string, Module>>;

Algebra rad_square_zero(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t v = 1 + rng() % 3, arrows = 1 + rng() % 4;
  return generate_random_instance(InstanceKind::RadSquareZero, {v, arrows, 1}, rng()).algebra;
}

Outcome criterion_example1() {
  const Example1Report r = example1_scenario();
  const bool ok = r.dim_a == 20 && r.a_nakayama && r.indecomposables_a == 20 && r.rad_c_left_ideal_of_b &&
                  r.rad_b_left_ideal_of_a && r.rad3_nonzero && r.certificate.bound.has_value() &&
                  lint_certificate(r.certificate).empty();
  return {ok, "dim A = " + std::to_string(r.dim_a) + ", indecomposables " + std::to_string(r.indecomposables_a) +
                  ", rad3_nonzero " + (r.rad3_nonzero ? "true" : "false") + ", bound " +
                  (r.certificate.bound ? std::to_string(*r.certificate.bound) : "none") + " (" +
                  std::string(to_string(r.certificate.verdict)) + ")"};
}

Outcome criterion_sequence_bounds() {
  std::vector<Algebra> algebras{load_data("loop.fdq").algebra("L").algebra, load_data("a2.fdq").algebra("A2").algebra};
  for (std::uint64_t s = 0; s < 20; ++s) algebras.push_back(rad_square_zero(1000 + s));
  algebras.push_back(load_data("example1.fdq").algebra("A").algebra);
  std::size_t sequences = 0, violations = 0, vacuous = 0, indeterminate = 0;
  for (std::size_t k = 0; k < algebras.size(); ++k) {
    IsoClassRegistry reg(algebras[k]);
    std::mt19937_64 rng(77 + k);
    for (int t = 0; t < 9; ++t) {
      const ShortExactSequence s = random_ses(algebras[k], 6, rng);
      try {
        const SequenceBoundReport r = check_sequence_bounds(s, reg);
        ++sequences;
        for (const auto& c : r.clauses) {
          violations += c.status == ClauseStatus::Violated;
          vacuous += c.status == ClauseStatus::Vacuous;
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::PsiIndeterminate) throw;
        ++indeterminate;
      }
    }
  }
  return {sequences >= 200 && violations == 0,
          std::to_string(sequences) + " sequences over " + std::to_string(algebras.size()) + " algebras, " +
              std::to_string(violations) + " violations, " + std::to_string(vacuous) + " vacuous clauses, " +
              std::to_string(indeterminate) + " indeterminate"};
}

Outcome criterion_schanuel() {
  std::size_t pairs = 0, agree = 0;
  // ordinary: minimal against padded by an indecomposable projective
  std::vector<Algebra> algebras{load_data("loop.fdq").algebra("L").algebra, load_data("a2.fdq").algebra("A2").algebra,
                                load_data("example1.fdq").algebra("C").algebra};
  std::mt19937_64 rng(3);
  for (std::size_t k = 0; pairs < 25; ++k) {
    const Algebra& a = algebras[k % algebras.size()];
    const Module x = random_module(a, 5, rng);
    const std::size_t n = 1 + k % 3, step = k % n;
    const ProjectiveData& pd = projective_data(a);
    const Module pad = pd.projectives[k % pd.classes()];
    const Resolution p = minimal_resolution(x, n);
    const Resolution q = build_resolution(x, n, minimal_cover_step, std::make_pair(step, pad));
    ++pairs;
    agree += schanuel_check(p, q, k);
  }
  // relative: standard against padded by an induced module
  Workspace ws = load_data("example1.fdq");
  const Extension cb = Extension::create(ws.extension("ιCB").map, "ιCB");
  const Workspace a2 = load_data("a2.fdq");
  const Extension u = Extension::unit(a2.algebra("A2").algebra);
  const Workspace loop = load_data("loop.fdq");
  const Extension id = Extension::identity(loop.algebra("L").algebra);
  const std::vector<const Extension*> exts{&u, &id, &cb};
  for (std::size_t k = 0; pairs < 50; ++k) {
    const Extension& e = *exts[k % exts.size()];
    const Module x = random_module(e.target(), e.target().dim() > 10 ? 3 : 4, rng);
    const std::size_t n = 1 + k % 3, step = k % n;
    const Module pad = induce(e, projective_data(e.source()).simples[k % projective_data(e.source()).classes()]).module;
    ++pairs;
    agree += check_schanuel_relative(e, x, n, step, pad, k);
  }
  return {agree == pairs && pairs == 50, std::to_string(agree) + "/" + std::to_string(pairs) + " pairs isomorphic"};
}

Outcome criterion_radical() {
  const PrimeField f5(5);
  std::size_t equal = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Algebra a = random_small_algebra(f5, 4, 5000 + seed);
    equal += radical(a).space() == fdalg::testing::quasi_regular_radical(a);
  }
  return {equal == 100, std::to_string(equal) + "/100 algebras agree with the quasi-regularity radical"};
}

Outcome criterion_krull_schmidt() {
  std::vector<Algebra> algebras{load_data("example1.fdq").algebra("A").algebra, load_data("example1.fdq").algebra("C").algebra,
                                load_data("kronecker.fdq").algebra("K").algebra, load_data("loop.fdq").algebra("L").algebra,
                                rad_square_zero(42)};
  std::size_t stable = 0, reassembled = 0;
  std::mt19937_64 rng(11);
  for (std::size_t k = 0; k < 50; ++k) {
    const Algebra& a = algebras[k % algebras.size()];
    const Module m = random_module(a, 8, rng);
    IsoClassRegistry reg(a);
    const ClassVector v0 = reg.full_vector(m, 0);
    bool same = true;
    for (std::uint64_t s = 1; s < 5; ++s) same = same && reg.full_vector(m, s) == v0;
    stable += same;
    reassembled += are_isomorphic(reg.realize(v0), m, k);
  }
  return {stable == 50 && reassembled == 50,
          std::to_string(stable) + "/50 stable across 5 seeds, " + std::to_string(reassembled) + "/50 reassembled"};
}

Outcome criterion_infinite_pd() {
  Workspace loop = load_data("loop.fdq");
  const Module& s = loop.module("S").module;
  IsoClassRegistry rl(loop.algebra("L").algebra);
  const PdVerdict pd = proj_dim(s, rl);
  const bool cycle = pd.infinite() && pd.cycle.size() == 1 && are_isomorphic(syzygy(s).module, s);
  const std::size_t psi_s = psi(s, rl).psi;
  Workspace a2 = load_data("a2.fdq");
  const Module& s2 = a2.module("S2").module;
  IsoClassRegistry ra(a2.algebra("A2").algebra);
  const PdVerdict pd2 = proj_dim(s2, ra);
  const std::size_t psi2 = psi(s2, ra).psi;
  const bool ok = cycle && psi_s == 0 && pd2.finite() && pd2.value == 1 && psi2 == 1;
  return {ok, "loop simple " + pd.describe() + " with Ω(S) ≅ S, Ψ = " + std::to_string(psi_s) + "; A2 simple pd " +
                  pd2.describe() + ", Ψ = " + std::to_string(psi2)};
}

Outcome criterion_coherence() {
  std::vector<Algebra> algebras{load_data("loop.fdq").algebra("L").algebra, load_data("a2.fdq").algebra("A2").algebra,
                                load_data("example1.fdq").algebra("C").algebra, rad_square_zero(7), rad_square_zero(8)};
  std::size_t probes = 0, unit_ok = 0, identity_ok = 0;
  std::mt19937_64 rng(21);
  for (const Algebra& a : algebras) {
    const Extension u = Extension::unit(a), id = Extension::identity(a);
    IsoClassRegistry reg(a);
    Probes ms = standard_probes(a, 4, 5, rng());
    for (const auto& [name, m] : ms) {
      ++probes;
      const PdVerdict pd = proj_dim(m, reg);
      const PdVerdict rpd = rel_proj_dim(u, m);
      const bool proj = is_rel_projective(u, m) == (pd.finite() && pd.value == 0);
      const bool same = pd.kind == rpd.kind && (!pd.finite() || pd.value == rpd.value);
      unit_ok += proj && same;
      const PdVerdict ri = rel_proj_dim(id, m);
      identity_ok += ri.finite() && ri.value == 0;
    }
  }
  return {probes >= 30 && unit_ok == probes && identity_ok == probes,
          std::to_string(unit_ok) + "/" + std::to_string(probes) + " unit-extension probes coherent, " +
              std::to_string(identity_ok) + "/" + std::to_string(probes) + " identity probes with rpd 0"};
}

Outcome criterion_adjunction() {
  Workspace ws = load_data("example1.fdq");
  const std::vector<Extension> exts{Extension::create(ws.extension("ιCB").map, "ιCB"),
                                    Extension::create(ws.extension("ιBA").map, "ιBA"),
                                    Extension::create(ws.extension("ιCA").map, "ιCA")};
  std::size_t equal = 0;
  std::mt19937_64 rng(8);
  for (std::size_t k = 0; k < 50; ++k) {
    const Extension& e = exts[k % exts.size()];
    const Module x = random_module(e.source(), 5, rng);
    const Module y = random_module(e.target(), 6, rng);
    equal += hom_dim(induce(e, x).module, y) == hom_dim(x, restrict(e, y));
  }
  return {equal == 50, std::to_string(equal) + "/50 triples with equal hom dimensions"};
}

Outcome criterion_rad_square_zero_bound() {
  std::size_t hypotheses_ok = 0, probes = 0, finite = 0, within = 0, clean = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Algebra a = rad_square_zero(3000 + s);
    const Subspace rad = radical(a).space();
    const Probes ps = standard_probes(a, 10, 6, s);
    Probes chosen;
    for (const auto& p : ps)
      if (p.first[0] != 'P') chosen.push_back(p);  // simples and random modules
    const BoundCertificate c = pipeline_corollaries4(a, Corollary::C42, rad, rad, 0, chosen);
    bool all_pass = true;
    for (const Hypothesis& h : c.hypotheses) all_pass = all_pass && h.status == HypothesisStatus::Pass;
    hypotheses_ok += all_pass;
    clean += lint_certificate(c).empty() && c.bound.has_value();
    for (const ProbeResult& p : c.probes) {
      ++probes;
      if (!p.pd.finite()) continue;
      ++finite;
      within += c.bound && p.pd.value <= *c.bound;
    }
  }
  return {hypotheses_ok == 20 && clean == 20 && within == finite,
          std::to_string(hypotheses_ok) + "/20 algebras pass all hypotheses, " + std::to_string(within) + "/" +
              std::to_string(finite) + " finite-pd probes within the bound (" + std::to_string(probes) + " probes)"};
}

Outcome criterion_negative_controls() {
  Workspace broken = load_data("broken_chain.fdq");
  const BoundCertificate chain = pipeline_prop1(ChainSpec::from_workspace(broken, {"D", "Q"}), Prop1Variant::Omega1, {});
  Json jc = report_skeleton({"theorem prop1"});
  fill_certificate(jc, chain);
  const bool names_link = chain.failure.find("rad(D) left ideal of Q") != std::string::npos;

  Workspace a2 = load_data("a2.fdq");
  const Algebra& a = a2.algebra("A2").algebra;
  const Subspace whole = Subspace::full(a.field(), a.dim());
  const BoundCertificate t2 = pipeline_thm2(a, whole, whole, whole, {{"S1", a2.module("S1").module}});
  Json jt = report_skeleton({"theorem thm2"});
  fill_certificate(jt, t2);
  const bool ok = exit_code(chain.verdict) == kExitHypothesis && names_link && jc["bound"].is_null() &&
                  exit_code(t2.verdict) == kExitHypothesis && jt["bound"].is_null();
  return {ok, "broken chain exit " + std::to_string(exit_code(chain.verdict)) + " (" + chain.failure + "), IJK ≠ 0 exit " +
                  std::to_string(exit_code(t2.verdict)) + ", bounds absent: " +
                  (jc["bound"].is_null() && jt["bound"].is_null() ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"example scenario end-to-end", criterion_example1},
      {"pd/Psi inequalities on random short exact sequences", criterion_sequence_bounds},
      {"generalized Schanuel, ordinary and relative", criterion_schanuel},
      {"radical against the quasi-regularity oracle", criterion_radical},
      {"Krull-Schmidt determinism", criterion_krull_schmidt},
      {"infinite-pd detection and Psi", criterion_infinite_pd},
      {"relative/absolute coherence", criterion_coherence},
      {"induction-restriction adjunction", criterion_adjunction},
      {"radical-square-zero ideal-triple bounds", criterion_rad_square_zero_bound},
      {"negative controls", criterion_negative_controls},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.passed;
    char time[32];
    std::snprintf(time, sizeof time, "%.1f s", secs);
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << (k + 1) << ": " << criteria[k].first << " | " << o.detail
              << " | " << time << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
