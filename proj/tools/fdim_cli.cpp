// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Exit codes: 0 success, 1 hypothesis or probe failure, 2 input error, 3 cutoff.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fdim/fdim.hpp"

using namespace fdalg;

namespace {

using Probes = std::vector<std::pair<std::string, Module>>;

struct Options {
  RunSettings run;
  std::string format = "json";
  std::string out;
  std::string file;
  std::string algebra, module, extension;
  std::vector<std::string> probe_modules;
  std::size_t random_probes = 4, probe_dim = 6;
  // module syzygy
  std::size_t steps = 3;
  // theorem options
  std::string ideal_i = "rad", ideal_j = "rad", ideal_k = "rad";
  std::string corollary = "4.2";
  unsigned power = 1;
  int part = 1;
  std::size_t declared_n = 2;
  std::vector<std::string> chain;
  std::string variant = "omega2";
  std::size_t witness_level = 0;
  // fuzz
  std::size_t count = 20;
  std::string kind = "rad-square-zero";
  std::size_t vertices = 3, arrows = 4, chain_length = 2;
};

/// Raised for malformed command input; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Workspace load(const Options& o) {
  if (o.file.empty()) throw InputError("a workspace file is required");
  return load_workspace(read_file(o.file), o.run.prime);
}

const AlgebraEntry& pick_algebra(const Workspace& ws, const std::string& name) {
  if (!name.empty()) return ws.algebra(name);
  for (const AlgebraEntry& a : ws.algebras())
    if (a.root) return a;
  throw InputError("the workspace declares no algebra");
}

/// "rad", "rad^n", "0", "A", or comma-separated generators of a two-sided ideal.
Subspace ideal_of(const Workspace& ws, const AlgebraEntry& a, const std::string& text) {
  const Algebra& alg = a.algebra;
  if (text == "0") return Subspace(alg.field(), alg.dim());
  if (text == "A") return Subspace::full(alg.field(), alg.dim());
  if (text == "rad") return radical(alg).space();
  if (text.rfind("rad^", 0) == 0) {
    const unsigned n = static_cast<unsigned>(std::stoul(text.substr(4)));
    if (n == 0) return Subspace::full(alg.field(), alg.dim());
    return ideal_power(radical(alg), n).space();
  }
  std::vector<Vec> gens;
  for (const Expr& e : parse_expression_list(text)) gens.push_back(ws.evaluate(a.name, e));
  return ideal_generated(alg, gens).space();
}

Probes probes_for(const Workspace& ws, const Algebra& a, const Options& o) {
  Probes out = standard_probes(a, o.random_probes, o.probe_dim, o.run.seed);
  for (const std::string& name : o.probe_modules) {
    const ModuleEntry& m = ws.module(name);
    if (m.module.algebra() != a) throw InputError("probe module " + name + " lives over " + m.algebra);
    out.emplace_back(name, m.module);
  }
  return out;
}

int emit(const Json& j, const Options& o, int code) {
  const std::string text = render(j, o.format);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << o.out << "\n";
      return kExitInput;
    }
    f << text;
  }
  return code;
}

int emit_certificate(const BoundCertificate& c, const Options& o) {
  Json j = report_skeleton(o.run);
  fill_certificate(j, c);
  return emit(j, o, exit_code(c.verdict));
}

int cmd_parse(const Options& o) {
  const Workspace ws = load(o);
  Json j = report_skeleton(o.run);
  Json w;
  Json algs = Json::array();
  for (const AlgebraEntry& a : ws.algebras())
    algs.push_back(Json{{"name", a.name}, {"dim", a.algebra.dim()}, {"root", a.root_name}, {"parent", a.parent ? *a.parent : ""}});
  Json mods = Json::array();
  for (const ModuleEntry& m : ws.modules()) mods.push_back(Json{{"name", m.name}, {"algebra", m.algebra}, {"dim", m.module.dim()}});
  Json exts = Json::array();
  for (const ExtensionEntry& e : ws.extensions())
    exts.push_back(Json{{"name", e.name}, {"source", e.source}, {"target", e.target}, {"check", check_morphism(e.map)}});
  w["algebras"] = std::move(algs);
  w["modules"] = std::move(mods);
  w["extensions"] = std::move(exts);
  j["verdict"] = "parsed";
  j["workspace"] = std::move(w);
  return emit(j, o, kExitOk);
}

int cmd_algebra_info(const Options& o) {
  const Workspace ws = load(o);
  const AlgebraEntry& entry = pick_algebra(ws, o.algebra);
  const Algebra& a = entry.algebra;
  const Ideal rad = radical(a);
  const ProjectiveData& pd = projective_data(a);
  IsoClassRegistry reg(a, o.run.seed);
  Json info;
  info["name"] = entry.name;
  info["dim"] = a.dim();
  info["radical_dim"] = rad.dim();
  info["loewy_length"] = nilpotency_index(rad);
  info["simples"] = pd.classes();
  Json proj = Json::array();
  for (std::size_t k = 0; k < pd.classes(); ++k) {
    const PdVerdict s = proj_dim(pd.simples[k], reg, o.run.effective_pd_cutoff());
    proj.push_back(Json{{"projective_dim", pd.projectives[k].dim()}, {"simple_pd", to_json(s)}});
  }
  info["vertices"] = std::move(proj);
  const auto nd = nakayama_data(a);
  info["nakayama"] = nd.has_value();
  if (nd) info["indecomposables"] = nd->indecomposables.size();
  Json j = report_skeleton(o.run);
  j["registry_snapshot"].push_back(registry_json(entry.name, reg));
  j["verdict"] = "ok";
  j["algebra"] = std::move(info);
  return emit(j, o, kExitOk);
}

int cmd_module(const Options& o, const std::string& what) {
  const Workspace ws = load(o);
  if (o.module.empty()) throw InputError("--module is required");
  const ModuleEntry& m = ws.module(o.module);
  IsoClassRegistry reg(m.module.algebra(), o.run.seed);
  Json j = report_skeleton(o.run);
  int code = kExitOk;
  if (what == "pd") {
    const PdVerdict pd = proj_dim(m.module, reg, o.run.effective_pd_cutoff());
    j["probe_results"].push_back(Json{{"name", m.name}, {"dim", m.module.dim()}, {"pd", to_json(pd)}});
    j["verdict"] = pd.describe();
    if (pd.unknown()) code = kExitIndeterminate;
  } else if (what == "psi") {
    try {
      const PsiComputation p = psi(m.module, reg, o.run.syzygy_cutoff);
      Json t = to_json(p);
      t["algebra"] = m.algebra;
      j["psi_transcript"] = std::move(t);
      j["verdict"] = "psi " + std::to_string(p.psi);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PsiIndeterminate && e.kind() != ErrorKind::CutoffExceeded) throw;
      j["verdict"] = "indeterminate";
      j["failure"] = e.what();
      code = kExitIndeterminate;
    }
  } else {
    Json terms = Json::array();
    Module cur = m.module;
    terms.push_back(Json{{"level", 0}, {"dim", cur.dim()}, {"classes", to_json(reg.class_vector(cur))}});
    for (std::size_t k = 1; k <= o.steps; ++k) {
      cur = syzygy(cur).module;
      terms.push_back(Json{{"level", k}, {"dim", cur.dim()}, {"classes", to_json(reg.class_vector(cur))}});
      if (cur.dim() == 0) break;
    }
    j["verdict"] = "ok";
    j["syzygies"] = std::move(terms);
  }
  j["registry_snapshot"].push_back(registry_json(m.algebra, reg));
  return emit(j, o, code);
}

int cmd_extension(const Options& o, const std::string& what) {
  const Workspace ws = load(o);
  if (o.extension.empty() || o.module.empty()) throw InputError("--extension and --module are required");
  const ExtensionEntry& entry = ws.extension(o.extension);
  const Extension e = Extension::create(entry.map, entry.name);
  const ModuleEntry& m = ws.module(o.module);
  if (m.algebra != entry.target) throw InputError("module " + m.name + " is not over the target " + entry.target);
  Json j = report_skeleton(o.run);
  int code = kExitOk;
  if (what == "rpd") {
    const PdVerdict rpd = rel_proj_dim(e, m.module, o.run.effective_pd_cutoff());
    j["probe_results"].push_back(Json{{"name", m.name}, {"dim", m.module.dim()}, {"rpd", to_json(rpd)}});
    j["verdict"] = rpd.describe();
    if (rpd.unknown()) code = kExitIndeterminate;
  } else {
    const RelativeProjectivity r = relative_projectivity(e, m.module);
    j["probe_results"].push_back(Json{{"name", m.name},
                                      {"dim", m.module.dim()},
                                      {"induced_dim", r.induced.module.dim()},
                                      {"relative_projective", r.relative_projective}});
    j["verdict"] = r.relative_projective ? "relatively projective" : "not relatively projective";
  }
  return emit(j, o, code);
}

Corollary corollary_of(const std::string& s) {
  if (s == "4.2") return Corollary::C42;
  if (s == "4.3") return Corollary::C43;
  if (s == "4.4") return Corollary::C44;
  if (s == "4.5.1") return Corollary::C45_1;
  if (s == "4.5.2") return Corollary::C45_2;
  if (s == "4.5.3") return Corollary::C45_3;
  throw InputError("unknown corollary " + s);
}

int cmd_theorem(const Options& o, const std::string& which) {
  const Workspace ws = load(o);
  const std::size_t cutoff = o.run.syzygy_cutoff;
  const std::uint64_t seed = o.run.seed;
  if (which == "thm1") {
    if (o.extension.empty()) throw InputError("--extension is required");
    const ExtensionEntry& entry = ws.extension(o.extension);
    const Extension e = Extension::create(entry.map, entry.name);
    if (o.part != 1 && o.part != 2) throw InputError("--part is 1 or 2");
    return emit_certificate(pipeline_thm1(e, std::nullopt, probes_for(ws, e.target(), o),
                                          o.part == 1 ? Thm1Variant::Part1 : Thm1Variant::Part2, o.declared_n, cutoff, seed),
                            o);
  }
  if (which == "prop1") {
    if (o.chain.size() < 2) throw InputError("--chain needs at least two algebras, innermost first");
    if (o.variant != "omega1" && o.variant != "omega2") throw InputError("--variant is omega1 or omega2");
    const ChainSpec chain = ChainSpec::from_workspace(ws, o.chain);
    return emit_certificate(pipeline_prop1(chain, o.variant == "omega1" ? Prop1Variant::Omega1 : Prop1Variant::Omega2,
                                           probes_for(ws, chain.base(), o), cutoff, seed, o.witness_level),
                            o);
  }
  const AlgebraEntry& entry = pick_algebra(ws, o.algebra);
  const Probes probes = probes_for(ws, entry.algebra, o);
  if (which == "thm2") {
    Thm2Options opt;
    opt.cutoff = cutoff;
    opt.seed = seed;
    opt.witness_level = o.witness_level;
    return emit_certificate(pipeline_thm2(entry.algebra, ideal_of(ws, entry, o.ideal_i), ideal_of(ws, entry, o.ideal_j),
                                          ideal_of(ws, entry, o.ideal_k), probes, opt),
                            o);
  }
  return emit_certificate(pipeline_corollaries4(entry.algebra, corollary_of(o.corollary), ideal_of(ws, entry, o.ideal_i),
                                                ideal_of(ws, entry, o.ideal_j), o.power, probes, cutoff, seed),
                          o);
}

int cmd_example1(const Options& o) {
  const Example1Report r = example1_scenario(o.run.prime, o.run.seed, o.run.syzygy_cutoff);
  Json j = report_skeleton(o.run);
  fill_certificate(j, r.certificate);
  Json s;
  s["dim_a"] = r.dim_a;
  s["dim_b"] = r.dim_b;
  s["dim_c"] = r.dim_c;
  s["a_nakayama"] = r.a_nakayama;
  s["indecomposables_a"] = r.indecomposables_a;
  s["rad_c_left_ideal_of_b"] = r.rad_c_left_ideal_of_b;
  s["rad_b_left_ideal_of_a"] = r.rad_b_left_ideal_of_a;
  s["rad3_nonzero"] = r.rad3_nonzero;
  s["chain_proper"] = r.chain_proper;
  s["presentation_dims_match"] = r.presentation_dims_match();
  Json sec = report_skeleton(o.run);
  fill_certificate(sec, r.secondary);
  s["secondary"] = Json{{"bound", sec["bound"]}, {"verdict", sec["verdict"]}};
  Json lifting = Json::array();
  for (const LiftingProbe& p : r.lifting.probes)
    lifting.push_back(Json{{"name", p.name}, {"passed", p.passed()}});
  s["lifting"] = std::move(lifting);
  j["scenario"] = std::move(s);
  return emit(j, o, exit_code(r.certificate.verdict));
}

InstanceKind kind_of(const std::string& s) {
  if (s == "rad-square-zero") return InstanceKind::RadSquareZero;
  if (s == "monomial-nakayama") return InstanceKind::MonomialNakayama;
  if (s == "chain") return InstanceKind::Chain;
  throw InputError("unknown instance kind " + s);
}

/// Seeded instances: ideal-triple bounds with I = J = rad, K = A for algebras, the Omega^2 chain bound for chains.
int cmd_fuzz(const Options& o) {
  const InstanceKind kind = kind_of(o.kind);
  const PrimeField f(o.run.prime);
  Json j = report_skeleton(o.run);
  Json runs = Json::array();
  std::size_t failures = 0, indeterminate = 0;
  for (std::size_t k = 0; k < o.count; ++k) {
    const std::uint64_t seed = o.run.seed + k;
    const RandomInstance inst = generate_random_instance(kind, {o.vertices, o.arrows, o.chain_length}, seed, f);
    const Probes probes = standard_probes(inst.chain ? inst.chain->base() : inst.algebra, o.random_probes, o.probe_dim, seed);
    BoundCertificate c;
    if (inst.chain) {
      c = pipeline_prop1(*inst.chain, Prop1Variant::Omega2, probes, o.run.syzygy_cutoff, seed);
    } else {
      const Subspace rad = radical(inst.algebra).space();
      c = pipeline_corollaries4(inst.algebra, Corollary::C42, rad, rad, 0, probes, o.run.syzygy_cutoff, seed);
    }
    const int code = exit_code(c.verdict);
    failures += code == kExitHypothesis;
    indeterminate += code == kExitIndeterminate;
    std::size_t over = 0;
    for (const ProbeResult& p : c.probes) over += !p.within_bound || !p.binding_checks_pass();
    runs.push_back(Json{{"seed", seed},
                        {"dim", inst.algebra.dim()},
                        {"bound", c.bound ? Json(*c.bound) : Json(nullptr)},
                        {"verdict", std::string(to_string(c.verdict))},
                        {"probes", c.probes.size()},
                        {"probe_failures", over},
                        {"lint", lint_certificate(c)}});
  }
  j["probe_results"] = std::move(runs);
  j["verdict"] = failures ? "failures" : indeterminate ? "indeterminate" : "ok";
  return emit(j, o, failures ? kExitHypothesis : indeterminate ? kExitIndeterminate : kExitOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional algebra toolkit: projective dimension bounds with certificates"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--prime", o.run.prime, "characteristic of the ground field")->check(CLI::Range(2LL, 1LL << 31));
  app.add_option("--seed", o.run.seed, "seed for randomized steps");
  app.add_option("--syzygy-cutoff", o.run.syzygy_cutoff, "maximal syzygy depth");
  app.add_option("--pd-cutoff", o.run.pd_cutoff, "maximal depth for pd (defaults to the syzygy cutoff)");
  app.add_option("--out", o.out, "write the report here instead of stdout");
  app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.fallthrough();

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", o.file, "workspace file")->required(); };
  auto add_probes = [&](CLI::App* sub) {
    sub->add_option("--probe", o.probe_modules, "extra probe modules from the workspace");
    sub->add_option("--random-probes", o.random_probes, "number of seeded random probes");
    sub->add_option("--probe-dim", o.probe_dim, "maximal dimension of random probes");
  };

  auto* parse = app.add_subcommand("parse", "load a workspace and list its declarations");
  add_file(parse);
  auto* info = app.add_subcommand("algebra-info", "basic invariants of an algebra");
  add_file(info);
  info->add_option("--algebra", o.algebra);

  auto* module = app.add_subcommand("module", "homological invariants of a module");
  module->require_subcommand(1);
  std::string module_cmd;
  for (const char* name : {"pd", "psi", "syzygy"}) {
    auto* s = module->add_subcommand(name);
    add_file(s);
    s->add_option("--module", o.module)->required();
    if (std::string(name) == "syzygy") s->add_option("--steps", o.steps);
    s->callback([&module_cmd, name] { module_cmd = name; });
  }

  auto* extension = app.add_subcommand("extension", "relative invariants along an extension B -> A");
  extension->require_subcommand(1);
  std::string extension_cmd;
  for (const char* name : {"rpd", "relproj"}) {
    auto* s = extension->add_subcommand(name);
    add_file(s);
    s->add_option("--extension", o.extension)->required();
    s->add_option("--module", o.module)->required();
    s->callback([&extension_cmd, name] { extension_cmd = name; });
  }

  auto* theorem = app.add_subcommand("theorem", "certified projective dimension bounds");
  theorem->require_subcommand(1);
  std::string theorem_cmd;
  auto* thm1 = theorem->add_subcommand("thm1", "bound along an extension of finite relative dimension");
  add_file(thm1);
  add_probes(thm1);
  thm1->add_option("--extension", o.extension)->required();
  thm1->add_option("--part", o.part);
  thm1->add_option("--n", o.declared_n, "declared relative dimension for part 2");
  auto* thm2 = theorem->add_subcommand("thm2", "bound from an ideal triple with IJK = 0");
  auto* cor4 = theorem->add_subcommand("cor4", "bound from a special ideal triple");
  for (auto* s : {thm2, cor4}) {
    add_file(s);
    add_probes(s);
    s->add_option("--algebra", o.algebra);
    s->add_option("--I", o.ideal_i, "rad, rad^n, 0, A or comma-separated generators");
    s->add_option("--J", o.ideal_j);
    s->add_option("--witness-level", o.witness_level);
  }
  thm2->add_option("--K", o.ideal_k);
  cor4->add_option("--kind", o.corollary)->check(CLI::IsMember({"4.2", "4.3", "4.4", "4.5.1", "4.5.2", "4.5.3"}));
  cor4->add_option("--power", o.power, "radical power for kind 4.4");
  auto* prop1 = theorem->add_subcommand("prop1", "bound along a chain with left-ideal radicals");
  add_file(prop1);
  add_probes(prop1);
  prop1->add_option("--chain", o.chain, "algebra names, innermost first")->required()->delimiter(',');
  prop1->add_option("--variant", o.variant)->check(CLI::IsMember({"omega1", "omega2"}));
  prop1->add_option("--witness-level", o.witness_level);
  for (auto* s : {thm1, thm2, cor4, prop1})
    s->callback([&theorem_cmd, s] { theorem_cmd = s->get_name(); });

  auto* example = app.add_subcommand("example1", "the three-algebra Nakayama chain scenario");
  auto* fuzz = app.add_subcommand("fuzz", "bounds on seeded random instances");
  fuzz->add_option("--count", o.count);
  fuzz->add_option("--kind", o.kind)->check(CLI::IsMember({"rad-square-zero", "monomial-nakayama", "chain"}));
  fuzz->add_option("--vertices", o.vertices);
  fuzz->add_option("--arrows", o.arrows);
  fuzz->add_option("--chain-length", o.chain_length);
  fuzz->add_option("--random-probes", o.random_probes);
  fuzz->add_option("--probe-dim", o.probe_dim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  try {
    if (parse->parsed()) o.run.command = "parse";
    else if (info->parsed()) o.run.command = "algebra-info";
    else if (module->parsed()) o.run.command = "module " + module_cmd;
    else if (extension->parsed()) o.run.command = "extension " + extension_cmd;
    else if (theorem->parsed()) o.run.command = "theorem " + theorem_cmd;
    else if (example->parsed()) o.run.command = "example1";
    else o.run.command = "fuzz";
    PrimeField check(o.run.prime);  // rejects composite moduli as an input error

    if (parse->parsed()) return cmd_parse(o);
    if (info->parsed()) return cmd_algebra_info(o);
    if (module->parsed()) return cmd_module(o, module_cmd);
    if (extension->parsed()) return cmd_extension(o, extension_cmd);
    if (theorem->parsed()) return cmd_theorem(o, theorem_cmd);
    if (example->parsed()) return cmd_example1(o);
    if (fuzz->parsed()) return cmd_fuzz(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n\n" << app.help();
    return kExitInput;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::CutoffExceeded:
      case ErrorKind::PsiIndeterminate:
      case ErrorKind::BudgetExhausted:
        std::cerr << e.what() << "\n";
        return kExitIndeterminate;
      case ErrorKind::HypothesisFailed:
      case ErrorKind::InvariantViolation:
        std::cerr << e.what() << "\n";
        return kExitHypothesis;
      default:
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
