#include "omega4/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "omega4/classify.hpp"
#include "omega4/report.hpp"
#include "omega4/specfile.hpp"

namespace omega4 {

namespace {

struct Ctx {
  bool json = false;
  bool strict = false;
  uint64_t seed = 12345;
  int max_len = 40;
  int bound = 12;
  bool all_certified = true;
};

AlgebraTable load_algebra(const std::string& path, const Ctx& ctx) {
  AlgebraSpec spec = parse_spec_file(path);
  return build_algebra(spec.quiver, spec.relations, spec.field, ctx.max_len);
}

void emit(const Report& rep, const Ctx& ctx, std::ostream& out) {
  out << (ctx.json ? rep.to_json() : rep.to_text());
}

std::string dims_to_string(const std::vector<int>& dims) {
  std::string s;
  for (size_t v = 1; v < dims.size(); ++v) {
    if (v > 1) s += ",";
    s += std::to_string(dims[v]);
  }
  return s;
}

std::string vec_to_string(const Vec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

void add_properties(Report& rep, const AlgebraTable& a) {
  rep.set("property.no_sink_or_source", !a.quiver.has_sink_or_source());
  PropertyBResult pb = check_property_b(a);
  rep.set("property.socle_bigrade_disjoint", pb.holds);
  if (!pb.holds)
    rep.set("property.socle_bigrade_disjoint.witness",
            "i=" + std::to_string(pb.witness->i) +
                ",j=" + std::to_string(pb.witness->j));
  PropertyCResult pc = check_property_c(a);
  rep.set("property.socle_rotations_closed", pc.holds);
  if (!pc.holds)
    rep.set("property.socle_rotations_closed.violations",
            static_cast<int>(pc.violations.size()));
}

int cmd_check(const std::string& file, Ctx& ctx, std::ostream& out) {
  AlgebraTable a = load_algebra(file, ctx);
  Report rep;
  rep.set("field.p", static_cast<int>(a.field.p));
  rep.set("algebra.dim", a.dim());
  rep.set("algebra.loewy_length", a.loewy_length);
  rep.set("algebra.stabilized_at", a.stabilization_length);
  rep.set("algebra.vertices", a.quiver.num_vertices);
  rep.set("algebra.arrows", static_cast<int>(a.quiver.arrows.size()));
  rep.set("algebra.relations", static_cast<int>(a.relations.size()));
  rep.set("algebra.admissible", true);
  rep.set("algebra.connected", a.quiver.is_connected());
  for (int i = 1; i <= a.quiver.num_vertices; ++i)
    rep.set("proj." + std::to_string(i) + ".dim", a.dim_e(i));
  emit(rep, ctx, out);
  return 0;
}

int cmd_symmetric(const std::string& file, Ctx& ctx, std::ostream& out) {
  AlgebraTable a = load_algebra(file, ctx);
  Report rep;
  FormSearchResult form = find_symmetrizing_form(a, ctx.seed);
  if (form.form) {
    rep.set("symmetric", "true");
    rep.set("form.method", form.form->method);
    rep.set("form.lambda", vec_to_string(form.form->lambda));
    if (form.form->method == "random") rep.set("form.seed", form.form->seed);
  } else {
    rep.set("symmetric", form.certified ? "false-certified"
                                        : "false-probabilistic");
    ctx.all_certified = ctx.all_certified && form.certified;
  }
  add_properties(rep, a);
  emit(rep, ctx, out);
  return 0;
}

int cmd_periods(const std::string& file, Ctx& ctx, std::ostream& out) {
  AlgebraTable a = load_algebra(file, ctx);
  Prng rng(ctx.seed);
  Report rep;
  rep.set("seed", ctx.seed);
  bool math_fail = false;
  std::vector<PeriodReport> prs;
  for (int i = 1; i <= a.quiver.num_vertices; ++i) {
    PeriodReport pr =
        omega_period(simple(a, i), ctx.bound, rng, "S" + std::to_string(i));
    ctx.all_certified = ctx.all_certified && pr.certified;
    rep.set("period.S" + std::to_string(i), pr.to_string());
    rep.set("period.S" + std::to_string(i) + ".certified", pr.certified);
    prs.push_back(pr);
  }
  for (int i = 1; i <= a.quiver.num_vertices; ++i) {
    std::string key = "identity.v" + std::to_string(i);
    const PeriodReport& pr = prs[i - 1];
    bool applies = pr.kind == PeriodReport::Kind::Periodic && 4 % pr.period == 0;
    if (!applies) {
      rep.set(key + ".holds", "skipped");
      continue;
    }
    DimensionIdentity id = dimension_identity(a, i, rng, ctx.bound);
    rep.set(key + ".holds", id.holds);
    rep.set(key + ".omega2", id.omega2);
    rep.set(key + ".P", id.proj);
    rep.set(key + ".Pplus", id.proj_plus);
    rep.set(key + ".Pminus", id.proj_minus);
    rep.set(key + ".S", id.simple_dim);
    if (!id.holds) math_fail = true;
  }
  emit(rep, ctx, out);
  return math_fail ? 1 : 0;
}

int cmd_lemma1(const std::string& file, Ctx& ctx, std::ostream& out) {
  AlgebraTable a = load_algebra(file, ctx);
  Prng rng(ctx.seed);
  Lemma1Report lr = lemma1_report(a, rng, ctx.bound);
  ctx.all_certified = ctx.all_certified && lr.certified;
  Report rep;
  rep.set("seed", ctx.seed);
  rep.set("cond.a", lr.cond_a.has_value());
  if (lr.cond_a)
    rep.set("cond.a.witness", "omega2(S" + std::to_string(lr.cond_a->i) +
                                  ")=S" + std::to_string(lr.cond_a->j));
  rep.set("cond.b", lr.cond_b_arrow.has_value());
  if (lr.cond_b_arrow)
    rep.set("cond.b.witness", a.quiver.arrows[*lr.cond_b_arrow].name);
  rep.set("cond.c", lr.cond_c_vertex.has_value());
  if (lr.cond_c_vertex)
    rep.set("cond.c.witness", "vertex " + std::to_string(*lr.cond_c_vertex));
  rep.set("equivalence", lr.equivalence_ok ? "ok" : "violated");
  rep.set("conclusion", lr.finite_type_conclusion ? *lr.finite_type_conclusion
                                                  : "-");
  rep.set("conclusion.consistent", lr.conclusion_consistent);
  for (const auto& [v, p] : lr.simple_periods)
    rep.set("premise.period.S" + std::to_string(v), p);
  // Only the simples are inspected here; run verify-family for the
  // census-backed version of the premise.
  rep.set("premise.scope", "simples-only");
  emit(rep, ctx, out);
  return (lr.equivalence_ok && lr.conclusion_consistent) ? 0 : 1;
}

int cmd_classify(const std::string& file, Ctx& ctx, std::ostream& out) {
  AlgebraTable a = load_algebra(file, ctx);
  ClassifyReport cr = classify_structural(a);
  Report rep;
  rep.set("family", cr.family);
  rep.set("param", cr.parameter);
  rep.set("evidence", cr.evidence.empty() ? "-" : cr.evidence);
  emit(rep, ctx, out);
  return 0;
}

int cmd_family(const std::string& type, int param, uint32_t p,
               const std::string& out_path, Ctx& ctx, std::ostream& out) {
  PrimeField f(p);
  FamilySpec fs;
  if (type == "i")
    fs = family_i(param, f);
  else if (type == "ii")
    fs = family_ii(param, f);
  else if (type == "iii")
    fs = family_iii(param, f);
  else
    throw Error(ErrKind::Parse, "family type must be i, ii or iii");
  std::string text = emit_spec(f, fs.quiver, fs.relations);
  if (out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(out_path);
  if (!file) throw Error(ErrKind::Parse, "cannot write " + out_path);
  file << text;
  Report rep;
  rep.set("out", out_path);
  rep.set("family", type);
  rep.set("param", param);
  emit(rep, ctx, out);
  return 0;
}

int cmd_verify_family(const std::string& file, int max_dim, int budget_bits,
                      Ctx& ctx, std::ostream& out) {
  AlgebraTable a = load_algebra(file, ctx);
  Prng rng(ctx.seed);
  CensusOptions opt;
  opt.max_total_dim = max_dim;
  opt.budget = std::pow(2.0, budget_bits);
  opt.period_bound = ctx.bound;
  ClassifyReport cr = classify_structural(a);
  VerifyFamilyReport vr = verify_family(a, cr, rng, opt);
  ctx.all_certified = ctx.all_certified && vr.certified;
  Report rep;
  rep.set("seed", ctx.seed);
  rep.set("family", cr.family);
  rep.set("param", cr.parameter);
  for (const CheckLine& c : vr.checks) {
    rep.set("check." + c.name, c.pass ? "pass" : "fail");
    if (!c.detail.empty()) rep.set("check." + c.name + ".detail", c.detail);
  }
  rep.set("census.count", vr.census_count);
  rep.set("census.nonprojective", vr.census_nonprojective);
  rep.set("census.exhaustive", vr.census_exhaustive);
  rep.set("verdict", vr.all_pass ? "pass" : "fail");
  emit(rep, ctx, out);
  return vr.all_pass ? 0 : 1;
}

int cmd_census(const std::string& file, int max_dim, int budget_bits, Ctx& ctx,
               std::ostream& out) {
  AlgebraTable a = load_algebra(file, ctx);
  Prng rng(ctx.seed);
  CensusOptions opt;
  opt.max_total_dim = max_dim;
  opt.budget = std::pow(2.0, budget_bits);
  opt.period_bound = ctx.bound;
  Census c = indecomposable_census(a, opt, rng);
  ctx.all_certified = ctx.all_certified && c.certified;
  Report rep;
  rep.set("seed", ctx.seed);
  rep.set("census.count", static_cast<int>(c.entries.size()));
  rep.set("census.nonprojective", c.non_projective_count());
  rep.set("census.exhaustive", c.exhaustive);
  rep.set("census.max_dim", c.max_total_dim);
  rep.set("census.p", static_cast<int>(c.p));
  rep.set("census.skipped_dimvecs", static_cast<int>(c.skipped_dimvecs.size()));
  int n = static_cast<int>(c.entries.size());
  for (int k = 0; k < n; ++k) {
    std::string key = "mod." + padded_index(k, n);
    rep.set(key + ".dims", dims_to_string(c.entries[k].dims));
    rep.set(key + ".period", c.entries[k].period.to_string());
    rep.set(key + ".projective", c.entries[k].projective);
  }
  FormSearchResult form = find_symmetrizing_form(a, ctx.seed);
  if (form.form) {
    ClosureResult cl = omega_closure_check(a, c, *form.form, rng);
    rep.set("census.omega_closed", cl.closed);
    rep.set("census.omega_boundary_flagged", cl.boundary_flagged);
  }
  emit(rep, ctx, out);
  return 0;
}

int cmd_heart(const std::string& file, int vertex, Ctx& ctx,
              std::ostream& out) {
  AlgebraTable a = load_algebra(file, ctx);
  Prng rng(ctx.seed);
  HeartResult h = heart(a, vertex, rng);
  Report rep;
  rep.set("seed", ctx.seed);
  rep.set("heart.vertex", vertex);
  rep.set("heart.dims", dims_to_string(h.rep.dims));
  rep.set("heart.total_dim", h.rep.total_dim());
  SplitResult sp = fitting_split(h.rep, rng);
  ctx.all_certified = ctx.all_certified && sp.certified;
  rep.set("heart.summands", static_cast<int>(sp.parts.size()));
  std::string iso = "-";
  if (h.rep.total_dim() == 1)
    for (size_t v = 1; v < h.rep.dims.size(); ++v)
      if (h.rep.dims[v] == 1) iso = "S" + std::to_string(v);
  rep.set("heart.simple", h.rep.total_dim() == 1);
  rep.set("heart.iso", iso);
  emit(rep, ctx, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"workbench for bound quiver algebras and syzygy periods"};
  app.require_subcommand(1);
  app.fallthrough();

  Ctx ctx;
  app.add_flag("--json", ctx.json, "emit the report as JSON");
  app.add_flag("--strict", ctx.strict,
               "exit 4 when any verdict is only probabilistic");
  app.add_option("--seed", ctx.seed, "seed for randomized branches");
  app.add_option("--max-len", ctx.max_len,
                 "length cap for the ideal saturation");
  app.add_option("--bound", ctx.bound, "syzygy period search bound");

  std::string file, out_path, fam_type;
  int param = 0, max_dim = -1, budget_bits = 24, vertex = 1;
  uint32_t prime = 2;

  CLI::App* c_check = app.add_subcommand("check", "build and summarize");
  c_check->add_option("file", file)->required();
  CLI::App* c_sym = app.add_subcommand("symmetric", "symmetrizing form");
  c_sym->add_option("file", file)->required();
  CLI::App* c_per = app.add_subcommand("periods", "periods of the simples");
  c_per->add_option("file", file)->required();
  CLI::App* c_l1 = app.add_subcommand("lemma1", "equivalence report");
  c_l1->add_option("file", file)->required();
  CLI::App* c_cls = app.add_subcommand("classify", "match the three families");
  c_cls->add_option("file", file)->required();
  CLI::App* c_fam = app.add_subcommand("family", "emit a family algebra");
  c_fam->add_option("--type", fam_type, "i, ii or iii")->required();
  c_fam->add_option("--param", param, "n (i, ii) or t (iii)")->required();
  c_fam->add_option("--p", prime, "field modulus");
  c_fam->add_option("--out", out_path, "output file");
  CLI::App* c_ver = app.add_subcommand("verify-family", "full battery");
  c_ver->add_option("file", file)->required();
  c_ver->add_option("--max-dim", max_dim, "census dimension bound");
  c_ver->add_option("--budget-bits", budget_bits,
                    "log2 of raw assignments allowed per dimension vector");
  CLI::App* c_cen = app.add_subcommand("census", "indecomposable census");
  c_cen->add_option("file", file)->required();
  c_cen->add_option("--max-dim", max_dim, "census dimension bound")->required();
  c_cen->add_option("--budget-bits", budget_bits,
                    "log2 of raw assignments allowed per dimension vector");
  CLI::App* c_hrt = app.add_subcommand("heart", "rad(P)/soc(P) at a vertex");
  c_hrt->add_option("file", file)->required();
  c_hrt->add_option("--vertex", vertex, "vertex index")->required();

  std::vector<char*> argv;
  std::string prog = "omega4";
  argv.push_back(prog.data());
  std::vector<std::string> owned = args;
  for (std::string& s : owned) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    int code = 0;
    if (c_check->parsed()) code = cmd_check(file, ctx, out);
    else if (c_sym->parsed()) code = cmd_symmetric(file, ctx, out);
    else if (c_per->parsed()) code = cmd_periods(file, ctx, out);
    else if (c_l1->parsed()) code = cmd_lemma1(file, ctx, out);
    else if (c_cls->parsed()) code = cmd_classify(file, ctx, out);
    else if (c_fam->parsed())
      code = cmd_family(fam_type, param, prime, out_path, ctx, out);
    else if (c_ver->parsed())
      code = cmd_verify_family(file, max_dim, budget_bits, ctx, out);
    else if (c_cen->parsed())
      code = cmd_census(file, max_dim, budget_bits, ctx, out);
    else if (c_hrt->parsed()) code = cmd_heart(file, vertex, ctx, out);
    if (code == 0 && ctx.strict && !ctx.all_certified) {
      err << "error: verdict is only probabilistic under --strict\n";
      return 4;
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrKind::Parse:
      case ErrKind::Validation:
      case ErrKind::NotConnected:
      case ErrKind::Degenerate:
        return 2;
      case ErrKind::NotAdmissible:
      case ErrKind::CapExceeded:
        return 3;
      case ErrKind::MathCheckFailed:
      case ErrKind::NotSymmetric:
      case ErrKind::PeriodHypothesis:
        return 1;
    }
    return 2;
  }
}

}  // namespace omega4
