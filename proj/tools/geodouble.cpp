#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geodouble/construction.hpp"
#include "geodouble/doubling.hpp"
#include "geodouble/freegroups.hpp"
#include "geodouble/isometries.hpp"
#include "geodouble/presentations.hpp"
#include "geodouble/report.hpp"
#include "geodouble/triangulation.hpp"

using namespace geodouble;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string decimal(const Rational& r) {
  return fixed6(static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()));
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string complex_text(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.9g%+.9gi", z.real() + 0.0, z.imag() + 0.0);
  return buf;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GEODOUBLE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::logic_error&) {
      throw std::invalid_argument(std::string("GEODOUBLE_SEED is not an unsigned integer: ") + env);
    }
  }
  return 1;
}

std::string join_words(const std::vector<Word>& ws) {
  std::string out;
  for (const auto& w : ws) out += (out.empty() ? "" : ",") + w.to_string();
  return out;
}

// family ---------------------------------------------------------------------

ReportDocument family_report(const std::string& cmd, std::int64_t n_min, std::int64_t n_max) {
  if (n_min > n_max) throw std::invalid_argument("--n-min exceeds --n-max");
  ReportDocument doc(cmd);
  doc.table("row", {"n", "boundary_genus", "rank_bound", "fix_rank", "ratio", "ratio_decimal", "cusped_fix_rank",
                    "cusped_ratio", "cusped_decimal"});
  bool all_below = true;
  int rows = 0;
  for (std::int64_t n = std::max<std::int64_t>(n_min, 4); n <= n_max; ++n) {
    if (!admissible_family_size(n)) continue;
    const auto s = family_stats(FamilyParams::make(n));
    all_below = all_below && s.ratio_closed < 2 && s.ratio_cusped < 2;
    doc.row({std::to_string(n), std::to_string(s.boundary_genus), std::to_string(s.rank_upper_closed),
             std::to_string(s.fix_rank_closed), to_string(s.ratio_closed), decimal(s.ratio_closed),
             std::to_string(s.fix_rank_cusped), to_string(s.ratio_cusped), decimal(s.ratio_cusped)});
    ++rows;
  }
  doc.field("rows", std::to_string(rows));
  doc.check("every ratio is strictly below 2", "family-ratio-bound", all_below);
  return doc;
}

ReportDocument family_verify(const std::string& cmd, std::int64_t n) {
  ReportDocument doc(cmd);
  const auto report = verify_paper_invariants(FamilyParams::make(n));
  doc.field("n", std::to_string(n));
  for (const auto& c : report.checks)
    doc.check(c.claim, "family-invariants", c.pass, "expected " + c.expected + ", got " + c.actual);
  return doc;
}

ReportDocument family_min_n(const std::string& cmd, const std::string& eps_text) {
  ReportDocument doc(cmd);
  const Rational eps = parse_rational(eps_text);
  const auto n = min_n_for_ratio(eps);
  const Rational ratio(2 * n - 2, n + 3);
  doc.field("eps", to_string(eps));
  doc.field("n", std::to_string(n));
  doc.field("ratio", to_string(ratio));
  doc.check("ratio exceeds 2 - eps", "family-min-n", ratio > Rational(2) - eps);
  return doc;
}

// scheme ---------------------------------------------------------------------

void describe_complex(ReportDocument& doc, const GluedComplex& c) {
  doc.field("tets", std::to_string(c.scheme.tet_count()));
  doc.field("pairings", std::to_string(c.scheme.pairings().size()));
  doc.field("closed", yes_no(c.scheme.closed()));
  doc.field("edge_classes", std::to_string(c.edge_classes.size()));
  doc.field("vertex_classes", std::to_string(c.vertex_class_count));
  doc.field("orientable", yes_no(c.orientable));
  doc.table("edge", {"class", "valence", "angle_deg", "admissible", "members"});
  for (const auto& e : dihedral_admissibility(c)) {
    std::string members;
    for (const auto& m : c.edge_classes[e.edge_class].members)
      members += (members.empty() ? "" : " ") + std::to_string(m.tet + 1) + ":" + std::to_string(m.edge) +
                 (m.reversed ? "-" : "+");
    doc.row({std::to_string(e.edge_class), std::to_string(e.valence), fixed6(e.angle_degrees),
             yes_no(e.admissible), members});
  }
  if (!c.scheme.closed()) return;
  const auto boundary = boundary_surfaces(c);
  for (const auto& b : boundary.components) {
    const std::string key = "boundary." + std::to_string(b.vertex_class);
    doc.field(key + ".triangles", std::to_string(b.triangles));
    doc.field(key + ".euler", std::to_string(b.euler_characteristic()));
    doc.field(key + ".orientable", yes_no(b.orientable));
    doc.field(key + ".genus", std::to_string(b.genus()));
  }
  if (c.connected()) {
    const auto h = handle_structure(c);
    doc.field("handlebody_genus", std::to_string(h.handlebody_genus));
    doc.field("two_handles", std::to_string(h.two_handles));
  }
}

// fg -------------------------------------------------------------------------

ReportDocument fg_command(const std::string& cmd, const std::string& action, int rank, const std::string& gens_text,
                          const std::string& word_text) {
  ReportDocument doc(cmd);
  const auto gens = parse_word_list(gens_text, rank);
  const auto graph = stallings_graph(rank, gens);
  doc.field("rank", std::to_string(rank));
  doc.field("generators", join_words(gens));
  auto word = [&] {
    if (word_text.empty()) throw std::invalid_argument("--word is required");
    return Word::parse(word_text, rank);
  };
  if (action == "fold") {
    doc.field("vertices", std::to_string(graph.vertex_count()));
    doc.field("edges", std::to_string(graph.edge_count()));
    std::istringstream lines(graph.to_text());
    for (std::string l; std::getline(lines, l);) doc.line(l);
  } else if (action == "member") {
    const Word w = word();
    doc.field("word", w.to_string());
    doc.field("member", yes_no(contains(graph, w)));
  } else if (action == "rank") {
    doc.field("subgroup_rank", std::to_string(subgroup_rank(graph)));
    doc.field("basis", join_words(schreier_generators(graph)));
  } else if (action == "index") {
    const auto idx = index(graph);
    doc.field("index", idx ? std::to_string(*idx) : "infinite");
    if (idx) {
      const auto rk = subgroup_rank(graph);
      const BoundRational bound = covering_rank_bound(rk, *idx);
      doc.field("subgroup_rank", std::to_string(rk));
      doc.field("covering_bound", std::to_string(bound.numerator()) + "/" + std::to_string(bound.denominator()));
      doc.check("rank = n(k-1)+1 and (rank+n-1)/n = k", "nielsen-schreier", schreier_rank_check(graph));
    }
  } else if (action == "rep") {
    const Word w = word();
    const Word r = coset_representative(graph, w);
    doc.field("word", w.to_string());
    doc.field("representative", r.to_string());
    doc.check("w * rep^-1 lies in H", "coset-representative", contains(graph, w * inverse(r)));
  }
  return doc;
}

// double ---------------------------------------------------------------------

ReportDocument double_nf(const std::string& cmd, int rank, const std::string& h_text, const std::string& word_text) {
  ReportDocument doc(cmd);
  const auto gens = parse_word_list(h_text, rank);
  const Double d(rank, gens);
  const auto w = DoubleWord::parse(word_text, rank);
  const auto nf = normal_form(d, w);
  doc.field("H", join_words(gens));
  doc.field("word", w.to_string());
  doc.field("normal_form", nf.to_string());
  doc.field("syllables", std::to_string(nf.syllables.size()));
  doc.field("swap_normal_form", normal_form(d, swap(w)).to_string());
  doc.field("fixed", yes_no(is_fixed(d, w)));
  doc.check("fixed iff no syllables", "fixed-subgroup", is_fixed(d, w) == nf.syllables.empty());
  return doc;
}

ReportDocument double_fixtest(const std::string& cmd, int rank, const std::string& h_text, int samples,
                              std::uint64_t seed) {
  if (samples < 0) throw std::invalid_argument("--samples must be non-negative");
  ReportDocument doc(cmd);
  const auto gens = parse_word_list(h_text, rank);
  const Double d(rank, gens);
  std::mt19937_64 rng(seed);
  int agree = 0, fixed = 0;
  for (int i = 0; i < samples; ++i) {
    const auto w = random_double_word(rank, gens, rng);
    const bool f = is_fixed(d, w);
    const auto nf = normal_form(d, w);
    // Projection forgetting sides lands in H exactly when w does.
    Word flat;
    for (const auto& s : w.syllables) flat = flat * s.word;
    const bool in_h = nf.syllables.empty();
    const bool consistent = f == in_h && (!in_h || (d.in_h(flat) && flat == nf.tail));
    agree += consistent ? 1 : 0;
    fixed += f ? 1 : 0;
  }
  doc.field("seed", std::to_string(seed));
  doc.field("H", join_words(gens));
  doc.field("samples", std::to_string(samples));
  doc.field("fixed", std::to_string(fixed));
  doc.field("agree", std::to_string(agree) + "/" + std::to_string(samples));
  doc.check("is_fixed agrees with membership in H on every sample", "fixed-subgroup", agree == samples);
  return doc;
}

// iso ------------------------------------------------------------------------

std::string fixed_set_text(const FixedSet& fs) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, FixedAll>) return "everything";
        else if constexpr (std::is_same_v<T, FixedNone>) return "none";
        else if constexpr (std::is_same_v<T, FixedPoints>) {
          std::string s;
          for (const auto& p : f.points) s += (s.empty() ? "" : " ") + to_string(p);
          return "points " + s;
        } else if constexpr (std::is_same_v<T, FixedCircle>) {
          return "circle center " + complex_text(f.center) + " radius " + fixed6(f.radius);
        } else {
          return "line through " + complex_text(f.point) + " direction " + complex_text(f.direction);
        }
      },
      fs);
}

void describe_isometry(ReportDocument& doc, const std::string& prefix, const Isometry& g, ToleranceConfig cfg) {
  doc.field(prefix + "reversing", yes_no(g.reversing));
  if (!g.reversing) {
    doc.field(prefix + "trace", complex_text(g.m.trace()));
    doc.field(prefix + "class", to_string(classify(g, cfg)));
  } else {
    const auto kind = reflection_kind(g, cfg);
    doc.field(prefix + "involution", yes_no(kind.has_value()));
    if (kind) doc.field(prefix + "reflection", *kind == ReflectionKind::plane ? "plane" : "point");
  }
  doc.field(prefix + "fixed", fixed_set_text(fixed_points(g, cfg)));
}

// pres -----------------------------------------------------------------------

void describe_presentation(ReportDocument& doc, const FinitePresentation& p) {
  doc.field("presentation", p.to_string());
  doc.field("generators", std::to_string(p.generators));
  doc.field("relators", std::to_string(p.relators.size()));
  const auto ab = abelianization(p);
  doc.field("h1_rank", std::to_string(ab.free_rank));
  std::string torsion;
  for (const auto& t : ab.torsion) torsion += (torsion.empty() ? "" : ",") + t.str();
  doc.field("h1_torsion", torsion.empty() ? "none" : torsion);
}

FinitePresentation parse_presentation(int rank, const std::string& rels) {
  if (rank < 0 || rank > 26) throw std::invalid_argument("--rank must lie in 0..26");
  return FinitePresentation{rank, parse_word_list(rels, rank)}.normalized();
}

// audit ----------------------------------------------------------------------

std::string rational_text(const BoundRational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

ReportDocument audit_command(const std::string& cmd, const RankAuditCase& c) {
  ReportDocument doc(cmd);
  const auto r = rank_audit(c);
  doc.field("case", r.case_name);
  doc.field("g", std::to_string(c.g));
  doc.field("k", std::to_string(c.k));
  doc.field("m", std::to_string(c.m));
  doc.field("l", std::to_string(c.l));
  doc.field("surface_rank", std::to_string(r.surface_rank));
  doc.field("lower_bound", std::string(r.lower_bound_strict ? "> " : ">= ") + rational_text(r.lower_bound));
  doc.table("step", {"step", "value", "relation", "kind", "statement"});
  for (const auto& s : r.steps)
    doc.row({s.label, rational_text(s.value), s.strict ? "strict" : "non-strict", s.assumed ? "assumed" : "computed",
             s.statement});
  for (const auto& s : r.steps)
    if (!s.identity_holds) doc.check("identity " + s.label, s.label, false);
  doc.check("2 * lower bound > rank of the fixed surface group", "final", r.final_strict(),
            "2*" + rational_text(r.lower_bound) + " vs " + std::to_string(r.surface_rank));
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  std::string command = "geodouble";
  for (int i = 1; i < argc; ++i) command += std::string(" ") + argv[i];

  CLI::App app{"Combinatorial and arithmetic checks for doubled hyperbolic manifolds", "geodouble"};
  app.require_subcommand(1);
  app.fallthrough();
  bool machine = false;
  std::optional<std::uint64_t> seed_opt;
  app.add_flag("--machine", machine, "Emit key=value records");
  app.add_option("--seed", seed_opt, "Random seed (default: $GEODOUBLE_SEED or 1)");

  std::optional<ReportDocument> doc;
  std::optional<std::string> raw;
  auto seed = [&] { return seed_opt ? *seed_opt : default_seed(); };

  // family
  auto* family = app.add_subcommand("family", "The cyclic n-tetrahedron family")->require_subcommand(1);
  std::int64_t n_min = 4, n_max = 13, n = 4;
  std::string eps;
  auto* fam_report = family->add_subcommand("report", "Ratio table");
  fam_report->add_option("--n-min", n_min);
  fam_report->add_option("--n-max", n_max);
  fam_report->callback([&] { doc = family_report(command, n_min, n_max); });
  auto* fam_verify = family->add_subcommand("verify", "Check every combinatorial invariant");
  fam_verify->add_option("--n", n)->required();
  fam_verify->callback([&] { doc = family_verify(command, n); });
  auto* fam_min = family->add_subcommand("min-n", "Smallest n with ratio above 2 - eps");
  fam_min->add_option("--eps", eps)->required();
  fam_min->callback([&] { doc = family_min_n(command, eps); });

  // scheme
  auto* scheme = app.add_subcommand("scheme", "Gluing schemes")->require_subcommand(1);
  std::string scheme_file, out_file;
  auto* sch_gen = scheme->add_subcommand("generate", "Write the family scheme for n");
  sch_gen->add_option("--n", n)->required();
  sch_gen->add_option("-o,--output", out_file);
  sch_gen->callback([&] {
    const auto text = render_scheme(generate_paper_scheme(FamilyParams::make(n)));
    if (out_file.empty() && !machine) {
      // Bare scheme text so the output can be fed back to glue/check.
      raw = text;
      return;
    }
    doc.emplace(command);
    if (out_file.empty()) {
      std::istringstream lines(text);
      for (std::string l; std::getline(lines, l);) doc->line(l);
    } else {
      std::ofstream out(out_file);
      if (!(out << text)) throw std::runtime_error("cannot write '" + out_file + "'");
      doc->field("written", out_file);
    }
  });
  auto* sch_glue = scheme->add_subcommand("glue", "Glue a scheme file and report its invariants");
  bool allow_open = false;
  sch_glue->add_option("file", scheme_file)->required();
  sch_glue->add_flag("--allow-open", allow_open, "Accept schemes with unpaired faces");
  sch_glue->callback([&] {
    doc.emplace(command);
    describe_complex(*doc, glue(parse_scheme(read_file(scheme_file)), GlueOptions{allow_open}));
  });
  auto* sch_check = scheme->add_subcommand("check", "Validate a scheme file");
  sch_check->add_option("file", scheme_file)->required();
  sch_check->callback([&] {
    const auto s = parse_scheme(read_file(scheme_file));
    doc.emplace(command);
    doc->field("tets", std::to_string(s.tet_count()));
    doc->field("pairings", std::to_string(s.pairings().size()));
    doc->field("closed", yes_no(s.closed()));
    doc->check("scheme parses and validates", "scheme-format", true);
  });

  // fg
  auto* fg = app.add_subcommand("fg", "Subgroups of free groups")->require_subcommand(1);
  int rank = 2;
  std::string gens, word;
  for (const char* action : {"fold", "member", "rank", "index", "rep"}) {
    auto* sub = fg->add_subcommand(action);
    sub->add_option("--rank", rank)->required();
    sub->add_option("--gens", gens)->required();
    if (std::string(action) == "member" || std::string(action) == "rep") sub->add_option("--word", word)->required();
    sub->callback([&, action] { doc = fg_command(command, action, rank, gens, word); });
  }

  // double
  auto* dbl = app.add_subcommand("double", "Amalgamated doubles F_k *_H F_k")->require_subcommand(1);
  std::string h_gens;
  int samples = 1000;
  auto* dbl_nf = dbl->add_subcommand("nf", "Normal form of a syllable word");
  dbl_nf->add_option("--rank", rank)->required();
  dbl_nf->add_option("--H", h_gens)->required();
  dbl_nf->add_option("--word", word)->required();
  dbl_nf->callback([&] { doc = double_nf(command, rank, h_gens, word); });
  auto* dbl_fix = dbl->add_subcommand("fixtest", "Random check that the swap fixes exactly H");
  dbl_fix->add_option("--rank", rank)->required();
  dbl_fix->add_option("--H", h_gens)->required();
  dbl_fix->add_option("--samples", samples);
  dbl_fix->callback([&] { doc = double_fixtest(command, rank, h_gens, samples, seed()); });

  // iso
  auto* iso = app.add_subcommand("iso", "Isometries of hyperbolic 3-space")->require_subcommand(1);
  std::string m1, m2;
  bool rev1 = false, rev2 = false;
  double tol = 1e-9;
  auto* iso_cls = iso->add_subcommand("classify", "Classify one isometry");
  iso_cls->add_option("--m", m1)->required();
  iso_cls->add_flag("--rev", rev1, "Orientation reversing: z -> M conj(z)");
  iso_cls->add_option("--tol", tol);
  iso_cls->callback([&] {
    const auto cfg = ToleranceConfig::make(tol);
    doc.emplace(command);
    describe_isometry(*doc, "", Isometry::make(parse_matrix(m1), rev1), cfg);
  });
  auto* iso_fixed = iso->add_subcommand("fixed", "Fixed set on the sphere at infinity");
  iso_fixed->add_option("--m", m1)->required();
  iso_fixed->add_flag("--rev", rev1);
  iso_fixed->add_option("--tol", tol);
  iso_fixed->callback([&] {
    const auto cfg = ToleranceConfig::make(tol);
    doc.emplace(command);
    doc->field("fixed", fixed_set_text(fixed_points(Isometry::make(parse_matrix(m1), rev1), cfg)));
  });
  auto* iso_comm = iso->add_subcommand("commute", "Do two isometries commute, and why");
  iso_comm->add_option("--m1", m1)->required();
  iso_comm->add_option("--m2", m2)->required();
  iso_comm->add_flag("--rev1", rev1);
  iso_comm->add_flag("--rev2", rev2);
  iso_comm->add_option("--tol", tol);
  iso_comm->callback([&] {
    const auto cfg = ToleranceConfig::make(tol);
    const auto a = Isometry::make(parse_matrix(m1), rev1);
    const auto b = Isometry::make(parse_matrix(m2), rev2);
    doc.emplace(command);
    describe_isometry(*doc, "m1.", a, cfg);
    describe_isometry(*doc, "m2.", b, cfg);
    const bool c = commute(a, b, cfg);
    doc->field("commute", yes_no(c));
    if (!a.reversing && !b.reversing && !is_identity(a, cfg) && !is_identity(b, cfg)) {
      const auto crit = commuting_criterion(a, b, cfg);
      doc->field("criterion", to_string(crit));
      doc->check("commute iff a criterion applies", "commuting-criterion", c == (crit != CommutingCase::none));
    }
  });
  auto* iso_table = iso->add_subcommand("table", "Possible fixed subgroups by isometry type");
  bool preserving = false, reversing = false, closed = false, cusped = false, phi2id = false;
  iso_table->add_flag("--preserving", preserving);
  iso_table->add_flag("--reversing", reversing);
  iso_table->add_flag("--closed", closed);
  iso_table->add_flag("--cusped", cusped);
  iso_table->add_flag("--phi2id", phi2id, "The induced automorphism squares to the identity");
  iso_table->callback([&] {
    if (preserving == reversing) throw CLI::ValidationError("exactly one of --preserving, --reversing is required");
    if (closed && cusped) throw CLI::ValidationError("--closed and --cusped are exclusive");
    if (preserving && !closed && !cusped) throw CLI::ValidationError("--preserving needs --closed or --cusped");
    std::string s;
    for (auto t : fix_type_table(preserving, phi2id, closed)) s += (s.empty() ? "" : ",") + to_string(t);
    doc.emplace(command);
    doc->field("fix_types", "{" + s + "}");
  });

  // pres
  auto* pres = app.add_subcommand("pres", "Finite presentations")->require_subcommand(1);
  std::string rels;
  bool dual = false, simplify = false;
  auto* pres_scheme = pres->add_subcommand("from-scheme", "Presentation of a glued scheme");
  pres_scheme->add_option("file", scheme_file)->required();
  pres_scheme->add_flag("--dual", dual, "Use the dual spine (face pairings as generators)");
  pres_scheme->add_flag("--simplify", simplify, "Apply Tietze simplification");
  pres_scheme->callback([&] {
    const auto s = parse_scheme(read_file(scheme_file));
    const auto c = glue(s, GlueOptions{!dual});
    auto p = dual ? dual_presentation(c) : presentation_from_complex(c);
    if (simplify) p = tietze_simplify(p);
    doc.emplace(command);
    describe_presentation(*doc, p);
  });
  auto* pres_simp = pres->add_subcommand("simplify", "Tietze simplification");
  pres_simp->add_option("--rank", rank)->required();
  pres_simp->add_option("--rels", rels);
  pres_simp->callback([&] {
    const auto p = parse_presentation(rank, rels);
    const auto q = tietze_simplify(p);
    doc.emplace(command);
    describe_presentation(*doc, q);
    doc->check("h1 rank unchanged", "tietze-invariance", abelianization_rank(p) == abelianization_rank(q));
    doc->check("generator count not increased", "tietze-invariance", q.generators <= p.generators);
  });
  auto* pres_h1 = pres->add_subcommand("h1rank", "Rank of the abelianisation over Q");
  pres_h1->add_option("--rank", rank)->required();
  pres_h1->add_option("--rels", rels);
  pres_h1->callback([&] {
    doc.emplace(command);
    describe_presentation(*doc, parse_presentation(rank, rels));
  });

  // audit
  auto* audit = app.add_subcommand("audit", "Replay the rank inequality chain for one case");
  std::int64_t g = 0, m = 0, l = 0;
  bool orientable = true, separating = false, same_component = false;
  audit->add_option("--g", g)->required();
  audit->add_option("--m", m);
  audit->add_option("--l", l);
  audit->add_flag("--orientable,!--non-orientable", orientable, "Fixed surface orientability (default orientable)");
  audit->add_flag("--separating", separating);
  audit->add_flag("--same-component", same_component);
  audit->callback([&] {
    doc = audit_command(command, RankAuditCase::make(g, m, l, orientable, separating, same_component));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  if (raw) {
    std::cout << *raw;
    return 0;
  }
  if (!doc) {
    std::cerr << app.help();
    return 2;
  }
  std::cout << doc->render(machine);
  return doc->exit_status();
}
