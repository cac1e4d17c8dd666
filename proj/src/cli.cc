// Copyright 2026 The gf2crit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gf2crit/cli.h"

#include <fstream>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "gf2crit/constructions.h"
#include "gf2crit/errors.h"
#include "gf2crit/harness.h"
#include "gf2crit/matroid.h"
#include "gf2crit/pointset_io.h"
#include "gf2crit/regularity.h"
#include "gf2crit/report.h"
#include "gf2crit/spectrum.h"

namespace gf2crit {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::kPass: return exit_code::kOk;
    case Verdict::kFail: return exit_code::kCheckFailed;
    case Verdict::kHypothesisNotMet: return exit_code::kHypothesisNotMet;
    case Verdict::kBudgetExhausted: return exit_code::kBudget;
  }
  return exit_code::kCheckFailed;
}

int emit_report(const Report& report, bool json, std::ostream& out) {
  if (json) {
    out << to_json(report).dump() << "\n";
  } else {
    out << render_text(report);
  }
  return exit_for(report.verdict);
}

Rational parse_eps(const std::string& text) {
  Rational eps;
  try {
    eps = parse_rational(text);
  } catch (const Error&) {
    throw UsageError("--eps: not a number: '" + text + "'");
  }
  if (!(eps > 0 && eps < Rational(1, 2))) {
    throw UsageError("--eps must satisfy 0 < eps < 1/2, got " + text);
  }
  return eps;
}

Json bit_strings(std::span<const Mask> xs, int dim) {
  Json out = Json::array();
  for (Mask x : xs) out.push_back(to_bit_string(x, dim));
  return out;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOptions {
  std::string file;
  bool chi = false;
  bool girth = false;
  bool triangles = false;
  bool uniformity = false;
  bool density = false;
  bool classify = false;
  bool all = false;
  bool json = false;
};

void add_analyze(CLI::App& app, AnalyzeOptions& o) {
  CLI::App* cmd = app.add_subcommand("analyze", "Invariants of a point-set file");
  cmd->add_option("file", o.file, "Point-set file")->required();
  cmd->add_flag("--chi", o.chi, "Critical number");
  cmd->add_flag("--girth", o.girth, "Smallest circuit size");
  cmd->add_flag("--triangles", o.triangles, "Number of triangles");
  cmd->add_flag("--uniformity", o.uniformity, "Uniformity defect");
  cmd->add_flag("--density", o.density, "|X| / 2^rank");
  cmd->add_flag("--classify", o.classify, "N0 / N14 / N12 class when chi = 2");
  cmd->add_flag("--all", o.all, "Everything above (default)");
  cmd->add_flag("--json", o.json, "One JSON object");
}

int run_analyze(const AnalyzeOptions& o, std::ostream& out) {
  const PointSet x = read_pointset_file(o.file);
  const bool none = !(o.chi || o.girth || o.triangles || o.uniformity || o.density ||
                      o.classify);
  const bool all = o.all || none;
  Json j;
  j["file"] = o.file;
  j["dim"] = x.dim();
  j["size"] = x.size();
  std::vector<std::string> text;
  std::optional<int> chi;
  auto need_chi = [&] {
    if (!chi) chi = critical_number(x);
    return *chi;
  };
  if (all || o.chi) {
    j["chi"] = need_chi();
    text.push_back("chi=" + std::to_string(*chi));
  }
  if (all || o.girth) {
    const std::optional<int> g = girth(x);
    j["girth"] = g ? Json(*g) : Json(nullptr);
    text.push_back("girth=" + (g ? std::to_string(*g) : std::string("none")));
  }
  if (all || o.triangles) {
    const std::uint64_t t = triangle_count(x);
    j["triangles"] = t;
    text.push_back("triangles=" + std::to_string(t));
  }
  if (all || o.uniformity) {
    const std::string u = to_string(uniformity_defect(x));
    j["uniformity"] = u;
    text.push_back("uniformity=" + u);
  }
  if (all || o.density) {
    const std::string d = to_string(density(x));
    j["density"] = d;
    text.push_back("density=" + d);
  }
  if (all || o.classify) {
    if (need_chi() == 2) {
      const Crit2Class cls = classify_crit2(x);
      Json c;
      c["class"] = std::string(crit2_kind_name(cls.kind));
      if (cls.witness) {
        c["flat_basis"] = bit_strings(cls.witness->flat.basis(), x.dim());
        c["members"] = bit_strings(cls.witness->members, x.dim());
      }
      j["class"] = c;
      text.push_back("class=" + std::string(crit2_kind_name(cls.kind)));
    } else {
      j["class"] = nullptr;
      text.push_back("class=n/a");
    }
  }
  if (o.json) {
    out << j.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) out << (i ? " " : "") << text[i];
    out << "\n";
  }
  return exit_code::kOk;
}

// -------------------------------------------------------------- construct

struct ConstructOptions {
  std::string kind;
  int r = 3;
  int c = 1;
  int n = 4;
  std::optional<int> g;
  std::optional<int> s;
  int w = 0;
  int m = 0;
  std::uint64_t seed = 1;
  int max_attempts = 1000;
  bool preset = false;
  std::string base;
  std::string output;
};

void add_construct(CLI::App& app, ConstructOptions& o) {
  CLI::App* cmd = app.add_subcommand("construct", "Generate a point set");
  cmd->add_option("kind", o.kind, "pg | ag | mcn | quarter | half | girthgen | embed")
      ->required()
      ->check(CLI::IsMember({"pg", "ag", "mcn", "quarter", "half", "girthgen", "embed"}));
  cmd->add_option("--r", o.r, "Rank (pg, ag) or restriction-rank bound (quarter, half)");
  cmd->add_option("--c", o.c, "Critical-number parameter");
  cmd->add_option("--n", o.n, "Dimension parameter");
  cmd->add_option("--g", o.g, "Girth target (default r + 2 for quarter and half)");
  cmd->add_option("--s", o.s, "Weight slack for quarter (default 2 c g)");
  cmd->add_option("--w", o.w, "Weight floor for girthgen");
  cmd->add_option("--m", o.m, "Samples per attempt (0 picks a default)");
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_option("--max-attempts", o.max_attempts, "Attempt budget");
  cmd->add_flag("--preset", o.preset, "girthgen: derive w and m from n, g, c");
  cmd->add_option("--base", o.base, "Base point-set file (quarter, half, embed)");
  cmd->add_option("-o,--output", o.output, "Output file; also writes <output>.json");
}

int run_construct(const ConstructOptions& o, std::ostream& out) {
  PointSet result;
  Json params;
  if (o.kind == "pg") {
    result = pg(o.r);
    params = {{"kind", "pg"}, {"r", o.r}};
  } else if (o.kind == "ag") {
    result = ag(o.r);
    params = {{"kind", "ag"}, {"r", o.r}};
  } else if (o.kind == "mcn") {
    result = mcn({o.c, o.n});
    params = {{"kind", "mcn"}, {"c", o.c}, {"n", o.n}};
  } else if (o.kind == "girthgen") {
    GirthGenParams p;
    if (o.preset) {
      p = GirthGenParams::coupled_preset(o.n, o.g.value_or(4), o.c, o.seed);
    } else {
      p.n = o.n;
      p.g = o.g.value_or(4);
      p.c = o.c;
      p.w = o.w;
      p.m = o.m > 0 ? o.m : 12;
      p.seed = o.seed;
    }
    p.max_attempts = o.max_attempts;
    const GirthGenResult r = random_high_girth(p);
    result = r.set;
    params = {{"kind", "girthgen"}, {"n", p.n}, {"g", p.g}, {"c", p.c},
              {"w", p.w}, {"m", p.m}, {"seed", p.seed},
              {"max_attempts", p.max_attempts}, {"attempts", r.stats.attempts}};
  } else if (o.kind == "quarter") {
    QuarterParams p;
    p.c = o.c;
    p.r = o.r;
    p.n = o.n;
    p.g = o.g;
    p.s = o.s;
    if (!o.base.empty()) p.base = read_pointset_file(o.base);
    p.seed = o.seed;
    p.m = o.m;
    p.max_attempts = o.max_attempts;
    ConstructionResult r = construction_quarter(p);
    result = std::move(r.set);
    params = std::move(r.params);
  } else if (o.kind == "half") {
    HalfParams p;
    p.c = o.c;
    p.r = o.r;
    p.n = o.n;
    p.g = o.g;
    if (!o.base.empty()) p.base = read_pointset_file(o.base);
    p.seed = o.seed;
    p.m = o.m;
    p.max_attempts = o.max_attempts;
    ConstructionResult r = construction_half(p);
    result = std::move(r.set);
    params = std::move(r.params);
  } else {
    if (o.base.empty()) throw UsageError("construct embed requires --base FILE");
    const PointSet base = read_pointset_file(o.base);
    result = embed_mainlb(base, o.c);
    params = {{"kind", "embed"}, {"c", o.c}, {"base", bit_strings(base.points(), base.dim())}};
  }
  params["dim"] = result.dim();
  params["size"] = result.size();
  if (o.output.empty()) {
    out << render_pointset(result);
    return exit_code::kOk;
  }
  write_pointset_file(o.output, result);
  const std::string sidecar = o.output + ".json";
  std::ofstream side(sidecar);
  if (!side) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + sidecar + "'");
  side << params.dump(2) << "\n";
  out << "wrote " << result.size() << " points to " << o.output << "\n";
  return exit_code::kOk;
}

// ------------------------------------------------------------- regularity

struct RegularityOptions {
  std::string file;
  std::string eps = "0.25";
  std::optional<int> max_codim;
  bool json = false;
};

void add_regularity(CLI::App& app, RegularityOptions& o) {
  CLI::App* cmd =
      app.add_subcommand("regularity", "Find an eps-regular subspace by refinement");
  cmd->add_option("file", o.file, "Point-set file")->required();
  cmd->add_option("--eps", o.eps, "0 < eps < 1/2; decimal or a/b");
  cmd->add_option("--max-codim", o.max_codim, "Codimension budget (default dim)");
  cmd->add_flag("--json", o.json, "One JSON object");
}

Json trace_json(const std::vector<RefinementStep>& trace, int dim) {
  Json out = Json::array();
  for (const RefinementStep& s : trace) {
    out.push_back({{"coset", to_bit_string(s.coset, dim)},
                   {"character", to_bit_string(s.character, dim)},
                   {"defect", to_string(s.defect)},
                   {"energy_before", to_string(s.energy_before)},
                   {"energy_after", to_string(s.energy_after)},
                   {"codim", s.codim_after}});
  }
  return out;
}

void print_trace(const std::vector<RefinementStep>& trace, int dim, std::ostream& out) {
  out << "trace:\n";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const RefinementStep& s = trace[i];
    out << "  step " << i + 1 << ": coset=" << to_bit_string(s.coset, dim)
        << " character=" << to_bit_string(s.character, dim)
        << " defect=" << to_string(s.defect) << " energy="
        << to_string(s.energy_before) << "->" << to_string(s.energy_after)
        << " codim=" << s.codim_after << "\n";
  }
}

int run_regularity(const RegularityOptions& o, std::ostream& out) {
  const Rational eps = parse_eps(o.eps);
  const PointSet x = read_pointset_file(o.file);
  const int max_codim = o.max_codim.value_or(x.dim());
  if (max_codim < 0) throw UsageError("--max-codim must be >= 0");
  try {
    const RegularityResult r = find_regular_subspace(x, eps, max_codim);
    const int dim = x.dim();
    if (o.json) {
      Json j = {{"eps", to_string(eps)},
                {"codim", r.h.codim()},
                {"basis", bit_strings(r.h.basis(), dim)},
                {"regular", r.certificate.regular},
                {"bad_cosets", bit_strings(r.certificate.bad_cosets, dim)},
                {"bad_mass", to_string(r.certificate.bad_mass)},
                {"trace", trace_json(r.trace, dim)}};
      out << j.dump() << "\n";
    } else {
      out << "codim=" << r.h.codim() << "\n";
      out << "basis:\n";
      for (Mask row : r.h.basis()) out << "  " << to_bit_string(row, dim) << "\n";
      out << "bad_cosets:";
      for (Mask v : r.certificate.bad_cosets) out << " " << to_bit_string(v, dim);
      out << "\nbad_mass=" << to_string(r.certificate.bad_mass) << "\n";
      print_trace(r.trace, dim, out);
    }
    return exit_code::kOk;
  } catch (const MaxCodimExceeded& e) {
    if (o.json) {
      out << Json{{"error", e.what()}, {"trace", trace_json(e.trace(), x.dim())}}.dump()
          << "\n";
    } else {
      out << "error: " << e.what() << "\n";
      print_trace(e.trace(), x.dim(), out);
    }
    return exit_code::kBudget;
  }
}

// ----------------------------------------------------------------- verify

struct VerifyOptions {
  struct {
    int n = 6;
    int trials = 100;
    std::uint64_t seed = 1;
  } tri;
  struct {
    int n = 10;
    std::string eps = "0.1";
    int trials = 50;
    std::uint64_t seed = 1;
  } sum;
  struct {
    int c = 1;
    int n_from = 4;
    int n_to = 12;
  } mcn;
  struct {
    int c = 1;
    int s = 2;
    int n = 8;
    int trials = 20;
    std::uint64_t seed = 1;
  } ns;
  int r_cap = 6;
  bool json = false;
};

void add_verify(CLI::App& app, VerifyOptions& o) {
  CLI::App* cmd = app.add_subcommand("verify", "Run a named verification check");
  cmd->require_subcommand(1);
  auto json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "One JSON object"); };
  CLI::App* tri = cmd->add_subcommand("trifreevectors", "Pair completions above 2^{n-1}");
  tri->add_option("--n", o.tri.n, "Dimension (<= 12)");
  tri->add_option("--trials", o.tri.trials, "Random sets");
  tri->add_option("--seed", o.tri.seed, "Random seed");
  json(tri);
  CLI::App* sum = cmd->add_subcommand("sumlemma", "Zero-sum triple bound for uniform sets");
  sum->add_option("--n", o.sum.n, "Dimension (<= 14)");
  sum->add_option("--eps", o.sum.eps, "0 < eps < 1/2");
  sum->add_option("--trials", o.sum.trials, "Random triples");
  sum->add_option("--seed", o.sum.seed, "Random seed");
  json(sum);
  CLI::App* m = cmd->add_subcommand("mcn", "Triangle-free sweep over mcn(c, n)");
  m->add_option("--c", o.mcn.c, "c");
  m->add_option("--n-from", o.mcn.n_from, "First n");
  m->add_option("--n-to", o.mcn.n_to, "Last n");
  json(m);
  CLI::App* ns = cmd->add_subcommand("nullspace", "Low-weight solutions of Wx = Wv");
  ns->add_option("--c", o.ns.c, "Rows of W");
  ns->add_option("--s", o.ns.s, "Weight bound");
  ns->add_option("--n", o.ns.n, "Columns of W");
  ns->add_option("--trials", o.ns.trials, "Random (W, v) pairs");
  ns->add_option("--seed", o.ns.seed, "Random seed");
  json(ns);
  CLI::App* th = cmd->add_subcommand("threshold", "Embedding identity and flat complements");
  th->add_option("--r-cap", o.r_cap, "Largest base rank");
  json(th);
}

int run_verify(CLI::App& verify, const VerifyOptions& o, std::ostream& out) {
  if (verify.got_subcommand("trifreevectors")) {
    return emit_report(verify_trifreevectors(o.tri.n, o.tri.trials, o.tri.seed), o.json,
                       out);
  }
  if (verify.got_subcommand("sumlemma")) {
    const Rational eps = parse_eps(o.sum.eps);
    return emit_report(verify_sumlemma(o.sum.n, eps, o.sum.trials, o.sum.seed), o.json,
                       out);
  }
  if (verify.got_subcommand("mcn")) {
    return emit_report(verify_mcn(o.mcn.c, o.mcn.n_from, o.mcn.n_to), o.json, out);
  }
  if (verify.got_subcommand("nullspace")) {
    return emit_report(
        verify_nullspace(o.ns.c, o.ns.s, o.ns.n, o.ns.trials, o.ns.seed), o.json, out);
  }
  return emit_report(verify_threshold_examples(o.r_cap), o.json, out);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of simple binary matroids over GF(2)", "gf2crit"};
  app.require_subcommand(1);
  AnalyzeOptions analyze;
  ConstructOptions construct;
  RegularityOptions regularity;
  VerifyOptions verify;
  add_analyze(app, analyze);
  add_construct(app, construct);
  add_regularity(app, regularity);
  add_verify(app, verify);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }
  try {
    if (app.got_subcommand("analyze")) return run_analyze(analyze, out);
    if (app.got_subcommand("construct")) return run_construct(construct, out);
    if (app.got_subcommand("regularity")) return run_regularity(regularity, out);
    return run_verify(*app.get_subcommand("verify"), verify, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const CostCeilingExceeded& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kCostCeiling;
  } catch (const GenerationBudgetExhausted& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kParse: return exit_code::kParse;
      case ErrorCode::kGenerationBudgetExhausted:
      case ErrorCode::kMaxCodimExceeded: return exit_code::kBudget;
      default: return exit_code::kUsage;
    }
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"gf2crit"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gf2crit
