#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "wzw/blocks.hpp"
#include "wzw/boundary.hpp"
#include "wzw/orbifold.hpp"
#include "wzw/serialize.hpp"

using namespace wzw;

namespace {

struct Options {
  std::string algebra;
  std::int64_t level = 1;
  std::string group = "center";
  std::string shift;
  bool swap = false;
  std::string insertions;
  int genus = 0;
  int m = 3;
  std::string tuple;
  int conjecture = 1;
  std::string orientation = "both";
  double tolerance = 1e-8;
  std::size_t weyl_cap = kDefaultWeylCap;
  std::string cache_dir;
  std::string format = "json";
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

int label_index(const ModularData& md, const std::string& name) {
  const int i = md.index_of(name);
  if (i < 0) throw Error(ErrorCode::InvalidInput, "unknown label " + name + " in " + md.name);
  return i;
}

std::vector<int> labels_of(const ModularData& md, const std::string& list) {
  std::vector<int> out;
  for (const auto& s : split(list, ';')) out.push_back(label_index(md, s));
  return out;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json header(const Options& o, const std::string& command) {
  Json j;
  j["command"] = command;
  j["version"] = WZW_VERSION;
  Json in;
  in["algebra"] = o.algebra;
  in["level"] = o.level;
  if (command == "extend" || command == "sweep" || (command == "trace" && o.conjecture == 1))
    in["group"] = o.group;
  if (command == "orbifold" || command == "boundary" || (command == "trace" && o.conjecture == 2)) {
    if (o.swap) in["swap"] = true;
    else in["shift"] = o.shift;
  }
  if (command == "trace") {
    in["conjecture"] = o.conjecture;
    in["insertions"] = o.insertions;
    in["genus"] = o.genus;
    if (!o.tuple.empty()) in["tuple"] = o.tuple;
  }
  if (command == "sweep") {
    in["genus"] = o.genus;
    in["m"] = o.m;
  }
  in["weyl_cap"] = o.weyl_cap;
  j["input"] = in;
  j["tolerance"] = o.tolerance;
  return j;
}

WzwTheory theory(const Options& o) {
  const auto algs = parse_algebras(o.algebra);
  if (algs.size() == 1 && !o.cache_dir.empty()) {
    ModularDataCache cache(o.cache_dir);
    WzwTheory t;
    t.algebras = algs;
    t.level = o.level;
    t.factors = {cache.get(algs[0], o.level, o.weyl_cap)};
    t.md = t.factors[0];
    return t;
  }
  return wzw_theory(algs, o.level, o.weyl_cap);
}

SimpleCurrentGroup current_group(const Options& o, const ModularData& md, const FusionRing& ring) {
  const SimpleCurrentGroup all = simple_currents(md, ring);
  if (o.group == "center") return all;
  if (o.group == "trivial") return subgroup(all, {md.vacuum});
  auto gens = labels_of(md, o.group);
  for (int l : gens)
    if (all.position(l) < 0)
      throw Error(ErrorCode::InvalidInput, md.labels[l] + " is not a simple current");
  return subgroup(all, gens);
}

Json modular_json(const ModularData& md) {
  Json j;
  j["labels"] = md.labels;
  j["vacuum"] = md.vacuum;
  j["c"] = to_string(md.c);
  j["Delta"] = rationals_json(md.delta);
  j["S"] = matrix_json(md.S);
  return j;
}

Json ring_json(const FusionRing& r, const ModularData& md) {
  Json n = Json::array();
  for (int l = 0; l < r.n; ++l)
    for (int m = 0; m < r.n; ++m)
      for (int v = 0; v < r.n; ++v)
        if (r(l, m, v) != 0) n.push_back({md.labels[l], md.labels[m], md.labels[v], r(l, m, v)});
  Json conj = Json::array();
  for (int c : r.conj) conj.push_back(md.labels[c]);
  return {{"N", n}, {"conjugation", conj}};
}

Json group_json(const SimpleCurrentGroup& g, const ModularData& md) {
  Json c = Json::array();
  for (int l : g.currents) c.push_back(md.labels[l]);
  Json j;
  j["currents"] = c;
  j["invariant_factors"] = invariant_factors(g.group);
  return j;
}

OrbifoldInput orbifold_input(const Options& o, const WzwTheory& t) {
  if (o.swap) return permutation_orbifold_input(t.md);
  if (t.algebras.size() != 1)
    throw Error(ErrorCode::InvalidInput, "inner orbifolds take a single simple algebra");
  std::vector<Rational> s;
  for (const auto& x : split(o.shift, ',')) s.push_back(parse_rational(x));
  return inner_orbifold_input(t.algebras[0], o.level, s, o.weyl_cap);
}

Json orbifold_json(const OrbifoldModularData& od) {
  Json labels = Json::array();
  for (std::size_t a = 0; a < od.kinds.size(); ++a) {
    const auto& k = od.kinds[a];
    labels.push_back({{"name", od.md.labels[a]},
                      {"kind", k.kind == OrbifoldKind::Orbit       ? "orbit"
                               : k.kind == OrbifoldKind::Untwisted ? "untwisted"
                                                                   : "twisted"},
                      {"psi", k.psi},
                      {"twist", k.kind == OrbifoldKind::Twisted ? 1 : 0}});
  }
  Json j;
  j["labels"] = labels;
  j["vacuum"] = od.md.vacuum;
  j["c"] = to_string(od.md.c);
  j["Delta"] = rationals_json(od.md.delta);
  j["S"] = matrix_json(od.md.S);
  j["P"] = matrix_json(od.P);
  j["half_T1_exponents"] = rationals_json(od.half_t1);
  j["flipped_branch"] = od.flipped_branch;
  Residuals r = od.residuals;
  r.emplace_back("S0_square_signed_permutation", od.s0_square_signed_permutation);
  r.emplace_back("P_square_vs_S0_square", od.p_square_vs_s0_square);
  j["residuals"] = residuals_json(r);
  return j;
}

Json run_modular_data(const Options& o) {
  const auto t = theory(o);
  const auto r = modular_residuals(t.md);
  require(r, o.tolerance, "modular data");
  Json j = header(o, "modular-data");
  j["modular_data"] = modular_json(t.md);
  j["residuals"] = residuals_json(r);
  return j;
}

Json run_fusion(const Options& o) {
  const auto t = theory(o);
  const auto ring = verlinde(t.md);
  Json j = header(o, "fusion");
  j["fusion"] = ring_json(ring, t.md);
  j["simple_currents"] = group_json(simple_currents(t.md, ring), t.md);
  return j;
}

Json run_check(const Options& o) {
  const auto t = theory(o);
  Residuals r = modular_residuals(t.md);
  const auto ring = verlinde(t.md);
  const auto v = ring_violations(ring);
  const auto g = simple_currents(t.md, ring);
  Json j = header(o, "check");
  j["residuals"] = residuals_json(r);
  j["ring_violations"] = {{"unit", v.unit},
                          {"commutativity", v.commutativity},
                          {"associativity", v.associativity},
                          {"conjugation", v.conjugation},
                          {"negativity", v.negativity}};
  j["simple_currents"] = group_json(g, t.md);
  if (t.algebras.size() == 1) {
    const auto c = center_group(t.algebras[0]);
    j["center_invariant_factors"] = c.factors;
    j["currents_match_center"] = invariant_factors(g.group) == c.factors;
  }
  require(r, o.tolerance, "modular data");
  if (v.total() != 0) throw Error(ErrorCode::InvariantFailure, "fusion ring axioms violated");
  return j;
}

Json run_extend(const Options& o) {
  const auto t = theory(o);
  const auto ring = verlinde(t.md);
  const auto g = current_group(o, t.md, ring);
  SJCache sj(t.sj_provider());
  const auto od = orbit_data(t.md, g, sj);
  const auto x = extended_smatrix(t.md, g, od, sj, o.tolerance);
  const IMat z = z_matrix(t.md, g, od);
  const auto zr = z_residuals(t.md, z);
  Json j = header(o, "extend");
  j["group"] = group_json(g, t.md);
  j["extended"] = modular_json(x.md);
  j["fixed_point_d"] = x.d;
  Json zj = Json::array();
  for (Eigen::Index a = 0; a < z.rows(); ++a)
    for (Eigen::Index b = 0; b < z.cols(); ++b)
      if (z(a, b) != 0) zj.push_back({t.md.labels[a], t.md.labels[b], z(a, b)});
  j["Z"] = zj;
  Residuals all = x.residuals;
  all.insert(all.end(), zr.begin(), zr.end());
  j["residuals"] = residuals_json(all);
  return j;
}

Json run_orbifold(const Options& o) {
  const auto t = theory(o);
  const auto in = orbifold_input(o, t);
  const auto od = assemble_orbifold(in, false, o.tolerance);
  Json j = header(o, "orbifold");
  j["orbifold"] = orbifold_json(od);
  j["dual_extension_labels"] = dual_extension_label_count(od);
  return j;
}

Json run_boundary(const Options& o) {
  const auto t = theory(o);
  const auto in = orbifold_input(o, t);
  const auto od = assemble_orbifold(in, false, o.tolerance);
  std::optional<CMat> block;
  if (!in.inner) block = antisymmetric_fixed_block(in, od);
  const auto b = orbifold_boundary(in, od, block, o.tolerance);
  const auto& a = b.algebra;
  const double table = match_up_to_relabeling(a.S_hat, z2_table_smatrix(in, od, b), od, b, o.tolerance);
  Json j = header(o, "boundary");
  j["hat_labels"] = a.hat_names;
  j["boundary_labels"] = a.boundary_names;
  j["S_hat"] = matrix_json(a.S_hat);
  Json n = Json::array();
  for (int l = 0; l < a.size(); ++l)
    for (int m = 0; m < a.size(); ++m)
      for (int v = 0; v < a.size(); ++v)
        if (std::abs(a(l, m, v)) > 1e-10)
          n.push_back({a.hat_names[l], a.hat_names[m], a.hat_names[v], complex_json(a(l, m, v))});
  j["N"] = n;
  j["reflection_coefficients"] = matrix_json(a.R);
  Json ideals = Json::array();
  for (std::size_t ty = 0; ty < b.ideals.types.size(); ++ty) {
    Json members = Json::array();
    for (int x = 0; x < a.size(); ++x)
      if (b.ideals.type_of[x] == static_cast<int>(ty)) members.push_back(a.boundary_names[x]);
    ideals.push_back({{"charges", rationals_json(b.ideals.types[ty])}, {"labels", members}});
  }
  j["ideals"] = ideals;
  Residuals r = a.residuals;
  r.emplace_back("ideal_orthogonality", b.ideals.residual);
  r.emplace_back("table_match", table);
  require(r, o.tolerance, "boundary data");
  j["residuals"] = residuals_json(r);
  return j;
}

Json trace_report_json(const TraceReport& r, const ModularData& md, const SimpleCurrentGroup& g) {
  Json tuples = Json::array();
  for (std::size_t i = 0; i < r.tuples.size(); ++i) {
    Json names = Json::array();
    for (int p : r.tuples[i]) names.push_back(md.labels[g.currents[p]]);
    tuples.push_back({{"tuple", names}, {"trace", complex_json(r.traces[i])}});
  }
  return {{"rank", r.rank},
          {"traces", tuples},
          {"dims", r.dims},
          {"traces_integral", r.traces_integral},
          {"dims_integral", r.dims_integral},
          {"dims_nonnegative", r.dims_nonnegative},
          {"dims_sum_to_rank", r.dims_sum_to_rank}};
}

Json run_trace(const Options& o) {
  const auto t = theory(o);
  const auto mu = labels_of(t.md, o.insertions);
  Json j = header(o, "trace");
  if (o.conjecture == 2) {
    const auto in = orbifold_input(o, t);
    Json reports = Json::array();
    for (auto ori : {Orientation::Forward, Orientation::Transposed}) {
      if (o.orientation != "both" && o.orientation != orientation_name(ori)) continue;
      const auto r = conjecture2_trace(in, mu, ori);
      reports.push_back({{"orientation", orientation_name(ori)},
                         {"rank", r.rank},
                         {"trace", complex_json(r.trace)},
                         {"dim_plus", complex_json(r.dim_plus)},
                         {"dim_minus", complex_json(r.dim_minus)},
                         {"integral", r.integral}});
    }
    j["conjecture2"] = reports;
    return j;
  }
  if (o.conjecture != 1) throw Error(ErrorCode::InvalidInput, "--conjecture takes 1 or 2");
  const auto ring = verlinde(t.md);
  const auto g = current_group(o, t.md, ring);
  SJCache sj(t.sj_provider());
  const auto od = orbit_data(t.md, g, sj);
  if (!o.tuple.empty()) {
    CurrentTuple tu;
    for (int l : labels_of(t.md, o.tuple)) {
      const int p = g.position(l);
      if (p < 0) throw Error(ErrorCode::InvalidInput, t.md.labels[l] + " is not in the group");
      tu.push_back(p);
    }
    j["trace"] = complex_json(conjecture1_trace(t.md, g, od, sj, o.genus, mu, tu));
    return j;
  }
  const auto r = trace_report(t.md, g, od, sj, o.genus, mu);
  j["conjecture1"] = trace_report_json(r, t.md, g);
  if (!r.holds())
    throw Error(ErrorCode::ConjectureViolation, "eigendimensions are not non-negative integers");
  return j;
}

std::string run_sweep(const Options& o, Json& summary) {
  const auto t = theory(o);
  const auto ring = verlinde(t.md);
  const auto g = current_group(o, t.md, ring);
  SJCache sj(t.sj_provider());
  const auto od = orbit_data(t.md, g, sj);
  SweepStats stats;
  const auto rows = sweep(o.algebra, o.level, t.md, g, od, sj, o.genus, o.m, stats);
  summary = header(o, "sweep");
  summary["insertions"] = stats.insertions;
  summary["traces"] = stats.traces;
  summary["integral_traces"] = stats.integral_traces;
  summary["violations"] = stats.violations;
  return sweep_csv(rows, t.md);
}

void print_pretty(const Json& j) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() || (value.is_array() && value.size() > 8))
      std::cout << key << ": " << value.dump().substr(0, 200) << (value.dump().size() > 200 ? " ..." : "")
                << "\n";
    else
      std::cout << key << ": " << value.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular data, extensions, orbifolds and boundary algebras of WZW models"};
  app.require_subcommand(1);
  Options o;
  if (const char* dir = std::getenv("WZW_CACHE_DIR")) o.cache_dir = dir;

  auto common = [&](CLI::App* s) {
    s->add_option("algebra", o.algebra, "X<rank>, or a product such as A1xA1")->required();
    s->add_option("--level,-k", o.level, "level")->required();
    s->add_option("--tolerance", o.tolerance, "invariant tolerance")->check(CLI::PositiveNumber);
    s->add_option("--weyl-cap", o.weyl_cap, "largest Weyl group enumerated");
    s->add_option("--cache-dir", o.cache_dir, "modular data cache (default $WZW_CACHE_DIR)");
    s->add_option("--format", o.format, "json | pretty | csv")
        ->check(CLI::IsMember({"json", "pretty", "csv"}));
  };
  auto group_opt = [&](CLI::App* s) {
    s->add_option("--group", o.group, "center, trivial, or generator labels separated by ';'");
  };
  auto orbifold_opt = [&](CLI::App* s) {
    s->add_option("--shift", o.shift, "coweight coordinates of s, comma separated");
    s->add_flag("--swap", o.swap, "swap orbifold of the tensor square");
  };

  auto* md = app.add_subcommand("modular-data", "Kac-Peterson S and T");
  common(md);
  auto* fu = app.add_subcommand("fusion", "Verlinde fusion ring and simple currents");
  common(fu);
  auto* ck = app.add_subcommand("check", "invariant suite");
  common(ck);
  auto* ex = app.add_subcommand("extend", "simple-current extension");
  common(ex);
  group_opt(ex);
  auto* ob = app.add_subcommand("orbifold", "Z2 orbifold modular data");
  common(ob);
  orbifold_opt(ob);
  auto* bd = app.add_subcommand("boundary", "classifying algebra of the Z2 orbifold");
  common(bd);
  orbifold_opt(bd);
  auto* tr = app.add_subcommand("trace", "trace formulas on chiral blocks");
  common(tr);
  group_opt(tr);
  orbifold_opt(tr);
  tr->add_option("--conjecture", o.conjecture, "1 (simple currents) or 2 (orbifold)");
  tr->add_option("--insertions", o.insertions, "labels separated by ';'")->required();
  tr->add_option("--genus", o.genus, "genus");
  tr->add_option("--tuple", o.tuple, "current labels separated by ';'");
  tr->add_option("--orientation", o.orientation, "forward | transposed | both")
      ->check(CLI::IsMember({"forward", "transposed", "both"}));
  auto* sw = app.add_subcommand("sweep", "trace sweep over all insertion tuples, as CSV");
  common(sw);
  group_opt(sw);
  sw->add_option("--genus", o.genus, "genus");
  sw->add_option("--insertions,-m", o.m, "number of insertions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    Json err{{"error", {{"code", "E_INVALID_INPUT"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 2;
  }

  try {
    Json out;
    if (sw->parsed()) {
      Json summary;
      const std::string csv = run_sweep(o, summary);
      if (o.format == "csv") std::cout << csv;
      else if (o.format == "pretty") print_pretty(summary);
      else std::cout << summary.dump(2) << "\n";
      return summary["violations"].get<std::size_t>() == 0 ? 0 : 1;
    }
    if (md->parsed()) out = run_modular_data(o);
    else if (fu->parsed()) out = run_fusion(o);
    else if (ck->parsed()) out = run_check(o);
    else if (ex->parsed()) out = run_extend(o);
    else if (ob->parsed()) out = run_orbifold(o);
    else if (bd->parsed()) out = run_boundary(o);
    else if (tr->parsed()) out = run_trace(o);
    if (o.format == "pretty") print_pretty(out);
    else std::cout << out.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    Json err{{"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}};
    if (e.residual() != 0.0) err["error"]["residual"] = e.residual();
    if (const auto* cap = dynamic_cast<const CapExceeded*>(&e)) err["error"]["partial"] = cap->partial();
    std::cout << err.dump(2) << "\n";
    return e.code() == ErrorCode::InvalidInput ? 2 : 1;
  }
}
