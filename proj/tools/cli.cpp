// Copyright 2026 The posmap Authors
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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "posmap/dynamics.hpp"
#include "posmap/errors.hpp"
#include "posmap/io.hpp"
#include "posmap/maps.hpp"
#include "posmap/measures.hpp"
#include "posmap/states.hpp"

namespace posmap::cli {

namespace {

struct Globals {
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string out_path;
  std::string format = "json";
};

struct StateMakeArgs {
  std::string family;
  int k = 1;
  double p = 0.0;
  double f = 0.0;
  std::size_t d = 2;
  std::size_t d1 = 2;
  std::size_t d2 = 2;
  std::size_t m = 5;
  std::size_t rank = 1;
  std::string first;
  std::string second;
  // gibbs
  std::string model = "ising";
  int sites = 2;
  double j = 1.0;
  double h = 1.0;
  double delta = 1.0;
  double beta = 1.0;
};

struct BudgetArgs {
  std::size_t ensemble_size = 0;
  int restarts = 32;
  int iters = 300;
  bool strict = false;
};

struct MapArgs {
  std::string catalog;
  std::string choi_path;
  std::size_t d = 2;
  double lambda = 1.0;
  std::string input;
};

struct EvolveArgs {
  std::string state_path;
  std::string family = "depolarizing_flow";
  double rate = 1.0;
  double speed = 1.0;
  double t_max = 1.0;
  int steps = 20;
  bool eof = false;
  bool dcoef_sup = false;
  std::string model = "ising";
  double j = 1.0;
  double h = 1.0;
  double delta = 1.0;
  double beta = 1.0;
};

/// Ten significant digits, '.' decimal point.
std::string num(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 10);
  return std::string(buf, res.ptr);
}

const char* flag(bool b) { return b ? "true" : "false"; }

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  Globals globals;

  /// Writes the primary artifact to --out, or to stdout without it.
  void emit_artifact(const std::string& text) {
    if (globals.out_path.empty())
      out_ << text;
    else
      write_text_file(globals.out_path, text);
  }

  /// Prints a summary line and writes the full report to --out if given.
  void emit_summary(const std::string& line, const Json& report) {
    out_ << line << '\n';
    if (!globals.out_path.empty()) write_text_file(globals.out_path, report.dump(2) + '\n');
  }

  void require_json(const char* command) const {
    if (globals.format != "json")
      throw InvalidArgument(std::string(command) + " only supports --format json");
  }

  SearchOptions search(const BudgetArgs& b) const {
    SearchOptions o;
    o.ensemble_size = b.ensemble_size;
    o.restarts = b.restarts;
    o.iters = b.iters;
    o.tol = globals.tol;
    o.seed = globals.seed;
    return o;
  }

  int state_make(const StateMakeArgs& a) {
    require_json("state make");
    DensityMatrix state = a.family == "gibbs" ? make_gibbs(a) : make_named(a.family, named(a));
    emit_artifact(state_to_json(state).dump(2) + '\n');
    return kExitOk;
  }

  int state_info(const std::string& path) {
    require_json("state info");
    const DensityMatrix state = state_from_json(read_json_file(path));
    const double trace = state.matrix().trace().real();
    const std::size_t rank = numerical_rank(state);
    const double s = von_neumann_entropy(state);
    const double s1 = von_neumann_entropy(restrict_to(state, Leg::first));
    const double s2 = von_neumann_entropy(restrict_to(state, Leg::second));
    Json report = {{"d1", state.split().d1}, {"d2", state.split().d2}, {"trace", trace},
                   {"rank", rank},           {"entropy", s},           {"entropy_1", s1},
                   {"entropy_2", s2}};
    emit_summary("trace=" + num(trace) + " rank=" + std::to_string(rank) +
                     " entropy=" + num(s) + " entropy_1=" + num(s1) + " entropy_2=" + num(s2),
                 report);
    return kExitOk;
  }

  int measure(const std::string& which, const std::string& path, const BudgetArgs& b) {
    require_json("measure");
    const DensityMatrix state = state_from_json(read_json_file(path));
    if (which == "ppt") {
      const PptResult r = ppt_test(state);
      Json report = {{"min_eigenvalue", r.min_eigenvalue},
                     {"npt", r.npt},
                     {"conclusive", r.conclusive},
                     {"eigenvector", certificate_to_json(r.eigenvector)}};
      emit_summary("lambda_min=" + num(r.min_eigenvalue) + " verdict=" +
                       (r.npt ? "NPT" : "PPT") + (r.conclusive ? "" : " conclusive=false"),
                   report);
      return kExitOk;
    }
    if (which == "negativity") {
      const double n = negativity(state);
      emit_summary("negativity=" + num(n), Json{{"value", n}});
      return kExitOk;
    }
    const MeasureReport r = which == "eof" ? eof_upper(state, search(b)) : dcoef_sup(state, search(b));
    const char* label = which == "eof" ? "eof_upper=" : "dcoef_sup=";
    emit_summary(label + num(r.value) + " converged=" + flag(r.converged) +
                     " restarts_used=" + std::to_string(r.restarts_used),
                 report_to_json(r));
    if (b.strict && !r.converged) {
      err_ << "posmap: search did not converge within the budget\n";
      return kExitNotConverged;
    }
    return kExitOk;
  }

  int map_make(const MapArgs& a) {
    require_json("map make");
    emit_artifact(choi_to_json(load_map(a)).dump(2) + '\n');
    return kExitOk;
  }

  int map_check(const MapArgs& a) {
    require_json("map check");
    const ChoiMatrix choi = load_map(a);
    BlockPositivityOptions bo;
    bo.seed = globals.seed;
    const auto cp = is_cp(choi, globals.tol);
    const auto co = is_co_cp(choi, globals.tol);
    const auto bp = is_block_positive(choi, bo);
    const auto dec = is_decomposable(choi, {});
    const char* verdict = dec.verdict == Decomposability::decomposable       ? "true"
                          : dec.verdict == Decomposability::not_decomposable ? "false"
                                                                             : "indeterminate";
    Json report = {{"d_in", choi.d_in()},
                   {"d_out", choi.d_out()},
                   {"block_positive", bp.positive},
                   {"block_minimum", bp.minimum},
                   {"cp", cp.holds},
                   {"cp_min_eigenvalue", cp.min_eigenvalue},
                   {"co_cp", co.holds},
                   {"co_cp_min_eigenvalue", co.min_eigenvalue},
                   {"decomposable", verdict},
                   {"residual", dec.residual},
                   {"iterations", dec.iterations}};
    emit_summary(std::string("block_positive=") + flag(bp.positive) + " cp=" + flag(cp.holds) +
                     " co_cp=" + flag(co.holds) + " decomposable=" + verdict +
                     " residual=" + num(dec.residual) + " block_min=" + num(bp.minimum) +
                     " cp_min=" + num(cp.min_eigenvalue) + " co_cp_min=" + num(co.min_eigenvalue),
                 report);
    return kExitOk;
  }

  int map_apply(const MapArgs& a) {
    require_json("map apply");
    const ChoiMatrix choi = load_map(a);
    const ComplexMatrix x = matrix_from_json(read_json_file(a.input));
    if (x.dim() != choi.d_in())
      throw DimensionError("input has dim " + std::to_string(x.dim()) + ", map expects " +
                           std::to_string(choi.d_in()));
    Json j = {{"dim", choi.d_out()}};
    j.update(matrix_to_json(apply_map(choi, x)));
    emit_artifact(j.dump(2) + '\n');
    return kExitOk;
  }

  int evolve(const EvolveArgs& a) {
    if (globals.format != "json" && globals.format != "csv")
      throw InvalidArgument("--format must be json or csv");
    const DensityMatrix state = state_from_json(read_json_file(a.state_path));
    FamilyParams fp;
    fp.d = state.split().d1;
    fp.rate = a.rate;
    fp.speed = a.speed;
    fp.beta = a.beta;
    if (a.family == "glauber_flip") fp.hamiltonian = chain_for_leg(a, fp.d);
    const ChannelFamily family = family_catalog(a.family, fp);

    TrackOptions to;
    to.eof = a.eof;
    to.dcoef_sup = a.dcoef_sup;
    to.search.tol = globals.tol;
    to.search.seed = globals.seed;
    const auto grid = uniform_grid(a.t_max, a.steps);
    const TrackRecord record = evolve_track(state, family, grid, to);

    emit_artifact(globals.format == "csv" ? track_to_csv(record)
                                          : track_to_json(record).dump(2) + '\n');
    const std::string line =
        record.first_negative_time
            ? "first_negative_time=" + num(*record.first_negative_time)
            : std::string("first_negative_time=none");
    // keep stdout parseable when it carries the record
    (globals.out_path.empty() ? err_ : out_) << line << '\n';
    return kExitOk;
  }

 private:
  std::ostream& out_;
  std::ostream& err_;

  NamedParams named(const StateMakeArgs& a) const {
    NamedParams p;
    p.k = a.k;
    p.p = a.p;
    p.f = a.f;
    p.d = a.d;
    p.split = {a.d1, a.d2};
    p.components = a.m;
    p.rank = a.rank;
    p.seed = globals.seed;
    if (a.family == "product") {
      if (a.first.empty() || a.second.empty())
        throw InvalidArgument("product needs --first and --second state files");
      p.first = state_from_json(read_json_file(a.first));
      p.second = state_from_json(read_json_file(a.second));
    }
    return p;
  }

  static ComplexMatrix chain(const std::string& model, int sites, double j, double h,
                             double delta) {
    if (model == "ising") return ising_hamiltonian(sites, j, h);
    if (model == "xxz") return xxz_hamiltonian(sites, j, delta);
    throw InvalidArgument("unknown model '" + model + "' (ising|xxz)");
  }

  static DensityMatrix make_gibbs(const StateMakeArgs& a) {
    const DensityMatrix g = gibbs_state(chain(a.model, a.sites, a.j, a.h, a.delta), a.beta);
    const std::size_t d1 = a.d1;
    if (d1 == 0 || g.dim() % d1 != 0)
      throw InvalidArgument("--d1 must divide 2^sites");
    return DensityMatrix(g.matrix(), Split{d1, g.dim() / d1});
  }

  static ComplexMatrix chain_for_leg(const EvolveArgs& a, std::size_t d) {
    int sites = 0;
    while ((std::size_t{1} << sites) < d) ++sites;
    if ((std::size_t{1} << sites) != d || sites < 2)
      throw InvalidArgument("glauber_flip needs leg 1 of dimension 2^n with n >= 2");
    return chain(a.model, sites, a.j, a.h, a.delta);
  }

  static ChoiMatrix load_map(const MapArgs& a) {
    if (a.catalog.empty() == a.choi_path.empty())
      throw InvalidArgument("give exactly one of --catalog NAME or a Choi JSON path");
    if (!a.catalog.empty()) {
      CatalogParams cp;
      cp.d = a.d;
      cp.lambda = a.lambda;
      return catalog(a.catalog, cp);
    }
    return choi_from_json(read_json_file(a.choi_path));
  }
};

void add_map_source(CLI::App* cmd, MapArgs& a) {
  cmd->add_option("choi", a.choi_path, "Choi matrix JSON file");
  cmd->add_option("--catalog", a.catalog,
                  "identity|transpose|depolarizing|reduction|choi_map|werner_holevo");
  cmd->add_option("--d", a.d, "Dimension for catalog maps");
  cmd->add_option("--lambda", a.lambda, "Depolarizing parameter");
}

void add_budget(CLI::App* cmd, BudgetArgs& b) {
  cmd->add_option("--K", b.ensemble_size, "Ensemble size (0: rank^2)");
  cmd->add_option("--restarts", b.restarts, "Random restarts")->check(CLI::PositiveNumber);
  cmd->add_option("--iters", b.iters, "Sweeps per restart")->check(CLI::PositiveNumber);
  cmd->add_flag("--strict", b.strict, "Exit 3 if the search does not converge");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  StateMakeArgs make;
  std::string info_path, measure_path;
  BudgetArgs budget;
  MapArgs map;
  EvolveArgs evolve;
  std::function<int()> action;

  CLI::App app{"Positive maps and bipartite entanglement toolkit", "posmap"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", runner.globals.seed, "Seed for all random streams");
  app.add_option("--tol", runner.globals.tol, "Numerical tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", runner.globals.out_path, "Output file");
  app.add_option("--format", runner.globals.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* state = app.add_subcommand("state", "Build or inspect states")->require_subcommand(1);
  auto* state_make = state->add_subcommand("make", "Write a named state as JSON");
  state_make->add_option("--family", make.family,
                         "bell|werner|isotropic|max_mixed|product|random_separable|"
                         "random_density|gibbs")
      ->required();
  state_make->add_option("--k", make.k, "Bell index 1..4");
  state_make->add_option("--p", make.p, "Werner weight");
  state_make->add_option("--f", make.f, "Isotropic weight");
  state_make->add_option("--d", make.d, "Isotropic local dimension");
  state_make->add_option("--d1", make.d1, "Leg 1 dimension");
  state_make->add_option("--d2", make.d2, "Leg 2 dimension");
  state_make->add_option("--m", make.m, "Components of random_separable");
  state_make->add_option("--rank", make.rank, "Rank of random_density");
  state_make->add_option("--first", make.first, "Leg 1 factor of product");
  state_make->add_option("--second", make.second, "Leg 2 factor of product");
  state_make->add_option("--model", make.model, "gibbs: ising|xxz");
  state_make->add_option("--sites", make.sites, "gibbs: chain length");
  state_make->add_option("--J", make.j, "gibbs: coupling");
  state_make->add_option("--field", make.h, "gibbs: transverse field");
  state_make->add_option("--delta", make.delta, "gibbs: anisotropy");
  state_make->add_option("--beta", make.beta, "gibbs: inverse temperature");
  state_make->callback([&] { action = [&] { return runner.state_make(make); }; });

  auto* state_info = state->add_subcommand("info", "Trace, rank and entropies of a state");
  state_info->add_option("path", info_path, "State JSON file")->required();
  state_info->callback([&] { action = [&] { return runner.state_info(info_path); }; });

  auto* measure = app.add_subcommand("measure", "Entanglement probes and measures")
                      ->require_subcommand(1);
  for (const char* which : {"ppt", "negativity", "eof", "dcoef-sup"}) {
    auto* cmd = measure->add_subcommand(which);
    cmd->add_option("path", measure_path, "State JSON file")->required();
    add_budget(cmd, budget);
    const std::string name = which;
    cmd->callback([&, name] { action = [&, name] { return runner.measure(name, measure_path, budget); }; });
  }

  auto* map_cmd = app.add_subcommand("map", "Positive map analysis")->require_subcommand(1);
  auto* map_make = map_cmd->add_subcommand("make", "Write a catalog map's Choi matrix");
  add_map_source(map_make, map);
  map_make->callback([&] { action = [&] { return runner.map_make(map); }; });
  auto* map_check = map_cmd->add_subcommand("check", "CP, co-CP, block positivity, decomposability");
  add_map_source(map_check, map);
  map_check->callback([&] { action = [&] { return runner.map_check(map); }; });
  auto* map_apply = map_cmd->add_subcommand("apply", "Apply a map to a matrix");
  add_map_source(map_apply, map);
  map_apply->add_option("--input", map.input, "Matrix or state JSON")->required();
  map_apply->callback([&] { action = [&] { return runner.map_apply(map); }; });

  auto* ev = app.add_subcommand("evolve", "Track a state under (alpha_t (x) id)^d");
  ev->add_option("path", evolve.state_path, "State JSON file")->required();
  ev->add_option("--family", evolve.family,
                 "identity|depolarizing_flow|transpose_mix|glauber_flip");
  ev->add_option("--rate", evolve.rate, "Rate for depolarizing_flow and glauber_flip");
  ev->add_option("--speed", evolve.speed, "Speed for transpose_mix");
  ev->add_option("--t-max", evolve.t_max, "Final time");
  ev->add_option("--steps", evolve.steps, "Grid intervals")->check(CLI::PositiveNumber);
  ev->add_flag("--eof", evolve.eof, "Track eof_upper");
  ev->add_flag("--dcoef-sup", evolve.dcoef_sup, "Track dcoef_sup");
  ev->add_option("--model", evolve.model, "glauber_flip: ising|xxz");
  ev->add_option("--J", evolve.j, "glauber_flip: coupling");
  ev->add_option("--field", evolve.h, "glauber_flip: transverse field");
  ev->add_option("--delta", evolve.delta, "glauber_flip: anisotropy");
  ev->add_option("--beta", evolve.beta, "glauber_flip: inverse temperature");
  ev->callback([&] { action = [&] { return runner.evolve(evolve); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "posmap: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    return action ? action() : kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "posmap: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "posmap: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace posmap::cli
