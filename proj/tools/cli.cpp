// Copyright 2026 The qdeg Authors
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
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "qdeg/capacity.hpp"
#include "qdeg/degradability.hpp"
#include "qdeg/errors.hpp"
#include "qdeg/io.hpp"
#include "qdeg/zoo.hpp"

namespace qdeg::cli {
namespace {

struct ToleranceFlags {
  std::string profile;
  std::optional<double> rank_tol;
  std::optional<double> psd_tol;
  std::optional<double> residual_tol;

  void attach(CLI::App* app) {
    app->add_option("--tol-profile", profile,
                    "Tolerance profile: default, strict or loose "
                    "(default: $QDEG_TOLERANCE_PROFILE)");
    app->add_option("--rank-tol", rank_tol, "Relative singular value cutoff");
    app->add_option("--psd-tol", psd_tol, "Relative eigenvalue floor");
    app->add_option("--residual-tol", residual_tol, "Absolute residual bound");
  }

  Tolerance resolve() const {
    Tolerance tol = profile.empty() ? Tolerance::from_env() : Tolerance::from_profile(profile);
    if (rank_tol) tol.rank_tol = *rank_tol;
    if (psd_tol) tol.psd_tol = *psd_tol;
    if (residual_tol) tol.residual_tol = *residual_tol;
    tol.validate();
    return tol;
  }
};

struct Grid {
  std::string start;
  std::string stop;
  int points = 0;

  void attach(CLI::App* app, const char* default_start, const char* default_stop,
              int default_points) {
    start = default_start;
    stop = default_stop;
    points = default_points;
    app->add_option("--start", start, "First t value (decimal or p/q)")->capture_default_str();
    app->add_option("--stop", stop, "Last t value (decimal or p/q)")->capture_default_str();
    app->add_option("--points", points, "Number of grid points")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }

  std::vector<double> values() const {
    const double a = parse_number(start);
    const double b = parse_number(stop);
    std::vector<double> ts(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
      ts[static_cast<std::size_t>(i)] =
          points == 1 ? a : (i == points - 1 ? b : a + (b - a) * i / (points - 1));
    }
    return ts;
  }
};

// Computes rows concurrently and returns them in grid order.
std::vector<std::string> compute_rows(std::size_t n, int jobs,
                                      const std::function<std::string(std::size_t)>& row) {
  std::vector<std::string> rows(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        rows[i] = row(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto workers = static_cast<std::size_t>(std::clamp(jobs, 1, 64));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < std::min(workers, n); ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

// The TD pair used by the sweeps: the literal qubit complement for d = 2 and
// the fixed nine-dimensional environment for d = 3.
struct TdPair {
  Channel channel;
  Channel environment;
};

TdPair td_pair(int d, double t, const Tolerance& tol) {
  if (d != 2 && d != 3) throw Unsupported("sweeps support d = 2 and d = 3");
  const TDParams params(d, t);
  if (d == 2) return {td_channel(params), td_complement_qubit(t, tol)};
  Channel c = td_channel_fixed_environment(params);
  Channel env = complement(c, tol);
  return {std::move(c), std::move(env)};
}

bool in_cloner_interval(int d, double t) {
  const double hi = 1.0 / (d + 1);
  return t >= -1e-12 && t <= hi + 1e-12;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParseError("cannot write '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degradability decisions and capacities for low-dimensional quantum channels",
               "qdeg"};
  app.require_subcommand(1);

  std::string output;
  int jobs = 1;
  ToleranceFlags tflags;

  // decide
  auto* decide_cmd = app.add_subcommand("decide", "Decide a degradability relation");
  std::string channel_spec;
  std::string complement_spec;
  std::string mode_text = "degradable";
  bool search = false;
  std::optional<std::uint64_t> seed;
  SearchConfig search_cfg;
  decide_cmd->add_option("--channel", channel_spec, "Channel spec, e.g. td:d=2,t=-2/3")
      ->required();
  decide_cmd->add_option("--complement", complement_spec,
                         "Complement to use instead of the computed one");
  decide_cmd->add_option("--mode", mode_text,
                         "degradable, antidegradable, conj-degradable or "
                         "conj-antidegradable")
      ->capture_default_str();
  decide_cmd->add_flag("--search", search, "Search the solution family when inconclusive");
  decide_cmd->add_option("--seed", seed, "Seed for the search (required with --search)");
  decide_cmd->add_option("--restarts", search_cfg.restarts)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  decide_cmd->add_option("--max-iters", search_cfg.max_iters)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  decide_cmd->add_option("--output,-o", output, "Write the document to this file");
  tflags.attach(decide_cmd);

  // sweep-eigs
  auto* sweep_cmd = app.add_subcommand(
      "sweep-eigs", "Candidate antidegrading-map Choi spectra of the TD channel versus t");
  int sweep_d = 2;
  Grid sweep_grid;
  sweep_cmd->add_option("--d", sweep_d, "Qudit dimension (2 or 3)")->capture_default_str();
  sweep_grid.attach(sweep_cmd, "-1", "1/3", 100);
  sweep_cmd->add_option("--jobs,-j", jobs, "Worker threads")->capture_default_str();
  sweep_cmd->add_option("--output,-o", output, "Write the CSV to this file");
  tflags.attach(sweep_cmd);

  // capacity
  auto* cap_cmd = app.add_subcommand("capacity", "Quantum capacity of the TD complement versus t");
  int cap_d = 2;
  Grid cap_grid;
  std::string method = "closed-form";
  OptimizerConfig opt_cfg;
  std::optional<std::uint64_t> cap_seed;
  cap_cmd->add_option("--d", cap_d, "Qudit dimension (2 or 3)")->capture_default_str();
  cap_grid.attach(cap_cmd, "-1", "1/3", 100);
  cap_cmd->add_option("--method", method, "closed-form, covariant or optimized")
      ->check(CLI::IsMember({"closed-form", "covariant", "optimized"}))
      ->capture_default_str();
  cap_cmd->add_option("--seed", cap_seed, "Seed for the optimizer (required for optimized)");
  cap_cmd->add_option("--restarts", opt_cfg.restarts)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cap_cmd->add_option("--jobs,-j", jobs, "Worker threads")->capture_default_str();
  cap_cmd->add_option("--output,-o", output, "Write the CSV to this file");
  tflags.attach(cap_cmd);

  // screen
  auto* screen_cmd =
      app.add_subcommand("screen", "Check whether exclusive conjugate degradability is ruled out");
  screen_cmd->add_option("--channel", channel_spec, "Channel spec")->required();
  screen_cmd->add_option("--output,-o", output, "Write the report to this file");
  tflags.attach(screen_cmd);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a stored certificate");
  std::string cert_path;
  std::string verify_mode;
  verify_cmd->add_option("--certificate", cert_path, "Certificate or verdict JSON")->required();
  verify_cmd->add_option("--channel", channel_spec, "Channel spec")->required();
  verify_cmd->add_option("--complement", complement_spec,
                         "Complement the certificate was computed against");
  verify_cmd->add_option("--mode", verify_mode, "Relation (default: taken from the document)");
  verify_cmd->add_option("--output,-o", output, "Write the report to this file");
  tflags.attach(verify_cmd);

  // show
  auto* show_cmd = app.add_subcommand("show", "Print a channel as JSON (usable with file:)");
  show_cmd->add_option("--channel", channel_spec, "Channel spec")->required();
  show_cmd->add_option("--output,-o", output, "Write the document to this file");
  tflags.attach(show_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    const Tolerance tol = tflags.resolve();

    auto load_complement = [&](const Channel& c) -> std::optional<Channel> {
      if (complement_spec.empty()) return std::nullopt;
      Channel env = parse_channel_spec(complement_spec, tol);
      if (complementarity_defect(c, env) > tol.residual_tol) {
        throw NotComplementary("'" + complement_spec + "' is not a complement of '" +
                               channel_spec + "'");
      }
      return env;
    };

    if (*decide_cmd) {
      if (search && !seed) throw ParseError("--search requires --seed");
      Channel c = parse_channel_spec(channel_spec, tol);
      auto env = load_complement(c);
      search_cfg.enabled = search;
      search_cfg.seed = seed.value_or(0);
      search_cfg.tol = tol;
      const Verdict v = decide(Query{std::move(c), parse_mode(mode_text), std::move(env)},
                               search_cfg);
      Output o(output, out);
      o.get() << verdict_to_json(v).dump(2) << '\n';
      switch (v.status) {
        case Status::kYes: return kExitYes;
        case Status::kNo: return kExitNo;
        case Status::kInconclusive: return kExitInconclusive;
      }
    }

    if (*sweep_cmd) {
      const auto ts = sweep_grid.values();
      for (double t : ts) TDParams(sweep_d, t);  // reject before any output
      const auto rows = compute_rows(ts.size(), jobs, [&](std::size_t i) {
        const TdPair p = td_pair(sweep_d, ts[i], tol);
        const CandidateMap a =
            candidate_map(p.environment.superop(), p.channel.superop(), tol);
        const RealVector eigs = hermitian_eigs(superop_to_choi(a.map).matrix(), tol).values;
        std::string line = format_double(ts[i]);
        for (Eigen::Index k = 0; k < eigs.size(); ++k) line += "," + format_double(eigs(k));
        return line;
      });
      Output o(output, out);
      const auto n = rows.empty() ? 0 : std::count(rows[0].begin(), rows[0].end(), ',');
      o.get() << "t";
      for (std::ptrdiff_t k = 1; k <= n; ++k) o.get() << ",lambda_" << k;
      o.get() << '\n';
      for (const auto& r : rows) o.get() << r << '\n';
      return 0;
    }

    if (*cap_cmd) {
      if (method == "optimized" && !cap_seed) throw ParseError("--method optimized requires --seed");
      if (cap_d != 2 && cap_d != 3) throw Unsupported("capacity supports d = 2 and d = 3");
      const auto ts = cap_grid.values();
      for (double t : ts) TDParams(cap_d, t);
      const double base = cap_d;
      const KnownRange range = known_antidegradable_range(cap_d);
      opt_cfg.seed = cap_seed.value_or(0);
      const auto rows = compute_rows(ts.size(), jobs, [&](std::size_t i) {
        const double t = ts[i];
        CapacityResult r = [&] {
          if (method == "closed-form") return td_complement_capacity(cap_d, t);
          const Channel env = td_pair(cap_d, t, tol).environment;
          if (method == "covariant") return covariant_capacity(env, base, tol);
          return one_shot_optimize(env, opt_cfg, base, tol);
        }();
        CapacityStatus status = CapacityStatus::kOneShot;
        if (range.contains(t)) {
          status = range.status == EvidenceStatus::kProven ? CapacityStatus::kProven
                                                           : CapacityStatus::kNumericalEvidence;
        }
        std::ostringstream line;
        line << format_double(t) << ',' << format_double(r.value) << ',' << cap_d << ','
             << to_string(r.method) << ',' << to_string(status) << ','
             << (in_cloner_interval(cap_d, t) ? 1 : 0);
        return line.str();
      });
      Output o(output, out);
      o.get() << "t,value,base,method,status,cloner\n";
      for (const auto& r : rows) o.get() << r << '\n';
      return 0;
    }

    if (*screen_cmd) {
      const Channel c = parse_channel_spec(channel_spec, tol);
      Output o(output, out);
      o.get() << screen_to_json(ecd_screen(c, tol)).dump(2) << '\n';
      return 0;
    }

    if (*verify_cmd) {
      const Json doc = read_json_file(cert_path);
      const SuperOp cert = certificate_from_json(doc);
      std::string mode_name = verify_mode;
      if (mode_name.empty()) {
        const Json& body = doc.contains("certificate") ? doc.at("certificate") : doc;
        if (!body.contains("mode") || !body.at("mode").is_string()) {
          throw ParseError("certificate carries no mode; pass --mode");
        }
        mode_name = body.at("mode").get<std::string>();
      }
      const Channel c = parse_channel_spec(channel_spec, tol);
      auto env = load_complement(c);
      const Channel comp = env ? *env : complement(c, tol);
      const Problem problem = build_problem(c, comp, parse_mode(mode_name));
      const CertificateCheck check =
          verify_certificate(problem.known, problem.target, cert, tol);
      Output o(output, out);
      o.get() << Json{{"schema_version", kSchemaVersion},
                      {"kind", "verification"},
                      {"valid", check.valid},
                      {"residual", check.residual},
                      {"min_eigenvalue", check.min_eigenvalue},
                      {"psd_floor", check.psd_floor},
                      {"tp_deviation", check.tp_deviation}}
                     .dump(2)
              << '\n';
      return check.valid ? 0 : 1;
    }

    if (*show_cmd) {
      const Channel c = parse_channel_spec(channel_spec, tol);
      Output o(output, out);
      o.get() << channel_to_json(c).dump(2) << '\n';
      return 0;
    }
  } catch (const Error& e) {
    err << "qdeg: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace qdeg::cli
