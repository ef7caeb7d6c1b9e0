#include "commands.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

#include "erdos/bounds.hpp"
#include "erdos/error.hpp"
#include "erdos/instance.hpp"
#include "erdos/rng.hpp"

namespace erdos::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxListedFailures = 20;

json report_header(const std::string& command) {
  return json{{"format", kReportFormat}, {"version", kReportVersion}, {"command", command}};
}

json magnitude_json(const Magnitude& m) {
  json out{{"value", m.describe()}, {"exact", m.is_exact()}};
  out["log2_lower"] = m.log2_lower().to_string();
  out["log2_upper"] = m.log2_upper().to_string();
  if (!m.is_exact()) out["rounding"] = to_string(m.rounding());
  return out;
}

json big_json(const mpz_class& z) {
  if (z >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64) return z.get_ui();
  return z.get_str();
}

std::string format_real(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::string verdict_word(bool holds) { return holds ? "HOLDS" : "VIOLATED"; }

json union_bound_json(const BadCountBound& b) {
  return json{{"bad_bound", magnitude_json(b.bad_bound)},
              {"total", magnitude_json(b.total)},
              {"bad_less_than_total", to_string(b.verdict)}};
}

json failures_json(const std::vector<TrialFailure>& failures) {
  json out = json::array();
  for (std::size_t i = 0; i < failures.size() && i < kMaxListedFailures; ++i)
    out.push_back({{"trial", failures[i].trial}, {"reason", failures[i].reason}});
  return out;
}

std::vector<int> signs(const SignColoring& x) { return {x.values().begin(), x.values().end()}; }

}  // namespace

// ---------------------------------------------------------------- bounds

CommandResult run_bounds(const BoundsRequest& req) {
  CommandResult res{kOk, report_header("bounds " + req.subject)};
  json& rep = res.report;
  if (req.subject == "ramsey") {
    const Magnitude v = erdos_graph_bound(req.n);
    rep["n"] = req.n;
    rep["formula"] = "2^floor((n-2)/2)";
    rep["vertex_count"] = magnitude_json(v);
    std::optional<std::uint64_t> r = req.r;
    if (!r)
      if (auto z = v.to_integer(64)) r = z->get_ui();
    if (r && req.n >= 2 && req.n <= *r) {
      rep["r"] = *r;
      rep["union_bound_formula"] = "2*C(r,n)*2^(C(r,2)-C(n,2)) vs 2^C(r,2)";
      rep["union_bound"] = union_bound_json(ramsey_bad_count_bound(*r, req.n));
    }
  } else if (req.subject == "multicolor") {
    rep["n"] = req.n;
    rep["k"] = req.k;
    rep["formula"] = "k^floor((n-2)/2)";
    rep["vertex_count"] = magnitude_json(erdos_multicolor_bound(req.n, req.k));
  } else if (req.subject == "hyper") {
    const Magnitude v = erdos_hypergraph_bound(req.n, req.k, req.l);
    rep["n"] = req.n;
    rep["k"] = req.k;
    rep["l"] = req.l;
    rep["formula"] = "k^floor((n-l+1)^(l-1)/l!)";
    rep["exponent"] = big_json(hypergraph_exponent(req.n, req.l));
    rep["ground_size"] = magnitude_json(v);
    if (req.m) {
      rep["m"] = *req.m;
      rep["union_bound_formula"] = "2*C(m,n)*2^(C(m,l)-C(n,l)) vs 2^C(m,l)";
      rep["union_bound"] = union_bound_json(hypergraph_bad_count_bound(*req.m, req.n, req.l));
    }
  } else if (req.subject == "discrepancy") {
    const std::uint64_t a = discrepancy_guarantee(req.n, req.s);
    rep["n"] = req.n;
    rep["s"] = req.s;
    rep["formula"] = "smallest a with 2^(a^2) >= (2s)^(2n)";
    rep["a"] = a;
    json checks = json::array();
    auto line = [&](std::uint64_t value) {
      const bool ok = discrepancy_condition(req.n, req.s, value);
      checks.push_back("a=" + std::to_string(value) + (ok ? " satisfies condition" : " does not satisfy condition"));
    };
    line(a);
    if (a > 1) line(a - 1);
    for (auto extra : req.check_a) line(extra);
    rep["checks"] = std::move(checks);
  } else {
    throw_invalid("unknown bounds subject '" + req.subject + "'");
  }
  return res;
}

// ---------------------------------------------------------------- oracle

CommandResult oracle_count_bad(std::size_t n, const std::vector<std::size_t>& set_one_based, std::int64_t a,
                               const std::string& mode, const EnumerationLimits& limits) {
  if (n < 1) throw_invalid("n must be positive");
  if (a < 1) throw_invalid("a must be a positive integer");
  Bitset set(n);
  for (auto e : set_one_based) {
    if (e < 1 || e > n) throw_invalid("set element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
    set.set(e - 1);
  }
  if (mode != "enumerate" && mode != "closed-form" && mode != "both") throw_invalid("unknown mode '" + mode + "'");

  CommandResult res{kOk, report_header("oracle count-bad")};
  json& rep = res.report;
  rep["n"] = n;
  rep["set"] = set_one_based;
  rep["a"] = a;
  const mpz_class closed = count_bad_colorings(set, a, CountMode::ClosedForm);
  mpz_class count = closed;
  bool agree = true;
  if (mode != "closed-form") {
    count = count_bad_colorings(set, a, CountMode::Enumerate, limits);
    agree = count == closed;
  }
  rep["count"] = big_json(count);
  rep["mode"] = mode;
  if (mode == "both") {
    rep["closed_form_count"] = big_json(closed);
    rep["modes_agree"] = agree;
  }
  const double exponent = static_cast<double>(n) - static_cast<double>(a) * static_cast<double>(a) / (2.0 * n);
  rep["bound"] = "2^" + format_real(exponent);
  rep["bound_formula"] = "2^(n - a^2/(2n))";
  const bool holds = agree && below_tail_bound(count, n, static_cast<std::uint64_t>(a));
  rep["verdict"] = verdict_word(holds);
  res.exit_code = holds ? kOk : kBoundViolated;
  return res;
}

CommandResult oracle_count_exceeding(const SetSystem& system, std::int64_t a, const EnumerationLimits& limits) {
  CommandResult res{kOk, report_header("oracle count-exceeding")};
  json& rep = res.report;
  const ExceedingCount counted = count_exceeding_colorings(system, a, limits);
  const std::uint64_t total = std::uint64_t{1} << system.n;
  std::uint64_t per_set_sum = 0;
  for (auto c : counted.per_set) per_set_sum += c;

  rep["n"] = system.n;
  rep["s"] = system.size();
  rep["a"] = a;
  rep["count"] = counted.count;
  rep["total"] = total;
  rep["per_set_sum"] = per_set_sum;
  rep["union_bound_formula"] = "2s * 2^(n - a^2/(2n))";
  bool holds = counted.count <= per_set_sum;
  if (system.size() == 0) {
    holds = holds && counted.count == 0;
  } else {
    holds = holds && below_tail_bound(counted.count, system.n, static_cast<std::uint64_t>(a), 2 * system.size());
    const bool condition = discrepancy_condition(system.n, system.size(), static_cast<std::uint64_t>(a));
    rep["guarantee_condition"] = condition;
    if (condition) holds = holds && counted.count < total;
  }
  rep["verdict"] = verdict_word(holds);
  res.exit_code = holds ? kOk : kBoundViolated;
  return res;
}

CommandResult oracle_exact_discrepancy(const SetSystem& system, const EnumerationLimits& limits) {
  CommandResult res{kOk, report_header("oracle exact-discrepancy")};
  json& rep = res.report;
  const DiscrepancyOptimum opt = min_max_discrepancy(system, limits);
  rep["n"] = system.n;
  rep["s"] = system.size();
  rep["value"] = opt.value;
  rep["witness"] = signs(opt.witness);
  bool holds = true;
  if (system.size() > 0 && system.n > 0) {
    const std::uint64_t a = discrepancy_guarantee(system.n, system.size());
    rep["guarantee_a"] = a;
    holds = opt.value < a;
  }
  rep["verdict"] = verdict_word(holds);
  res.exit_code = holds ? kOk : kBoundViolated;
  return res;
}

CommandResult oracle_count_ramsey(std::size_t r, std::size_t n, const EnumerationLimits& limits) {
  CommandResult res{kOk, report_header("oracle count-ramsey")};
  json& rep = res.report;
  const RamseyCount counted = count_ramsey_graphs(r, n, limits);
  rep["r"] = r;
  rep["n"] = n;
  rep["ramsey"] = counted.ramsey;
  rep["total"] = counted.total;
  rep["summary"] = std::to_string(counted.ramsey) + " of " + std::to_string(counted.total);
  bool holds = true;
  if (n >= 2 && n <= r) {
    const BadCountBound bound = ramsey_bad_count_bound(r, n);
    rep["union_bound"] = union_bound_json(bound);
    holds = less_equal(Magnitude::exact(mpz_class(static_cast<unsigned long>(counted.ramsey))), bound.bad_bound) ==
            Verdict::True;
  }
  rep["verdict"] = verdict_word(holds);
  res.exit_code = holds ? kOk : kBoundViolated;
  return res;
}

// ---------------------------------------------------------------- construct

namespace {

// Writes (or serializes) the certificate and re-checks it exactly as `verify` would.
template <class Check>
void attach_certificate(json& rep, const Instance& cert, const std::optional<std::filesystem::path>& out, Check&& check) {
  Instance reread;
  if (out) {
    write_instance_file(*out, cert);
    rep["certificate"] = out->string();
    reread = read_instance_file(*out);
  } else {
    json doc = to_json(cert);
    reread = instance_from_json(json::parse(doc.dump()));
    rep["certificate"] = std::move(doc);
  }
  const Verification v = check(reread);
  rep["verified"] = v.ok;
  if (!v.ok) rep["verification_failure"] = v.reason;
}

template <class W>
void trial_fields(json& rep, const TrialReport<W>& report, const TrialOptions& opts) {
  rep["seed"] = report.seed;
  rep["rng"] = std::string(TrialStream::kName);
  rep["max_trials"] = opts.max_trials;
  rep["trials_run"] = report.trials_run;
  rep["success"] = report.success();
  rep["failed_trials"] = report.failures.size();
  rep["failures"] = failures_json(report.failures);
}

}  // namespace

CommandResult run_construct(const ConstructRequest& req) {
  CommandResult res{kOk, report_header("construct " + req.kind)};
  json& rep = res.report;
  rep["n"] = req.n;
  bool success = false;
  bool verified = false;

  if (req.kind == "ramsey") {
    auto report = find_ramsey_graph(req.n, req.r, req.trials, req.vertex_cap);
    const std::size_t r = req.r ? *req.r : static_cast<std::size_t>(erdos_graph_bound(req.n).to_integer(64)->get_ui());
    rep["r"] = r;
    trial_fields(rep, report, req.trials);
    if ((success = report.success())) {
      attach_certificate(rep, Instance{*report.witness}, req.out, [&](const Instance& inst) {
        return verify_ramsey_graph(std::get<Graph>(inst), req.n);
      });
    }
  } else if (req.kind == "multicolor") {
    auto report = find_multicolor_coloring(req.n, req.k, req.r, req.trials, req.vertex_cap);
    rep["k"] = req.k;
    rep["r"] = report.witness ? report.witness->order()
                              : (req.r ? *req.r : erdos_multicolor_bound(req.n, req.k).to_integer(64)->get_ui());
    trial_fields(rep, report, req.trials);
    if ((success = report.success())) {
      attach_certificate(rep, Instance{*report.witness}, req.out, [&](const Instance& inst) {
        return verify_multicolor(std::get<EdgeColoring>(inst), req.n);
      });
    }
  } else if (req.kind == "hyper") {
    auto report = find_hypergraph_coloring(req.n, req.k, req.l, req.m, req.trials, req.subset_cap);
    rep["k"] = req.k;
    rep["l"] = req.l;
    if (report.witness) rep["m"] = report.witness->ground_size();
    trial_fields(rep, report, req.trials);
    if ((success = report.success())) {
      attach_certificate(rep, Instance{*report.witness}, req.out, [&](const Instance& inst) {
        return verify_hyper(std::get<SubsetColoring>(inst), req.n);
      });
    }
  } else if (req.kind == "coloring") {
    if (!req.system) throw_invalid("construct coloring needs a set-system instance (--in)");
    const SetSystem& sys = *req.system;
    auto report = find_low_discrepancy_coloring(sys, req.a, req.trials);
    rep["n"] = sys.n;
    rep["s"] = sys.size();
    rep["a"] = report.a;
    trial_fields(rep, report, req.trials);
    rep["success_rate"] = report.success_rate;
    if ((success = report.success())) {
      rep["max_abs_discrepancy"] = max_abs_discrepancy(sys, *report.witness);
      attach_certificate(rep, Instance{*report.witness}, req.out, [&](const Instance& inst) {
        return verify_discrepancy(sys, std::get<SignColoring>(inst), report.a);
      });
    }
  } else {
    throw_invalid("unknown construct kind '" + req.kind + "'");
  }

  if (success) verified = rep["verified"].get<bool>();
  res.exit_code = !success ? kTrialsExhausted : (verified ? kOk : kVerifyFailed);
  return res;
}

// ---------------------------------------------------------------- verify

CommandResult run_verify(const VerifyRequest& req) {
  CommandResult res{kOk, report_header("verify " + req.kind)};
  json& rep = res.report;
  const Instance cert = read_instance_file(req.certificate);
  rep["certificate"] = req.certificate.string();

  Verification v;
  CertificateParams params;
  params.n = req.n;
  params.a = req.a;
  std::optional<SetSystem> system;
  auto ref = [&]() -> CertificateRef {
    return std::visit(
        [](const auto& obj) -> CertificateRef {
          using T = std::decay_t<decltype(obj)>;
          if constexpr (std::is_same_v<T, SetSystem>)
            throw_invalid("a set system is not a certificate");
          else
            return std::cref(obj);
        },
        cert);
  };

  if (req.kind == "ramsey") {
    rep["n"] = req.n;
    v = verify_certificate(CertificateKind::RamseyGraph, ref(), params);
  } else if (req.kind == "multicolor") {
    rep["n"] = req.n;
    v = verify_certificate(CertificateKind::Multicolor, ref(), params);
  } else if (req.kind == "hyper") {
    rep["n"] = req.n;
    v = verify_certificate(CertificateKind::Hyper, ref(), params);
  } else if (req.kind == "discrepancy") {
    if (!req.system) throw_invalid("verify discrepancy needs the set system (--in)");
    Instance sys = read_instance_file(*req.system);
    if (!std::holds_alternative<SetSystem>(sys)) throw_invalid("--in must be a set-system instance");
    system = std::get<SetSystem>(std::move(sys));
    params.system = &*system;
    rep["a"] = req.a;
    v = verify_certificate(CertificateKind::Discrepancy, ref(), params);
  } else {
    throw_invalid("unknown verify kind '" + req.kind + "'");
  }
  rep["valid"] = v.ok;
  if (!v.ok) rep["reason"] = v.reason;
  res.exit_code = v.ok ? kOk : kVerifyFailed;
  return res;
}

// ---------------------------------------------------------------- command line

namespace {

SetSystem load_system(const std::string& path) {
  Instance inst = read_instance_file(path);
  if (!std::holds_alternative<SetSystem>(inst)) throw_invalid(path + " is not a set-system instance");
  return std::get<SetSystem>(std::move(inst));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting-argument workbench for Ramsey lower bounds and set-system discrepancy", "erdos"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (default: ERDOS_THREADS or hardware concurrency)");

  std::optional<CommandResult> result;
  std::function<CommandResult()> action;

  // bounds
  auto* bounds = app.add_subcommand("bounds", "closed-form bounds and union-bound verdicts");
  bounds->require_subcommand(1);
  BoundsRequest breq;
  for (const char* subject : {"ramsey", "multicolor", "hyper", "discrepancy"}) {
    auto* sub = bounds->add_subcommand(subject);
    sub->add_option("--n", breq.n)->required();
    if (std::string(subject) == "ramsey") sub->add_option("--r", breq.r, "vertex count for the union-bound verdict");
    if (std::string(subject) == "multicolor" || std::string(subject) == "hyper") sub->add_option("--k", breq.k);
    if (std::string(subject) == "hyper") {
      sub->add_option("--l", breq.l)->required();
      sub->add_option("--m", breq.m, "ground-set size for the union-bound verdict");
    }
    if (std::string(subject) == "discrepancy") {
      sub->add_option("--s", breq.s)->required();
      sub->add_option("--a", breq.check_a, "additional values of a to test");
    }
    sub->callback([&, subject] {
      breq.subject = subject;
      action = [&] { return run_bounds(breq); };
    });
  }

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive desk-scale counts");
  oracle->require_subcommand(1);
  bool force = false;
  std::size_t on = 0, orr = 0;
  std::int64_t oa = 0;
  std::vector<std::size_t> oset;
  std::string omode = "both";
  std::string oin;
  oracle->add_flag("--force", force, "lift the enumeration caps");
  auto limits = [&] {
    EnumerationLimits lim;
    lim.threads = threads;
    if (force) lim.max_ground_size = lim.max_graph_bits = 62;
    return lim;
  };
  {
    auto* sub = oracle->add_subcommand("count-bad");
    sub->add_option("--n", on)->required();
    sub->add_option("--set", oset, "1-based members, comma separated")->delimiter(',');
    sub->add_option("--a", oa)->required();
    sub->add_option("--mode", omode, "enumerate | closed-form | both");
    sub->callback([&] { action = [&] { return oracle_count_bad(on, oset, oa, omode, limits()); }; });
  }
  {
    auto* sub = oracle->add_subcommand("count-exceeding");
    sub->add_option("--in", oin)->required();
    sub->add_option("--a", oa)->required();
    sub->callback([&] { action = [&] { return oracle_count_exceeding(load_system(oin), oa, limits()); }; });
  }
  {
    auto* sub = oracle->add_subcommand("exact-discrepancy");
    sub->add_option("--in", oin)->required();
    sub->callback([&] { action = [&] { return oracle_exact_discrepancy(load_system(oin), limits()); }; });
  }
  {
    auto* sub = oracle->add_subcommand("count-ramsey");
    sub->add_option("--r", orr)->required();
    sub->add_option("--n", on)->required();
    sub->callback([&] { action = [&] { return oracle_count_ramsey(orr, on, limits()); }; });
  }

  // construct
  auto* construct = app.add_subcommand("construct", "seeded Las Vegas witness construction");
  construct->require_subcommand(1);
  ConstructRequest creq;
  std::string cin_path, cout_path;
  std::size_t ck = 2;
  for (const char* kind : {"ramsey", "multicolor", "hyper", "coloring"}) {
    const std::string name = kind;
    auto* sub = construct->add_subcommand(kind);
    if (name == "coloring") {
      sub->add_option("--in", cin_path, "set-system instance")->required();
      sub->add_option("--a", creq.a, "discrepancy threshold (default: guarantee)");
    } else {
      sub->add_option("--n", creq.n)->required();
    }
    if (name == "ramsey" || name == "multicolor") {
      sub->add_option("--r", creq.r, "vertex count (default: guaranteed size)");
      sub->add_option("--max-vertices", creq.vertex_cap, "practicality cap on r");
    }
    if (name == "multicolor" || name == "hyper") sub->add_option("--k", ck);
    if (name == "hyper") {
      sub->add_option("--l", creq.l)->required();
      sub->add_option("--m", creq.m, "ground-set size (default: guaranteed size)");
      sub->add_option("--max-subsets", creq.subset_cap, "practicality cap on C(m,l)");
    }
    sub->add_option("--seed", creq.trials.seed);
    sub->add_option("--max-trials", creq.trials.max_trials);
    sub->add_option("--out", cout_path, "certificate output file");
    sub->callback([&, name] {
      creq.kind = name;
      action = [&] {
        creq.k = static_cast<std::uint32_t>(ck);
        creq.trials.threads = threads;
        if (!cout_path.empty()) creq.out = cout_path;
        if (creq.kind == "coloring") creq.system = load_system(cin_path);
        return run_construct(creq);
      };
    });
  }

  // verify
  auto* verify = app.add_subcommand("verify", "check a certificate file");
  verify->require_subcommand(1);
  VerifyRequest vreq;
  std::string vcert, vin;
  for (const char* kind : {"ramsey", "multicolor", "hyper", "discrepancy"}) {
    const std::string name = kind;
    auto* sub = verify->add_subcommand(kind);
    sub->add_option("--cert", vcert)->required();
    if (name == "discrepancy") {
      sub->add_option("--in", vin, "set-system instance")->required();
      sub->add_option("--a", vreq.a)->required();
    } else {
      sub->add_option("--n", vreq.n)->required();
    }
    sub->callback([&, name] {
      vreq.kind = name;
      action = [&] {
        vreq.certificate = vcert;
        if (!vin.empty()) vreq.system = vin;
        return run_verify(vreq);
      };
    });
  }

  // gen
  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);
  std::size_t gn = 0, gs = 0;
  std::optional<std::size_t> gsize;
  std::uint64_t gseed = 0;
  std::string gout;
  {
    auto* sub = gen->add_subcommand("set-system", "pseudo-random set system");
    sub->add_option("--n", gn)->required();
    sub->add_option("--s", gs)->required();
    sub->add_option("--size", gsize, "fixed set size (default: each element with probability 1/2)");
    sub->add_option("--seed", gseed);
    sub->add_option("--out", gout)->required();
    sub->callback([&] {
      action = [&] {
        const SetSystem sys = random_set_system(gn, gs, gsize, gseed);
        write_instance_file(gout, Instance{sys});
        CommandResult res{kOk, report_header("gen set-system")};
        res.report["n"] = gn;
        res.report["s"] = gs;
        res.report["seed"] = gseed;
        res.report["out"] = gout;
        return res;
      };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    CommandResult res = action();
    out << res.report.dump(2) << '\n';
    if (res.exit_code == kVerifyFailed && res.report.contains("reason"))
      err << res.report["reason"].get<std::string>() << '\n';
    return res.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ResourceLimit ? kResourceLimit : kInputError;
  }
}

}  // namespace erdos::cli
