// Copyright 2026 The pdeglab Authors.
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

#include "pdeglab/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "pdeglab/agreement.hpp"
#include "pdeglab/decision_tree.hpp"
#include "pdeglab/error.hpp"
#include "pdeglab/hadamard.hpp"
#include "pdeglab/or_construction.hpp"
#include "pdeglab/polynomial.hpp"
#include "pdeglab/prob_polynomial.hpp"
#include "pdeglab/pseudoaddressing.hpp"

namespace pdeglab::cli {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t seed = 0;
  unsigned jobs = 0;
  double confidence = 0.999;
  std::string out_path;
  bool table = false;
};

struct Outcome {
  json config = json::object();
  json result = json::object();
  std::vector<std::pair<std::string, bool>> checks;

  void check(std::string name, bool ok) { checks.emplace_back(std::move(name), ok); }
};

Rational parse_param(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

struct ScanPart {
  std::string kind;  // exhaustive | structured | random
  std::size_t count = 0;
};

std::vector<ScanPart> parse_scan(const std::string& text, bool allow_structured) {
  std::vector<ScanPart> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "exhaustive") {
      parts.push_back({"exhaustive", 0});
    } else if (item == "structured" && allow_structured) {
      parts.push_back({"structured", 0});
    } else if (item.rfind("random:", 0) == 0) {
      try {
        std::size_t used = 0;
        const auto k = std::stoull(item.substr(7), &used);
        if (used != item.size() - 7 || k == 0) throw std::invalid_argument("count");
        parts.push_back({"random", static_cast<std::size_t>(k)});
      } catch (const std::exception&) {
        throw UsageError("--scan: bad random count in '" + item + "'");
      }
    } else {
      throw UsageError("--scan: unknown mode '" + item + "'");
    }
  }
  if (parts.empty()) throw UsageError("--scan: empty");
  return parts;
}

std::vector<BitVector> random_bit_inputs(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::vector<BitVector> out;
  SeedStream stream(seed);
  for (std::size_t k = 0; k < count; ++k) {
    BitVector a(n);
    for (std::size_t i = 0; i < n; ++i) a.set(i, stream.next_bit());
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<BitVector> scan_inputs(std::size_t n, const std::vector<ScanPart>& parts,
                                   std::uint64_t seed) {
  std::vector<BitVector> inputs;
  for (const auto& part : parts) {
    if (part.kind == "exhaustive") {
      if (n > 20) throw UsageError("exhaustive scan needs n <= 20");
      auto all = all_inputs(n);
      inputs.insert(inputs.end(), all.begin(), all.end());
    } else if (part.kind == "random") {
      auto rnd = random_bit_inputs(n, part.count, derive_seed(seed, 1));
      inputs.insert(inputs.end(), rnd.begin(), rnd.end());
    }
  }
  return inputs;
}

json common_config(const Common& c) {
  return {{"seed", c.seed}, {"jobs", c.jobs}, {"confidence", c.confidence}, {"out", c.out_path},
          {"table", c.table}};
}

ScanConfig scan_config(const Common& c, std::uint64_t trials) {
  if (trials == 0) throw UsageError("--trials must be positive");
  if (!(c.confidence > 0.0 && c.confidence < 1.0)) throw UsageError("--confidence must lie in (0, 1)");
  return {trials, c.seed, c.confidence, c.jobs};
}

/// Degrees of `samples` materialized draws; nullopt entries mean a bound violation.
json degree_samples(const ProbPolynomial& pp, std::uint64_t seed, std::size_t samples, bool& ok) {
  json degrees = json::array();
  ok = true;
  for (std::size_t k = 0; k < samples; ++k) {
    try {
      degrees.push_back(pp.sample(seed + k).degree());
    } catch (const VerificationError&) {
      degrees.push_back(nullptr);
      ok = false;
    }
  }
  return degrees;
}

// orpoly

struct OrpolyOptions {
  std::size_t n = 0;
  std::string eps = "1/10";
  std::string scan = "exhaustive";
  std::uint64_t trials = 20000;
  std::size_t degree_samples = 32;
};

Outcome run_orpoly(const OrpolyOptions& o, const Common& c) {
  Outcome out;
  out.config = {{"n", o.n}, {"eps", o.eps}, {"scan", o.scan}, {"trials", o.trials},
                {"degree_samples", o.degree_samples}};
  if (o.n == 0) throw UsageError("--n must be at least 1");
  const Rational eps = parse_param("eps", o.eps);
  const auto parts = parse_scan(o.scan, false);
  const ProbPolynomial pp = or_prob_poly(o.n, eps);
  const std::size_t p = p_for_epsilon(eps);
  const auto inputs = scan_inputs(o.n, parts, c.seed);
  std::unique_ptr<bool[]> expected(new bool[inputs.size() + 1]);
  for (std::size_t k = 0; k < inputs.size(); ++k) expected[k] = inputs[k].count() > 0;
  const auto report = error_scan(pp, inputs, std::span<const bool>(expected.get(), inputs.size()),
                                 ErrorMode::MonteCarlo, scan_config(c, o.trials));

  const auto family = ScaledSubsetFamily::generate(o.n, p, c.seed);
  json sizes = json::array();
  for (const auto& s : family.subsets) sizes.push_back(s.count());

  bool zero_exact = true;
  const std::vector<Rational> origin(o.n, Rational(0));
  for (std::size_t k = 0; k < std::max<std::size_t>(o.degree_samples, 1); ++k) {
    zero_exact = zero_exact && is_zero(pp.draw(c.seed + k)->evaluate(origin));
  }
  for (const auto& e : report.entries) {
    if (e.input.count() == 0) zero_exact = zero_exact && e.failures == 0;
  }
  bool degrees_ok = true;
  json degrees = json::array();
  if (o.n <= kDenseMaterializeMaxSupport) degrees = degree_samples(pp, c.seed, o.degree_samples, degrees_ok);

  out.result = {{"p", p},
                {"scales", family.scales()},
                {"l", family.size()},
                {"degree_bound", pp.degree_bound()},
                {"subset_sizes", std::move(sizes)},
                {"sampled_degrees", std::move(degrees)},
                {"errors", to_json(report)}};
  out.check("error_within_eps_plus_radius", report.within(eps));
  out.check("exact_zero_at_origin", zero_exact);
  out.check("sampled_degree_within_bound", degrees_ok);
  return out;
}

// orredn

struct OrrednOptions {
  std::string function;
  std::string mode = "pipeline";
  std::size_t p = 12;
  std::string ppf = "exact";
  std::string eps_f;
  std::string scan = "exhaustive";
  std::uint64_t trials = 0;
};

Outcome run_orredn(const OrrednOptions& o, const Common& c) {
  Outcome out;
  const std::uint64_t trials = o.trials != 0 ? o.trials : (o.mode == "family" ? 20000 : 4000);
  const BooleanFunction f = load_function(o.function);
  const auto parts = parse_scan(o.scan, false);

  if (o.mode == "family") {
    out.config = {{"function", o.function}, {"mode", o.mode}, {"p", o.p}, {"scan", o.scan},
                  {"trials", trials}};
    if (o.p == 0) throw UsageError("--p must be at least 1");
    const bool normalized = !is_or_normalized(f);
    const BooleanFunction g = normalized ? normalize_sensitive(f).g : f;
    const auto inputs = scan_inputs(g.arity(), parts, c.seed);
    const auto report = or_family_scan(g, o.p, inputs, scan_config(c, trials));
    const Rational bound = pow(1 - 1 / (2 * e_upper()), static_cast<unsigned long>(o.p));
    const auto family = ScaledSubsetFamily::generate(g.arity(), o.p, c.seed);
    json sizes = json::array();
    for (const auto& s : family.subsets) sizes.push_back(s.count());
    bool zero_ok = true;
    for (const auto& e : report.entries) {
      if (e.input.count() == 0) zero_ok = zero_ok && e.failures == 0;
    }
    out.result = {{"s", g.arity()},
                  {"normalized", normalized},
                  {"p", o.p},
                  {"l", family.size()},
                  {"bound", to_double(bound)},
                  {"subset_sizes", std::move(sizes)},
                  {"errors", to_json(report)}};
    out.check("disagreement_within_bound_plus_radius", report.within(bound));
    out.check("zero_input_never_fails", zero_ok);
    return out;
  }
  if (o.mode != "pipeline") throw UsageError("--mode must be family or pipeline");

  std::optional<ProbPolynomial> ppf;
  Rational eps_f;
  if (o.ppf == "exact") {
    eps_f = o.eps_f.empty() ? Rational(0) : parse_param("eps-f", o.eps_f);
    ppf = lift_exact(mobius_interpolate(f));
  } else if (o.ppf == "or") {
    if (f != or_function(f.arity())) throw UsageError("--ppf or needs f = OR");
    eps_f = o.eps_f.empty() ? Rational(1, 3) : parse_param("eps-f", o.eps_f);
    ppf = or_prob_poly(f.arity(), eps_f);
  } else {
    throw UsageError("--ppf must be exact or or");
  }
  out.config = {{"function", o.function}, {"mode", o.mode}, {"ppf", o.ppf},
                {"eps_f", to_fraction_string(eps_f)}, {"scan", o.scan}, {"trials", trials}};
  const auto red = or_from_function(f, *ppf, eps_f);
  const std::size_t s = red.normalized.s();
  const auto inputs = scan_inputs(s, parts, c.seed);
  std::unique_ptr<bool[]> expected(new bool[inputs.size() + 1]);
  for (std::size_t k = 0; k < inputs.size(); ++k) expected[k] = inputs[k].count() > 0;
  const auto report = error_scan(red.pp, inputs, std::span<const bool>(expected.get(), inputs.size()),
                                 ErrorMode::MonteCarlo, scan_config(c, trials));
  const std::int64_t identity = red.outer_degree * static_cast<std::int64_t>(red.reduce_copies) *
                                red.inner_degree;
  out.result = {{"s", s},
                {"complemented", red.normalized.complemented},
                {"shift", red.normalized.shift.to_string()},
                {"sensitive", red.normalized.sensitive},
                {"family_p", red.family_p},
                {"l", red.l},
                {"reduce_copies", red.reduce_copies},
                {"outer_degree", red.outer_degree},
                {"inner_degree", red.inner_degree},
                {"degree_bound", red.pp.degree_bound()},
                {"errors", to_json(report)}};
  out.check("error_within_one_third_plus_radius", report.within(Rational(1, 3)));
  out.check("degree_identity", red.pp.degree_bound() == identity);
  out.check("normalization_replays", red.normalized.replay() == red.normalized.g);
  return out;
}

// ubd

struct UbdOptions {
  std::size_t t = 0;
  std::size_t r = 0;
  std::string c;
  std::string eps_q = "1/3";
  std::string scan = "exhaustive";
  std::uint64_t trials = 10000;
  std::size_t degree_samples = 4;
};

Outcome run_ubd(const UbdOptions& o, const Common& c) {
  Outcome out;
  const Rational eps_q = parse_param("eps-q", o.eps_q);
  if (o.t == 0) throw UsageError("--t must be at least 1");
  if ((o.r == 0) == o.c.empty()) throw UsageError("give exactly one of --r and --c");
  std::size_t r = o.r;
  json predicted = nullptr;
  if (!o.c.empty()) {
    const auto params = choose_params(o.t, parse_param("c", o.c), eps_q);
    r = params.r;
    predicted = params.predicted_degree;
  }
  out.config = {{"t", o.t}, {"r", o.r}, {"c", o.c}, {"eps_q", o.eps_q}, {"scan", o.scan},
                {"trials", o.trials}, {"degree_samples", o.degree_samples}};
  const UbdInstance inst = make_ubd_instance(o.t, r);
  const ProbPolynomial Q = build_Q(inst, eps_q);
  const ProbPolynomial P = assemble_P(inst, Q);

  std::vector<BitVector> inputs;
  for (const auto& part : parse_scan(o.scan, true)) {
    if (part.kind == "structured") {
      auto st = structured_inputs(inst);
      inputs.insert(inputs.end(), st.begin(), st.end());
    } else if (part.kind == "random") {
      auto rnd = random_inputs(inst, part.count, derive_seed(c.seed, 1));
      inputs.insert(inputs.end(), rnd.begin(), rnd.end());
    } else {
      auto all = scan_inputs(inst.n, {part}, c.seed);
      inputs.insert(inputs.end(), all.begin(), all.end());
    }
  }
  std::unique_ptr<bool[]> expected(new bool[inputs.size() + 1]);
  for (std::size_t k = 0; k < inputs.size(); ++k) expected[k] = ubd_eval(inst, inputs[k]);
  const auto report = error_scan(P, inputs, std::span<const bool>(expected.get(), inputs.size()),
                                 ErrorMode::MonteCarlo, scan_config(c, o.trials));

  const auto witnesses = influence_witnesses(inst);
  json witness_table = json::array();
  bool all_verified = true;
  for (const auto& w : witnesses) {
    all_verified = all_verified && w.verified;
    if (inst.n <= 64) {
      witness_table.push_back(to_json(w));
    } else {
      witness_table.push_back({{"variable", w.variable}, {"verified", w.verified}});
    }
  }
  bool degrees_ok = true;
  json degrees = json::array();
  if (inst.n <= kMaxPolynomialArity) degrees = degree_samples(P, c.seed, o.degree_samples, degrees_ok);
  const std::int64_t certificate = Q.degree_bound() + static_cast<std::int64_t>(r) + 1;

  out.result = {{"t", inst.t},
                {"r", r},
                {"s", inst.s},
                {"n", inst.n},
                {"and_inputs", linearity_test_count(inst)},
                {"deg_Q", Q.degree_bound()},
                {"degree_certificate", certificate},
                {"predicted_degree", predicted},
                {"sampled_degrees", std::move(degrees)},
                {"witnesses", std::move(witness_table)},
                {"errors", to_json(report)}};
  out.check("error_within_eps_q_plus_radius", report.within(eps_q));
  out.check("all_witnesses_verified", all_verified && witnesses.size() == inst.n);
  out.check("certificate_is_deg_Q_plus_r_plus_1", P.degree_bound() == certificate);
  out.check("sampled_degree_within_certificate", degrees_ok);
  return out;
}

// lbd

struct LbdOptions {
  std::string function;
  std::string emit_cert;
  bool verify = false;
  std::uint64_t restriction_trials = 0;
};

Outcome run_lbd(const LbdOptions& o, const Common& c) {
  Outcome out;
  out.config = {{"function", o.function}, {"emit_cert", o.emit_cert}, {"verify", o.verify},
                {"restriction_trials", o.restriction_trials}};
  const PseudoaddressingCertificate cert =
      o.function == "sample-tree"
          ? extract_pseudoaddressing_from_tree(sample_addressing_tree(), c.seed)
          : extract_pseudoaddressing(load_function(o.function), c.seed);
  const json cert_json = to_json(cert);
  if (!o.emit_cert.empty()) {
    std::ofstream file(o.emit_cert);
    if (!file) throw UsageError("cannot write " + o.emit_cert);
    file << cert_json.dump(2) << '\n';
  }
  std::string reason;
  const bool verified = verify_certificate(cert, &reason);
  const std::size_t need = (cert.z_prime.size() + 1) / 2;
  out.result = {{"depth", cert.depth},
                {"r", cert.r},
                {"t", cert.t()},
                {"z_prime", cert.z_prime},
                {"good", cert.good},
                {"independent_bound", cert.independent_bound},
                {"attempts", cert.attempts},
                {"verified", verified},
                {"certificate", cert_json}};
  if (!verified) out.result["failure"] = reason;
  out.check("certificate_verified", verified);
  out.check("r_is_10_depth_squared", cert.r == 10 * cert.depth * cert.depth);
  out.check("t_at_least_half_z_prime", cert.t() >= need);
  out.check("z_prime_at_least_bound", cert.z_prime.size() >= cert.independent_bound);

  if (o.restriction_trials > 0) {
    const auto stats = restriction_statistics(cert, o.restriction_trials, c.seed, c.jobs);
    const double radius = hoeffding_radius(o.restriction_trials, c.confidence);
    const double trials = static_cast<double>(stats.trials);
    json marginals = json::array();
    json agreements = json::array();
    bool ok = true;
    for (std::size_t j = 0; j < cert.t(); ++j) {
      const double m = static_cast<double>(stats.ones[j]) / trials;
      ok = ok && std::abs(m - 0.5) <= radius;
      marginals.push_back(m);
      for (std::size_t k = j + 1; k < cert.t(); ++k) {
        const double a = static_cast<double>(stats.agreements[j][k]) / trials;
        ok = ok && std::abs(a - 0.5) <= radius;
        agreements.push_back({{"j", j}, {"k", k}, {"agreement", a}});
      }
    }
    out.result["restriction"] = {{"trials", stats.trials},
                                 {"radius", radius},
                                 {"marginals", std::move(marginals)},
                                 {"pairwise_agreements", std::move(agreements)}};
    out.check("restriction_uniform_within_radius", ok);
  }
  return out;
}

// oracle

struct OracleOptions {
  std::string points;
  std::string function;
  std::size_t degree = 0;
  std::string mode = "max-agreement";
};

Outcome run_oracle(const OracleOptions& o, const Common& c) {
  Outcome out;
  out.config = {{"points", o.points}, {"function", o.function}, {"degree", o.degree},
                {"mode", o.mode}};
  std::size_t m = 0;
  const auto points = load_points(o.points, m);
  out.result["m"] = m;
  out.result["M"] = points.size();

  if (o.mode.rfind("fraction:", 0) == 0) {
    std::uint64_t trials = 0;
    try {
      trials = std::stoull(o.mode.substr(9));
    } catch (const std::exception&) {
      throw UsageError("--mode fraction:<trials> needs a trial count");
    }
    const auto mc = bad_fraction_monte_carlo(m, points, o.degree, scan_config(c, trials));
    out.result["monte_carlo"] = to_json(mc);
    if (points.size() <= kExactBadFractionMaxPoints) {
      const auto exact = bad_fraction_exact(m, points, o.degree);
      out.result["exact"] = to_json(exact);
      out.check("monte_carlo_within_radius_of_exact",
                std::abs(mc.estimate - exact.estimate) <= mc.radius);
    }
    return out;
  }
  if (o.function.empty()) throw UsageError("--function is required for this mode");
  const BooleanFunction F = load_function(o.function);
  if (F.arity() != m) throw UsageError("function arity does not match the point dimension");
  AgreementInstance inst{m, points, {}, o.degree};
  for (auto p : points) inst.values.push_back(F.value(p));
  if (o.mode == "max-agreement") {
    const auto res = max_agreement(inst);
    out.result["agreement"] = to_json(res, m);
    out.result["threshold"] = bad_threshold(points.size());
    return out;
  }
  if (o.mode == "bad") {
    const bool bad = is_bad(inst);
    out.result["threshold"] = bad_threshold(points.size());
    out.result["bad"] = bad;
    out.result["pdeg_lower_certificate"] = !bad;
    return out;
  }
  throw UsageError("--mode must be max-agreement, bad or fraction:<trials>");
}

// measure

Outcome run_measure(const std::string& spec) {
  Outcome out;
  out.config = {{"function", spec}};
  const BooleanFunction f = load_function(spec);
  const auto sens = sensitivity(f);
  out.result = {{"arity", f.arity()},
                {"sensitivity", sens.sensitivity},
                {"sensitivity_witness", BitVector::from_word(sens.witness, f.arity()).to_string()},
                {"truly_variate", is_truly_variate(f)},
                {"influential", influential_variables(f)}};
  out.result["block_sensitivity"] =
      f.arity() <= kBlockSensitivityMaxArity ? json(block_sensitivity(f)) : json(nullptr);
  out.result["decision_tree_depth"] =
      f.arity() <= kMinDepthMaxArity ? json(decision_tree_depth(f)) : json(nullptr);
  out.result["degree"] = f.arity() <= kMaxDenseArity ? json(mobius_interpolate(f).degree()) : json(nullptr);
  return out;
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json assemble(const std::string& command, const Common& common, Outcome outcome) {
  json config = common_config(common);
  for (auto& [k, v] : outcome.config.items()) config[k] = v;
  json checks = json::array();
  bool passed = true;
  for (const auto& [name, ok] : outcome.checks) {
    checks.push_back({{"name", name}, {"passed", ok}});
    passed = passed && ok;
  }
  return {{"schema", report_schema_version()},
          {"command", command},
          {"config", std::move(config)},
          {"generated_at", timestamp()},
          {"result", std::move(outcome.result)},
          {"checks", std::move(checks)},
          {"passed", passed}};
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "64-bit seed (required)")->required();
  sub->add_option("--jobs", c.jobs, "worker threads (default: PDEGLAB_JOBS or 1)");
  sub->add_option("--confidence", c.confidence, "Monte Carlo confidence level")
      ->capture_default_str();
  sub->add_option("--out", c.out_path, "write the JSON report here");
  sub->add_flag("--table", c.table, "print a table instead of JSON");
}

}  // namespace

std::string report_schema_version() { return "1.0.0"; }

BooleanFunction load_function(const std::string& spec) {
  if (spec.empty()) throw UsageError("empty function spec");
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream in(spec);
    return read_truth_table(in);
  }
  return parse_named_function(spec);
}

std::vector<std::uint64_t> load_points(const std::string& spec, std::size_t& m) {
  if (spec.rfind("all:", 0) == 0) {
    try {
      m = std::stoul(spec.substr(4));
    } catch (const std::exception&) {
      throw UsageError("--points all:<m> needs an integer");
    }
    return all_points(m);
  }
  std::ifstream in(spec);
  if (!in) throw UsageError("cannot read points file " + spec);
  std::vector<std::uint64_t> points;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (first) {
      m = line.size();
      first = false;
    }
    if (line.size() != m || m > 30) throw UsageError("points must be bit strings of equal length <= 30");
    points.push_back(BitVector::from_string(line).to_word());
  }
  if (points.empty()) throw UsageError("points file is empty");
  return points;
}

json load_report(const std::string& text) {
  json report = json::parse(text);
  if (!report.is_object() || !report.contains("schema") ||
      report["schema"] != report_schema_version()) {
    throw PreconditionError("report schema mismatch: expected " + report_schema_version());
  }
  return report;
}

json strip_volatile(json report) {
  report.erase("generated_at");
  return report;
}

std::string render_table(const json& report) {
  std::ostringstream os;
  os << "command: " << report.value("command", "?") << "  schema " << report.value("schema", "?")
     << "  passed: " << (report.value("passed", false) ? "yes" : "NO") << '\n';
  os << "config:";
  for (const auto& [k, v] : report["config"].items()) os << ' ' << k << '=' << v.dump();
  os << '\n';
  const json& result = report["result"];
  for (const auto& [k, v] : result.items()) {
    const bool nested = v.is_array() && (v.size() > 16 || (!v.empty() && v.front().is_structured()));
    if (!v.is_object() && !nested) os << "  " << k << ": " << v.dump() << '\n';
  }
  if (result.contains("errors")) {
    const json& errs = result["errors"];
    os << "  max_error: " << errs["summary"]["max_error"].dump() << '\n';
    os << std::left << std::setw(34) << "  input" << std::setw(12) << "estimate" << std::setw(12)
       << "radius" << "trials\n";
    for (const auto& e : errs["entries"]) {
      os << "  " << std::setw(32) << e["input"].get<std::string>() << std::fixed
         << std::setprecision(5) << std::setw(12) << e["estimate"].get<double>() << std::setw(12)
         << e["radius"].get<double>() << e["trials"].dump() << '\n';
    }
  }
  if (result.contains("witnesses")) {
    std::size_t verified = 0;
    for (const auto& w : result["witnesses"]) verified += w["verified"].get<bool>();
    os << "  witnesses verified: " << verified << '/' << result["witnesses"].size() << '\n';
    for (const auto& w : result["witnesses"]) {
      if (!w["verified"].get<bool>()) os << "  unverified variable " << w["variable"].dump() << '\n';
    }
  }
  for (const auto& chk : report["checks"]) {
    os << "check " << chk["name"].get<std::string>() << ": "
       << (chk["passed"].get<bool>() ? "ok" : "FAIL") << '\n';
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Probabilistic degree experiments"};
  app.require_subcommand(1);

  Common common;
  OrpolyOptions orpoly;
  OrrednOptions orredn;
  UbdOptions ubd;
  LbdOptions lbd;
  OracleOptions oracle;
  std::string measure_fn;

  auto* s_orpoly = app.add_subcommand("orpoly", "probabilistic polynomial for OR_n");
  add_common(s_orpoly, common);
  s_orpoly->add_option("--n", orpoly.n, "number of variables")->required();
  s_orpoly->add_option("--eps", orpoly.eps, "target error")->capture_default_str();
  s_orpoly->add_option("--scan", orpoly.scan, "exhaustive | random:<k>")->capture_default_str();
  s_orpoly->add_option("--trials", orpoly.trials, "Monte Carlo trials")->capture_default_str();
  s_orpoly->add_option("--degree-samples", orpoly.degree_samples, "draws checked against the degree bound")
      ->capture_default_str();

  auto* s_orredn = app.add_subcommand("orredn", "restriction family and reduction to OR");
  add_common(s_orredn, common);
  s_orredn->add_option("--function", orredn.function, "function spec or truth-table file")->required();
  s_orredn->add_option("--mode", orredn.mode, "family | pipeline")->capture_default_str();
  s_orredn->add_option("--p", orredn.p, "family repetitions per scale")->capture_default_str();
  s_orredn->add_option("--ppf", orredn.ppf, "polynomial for f: exact | or")->capture_default_str();
  s_orredn->add_option("--eps-f", orredn.eps_f, "error of the polynomial for f");
  s_orredn->add_option("--scan", orredn.scan, "exhaustive | random:<k>")->capture_default_str();
  s_orredn->add_option("--trials", orredn.trials, "Monte Carlo trials (default 20000 family, 4000 pipeline)");

  auto* s_ubd = app.add_subcommand("ubd", "Hadamard addressing construction");
  add_common(s_ubd, common);
  s_ubd->add_option("--t", ubd.t, "log2 of the code length")->required();
  s_ubd->add_option("--r", ubd.r, "number of blocks");
  s_ubd->add_option("--c", ubd.c, "set r = round(t^c)");
  s_ubd->add_option("--eps-q", ubd.eps_q, "error of Q")->capture_default_str();
  s_ubd->add_option("--scan", ubd.scan, "comma list of exhaustive | structured | random:<k>")
      ->capture_default_str();
  s_ubd->add_option("--trials", ubd.trials, "Monte Carlo trials")->capture_default_str();
  s_ubd->add_option("--degree-samples", ubd.degree_samples, "draws checked against the certificate")
      ->capture_default_str();

  auto* s_lbd = app.add_subcommand("lbd", "pseudoaddressing certificate by random projection");
  add_common(s_lbd, common);
  s_lbd->add_option("--function", lbd.function, "function spec, truth-table file, or sample-tree")
      ->required();
  s_lbd->add_option("--emit-cert", lbd.emit_cert, "write the certificate JSON here");
  s_lbd->add_flag("--verify", lbd.verify, "re-verify the certificate");
  s_lbd->add_option("--restriction-trials", lbd.restriction_trials,
                    "draws of the random restriction F")
      ->capture_default_str();

  auto* s_oracle = app.add_subcommand("oracle", "agreement oracle");
  add_common(s_oracle, common);
  s_oracle->add_option("--points", oracle.points, "all:<m> or a file of bit strings")->required();
  s_oracle->add_option("--function", oracle.function, "function on the points");
  s_oracle->add_option("--degree", oracle.degree, "degree budget")->required();
  s_oracle->add_option("--mode", oracle.mode, "max-agreement | bad | fraction:<trials>")
      ->capture_default_str();

  auto* s_measure = app.add_subcommand("measure", "sensitivity, bs, D(f) and degree");
  add_common(s_measure, common);
  s_measure->add_option("--function", measure_fn, "function spec or truth-table file")->required();

  std::vector<const char*> argv{"pdeglab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string command;
  try {
    Outcome outcome;
    if (s_orpoly->parsed()) {
      command = "orpoly";
      outcome = run_orpoly(orpoly, common);
    } else if (s_orredn->parsed()) {
      command = "orredn";
      outcome = run_orredn(orredn, common);
    } else if (s_ubd->parsed()) {
      command = "ubd";
      outcome = run_ubd(ubd, common);
    } else if (s_lbd->parsed()) {
      command = "lbd";
      outcome = run_lbd(lbd, common);
    } else if (s_oracle->parsed()) {
      command = "oracle";
      outcome = run_oracle(oracle, common);
    } else {
      command = "measure";
      outcome = run_measure(measure_fn);
    }
    const json report = assemble(command, common, std::move(outcome));
    if (!common.out_path.empty()) {
      std::ofstream file(common.out_path);
      if (!file) throw UsageError("cannot write " + common.out_path);
      file << report.dump(2) << '\n';
    }
    if (common.table) {
      out << render_table(report);
    } else {
      out << report.dump(2) << '\n';
    }
    return report["passed"].get<bool>() ? kExitOk : kExitVerificationFailed;
  } catch (const UsageError& e) {
    err << command << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const VerificationError& e) {
    err << command << ": verification failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const EmptyAddressedSet& e) {
    err << command << ": " << e.what() << " (retry with another seed)\n";
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << command << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << command << ": " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace pdeglab::cli
