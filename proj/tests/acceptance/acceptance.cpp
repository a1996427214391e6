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

// One line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pdeglab/agreement.hpp"
#include "pdeglab/boolean_function.hpp"
#include "pdeglab/cli/commands.hpp"
#include "pdeglab/decision_tree.hpp"
#include "pdeglab/hadamard.hpp"
#include "pdeglab/or_construction.hpp"
#include "pdeglab/polynomial.hpp"
#include "pdeglab/prob_polynomial.hpp"
#include "pdeglab/pseudoaddressing.hpp"

namespace {

using namespace pdeglab;

struct Verdict {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail += (detail.empty() ? "" : "; ") + ("failed " + what);
    }
  }
  void note(const std::string& text) { detail += (detail.empty() ? "" : "; ") + text; }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

Verdict criterion_1() {
  Verdict v;
  for (std::size_t r = 1; r <= 3; ++r) {
    const auto d = mobius_interpolate(addressing_function(r)).degree();
    v.require(d == r + 1, "deg(Addr_" + std::to_string(r) + ") = " + std::to_string(r + 1));
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    v.require(sensitivity(or_function(n)).sensitivity == n, "s(OR_" + std::to_string(n) + ")");
  }
  v.require(decision_tree_depth(addressing_function(2)) == 3, "D(Addr_2) = 3");
  v.note("deg(Addr_1..3) = 2,3,4; s(OR_n) = n; D(Addr_2) = 3");
  return v;
}

Verdict criterion_2() {
  Verdict v;
  const Rational eps(1, 10);
  const auto pp = or_prob_poly(8, eps);
  v.require(p_for_epsilon(eps) == 12, "p = 12");
  v.require(pp.degree_bound() == 48, "certificate 48");
  ScanConfig cfg;
  cfg.trials = 20000;
  cfg.seed0 = 2;
  const auto inputs = all_inputs(8);
  const auto report = error_scan(pp, or_function(8), inputs, ErrorMode::MonteCarlo, cfg);
  v.require(report.within(eps), "error <= 0.1 + radius");
  v.require(report.entries.front().failures == 0, "error 0 at the zero input");
  std::size_t max_deg = 0;
  for (std::uint64_t s = 0; s < 16; ++s) max_deg = std::max(max_deg, pp.sample(1000 + s).degree());
  v.require(static_cast<std::int64_t>(max_deg) <= pp.degree_bound(), "sampled degree <= 48");
  v.note("max error " + fmt(report.max_error()) + ", radius " + fmt(report.entries[0].radius) +
         ", max sampled degree " + std::to_string(max_deg));
  return v;
}

Verdict criterion_3() {
  Verdict v;
  const auto g = xor_function(8);
  v.require(is_or_normalized(g), "XOR_8 is OR-normalized");
  ScanConfig cfg;
  cfg.trials = 20000;
  cfg.seed0 = 3;
  const auto inputs = all_inputs(8);
  const auto report = or_family_scan(g, 12, inputs, cfg);
  v.require(report.within(Rational(1, 10)), "disagreement <= 0.1 + radius");
  v.note("max disagreement " + fmt(report.max_error()));
  return v;
}

Verdict criterion_4() {
  Verdict v;
  const auto f = xor_function(8);
  const auto res = or_from_function(f, lift_exact(mobius_interpolate(f)), Rational(0));
  v.require(res.pp.degree_bound() == res.outer_degree *
                                         static_cast<std::int64_t>(res.reduce_copies) *
                                         res.inner_degree,
            "degree identity");
  ScanConfig cfg;
  cfg.trials = 4000;
  cfg.seed0 = 4;
  const auto inputs = all_inputs(8);
  const auto report = error_scan(res.pp, or_function(8), inputs, ErrorMode::MonteCarlo, cfg);
  bool all_below = true;
  for (const auto& e : report.entries) all_below = all_below && e.estimate <= 1.0 / 3.0;
  v.require(all_below, "measured error <= 1/3");
  v.note("degree " + std::to_string(res.pp.degree_bound()) + " = " +
         std::to_string(res.outer_degree) + "*" + std::to_string(res.reduce_copies) + "*" +
         std::to_string(res.inner_degree) + ", max error " + fmt(report.max_error()));
  return v;
}

Verdict ubd_checks(std::size_t t, std::size_t r, std::vector<BitVector> inputs) {
  Verdict v;
  const auto inst = make_ubd_instance(t, r);
  const auto Q = build_Q(inst, Rational(1, 3));
  const auto P = assemble_P(inst, Q);
  v.require(P.degree_bound() == Q.degree_bound() + static_cast<std::int64_t>(r) + 1,
            "certificate = deg(Q) + r + 1");
  const auto witnesses = influence_witnesses(inst);
  std::size_t verified = 0;
  for (const auto& w : witnesses) {
    auto flipped = w.input;
    flipped.flip(w.variable);
    verified += w.verified && ubd_eval(inst, w.input) != ubd_eval(inst, flipped);
  }
  v.require(verified == inst.n, "all " + std::to_string(inst.n) + " witnesses verified");
  std::vector<bool> expected;
  for (const auto& a : inputs) expected.push_back(ubd_eval(inst, a));
  std::unique_ptr<bool[]> want(new bool[expected.size()]);
  for (std::size_t k = 0; k < expected.size(); ++k) want[k] = expected[k];
  ScanConfig cfg;
  cfg.trials = 10000;
  cfg.seed0 = 5;
  const auto report = error_scan(P, inputs, std::span<const bool>(want.get(), expected.size()),
                                 ErrorMode::MonteCarlo, cfg);
  v.require(report.within(Rational(1, 3)), "error <= 1/3 + radius");
  v.note("n = " + std::to_string(inst.n) + ", " + std::to_string(inputs.size()) + " inputs, " +
         std::to_string(verified) + " witnesses, deg(Q) = " + std::to_string(Q.degree_bound()) +
         ", certificate " + std::to_string(P.degree_bound()) + ", max error " +
         fmt(report.max_error()));
  return v;
}

Verdict criterion_5() {
  const auto inst = make_ubd_instance(1, 1);
  return ubd_checks(1, 1, all_inputs(inst.n));
}

Verdict criterion_6() {
  const auto inst = make_ubd_instance(2, 2);
  auto inputs = structured_inputs(inst);
  Verdict shape;
  shape.require(inputs.size() == 64, "64 structured inputs");
  const auto random = random_inputs(inst, 200, 6);
  inputs.insert(inputs.end(), random.begin(), random.end());
  auto v = ubd_checks(2, 2, std::move(inputs));
  if (!shape.passed) v.require(false, "64 structured inputs");
  return v;
}

void check_certificate(Verdict& v, const PseudoaddressingCertificate& cert, const std::string& name) {
  std::string reason;
  v.require(verify_certificate(cert, &reason), name + " certificate (" + reason + ")");
  v.require(cert.r == 10 * cert.depth * cert.depth, name + " r = 10 d^2");
  v.require(2 * cert.t() >= cert.z_prime.size(), name + " t >= ceil(|Z'|/2)");
  // the projected tree against project(f, nu) on every assignment of its variables
  std::vector<std::size_t> image(cert.nu.map.begin(), cert.nu.map.end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  bool equal = true;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << image.size()); ++c) {
    BitVector y(cert.tree.arity());
    for (std::size_t k = 0; k < image.size(); ++k) y.set(image[k], (c >> k) & 1U);
    BitVector x(cert.f.arity());
    for (std::size_t i = 0; i < x.size(); ++i) x.set(i, y.test(cert.nu.map[i]));
    equal = equal && cert.tree.evaluate(y) == cert.f.evaluate(x);
  }
  for (auto q : cert.tree.queried_variables()) {
    equal = equal && std::binary_search(image.begin(), image.end(), q);
  }
  v.require(equal, name + " projected tree = project(f, nu)");
  v.note(name + ": depth " + std::to_string(cert.depth) + ", r " + std::to_string(cert.r) +
         ", |Z'| " + std::to_string(cert.z_prime.size()) + ", t " + std::to_string(cert.t()));
}

Verdict criterion_7() {
  Verdict v;
  check_certificate(v, extract_pseudoaddressing(addressing_function(2), 7), "Addr_2");
  const auto tree = sample_addressing_tree();
  v.require(tree.arity() == 10 && tree.depth() == 4, "hand-built tree has depth 4 on 10 variables");
  check_certificate(v, extract_pseudoaddressing_from_tree(tree, 7), "depth-4 tree");
  return v;
}

Verdict criterion_8() {
  Verdict v;
  const auto cert = extract_pseudoaddressing(addressing_function(2), 7);
  const std::uint64_t trials = 10000;
  const auto stats = restriction_statistics(cert, trials, 8);
  double worst = 0.0;
  for (std::size_t j = 0; j < cert.t(); ++j) {
    worst = std::max(worst, std::abs(stats.ones[j] / double(trials) - 0.5));
    for (std::size_t k = j + 1; k < cert.t(); ++k) {
      worst = std::max(worst, std::abs(stats.agreements[j][k] / double(trials) - 0.5));
    }
  }
  v.require(worst <= 0.02, "marginals and agreements within 0.5 +- 0.02");
  v.note("t = " + std::to_string(cert.t()) + ", worst deviation " + fmt(worst));
  return v;
}

Verdict criterion_9() {
  Verdict v;
  const auto X2 = all_points(2);
  const auto xor2 = xor_function(2);
  AgreementInstance inst{2, X2, {}, 1};
  for (auto p : X2) inst.values.push_back(xor2.value(p));
  v.require(max_agreement(inst).k == 3, "max_agreement = 3");
  v.require(pdeg_lower_certificate(xor2, X2, 1), "pdeg lower certificate");
  const auto exact = bad_fraction_exact(3, all_points(3), 0);
  v.require(exact.exact == ratio(Integer(2), Integer(256)), "bad fraction = 2/256");
  ScanConfig cfg;
  cfg.trials = 20000;
  cfg.seed0 = 9;
  const auto mc = bad_fraction_monte_carlo(3, all_points(3), 0, cfg);
  v.require(std::abs(mc.estimate - exact.estimate) <= mc.radius, "Monte Carlo within radius");
  v.note("bad fraction " + to_fraction_string(exact.exact) + ", estimate " + fmt(mc.estimate) +
         " +- " + fmt(mc.radius));
  return v;
}

Verdict criterion_10() {
  Verdict v;
  const auto f = BooleanFunction::from_rule(6, [](std::uint64_t k) {
    return ((k & 0b000111) == 0b000111) != ((k >> 3) % 3 == 1);
  });
  const auto p = mobius_interpolate(f);
  const auto noisy = from_support(
      6, {{p, Rational(7, 10)}, {Polynomial::constant(6, 1) - p, Rational(3, 10)}});
  const Rational eps(3, 10), delta(1, 20);
  const auto l = majority_copies(eps, delta);
  const auto reduced = reduce_error(noisy, eps, delta);
  v.require(reduced.degree_bound() == noisy.degree_bound() * static_cast<std::int64_t>(l),
            "degree multiplied by l");
  v.require(majority_tail(l, eps) <= delta && (l < 3 || majority_tail(l - 2, eps) > delta),
            "l is the least odd size with tail <= delta");
  ScanConfig cfg;
  cfg.trials = 20000;
  cfg.seed0 = 10;
  const auto inputs = all_inputs(6);
  const auto mc = error_scan(reduced, f, inputs, ErrorMode::MonteCarlo, cfg);
  v.require(mc.within(delta), "Monte Carlo error <= 0.05 + radius");
  std::string exact_note = "exact support unavailable";
  if (reduced.support()) {
    const auto exact = error_scan(reduced, f, inputs, ErrorMode::Exact, cfg);
    v.require(exact.within(delta), "exact error <= 0.05");
    exact_note = "exact error " + to_fraction_string(exact.entries.front().exact);
  }
  v.note("l = " + std::to_string(l) + ", degree " + std::to_string(noisy.degree_bound()) + " -> " +
         std::to_string(reduced.degree_bound()) + ", " + exact_note + ", max estimate " +
         fmt(mc.max_error()));
  return v;
}

Verdict criterion_11() {
  Verdict v;
  const std::vector<std::vector<std::string>> commands = {
      {"orpoly", "--n", "6", "--trials", "500", "--seed", "11"},
      {"orredn", "--function", "XOR:6", "--mode", "family", "--trials", "500", "--seed", "11"},
      {"orredn", "--function", "MAJ:5", "--mode", "pipeline", "--trials", "100", "--seed", "11"},
      {"ubd", "--t", "1", "--r", "1", "--trials", "500", "--seed", "11"},
      {"lbd", "--function", "ADDR:2", "--restriction-trials", "500", "--seed", "11"},
      {"oracle", "--points", "all:3", "--degree", "1", "--mode", "fraction:500", "--seed", "11"},
      {"oracle", "--points", "all:2", "--function", "XOR:2", "--degree", "1", "--seed", "11"},
      {"measure", "--function", "ADDR:2", "--seed", "11"},
  };
  std::size_t stable = 0;
  for (const auto& args : commands) {
    std::string dumps[2];
    bool ok = true;
    for (auto& d : dumps) {
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      ok = ok && code == cli::kExitOk;
      try {
        d = cli::strip_volatile(cli::load_report(out.str())).dump();
      } catch (const std::exception&) {
        ok = false;
      }
    }
    ok = ok && dumps[0] == dumps[1];
    v.require(ok, args[0] + " " + args[2] + " stable");
    stable += ok;
  }
  v.note(std::to_string(stable) + "/" + std::to_string(commands.size()) + " reports stable");
  return v;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    std::function<Verdict()> run;
    double limit_seconds;
  };
  const std::vector<Entry> entries = {
      {1, criterion_1, 5},    {2, criterion_2, 120}, {3, criterion_3, 120}, {4, criterion_4, 0},
      {5, criterion_5, 0},    {6, criterion_6, 300}, {7, criterion_7, 0},   {8, criterion_8, 0},
      {9, criterion_9, 0},    {10, criterion_10, 0}, {11, criterion_11, 0},
  };
  int failures = 0;
  for (const auto& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = e.run();
    } catch (const std::exception& ex) {
      v.passed = false;
      v.detail = std::string("exception: ") + ex.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e.limit_seconds > 0 && secs >= e.limit_seconds) {
      v.require(false, "runtime limit " + fmt(e.limit_seconds) + " s");
    }
    failures += !v.passed;
    std::printf("criterion %d: %s (%.1f s) %s\n", e.id, v.passed ? "PASS" : "FAIL", secs,
                v.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
