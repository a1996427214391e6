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

#include "pdeglab/agreement.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <string>

#include "pdeglab/error.hpp"
#include "pdeglab/parallel.hpp"

namespace pdeglab {

void AgreementInstance::validate() const {
  if (points.empty()) throw PreconditionError("point set is empty");
  if (points.size() != values.size()) throw ShapeError("one value per point");
  if (points.size() > kMaxAgreementPoints) {
    throw CapExceeded("agreement search capped at " + std::to_string(kMaxAgreementPoints) +
                      " points");
  }
  if (m > 30) throw CapExceeded("agreement search needs m <= 30");
  std::set<std::uint64_t> seen;
  for (auto p : points) {
    if (m < 64 && (p >> m) != 0) throw ShapeError("point outside {0,1}^m");
    if (!seen.insert(p).second) throw PreconditionError("points must be distinct");
  }
}

std::vector<std::uint64_t> all_points(std::size_t m) {
  if (m > 30) throw CapExceeded("all_points needs m <= 30");
  std::vector<std::uint64_t> out(std::size_t{1} << m);
  for (std::uint64_t k = 0; k < out.size(); ++k) out[k] = k;
  return out;
}

namespace {

/// First kept subset of size k (deletion sets in lexicographic order) that
/// some degree-<= d polynomial matches.
std::optional<AgreementResult> match_of_size(const AgreementInstance& inst, std::size_t k) {
  const std::size_t M = inst.size();
  const std::size_t q = M - k;
  std::vector<std::size_t> del(q);
  for (std::size_t i = 0; i < q; ++i) del[i] = i;
  while (true) {
    std::vector<std::uint64_t> pts;
    std::vector<std::size_t> kept;
    std::size_t di = 0;
    for (std::size_t i = 0; i < M; ++i) {
      if (di < q && del[di] == i) {
        ++di;
        continue;
      }
      kept.push_back(i);
      pts.push_back(inst.points[i]);
    }
    std::unique_ptr<bool[]> vals(new bool[kept.size() + 1]);
    for (std::size_t i = 0; i < kept.size(); ++i) vals[i] = inst.values[kept[i]];
    auto sol = solve_agreement_system(inst.m, pts, std::span<const bool>(vals.get(), kept.size()),
                                      inst.d);
    if (sol) {
      const Polynomial p = sol->polynomial(inst.m);
      for (std::size_t i = 0; i < kept.size(); ++i) {
        if (p.evaluate_mask(pts[i]) != (vals[i] ? 1 : 0)) {
          throw VerificationError("agreement witness does not match its points");
        }
      }
      return AgreementResult{k, std::move(kept), std::move(sol)};
    }
    // next combination
    std::size_t i = q;
    while (i > 0 && del[i - 1] == M - q + i - 1) --i;
    if (i == 0) return std::nullopt;
    ++del[i - 1];
    for (std::size_t j = i; j < q; ++j) del[j] = del[j - 1] + 1;
  }
}

}  // namespace

AgreementResult max_agreement(const AgreementInstance& inst) {
  inst.validate();
  for (std::size_t k = inst.size();; --k) {
    if (auto r = match_of_size(inst, k)) return std::move(*r);
    if (k == 0) break;
  }
  throw VerificationError("empty agreement set had no solution");
}

std::size_t bad_threshold(std::size_t M) { return (9 * M + 9) / 10; }

bool is_bad(const AgreementInstance& inst) {
  inst.validate();
  return match_of_size(inst, bad_threshold(inst.size())).has_value();
}

BadFraction bad_fraction_exact(std::size_t m, const std::vector<std::uint64_t>& points,
                               std::size_t d) {
  const std::size_t M = points.size();
  if (M > kExactBadFractionMaxPoints) {
    throw CapExceeded("exact bad fraction capped at " +
                      std::to_string(kExactBadFractionMaxPoints) + " points");
  }
  AgreementInstance inst{m, points, std::vector<bool>(M), d};
  inst.validate();
  std::uint64_t bad = 0;
  const std::uint64_t total = std::uint64_t{1} << M;
  for (std::uint64_t g = 0; g < total; ++g) {
    for (std::size_t i = 0; i < M; ++i) inst.values[i] = (g >> i) & 1U;
    bad += is_bad(inst);
  }
  BadFraction out;
  out.mode = ErrorMode::Exact;
  out.exact = ratio(Integer(static_cast<unsigned long>(bad)), Integer(static_cast<unsigned long>(total)));
  out.trials = total;
  out.bad = bad;
  out.estimate = to_double(out.exact);
  return out;
}

BadFraction bad_fraction_monte_carlo(std::size_t m, const std::vector<std::uint64_t>& points,
                                     std::size_t d, const ScanConfig& config) {
  AgreementInstance base{m, points, std::vector<bool>(points.size()), d};
  base.validate();
  const auto counts = parallel_counts(
      config.seed0, config.trials, 1, config.jobs,
      [&](std::uint64_t seed, std::span<std::uint64_t> c) {
        AgreementInstance inst = base;
        SeedStream stream(seed);
        for (std::size_t i = 0; i < inst.size(); ++i) inst.values[i] = stream.next_bit();
        c[0] += is_bad(inst);
      });
  BadFraction out;
  out.mode = ErrorMode::MonteCarlo;
  out.trials = config.trials;
  out.bad = counts[0];
  out.estimate = static_cast<double>(counts[0]) / static_cast<double>(config.trials);
  out.radius = hoeffding_radius(config.trials, config.confidence);
  return out;
}

bool pdeg_lower_certificate(const BooleanFunction& F, const std::vector<std::uint64_t>& points,
                            std::size_t d) {
  AgreementInstance inst{F.arity(), points, {}, d};
  for (auto p : points) {
    if (p >= F.table_size()) throw ShapeError("point outside the domain of F");
    inst.values.push_back(F.value(p));
  }
  return !is_bad(inst);
}

nlohmann::json to_json(const AgreementResult& result, std::size_t arity) {
  nlohmann::json j = {{"k", result.k}, {"matched", result.matched}};
  if (result.witness) {
    j["witness"] = to_json(result.witness->polynomial(arity));
    j["bit_size"] = result.witness->bit_size;
    j["reference_bound"] = result.witness->reference_bound;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

nlohmann::json to_json(const BadFraction& fraction) {
  nlohmann::json j = {{"mode", to_string(fraction.mode)},
                      {"trials", fraction.trials},
                      {"bad", fraction.bad},
                      {"estimate", fraction.estimate},
                      {"radius", fraction.radius}};
  if (fraction.mode == ErrorMode::Exact) j["exact"] = to_fraction_string(fraction.exact);
  return j;
}

}  // namespace pdeglab
