// Copyright 2026 The qortho Authors
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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qortho/algebra.hpp"
#include "qortho/channels.hpp"
#include "qortho/cli.hpp"
#include "qortho/mub.hpp"
#include "qortho/paperlab.hpp"
#include "qortho/privacy.hpp"

using namespace qortho;

namespace {

const std::vector<double> kGrid{0, 1e-3, 1e-2, 5e-2, 1e-1, 0.3};

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// Random partition of n into positive parts.
std::vector<std::size_t> random_blocks(std::size_t n, Rng& rng) {
  std::vector<std::size_t> parts;
  std::size_t left = n;
  while (left > 0) {
    const auto s = 1 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(left));
    parts.push_back(std::min(s, left));
    left -= parts.back();
  }
  return parts;
}

std::vector<UnitalStarAlgebra> algebra_zoo() {
  Rng rng(2024);
  std::vector<UnitalStarAlgebra> zoo;
  for (std::size_t n = 1; n <= 5; ++n) {
    zoo.push_back(UnitalStarAlgebra::scalars(n));
    zoo.push_back(UnitalStarAlgebra::full(n));
    zoo.push_back(masa_of(fourier_basis(n)));
    zoo.push_back(masa_of(haar_unitary(n, rng)));
    zoo.push_back(build(AlgebraSpec::conjugated(haar_unitary(n, rng),
                                                AlgebraSpec::blocks(n, random_blocks(n, rng)))));
  }
  zoo.push_back(build(hybrid_a_spec()));
  zoo.push_back(build(hybrid_b_spec()));
  zoo.push_back(build(subsystem_a_spec()));
  zoo.push_back(build(subsystem_b_spec()));
  zoo.push_back(build(AlgebraSpec::generators(3, {CMatrix::Random(3, 3)})));
  return zoo;
}

void closed_form_criterion(int id, const char* title, PerturbedExample (*make)(double)) {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0;
  double worst_delta = 0;
  double zero_dev = 0;
  for (double d : kGrid) {
    const auto ev = evaluate(make(d));
    if (ev.rel_diff > worst) {
      worst = ev.rel_diff;
      worst_delta = d;
    }
    if (d == 0) zero_dev = std::abs(ev.report.q - 1);
  }
  const double secs = seconds_since(t0);
  const bool ok = worst <= 1e-9 && zero_dev <= 1e-10 && secs < 1.0;
  std::ostringstream s;
  s << "max rel diff " << fmt("%.3e", worst) << " (delta " << worst_delta << "), |q(0) - 1| "
    << fmt("%.1e", zero_dev) << ", " << fmt("%.3f", secs) << " s";
  report(id, title, ok, s.str());
}

void route_agreement() {
  double nat_choi = 0, spread = 0;
  std::size_t pairs = 0;
  auto consider = [&](double qn, double qc, double qb) {
    nat_choi = std::max(nat_choi, std::abs(qn - qc));
    spread = std::max({spread, std::abs(qn - qc), std::abs(qc - qb), std::abs(qn - qb)});
    ++pairs;
  };
  auto algebras = [&](const UnitalStarAlgebra& a, const UnitalStarAlgebra& b) {
    consider(q_via_natural(a, b), q_via_choi(a, b), q_via_basis(a, b));
  };
  algebras(build(hybrid_a_spec()), build(hybrid_b_spec()));
  algebras(build(subsystem_a_spec()), build(subsystem_b_spec()));
  for (double d : kGrid) {
    for (const auto& ex : {example_hybrid(d), example_subsystem(d)}) {
      const FrameView a(ex.a.basis()), c(ex.c);
      consider(q_via_natural(a, c), q_via_choi(a, c), q_via_basis(a, c));
    }
  }
  Rng rng(303);
  while (pairs < 320) {
    const std::size_t n = 2 + pairs % 3;
    const auto a = build(AlgebraSpec::blocks(n, random_blocks(n, rng)));
    const auto b = build(AlgebraSpec::conjugated(haar_unitary(n, rng),
                                                 AlgebraSpec::blocks(n, random_blocks(n, rng))));
    algebras(a, b);
  }
  report(3, "three Q routes agree", nat_choi <= 1e-10 && spread <= 1e-8,
         std::to_string(pairs) + " pairs, max |natural - choi| " + fmt("%.2e", nat_choi) +
             ", max spread " + fmt("%.2e", spread));
}

void choi_from_basis_criterion() {
  Rng rng(404);
  double worst = 0;
  std::size_t count = 0;
  for (const auto& alg : algebra_zoo()) {
    const CMatrix reference = choi_of(conditional_expectation(alg)).matrix();
    const std::size_t d = alg.dim();
    const CMatrix w = haar_unitary(d, rng);
    std::vector<CMatrix> other(d, CMatrix::Zero(alg.ambient(), alg.ambient()));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) other[i] += w(j, i) * alg.basis()[j];
    worst = std::max(worst, max_abs(choi_from_basis(alg.basis()) - reference));
    worst = std::max(worst, max_abs(choi_from_basis(other) - reference));
    ++count;
  }
  report(4, "Choi matrix from an orthonormal basis", worst <= 1e-9,
         std::to_string(count) + " algebras x 2 bases, max deviation " + fmt("%.2e", worst));
}

void exact_privacy() {
  double q_dev = 0, eps = 0;
  std::size_t pairs = 0;
  auto exact = [&](const OrthogonalityReport& r) {
    q_dev = std::max(q_dev, std::abs(r.q - 1));
    eps = std::max({eps, r.eps_a_privatizes_b, r.eps_b_privatizes_a});
    ++pairs;
  };
  exact(analyze(build(hybrid_a_spec()), build(hybrid_b_spec())));
  exact(analyze(build(subsystem_a_spec()), build(subsystem_b_spec())));
  exact(evaluate(example_hybrid(0)).report);
  exact(evaluate(example_subsystem(0)).report);
  for (std::size_t n = 2; n <= 5; ++n) {
    exact(analyze(masa_of(standard_basis(n)), masa_of(fourier_basis(n))));
    if (is_prime(n)) {
      const auto fam = mub_family_prime(n);
      for (std::size_t i = 0; i < fam.bases.size(); ++i)
        for (std::size_t j = i + 1; j < fam.bases.size(); ++j)
          exact(analyze(masa_of(fam.bases[i]), masa_of(fam.bases[j])));
    }
  }
  const auto d4 = masa_of(standard_basis(4));
  const auto self = analyze(d4, d4);
  const double self_dev = std::max({std::abs(self.q - 4), std::abs(self.eps_a_privatizes_b - 1),
                                    std::abs(self.eps_b_privatizes_a - 1)});
  const bool ok = q_dev <= 1e-8 && eps <= 1e-8 && self_dev <= 1e-8;
  report(5, "exact privacy at Q = 1", ok,
         std::to_string(pairs) + " pairs, max |q - 1| " + fmt("%.2e", q_dev) + ", max norm " +
             fmt("%.2e", eps) + "; diagonal self pair deviation " + fmt("%.2e", self_dev));
}

struct TrialStats {
  std::size_t trials = 0;
  std::size_t forward = 0, converse = 0, frobenius = 0;
  double forward_slack = -1e300, converse_slack = -1e300, frob_dev = 0;
  double seconds = 0;
};

TrialStats random_trials() {
  const auto t0 = std::chrono::steady_clock::now();
  TrialStats s;
  Rng rng(505);
  for (std::size_t t = 0; t < 600; ++t) {
    const std::size_t n = 2 + t % 4;
    const auto a = build(AlgebraSpec::conjugated(haar_unitary(n, rng),
                                                 AlgebraSpec::blocks(n, random_blocks(n, rng))));
    const auto b = build(AlgebraSpec::conjugated(haar_unitary(n, rng),
                                                 AlgebraSpec::blocks(n, random_blocks(n, rng))));
    const auto r = analyze(a, b);
    const double top = std::max(r.eps_a_privatizes_b, r.eps_b_privatizes_a);
    ++s.trials;
    if (r.d_max > 1) {
      s.forward_slack = std::max(s.forward_slack, top - r.forward_bound);
      s.converse_slack = std::max(s.converse_slack, (r.q - 1) - r.converse_bound);
    }
    if (top > r.forward_bound + 1e-8) ++s.forward;
    if (r.q - 1 > r.converse_bound + 1e-8) ++s.converse;
    s.frob_dev = std::max(s.frob_dev, r.frobenius_residual);
    if (r.frobenius_residual > 1e-8) ++s.frobenius;
  }
  s.seconds = seconds_since(t0);
  return s;
}

void kraus_round_trip() {
  Rng rng(909);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 3, r = 1 + t % 5;
    std::vector<CMatrix> ops;
    CMatrix s = CMatrix::Zero(n, n);
    for (std::size_t k = 0; k < r; ++k) {
      ops.push_back(ginibre(n, n, rng));
      s += ops.back().adjoint() * ops.back();
    }
    const auto e = eig_hermitian((s + s.adjoint()) / 2.0);
    const CMatrix inv_sqrt = e.vectors *
                             e.values.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() *
                             e.vectors.adjoint();
    for (auto& k : ops) k = k * inv_sqrt;
    const ChoiMatrix c = choi_of(superop_of(KrausSet{n, ops}));
    worst = std::max(worst, max_abs(choi_of(superop_of(kraus_of(c))).matrix() - c.matrix()));
  }
  double tp = 0;
  for (const auto& alg : algebra_zoo()) {
    tp = std::max(tp, trace_preservation_residual(kraus_of(choi_of(conditional_expectation(alg)))));
  }
  report(9, "Choi to Kraus round trip", worst <= 1e-8 && tp <= 1e-8,
         "100 channels, max deviation " + fmt("%.2e", worst) +
             "; conditional expectations max |sum K*K - I| " + fmt("%.2e", tp));
}

void mub_suite() {
  double fourier = 0;
  for (std::size_t n = 2; n <= 7; ++n) {
    fourier = std::max(fourier,
                       unbiasedness_epsilon(BasisFamily{n, {standard_basis(n), fourier_basis(n)}}));
  }
  double prime_eps = 0, q_dev = 0;
  for (std::size_t p : {2, 3, 5, 7}) {
    const auto fam = mub_family_prime(p);
    prime_eps = std::max(prime_eps, unbiasedness_epsilon(fam));
    const Eigen::MatrixXd q = pairwise_q(fam);
    for (Eigen::Index i = 0; i < q.rows(); ++i)
      for (Eigen::Index j = 0; j < q.cols(); ++j)
        if (i != j) q_dev = std::max(q_dev, std::abs(q(i, j) - 1));
  }
  report(10, "unbiased bases", fourier <= 1e-10 && prime_eps <= 1e-9 && q_dev <= 1e-8,
         "standard+Fourier n=2..7 eps " + fmt("%.2e", fourier) + "; prime families eps " +
             fmt("%.2e", prime_eps) + ", max |q - 1| " + fmt("%.2e", q_dev));
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

void cli_contract() {
  const std::string dir = QORTHO_DATA_DIR "/";
  const std::vector<std::vector<std::string>> reruns{
      {"trials", "--a", dir + "blocks_2_2.json", "--b", dir + "hybrid_b.json", "--n", "4",
       "--count", "100", "--seed", "7", "--format", "json"},
      {"analyze", dir + "blocks_2_2.json", dir + "subsystem_b.json", "--format", "json"},
      {"example", "subsystem", "--delta", "0.05", "--format", "json"},
      {"mub", "--prime", "5", "--format", "json"}};
  bool identical = true;
  for (const auto& args : reruns) {
    const auto a = cli(args), b = cli(args);
    identical = identical && a.code == 0 && a.out == b.out && !a.out.empty();
  }

  struct Expect {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Expect> codes{
      {{"analyze", dir + "blocks_2_2.json", dir + "hybrid_b.json"}, 0},
      {{"validate", dir + "blocks_4.json"}, 0},
      {{"analyze", dir + "blocks_2_2.json", dir + "nonclosed_span.json"}, 1},
      {{"validate", dir + "span_e12.json"}, 1},
      {{"validate", dir + "masa_nonorthonormal.json"}, 1},
      {{"mub", "--family", dir + "family_nonorthonormal_2.json"}, 1},
      {{"analyze", dir + "missing.json", dir + "hybrid_b.json"}, 2},
      {{"analyze", dir + "malformed.json", dir + "hybrid_b.json"}, 2},
      {{"trials", "--a", dir + "blocks_2_2.json", "--b", dir + "hybrid_b.json", "--count", "0"}, 2},
      {{"mub", "--prime", "4"}, 2},
      {{"nonsense"}, 2}};
  std::size_t wrong = 0;
  for (const auto& e : codes) {
    if (cli(e.args).code != e.code) ++wrong;
  }
  report(11, "command-line determinism and exit codes", identical && wrong == 0,
         std::string("reruns ") + (identical ? "byte-identical" : "DIFFER") + ", " +
             std::to_string(codes.size() - wrong) + "/" + std::to_string(codes.size()) +
             " exit codes as specified");
}

}  // namespace

int main() {
  closed_form_criterion(1, "hybrid example closed form", example_hybrid);
  closed_form_criterion(2, "subsystem example closed form", example_subsystem);
  route_agreement();
  choi_from_basis_criterion();
  exact_privacy();

  const TrialStats s = random_trials();
  report(6, "forward privacy bound", s.forward == 0 && s.seconds < 30,
         std::to_string(s.trials) + " trials, " + std::to_string(s.forward) +
             " violations, max norm - bound " + fmt("%.3e", s.forward_slack) + ", " +
             fmt("%.2f", s.seconds) + " s");
  report(7, "converse bound", s.converse == 0,
         std::to_string(s.trials) + " trials, " + std::to_string(s.converse) +
             " violations, max (q - 1) - bound " + fmt("%.3e", s.converse_slack));
  report(8, "Frobenius identity", s.frobenius == 0,
         std::to_string(s.trials) + " trials, max |F^2 - (q - 1)| " + fmt("%.2e", s.frob_dev));

  kraus_round_trip();
  mub_suite();
  cli_contract();

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
