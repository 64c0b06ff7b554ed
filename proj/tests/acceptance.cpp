// Copyright 2026 The qclone Authors
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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "qclone/qclone.hpp"
#include "test_util.hpp"

namespace {

using namespace qclone;
using targets::Family;

constexpr double kTol = 1e-6;

struct Case {
  std::string name;
  targets::TargetOperator target;
  states::SamplingSet set;
  sdp::SdpProblem problem;
  sdp::SolveResult result;
  kraus::KrausSet kraus;
  double seconds = 0.0;
};

Case run_case(Family f, int m, int n) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto sc = targets::make_scenario(f, m, n);
  Case c;
  c.name = sc.label();
  c.set = targets::default_sampling(sc);
  c.target = targets::omega_local(c.set, sc);
  c.problem = sdp::assemble_primal(c.target);
  c.result = sdp::solve(c.problem);
  c.kraus = kraus::extract(c.result.choi, 1e-7);
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

class Report {
 public:
  void line(int id, const std::string& title, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %2d  %-34s %s\n", ok ? "PASS" : "FAIL", id, title.c_str(),
                detail.c_str());
    std::fflush(stdout);
    failures_ += ok ? 0 : 1;
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

std::string fmt(const char* f, double a) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

}  // namespace

int main() {
  Report report;
  std::vector<Case> universal1, universalM, covariant;
  for (int n = 2; n <= 5; ++n) universal1.push_back(run_case(Family::Universal, 1, n));
  for (auto [m, n] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 4}})
    universalM.push_back(run_case(Family::Universal, m, n));
  for (int n = 2; n <= 5; ++n) covariant.push_back(run_case(Family::PhaseCovariant, 1, n));

  auto worst = [](const std::vector<Case>& cs, auto&& err) {
    double w = 0.0;
    for (const auto& c : cs) w = std::max(w, err(c));
    return w;
  };

  // 1
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < universal1.size(); ++i) {
      const int n = static_cast<int>(i) + 2;
      const auto& c = universal1[i];
      const double err = std::abs(c.result.certificate.primal_value - (2.0 * n + 1) / (3.0 * n));
      ok = ok && err <= kTol && c.seconds <= 60.0;
      detail += fmt("1->%.0f", n) + fmt(" err %.1e", err) + fmt(" %.2fs; ", c.seconds);
    }
    report.line(1, "universal 1->N fidelities", ok, detail);
  }
  // 2
  {
    const double expect[] = {11.0 / 12.0, 7.0 / 8.0, 19.0 / 20.0};
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < universalM.size(); ++i) {
      const auto& c = universalM[i];
      const double err = std::abs(c.result.certificate.primal_value - expect[i]);
      ok = ok && err <= kTol && c.seconds <= 600.0;
      detail += c.name.substr(10) + fmt(" err %.1e", err) + fmt(" %.2fs; ", c.seconds);
    }
    report.line(2, "universal M->N fidelities", ok, detail);
  }
  // 3
  {
    const double expect[] = {0.8535533906, 0.8333333333, 0.8061862178, 0.8};
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < covariant.size(); ++i) {
      const double err = std::abs(covariant[i].result.certificate.primal_value - expect[i]);
      ok = ok && err <= kTol;
      detail += covariant[i].name.substr(10) + fmt(" err %.1e; ", err);
    }
    report.line(3, "phase-covariant 1->N fidelities", ok, detail);
  }

  std::vector<const Case*> all;
  for (const auto* v : {&universal1, &universalM, &covariant})
    for (const auto& c : *v) all.push_back(&c);

  // 4
  {
    double gap = 0.0;
    bool pass = true;
    for (const auto* c : all) {
      gap = std::max(gap, std::abs(c->result.certificate.primal_value - c->result.dual.objective));
      pass = pass && c->result.certificate.pass;
    }
    report.line(4, "duality certification", gap <= kTol && pass,
                fmt("max |primal - dual| %.2e over ", gap) + std::to_string(all.size()) +
                    " scenarios, certificates " + (pass ? "all pass" : "NOT all pass"));
  }
  // 5
  {
    double comp = 0.0, round = 0.0, fid = 0.0;
    for (const auto* c : all) {
      comp = std::max(comp, c->kraus.completeness_residual);
      round = std::max(round, (kraus::choi_from_kraus(c->kraus, c->result.choi.output_shape).matrix -
                               c->result.choi.matrix).norm());
      fid = std::max(fid, std::abs(kraus::average_fidelity(c->kraus, c->target, c->set) -
                                   targets::fidelity(c->result.choi.matrix, c->target.matrix)));
    }
    report.line(5, "Kraus validity", comp <= 1e-6 && round <= 1e-8 && fid <= 1e-8,
                fmt("completeness %.1e", comp) + fmt(", round trip %.1e", round) +
                    fmt(", fidelity %.1e", fid));
  }
  // 6
  {
    const std::size_t expect_cov[] = {2, 1, 2, 3};
    bool ok = true;
    std::string detail = "universal";
    for (std::size_t i = 0; i < universal1.size(); ++i) {
      ok = ok && universal1[i].kraus.size() == i + 2;
      detail += " " + std::to_string(universal1[i].kraus.size()) + "/" + std::to_string(i + 2);
    }
    detail += "; covariant";
    for (std::size_t i = 0; i < covariant.size(); ++i) {
      ok = ok && covariant[i].kraus.size() == expect_cov[i];
      detail += " " + std::to_string(covariant[i].kraus.size()) + "/" + std::to_string(expect_cov[i]);
    }
    report.line(6, "Kraus counts at cut-off 1e-7", ok, detail + " (found/expected)");
  }
  // 7
  {
    double err = 0.0;
    for (double th : {0.0, std::numbers::pi / 12, std::numbers::pi / 8, std::numbers::pi / 6,
                      std::numbers::pi / 4}) {
      const auto sc = targets::make_scenario(Family::TwoPair, 1, 2, th);
      const auto r = sdp::solve(sdp::assemble_primal(targets::omega_local(targets::default_sampling(sc), sc)));
      err = std::max(err, std::abs(r.certificate.primal_value - targets::analytic::two_pair(th)));
    }
    report.line(7, "two-pair curve", err <= kTol, fmt("max error %.2e over 5 angles", err));
  }
  // 8 (sweep values are kept for 11)
  std::map<std::pair<int, int>, double> f_a;  // (family, lambda index)
  {
    bool ok = true;
    std::string detail;
    for (auto fam : {attacks::Family::Universal, attacks::Family::PhaseCovariant}) {
      const auto sc = attacks::cloner_scenario(fam);
      const auto set = targets::default_sampling(sc);
      const auto wa = targets::omega_local(set, sc, 0), wb = targets::omega_local(set, sc, 1);
      const double sym = fam == attacks::Family::Universal ? 5.0 / 6.0 : 0.8535533906;
      double prev = -1.0, sym_err = 0.0;
      bool mono = true;
      for (int i = 0; i <= 10; ++i) {
        const double l = i / 10.0;
        const auto r = sdp::solve(sdp::assemble_primal(targets::omega_asymmetric(set, sc, l)));
        const double fa = targets::fidelity(r.choi.matrix, wa.matrix);
        const double fb = targets::fidelity(r.choi.matrix, wb.matrix);
        ok = ok && r.certificate.pass;
        f_a[{static_cast<int>(fam), i}] = fa;
        if (fa < prev - 1e-9) mono = false;
        prev = fa;
        if (i == 5) sym_err = std::max(std::abs(fa - sym), std::abs(fb - sym));
      }
      ok = ok && mono && sym_err <= kTol;
      detail += attacks::to_string(fam) + fmt(" lambda=0.5 err %.1e", sym_err) +
                (mono ? " monotone; " : " NOT monotone; ");
    }
    report.line(8, "asymmetric sweep", ok, detail);
  }
  // 9
  {
    const auto sc = targets::make_scenario(Family::EntanglementReal, 1, 2);
    const auto set = states::bell_real8();
    const auto r = sdp::solve(sdp::assemble_primal(targets::omega_entanglement(set, Family::EntanglementReal)));
    const auto k = kraus::extract(r.choi);
    double pur = 0.0, conc = 0.0;
    for (const auto& psi : set.states) {
      const auto clone = kraus::marginal(kraus::apply(k, psi.projector()), SubsystemShape{4, 4}, 0);
      pur = std::max(pur, std::abs(kraus::purity(clone) - 0.75));
      conc = std::max(conc, std::abs(kraus::concurrence(clone) - 1.0 / std::sqrt(2.0)));
    }
    const double real_err = std::abs(r.certificate.primal_value - 0.8535533906);
    const auto gen_set = targets::default_sampling(targets::make_scenario(Family::EntanglementGeneral, 1, 2));
    const auto g = sdp::solve(
        sdp::assemble_primal(targets::omega_entanglement(gen_set, Family::EntanglementGeneral)));
    const double gen_err = std::abs(g.certificate.primal_value - 0.7171292);
    report.line(9, "entanglement cloning",
                real_err <= kTol && pur <= kTol && conc <= kTol && gen_err <= 1e-3 &&
                    r.certificate.pass && g.certificate.pass,
                fmt("real err %.1e", real_err) + fmt(", purity %.1e", pur) +
                    fmt(", concurrence %.1e", conc) + ", general (" + gen_set.descriptor.label() +
                    ")" + fmt(" err %.1e", gen_err));
  }
  // 10
  {
    const auto sc = targets::make_scenario(Family::Universal, 1, 2);
    std::vector<double> xs, errs;
    std::string detail;
    for (std::size_t n : {10, 100, 1000}) {
      const auto r = sdp::solve(sdp::assemble_primal(targets::omega_local(states::fibonacci_sphere(n), sc)));
      xs.push_back(static_cast<double>(n));
      errs.push_back(std::abs(r.certificate.primal_value - 5.0 / 6.0));
      detail += fmt("|S|=%.0f", static_cast<double>(n)) + fmt(" err %.2e; ", errs.back());
    }
    const double slope = bench::loglog_slope(xs, errs);
    report.line(10, "sampling convergence", slope >= -2.4 && slope <= -1.6,
                detail + fmt("slope %.3f", slope));
  }
  // 11
  {
    std::vector<double> lambdas, mus;
    for (int i = 0; i <= 10; ++i) {
      lambdas.push_back(i / 10.0);
      mus.push_back(0.075 * i);
    }
    double col0 = 0.0, endpoint = 0.0, affine = 0.0, eve = 0.0;
    bool ok = true;
    for (auto [fam, proto] : {std::pair{attacks::Family::Universal, attacks::Protocol::SixState},
                              std::pair{attacks::Family::PhaseCovariant, attacks::Protocol::FourState}}) {
      const auto rs = attacks::attack_sweep(fam, proto, lambdas, mus);
      for (std::size_t li = 0; li < lambdas.size(); ++li) {
        const auto& base = rs[li * mus.size()];
        ok = ok && base.ok();
        col0 = std::max(col0, std::abs(base.f_bob - f_a[{static_cast<int>(fam), static_cast<int>(li)}]));
        for (std::size_t mi = 0; mi < mus.size(); ++mi) {
          const auto& r = rs[li * mus.size() + mi];
          ok = ok && r.ok();
          const double mu = mus[mi];
          affine = std::max(affine, std::abs(r.f_bob - ((1 - 4 * mu / 3) * base.f_bob + 2 * mu / 3)));
          eve = std::max(eve, std::abs(r.f_eve - base.f_eve));
        }
        endpoint = std::max(endpoint, std::abs(rs[li * mus.size() + mus.size() - 1].f_bob - 0.5));
      }
    }
    report.line(11, "BB84 / six-state attack",
                ok && col0 <= kTol && endpoint <= kTol && affine <= kTol && eve <= 1e-9,
                fmt("mu=0 vs sweep %.1e", col0) + fmt(", mu=3/4 %.1e", endpoint) +
                    fmt(", affine %.1e", affine) + fmt(", Eve drift %.1e", eve));
  }
  // 12
  {
    states::Rng rng(12);
    double identity_err = 0.0;
    for (int t = 0; t < 100; ++t) {
      const int n = 2 + t % 2;
      const auto sc = targets::make_scenario(Family::Universal, 1, n);
      const auto ch = testing::random_channel(rng, 2, sc.d_out(), 1 + t % 3);
      const auto j = kraus::choi_from_kraus(ch, sc.output_shape());
      const Ket psi = testing::random_ket(rng, 2);
      const std::size_t copy = static_cast<std::size_t>(t) % static_cast<std::size_t>(n);
      const auto target = targets::omega_local(testing::single_state(psi), sc, copy);
      const ComplexMatrix out = kraus::apply(ch, psi.projector());
      const double direct =
          (psi.amplitudes().adjoint() * partial_trace(out, sc.output_shape(), {copy}) * psi.amplitudes())(0, 0).real();
      identity_err = std::max(identity_err, std::abs(targets::fidelity(j.matrix, target.matrix) - direct));
    }
    double weak = 0.0, cptp = 0.0, sym = 0.0;
    std::size_t iterates = 0;
    for (const auto* c : all) {
      for (const auto& it : c->result.primal.history) {
        weak = std::max(weak, it.primal_objective - it.dual_objective);
        ++iterates;
      }
      const auto& j = c->result.choi;
      cptp = std::max({cptp, j.trace_preservation_residual(), j.positivity_residual(),
                       j.hermiticity_residual()});
      sym = std::max(sym, sdp::symmetry_residual(j.matrix, c->problem.symmetry_generators));
    }
    report.line(12, "property suites",
                identity_err <= 1e-10 && weak <= 1e-9 && cptp <= kTol && sym <= kTol && iterates > 0,
                fmt("identity %.1e", identity_err) + fmt(", weak duality violation %.1e over ", weak) +
                    std::to_string(iterates) + " iterates" + fmt(", CPTP %.1e", cptp) +
                    fmt(", symmetry %.1e", sym));
  }

  std::printf("%d of 12 criteria failed\n", report.failures());
  return report.failures() == 0 ? 0 : 1;
}
