// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Usage: acceptance <path-to-gvec_cli>
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "common.hpp"

using namespace gvec;
using testing_support::config;
using testing_support::fixture;
using testing_support::randomCokernel;
using testing_support::randomGVector;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string cliPath;

std::string fixturePath(const std::string& name) { return std::string(GVEC_FIXTURES) + "/" + name + ".json"; }

std::pair<int, std::string> runCli(const std::string& args) {
  FILE* pipe = popen((cliPath + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<Representation> cokernelSamples(const BoundQuiverAlgebra& alg, std::size_t count, Rng& rng) {
  std::vector<Representation> out;
  while (out.size() < count) {
    auto m = randomCokernel(alg, randomGVector(alg.vertexCount(), 2, rng), rng);
    if (m.totalDim() > 0) out.push_back(std::move(m));
  }
  return out;
}

GVector randomSigned(std::size_t n, std::int64_t sign, Rng& rng) {
  GVector g(n);
  while (g.isZero())
    for (auto& x : g.c) x = sign * std::uniform_int_distribution<std::int64_t>(0, 3)(rng);
  return g;
}

Outcome kroneckerPairing() {
  Outcome o;
  std::ostringstream d;
  for (int m : {3, 4, 5}) {
    const auto alg = fixture("k" + std::to_string(m));
    const GVector g{1, -1};
    const auto p = pairing(g, dOfG(alg, g, config()).d);
    const bool wild = wildnessVerdict(alg, g, config()).wild;
    d << "K" << m << ": <g,d(g)>=" << p << (wild ? " wild; " : " tame; ");
    o.pass = o.pass && p == 2 - m && wild;
  }
  o.detail = d.str();
  return o;
}

Outcome arOracle() {
  Outcome o;
  std::size_t pairs = 0, bad = 0;
  Rng rng(1001);
  for (const char* name : {"a2", "a3", "a3rel", "k2", "k3"}) {
    const auto alg = fixture(name);
    const auto ms = cokernelSamples(alg, 8, rng);
    for (const auto& m : ms) {
      const GVector g = gVectorOf(minimalPresentation(m));
      const auto tm = tau(m);
      for (const auto& n : ms) {
        const auto lhs = pairing(g, dimensionVector(n));
        const auto rhs = static_cast<std::int64_t>(homDim(m, n)) - static_cast<std::int64_t>(homDim(n, tm));
        ++pairs;
        if (lhs != rhs) ++bad;
      }
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(pairs - bad) + "/" + std::to_string(pairs) + " pairs";
  return o;
}

Outcome dualPath() {
  Outcome o;
  std::size_t pairs = 0, bad = 0, minPerFixture = SIZE_MAX;
  Rng rng(1002);
  for (const char* name : {"a2", "a3", "a3rel", "k2", "k3"}) {
    const auto alg = fixture(name);
    const auto ms = cokernelSamples(alg, 8, rng);
    std::vector<Presentation> as;
    for (const auto& m : ms) as.push_back(minimalPresentation(m));
    std::size_t here = 0;
    for (std::size_t i = 0; i < as.size(); ++i) {
      const auto ta = tau(ms[i]);
      for (std::size_t j = 0; j < as.size(); ++j) {
        ++here;
        if (homotopyHomDim(as[i], as[j]) != homDim(ms[j], ta)) ++bad;
      }
    }
    pairs += here;
    minPerFixture = std::min(minPerFixture, here);
  }
  o.pass = bad == 0 && minPerFixture >= 50;
  o.detail = std::to_string(pairs - bad) + "/" + std::to_string(pairs) + " pairs, >= " +
             std::to_string(minPerFixture) + " per fixture";
  return o;
}

struct DecompositionCase {
  const char* algebra;
  GVector g;
  std::vector<std::pair<GVector, std::size_t>> expected;
};

const std::vector<DecompositionCase>& decompositionCases() {
  static const std::vector<DecompositionCase> cases = {
      {"a2", {2, -1}, {{{1, -1}, 1}, {{1, 0}, 1}}},
      {"k2", {2, -2}, {{{1, -1}, 2}}},
      {"k3", {1, -1}, {{{1, -1}, 1}}},
  };
  return cases;
}

Outcome genericDecompositions() {
  Outcome o;
  std::ostringstream d;
  for (const auto& c : decompositionCases()) {
    const auto r = genericDecomposition(fixture(c.algebra), c.g, config());
    std::vector<std::pair<GVector, std::size_t>> got;
    for (const auto& s : r.summands) got.emplace_back(s.g, s.multiplicity);
    bool ok = got == c.expected && r.agreementRatio >= 0.8;
    if (c.g == GVector{1, -1}) ok = ok && r.summands.size() == 1 && r.summands.front().indecomposable;
    d << c.algebra << " " << c.g.str() << " agreement " << r.agreementRatio << "; ";
    o.pass = o.pass && ok;
  }
  o.detail = d.str();
  return o;
}

Outcome signedTameness() {
  Outcome o;
  Rng rng(1005);
  const std::vector<BoundQuiverAlgebra> algs = {fixture("a1"), fixture("a2"), fixture("a3"), fixture("a3rel"),
                                                fixture("k2"), fixture("k3"), fixture("k5")};
  std::size_t checked = 0, bad = 0;
  for (std::int64_t sign : {1, -1})
    for (int k = 0; k < 100; ++k) {
      const auto& alg = algs[static_cast<std::size_t>(k) % algs.size()];
      const GVector g = randomSigned(alg.vertexCount(), sign, rng);
      ++checked;
      if (!isTame(alg, g, config()) || eInvariant(alg, g, g, config()).value != 0) ++bad;
    }
  o.pass = bad == 0;
  o.detail = std::to_string(checked - bad) + "/" + std::to_string(checked) + " signed g-vectors";
  return o;
}

Outcome affineDimZ() {
  Outcome o;
  std::ostringstream d;
  const std::vector<std::pair<const char*, GVector>> cases = {{"k2", {1, -1}}, {"k3", {1, -1}}, {"a2", {1, -1}},
                                                               {"a2", {2, -1}}};
  for (const auto& [name, g] : cases) {
    const auto alg = fixture(name);
    const auto dv = dOfG(alg, g, config()).d;
    std::int64_t affine = 0;
    for (const auto& a : alg.quiver().arrows) affine += dv[a.source] * dv[a.target];
    const auto z = dimZ(alg, g, config());
    d << name << " " << g.str() << ": " << z << "=" << affine << "; ";
    o.pass = o.pass && z == affine;
  }
  o.detail = d.str();
  return o;
}

Outcome coherence() {
  Outcome o;
  std::ostringstream d;
  for (const auto& c : decompositionCases()) {
    const auto alg = fixture(c.algebra);
    auto r = genericDecomposition(alg, c.g, config());
    auto offDiagonalZero = [](const GenericDecompositionReport& rep) {
      for (std::size_t i = 0; i < rep.eMatrix.size(); ++i)
        for (std::size_t j = 0; j < rep.eMatrix.size(); ++j)
          if (i != j && rep.eMatrix[i][j] != 0) return false;
      return true;
    };
    bool ok = offDiagonalZero(r);
    if (!ok) {
      r = genericDecomposition(alg, c.g, config(2024, 15));
      ok = offDiagonalZero(r);
      d << "(rerun s=15) ";
    }
    d << c.algebra << " " << c.g.str() << " " << r.eMatrix.size() << "x" << r.eMatrix.size() << "; ";
    o.pass = o.pass && ok;
  }
  o.detail = d.str();
  return o;
}

Outcome independence() {
  Outcome o;
  std::size_t checked = 0, bad = 0;
  for (const char* name : {"a1", "a2", "a3rel", "k2"}) {
    const auto alg = fixture(name);
    Rng rng(1008);
    for (int k = 0; k < 100; ++k) {
      const GVector g = randomGVector(alg.vertexCount(), 5, rng);
      const auto ind = indSummands(alg, g, config());
      ++checked;
      if (!linearIndependence(ind.summands) || ind.summands.size() > static_cast<std::size_t>(alg.vertexCount())) ++bad;
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(checked - bad) + "/" + std::to_string(checked) + " g-vectors";
  return o;
}

Outcome closedForm() {
  Outcome o;
  Rng rng(1009);
  std::size_t probed = 0, applicable = 0, bad = 0;
  for (const char* name : {"a2", "a3", "a3rel", "k2", "k3", "k5"}) {
    const auto alg = fixture(name);
    for (int k = 0; k < 30; ++k) {
      const GVector g = randomGVector(alg.vertexCount(), 3, rng);
      ++probed;
      try {
        const auto c = closedFormPairing(alg, g, config());
        ++applicable;
        if (c != pairing(g, dOfG(alg, g, config()).d)) ++bad;
      } catch (const ComponentError&) {
      }
    }
  }
  o.pass = bad == 0 && applicable > 0;
  o.detail = std::to_string(applicable - bad) + "/" + std::to_string(applicable) + " injective of " +
             std::to_string(probed) + " probed";
  return o;
}

Outcome eMinHomIdentity() {
  Outcome o;
  std::size_t trials = 0, exact = 0, resolved = 0;
  for (const char* name : {"a2", "a3rel", "k2", "k3"}) {
    const auto alg = fixture(name);
    Rng rng(1010);
    std::vector<GVector> gs;
    for (int attempt = 0; attempt < 100 && gs.size() < 5; ++attempt) {
      const GVector g = randomGVector(alg.vertexCount(), 2, rng);
      if (g.isZero()) continue;
      bool negative = false;
      for (const auto& s : genericDecomposition(alg, g, config()).summands) negative = negative || isNegative(s.g);
      if (!negative) gs.push_back(g);
    }
    auto holds = [&](const GVector& g, const GVector& h, const SampleConfig& cfg) {
      const auto e = static_cast<std::int64_t>(eInvariant(alg, g, h, cfg).value);
      return e == static_cast<std::int64_t>(minHom(alg, g, h, cfg)) - pairing(g, dOfG(alg, h, cfg).d);
    };
    for (const auto& g : gs)
      for (const auto& h : gs) {
        ++trials;
        if (holds(g, h, config()))
          ++exact;
        else if (holds(g, h, config(2024, 15)))
          ++resolved;
      }
  }
  o.pass = 10 * exact >= 9 * trials && exact + resolved == trials;
  o.detail = std::to_string(exact) + "/" + std::to_string(trials) + " exact at s=7, " +
             std::to_string(exact + resolved) + "/" + std::to_string(trials) + " at s=15";
  return o;
}

Outcome tameSign() {
  Outcome o;
  Rng rng(1011);
  std::size_t probed = 0, tame = 0, bad = 0;
  for (const char* name : {"a1", "a2", "a3", "a3rel", "k2", "k3", "k5"}) {
    const auto alg = fixture(name);
    for (int k = 0; k < 15; ++k) {
      const GVector g = randomGVector(alg.vertexCount(), 3, rng);
      ++probed;
      if (!isTame(alg, g, config())) continue;
      ++tame;
      if (pairing(g, dOfG(alg, g, config()).d) < 0) ++bad;
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(tame) + " tame of " + std::to_string(probed) + " probed, " + std::to_string(bad) +
             " with negative pairing";
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> cmds = {
      "algebra-check -a " + fixturePath("a3rel"),
      "gdecomp -a " + fixturePath("k3") + " --g=2,-3",
      "einv -a " + fixturePath("k3") + " --g=1,-1 --h=2,-1",
      "tame -a " + fixturePath("k2") + " --g=1,-1",
      "dvec -a " + fixturePath("a3") + " --g=1,0,-1",
      "zdim -a " + fixturePath("k3") + " --g=1,-1",
      "pairing -a " + fixturePath("k3") + " --g=1,-1",
      "component -a " + fixturePath("a3rel") + " --g=1,-1,1",
      "conditions -a " + fixturePath("k3") + " --g=1,-1 --tmax 3",
      "hunt --budget 2",
  };
  std::size_t same = 0;
  for (const auto& c : cmds) {
    const auto a = runCli(c + " --machine --seed 5"), b = runCli(c + " --machine --seed 5"),
               d = runCli(c + " --machine --seed 5");
    if (a.first == 0 && !a.second.empty() && a == b && a == d) ++same;
  }
  o.pass = same == cmds.size();
  o.detail = std::to_string(same) + "/" + std::to_string(cmds.size()) + " commands byte-identical over 3 runs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <gvec_cli>\n";
    return 2;
  }
  cliPath = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"kronecker pairing and wildness", kroneckerPairing},
      {"auslander-reiten pairing oracle", arOracle},
      {"dual-path e-invariant", dualPath},
      {"generic decompositions", genericDecompositions},
      {"positive and negative tameness", signedTameness},
      {"dim Z_g on affine representation spaces", affineDimZ},
      {"pairwise e vanishes across summands", coherence},
      {"linear independence of ind(g)", independence},
      {"closed-form pairing", closedForm},
      {"e = min hom - pairing", eMinHomIdentity},
      {"tame g has non-negative pairing", tameSign},
      {"machine-mode determinism", determinism},
  };
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed in " << secs << " s"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
