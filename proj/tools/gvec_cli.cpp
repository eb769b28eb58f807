// Command-line front end: algebra ingestion, g-vector calculus, component
// analytics and the counterexample hunter.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gvec/gvec.hpp"
#include "gvec/io.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace gvec;

constexpr const char* kExact = "exact";
constexpr const char* kWhp = "upper-bound-whp";
constexpr const char* kBounded = "bounded-exhausted";

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kLowConfidence = 3;

Json tag(Json v, const char* semantics) { return Json{{"value", std::move(v)}, {"semantics", semantics}}; }

Json vec(const GVector& g) { return Json(g.c); }
Json vec(const DimensionVector& d) { return Json(d.c); }

template <typename T>
Json matrixJson(const std::vector<std::vector<T>>& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(Json(row));
  return out;
}

struct Options {
  std::string algebra;
  std::uint64_t prime = kDefaultPrime;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 7;
  std::size_t tMax = 6;
  std::size_t rounds = 12;
  std::size_t crossPrimes = 2;
  bool machine = false;
  bool allowLowConfidence = false;
  std::string g, h, d;

  // hunt
  std::vector<std::string> fixtures;
  std::size_t budget = 10;
  int maxVertices = 3;
  int maxArrows = 4;
  int maxRelations = 1;
  int nilpotency = 4;
  int gMax = 2;

  SampleConfig config() const {
    SampleConfig c;
    c.seed = seed.value_or(0);
    c.samples = samples;
    c.fittingRounds = rounds;
    c.crossPrimes = crossPrimes;
    c.validate();
    return c;
  }
};

Json configJson(const Options& o) {
  return Json{{"prime", tag(o.prime, kExact)},
              {"seed", tag(o.seed.value_or(0), kExact)},
              {"samples", tag(o.samples, kExact)},
              {"fittingRounds", tag(o.rounds, kExact)},
              {"crossPrimes", tag(o.crossPrimes, kExact)},
              {"tMax", tag(o.tMax, kExact)}};
}

BoundQuiverAlgebra loadAlgebra(const Options& o) {
  return buildAlgebra(loadAlgebraSpec(o.algebra), PrimeField(o.prime));
}

GVector argVector(const BoundQuiverAlgebra& alg, const std::string& text, const char* name) {
  if (text.empty()) throw InputError(std::string("--") + name + " is required");
  GVector g = parseGVector(text);
  if (g.size() != static_cast<std::size_t>(alg.vertexCount()))
    throw InputError(std::string("--") + name + " has " + std::to_string(g.size()) + " entries, the algebra has " +
                     std::to_string(alg.vertexCount()) + " vertices");
  return g;
}

// ---------------------------------------------------------------- rendering

void renderHuman(const Json& j, const std::string& indent, std::ostream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object() && v.contains("semantics")) {
      os << indent << it.key() << ": " << v["value"].dump() << "  [" << v["semantics"].get<std::string>() << "]\n";
    } else if (v.is_object()) {
      os << indent << it.key() << ":\n";
      renderHuman(v, indent + "  ", os);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << indent << it.key() << ":\n";
      for (const auto& e : v) {
        if (e.contains("semantics")) {
          os << indent << "  - " << e["value"].dump() << "  [" << e["semantics"].get<std::string>() << "]\n";
          continue;
        }
        os << indent << "  -\n";
        renderHuman(e, indent + "    ", os);
      }
    } else {
      os << indent << it.key() << ": " << v.dump() << "\n";
    }
  }
}

void emit(const Options& o, const Json& doc) {
  if (o.machine)
    std::cout << doc.dump() << "\n";
  else
    renderHuman(doc, "", std::cout);
}

int confidenceExit(const Options& o, bool low) {
  if (!low) return kOk;
  std::cerr << "low confidence: samples disagree (raise --samples or change --prime)\n";
  return o.allowLowConfidence ? kOk : kLowConfidence;
}

// ---------------------------------------------------------------- commands

int cmdAlgebraCheck(const Options& o) {
  const auto alg = loadAlgebra(o);
  Json proj = Json::array(), inj = Json::array();
  for (int i = 0; i < alg.vertexCount(); ++i) {
    proj.push_back(tag(projective(alg, i).dims(), kExact));
    inj.push_back(tag(injective(alg, i).dims(), kExact));
  }
  Json doc{{"command", "algebra-check"},
           {"vertices", tag(alg.vertexCount(), kExact)},
           {"arrows", tag(alg.arrowCount(), kExact)},
           {"dimension", tag(alg.dim(), kExact)},
           {"cartan", tag(matrixJson(alg.cartanMatrix()), kExact)},
           {"projectives", proj},
           {"injectives", inj},
           {"config", configJson(o)}};
  emit(o, doc);
  return kOk;
}

Json decompositionJson(const GenericDecompositionReport& r) {
  Json summands = Json::array();
  for (const auto& s : r.summands)
    summands.push_back(Json{{"g", tag(vec(s.g), kExact)},
                            {"multiplicity", tag(s.multiplicity, kWhp)},
                            {"indecomposable", s.indecomposable},
                            {"tame", s.tame}});
  return Json{{"summands", summands},
              {"agreementRatio", tag(r.agreementRatio, kExact)},
              {"votes", tag(r.votes, kExact)},
              {"trials", tag(r.trials, kExact)},
              {"primes", tag(r.primes, kExact)},
              {"eMatrix", tag(matrixJson(r.eMatrix), kWhp)},
              {"coherent", r.coherent},
              {"zeroSummandSeen", r.zeroSummandSeen},
              {"isoUndecided", r.isoUndecided},
              {"lowConfidence", r.lowConfidence}};
}

int cmdGdecomp(const Options& o) {
  const auto alg = loadAlgebra(o);
  const GVector g = argVector(alg, o.g, "g");
  const auto rep = genericDecomposition(alg, g, o.config());
  Json doc{{"command", "gdecomp"}, {"g", tag(vec(g), kExact)}};
  doc.update(decompositionJson(rep));
  doc["config"] = configJson(o);
  emit(o, doc);
  return confidenceExit(o, rep.lowConfidence);
}

int cmdEinv(const Options& o) {
  const auto alg = loadAlgebra(o);
  const GVector g = argVector(alg, o.g, "g"), h = argVector(alg, o.h, "h");
  const auto e = eInvariant(alg, g, h, o.config());
  Json doc{{"command", "einv"},
           {"g", tag(vec(g), kExact)},
           {"h", tag(vec(h), kExact)},
           {"e", tag(e.value, kWhp)},
           {"config", configJson(o)}};
  emit(o, doc);
  return kOk;
}

int cmdTame(const Options& o) {
  const auto alg = loadAlgebra(o);
  const GVector g = argVector(alg, o.g, "g");
  const auto cfg = o.config();
  const auto v = isDirectSum(alg, g, g, cfg);
  const bool tame = isPositive(g) || isNegative(g) || v.value;
  Json doc{{"command", "tame"},
           {"g", tag(vec(g), kExact)},
           {"tame", tame},
           {"certified", tame && (isPositive(g) || isNegative(g) || v.witness.has_value())},
           {"eSelf", tag(std::min(v.eGH, v.eHG), kWhp)},
           {"config", configJson(o)}};
  emit(o, doc);
  return kOk;
}

int cmdDvec(const Options& o) {
  const auto alg = loadAlgebra(o);
  const GVector g = argVector(alg, o.g, "g");
  const auto d = dOfG(alg, g, o.config());
  Json doc{{"command", "dvec"},
           {"g", tag(vec(g), kExact)},
           {"d", tag(vec(d.d), kWhp)},
           {"maximalRankSamples", tag(d.kept, kExact)},
           {"lowConfidence", d.lowConfidence},
           {"config", configJson(o)}};
  emit(o, doc);
  return confidenceExit(o, d.lowConfidence);
}

int cmdZdim(const Options& o) {
  const auto alg = loadAlgebra(o);
  const GVector g = argVector(alg, o.g, "g");
  const auto d = dOfG(alg, g, o.config());
  const std::int64_t pr = pairing(g, d.d);
  Json doc{{"command", "zdim"},
           {"g", tag(vec(g), kExact)},
           {"d", tag(vec(d.d), kWhp)},
           {"glDim", tag(glDim(d.d), kWhp)},
           {"pairing", tag(pr, kWhp)},
           {"dimZ", tag(glDim(d.d) - pr, kWhp)},
           {"lowConfidence", d.lowConfidence},
           {"config", configJson(o)}};
  emit(o, doc);
  return confidenceExit(o, d.lowConfidence);
}

int cmdPairing(const Options& o) {
  const auto alg = loadAlgebra(o);
  const GVector g = argVector(alg, o.g, "g");
  Json doc{{"command", "pairing"}, {"g", tag(vec(g), kExact)}};
  bool low = false;
  if (!o.d.empty()) {
    const GVector raw = argVector(alg, o.d, "d");
    DimensionVector d(raw.c);
    for (auto x : d.c)
      if (x < 0) throw InputError("--d must be non-negative");
    doc["d"] = tag(vec(d), kExact);
    doc["pairing"] = tag(pairing(g, d), kExact);
  } else {
    const auto d = dOfG(alg, g, o.config());
    low = d.lowConfidence;
    doc["d"] = tag(vec(d.d), kWhp);
    doc["pairing"] = tag(pairing(g, d.d), kWhp);
    try {
      doc["closedForm"] = tag(closedFormPairing(alg, g, o.config()), kExact);
    } catch (const ComponentError&) {
      doc["closedForm"] = nullptr;
    }
  }
  doc["config"] = configJson(o);
  emit(o, doc);
  return confidenceExit(o, low);
}

int cmdComponent(const Options& o) {
  const auto alg = loadAlgebra(o);
  const GVector g = argVector(alg, o.g, "g");
  const auto cfg = o.config();
  const auto r = componentReport(alg, g, cfg);
  const auto w = wildnessVerdict(alg, g, cfg);
  const auto dec = genericDecomposition(alg, g, cfg);
  Json summands = Json::array();
  for (const auto& s : r.summands)
    summands.push_back(Json{{"g", tag(vec(s.g), kExact)}, {"multiplicity", tag(s.multiplicity, kWhp)}, {"tame", s.tame}});
  Json doc{{"command", "component"},
           {"g", tag(vec(g), kExact)},
           {"d", tag(vec(r.dOfG), kWhp)},
           {"dimZ", tag(r.dimZ, kWhp)},
           {"componentCount", tag(r.componentCount, kWhp)},
           {"indCount", tag(r.indCount, kWhp)},
           {"pairing", tag(r.pairing, kWhp)},
           {"minHomSelf", tag(r.minHomSelf, kWhp)},
           {"eSelf", tag(r.eSelf, kWhp)},
           {"verdict", r.summands.empty() || !w.wild ? "tame" : "wild"},
           {"verdictAgreesWithTameTest", w.agreesWithIsTame},
           {"negativePart", tag(vec(r.negativePart), kExact)},
           {"dAdditive", r.dAdditive},
           {"summands", summands},
           {"eMatrix", tag(matrixJson(dec.eMatrix), kWhp)}};
  try {
    doc["closedFormPairing"] = tag(closedFormPairing(alg, g, cfg), kExact);
  } catch (const ComponentError&) {
    doc["closedFormPairing"] = nullptr;
  }
  doc["lowConfidence"] = r.lowConfidence;
  doc["config"] = configJson(o);
  emit(o, doc);
  return confidenceExit(o, r.lowConfidence);
}

Json verdictJson(const ConditionVerdict& v) {
  Json j{{"status", toString(v.status)}};
  if (v.status == ConditionStatus::Fail) {
    j["witnessH"] = tag(vec(v.witnessH), kExact);
    j["witnessT"] = tag(v.witnessT, kExact);
  }
  return j;
}

int cmdConditions(const Options& o) {
  const auto alg = loadAlgebra(o);
  const GVector g = argVector(alg, o.g, "g");
  const auto cfg = o.config();
  const auto r = checkConditions(alg, g, o.tMax, cfg);
  const auto seq = indCountSequence(alg, g, o.tMax, cfg);
  bool decrease = false;
  for (std::size_t t = 1; t < seq.size(); ++t)
    if (seq[t] < seq[0]) decrease = true;
  Json wild = Json::array();
  for (const auto& h : r.wildSummands) wild.push_back(tag(vec(h), kExact));
  Json doc{{"command", "conditions"},
           {"g", tag(vec(g), kExact)},
           {"wildSummands", wild},
           {"nonDecreasing", verdictJson(r.nonDecreasing)},
           {"regularity", verdictJson(r.regularity)},
           {"ray", verdictJson(r.ray)},
           {"indCounts", tag(seq, kBounded)},
           {"indCountDecrease", decrease},
           {"chainConsistent", r.chainConsistent},
           {"lowConfidence", r.lowConfidence},
           {"config", configJson(o)}};
  emit(o, doc);
  return confidenceExit(o, r.lowConfidence);
}

// ---------------------------------------------------------------- hunt

std::size_t longestPath(const Quiver& q) {
  std::vector<std::size_t> best(static_cast<std::size_t>(q.vertexCount), 0);
  // arrows go from lower to higher vertices, so one pass in vertex order suffices
  for (int v = 0; v < q.vertexCount; ++v)
    for (const auto& a : q.arrows)
      if (a.source == v) best[a.target] = std::max(best[a.target], best[v] + 1);
  return best.empty() ? 0 : *std::max_element(best.begin(), best.end());
}

/// Random acyclic bound quiver within the generator bounds.
std::optional<AlgebraSpec> randomAlgebra(const Options& o, Rng& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int attempt = 0; attempt < 20; ++attempt) {
    AlgebraSpec s;
    s.quiver.vertexCount = pick(2, std::max(2, o.maxVertices));
    const int arrows = pick(1, std::max(1, o.maxArrows));
    for (int k = 0; k < arrows; ++k) {
      int a = pick(0, s.quiver.vertexCount - 1), b = pick(0, s.quiver.vertexCount - 1);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      s.quiver.arrows.push_back({"x" + std::to_string(k + 1), a, b});
    }
    if (s.quiver.arrows.empty()) continue;
    const std::size_t len = longestPath(s.quiver);
    if (static_cast<int>(len) >= o.nilpotency) continue;
    s.nilpotency = std::max(2, static_cast<int>(len) + 1);
    // relations: random combinations of parallel paths of length 2
    std::vector<std::pair<std::size_t, std::size_t>> composable;
    for (std::size_t i = 0; i < s.quiver.arrows.size(); ++i)
      for (std::size_t j = 0; j < s.quiver.arrows.size(); ++j)
        if (s.quiver.arrows[j].target == s.quiver.arrows[i].source) composable.emplace_back(i, j);
    const int rels = composable.empty() ? 0 : pick(0, std::max(0, o.maxRelations));
    for (int r = 0; r < rels; ++r) {
      const auto [i, j] = composable[static_cast<std::size_t>(pick(0, static_cast<int>(composable.size()) - 1))];
      Relation rel{{1, {s.quiver.arrows[i].name, s.quiver.arrows[j].name}}};
      for (const auto& [i2, j2] : composable)
        if ((i2 != i || j2 != j) && s.quiver.arrows[j2].source == s.quiver.arrows[j].source &&
            s.quiver.arrows[i2].target == s.quiver.arrows[i].target && pick(0, 1))
          rel.push_back({pick(1, 5), {s.quiver.arrows[i2].name, s.quiver.arrows[j2].name}});
      s.relations.push_back(std::move(rel));
    }
    return s;
  }
  return std::nullopt;
}

int cmdHunt(const Options& o) {
  const auto cfg = o.config();
  std::vector<AlgebraSpec> fixtures;
  for (const auto& f : o.fixtures) fixtures.push_back(loadAlgebraSpec(f));
  Json findings = Json::array();
  std::size_t examined = 0, skipped = 0;
  for (std::size_t trial = 0; trial < o.budget; ++trial) {
    const std::uint64_t trialSeed = mixSeed(cfg.seed, 0x68756e74ULL, trial);
    Rng rng(trialSeed);
    std::optional<AlgebraSpec> spec;
    if (!fixtures.empty())
      spec = fixtures[trial % fixtures.size()];
    else
      spec = randomAlgebra(o, rng);
    if (!spec) {
      ++skipped;
      continue;
    }
    std::optional<BoundQuiverAlgebra> alg;
    try {
      alg = buildAlgebra(*spec, PrimeField(o.prime));
    } catch (const AlgebraError&) {
      ++skipped;
      continue;
    }
    GVector g(static_cast<std::size_t>(alg->vertexCount()));
    while (g.isZero())
      for (auto& x : g.c) x = std::uniform_int_distribution<std::int64_t>(-o.gMax, o.gMax)(rng);
    SampleConfig tc = cfg;
    tc.seed = trialSeed;
    const auto seq = indCountSequence(*alg, g, o.tMax, tc);
    ++examined;
    for (std::size_t t = 2; t <= seq.size(); ++t)
      if (seq[t - 1] < seq[0])
        findings.push_back(Json{{"trial", tag(trial, kExact)},
                                {"trialSeed", tag(trialSeed, kExact)},
                                {"algebra", toJson(*spec)},
                                {"g", tag(vec(g), kExact)},
                                {"t", tag(t, kExact)},
                                {"indG", tag(seq[0], kWhp)},
                                {"indTG", tag(seq[t - 1], kWhp)}});
  }
  Json doc{{"command", "hunt"},
           {"budget", tag(o.budget, kExact)},
           {"examined", tag(examined, kExact)},
           {"skipped", tag(skipped, kExact)},
           {"findings", findings},
           {"note", "absence of findings is not a proof"},
           {"config", configJson(o)}};
  emit(o, doc);
  return kOk;
}

void addCommon(CLI::App* sub, Options& o, bool needsAlgebra = true) {
  if (needsAlgebra) sub->add_option("--algebra,-a", o.algebra, "algebra JSON file")->required()->check(CLI::ExistingFile);
  sub->add_option("--prime,-p", o.prime, "field characteristic")->capture_default_str();
  sub->add_option("--seed,-s", o.seed, "random seed (required with --machine)");
  sub->add_option("--samples", o.samples, "samples per general element")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--tmax", o.tMax, "bound for condition probes")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--rounds", o.rounds, "Fitting rounds before declaring indecomposable")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_option("--cross-primes", o.crossPrimes, "primes used by decompositions")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_flag("--machine", o.machine, "emit one JSON document");
  sub->add_flag("--allow-low-confidence", o.allowLowConfidence, "exit 0 even when samples disagree");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"g-vector calculus over bound quiver algebras"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("algebra-check", "dimension and Cartan data");
  addCommon(check, o);
  auto* gdecomp = app.add_subcommand("gdecomp", "generic decomposition of g");
  addCommon(gdecomp, o);
  auto* einv = app.add_subcommand("einv", "E-invariant e(g, h)");
  addCommon(einv, o);
  auto* tame = app.add_subcommand("tame", "is 2g = g + g");
  addCommon(tame, o);
  auto* dvec = app.add_subcommand("dvec", "dimension vector d(g)");
  addCommon(dvec, o);
  auto* zdim = app.add_subcommand("zdim", "dimension of the component Z_g");
  addCommon(zdim, o);
  auto* pair = app.add_subcommand("pairing", "<g, d> (d defaults to d(g))");
  addCommon(pair, o);
  auto* comp = app.add_subcommand("component", "component report for g");
  addCommon(comp, o);
  auto* cond = app.add_subcommand("conditions", "ray, regularity and non-decreasing probes");
  addCommon(cond, o);
  for (auto* sub : {gdecomp, einv, tame, dvec, zdim, pair, comp, cond})
    sub->add_option("--g,-g", o.g, "g-vector, comma separated (use --g=-1,2 for a leading minus)");
  einv->set_help_flag("--help", "print this help message and exit");
  einv->add_option("--h", o.h, "second g-vector");
  pair->add_option("--d", o.d, "dimension vector");

  auto* hunt = app.add_subcommand("hunt", "search random algebras for |ind(g)| > |ind(tg)|");
  addCommon(hunt, o, false);
  hunt->add_option("--algebra,-a", o.fixtures, "restrict to these algebra files")->check(CLI::ExistingFile);
  hunt->add_option("--budget", o.budget, "number of trials")->capture_default_str();
  hunt->add_option("--max-vertices", o.maxVertices)->capture_default_str()->check(CLI::Range(2, 8));
  hunt->add_option("--max-arrows", o.maxArrows)->capture_default_str()->check(CLI::Range(1, 12));
  hunt->add_option("--max-relations", o.maxRelations)->capture_default_str()->check(CLI::Range(0, 6));
  hunt->add_option("--nilpotency", o.nilpotency, "reject quivers with paths this long")
      ->capture_default_str()
      ->check(CLI::Range(2, 8));
  hunt->add_option("--gmax", o.gMax, "bound on |g_i|")->capture_default_str()->check(CLI::Range(1, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (o.machine && !o.seed) {
    std::cerr << "error: --machine requires --seed\n";
    return kInputError;
  }

  try {
    if (*check) return cmdAlgebraCheck(o);
    if (*gdecomp) return cmdGdecomp(o);
    if (*einv) return cmdEinv(o);
    if (*tame) return cmdTame(o);
    if (*dvec) return cmdDvec(o);
    if (*zdim) return cmdZdim(o);
    if (*pair) return cmdPairing(o);
    if (*comp) return cmdComponent(o);
    if (*cond) return cmdConditions(o);
    if (*hunt) return cmdHunt(o);
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << toString(e.kind()) << ": " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
