#include "commands.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "germcalc/errors.hpp"
#include "germcalc/oracle.hpp"

namespace germcalc::app {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kSafeInteger = 1ULL << 53;

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json header(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["engine"] = std::string("germcalc ") + kEngineVersion;
  j["command"] = command;
  return j;
}

Json strings(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.toString());
  return a;
}

Json describeInput(const Germfile& g) {
  Json in;
  in["source"] = g.source;
  in["field"] = g.ring->field().toString();
  in["variables"] = g.ring->names();
  in["X"] = strings(g.phi);
  in["f"] = g.f ? Json(g.f->toString()) : Json(nullptr);
  return in;
}

Json describeCertificate(const ICISCertificate& c) {
  Json j;
  j["valid"] = c.valid;
  if (!c.reason.empty()) j["reason"] = c.reason;
  j["singularColength"] = exactNumber(c.singularColength);
  Json cols = Json::array();
  for (const auto& v : c.chain.colengths) cols.push_back(exactNumber(v));
  j["chainColengths"] = cols;
  Json mu = Json::array();
  for (auto v : c.chain.milnor) mu.push_back(exactNumber(ExtendedNat(v)));
  j["chainMilnor"] = mu;
  j["chainGenerators"] = strings(c.chain.generators);
  j["chainAttempts"] = c.chain.attempts;
  return j;
}

std::string ringLabel(const Germfile& g) {
  std::string s = g.ring->field().toString() + "{";
  for (std::size_t i = 0; i < g.ring->names().size(); ++i) s += (i ? "," : "") + g.ring->names()[i];
  return s + "}";
}

std::string join(const std::vector<Polynomial>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].toString();
  return s;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

// A precondition failure on X itself is an input error.
std::optional<Outcome> rejectNonICIS(const std::string& command, const Germfile& g, const ICISData& X) {
  const auto& cert = X.certificate();
  if (cert.valid) return std::nullopt;
  Outcome o;
  o.doc = header(command);
  o.doc["input"] = describeInput(g);
  o.doc["error"] = "not an ICIS: " + cert.reason;
  o.doc["icis"] = describeCertificate(cert);
  o.text = "error: not an ICIS: " + cert.reason + "\n";
  o.exit = kInputError;
  return o;
}

}  // namespace

Json exactNumber(const ExtendedNat& v) {
  if (v.isInfinite()) return "infinite";
  if (v.value() > kSafeInteger) return std::to_string(v.value());
  return v.value();
}

Json exactNumber(std::optional<std::int64_t> v) {
  if (!v) return "infinite";
  const std::uint64_t mag = *v < 0 ? 0 - static_cast<std::uint64_t>(*v) : static_cast<std::uint64_t>(*v);
  if (mag > kSafeInteger) return std::to_string(*v);
  return *v;
}

std::uint32_t degreeCapFromEnvironment() {
  const char* raw = std::getenv("GERMCALC_DEGREE_CAP");
  if (!raw || !*raw) return GermRing::kDefaultDegreeCap;
  const std::string s(raw);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
    throw std::invalid_argument("GERMCALC_DEGREE_CAP must be a positive integer, got '" + s + "'");
  const auto cap = static_cast<std::uint32_t>(std::stoul(s));
  if (cap == 0) throw std::invalid_argument("GERMCALC_DEGREE_CAP must be positive");
  return cap;
}

Outcome computeCommand(const Germfile& g, const std::vector<std::string>& names, Method method, std::uint64_t seed) {
  const Stopwatch clock;
  const ICISData X(ICISPresentation(g.ring, g.phi), seed);
  if (auto bad = rejectNonICIS("compute", g, X)) return *bad;
  const InvariantReport rep = computeInvariants(X, g.f, names, method);

  Outcome o;
  o.doc = header("compute");
  o.doc["input"] = describeInput(g);
  o.doc["seed"] = seed;
  o.doc["method"] = method == Method::Direct ? "direct" : method == Method::Formula ? "formula" : "both";
  o.doc["icis"] = describeCertificate(X.certificate());
  Json inv = Json::object();
  for (const auto& e : rep.entries) inv[e.name] = Json{{"value", exactNumber(e.value)}, {"route", e.route}};
  o.doc["invariants"] = inv;
  Json skipped = Json::object();
  for (const auto& [name, why] : rep.skipped) skipped[name] = why;
  o.doc["skipped"] = skipped;
  o.doc["mismatches"] = rep.mismatches;
  o.doc["verdict"] = rep.mismatches.empty() ? "PASS" : "FAIL";
  o.doc["timing"] = Json{{"total_ms", clock.ms()}};

  std::ostringstream t;
  t << "X = V(" << join(g.phi) << ") in " << ringLabel(g);
  if (g.f) t << ", f = " << g.f->toString();
  t << "\n";
  for (const auto& e : rep.entries)
    t << "  " << pad(e.name, 18) << pad(e.value ? std::to_string(*e.value) : "infinite", 10) << e.route << "\n";
  for (const auto& [name, why] : rep.skipped) t << "  " << pad(name, 18) << pad("skipped", 10) << why << "\n";
  for (const auto& m : rep.mismatches) t << "route mismatch: " << m << "\n";
  o.text = t.str();
  o.exit = rep.mismatches.empty() ? kOk : kFailure;
  return o;
}

Outcome verifyCommand(const Germfile& g, const std::vector<std::string>& identities, std::uint64_t seed) {
  const Stopwatch clock;
  const ICISData X(ICISPresentation(g.ring, g.phi), seed);
  if (auto bad = rejectNonICIS("verify", g, X)) return *bad;
  const std::vector<std::string>& ids = identities.empty() ? identityIds() : identities;
  for (const auto& id : ids)
    if (std::find(identityIds().begin(), identityIds().end(), id) == identityIds().end())
      throw std::invalid_argument("unknown identity '" + id + "'");

  Outcome o;
  o.doc = header("verify");
  o.doc["input"] = describeInput(g);
  o.doc["seed"] = seed;
  Json checks = Json::array();
  std::ostringstream t;
  t << "X = V(" << join(g.phi) << ") in " << ringLabel(g);
  if (g.f) t << ", f = " << g.f->toString();
  t << "\n";
  bool failed = false;
  for (const auto& id : ids) {
    IdentityCheck c;
    try {
      c = verifyIdentity(id, X, g.f);
    } catch (const PreconditionFailed& e) {
      c.id = id;
      c.verdict = Verdict::Skipped;
      c.note = e.what();
    } catch (const InternalError& e) {
      c.id = id;
      c.verdict = Verdict::Fail;
      c.note = e.what();
    }
    failed = failed || c.verdict == Verdict::Fail;
    Json sides = Json::array();
    std::string shown;
    for (const auto& [name, value] : c.sides) {
      sides.push_back(Json{{"name", name}, {"value", exactNumber(value)}});
      shown += (shown.empty() ? "" : " | ") + name + " = " + value.toString();
    }
    checks.push_back(Json{{"id", c.id},
                          {"statement", c.statement},
                          {"verdict", toString(c.verdict)},
                          {"sides", sides},
                          {"note", c.note}});
    t << "  " << pad(c.id, 6) << pad(toString(c.verdict), 8) << shown;
    if (!c.note.empty()) t << (shown.empty() ? "" : "  ") << "(" << c.note << ")";
    t << "\n";
  }
  o.doc["identities"] = checks;
  o.doc["verdict"] = failed ? "FAIL" : "PASS";
  o.doc["timing"] = Json{{"total_ms", clock.ms()}};
  o.text = t.str();
  o.exit = failed ? kFailure : kOk;
  return o;
}

Outcome verifyCorpus(const std::vector<std::string>& paths, const std::vector<std::string>& identities,
                     std::optional<std::uint64_t> seed, unsigned jobs, std::uint32_t degreeCap) {
  const Stopwatch clock;
  std::vector<Outcome> results(paths.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < paths.size(); i = next++) {
      try {
        const Germfile g = loadGermfile(paths[i], degreeCap);
        results[i] = verifyCommand(g, identities, seed.value_or(g.seed.value_or(1)));
      } catch (const std::exception& e) {
        results[i] = errorOutcome("verify", e);
        results[i].doc["input"] = Json{{"source", paths[i]}};
        results[i].text = paths[i] + ": " + results[i].text;
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(paths.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  if (paths.size() == 1) return results.front();
  Outcome o;
  o.doc = header("verify");
  Json items = Json::array();
  int exit = kOk;
  for (auto& r : results) {
    r.doc.erase("timing");
    items.push_back(r.doc);
    o.text += r.text;
    exit = std::max(exit, r.exit);
  }
  o.doc["items"] = items;
  o.doc["verdict"] = exit == kOk ? "PASS" : "FAIL";
  o.doc["timing"] = Json{{"total_ms", clock.ms()}};
  o.text += std::string("corpus verdict: ") + (exit == kOk ? "PASS" : "FAIL") + "\n";
  o.exit = exit;
  return o;
}

Outcome conjectureCommand(std::size_t n, std::size_t k, std::uint64_t trials, std::uint32_t maxdeg,
                          std::uint64_t seed, const Field& field, ScanStratum stratum) {
  const Stopwatch clock;
  const ScanReport rep = conjectureScan(n, k, trials, maxdeg, seed, field, stratum);
  Outcome o;
  o.doc = header("conjecture");
  o.doc["parameters"] = Json{{"n", n},
                             {"k", k},
                             {"trials", trials},
                             {"maxdeg", maxdeg},
                             {"seed", seed},
                             {"field", field.toString()},
                             {"stratum", stratum == ScanStratum::Generic ? "generic" : "contained"}};
  Json rows = Json::array();
  std::uint64_t matches = 0, eulerFailures = 0;
  std::ostringstream t;
  t << "Tor lengths of regular sequences, n=" << n << " k=" << k << " over " << field.toString() << "\n";
  for (const auto& row : rep.rows) {
    Json tor = Json::array(), predicted = Json::array();
    std::string torText, predText;
    for (std::size_t i = 0; i < row.tor.size(); ++i) {
      tor.push_back(exactNumber(ExtendedNat(row.tor[i])));
      predicted.push_back(exactNumber(ExtendedNat(row.predicted[i])));
      torText += (i ? "," : "") + std::to_string(row.tor[i]);
      predText += (i ? "," : "") + std::to_string(row.predicted[i]);
    }
    matches += row.matches;
    eulerFailures += !row.eulerZero;
    rows.push_back(Json{{"trial", row.trial},
                        {"I", strings(row.I)},
                        {"J", strings(row.J)},
                        {"tor", tor},
                        {"colength", exactNumber(ExtendedNat(row.colength))},
                        {"predicted", predicted},
                        {"conjecture", row.matches ? "PASS" : "FAIL"},
                        {"euler", row.eulerZero ? "PASS" : "FAIL"},
                        {"redraws", row.redraws}});
    t << "  trial " << pad(std::to_string(row.trial), 4) << " tor=(" << torText << ") c=" << row.colength
      << " predicted=(" << predText << ") " << (row.matches ? "PASS" : "FAIL")
      << " euler=" << (row.eulerZero ? "PASS" : "FAIL") << "\n";
    if (!row.matches) t << "    counterexample: I = (" << join(row.I) << "), J = (" << join(row.J) << ")\n";
  }
  o.doc["rows"] = rows;
  const std::uint64_t done = rep.rows.size();
  o.doc["summary"] = Json{{"completed", done},
                          {"conjecturePass", matches},
                          {"conjectureFail", done - matches},
                          {"eulerFail", eulerFailures},
                          {"abandoned", rep.abandoned}};
  // k <= 2 is a theorem, so a mismatch there is an engine failure; for k >= 3 it is data.
  const bool proved = k <= 2;
  o.doc["conjectureProved"] = proved;
  o.doc["timing"] = Json{{"total_ms", clock.ms()}};
  t << "summary: " << matches << "/" << done << " match, " << eulerFailures << " Euler failures, " << rep.abandoned
    << " abandoned\n";
  o.text = t.str();
  o.exit = (eulerFailures > 0 || (proved && matches != done)) ? kFailure : kOk;
  return o;
}

Outcome lcCommand(const Germfile& g, const std::string& outPath, std::uint64_t seed) {
  const ICISData X(ICISPresentation(g.ring, g.phi), seed);
  if (auto bad = rejectNonICIS("lc", g, X)) return *bad;
  const LCBundle lc = lcIdeals(X);
  Outcome o;
  o.doc = header("lc");
  o.doc["input"] = describeInput(g);
  o.doc["variables"] = lc.ring->names();
  o.doc["lc"] = strings(lc.lc);
  o.doc["lcMinus"] = strings(lc.lcMinus);
  o.doc["lcT"] = strings(lc.lcT);
  std::ofstream out(outPath, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + outPath);
  out << o.doc.dump(2) << "\n";
  if (!out) throw std::runtime_error("write to " + outPath + " failed");
  o.text = "wrote " + outPath + " (" + std::to_string(lc.lc.size()) + " LC, " + std::to_string(lc.lcMinus.size()) +
           " LC^-, " + std::to_string(lc.lcT.size()) + " LC^T generators)\n";
  return o;
}

Outcome oracleCommand(const Germfile& g, std::uint32_t truncation) {
  const Stopwatch clock;
  if (g.phi.empty()) throw std::invalid_argument("oracle needs at least one generator in X");
  const OracleResult r = oracleColength(g.phi, truncation);
  Outcome o;
  o.doc = header("oracle colength");
  o.doc["input"] = describeInput(g);
  o.doc["truncation"] = truncation;
  const char* status = r.status == OracleResult::Status::Finite     ? "finite"
                       : r.status == OracleResult::Status::Infinite ? "infinite"
                                                                    : "inconclusive";
  o.doc["status"] = status;
  o.doc["colength"] = r.status == OracleResult::Status::Finite     ? exactNumber(ExtendedNat(r.value))
                      : r.status == OracleResult::Status::Infinite ? Json("infinite")
                                                                   : Json(nullptr);
  Json dims = Json::array();
  for (auto d : r.dims) dims.push_back(exactNumber(ExtendedNat(d)));
  o.doc["dims"] = dims;
  o.doc["timing"] = Json{{"total_ms", clock.ms()}};
  o.text = "oracle colength: " + r.toString() + "\n";
  return o;
}

Outcome errorOutcome(const std::string& command, const std::exception& e) {
  Outcome o;
  o.doc = header(command);
  o.doc["error"] = e.what();
  if (dynamic_cast<const DegreeCapExceeded*>(&e)) {
    o.exit = kResourceCap;
  } else if (dynamic_cast<const InternalError*>(&e)) {
    o.exit = kFailure;
  } else if (dynamic_cast<const std::logic_error*>(&e) && !dynamic_cast<const std::invalid_argument*>(&e)) {
    o.exit = kFailure;
  } else {
    o.exit = kInputError;
  }
  o.doc["exitCode"] = o.exit;
  o.text = std::string("error: ") + e.what() + "\n";
  return o;
}

}  // namespace germcalc::app
