#include "char2paley/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "char2paley/analyze.hpp"
#include "char2paley/chapman.hpp"
#include "char2paley/construct.hpp"
#include "char2paley/errors.hpp"
#include "char2paley/formats.hpp"
#include "char2paley/numtheory.hpp"
#include "char2paley/structure.hpp"

namespace char2paley::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr unsigned kMaxCertifyDegree = 12;
constexpr unsigned kMaxDenseDegree = 12;
constexpr unsigned kMaxStreamingDegree = 16;
constexpr unsigned kMaxChapmanDegree = 8;
constexpr unsigned kExhaustiveSpectrumDegree = 8;
constexpr unsigned kExhaustiveJumbleDegree = 4;
constexpr unsigned kExhaustiveShiftDegree = 8;
constexpr std::uint64_t kSampledShiftParams = 16;
constexpr std::uint64_t kStreamingSampleCap = 256;
constexpr std::uint64_t kStreamingPairCap = 64;

struct RunConfig {
  std::string command;
  unsigned k = 0;
  std::optional<std::string> a;
  std::optional<std::string> poly;
  std::optional<std::string> lambda;
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000;
  std::string format = "edges";
  bool tournament = false;
  std::string output;
  std::string report;
  bool timing = false;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct Setup {
  FieldCtx ctx;
  ParamA param;
  bool user_a;
};

Setup setup(const RunConfig& cfg) {
  std::optional<std::uint64_t> poly;
  if (cfg.poly) poly = parse_hex(*cfg.poly);
  FieldCtx ctx(cfg.k, poly);
  if (cfg.a) {
    const Elem a = ctx.elem(parse_hex(*cfg.a));
    return {ctx, make_param(ctx, a), true};
  }
  return {ctx, default_param(ctx), false};
}

Json config_json(const RunConfig& cfg, const Setup& s) {
  Json j;
  j["command"] = cfg.command;
  j["k"] = s.ctx.degree();
  j["q"] = s.ctx.order();
  j["poly"] = to_hex(s.ctx.modulus());
  j["a"] = to_hex(s.param.a.bits);
  j["a_source"] = s.user_a ? "user" : "default";
  j["a_generator"] = s.param.generator;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  return j;
}

// Collects check verdicts into the report.
class Checks {
 public:
  explicit Checks(bool timing) : timing_(timing) {}

  struct Result {
    bool pass = true;
    Json details = Json::object();
    std::string witness;
  };

  void run(const std::string& name, const std::function<Result()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Result r = body();
    const auto stop = std::chrono::steady_clock::now();
    Json entry;
    entry["name"] = name;
    entry["pass"] = r.pass;
    for (auto& [key, value] : r.details.items()) entry[key] = value;
    if (!r.pass) entry["witness"] = r.witness.empty() ? "unspecified" : r.witness;
    if (timing_) {
      entry["timing_ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
    }
    all_pass_ = all_pass_ && r.pass;
    checks_.push_back(std::move(entry));
  }

  void skip(const std::string& name, const std::string& reason) {
    skipped_.push_back(Json{{"name", name}, {"reason", reason}});
  }

  bool all_pass() const { return all_pass_; }
  Json checks() const { return checks_; }
  Json skipped() const { return skipped_; }

 private:
  bool timing_;
  bool all_pass_ = true;
  Json checks_ = Json::array();
  Json skipped_ = Json::array();
};

Checks::Result from_verdict(const Verdict& v) { return {v.pass, Json::object(), v.witness}; }

int emit_report(const RunConfig& cfg, const Setup& s, const Checks& checks, Json extra,
                std::ostream& out) {
  Json report;
  report["schema"] = 1;
  report["tool"] = kToolName;
  report["version"] = kToolVersion;
  report["config"] = config_json(cfg, s);
  for (auto& [key, value] : extra.items()) report[key] = value;
  report["checks"] = checks.checks();
  if (!checks.skipped().empty()) report["skipped"] = checks.skipped();
  report["pass"] = checks.all_pass();
  const std::string text = report.dump(2) + "\n";
  if (cfg.report.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.report, std::ios::binary);
    if (!f) throw ConfigError("cannot write report to " + cfg.report);
    f << text;
  }
  return checks.all_pass() ? kExitOk : kExitCertificateFailure;
}

template <class Writer>
void write_output(const RunConfig& cfg, std::ostream& out, Writer&& writer) {
  if (cfg.output.empty()) {
    writer(out);
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + cfg.output);
  writer(f);
}

void require_even(const RunConfig& cfg) {
  if (cfg.k % 2 != 0) {
    throw ConfigError(cfg.command + ": k=" + std::to_string(cfg.k) +
                      " is odd; G_k is then a tournament and this command needs a graph");
  }
}

int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Setup s = setup(cfg);
  const GraphFormat fmt = parse_graph_format(cfg.format);
  if (cfg.k % 2 == 1 && !cfg.tournament) {
    throw ConfigError("k=" + std::to_string(cfg.k) +
                      " is odd and defines a tournament; pass --tournament");
  }
  if (cfg.k % 2 == 0 && cfg.tournament) {
    throw ConfigError("k=" + std::to_string(cfg.k) + " is even and defines a graph");
  }
  if (cfg.tournament) {
    const PaleyLikeTournament t = build_tournament(s.ctx, s.param);
    write_output(cfg, out, [&](std::ostream& os) { write_tournament(os, t, fmt); });
    err << "tournament k=" << cfg.k << " n=" << t.order() << " arcs=" << t.arc_count() << '\n';
  } else {
    const PaleyLikeGraph g = build_graph(s.ctx, s.param);
    write_output(cfg, out, [&](std::ostream& os) { write_graph(os, g, fmt); });
    err << "graph k=" << cfg.k << " n=" << g.order() << " edges=" << g.edge_count() << '\n';
  }
  return kExitOk;
}

Checks::Result check_dagger(const FieldCtx& f, Elem a, std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
  Checks::Result r;
  std::uint64_t failures = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Elem x{pick(rng)};
    Elem y{pick(rng)};
    if (y == x) y = FieldCtx::add(y, FieldCtx::one());
    const Elem b{pick(rng)};
    const Elem shifted_a = FieldCtx::add(FieldCtx::add(f.square(b), b), a);
    const TraceBit lhs = adjacency_formula(f, a, FieldCtx::add(x, b), FieldCtx::add(y, b));
    const TraceBit rhs = adjacency_formula(f, shifted_a, x, y) + f.trace(b);
    if (lhs != rhs && failures++ == 0) {
      r.witness = "x=" + to_hex(x.bits) + " y=" + to_hex(y.bits) + " b=" + to_hex(b.bits);
    }
  }
  r.pass = failures == 0;
  r.details["samples"] = samples;
  r.details["failures"] = failures;
  return r;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
  require_even(cfg);
  if (cfg.k > kMaxCertifyDegree) {
    throw CapacityError("certify runs exhaustive suites up to k=" +
                        std::to_string(kMaxCertifyDegree));
  }
  const Setup s = setup(cfg);
  const FieldCtx& f = s.ctx;
  const std::uint32_t q = f.order();
  Checks checks(cfg.timing);
  const PaleyLikeGraph g = build_graph(f, s.param);
  const std::uint32_t n = g.order();

  checks.run("order", [&] {
    Checks::Result r;
    r.pass = n == q + 1;
    r.details["n"] = n;
    if (!r.pass) r.witness = "n=" + std::to_string(n);
    return r;
  });
  checks.run("symmetry", [&] {
    for (std::uint32_t u = 0; u < n; ++u) {
      if (g.has_edge(u, u)) return Checks::Result{false, {}, "loop at " + point_label(vertex_at(u))};
      for (std::uint32_t v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v) != g.has_edge(v, u)) {
          return Checks::Result{false, {}, point_label(vertex_at(u)) + " " + point_label(vertex_at(v))};
        }
      }
    }
    return Checks::Result{};
  });
  checks.run("regularity", [&] {
    Checks::Result r;
    r.details["degree"] = q / 2;
    for (std::uint32_t u = 0; u < n; ++u) {
      if (g.degree(u) != q / 2) {
        r.pass = false;
        r.witness = point_label(vertex_at(u)) + " has degree " + std::to_string(g.degree(u));
        break;
      }
    }
    return r;
  });
  checks.run("neighbourhood_of_zero", [&] {
    const std::uint32_t zero = vertex_index(ProjPoint::finite(FieldCtx::zero()));
    for (std::uint32_t v = 0; v < n; ++v) {
      if (v == zero) continue;
      const ProjPoint y = vertex_at(v);
      const Elem ratio = y.is_infinity() ? FieldCtx::zero() : f.div(s.param.a, y.value());
      if (g.has_edge(zero, v) != (f.trace(ratio) == kTrace0)) {
        return Checks::Result{false, {}, "y=" + point_label(y)};
      }
    }
    return Checks::Result{};
  });

  // Labeling checks need a generator; a non-generator a is tied to one by a shift.
  const ParamA base = s.param.generator ? s.param : default_param(f);
  const PaleyLikeGraph g_base = s.param.generator ? g : build_graph(f, base);
  if (!s.param.generator) {
    checks.run("shift_to_generator", [&] {
      const ShiftIso iso = shift_isomorphism(f, base, s.param);
      Checks::Result r = from_verdict(verify_shift_isomorphism(g, g_base, iso));
      r.details["base_a"] = to_hex(base.a.bits);
      r.details["b"] = to_hex(iso.b.bits);
      r.details["kind"] = iso.kind == IsoKind::isomorphism ? "isomorphism" : "complement";
      return r;
    });
  }
  const CirculantLabeling lab = circulant_labeling(f, base);

  checks.run("vertex_transitivity", [&] {
    Checks::Result r;
    const std::uint64_t len = orbit_length(f, alpha_of(f, base.a), ProjPoint::infinity());
    r.pass = len == q + 1;
    r.details["alpha_orbit_length"] = len;
    if (!r.pass) r.witness = "orbit of infinity has length " + std::to_string(len);
    return r;
  });
  checks.run("circulant", [&] {
    Checks::Result r = from_verdict(verify_circulant(g_base, lab));
    r.details["connection_set_size"] = lab.connection.size();
    return r;
  });
  checks.run("orbit_identities", [&] {
    // v_{-i} = 1 + v_i and v_{2i} = v_i^2 + a
    for (std::uint32_t i = 1; i < n; ++i) {
      const Elem vi = lab.vertices[i].value();
      if (lab.at(-std::int64_t{i}) != ProjPoint::finite(FieldCtx::add(vi, FieldCtx::one()))) {
        return Checks::Result{false, {}, "v_-" + std::to_string(i) + " != 1 + v_" + std::to_string(i)};
      }
      const ProjPoint doubled = ProjPoint::finite(FieldCtx::add(f.square(vi), base.a));
      if (lab.at(2 * std::int64_t{i}) != doubled) {
        return Checks::Result{false, {}, "v_2i != v_i^2 + a at i=" + std::to_string(i)};
      }
    }
    return Checks::Result{};
  });
  checks.run("self_complementary", [&] { return from_verdict(verify_self_complementary(g_base, lab)); });
  checks.run("automorphisms", [&] { return from_verdict(verify_automorphisms(g_base, base)); });
  checks.run("shift_isomorphisms", [&] {
    std::vector<Elem> targets = f.trace_partition().second;
    const bool exhaustive = cfg.k <= kExhaustiveShiftDegree;
    if (!exhaustive) {
      std::mt19937_64 rng(cfg.seed);
      std::shuffle(targets.begin(), targets.end(), rng);
      targets.resize(kSampledShiftParams);
      std::sort(targets.begin(), targets.end());
    }
    Checks::Result r;
    std::uint64_t iso_count = 0, complement_count = 0;
    for (Elem ap : targets) {
      const ParamA prime = make_param(f, ap);
      const PaleyLikeGraph gp = build_graph(f, prime);
      const ShiftIso iso = shift_isomorphism(f, base, prime);
      (iso.kind == IsoKind::isomorphism ? iso_count : complement_count)++;
      const Verdict v = verify_vertex_map(gp.matrix(), g_base.matrix(), isomorphism_to(f, iso, lab), false);
      if (!v) {
        r.pass = false;
        r.witness = "a'=" + to_hex(ap.bits) + ": " + v.witness;
        break;
      }
    }
    r.details["mode"] = exhaustive ? "exhaustive" : "sampled";
    r.details["parameters"] = targets.size();
    r.details["direct"] = iso_count;
    r.details["via_complement"] = complement_count;
    return r;
  });
  checks.run("dagger_identity", [&] { return check_dagger(f, base.a, cfg.samples, cfg.seed); });

  return emit_report(cfg, s, checks, Json::object(), out);
}

Checks::Result check_kloosterman(const FieldCtx& f, const std::vector<Elem>& bs,
                                 const std::function<std::int64_t(Elem)>& k_of) {
  Checks::Result r;
  std::int64_t lo = 0, hi = 0;
  Elem arg_lo{}, arg_hi{};
  std::uint64_t violations = 0;
  bool first = true;
  for (Elem b : bs) {
    const std::int64_t k_sum = k_of(b);
    if (first || k_sum < lo) lo = k_sum, arg_lo = b;
    if (first || k_sum > hi) hi = k_sum, arg_hi = b;
    first = false;
    if (!within_weil_bound(f.order(), k_sum) && violations++ == 0) {
      r.witness = "b=" + to_hex(b.bits) + " K=" + std::to_string(k_sum);
    }
  }
  r.pass = violations == 0;
  r.details["evaluated"] = bs.size();
  r.details["min"] = Json{{"b", to_hex(arg_lo.bits)}, {"K", lo}};
  r.details["max"] = Json{{"b", to_hex(arg_hi.bits)}, {"K", hi}};
  r.details["bound_squared"] = 4 * std::uint64_t{f.order()};
  r.details["violations"] = violations;
  return r;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> sample_pairs(std::uint32_t n, std::uint64_t count,
                                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint32_t u = pick(rng);
    std::uint32_t v = pick(rng);
    if (u == v) v = (v + 1) % n;
    pairs.emplace_back(u, v);
  }
  return pairs;
}

Json spectrum_json(const CodegreeSpectrum& spec) {
  Json list = Json::array();
  for (const auto& [key, count] : spec.histogram) {
    list.push_back(Json{{"epsilon", key.first}, {"ell", key.second}, {"count", count}});
  }
  return list;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  require_even(cfg);
  if (cfg.k > kMaxStreamingDegree) {
    throw CapacityError("analyze supports k <= " + std::to_string(kMaxStreamingDegree));
  }
  const Setup s = setup(cfg);
  const FieldCtx& f = s.ctx;
  const std::uint64_t q = f.order();
  const std::uint64_t cap = codegree_cap(f);
  Checks checks(cfg.timing);
  const ParamA base = s.param.generator ? s.param : default_param(f);
  const CirculantLabeling lab = circulant_labeling(f, base);
  Json extra;
  extra["analysis_a"] = to_hex(base.a.bits);

  if (cfg.k <= kMaxDenseDegree) {
    const PaleyLikeGraph g = build_graph(f, base);
    const CodegreeFormula formula(f, lab, true);
    std::vector<Elem> all_b;
    for (std::uint32_t v = 1; v < q; ++v) all_b.push_back(Elem{v});
    checks.run("kloosterman_weil", [&] {
      return check_kloosterman(f, all_b, [&](Elem b) { return formula.kloosterman_at(b); });
    });
    checks.run("codegree_formula", [&] {
      Checks::Result r;
      std::uint64_t tested = 0, mismatches = 0;
      auto test_pair = [&](std::uint32_t u, std::uint32_t v) {
        ++tested;
        const ProjPoint x = vertex_at(u), y = vertex_at(v);
        const std::uint32_t direct = codegree_direct(g, x, y).ell;
        const std::uint32_t via_k = formula(x, y);
        if (direct != via_k && mismatches++ == 0) {
          r.witness = point_label(x) + " " + point_label(y) + ": direct " + std::to_string(direct) +
                      " formula " + std::to_string(via_k);
        }
      };
      const bool exhaustive = cfg.k <= kExhaustiveSpectrumDegree;
      if (exhaustive) {
        for (std::uint32_t u = 0; u < g.order(); ++u) {
          for (std::uint32_t v = u + 1; v < g.order(); ++v) test_pair(u, v);
        }
      } else {
        for (auto [u, v] : sample_pairs(g.order(), cfg.samples, cfg.seed)) test_pair(u, v);
      }
      r.pass = mismatches == 0;
      r.details["mode"] = exhaustive ? "exhaustive" : "sampled";
      r.details["pairs"] = tested;
      r.details["mismatches"] = mismatches;
      return r;
    });
    const CodegreeSpectrum spec = codegree_spectrum(g);
    checks.run("codegree_cap", [&] {
      Checks::Result r;
      r.pass = spec.max_ell <= cap;
      r.details["max_codegree"] = spec.max_ell;
      r.details["cap"] = cap;
      if (!r.pass) {
        r.witness = point_label(vertex_at(spec.max_pair.first)) + " " +
                    point_label(vertex_at(spec.max_pair.second));
      }
      return r;
    });
    extra["codegree_spectrum"] = Json{{"pairs", spec.pairs},
                                      {"max_ell", spec.max_ell},
                                      {"max_conference_deviation", spec.max_conference_deviation},
                                      {"histogram", spectrum_json(spec)}};
    checks.run("jumbledness", [&] {
      const bool exhaustive = cfg.k <= kExhaustiveJumbleDegree;
      const JumblednessAudit audit = jumbledness_audit(
          g, exhaustive ? AuditMode::exhaustive : AuditMode::sampled, cfg.samples, cfg.seed);
      Checks::Result r;
      r.pass = audit.pass;
      r.witness = audit.witness;
      r.details["mode"] = exhaustive ? "exhaustive" : "sampled";
      r.details["subsets"] = audit.samples;
      r.details["seed"] = audit.seed;
      r.details["worst_size"] = audit.worst_size;
      r.details["worst_twice_deviation"] = audit.worst_twice_deviation;
      r.details["worst_ratio_4th_power"] = audit.worst_ratio4_num + "/" + audit.worst_ratio4_den;
      return r;
    });
  } else {
    // Streaming mode: no dense matrix; sampled b and pairs straight from the predicate.
    const std::uint64_t nb = std::min(cfg.samples, kStreamingSampleCap);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::uint32_t> pick_b(1, f.order() - 1);
    std::vector<Elem> bs;
    for (std::uint64_t i = 0; i < nb; ++i) bs.push_back(Elem{pick_b(rng)});
    checks.run("kloosterman_weil", [&] {
      Checks::Result r = check_kloosterman(f, bs, [&](Elem b) { return kloosterman(f, b).sum; });
      r.details["mode"] = "sampled";
      return r;
    });
    const CodegreeFormula formula(f, lab, false);
    const auto pairs = sample_pairs(f.order() + 1, std::min(cfg.samples, kStreamingPairCap), cfg.seed + 1);
    std::uint32_t max_ell = 0;
    checks.run("codegree_formula", [&] {
      Checks::Result r;
      std::uint64_t mismatches = 0;
      for (auto [u, v] : pairs) {
        const ProjPoint x = vertex_at(u), y = vertex_at(v);
        const std::uint32_t direct = codegree_streaming(f, base, x, y).ell;
        max_ell = std::max(max_ell, direct);
        if (direct != formula(x, y) && mismatches++ == 0) r.witness = point_label(x) + " " + point_label(y);
      }
      r.pass = mismatches == 0;
      r.details["mode"] = "sampled-streaming";
      r.details["pairs"] = pairs.size();
      r.details["mismatches"] = mismatches;
      return r;
    });
    checks.run("codegree_cap", [&] {
      Checks::Result r;
      r.pass = max_ell <= cap;
      r.details["mode"] = "sampled-streaming";
      r.details["max_codegree"] = max_ell;
      r.details["cap"] = cap;
      if (!r.pass) r.witness = "max sampled codegree " + std::to_string(max_ell);
      return r;
    });
    checks.skip("jumbledness", "needs a dense matrix (k <= " + std::to_string(kMaxDenseDegree) + ")");
  }
  return emit_report(cfg, s, checks, std::move(extra), out);
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_even(cfg);
  const std::uint64_t p = (std::uint64_t{1} << cfg.k) + 1;
  if (!is_prime(p)) {
    throw CapacityError("q+1=" + std::to_string(p) +
                        " is composite: Hamiltonian decomposition is out of scope (only the "
                        "distance-class construction for prime q+1 is implemented)");
  }
  const Setup s = setup(cfg);
  if (!s.param.generator) throw ConfigError("a=" + to_hex(s.param.a.bits) + " is not a generator");
  const PaleyLikeGraph g = build_graph(s.ctx, s.param);
  const CirculantLabeling lab = circulant_labeling(s.ctx, s.param);
  if (const Verdict v = verify_circulant(g, lab); !v) {
    err << "circulant certificate failed: " << v.witness << '\n';
    return kExitCertificateFailure;
  }
  const HamiltonianDecomposition dec = hamiltonian_decompose(g, lab);
  if (const Verdict v = certify_decomposition(g, dec); !v) {
    err << "decomposition certificate failed: " << v.witness << '\n';
    return kExitCertificateFailure;
  }
  write_output(cfg, out, [&](std::ostream& os) { write_decomposition(os, dec); });
  err << "certified " << dec.cycles.size() << " Hamiltonian cycles of length " << dec.p << '\n';
  return kExitOk;
}

int cmd_chapman(const RunConfig& cfg, std::ostream& out) {
  require_even(cfg);
  if (cfg.k > kMaxChapmanDegree) {
    throw CapacityError("chapman supports k <= " + std::to_string(kMaxChapmanDegree));
  }
  const Setup s = setup(cfg);
  const QuadExtCtx ext(s.ctx);
  const QuadElem lambda = cfg.lambda ? ext.decode(parse_hex(*cfg.lambda)) : QuadExtCtx::zeta();
  const ChapmanGraph h = chapman_build(ext, lambda, cfg.samples, cfg.seed);
  const PaleyLikeGraph g = build_graph(s.ctx, s.param.generator ? s.param : default_param(s.ctx));
  Checks checks(cfg.timing);
  const ChapmanDiagnostics& d = h.diagnostics();
  checks.run("well_defined", [&] {
    Checks::Result r;
    r.pass = d.representative_mismatches == 0 && d.zero_denominators == 0;
    r.details["representatives"] = d.representatives_exhaustive ? "exhaustive" : "sampled";
    r.details["representative_checks"] = d.representative_checks;
    r.details["representative_mismatches"] = d.representative_mismatches;
    r.details["pair_evaluations"] = d.pair_evaluations;
    r.details["zero_denominators"] = d.zero_denominators;
    if (!d.undefined_pairs.empty()) {
      r.witness = "undefined pair (" + std::to_string(d.undefined_pairs[0].first) + ", " +
                  std::to_string(d.undefined_pairs[0].second) + ")";
    } else if (!r.pass) {
      r.witness = "predicate changed under rescaling of representatives";
    }
    return r;
  });
  checks.run("isomorphic", [&] {
    const ChapmanComparison cmp = chapman_compare(h, g);
    Checks::Result r;
    r.pass = cmp.isomorphic();
    r.details["isomorphic"] = cmp.isomorphic();
    r.details["verdict"] = to_string(cmp.verdict);
    if (cmp.multiplier) r.details["multiplier"] = *cmp.multiplier;
    r.details["detail"] = cmp.detail;
    if (!r.pass) r.witness = cmp.detail;
    return r;
  });
  Json extra;
  extra["lambda"] = to_hex(ext.encode(lambda));
  extra["extension_a0"] = to_hex(ext.a0().bits);
  return emit_report(cfg, s, checks, std::move(extra), out);
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--k", cfg.k, "extension degree, q = 2^k")->required();
  sub->add_option("--a", cfg.a, "parameter a (hex), must have trace 1");
  sub->add_option("--poly", cfg.poly, "reduction polynomial (hex), e.g. 0x13");
  sub->add_option("--seed", cfg.seed, "seed for sampled checks");
  sub->add_option("--samples", cfg.samples, "sample count for sampled checks");
  sub->add_flag("--timing", cfg.timing, "include per-check timings in the report");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Paley-like graphs over GF(2^k): build and certify"};
  app.name(kToolName);
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "write G_k(a) as a graph or tournament");
  add_common(build, cfg);
  build->add_option("--format", cfg.format, "edges | dimacs | matrix | json");
  build->add_flag("--tournament", cfg.tournament, "required for odd k");
  build->add_option("-o,--output", cfg.output, "output file (default stdout)");

  auto* certify = app.add_subcommand("certify", "structural certificates for even k");
  add_common(certify, cfg);
  certify->add_option("--report", cfg.report, "report file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "codegrees, Kloosterman sums, jumbledness");
  add_common(analyze, cfg);
  analyze->add_option("--report", cfg.report, "report file (default stdout)");

  auto* decompose = app.add_subcommand("decompose", "Hamiltonian decomposition for prime q+1");
  add_common(decompose, cfg);
  decompose->add_option("-o,--output", cfg.output, "output file (default stdout)");

  auto* chapman = app.add_subcommand("chapman", "cross-check against the coset model H_lambda");
  add_common(chapman, cfg);
  chapman->add_option("--lambda", cfg.lambda, "lambda as hex c0 | c1 << k (default zeta)");
  chapman->add_option("--report", cfg.report, "report file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  try {
    if (cfg.command == "build") return cmd_build(cfg, out, err);
    if (cfg.command == "certify") return cmd_certify(cfg, out);
    if (cfg.command == "analyze") return cmd_analyze(cfg, out);
    if (cfg.command == "decompose") return cmd_decompose(cfg, out, err);
    if (cfg.command == "chapman") return cmd_chapman(cfg, out);
  } catch (const CapacityError& e) {
    err << kToolName << ": " << e.what() << '\n';
    return kExitCapacity;
  } catch (const InternalError& e) {
    err << kToolName << ": internal error: " << e.what() << '\n';
    return kExitCertificateFailure;
  } catch (const Error& e) {
    err << kToolName << ": " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << kToolName << ": " << e.what() << '\n';
    return kExitConfigError;
  }
  return kExitConfigError;
}

}  // namespace char2paley::cli
