#ifndef SYZLAB_TOOLS_CLI_HPP
#define SYZLAB_TOOLS_CLI_HPP

// Command-line front end. run() is callable in-process so tests and the
// corpus runner see exactly what the binary prints.
//
// Exit codes: 0 computed, 1 criterion hypothesis refused, 2 input error,
// 3 internal cross-check disagreement.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "syzlab/fuzz.hpp"
#include "syzlab/io.hpp"

#ifndef SYZLAB_CORPUS_DIR
#define SYZLAB_CORPUS_DIR "corpus"
#endif

namespace syzlab::cli {

enum Exit { kOk = 0, kRefused = 1, kInputError = 2, kDisagreement = 3 };

// ---------------------------------------------------------------- text view

namespace text {

inline std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

inline bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

inline bool scalar_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return is_scalar(x); });
}

/// Array of objects whose values are all scalars or scalar arrays: a table.
inline bool tabular(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& row : j) {
    if (!row.is_object()) return false;
    for (const auto& [k, v] : row.items())
      if (!is_scalar(v) && !scalar_array(v)) return false;
  }
  return true;
}

inline std::string inline_array(const Json& j) {
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar(j[i]);
  return s + "]";
}

inline std::string cell(const Json& v) { return is_scalar(v) ? scalar(v) : inline_array(v); }

inline void table(std::ostream& out, const Json& rows, int indent) {
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::vector<std::size_t> width;
  for (const auto& c : cols) {
    std::size_t w = c.size();
    for (const auto& row : rows)
      if (row.contains(c)) w = std::max(w, cell(row[c]).size());
    width.push_back(w);
  }
  std::string pad(static_cast<std::size_t>(indent), ' ');
  out << pad;
  for (std::size_t i = 0; i < cols.size(); ++i) out << std::left << std::setw(static_cast<int>(width[i]) + 2) << cols[i];
  out << "\n";
  for (const auto& row : rows) {
    out << pad;
    for (std::size_t i = 0; i < cols.size(); ++i)
      out << std::left << std::setw(static_cast<int>(width[i]) + 2) << (row.contains(cols[i]) ? cell(row[cols[i]]) : "");
    out << "\n";
  }
}

inline void render(std::ostream& out, const Json& j, int indent = 0) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (!j.is_object()) {
    if (tabular(j))
      table(out, j, indent);
    else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return scalar_array(x); }))
      for (const auto& x : j) out << pad << inline_array(x) << "\n";
    else if (j.is_array())
      for (const auto& x : j) {
        render(out, x, indent);
        out << pad << "--\n";
      }
    else
      out << pad << scalar(j) << "\n";
    return;
  }
  std::size_t w = 0;
  for (const auto& [k, v] : j.items())
    if (is_scalar(v) || scalar_array(v)) w = std::max(w, k.size());
  for (const auto& [k, v] : j.items()) {
    if (is_scalar(v) || scalar_array(v)) {
      out << pad << std::left << std::setw(static_cast<int>(w)) << k << "  " << cell(v) << "\n";
    } else if (v.empty()) {
      out << pad << k << "  (none)\n";
    } else {
      out << pad << k << ":\n";
      render(out, v, indent + 2);
    }
  }
}

}  // namespace text

// ---------------------------------------------------------------- options

struct Options {
  std::string ring;
  std::string format = "json";
  std::string out;
  std::string bundle;
  std::string m = "";
  std::string n = "";
  std::string l = "";
  std::string range = "";
  std::string linear = "";
  int length = 5;
  int index = 1;
  int nmax = -1;
  int bound = -1;
  int semidual_bound = 2;
  int max_degree = -1;
  int degree_cap = -1;
  bool maps = false;
  // corpus
  std::string corpus = SYZLAB_CORPUS_DIR;
  std::vector<long long> seeds;
  int fuzz_rings = -1;
  bool bless = false;
};

/// What a command produced: JSON, an optional text prelude, and an exit code.
struct Result {
  Json json;
  std::string text_prelude;
  int exit = kOk;
};

struct Context {
  Options opt;
  std::filesystem::path base;  // for @file module references
  RingPtr ring_ptr;

  const RingPtr& ring() {
    if (!ring_ptr) {
      if (opt.ring.empty()) throw InputError("--ring is required");
      ring_ptr = load_ring(opt.ring);
    }
    return ring_ptr;
  }
  ModuleValue module(const std::string& expr, const char* flag) {
    if (expr.empty()) throw InputError(std::string("--") + flag + " is required");
    return parse_module(ring(), expr, base);
  }
  int dim() { return hilbert(*ring()).dim; }
  /// Scan bound default: 2(d + 1) + 2.
  int default_bound() { return 2 * (dim() + 1) + 2; }
};

inline std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InputError("range '" + s + "' is not of the form a..b");
  }
}

inline Json header(Context& c, const std::string& command) {
  Json j;
  j["command"] = command;
  j["ring"] = ring_to_json(*c.ring());
  return j;
}

/// Attaches a counterexample bundle (ring, modules, report) and flags exit 3.
inline void disagreement(Context& c, Result& r, const Json& modules) {
  Json b;
  b["ring"] = ring_to_json(*c.ring());
  b["modules"] = modules;
  b["report"] = r.json;
  r.json["counterexample"] = b;
  r.exit = kDisagreement;
  if (!c.opt.bundle.empty()) {
    std::ofstream f(c.opt.bundle);
    f << b.dump(2) << "\n";
  }
}

inline std::optional<int> cap_option(const Context& c) {
  return c.opt.degree_cap >= 0 ? std::optional<int>(c.opt.degree_cap) : std::nullopt;
}

// ---------------------------------------------------------------- compute commands

inline Result cmd_classify(Context& c) {
  Result r;
  r.json = header(c, "ring classify");
  r.json["classification"] = classification_to_json(classify(*c.ring()));
  return r;
}

inline Result cmd_resolve(Context& c, bool betti_only) {
  Result r;
  auto m = c.module(c.opt.m.empty() ? "k" : c.opt.m, "M");
  if (c.opt.length < 0) throw InputError("--length must be non-negative");
  auto res = minimal_free_resolution(m.module, c.opt.length);
  r.json = header(c, betti_only ? "betti" : "resolve");
  r.json["module"] = m.source;
  if (betti_only) {
    r.json["betti"] = betti_to_json(res.betti);
    r.json["totals"] = totals_to_json(res.betti);
  } else {
    r.json["resolution"] = resolution_to_json(res, c.opt.maps);
  }
  r.text_prelude = res.betti.to_text();
  return r;
}

inline Result cmd_syzygy(Context& c) {
  Result r;
  auto m = c.module(c.opt.m.empty() ? "k" : c.opt.m, "M");
  if (c.opt.index < 0) throw InputError("--n must be non-negative");
  auto omega = syzygy_module(m.module, c.opt.index);
  r.json = header(c, "syzygy");
  r.json["module"] = m.source;
  r.json["n"] = c.opt.index;
  r.json["syzygy"] = module_to_json(omega);
  r.json["generators"] = omega.generators();
  bool zero = hilbert(omega).is_zero();
  r.json["zero"] = zero;
  r.json["depth"] = zero ? Json(nullptr) : Json(depth(omega));
  return r;
}

inline Result cmd_hilbert(Context& c) {
  Result r;
  auto m = c.module(c.opt.m.empty() ? "R" : c.opt.m, "M");
  r.json = header(c, "hilbert");
  r.json["module"] = m.source;
  r.json["hilbert"] = hilbert_to_json(hilbert(m.module, c.opt.max_degree));
  return r;
}

inline Result cmd_socle(Context& c) {
  Result r;
  auto m = c.module(c.opt.m.empty() ? "R" : c.opt.m, "M");
  r.json = header(c, "socle");
  r.json["module"] = m.source;
  r.json["socle"] = socle_to_json(socle(m.module));
  return r;
}

inline Result cmd_ext_tor(Context& c, bool is_ext) {
  Result r;
  auto m = c.module(c.opt.m, "M");
  auto n = c.module(c.opt.n.empty() ? "R" : c.opt.n, "N");
  auto [lo, hi] = parse_range(c.opt.range.empty() ? "0..4" : c.opt.range);
  auto rep = is_ext ? ext(m.module, n.module, lo, hi, cap_option(c)) : tor(m.module, n.module, lo, hi, cap_option(c));
  r.json = header(c, is_ext ? "ext" : "tor");
  r.json["M"] = m.source;
  r.json["N"] = n.source;
  r.json["report"] = ext_tor_to_json(rep);
  return r;
}

inline Result cmd_hom(Context& c) {
  Result r;
  auto m = c.module(c.opt.m, "M");
  auto n = c.module(c.opt.n.empty() ? "R" : c.opt.n, "N");
  auto h = hom_module(m.module, n.module);
  r.json = header(c, "hom");
  r.json["M"] = m.source;
  r.json["N"] = n.source;
  r.json["hom"] = module_to_json(h.module());
  r.json["hilbert"] = hilbert_to_json(hilbert(h.module(), c.opt.max_degree));
  return r;
}

inline Result cmd_trace(Context& c) {
  Result r;
  auto m = c.module(c.opt.m, "M");
  r.json = header(c, "trace");
  r.json["module"] = m.source;
  r.json["trace"] = trace_to_json(*c.ring(), trace_ideal(m.module));
  return r;
}

inline Result cmd_canonical(Context& c) {
  Result r;
  auto w = canonical_module(c.ring());
  r.json = header(c, "canonical");
  r.json["omega"] = module_to_json(w);
  r.json["generators"] = w.generators();
  r.json["hilbert"] = hilbert_to_json(hilbert(w));
  return r;
}

// ---------------------------------------------------------------- checks

inline Result cmd_socle_lemma(Context& c) {
  Result r;
  auto m = c.module(c.opt.m.empty() ? "k" : c.opt.m, "M");
  int nmax = c.opt.nmax < 0 ? 4 : c.opt.nmax;
  auto rows = socle_lemma_check(m.module, nmax);
  r.json = header(c, "check socle-lemma");
  r.json["module"] = m.source;
  r.json["rows"] = socle_lemma_to_json(rows);
  bool ok = std::all_of(rows.begin(), rows.end(), [](const SocleLemmaRow& x) { return x.contained; });
  r.json["holds"] = ok;
  if (!ok) disagreement(c, r, {{"M", module_to_json(m.module)}});
  return r;
}

inline Result cmd_takahashi(Context& c) {
  Result r;
  if (c.opt.linear.empty()) throw InputError("--l (a linear form) is required");
  int nmax = c.opt.nmax < 0 ? 5 : c.opt.nmax;
  auto rep = takahashi_check(c.ring(), c.ring()->parse(c.opt.linear), nmax);
  r.json = header(c, "check takahashi");
  r.json["report"] = takahashi_to_json(rep);
  if (!rep.all_ok) disagreement(c, r, Json::object());
  return r;
}

inline Result cmd_no_summand(Context& c) {
  Result r;
  auto m = c.module(c.opt.m, "M");
  int nmax = c.opt.nmax < 0 ? c.default_bound() : c.opt.nmax;
  auto rep = no_summand_audit(m.module, nmax, c.opt.semidual_bound);
  r.json = header(c, "check no-summand");
  r.json["module"] = m.source;
  r.json["audit"] = audit_to_json(rep);
  if (rep.violations > 0) disagreement(c, r, {{"M", module_to_json(m.module)}});
  return r;
}

inline Result verdict_result(Context& c, const std::string& name, const CriterionVerdict& v, Json modules) {
  Result r;
  r.json = header(c, name);
  r.json["verdict"] = verdict_to_json(v);
  if (!v.agreement) disagreement(c, r, std::move(modules));
  return r;
}

inline Result cmd_gorenstein_scan(Context& c) {
  int nmax = c.opt.nmax < 0 ? c.default_bound() : c.opt.nmax;
  auto v = gorenstein_scan_syzygies_of_omega(c.ring(), nmax);
  return verdict_result(c, "check gorenstein-omega-scan", v, Json::object());
}

inline Result cmd_regularity(Context& c) {
  auto m = c.module(c.opt.m, "M");
  auto n = c.module(c.opt.n.empty() ? c.opt.m : c.opt.n, "N");
  auto mi = require_image(c.ring(), m);
  auto ni = require_image(c.ring(), n);
  int bound = c.opt.bound < 0 ? c.default_bound() : c.opt.bound;
  auto v = regularity_criterion(mi, ni, bound);
  auto r = verdict_result(c, "check regularity", v, {{"M", module_to_json(mi.module)}, {"N", module_to_json(ni.module)}});
  r.json["certificates"] = {{"M", certificate_to_json(mi.certificate)}, {"N", certificate_to_json(ni.certificate)}};
  return r;
}

inline Result cmd_gorenstein_l(Context& c, bool omega) {
  auto l = c.module(c.opt.l.empty() ? "syz(1, k)" : c.opt.l, "L");
  auto li = require_image(c.ring(), l);
  int bound = c.opt.bound < 0 ? c.default_bound() : c.opt.bound;
  auto v = omega ? gorenstein_criterion_omega(li, bound) : gorenstein_criterion_ext_L_R(li, bound);
  auto r = verdict_result(c, omega ? "check gorenstein-omega" : "check gorenstein-ext", v,
                          {{"L", module_to_json(li.module)}});
  r.json["certificate"] = certificate_to_json(li.certificate);
  return r;
}

inline Result cmd_gdim(Context& c) {
  Result r;
  auto l = c.module(c.opt.l.empty() ? "syz(1, k)" : c.opt.l, "L");
  int bound = c.opt.bound < 0 ? c.default_bound() : c.opt.bound;
  std::optional<ImageCertificate> cert;
  if (l.image) cert = require_image(c.ring(), l).certificate;
  auto g = gdim_zero_up_to(l.module, bound, cert);
  r.json = header(c, "check gdim");
  r.json["module"] = l.source;
  r.json["gdim"] = gdim_to_json(g);
  if (!g.agreement) disagreement(c, r, {{"L", module_to_json(l.module)}});
  return r;
}

// ---------------------------------------------------------------- corpus

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

namespace corpus {

inline std::string substitute(std::string s, const std::string& dir) {
  const std::string key = "{corpus}";
  for (auto p = s.find(key); p != std::string::npos; p = s.find(key, p + dir.size())) s.replace(p, key.size(), dir);
  return s;
}

/// One randomized ring: socle lemma on a random cyclic module, Dutta on
/// syzygies of k, and verdict agreement when minimal multiplicity holds.
inline Json fuzz_ring(std::mt19937_64& rng, bool& ok) {
  RingSpec spec = fuzz::random_artinian_monomial_ring(rng);
  auto cyclic = fuzz::random_cyclic_ideal(rng, spec.vars);
  Json j;
  Json rj;
  rj["field"] = {{"p", spec.p}};
  rj["vars"] = spec.vars;
  rj["ideal"] = spec.ideal;
  j["ring"] = rj;
  j["cyclic"] = cyclic;
  RingPtr ring = define_ring(spec);
  auto cls = classify(*ring);
  std::vector<Polynomial> jgens;
  for (const auto& g : cyclic) jgens.push_back(ring->parse(g));
  auto rows = socle_lemma_check(cyclic_module(ring, jgens), 3);
  bool lemma = std::all_of(rows.begin(), rows.end(), [](const SocleLemmaRow& x) { return x.contained; });
  j["socleLemma"] = lemma;
  auto kres = minimal_free_resolution(residue_field(ring), 4);
  bool summand = false;
  for (int n = 0; n <= 3; ++n) summand = summand || has_free_summand(syzygy_module(kres, n));
  bool dutta = summand == cls.regular;
  j["dutta"] = dutta;
  j["minMult"] = cls.minimal_multiplicity;
  bool agree = true;
  if (cls.minimal_multiplicity) {
    agree = gorenstein_scan_syzygies_of_omega(ring, 3).agreement;
    if (cls.embdim > 0) agree = agree && gorenstein_criterion_ext_L_R(syzygy_image(ring, {{1, 1}}), 4).agreement;
  }
  j["agreement"] = agree;
  ok = lemma && dutta && agree;
  j["ok"] = ok;
  return j;
}

inline Result run_corpus(Context& c, std::ostream& err) {
  Result r;
  std::filesystem::path dir(c.opt.corpus);
  Json manifest = read_json_file(dir / "manifest.json");
  detail::reject_unknown(manifest, {"jobs", "fuzz"}, "corpus manifest");
  Json jobs = Json::array();
  int failures = 0;
  for (const auto& job : manifest.at("jobs")) {
    detail::reject_unknown(job, {"name", "args", "exit", "golden"}, "corpus job");
    std::string name = job.at("name").get<std::string>();
    std::vector<std::string> args;
    for (const auto& a : job.at("args")) args.push_back(substitute(a.get<std::string>(), dir.string()));
    args.push_back("--format");
    args.push_back("json");
    int expected_exit = job.value("exit", 0);
    std::ostringstream o, e;
    int code = cli::run(args, o, e);
    Json entry{{"name", name}, {"exit", code}};
    bool pass = code == expected_exit;
    std::string why;
    if (!pass) why = "exit " + std::to_string(code) + ", expected " + std::to_string(expected_exit);
    std::filesystem::path golden = dir / job.at("golden").get<std::string>();
    Json got;
    try {
      got = Json::parse(o.str());
    } catch (const std::exception&) {
      pass = false;
      why = "output is not JSON";
    }
    if (pass) {
      if (c.opt.bless) {
        std::ofstream f(golden);
        f << got.dump(2) << "\n";
      } else {
        Json want = read_json_file(golden);
        if (want != got) {
          pass = false;
          why = "golden mismatch";
          err << "corpus job " << name << " differs from " << golden.string() << ":\n"
              << Json::diff(want, got).dump(2) << "\n";
        }
      }
    }
    entry["status"] = pass ? "pass" : "fail";
    if (!pass) {
      entry["reason"] = why;
      ++failures;
    }
    jobs.push_back(entry);
  }
  Json fuzz = Json::object();
  if (manifest.contains("fuzz") || !c.opt.seeds.empty()) {
    Json cfg = manifest.value("fuzz", Json::object());
    std::vector<long long> seeds = c.opt.seeds;
    if (seeds.empty()) seeds = cfg.value("seeds", std::vector<long long>{});
    int count = c.opt.fuzz_rings >= 0 ? c.opt.fuzz_rings : cfg.value("rings", 4);
    Json runs = Json::array();
    for (long long seed : seeds) {
      std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
      for (int i = 0; i < count; ++i) {
        bool ok = true;
        Json one;
        try {
          one = fuzz_ring(rng, ok);
        } catch (const std::exception& e) {
          ok = false;
          one["error"] = e.what();
        }
        one["seed"] = seed;
        one["draw"] = i;
        if (!ok) {
          ++failures;
          err << "fuzz counterexample (seed " << seed << ", draw " << i << "):\n" << one.dump(2) << "\n";
        }
        runs.push_back(one);
      }
    }
    fuzz["seeds"] = seeds;
    fuzz["ringsPerSeed"] = count;
    fuzz["runs"] = runs;
  }
  r.json["command"] = "corpus run";
  r.json["jobs"] = jobs;
  r.json["fuzz"] = fuzz;
  r.json["failures"] = failures;
  r.json["passed"] = failures == 0;
  if (failures > 0) r.exit = kDisagreement;
  return r;
}

}  // namespace corpus

// ---------------------------------------------------------------- driver

inline void emit(const Context& c, const Result& r, std::ostream& out) {
  std::ostringstream s;
  if (c.opt.format == "text") {
    if (!r.text_prelude.empty()) s << r.text_prelude << "\n";
    Json shown = r.json;
    shown.erase("ring");
    text::render(s, shown);
  } else {
    s << r.json.dump(2) << "\n";
  }
  if (c.opt.out.empty()) {
    out << s.str();
  } else {
    std::ofstream f(c.opt.out);
    if (!f) throw InputError("cannot write " + c.opt.out);
    f << s.str();
  }
}

inline int report_error(const Context& c, std::ostream& out, std::ostream& err, int code, const std::string& kind,
                        const std::string& message) {
  err << "syzlab: " << message << "\n";
  if (c.opt.format == "json") out << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << "\n";
  return code;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context c;
  Options& o = c.opt;
  CLI::App app{"syzlab: syzygies, resolutions, Ext/Tor and criteria checks over graded quotient rings"};
  app.name("syzlab");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* s) {
    s->add_option("--ring", o.ring, "ring description: JSON file path or inline JSON");
    s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    s->add_option("--out", o.out, "write the report to this file instead of stdout");
  };
  const char* module_help = "module expression: R, R^r, k, omega, (f,...), R/(f,...), syz(n,e), shift(d,e), "
                            "quot(e,[v],...), pick(e,i,...), e & e, @file.json";

  std::function<Result()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<Result()> f) {
    CLI::App* s = parent->add_subcommand(name, help);
    add_common(s);
    s->callback([&action, f] { action = f; });
    return s;
  };

  auto* ring_cmd = app.add_subcommand("ring", "ring-level computations");
  ring_cmd->require_subcommand(1);
  leaf(ring_cmd, "classify", "dimension, depth, multiplicity, CM/Gorenstein/regular, minimal multiplicity",
       [&] { return cmd_classify(c); });

  auto* s = leaf(&app, "resolve", "minimal free resolution", [&] { return cmd_resolve(c, false); });
  s->add_option("--M", o.m, module_help);
  s->add_option("--length", o.length, "homological length (default 5)");
  s->add_flag("--maps", o.maps, "include the differentials");
  s = leaf(&app, "betti", "graded Betti table", [&] { return cmd_resolve(c, true); });
  s->add_option("--M", o.m, module_help);
  s->add_option("--length", o.length, "homological length (default 5)");
  s = leaf(&app, "syzygy", "presentation of the n-th syzygy module", [&] { return cmd_syzygy(c); });
  s->add_option("--M", o.m, module_help);
  s->add_option("--n", o.index, "syzygy index (default 1)");
  s = leaf(&app, "hilbert", "Hilbert series and function", [&] { return cmd_hilbert(c); });
  s->add_option("--M", o.m, module_help);
  s->add_option("--max-degree", o.max_degree, "tabulate the Hilbert function up to this degree");
  s = leaf(&app, "socle", "socle (0 :_M m)", [&] { return cmd_socle(c); });
  s->add_option("--M", o.m, module_help);
  for (bool is_ext : {true, false}) {
    s = leaf(&app, is_ext ? "ext" : "tor", is_ext ? "Ext^i(M, N)" : "Tor_i(M, N)",
             [&, is_ext] { return cmd_ext_tor(c, is_ext); });
    s->add_option("--M", o.m, module_help);
    s->add_option("--N", o.n, module_help + std::string(" (default R)"));
    s->add_option("--range", o.range, "index range a..b (default 0..4)");
    s->add_option("--degree-cap", o.degree_cap, "report graded pieces up to this degree (overrides SYZLAB_DEGREE_CAP)");
  }
  s = leaf(&app, "hom", "Hom(M, N) as a module", [&] { return cmd_hom(c); });
  s->add_option("--M", o.m, module_help);
  s->add_option("--N", o.n, module_help + std::string(" (default R)"));
  s->add_option("--max-degree", o.max_degree, "tabulate the Hilbert function up to this degree");
  s = leaf(&app, "trace", "trace ideal and free-summand witness", [&] { return cmd_trace(c); });
  s->add_option("--M", o.m, module_help);
  leaf(&app, "canonical", "canonical module of a Cohen-Macaulay ring", [&] { return cmd_canonical(c); });

  auto* check = app.add_subcommand("check", "lemma checks and criterion verdicts");
  check->require_subcommand(1);
  s = leaf(check, "socle-lemma", "Soc(R) annihilates Omega_n(M) for 1 <= n <= nmax", [&] { return cmd_socle_lemma(c); });
  s->add_option("--M", o.m, module_help + std::string(" (default k)"));
  s->add_option("--nmax", o.nmax, "largest syzygy index (default 4)");
  s = leaf(check, "takahashi", "Omega_n(k) mod a regular linear form splits", [&] { return cmd_takahashi(c); });
  s->add_option("--l", o.linear, "linear form, e.g. x+y");
  s->add_option("--nmax", o.nmax, "largest syzygy index (default 5)");
  s = leaf(check, "no-summand", "syzygies of M in the window have no free or semidualizing summand",
           [&] { return cmd_no_summand(c); });
  s->add_option("--M", o.m, module_help);
  s->add_option("--nmax", o.nmax, "largest syzygy index (default 2(d+1)+2)");
  s->add_option("--semidual-bound", o.semidual_bound, "Ext bound for the semidualizing test (default 2)");
  s = leaf(check, "gorenstein-omega-scan", "free summands among syzygies of the canonical module",
           [&] { return cmd_gorenstein_scan(c); });
  s->add_option("--nmax", o.nmax, "largest syzygy index (default 2(d+1)+2)");
  s = leaf(check, "regularity", "d+1 consecutive vanishing Ext or Tor between images of syzygies of k",
           [&] { return cmd_regularity(c); });
  s->add_option("--M", o.m, module_help);
  s->add_option("--N", o.n, module_help + std::string(" (default M)"));
  s->add_option("--bound", o.bound, "largest index scanned (default 2(d+1)+2)");
  for (bool omega : {false, true}) {
    s = leaf(check, omega ? "gorenstein-omega" : "gorenstein-ext",
             omega ? "d+1 consecutive vanishing Tor_i(omega, L)" : "d+1 consecutive vanishing Ext^i(L, R)",
             [&, omega] { return cmd_gorenstein_l(c, omega); });
    s->add_option("--L", o.l, module_help + std::string(" (default syz(1, k))"));
    s->add_option("--bound", o.bound, "largest index scanned (default 2(d+1)+2)");
  }
  s = leaf(check, "gdim", "G-dimension zero up to a bound", [&] { return cmd_gdim(c); });
  s->add_option("--L", o.l, module_help + std::string(" (default syz(1, k))"));
  s->add_option("--bound", o.bound, "Ext bound (default 2(d+1)+2)");

  for (const char* name : {"socle-lemma", "takahashi", "no-summand", "gorenstein-omega-scan", "regularity",
                           "gorenstein-ext", "gorenstein-omega", "gdim"})
    check->get_subcommand(name)->add_option("--bundle", o.bundle, "write a counterexample bundle here on disagreement");

  auto* corpus_cmd = app.add_subcommand("corpus", "golden corpus");
  corpus_cmd->require_subcommand(1);
  auto* crun = corpus_cmd->add_subcommand("run", "run every corpus job against its golden output, plus seeded fuzz rings");
  crun->add_option("--corpus", o.corpus, "corpus directory (default: the bundled corpus)");
  crun->add_option("--seed", o.seeds, "fuzz seed(s); overrides the manifest");
  crun->add_option("--fuzz-rings", o.fuzz_rings, "random rings per seed");
  crun->add_flag("--bless", o.bless, "rewrite the golden files from the current output");
  crun->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  crun->add_option("--out", o.out, "write the summary to this file instead of stdout");
  crun->callback([&] { action = [&] { return corpus::run_corpus(c, err); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_help, e_help;
    int code = app.exit(e, o_help, e_help);
    out << o_help.str();
    if (code == 0) return kOk;
    err << e_help.str();
    return kInputError;
  }
  if (!action) {
    out << app.help();
    return kInputError;
  }
  try {
    Result r = action();
    emit(c, r, out);
    return r.exit;
  } catch (const HypothesisRefused& e) {
    return report_error(c, out, err, kRefused, "hypothesis-refused", e.what());
  } catch (const CrossCheckFailure& e) {
    return report_error(c, out, err, kDisagreement, "cross-check", e.what());
  } catch (const InputError& e) {
    return report_error(c, out, err, kInputError, "input", e.what());
  }
}

inline int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace syzlab::cli

#endif  // SYZLAB_TOOLS_CLI_HPP
