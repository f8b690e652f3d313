#ifndef SYZLAB_IO_HPP
#define SYZLAB_IO_HPP

// Ring and module descriptions, the module expression language, and JSON
// report emitters. JSON objects keep insertion order so output is byte-stable.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "syzlab/criteria.hpp"

namespace syzlab {

using Json = nlohmann::ordered_json;

namespace detail {

inline void reject_unknown(const Json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  if (!j.is_object()) throw InputError(what + " must be a JSON object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items())
    if (!ok.count(key)) throw InputError("unknown field '" + key + "' in " + what);
}

template <class T>
T field_as(const Json& j, const char* key, const std::string& what) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError("field '" + std::string(key) + "' of " + what + " is missing or has the wrong type");
  }
}

inline Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(origin + ": invalid JSON (" + e.what() + ")");
  }
}

}  // namespace detail

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Json read_json_file(const std::filesystem::path& path) {
  return detail::parse_json_text(read_file(path), path.string());
}

// ---------------------------------------------------------------- rings

inline RingSpec ring_spec_from_json(const Json& j) {
  detail::reject_unknown(j, {"name", "field", "vars", "degrees", "ideal"}, "ring description");
  RingSpec s;
  if (j.contains("field")) {
    const Json& f = j.at("field");
    detail::reject_unknown(f, {"p"}, "field");
    auto p = detail::field_as<long long>(f, "p", "field");
    if (p <= 0 || p > static_cast<long long>(PrimeField::kMaxPrime))
      throw InputError("field.p must be a prime below 2^31; characteristic 0 is not supported");
    s.p = static_cast<std::uint32_t>(p);
  }
  s.vars = detail::field_as<std::vector<std::string>>(j, "vars", "ring description");
  if (j.contains("degrees")) s.degrees = detail::field_as<std::vector<int>>(j, "degrees", "ring description");
  if (j.contains("ideal")) s.ideal = detail::field_as<std::vector<std::string>>(j, "ideal", "ring description");
  return s;
}

inline RingPtr ring_from_json(const Json& j) { return define_ring(ring_spec_from_json(j)); }

/// A path to a ring file, or inline JSON when the text starts with '{'.
inline RingPtr load_ring(const std::string& source) {
  auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') return ring_from_json(detail::parse_json_text(source, "ring"));
  return ring_from_json(read_json_file(source));
}

inline Json ring_to_json(const GradedRing& r) {
  Json j;
  j["field"] = {{"p", r.field().characteristic()}};
  j["vars"] = r.variables();
  j["degrees"] = std::vector<int>(static_cast<std::size_t>(r.nvars()), 1);
  Json ideal = Json::array();
  for (const auto& g : r.ideal_generators()) ideal.push_back(r.format(g));
  j["ideal"] = ideal;
  return j;
}

inline bool same_ring(const GradedRing& a, const GradedRing& b) {
  if (a.field().characteristic() != b.field().characteristic() || a.variables() != b.variables()) return false;
  const auto& x = a.ideal_generators();
  const auto& y = b.ideal_generators();
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] == y[i])) return false;
  return true;
}

// ---------------------------------------------------------------- modules

inline Json vector_to_json(const GradedRing& r, const Vector& v, int rank) {
  Json out = Json::array();
  for (const auto& p : v.to_polynomials(r.field(), r.nvars(), rank)) out.push_back(r.format(p));
  return out;
}

inline Vector vector_from_strings(const GradedRing& r, const std::vector<std::string>& entries) {
  std::vector<Polynomial> polys;
  for (const auto& e : entries) polys.push_back(r.parse(e));
  return r.normal_form(Vector::from_polynomials(polys));
}

/// {"shifts": [...], "relations": [[entry per generator], ...]}
inline Json module_to_json(const PresentedModule& m) {
  Json j;
  j["shifts"] = m.cover.shifts;
  Json rels = Json::array();
  for (const auto& r : m.relations) rels.push_back(vector_to_json(*m.ring, r, m.generators()));
  j["relations"] = rels;
  return j;
}

inline bool same_module(const PresentedModule& a, const PresentedModule& b) {
  if (a.cover.shifts != b.cover.shifts || a.relations.size() != b.relations.size()) return false;
  for (std::size_t i = 0; i < a.relations.size(); ++i)
    if (!(a.relations[i] == b.relations[i])) return false;
  return true;
}

/// Builds the direct sum of syzygy modules of k named by an image spec, and
/// remembers enough to certify it as such.
struct ImageSpec {
  std::vector<SyzygyPart> parts;
  std::vector<Vector> quotient;  // in the cover of the full direct sum
  int rank = 0;                  // rank of that cover
};

struct ModuleValue {
  PresentedModule module;
  std::optional<ImageSpec> image;  // set for images of sums of syzygies of k
  std::string source;
};

namespace detail {

inline int syzygy_rank_of_k(const RingPtr& ring, int n) {
  return minimal_free_resolution(residue_field(ring), n).rank(n);
}

inline ImageSpec single_part(const RingPtr& ring, int n) {
  return ImageSpec{{{n, 1}}, {}, syzygy_rank_of_k(ring, n)};
}

inline ModuleValue realize(const RingPtr& ring, ImageSpec spec, std::string source) {
  ModuleValue v;
  v.module = syzygy_image(ring, spec.parts, spec.quotient).module;
  v.image = std::move(spec);
  v.source = std::move(source);
  return v;
}

}  // namespace detail

inline ModuleValue module_from_json(const RingPtr& ring, const Json& j);

/// Module expressions:
///   R | R^r | k | omega | (f, ...) | R/(f, ...) | @file.json
///   syz(n, e) | shift(d, e) | quot(e, [v], ...) | pick(e, i, ...) | e & e
/// `&` is the direct sum. quot/pick index the generators of e; for sums of
/// syz(n, k) these are the generators of the syzygy summands in order.
class ModuleExpressionParser {
 public:
  ModuleExpressionParser(RingPtr ring, std::string_view text, std::filesystem::path base = {})
      : ring_(std::move(ring)), text_(text), base_(std::move(base)) {}

  ModuleValue parse() {
    ModuleValue v = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    v.source = std::string(text_);
    return v;
  }

 private:
  struct Node {
    PresentedModule module;
    std::optional<ImageSpec> image;
  };

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("module expression '" + std::string(text_) + "' at position " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  int integer() {
    skip();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ == start + 1 && text_[start] == '-')) fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  /// Text up to the next top-level ',' or closing bracket.
  std::string polynomial_text() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')' && text_[pos_] != ']') ++pos_;
    std::string s(text_.substr(start, pos_ - start));
    if (s.find_first_not_of(" \t") == std::string::npos) fail("expected a polynomial");
    return s;
  }

  std::vector<Polynomial> polynomial_list(char close) {
    std::vector<Polynomial> out;
    do {
      out.push_back(ring_->parse(polynomial_text()));
    } while (accept(','));
    expect(close);
    return out;
  }

  ModuleValue to_value(Node n) { return ModuleValue{std::move(n.module), std::move(n.image), {}}; }

  Node image_node(ImageSpec spec) {
    auto v = detail::realize(ring_, spec, {});
    return Node{std::move(v.module), std::move(v.image)};
  }

  ModuleValue sum() {
    Node acc = atom();
    while (accept('&')) {
      Node next = atom();
      if (acc.image && next.image) {
        ImageSpec s = *acc.image;
        for (const auto& p : next.image->parts) s.parts.push_back(p);
        for (const auto& q : next.image->quotient) s.quotient.push_back(vec::shift_components(q, s.rank));
        s.rank += next.image->rank;
        acc = image_node(std::move(s));
      } else {
        acc = Node{direct_sum({acc.module, next.module}), std::nullopt};
      }
    }
    return to_value(std::move(acc));
  }

  Node atom() {
    skip();
    if (pos_ >= text_.size()) fail("expected a module");
    if (text_[pos_] == '@') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '&' &&
             text_[pos_] != ',' && text_[pos_] != ')')
        ++pos_;
      std::filesystem::path p(std::string(text_.substr(start, pos_ - start)));
      if (p.is_relative() && !base_.empty()) p = base_ / p;
      auto v = module_from_json(ring_, read_json_file(p));
      return Node{std::move(v.module), std::move(v.image)};
    }
    if (accept('(')) return Node{ideal_module(ring_, polynomial_list(')')), std::nullopt};
    std::string id = identifier();
    if (id == "R") {
      if (accept('/')) {
        expect('(');
        return Node{cyclic_module(ring_, polynomial_list(')')), std::nullopt};
      }
      int r = 1;
      if (accept('^')) r = integer();
      if (r < 0) fail("negative rank");
      return Node{free_module(ring_, r), std::nullopt};
    }
    if (id == "k") return image_node(detail::single_part(ring_, 0));
    if (id == "omega") return Node{canonical_module(ring_), std::nullopt};
    if (id == "syz") {
      expect('(');
      int n = integer();
      if (n < 0) fail("syzygy index must be non-negative");
      expect(',');
      ModuleValue inner = sum();
      expect(')');
      const auto& im = inner.image;
      if (im && im->parts.size() == 1 && im->parts[0].multiplicity == 1 && im->quotient.empty())
        return image_node(detail::single_part(ring_, im->parts[0].n + n));
      return Node{syzygy_module(inner.module, n), std::nullopt};
    }
    if (id == "shift") {
      expect('(');
      int d = integer();
      expect(',');
      ModuleValue inner = sum();
      expect(')');
      return Node{shifted(inner.module, d), std::nullopt};
    }
    if (id == "quot" || id == "pick") {
      expect('(');
      ModuleValue inner = sum();
      const int rank = inner.image ? inner.image->rank : inner.module.generators();
      std::vector<Vector> extra;
      if (id == "quot") {
        while (accept(',')) {
          expect('[');
          std::vector<std::string> entries;
          do {
            entries.push_back(polynomial_text());
          } while (accept(','));
          expect(']');
          if (static_cast<int>(entries.size()) != rank)
            fail("quotient vector needs " + std::to_string(rank) + " entries");
          extra.push_back(vector_from_strings(*ring_, entries));
        }
      } else {
        std::set<int> keep;
        while (accept(',')) {
          int i = integer();
          if (i < 0 || i >= rank) fail("generator index out of range");
          keep.insert(i);
        }
        if (keep.empty()) fail("pick needs at least one generator index");
        for (int i = 0; i < rank; ++i)
          if (!keep.count(i)) extra.push_back(Vector::basis(ring_->nvars(), i));
      }
      expect(')');
      if (inner.image) {
        ImageSpec s = *inner.image;
        for (auto& v : extra) s.quotient.push_back(std::move(v));
        return image_node(std::move(s));
      }
      PresentedModule m = inner.module;
      for (auto& v : extra) {
        if (!v.is_homogeneous(m.cover.shifts)) fail("quotient vector is not homogeneous");
        m.relations.push_back(std::move(v));
      }
      return Node{minimal_presentation(m).module, std::nullopt};
    }
    fail(id.empty() ? "expected a module" : "unknown name '" + id + "'");
  }

  RingPtr ring_;
  std::string_view text_;
  std::filesystem::path base_;
  std::size_t pos_ = 0;
};

inline ModuleValue parse_module(const RingPtr& ring, std::string_view text, const std::filesystem::path& base = {}) {
  return ModuleExpressionParser(ring, text, base).parse();
}

/// Module files: {"shifts", "relations", optional "generators"} for a
/// cokernel or a subquotient, or {"image": {"parts", "quotient"}}.
inline ModuleValue module_from_json(const RingPtr& ring, const Json& j) {
  detail::reject_unknown(j, {"name", "shifts", "relations", "generators", "image"}, "module description");
  const GradedRing& r = *ring;
  if (j.contains("image")) {
    if (j.contains("shifts") || j.contains("relations") || j.contains("generators"))
      throw InputError("a module description has either 'image' or a presentation, not both");
    const Json& im = j.at("image");
    detail::reject_unknown(im, {"parts", "quotient"}, "image");
    ImageSpec s;
    for (const auto& p : detail::field_as<std::vector<Json>>(im, "parts", "image")) {
      detail::reject_unknown(p, {"n", "multiplicity"}, "image part");
      SyzygyPart part{detail::field_as<int>(p, "n", "image part"),
                      p.contains("multiplicity") ? detail::field_as<int>(p, "multiplicity", "image part") : 1};
      if (part.n < 0 || part.multiplicity < 1) throw InputError("image parts need n >= 0 and multiplicity >= 1");
      s.parts.push_back(part);
      s.rank += part.multiplicity * detail::syzygy_rank_of_k(ring, part.n);
    }
    if (im.contains("quotient"))
      for (const auto& q : detail::field_as<std::vector<std::vector<std::string>>>(im, "quotient", "image")) {
        if (static_cast<int>(q.size()) != s.rank)
          throw InputError("image quotient vectors need " + std::to_string(s.rank) + " entries");
        s.quotient.push_back(vector_from_strings(r, q));
      }
    return detail::realize(ring, std::move(s), "image");
  }
  auto shifts = detail::field_as<std::vector<int>>(j, "shifts", "module description");
  auto read_vectors = [&](const char* key) {
    std::vector<Vector> out;
    if (!j.contains(key)) return out;
    for (const auto& v : detail::field_as<std::vector<std::vector<std::string>>>(j, key, "module description")) {
      if (v.size() != shifts.size())
        throw InputError(std::string(key) + " vectors need one entry per shift (" + std::to_string(shifts.size()) + ")");
      out.push_back(vector_from_strings(r, v));
    }
    return out;
  };
  auto relations = read_vectors("relations");
  ModuleValue v;
  v.source = "file";
  if (j.contains("generators")) {
    auto gens = read_vectors("generators");
    for (const auto& g : gens)
      if (!g.is_homogeneous(shifts)) throw InputError("generator is not homogeneous for the shifts");
    for (const auto& rel : relations)
      if (!rel.is_homogeneous(shifts)) throw InputError("relation is not homogeneous for the shifts");
    v.module = subquotient(ring, shifts, gens, relations).module;
  } else {
    v.module = PresentedModule{ring, GradedFreeModule(shifts), std::move(relations)};
    v.module.validate();
  }
  return v;
}

/// The module as a certified image of syzygies of k, or an input error.
inline SyzygyImage require_image(const RingPtr& ring, const ModuleValue& v) {
  if (!v.image)
    throw InputError("'" + v.source +
                     "' is not built from syzygies of k; criteria need syz(n, k) sums, optionally with quot or pick");
  return syzygy_image(ring, v.image->parts, v.image->quotient);
}

// ---------------------------------------------------------------- reports

inline Json betti_to_json(const BettiTable& b) {
  Json j = Json::object();
  for (const auto& [key, beta] : b.entries)
    if (beta != 0) j[std::to_string(key.first) + "," + std::to_string(key.second)] = beta;
  return j;
}

inline BettiTable betti_from_json(const Json& j) {
  BettiTable b;
  for (const auto& [key, value] : j.items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw InputError("Betti key '" + key + "' is not 'i,j'");
    b.entries[{std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))}] = value.get<long long>();
  }
  return b;
}

inline Json totals_to_json(const BettiTable& b) {
  Json t = Json::array();
  for (int i = 0; i <= b.max_index(); ++i) t.push_back(b.total(i));
  return t;
}

inline Json matrix_to_json(const GradedRing& r, const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(r.format(m.entry(r.field(), r.nvars(), i, c)));
    rows.push_back(row);
  }
  return rows;
}

inline Json resolution_to_json(const Resolution& res, bool with_maps) {
  Json j;
  j["computedTo"] = res.computed_to();
  j["finite"] = res.finite;
  j["periodicFrom"] = res.periodic_from ? Json(*res.periodic_from) : Json(nullptr);
  j["ranks"] = totals_to_json(res.betti);
  j["betti"] = betti_to_json(res.betti);
  if (with_maps) {
    Json maps = Json::array();
    for (int i = 1; i <= res.computed_to(); ++i) maps.push_back(matrix_to_json(*res.ring, res.differential(i)));
    j["differentials"] = maps;
  }
  return j;
}

inline Json laurent_to_json(const LaurentPolynomial& p) {
  return Json{{"low", p.low()}, {"coefficients", p.coefficients()}};
}

inline Json hilbert_to_json(const HilbertData& h) {
  Json j;
  j["zero"] = h.is_zero();
  j["dim"] = h.dim;
  j["multiplicity"] = h.multiplicity;
  j["numerator"] = laurent_to_json(h.numerator);
  j["series"] = h.is_zero() ? "0" : "(" + h.numerator.to_string() + ") / (1 - t)^" + std::to_string(h.dim);
  j["firstDegree"] = h.first_degree;
  j["function"] = h.function;
  return j;
}

inline Json classification_to_json(const RingClassification& c) {
  Json j;
  j["dim"] = c.dim;
  j["depth"] = c.depth;
  j["embdim"] = c.embdim;
  j["e"] = c.multiplicity;
  j["regular"] = c.regular;
  j["cm"] = c.cohen_macaulay;
  j["gorenstein"] = c.gorenstein;
  j["type"] = c.type ? Json(*c.type) : Json(nullptr);
  j["minMult"] = c.minimal_multiplicity;
  j["abhyankar"] = c.abhyankar_holds;
  j["hilbertNumerator"] = c.hilbert.numerator.coefficients();
  j["hilbertNumeratorLow"] = c.hilbert.numerator.low();
  j["ambientBetti"] = betti_to_json(c.ambient_betti);
  return j;
}

inline Json ext_tor_to_json(const ExtTorReport& rep) {
  Json j;
  j["kind"] = rep.kind == ExtTorReport::Kind::ext ? "ext" : "tor";
  j["lo"] = rep.lo;
  j["hi"] = rep.hi;
  j["degreeCap"] = rep.degree_cap;
  Json dims = Json::array();
  for (const auto& e : rep.entries) dims.push_back(e.length ? Json(*e.length) : Json("inf"));
  j["dims"] = dims;
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json x;
    x["index"] = e.index;
    x["vanishes"] = e.vanishes;
    x["krullDim"] = e.krull_dim;
    x["length"] = e.length ? Json(*e.length) : Json("inf");
    x["firstDegree"] = e.first_degree;
    x["hilbert"] = e.hilbert;
    x["numerator"] = e.numerator;
    entries.push_back(x);
  }
  j["entries"] = entries;
  Json runs = Json::array();
  for (auto [a, b] : rep.zero_runs()) runs.push_back({a, b});
  j["zeroRuns"] = runs;
  j["longestZeroRun"] = rep.longest_zero_run();
  return j;
}

inline Json certificate_to_json(const ImageCertificate& c) {
  Json j;
  j["certified"] = c.certified;
  j["nonzero"] = c.nonzero;
  j["mcm"] = c.mcm;
  j["depth"] = c.depth;
  j["ringDim"] = c.ring_dim;
  Json parts = Json::array();
  for (const auto& p : c.parts) parts.push_back({{"n", p.n}, {"multiplicity", p.multiplicity}});
  j["parts"] = parts;
  j["quotientRelations"] = c.quotient_relations;
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

inline Json verdict_to_json(const CriterionVerdict& v) {
  Json j;
  j["criterion"] = v.criterion;
  j["inputs"] = v.inputs;
  j["windowLength"] = v.window_length;
  j["window"] = v.window ? Json{v.window->first, v.window->second} : Json(nullptr);
  j["windowSource"] = v.window_source;
  j["outcome"] = v.outcome;
  j["verdict"] = v.verdict;
  j["crossCheck"] = v.cross_check;
  j["agreement"] = v.agreement;
  j["foundAt"] = v.found_at ? Json(*v.found_at) : Json(nullptr);
  Json scan = Json::array();
  for (auto [n, free] : v.scan) scan.push_back({{"n", n}, {"freeSummand", free}});
  j["scan"] = scan;
  Json reps = Json::array();
  for (const auto& r : v.reports) reps.push_back(ext_tor_to_json(r));
  j["reports"] = reps;
  return j;
}

inline Json bounded_to_json(const BoundedVerdict& b) {
  Json j;
  j["yes"] = b.yes;
  j["bound"] = b.bound;
  j["failed"] = b.failed.empty() ? Json(nullptr) : Json(b.failed);
  j["failedIndex"] = b.failed_index ? Json(*b.failed_index) : Json(nullptr);
  j["detail"] = b.detail;
  return j;
}

inline Json gdim_to_json(const GdimVerdict& g) {
  Json j;
  j["result"] = bounded_to_json(g.result);
  j["biduality"] = g.biduality;
  j["corollaryApplies"] = g.corollary_applies;
  j["gorenstein"] = g.gorenstein;
  j["agreement"] = g.agreement;
  return j;
}

inline Json trace_to_json(const GradedRing& r, const TraceData& t) {
  Json j;
  j["freeSummand"] = t.free_summand;
  Json gens = Json::array();
  for (const auto& g : t.generators) gens.push_back(r.format(g));
  j["generators"] = gens;
  Json gb = Json::array();
  for (const auto& g : t.ideal_gb) gb.push_back(r.format(g));
  j["traceIdeal"] = gb;
  if (t.witness) {
    j["witness"] = {{"generator", t.witness->generator},
                    {"constant", t.witness->constant},
                    {"homomorphism", vector_to_json(r, t.witness->homomorphism, t.presentation.generators())}};
  } else {
    j["witness"] = nullptr;
  }
  j["presentation"] = module_to_json(t.presentation);
  return j;
}

inline Json socle_to_json(const SocleData& s) {
  Json j;
  j["dimension"] = s.dimension;
  j["degrees"] = s.degrees;
  Json gens = Json::array();
  for (const auto& g : s.generators)
    gens.push_back(vector_to_json(*s.module_presentation.ring, g, s.module_presentation.generators()));
  j["generators"] = gens;
  j["presentation"] = module_to_json(s.module_presentation);
  return j;
}

inline Json audit_to_json(const AuditReport& a) {
  Json j;
  j["dim"] = a.dim;
  j["mcm"] = a.mcm;
  j["windowStart"] = a.window_start;
  j["violations"] = a.violations;
  Json rows = Json::array();
  for (const auto& r : a.rows) {
    Json x;
    x["n"] = r.n;
    x["zero"] = r.zero;
    x["freeSummand"] = r.free_summand;
    x["inWindow"] = r.in_window;
    x["semidualizing"] = r.semidualizing ? bounded_to_json(*r.semidualizing) : Json(nullptr);
    x["violation"] = r.violation;
    rows.push_back(x);
  }
  j["rows"] = rows;
  return j;
}

inline Json socle_lemma_to_json(const std::vector<SocleLemmaRow>& rows) {
  Json j = Json::array();
  for (const auto& r : rows)
    j.push_back({{"n", r.n}, {"contained", r.contained}, {"witness", r.witness.empty() ? Json(nullptr) : Json(r.witness)}});
  return j;
}

inline Json takahashi_to_json(const TakahashiReport& t) {
  Json j;
  j["linearForm"] = t.linear_form;
  j["quotientIdeal"] = t.quotient_ideal;
  j["allOk"] = t.all_ok;
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json x;
    x["n"] = r.n;
    x["muLhs"] = r.mu_lhs;
    x["betaN"] = r.beta_n;
    x["betaNMinus1"] = r.beta_n1;
    x["lhs"] = betti_to_json(r.lhs);
    x["rhs"] = betti_to_json(r.rhs);
    x["hilbertEqual"] = r.hilbert_equal;
    x["ok"] = r.ok;
    rows.push_back(x);
  }
  j["rows"] = rows;
  return j;
}

}  // namespace syzlab

#endif  // SYZLAB_IO_HPP
