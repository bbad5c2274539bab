#include "stabkit/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "stabkit/errors.hpp"

namespace stabkit {

namespace {

using json = nlohmann::json;

constexpr const char* kSurfaceSchema = "stabkit-surface/v1";
constexpr const char* kQuotientSchema = "stabkit-quotient/v1";

// Locates diagnostics in the source text. Schema errors name a key; the line
// of its first occurrence is reported.
class Document {
 public:
  Document(std::string_view text, std::string origin) : text_(text), origin_(std::move(origin)) {}

  [[noreturn]] void fail_at_byte(std::size_t byte, const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(origin_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    const auto pos = text_.find("\"" + key + "\"");
    if (pos == std::string_view::npos) throw InputError(origin_ + ": " + msg);
    fail_at_byte(pos, msg);
  }

  json parse() const {
    try {
      return json::parse(text_.begin(), text_.end());
    } catch (const json::parse_error& e) {
      fail_at_byte(e.byte == 0 ? 0 : e.byte - 1, std::string("malformed JSON: ") + e.what());
    }
  }

  const json& require(const json& obj, const std::string& key) const {
    if (!obj.is_object() || !obj.contains(key)) fail(key, "missing key '" + key + "'");
    return obj.at(key);
  }

  Rational rational(const json& v, const std::string& key) const {
    try {
      if (v.is_string()) return parse_rational(v.get<std::string>());
      if (v.is_number_integer()) return Rational(Integer(v.dump()));
    } catch (const InputError& e) {
      fail(key, e.what());
    }
    fail(key, "'" + key + "' must hold rationals written as \"p/q\" strings or integers");
  }

  ExtRational ext_rational(const json& v, const std::string& key) const {
    if (v.is_string()) {
      try {
        return parse_ext_rational(v.get<std::string>());
      } catch (const InputError& e) {
        fail(key, e.what());
      }
    }
    return rational(v, key);
  }

  RatVector vector(const json& v, const std::string& key) const {
    if (!v.is_array()) fail(key, "'" + key + "' must be an array");
    RatVector out;
    for (const auto& x : v) out.push_back(rational(x, key));
    return out;
  }

  std::vector<RatVector> vectors(const json& v, const std::string& key) const {
    if (!v.is_array()) fail(key, "'" + key + "' must be an array of arrays");
    std::vector<RatVector> out;
    for (const auto& x : v) out.push_back(vector(x, key));
    return out;
  }

  RatMatrix matrix(const json& v, const std::string& key) const {
    const auto rows = vectors(v, key);
    try {
      return RatMatrix(rows);
    } catch (const InputError& e) {
      fail(key, e.what());
    }
  }

  long integer(const json& v, const std::string& key) const {
    if (!v.is_number_integer()) fail(key, "'" + key + "' must be an integer");
    return v.get<long>();
  }

  std::string string(const json& v, const std::string& key) const {
    if (!v.is_string()) fail(key, "'" + key + "' must be a string");
    return v.get<std::string>();
  }

  void check_schema(const json& root, const char* expected) const {
    const std::string got = string(require(root, "schema"), "schema");
    if (got != expected) fail("schema", "unsupported schema '" + got + "', expected '" + expected + "'");
  }

  const std::string& origin() const { return origin_; }

 private:
  std::string_view text_;
  std::string origin_;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

EnumerationBounds parse_bounds(const Document& doc, const json& b) {
  const std::string mode = doc.string(doc.require(b, "mode"), "mode");
  if (mode == "witness") {
    WitnessBounds w;
    w.max_denominator = doc.integer(doc.require(b, "max_denominator"), "max_denominator");
    w.coord_min = doc.rational(doc.require(b, "coord_min"), "coord_min");
    w.coord_max = doc.rational(doc.require(b, "coord_max"), "coord_max");
    if (b.contains("cap")) w.cap = static_cast<std::uint64_t>(doc.integer(b.at("cap"), "cap"));
    return w;
  }
  if (mode == "box") {
    BoxBounds x;
    x.r_max = doc.integer(doc.require(b, "r_max"), "r_max");
    const auto& box = doc.require(b, "c1_box");
    if (!box.is_array()) doc.fail("c1_box", "'c1_box' must be an array of [lo, hi] pairs");
    for (const auto& iv : box) {
      if (!iv.is_array() || iv.size() != 2) doc.fail("c1_box", "'c1_box' entries must be [lo, hi]");
      x.c1_box.emplace_back(doc.integer(iv[0], "c1_box"), doc.integer(iv[1], "c1_box"));
    }
    x.ch2_min = doc.rational(doc.require(b, "ch2_min"), "ch2_min");
    x.ch2_max = doc.rational(doc.require(b, "ch2_max"), "ch2_max");
    if (b.contains("cap")) x.cap = static_cast<std::uint64_t>(doc.integer(b.at("cap"), "cap"));
    return x;
  }
  doc.fail("mode", "unknown bounds mode '" + mode + "' (expected 'box' or 'witness')");
}

LePotierProvider parse_provider(const Document& doc, const json& p,
                                const std::filesystem::path& base_dir) {
  const std::string kind = doc.string(doc.require(p, "kind"), "kind");
  if (kind == "quadratic_closed_form") return QuadraticClosedForm{};
  if (kind == "tabulated") {
    Tabulated t;
    t.H = doc.vector(doc.require(p, "H"), "H");
    t.B = doc.vector(doc.require(p, "B"), "B");
    const std::string rule = p.contains("rule") ? doc.string(p.at("rule"), "rule") : "upper_envelope";
    if (rule == "left") t.rule = TabulationRule::left;
    else if (rule == "right") t.rule = TabulationRule::right;
    else if (rule == "upper_envelope") t.rule = TabulationRule::upper_envelope;
    else doc.fail("rule", "unknown tabulation rule '" + rule + "'");
    const auto& knots = doc.require(p, "knots");
    if (!knots.is_array()) doc.fail("knots", "'knots' must be an array of [x, value] pairs");
    for (const auto& k : knots) {
      if (!k.is_array() || k.size() != 2) doc.fail("knots", "'knots' entries must be [x, value]");
      t.knots.push_back({doc.rational(k[0], "knots"), doc.ext_rational(k[1], "knots")});
    }
    return t;
  }
  if (kind == "quotient_transfer") {
    QuotientTransfer q;
    q.cover = load_surface(base_dir / doc.string(doc.require(p, "cover"), "cover"));
    q.group_order = doc.integer(doc.require(p, "group_order"), "group_order");
    q.pullback_ns = doc.matrix(doc.require(p, "pullback_ns"), "pullback_ns");
    return q;
  }
  if (kind == "empirical_envelope") {
    EmpiricalEnvelope e;
    e.bounds = parse_bounds(doc, doc.require(p, "bounds"));
    e.bucket = p.contains("bucket") ? doc.rational(p.at("bucket"), "bucket") : Rational(0);
    return e;
  }
  doc.fail("kind", "unknown provider kind '" + kind + "'");
}

}  // namespace

std::shared_ptr<const SurfaceModel> parse_surface(std::string_view text, const std::string& origin,
                                                  const std::filesystem::path& base_dir) {
  const Document doc(text, origin);
  const json root = doc.parse();
  doc.check_schema(root, kSurfaceSchema);
  SurfaceData d;
  d.name = doc.string(doc.require(root, "name"), "name");
  const long rank = doc.integer(doc.require(root, "rank"), "rank");
  if (rank <= 0) doc.fail("rank", "'rank' must be positive");
  d.rank = static_cast<std::size_t>(rank);
  d.gram = doc.matrix(doc.require(root, "gram"), "gram");
  d.nef_inequalities = doc.vectors(doc.require(root, "nef_inequalities"), "nef_inequalities");
  d.effective_generators = doc.vectors(doc.require(root, "effective_generators"), "effective_generators");
  if (root.contains("chtwo_denominator"))
    d.chtwo_denominator = doc.integer(root.at("chtwo_denominator"), "chtwo_denominator");
  if (root.contains("albanese")) {
    try {
      d.albanese = parse_albanese_type(doc.string(root.at("albanese"), "albanese"));
    } catch (const InputError& e) {
      doc.fail("albanese", e.what());
    }
  }
  if (root.contains("lp_provider")) d.lp_provider = parse_provider(doc, root.at("lp_provider"), base_dir);
  try {
    return std::make_shared<const SurfaceModel>(std::move(d));
  } catch (const InputError& e) {
    std::string msg = e.what();
    if (msg.find("gram") != std::string::npos || msg.find("signature") != std::string::npos ||
        msg.find("Hodge") != std::string::npos)
      doc.fail("gram", msg);
    if (msg.find("provider") != std::string::npos) doc.fail("lp_provider", msg);
    if (msg.find("nef") != std::string::npos) doc.fail("nef_inequalities", msg);
    if (msg.find("effective") != std::string::npos) doc.fail("effective_generators", msg);
    throw InputError(origin + ": " + msg);
  }
}

std::shared_ptr<const SurfaceModel> load_surface(const std::filesystem::path& path) {
  return parse_surface(read_file(path), path.string(), path.parent_path());
}

Quotient parse_quotient(std::string_view text, const std::string& origin,
                        const std::filesystem::path& base_dir) {
  const Document doc(text, origin);
  const json root = doc.parse();
  doc.check_schema(root, kQuotientSchema);
  QuotientDatum d;
  d.cover = load_surface(base_dir / doc.string(doc.require(root, "cover"), "cover"));
  d.base = load_surface(base_dir / doc.string(doc.require(root, "base"), "base"));
  d.group_order = doc.integer(doc.require(root, "group_order"), "group_order");
  d.pullback_ns = doc.matrix(doc.require(root, "pullback_ns"), "pullback_ns");
  d.pushforward_ns = doc.matrix(doc.require(root, "pushforward_ns"), "pushforward_ns");
  if (root.contains("action_ns")) {
    const auto& acts = root.at("action_ns");
    if (!acts.is_array()) doc.fail("action_ns", "'action_ns' must be an array of matrices");
    for (const auto& a : acts) d.action_ns.push_back(doc.matrix(a, "action_ns"));
  }
  try {
    return Quotient(std::move(d));
  } catch (const InputError& e) {
    throw InputError(origin + ": " + e.what());
  }
}

Quotient load_quotient(const std::filesystem::path& path) {
  return parse_quotient(read_file(path), path.string(), path.parent_path());
}

}  // namespace stabkit
