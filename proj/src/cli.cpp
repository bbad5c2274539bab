#include "stabkit/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"
#include "stabkit/chamber.hpp"
#include "stabkit/config.hpp"
#include "stabkit/errors.hpp"
#include "stabkit/quadforms.hpp"
#include "stabkit/sweep_output.hpp"

#ifndef STABKIT_DATA_DIR
#define STABKIT_DATA_DIR "data"
#endif

namespace stabkit {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

json pq(const Rational& q) { return to_pq(q); }
json pq(const ExtRational& q) { return to_pq(q); }
json pq(const RatVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_pq(x));
  return a;
}
json pq(const RatMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(pq(m.row(i)));
  return a;
}
json pq(const std::vector<RatVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(pq(v));
  return a;
}
json pq(const ChernCharacter& v) { return json::array({to_pq(v.ch0), pq(v.ch1), to_pq(v.ch2)}); }
json pq(const StabilityParams& p) {
  return {{"H", pq(p.H)}, {"B", pq(p.B)}, {"alpha", to_pq(p.alpha)}, {"beta", to_pq(p.beta)}};
}

// Ordered key/value output. Human form prints `key=value` per line with the
// same strings the JSON form carries, so the two never disagree.
class Report {
 public:
  void set(const std::string& key, json value) { doc_[key] = std::move(value); }
  void print(std::ostream& out, bool as_json) const {
    if (doc_.empty()) return;
    if (as_json) {
      out << doc_.dump(2) << '\n';
      return;
    }
    for (const auto& [k, v] : doc_.items()) out << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }

 private:
  json doc_ = json::object();
};

struct Globals {
  std::string surface;
  std::string quotient;
  std::string csv;
  std::string svg;
  bool json = false;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;  // 0: library defaults
};

struct ParamArgs {
  std::string params, h, b, alpha, beta;
};

void add_param_options(CLI::App* c, ParamArgs& a) {
  c->add_option("--params", a.params, "\"H;B;alpha;beta\", vector coordinates separated by ','");
  c->add_option("--H", a.h, "polarization, e.g. 1,2");
  c->add_option("--B", a.b, "B-field");
  c->add_option("--alpha", a.alpha);
  c->add_option("--beta", a.beta);
}

StabilityParams read_params(const ParamArgs& a) {
  if (!a.params.empty()) return parse_params(a.params);
  if (a.h.empty() || a.b.empty() || a.alpha.empty() || a.beta.empty())
    throw InputError("give --params \"H;B;alpha;beta\" or all of --H, --B, --alpha, --beta");
  return {parse_vector(a.h), parse_vector(a.b), parse_rational(a.alpha), parse_rational(a.beta)};
}

RatVector required_vector(const std::string& text, const char* flag) {
  if (text.empty()) throw InputError(std::string(flag) + " is required");
  return parse_vector(text);
}

Rational required_rational(const std::string& text, const char* flag) {
  if (text.empty()) throw InputError(std::string(flag) + " is required");
  return parse_rational(text);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

struct Range {
  Rational lo, hi, step;
};

Range parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw InputError("range must look like a:b:step, got '" + text + "'");
  Range r{parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
  if (r.lo > r.hi) throw InputError("range start exceeds its end");
  if (sgn(r.step) <= 0) throw InputError("range step must be positive");
  return r;
}

std::pair<Rational, Rational> parse_interval(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw InputError("interval must look like a:b, got '" + text + "'");
  return {parse_rational(parts[0]), parse_rational(parts[1])};
}

fs::path resolve(const std::string& path) {
  if (path.empty()) throw InputError("no input file given");
  if (fs::exists(path)) return path;
  const fs::path bundled = fs::path(STABKIT_DATA_DIR) / path;
  if (fs::exists(bundled)) return bundled;
  throw InputError("cannot find '" + path + "' (also looked in the bundled data directory)");
}

std::shared_ptr<const SurfaceModel> surface_of(const Globals& g) {
  if (g.surface.empty()) throw InputError("--surface is required");
  return load_surface(resolve(g.surface));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << content;
}

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

// Everything a command needs besides its own options.
struct Context {
  Globals g;
  Report report;
  std::ostream& out;
};

int surface_show(Context& c) {
  const auto s = surface_of(c.g);
  c.report.set("name", s->name());
  c.report.set("rank", s->rank());
  c.report.set("gram", pq(s->gram()));
  c.report.set("nef_inequalities", pq(s->nef_inequalities()));
  c.report.set("effective_generators", pq(s->effective_generators()));
  c.report.set("chtwo_denominator", s->chtwo_denominator());
  c.report.set("albanese", to_string(s->albanese()));
  c.report.set("lp_provider", provider_kind(s->lp_provider()));
  return exit_ok;
}

int surface_hodge(Context& c, const std::string& h_text, std::size_t samples) {
  const auto s = surface_of(c.g);
  const RatVector h = required_vector(h_text, "--H");
  require_ample(*s, h);
  std::mt19937_64 rng(c.g.seed);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
  std::optional<Rational> least;
  for (std::size_t i = 0; i < samples; ++i) {
    RatVector v(s->rank());
    for (auto& x : v) x = make_rational(num(rng), den(rng));
    const Rational d = hodge_index_defect(*s, h, v);
    if (!least || d < *least) least = d;
  }
  const bool pass = !least || sgn(*least) >= 0;
  c.report.set("samples", samples);
  c.report.set("min_defect", least ? pq(*least) : json("none"));
  c.report.set("verdict", verdict(pass));
  return pass ? exit_ok : exit_negative;
}

int lp_eval(Context& c, const std::string& h, const std::string& b, const std::string& x) {
  const auto s = surface_of(c.g);
  const RatVector hv = required_vector(h, "--H"), bv = required_vector(b, "--B");
  const Rational xv = required_rational(x, "--x");
  const auto value = phi(*s, hv, bv, xv);
  const Rational u = upper_bound(*s, hv, bv, xv);
  c.report.set("provider", provider_kind(s->lp_provider()));
  c.report.set("x", pq(xv));
  c.report.set("phi", value ? pq(*value) : json("unknown"));
  c.report.set("upper_bound", pq(u));
  return value ? exit_ok : exit_budget;
}

int lp_scan(Context& c, const std::string& h, const std::string& b, const std::string& range) {
  const auto s = surface_of(c.g);
  const RatVector hv = required_vector(h, "--H"), bv = required_vector(b, "--B");
  const Range r = parse_range(range);
  const auto grid = rational_grid(r.lo, r.hi, r.step);
  std::vector<std::optional<ExtRational>> values;
  bool all_known = true;
  for (const auto& x : grid) {
    values.push_back(phi(*s, hv, bv, x));
    all_known = all_known && values.back().has_value();
  }
  std::set<Rational> jumps;
  json jump_list = json::array(), linear = json::array();
  if (all_known) {
    for (const auto& e : continuity_report(*s, hv, bv, r.lo, r.hi, r.step)) {
      if (e.is_jump) {
        jumps.insert(e.x);
        jump_list.push_back(to_pq(e.x));
      }
      if (e.is_linear_segment) linear.push_back(to_pq(e.x));
    }
  }
  std::string csv = "x,phi,upper_bound,jump_flag\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    csv += to_pq(grid[i]) + ',' + (values[i] ? to_pq(*values[i]) : "unknown") + ',' +
           to_pq(upper_bound(*s, hv, bv, grid[i])) + ',' +
           (all_known ? (jumps.count(grid[i]) ? "1" : "0") : "unknown") + '\n';
  }
  if (!c.g.csv.empty()) {
    write_file(c.g.csv, csv);
  } else if (!c.g.json) {
    c.out << csv;
  }
  c.report.set("points", grid.size());
  c.report.set("jumps", all_known ? jump_list : json("unknown"));
  c.report.set("linear_segments", all_known ? linear : json("unknown"));
  if (!c.g.csv.empty()) c.report.set("csv", c.g.csv);
  return all_known ? exit_ok : exit_budget;
}

int charge_eval(Context& c, const ParamArgs& pa, const std::string& cls) {
  const auto s = surface_of(c.g);
  const auto p = read_params(pa);
  if (cls.empty()) throw InputError("--class is required");
  const auto v = parse_character(cls);
  require_dimension(*s, v.ch1, "class");
  const auto z = central_charge(*s, p, v);
  c.report.set("class", pq(v));
  c.report.set("re", pq(z.re));
  c.report.set("im", pq(z.im));
  return exit_ok;
}

int chamber_check(Context& c, const ParamArgs& pa) {
  const auto s = surface_of(c.g);
  const auto p = read_params(pa);
  const auto v = is_geometric(*s, p);
  c.report.set("inside", v.inside);
  c.report.set("blocking", to_string(v.blocking));
  c.report.set("margin", v.margin ? pq(*v.margin) : json("n/a"));
  c.report.set("phi", v.phi ? pq(*v.phi) : json("unknown"));
  if (v.inside) return exit_ok;
  return v.blocking == Blocking::provider_unknown ? exit_budget : exit_negative;
}

int chamber_classify(Context& c, const std::string& h, const std::string& beta, const std::string& cls) {
  const auto s = surface_of(c.g);
  if (cls.empty()) throw InputError("--class is required");
  const auto v = parse_character(cls);
  const auto side = classify_heart_side(*s, required_vector(h, "--H"), required_rational(beta, "--beta"), v);
  c.report.set("class", pq(v));
  c.report.set("side", to_string(side));
  return exit_ok;
}

struct EnvelopeArgs {
  long witness_denominator = 0;
  std::string witness_range = "-2:2";
  long r_max = 0;
  std::string c1_box;
  std::string ch2_range;
  std::string bucket = "0";
};

std::optional<EnumerationBounds> envelope_bounds(const EnvelopeArgs& e, std::uint64_t budget) {
  if (e.witness_denominator > 0 && e.r_max > 0)
    throw InputError("choose either witness or box enumeration for the envelope, not both");
  if (e.witness_denominator > 0) {
    const auto [lo, hi] = parse_interval(e.witness_range);
    WitnessBounds w{e.witness_denominator, lo, hi};
    if (budget) w.cap = budget;
    return w;
  }
  if (e.r_max > 0) {
    if (e.c1_box.empty() || e.ch2_range.empty()) throw InputError("box enumeration needs --c1-box and --ch2-range");
    BoxBounds box;
    box.r_max = e.r_max;
    for (const auto part : split(e.c1_box, ',')) {
      const auto [lo, hi] = parse_interval(std::string(part));
      if (lo.get_den() != 1 || hi.get_den() != 1) throw InputError("--c1-box bounds must be integers");
      box.c1_box.emplace_back(lo.get_num().get_si(), hi.get_num().get_si());
    }
    std::tie(box.ch2_min, box.ch2_max) = parse_interval(e.ch2_range);
    if (budget) box.cap = budget;
    return box;
  }
  return std::nullopt;
}

int chamber_sweep(Context& c, const std::string& h, const std::string& b, const std::string& range,
                  const EnvelopeArgs& e) {
  const auto s = surface_of(c.g);
  const RatVector hv = required_vector(h, "--H"), bv = required_vector(b, "--B");
  const Range r = parse_range(range);
  std::vector<WallSegment> walls;
  if (const auto bounds = envelope_bounds(e, c.g.budget)) walls = wall_envelope(*s, hv, bv, *bounds);
  const auto rows = boundary_sweep(*s, hv, bv, r.lo, r.hi, r.step, walls, parse_rational(e.bucket), c.g.jobs);
  const std::string csv = sweep_csv(rows);
  if (!c.g.csv.empty()) {
    write_file(c.g.csv, csv);
  } else if (!c.g.json) {
    c.out << csv;
  }
  if (!c.g.svg.empty()) write_file(c.g.svg, sweep_svg(rows, s->name() + ": chamber boundary"));
  std::size_t above = 0;
  for (const auto& row : rows)
    if (row.envelope && row.phi && ExtRational(*row.envelope) > *row.phi) ++above;
  c.report.set("points", rows.size());
  c.report.set("walls", walls.size());
  c.report.set("envelope_above_phi", above);
  if (!c.g.csv.empty()) c.report.set("csv", c.g.csv);
  if (!c.g.svg.empty()) c.report.set("svg", c.g.svg);
  return exit_ok;
}

int support_check(Context& c, const ParamArgs& pa, const std::string& delta_text,
                  const std::string& epsilon_text, bool emit_form) {
  const auto s = surface_of(c.g);
  const auto p = read_params(pa);
  require_ample(*s, p.H);
  const auto cone = c.g.budget ? compute_C_H(*s, p.H, c.g.budget) : compute_C_H(*s, p.H);
  const Rational delta =
      delta_text.empty() ? choose_delta(*s, p.H, p.B, p.alpha, p.beta) : parse_rational(delta_text);
  if (sgn(delta) <= 0) throw PreconditionError("delta must be positive");
  const Rational epsilon = epsilon_text.empty()
                               ? choose_epsilon(*s, p.H, p.B, p.alpha, p.beta, delta, cone.value)
                               : parse_rational(epsilon_text);
  if (sgn(epsilon) <= 0) throw PreconditionError("epsilon must be positive");
  const QuadForm q = build_q_combined(*s, build_q_delta(*s, p.H, p.B, p.alpha, p.beta, delta), epsilon);
  const auto kernel = kernel_basis(*s, p);
  const auto minors = leading_principal_minors(restrict_form(q, kernel.vectors));
  const bool pass = !kernel.degenerate && is_negative_definite_on(q, kernel.vectors);
  c.report.set("C_H", pq(cone.value));
  c.report.set("C_H_certified", cone.certified);
  c.report.set("delta", pq(delta));
  c.report.set("epsilon", pq(epsilon));
  c.report.set("kernel_dim", kernel.vectors.size());
  c.report.set("minors", pq(minors));
  if (emit_form) c.report.set("form", pq(q.matrix()));
  c.report.set("verdict", verdict(pass));
  return pass ? exit_ok : exit_negative;
}

std::vector<StabilityParams> random_ample_params(const SurfaceModel& s, std::mt19937_64& rng,
                                                 std::size_t count) {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 6), pos(1, 12);
  std::vector<StabilityParams> out;
  for (std::size_t tries = 0; out.size() < count && tries < 1000 * count; ++tries) {
    StabilityParams p;
    p.H.resize(s.rank());
    p.B.resize(s.rank());
    for (auto& x : p.H) x = make_rational(pos(rng), den(rng));
    for (auto& x : p.B) x = make_rational(num(rng), den(rng));
    p.alpha = make_rational(num(rng), den(rng));
    p.beta = make_rational(num(rng), den(rng));
    if (is_ample(s, p.H)) out.push_back(std::move(p));
  }
  if (out.size() < count) throw PreconditionError("could not sample ample polarizations on the base");
  return out;
}

int quotient_verify(Context& c, const std::string& file, std::size_t samples) {
  const std::string path = file.empty() ? c.g.quotient : file;
  const Quotient q = load_quotient(resolve(path));  // validation happens here
  std::mt19937_64 rng(c.g.seed);
  const auto report = ghat_action_on_knum(q, random_ample_params(q.base(), rng, samples));
  const auto& d = q.datum();
  const Rational g(q.group_order());
  c.report.set("cover", q.cover().name());
  c.report.set("base", q.base().name());
  c.report.set("group_order", q.group_order().get_str());
  c.report.set("pushforward_pullback_is_G_identity",
               d.pushforward_ns * d.pullback_ns == g * RatMatrix::identity(q.base().rank()));
  c.report.set("gram_compatible", d.pullback_ns.transpose() * q.cover().gram() * d.pullback_ns == g * q.base().gram());
  c.report.set("ghat_action", pq(report.action_knum));
  c.report.set("ch_L_chi", pq(report.character_class));
  c.report.set("verdicts_checked", report.verdicts_checked);
  c.report.set("verdicts_agreeing", report.verdicts_agreeing);
  c.report.set("verdict", verdict(report.pass));
  return report.pass ? exit_ok : exit_negative;
}

int quotient_induce(Context& c, const std::string& file, const ParamArgs& pa) {
  const std::string path = file.empty() ? c.g.quotient : file;
  const Quotient q = load_quotient(resolve(path));
  const auto p = read_params(pa);
  const bool invariant = is_Z_invariant(q, p);
  c.report.set("invariant", invariant);
  if (!invariant) return exit_negative;
  const RatMatrix z = induce_central_charge(q, p);
  const Rational g(q.group_order());
  const RatMatrix normalized = Rational(1 / g) * z;
  const RatMatrix zx = central_charge_matrix(q.cover(), p);
  c.report.set("induced", pq(z));
  c.report.set("point_value", pq(z(0, z.cols() - 1)));
  c.report.set("normalized", pq(normalized));
  c.report.set("base_params", pq(params_from_charge(q.base(), normalized)));
  c.report.set("double_induction_is_G_times", double_induction(q, zx) == g * zx);
  return exit_ok;
}

int gallery(Context& c) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(STABKIT_DATA_DIR))
    if (entry.path().extension() == ".cfg") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    try {
      const auto s = load_surface(f);
      c.report.set(f.filename().string(), "surface rank=" + std::to_string(s->rank()) +
                                              " albanese=" + to_string(s->albanese()) +
                                              " provider=" + provider_kind(s->lp_provider()));
    } catch (const InputError&) {
      const Quotient q = load_quotient(f);
      c.report.set(f.filename().string(), "quotient " + q.cover().name() + " -> " + q.base().name() +
                                              " |G|=" + q.group_order().get_str());
    }
  }
  return exit_ok;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact numerical invariants of geometric stability conditions on surfaces", "stabkit"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--surface", g.surface, "surface config (stabkit-surface/v1)");
  app.add_option("--quotient", g.quotient, "quotient config (stabkit-quotient/v1)");
  app.add_option("--csv", g.csv, "write CSV here");
  app.add_option("--svg", g.svg, "write an SVG figure here");
  app.add_flag("--json", g.json, "JSON instead of key=value lines");
  app.add_option("--jobs", g.jobs, "worker threads for sweeps")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--budget", g.budget, "cap on enumerated candidates / cone faces");

  std::function<int(Context&)> action;

  auto* surface = app.add_subcommand("surface", "inspect a surface model");
  surface->require_subcommand(1);
  surface->add_subcommand("show", "print the lattice and provider")->callback([&] { action = surface_show; });
  std::string hodge_h;
  std::size_t hodge_samples = 1000;
  auto* hodge = surface->add_subcommand("hodge", "check (H.c)^2 >= H^2 c^2 on random classes");
  hodge->add_option("--H", hodge_h);
  hodge->add_option("--samples", hodge_samples);
  hodge->callback([&] { action = [&](Context& c) { return surface_hodge(c, hodge_h, hodge_samples); }; });

  auto* lp = app.add_subcommand("lp", "Le Potier function");
  lp->require_subcommand(1);
  std::string lp_h, lp_b, lp_x, lp_range;
  auto* eval = lp->add_subcommand("eval", "evaluate phi at one point");
  eval->add_option("--H", lp_h);
  eval->add_option("--B", lp_b);
  eval->add_option("--x", lp_x);
  eval->callback([&] { action = [&](Context& c) { return lp_eval(c, lp_h, lp_b, lp_x); }; });
  auto* scan = lp->add_subcommand("scan", "grid scan with continuity flags");
  scan->add_option("--H", lp_h);
  scan->add_option("--B", lp_b);
  scan->add_option("--range", lp_range, "a:b:step")->required();
  scan->callback([&] { action = [&](Context& c) { return lp_scan(c, lp_h, lp_b, lp_range); }; });

  ParamArgs pa;
  std::string cls;
  auto* charge = app.add_subcommand("charge", "central charges");
  charge->require_subcommand(1);
  auto* ceval = charge->add_subcommand("eval", "Z(v) as exact re/im");
  add_param_options(ceval, pa);
  ceval->add_option("--class", cls, "\"r;a,b;s\"");
  ceval->callback([&] { action = [&](Context& c) { return charge_eval(c, pa, cls); }; });

  auto* chamber = app.add_subcommand("chamber", "geometric chamber");
  chamber->require_subcommand(1);
  auto* check = chamber->add_subcommand("check", "is (H,B,alpha,beta) geometric?");
  add_param_options(check, pa);
  check->callback([&] { action = [&](Context& c) { return chamber_check(c, pa); }; });
  auto* classify = chamber->add_subcommand("classify", "torsion-pair side of a class");
  classify->add_option("--H", pa.h);
  classify->add_option("--beta", pa.beta);
  classify->add_option("--class", cls);
  classify->callback([&] { action = [&](Context& c) { return chamber_classify(c, pa.h, pa.beta, cls); }; });
  EnvelopeArgs env;
  std::string sweep_range;
  auto* sweep = chamber->add_subcommand("sweep", "boundary sweep over a beta range");
  sweep->add_option("--H", pa.h);
  sweep->add_option("--B", pa.b);
  sweep->add_option("--range", sweep_range, "a:b:step")->required();
  sweep->add_option("--witness-denominator", env.witness_denominator, "envelope from witnesses r*e^C");
  sweep->add_option("--witness-range", env.witness_range, "coordinate interval of C, a:b");
  sweep->add_option("--r-max", env.r_max, "envelope from a character box");
  sweep->add_option("--c1-box", env.c1_box, "lo:hi per coordinate, comma separated");
  sweep->add_option("--ch2-range", env.ch2_range, "a:b");
  sweep->add_option("--bucket", env.bucket, "slope bucket half-width");
  sweep->callback([&] { action = [&](Context& c) { return chamber_sweep(c, pa.h, pa.b, sweep_range, env); }; });

  std::string delta_text, epsilon_text;
  bool emit_form = false;
  auto* support = app.add_subcommand("support", "support-property form");
  support->require_subcommand(1);
  auto* scheck = support->add_subcommand("check", "certify negative definiteness on ker Z");
  add_param_options(scheck, pa);
  scheck->add_option("--delta", delta_text);
  scheck->add_option("--epsilon", epsilon_text);
  scheck->add_flag("--emit-form", emit_form);
  scheck->callback([&] {
    action = [&](Context& c) { return support_check(c, pa, delta_text, epsilon_text, emit_form); };
  });

  std::string qfile;
  std::size_t q_samples = 100;
  auto* quotient = app.add_subcommand("quotient", "free quotients");
  quotient->require_subcommand(1);
  auto* verify = quotient->add_subcommand("verify", "validate quotient data and the dual-group action");
  verify->add_option("file", qfile);
  verify->add_option("--samples", q_samples);
  verify->callback([&] { action = [&](Context& c) { return quotient_verify(c, qfile, q_samples); }; });
  auto* induce = quotient->add_subcommand("induce", "descend an invariant central charge");
  induce->add_option("file", qfile);
  add_param_options(induce, pa);
  induce->callback([&] { action = [&](Context& c) { return quotient_induce(c, qfile, pa); }; });

  app.add_subcommand("gallery", "list the bundled configs")->callback([&] { action = gallery; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_input;
  }

  Context ctx{g, {}, out};
  try {
    const int code = action(ctx);
    ctx.report.print(out, g.json);
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << '\n';
    return exit_budget;
  } catch (const CertificationError& e) {
    err << "not certified: " << e.what() << '\n';
    return exit_budget;
  }
}

}  // namespace stabkit
