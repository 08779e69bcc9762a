// sefib command-line tool. Every verb reads exact rationals and writes JSON (or a text display).
//
// Exit codes: 0 success, 1 mathematical or verification failure, 2 usage error, 3 resource cap.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sefib/sefib.hpp"

using namespace sefib;

namespace {

enum ExitCode : int { kOk = 0, kMathFailure = 1, kUsage = 2, kCap = 3 };

volatile std::sig_atomic_t g_interrupted = 0;
extern "C" void on_sigint(int) { g_interrupted = 1; }

unsigned default_workers() {
  const char* env = std::getenv("SEFIB_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0 || v > 1024) throw UsageError("SEFIB_WORKERS must be an integer in 1..1024");
  return static_cast<unsigned>(v);
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw UsageError("empty list of rationals");
  return out;
}

AffinePoint parse_point(const std::string& text) {
  const auto v = parse_list(text);
  if (v.size() != 2) throw UsageError("affine point must be 'x,y', got '" + text + "'");
  return {v[0], v[1]};
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json read_json(const std::string& path) { return parse_json(read_input(path)); }

template <typename T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed ") + what + ": " + e.what());
  }
}

// Shared option storage; each verb reads the fields it registered.
struct Options {
  std::string format = "json";
  std::string display_style = "normalized";
  std::string convention = "family";
  unsigned workers = 1;

  std::string input;
  int r = 0;
  int s = 0;
  int n = 0;
  std::string alphas;
  std::string a;
  std::string b;
  std::vector<std::string> points;
  std::string point;
  std::string p0;
  std::string p1;
  std::string scale;
  std::size_t count = 10;
  long height = 50;
  bool table = false;

  unsigned long max_order = 30;
  std::uint64_t max_tuples = 100000;
  bool sample = false;
  std::uint64_t seed = 0x5EF1B;
  bool tuples = false;

  std::string fixture;
  std::string file;
  bool verify = false;
  bool list = false;

  [[nodiscard]] bool display() const { return format == "display"; }
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// Config from --input (a Config object, or any object with a "config" member) or --r/--s/--alphas.
Config raw_config(const Options& o) {
  if (!o.input.empty()) {
    const Json j = read_json(o.input);
    return get_as<Config>(j.contains("config") ? j.at("config") : j, "configuration");
  }
  if (o.alphas.empty()) throw UsageError("give --input or --r, --s and --alphas");
  return Config{o.r, o.s, parse_list(o.alphas)};
}

Config checked_config(const Options& o) {
  const Config c = raw_config(o);
  return make_config(c.r, c.s, c.alphas);
}

ProjPoint parse_proj(const std::string& text) { return ProjPoint(parse_list(text)); }

int cmd_validate(const Options& o) {
  const Config c = raw_config(o);
  const ConfigVerdict v = validate(c.r, c.s, c.alphas);
  if (o.display()) {
    if (v.valid()) std::cout << "valid (n = " << v.config->n() << ")\n";
    for (const auto& x : v.violations) std::cout << "invalid: " << x.describe(c.r) << '\n';
  } else {
    emit(v);
  }
  return v.valid() ? kOk : kMathFailure;
}

int cmd_fiber_build(const Options& o) {
  const FiberSystem sys = build_fiber(checked_config(o), parse_convention(o.convention));
  if (o.display()) {
    std::cout << format_display(sys, parse_display_style(o.display_style));
  } else {
    emit(sys);
  }
  return kOk;
}

int cmd_fiber_verify(const Options& o) {
  std::vector<ProjPoint> ys;
  if (!o.point.empty()) ys.push_back(parse_proj(o.point));
  for (const auto& p : o.points) ys.push_back(parse_proj(p));
  if (!o.input.empty()) {
    const Json j = read_json(o.input);
    if (j.contains("point")) ys.push_back(proj_point_from_json(j.at("point")));
    if (j.contains("points")) {
      for (const auto& p : j.at("points")) ys.push_back(proj_point_from_json(p));
    }
  }
  if (ys.empty()) throw UsageError("fiber-verify needs --point, --points or an input with \"point\"/\"points\"");
  const FiberSystem sys = build_fiber(checked_config(o), parse_convention(o.convention));
  Json results = Json::array();
  bool all = true;
  for (const auto& y : ys) {
    if (y.size() != sys.config.alphas.size()) throw UsageError("point " + y.str() + " has the wrong length");
    const FiberCheck c = on_fiber(sys, y, o.workers);
    all = all && c.on_fiber;
    if (o.display()) {
      std::cout << y.str() << (c.on_fiber ? "  on fiber" : "  off fiber") << '\n';
    }
    Json r = c;
    r["point"] = y;
    if (c.on_fiber) {
      const SmoothnessReport sm = smooth_at(sys, y);
      r["smooth"] = sm.smooth;
      r["jacobian_rank"] = sm.rank;
    }
    results.push_back(std::move(r));
  }
  if (!o.display()) emit(results.size() == 1 ? results[0] : results);
  return all ? kOk : kMathFailure;
}

int cmd_fiber_genus(const Options& o) {
  const BigInt g = fiber_genus(o.s, o.n);
  const Classification c = classify(o.s, o.n);
  if (o.display()) {
    std::cout << g.get_str() << '\n';
  } else {
    emit(Json{{"s", o.s}, {"n", o.n}, {"genus", g.get_str()}, {"regime", to_string(c.regime)}, {"n0", c.n0}});
  }
  return kOk;
}

int cmd_gonality(const Options& o) {
  const BigInt g = gonality_lower_bound(o.s, o.n);
  if (o.display()) std::cout << g.get_str() << '\n';
  else emit(Json{{"s", o.s}, {"n", o.n}, {"gonality_lower_bound", g.get_str()}});
  return kOk;
}

int cmd_family_genus(const Options& o) {
  const long g = family_genus(o.r, o.s);
  if (o.display()) std::cout << g << '\n';
  else emit(Json{{"r", o.r}, {"s", o.s}, {"genus", g}});
  return kOk;
}

int cmd_solve_ab(const Options& o) {
  const CurveParams ab = solve_ab(o.r, o.s, parse_point(o.p0), parse_point(o.p1));
  if (o.display()) std::cout << "a = " << ab.a << ", b = " << ab.b << '\n';
  else emit(ab);
  return kOk;
}

int cmd_lift(const Options& o) {
  std::optional<Rational> scale;
  if (!o.scale.empty()) scale = Rational::parse(o.scale);
  ProjPoint y = [&] {
    if (!o.point.empty()) return parse_proj(o.point);
    if (!o.input.empty()) {
      const Json j = read_json(o.input);
      if (j.contains("point")) return proj_point_from_json(j.at("point"));
    }
    throw UsageError("lift needs --point or an input with \"point\"");
  }();
  const LiftResult l = from_fiber_point(checked_config(o), y, scale);
  if (o.display()) {
    if (l.ok()) {
      std::cout << "y^" << l.curve->curve.s << " = x(" << l.curve->curve.a << " x^" << l.curve->curve.r << " + "
                << l.curve->curve.b << ")\n";
    } else {
      std::cout << "obstruction: " << to_string(l.obstruction->kind) << ": " << l.obstruction->detail << '\n';
    }
  } else {
    emit(l);
  }
  return l.ok() ? kOk : kMathFailure;
}

int cmd_push(const Options& o) {
  CurveWithPoints raw;
  if (!o.input.empty()) {
    raw = get_as<CurveWithPoints>(read_json(o.input), "curve with points");
  } else {
    if (o.a.empty() || o.b.empty() || o.points.empty()) throw UsageError("give --input or --r, --s, --a, --b and --pt");
    raw.curve = FamilyCurve{o.r, o.s, Rational::parse(o.a), Rational::parse(o.b)};
    require_family_params(o.r, o.s);
    for (const auto& p : o.points) raw.points.push_back(parse_point(p));
  }
  const CurveWithPoints cwp = make_curve_with_points(raw.curve, raw.points);
  const ProjPoint y = to_fiber_point(cwp);
  const FiberCheck check = on_fiber(build_fiber(cwp.config()), y, o.workers);
  if (o.display()) {
    std::cout << y.str() << '\n';
  } else {
    emit(Json{{"config", cwp.config()}, {"point", y}, {"on_fiber", check.on_fiber}});
  }
  return check.on_fiber ? kOk : kMathFailure;
}

int cmd_conic_enumerate(const Options& o) {
  EnumerateOptions eo;
  eo.search_height = o.height;
  eo.workers = o.workers;
  const auto curves = enumerate_curves(checked_config(o), o.count, eo);
  if (o.display()) {
    for (const auto& c : curves) {
      std::cout << "y^2 = x(" << c.curve.a << " x^2 + " << c.curve.b << ")  through";
      for (const auto& p : c.points) std::cout << " (" << p.x << ", " << p.y << ")";
      std::cout << '\n';
    }
  } else {
    emit(curves);
  }
  return kOk;
}

int cmd_search_ab(const Options& o) {
  const Config config = checked_config(o);
  std::stop_source stop;
  std::signal(SIGINT, on_sigint);
  std::atomic<bool> done{false};
  std::thread watcher([&] {
    while (!done.load()) {
      if (g_interrupted) {
        stop.request_stop();
        return;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(20));
    }
  });
  SearchReport report;
  try {
    report = search_ab(config, o.height, {.workers = o.workers, .stop = stop.get_token()});
  } catch (...) {
    done = true;
    watcher.join();
    throw;
  }
  done = true;
  watcher.join();
  std::signal(SIGINT, SIG_DFL);

  Json j = report;
  if (o.table) j["square_classes"] = count_square_classes(config, o.height, o.workers);
  if (o.display()) {
    std::cout << report.hits.size() << " hit(s) at height <= " << report.height_bound << " among "
              << report.search_space_size << " candidates" << (report.complete ? "" : " (interrupted)") << '\n';
    for (const auto& h : report.hits) std::cout << "a = " << h.curve.a << ", b = " << h.curve.b << '\n';
    std::cout << "evidence only: a bounded search proves nothing beyond its height\n";
  } else {
    emit(j);
  }
  return kOk;
}

int cmd_trivial_points(const Options& o) {
  TrivialPointOptions to;
  to.max_order = o.max_order;
  to.max_tuples = o.max_tuples;
  to.allow_sampling = o.sample;
  to.sample_seed = o.seed;
  to.keep_tuples = o.tuples;
  to.convention = parse_convention(o.convention);
  const auto cert = trivial_points(o.r, o.s, o.n, to);
  if (o.display()) {
    std::cout << (cert.passed() ? "verified " : "FAILED ") << cert.checked << " of " << cert.tuple_space
              << " tuples in Q(zeta_" << cert.order << ")" << (cert.exhaustive ? "" : " (sampled)") << '\n';
  } else {
    emit(cert);
  }
  return cert.passed() ? kOk : kMathFailure;
}

int cmd_fixtures(const Options& o) {
  if (o.list) {
    if (o.display()) {
      for (const auto& n : fixture_names()) std::cout << n << '\n';
    } else {
      emit(fixture_names());
    }
    return kOk;
  }
  if (o.fixture.empty() && o.file.empty()) throw UsageError("fixtures needs a name, --file or --list");
  const Fixture fx = o.file.empty() ? load_fixture(o.fixture) : parse_fixture(read_input(o.file));
  if (!o.verify) {
    std::cout << (o.file.empty() ? std::string(fixture_source(o.fixture)) : read_input(o.file));
    return kOk;
  }
  const FixtureReport rep = verify(fx, o.workers);
  if (o.display()) {
    for (const auto& c : rep.checks) {
      std::cout << (c.passed ? "ok    " : "FAIL  ") << c.name << ": " << c.detail << '\n';
    }
    std::cout << (rep.passed() ? "PASS " : "FAIL ") << rep.name << '\n';
  } else {
    emit(rep);
  }
  return rep.passed() ? kOk : kMathFailure;
}

void diagnostic(const char* kind, const std::string& message) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

// "search ab" and "conic enumerate" are accepted as two-word spellings.
std::vector<std::string> normalize_args(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  for (std::size_t k = 0; k + 1 < args.size(); ++k) {
    const bool search = args[k] == "search" && args[k + 1] == "ab";
    const bool conic = args[k] == "conic" && args[k + 1] == "enumerate";
    if (!search && !conic) continue;
    args[k] = search ? "search-ab" : "conic-enumerate";
    args.erase(args.begin() + static_cast<long>(k) + 1);
    break;
  }
  std::reverse(args.begin(), args.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  try {
    o.workers = default_workers();
  } catch (const UsageError& e) {
    diagnostic("usage", e.what());
    return kUsage;
  }

  CLI::App app{"Exact computations on the fibers attached to y^s = x(a x^r + b)", "sefib"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "display"}));
  app.add_option("--workers", o.workers, "Worker threads (default: SEFIB_WORKERS or 1)")->check(CLI::Range(1u, 1024u));

  auto config_opts = [&](CLI::App* sub) {
    sub->add_option("--input,-i", o.input, "JSON input file, '-' for stdin");
    sub->add_option("--r", o.r, "Exponent r");
    sub->add_option("--s", o.s, "Exponent s");
    sub->add_option("--alphas", o.alphas, "Comma-separated alphas, e.g. 1,2,3");
  };

  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> verbs;

  auto* v = app.add_subcommand("validate", "Check a configuration alpha_0..alpha_n");
  config_opts(v);
  verbs.emplace_back(v, cmd_validate);

  auto* fb = app.add_subcommand("fiber-build", "Build the fiber equations of a configuration");
  config_opts(fb);
  fb->add_option("--convention", o.convention, "family|printed");
  fb->add_option("--display-style", o.display_style, "normalized|common|monic");
  verbs.emplace_back(fb, cmd_fiber_build);

  auto* fv = app.add_subcommand("fiber-verify", "Check projective points against a fiber");
  config_opts(fv);
  fv->add_option("--convention", o.convention, "family|printed");
  fv->add_option("--point", o.point, "Comma-separated coordinates Y_0..Y_n");
  fv->add_option("--points", o.points, "Further points (repeatable)");
  verbs.emplace_back(fv, cmd_fiber_verify);

  auto* fg = app.add_subcommand("fiber-genus", "Genus of the fiber for (s, n)");
  fg->add_option("--s", o.s)->required();
  fg->add_option("--n", o.n)->required();
  verbs.emplace_back(fg, cmd_fiber_genus);

  auto* gb = app.add_subcommand("gonality-bound", "Gonality lower bound for (s, n)");
  gb->add_option("--s", o.s)->required();
  gb->add_option("--n", o.n)->required();
  verbs.emplace_back(gb, cmd_gonality);

  auto* fam = app.add_subcommand("family-genus", "Genus of y^s = x(a x^r + b)");
  fam->add_option("--r", o.r)->required();
  fam->add_option("--s", o.s)->required();
  verbs.emplace_back(fam, cmd_family_genus);

  auto* sa = app.add_subcommand("solve-ab", "Recover (a, b) from two points");
  sa->add_option("--r", o.r)->required();
  sa->add_option("--s", o.s)->required();
  sa->add_option("--p0", o.p0, "x,y")->required();
  sa->add_option("--p1", o.p1, "x,y")->required();
  verbs.emplace_back(sa, cmd_solve_ab);

  auto* lf = app.add_subcommand("lift", "Curve through the alphas from a fiber point");
  config_opts(lf);
  lf->add_option("--point", o.point, "Comma-separated coordinates Y_0..Y_n");
  lf->add_option("--scale", o.scale, "y_k = scale * Y_k (default 1/Y at its first nonzero coordinate)");
  verbs.emplace_back(lf, cmd_lift);

  auto* pu = app.add_subcommand("push", "Fiber point of a curve with marked points");
  pu->add_option("--input,-i", o.input, "JSON {curve, points}, '-' for stdin");
  pu->add_option("--r", o.r);
  pu->add_option("--s", o.s);
  pu->add_option("--a", o.a);
  pu->add_option("--b", o.b);
  pu->add_option("--pt", o.points, "x,y (repeatable)");
  verbs.emplace_back(pu, cmd_push);

  auto* ce = app.add_subcommand("conic-enumerate", "Curves through three points via the fiber conic");
  config_opts(ce);
  ce->add_option("--count", o.count, "Number of curves");
  ce->add_option("--height", o.height, "Base point search height");
  verbs.emplace_back(ce, cmd_conic_enumerate);

  auto* sr = app.add_subcommand("search-ab", "Height-bounded search for (a, b)");
  config_opts(sr);
  sr->add_option("--height", o.height, "Height bound")->required();
  sr->add_flag("--table", o.table, "Also report per-condition counts");
  verbs.emplace_back(sr, cmd_search_ab);

  auto* tp = app.add_subcommand("trivial-points", "Certify the trivial points in Q(zeta_d)");
  tp->add_option("--r", o.r)->required();
  tp->add_option("--s", o.s)->required();
  tp->add_option("--n", o.n)->required();
  tp->add_option("--max-order", o.max_order, "Cap on d = lcm(r, s)");
  tp->add_option("--max-tuples", o.max_tuples, "Cap on exponent tuples");
  tp->add_flag("--sample", o.sample, "Sample max-tuples tuples beyond the cap instead of refusing");
  tp->add_option("--seed", o.seed, "Sampling seed");
  tp->add_option("--convention", o.convention, "printed (default) or family");
  tp->add_flag("--tuples", o.tuples, "List the verified tuples");
  verbs.emplace_back(tp, cmd_trivial_points);

  auto* fx = app.add_subcommand("fixtures", "Embedded datasets");
  fx->add_option("name", o.fixture, "watkins14 or rogers7");
  fx->add_option("--file", o.file, "Verify a fixture JSON file instead");
  fx->add_flag("--verify", o.verify, "Recompute and check everything");
  fx->add_flag("--list", o.list, "List fixture names");
  verbs.emplace_back(fx, cmd_fixtures);

  try {
    auto args = normalize_args(argc, argv);
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    diagnostic("usage", e.what());
    return kUsage;
  }

  // The trivial-points verb defaults to the printed convention.
  if (tp->parsed() && tp->count("--convention") == 0) o.convention = "printed";

  try {
    for (const auto& [sub, fn] : verbs) {
      if (sub->parsed()) return fn(o);
    }
    diagnostic("usage", "no verb given");
    return kUsage;
  } catch (const CapExceeded& e) {
    diagnostic("cap_exceeded", e.what());
    return kCap;
  } catch (const UsageError& e) {
    diagnostic("usage", e.what());
    return kUsage;
  } catch (const MathError& e) {
    diagnostic("math", e.what());
    return kMathFailure;
  } catch (const Json::exception& e) {
    diagnostic("usage", e.what());
    return kUsage;
  }
}
