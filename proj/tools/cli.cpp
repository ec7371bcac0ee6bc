#include "cli.hpp"

#include <cstdlib>
#include <functional>

#include "CLI11.hpp"
#include "sweep.hpp"

namespace knotpoly::cli {

namespace {

struct Options {
  std::string format;

  std::string knot;
  bool leading = false;

  std::string poly;
  std::optional<std::int64_t> degree;

  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t w = 0;
  std::string companion = "T(3,2)";
  std::optional<std::string> companion_poly;
  bool lemma = false;

  std::string sweep_kind;
  std::int64_t a_max = 20;
  std::int64_t companion_max = 10;
  std::int64_t max = 40;
  std::uint64_t per_case = 200;
  std::uint64_t seed = 7;
  double tol = kRepTolerance;
  unsigned jobs = 0;

  std::string glue_case = "all";
  std::uint64_t count = 10;
};

void emit(std::ostream& out, const Json& j, Format fmt) {
  out << render(j, fmt) << '\n';
}

int do_alexander(const Options& o, Format fmt, std::ostream& out) {
  const TorusKnot k = TorusKnot::parse(o.knot);
  const LaurentPoly f = alexander(k);
  if (fmt == Format::text) {
    out << to_string(o.leading ? leading_form(k) : f) << '\n';
    return kExitOk;
  }
  Json j{{"knot", knot_json(k)}, {"genus", genus(k)}, {"alexander", to_string(f)}};
  if (o.leading) j["leading_form"] = to_string(leading_form(k));
  out << j.dump() << '\n';
  return kExitOk;
}

int do_apoly(const Options& o, Format fmt, std::ostream& out) {
  const TorusKnot k = TorusKnot::parse(o.knot);
  const BiPoly f = enhanced_apoly(k);
  if (fmt == Format::text) {
    out << to_string(f) << '\n';
  } else {
    out << Json{{"knot", knot_json(k)}, {"apoly", to_string(f)}}.dump() << '\n';
  }
  return kExitOk;
}

BiPoly poly_or_knot(const std::string& text) {
  if (!text.empty() && (text[0] == 'T' || text[0] == 't') && text.find('(') != std::string::npos) {
    return enhanced_apoly(TorusKnot::parse(text));
  }
  return parse_bipoly(text);
}

int do_newton(const Options& o, Format fmt, std::ostream& out) {
  const BiPoly f = poly_or_knot(o.poly);
  const NewtonPolygon n = newton_polygon(f);
  const Thinness t = thinness(f);
  std::string kind = t.kind == Thinness::Kind::point  ? "point"
                     : t.kind == Thinness::Kind::thin ? "thin"
                                                      : "not_thin";

  auto points = [](const std::vector<LatticePoint>& v) {
    Json arr = Json::array();
    for (const auto& p : v) arr.push_back(Json::array({p.a, p.b}));
    return arr;
  };
  Json slopes = Json::array();
  for (const auto& s : n.edge_slopes) slopes.push_back(to_string(s));

  if (fmt == Format::json) {
    Json j{{"apoly", to_string(f)},
           {"points", points(n.lattice_points)},
           {"hull", points(n.hull_vertices)},
           {"edge_slopes", slopes},
           {"thinness", kind},
           {"slope", t.slope ? Json(to_string(*t.slope)) : Json(nullptr)}};
    out << j.dump() << '\n';
    return kExitOk;
  }
  auto line = [&](std::string_view label, const std::vector<LatticePoint>& v) {
    out << label << ':';
    for (const auto& p : v) out << " (" << p.a << ',' << p.b << ')';
    out << '\n';
  };
  out << "apoly: " << to_string(f) << '\n';
  line("points", n.lattice_points);
  line("hull", n.hull_vertices);
  out << "edge slopes:";
  for (const auto& s : n.edge_slopes) out << ' ' << to_string(s);
  out << '\n' << "thinness: " << kind;
  if (t.slope) out << ' ' << to_string(*t.slope);
  out << '\n';
  return kExitOk;
}

int do_detect(const Options& o, Format fmt, std::ostream& out) {
  const BiPoly f = parse_bipoly(o.poly);
  const DetectionResult r = o.degree ? detect_with_degree(f, *o.degree) : detect_torus_from_apoly(f);
  if (fmt == Format::text) {
    if (r.is_unknot) {
      out << "unknot\n";
    } else if (r.candidates.empty()) {
      out << "none\n";
    } else {
      for (const auto& k : r.candidates) out << to_string(k) << '\n';
    }
    return kExitOk;
  }
  Json candidates = Json::array();
  for (const auto& k : r.candidates) candidates.push_back(knot_json(k));
  Json j{{"apoly", to_string(f)}};
  if (o.degree) j["degree"] = *o.degree;
  j["candidates"] = candidates;
  j["unique"] = r.unique;
  j["unknot"] = r.is_unknot;
  out << j.dump() << '\n';
  return kExitOk;
}

int do_obstruct(const Options& o, Format fmt, std::ostream& out) {
  Json label;
  LaurentPoly companion;
  if (o.companion_poly) {
    companion = parse_laurent(*o.companion_poly);
    label = to_string(companion);
  } else {
    const TorusKnot c = TorusKnot::parse(o.companion);
    companion = alexander(c);
    label = knot_json(c);
  }
  const Record r = o.lemma ? lemma_record(o.a, o.b, o.w, label, companion)
                           : obstruct_record(o.a, o.b, o.w, label, companion);
  emit(out, r.body, fmt);
  return kExitOk;
}

void emit_summary(std::ostream& out, const std::string& kind, const SweepSummary& s,
                  Format fmt) {
  Json counts = Json::object();
  for (const auto& [k, v] : s.counts) counts[k] = v;
  Json j{{"summary", {{"sweep", kind},
                      {"total", s.total},
                      {"counts", counts},
                      {"contradictions", s.contradictions}}}};
  if (fmt == Format::json) {
    out << j.dump() << '\n';
    return;
  }
  out << "summary: sweep=" << kind << " total=" << s.total;
  for (const auto& [k, v] : s.counts) out << ' ' << k << '=' << v;
  out << " contradictions=" << s.contradictions << '\n';
}

int do_sweep(const Options& o, Format fmt, std::ostream& out) {
  std::function<Record(std::size_t)> task;
  std::size_t n = 0;
  std::vector<std::string> categories;

  const std::vector<TorusKnot> companions =
      o.sweep_kind == "obstruct" || o.sweep_kind == "lemma" ? torus_range(o.companion_max)
                                                            : std::vector<TorusKnot>{};
  struct Tuple {
    std::int64_t a, b, w;
    std::size_t companion;
  };
  std::vector<Tuple> tuples;
  std::vector<TorusKnot> knots;
  std::vector<LaurentPoly> companion_polys;
  for (const auto& c : companions) companion_polys.push_back(alexander(c));

  if (o.sweep_kind == "obstruct" || o.sweep_kind == "lemma") {
    const bool lemma = o.sweep_kind == "lemma";
    for (std::int64_t a = 3; a <= o.a_max; ++a)
      for (std::int64_t b = 2; b < a; ++b) {
        if (std::gcd(a, b) != 1) continue;
        for (std::int64_t w = 1; w < a; ++w) {
          if (!lemma && (a * b) % (w * w) != 0) continue;
          for (std::size_t c = 0; c < companions.size(); ++c) tuples.push_back({a, b, w, c});
        }
      }
    n = tuples.size();
    if (lemma) {
      categories = {"no_violation", "magnitude_violation", "same_sign_violation"};
      task = [&](std::size_t i) {
        const Tuple& t = tuples[i];
        return lemma_sweep_record(t.a, t.b, t.w, companions[t.companion]);
      };
    } else {
      categories = {"obstructed", "config_impossible", "not_obstructed"};
      task = [&](std::size_t i) {
        const Tuple& t = tuples[i];
        return obstruct_record(t.a, t.b, t.w, knot_json(companions[t.companion]),
                               companion_polys[t.companion]);
      };
    }
  } else if (o.sweep_kind == "thinness") {
    for (const auto& k : torus_range(o.max)) {
      knots.push_back(k);
      knots.push_back(k.mirror());
    }
    n = knots.size();
    categories = {"thin", "not_thin", "point"};
    task = [&](std::size_t i) { return thinness_record(knots[i]); };
  } else if (o.sweep_kind == "torus") {
    knots = torus_range(o.max);
    n = knots.size();
    categories = {"admissible", "not_admissible"};
    task = [&](std::size_t i) { return torus_record(knots[i]); };
  } else {
    n = 3 * o.per_case;
    categories = {"ok", "failed"};
    task = [&](std::size_t i) {
      return glue_record(static_cast<int>(i / o.per_case) + 1, o.seed, i % o.per_case, o.tol);
    };
  }

  const SweepSummary s = run_ordered(n, task, o.jobs, fmt, out, categories);
  emit_summary(out, o.sweep_kind, s, fmt);
  return s.contradictions == 0 ? kExitOk : kExitContradiction;
}

int do_glue_verify(const Options& o, Format fmt, std::ostream& out) {
  std::vector<int> cases;
  if (o.glue_case == "all") {
    cases = {1, 2, 3};
  } else {
    cases = {std::stoi(o.glue_case)};
  }
  const std::size_t n = cases.size() * o.count;
  const SweepSummary s = run_ordered(
      n,
      [&](std::size_t i) { return glue_record(cases[i / o.count], o.seed, i % o.count, o.tol); },
      o.jobs, fmt, out, {});
  return s.contradictions == 0 ? kExitOk : kExitContradiction;
}

void emit_error(std::ostream& out, std::ostream& err, Format fmt, std::string_view kind,
                std::string_view detail) {
  const Json j{{"error", {{"kind", kind}, {"detail", detail}}}};
  if (fmt == Format::json) {
    out << j.dump() << '\n';
  } else {
    err << "error: " << kind << ": " << detail << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_format) {
  Options o;
  CLI::App app{"Exact Alexander polynomial, A-polynomial and satellite obstruction toolkit",
               "knotpoly"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format (default depends on the subcommand)")
      ->check(CLI::IsMember({"text", "json"}));

  auto* alex = app.add_subcommand("alexander", "Symmetrized Alexander polynomial of T(a,b)");
  alex->add_option("knot", o.knot, "Torus knot, e.g. T(3,2)")->required();
  alex->add_flag("--leading-form", o.leading, "Also give the leading-term form");

  auto* apoly = app.add_subcommand("apoly", "Enhanced A-polynomial of T(a,b)");
  apoly->add_option("knot", o.knot, "Torus knot, e.g. T(-5,2)")->required();

  auto* newton = app.add_subcommand("newton", "Newton polygon and thinness of a polynomial in M, L");
  newton->add_option("poly", o.poly, "Polynomial such as \"-1 + M^24*L^2\", or T(a,b)")
      ->required();

  auto* detect = app.add_subcommand("detect", "Torus knots whose enhanced A-polynomial is given");
  detect->add_option("poly", o.poly, "Polynomial in M and L")->required();
  detect->add_option("--degree", o.degree, "Alexander polynomial degree (p-1)(q-1)")
      ->check(CLI::NonNegativeNumber);

  auto* obstruct = app.add_subcommand("obstruct", "Coefficient obstruction for a T(a,b) pattern");
  obstruct->add_option("a", o.a, "Pattern parameter a")->required();
  obstruct->add_option("b", o.b, "Pattern parameter b")->required();
  obstruct->add_option("w", o.w, "Winding number")->required();
  auto* comp = obstruct->add_option("--companion", o.companion, "Torus companion")
                   ->capture_default_str();
  obstruct->add_option("--companion-poly", o.companion_poly, "Companion Alexander polynomial")
      ->excludes(comp);
  obstruct->add_flag("--lemma", o.lemma, "Report the winding-residue check alone");

  auto* sweep = app.add_subcommand("sweep", "Exhaustive or randomized sweeps");
  sweep->add_option("kind", o.sweep_kind, "obstruct, lemma, thinness, torus or glue")
      ->required()
      ->check(CLI::IsMember({"obstruct", "lemma", "thinness", "torus", "glue"}));
  sweep->add_option("--a-max", o.a_max, "Largest pattern parameter a")
      ->check(CLI::Range(3, 200))
      ->capture_default_str();
  sweep->add_option("--companion-max", o.companion_max, "Largest torus companion parameter")
      ->check(CLI::Range(3, 60))
      ->capture_default_str();
  sweep->add_option("--max", o.max, "Largest |a| for thinness and torus sweeps")
      ->check(CLI::Range(3, 400))
      ->capture_default_str();
  sweep->add_option("--per-case", o.per_case, "Glue instances per case")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  sweep->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  sweep->add_option("--tol", o.tol, "Residual tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--jobs", o.jobs, "Worker threads, 0 for all cores")->capture_default_str();

  auto* glue = app.add_subcommand("glue-verify", "Build and verify peripheral extensions");
  glue->add_option("--case", o.glue_case, "1, 2, 3 or all")
      ->check(CLI::IsMember({"1", "2", "3", "all"}))
      ->capture_default_str();
  glue->add_option("--count", o.count, "Instances per case")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  glue->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  glue->add_option("--tol", o.tol, "Residual tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  glue->add_option("--jobs", o.jobs, "Worker threads, 0 for all cores")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const bool text_default = alex->parsed() || apoly->parsed() || newton->parsed();
  std::string chosen = text_default ? "text" : "json";
  if (env_format && !env_format->empty()) {
    if (*env_format != "text" && *env_format != "json") {
      err << "KNOTPOLY_FORMAT must be text or json, got " << *env_format << '\n';
      return kExitUsage;
    }
    chosen = *env_format;
  }
  if (!o.format.empty()) chosen = o.format;
  const Format fmt = chosen == "json" ? Format::json : Format::text;

  try {
    if (alex->parsed()) return do_alexander(o, fmt, out);
    if (apoly->parsed()) return do_apoly(o, fmt, out);
    if (newton->parsed()) return do_newton(o, fmt, out);
    if (detect->parsed()) return do_detect(o, fmt, out);
    if (obstruct->parsed()) return do_obstruct(o, fmt, out);
    if (sweep->parsed()) return do_sweep(o, fmt, out);
    return do_glue_verify(o, fmt, out);
  } catch (const Error& e) {
    emit_error(out, err, fmt, to_string(e.kind()), e.what());
    return kExitDomainError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const char* env = std::getenv("KNOTPOLY_FORMAT");
  return run(args, out, err, env ? std::optional<std::string>(env) : std::nullopt);
}

}  // namespace knotpoly::cli
