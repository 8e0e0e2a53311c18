#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fillperm/cli.hpp"
#include "fillperm/crossing_diagram.hpp"
#include "fillperm/enumeration.hpp"
#include "fillperm/gluing_pattern.hpp"
#include "fillperm/hyperbolic.hpp"
#include "fillperm/zpiece.hpp"

namespace fillperm::cli {

namespace {

using json = nlohmann::json;

// Carries an exit code and a diagnostic up to run().
struct Failure {
  int code;
  std::string message;
};

json big_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max()) return v.convert_to<std::int64_t>();
  return v.str();
}

json header(const std::string& command) {
  json j;
  j["schema"] = 1;
  j["version"] = kVersion;
  j["command"] = command;
  return j;
}

int guard_from_env() {
  const char* raw = std::getenv("FILLPERM_GUARD");
  if (raw == nullptr || *raw == '\0') return kDefaultGuard;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > 1000) throw Failure{kUsage, std::string("FILLPERM_GUARD must be an integer in 1..1000, got '") + raw + "'"};
  return static_cast<int>(v);
}

GenusContext context_for(int genus) {
  if (genus < 1 || genus > 1000) throw Failure{kUsage, "--genus must be in 1..1000"};
  return GenusContext::make(genus);
}

Permutation read_perm(const std::string& text, const GenusContext& ctx) {
  try {
    return parse(text, static_cast<std::size_t>(ctx.n));
  } catch (const ParseError& e) {
    throw Failure{kDataError, std::string("cannot parse permutation: ") + e.what()};
  } catch (const PermutationError& e) {
    throw Failure{kDataError, std::string("cannot parse permutation: ") + e.what()};
  }
}

FillingPermutation read_filling(const std::string& text, const GenusContext& ctx) {
  Permutation p = read_perm(text, ctx);
  const FillingCheck check = is_filling(ctx, p);
  if (!check) throw Failure{kValidationFailed, "not a filling permutation: " + check.failure};
  return FillingPermutation(ctx, std::move(p));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kIoError, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Failure{kIoError, "error reading " + path};
  return ss.str();
}

GluingPattern read_pattern(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return pattern_from_json(text);
  } catch (const PatternFormatError& e) {
    throw Failure{kDataError, e.what()};
  }
}

json names_of(const GenusContext& ctx, const std::vector<int>& word) {
  json names = json::array();
  for (int s : word) names.push_back(symbol_name(ctx, s));
  return names;
}

json pattern_json(const GluingPattern& pat) {
  return json{{"i", pat.i}, {"polygons", pat.polygons}};
}

// --- subcommands -----------------------------------------------------------

struct EnumerateArgs {
  int genus = 0;
  bool count_only = false;
  bool classes = false;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  unsigned jobs = 1;
  bool force = false;
};

json cmd_enumerate(const EnumerateArgs& a) {
  const GenusContext ctx = context_for(a.genus);
  EnumerationOptions opts{a.jobs, guard_from_env(), a.force};
  EnumerationResult res;
  try {
    res = enumerate_roots(ctx, opts);
  } catch (const GuardExceeded& e) {
    throw Failure{kGuardRefused, e.what()};
  }
  const std::vector<Permutation> reps = class_representatives(ctx, res.fillings, a.jobs);

  json j = header("enumerate");
  j["genus"] = a.genus;
  j["root_count"] = res.root_count;
  j["filling_count"] = res.fillings.size();
  j["class_count"] = reps.size();
  if (a.count_only) return j;

  json list = json::array();
  for (std::size_t t = 0; t < reps.size() && t < a.limit; ++t) list.push_back(format(reps[t]));
  j["representatives"] = list;
  j["representatives_truncated"] = reps.size() > a.limit;
  if (a.classes) {
    const ClassCanonicalizer canon(ctx);
    std::map<Permutation, std::size_t> members;
    for (const auto& f : res.fillings) ++members[canon.canonical(f.perm())];
    json cls = json::array();
    for (std::size_t t = 0; t < reps.size() && t < a.limit; ++t)
      cls.push_back({{"representative", format(reps[t])},
                     {"cycles", format_cycles(reps[t])},
                     {"members", members[reps[t]]},
                     {"orbit_size", canon.orbit_size(reps[t])}});
    j["classes"] = cls;
  }
  return j;
}

json cmd_verify(const std::string& text, int genus, int& code) {
  const GenusContext ctx = context_for(genus);
  const Permutation p = read_perm(text, ctx);
  const FillingCheck check = is_filling(ctx, p);
  json j = header("verify");
  j["genus"] = genus;
  j["permutation"] = format(p);
  j["valid"] = check.ok;
  if (check.ok) {
    j["boundary_word"] = names_of(ctx, boundary_word(FillingPermutation(ctx, p)));
  } else {
    j["failure"] = check.failure;
    code = kValidationFailed;
  }
  return j;
}

json cmd_reconstruct(const std::string& text, int genus) {
  const GenusContext ctx = context_for(genus);
  const FillingPermutation fp = read_filling(text, ctx);
  const SurfaceReport rep = reconstruct(fp);
  json j = header("reconstruct");
  j["genus"] = rep.genus;
  j["permutation"] = format(fp.perm());
  j["boundary_word"] = rep.boundary_word;
  j["boundary_names"] = names_of(ctx, rep.boundary_word);
  j["vertex_classes"] = rep.vertex_classes;
  j["alpha_is_single_curve"] = rep.alpha_is_single_curve;
  j["beta_is_single_curve"] = rep.beta_is_single_curve;
  return j;
}

json cmd_extend(const std::string& text, int genus, int vertex, const std::string& cache_dir) {
  const GenusContext ctx = context_for(genus);
  const FillingPermutation fp = read_filling(text, ctx);
  if (vertex < 1 || vertex > ctx.i_min)
    throw Failure{kUsage, "vertex out of range: --vertex must be in 1.." + std::to_string(ctx.i_min)};
  ZTemplate t;
  try {
    t = cache_dir.empty() ? derive_template() : load_or_derive_template(cache_dir);
  } catch (const std::filesystem::filesystem_error& e) {
    throw Failure{kIoError, e.what()};
  }
  const FillingPermutation out = splice(fp, vertex, t);
  json j = header("extend");
  j["genus"] = genus;
  j["vertex"] = vertex;
  j["template"] = json::parse(template_to_json(t));
  j["result"] = format(out.perm());
  j["result_genus"] = out.context().g;
  j["result_intersections"] = out.context().i_min;
  json zs = json::array();
  for (const auto& z : detect_zpieces(out, t))
    zs.push_back({{"alpha_start", z.alpha_start}, {"beta_start", z.beta_start}, {"swapped", z.swapped}});
  j["zpieces"] = zs;
  return j;
}

json cmd_pattern(const std::string& command, const std::string& path, int& code) {
  const GluingPattern pat = read_pattern(path);
  const ValidationReport rep = validate(pat);
  json j = header(command);
  j["pattern"] = pattern_json(pat);
  j["valid"] = rep.valid;
  j["has_bigon"] = rep.has_bigon;
  if (!rep.valid) {
    j["failures"] = rep.failures;
    code = kValidationFailed;
    return j;
  }
  try {
    if (command == "t1") {
      j["t1"] = t1(pat);
      j["genus"] = euler_genus(pat);
    } else {
      j["genus"] = euler_genus(pat);
      j["faces"] = pat.polygons.size();
      j["vertices"] = rep.corner_orbits;
      j["edges"] = 2 * pat.i;
    }
  } catch (const InvalidPattern& e) {
    j["valid"] = false;
    j["failures"] = json::array({e.what()});
    code = kValidationFailed;
  }
  return j;
}

json cmd_bounds(int genus, bool exact, unsigned jobs, bool force) {
  const BoundsReport rep = bounds_report(genus);
  json j = header("bounds");
  j["genus"] = genus;
  j["upper"] = big_json(rep.upper);
  j["root_count"] = big_json(rep.root_count);
  if (rep.lower) {
    j["lower"] = rep.lower->str();
    j["lower_value"] = rep.lower->convert_to<double>();
    j["L_g"] = big_json(count_Lg(genus));
  } else {
    j["lower"] = nullptr;
    j["lower_note"] = rep.lower_note;
  }
  if (exact) {
    const GenusContext ctx = context_for(genus);
    std::size_t n = 0;
    try {
      n = count_classes(ctx, {jobs, guard_from_env(), force});
    } catch (const GuardExceeded& e) {
      throw Failure{kGuardRefused, e.what()};
    }
    j["exact_N"] = n;
    bool ok = BigInt(n) <= rep.upper;
    if (rep.lower) {
      const BigInt ceil_lower = (numerator(*rep.lower) + denominator(*rep.lower) - 1) / denominator(*rep.lower);
      ok = ok && ceil_lower <= BigInt(n);
    }
    j["within_bounds"] = ok;
  }
  return j;
}

json cmd_hyp(int genus) {
  if (genus < 2) throw Failure{kValidationFailed, "hyperbolic quantities need genus at least 2"};
  const HyperbolicReport r = hyperbolic_report(genus);
  json j = header("hyp");
  j["genus"] = genus;
  j["m_g"] = r.m_g;
  j["edge_length"] = r.edge_length;
  j["edge_length_half_angle"] = edge_length_half_angle(genus);
  j["min_pair_length"] = r.min_pair_length;
  j["lambda_g"] = genus >= 3 ? json(r.lambda_g) : json(nullptr);
  j["lambda_limit"] = lambda_limit();
  j["inj_radius_lower"] = r.inj_radius_lower;
  j["inj_radius_quoted"] = r.inj_radius_quoted;
  char half[32];
  std::snprintf(half, sizeof half, "%.6f", r.inj_radius_lower);
  j["inj_radius_discrepancy"] =
      std::abs(r.inj_radius_quoted - r.inj_radius_lower) > 1e-3
          ? std::string("quoted value 0.3253 matches arccosh(9/sqrt(73)) itself; the injectivity radius bound is half of it, ") +
                half
          : std::string("none");
  j["max_coincident"] = r.max_coincident;
  j["polygon_area"] = polygon_area(genus);
  j["surface_area"] = surface_area(genus);
  return j;
}

json cmd_diagram(const std::string& text, int genus, const std::string& path, std::ostream& out) {
  const GenusContext ctx = context_for(genus);
  const FillingPermutation fp = read_filling(text, ctx);
  const std::string svg = render_svg(fp);
  if (path.empty() || path == "-") {
    out << svg;
    return nullptr;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Failure{kIoError, "cannot write " + path};
  f << svg;
  f.close();
  if (!f) throw Failure{kIoError, "error writing " + path};
  json j = header("diagram");
  j["genus"] = genus;
  j["output"] = path;
  j["edges"] = ctx.n;
  j["chords"] = ctx.n / 2;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Filling permutations of minimally intersecting filling pairs", "fillperm"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "Enumerate filling permutations and their twisting classes");
  en->add_option("--genus,-g", ea.genus, "Genus")->required();
  auto* co = en->add_flag("--count-only", ea.count_only, "Print counts only");
  en->add_flag("--classes", ea.classes, "List each class with its size")->excludes(co);
  en->add_option("--limit", ea.limit, "Maximum number of representatives listed");
  en->add_option("--jobs,-j", ea.jobs, "Worker threads")->check(CLI::Range(1U, 1024U));
  en->add_flag("--force", ea.force, "Run beyond the genus guard");

  std::string perm_text, path, cache_dir;
  int genus = 0, vertex = 0;
  unsigned jobs = 1;
  bool exact = false, force = false;

  auto* ve = app.add_subcommand("verify", "Check the filling conditions");
  ve->add_option("permutation", perm_text, "Permutation as [images] or cycles")->required();
  ve->add_option("--genus,-g", genus, "Genus")->required();

  auto* re = app.add_subcommand("reconstruct", "Glue the polygon and report vertices and curves");
  re->add_option("permutation", perm_text)->required();
  re->add_option("--genus,-g", genus)->required();

  auto* ex = app.add_subcommand("extend", "Splice a Z-piece at a vertex, giving genus g+2");
  ex->add_option("permutation", perm_text)->required();
  ex->add_option("--genus,-g", genus)->required();
  ex->add_option("--vertex,-k", vertex, "Intersection point to excise")->required();
  ex->add_option("--template-cache", cache_dir, "Directory caching the derived template");

  auto* t1c = app.add_subcommand("t1", "T1 count of a gluing pattern file");
  t1c->add_option("file", path, "Pattern JSON file")->required();

  auto* ge = app.add_subcommand("genus", "Genus of a gluing pattern file");
  ge->add_option("file", path, "Pattern JSON file")->required();

  auto* bo = app.add_subcommand("bounds", "Upper and lower bounds on the class count");
  bo->add_option("--genus,-g", genus)->required();
  bo->add_flag("--exact", exact, "Also enumerate and report the exact count");
  bo->add_option("--jobs,-j", jobs)->check(CLI::Range(1U, 1024U));
  bo->add_flag("--force", force);

  auto* hy = app.add_subcommand("hyp", "Hyperbolic lengths and bounds");
  hy->add_option("--genus,-g", genus)->required();

  auto* di = app.add_subcommand("diagram", "SVG of the polygon with its edge identifications");
  di->add_option("permutation", perm_text)->required();
  di->add_option("--genus,-g", genus)->required();
  di->add_option("-o,--output", path, "Output file; stdout when omitted");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      if (dynamic_cast<const CLI::CallForVersion*>(&e)) out << kVersion << '\n';
      else out << app.help();
      return kOk;
    }
    err << "fillperm: " << e.what() << '\n';
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    json j;
    if (en->parsed()) j = cmd_enumerate(ea);
    else if (ve->parsed()) j = cmd_verify(perm_text, genus, code);
    else if (re->parsed()) j = cmd_reconstruct(perm_text, genus);
    else if (ex->parsed()) j = cmd_extend(perm_text, genus, vertex, cache_dir);
    else if (t1c->parsed()) j = cmd_pattern("t1", path, code);
    else if (ge->parsed()) j = cmd_pattern("genus", path, code);
    else if (bo->parsed()) j = cmd_bounds(genus, exact, jobs, force);
    else if (hy->parsed()) j = cmd_hyp(genus);
    else if (di->parsed()) j = cmd_diagram(perm_text, genus, path, out);
    if (!j.is_null()) {
      j["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      out << j.dump(2) << '\n';
    }
    if (code == kValidationFailed) {
      const std::string why = j.contains("failure") ? j["failure"].get<std::string>()
                              : j.contains("failures") ? j["failures"][0].get<std::string>()
                                                       : "validation failed";
      err << "fillperm: " << why << '\n';
    }
    return code;
  } catch (const Failure& f) {
    err << "fillperm: " << f.message << '\n';
    return f.code;
  } catch (const std::invalid_argument& e) {
    err << "fillperm: " << e.what() << '\n';
    return kValidationFailed;
  } catch (const std::domain_error& e) {
    err << "fillperm: " << e.what() << '\n';
    return kValidationFailed;
  } catch (const std::exception& e) {
    err << "fillperm: internal error: " << e.what() << '\n';
    return kValidationFailed;
  }
}

}  // namespace fillperm::cli
