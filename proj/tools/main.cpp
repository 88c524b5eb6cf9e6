// sheafradon: Radon profiles, thickenings and distances of planar sheaf scenes.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sheafradon/distance.hpp"
#include "sheafradon/reference_suite.hpp"
#include "sheafradon/parallel.hpp"
#include "sheafradon/report.hpp"
#include "sheafradon/scene.hpp"

using namespace sheafradon;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Common {
  std::uint32_t field = 0;
  double tol = kUnitTolerance;
  std::size_t dirs = 64;
  std::vector<std::string> dir_list;
  std::string out_csv, out_svg;
  std::string a;
  std::string norm;
  std::size_t threads = 0;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path, "cannot open for writing");
  out << text;
}

Scene load(const std::string& path, const Common& c) {
  Scene s = load_scene(path);
  if (c.field) s.field = c.field;
  return s;
}

std::vector<Direction> directions(const Common& c) {
  if (!c.dir_list.empty()) {
    std::vector<Direction> out;
    for (const auto& text : c.dir_list) {
      auto comma = text.find(',');
      if (comma == std::string::npos) throw UsageError("--dir expects p,q");
      try {
        out.emplace_back(std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1)));
      } catch (const std::invalid_argument& e) {
        throw UsageError("--dir " + text + ": " + e.what());
      }
    }
    return out;
  }
  if (c.dirs == 0) throw UsageError("--dirs must be at least 1");
  return default_directions(c.dirs);
}

std::optional<Rational> radius(const Common& c) {
  if (c.a.empty()) return std::nullopt;
  try {
    return parse_rational(c.a);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--a: ") + e.what());
  }
}

Norm norm_for(const Common& c, const SheafObject& f) {
  if (!c.norm.empty()) {
    try {
      Norm n = parse_norm(c.norm);
      if (n == Norm::l2 && f.backend() == Backend::grid) throw UsageError("--norm l2 needs a convex scene");
      return n;
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError(std::string("--norm: ") + e.what());
    }
  }
  return f.backend() == Backend::grid ? Norm::linf : Norm::l2;
}

int cmd_radon(const std::string& path, const Common& c, bool plot_only) {
  SheafObject f = compile(load(path, c));
  const Norm norm = norm_for(c, f);
  ConvolvedSheaf cs{f, std::nullopt};
  auto a = radius(c);
  if (a) {
    if (*a < 0) throw UsageError("--a must be >= 0 for the radon profile");
    cs.ball = BallSpec{norm, *a};
  }
  const auto dirs = directions(c);
  RadonSummary s = radon_summary(cs, dirs);
  if (plot_only) {
    if (c.out_svg.empty()) throw UsageError("plot needs --out-svg");
    write_file(c.out_svg, profile_svg(s, norm, a));
    return kOk;
  }
  const std::string csv = barcode_csv(s, norm);
  if (c.out_csv.empty()) {
    std::cout << csv;
  } else {
    write_file(c.out_csv, csv);
  }
  if (!c.out_svg.empty()) write_file(c.out_svg, profile_svg(s, norm, a));
  std::size_t with_phi = 0;
  for (const auto& p : s.phi) with_phi += p.has_value();
  std::cerr << dirs.size() << " directions, " << with_phi << " with a single closed degree-1 half-line\n";
  return kOk;
}

int cmd_convolve(const std::string& path, const Common& c, int samples) {
  SheafObject f = compile(load(path, c));
  auto a = radius(c);
  if (!a) throw UsageError("convolve needs --a");
  const Norm norm = norm_for(c, f);
  std::string csv, svg;
  std::ostringstream summary;
  if (f.backend() == Backend::grid) {
    StalkField sf = convolve_grid(f, *a, norm);
    csv = stalk_field_csv(sf);
    svg = stalk_field_svg(sf);
    for (int d : sf.degrees()) {
      IndicatorResult ind = recognize_indicator(sf, d);
      summary << "H" << d << ": ";
      if (ind.support) {
        summary << "indicator on " << ind.support->size() << " cells\n";
      } else {
        summary << "not an indicator (" << ind.diagnostic << ")\n";
      }
    }
  } else {
    StalkSamples s = sample_convolution(f, BallSpec{norm, *a}, samples);
    csv = stalk_samples_csv(s);
    svg = stalk_samples_svg(s);
    std::map<int, std::size_t> support;
    for (const auto& g : s.dims) {
      for (const auto& [k, v] : g.entries()) support[k] += v > 0;
    }
    for (const auto& [k, n] : support) summary << "H" << k << ": nonzero at " << n << " samples\n";
  }
  if (c.out_csv.empty()) {
    std::cout << csv;
  } else {
    write_file(c.out_csv, csv);
  }
  if (!c.out_svg.empty()) write_file(c.out_svg, svg);
  std::cerr << summary.str();
  return kOk;
}

int cmd_distance(const std::string& left, const std::string& right, const Common& c) {
  SheafObject f = compile(load(left, c));
  SheafObject g = compile(load(right, c));
  if (f.backend() != g.backend()) throw InputError(right, "both scenes must use the same backend");
  const Norm norm = norm_for(c, f);
  const auto dirs = directions(c);
  ConvolvedSheaf cf{f, std::nullopt}, cg{g, std::nullopt};
  DistanceReport lower = sup_direction_distance(cf, cg, dirs);
  DistanceReport localized = sup_direction_distance(cf, cg, dirs, true);
  std::cout << "lower_bound " << lower.value.to_string() << " (" << format_double(lower.value.to_double()) << ")";
  if (lower.witness) std::cout << " witness " << lower.witness->to_string();
  std::cout << "\nlocalized_lower_bound " << localized.value.to_string() << '\n';
  auto a = thickening_radius(f, g, norm);
  if (!a) a = thickening_radius(g, f, norm);
  if (a) {
    DistanceReport upper = shift_upper_bound(f, *a);
    std::cout << "upper_bound " << upper.value.to_string() << " certificate " << upper.shift->to_string() << '\n';
    if (std::abs(upper.value.to_double() - lower.value.to_double()) <= c.tol) {
      std::cout << "distance " << lower.value.to_string() << '\n';
    }
  } else {
    std::cout << "upper_bound none\n";
  }
  return kOk;
}

int cmd_verify(const std::string& suite, const Common& c, const std::string& out_json) {
  if (suite != "paper") throw UsageError("unknown suite '" + suite + "'");
  SuiteOptions o;
  o.directions = c.dirs;
  if (o.directions == 0) throw UsageError("--dirs must be at least 1");
  SuiteReport rep = run_reference_suite(o);
  for (const auto& ch : rep.checks) {
    std::cout << (ch.pass ? "PASS" : "FAIL") << " [" << ch.id << "] " << ch.name << ": " << ch.computed << '\n';
    for (const auto& f : ch.failures) std::cout << "    " << f << '\n';
  }
  if (!out_json.empty()) write_file(out_json, rep.to_json());
  return rep.all_pass() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radon profiles, thickenings and distances of constructible sheaves on the plane"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* sub, bool with_dirs) {
    sub->add_option("--field", c.field, "Prime field override");
    sub->add_option("--tol", c.tol, "Tolerance for unit-coordinate comparisons");
    sub->add_option("--threads", c.threads, "Worker threads");
    sub->add_option("--out-csv", c.out_csv, "CSV output path (stdout when absent)");
    sub->add_option("--out-svg", c.out_svg, "SVG output path");
    sub->add_option("--a", c.a, "Thickening radius, e.g. 3/2");
    sub->add_option("--norm", c.norm, "Ball norm: l2 or linf");
    if (with_dirs) {
      auto* n = sub->add_option("--dirs", c.dirs, "Number of sampled directions");
      sub->add_option("--dir", c.dir_list, "Explicit direction p,q (repeatable)")->excludes(n);
    }
  };

  std::string scene, scene_b, suite = "paper", out_json;
  int samples = 41;
  auto* radon = app.add_subcommand("radon", "Per-direction barcodes of the Radon transform");
  radon->add_option("scene", scene, "Scene JSON")->required();
  common(radon, true);
  auto* plot = app.add_subcommand("plot", "SVG of the per-direction birth levels");
  plot->add_option("scene", scene, "Scene JSON")->required();
  common(plot, true);
  auto* conv = app.add_subcommand("convolve", "Stalks of the thickened object");
  conv->add_option("scene", scene, "Scene JSON")->required();
  conv->add_option("--samples", samples, "Samples per side (convex scenes)");
  common(conv, false);
  auto* dist = app.add_subcommand("distance", "Distance bounds between two scenes");
  dist->add_option("scene_a", scene, "First scene")->required();
  dist->add_option("scene_b", scene_b, "Second scene")->required();
  common(dist, true);
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name");
  verify->add_option("--out-json", out_json, "Machine-readable report");
  common(verify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (c.threads) set_thread_count(c.threads);
    if (c.field && !is_prime(c.field)) throw UsageError("--field must be prime");
    if (*radon) return cmd_radon(scene, c, false);
    if (*plot) return cmd_radon(scene, c, true);
    if (*conv) return cmd_convolve(scene, c, samples);
    if (*dist) return cmd_distance(scene, scene_b, c);
    if (*verify) return cmd_verify(suite, c, out_json);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const MarginError& e) {
    std::cerr << "margin error: " << e.what() << '\n';
    return kInputError;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kOk;
}
