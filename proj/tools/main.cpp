#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "rectihull/io.hpp"
#include "rectihull/measure.hpp"
#include "rectihull/polar.hpp"
#include "rectihull/rectify.hpp"
#include "rectihull/serialize.hpp"

using namespace rectihull;

namespace {

// exit codes: 0 success (probe "fails" verdicts included), 2 input error,
// 3 geometric degeneracy, 4 inconclusive probe
constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kDegenerate = 3;
constexpr int kInconclusive = 4;

struct Options {
  Tolerance tol;
  bool json = false;
  std::string format = "table";  // json | table | off | obj
  std::string out;
  int steps = 1;
};

bool is_seed_name(const std::string& s) {
  for (const std::string& n : seed_names())
    if (n == s) return true;
  return false;
}

// seed name ("prism" takes a parameter) or a path to an OFF file
Polyhedron load_input(const std::string& spec, int param) {
  if (is_seed_name(spec)) return seed_polyhedron(spec, param);
  return read_off_file(spec);
}

void write_mesh(const std::string& path, const std::string& format,
                const Polyhedron& p) {
  bool obj = format == "obj" ||
             (format != "off" && path.size() > 4 &&
              path.compare(path.size() - 4, 4, ".obj") == 0);
  Polyhedron c = canonicalize(p);
  if (obj)
    write_obj_file(path, c);
  else
    write_off_file(path, c);
}

void print_measures(const MeasureReport& m) {
  std::printf("f-vector      %s\n", m.fvector.str().c_str());
  std::printf("volume        %s\n", format_double(m.volume).c_str());
  std::printf("surface area  %s\n", format_double(m.surface_area).c_str());
  std::printf("centroid      (%s, %s, %s)\n", format_double(m.centroid.x).c_str(),
              format_double(m.centroid.y).c_str(),
              format_double(m.centroid.z).c_str());
  std::printf("edge length   min %s  mean %s  max %s\n",
              format_double(m.edge_min).c_str(),
              format_double(m.edge_mean).c_str(),
              format_double(m.edge_max).c_str());
}

void print_sequence(const SequenceReport& rep) {
  std::printf("%4s  %-16s %-14s %-14s %-12s %s\n", "k", "f-vector", "volume",
              "surface", "semiregular", "vertex config");
  for (const SequenceStep& s : rep.steps) {
    std::printf("%4d  %-16s %-14.10g %-14.10g %-12s %s\n", s.k,
                s.fvector.str().c_str(), s.volume, s.surface_area,
                s.semiregular ? "yes" : "no",
                s.semiregular ? s.vertex_config.c_str() : s.diagnosis.c_str());
  }
  std::printf("purity length %d%s\n", rep.purity_length,
              rep.truncated ? " (truncated)" : "");
}

void print_series(const PolygonSeries& s) {
  std::printf("%4s  %-18s %-18s %-18s %-18s\n", "k", "area (closed)",
              "area (measured)", "side (closed)", "side (measured)");
  for (const PolygonSeriesStep& st : s.steps)
    std::printf("%4d  %-18.12g %-18.12g %-18.12g %-18.12g\n", st.k,
                st.area_closed, st.area_measured, st.side_closed,
                st.side_measured);
  std::printf("area total      closed %.12g  measured (partial) %.12g\n",
              s.area_total_closed, s.area_total_measured);
  std::printf("perimeter total closed %.12g  measured (partial) %.12g\n",
              s.perimeter_total_closed, s.perimeter_total_measured);
  std::printf("max deviation   %.3e\n", s.max_deviation);
}

void print_probe(const ProbeResult& r) {
  std::printf("probe     %s\n", r.probe.c_str());
  std::printf("verdict   %s\n", verdict_name(r.verdict).c_str());
  std::printf("lambda    %.12g\n", r.lambda);
  std::printf("residual  %.6e\n", r.residual);
  if (r.has_intersection_fvector)
    std::printf("intersection f-vector %s\n", r.intersection_fvector.str().c_str());
  for (const auto& [key, value] : r.values)
    std::printf("  %-24s %.12g\n", key.c_str(), value);
  std::printf("note      %s\n", r.note.c_str());
}

void emit(const Options& opt, const nlohmann::json& j,
          const std::function<void()>& table) {
  if (opt.json || opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    table();
}

int cmd_seed(const Options& opt, const std::string& name, int param) {
  if (name == "polygon") {
    if (param < 3) throw InvalidParameter("polygon needs n >= 3");
    Polygon poly = seed_polygon(param);
    std::ostringstream off2d;
    off2d << "2OFF\n" << param << " 1 " << param << "\n";
    for (const Vec2& v : poly.vertices)
      off2d << format_double(v.x) << " " << format_double(v.y) << "\n";
    off2d << param;
    for (int i = 0; i < param; ++i) off2d << " " << i;
    off2d << "\n";
    if (!opt.out.empty()) {
      std::ofstream f(opt.out);
      f << off2d.str();
    }
    nlohmann::json j = {{"n", param},
                        {"area", poly.area()},
                        {"perimeter", poly.perimeter()}};
    emit(opt, j, [&] {
      std::cout << off2d.str();
      std::printf("n %d  area %s  perimeter %s\n", param,
                  format_double(poly.area()).c_str(),
                  format_double(poly.perimeter()).c_str());
    });
    return kOk;
  }
  Polyhedron p = seed_polyhedron(name, param);
  if (!opt.out.empty()) write_mesh(opt.out, opt.format, p);
  MeasureReport m = measure(p, opt.tol);
  emit(opt, m, [&] { print_measures(m); });
  return kOk;
}

int cmd_rectify(const Options& opt, const std::string& input, int param) {
  Polyhedron p = load_input(input, param);
  require_valid(p, opt.tol);
  SequenceReport rep = iterate(p, opt.steps, opt.tol);
  if (!opt.out.empty()) write_mesh(opt.out, opt.format, rep.shapes.back());
  emit(opt, rep, [&] { print_sequence(rep); });
  return kOk;
}

int cmd_polygon_series(const Options& opt, int n) {
  PolygonSeries s = polygon_series(n, opt.steps, opt.tol);
  emit(opt, s, [&] { print_series(s); });
  return kOk;
}

int cmd_measure(const Options& opt, const std::string& input, int param) {
  Polyhedron p = load_input(input, param);
  require_valid(p, opt.tol);
  MeasureReport m = measure(p, opt.tol);
  emit(opt, m, [&] { print_measures(m); });
  return kOk;
}

int cmd_probe(const Options& opt, const std::string& kind,
              const std::string& seed, int param) {
  Polyhedron p = load_input(seed, param);
  require_valid(p, opt.tol);
  ProbeResult r;
  if (kind == "conj1") {
    r = fit_lambda_similarity(rectify_polyhedron(p, opt.tol),
                              rectify_polyhedron(polar_dual(p, opt.tol), opt.tol),
                              opt.tol);
    r.probe = "conjecture1";
  } else if (kind == "conj3") {
    r = probe_conjecture3(p, opt.tol);
  } else if (kind == "lemma1") {
    r = check_lemma1(p, opt.tol);
  } else if (kind == "mahler") {
    r.probe = "mahler";
    double m = mahler_volume(p, opt.tol);
    r.values["mahler"] = m;
    r.values["conjectured_minimum"] = 32.0 / 3.0;
    r.residual = m - 32.0 / 3.0;
    r.verdict = m >= (32.0 / 3.0) * (1.0 - opt.tol.rel) ? Verdict::HoldsNumerically
                                                        : Verdict::Fails;
    r.note = "volume product against the conjectured 3D minimum 32/3";
  } else {
    throw InvalidParameter("unknown probe kind: " + kind);
  }
  emit(opt, r, [&] { print_probe(r); });
  return r.verdict == Verdict::Inconclusive ? kInconclusive : kOk;
}

int cmd_export(const Options& opt, const std::string& input, int param) {
  Polyhedron p = load_input(input, param);
  if (opt.out.empty()) throw InvalidParameter("export needs -o/--out");
  write_mesh(opt.out, opt.format, p);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rectification of convex polygons and polyhedra"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--eps-rel", opt.tol.rel, "relative tolerance")
        ->envname("RECTIHULL_EPS_REL");
    sub->add_option("--eps-abs", opt.tol.abs, "absolute tolerance");
    sub->add_flag("--json", opt.json, "JSON output");
    sub->add_option("--format", opt.format, "json | table | off | obj")
        ->check(CLI::IsMember({"json", "table", "off", "obj"}));
    sub->add_option("-o,--out", opt.out, "output file");
  };

  std::string name, input, kind, seed;
  int param = 0, n = 0;

  CLI::App* s_seed = app.add_subcommand("seed", "generate a seed shape");
  s_seed->add_option("name", name, "shape name or 'polygon'")->required();
  s_seed->add_option("param", param, "n for prism / polygon");
  add_common(s_seed);

  CLI::App* s_rect = app.add_subcommand("rectify", "iterated rectification");
  s_rect->add_option("input", input, "OFF file or seed name")->required();
  s_rect->add_option("param", param, "n when input is 'prism'");
  s_rect->add_option("-k,--steps", opt.steps, "rectification steps");
  add_common(s_rect);

  CLI::App* s_series =
      app.add_subcommand("polygon-series", "closed forms vs measured series");
  s_series->add_option("n", n, "polygon order")->required();
  opt.steps = 6;
  s_series->add_option("-k,--steps", opt.steps, "series length");
  add_common(s_series);

  CLI::App* s_measure = app.add_subcommand("measure", "measure a polyhedron");
  s_measure->add_option("input", input, "OFF file or seed name")->required();
  s_measure->add_option("param", param, "n when input is 'prism'");
  add_common(s_measure);

  CLI::App* s_probe = app.add_subcommand("probe", "conjecture probes");
  s_probe->add_option("kind", kind, "conj1 | conj3 | lemma1 | mahler")
      ->required()
      ->check(CLI::IsMember({"conj1", "conj3", "lemma1", "mahler"}));
  s_probe->add_option("--seed", seed, "seed name or OFF file")->required();
  s_probe->add_option("--param", param, "n when the seed is 'prism'");
  add_common(s_probe);

  CLI::App* s_export = app.add_subcommand("export", "convert/canonicalize meshes");
  s_export->add_option("input", input, "OFF file or seed name")->required();
  s_export->add_option("param", param, "n when input is 'prism'");
  add_common(s_export);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (s_seed->parsed()) return cmd_seed(opt, name, param);
    if (s_rect->parsed()) return cmd_rectify(opt, input, param);
    if (s_series->parsed()) return cmd_polygon_series(opt, n);
    if (s_measure->parsed()) return cmd_measure(opt, input, param);
    if (s_probe->parsed()) return cmd_probe(opt, kind, seed, param);
    if (s_export->parsed()) return cmd_export(opt, input, param);
  } catch (const DegenerateInput& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return kDegenerate;
  } catch (const UnboundedError& e) {
    std::cerr << "degenerate geometry: " << e.what() << "\n";
    return kDegenerate;
  } catch (const ValidationError& e) {
    std::cerr << "invalid geometry: " << e.what() << "\n";
    return kDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
