// Command-line front end: field generation, toast construction, labeling,
// verification and statistics. Exit codes: 0 success / no violations,
// 1 violations found, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "toastkit/analysis.hpp"
#include "toastkit/coloring.hpp"
#include "toastkit/construct.hpp"
#include "toastkit/io.hpp"
#include "toastkit/lcl.hpp"

using namespace toastkit;

namespace {

Box parse_box(const std::string& spec, const std::string& topology) {
  std::vector<i64> lo, hi;
  std::stringstream ss(spec);
  std::string axis;
  while (std::getline(ss, axis, ',')) {
    const auto sep = axis.find("..");
    if (sep == std::string::npos)
      throw UsageError("box axis must look like lo..hi: " + axis);
    lo.push_back(std::stoll(axis.substr(0, sep)));
    hi.push_back(std::stoll(axis.substr(sep + 2)));
  }
  if (lo.empty()) throw UsageError("empty box spec");
  return Box(Point(std::move(lo)), Point(std::move(hi)),
             topology_from_string(topology));
}

std::vector<i64> parse_scales(const std::string& spec, i64 q) {
  if (spec.rfind("auto:", 0) == 0)
    return auto_scales(q, std::stoi(spec.substr(5)));
  std::vector<i64> scales;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) scales.push_back(std::stoll(item));
  if (scales.empty()) throw UsageError("empty scale list");
  return scales;
}

struct ProblemToken {
  std::string kind;  // rt, crt, crtplus, color
  i64 param = 0;
};

ProblemToken parse_problem(const std::string& token) {
  const auto sep = token.find(':');
  if (sep == std::string::npos)
    throw UsageError("problem token must look like rt:4, crt:4, crtplus:4 or "
                     "color:2");
  ProblemToken p{token.substr(0, sep), std::stoll(token.substr(sep + 1))};
  if (p.kind != "rt" && p.kind != "crt" && p.kind != "crtplus" &&
      p.kind != "color")
    throw UsageError("unknown problem kind: " + p.kind);
  return p;
}

Toast load_toast(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw UsageError("cannot open " + path);
  RawToast raw = read_toast(is);
  return make_toast(std::move(raw.pieces), raw.q, raw.box);
}

Labeling load_labeling(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw UsageError("cannot open " + path);
  return read_labeling(is);
}

// Violations go to --out when given, stdout otherwise; exit 1 when nonempty.
int emit_violations(std::vector<Violation> violations, i64 cap,
                    const std::string& out) {
  if ((i64)violations.size() > cap) violations.resize((size_t)cap);
  std::ostringstream os;
  write_violations_csv(os, violations);
  if (out.empty())
    std::cout << os.str();
  else
    write_file(out, os.str());
  return violations.empty() ? 0 : 1;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"rectangular toast construction and verification toolkit"};
  app.require_subcommand(1);

  std::string box_spec, topology = "hard", out, in, field_path, toast_path;
  std::string kind = "bits", annulus = "q", scales_spec, problem_token;
  std::uint64_t seed = 0;
  i64 q = 4, count = 1, max_violations = 1000;
  int n = 2;
  bool big_gaps = false, want_coverage = false, want_containment = false;
  bool want_hex = false;

  auto* genf = app.add_subcommand("gen-field", "seeded random field");
  genf->add_option("--box", box_spec)->required();
  genf->add_option("--topology", topology);
  genf->add_option("--kind", kind)->check(CLI::IsMember({"bits", "reals"}));
  genf->add_option("--seed", seed)->required();
  genf->add_option("--out", out)->required();

  auto* safe = app.add_subcommand("safe-squares", "extract safe squares");
  safe->add_option("--field", field_path)->required();
  safe->add_option("--q", q)->required();
  safe->add_option("--annulus", annulus)->check(CLI::IsMember({"q", "2n"}));
  safe->add_option("--out", out)->required();

  auto* greedy = app.add_subcommand("greedy", "greedy computable toast");
  greedy->add_option("--n", n);
  greedy->add_option("--q", q)->required();
  greedy->add_option("--count", count)->required();
  greedy->add_flag("--big-gaps", big_gaps);
  greedy->add_option("--out", out)->required();

  auto* quasi = app.add_subcommand("quasi-tile", "random-shift quasi-tiling");
  quasi->add_option("--box", box_spec)->required();
  quasi->add_option("--q", q)->required();
  quasi->add_option("--scales", scales_spec)->required();
  quasi->add_option("--seed", seed)->required();
  quasi->add_option("--out", out)->required();

  auto* label = app.add_subcommand("label", "assemble a labeling from a toast");
  label->add_option("--toast", toast_path)->required();
  label->add_option("--problem", problem_token)->required();
  label->add_option("--out", out)->required();

  auto* verify = app.add_subcommand("verify", "check a labeling");
  verify->add_option("--in", in)->required();
  verify->add_option("--problem", problem_token)->required();
  verify->add_option("--max-violations", max_violations);
  verify->add_option("--out", out);

  auto* structure = app.add_subcommand("structure", "recover shapes");
  structure->add_option("--in", in)->required();
  structure->add_option("--q", q)->required();
  structure->add_option("--out", out);

  auto* stats = app.add_subcommand("stats", "toast statistics");
  stats->add_option("--toast", toast_path)->required();
  stats->add_flag("--coverage", want_coverage);
  stats->add_flag("--containment", want_containment);
  stats->add_flag("--hex", want_hex);
  stats->add_option("--out", out);

  auto* orbit = app.add_subcommand("orbit", "symmetry orbit of a window");
  orbit->add_option("--in", in)->required();
  orbit->add_option("--q", q)->required();
  orbit->add_option("--out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (genf->parsed()) {
    const Box box = parse_box(box_spec, topology);
    const auto k =
        kind == "bits" ? RandomField::Kind::Bits : RandomField::Kind::Reals;
    std::ostringstream os;
    write_field(os, gen_field(box, k, seed));
    write_file(out, os.str());
    return 0;
  }
  if (safe->parsed()) {
    std::ifstream is(field_path);
    if (!is) throw UsageError("cannot open " + field_path);
    const RandomField field = read_field(is);
    const auto mode =
        annulus == "q" ? AnnulusMode::WidthQ : AnnulusMode::Width2N;
    std::ostringstream os;
    write_toast(os, extract_safe_squares(field, q, mode));
    write_file(out, os.str());
    return 0;
  }
  if (greedy->parsed()) {
    std::ostringstream os;
    write_toast(os, greedy_toast(n, q, count, big_gaps));
    write_file(out, os.str());
    return 0;
  }
  if (quasi->parsed()) {
    const Box box = parse_box(box_spec, "torus");
    QuasiTileReport report;
    const Toast t = quasi_tile(box, q, parse_scales(scales_spec, q), seed,
                               &report);
    std::ostringstream os;
    write_toast(os, t);
    write_file(out, os.str());
    std::cout << "scale,side,placed,surviving,own_coverage,"
                 "cumulative_coverage\n";
    for (size_t i = 0; i < report.scales.size(); ++i) {
      const auto& s = report.scales[i];
      std::cout << i << "," << s.side << "," << s.placed << "," << s.surviving
                << "," << fmt(s.own_coverage) << ","
                << fmt(s.cumulative_coverage) << "\n";
    }
    return 0;
  }
  if (label->parsed()) {
    const ProblemToken p = parse_problem(problem_token);
    Toast t = load_toast(toast_path);
    if (t.q != p.param)
      throw UsageError("toast spacing does not match the problem parameter");
    std::ostringstream os;
    if (p.kind == "crt") {
      write_labeling(os, assemble_crt(t));
    } else if (p.kind == "crtplus") {
      const CrtPlus triple = assemble_crt_plus(t);
      write_triple(os, triple.f, triple.h1, triple.h2);
    } else if (p.kind == "rt") {
      write_labeling(os, label_from_toast(t));
    } else {
      throw UsageError("label supports rt:<q>, crt:<q> and crtplus:<q>");
    }
    write_file(out, os.str());
    return 0;
  }
  if (verify->parsed()) {
    const ProblemToken p = parse_problem(problem_token);
    if (p.kind == "rt") {
      const Labeling f = load_labeling(in);
      return emit_violations(
          verify_labeling(make_rt_problem(p.param, f.box.n()), f),
          max_violations, out);
    }
    if (p.kind == "crt") {
      return emit_violations(crt_verify(load_labeling(in), p.param),
                             max_violations, out);
    }
    if (p.kind == "crtplus") {
      std::ifstream is(in);
      if (!is) throw UsageError("cannot open " + in);
      auto triple = read_triple(is);
      return emit_violations(
          crt_plus_verify(triple[0], triple[1], triple[2], p.param),
          max_violations, out);
    }
    const Labeling f = load_labeling(in);
    return emit_violations(
        verify_labeling(make_coloring_problem(f.box.n(), (int)p.param), f),
        max_violations, out);
  }
  if (structure->parsed()) {
    const Labeling f = load_labeling(in);
    const auto shapes = extract_red_structure(f, q);
    std::ostringstream os;
    i64 finite = 0, extending = 0;
    for (const auto& s : shapes) {
      nlohmann::json j;
      j["component_id"] = s.component_id;
      j["kind"] = s.finite ? "finite" : "extending";
      j["lo"] = s.shape.lo.c;
      j["hi"] = s.shape.hi.c;
      auto clipped = nlohmann::json::array();
      for (const auto& c : s.shape.clipped)
        clipped.push_back({c[0], c[1]});
      j["clipped"] = clipped;
      os << j.dump() << "\n";
      ++(s.finite ? finite : extending);
    }
    if (out.empty())
      std::cout << os.str();
    else
      write_file(out, os.str());
    std::cerr << "finite=" << finite << " extending=" << extending << "\n";
    return 0;
  }
  if (stats->parsed()) {
    const Toast t = load_toast(toast_path);
    const bool all = !want_coverage && !want_containment && !want_hex;
    std::ostringstream os;
    os << "metric,value\n";
    if (all || want_coverage) os << "coverage," << fmt(coverage(t)) << "\n";
    if (all || want_containment) {
      const ContainmentStats cs = containment_stats(t);
      os << "containment_mean," << fmt(cs.mean) << "\n";
      os << "containment_max," << cs.max << "\n";
    }
    if ((all && t.box.topology == Topology::Torus) || want_hex) {
      os << "hex_connected," << (hex_connectivity_check(t).ok ? 1 : 0) << "\n";
    }
    if (out.empty())
      std::cout << os.str();
    else
      write_file(out, os.str());
    return 0;
  }
  if (orbit->parsed()) {
    const Labeling f = load_labeling(in);
    WindowAssignment phi(f.box.n(), q);
    if (f.box.cell_count() != phi.cells())
      throw UsageError("window labeling must cover exactly [0,2q]^n");
    phi.values = f.cells;
    std::ostringstream os;
    bool first = true;
    for (const auto& img : symmetry_orbit(phi)) {
      if (!first) os << "---\n";
      first = false;
      Labeling g(Box(f.box.lo, f.box.hi), f.alphabet, 'G');
      g.cells = img.values;
      write_labeling(os, g);
    }
    write_file(out, os.str());
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
