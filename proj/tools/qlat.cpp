// Command-line front end: subcommands over the field/lattice/design/eigenform
// operations with text, json, and csv output.  Exit codes: 0 success or all
// checks passing, 1 verification failure or runtime error, 2 usage error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qlat/io.hpp"

namespace {

struct CommonOpts {
  long long d = 0;
  int class_index = 0;
  long long N = 20;
  long long m = 1;
  int t = 0;
  int cap = 12;
  std::string P = "x2-y2";
  int variant = 1;
  long long disc_min = -48;
  std::string format = "text";
  std::string out;
};

void emit(const CommonOpts& opts, const std::string& payload) {
  if (opts.out.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(opts.out);
    if (!f) throw std::runtime_error("cannot open output file: " + opts.out);
    f << payload;
    if (!payload.empty() && payload.back() != '\n') f << "\n";
  }
}

qlat::Harmonic parse_harmonic(const std::string& name) {
  if (name == "x2-y2") return qlat::Harmonic::SquareDiff;
  if (name == "xy") return qlat::Harmonic::Product;
  if (name == "half") return qlat::Harmonic::HalfSquareDiff;
  throw CLI::ValidationError("--P must be one of x2-y2, xy, half");
}

template <typename C>
std::string render_series(const CommonOpts& opts, const qlat::QSeries<C>& s) {
  if (opts.format == "json") return qlat::io::series_json(s).dump(2);
  if (opts.format == "csv") return qlat::io::series_csv(s);
  return qlat::io::expansion_text(s);
}

int run(int argc, char** argv) {
  CLI::App app{"ideal lattices of imaginary quadratic fields: theta series, "
               "Hecke eigenforms, and spherical design certification"};
  app.require_subcommand(1);
  CommonOpts o;

  auto add_common = [&](CLI::App* cmd, bool wants_d) {
    if (wants_d) cmd->add_option("--d", o.d, "square-free field parameter d")->required();
    cmd->add_option("--format", o.format, "output format: text, json, csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out, "write output to a file instead of stdout");
  };

  auto* theta = app.add_subcommand("theta", "classical theta series of an ideal lattice");
  add_common(theta, true);
  theta->add_option("--class", o.class_index, "ideal class index (0 = principal)");
  theta->add_option("--N", o.N, "truncation order")->check(CLI::PositiveNumber);

  auto* wtheta = app.add_subcommand("wtheta", "harmonically weighted theta series");
  add_common(wtheta, true);
  wtheta->add_option("--class", o.class_index, "ideal class index (0 = principal)");
  wtheta->add_option("--N", o.N, "truncation order")->check(CLI::PositiveNumber);
  wtheta->add_option("--P", o.P, "harmonic weight: x2-y2, xy, or half ((x^2-y^2)/2)")
      ->check(CLI::IsMember({"x2-y2", "xy", "half"}))
      ->capture_default_str();

  auto* shellc = app.add_subcommand("shell", "lattice vectors of a given norm");
  add_common(shellc, true);
  shellc->add_option("--class", o.class_index, "ideal class index (0 = principal)");
  shellc->add_option("--m", o.m, "norm")->required();

  auto* design = app.add_subcommand("design", "spherical design strength of one shell");
  add_common(design, true);
  design->add_option("--class", o.class_index, "ideal class index (0 = principal)");
  design->add_option("--m", o.m, "norm")->required();
  design->add_option("--t", o.t, "test a single strength t instead of scanning")
      ->check(CLI::PositiveNumber);
  design->add_option("--cap", o.cap, "strength scan cap")->capture_default_str();

  auto* scan = app.add_subcommand("scan", "design strengths over all reduced forms");
  add_common(scan, false);
  scan->add_option("--disc-min", o.disc_min, "most negative discriminant to include")
      ->capture_default_str();
  scan->add_option("--N", o.N, "norm bound")->check(CLI::PositiveNumber)->required();
  scan->add_option("--cap", o.cap, "strength scan cap")->capture_default_str();

  auto* eigen = app.add_subcommand("eigenform", "weight-3 Hecke eigenform coefficients");
  add_common(eigen, true);
  eigen->add_option("--N", o.N, "truncation order")->check(CLI::PositiveNumber);
  eigen->add_option("--variant", o.variant, "character extension (class number 2)")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();

  auto* h3 = app.add_subcommand("h3", "class-number-3 solver report for d = 23");
  add_common(h3, false);
  h3->add_option("--N", o.N, "truncation order")->check(CLI::PositiveNumber);

  auto* tables = app.add_subcommand("tables", "recompute and diff the reference tables");
  add_common(tables, false);

  auto* verify = app.add_subcommand("verify", "run verification campaigns");
  add_common(verify, false);
  bool all = false;
  long long verify_N = 10000;
  verify->add_flag("--all", all, "run every campaign");
  verify->add_option("--d", o.d, "restrict to one field");
  verify->add_option("--N", verify_N, "design-check bound (coefficient bound is 10x)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (theta->parsed()) {
    qlat::QuadField K = qlat::field_from_d(o.d);
    auto s = qlat::theta_series(qlat::lattice_for_class(K, o.class_index), o.N);
    emit(o, render_series(o, s));
    return 0;
  }
  if (wtheta->parsed()) {
    qlat::QuadField K = qlat::field_from_d(o.d);
    auto s = qlat::weighted_theta(qlat::lattice_for_class(K, o.class_index),
                                  parse_harmonic(o.P), o.N);
    emit(o, render_series(o, s));
    return 0;
  }
  if (shellc->parsed()) {
    qlat::QuadField K = qlat::field_from_d(o.d);
    auto pts = qlat::shell(qlat::lattice_for_class(K, o.class_index), o.m);
    if (o.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (auto [u, v] : pts) arr.push_back({u, v});
      emit(o, nlohmann::json{{"schema", qlat::io::kShellSchema}, {"m", o.m}, {"vectors", arr}}
                  .dump(2));
    } else if (o.format == "csv") {
      std::ostringstream os;
      os << "u,v\n";
      for (auto [u, v] : pts) os << u << "," << v << "\n";
      emit(o, os.str());
    } else {
      std::ostringstream os;
      for (auto [u, v] : pts) os << "(" << u << ", " << v << ")\n";
      if (pts.empty()) os << "(empty shell)\n";
      emit(o, os.str());
    }
    return 0;
  }
  if (design->parsed()) {
    qlat::QuadField K = qlat::field_from_d(o.d);
    auto L = qlat::lattice_for_class(K, o.class_index);
    if (o.t > 0) {
      bool ok = qlat::is_t_design(L, o.m, o.t);
      if (o.format == "json") {
        emit(o, nlohmann::json{{"schema", qlat::io::kVerdictSchema},
                               {"m", o.m},
                               {"t", o.t},
                               {"is_t_design", ok}}
                    .dump(2));
      } else {
        std::ostringstream os;
        os << "shell m=" << o.m << (ok ? " is a " : " is not a ") << o.t << "-design";
        emit(o, os.str());
      }
      return 0;
    }
    auto v = qlat::max_strength(L, o.m, o.cap);
    if (o.format == "json") {
      emit(o, qlat::io::verdict_json(v).dump(2));
    } else {
      std::ostringstream os;
      os << "m=" << v.m << " shell_size=" << v.shell_size
         << " max_strength=" << v.max_strength;
      if (v.failing_degree) os << " failing_degree=" << *v.failing_degree;
      emit(o, os.str());
    }
    return 0;
  }
  if (scan->parsed()) {
    auto rows = qlat::scan_forms(o.disc_min, o.N, o.cap);
    if (o.format == "json") {
      emit(o, qlat::io::scan_json(rows).dump(2));
    } else {
      emit(o, qlat::io::scan_csv(rows));
    }
    return 0;
  }
  if (eigen->parsed()) {
    qlat::QuadField K = qlat::field_from_d(o.d);
    qlat::Eigenform f = K.class_number == 1 ? qlat::eigenform_h1(K, o.N)
                                            : qlat::eigenform_h2(K, o.N, o.variant);
    emit(o, render_series(o, f.coeffs));
    return 0;
  }
  if (h3->parsed()) {
    auto r = qlat::h3_eigenforms(std::max<long long>(o.N, 9));
    emit(o, o.format == "json" ? qlat::io::h3_json(r).dump(2) : qlat::io::h3_text(r));
    return 0;
  }
  if (tables->parsed()) {
    auto rep = qlat::verify_reference_tables();
    emit(o, o.format == "json" ? qlat::io::report_json(rep).dump(2)
                               : qlat::report_line(rep));
    return rep.pass() ? 0 : 1;
  }
  if (verify->parsed()) {
    long long design_N = verify_N;
    long long coeff_N = 10 * design_N;
    std::vector<qlat::CampaignReport> reports;
    if (o.d != 0) {
      qlat::QuadField K = qlat::field_from_d(o.d);
      if (K.class_number == 1) {
        reports.push_back(qlat::verify_h1_no_2designs(o.d, design_N, coeff_N));
      } else if (K.class_number == 2) {
        reports.push_back(qlat::verify_disjoint_norms(o.d, design_N));
        reports.push_back(qlat::verify_h2_no_2designs(o.d, design_N, coeff_N));
      } else {
        throw std::domain_error("verify: campaigns cover class numbers 1 and 2");
      }
    } else {
      reports = qlat::verify_all(design_N, coeff_N);
    }
    bool ok = true;
    if (o.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) {
        arr.push_back(qlat::io::report_json(r));
        ok = ok && r.pass();
      }
      emit(o, arr.dump(2));
    } else {
      std::ostringstream os;
      for (const auto& r : reports) {
        os << qlat::report_line(r) << "\n";
        ok = ok && r.pass();
      }
      emit(o, os.str());
    }
    return ok ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;  // CLI11_PARSE already printed usage
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
