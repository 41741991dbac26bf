#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fuzzn/analysis.hpp"
#include "fuzzn/arith.hpp"
#include "fuzzn/conv.hpp"
#include "fuzzn/errors.hpp"
#include "fuzzn/io.hpp"
#include "fuzzn/smooth.hpp"
#include "fuzzn/tolerances.hpp"

namespace {

using fuzzn::FuzzyNumber;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fuzzn::Error("cannot write '" + path + "'");
  out << content;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file(out_path, content);
  }
}

// "0.5,0.25,0.125" or "geometric:<p0>,<n>" (p0, p0/2, ..., n radii)
std::vector<double> parse_schedule(const std::string& text) {
  std::vector<double> out;
  std::string body = text;
  bool geometric = false;
  if (body.rfind("geometric:", 0) == 0) {
    geometric = true;
    body = body.substr(10);
  }
  std::stringstream ss(body);
  std::string item;
  std::vector<double> vals;
  while (std::getline(ss, item, ',')) {
    vals.push_back(std::stod(item));
  }
  if (geometric) {
    if (vals.size() != 2) throw fuzzn::Error("geometric schedule needs <p0>,<n>");
    double p = vals[0];
    int n = static_cast<int>(vals[1]);
    for (int i = 0; i < n; ++i) {
      out.push_back(p);
      p /= 2.0;
    }
  } else {
    out = vals;
  }
  return out;
}

std::string sample_csv(const FuzzyNumber& u, double h) {
  if (!(h > 0.0)) throw fuzzn::Error("--step must be positive");
  std::ostringstream os;
  os << "x,value\n";
  double x = u.support_lo();
  while (x < u.support_hi() + h / 2) {
    double xx = std::min(x, u.support_hi());
    os << fuzzn::io::format_double(xx) << ','
       << fuzzn::io::format_double(u.membership(xx)) << '\n';
    x += h;
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"piecewise-analytic fuzzy numbers: arithmetic, convolution, smoothing"};
  app.require_subcommand(1);

  std::string in_a, in_b, out_path, schedule_text;
  double alpha = 0.5, radius = 1.0, step = 1e-3;
  double tolerance = fuzzn::tol::derivative_tol() > 1e-3 ? fuzzn::tol::derivative_tol() : 1e-3;
  std::string report_path;

  auto* c_validate = app.add_subcommand("validate", "check a fuzzy-number file");
  c_validate->add_option("input", in_a)->required();

  auto* c_cut = app.add_subcommand("cut", "alpha-cut endpoints");
  c_cut->add_option("input", in_a)->required();
  c_cut->add_option("--alpha", alpha)->required();

  auto* c_add = app.add_subcommand("add", "alpha-cut sum");
  auto* c_sub = app.add_subcommand("sub", "alpha-cut difference");
  auto* c_mul = app.add_subcommand("mul", "alpha-cut product");
  auto* c_nabla = app.add_subcommand("nabla", "sup-min convolution");
  for (auto* c : {c_add, c_sub, c_mul, c_nabla}) {
    c->add_option("a", in_a)->required();
    c->add_option("b", in_b)->required();
    c->add_option("--out", out_path);
  }

  auto* c_smooth = app.add_subcommand("smooth", "convolve with a tailored smoother");
  c_smooth->add_option("input", in_a)->required();
  c_smooth->add_option("--p", radius)->required();
  c_smooth->add_option("--out", out_path);
  c_smooth->add_option("--report", report_path);
  c_smooth->add_option("--tol", tolerance);

  auto* c_analyze = app.add_subcommand("analyze", "singular points and families");
  c_analyze->add_option("input", in_a)->required();
  c_analyze->add_option("--out", out_path);

  auto* c_converge = app.add_subcommand("converge", "approximation schedule");
  c_converge->add_option("input", in_a)->required();
  c_converge->add_option("--schedule", schedule_text)->required();
  c_converge->add_option("--out", out_path);
  c_converge->add_option("--tol", tolerance);

  auto* c_sample = app.add_subcommand("sample", "membership samples on a grid");
  c_sample->add_option("input", in_a)->required();
  c_sample->add_option("--step", step)->required();
  c_sample->add_option("--out", out_path);

  auto* c_oracle = app.add_subcommand("oracle", "grid-convolution gap");
  c_oracle->add_option("a", in_a)->required();
  c_oracle->add_option("b", in_b)->required();
  c_oracle->add_option("--step", step)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_validate->parsed()) {
      fuzzn::io::load_fuzzy(in_a);
      std::cout << in_a << ": valid\n";
      return 0;
    }
    if (c_cut->parsed()) {
      FuzzyNumber u = fuzzn::io::load_fuzzy(in_a);
      fuzzn::AlphaCut c = u.alpha_cut(alpha);
      std::cout << fuzzn::io::format_double(c.lo) << ' '
                << fuzzn::io::format_double(c.hi) << '\n';
      return 0;
    }
    if (c_add->parsed() || c_sub->parsed() || c_mul->parsed() || c_nabla->parsed()) {
      FuzzyNumber a = fuzzn::io::load_fuzzy(in_a);
      FuzzyNumber b = fuzzn::io::load_fuzzy(in_b);
      FuzzyNumber r = c_add->parsed()   ? fuzzn::add(a, b)
                      : c_sub->parsed() ? fuzzn::sub(a, b)
                      : c_mul->parsed() ? fuzzn::mul(a, b)
                                        : fuzzn::nabla(a, b);
      emit(out_path, fuzzn::io::serialize_fuzzy(r));
      return 0;
    }
    if (c_smooth->parsed()) {
      FuzzyNumber u = fuzzn::io::load_fuzzy(in_a);
      fuzzn::AnalysisReport report = fuzzn::analyze(u);
      fuzzn::SmootherSpec spec = fuzzn::spec_for(u, radius, report);
      FuzzyNumber v = fuzzn::nabla(u, fuzzn::synthesize(spec));
      emit(out_path, fuzzn::io::serialize_fuzzy(v));
      fuzzn::AnalysisReport result_report = fuzzn::analyze(v);
      if (!report_path.empty()) {
        write_file(report_path, fuzzn::io::analysis_csv(result_report));
      }
      std::vector<fuzzn::ConvergenceRow> rows =
          fuzzn::approximate(u, {radius}, tolerance);
      if (!rows.front().diff_ok) {
        std::cerr << "smooth: result failed the differentiability probe\n";
        return 2;
      }
      return 0;
    }
    if (c_analyze->parsed()) {
      FuzzyNumber u = fuzzn::io::load_fuzzy(in_a);
      emit(out_path, fuzzn::io::analysis_csv(fuzzn::analyze(u)));
      return 0;
    }
    if (c_converge->parsed()) {
      FuzzyNumber u = fuzzn::io::load_fuzzy(in_a);
      auto rows = fuzzn::approximate(u, parse_schedule(schedule_text), tolerance);
      emit(out_path, fuzzn::io::convergence_csv(rows));
      return 0;
    }
    if (c_sample->parsed()) {
      FuzzyNumber u = fuzzn::io::load_fuzzy(in_a);
      emit(out_path, sample_csv(u, step));
      return 0;
    }
    if (c_oracle->parsed()) {
      FuzzyNumber a = fuzzn::io::load_fuzzy(in_a);
      FuzzyNumber b = fuzzn::io::load_fuzzy(in_b);
      std::cout << fuzzn::io::format_double(fuzzn::oracle_gap(a, b, step)) << '\n';
      return 0;
    }
  } catch (const fuzzn::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const fuzzn::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const fuzzn::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
