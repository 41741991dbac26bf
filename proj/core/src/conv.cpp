#include "fuzzn/conv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "fuzzn/arith.hpp"
#include "fuzzn/errors.hpp"
#include "fuzzn/tolerances.hpp"

namespace fuzzn {

std::string GridFunction::to_csv() const {
  std::ostringstream os;
  os << "x,value\n";
  char buf[64];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", x_at(i), values[i]);
    os << buf;
  }
  return os.str();
}

FuzzyNumber nabla(const FuzzyNumber& u, const FuzzyNumber& v) {
  // For fuzzy numbers the sup-min convolution is alpha-cut addition.
  return add(u, v);
}

GridFunction sup_min_grid(const FuzzyNumber& u, const FuzzyNumber& v, double h) {
  if (!(h > 0.0)) throw StepTooCoarse("step must be positive");
  double wu = u.support_hi() - u.support_lo();
  double wv = v.support_hi() - v.support_lo();
  double w = std::max(wu, wv);
  if (w == 0.0) {
    return {u.support_lo() + v.support_lo(), h, {1.0}};
  }
  if (h > w / 8.0) {
    throw StepTooCoarse("step " + std::to_string(h) + " coarser than support/8");
  }

  std::size_t nu = static_cast<std::size_t>(std::ceil(wu / h)) + 1;
  std::size_t nv = static_cast<std::size_t>(std::ceil(wv / h)) + 1;
  std::vector<double> su(nu), sv(nv);
  for (std::size_t j = 0; j < nu; ++j) {
    su[j] = u.membership(u.support_lo() + static_cast<double>(j) * h);
  }
  for (std::size_t k = 0; k < nv; ++k) {
    sv[k] = v.membership(v.support_lo() + static_cast<double>(k) * h);
  }
  std::vector<double> ub = u.breakpoints();
  std::vector<double> vb = v.breakpoints();

  GridFunction g;
  g.x0 = u.support_lo() + v.support_lo();
  g.h = h;
  std::size_t nx = nu + nv - 1;
  g.values.resize(nx);
  for (std::size_t i = 0; i < nx; ++i) {
    double best = 0.0;
    std::size_t j0 = (i + 1 >= nv) ? i + 1 - nv : 0;
    std::size_t j1 = std::min(nu - 1, i);
    for (std::size_t j = j0; j <= j1; ++j) {
      best = std::max(best, std::min(su[j], sv[i - j]));
    }
    // align the y grid with both operands' breakpoints so corner maxima are hit
    double x = g.x_at(i);
    for (double b : ub) {
      best = std::max(best, std::min(u.membership(b), v.membership(x - b)));
    }
    for (double b : vb) {
      best = std::max(best, std::min(u.membership(x - b), v.membership(b)));
    }
    g.values[i] = best;
  }
  return g;
}

namespace {

std::vector<double> jump_abscissae(const FuzzyNumber& f) {
  std::vector<double> out;
  auto scan = [&](const std::vector<Piece>& pieces) {
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
      double x = pieces[i].domain().hi;
      if (std::abs(pieces[i].value(x) - pieces[i + 1].value(x)) > 1e-9) out.push_back(x);
    }
  };
  scan(f.left());
  scan(f.right());
  if (!f.left().empty() && 1.0 - f.left().back().value(f.core_lo()) > 1e-9) {
    out.push_back(f.core_lo());
  }
  if (!f.right().empty() && 1.0 - f.right().front().value(f.core_hi()) > 1e-9) {
    out.push_back(f.core_hi());
  }
  if (f.boundary_left() > 1e-9 && !f.left().empty()) out.push_back(f.support_lo());
  if (f.boundary_right() > 1e-9 && !f.right().empty()) out.push_back(f.support_hi());
  return out;
}

}  // namespace

double oracle_gap(const FuzzyNumber& u, const FuzzyNumber& v, double h) {
  GridFunction g = sup_min_grid(u, v, h);
  FuzzyNumber exact = nabla(u, v);
  std::vector<double> jumps = jump_abscissae(exact);
  double gap = 0.0;
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    double x = g.x_at(i);
    bool skip = false;
    for (double j : jumps) {
      if (std::abs(x - j) <= tol::kX) {
        skip = true;
        break;
      }
    }
    if (skip) continue;
    gap = std::max(gap, std::abs(g.values[i] - exact.membership(x)));
  }
  return gap;
}

}  // namespace fuzzn
