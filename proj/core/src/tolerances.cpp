#include "fuzzn/tolerances.hpp"

#include <cstdlib>
#include <string>

namespace fuzzn::tol {

double derivative_tol() {
  if (const char* env = std::getenv("FUZZ_TOL")) {
    try {
      double v = std::stod(env);
      if (v > 0) return v;
    } catch (...) {
      // fall through to the default
    }
  }
  return kDDefault;
}

}  // namespace fuzzn::tol
