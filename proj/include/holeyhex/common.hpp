#pragma once

#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace holeyhex {

// All counting arithmetic is exact. Counts overflow 64 bits quickly
// (MacMahon's product for a 10x10x10 hexagon has dozens of digits), so the
// whole library works over arbitrary-precision integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class Errc {
  out_of_bounds,
  duplicate,
  inconsistent_triple,
  untileable,
  vertex_not_present,
  not_square,
  singular,
  too_large,
  half_integer_argument,
  parity_violation,
  domain_error,
  not_admissible,
  unbalanced_colors,
  sign_inconsistency,
  degenerate_fit,
  parse_error,
  route_disagreement,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::out_of_bounds: return "OutOfBounds";
    case Errc::duplicate: return "Duplicate";
    case Errc::inconsistent_triple: return "InconsistentTriple";
    case Errc::untileable: return "Untileable";
    case Errc::vertex_not_present: return "VertexNotPresent";
    case Errc::not_square: return "NotSquare";
    case Errc::singular: return "Singular";
    case Errc::too_large: return "TooLarge";
    case Errc::half_integer_argument: return "HalfIntegerArgument";
    case Errc::parity_violation: return "ParityViolation";
    case Errc::domain_error: return "DomainError";
    case Errc::not_admissible: return "NotAdmissible";
    case Errc::unbalanced_colors: return "UnbalancedColors";
    case Errc::sign_inconsistency: return "SignInconsistency";
    case Errc::degenerate_fit: return "DegenerateFit";
    case Errc::parse_error: return "ParseError";
    case Errc::route_disagreement: return "RouteDisagreement";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

// Thread budget for internal parallelism. HOLEYHEX_THREADS=0 (or unset)
// means "use the hardware concurrency".
inline unsigned thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("HOLEYHEX_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v) < hw ? static_cast<unsigned>(v) : hw;
  }
  return hw;
}

// Runs fn(i) for i in [0, n). Work items must be independent; results are
// written by index so the outcome is identical to the sequential loop.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  unsigned workers = thread_budget();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  if (workers > n) workers = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr first_error;
  std::mutex err_mtx;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mtx);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace holeyhex
