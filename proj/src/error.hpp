#pragma once

#include <stdexcept>
#include <string>

namespace riccati {

// Error codes shared with the C API (see include/riccati/riccati.h).
enum class Errc : int {
  ok = 0,
  bernoulli_input = 1,
  lienard_input = 2,
  degree_violation = 3,
  side_condition_violated = 4,
  degenerate_polynomial = 5,
  inconsistent_local_type = 6,
  impossible_case = 7,
  lemma_violation = 8,
  unresolved_limit = 9,
  ambiguous_match = 10,
  no_match = 11,
  catalog_gap = 12,
  catalog_required = 13,
  out_of_domain = 14,
  step_failure = 15,
  io_error = 16,
  bad_input = 17,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

} // namespace riccati
