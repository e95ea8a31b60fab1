#pragma once

#include <stdexcept>
#include <string>

namespace qcog {

// Failure classes surfaced by the library. The CLI maps these onto process
// exit codes, so the set is part of the tool's observable contract.
enum class errc {
  invalid_argument,
  length_mismatch,
  negative_weight,
  sum_out_of_tolerance,
  duplicate_label,
  dimension_mismatch,
  empty_input,
  index_out_of_range,
  anchor_not_maximal,
  not_representable,
  constraint_violated,
  zero_anchor_mass,
  orthogonality_failure,
  empty_table,
  all_zero_table,
  not_normalized,
  out_of_range_expectation,
  empty_marginal,
  empty_corpus,
  invalid_config,
  parse_error,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace qcog
