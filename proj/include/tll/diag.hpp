#pragma once

#include <cstdint>
#include <exception>
#include <string>
#include <vector>

#include "tll/term.hpp"

namespace tll {

// Stable diagnostic codes; the CLI prints these verbatim and tests match on
// them, so the strings are part of the tool's contract.
enum class Code {
  syntax_error,
  unbound_identifier,
  duplicate_name,
  type_mismatch,
  not_a_type,
  non_function_application,
  ill_formed_motive,
  relevance_violation,
  linear_unused,
  linear_duplicated,
  constraint_violation,
  undefined_merge,
  nonlinear_field_in_u_type,
  negative_occurrence,
  nonstructural_recursion,
  hole_unresolved,
  instance_pruned,
  all_instances_pruned,
  fuel_exhausted,
  stuck_term,
  dangling_location,
  unresolvable,
  box_or_loc_in_input,
  sus_pi_sort,  // lint only
  usage,
};

const char* code_name(Code c);

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  Code code = Code::syntax_error;
  std::string message;
  Span span{};
  std::string context;  // judgment snapshot, e.g. the Delta accounting
};

struct Error : std::exception {
  Diagnostic diag;
  std::string rendered;
  explicit Error(Diagnostic d) : diag(std::move(d)) {
    rendered = std::string(code_name(diag.code)) + ": " + diag.message;
  }
  const char* what() const noexcept override { return rendered.c_str(); }
};

[[noreturn]] void fail(Code c, std::string msg, Span sp = {}, std::string ctx = {});

// Step budget shared by normalization, evaluation and the heap machine.
// Exhaustion raises fuel_exhausted instead of looping forever on ill-typed
// input.
struct Fuel {
  long remaining = 100000;
  Span where{};
  void tick() {
    if (--remaining < 0) fail(Code::fuel_exhausted, "reduction fuel exhausted", where);
  }
};

long default_fuel();  // reads TLL_FUEL when set

std::string format_human(const Diagnostic& d, const std::string& source = {},
                         const std::string& filename = {});
std::string format_json(const Diagnostic& d, const std::string& filename = {});

}  // namespace tll
