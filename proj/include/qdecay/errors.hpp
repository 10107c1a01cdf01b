#pragma once
#include <stdexcept>
#include <string>

namespace qdecay {

//! Base class for all library failures.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! Bad user-supplied parameters or configuration (CLI exit code 2).
struct config_error : error {
  using error::error;
};

//! A numerical procedure failed to meet its contract (CLI exit code 3).
struct numerical_error : error {
  using error::error;
};

struct invalid_parameter : config_error {
  using config_error::config_error;
};

// k hit a segment wavenumber q_j = 0; caller should perturb k
struct degenerate_wavenumber : numerical_error {
  using numerical_error::numerical_error;
};

// argument-principle winding count disagrees with the zeros found
struct incomplete_search : numerical_error {
  using numerical_error::numerical_error;
};

struct degenerate_state : numerical_error {
  using numerical_error::numerical_error;
};

struct accuracy_error : numerical_error {
  using numerical_error::numerical_error;
};

struct invalid_time : invalid_parameter {
  using invalid_parameter::invalid_parameter;
};

// asymptotic expansion requested outside its sector of validity
struct wrong_sector : invalid_parameter {
  using invalid_parameter::invalid_parameter;
};

// r = r' = a, where the resonance expansion diverges
struct excluded_point : invalid_parameter {
  using invalid_parameter::invalid_parameter;
};

// result magnitude exceeds double range (growing exp(-z^2) branch)
struct range_error : numerical_error {
  using numerical_error::numerical_error;
};

struct improper_pole_error : numerical_error {
  using numerical_error::numerical_error;
};

struct no_transition_found : numerical_error {
  using numerical_error::numerical_error;
};

struct comparison_error : invalid_parameter {
  using invalid_parameter::invalid_parameter;
};

} // namespace qdecay
