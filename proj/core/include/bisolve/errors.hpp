#pragma once

#include <stdexcept>
#include <string>

namespace bisolve {

// Base for all domain errors raised by the solver library.
struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input-side errors.
struct parse_error : solver_error {
    std::size_t position;
    parse_error(std::size_t pos, const std::string& what)
        : solver_error("parse error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
};

struct zero_polynomial_error : solver_error {
    zero_polynomial_error() : solver_error("operation undefined for the zero polynomial") {}
};

struct constant_polynomial_error : solver_error {
    constant_polynomial_error() : solver_error("operation requires degree >= 1") {}
};

struct both_zero_error : solver_error {
    both_zero_error() : solver_error("gcd of two zero polynomials is undefined") {}
};

struct non_positive_error : solver_error {
    non_positive_error() : solver_error("argument must be strictly positive") {}
};

// Resultant / projection errors.
struct degree_zero_in_eliminated_var : solver_error {
    degree_zero_in_eliminated_var()
        : solver_error("neither input polynomial involves the eliminated variable") {}
};

struct not_zero_dimensional : solver_error {
    not_zero_dimensional()
        : solver_error("resultant is identically zero: the system has a common factor "
                       "or a solution component, it is not zero-dimensional") {}
};

struct leading_coefficient_vanishes : solver_error {
    leading_coefficient_vanishes()
        : solver_error("leading coefficient vanishes at the specialization point") {}
};

// Isolation errors.
struct not_square_free_error : solver_error {
    not_square_free_error() : solver_error("polynomial is not square-free") {}
};

struct endpoint_is_root_error : solver_error {
    endpoint_is_root_error() : solver_error("polynomial vanishes at an interval endpoint") {}
};

struct no_matching_factor_error : solver_error {
    no_matching_factor_error()
        : solver_error("no square-free factor isolates the given root (internal inconsistency)") {}
};

// Bound / matcher errors.
struct manual_eps_missing : solver_error {
    manual_eps_missing() : solver_error("epsilon mode 'manual' requires an explicit epsilon") {}
};

struct manual_eps_non_positive : solver_error {
    manual_eps_non_positive() : solver_error("manual epsilon must be strictly positive") {}
};

struct refinement_budget_exceeded : solver_error {
    int pair_i, pair_j;
    refinement_budget_exceeded(int i, int j)
        : solver_error("refinement budget exceeded while classifying candidate pair (" +
                       std::to_string(i) + ", " + std::to_string(j) + ")"),
          pair_i(i), pair_j(j) {}
};

// Bench harness errors.
struct degenerate_instance_error : solver_error {
    degenerate_instance_error() : solver_error("generated instance is degenerate") {}
};

struct time_budget_exceeded : solver_error {
    time_budget_exceeded() : solver_error("per-instance time budget exceeded") {}
};

}  // namespace bisolve
