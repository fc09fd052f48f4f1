#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace noncross {

/// Malformed or inconsistent input (bad text, mismatched ground sets,
/// arguments outside an operation's domain). Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an order relation required by an operation does not hold.
class NotComparable : public InputError {
public:
    using InputError::InputError;
};

/// A configured enumeration or compute budget would be exceeded.
/// Maps to CLI exit code 3.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Enumeration and compute caps. Defaults may be overridden with the
/// NONCROSS_CAP environment variable, either as a bare integer (the
/// NC(m) ground-set cap) or as a comma separated list of key=value pairs
/// using the field names below, e.g. "nc=15,order=13,group=100000".
struct Limits {
    int nc_max_m = 14;                  // nc
    int series_max_order = 12;          // order
    std::size_t max_group_order = 50000;  // group
    int redt_max_length = 5;            // redt
    int redt_max_rank = 4;              // rank
    double rmt_flop_budget = 5e11;      // rmt
    int topo_max_m = 7;                 // topo
};

/// Limits with any NONCROSS_CAP overrides applied. Throws InputError if the
/// variable is set but cannot be parsed.
Limits current_limits();

Limits parse_limits(const std::string& spec, Limits base = {});

}  // namespace noncross
