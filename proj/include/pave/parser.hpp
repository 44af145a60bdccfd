// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

#include "pave/expr.hpp"

namespace pave {

struct ParseError : std::runtime_error {
    int line;  // 1-based
    int col;   // 1-based
    ParseError(int line_, int col_, const std::string& msg);
};

// Parses the textual NCSP format:
//
//   # comment to end of line
//   var <name> in [<lo>, <hi>];
//   con <expr> = 0;
//   con <expr> < 0;
//
// Expressions use + - * / ^ sqrt(...) and parentheses over declared
// variables and decimal literals (optionally with exponent). '^' takes a
// non-negative integer literal exponent. Domain bounds must be finite with
// lo <= hi. Throws ParseError with a 1-based source position on bad input;
// unknown identifiers are rejected.
Problem parse_problem(const std::string& text, const std::string& name = "");

// Reads and parses a file; the problem name is the file stem. Throws
// std::runtime_error when the file cannot be read.
Problem parse_problem_file(const std::string& path);

// Renders p in the textual format. The output round-trips: parsing it
// reproduces the same domains and constraint trees bit-for-bit, so the
// paving of the re-parsed problem is identical.
std::string print_problem(const Problem& p);

// Tightest interval enclosure of a decimal literal: a point interval when
// the value is exactly a double, otherwise the two adjacent doubles
// bracketing it. Throws std::invalid_argument for malformed input or
// values beyond double range.
Interval enclose_decimal(const std::string& literal);

}  // namespace pave
