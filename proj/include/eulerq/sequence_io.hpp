#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "eulerq/sequences.hpp"

namespace eulerq {

/// Malformed sequence file; line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Text format:
//   seq <alphabet_size> <period> p=<p> r=<r> kind=<name>
//   <symbols as decimal integers, single-space separated, over one or more lines>

void write_sequence(std::ostream& out, const PeriodicSequence& seq);

/// Throws ParseError. The index set is not part of the format and comes back empty.
PeriodicSequence read_sequence(std::istream& in);

} // namespace eulerq
