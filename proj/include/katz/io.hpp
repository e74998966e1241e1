#pragma once

// Input documents (JSON or plain text) describing a system matrix, the
// entry-expression parser, and report serialization.

#include "katz/connection.hpp"
#include "katz/ranks.hpp"

#include <stdexcept>
#include <string>

namespace katz {

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t position)
        : std::runtime_error(std::move(message)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parse one matrix entry: integer/rational literals, z, + - * / ^ with
/// integer (possibly negative) exponents, unary minus, parentheses.
/// '^' binds tighter than unary minus: -5*z^-2 is (-5)*z^(-2).
RationalFunction parse_entry(const std::string& s);

/// JSON document {"form": "d/dz"|"theta", "matrix": [[entry,...],...]} or
/// plain text (one row per line, entries separated by ';', optional first
/// line "form: theta" / "form: d/dz"; default form is d/dz).
SystemMatrix parse_document(const std::string& text);

/// Canonical JSON document for a system (theta-form, normalized entries).
std::string serialize_document(const SystemMatrix& s);

/// Report JSON: poincare_rank, true_poincare_rank, katz_rank ("p/q"),
/// n, active_columns, witnesses [{"k": "p/q", "equal": bool}].
std::string serialize_report(const RankReport& r);

std::string rat_str(const Rat& r);

}  // namespace katz
