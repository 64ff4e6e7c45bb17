#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "orderpoly/poset.hpp"

namespace orderpoly {

/// Parse failure at a 1-based line and column. what() reads
/// "line L, column C: message".
class PosetParseError : public std::runtime_error {
public:
    PosetParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

/// Reads the text format
///
///     elements: 3
///     labels: 2 1 3      # optional
///     0 < 1
///     0 < 2
///
/// `#` starts a comment. Relations use 0-based indices and need not be covers;
/// the order is their transitive closure. Without a labels line the natural
/// labeling along linear_extension is used.
LabeledPoset parse_poset_file(std::string_view text);

/// Inverse of parse_poset_file: header, labels and cover relations.
std::string format_poset_file(const LabeledPoset& lp);

} // namespace orderpoly
