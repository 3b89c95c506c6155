#ifndef SPECHT_SERIALIZE_HPP
#define SPECHT_SERIALIZE_HPP

#include <string>
#include <vector>

#include "specht/census.hpp"
#include "specht/estimator.hpp"

namespace specht {

/// Table formats. CSV carries a header row; JSON mirrors the struct fields, with
/// integers that may exceed 64 bits written as decimal strings and rationals as "p/q".
enum class Format { csv, json };

Format parse_format(const std::string& name);

std::string to_text(const CensusRow& row, Format fmt);
std::string to_text(const KLBoundReport& rep, Format fmt);
std::string to_text(const EstimateReport& rep, Format fmt);
std::string to_text(const SpecialFlatCensus& census, Format fmt);

/// Inverses of to_text; the format is detected from the first character.
/// Throw InvalidArgument on malformed input.
CensusRow parse_census(const std::string& text);
KLBoundReport parse_kl_bound_report(const std::string& text);
EstimateReport parse_estimate_report(const std::string& text);

/// RFC 4180 field splitting for one line.
std::vector<std::string> split_csv_line(const std::string& line);
std::string csv_field(const std::string& value);

} // namespace specht

#endif // SPECHT_SERIALIZE_HPP
