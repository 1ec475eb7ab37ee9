#pragma once

// Sequence output: OEIS b-file, CSV and JSON.

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "walklab/bigint.hpp"

namespace walklab {

enum class Format { bfile, csv, json };

Format parse_format(std::string_view text);  // throws ParseError

// b-file lines are "index value" with indices first, first + 1, ...
template <class T>
void write_sequence(std::ostream& os, std::string_view name, std::span<const T> values, Format format,
                    std::uint64_t first = 1);

extern template void write_sequence(std::ostream&, std::string_view, std::span<const std::int32_t>, Format,
                                    std::uint64_t);
extern template void write_sequence(std::ostream&, std::string_view, std::span<const std::int64_t>, Format,
                                    std::uint64_t);
extern template void write_sequence(std::ostream&, std::string_view, std::span<const std::uint64_t>, Format,
                                    std::uint64_t);
extern template void write_sequence(std::ostream&, std::string_view, std::span<const BigInt>, Format,
                                    std::uint64_t);

}  // namespace walklab
