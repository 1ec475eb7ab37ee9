#include "walklab/format.hpp"

#include <json.hpp>

#include "walklab/errors.hpp"

namespace walklab {

Format parse_format(std::string_view text) {
  if (text == "bfile") return Format::bfile;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw ParseError("unknown format '" + std::string(text) + "' (bfile, csv, json)");
}

namespace {

nlohmann::json to_json(std::int32_t v) { return v; }
nlohmann::json to_json(std::int64_t v) { return v; }
nlohmann::json to_json(std::uint64_t v) { return v; }
nlohmann::json to_json(const BigInt& v) {
  if (const auto small = to_i64(v)) return *small;
  return v.str();
}

std::string text(std::int32_t v) { return std::to_string(v); }
std::string text(std::int64_t v) { return std::to_string(v); }
std::string text(std::uint64_t v) { return std::to_string(v); }
std::string text(const BigInt& v) { return v.str(); }

}  // namespace

template <class T>
void write_sequence(std::ostream& os, std::string_view name, std::span<const T> values, Format format,
                    std::uint64_t first) {
  switch (format) {
    case Format::bfile:
      for (std::size_t i = 0; i < values.size(); ++i) os << first + i << ' ' << text(values[i]) << '\n';
      break;
    case Format::csv:
      os << "n," << name << '\n';
      for (std::size_t i = 0; i < values.size(); ++i) os << first + i << ',' << text(values[i]) << '\n';
      break;
    case Format::json: {
      nlohmann::json j;
      j["name"] = name;
      j["offset"] = first;
      auto& arr = j["values"] = nlohmann::json::array();
      for (const T& v : values) arr.push_back(to_json(v));
      os << j.dump() << '\n';
      break;
    }
  }
}

template void write_sequence(std::ostream&, std::string_view, std::span<const std::int32_t>, Format, std::uint64_t);
template void write_sequence(std::ostream&, std::string_view, std::span<const std::int64_t>, Format, std::uint64_t);
template void write_sequence(std::ostream&, std::string_view, std::span<const std::uint64_t>, Format, std::uint64_t);
template void write_sequence(std::ostream&, std::string_view, std::span<const BigInt>, Format, std::uint64_t);

}  // namespace walklab
