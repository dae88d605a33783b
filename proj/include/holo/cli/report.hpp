#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace holo::cli {

enum class OutputFormat { json, table };

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;

/// 64-bit FNV-1a, chainable through `h`.
std::uint64_t fnv1a(std::string_view data, std::uint64_t h = kFnvOffset);

/// Result document of one command. Keys stay sorted, so identical inputs
/// give byte-identical output.
struct Report
{
    std::string command;
    std::string digest;
    nlohmann::json results = nlohmann::json::object();
    /// Result key -> whether the value is exact (rational) or floating point.
    nlohmann::json exact = nlohmann::json::object();

    void set(const std::string& key, nlohmann::json value, bool is_exact);
    nlohmann::json to_json() const;
};

/// "fnv1a:<16 hex digits>" over the arguments and the named files' bytes.
std::string inputs_digest(const std::vector<std::string>& args, const std::vector<std::string>& file_contents);

/// {"re": x, "im": y} with doubles.
nlohmann::json complex_json(std::complex<long double> z);

/// JSON text, or one aligned "path  value" line per leaf.
std::string render(const Report& r, OutputFormat fmt);

} // namespace holo::cli
