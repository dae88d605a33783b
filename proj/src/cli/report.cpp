#include "holo/cli/report.hpp"

#include <algorithm>
#include <cstdio>

namespace holo::cli {

using nlohmann::json;

std::uint64_t fnv1a(std::string_view data, std::uint64_t h)
{
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

void Report::set(const std::string& key, json value, bool is_exact)
{
    results[key] = std::move(value);
    exact[key] = is_exact;
}

json Report::to_json() const
{
    return json{{"command", command}, {"inputs_digest", digest}, {"results", results}, {"exact", exact}};
}

std::string inputs_digest(const std::vector<std::string>& args, const std::vector<std::string>& file_contents)
{
    std::uint64_t h = kFnvOffset;
    for (const auto& a : args) {
        h = fnv1a(a, h);
        h = fnv1a(std::string_view("\0", 1), h);
    }
    for (const auto& f : file_contents) {
        h = fnv1a(f, h);
        h = fnv1a(std::string_view("\0", 1), h);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + buf;
}

json complex_json(std::complex<long double> z)
{
    // print -0 as 0 so equal values render identically
    auto clean = [](long double v) { return v == 0 ? 0.0 : static_cast<double>(v); };
    return json{{"re", clean(z.real())}, {"im", clean(z.imag())}};
}

namespace {

void flatten(const json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out)
{
    if (j.is_object() && !j.empty()) {
        for (const auto& [k, v] : j.items())
            flatten(v, path.empty() ? k : path + "." + k, out);
    } else if (j.is_array() && !j.empty() &&
               std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
        for (std::size_t k = 0; k < j.size(); ++k)
            flatten(j[k], path + "[" + std::to_string(k) + "]", out);
    } else {
        out.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

} // namespace

std::string render(const Report& r, OutputFormat fmt)
{
    if (fmt == OutputFormat::json)
        return r.to_json().dump(2) + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(r.to_json(), "", rows);
    std::size_t width = 0;
    for (const auto& row : rows)
        width = std::max(width, row.first.size());
    std::string out;
    for (const auto& [k, v] : rows)
        out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
    return out;
}

} // namespace holo::cli
