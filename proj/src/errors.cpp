#include "noncross/errors.hpp"

#include <cstdlib>
#include <sstream>
#include <string_view>

namespace noncross {

namespace {

long long parse_integer(std::string_view text, std::string_view key)
{
    try {
        std::size_t used = 0;
        const std::string s{text};
        const long long v = std::stoll(s, &used);
        if (used != s.size() || v <= 0) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw InputError("NONCROSS_CAP: bad value for '" + std::string(key) + "': '" +
                         std::string(text) + "'");
    }
}

}  // namespace

Limits parse_limits(const std::string& spec, Limits base)
{
    if (spec.empty()) return base;
    if (spec.find('=') == std::string::npos) {
        base.nc_max_m = static_cast<int>(parse_integer(spec, "nc"));
        return base;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("NONCROSS_CAP: expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (key == "nc") {
            base.nc_max_m = static_cast<int>(parse_integer(value, key));
        } else if (key == "order") {
            base.series_max_order = static_cast<int>(parse_integer(value, key));
        } else if (key == "group") {
            base.max_group_order = static_cast<std::size_t>(parse_integer(value, key));
        } else if (key == "redt") {
            base.redt_max_length = static_cast<int>(parse_integer(value, key));
        } else if (key == "rank") {
            base.redt_max_rank = static_cast<int>(parse_integer(value, key));
        } else if (key == "topo") {
            base.topo_max_m = static_cast<int>(parse_integer(value, key));
        } else if (key == "rmt") {
            base.rmt_flop_budget = static_cast<double>(parse_integer(value, key));
        } else {
            throw InputError("NONCROSS_CAP: unknown key '" + key + "'");
        }
    }
    return base;
}

Limits current_limits()
{
    const char* env = std::getenv("NONCROSS_CAP");
    return env ? parse_limits(env) : Limits{};
}

}  // namespace noncross
