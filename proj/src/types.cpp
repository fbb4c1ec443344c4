#include "genealogy/types.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace genealogy {

namespace {

constexpr std::array<std::string_view, kFieldCount> kFieldNames = {
    "physics", "chemistry", "medicine", "economics"};

std::string lowered(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

} // namespace

std::string_view field_name(PrizeField f) {
    return kFieldNames[static_cast<std::size_t>(f)];
}

std::optional<PrizeField> field_from_name(std::string_view name) {
    const std::string key = lowered(name);
    for (std::size_t i = 0; i < kFieldNames.size(); ++i)
        if (key == kFieldNames[i]) return static_cast<PrizeField>(i);
    return std::nullopt;
}

} // namespace genealogy
