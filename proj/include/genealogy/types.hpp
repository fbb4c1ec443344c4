#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace genealogy {

/// The four prize disciplines covered by the toolkit.
enum class PrizeField { Physics, Chemistry, Medicine, Economics };

inline constexpr int kFieldCount = 4;
inline constexpr int kMinPrizeYear = 1901;

/// Lowercase canonical name ("physics", "chemistry", "medicine", "economics").
std::string_view field_name(PrizeField f);

/// Case-insensitive parse of a field name; nullopt for anything else.
std::optional<PrizeField> field_from_name(std::string_view name);

struct Prize {
    PrizeField field;
    int year = kMinPrizeYear;

    friend bool operator==(const Prize&, const Prize&) = default;
};

/// A person in the genealogy. Laureate status is derived from the prize list;
/// repeat winners and dual-field winners simply carry several Prize records.
struct Scholar {
    std::string id;
    std::string name;
    std::vector<Prize> prizes;

    bool is_laureate() const noexcept { return !prizes.empty(); }
};

/// Directed advisor -> student relation.
struct Edge {
    std::string advisor;
    std::string student;

    friend bool operator==(const Edge&, const Edge&) = default;
};

} // namespace genealogy
