#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace coreval {

/// The six core-value orientations, in canonical report order.
enum class Orientation : std::uint8_t {
    Customers,
    Employees,
    EconomicFinancialGrowth,
    Excellence,
    Citizenship,
    SocialResponsibility,
};

inline constexpr std::size_t kOrientationCount = 6;

inline constexpr std::array<Orientation, kOrientationCount> kAllOrientations = {
    Orientation::Customers,   Orientation::Employees,   Orientation::EconomicFinancialGrowth,
    Orientation::Excellence,  Orientation::Citizenship, Orientation::SocialResponsibility,
};

constexpr std::size_t index_of(Orientation o) { return static_cast<std::size_t>(o); }

std::string_view to_string(Orientation o);
std::optional<Orientation> parse_orientation(std::string_view name);

/// Small bitset over the six orientations.
class OrientationSet {
public:
    constexpr OrientationSet() = default;
    constexpr OrientationSet(std::initializer_list<Orientation> items)
    {
        for (auto o : items) insert(o);
    }

    constexpr void insert(Orientation o) { bits_ |= bit(o); }
    constexpr bool contains(Orientation o) const { return (bits_ & bit(o)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const
    {
        std::size_t n = 0;
        for (auto o : kAllOrientations) n += contains(o) ? 1 : 0;
        return n;
    }
    constexpr std::uint8_t bits() const { return bits_; }

    friend constexpr bool operator==(OrientationSet, OrientationSet) = default;

private:
    static constexpr std::uint8_t bit(Orientation o) { return std::uint8_t(1u << index_of(o)); }
    std::uint8_t bits_ = 0;
};

} // namespace coreval
