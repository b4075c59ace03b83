#include "coreval/orientation.hpp"

namespace coreval {

std::string_view to_string(Orientation o)
{
    switch (o) {
    case Orientation::Customers: return "Customers";
    case Orientation::Employees: return "Employees";
    case Orientation::EconomicFinancialGrowth: return "EconomicFinancialGrowth";
    case Orientation::Excellence: return "Excellence";
    case Orientation::Citizenship: return "Citizenship";
    case Orientation::SocialResponsibility: return "SocialResponsibility";
    }
    return "?";
}

std::optional<Orientation> parse_orientation(std::string_view name)
{
    for (auto o : kAllOrientations) {
        if (to_string(o) == name) return o;
    }
    return std::nullopt;
}

} // namespace coreval
