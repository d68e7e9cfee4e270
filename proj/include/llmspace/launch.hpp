#pragma once

#include <string>
#include <vector>

#include "llmspace/catalog.hpp"

namespace llmspace {

struct LaunchAssignment {
    std::string vehicle;
    struct Item {
        std::string label;
        double mass_kg = 0;
    };
    std::vector<Item> items;
};

struct LaunchCarbon {
    struct Item {
        std::string label;
        double mass_kg = 0;
        double carbon_kg = 0;
    };
    std::vector<Item> items;
    double total_kg = 0;
    std::vector<std::string> warnings;
};

/// Launch embodied carbon: per-kg vehicle intensity applied to each manifest
/// item. Exceeding the vehicle's payload capacity is a warning, not an error.
LaunchCarbon launch_carbon(const LaunchAssignment& assignment, const TechnologyCatalog& catalog);

} // namespace llmspace
