#include "llmspace/launch.hpp"

#include "llmspace/errors.hpp"
#include "llmspace/json_util.hpp"

namespace llmspace {

LaunchCarbon launch_carbon(const LaunchAssignment& assignment, const TechnologyCatalog& catalog) {
    const LaunchVehicle& vehicle = catalog.launch_vehicle(assignment.vehicle);
    LaunchCarbon out;
    double total_mass = 0;
    for (const auto& item : assignment.items) {
        if (!(item.mass_kg >= 0)) {
            throw domain_error("launch manifest item '" + item.label +
                               "': mass must be nonnegative");
        }
        LaunchCarbon::Item r;
        r.label = item.label;
        r.mass_kg = item.mass_kg;
        r.carbon_kg = vehicle.intensity_kg_per_kg * item.mass_kg;
        out.total_kg += r.carbon_kg;
        total_mass += item.mass_kg;
        out.items.push_back(std::move(r));
    }
    if (total_mass > vehicle.payload_capacity_kg) {
        out.warnings.push_back("manifest mass " + format_double(total_mass) +
                               " kg exceeds " + vehicle.name + " payload capacity " +
                               format_double(vehicle.payload_capacity_kg) + " kg");
    }
    return out;
}

} // namespace llmspace
