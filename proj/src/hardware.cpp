#include "llmspace/hardware.hpp"

#include "llmspace/errors.hpp"
#include "llmspace/json_util.hpp"

namespace llmspace {

double logic_carbon(const LogicDie& die, const HardeningProfile& hardening,
                    const TechnologyCatalog& catalog) {
    const ProcessNode& process = catalog.process(die.process);
    double cpa;
    double scale = 1.0;
    if (hardening.mode == HardeningMode::RAD_HARD) {
        if (!process.cpa_radhard_kg_per_cm2) {
            throw domain_error("process '" + process.name +
                               "' has no hardened CPA; hardened fabrication is available only "
                               "at mature nodes");
        }
        cpa = *process.cpa_radhard_kg_per_cm2;
        scale = hardening.area_scale;
    } else {
        if (!process.cpa_cots_kg_per_cm2) {
            throw domain_error("process '" + process.name + "' has no COTS CPA");
        }
        cpa = *process.cpa_cots_kg_per_cm2;
    }
    return die.count * cpa * die.area_cm2 * scale;
}

double memory_carbon(const MemoryBlock& block, const TechnologyCatalog& catalog) {
    if (!(block.capacity_gb >= 0)) {
        throw domain_error("memory block capacity must be nonnegative");
    }
    const MemoryTech& tech = catalog.memory(block.tech);
    return block.capacity_gb * tech.cpa_kg_per_gb;
}

double storage_carbon(double capacity_gb, const std::string& tech,
                      const TechnologyCatalog& catalog) {
    MemoryBlock block;
    block.tech = tech;
    block.capacity_gb = capacity_gb;
    return memory_carbon(block, catalog);
}

namespace {

std::string effective_memory_tech(const MemoryBlock& block, const HardeningProfile& hardening,
                                  const TechnologyCatalog& catalog) {
    if (hardening.mode != HardeningMode::RAD_HARD) {
        return block.tech;
    }
    if (!block.radhard_tech.empty()) {
        return block.radhard_tech;
    }
    const MemoryTech& named = catalog.memory(block.tech);
    if (named.hardness == Hardness::RAD_HARD) {
        return block.tech; // already hardened
    }
    return catalog.radhard_memory_for(named.kind).name;
}

} // namespace

NodeCarbon node_carbon(const ComputeNode& node, const TechnologyCatalog& catalog) {
    const HardeningProfile& hard = node.hardening;
    NodeCarbon out;
    out.mass_kg = node.base_mass_kg;
    out.power_kw = node.power_demand_kw *
                   (hard.mode == HardeningMode::RAD_HARD ? hard.power_scale : 1.0);

    const auto& override_kg = hard.mode == HardeningMode::RAD_HARD
                                  ? node.manu_override_radhard_kg
                                  : node.manu_override_cots_kg;
    if (override_kg) {
        out.mode = CarbonMode::CATALOG;
        out.total_kg = *override_kg;
        return out; // vendor aggregate; no breakdown available
    }

    out.mode = CarbonMode::BOTTOM_UP;
    for (const auto& die : node.logic) {
        LogicDie effective = die;
        if (hard.mode == HardeningMode::RAD_HARD &&
            !catalog.process(die.process).cpa_radhard_kg_per_cm2) {
            // No hardened variant at this node; the redesign lands on the
            // profile's mature process instead.
            effective.process = hard.radhard_process;
        }
        out.logic_kg += logic_carbon(effective, hard, catalog);
    }
    for (const auto& block : node.memory) {
        MemoryBlock effective = block;
        effective.tech = effective_memory_tech(block, hard, catalog);
        out.memory_kg += memory_carbon(effective, catalog);
    }
    if (node.storage_gb > 0) {
        MemoryBlock storage;
        storage.tech = node.storage_tech;
        storage.capacity_gb = node.storage_gb;
        storage.radhard_tech = node.radhard_storage_tech;
        storage.tech = effective_memory_tech(storage, hard, catalog);
        out.storage_kg = memory_carbon(storage, catalog);
    }
    double components = out.logic_kg + out.memory_kg + out.storage_kg;
    out.total_kg = components / (1.0 - kAuxiliaryFraction);
    out.auxiliary_kg = out.total_kg - components;
    return out;
}

PlatformCarbon platform_carbon(const CommsPayload& comms, double satellite_manu_kg,
                               double satellite_mass_kg) {
    if (satellite_manu_kg < 0 || satellite_mass_kg < 0) {
        throw domain_error("platform carbon: satellite mass and carbon must be nonnegative");
    }
    PlatformCarbon p;
    p.manu_kg = comms.manu_embodied_kg + satellite_manu_kg;
    p.mass_kg = comms.mass_kg + satellite_mass_kg;
    return p;
}

std::string carbon_mode_name(CarbonMode mode) {
    switch (mode) {
        case CarbonMode::CATALOG: return "catalog";
        case CarbonMode::BOTTOM_UP: return "bottom_up";
        case CarbonMode::DERIVED: return "derived";
    }
    return "?";
}

} // namespace llmspace
