#pragma once

#include <string>
#include <vector>

#include "llmspace/catalog.hpp"

namespace llmspace {

/// Fraction of a computing node's manufacturing carbon attributed to
/// auxiliary parts (PCBs, discretes, structure, interconnect).
constexpr double kAuxiliaryFraction = 0.10;

enum class CarbonMode { CATALOG, BOTTOM_UP, DERIVED };

struct NodeCarbon {
    double logic_kg = 0;
    double memory_kg = 0;
    double storage_kg = 0;
    double auxiliary_kg = 0;
    double total_kg = 0;
    double mass_kg = 0;
    double power_kw = 0; // demand after the hardening power overhead
    CarbonMode mode = CarbonMode::BOTTOM_UP;
};

struct PlatformCarbon {
    double manu_kg = 0;
    double mass_kg = 0;
};

/// Manufacturing carbon of a logic die under the given hardening mode.
/// RAD_HARD requires the die's process to offer a hardened CPA and applies
/// the architectural area multiplier.
double logic_carbon(const LogicDie& die, const HardeningProfile& hardening,
                    const TechnologyCatalog& catalog);

/// Capacity-based manufacturing carbon of a memory block, using the block's
/// tech as named (substitution is the node-level concern).
double memory_carbon(const MemoryBlock& block, const TechnologyCatalog& catalog);

double storage_carbon(double capacity_gb, const std::string& tech,
                      const TechnologyCatalog& catalog);

/// Itemized node manufacturing carbon. A vendor-aggregate override for the
/// active mode wins over the bottom-up sum; bottom-up adds the auxiliary
/// share on top of logic + memory + storage. Under RAD_HARD, logic dies are
/// refabbed on the profile's hardened process and memory/storage switch to
/// their hardened substitutes unless explicitly overridden.
NodeCarbon node_carbon(const ComputeNode& node, const TechnologyCatalog& catalog);

PlatformCarbon platform_carbon(const CommsPayload& comms, double satellite_manu_kg = 0,
                               double satellite_mass_kg = 0);

std::string carbon_mode_name(CarbonMode mode);

} // namespace llmspace
