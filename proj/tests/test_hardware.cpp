#include <doctest.h>

#include <random>

#include "llmspace/hardware.hpp"

using namespace llmspace;

namespace {

HardeningProfile cots_profile(const TechnologyCatalog& cat) { return cat.hardening("cots"); }
HardeningProfile radhard_profile(const TechnologyCatalog& cat) {
    return cat.hardening("rad-hard");
}

} // namespace

TEST_SUITE("hardware") {

TEST_CASE("logic carbon is count times CPA times area") {
    auto cat = TechnologyCatalog::builtin();
    LogicDie die{"gpu", 8.14, "4nm", 8};
    CHECK(logic_carbon(die, cots_profile(cat), cat) ==
          doctest::Approx(8 * 3.0 * 8.14).epsilon(1e-12)); // 195.36
}

TEST_CASE("COTS ignores the hardening area scale") {
    auto cat = TechnologyCatalog::builtin();
    LogicDie die{"gpu", 8.14, "4nm", 8};
    HardeningProfile p = cots_profile(cat);
    double base = logic_carbon(die, p, cat);
    // The config loader rejects COTS profiles with other scales; the function
    // itself must not read the field in COTS mode either.
    HardeningProfile q = p;
    q.area_scale = 15.0;
    CHECK(logic_carbon(die, q, cat) == base);
}

TEST_CASE("hardened logic at a mature node applies CPA and area scale") {
    auto cat = TechnologyCatalog::builtin();
    LogicDie die{"gpu", 8.14, "14nm", 8};
    CHECK(logic_carbon(die, radhard_profile(cat), cat) ==
          doctest::Approx(8 * 2.4 * 8.14 * 15.0).epsilon(1e-12)); // 2344.32
}

TEST_CASE("hardened logic is unavailable at immature nodes") {
    auto cat = TechnologyCatalog::builtin();
    for (const char* process : {"7nm", "4nm"}) {
        LogicDie die{"gpu", 8.14, process, 8};
        CHECK_THROWS_WITH_AS(logic_carbon(die, radhard_profile(cat), cat),
                             doctest::Contains("mature"), Error);
    }
    for (const char* process : {"28nm", "14nm"}) {
        LogicDie die{"gpu", 8.14, process, 8};
        CHECK_NOTHROW(logic_carbon(die, radhard_profile(cat), cat));
    }
}

TEST_CASE("memory carbon is capacity times per-GB intensity") {
    auto cat = TechnologyCatalog::builtin();
    CHECK(memory_carbon({"HBM2", 640.0, ""}, cat) == doctest::Approx(1152.0).epsilon(1e-12));
    CHECK(memory_carbon({"MRAM-HBM", 640.0, ""}, cat) == doctest::Approx(1472.0).epsilon(1e-12));
    CHECK(memory_carbon({"DDR4", 0.001, ""}, cat) == doctest::Approx(0.4e-3).epsilon(1e-12));
}

TEST_CASE("storage carbon mirrors memory carbon") {
    auto cat = TechnologyCatalog::builtin();
    CHECK(storage_carbon(30720.0, "NAND", cat) == doctest::Approx(552.96).epsilon(1e-12));
    CHECK(storage_carbon(30720.0, "rad-NAND", cat) == doctest::Approx(4915.2).epsilon(1e-12));
    CHECK(storage_carbon(0.0, "NAND", cat) == 0.0);
}

TEST_CASE("carbon is linear in area, count, and capacity") {
    auto cat = TechnologyCatalog::builtin();
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dist(0.01, 50.0);
    for (int i = 0; i < 100; ++i) {
        double area = dist(rng);
        double cap = dist(rng) * 100;
        LogicDie one{"d", area, "14nm", 1};
        LogicDie four{"d", area, "14nm", 4};
        CHECK(logic_carbon(four, cots_profile(cat), cat) ==
              doctest::Approx(4 * logic_carbon(one, cots_profile(cat), cat)).epsilon(1e-12));
        LogicDie half{"d", area / 2, "14nm", 1};
        CHECK(logic_carbon(one, cots_profile(cat), cat) ==
              doctest::Approx(2 * logic_carbon(half, cots_profile(cat), cat)).epsilon(1e-12));
        CHECK(memory_carbon({"DDR4", 2 * cap, ""}, cat) ==
              doctest::Approx(2 * memory_carbon({"DDR4", cap, ""}, cat)).epsilon(1e-12));
    }
}

TEST_CASE("node carbon uses the vendor aggregate when present") {
    auto cat = TechnologyCatalog::builtin();
    ComputeNode node = cat.compute_node("dgx_h100");

    node.hardening = cots_profile(cat);
    NodeCarbon cots = node_carbon(node, cat);
    CHECK(cots.mode == CarbonMode::CATALOG);
    CHECK(cots.total_kg == 960.0);
    CHECK(cots.mass_kg == 130.0);
    CHECK(cots.power_kw == 10.0);

    node.hardening = radhard_profile(cat);
    NodeCarbon hard = node_carbon(node, cat);
    CHECK(hard.mode == CarbonMode::CATALOG);
    CHECK(hard.total_kg == 5160.0);
    CHECK(hard.power_kw == 20.0);
}

TEST_CASE("bottom-up node carbon adds the auxiliary share") {
    auto cat = TechnologyCatalog::builtin();
    ComputeNode node = cat.compute_node("dgx_h100");
    node.manu_override_cots_kg.reset();
    node.manu_override_radhard_kg.reset();
    node.hardening = cots_profile(cat);

    NodeCarbon nc = node_carbon(node, cat);
    CHECK(nc.mode == CarbonMode::BOTTOM_UP);
    CHECK(nc.logic_kg == doctest::Approx(195.36).epsilon(1e-12));
    CHECK(nc.memory_kg == doctest::Approx(1152.0 + 819.2).epsilon(1e-12));
    CHECK(nc.storage_kg == doctest::Approx(552.96).epsilon(1e-12));
    double components = 195.36 + 1152.0 + 819.2 + 552.96;
    CHECK(nc.total_kg == doctest::Approx(components / 0.9).epsilon(1e-12)); // 3021.69
    CHECK(nc.auxiliary_kg / nc.total_kg == doctest::Approx(0.10).epsilon(1e-12));
}

TEST_CASE("hardened bottom-up refabs logic and swaps memory") {
    auto cat = TechnologyCatalog::builtin();
    ComputeNode node = cat.compute_node("dgx_h100");
    node.manu_override_cots_kg.reset();
    node.manu_override_radhard_kg.reset();
    node.hardening = radhard_profile(cat);

    NodeCarbon nc = node_carbon(node, cat);
    CHECK(nc.mode == CarbonMode::BOTTOM_UP);
    // The 4nm die has no hardened variant, so the redesign lands at 14nm.
    CHECK(nc.logic_kg == doctest::Approx(8 * 2.4 * 8.14 * 15.0).epsilon(1e-12));
    CHECK(nc.memory_kg == doctest::Approx(640 * 2.3 + 2048 * 0.6).epsilon(1e-12));
    CHECK(nc.storage_kg == doctest::Approx(30720 * 0.16).epsilon(1e-12));
    CHECK(nc.power_kw == doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("dies at mature nodes harden in place") {
    auto cat = TechnologyCatalog::builtin();
    ComputeNode node = cat.compute_node("jetson_nano");
    node.hardening = radhard_profile(cat);
    NodeCarbon nc = node_carbon(node, cat);
    // 28nm offers a hardened CPA of its own; no redirect to 14nm.
    CHECK(nc.logic_kg == doctest::Approx(1 * 1.8 * 1.18 * 15.0).epsilon(1e-12));
}

TEST_CASE("explicit substitutes win over automatic substitution") {
    json doc = {{"memory",
                 {{"FeRAM-HBM",
                   {{"kind", "HBM"}, {"hardness", "RAD_HARD"}, {"cpa_kg_per_gb", 3.0}}}}}};
    auto cat = TechnologyCatalog::load(doc);
    ComputeNode node = cat.compute_node("dgx_h100");
    node.manu_override_radhard_kg.reset();
    node.hardening = radhard_profile(cat);
    // Two hardened HBM candidates exist now; automatic substitution must fail.
    CHECK_THROWS_WITH_AS(node_carbon(node, cat), doctest::Contains("ambiguous"), Error);
    node.memory[0].radhard_tech = "FeRAM-HBM";
    NodeCarbon nc = node_carbon(node, cat);
    CHECK(nc.memory_kg == doctest::Approx(640 * 3.0 + 2048 * 0.6).epsilon(1e-12));
}

TEST_CASE("node power scales only under hardening") {
    auto cat = TechnologyCatalog::builtin();
    ComputeNode node = cat.compute_node("dgx_a100");
    node.hardening = cots_profile(cat);
    CHECK(node_carbon(node, cat).power_kw == 11.0);
    node.hardening = radhard_profile(cat);
    CHECK(node_carbon(node, cat).power_kw == 22.0);
}

TEST_CASE("platform carbon adds comms payload and bus") {
    auto cat = TechnologyCatalog::builtin();
    PlatformCarbon starlink = platform_carbon(cat.comms("starlink_v1_bundle"));
    CHECK(starlink.manu_kg == 1630.0);
    CHECK(starlink.mass_kg == 166.5);

    PlatformCarbon cubesat = platform_carbon(cat.comms("cubesat_rf"));
    CHECK(cubesat.manu_kg == 20.0);
    CHECK(cubesat.mass_kg == 2.0);

    CommsPayload none;
    PlatformCarbon empty = platform_carbon(none);
    CHECK(empty.manu_kg == 0.0);
    CHECK(empty.mass_kg == 0.0);

    PlatformCarbon with_bus = platform_carbon(cat.comms("cubesat_rf"), 100.0, 9.0);
    CHECK(with_bus.manu_kg == 120.0);
    CHECK(with_bus.mass_kg == 11.0);
}

} // TEST_SUITE
