#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "caustic/virtualmorse.hpp"

namespace caustic {

// Worker count from CAUSTIC_WORKERS, else the hardware concurrency.
int default_workers();

struct EnumerateOptions {
    int workers = 0;  // 0 means default_workers()
    std::size_t cap = 1000000;
    bool caustic = true;  // false restricts to one component
    std::function<void(std::size_t)> progress;  // called every 10^4 new states
};

struct ComponentInfo {
    std::size_t size = 0;
    Passport passport;
    bool all_real = false;
    std::size_t representative = 0;  // state id
};

// Components grouped by passport data: M real critical points, m_minus of them minima.
struct StatRow {
    int M = 0;
    int m_minus = 0;
    std::vector<std::size_t> sizes;  // one per component with this passport data
};

struct Enumeration {
    std::string cls;
    int mu = 0;
    std::vector<MorseEngine::State> states;  // in discovery order
    std::vector<std::vector<std::pair<std::uint32_t, FlipKind>>> edges;
    std::vector<std::uint32_t> component_of;
    std::vector<ComponentInfo> components;

    std::size_t total() const { return states.size(); }
};

Enumeration enumerate_all(const VirtualMorsification& seed, const EnumerateOptions& opt = {});
// States reachable without crossing the caustic.
Enumeration enumerate_component(const VirtualMorsification& seed, const EnumerateOptions& opt = {});

// Components of the flip graph with the given kinds removed (plus caustic kinds).
std::size_t count_components(const Enumeration& e, const std::vector<FlipKind>& excluded);
bool maxwell_complex_essential(const Enumeration& e);

std::vector<StatRow> stats(const Enumeration& e);

}  // namespace caustic
