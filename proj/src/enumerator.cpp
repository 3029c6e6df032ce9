#include "caustic/enumerator.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "caustic/errors.hpp"

namespace caustic {

int default_workers() {
    if (const char* w = std::getenv("CAUSTIC_WORKERS")) {
        int n = std::atoi(w);
        if (n > 0) return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct UnionFind {
    std::vector<std::uint32_t> p;
    explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a), b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

struct Expanded {
    std::vector<std::pair<Flip, MorseEngine::State>> next;
    std::vector<std::string> keys;
};

Enumeration run(const VirtualMorsification& seed, const EnumerateOptions& opt, bool caustic) {
    MorseEngine eng(seed);
    Enumeration e;
    e.cls = seed.cls;
    e.mu = seed.mu;
    std::unordered_map<std::string, std::uint32_t> ids;
    e.states.push_back(eng.initial());
    e.edges.emplace_back();
    ids.emplace(eng.key(eng.initial()), 0);
    const int workers = opt.workers > 0 ? opt.workers : default_workers();
    std::size_t reported = 0;

    std::vector<std::uint32_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<Expanded> ex(frontier.size());
        auto work = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                ex[i].next = eng.successors(e.states[frontier[i]], caustic);
                for (auto& [f, s] : ex[i].next) ex[i].keys.push_back(eng.key(s));
            }
        };
        if (workers <= 1 || frontier.size() < 64) {
            work(0, frontier.size());
        } else {
            std::vector<std::thread> pool;
            std::size_t chunk = (frontier.size() + workers - 1) / workers;
            for (int w = 0; w < workers; ++w) {
                std::size_t lo = w * chunk, hi = std::min(frontier.size(), lo + chunk);
                if (lo < hi) pool.emplace_back(work, lo, hi);
            }
            for (auto& t : pool) t.join();
        }
        // sequential merge in frontier order keeps ids independent of the worker count
        std::vector<std::uint32_t> next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            for (std::size_t k = 0; k < ex[i].next.size(); ++k) {
                auto [it, fresh] = ids.emplace(std::move(ex[i].keys[k]), static_cast<std::uint32_t>(e.states.size()));
                if (fresh) {
                    if (e.states.size() >= opt.cap)
                        throw Error(ErrorCode::StateExplosion, "more than " + std::to_string(opt.cap) + " states");
                    e.states.push_back(std::move(ex[i].next[k].second));
                    e.edges.emplace_back();
                    next.push_back(it->second);
                    if (opt.progress && e.states.size() / 10000 > reported) {
                        reported = e.states.size() / 10000;
                        opt.progress(e.states.size());
                    }
                }
                e.edges[frontier[i]].emplace_back(it->second, ex[i].next[k].first.kind);
            }
        }
        frontier = std::move(next);
    }

    UnionFind uf(e.states.size());
    for (std::uint32_t s = 0; s < e.states.size(); ++s)
        for (auto [t, kind] : e.edges[s])
            if (!crosses_caustic(kind)) uf.unite(s, t);
    std::map<std::uint32_t, std::uint32_t> comp_id;
    e.component_of.resize(e.states.size());
    for (std::uint32_t s = 0; s < e.states.size(); ++s) {
        auto [it, fresh] = comp_id.emplace(uf.find(s), static_cast<std::uint32_t>(e.components.size()));
        if (fresh) {
            ComponentInfo c;
            c.passport = eng.passport(e.states[s]);
            c.all_real = static_cast<int>(e.states[s].re.size()) == e.mu;
            c.representative = s;
            e.components.push_back(c);
        }
        ComponentInfo& c = e.components[it->second];
        if (eng.passport(e.states[s]) != c.passport)
            throw Error(ErrorCode::VerificationMismatch, "passport changes inside a component");
        c.size++;
        e.component_of[s] = it->second;
    }
    return e;
}

}  // namespace

Enumeration enumerate_all(const VirtualMorsification& seed, const EnumerateOptions& opt) {
    return run(seed, opt, opt.caustic);
}

Enumeration enumerate_component(const VirtualMorsification& seed, const EnumerateOptions& opt) {
    return run(seed, opt, false);
}

std::size_t count_components(const Enumeration& e, const std::vector<FlipKind>& excluded) {
    UnionFind uf(e.states.size());
    for (std::uint32_t s = 0; s < e.states.size(); ++s)
        for (auto [t, kind] : e.edges[s])
            if (!crosses_caustic(kind) && std::find(excluded.begin(), excluded.end(), kind) == excluded.end())
                uf.unite(s, t);
    std::size_t n = 0;
    for (std::uint32_t s = 0; s < e.states.size(); ++s) n += uf.find(s) == s;
    return n;
}

bool maxwell_complex_essential(const Enumeration& e) {
    return count_components(e, {FlipKind::MaxwellComplex}) != e.components.size();
}

std::vector<StatRow> stats(const Enumeration& e) {
    std::map<std::pair<int, int>, std::vector<std::size_t>> rows;
    for (auto& c : e.components) {
        int M = 0;
        for (int m : c.passport) M += m;
        rows[{M, c.passport.empty() ? 0 : c.passport[0]}].push_back(c.size);
    }
    std::vector<StatRow> out;
    for (auto& [k, v] : rows) out.push_back({k.first, k.second, v});
    return out;
}

}  // namespace caustic
