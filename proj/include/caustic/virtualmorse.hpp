#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "caustic/kernels.hpp"
#include "caustic/passport.hpp"

namespace caustic {

enum class FlipKind {
    MaxwellReal,        // two adjacent real values with orthogonal cycles exchange
    PairExchangeOver,   // two non-real pairs exchange imaginary order, lower cycle is transported
    PairExchangeUnder,  // same wall crossed the other way, upper cycle is transported
    MaxwellComplex,     // lowest non-real pair crosses the real axis in a gap
    Discriminant,       // a real value crosses zero
    CausticDeath,       // two adjacent real values collide and leave the axis
    CausticBirth,       // the lowest pair lands on the axis and splits
};

const char* flip_kind_name(FlipKind k);
bool crosses_caustic(FlipKind k);

struct Flip {
    FlipKind kind;
    int position = 0;  // real slot, pair slot or gap
    int side = 0;      // Discriminant: +1 one value leaves the negative side, -1 one enters it.
                       // CausticBirth at the zero gap: +1 born above zero, -1 below.
    auto operator<=>(const Flip&) const = default;
};

std::string flip_str(const Flip& f);

// Basis order: real elements by increasing value, then non-real pairs by increasing
// imaginary part of the upper member, each pair as (upper, lower).
struct VirtualMorsification {
    std::string cls;
    int mu = 0;
    std::vector<int> intersections;  // mu x mu, row major, diagonal -2
    std::vector<int> conjugation;    // mu x mu, column j is the image of element j
    std::vector<int> partner;        // -1 for real elements
    std::vector<int> morse_indices;  // one per real element
    int negatives = 0;
    int gradient_index = 0;

    int real_count() const { return static_cast<int>(morse_indices.size()); }
    int pair_count() const { return (mu - real_count()) / 2; }
    int gram(int i, int j) const { return intersections[i * mu + j]; }
    bool operator==(const VirtualMorsification&) const = default;
};

Passport passport_of(const VirtualMorsification& vm);
std::vector<Flip> available_flips(const VirtualMorsification& vm);
VirtualMorsification apply_flip(const VirtualMorsification& vm, const Flip& flip);
std::string canonical_key(const VirtualMorsification& vm);

struct DiagramVertex {
    int element;
    bool real;
    int morse_index;  // -1 for non-real
};
struct DiagramEdge {
    int from, to;  // from has the smaller position in the basis order
    int weight;
};
struct OrientedDiagram {
    std::vector<DiagramVertex> vertices;
    std::vector<DiagramEdge> edges;
};
OrientedDiagram oriented_diagram(const VirtualMorsification& vm);

// Automorphisms of the intersection graph preserving Morse index labels.
int diagram_automorphisms(const VirtualMorsification& vm);

// Conjugation of an all-real system determined by its Gram matrix and indices.
std::vector<int> real_conjugation(int mu, const std::vector<int>& gram, const std::vector<int>& indices);

// Throws InvalidSeed when the record is inconsistent.
void validate(const VirtualMorsification& vm);

// Lattice engine used by flips and the enumerator. Coordinates are those of the
// basis of the record it was built from.
class MorseEngine {
public:
    struct alignas(32) Vec {
        std::array<int32_t, kMaxRank> c{};
        bool operator==(const Vec&) const = default;
    };
    struct State {
        std::vector<Vec> up;        // upper members, top to bottom
        std::vector<Vec> re;        // real cycles by increasing value
        std::vector<int8_t> idx;    // Morse indices of re
        int negatives = 0;
    };

    explicit MorseEngine(const VirtualMorsification& vm);

    int mu() const { return mu_; }
    const State& initial() const { return init_; }
    std::vector<std::pair<Flip, State>> successors(const State& s, bool caustic = true) const;
    std::optional<State> apply(const State& s, const Flip& f) const;
    std::string key(const State& s) const;
    VirtualMorsification to_vm(const State& s) const;
    Passport passport(const State& s) const;
    // Product of reflections in angular order, as a matrix in seed coordinates.
    std::vector<int64_t> coxeter(const State& s) const;

private:
    int32_t ip(const Vec& a, const Vec& b) const;
    Vec refl(const Vec& v, const Vec& x) const;  // h_v(x)
    Vec sig(const Vec& x) const;
    Vec below(const State& s, int k, Vec x) const;
    Vec above(const State& s, int k, Vec x) const;
    std::vector<Vec> basis(const State& s) const;

    int mu_, lanes_;
    std::string cls_;
    int gradient_index_;
    std::vector<int32_t> G_;  // lanes x lanes
    std::vector<int32_t> S_;  // rows of the conjugation matrix
    State init_;
};

}  // namespace caustic
