#include "caustic/virtualmorse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "caustic/errors.hpp"

namespace caustic {

const char* flip_kind_name(FlipKind k) {
    switch (k) {
        case FlipKind::MaxwellReal: return "MaxwellReal";
        case FlipKind::PairExchangeOver: return "PairExchangeOver";
        case FlipKind::PairExchangeUnder: return "PairExchangeUnder";
        case FlipKind::MaxwellComplex: return "MaxwellComplex";
        case FlipKind::Discriminant: return "Discriminant";
        case FlipKind::CausticDeath: return "CausticDeath";
        case FlipKind::CausticBirth: return "CausticBirth";
    }
    return "?";
}

bool crosses_caustic(FlipKind k) { return k == FlipKind::CausticDeath || k == FlipKind::CausticBirth; }

std::string flip_str(const Flip& f) {
    std::ostringstream os;
    os << flip_kind_name(f.kind) << "@" << f.position;
    if (f.side) os << (f.side > 0 ? "+" : "-");
    return os.str();
}

Passport passport_of(const VirtualMorsification& vm) {
    Passport p(3, 0);
    for (int i : vm.morse_indices) p.at(i)++;
    return p;
}

namespace {

// in-basis reflection: x + <x,v> v with Gram g
std::vector<int64_t> reflect_coords(int mu, const std::vector<int>& g, const std::vector<int64_t>& v,
                                    std::vector<int64_t> x) {
    int64_t c = 0;
    for (int i = 0; i < mu; ++i)
        for (int j = 0; j < mu; ++j) c += x[i] * g[i * mu + j] * v[j];
    for (int i = 0; i < mu; ++i) x[i] += c * v[i];
    return x;
}

// Solve B X = R for unimodular integer B (columns are vectors); exact check after rounding.
std::vector<int64_t> solve_unimodular(int n, const std::vector<int64_t>& B, const std::vector<int64_t>& R) {
    std::vector<double> a(n * n), r(n * n);
    for (int i = 0; i < n * n; ++i) a[i] = static_cast<double>(B[i]), r[i] = static_cast<double>(R[i]);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int i = col + 1; i < n; ++i)
            if (std::fabs(a[i * n + col]) > std::fabs(a[piv * n + col])) piv = i;
        if (std::fabs(a[piv * n + col]) < 1e-12) throw Error(ErrorCode::InvalidSeed, "singular basis");
        if (piv != col)
            for (int j = 0; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]), std::swap(r[piv * n + j], r[col * n + j]);
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            double f = a[i * n + col] / a[col * n + col];
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) a[i * n + j] -= f * a[col * n + j], r[i * n + j] -= f * r[col * n + j];
        }
    }
    std::vector<int64_t> X(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) X[i * n + j] = std::llround(r[i * n + j] / a[i * n + i]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int64_t s = 0;
            for (int k = 0; k < n; ++k) s += B[i * n + k] * X[k * n + j];
            if (s != R[i * n + j]) throw Error(ErrorCode::InvalidSeed, "basis is not unimodular");
        }
    return X;
}

}  // namespace

std::vector<int> real_conjugation(int mu, const std::vector<int>& gram, const std::vector<int>& indices) {
    std::vector<int> S(mu * mu, 0);
    for (int k = 0; k < mu; ++k) {
        std::vector<int64_t> v(mu, 0);
        v[k] = 1;
        for (int j = k - 1; j >= 0; --j) {
            std::vector<int64_t> e(mu, 0);
            e[j] = 1;
            v = reflect_coords(mu, gram, e, v);
        }
        int sgn = (indices[k] % 2 == 0) ? -1 : 1;
        for (int i = 0; i < mu; ++i) S[i * mu + k] = static_cast<int>(sgn * v[i]);
    }
    return S;
}

void validate(const VirtualMorsification& vm) {
    auto bad = [](const std::string& m) { throw Error(ErrorCode::InvalidSeed, m); };
    const int mu = vm.mu;
    if (mu < 1 || mu > kMaxRank) bad("mu out of range");
    if ((int)vm.intersections.size() != mu * mu || (int)vm.conjugation.size() != mu * mu ||
        (int)vm.partner.size() != mu)
        bad("matrix sizes do not match mu");
    const int M = vm.real_count();
    if ((mu - M) % 2) bad("odd number of non-real elements");
    if (vm.negatives < 0 || vm.negatives > M) bad("negatives out of range");
    for (int i : vm.morse_indices)
        if (i < 0 || i > 2) bad("Morse index out of range");
    for (int i = 0; i < mu; ++i) {
        if (vm.gram(i, i) != -2) bad("diagonal must be -2");
        for (int j = 0; j < mu; ++j)
            if (vm.gram(i, j) != vm.gram(j, i)) bad("intersections not symmetric");
        int want = i < M ? -1 : ((i - M) % 2 == 0 ? i + 1 : i - 1);
        if (vm.partner[i] != want) bad("reality markers do not follow the basis order");
    }
    const auto& S = vm.conjugation;
    const auto& G = vm.intersections;
    for (int i = 0; i < mu; ++i)
        for (int j = 0; j < mu; ++j) {
            int64_t sq = 0, iso = 0;
            for (int k = 0; k < mu; ++k) sq += (int64_t)S[i * mu + k] * S[k * mu + j];
            for (int a = 0; a < mu; ++a)
                for (int b = 0; b < mu; ++b) iso += (int64_t)S[a * mu + i] * G[a * mu + b] * S[b * mu + j];
            if (sq != (i == j)) bad("conjugation is not an involution");
            if (iso != G[i * mu + j]) bad("conjugation is not an isometry");
        }
    for (int j = M; j < mu; ++j)
        for (int i = 0; i < mu; ++i)
            if (S[i * mu + j] != (i == vm.partner[j])) bad("conjugation does not swap pair members");
    // real cycles: sigma(e_k) = -(-1)^idx * transport below the smaller values
    for (int k = 0; k < M; ++k) {
        std::vector<int64_t> v(mu, 0);
        v[k] = 1;
        for (int j = k - 1; j >= 0; --j) {
            std::vector<int64_t> e(mu, 0);
            e[j] = 1;
            v = reflect_coords(mu, G, e, v);
        }
        int sgn = (vm.morse_indices[k] % 2 == 0) ? -1 : 1;
        for (int i = 0; i < mu; ++i)
            if (S[i * mu + k] != sgn * v[i]) bad("conjugation of a real cycle disagrees with its index");
    }
}

MorseEngine::MorseEngine(const VirtualMorsification& vm)
    : mu_(vm.mu), lanes_(padded(vm.mu)), cls_(vm.cls), gradient_index_(vm.gradient_index) {
    validate(vm);
    G_.assign(lanes_ * lanes_, 0);
    S_.assign(lanes_ * lanes_, 0);
    for (int i = 0; i < mu_; ++i)
        for (int j = 0; j < mu_; ++j) {
            G_[i * lanes_ + j] = vm.intersections[i * mu_ + j];
            S_[i * lanes_ + j] = vm.conjugation[i * mu_ + j];
        }
    const int M = vm.real_count(), p = vm.pair_count();
    for (int k = 0; k < M; ++k) {
        Vec e;
        e.c[k] = 1;
        init_.re.push_back(e);
        init_.idx.push_back(static_cast<int8_t>(vm.morse_indices[k]));
    }
    for (int t = p - 1; t >= 0; --t) {
        Vec e;
        e.c[M + 2 * t] = 1;
        init_.up.push_back(e);
    }
    init_.negatives = vm.negatives;
}

int32_t MorseEngine::ip(const Vec& a, const Vec& b) const {
    const KernelTable& k = kernels();
    alignas(32) int32_t w[kMaxRank];
    k.matvec(G_.data(), lanes_, a.c.data(), w, lanes_);
    return k.dot(w, b.c.data(), lanes_);
}

MorseEngine::Vec MorseEngine::refl(const Vec& v, const Vec& x) const {
    Vec r = x;
    int32_t c = ip(x, v);
    if (c) kernels().axpy(c, v.c.data(), r.c.data(), lanes_);
    return r;
}

MorseEngine::Vec MorseEngine::sig(const Vec& x) const {
    Vec r;
    kernels().matvec(S_.data(), lanes_, x.c.data(), r.c.data(), lanes_);
    return r;
}

MorseEngine::Vec MorseEngine::below(const State& s, int k, Vec x) const {
    for (int j = k - 1; j >= 0; --j) x = refl(s.re[j], x);
    return x;
}

MorseEngine::Vec MorseEngine::above(const State& s, int k, Vec x) const {
    for (int j = 0; j < k; ++j) x = refl(s.re[j], x);
    return x;
}

std::vector<std::pair<Flip, MorseEngine::State>> MorseEngine::successors(const State& s, bool caustic) const {
    std::vector<std::pair<Flip, State>> out;
    const int M = static_cast<int>(s.re.size());
    const int p = static_cast<int>(s.up.size());
    for (int i = 0; i + 1 < M; ++i) {
        int32_t g = ip(s.re[i], s.re[i + 1]);
        if (g == 0) {
            State n = s;
            std::swap(n.re[i], n.re[i + 1]);
            std::swap(n.idx[i], n.idx[i + 1]);
            out.emplace_back(Flip{FlipKind::MaxwellReal, i}, std::move(n));
        } else if (caustic && std::abs(g) == 1 && s.idx[i + 1] == s.idx[i] + 1) {
            bool both_neg = i + 1 < s.negatives, both_pos = i >= s.negatives;
            if (!both_neg && !both_pos) continue;
            State n;
            Vec u = refl(s.re[i + 1], s.re[i]);
            n.up = s.up;
            n.up.push_back(u);
            for (int j = 0; j < M; ++j) {
                if (j == i || j == i + 1) continue;
                n.re.push_back(j < i ? s.re[j] : refl(u, s.re[j]));
                n.idx.push_back(s.idx[j]);
            }
            n.negatives = s.negatives - (both_neg ? 2 : 0);
            out.emplace_back(Flip{FlipKind::CausticDeath, i}, std::move(n));
        }
    }
    for (int i = 0; i + 1 < p; ++i) {
        const Vec &a = s.up[i], &b = s.up[i + 1];
        State n = s;
        n.up[i] = b;
        n.up[i + 1] = refl(b, a);
        out.emplace_back(Flip{FlipKind::PairExchangeOver, i}, std::move(n));
        State m = s;
        m.up[i] = refl(a, b);
        m.up[i + 1] = a;
        out.emplace_back(Flip{FlipKind::PairExchangeUnder, i}, std::move(m));
    }
    if (p) {
        const Vec& u = s.up.back();
        const Vec su = sig(u);
        for (int k = 0; k <= M; ++k) {
            Vec x = above(s, k, su);
            int32_t g = ip(u, x);
            if (g == 0) {
                State n = s;
                n.up.back() = x;
                for (int j = k; j < M; ++j) n.re[j] = refl(x, refl(u, s.re[j]));
                out.emplace_back(Flip{FlipKind::MaxwellComplex, k}, std::move(n));
            } else if (caustic && std::abs(g) == 1) {
                Vec a = refl(x, u);
                Vec sa = sig(a), bl = below(s, k, a);
                int j;
                Vec neg;
                for (int l = 0; l < lanes_; ++l) neg.c[l] = -bl.c[l];
                if (sa == neg) j = 0;
                else if (sa == bl) j = 1;
                else continue;
                State base;
                base.up.assign(s.up.begin(), s.up.end() - 1);
                for (int r = 0; r < M; ++r) {
                    if (r == k) {
                        base.re.push_back(a), base.idx.push_back(static_cast<int8_t>(j));
                        base.re.push_back(x), base.idx.push_back(static_cast<int8_t>(j + 1));
                    }
                    base.re.push_back(r < k ? s.re[r] : refl(u, s.re[r]));
                    base.idx.push_back(s.idx[r]);
                }
                if (k == M) {
                    base.re.push_back(a), base.idx.push_back(static_cast<int8_t>(j));
                    base.re.push_back(x), base.idx.push_back(static_cast<int8_t>(j + 1));
                }
                if (k < s.negatives) {
                    base.negatives = s.negatives + 2;
                    out.emplace_back(Flip{FlipKind::CausticBirth, k}, std::move(base));
                } else if (k > s.negatives) {
                    base.negatives = s.negatives;
                    out.emplace_back(Flip{FlipKind::CausticBirth, k}, std::move(base));
                } else {
                    State lo = base;
                    lo.negatives = s.negatives + 2;
                    base.negatives = s.negatives;
                    out.emplace_back(Flip{FlipKind::CausticBirth, k, +1}, std::move(base));
                    out.emplace_back(Flip{FlipKind::CausticBirth, k, -1}, std::move(lo));
                }
            }
        }
    }
    if (s.negatives > 0) {
        State n = s;
        n.negatives--;
        out.emplace_back(Flip{FlipKind::Discriminant, 0, +1}, std::move(n));
    }
    if (s.negatives < M) {
        State n = s;
        n.negatives++;
        out.emplace_back(Flip{FlipKind::Discriminant, 0, -1}, std::move(n));
    }
    return out;
}

std::optional<MorseEngine::State> MorseEngine::apply(const State& s, const Flip& f) const {
    for (auto& [g, n] : successors(s))
        if (g == f) return n;
    return std::nullopt;
}

std::vector<MorseEngine::Vec> MorseEngine::basis(const State& s) const {
    std::vector<Vec> B(s.re.begin(), s.re.end());
    for (auto it = s.up.rbegin(); it != s.up.rend(); ++it) {
        B.push_back(*it);
        B.push_back(sig(*it));
    }
    return B;
}

std::string MorseEngine::key(const State& s) const {
    const std::vector<Vec> B = basis(s);
    const int n = mu_, M = static_cast<int>(s.re.size());
    const KernelTable& k = kernels();
    std::vector<Vec> GB(n);
    for (int i = 0; i < n; ++i) k.matvec(G_.data(), lanes_, B[i].c.data(), GB[i].c.data(), lanes_);
    std::vector<int32_t> g(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) g[i * n + j] = g[j * n + i] = k.dot(GB[i].c.data(), B[j].c.data(), lanes_);
    // units: each real element alone, each pair jointly
    auto unit = [M](int e) { return e < M ? e : M + (e - M) / 2; };
    std::vector<int> sign(n, 0);
    sign[unit(0)] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (int e = 0; e < n; ++e) {
            if (sign[unit(e)]) continue;
            for (int f = 0; f < n; ++f)
                if (sign[unit(f)] && g[e * n + f]) {
                    sign[unit(e)] = (g[e * n + f] > 0 ? 1 : -1) * sign[unit(f)];
                    changed = true;
                    break;
                }
        }
    }
    std::string key;
    key.reserve(4 + M + n * (n - 1) / 2);
    key.push_back(static_cast<char>(n));
    key.push_back(static_cast<char>(M));
    key.push_back(static_cast<char>(s.negatives));
    for (int8_t i : s.idx) key.push_back(static_cast<char>(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int v = g[i * n + j] * sign[unit(i)] * sign[unit(j)];
            key.push_back(static_cast<char>(static_cast<int8_t>(v)));
        }
    return key;
}

VirtualMorsification MorseEngine::to_vm(const State& s) const {
    const std::vector<Vec> B = basis(s);
    const int n = mu_, M = static_cast<int>(s.re.size());
    VirtualMorsification vm;
    vm.cls = cls_;
    vm.mu = n;
    vm.negatives = s.negatives;
    vm.gradient_index = gradient_index_;
    vm.morse_indices.assign(s.idx.begin(), s.idx.end());
    vm.intersections.resize(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) vm.intersections[i * n + j] = ip(B[i], B[j]);
    vm.partner.assign(n, -1);
    for (int e = M; e < n; ++e) vm.partner[e] = ((e - M) % 2 == 0) ? e + 1 : e - 1;
    std::vector<int64_t> Bm(n * n), SB(n * n);
    for (int j = 0; j < n; ++j) {
        Vec sb = sig(B[j]);
        for (int i = 0; i < n; ++i) Bm[i * n + j] = B[j].c[i], SB[i * n + j] = sb.c[i];
    }
    std::vector<int64_t> X = solve_unimodular(n, Bm, SB);
    vm.conjugation.assign(X.begin(), X.end());
    return vm;
}

Passport MorseEngine::passport(const State& s) const {
    Passport p(3, 0);
    for (int8_t i : s.idx) p[i]++;
    return p;
}

std::vector<int64_t> MorseEngine::coxeter(const State& s) const {
    std::vector<Vec> order(s.up.begin(), s.up.end());
    for (int j = static_cast<int>(s.re.size()) - 1; j >= 0; --j) order.push_back(s.re[j]);
    for (auto it = s.up.rbegin(); it != s.up.rend(); ++it) order.push_back(sig(*it));
    const int n = mu_;
    std::vector<int64_t> C(n * n, 0);
    for (int j = 0; j < n; ++j) {
        Vec e;
        e.c[j] = 1;
        for (auto it = order.rbegin(); it != order.rend(); ++it) e = refl(*it, e);
        for (int i = 0; i < n; ++i) C[i * n + j] = e.c[i];
    }
    return C;
}

std::vector<Flip> available_flips(const VirtualMorsification& vm) {
    MorseEngine e(vm);
    std::vector<Flip> out;
    for (auto& [f, s] : e.successors(e.initial())) out.push_back(f);
    return out;
}

VirtualMorsification apply_flip(const VirtualMorsification& vm, const Flip& flip) {
    MorseEngine e(vm);
    auto n = e.apply(e.initial(), flip);
    if (!n) throw Error(ErrorCode::InvalidFlip, flip_str(flip) + " is not available");
    return e.to_vm(*n);
}

std::string canonical_key(const VirtualMorsification& vm) {
    MorseEngine e(vm);
    return e.key(e.initial());
}

OrientedDiagram oriented_diagram(const VirtualMorsification& vm) {
    OrientedDiagram d;
    const int M = vm.real_count();
    for (int i = 0; i < vm.mu; ++i) d.vertices.push_back({i, i < M, i < M ? vm.morse_indices[i] : -1});
    for (int i = 0; i < vm.mu; ++i)
        for (int j = i + 1; j < vm.mu; ++j)
            if (vm.gram(i, j)) d.edges.push_back({i, j, vm.gram(i, j)});
    return d;
}

int diagram_automorphisms(const VirtualMorsification& vm) {
    const int n = vm.mu, M = vm.real_count();
    auto label = [&](int i) { return i < M ? vm.morse_indices[i] : 3; };
    std::vector<int> img(n, -1);
    std::vector<bool> used(n, false);
    int count = 0;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            ++count;
            return;
        }
        for (int c = 0; c < n; ++c) {
            if (used[c] || label(c) != label(i)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = std::abs(vm.gram(i, j)) == std::abs(vm.gram(c, img[j]));
            if (!ok) continue;
            used[c] = true;
            img[i] = c;
            rec(i + 1);
            used[c] = false;
        }
    };
    rec(0);
    return count;
}

}  // namespace caustic
