#include "tri3/isosig.hpp"

#include <algorithm>
#include <vector>

namespace tri3 {

namespace {

constexpr char kAlphabet[] = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-";
constexpr char kVersion = 'b';

int char_value(char c) {
    const char* p = std::find(kAlphabet, kAlphabet + 64, c);
    return p == kAlphabet + 64 ? -1 : static_cast<int>(p - kAlphabet);
}

// Token stream of one breadth-first traversal: 0 = boundary face, 1 = glued to
// a newly labelled tetrahedron (with identity permutation in new labels),
// 2 followed by target index and permutation index = glued to a known one.
// Returns false as soon as the stream exceeds `best` (if given).
bool traverse(const Triangulation& tri, std::size_t start, const Perm4& start_perm,
              const std::vector<int>* best, std::vector<int>& out) {
    const std::size_t n = tri.size();
    std::vector<std::size_t> index(n, SIZE_MAX);
    std::vector<Perm4> phi(n);  // old vertex -> new vertex
    std::vector<std::size_t> order;
    std::vector<std::array<bool, 4>> done(n, std::array<bool, 4>{});
    out.clear();
    bool tied = best != nullptr;
    auto emit = [&](int token) {
        if (tied) {
            int b = (*best)[out.size()];
            if (token > b) return false;
            if (token < b) tied = false;
        }
        out.push_back(token);
        return true;
    };

    index[start] = 0;
    phi[start] = start_perm;
    order.push_back(start);
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::size_t t = order[i];
        Perm4 inv = phi[t].inverse();
        for (int F = 0; F < 4; ++F) {
            int f = inv[F];
            if (done[t][f]) continue;
            done[t][f] = true;
            const auto& g = tri.gluing(t, f);
            if (!g) {
                if (!emit(0)) return false;
                continue;
            }
            done[g->tet][g->perm[f]] = true;
            if (index[g->tet] == SIZE_MAX) {
                index[g->tet] = order.size();
                order.push_back(g->tet);
                phi[g->tet] = phi[t] * g->perm.inverse();
                if (!emit(1)) return false;
            } else {
                Perm4 p = phi[g->tet] * g->perm * inv;
                if (!emit(2) || !emit(static_cast<int>(index[g->tet])) || !emit(p.index())) return false;
            }
        }
    }
    return true;
}

std::string encode_number(std::size_t x, int width) {
    std::string s(width, 'a');
    for (int k = width - 1; k >= 0; --k) {
        s[k] = kAlphabet[x % 64];
        x /= 64;
    }
    return s;
}

std::string encode_component(const Triangulation& comp) {
    std::vector<int> best, cur;
    bool have = false;
    for (std::size_t t = 0; t < comp.size(); ++t)
        for (const Perm4& p : Perm4::all()) {
            if (traverse(comp, t, p, have ? &best : nullptr, cur) && (!have || cur < best)) {
                best.swap(cur);
                have = true;
            }
        }
    int width = 1;
    for (std::size_t cap = 64; cap <= comp.size(); cap *= 64) ++width;
    std::string s;
    s += kAlphabet[width];
    s += encode_number(comp.size(), width);
    for (std::size_t i = 0; i < best.size(); ++i) {
        s += kAlphabet[best[i]];
        if (best[i] == 2) {
            s += encode_number(static_cast<std::size_t>(best[i + 1]), width);
            s += kAlphabet[best[i + 2]];
            i += 2;
        }
    }
    return s;
}

}  // namespace

std::string isosig(const Triangulation& tri) {
    std::vector<std::string> blocks;
    for (const auto& c : tri.components()) blocks.push_back(encode_component(c));
    std::sort(blocks.begin(), blocks.end(), [](const std::string& a, const std::string& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::string s(1, kVersion);
    for (const auto& b : blocks) s += b;
    return s;
}

Triangulation from_isosig(const std::string& sig) {
    if (sig.empty()) throw InvalidInput("empty signature");
    if (char_value(sig[0]) < 0) throw InvalidInput("malformed signature");
    if (sig[0] != kVersion) throw InvalidInput("unsupported signature version");
    Triangulation out;
    std::size_t pos = 1;
    auto take = [&]() {
        if (pos >= sig.size()) throw InvalidInput("truncated signature");
        int v = char_value(sig[pos++]);
        if (v < 0) throw InvalidInput("malformed signature");
        return v;
    };
    auto take_number = [&](int width) {
        std::size_t x = 0;
        for (int k = 0; k < width; ++k) x = x * 64 + static_cast<std::size_t>(take());
        return x;
    };
    while (pos < sig.size()) {
        int width = take();
        if (width < 1 || width > 4) throw InvalidInput("malformed signature");
        std::size_t n = take_number(width);
        if (n == 0) throw InvalidInput("malformed signature");
        const std::size_t base = out.add_tetrahedra(n);
        std::size_t labelled = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (i >= labelled) throw InvalidInput("malformed signature: disconnected block");
            for (int f = 0; f < 4; ++f) {
                if (out.is_glued(base + i, f)) continue;
                int token = take();
                if (token == 0) continue;
                if (token == 1) {
                    if (labelled >= n) throw InvalidInput("malformed signature: too many tetrahedra");
                    out.join(base + i, f, base + labelled++, Perm4());
                } else if (token == 2) {
                    std::size_t target = take_number(width);
                    int p = take();
                    if (target >= labelled || p >= 24) throw InvalidInput("malformed signature");
                    Perm4 perm = Perm4::from_index(p);
                    std::size_t u = base + target;
                    if (out.is_glued(u, perm[f]) || (u == base + i && perm[f] == f))
                        throw InvalidInput("malformed signature: inconsistent gluing");
                    out.join(base + i, f, u, perm);
                } else {
                    throw InvalidInput("malformed signature");
                }
            }
        }
        if (labelled != n) throw InvalidInput("malformed signature: tetrahedron count");
    }
    return out;
}

bool is_isomorphic(const Triangulation& a, const Triangulation& b) {
    return a.size() == b.size() && isosig(a) == isosig(b);
}

}  // namespace tri3
