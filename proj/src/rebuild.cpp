#include "rebuild.hpp"

#include <algorithm>

namespace tri3::detail {

Rebuild::Rebuild(const Triangulation& tri, std::vector<std::size_t> removed, std::size_t new_tets)
    : tri_(tri), removed_(std::move(removed)), is_removed_(tri.size(), 0), new_tets_(new_tets),
      ports_(tri.size()) {
    for (std::size_t t : removed_) {
        if (t >= tri.size()) throw InvalidInput("rebuild: tetrahedron out of range");
        if (is_removed_[t]) throw InvalidInput("rebuild: repeated tetrahedron");
        is_removed_[t] = 1;
    }
}

void Rebuild::new_face(std::size_t t, int f, std::size_t k, int face, Perm4 relabel) {
    ports_[t][f] = Port{Fate::NewFace, k, face, relabel};
}

void Rebuild::flatten(std::size_t t, int f, std::size_t t2, Perm4 map) {
    if (t == t2 && map[f] == f) throw PreconditionError("rebuild: face flattened onto itself");
    ports_[t][f] = Port{Fate::Flatten, t2, map[f], map};
    ports_[t2][map[f]] = Port{Fate::Flatten, t, f, map.inverse()};
}

void Rebuild::interior(std::size_t t, int f) { ports_[t][f] = Port{Fate::Interior, 0, 0, Perm4()}; }

void Rebuild::join_new(std::size_t k, int face, std::size_t k2, Perm4 perm) {
    new_joins_.push_back({k, face, k2, perm});
}

std::size_t Rebuild::surviving_index(std::size_t t) const {
    if (is_removed_[t]) return SIZE_MAX;
    std::size_t below = 0;
    for (std::size_t r : removed_)
        if (r < t) ++below;
    return t - below;
}

Triangulation Rebuild::finish() const {
    Triangulation out = tri_;
    const std::size_t base = out.add_tetrahedra(new_tets_);
    for (std::size_t t : removed_)
        for (int f = 0; f < 4; ++f) {
            if (ports_[t][f].fate == Fate::Unset) throw std::logic_error("rebuild: port without fate");
            if (out.is_glued(t, f)) out.unjoin(t, f);
        }
    for (const auto& j : new_joins_) out.join(base + j.k, j.face, base + j.k2, j.perm);

    const std::size_t max_steps = 8 * removed_.size() + 8;
    // Follows the chain leaving port (t, f); m maps labels of t to labels of
    // the origin tetrahedron. Links the origin face to whatever is found.
    auto resolve = [&](std::size_t origin, int origin_face, std::size_t t, int f, Perm4 m) {
        for (std::size_t step = 0; step < max_steps; ++step) {
            const auto& g = tri_.gluing(t, f);
            if (!g) return;  // origin face becomes boundary
            std::size_t target;
            Perm4 perm;
            if (!is_removed_[g->tet]) {
                target = g->tet;
                perm = g->perm * m.inverse();
            } else {
                const Port& p = ports_[g->tet][g->perm[f]];
                Perm4 m3 = m * g->perm.inverse();
                if (p.fate == Fate::Flatten) {
                    t = p.tet;
                    f = p.face;
                    m = m3 * p.map.inverse();
                    continue;
                }
                if (p.fate != Fate::NewFace) throw std::logic_error("rebuild: chain reached an interior face");
                target = base + p.tet;
                perm = p.map * m3.inverse();
            }
            int target_face = perm[origin_face];
            if (target == origin && target_face == origin_face)
                throw PreconditionError("rebuild: face would be glued to itself");
            const auto& existing = out.gluing(origin, origin_face);
            if (existing) {
                if (existing->tet != target || existing->perm != perm)
                    throw PreconditionError("rebuild: inconsistent identifications");
                return;
            }
            if (out.is_glued(target, target_face)) throw PreconditionError("rebuild: inconsistent identifications");
            out.join(origin, origin_face, target, perm);
            return;
        }
        throw PreconditionError("rebuild: unterminated chain of flattened faces");
    };

    for (std::size_t t : removed_)
        for (int f = 0; f < 4; ++f) {
            const Port& p = ports_[t][f];
            if (p.fate == Fate::NewFace) {
                resolve(base + p.tet, p.face, t, f, p.map);
            } else if (p.fate == Fate::Flatten) {
                const auto& g = tri_.gluing(t, f);
                if (g && !is_removed_[g->tet]) resolve(g->tet, g->perm[f], p.tet, p.face, g->perm * p.map.inverse());
            }
        }
    // Unaffected faces glued to interior ports would be lost; they indicate a bad plan.
    for (std::size_t t : removed_)
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri_.gluing(t, f);
            if (ports_[t][f].fate == Fate::Interior && g && !is_removed_[g->tet])
                throw std::logic_error("rebuild: interior port glued outside the region");
        }
    out.remove_tetrahedra(removed_);
    return out;
}

}  // namespace tri3::detail
