#include "tri3/triangulation.hpp"

#include <algorithm>
#include <string>

#include "tri3/union_find.hpp"

namespace tri3 {

Triangulation Triangulation::from_gluings(const std::vector<GluingRow>& table) {
    const std::size_t n = table.size();
    for (std::size_t t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = table[t][f];
            if (!g) continue;
            const std::string where = "tetrahedron " + std::to_string(t) + " face " + std::to_string(f);
            if (g->tet >= n) throw InvalidInput(where + ": target tetrahedron out of range");
            if (!g->perm.valid()) throw InvalidInput(where + ": invalid permutation");
            int back_face = g->perm[f];
            if (g->tet == t && back_face == f) throw InvalidInput(where + ": face glued to itself");
            const auto& back = table[g->tet][back_face];
            if (!back || back->tet != t || !(back->perm == g->perm.inverse()))
                throw InvalidInput(where + ": gluing is not involutive");
        }
    }
    Triangulation tri;
    tri.rows_ = table;
    return tri;
}

void Triangulation::join(std::size_t tet, int face, std::size_t other, Perm4 perm) {
    if (tet >= size() || other >= size()) throw InvalidInput("join: tetrahedron out of range");
    if (!perm.valid()) throw InvalidInput("join: invalid permutation");
    int other_face = perm[face];
    if (tet == other && other_face == face) throw InvalidInput("join: face glued to itself");
    if (rows_[tet][face] || rows_[other][other_face]) throw InvalidInput("join: face already glued");
    rows_[tet][face] = Gluing{other, perm};
    rows_[other][other_face] = Gluing{tet, perm.inverse()};
}

void Triangulation::unjoin(std::size_t tet, int face) {
    auto& g = rows_[tet][face];
    if (!g) return;
    rows_[g->tet][g->perm[face]].reset();
    g.reset();
}

void Triangulation::remove_tetrahedra(std::vector<std::size_t> tets) {
    std::vector<bool> dead(size(), false);
    for (std::size_t t : tets) {
        if (t >= size()) throw InvalidInput("remove_tetrahedra: index out of range");
        dead[t] = true;
    }
    std::vector<std::size_t> new_index(size(), 0);
    std::size_t next = 0;
    for (std::size_t t = 0; t < size(); ++t)
        if (!dead[t]) new_index[t] = next++;
    std::vector<GluingRow> out;
    out.reserve(next);
    for (std::size_t t = 0; t < size(); ++t) {
        if (dead[t]) continue;
        GluingRow row = rows_[t];
        for (auto& g : row) {
            if (!g) continue;
            if (dead[g->tet])
                g.reset();
            else
                g->tet = new_index[g->tet];
        }
        out.push_back(row);
    }
    rows_ = std::move(out);
}

std::size_t Triangulation::insert(const Triangulation& other) {
    std::size_t off = size();
    for (GluingRow row : other.rows_) {
        for (auto& g : row)
            if (g) g->tet += off;
        rows_.push_back(row);
    }
    return off;
}

std::size_t Triangulation::boundary_face_slots() const {
    std::size_t k = 0;
    for (const auto& row : rows_)
        for (const auto& g : row)
            if (!g) ++k;
    return k;
}

std::vector<Triangulation> Triangulation::components() const {
    UnionFind uf(size());
    for (std::size_t t = 0; t < size(); ++t)
        for (const auto& g : rows_[t])
            if (g) uf.unite(t, g->tet);
    std::vector<std::size_t> comp_of_root(size(), SIZE_MAX);
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t t = 0; t < size(); ++t) {
        std::size_t r = uf.find(t);
        if (comp_of_root[r] == SIZE_MAX) {
            comp_of_root[r] = members.size();
            members.emplace_back();
        }
        members[comp_of_root[r]].push_back(t);
    }
    std::vector<Triangulation> out;
    std::vector<std::size_t> local(size(), 0);
    for (const auto& m : members) {
        for (std::size_t i = 0; i < m.size(); ++i) local[m[i]] = i;
        Triangulation c(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            c.rows_[i] = rows_[m[i]];
            for (auto& g : c.rows_[i])
                if (g) g->tet = local[g->tet];
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::size_t Triangulation::component_count() const {
    UnionFind uf(size());
    for (std::size_t t = 0; t < size(); ++t)
        for (const auto& g : rows_[t])
            if (g) uf.unite(t, g->tet);
    return uf.set_count();
}

Triangulation Triangulation::relabeled(const std::vector<std::size_t>& tet_map,
                                       const std::vector<Perm4>& vertex_maps) const {
    Triangulation out(size());
    for (std::size_t t = 0; t < size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = rows_[t][f];
            if (!g) continue;
            const Perm4& src = vertex_maps[t];
            const Perm4& dst = vertex_maps[g->tet];
            out.rows_[tet_map[t]][src[f]] = Gluing{tet_map[g->tet], dst * g->perm * src.inverse()};
        }
    }
    return out;
}

}  // namespace tri3
