#include "tri3/angles.hpp"

#include <algorithm>
#include <sstream>

#include "tri3/skeleton.hpp"

namespace tri3 {

bool AngleStructure::taut() const {
    return std::all_of(angles.begin(), angles.end(), [](const Rational& a) { return a == 0 || a == 1; });
}

std::string AngleStructure::str() const {
    std::ostringstream os;
    for (std::size_t t = 0; t < tetrahedra(); ++t) {
        if (t) os << " || ";
        os << angle(t, 0) << " ; " << angle(t, 1) << " ; " << angle(t, 2);
    }
    return os.str();
}

namespace {

void require_cusped(const Skeleton& sk) {
    for (const VertexInfo& v : sk.vertices) {
        if (v.link.type != LinkType::Torus && v.link.type != LinkType::KleinBottle)
            throw PreconditionError("angle structures: every vertex link must be a torus or Klein bottle");
    }
}

}  // namespace

ConeProblem angle_system(const Triangulation& tri, bool taut) {
    Skeleton sk = compute_skeleton(tri);
    require_cusped(sk);
    std::size_t n = tri.size();
    ConeProblem p;
    p.dim = 3 * n + 1;
    for (std::size_t t = 0; t < n; ++t) {
        std::vector<Integer> row(p.dim, 0);
        for (int k = 0; k < 3; ++k) row[3 * t + k] = 1;
        row[3 * n] = -1;
        p.rows.push_back(std::move(row));
    }
    for (const EdgeInfo& e : sk.edges) {
        std::vector<Integer> row(p.dim, 0);
        for (const EdgeEmbedding& emb : e.embeddings) row[3 * emb.tet + angle_pair(emb.perm[0], emb.perm[1])] += 1;
        row[3 * n] = -2;
        p.rows.push_back(std::move(row));
    }
    if (taut) {
        p.filter = [n](const Bits& s) {
            for (std::size_t t = 0; t < n; ++t) {
                if (int(s[3 * t]) + int(s[3 * t + 1]) + int(s[3 * t + 2]) > 1) return false;
            }
            return true;
        };
    }
    return p;
}

bool satisfies_angle_equations(const Triangulation& tri, const AngleStructure& s) {
    if (s.angles.size() != 3 * tri.size()) return false;
    for (const Rational& a : s.angles) {
        if (a < 0) return false;
    }
    for (std::size_t t = 0; t < tri.size(); ++t) {
        if (s.angle(t, 0) + s.angle(t, 1) + s.angle(t, 2) != 1) return false;
    }
    Skeleton sk = compute_skeleton(tri);
    for (const EdgeInfo& e : sk.edges) {
        Rational sum = 0;
        for (const EdgeEmbedding& emb : e.embeddings) sum += s.angle(emb.tet, angle_pair(emb.perm[0], emb.perm[1]));
        if (sum != 2) return false;
    }
    return true;
}

namespace {

std::vector<AngleStructure> dehomogenize(const std::vector<Ray>& rays, std::size_t n) {
    std::vector<AngleStructure> out;
    for (const Ray& r : rays) {
        const Integer& z = r.v[3 * n];
        if (z == 0) continue;
        AngleStructure s;
        for (std::size_t i = 0; i < 3 * n; ++i) s.angles.emplace_back(r.v[i], z);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<AngleStructure> enumerate_vertex_angle_structures(const Triangulation& tri) {
    return dehomogenize(enumerate_extreme_rays(angle_system(tri)), tri.size());
}

std::vector<AngleStructure> enumerate_taut(const Triangulation& tri) {
    auto all = dehomogenize(enumerate_extreme_rays(angle_system(tri, true)), tri.size());
    std::erase_if(all, [](const AngleStructure& s) { return !s.taut(); });
    return all;
}

}  // namespace tri3
