#include "doctest.h"
#include "fixtures.hpp"
#include "tri3/census.hpp"
#include "tri3/homology.hpp"
#include "tri3/isosig.hpp"
#include "tri3/simplify.hpp"

using namespace tri3;

namespace {

Triangulation one_vertex_census(std::size_t n, const std::string& h1) {
    for (const auto& s : enumerate_census({n, true, true, true})) {
        Triangulation t = from_isosig(s);
        if (compute_skeleton(t).vertices.size() == 1 && first_homology(t).str() == h1) return t;
    }
    throw std::runtime_error("not found");
}

}  // namespace

TEST_CASE("simplify leaves minimal projective space alone") {
    auto rep = simplify_fast(fixtures::rp3(), {});
    CHECK(rep.final_n == 2);
    CHECK(enumerate_moves(fixtures::rp3(), {MoveType::CollapseEdge, MoveType::Pachner32, MoveType::TwoZeroEdge,
                                            MoveType::TwoOneEdge, MoveType::TwoZeroVertex, MoveType::Shell})
              .empty());
}

TEST_CASE("simplify undoes a 2-3 move") {
    auto up = perform_move(fixtures::rp3(), enumerate_moves(fixtures::rp3(), {MoveType::Pachner23}).front());
    auto rep = simplify_fast(up, {});
    CHECK(rep.final_n == 2);
    CHECK(replay_moves(up, rep.moves_applied) == rep.result);
    CHECK(simplify_fast(fixtures::single_tet(), {}).final_n == 1);
}

TEST_CASE("simplify is safe and replayable on the small census") {
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& s : enumerate_census({n, true, false, true})) {
            Triangulation t = from_isosig(s);
            SimplifyOptions opts;
            opts.seed = 11;
            auto rep = simplify_fast(t, opts);
            CAPTURE(s);
            CHECK(rep.final_n <= n);
            CHECK(first_homology(rep.result) == first_homology(t));
            CHECK(classify(rep.result).orientable == classify(t).orientable);
            CHECK(classify(rep.result).closed);
            CHECK(replay_moves(t, rep.moves_applied) == rep.result);
            CHECK(simplify_fast(t, opts).result == rep.result);
        }
}

TEST_CASE("exhaustive simplification") {
    auto rp3 = one_vertex_census(2, "Z_2");
    auto rep = simplify_exhaustive(rp3, 2);
    CHECK_FALSE(rep.success);
    CHECK(rep.final_n == 2);

    auto s3 = one_vertex_census(2, "0");
    std::mt19937 rng(3);
    Triangulation big = s3;
    for (int i = 0; i < 5; ++i) {
        auto ups = enumerate_moves(big, {MoveType::Pachner23});
        big = perform_move(big, ups[rng() % ups.size()]);
    }
    auto r = simplify_exhaustive(big, 2);
    CHECK(r.success);
    CHECK(r.final_n < big.size());
    CHECK(first_homology(r.result).trivial());
    CHECK(replay_moves(big, r.moves_applied) == r.result);
    CHECK_THROWS_AS(simplify_exhaustive(fixtures::rp3(), 2), PreconditionError);
}
