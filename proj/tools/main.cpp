#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tri3/angles.hpp"
#include "tri3/census.hpp"
#include "tri3/highlevel.hpp"
#include "tri3/homology.hpp"
#include "tri3/isosig.hpp"
#include "tri3/normal.hpp"
#include "tri3/simplify.hpp"
#include "tri3/skeleton.hpp"
#include "tri3/text_io.hpp"

using namespace tri3;

namespace {

enum Exit { Ok = 0, Usage = 1, Rejected = 2, Internal = 3 };

// A gluing-table file (recognised by its `tets N` header) or a signature.
Triangulation load(const std::string& input) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(input, ec)) {
        std::ifstream in(input);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        std::istringstream probe(text);
        std::string word;
        while (probe >> word && word.starts_with("#")) std::getline(probe, word);
        if (word == "tets") return parse_gluing_table(text);
        throw InvalidInput("file has no `tets N` header: " + input);
    }
    return from_isosig(input);
}

std::string recognize(const Triangulation& tri) {
    Classification c = classify(tri);
    if (!c.valid || !c.connected || !c.orientable || c.ideal) return "unrecognized";
    if (c.bounded) return is_ball(tri) ? "B3" : "unrecognized";
    if (is_three_sphere(tri)) return "S3";
    DecompositionResult d = connected_sum_decomposition(tri);
    std::string out = "connected-sum: [";
    for (std::size_t i = 0; i < d.summands.size(); ++i) {
        if (i) out += ", ";
        out += isosig(d.summands[i]);
    }
    out += "] + " + std::to_string(d.appended_s2xs1) + "×S2xS1 + " + std::to_string(d.appended_rp3) + "×RP3 + " +
           std::to_string(d.appended_l31) + "×L(3,1)";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangulated 3-manifold toolkit"};
    app.require_subcommand(1);
    unsigned jobs = 0;
    app.add_option("--jobs", jobs, "Worker thread cap (0 = hardware concurrency)");

    std::string input;

    auto* census = app.add_subcommand("census", "Enumerate triangulations up to isomorphism");
    CensusSpec spec;
    std::string sigs_file;
    census->add_option("--tetrahedra,-n", spec.n, "Number of tetrahedra")->required();
    census->add_flag("--internal", spec.internal, "Every face glued");
    census->add_flag("--orientable", spec.orientable, "Orientable only");
    census->add_flag("--finite", spec.finite, "No ideal vertices");
    census->add_option("--sigs", sigs_file, "Write one signature per line to this file");

    auto* simplify = app.add_subcommand("simplify", "Reduce the number of tetrahedra");
    bool exhaustive = false;
    std::size_t height = 2;
    std::uint64_t seed = 0;
    simplify->add_option("input", input, "Signature or gluing-table file")->required();
    simplify->add_flag("--exhaustive", exhaustive, "Follow with a breadth-first 2-3/3-2 search");
    simplify->add_option("--height", height, "Extra tetrahedra allowed in the search");
    simplify->add_option("--seed", seed, "Random seed");

    auto* surfaces = app.add_subcommand("surfaces", "Vertex normal surfaces");
    std::string coords = "standard";
    surfaces->add_option("input", input, "Signature or gluing-table file")->required();
    surfaces->add_option("--coords", coords, "Coordinate system")
        ->check(CLI::IsMember({"standard", "quad", "standardan", "quadoct"}));

    auto* angles = app.add_subcommand("angles", "Vertex or taut angle structures");
    bool taut = false, all = false;
    angles->add_option("input", input, "Signature or gluing-table file")->required();
    auto* taut_flag = angles->add_flag("--taut", taut, "Taut structures only (default)");
    angles->add_flag("--all", all, "All vertex angle structures")->excludes(taut_flag);

    auto* recog = app.add_subcommand("recognize", "Recognise S3, B3 or a connected sum decomposition");
    recog->add_option("input", input, "Signature or gluing-table file")->required();

    auto* homology = app.add_subcommand("homology", "First homology group");
    homology->add_option("input", input, "Signature or gluing-table file")->required();

    auto* sig = app.add_subcommand("isosig", "Encode or decode isomorphism signatures");
    std::string encode, decode;
    auto* enc = sig->add_option("--encode", encode, "Gluing-table file (or signature) to encode");
    sig->add_option("--decode", decode, "Signature to decode into a gluing table")->excludes(enc);
    sig->require_option(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Usage;
    }

    try {
        if (*census) {
            auto sigs = enumerate_census(spec, jobs);
            if (!sigs_file.empty()) {
                std::ofstream out(sigs_file);
                if (!out) throw InvalidInput("cannot write " + sigs_file);
                for (const auto& s : sigs) out << s << '\n';
            }
            std::cout << "Total triangulations: " << sigs.size() << '\n';
        } else if (*simplify) {
            Triangulation tri = load(input);
            SimplifyReport rep = simplify_fast(tri, {seed});
            Triangulation result = rep.result;
            if (exhaustive) {
                for (;;) {
                    SimplifyReport ex = simplify_exhaustive(result, height, jobs, seed);
                    if (!ex.success || ex.final_n >= result.size()) break;
                    result = ex.result;
                }
            }
            std::cout << "n: " << tri.size() << " -> " << result.size() << '\n' << isosig(result) << '\n';
        } else if (*surfaces) {
            Triangulation tri = load(input);
            CoordSystem sys = coords == "standard" ? CoordSystem::Standard
                              : coords == "quad"   ? CoordSystem::Quad
                              : coords == "standardan" ? CoordSystem::StandardAlmostNormal
                                                       : CoordSystem::QuadOct;
            auto list = enumerate_vertex_surfaces(tri, sys);
            std::cout << list.size() << " vertex normal surfaces\n";
            for (const auto& s : list) std::cout << s.str() << '\n';
        } else if (*angles) {
            Triangulation tri = load(input);
            auto list = all ? enumerate_vertex_angle_structures(tri) : enumerate_taut(tri);
            std::cout << list.size() << (all ? " vertex angle structures\n" : " taut angle structures\n");
            for (const auto& s : list) std::cout << s.str() << '\n';
        } else if (*recog) {
            std::cout << recognize(load(input)) << '\n';
        } else if (*homology) {
            std::cout << first_homology(load(input)).str() << '\n';
        } else if (*sig) {
            if (!decode.empty())
                std::cout << format_gluing_table(from_isosig(decode));
            else
                std::cout << isosig(load(encode)) << '\n';
        }
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Usage;
    } catch (const PreconditionError& e) {
        std::cerr << "rejected: " << e.what() << '\n';
        return Rejected;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return Internal;
    }
    return Ok;
}
