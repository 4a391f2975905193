#include "tri3/text_io.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace tri3 {

namespace {

// Column order of the text format: faces 012, 013, 023, 123.
constexpr int kColumnFace[4] = {3, 2, 1, 0};

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        return true;
    }
    return false;
}

std::optional<Gluing> parse_field(const std::string& field, int face, std::size_t n) {
    if (field == "-") return std::nullopt;
    auto open = field.find('(');
    if (open == std::string::npos || open == 0 || field.size() != open + 5 || field.back() != ')')
        throw InvalidInput("malformed gluing field: " + field);
    std::size_t tet = 0;
    try {
        std::size_t used = 0;
        tet = std::stoul(field.substr(0, open), &used);
        if (used != open) throw InvalidInput("");
    } catch (...) {
        throw InvalidInput("malformed tetrahedron index: " + field);
    }
    if (tet >= n) throw InvalidInput("tetrahedron index out of range: " + field);
    std::array<int, 4> img{-1, -1, -1, -1};
    bool used[4] = {};
    int k = 0;
    for (int v = 0; v < 4; ++v) {
        if (v == face) continue;
        char ch = field[open + 1 + k++];
        if (ch < '0' || ch > '3') throw InvalidInput("malformed vertex image: " + field);
        int x = ch - '0';
        if (used[x]) throw InvalidInput("repeated vertex image: " + field);
        used[x] = true;
        img[v] = x;
    }
    for (int x = 0; x < 4; ++x)
        if (!used[x]) img[face] = x;
    return Gluing{tet, Perm4(img[0], img[1], img[2], img[3])};
}

}  // namespace

Triangulation read_gluing_table(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw InvalidInput("missing 'tets N' header");
    std::istringstream header(line);
    std::string word;
    long long n = -1;
    if (!(header >> word >> n) || word != "tets" || n < 0) throw InvalidInput("expected 'tets N' header");
    std::vector<GluingRow> rows(static_cast<std::size_t>(n));
    for (auto& row : rows) {
        if (!next_content_line(in, line)) throw InvalidInput("too few tetrahedron lines");
        std::istringstream fields(line);
        for (int col = 0; col < 4; ++col) {
            std::string field;
            if (!(fields >> field)) throw InvalidInput("expected four fields per line");
            int face = kColumnFace[col];
            row[face] = parse_field(field, face, rows.size());
        }
        std::string extra;
        if (fields >> extra) throw InvalidInput("too many fields on line");
    }
    if (next_content_line(in, line)) throw InvalidInput("trailing content after table");
    return Triangulation::from_gluings(rows);
}

Triangulation parse_gluing_table(const std::string& text) {
    std::istringstream in(text);
    return read_gluing_table(in);
}

std::string format_gluing_table(const Triangulation& tri) {
    std::ostringstream out;
    out << "tets " << tri.size() << '\n';
    for (std::size_t t = 0; t < tri.size(); ++t) {
        for (int col = 0; col < 4; ++col) {
            int face = kColumnFace[col];
            if (col) out << ' ';
            const auto& g = tri.gluing(t, face);
            if (!g) {
                out << '-';
                continue;
            }
            out << g->tet << '(';
            for (int v = 0; v < 4; ++v)
                if (v != face) out << static_cast<int>(g->perm[v]);
            out << ')';
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace tri3
