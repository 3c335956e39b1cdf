#include "nsurf/triangulation.hpp"

#include <fstream>
#include <sstream>
#include <tuple>

namespace nsurf {

void Triangulation::glue(int tet, int face, const Gluing& g) {
    const int n = size();
    if (tet < 0 || tet >= n || g.tet < 0 || g.tet >= n)
        throw std::invalid_argument("tetrahedron index out of range");
    if (face < 0 || face > 3 || g.face < 0 || g.face > 3)
        throw std::invalid_argument("face index out of range");
    if (g.perm[face] != g.face)
        throw std::invalid_argument("permutation does not map face " + std::to_string(face) +
                                    " onto face " + std::to_string(g.face));
    if (tet == g.tet && face == g.face && g.perm.is_identity())
        throw std::invalid_argument("face glued to itself via the identity");
    auto& fwd = glue_[static_cast<std::size_t>(tet) * 4 + face];
    auto& bwd = glue_[static_cast<std::size_t>(g.tet) * 4 + g.face];
    if (fwd || (&fwd != &bwd && bwd))
        throw std::invalid_argument("face glued twice");
    if (tet == g.tet && face == g.face) {
        // A face glued to itself: the permutation must be an involution.
        if (!(g.perm * g.perm).is_identity())
            throw std::invalid_argument("self-gluing is not involutive");
        fwd = g;
    } else {
        fwd = g;
        bwd = Gluing{tet, face, g.perm.inverse()};
    }
}

std::string Triangulation::to_text() const {
    std::ostringstream out;
    if (!name_.empty()) out << "# " << name_ << "\n";
    out << "tets " << size() << "\n";
    for (int i = 0; i < size(); ++i) {
        out << "tet " << i << ":";
        for (int f = 0; f < 4; ++f) {
            const auto& g = gluing(i, f);
            if (g)
                out << " " << g->tet << ":" << g->perm.str();
            else
                out << " bdry";
        }
        out << "\n";
    }
    return out.str();
}

namespace {

// Gluing as written in the file: target tet + permutation (target face is
// implied by perm[face]).
struct RawGluing {
    int tet;
    Perm4 perm;
};

}  // namespace

Triangulation parse_triangulation(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    // (line number, tet, face, gluing) in file order.
    std::vector<std::tuple<int, int, int, RawGluing>> raw;
    std::vector<bool> seen;

    auto fail = [&](const std::string& msg) -> void { throw ParseError(lineno, msg); };

    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line;
        if (auto pos = stripped.find('#'); pos != std::string::npos) stripped.resize(pos);
        std::istringstream ls(stripped);
        std::string word;
        if (!(ls >> word)) continue;  // blank or comment-only line

        if (word == "tets") {
            if (n >= 0) fail("duplicate 'tets' header");
            if (!(ls >> n) || n < 1) fail("expected 'tets <n>' with n >= 1");
            seen.assign(static_cast<std::size_t>(n), false);
            continue;
        }
        if (word != "tet") fail("expected 'tet <i>: ...' or 'tets <n>'");
        if (n < 0) fail("'tet' line before 'tets <n>' header");

        std::string idx;
        if (!(ls >> idx) || idx.empty() || idx.back() != ':')
            fail("expected 'tet <i>:'");
        int i = -1;
        try {
            i = std::stoi(idx.substr(0, idx.size() - 1));
        } catch (const std::exception&) {
            fail("bad tetrahedron index '" + idx + "'");
        }
        if (i < 0 || i >= n) fail("tetrahedron index out of range");
        if (seen[i]) fail("duplicate line for tet " + std::to_string(i));
        seen[i] = true;

        for (int f = 0; f < 4; ++f) {
            std::string tok;
            if (!(ls >> tok)) fail("expected 4 gluing entries");
            if (tok == "bdry") continue;
            auto colon = tok.find(':');
            if (colon == std::string::npos) fail("expected 'j:p' or 'bdry', got '" + tok + "'");
            int j = -1;
            try {
                j = std::stoi(tok.substr(0, colon));
            } catch (const std::exception&) {
                fail("bad target tetrahedron in '" + tok + "'");
            }
            if (j < 0 || j >= n) fail("target tetrahedron out of range in '" + tok + "'");
            auto p = Perm4::parse(tok.substr(colon + 1));
            if (!p) fail("bad permutation in '" + tok + "'");
            raw.emplace_back(lineno, i, f, RawGluing{j, *p});
        }
        std::string extra;
        if (ls >> extra) fail("trailing data '" + extra + "'");
    }
    if (n < 0) throw ParseError(lineno, "missing 'tets <n>' header");
    for (int i = 0; i < n; ++i)
        if (!seen[i]) throw ParseError(lineno, "missing line for tet " + std::to_string(i));

    Triangulation tri(n, name);
    // First pass: place each gluing; second pass below checks involutivity.
    std::vector<std::optional<Gluing>> want(static_cast<std::size_t>(n) * 4);
    for (const auto& [ln, i, f, rg] : raw) {
        lineno = ln;
        const int g = rg.perm[f];
        if (want[static_cast<std::size_t>(i) * 4 + f])
            throw ParseError(ln, "face glued twice");
        want[static_cast<std::size_t>(i) * 4 + f] = Gluing{rg.tet, g, rg.perm};
    }
    for (const auto& [ln, i, f, rg] : raw) {
        const Gluing& fwd = *want[static_cast<std::size_t>(i) * 4 + f];
        const auto& bwd = want[static_cast<std::size_t>(fwd.tet) * 4 + fwd.face];
        if (!bwd || bwd->tet != i || bwd->face != f || bwd->perm != fwd.perm.inverse())
            throw ParseError(ln, "non-involutive gluing: (" + std::to_string(i) + "," +
                                     std::to_string(f) + ") -> (" + std::to_string(fwd.tet) +
                                     "," + std::to_string(fwd.face) +
                                     ") lacks the matching inverse entry");
    }
    // Install through glue() to run the remaining validity checks.
    for (const auto& [ln, i, f, rg] : raw) {
        if (tri.gluing(i, f)) continue;  // inverse side already installed
        try {
            tri.glue(i, f, *want[static_cast<std::size_t>(i) * 4 + f]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(ln, e.what());
        }
    }
    return tri;
}

Triangulation load_triangulation(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string name = path;
    if (auto pos = name.find_last_of('/'); pos != std::string::npos) name = name.substr(pos + 1);
    if (auto pos = name.rfind(".tri"); pos != std::string::npos && pos == name.size() - 4)
        name = name.substr(0, pos);
    return parse_triangulation(buf.str(), name);
}

}  // namespace nsurf
