#pragma once

#include <cctype>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cstri/complex.hpp"
#include "cstri/tower.hpp"

namespace cstri {

// Complex files ("scx 1"):
//   scx 1
//   dim <d>
//   vertices <n>
//   sigma antipodal          (optional: declares the involution v -> -v)
//   <facet lines: space-separated signed labels, ascending>
// Facet lines are sorted lexicographically; '#' starts a comment line.
// Parsing then serializing a canonical file reproduces it byte for byte.
//
// Tower files ("tcx 1") hold one complex per level plus the certificate
// sections "ball_B <level>", "ball_D <level>" (facet lines) and
// "apex <level> <vertex>".

struct NamedComplex {
    SimplicialComplex complex;
    bool antipodal_sigma = false;
};

inline std::string serialize_complex(const SimplicialComplex& c, bool antipodal_sigma) {
    std::ostringstream out;
    out << "scx 1\n";
    out << "dim " << c.dim() << "\n";
    out << "vertices " << c.vertex_count() << "\n";
    if (antipodal_sigma) out << "sigma antipodal\n";
    for (const auto& f : c.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out << ' ';
            out << f[i];
        }
        out << '\n';
    }
    return out.str();
}

namespace detail {

inline bool blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

inline long long parse_int(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (...) {
        fail("parse", "expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) fail("parse", "trailing characters in integer '" + s + "'");
    return v;
}

inline Face parse_facet_line(const std::vector<std::string>& ts) {
    Face f;
    for (const auto& t : ts) f.push_back(static_cast<Vertex>(parse_int(t)));
    return f;
}

struct LineReader {
    std::vector<std::string> lines;
    std::size_t pos = 0;

    explicit LineReader(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (!blank_or_comment(line)) lines.push_back(line);
        }
    }

    bool done() const { return pos >= lines.size(); }
    const std::string& peek() const { return lines[pos]; }
    std::string next() { return lines[pos++]; }
};

inline NamedComplex parse_complex_body(LineReader& in) {
    if (in.done() || tokens(in.peek()) != std::vector<std::string>{"scx", "1"})
        fail("parse", "expected 'scx 1' header");
    in.next();
    auto expect_kv = [&](const std::string& key) {
        if (in.done()) fail("parse", "unexpected end of file, expected '" + key + "'");
        auto ts = tokens(in.next());
        if (ts.size() != 2 || ts[0] != key) fail("parse", "expected '" + key + " <value>'");
        return parse_int(ts[1]);
    };
    const long long dim = expect_kv("dim");
    const long long nvertices = expect_kv("vertices");
    NamedComplex out;
    if (!in.done() && tokens(in.peek()) == std::vector<std::string>{"sigma", "antipodal"}) {
        out.antipodal_sigma = true;
        in.next();
    }
    std::vector<Face> facets;
    while (!in.done()) {
        auto ts = tokens(in.peek());
        if (ts.empty()) break;
        if (!(isdigit(static_cast<unsigned char>(ts[0][0])) || ts[0][0] == '-')) break;
        in.next();
        facets.push_back(parse_facet_line(ts));
    }
    try {
        out.complex = SimplicialComplex::from_facets(std::move(facets));
    } catch (const Error& e) {
        fail("parse", e.what());
    }
    if (out.complex.dim() != dim)
        fail("parse", "declared dim " + std::to_string(dim) + " but facets give " +
                          std::to_string(out.complex.dim()));
    if (out.complex.vertex_count() != nvertices)
        fail("parse", "declared vertices " + std::to_string(nvertices) + " but facets give " +
                          std::to_string(out.complex.vertex_count()));
    return out;
}

}  // namespace detail

inline NamedComplex parse_complex(const std::string& text) {
    detail::LineReader in(text);
    NamedComplex out = detail::parse_complex_body(in);
    if (!in.done()) fail("parse", "trailing content after facet lines: '" + in.peek() + "'");
    return out;
}

inline std::string serialize_tower(const Tower& t) {
    std::ostringstream out;
    out << "tcx 1\n";
    out << "levels " << t.levels.size() << "\n";
    auto facet_lines = [&out](const SimplicialComplex& c) {
        for (const auto& f : c.facets()) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (i) out << ' ';
                out << f[i];
            }
            out << '\n';
        }
    };
    for (std::size_t i = 0; i < t.levels.size(); ++i) {
        const TowerLevel& lvl = t.levels[i];
        out << "level " << i << "\n";
        out << serialize_complex(lvl.sphere, true);
        out << "ball_B " << i << "\n";
        facet_lines(lvl.cert.ball_b);
        out << "ball_D " << i << "\n";
        facet_lines(lvl.cert.ball_d);
        out << "apex " << i << " " << lvl.cert.apex << "\n";
    }
    return out.str();
}

inline Tower parse_tower(const std::string& text) {
    detail::LineReader in(text);
    if (in.done() || detail::tokens(in.next()) != std::vector<std::string>{"tcx", "1"})
        fail("parse", "expected 'tcx 1' header");
    {
        auto ts = detail::tokens(in.next());
        if (ts.size() != 2 || ts[0] != "levels") fail("parse", "expected 'levels <n>'");
    }
    Tower t;
    auto read_facets = [&in]() {
        std::vector<Face> fs;
        while (!in.done()) {
            auto ts = detail::tokens(in.peek());
            if (ts.empty() || !(isdigit(static_cast<unsigned char>(ts[0][0])) || ts[0][0] == '-')) break;
            in.next();
            fs.push_back(detail::parse_facet_line(ts));
        }
        return fs;
    };
    while (!in.done()) {
        auto ts = detail::tokens(in.next());
        if (ts.size() != 2 || ts[0] != "level")
            fail("parse", "expected 'level <i>'");
        const long long idx = detail::parse_int(ts[1]);
        if (idx != static_cast<long long>(t.levels.size()))
            fail("parse", "levels must be contiguous from 0");
        TowerLevel lvl;
        lvl.sphere = detail::parse_complex_body(in).complex;
        auto expect_section = [&](const std::string& key) {
            if (in.done()) fail("parse", "unexpected end of file, expected '" + key + "'");
            auto st = detail::tokens(in.next());
            if (st.size() < 2 || st[0] != key || detail::parse_int(st[1]) != idx)
                fail("parse", "expected '" + key + " " + std::to_string(idx) + "'");
            return st;
        };
        expect_section("ball_B");
        lvl.cert.ball_b = SimplicialComplex::from_facets(read_facets());
        expect_section("ball_D");
        lvl.cert.ball_d = SimplicialComplex::from_facets(read_facets());
        auto apex_line = expect_section("apex");
        if (apex_line.size() != 3) fail("parse", "expected 'apex <level> <vertex>'");
        lvl.cert.apex = static_cast<Vertex>(detail::parse_int(apex_line[2]));
        if (idx >= 2) {
            // contraction counts are not serialized; restore from the recursion
            lvl.contractions = 2 * t.levels[static_cast<std::size_t>(idx - 1)].cert.ball_d.vertex_count();
        }
        t.levels.push_back(std::move(lvl));
    }
    if (t.levels.empty()) fail("parse", "tower file has no levels");
    return t;
}

inline bool looks_like_tower(const std::string& text) {
    detail::LineReader in(text);
    return !in.done() && detail::tokens(in.peek()) == std::vector<std::string>{"tcx", "1"};
}

}  // namespace cstri
