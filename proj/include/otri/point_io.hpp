#pragma once

// Point file format: one point per line, two whitespace-separated coordinates.
// Lines starting with '#' are comments, blank lines are ignored. Coordinates
// are integers or rationals written "p/q"; rational inputs are cleared of
// denominators by scaling the whole set with the LCM of the denominators
// (collinearity is invariant under uniform scaling).

#include <array>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "otri/geom.hpp"

namespace otri {

struct ParseError : std::runtime_error {
    int line;

    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

struct ParsedPoints {
    PointSet points;
    Int scale;  // 1 unless rational input forced scaling
};

namespace detail {

inline bool digits_only(const std::string& s, std::size_t from) {
    if (from >= s.size()) return false;
    for (std::size_t i = from; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

inline Rat parse_coordinate(const std::string& tok, int line_no) {
    const auto slash = tok.find('/');
    std::string num = slash == std::string::npos ? tok : tok.substr(0, slash);
    const std::size_t sgn = (!num.empty() && (num[0] == '+' || num[0] == '-')) ? 1 : 0;
    if (!digits_only(num, sgn)) throw ParseError(line_no, "bad coordinate '" + tok + "'");
    if (num[0] == '+') num.erase(0, 1);  // cpp_int's parser takes no leading plus
    if (slash == std::string::npos) return Rat(Int(num));

    const std::string den = tok.substr(slash + 1);
    if (!digits_only(den, 0)) throw ParseError(line_no, "bad coordinate '" + tok + "'");
    Int d(den);
    if (d == 0) throw ParseError(line_no, "zero denominator in '" + tok + "'");
    return Rat(Int(num), d);
}

}  // namespace detail

inline ParsedPoints parse_points(std::istream& in) {
    std::vector<std::array<Rat, 2>> raw;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t s = 0;
        while (s < line.size() && std::isspace(static_cast<unsigned char>(line[s]))) ++s;
        if (s == line.size() || line[s] == '#') continue;

        std::istringstream ss(line);
        std::string tx, ty, rest;
        if (!(ss >> tx >> ty) || (ss >> rest))
            throw ParseError(line_no, "expected two coordinates");
        raw.push_back({detail::parse_coordinate(tx, line_no), detail::parse_coordinate(ty, line_no)});
    }

    Int scale = 1;
    for (const auto& c : raw) {
        scale = boost::multiprecision::lcm(scale, denominator(c[0]));
        scale = boost::multiprecision::lcm(scale, denominator(c[1]));
    }
    std::vector<Point> pts;
    pts.reserve(raw.size());
    for (const auto& c : raw)
        pts.push_back(Point{numerator(Rat(c[0] * scale)), numerator(Rat(c[1] * scale))});

    return ParsedPoints{make_point_set(std::move(pts)), scale};
}

inline void write_points(std::ostream& out, const PointSet& X,
                         const std::vector<std::string>& header_comments = {}) {
    for (const auto& h : header_comments) out << "# " << h << "\n";
    for (const auto& p : X) out << p.x.str() << " " << p.y.str() << "\n";
}

}  // namespace otri
