#pragma once

// Text formats: Mukai vectors "(r,[c1,...,c10;t],s)" (s = a2, i.e. twice
// the third component), NS classes "[c1,...,c10;t]", and the line-oriented
// surface descriptor file.

#include <cctype>
#include <istream>
#include <sstream>
#include <string>

#include "enriques/existence.hpp"

namespace enriques {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw ParseError("expected '" + std::string(1, c) + "' at column " +
                             std::to_string(pos_ + 1));
        ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    Coord integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits)
            throw ParseError("expected integer at column " + std::to_string(start + 1));
        return std::stoll(s_.substr(start, pos_ - start));
    }
    void end() {
        skip_ws();
        if (pos_ < s_.size())
            throw ParseError("trailing characters at column " + std::to_string(pos_ + 1));
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

inline NSClass ns_class_body(Cursor& c, bool with_torsion) {
    NSClass v;
    c.expect('[');
    for (int i = 0; i < kRank; ++i) {
        if (i) c.expect(',');
        v.free[i] = c.integer();
    }
    if (with_torsion || c.peek(';')) {
        c.expect(';');
        Coord t = c.integer();
        if (t != 0 && t != 1) throw ParseError("torsion bit must be 0 or 1");
        v.torsion = static_cast<int>(t);
    }
    c.expect(']');
    return v;
}

}  // namespace detail

inline NSClass parse_ns_class(const std::string& text, bool require_torsion = false) {
    detail::Cursor c(text);
    NSClass v = detail::ns_class_body(c, require_torsion);
    c.end();
    return v;
}

inline MukaiVector parse_mukai(const std::string& text) {
    detail::Cursor c(text);
    c.expect('(');
    Coord r = c.integer();
    c.expect(',');
    NSClass l = detail::ns_class_body(c, true);
    c.expect(',');
    Coord s = c.integer();
    c.expect(')');
    c.end();
    return MukaiVector(r, l, s);
}

inline std::string to_text(const NSClass& v) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < kRank; ++i) {
        if (i) os << ',';
        os << v.free[i];
    }
    os << ';' << v.torsion << ']';
    return os.str();
}

inline std::string to_text(const MukaiVector& v) {
    std::ostringstream os;
    os << '(' << v.r << ',' << to_text(v.c1) << ',' << v.a2 << ')';
    return os.str();
}

// Surface descriptor: line-oriented, '#' comments, keys
//   classical = true|false
//   ample = [10 ints; bit]
//   root = [10 ints]            (repeated)
//   coeff_bound = N
//   height_bound = N
inline SurfaceModel parse_surface_descriptor(std::istream& in) {
    SurfaceModel model;
    bool have_ample = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        key.erase(key.find_last_not_of(" \t") + 1);
        key.erase(0, key.find_first_not_of(" \t"));
        val.erase(0, val.find_first_not_of(" \t"));
        val.erase(val.find_last_not_of(" \t\r") + 1);
        try {
            if (key == "classical") {
                if (val == "true") model.classical = true;
                else if (val == "false") model.classical = false;
                else throw ParseError("classical must be true or false");
            } else if (key == "ample") {
                model.ample = parse_ns_class(val);
                have_ample = true;
            } else if (key == "root") {
                NSClass r = parse_ns_class(val);
                if (r.torsion != 0) throw ParseError("roots are torsion-free");
                model.nodal_roots.push_back(r);
            } else if (key == "coeff_bound") {
                model.coeff_bound = std::stoll(val);
            } else if (key == "height_bound") {
                model.height_bound = std::stoll(val);
            } else {
                throw ParseError("unknown key '" + key + "'");
            }
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!have_ample) throw ParseError("descriptor is missing the 'ample' key");
    return model;
}

}  // namespace enriques
