#pragma once

// Line-oriented configuration format: '[section]' headers, 'key = value'
// entries, '#' comments. Hand-editable and diff-friendly; see docs/format.md.

#include "rbd/blowdown.hpp"
#include "rbd/geometry.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace rbd {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CurveDecl {
    std::string name;
    int degree = 0;
    bool rational = false;
    int nodes = 0;
};

struct ConfigFile {
    std::string surface_name;
    std::string base = "CP2";
    bool anticanonical = false;
    std::vector<CurveDecl> curves;
    std::vector<BlowupStep> blowups;
    std::vector<std::pair<std::string, std::vector<std::string>>> chains;
    std::vector<FiberDecl> fibers;
    CurveCombination kw;
    std::vector<std::pair<std::string, Rat>> alpha_entries;  // keys h, e1..eN
    bool has_alpha = false;

    Configuration build() const {
        Configuration cfg;
        cfg.anticanonical_fibered = anticanonical;
        for (const auto& c : curves) cfg.declare_curve(c.name, c.degree, c.rational, c.nodes);
        for (const auto& s : blowups) cfg.apply_blowup(s);
        for (const auto& [name, members] : chains) cfg.add_chain(name, members);
        for (const auto& f : fibers) cfg.add_fiber(f);
        return cfg;
    }

    DivisorClass alpha(std::size_t n) const {
        if (!has_alpha) throw ConfigError("no [alpha] section present");
        DivisorClass a(n);
        for (const auto& [key, v] : alpha_entries) {
            if (den(Rat(v)) != 1) throw ConfigError("[alpha] entries must be integers");
            if (key == "h") {
                a[0] = num(v);
            } else if (key.size() > 1 && key[0] == 'e') {
                std::size_t i = std::stoul(key.substr(1));
                if (i < 1 || i > n) throw ConfigError("[alpha] index out of range: " + key);
                a[i] = num(v);
            } else {
                throw ConfigError("[alpha] keys must be h or e<i>: " + key);
            }
        }
        return a;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

inline std::pair<std::string, int> parse_multiplicity(const std::string& tok, int line_no) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) return {tok, 1};
    try {
        int m = std::stoi(tok.substr(colon + 1));
        return {tok.substr(0, colon), m};
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line_no) + ": bad multiplicity in '" + tok +
                          "'");
    }
}

} // namespace detail

inline ConfigFile parse_config(const std::string& text) {
    ConfigFile cf;
    std::string section;
    bool any_content = false;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw ConfigError("line " + std::to_string(line_no) + ": " + msg);
    };

    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        std::string line = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        any_content = true;

        if (line.front() == '[') {
            if (line.back() != ']') fail("malformed section header");
            section = line.substr(1, line.size() - 2);
            if (section != "surface" && section != "curves" && section != "blowups" &&
                section != "chains" && section != "fibers" && section != "kw" &&
                section != "alpha")
                fail("unknown section [" + section + "]");
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected 'key = value'");
        std::string key = detail::trim(line.substr(0, eq));
        std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty()) fail("empty key");

        if (section == "surface") {
            if (key == "name") cf.surface_name = value;
            else if (key == "base") {
                if (value != "CP2") fail("only base = CP2 is supported");
                cf.base = value;
            } else if (key == "anticanonical") {
                if (value != "true" && value != "false") fail("anticanonical must be true/false");
                cf.anticanonical = (value == "true");
            } else fail("unknown [surface] key '" + key + "'");
        } else if (section == "curves") {
            CurveDecl c;
            c.name = key;
            auto toks = detail::split_ws(value);
            for (std::size_t i = 0; i < toks.size(); ++i) {
                if (toks[i] == "degree") {
                    if (++i >= toks.size()) fail("degree needs a value");
                    c.degree = std::stoi(toks[i]);
                } else if (toks[i] == "rational") {
                    c.rational = true;
                } else if (toks[i] == "nodes") {
                    if (++i >= toks.size()) fail("nodes needs a value");
                    c.nodes = std::stoi(toks[i]);
                } else fail("unknown curve attribute '" + toks[i] + "'");
            }
            if (c.degree < 1) fail("curve " + key + " needs degree >= 1");
            cf.curves.push_back(std::move(c));
        } else if (section == "blowups") {
            BlowupStep s;
            try {
                s.index = std::stoi(key);
            } catch (const std::exception&) {
                fail("blow-up key must be an index");
            }
            if (s.index != static_cast<int>(cf.blowups.size()) + 1)
                fail("blow-up indices must be contiguous from 1");
            auto toks = detail::split_ws(value);
            for (std::size_t i = 0; i < toks.size(); ++i) {
                if (toks[i] == "parent") {
                    if (++i >= toks.size()) fail("parent needs a curve name");
                    s.parent = toks[i];
                } else if (toks[i] == "complex") {
                    s.real_point = false;
                } else {
                    s.through.push_back(detail::parse_multiplicity(toks[i], line_no));
                }
            }
            cf.blowups.push_back(std::move(s));
        } else if (section == "chains") {
            cf.chains.emplace_back(key, detail::split_ws(value));
        } else if (section == "fibers") {
            FiberDecl f;
            f.name = key;
            for (const auto& t : detail::split_ws(value))
                f.components.push_back(detail::parse_multiplicity(t, line_no));
            cf.fibers.push_back(std::move(f));
        } else if (section == "kw") {
            cf.kw.emplace_back(key, parse_rational(value));
        } else if (section == "alpha") {
            cf.has_alpha = true;
            cf.alpha_entries.emplace_back(key, parse_rational(value));
        } else {
            fail("entry outside any section");
        }
    }
    if (!any_content) throw ConfigError("empty configuration file");
    return cf;
}

inline ConfigFile load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

inline std::string serialize_config(const ConfigFile& cf) {
    std::ostringstream out;
    out << "[surface]\n";
    out << "name = " << cf.surface_name << "\n";
    out << "base = " << cf.base << "\n";
    if (cf.anticanonical) out << "anticanonical = true\n";
    out << "\n[curves]\n";
    for (const auto& c : cf.curves) {
        out << c.name << " = degree " << c.degree;
        if (c.rational) out << " rational";
        if (c.nodes > 0) out << " nodes " << c.nodes;
        out << "\n";
    }
    out << "\n[blowups]\n";
    for (const auto& s : cf.blowups) {
        out << s.index << " =";
        for (const auto& [name, m] : s.through) {
            out << " " << name;
            if (m != 1) out << ":" << m;
        }
        if (s.parent) out << " parent " << *s.parent;
        if (!s.real_point) out << " complex";
        out << "\n";
    }
    out << "\n[chains]\n";
    for (const auto& [name, members] : cf.chains) {
        out << name << " =";
        for (const auto& m : members) out << " " << m;
        out << "\n";
    }
    if (!cf.fibers.empty()) {
        out << "\n[fibers]\n";
        for (const auto& f : cf.fibers) {
            out << f.name << " =";
            for (const auto& [name, m] : f.components) {
                out << " " << name;
                if (m != 1) out << ":" << m;
            }
            out << "\n";
        }
    }
    if (!cf.kw.empty()) {
        out << "\n[kw]\n";
        for (const auto& [name, v] : cf.kw) out << name << " = " << rat_to_string(v) << "\n";
    }
    if (cf.has_alpha) {
        out << "\n[alpha]\n";
        for (const auto& [k, v] : cf.alpha_entries)
            out << k << " = " << rat_to_string(v) << "\n";
    }
    return out.str();
}

} // namespace rbd
