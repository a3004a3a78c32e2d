#include "crwp/config.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <sstream>

namespace crwp {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_on(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

struct Line {
    std::size_t number;
    std::string text;
};

struct RawComponent {
    std::size_t line = 0;
    std::string name;
    std::vector<std::string> group_spec;
    std::size_t group_line = 0;
    std::string identity;
    std::vector<std::pair<std::string, std::vector<std::string>>> table;
    std::vector<std::string> generators;
    std::size_t num_i = 0, num_lambda = 0;
    bool sized = false;
    std::vector<Line> rows;
    std::vector<Line> gens;
};

struct RawMap {
    std::size_t line = 0;
    std::string upper, lower;
    std::vector<Line> images;
};

std::size_t parse_index(const std::string& tok, std::size_t bound, std::size_t line, const char* what) {
    std::size_t v = 0;
    try {
        std::size_t used = 0;
        v = std::stoul(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
    }
    if (v < 1 || v > bound) throw ParseError(line, std::string(what) + " " + tok + " out of range");
    return v - 1;
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
    return parse_index(tok, static_cast<std::size_t>(-2), line, "size");
}

std::shared_ptr<const GroupOracle> build_group(const RawComponent& rc) {
    const std::size_t line = rc.group_line;
    if (rc.group_spec.empty()) throw ParseError(rc.line, "component '" + rc.name + "' has no group line");
    try {
        if (rc.group_spec[0] == "free") {
            return std::make_shared<const GroupOracle>(
                GroupOracle::free(std::vector<std::string>(rc.group_spec.begin() + 1, rc.group_spec.end())));
        }
        if (rc.group_spec[0] != "finite") throw ParseError(line, "group kind must be 'free' or 'finite'");
        std::vector<std::string> names(rc.group_spec.begin() + 1, rc.group_spec.end());
        std::map<std::string, std::size_t> index;
        for (std::size_t k = 0; k < names.size(); ++k) index.emplace(names[k], k);
        auto lookup = [&](const std::string& n) {
            auto it = index.find(n);
            if (it == index.end()) throw ParseError(line, "unknown group element '" + n + "'");
            return it->second;
        };
        if (rc.identity.empty()) throw ParseError(line, "finite group needs an 'identity' line");
        std::vector<std::vector<std::size_t>> table(names.size());
        std::vector<bool> have(names.size(), false);
        for (const auto& [row, entries] : rc.table) {
            std::size_t r = lookup(row);
            if (have[r]) throw ParseError(line, "table row '" + row + "' given twice");
            have[r] = true;
            for (const auto& e : entries) table[r].push_back(lookup(e));
        }
        for (std::size_t k = 0; k < names.size(); ++k)
            if (!have[k]) throw ParseError(line, "table row for '" + names[k] + "' is missing");
        std::vector<std::size_t> gens;
        for (const auto& g : rc.generators) gens.push_back(lookup(g));
        return std::make_shared<const GroupOracle>(GroupOracle::finite(names, lookup(rc.identity), table, gens));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(line, "component '" + rc.name + "': " + e.what());
    }
}

}  // namespace

CRSemigroup parse_config(std::string_view text, const LoadOptions& options) {
    std::vector<std::string> names;
    std::vector<Line> meet_lines;
    std::size_t semilattice_line = 0;
    std::vector<RawComponent> comps;
    std::vector<RawMap> maps;
    enum class Section { None, Semilattice, Component, Map } section = Section::None;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(number, "unterminated section header");
            auto head = split_tokens(std::string_view(line).substr(1, line.size() - 2));
            if (head.size() == 1 && head[0] == "semilattice") {
                if (semilattice_line) throw ParseError(number, "second [semilattice] section");
                semilattice_line = number;
                section = Section::Semilattice;
            } else if (head.size() == 2 && head[0] == "component") {
                for (const auto& c : comps)
                    if (c.name == head[1]) throw ParseError(number, "component '" + head[1] + "' defined twice");
                comps.push_back({});
                comps.back().line = number;
                comps.back().name = head[1];
                section = Section::Component;
            } else if (head.size() == 3 && head[0] == "map") {
                maps.push_back({number, head[1], head[2], {}});
                section = Section::Map;
            } else {
                throw ParseError(number, "unknown section '" + line + "'");
            }
            continue;
        }
        const auto toks = split_tokens(line);
        const std::string& key = toks[0];
        switch (section) {
            case Section::None:
                throw ParseError(number, "content outside any section");
            case Section::Semilattice:
                if (key == "names") {
                    if (!names.empty()) throw ParseError(number, "second 'names' line");
                    names.assign(toks.begin() + 1, toks.end());
                } else if (key == "meet") {
                    meet_lines.push_back({number, line});
                } else {
                    throw ParseError(number, "unknown key '" + key + "' in [semilattice]");
                }
                break;
            case Section::Component: {
                RawComponent& rc = comps.back();
                if (key == "group") {
                    if (toks.size() < 2) throw ParseError(number, "group line needs a kind");
                    rc.group_spec.assign(toks.begin() + 1, toks.end());
                    rc.group_line = number;
                } else if (key == "identity") {
                    if (toks.size() != 2) throw ParseError(number, "identity line takes one element");
                    rc.identity = toks[1];
                } else if (key == "table") {
                    if (toks.size() < 3 || toks[2] != ":") throw ParseError(number, "expected 'table ROW : entries'");
                    rc.table.emplace_back(toks[1], std::vector<std::string>(toks.begin() + 3, toks.end()));
                } else if (key == "generators") {
                    rc.generators.assign(toks.begin() + 1, toks.end());
                } else if (key == "size") {
                    if (toks.size() != 3) throw ParseError(number, "size line takes |I| and |Lambda|");
                    rc.num_i = parse_count(toks[1], number) + 1;
                    rc.num_lambda = parse_count(toks[2], number) + 1;
                    rc.sized = true;
                } else if (key == "row") {
                    rc.rows.push_back({number, line.substr(3)});
                } else if (key == "gen") {
                    rc.gens.push_back({number, line});
                } else {
                    throw ParseError(number, "unknown key '" + key + "' in [component " + rc.name + "]");
                }
                break;
            }
            case Section::Map:
                if (key != "image") throw ParseError(number, "unknown key '" + key + "' in [map]");
                maps.back().images.push_back({number, line.substr(5)});
                break;
        }
    }

    if (!semilattice_line) throw ParseError(number, "missing [semilattice] section");
    if (names.empty()) throw ParseError(semilattice_line, "semilattice needs a 'names' line");
    std::map<std::string, std::size_t> name_index;
    for (std::size_t k = 0; k < names.size(); ++k)
        if (!name_index.emplace(names[k], k).second) throw ParseError(semilattice_line, "duplicate name '" + names[k] + "'");
    auto name_of = [&](const std::string& n, std::size_t line) {
        auto it = name_index.find(n);
        if (it == name_index.end()) throw ParseError(line, "unknown component '" + n + "'");
        return it->second;
    };
    std::vector<std::vector<std::size_t>> meet(names.size());
    std::vector<bool> have_row(names.size(), false);
    for (const auto& ml : meet_lines) {
        auto toks = split_tokens(ml.text);
        if (toks.size() != names.size() + 3 || toks[2] != ":")
            throw ParseError(ml.number, "expected 'meet NAME : ' followed by one entry per name");
        std::size_t r = name_of(toks[1], ml.number);
        if (have_row[r]) throw ParseError(ml.number, "meet row '" + toks[1] + "' given twice");
        have_row[r] = true;
        for (std::size_t k = 3; k < toks.size(); ++k) meet[r].push_back(name_of(toks[k], ml.number));
    }
    for (std::size_t k = 0; k < names.size(); ++k)
        if (!have_row[k]) throw ParseError(semilattice_line, "meet row for '" + names[k] + "' is missing");
    Semilattice y = [&] {
        try {
            return Semilattice(names, meet);
        } catch (const InvalidInput& e) {
            throw ParseError(semilattice_line, e.what());
        }
    }();

    std::vector<ReesComponent> raw_components;
    std::vector<ReesComponent> components;
    std::vector<CoordinateChange> changes;
    for (const auto& rc : comps) {
        name_of(rc.name, rc.line);
        if (!rc.sized) throw ParseError(rc.line, "component '" + rc.name + "' has no size line");
        auto group = build_group(rc);
        SandwichMatrix p(rc.num_lambda, std::vector<GroupElement>(rc.num_i, group->identity()));
        if (!rc.rows.empty() && rc.rows.size() != rc.num_lambda)
            throw ParseError(rc.rows.back().number, "need one row per lambda");
        for (std::size_t l = 0; l < rc.rows.size(); ++l) {
            auto cells = split_on(rc.rows[l].text, ';');
            if (cells.size() != rc.num_i) throw ParseError(rc.rows[l].number, "row needs one entry per i");
            for (std::size_t i = 0; i < rc.num_i; ++i) {
                try {
                    p[l][i] = group->parse(split_tokens(cells[i]));
                } catch (const Error& e) {
                    throw ParseError(rc.rows[l].number, e.what());
                }
            }
        }
        std::vector<ReesGenerator> gens;
        for (const auto& gl : rc.gens) {
            auto toks = split_tokens(gl.text);
            if (toks.size() < 5) throw ParseError(gl.number, "expected 'gen NAME i word lambda'");
            ReesElement v;
            v.i = parse_index(toks[2], rc.num_i, gl.number, "i-index");
            v.lambda = parse_index(toks.back(), rc.num_lambda, gl.number, "lambda-index");
            try {
                v.g = group->parse(std::vector<std::string>(toks.begin() + 3, toks.end() - 1));
            } catch (const Error& e) {
                throw ParseError(gl.number, e.what());
            }
            gens.push_back({toks[1], v});
        }
        try {
            ReesComponent raw(rc.name, group, rc.num_i, rc.num_lambda, p, gens);
            Normalization n = normalize_matrix(*group, p);
            if (gens.empty()) {
                components.emplace_back(rc.name, group, rc.num_i, rc.num_lambda, n.matrix);
            } else {
                components.push_back(raw.normalized());
            }
            raw_components.push_back(std::move(raw));
            changes.push_back(std::move(n.change));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(rc.line, e.what());
        }
    }
    auto comp_index = [&](const std::string& n, std::size_t line) {
        for (std::size_t k = 0; k < comps.size(); ++k)
            if (comps[k].name == n) return k;
        throw ParseError(line, "component '" + n + "' is not defined");
    };

    std::vector<StructureMap> structure;
    for (const auto& rm : maps) {
        const std::size_t up = comp_index(rm.upper, rm.line);
        const std::size_t low = comp_index(rm.lower, rm.line);
        const ReesComponent& upper = raw_components[up];
        const ReesComponent& lower = raw_components[low];
        std::vector<std::optional<Bitranslation>> images(upper.generators().size());
        for (const auto& il : rm.images) {
            auto parts = split_on(il.text, '|');
            if (parts.size() != 4) throw ParseError(il.number, "expected 'image GEN | chi_i | h words | chi_lambda'");
            auto gen = upper.find_generator(std::string_view(parts[0]));
            if (!gen) gen = components[up].find_generator(std::string_view(parts[0]));
            if (!gen) throw ParseError(il.number, "unknown generator '" + parts[0] + "' of '" + rm.upper + "'");
            if (images[*gen]) throw ParseError(il.number, "image of '" + parts[0] + "' given twice");
            Bitranslation t;
            auto ci = split_tokens(parts[1]);
            auto cl = split_tokens(parts[3]);
            auto hs = split_on(parts[2], ';');
            if (ci.size() != lower.num_i()) throw ParseError(il.number, "chi_i needs one entry per i of the lower component");
            if (cl.size() != lower.num_lambda() || hs.size() != lower.num_lambda())
                throw ParseError(il.number, "h and chi_lambda need one entry per lambda of the lower component");
            for (const auto& tok : ci) t.chi_i.push_back(parse_index(tok, lower.num_i(), il.number, "i-index"));
            for (const auto& tok : cl) t.chi_lambda.push_back(parse_index(tok, lower.num_lambda(), il.number, "lambda-index"));
            for (const auto& h : hs) {
                try {
                    t.h.push_back(lower.group().parse(split_tokens(h)));
                } catch (const Error& e) {
                    throw ParseError(il.number, e.what());
                }
            }
            images[*gen] = transform(lower, t, changes[low]);
        }
        StructureMap m{up, low, {}};
        for (std::size_t g = 0; g < images.size(); ++g) {
            if (!images[g])
                throw ParseError(rm.line, "map '" + rm.upper + "' -> '" + rm.lower + "' lacks an image for '" +
                                              upper.generators()[g].name + "'");
            m.images.push_back(std::move(*images[g]));
        }
        structure.push_back(std::move(m));
    }

    // Components and maps are indexed in semilattice order from here on.
    std::vector<std::size_t> to_y(comps.size());
    for (std::size_t k = 0; k < comps.size(); ++k) to_y[k] = name_index.at(comps[k].name);
    for (auto& m : structure) {
        m.upper = to_y[m.upper];
        m.lower = to_y[m.lower];
    }
    CRSemigroup s(std::move(y), std::move(components), std::move(structure));
    if (options.validate) {
        ValidationReport report = validate_structure(s, options.bound);
        if (!report.ok()) throw ValidationFailed(std::move(report));
    }
    return s;
}

CRSemigroup load_config(const std::string& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), options);
}

std::string write_config(const CRSemigroup& s) {
    std::ostringstream out;
    const Semilattice& y = s.semilattice();
    out << "[semilattice]\nnames";
    for (const auto& n : y.names()) out << ' ' << n;
    out << '\n';
    for (std::size_t a = 0; a < y.size(); ++a) {
        out << "meet " << y.name(a) << " :";
        for (std::size_t b = 0; b < y.size(); ++b) out << ' ' << y.name(y.meet(a, b));
        out << '\n';
    }
    for (const auto& c : s.components()) {
        const GroupOracle& g = c.group();
        out << "\n[component " << c.name() << "]\n";
        if (g.is_finite()) {
            out << "group finite";
            for (const auto& n : g.element_names()) out << ' ' << n;
            out << "\nidentity " << g.element_names()[g.identity_index()] << '\n';
            for (std::size_t r = 0; r < g.order(); ++r) {
                out << "table " << g.element_names()[r] << " :";
                for (std::size_t v : g.table()[r]) out << ' ' << g.element_names()[v];
                out << '\n';
            }
            out << "generators";
            for (const auto& n : g.generator_names()) out << ' ' << n;
            out << '\n';
        } else {
            out << "group free";
            for (const auto& n : g.generator_names()) out << ' ' << n;
            out << '\n';
        }
        out << "size " << c.num_i() << ' ' << c.num_lambda() << '\n';
        for (std::size_t l = 0; l < c.num_lambda(); ++l) {
            out << "row";
            for (std::size_t i = 0; i < c.num_i(); ++i) out << (i ? " ; " : " ") << g.format(c.sandwich(l, i));
            out << '\n';
        }
        for (const auto& gen : c.generators())
            out << "gen " << gen.name << ' ' << gen.value.i + 1 << ' ' << g.format(gen.value.g) << ' '
                << gen.value.lambda + 1 << '\n';
    }
    for (const auto& m : s.maps()) {
        const ReesComponent& up = s.component(m.upper);
        const ReesComponent& low = s.component(m.lower);
        out << "\n[map " << up.name() << ' ' << low.name() << "]\n";
        for (std::size_t k = 0; k < m.images.size(); ++k) {
            const Bitranslation& t = m.images[k];
            out << "image " << up.generators()[k].name << " |";
            for (std::size_t v : t.chi_i) out << ' ' << v + 1;
            out << " |";
            for (std::size_t l = 0; l < t.h.size(); ++l) out << (l ? " ; " : " ") << low.group().format(t.h[l]);
            out << " |";
            for (std::size_t v : t.chi_lambda) out << ' ' << v + 1;
            out << '\n';
        }
    }
    return out.str();
}

}  // namespace crwp
