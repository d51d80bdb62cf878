#include "colorweyl/config.hpp"

#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>

namespace colorweyl {

const std::vector<std::string>& known_check_ids() {
    static const std::vector<std::string> ids = {"2.1", "2.2", "3.2", "3.9", "3.6", "3.18"};
    return ids;
}

namespace {

struct Tok {
    std::string s;
    int col;
};

// whitespace-separated tokens; (...) and [...] groups stay single tokens so
// tuples and matrices may contain spaces
std::vector<Tok> tokenize(const std::string& line) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        size_t start = i;
        std::string tok;
        if (line[i] == '(' || line[i] == '[') {
            char close = line[i] == '(' ? ')' : ']';
            size_t j = line.find(close, i);
            if (j == std::string::npos) {
                tok = line.substr(i);
                i = line.size();
            } else {
                tok = line.substr(i, j - i + 1);
                i = j + 1;
            }
        } else {
            size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
                   line[j] != '#')
                ++j;
            tok = line.substr(i, j - i);
            i = j;
        }
        out.push_back({std::move(tok), static_cast<int>(start) + 1});
    }
    return out;
}

struct LineParser {
    std::vector<Tok> toks;
    int line;
    size_t k = 0;

    [[noreturn]] void fail(const std::string& expected) const {
        std::string got = k < toks.size() ? "'" + toks[k].s + "'" : "end of line";
        int col = k < toks.size() ? toks[k].col
                                  : (toks.empty() ? 1 : toks.back().col +
                                                            static_cast<int>(toks.back().s.size()));
        throw Error("PARSE_ERROR", "line " + std::to_string(line) + ", col " +
                                       std::to_string(col) + ": expected " + expected + ", got " +
                                       got);
    }

    bool done() const { return k >= toks.size(); }

    const std::string& peek() const {
        static const std::string empty;
        return k < toks.size() ? toks[k].s : empty;
    }

    std::string take(const std::string& what) {
        if (done()) fail(what);
        return toks[k++].s;
    }

    void keyword(const std::string& kw) {
        if (done() || toks[k].s != kw) fail("'" + kw + "'");
        ++k;
    }

    long integer(const std::string& what) {
        std::string s = take(what);
        char* end = nullptr;
        long v = std::strtol(s.c_str(), &end, 10);
        if (end == s.c_str() || *end != '\0') {
            --k;
            fail(what);
        }
        return v;
    }

    ScalarLit scalar() {
        std::string s = take("an exact scalar (integer or a/b)");
        ScalarLit out;
        size_t slash = s.find('/');
        auto to_long = [&](const std::string& part) -> long {
            char* end = nullptr;
            long v = std::strtol(part.c_str(), &end, 10);
            if (part.empty() || end == part.c_str() || *end != '\0') {
                --k;
                fail("an exact scalar (integer or a/b)");
            }
            return v;
        };
        if (slash == std::string::npos) {
            out.num = to_long(s);
        } else {
            out.num = to_long(s.substr(0, slash));
            out.den = to_long(s.substr(slash + 1));
            if (out.den == 0) {
                --k;
                fail("a nonzero denominator");
            }
        }
        return out;
    }

    std::vector<long> tuple() {
        std::string s = take("a color tuple (c1,...,ck)");
        if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
            --k;
            fail("a color tuple (c1,...,ck)");
        }
        std::vector<long> out;
        std::string inner = s.substr(1, s.size() - 2);
        std::string item;
        std::stringstream ss(inner);
        while (std::getline(ss, item, ',')) {
            std::string trimmed;
            for (char c : item)
                if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
            if (trimmed.empty()) {
                --k;
                fail("a color tuple with integer entries");
            }
            char* end = nullptr;
            long v = std::strtol(trimmed.c_str(), &end, 10);
            if (end == trimmed.c_str() || *end != '\0') {
                --k;
                fail("a color tuple with integer entries");
            }
            out.push_back(v);
        }
        return out;
    }

    std::vector<ScalarLit> matrix() {
        std::string s = take("a matrix [e11 e12 ...]");
        if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
            --k;
            fail("a matrix [e11 e12 ...]");
        }
        std::vector<ScalarLit> out;
        std::string inner = s.substr(1, s.size() - 2);
        for (char& c : inner)
            if (c == ',') c = ' ';
        std::stringstream ss(inner);
        std::string item;
        while (ss >> item) {
            ScalarLit v;
            size_t slash = item.find('/');
            auto to_long = [&](const std::string& part) -> long {
                char* end = nullptr;
                long x = std::strtol(part.c_str(), &end, 10);
                if (part.empty() || end == part.c_str() || *end != '\0') {
                    --k;
                    fail("matrix entries as exact scalars");
                }
                return x;
            };
            if (slash == std::string::npos) {
                v.num = to_long(item);
            } else {
                v.num = to_long(item.substr(0, slash));
                v.den = to_long(item.substr(slash + 1));
                if (v.den == 0) {
                    --k;
                    fail("a nonzero denominator");
                }
            }
            out.push_back(v);
        }
        return out;
    }

    void end() {
        if (!done()) fail("end of line");
    }
};

[[noreturn]] void semantic(const std::string& msg) { throw Error("SEMANTIC_ERROR", msg); }

std::string scalar_str(const ScalarLit& s) {
    if (s.den == 1) return std::to_string(s.num);
    return std::to_string(s.num) + "/" + std::to_string(s.den);
}

std::string tuple_str(const std::vector<long>& t) {
    std::string out = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t[i]);
    }
    return out + ")";
}

}  // namespace

ConfigSpec parse_config(const std::string& text) {
    ConfigSpec c;
    bool saw_field = false, saw_group = false, saw_D = false;

    std::stringstream ss(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(ss, raw)) {
        ++lineno;
        LineParser p{tokenize(raw), lineno};
        if (p.done()) continue;
        std::string head = p.take("a declaration");
        if (head == "field") {
            if (saw_field) semantic("duplicate field declaration at line " + std::to_string(lineno));
            saw_field = true;
            std::string kind = p.take("'rational' or 'gf'");
            if (kind == "rational") {
                c.rational = true;
            } else if (kind == "gf") {
                c.p = p.integer("a prime p");
                if (c.p == 2)
                    semantic("CHAR_TWO: the bicharacter identities degenerate in characteristic 2");
            } else {
                --p.k;
                p.fail("'rational' or 'gf'");
            }
        } else if (head == "group") {
            if (saw_group) semantic("duplicate group declaration at line " + std::to_string(lineno));
            saw_group = true;
            p.keyword("free");
            c.free_rank = static_cast<int>(p.integer("the free rank"));
            p.keyword("torsion");
            while (!p.done()) c.torsion.push_back(p.integer("a torsion order"));
        } else if (head == "eps") {
            EpsDecl e;
            e.i = static_cast<int>(p.integer("a group generator index"));
            e.j = static_cast<int>(p.integer("a group generator index"));
            e.value = p.scalar();
            c.eps.push_back(e);
        } else if (head == "gen") {
            GenDecl g;
            g.name = p.take("a generator name");
            p.keyword("color");
            g.color = p.tuple();
            p.keyword("bound");
            g.bound = p.integer("the nilpotency bound");
            c.gens.push_back(std::move(g));
        } else if (head == "der") {
            DerDecl d;
            d.name = p.take("a derivation name");
            if (p.peek() == "=") {
                p.keyword("=");
                std::string rhs = p.take("d/d<gen>");
                if (rhs.rfind("d/d", 0) != 0 || rhs.size() <= 3) {
                    --p.k;
                    p.fail("d/d<gen>");
                }
                d.coordinate = true;
                d.gen = rhs.substr(3);
            } else {
                p.keyword("color");
                d.color = p.tuple();
                p.keyword("matrix");
                d.matrix = p.matrix();
            }
            c.ders.push_back(std::move(d));
        } else if (head == "D") {
            if (saw_D) semantic("duplicate D declaration at line " + std::to_string(lineno));
            saw_D = true;
            p.keyword("=");
            while (!p.done()) c.D.push_back(p.take("a derivation name"));
        } else if (head == "check") {
            CheckDecl cd;
            cd.id = p.take("a check id");
            while (!p.done()) {
                std::string key = p.take("'budget', 'trials' or 'cutoff'");
                if (key == "budget")
                    cd.budget = p.integer("a budget");
                else if (key == "trials")
                    cd.trials = p.integer("a trial count");
                else if (key == "cutoff")
                    cd.cutoff = static_cast<int>(p.integer("a level cutoff"));
                else {
                    --p.k;
                    p.fail("'budget', 'trials' or 'cutoff'");
                }
            }
            c.checks.push_back(cd);
        } else {
            --p.k;
            p.fail("one of field, group, eps, gen, der, D, check");
        }
        p.end();
    }

    // semantic validation against the declared group and names
    if (!saw_field) semantic("missing field declaration");
    if (!saw_group) semantic("missing group declaration");
    const size_t arity = static_cast<size_t>(c.free_rank) + c.torsion.size();
    for (const auto& e : c.eps)
        if (e.i < 1 || e.j < 1 || static_cast<size_t>(e.i) > arity ||
            static_cast<size_t>(e.j) > arity)
            semantic("eps index (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                     ") outside the group generators");
    std::set<std::string> gen_names, der_names;
    for (const auto& g : c.gens) {
        if (!gen_names.insert(g.name).second) semantic("duplicate generator '" + g.name + "'");
        if (g.color.size() != arity)
            semantic("generator '" + g.name + "' has color arity " +
                     std::to_string(g.color.size()) + ", the group needs " +
                     std::to_string(arity));
        if (g.bound < 1 && g.bound != -1)
            semantic("generator '" + g.name + "' needs bound >= 1");
    }
    for (const auto& d : c.ders) {
        if (!der_names.insert(d.name).second) semantic("duplicate derivation '" + d.name + "'");
        if (d.coordinate) {
            if (!gen_names.count(d.gen))
                semantic("derivation '" + d.name + "' refers to unknown generator '" + d.gen + "'");
        } else if (d.color.size() != arity) {
            semantic("derivation '" + d.name + "' has color arity " +
                     std::to_string(d.color.size()) + ", the group needs " +
                     std::to_string(arity));
        }
    }
    for (const auto& nm : c.D)
        if (!der_names.count(nm)) semantic("D lists unknown derivation '" + nm + "'");
    for (const auto& cd : c.checks) {
        bool known = false;
        for (const auto& id : known_check_ids()) known = known || id == cd.id;
        if (!known) semantic("unknown check id '" + cd.id + "'");
    }
    return c;
}

std::string emit_config(const ConfigSpec& c) {
    std::ostringstream os;
    if (c.rational)
        os << "field rational\n";
    else
        os << "field gf " << c.p << "\n";
    os << "group free " << c.free_rank << " torsion";
    for (long t : c.torsion) os << " " << t;
    os << "\n";
    for (const auto& e : c.eps)
        os << "eps " << e.i << " " << e.j << " " << scalar_str(e.value) << "\n";
    for (const auto& g : c.gens)
        os << "gen " << g.name << " color " << tuple_str(g.color) << " bound " << g.bound << "\n";
    for (const auto& d : c.ders) {
        if (d.coordinate) {
            os << "der " << d.name << " = d/d" << d.gen << "\n";
        } else {
            os << "der " << d.name << " color " << tuple_str(d.color) << " matrix [";
            for (size_t i = 0; i < d.matrix.size(); ++i) {
                if (i) os << " ";
                os << scalar_str(d.matrix[i]);
            }
            os << "]\n";
        }
    }
    os << "D =";
    for (const auto& nm : c.D) os << " " << nm;
    os << "\n";
    for (const auto& cd : c.checks) {
        os << "check " << cd.id;
        if (cd.budget) os << " budget " << *cd.budget;
        if (cd.trials) os << " trials " << *cd.trials;
        if (cd.cutoff) os << " cutoff " << *cd.cutoff;
        os << "\n";
    }
    return os.str();
}

}  // namespace colorweyl
