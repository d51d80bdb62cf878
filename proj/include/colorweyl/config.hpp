#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colorweyl/types.hpp"

namespace colorweyl {

// Exact scalar literal: an integer or a/b. Residues are plain integers.
struct ScalarLit {
    long num = 0;
    long den = 1;
    bool operator==(const ScalarLit&) const = default;
};

// 1-based group generator indices; unlisted pairs default to 1
struct EpsDecl {
    int i = 0;
    int j = 0;
    ScalarLit value;
    bool operator==(const EpsDecl&) const = default;
};

struct GenDecl {
    std::string name;
    std::vector<long> color;
    long bound = 0;
    bool operator==(const GenDecl&) const = default;
};

// either a coordinate derivation d/d<gen> or an explicit row-major matrix
// over the monomial basis of A
struct DerDecl {
    std::string name;
    bool coordinate = false;
    std::string gen;
    std::vector<long> color;
    std::vector<ScalarLit> matrix;
    bool operator==(const DerDecl&) const = default;
};

struct CheckDecl {
    std::string id;
    std::optional<long> budget;
    std::optional<long> trials;
    std::optional<int> cutoff;
    bool operator==(const CheckDecl&) const = default;
};

struct ConfigSpec {
    bool rational = false;
    long p = 0;
    int free_rank = 0;
    std::vector<long> torsion;
    std::vector<EpsDecl> eps;
    std::vector<GenDecl> gens;
    std::vector<DerDecl> ders;
    std::vector<std::string> D;
    std::vector<CheckDecl> checks;
    bool operator==(const ConfigSpec&) const = default;
};

const std::vector<std::string>& known_check_ids();

// Line-oriented grammar with # comments; see README. Throws PARSE_ERROR with
// line/column/expectation, or SEMANTIC_ERROR for well-formed nonsense.
ConfigSpec parse_config(const std::string& text);

// canonical form; parse_config(emit_config(c)) == c
std::string emit_config(const ConfigSpec& c);

}  // namespace colorweyl
