#include "colorweyl/driver.hpp"

#include <map>
#include <sstream>

#include "colorweyl/theorems.hpp"

namespace colorweyl {

namespace {

template <class K>
K scalar_of(const ScalarLit& s, const FieldSpec& f) {
    K v = scalar_from_int<K>(s.num, f);
    if (s.den != 1) v = v * scalar_inv(scalar_from_int<K>(s.den, f));
    return v;
}

template <class K>
Instance<K> build_instance(const ConfigSpec& cfg) {
    FieldSpec f =
        cfg.rational ? make_field(FieldKind::rationals) : make_field(FieldKind::prime, cfg.p);
    Grading g = make_grading(cfg.free_rank, cfg.torsion);
    const int arity = cfg.free_rank + static_cast<int>(cfg.torsion.size());
    Mat<K> E(arity, arity);
    for (int i = 0; i < arity; ++i)
        for (int j = 0; j < arity; ++j) E(i, j) = scalar_from_int<K>(1, f);
    for (const auto& e : cfg.eps) E(e.i - 1, e.j - 1) = scalar_of<K>(e.value, f);
    Bicharacter<K> bc = make_bicharacter(g, f, E);

    std::vector<std::tuple<std::string, Color, int>> gens;
    for (const auto& gd : cfg.gens)
        gens.emplace_back(gd.name, canonical_color(g, gd.color), static_cast<int>(gd.bound));
    Algebra<K> a = free_truncated_algebra(f, g, bc, gens);

    std::map<std::string, Derivation<K>> byname;
    for (const auto& dd : cfg.ders) {
        if (dd.coordinate) {
            int gi = -1;
            for (size_t i = 0; i < cfg.gens.size(); ++i)
                if (cfg.gens[i].name == dd.gen) gi = static_cast<int>(i);
            Derivation<K> d = coordinate_derivation(a, gi);
            d.name = dd.name;
            byname.emplace(dd.name, std::move(d));
        } else {
            const long need = static_cast<long>(a.dim()) * a.dim();
            if (static_cast<long>(dd.matrix.size()) != need)
                throw Error("SEMANTIC_ERROR", "derivation '" + dd.name + "' needs " +
                                                  std::to_string(need) +
                                                  " row-major matrix entries, got " +
                                                  std::to_string(dd.matrix.size()));
            Mat<K> m(a.dim(), a.dim());
            for (int r = 0; r < a.dim(); ++r)
                for (int col = 0; col < a.dim(); ++col)
                    m(r, col) = scalar_of<K>(dd.matrix[static_cast<size_t>(r) * a.dim() + col], f);
            byname.emplace(dd.name,
                           Derivation<K>{std::move(m), canonical_color(g, dd.color), dd.name});
        }
    }
    std::vector<Derivation<K>> dlist;
    for (const auto& nm : cfg.D) dlist.push_back(byname.at(nm));
    return make_instance(std::move(a), std::move(dlist));
}

std::vector<CheckDecl> resolve_checks(const ConfigSpec& cfg, const std::string& override_csv) {
    if (!override_csv.empty()) {
        std::vector<CheckDecl> out;
        std::stringstream ss(override_csv);
        std::string id;
        while (std::getline(ss, id, ',')) {
            std::string trimmed;
            for (char ch : id)
                if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
            if (trimmed.empty()) continue;
            bool known = false;
            for (const auto& k : known_check_ids()) known = known || k == trimmed;
            if (!known) throw Error("SEMANTIC_ERROR", "unknown check id '" + trimmed + "'");
            CheckDecl cd{trimmed, {}, {}, {}};
            for (const auto& c : cfg.checks)  // keep config budgets for the same id
                if (c.id == trimmed) {
                    cd = c;
                    break;
                }
            out.push_back(cd);
        }
        if (out.empty()) throw Error("SEMANTIC_ERROR", "empty check selection");
        return out;
    }
    if (!cfg.checks.empty()) return cfg.checks;
    std::vector<CheckDecl> out;
    for (const auto& id : known_check_ids()) out.push_back({id, {}, {}, {}});
    return out;
}

template <class K>
Report run_t(const ConfigSpec& cfg, const std::string& label, const std::vector<CheckDecl>& list,
             unsigned long long seed) {
    Instance<K> inst = build_instance<K>(cfg);
    Report rep;
    rep.instance = label;
    rep.rng_seed = seed;
    for (const auto& cd : list) {
        CheckOptions opt;
        opt.rng_seed = seed;
        if (cd.budget) opt.budget = *cd.budget;
        if (cd.trials) opt.trials = *cd.trials;
        opt.cutoff = cd.cutoff;
        if (cd.id == "2.1")
            rep.checks.push_back(verify_lemma_2_1(inst, opt));
        else if (cd.id == "2.2")
            rep.checks.push_back(verify_theorem_2_2(inst, opt));
        else if (cd.id == "3.2")
            rep.checks.push_back(verify_theorem_3_2(inst, opt));
        else if (cd.id == "3.9")
            rep.checks.push_back(verify_theorem_3_9(inst, opt));
        else if (cd.id == "3.6")
            rep.checks.push_back(verify_lemma_3_1_and_3_6(inst, opt));
        else if (cd.id == "3.18")
            rep.checks.push_back(verify_coefficient_3_18(inst, opt));
        else
            throw Error("SEMANTIC_ERROR", "unknown check id '" + cd.id + "'");
    }
    return rep;
}

}  // namespace

RunResult run_config(const ConfigSpec& cfg, const std::string& label,
                     const std::string& checks_override, unsigned long long rng_seed) {
    std::vector<CheckDecl> list = resolve_checks(cfg, checks_override);
    Report rep = cfg.rational ? run_t<Rat>(cfg, label, list, rng_seed)
                              : run_t<Zp>(cfg, label, list, rng_seed);
    int code = exit_code_for(rep.checks);
    return {std::move(rep), code};
}

void validate_config(const ConfigSpec& cfg) {
    if (cfg.rational)
        build_instance<Rat>(cfg);
    else
        build_instance<Zp>(cfg);
}

}  // namespace colorweyl
