#include "cli.hpp"

#include "lpeq/lpeq.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace lpeq::cli {

namespace {

using nlohmann::json;

struct Failure {
    int code;
    std::string message;
};

Program load(const std::string& path, const UniversePtr& u) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kUsage, "cannot read '" + path + "'"};
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_program(buf.str(), u);
    } catch (const ParseError& e) {
        throw Failure{kUsage, path + ":" + e.what()};
    }
}

std::vector<std::string> split_atoms(const std::string& spec) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        const auto b = cur.find_first_not_of(" \t");
        const auto e = cur.find_last_not_of(" \t");
        std::string tok = b == std::string::npos ? "" : cur.substr(b, e - b + 1);
        if (!tok.empty()) {
            if (!is_valid_atom_name(tok)) throw Failure{kUsage, "invalid atom '" + tok + "' in alphabet"};
            out.push_back(tok);
        }
        cur.clear();
    };
    for (char c : spec) {
        if (c == ',') flush();
        else cur += c;
    }
    flush();
    return out;
}

AtomSet intern_all(const std::vector<std::string>& names, Universe& u) {
    AtomSet s;
    for (const auto& n : names) s.insert(u.intern(n));
    return s;
}

json names_json(AtomSet s, const Universe* u) { return json(atom_names(s, u)); }

json rules_json(const Program& p) {
    json arr = json::array();
    for (const Rule& r : p.sorted_rules()) arr.push_back(render_rule(r, p.universe().get()));
    return arr;
}

struct CheckArgs {
    std::string p, q, mode = "strong", alphabet, all_but, format = "text";
    bool has_alphabet = false, has_all_but = false;
};

int do_check(const CheckArgs& a, std::ostream& out) {
    const auto mode = parse_mode(a.mode);
    if (!mode) throw Failure{kUsage, "unknown mode '" + a.mode + "'"};
    auto u = std::make_shared<Universe>();
    const Program p = load(a.p, u);
    const Program q = load(a.q, u);
    AtomSet alphabet = u->all();
    if (a.has_alphabet) alphabet = intern_all(split_atoms(a.alphabet), *u);
    if (a.has_all_but) {
        const auto excluded = split_atoms(a.all_but);
        alphabet = u->all();
        for (const auto& n : excluded) {
            if (auto id = u->find(n)) alphabet.erase(*id);
        }
    }
    const Verdict v = decide(p, q, *mode, alphabet);
    const Universe* un = u.get();
    if (a.format == "json") {
        json j{{"schema", 1},
               {"mode", std::string(to_string(v.mode))},
               {"alphabet", names_json(v.alphabet, un)},
               {"equivalent", v.equivalent},
               {"witness", nullptr}};
        if (v.witness) {
            j["witness"] = {{"context", rules_json(v.witness->context)},
                            {"distinguishing", names_json(v.witness->distinguishing, un)},
                            {"side", std::string(to_string(v.witness->side))}};
        }
        out << j.dump(2) << "\n";
    } else {
        out << "mode: " << to_string(v.mode) << "\n";
        out << "alphabet: " << render_set(v.alphabet, un) << "\n";
        out << "verdict: " << (v.equivalent ? "equivalent" : "not equivalent") << "\n";
        if (v.witness) {
            const Witness& w = *v.witness;
            out << "witness context:\n";
            if (w.context.empty()) out << "  (empty)\n";
            for (const Rule& r : w.context.sorted_rules()) out << "  " << render_rule(r, un) << "\n";
            out << "distinguishing: " << render_set(w.distinguishing, un) << "\n";
            out << "side: " << to_string(w.side) << "\n";
        }
    }
    return v.equivalent ? kOk : kNegative;
}

struct ModelsArgs {
    std::string p, kind = "as", alphabet, format = "text";
    bool has_alphabet = false;
};

int do_models(const ModelsArgs& a, std::ostream& out) {
    auto u = std::make_shared<Universe>();
    const Program p = load(a.p, u);
    const AtomSet over = var_of(p);
    AtomSet alphabet = over;
    if (a.has_alphabet) alphabet = intern_all(split_atoms(a.alphabet), *u);
    const Universe* un = u.get();
    std::vector<std::pair<AtomSet, AtomSet>> pairs;
    std::vector<AtomSet> sets;
    bool pair_kind = true;
    if (a.kind == "as") {
        sets = answer_sets(p);
        pair_kind = false;
    } else if (a.kind == "classical") {
        sets = classical_models(p, over);
        pair_kind = false;
    } else if (a.kind == "se" || a.kind == "ue") {
        for (const SEPair& s : a.kind == "se" ? se_models(p, over) : ue_models(p, over)) pairs.emplace_back(s.x, s.y);
    } else if (a.kind == "ase" || a.kind == "aue") {
        const auto v = a.kind == "ase" ? ase_models(p, alphabet, over) : aue_models(p, alphabet, over);
        for (const ASEPair& s : v) pairs.emplace_back(s.x, s.y);
    } else {
        throw Failure{kUsage, "unknown kind '" + a.kind + "'"};
    }
    if (a.format == "json") {
        json models = json::array();
        if (pair_kind) {
            for (auto [x, y] : pairs) models.push_back(json::array({names_json(x, un), names_json(y, un)}));
        } else {
            for (AtomSet s : sets) models.push_back(names_json(s, un));
        }
        out << json{{"schema", 1}, {"kind", a.kind}, {"models", models}}.dump(2) << "\n";
    } else if (pairs.empty() && sets.empty()) {
        out << "{}\n";
    } else {
        for (auto [x, y] : pairs) out << render_pair(x, y, un) << "\n";
        for (AtomSet s : sets) out << render_set(s, un) << "\n";
    }
    return kOk;
}

struct ShiftArgs {
    std::string p, alphabet, format = "text";
    std::size_t rule = 0;
    bool has_rule = false, has_alphabet = false;
};

int do_shift(const ShiftArgs& a, std::ostream& out) {
    auto u = std::make_shared<Universe>();
    const Program p = load(a.p, u);
    std::optional<Rule> target;
    if (a.has_rule) {
        if (a.rule < 1 || a.rule > p.size()) {
            throw Failure{kUsage, "rule index " + std::to_string(a.rule) + " out of range 1.." + std::to_string(p.size())};
        }
        target = p.rules()[a.rule - 1];
    }
    const Program shifted = target ? shift_one(p, *target) : shift_program(p);
    std::optional<bool> safe;
    if (a.has_alphabet) {
        const AtomSet alphabet = intern_all(split_atoms(a.alphabet), *u);
        safe = target ? check_shift_safe(p, *target, alphabet)
                      : decide_rel_strong(p, shifted, alphabet, DecideOptions{true, false, false}).equivalent;
    }
    if (a.format == "json") {
        json j{{"schema", 1}, {"program", rules_json(shifted)}, {"safe", nullptr}};
        if (safe) j["safe"] = *safe;
        out << j.dump(2) << "\n";
    } else {
        out << render(shifted);
        if (safe) out << (*safe ? "safe" : "unsafe") << "\n";
    }
    return safe.value_or(true) ? kOk : kNegative;
}

struct SweepArgs {
    std::string property;
    std::size_t atoms = 2, random = 0;
    std::uint64_t seed = 1;
    bool list = false;
};

int do_sweep(const SweepArgs& a, std::ostream& out) {
    if (a.list) {
        for (const PropertyInfo& p : property_catalog()) out << p.name << "  " << p.summary << "\n";
        return kOk;
    }
    if (!find_property(a.property)) throw Failure{kUsage, "unknown property '" + a.property + "'"};
    const SweepReport r = a.random > 0 ? random_sweep(a.property, a.atoms, a.seed, a.random)
                                       : exhaustive_sweep(a.property, a.atoms);
    out << format_report(r);
    return r.ok() ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equivalence checking for propositional disjunctive logic programs", "lpeq"};
    app.require_subcommand(1);
    const std::vector<std::string> modes{"ordinary", "strong", "uniform", "rel-strong", "rel-uniform"};
    const std::vector<std::string> formats{"text", "json"};

    CheckArgs ca;
    auto* check = app.add_subcommand("check", "Decide equivalence of two programs");
    check->add_option("p", ca.p, "First program file")->required();
    check->add_option("q", ca.q, "Second program file")->required();
    check->add_option("--mode", ca.mode, "Equivalence notion")->check(CLI::IsMember(modes));
    auto* alpha = check->add_option("--alphabet", ca.alphabet, "Context alphabet, comma separated");
    auto* but = check->add_option("--alphabet-all-but", ca.all_but, "Use every atom except these");
    alpha->excludes(but);
    check->add_option("--format", ca.format)->check(CLI::IsMember(formats));

    ModelsArgs ma;
    auto* mcmd = app.add_subcommand("models", "List answer sets or model characterizations");
    mcmd->add_option("p", ma.p, "Program file")->required();
    mcmd->add_option("--kind", ma.kind)->check(CLI::IsMember({"as", "classical", "se", "ue", "ase", "aue"}));
    auto* malpha = mcmd->add_option("--alphabet", ma.alphabet, "Alphabet for ase/aue");
    mcmd->add_option("--format", ma.format)->check(CLI::IsMember(formats));

    ShiftArgs sa;
    auto* scmd = app.add_subcommand("shift", "Shift disjunctive rules into normal rules");
    scmd->add_option("p", sa.p, "Program file")->required();
    auto* srule = scmd->add_option("--rule", sa.rule, "Shift only rule N (1-based, file order)");
    auto* salpha = scmd->add_option("--check-alphabet", sa.alphabet, "Report whether the shift is safe relative to A");
    scmd->add_option("--format", sa.format)->check(CLI::IsMember(formats));

    SweepArgs wa;
    auto* wcmd = app.add_subcommand("sweep", "Run a property sweep");
    wcmd->add_option("--property", wa.property);
    wcmd->add_option("--atoms", wa.atoms, "Atom count (maximum for random sweeps)");
    wcmd->add_option("--seed", wa.seed);
    wcmd->add_option("--random", wa.random, "Number of random instances instead of the exhaustive family");
    wcmd->add_flag("--list", wa.list, "List registered properties");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    try {
        if (check->parsed()) {
            ca.has_alphabet = alpha->count() > 0;
            ca.has_all_but = but->count() > 0;
            return do_check(ca, out);
        }
        if (mcmd->parsed()) {
            ma.has_alphabet = malpha->count() > 0;
            return do_models(ma, out);
        }
        if (scmd->parsed()) {
            sa.has_rule = srule->count() > 0;
            sa.has_alphabet = salpha->count() > 0;
            return do_shift(sa, out);
        }
        if (wa.property.empty() && !wa.list) throw Failure{kUsage, "sweep needs --property or --list"};
        return do_sweep(wa, out);
    } catch (const Failure& f) {
        err << "error: " << f.message << "\n";
        return f.code;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kCapacity;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace lpeq::cli
