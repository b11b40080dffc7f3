#ifndef ROSTLAT_COMMANDS_HPP
#define ROSTLAT_COMMANDS_HPP

// CLI command implementations. Each command builds a Report (text plus JSON
// payload); run_command handles argument splitting, --format, and the exit
// code contract: 0 ok, 1 input error, 2 verification failure.

#include <sstream>
#include <string>
#include <vector>

#include "rostlat/center.hpp"
#include "rostlat/render.hpp"
#include "rostlat/report.hpp"
#include "rostlat/root_system.hpp"
#include "rostlat/rost.hpp"
#include "rostlat/tits.hpp"
#include "rostlat/verify.hpp"

namespace rostlat {

enum class OutputFormat { Text, Json };

struct CommandResult {
    int exit_code = 0;
    std::string output;
};

namespace cmd_detail {

inline std::string generator_name(std::size_t count, std::size_t i) {
    return count == 1 ? "z" : "z" + std::to_string(i);
}

inline Json json_matrix(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_int(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json json_pairing(const PairingSpec& p) {
    Json j;
    j["kind"] = to_string(p.kind);
    j["modulus"] = json_int(p.modulus);
    if (p.kind != PairingKind::StandardModN)
        j["gram"] = Json::array({Json::array({p.gram[0][0], p.gram[0][1]}),
                                 Json::array({p.gram[1][0], p.gram[1][1]})});
    return j;
}

inline Json json_zmap_fields(const CocharacterMap& z) {
    Json j;
    j["order"] = json_int(z.order);
    j["exponents"] = json_int_vector(z.exponents);
    j["support"] = json_set(z.support());
    j["zmap"] = h_product(z);
    return j;
}

inline Json json_index(const TitsIndex& idx) {
    Json j;
    j["index"] = format_tits_index(idx);
    j["type"] = idx.type.name();
    j["form"] = to_string(idx.form);
    j["circled"] = json_set(idx.circled);
    return j;
}

inline Report cmd_info(const std::string& type_str) {
    Report r;
    r.command = "info";
    const SystemType t = parse_system_type(type_str);
    r.inputs["type"] = t.name();
    const RootSystem rs(t);
    const CenterPresentation p = center(rs);

    r.payload["type"] = t.name();
    r.payload["rank"] = t.rank;
    r.payload["root_count"] = rs.roots().size();
    r.payload["coxeter_number"] = coxeter_number(t);
    r.payload["dual_type"] = dual_type(t).name();
    r.payload["cartan"] = json_matrix(rs.cartan());
    r.payload["delta_r"] = json_set(delta_r(rs));
    r.payload["delta_c"] = json_set(delta_c(rs));
    Json c;
    c["structure"] = render_group(p.group);
    c["invariant_factors"] = json_int_vector(p.group.invariant_factors);
    Json gens = Json::array();
    for (std::size_t i = 0; i < p.zmaps.size(); ++i) {
        Json g = json_zmap_fields(p.zmaps[i]);
        g["name"] = generator_name(p.zmaps.size(), i);
        if (p.source_weights[i] > 0)
            g["source_weight"] = p.source_weights[i];
        else
            g["source_weight"] = nullptr;
        gens.push_back(std::move(g));
    }
    c["generators"] = std::move(gens);
    r.payload["center"] = std::move(c);

    std::ostringstream out;
    out << "type: " << t.name() << "\n";
    out << "rank: " << t.rank << "\n";
    out << "root count: " << rs.roots().size() << "\n";
    out << "coxeter number: " << coxeter_number(t) << "\n";
    out << "dual type: " << dual_type(t).name() << "\n";
    out << "cartan matrix:\n" << render_matrix(rs.cartan());
    out << "delta_r: " << render_set(delta_r(rs)) << "\n";
    out << "delta_c: " << render_set(delta_c(rs)) << "\n";
    out << "center: " << render_group(p.group) << "\n";
    for (std::size_t i = 0; i < p.zmaps.size(); ++i) {
        out << "  " << generator_name(p.zmaps.size(), i) << ": order " << p.zmaps[i].order;
        if (p.source_weights[i] > 0)
            out << ", from w" << p.source_weights[i];
        else
            out << ", from adapted lift";
        out << ", zmap " << h_product(p.zmaps[i]) << "\n";
    }
    r.text = out.str();
    return r;
}

inline Report cmd_zmap(const std::string& type_str, const std::string& index_str) {
    Report r;
    r.command = "zmap";
    const SystemType t = parse_system_type(type_str);
    int j = 0;
    try {
        std::size_t pos = 0;
        j = std::stoi(index_str, &pos);
        if (pos != index_str.size()) throw ParseError("");
    } catch (const std::exception&) {
        throw ParseError("bad weight index '" + index_str + "': want an integer");
    }
    if (j < 1 || j > t.rank)
        throw ParseError("weight index " + std::to_string(j) + " outside 1.." +
                         std::to_string(t.rank));
    r.inputs["type"] = t.name();
    r.inputs["weight_index"] = j;

    const RootSystem rs(t);
    const RatVector cow = rs.fundamental_coweight(j);
    const CocharacterMap z = zmap(rs, cow);

    r.payload = json_zmap_fields(z);
    r.payload["type"] = t.name();
    r.payload["weight_index"] = j;
    r.payload["coweight"] = json_rational_vector(cow);

    std::ostringstream out;
    out << "type: " << t.name() << "\n";
    out << "weight index: " << j << "\n";
    out << "coweight: " << render_rational_vector(cow) << "\n";
    out << "order: " << z.order << "\n";
    out << "exponents: " << render_int_tuple(z.exponents) << "\n";
    out << "support: " << render_set(z.support()) << "\n";
    out << "zmap: " << h_product(z) << "\n";
    r.text = out.str();
    return r;
}

inline Report cmd_gprime(const std::string& index_str) {
    Report r;
    r.command = "gprime";
    const TitsIndex idx = parse_tits_index(index_str);
    r.inputs = json_index(idx);
    const RootSystem rs(idx.type);
    const GPrimeDecomposition d = g_prime(rs, idx); // throws unless circling is admissible
    const CenterPresentation p = center(rs);

    r.payload = json_index(idx);
    r.payload["condition"] = "satisfied";
    Json comps = Json::array();
    for (const auto& c : d.components) {
        Json jc;
        jc["type"] = c.type.name();
        jc["vertices"] = c.vertices;
        jc["path"] = c.path;
        jc["multiplier"] = c.multiplier;
        comps.push_back(std::move(jc));
    }
    r.payload["components"] = std::move(comps);
    Json restr = Json::array();
    for (std::size_t g = 0; g < d.center_restriction.size(); ++g) {
        Json jr;
        jr["generator"] = generator_name(d.center_restriction.size(), g);
        Json slices = Json::array();
        for (const auto& s : d.center_restriction[g]) slices.push_back(json_int_vector(s));
        jr["slices"] = std::move(slices);
        restr.push_back(std::move(jr));
    }
    r.payload["center_restriction"] = std::move(restr);

    std::ostringstream out;
    out << "index: " << format_tits_index(idx) << "\n";
    out << "condition: satisfied\n";
    out << "components:\n";
    for (const auto& c : d.components) {
        std::set<int> vs(c.vertices.begin(), c.vertices.end());
        out << "  " << c.type.name() << " on " << render_set(vs) << "  path (";
        for (std::size_t i = 0; i < c.path.size(); ++i)
            out << (i ? "," : "") << c.path[i];
        out << ")  multiplier " << c.multiplier << "\n";
    }
    out << "center restriction:\n";
    for (std::size_t g = 0; g < d.center_restriction.size(); ++g) {
        out << "  " << generator_name(d.center_restriction.size(), g) << ":";
        for (const auto& s : d.center_restriction[g]) {
            std::vector<Int> v(s.begin(), s.end());
            out << " " << render_int_tuple(v);
        }
        out << "\n";
    }
    r.text = out.str();
    return r;
}

inline Report cmd_rost(const std::string& index_str) {
    Report r;
    r.command = "rost";
    const TitsIndex idx = parse_tits_index(index_str);
    r.inputs = json_index(idx);
    const RootSystem rs(idx.type);
    const TheoremVerdict table = theorem_verdict(idx.type);

    r.payload = json_index(idx);
    Json jt;
    jt["verdict"] = to_string(table.subgroup);
    jt["pairing"] = json_pairing(table.pairing);
    jt["notes"] = table.notes;
    r.payload["answer_table"] = std::move(jt);

    std::ostringstream out;
    out << "index: " << format_tits_index(idx) << "\n";

    std::string verdict, source;
    Json reduction = nullptr;

    if (idx.form != FormKind::Inner) {
        verdict = to_string(table.subgroup);
        source = "answer table (outer form; no inner-circling reduction)";
        r.payload["condition_satisfied"] = nullptr;
        r.payload["vanish"] = nullptr;
        out << "form: " << to_string(idx.form) << "\n";
    } else {
        const bool cond = check_condition(rs, idx);
        const bool van = vanish_criterion(rs, idx.circled);
        r.payload["condition_satisfied"] = cond;
        r.payload["condition_missing"] = json_set(condition_missing(rs, idx));
        r.payload["vanish"] = van;
        out << "condition: ";
        if (cond)
            out << "satisfied\n";
        else
            out << "not satisfied (uncircled: " << render_set(condition_missing(rs, idx))
                << ")\n";
        out << "vanish criterion: " << (van ? "satisfied" : "not satisfied") << "\n";

        if (!cond && van) {
            // the center sits inside a circled (split) part, so the
            // composition dies without any subgroup decomposition
            verdict = to_string(SubgroupVerdict::Zero);
            source = "vanish criterion";
        } else if (!cond) {
            throw ConditionViolated("condition not satisfied (uncircled: " +
                                    render_set(condition_missing(rs, idx)) +
                                    ") and the vanish criterion does not apply");
        } else {
            const RostRestriction rr = restriction_composition(rs, idx);
            verdict = to_string(rr.computed);
            source = "symbolic reduction";

            reduction = Json::object();
            Json comps = Json::array();
            for (std::size_t ci = 0; ci < rr.gprime.components.size(); ++ci) {
                const auto& c = rr.gprime.components[ci];
                Json jc;
                jc["type"] = c.type.name();
                jc["vertices"] = c.vertices;
                jc["multiplier"] = c.multiplier;
                jc["symbol"] = rr.component_symbols.empty() ? "" : rr.component_symbols[ci];
                comps.push_back(std::move(jc));
            }
            reduction["components"] = std::move(comps);
            Json rels = Json::array();
            for (const auto& rel : rr.relations) rels.push_back(render_relation(rel));
            reduction["relations"] = std::move(rels);
            Json exprs = Json::array(), tits = Json::array();
            for (std::size_t g = 0; g < rr.expressions.size(); ++g) {
                Json je;
                je["generator"] = rr.torsor_names[g];
                je["expression"] = render_expression(rr.expressions[g]);
                je["unit_scaled"] = rr.expressions[g].unit_scaled();
                exprs.push_back(std::move(je));
                Json jtc;
                jtc["generator"] = rr.torsor_names[g];
                jtc["expression"] = render_expression(rr.tits_cup[g]);
                tits.push_back(std::move(jtc));
            }
            reduction["restriction"] = std::move(exprs);
            reduction["tits_cup"] = std::move(tits);

            out << "components:\n";
            for (std::size_t ci = 0; ci < rr.gprime.components.size(); ++ci) {
                const auto& c = rr.gprime.components[ci];
                std::set<int> vs(c.vertices.begin(), c.vertices.end());
                out << "  " << c.type.name() << " on " << render_set(vs) << "  multiplier "
                    << c.multiplier;
                if (!rr.component_symbols.empty())
                    out << "  symbol [" << rr.component_symbols[ci] << "]";
                out << "\n";
            }
            if (rr.relations.empty()) {
                out << "relations: (none)\n";
            } else {
                out << "relations:\n";
                for (const auto& rel : rr.relations) out << "  " << render_relation(rel) << "\n";
            }
            out << "restriction:\n";
            for (std::size_t g = 0; g < rr.expressions.size(); ++g)
                out << "  " << rr.torsor_names[g] << " -> "
                    << render_expression(rr.expressions[g]) << "\n";
            out << "tits cup:\n";
            for (std::size_t g = 0; g < rr.tits_cup.size(); ++g)
                out << "  " << rr.torsor_names[g] << " -> " << render_expression(rr.tits_cup[g])
                    << "\n";
        }
    }

    r.payload["verdict"] = verdict;
    r.payload["verdict_source"] = source;
    r.payload["reduction"] = std::move(reduction);

    out << "verdict: " << verdict << "\n";
    out << "verdict source: " << source << "\n";
    out << "answer table: " << to_string(table.subgroup) << "\n";
    out << "pairing: " << render_pairing(table.pairing) << "\n";
    out << "notes: " << table.notes << "\n";
    r.text = out.str();
    return r;
}

inline Report cmd_classify_form(const std::string& bits) {
    Report r;
    r.command = "classify-form";
    if (bits.size() != 4 || bits.find_first_not_of("01") != std::string::npos)
        throw ParseError("bad form bits '" + bits + "': want 4 characters of 0/1, row-major");
    std::array<std::array<int, 2>, 2> gram{};
    for (int i = 0; i < 4; ++i) gram[i / 2][i % 2] = bits[static_cast<std::size_t>(i)] - '0';
    r.inputs["bits"] = bits;
    const FormClass cls = classify_f2_form(gram); // throws on asymmetric input

    r.payload["bits"] = bits;
    r.payload["gram"] = Json::array(
        {Json::array({gram[0][0], gram[0][1]}), Json::array({gram[1][0], gram[1][1]})});
    r.payload["class"] = to_string(cls);

    std::ostringstream out;
    out << "bits: " << bits << "\n";
    out << "gram:\n";
    out << "  [ " << gram[0][0] << " " << gram[0][1] << " ]\n";
    out << "  [ " << gram[1][0] << " " << gram[1][1] << " ]\n";
    out << "class: " << to_string(cls) << "\n";
    r.text = out.str();
    return r;
}

inline Report cmd_verify() {
    Report r;
    r.command = "verify";
    const std::vector<VerifyOutcome> outcomes = run_verification();
    std::size_t failures = 0;
    Json checks = Json::array();
    std::ostringstream out;
    for (const auto& o : outcomes) {
        Json jc;
        jc["name"] = o.name;
        jc["passed"] = o.passed;
        if (!o.passed) {
            ++failures;
            jc["detail"] = o.detail;
            out << "FAIL " << o.name << ": " << o.detail << "\n";
        } else {
            out << "ok   " << o.name << "\n";
        }
        checks.push_back(std::move(jc));
    }
    out << outcomes.size() << " checks, " << failures << " failures\n";
    r.payload["checks"] = std::move(checks);
    r.payload["total"] = outcomes.size();
    r.payload["failures"] = failures;
    r.text = out.str();
    if (failures > 0) {
        r.ok = false;
        r.error = std::to_string(failures) + " of " + std::to_string(outcomes.size()) +
                  " checks failed";
        r.text += "error: " + r.error + "\n";
    }
    return r;
}

inline std::string help_text() {
    return "usage: rostlat [--format text|json] <command> [args]\n"
           "\n"
           "commands:\n"
           "  info <type>            root system, cartan matrix, vertex sets, center\n"
           "  zmap <type> <index>    cocharacter map of one fundamental coweight\n"
           "  gprime <index>         semisimple anisotropic-kernel subgroup decomposition\n"
           "  rost <index>           restriction verdict for a Tits index\n"
           "  classify-form <bits>   classify a symmetric 2x2 form over F2 (4 bits, row-major)\n"
           "  verify                 run the built-in golden self-checks\n"
           "\n"
           "types are <family><rank> with family A-G, e.g. E7, D10 (rank <= 64).\n"
           "a Tits index is '<type> [inner|outer2|outer3|outer6] [circled=i,j,...]',\n"
           "e.g. 'E7 inner circled=1,3,4,6'.\n";
}

} // namespace cmd_detail

inline CommandResult run_command(const std::vector<std::string>& argv) {
    using namespace cmd_detail;
    OutputFormat fmt = OutputFormat::Text;
    std::vector<std::string> args;
    std::string command = "cli";

    auto failure = [&](const std::string& msg) {
        Report r = Report::failure(command, msg);
        return CommandResult{1, fmt == OutputFormat::Json ? to_json_string(r) : r.text};
    };

    for (std::size_t i = 0; i < argv.size(); ++i) {
        const std::string& a = argv[i];
        if (a == "--format") {
            if (i + 1 == argv.size()) return failure("--format needs a value: text or json");
            const std::string& v = argv[++i];
            if (v == "text") fmt = OutputFormat::Text;
            else if (v == "json") fmt = OutputFormat::Json;
            else return failure("bad --format value '" + v + "': want text or json");
        } else if (a.rfind("--format=", 0) == 0) {
            const std::string v = a.substr(9);
            if (v == "text") fmt = OutputFormat::Text;
            else if (v == "json") fmt = OutputFormat::Json;
            else return failure("bad --format value '" + v + "': want text or json");
        } else if (a == "--help" || a == "-h" || a == "help") {
            Report r;
            r.command = "help";
            r.text = help_text();
            r.payload["usage"] = help_text();
            return {0, fmt == OutputFormat::Json ? to_json_string(r) : r.text};
        } else if (a.rfind("--", 0) == 0) {
            return failure("unknown flag '" + a + "'");
        } else {
            args.push_back(a);
        }
    }
    if (args.empty()) return failure("no command given; see 'rostlat help'");
    command = args[0];

    auto joined_tail = [&args] {
        std::string s;
        for (std::size_t i = 1; i < args.size(); ++i) {
            if (i > 1) s += ' ';
            s += args[i];
        }
        return s;
    };

    try {
        Report r;
        if (command == "info") {
            if (args.size() != 2) throw ParseError("usage: rostlat info <type>");
            r = cmd_info(args[1]);
        } else if (command == "zmap") {
            if (args.size() != 3) throw ParseError("usage: rostlat zmap <type> <weight-index>");
            r = cmd_zmap(args[1], args[2]);
        } else if (command == "gprime") {
            if (args.size() < 2) throw ParseError("usage: rostlat gprime <tits-index>");
            r = cmd_gprime(joined_tail());
        } else if (command == "rost") {
            if (args.size() < 2) throw ParseError("usage: rostlat rost <tits-index>");
            r = cmd_rost(joined_tail());
        } else if (command == "classify-form") {
            if (args.size() != 2) throw ParseError("usage: rostlat classify-form <4 bits>");
            r = cmd_classify_form(args[1]);
        } else if (command == "verify") {
            if (args.size() != 1) throw ParseError("usage: rostlat verify");
            r = cmd_verify();
        } else {
            throw ParseError("unknown command '" + command + "'; see 'rostlat help'");
        }
        int exit_code = 0;
        if (!r.ok) exit_code = command == "verify" ? 2 : 1;
        return {exit_code, fmt == OutputFormat::Json ? to_json_string(r) : r.text};
    } catch (const std::exception& e) {
        return failure(e.what());
    }
}

} // namespace rostlat

#endif
