#include "arimat/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "arimat/errors.hpp"
#include "arimat/gstruct.hpp"
#include "arimat/input_spec.hpp"
#include "arimat/poset.hpp"
#include "arimat/sr_ring.hpp"

namespace arimat {

namespace {

GroupStructure build_structure(const InputSpec& spec, const std::string& kind) {
    if (kind == "layer") {
        if (!spec.is_representation())
            throw ParseError("layer groups require a representation; this input is abstract");
        return layer_structure(spec.representation->free_part());
    }
    if (kind != "cyclic") throw ParseError("unknown structure kind: " + kind);
    Matroid m = spec.matroid();
    return cyclic_structure(m, spec.multiplicity());
}

std::string vector_to_string(const std::vector<mpz_class>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].get_str();
    }
    return out + ")";
}

int cmd_tutte(const std::string& file, std::ostream& out) {
    InputSpec spec = load_input_file(file);
    Matroid m = spec.matroid();
    out << "Tutte: " << tutte(m).to_string("x", "y") << "\n";
    Multiplicity mult = spec.multiplicity();
    if (mult.total) {
        out << "arithmetic Tutte: " << arithmetic_tutte(m, mult).to_string("x", "y")
            << "\n";
    } else {
        out << "arithmetic Tutte at y=1: " << arithmetic_tutte_x(m, mult).to_string("x")
            << "\n";
    }
    return 0;
}

int cmd_poset(const std::string& file, const std::string& kind, bool torsion_free,
              const std::string& dot_path, std::ostream& out) {
    InputSpec spec = load_input_file(file);
    GroupStructure g = build_structure(spec, kind);
    if (torsion_free) g = torsion_free_reduction(g);
    IndPoset p = build_poset(g);
    std::vector<IndPoset> comps = components(p);
    out << "elements: " << p.size() << ", components: " << comps.size() << "\n";
    for (std::size_t c = 0; c < comps.size(); ++c)
        out << "component " << (c + 1) << ": f = " << vector_to_string(comps[c].f_vector())
            << ", h = " << vector_to_string(comps[c].h_vector()) << "\n";
    if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) throw ParseError("cannot write " + dot_path);
        dot << export_dot(p);
        out << "wrote " << dot_path << "\n";
    }
    return 0;
}

int cmd_ideal(const std::string& file, const std::string& kind, bool torsion_free,
              std::ostream& out) {
    InputSpec spec = load_input_file(file);
    GroupStructure g = build_structure(spec, kind);
    if (torsion_free) g = torsion_free_reduction(g);
    IndPoset p = build_poset(g);
    if (components(p).size() > 1)
        throw ParseError(
            "the poset has several components; pass --torsion-free to reduce first");
    SRIdeal ideal = sr_ideal(p);
    out << render_ideal(ideal, display_labels(p));
    return 0;
}

int cmd_hilbert(const std::string& file, const std::string& kind, bool torsion_free,
                int max_degree, std::ostream& out) {
    InputSpec spec = load_input_file(file);
    GroupStructure g = build_structure(spec, kind);
    IndPoset full = build_poset(g);
    auto [h, r] = hilbert_closed(full);
    mpz_class scale = 1;
    IndPoset target = full;
    if (torsion_free) {
        scale = g.group_of(0).order();
        target = build_poset(torsion_free_reduction(g));
    } else if (components(full).size() > 1) {
        throw ParseError(
            "the poset has several components; pass --torsion-free to reduce first");
    }
    if (max_degree < 0) max_degree = r + 3;
    SRIdeal ideal = sr_ideal(target);
    bool match = true;
    out << "d oracle series\n";
    for (int d = 0; d <= max_degree; ++d) {
        mpz_class dim = hilbert_oracle(ideal, d);
        mpz_class num = hilbert_series_coeff(h, r, d);
        std::string series;
        if (num % scale == 0) {
            series = mpz_class(num / scale).get_str();
            if (mpz_class(num / scale) != dim) match = false;
        } else {
            series = num.get_str() + "/" + scale.get_str();
            match = false;
        }
        out << d << " " << dim.get_str() << " " << series << "\n";
    }
    out << "verdict: " << (match ? "MATCH" : "MISMATCH") << "\n";
    return match ? 0 : 1;
}

int cmd_check_axioms(const std::string& file, std::ostream& out) {
    InputSpec spec = load_input_file(file);
    Matroid m = spec.matroid();
    Multiplicity mult = spec.multiplicity();
    AxiomReport report = check_axioms(m, mult);
    out << report.to_string();
    return report.all() ? 0 : 1;
}

int cmd_validate(const std::string& file, const std::string& kind, std::ostream& out) {
    InputSpec spec = load_input_file(file);
    GroupStructure g = build_structure(spec, kind);
    StructureReport report = validate_structure(g);
    if (report.ok) {
        out << "structure is valid: every projection is surjective and all squares "
               "commute\n";
        return 0;
    }
    out << "structure is invalid:\n";
    for (const StructureIssue& issue : report.issues)
        out << "  " << issue.to_string() << "\n";
    return 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"arithmetic independence posets and Stanley-Reisner rings"};
    app.require_subcommand(1);

    std::string file, kind = "layer", dot_path;
    bool torsion_free = false;
    int max_degree = -1;

    CLI::App* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomials of the input");
    tutte_cmd->add_option("file", file)->required();

    CLI::App* poset_cmd =
        app.add_subcommand("poset", "f/h-vectors of the independence poset");
    poset_cmd->add_option("file", file)->required();
    poset_cmd->add_option("--structure", kind)->check(CLI::IsMember({"layer", "cyclic"}));
    poset_cmd->add_flag("--torsion-free", torsion_free);
    poset_cmd->add_option("--dot", dot_path);

    CLI::App* ideal_cmd =
        app.add_subcommand("ideal", "Stanley-Reisner ideal generators");
    ideal_cmd->add_option("file", file)->required();
    ideal_cmd->add_option("--structure", kind)->check(CLI::IsMember({"layer", "cyclic"}));
    ideal_cmd->add_flag("--torsion-free", torsion_free);

    CLI::App* hilbert_cmd = app.add_subcommand(
        "hilbert", "Hilbert function oracle against the closed-form series");
    hilbert_cmd->add_option("file", file)->required();
    hilbert_cmd->add_option("--structure", kind)
        ->check(CLI::IsMember({"layer", "cyclic"}));
    hilbert_cmd->add_flag("--torsion-free", torsion_free);
    hilbert_cmd->add_option("--max-degree", max_degree);

    CLI::App* axioms_cmd =
        app.add_subcommand("check-axioms", "arithmetic matroid axiom report");
    axioms_cmd->add_option("file", file)->required();

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "validate the group structure");
    validate_cmd->add_option("file", file)->required();
    validate_cmd->add_option("--structure", kind)
        ->check(CLI::IsMember({"layer", "cyclic"}));

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    storage.insert(storage.begin(), "arimat");
    for (std::string& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (tutte_cmd->parsed()) return cmd_tutte(file, out);
        if (poset_cmd->parsed()) return cmd_poset(file, kind, torsion_free, dot_path, out);
        if (ideal_cmd->parsed()) return cmd_ideal(file, kind, torsion_free, out);
        if (hilbert_cmd->parsed())
            return cmd_hilbert(file, kind, torsion_free, max_degree, out);
        if (axioms_cmd->parsed()) return cmd_check_axioms(file, out);
        if (validate_cmd->parsed()) return cmd_validate(file, kind, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace arimat
