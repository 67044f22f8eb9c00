// Command-line front end: existence decisions, the Fourier-Mukai action,
// and lattice utilities over a surface descriptor file.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "enriques/enriques.hpp"

using namespace enriques;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitDecided = 0;
constexpr int kExitInputError = 1;
constexpr int kExitUnknown = 2;

struct Report {
    ordered_json doc;

    Report(const std::string& command) {
        doc["tool"] = std::string("enriques ") + kVersion;
        doc["command"] = command;
    }
    void emit(bool as_json) const {
        if (as_json) {
            std::cout << doc.dump(2) << "\n";
            return;
        }
        for (const auto& [key, value] : doc.items()) {
            if (value.is_array()) {
                for (const auto& item : value) {
                    if (item.is_object()) {
                        std::cout << key << " =";
                        for (const auto& [k2, v2] : item.items())
                            std::cout << ' ' << k2 << ':' << (v2.is_string() ? v2.get<std::string>() : v2.dump());
                        std::cout << "\n";
                    } else {
                        std::cout << key << " = "
                                  << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
                    }
                }
            } else {
                std::cout << key << " = "
                          << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
    }
};

SurfaceModel load_surface(const std::string& path, Coord coeff_bound, Coord height_bound,
                          std::uint64_t search_limit) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open surface descriptor '" + path + "'");
    SurfaceModel model = parse_surface_descriptor(in);
    if (coeff_bound > 0) model.coeff_bound = coeff_bound;
    if (height_bound > 0) model.height_bound = height_bound;
    if (search_limit > 0) model.search_limit = search_limit;
    auto violations = validate(model);
    if (!violations.empty()) {
        std::string msg = "invalid surface model:";
        for (const auto& v : violations) msg += "\n  " + v;
        throw ParseError(msg);
    }
    return model;
}

void fill_verdict(Report& report, const Verdict& v) {
    report.doc["nonempty"] = to_string(v.nonempty);
    report.doc["case"] = to_string(v.matched);
    if (v.witness) report.doc["witness"] = to_text(*v.witness);
    if (v.dimension) report.doc["dimension"] = *v.dimension;
    if (!v.notes.empty()) report.doc["note"] = v.notes;
}

ordered_json trace_json(const ReductionTrace& trace) {
    ordered_json steps = ordered_json::array();
    for (const auto& s : trace.steps) {
        ordered_json step;
        step["root"] = to_text(s.root);
        step["after"] = to_text(s.after);
        steps.push_back(step);
    }
    return steps;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice arithmetic for moduli of sheaves on Enriques surfaces"};
    app.require_subcommand(1);

    std::string surface_path, vector_text, class_a, class_b;
    Coord coeff_bound = 0, height_bound = 0;
    std::uint64_t search_limit = 0;
    bool as_json = false, with_trace = false, non_classical = false;
    bool spherical = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "emit the report as JSON");
        cmd->add_option("--coeff-bound", coeff_bound, "override the nodal-cycle coefficient bound");
        cmd->add_option("--height-bound", height_bound, "override the enumeration height bound");
        cmd->add_option("--search-limit", search_limit, "override the search safety limit");
    };

    auto* decide = app.add_subcommand("decide", "decide non-emptiness of the moduli space");
    decide->add_option("--surface", surface_path, "surface descriptor file")->required();
    decide->add_option("vector", vector_text, "Mukai vector (r,[c1,...,c10;t],s), s doubled")->required();
    decide->add_flag("--spherical", spherical, "use the rank-2 spherical criterion");
    decide->add_flag("--trace", with_trace, "include search detail");
    add_common(decide);

    auto* fm = app.add_subcommand("fm", "apply the Fourier-Mukai involution");
    fm->add_option("vector", vector_text, "Mukai vector")->required();
    fm->add_flag("--non-classical", non_classical, "treat the surface as non-classical (K_X = 0)");
    fm->add_flag("--json", as_json, "emit the report as JSON");

    auto* lattice = app.add_subcommand("lattice", "lattice utilities");
    lattice->require_subcommand(1);
    auto* lpair = lattice->add_subcommand("pair", "intersection pairing of two classes");
    lpair->add_option("a", class_a, "first class [c1,...,c10;t]")->required();
    lpair->add_option("b", class_b, "second class")->required();
    lpair->add_flag("--json", as_json, "emit the report as JSON");
    auto* lreduce = lattice->add_subcommand("reduce", "Weyl-reduce a class into the nef chamber");
    lreduce->add_option("--surface", surface_path, "surface descriptor file")->required();
    lreduce->add_option("class", class_a, "class to reduce")->required();
    lreduce->add_flag("--trace", with_trace, "include every reduction step");
    add_common(lreduce);
    auto* liso = lattice->add_subcommand("isotropic", "find an effective isotropic companion");
    liso->add_option("--surface", surface_path, "surface descriptor file")->required();
    liso->add_option("class", class_a, "effective class with positive square")->required();
    add_common(liso);
    auto* lroots = lattice->add_subcommand("roots", "count the E8-block roots (self-test)");
    lroots->add_flag("--json", as_json, "emit the report as JSON");

    auto* validate_cmd = app.add_subcommand("validate", "check a surface descriptor");
    validate_cmd->add_option("--surface", surface_path, "surface descriptor file")->required();
    validate_cmd->add_flag("--json", as_json, "emit the report as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (decide->parsed()) {
            Report report("decide");
            SurfaceModel model = load_surface(surface_path, coeff_bound, height_bound, search_limit);
            MukaiVector v = parse_mukai(vector_text);
            report.doc["surface"] = surface_path;
            report.doc["vector"] = to_text(v);
            Verdict verdict;
            if (spherical) verdict = decide_spherical_rank2(model, v);
            else if (v.r == 0) verdict = decide_rank0(model, v);
            else verdict = decide_existence(model, v);
            report.doc["q"] = mukai_self_pair(v);
            fill_verdict(report, verdict);
            report.emit(as_json);
            return verdict.nonempty == Existence::Unknown ? kExitUnknown : kExitDecided;
        }
        if (fm->parsed()) {
            Report report("fm");
            MukaiVector v = parse_mukai(vector_text);
            MukaiVector image = fm_ktheory(v);
            if (non_classical) image.c1.torsion = 0;
            report.doc["vector"] = to_text(v);
            report.doc["image"] = to_text(image);
            report.doc["chi"] = chi(v);
            report.doc["q"] = mukai_self_pair(v);
            report.doc["q_image"] = mukai_self_pair(image);
            report.doc["involution"] = fm_ktheory(fm_ktheory(v)) == v ? "ok" : "broken";
            report.emit(as_json);
            return kExitDecided;
        }
        if (lpair->parsed()) {
            Report report("lattice pair");
            NSClass a = parse_ns_class(class_a), b = parse_ns_class(class_b);
            report.doc["a"] = to_text(a);
            report.doc["b"] = to_text(b);
            report.doc["pair"] = pair(a, b);
            report.emit(as_json);
            return kExitDecided;
        }
        if (lreduce->parsed()) {
            Report report("lattice reduce");
            SurfaceModel model = load_surface(surface_path, coeff_bound, height_bound, search_limit);
            NSClass d = parse_ns_class(class_a);
            ReductionTrace trace = weyl_reduce(model, d);
            report.doc["class"] = to_text(d);
            report.doc["final"] = to_text(trace.final);
            report.doc["steps"] = trace.steps.size();
            if (with_trace) report.doc["trace"] = trace_json(trace);
            report.emit(as_json);
            return kExitDecided;
        }
        if (liso->parsed()) {
            Report report("lattice isotropic");
            SurfaceModel model = load_surface(surface_path, coeff_bound, height_bound, search_limit);
            NSClass d = parse_ns_class(class_a);
            try {
                NSClass f = isotropic_companion(model, d);
                report.doc["class"] = to_text(d);
                report.doc["companion"] = to_text(f);
                report.doc["pair"] = pair(d, f);
                report.emit(as_json);
                return kExitDecided;
            } catch (const NotFoundWithinBound& e) {
                report.doc["error"] = e.what();
                report.emit(as_json);
                return kExitUnknown;
            }
        }
        if (lroots->parsed()) {
            Report report("lattice roots");
            auto roots = enumerate_by_norm(-2, kE8RootHeight, Block::E8);
            report.doc["roots"] = roots.size();
            report.emit(as_json);
            return roots.size() == 240 ? kExitDecided : kExitInputError;
        }
        if (validate_cmd->parsed()) {
            Report report("validate");
            std::ifstream in(surface_path);
            if (!in) throw ParseError("cannot open surface descriptor '" + surface_path + "'");
            SurfaceModel model = parse_surface_descriptor(in);
            auto violations = validate(model);
            report.doc["surface"] = surface_path;
            report.doc["valid"] = violations.empty();
            if (!violations.empty()) report.doc["violation"] = violations;
            report.emit(as_json);
            return violations.empty() ? kExitDecided : kExitInputError;
        }
    } catch (const SearchBoundExceeded& e) {
        std::cerr << "unknown: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
