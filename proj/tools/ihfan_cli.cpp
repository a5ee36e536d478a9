#include <CLI11.hpp>

#include "ihfan/fan_io.hpp"
#include "ihfan/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

ihfan::Fan load_fan(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ihfan::SchemaError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    auto doc = ihfan::parse_fan_document(buf.str());
    ihfan::Fan f = ihfan::document_to_fan(doc);
    if (f.name().empty()) f.set_name(path);
    return f;
}

void print_report(const ihfan::Outcome& out, bool as_json) {
    if (as_json) std::cout << out.report.dump(2) << "\n";
    else std::cout << ihfan::render_text(out.report);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial intersection cohomology of fans"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    bool strict = false;
    int degree_bound = -1;
    unsigned long seed = 1;
    app.add_flag("--json", as_json, "emit machine-readable JSON reports");
    app.add_flag("--strict", strict, "exit nonzero on any failed verdict");
    app.add_option("--degree-bound", degree_bound,
                   "t-degree bound for oracle computations (default 2n+2)");
    app.add_option("--seed", seed, "seed for the random example generators");

    std::string fan_path, example_name, cone_spec;
    bool relative = false, want_h = false, want_g = false;

    auto* compute = app.add_subcommand("compute", "Poincare polynomials via the recursion");
    compute->add_option("fan", fan_path, "fan document (JSON)")->required();
    compute->add_flag("--relative", relative, "also compute the relative polynomial");
    compute->add_flag("--h-vector", want_h, "print the h-vector");
    compute->add_flag("--g-vector", want_g, "print the g-vector");

    auto* verify = app.add_subcommand("verify", "full sheaf-theoretic audit");
    verify->add_option("fan", fan_path, "fan document (JSON)")->required();

    auto* lefschetz = app.add_subcommand("lefschetz", "hard Lefschetz rank report for a cone");
    lefschetz->add_option("fan", fan_path, "fan document (JSON)")->required();
    lefschetz->add_option("--cone", cone_spec, "cone id, or rays like '0,1,2'")->required();

    auto* decompose =
        app.add_subcommand("decompose", "triangulate, push forward, list the summands");
    decompose->add_option("fan", fan_path, "fan document (JSON)")->required();

    auto* examples = app.add_subcommand("examples", "emit bundled example fans");
    examples->add_option("name", example_name, "example name (omit to list)");

    CLI11_PARSE(app, argc, argv);

    try {
        ihfan::Outcome out;
        if (app.got_subcommand(compute)) {
            out = ihfan::compute_report(load_fan(fan_path), relative, want_h, want_g);
        } else if (app.got_subcommand(verify)) {
            out = ihfan::verify_report(load_fan(fan_path), degree_bound);
        } else if (app.got_subcommand(lefschetz)) {
            ihfan::Fan f = load_fan(fan_path);
            int cone_id = -1;
            if (cone_spec.find(',') != std::string::npos) {
                std::vector<int> rays;
                std::stringstream ss(cone_spec);
                std::string tok;
                while (std::getline(ss, tok, ',')) rays.push_back(std::stoi(tok));
                std::sort(rays.begin(), rays.end());
                cone_id = f.cone_by_rays(rays);
                if (cone_id < 0) throw ihfan::Error("no cone with rays " + cone_spec);
            } else {
                cone_id = std::stoi(cone_spec);
            }
            out = ihfan::lefschetz_report(f, cone_id, degree_bound);
        } else if (app.got_subcommand(decompose)) {
            out = ihfan::decompose_report(load_fan(fan_path), degree_bound);
        } else if (app.got_subcommand(examples)) {
            if (example_name.empty()) {
                for (const auto& n : ihfan::example_names()) std::cout << n << "\n";
                return 0;
            }
            std::cout << ihfan::emit_fan_document(ihfan::example_document(example_name, seed));
            return 0;
        }
        print_report(out, as_json);
        return (strict && !out.ok) ? 1 : 0;
    } catch (const ihfan::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ihfan::Error& e) {
        // a refused or failed computation is a verdict failure, not misuse
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
