// Command-line surface: analyze representations, emit zoo entries,
// reproduce the classification table, and run the Lorentz scan.
//
// Exit codes: 0 success, 2 input validation error, 3 internal consistency
// violation (a structural assertion failed: a bug or a counterexample).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lieclass/analyze.hpp"
#include "lieclass/representation.hpp"
#include "lieclass/zoo.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw lieclass::ValidationError("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw lieclass::ValidationError("cannot open output file '" + path + "'");
    out << content;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lieclass: exact classification of matrix Lie algebra representations"};
    app.require_subcommand(1);

    std::string analyze_path;
    std::string analyze_format = "text";
    auto* analyze = app.add_subcommand("analyze", "analyze a representation file");
    analyze->add_option("file", analyze_path, "input JSON document")->required();
    analyze->add_option("--format", analyze_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    std::string zoo_key;
    std::vector<long> zoo_params;
    std::string zoo_out;
    auto* zoo_cmd = app.add_subcommand("zoo", "emit a catalog representation as JSON");
    zoo_cmd->add_option("key", zoo_key, "entry key")->required();
    zoo_cmd->add_option("params", zoo_params, "integer parameters");
    zoo_cmd->add_option("-o,--output", zoo_out, "output file (default stdout)");

    auto* table_cmd = app.add_subcommand("check-table", "reproduce the classification table");

    std::size_t scan_n = 2;
    std::size_t scan_trials = 100;
    std::uint64_t scan_seed = 1;
    auto* scan_cmd = app.add_subcommand("lorentz-scan", "random subalgebra scan of so(1,n)");
    scan_cmd->add_option("--n", scan_n, "n in so(1,n), 2..6")->required();
    scan_cmd->add_option("--trials", scan_trials, "number of trials")->required();
    scan_cmd->add_option("--seed", scan_seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            const auto rep = lieclass::parse_representation(read_file(analyze_path));
            const auto report = lieclass::run_analysis(rep);
            if (analyze_format == "json")
                std::cout << lieclass::report_to_json(report).dump(2) << "\n";
            else
                std::cout << lieclass::report_to_text(report);
            return kExitOk;
        }
        if (*zoo_cmd) {
            const auto rep = lieclass::zoo::make(zoo_key, zoo_params);
            write_output(zoo_out, lieclass::representation_to_json(rep).dump(2) + "\n");
            return kExitOk;
        }
        if (*table_cmd) {
            const auto result = lieclass::check_table(lieclass::zoo::catalog());
            std::cout << result.text;
            std::cout << (result.all_ok ? "all rows match\n" : "table mismatch\n");
            return result.all_ok ? kExitOk : kExitInternal;
        }
        if (*scan_cmd) {
            const auto report = lieclass::lorentz_scan(scan_n, scan_trials, scan_seed);
            std::cout << lieclass::lorentz_scan_to_json(report).dump(2) << "\n";
            return kExitOk;
        }
    } catch (const lieclass::InternalCheckError& e) {
        std::cerr << "internal consistency violation: " << e.what() << "\n";
        return kExitInternal;
    } catch (const lieclass::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
