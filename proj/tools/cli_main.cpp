#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "qlf/job.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact annihilators and function-field kernels of differential forms"};

    std::string input_path;
    bool from_stdin = false;
    bool as_json = false;
    bool as_text = false;
    bool check = false;
    std::optional<uint64_t> seed;
    std::optional<std::size_t> budget;

    app.add_option("--input", input_path, "job file (JSON)");
    app.add_flag("--stdin", from_stdin, "read the job from standard input");
    app.add_flag("--json", as_json, "emit the JSON report (default)");
    app.add_flag("--text", as_text, "emit a text rendering of the report");
    app.add_option("--seed", seed, "override the job seed");
    app.add_option("--budget", budget, "override the job budget");
    app.add_flag("--check", check, "cross-validate closed-form answers against the solver");

    CLI11_PARSE(app, argc, argv);

    if (from_stdin == !input_path.empty()) {
        std::cerr << "error: give exactly one of --input <file> or --stdin" << std::endl;
        return 2;
    }
    if (as_json && as_text) {
        std::cerr << "error: --json and --text exclude each other" << std::endl;
        return 2;
    }

    std::string text;
    if (from_stdin) {
        std::ostringstream os;
        os << std::cin.rdbuf();
        text = os.str();
    } else {
        std::ifstream in(input_path);
        if (!in) {
            std::cerr << "error: cannot open '" << input_path << "'" << std::endl;
            return 2;
        }
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }

    try {
        qlf::JobSpec job = qlf::parse_job(text);
        if (seed) job.seed = *seed;
        if (budget) job.budget = *budget;
        qlf::Report report = qlf::run_job(job, check);
        if (as_text)
            std::cout << qlf::render_text(report.json);
        else
            std::cout << report.json.dump(2) << "\n";
        return report.failed_crosscheck ? 4 : 0;
    } catch (const qlf::Error& e) {
        std::cerr << "error [" << qlf::error_code_name(e.code()) << "]: " << e.what() << std::endl;
        return qlf::exit_code_for(e);
    }
}
