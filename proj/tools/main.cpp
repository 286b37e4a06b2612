#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "genusbound/casefile.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw genusbound::InputError("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

genusbound::Json error_json(const std::string& rule, const std::string& message) {
    return genusbound::Json{{"error", {{"rule", rule}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
    using namespace genusbound;

    CLI::App app{"genusbound: exact-arithmetic minimal-genus bounds from adjunction inequalities"};
    std::string input = "-";
    std::string format = "json";
    bool lenient = false;
    bool strict_char = false;
    bool self_check = false;
    std::uint64_t seed = 0;
    app.add_option("--input", input, "case file path, or - for standard input");
    app.add_option("--format", format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_flag("--lenient", lenient, "accept unknown fields");
    app.add_flag("--strict-char", strict_char,
                 "treat c1^2 != tau (mod 8) as an error instead of a warning");
    app.add_flag("--self-check", self_check, "run the oracle-backed property suites and exit");
    app.add_option("--seed", seed, "seed for --self-check");
    CLI11_PARSE(app, argc, argv);

    if (self_check) {
        return run_self_check(seed, std::cout) ? kExitOk : kExitInternal;
    }

    std::string text;
    try {
        text = read_input(input);
    } catch (const InputError& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }

    ParseOptions popts;
    popts.strict_fields = !lenient;
    ParseResult parsed = parse_cases(text, popts);
    if (!parsed.ok()) {
        Json errors = Json::array();
        for (const auto& e : parsed.errors) {
            errors.push_back(Json{{"path", e.path}, {"rule", e.rule}, {"message", e.message}});
        }
        Json doc = Json{{"errors", errors}};
        std::cout << doc.dump(2) << "\n";
        return kExitInput;
    }

    RunOptions ropts;
    ropts.strict_characteristic = strict_char;
    Json reports = Json::array();
    int exit_code = kExitOk;
    for (const auto& c : parsed.cases) {
        try {
            reports.push_back(run_query(c, ropts));
        } catch (const InternalError& e) {
            reports.push_back(error_json("internal", e.what()));
            exit_code = kExitInternal;
        } catch (const InputError& e) {
            reports.push_back(error_json("input", e.what()));
            if (exit_code != kExitInternal) exit_code = kExitInput;
        } catch (const HypothesisError& e) {
            reports.push_back(error_json("hypothesis", e.what()));
            if (exit_code != kExitInternal) exit_code = kExitInput;
        }
    }

    if (format == "table") {
        for (const auto& r : reports) {
            if (r.contains("error")) {
                std::cout << "error (" << r["error"]["rule"].get<std::string>()
                          << "): " << r["error"]["message"].get<std::string>() << "\n";
            } else {
                std::cout << render_table(r);
            }
        }
    } else {
        if (parsed.batch) {
            std::cout << reports.dump(2) << "\n";
        } else {
            std::cout << reports.front().dump(2) << "\n";
        }
    }
    return exit_code;
}
