#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nwschur/nwschur.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitIntegrity = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw nwschur::ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nwschur::Diagram load_diagram(const std::string& path, int n_rows_flag) {
    std::string text = read_input(path);
    if (text.find_first_not_of(" \t\r\n") == std::string::npos)
        throw nwschur::ParseError("input '" + path + "' is empty: expected a grid or JSON diagram");
    return nwschur::parse_diagram(text, n_rows_flag);
}

void emit(const nlohmann::json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

int effective_rows(const nwschur::Diagram& d, int n_rows_flag) {
    int n = n_rows_flag > 0 ? n_rows_flag : d.n_rows();
    if (n < d.max_row())
        throw nwschur::PreconditionError("--n-rows is smaller than the diagram's last occupied row");
    return n;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact characters of Schur and Weyl modules for generalized Young diagrams"};
    app.require_subcommand(1);

    bool pretty = false;
    int threads = 0;
    if (const char* env = std::getenv("NWSCHUR_THREADS")) threads = std::atoi(env);
    app.add_flag("--pretty", pretty, "indent JSON output for reading");
    app.add_option("--threads", threads, "cap on worker threads (results are identical for any value)")
        ->check(CLI::NonNegativeNumber);

    std::string file;
    int n_rows = 0;
    bool want_expand = false, want_dim = false;
    std::string module_kind = "schur";
    int rect_rows = 0, rect_cols = 0;
    std::size_t oracle_squares = nwschur::OracleLimits{}.max_squares;
    int oracle_rows = nwschur::OracleLimits{}.max_rows;

    auto add_diagram_arg = [&](CLI::App* cmd, bool with_rows = true) {
        cmd->fallthrough(); // lets --pretty / --threads appear after the subcommand
        cmd->add_option("file", file, "diagram file (grid or JSON), '-' for stdin")->required();
        if (with_rows)
            cmd->add_option("--n-rows", n_rows, "row bound N; defaults to the file's bound");
    };

    CLI::App* c_check = app.add_subcommand("check", "report northwest / lexicographic / blowup status");
    add_diagram_arg(c_check);

    CLI::App* c_blowup = app.add_subcommand("blowup", "intersection closure with phantom flags");
    add_diagram_arg(c_blowup);

    CLI::App* c_tabloids = app.add_subcommand("tabloids", "standard column tabloids with weights and d matrices");
    add_diagram_arg(c_tabloids);

    CLI::App* c_perms = app.add_subcommand("perms", "monotone permutation sequence with per-step checks");
    add_diagram_arg(c_perms);

    CLI::App* c_char = app.add_subcommand("char", "character of the Schur or Weyl module");
    add_diagram_arg(c_char);
    c_char->add_option("--module", module_kind, "schur or weyl")
        ->check(CLI::IsMember({"schur", "weyl"}));
    c_char->add_flag("--expand", want_expand, "expand in the Schur basis");
    c_char->add_flag("--dim", want_dim, "include the module dimension");

    CLI::App* c_oracle = app.add_subcommand("oracle-char", "brute-force character from the tensor definition");
    add_diagram_arg(c_oracle);
    c_oracle->add_flag("--expand", want_expand, "expand in the Schur basis");
    c_oracle->add_flag("--dim", want_dim, "include the module dimension");
    c_oracle->add_option("--max-squares", oracle_squares, "square budget for the oracle");
    c_oracle->add_option("--max-oracle-rows", oracle_rows, "row budget for the oracle");

    CLI::App* c_duality = app.add_subcommand("duality", "rectangle complement duality check");
    add_diagram_arg(c_duality, false);
    c_duality->add_option("--rect-rows", rect_rows, "rectangle row count N")->required();
    c_duality->add_option("--rect-cols", rect_cols, "rectangle column count r")->required();

    CLI::App* c_poincare = app.add_subcommand("poincare", "Poincare polynomial and Betti numbers");
    add_diagram_arg(c_poincare);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_check->parsed()) {
            nwschur::Diagram d = load_diagram(file, n_rows);
            emit(nwschur::check_report(d), pretty);
        } else if (c_blowup->parsed()) {
            nwschur::Diagram d = load_diagram(file, n_rows);
            emit(nwschur::blowup_report(d), pretty);
        } else if (c_tabloids->parsed()) {
            nwschur::Diagram d = load_diagram(file, n_rows);
            emit(nwschur::tabloids_report(d, effective_rows(d, n_rows)), pretty);
        } else if (c_perms->parsed()) {
            nwschur::Diagram d = load_diagram(file, n_rows);
            emit(nwschur::perms_report(d, effective_rows(d, n_rows)), pretty);
        } else if (c_char->parsed()) {
            nwschur::Diagram d = load_diagram(file, n_rows);
            emit(nwschur::character_report(d, effective_rows(d, n_rows), module_kind == "weyl",
                                           want_expand, want_dim),
                 pretty);
        } else if (c_oracle->parsed()) {
            nwschur::Diagram d = load_diagram(file, n_rows);
            nwschur::OracleLimits limits{oracle_squares, oracle_rows};
            emit(nwschur::oracle_report(d, effective_rows(d, n_rows), want_expand, want_dim, limits),
                 pretty);
        } else if (c_duality->parsed()) {
            nwschur::Diagram d = load_diagram(file, rect_rows);
            emit(nwschur::duality_report(d, rect_rows, rect_cols), pretty);
        } else if (c_poincare->parsed()) {
            nwschur::Diagram d = load_diagram(file, n_rows);
            emit(nwschur::poincare_report(d, effective_rows(d, n_rows)), pretty);
        }
    } catch (const nwschur::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const nwschur::NotNorthwestError& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (c_char->parsed())
            std::cerr << "hint: `oracle-char` computes the character of any diagram from the tensor definition\n";
        return kExitPrecondition;
    } catch (const nwschur::IntegrityError& e) {
        std::cerr << "internal integrity failure: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const nwschur::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return 0;
}
