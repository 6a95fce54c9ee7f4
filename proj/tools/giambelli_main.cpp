/* Command-line front end: diagrams, decompositions, Giambelli-type
   matrices, twist steps, full stable-equivalence chains and verification
   suites. Machine output goes to stdout, diagnostics to stderr; parse
   errors exit 2, verification failures exit 1. */

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "giambelli/gmatrix.hpp"
#include "giambelli/stabeq.hpp"
#include "giambelli/strips.hpp"
#include "giambelli/symfun.hpp"
#include "giambelli/verify.hpp"

using namespace giambelli;

namespace {

struct Options {
    std::string shape_text;
    std::string format = "ascii";
    std::string directions;
    bool vertical = false;
    bool jt = false;
    bool dual = false;
    int at = 0;
    int vars = 0;
    int max_boxes = 6;
    bool connected = true;
    int trials = 100;
    std::string golden_dir;
    std::string check_dir;
};

SkewShape parse_shape_or_exit(const std::string& text) {
    try {
        return SkewShape::parse(text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        std::exit(2);
    }
}

std::vector<Step> parse_directions(const std::string& text) {
    std::vector<Step> steps;
    for (char ch : text) {
        if (ch == 'R' || ch == 'r')
            steps.push_back(Step::Right);
        else if (ch == 'U' || ch == 'u')
            steps.push_back(Step::Up);
        else
            throw std::invalid_argument("directions must be a string over R and U");
    }
    return steps;
}

OutsideDecomposition select_decomposition(const SkewShape& shape, const Options& opt) {
    if (!opt.directions.empty())
        return decomposition_from_cutting_strip(shape, parse_directions(opt.directions));
    if (opt.vertical) return vertical_decomposition(shape);
    return horizontal_decomposition(shape);
}

int resolve_vars(const SkewShape& shape, const Options& opt) {
    int needed = std::max(1, shape.box_count());
    if (opt.vars == 0) return needed;
    if (opt.vars < needed) {
        std::cerr << "error: --vars " << opt.vars << " is below the box count " << needed
                  << "; equality would not be faithful" << std::endl;
        std::exit(2);
    }
    return opt.vars;
}

nlohmann::json decomposition_json(const OutsideDecomposition& pi) {
    return nlohmann::json::parse(decomposition_to_json(pi));
}

void print_decomposition(const OutsideDecomposition& pi, const std::string& format) {
    if (format == "json") {
        std::cout << decomposition_json(pi).dump() << std::endl;
        return;
    }
    std::cout << "strips:   " << pi.bracket_list() << "\n";
    std::cout << "cutting:  " << pi.cutting().directions_string() << "  (contents "
              << pi.cutting().content_min() << ".." << pi.cutting().content_max() << ")\n";
}

void print_matrix(const SymMatrix& m, const std::string& format) {
    if (format == "json")
        std::cout << m.to_json() << std::endl;
    else if (format == "tex")
        std::cout << m.latex();
    else
        std::cout << m.ascii();
}

int run_diagram(const Options& opt) {
    SkewShape shape = parse_shape_or_exit(opt.shape_text);
    if (opt.format == "json") {
        nlohmann::json j;
        j["shape"] = shape.to_string();
        j["boxes"] = nlohmann::json::array();
        for (BoxCoord b : shape.boxes())
            j["boxes"].push_back({{"row", b.row}, {"col", b.col}, {"content", content(b)}});
        j["connected"] = shape.edgewise_connected();
        j["content_min"] = shape.content_min();
        j["content_max"] = shape.content_max();
        std::cout << j.dump() << std::endl;
    } else {
        std::cout << shape.ascii();
    }
    return 0;
}

int run_decompose(const Options& opt) {
    SkewShape shape = parse_shape_or_exit(opt.shape_text);
    print_decomposition(select_decomposition(shape, opt), opt.format);
    return 0;
}

int run_matrix(const Options& opt, bool canonical) {
    SkewShape shape = parse_shape_or_exit(opt.shape_text);
    if (opt.jt) {
        print_matrix(jacobi_trudi(shape), opt.format);
        return 0;
    }
    if (opt.dual) {
        print_matrix(dual_jacobi_trudi(shape), opt.format);
        return 0;
    }
    OutsideDecomposition pi = select_decomposition(shape, opt);
    if (canonical) {
        CanonicalForm canon = canonical_form(pi);
        print_matrix(canon.matrix, opt.format);
        if (opt.format == "ascii")
            std::cerr << "row sign " << canon.row_sign << ", col sign " << canon.col_sign
                      << "\n";
    } else {
        print_matrix(giambelli_matrix(pi), opt.format);
    }
    return 0;
}

int run_twist(const Options& opt) {
    SkewShape shape = parse_shape_or_exit(opt.shape_text);
    OutsideDecomposition pi = select_decomposition(shape, opt);
    TwistOps ops = twist_transform_ops(pi, opt.at);
    if (opt.format == "json") {
        nlohmann::json j;
        j["rule"] = to_string(ops.twist.rule);
        j["case"] = to_string(ops.twist.tcase);
        j["before"] = decomposition_json(pi);
        j["after"] = decomposition_json(ops.twist.decomposition);
        j["ops"] = nlohmann::json::array();
        for (size_t k = 0; k < ops.ops.size(); ++k)
            j["ops"].push_back({{"describe", ops.ops[k].describe()}, {"note", ops.notes[k]}});
        std::cout << j.dump() << std::endl;
        return 0;
    }
    std::cout << "rule " << to_string(ops.twist.rule) << " realizing case "
              << to_string(ops.twist.tcase) << "\n";
    print_decomposition(ops.twist.decomposition, opt.format);
    for (const AtomicOp& op : ops.ops) std::cout << "  " << op.describe() << "\n";
    return 0;
}

std::string stage_text(const ChainStage& st, int index) {
    std::ostringstream out;
    out << "stage " << index << ": " << st.note << "\n";
    out << "strips:   " << st.decomposition.bracket_list() << "\n";
    out << "cutting:  " << st.decomposition.cutting().directions_string() << "\n";
    out << canonical_form(st.decomposition).matrix.ascii();
    return out.str();
}

int run_chain(const Options& opt) {
    SkewShape shape = parse_shape_or_exit(opt.shape_text);
    OpLog log = chain(shape);
    std::vector<ChainStage> printable;
    for (const ChainStage& st : log.stages)
        if (st.canonical) printable.push_back(st);

    if (opt.format == "json") {
        std::cout << log.to_json() << std::endl;
    } else {
        for (size_t k = 0; k < printable.size(); ++k)
            std::cout << stage_text(printable[k], static_cast<int>(k) + 1) << "\n";
        std::cout << "ops total: " << log.ops.size() << "; twist cases:";
        for (const std::string& c : log.cases) std::cout << " " << c;
        std::cout << "\n";
    }

    namespace fs = std::filesystem;
    if (!opt.golden_dir.empty()) {
        fs::create_directories(opt.golden_dir);
        for (size_t k = 0; k < printable.size(); ++k) {
            std::ostringstream name;
            name << "stage_" << (k + 1 < 10 ? "0" : "") << k + 1 << ".txt";
            std::ofstream out(fs::path(opt.golden_dir) / name.str());
            out << stage_text(printable[k], static_cast<int>(k) + 1);
        }
        std::ofstream out(fs::path(opt.golden_dir) / "chain.json");
        out << log.to_json() << "\n";
    }
    if (!opt.check_dir.empty()) {
        bool ok = true;
        for (size_t k = 0; k < printable.size(); ++k) {
            std::ostringstream name;
            name << "stage_" << (k + 1 < 10 ? "0" : "") << k + 1 << ".txt";
            std::ifstream in(fs::path(opt.check_dir) / name.str());
            std::stringstream buffer;
            buffer << in.rdbuf();
            if (!in || buffer.str() != stage_text(printable[k], static_cast<int>(k) + 1)) {
                std::cerr << "golden mismatch: " << name.str() << std::endl;
                ok = false;
            }
        }
        std::ifstream in(fs::path(opt.check_dir) / "chain.json");
        std::stringstream buffer;
        buffer << in.rdbuf();
        if (!in || buffer.str() != log.to_json() + "\n") {
            std::cerr << "golden mismatch: chain.json" << std::endl;
            ok = false;
        }
        if (!ok) return 1;
    }

    // Replay the log once so `chain` never prints an unverified trace.
    int nvars = resolve_vars(shape, opt);
    ChainReport report = verify_chain(shape, nvars);
    if (!report.ok()) {
        std::cerr << report.summary();
        return 1;
    }
    std::cerr << "replay verified: " << report.total_ops << " ops at N=" << nvars
              << std::endl;
    return 0;
}

int run_verify(const Options& opt) {
    uint64_t seed = 20250810;
    if (const char* env = std::getenv("GIAMBELLI_SEED")) seed = std::strtoull(env, nullptr, 10);
    bool ok = true;
    auto show = [&ok](const SuiteResult& r) {
        std::cout << (r.ok() ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.checked
                  << " checks)" << std::endl;
        for (const std::string& m : r.messages) std::cout << "       " << m << std::endl;
        ok = ok && r.ok();
    };
    show(suite_giambelli_determinants(opt.max_boxes));
    show(suite_bijection_roundtrip(opt.max_boxes));
    show(suite_twist_cases(opt.max_boxes));
    show(suite_canonical_sign(opt.max_boxes));
    show(suite_glue_identity(opt.trials, 5, seed));
    show(suite_chain_soundness(std::min(opt.max_boxes, 6)));
    return ok ? 0 : 1;
}

int run_oracle(const Options& opt) {
    SkewShape shape = parse_shape_or_exit(opt.shape_text);
    int nvars = resolve_vars(shape, opt);
    SymPoly p = schur_poly(shape, nvars);
    if (opt.format == "json")
        std::cout << p.to_json() << std::endl;
    else
        std::cout << p.to_string() << std::endl;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Giambelli-type matrices of skew Schur functions: outside decompositions, "
                 "twist transformations and stable-equivalence operation logs"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd, bool tex = false) {
        cmd->add_option("--format", opt.format,
                        tex ? "output format: ascii, json or tex" : "output format: ascii or json")
            ->check(tex ? CLI::IsMember({"ascii", "json", "tex"})
                        : CLI::IsMember({"ascii", "json"}));
    };
    auto add_selection = [&](CLI::App* cmd) {
        cmd->add_option("--directions", opt.directions,
                        "cutting-strip steps RU... selecting the decomposition");
        cmd->add_flag("--vertical", opt.vertical, "use the vertical decomposition");
    };

    CLI::App* diagram = app.add_subcommand("diagram", "render a skew diagram");
    diagram->add_option("shape", opt.shape_text, "shape, e.g. 6,5,3,1/4,4,3")->required();
    add_format(diagram);

    CLI::App* decompose = app.add_subcommand("decompose", "outside decomposition of a shape");
    decompose->add_option("shape", opt.shape_text)->required();
    add_format(decompose);
    add_selection(decompose);

    CLI::App* matrix = app.add_subcommand("matrix", "Giambelli-type matrix of a decomposition");
    matrix->add_option("shape", opt.shape_text)->required();
    add_format(matrix, true);
    add_selection(matrix);
    matrix->add_flag("--jt", opt.jt, "print the Jacobi-Trudi matrix instead");
    matrix->add_flag("--dual", opt.dual, "print the dual Jacobi-Trudi matrix instead");

    CLI::App* canonical = app.add_subcommand("canonical", "canonical form of the matrix");
    canonical->add_option("shape", opt.shape_text)->required();
    add_format(canonical, true);
    add_selection(canonical);

    CLI::App* twist_cmd = app.add_subcommand("twist", "one twist transformation with its ops");
    twist_cmd->add_option("shape", opt.shape_text)->required();
    twist_cmd->add_option("--at", opt.at, "content to twist at")->required();
    add_format(twist_cmd);
    add_selection(twist_cmd);

    CLI::App* chain_cmd =
        app.add_subcommand("chain", "stable-equivalence chain from Jacobi-Trudi to dual");
    chain_cmd->add_option("shape", opt.shape_text)->required();
    add_format(chain_cmd);
    chain_cmd->add_option("--vars", opt.vars, "number of variables for replay verification");
    chain_cmd->add_option("--golden", opt.golden_dir, "write golden stage files");
    chain_cmd->add_option("--check-golden", opt.check_dir, "compare against golden files");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    verify_cmd->add_option("--max-boxes", opt.max_boxes, "corpus bound (default 6)");
    verify_cmd->add_flag("--connected", opt.connected,
                         "restrict to connected shapes (always on for exhaustive suites)");
    verify_cmd->add_option("--trials", opt.trials, "random glue-identity trials");

    CLI::App* oracle = app.add_subcommand("oracle", "skew Schur polynomial by tableaux");
    oracle->add_option("shape", opt.shape_text)->required();
    add_format(oracle);
    oracle->add_option("--vars", opt.vars, "number of variables (default: box count)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (diagram->parsed()) return run_diagram(opt);
        if (decompose->parsed()) return run_decompose(opt);
        if (matrix->parsed()) return run_matrix(opt, false);
        if (canonical->parsed()) return run_matrix(opt, true);
        if (twist_cmd->parsed()) return run_twist(opt);
        if (chain_cmd->parsed()) return run_chain(opt);
        if (verify_cmd->parsed()) return run_verify(opt);
        if (oracle->parsed()) return run_oracle(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 0;
}
