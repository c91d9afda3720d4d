#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hodge/report.hpp"
#include "hodge/verify.hpp"

namespace {

// Exit codes: 0 success/verified, 1 verification mismatch, 2 input error,
// 3 internal invariant violation.
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

hodge::Json read_document(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw hodge::input_error("cannot open input file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return hodge::Json::parse(text);
    } catch (const std::exception& e) {
        throw hodge::input_error(std::string("invalid JSON: ") + e.what());
    }
}

int parse_window(const std::string& w) {
    // "a..b" with a = -b accepted; only the radius matters for the box checks.
    auto dots = w.find("..");
    if (dots == std::string::npos) throw hodge::input_error("window must look like \"-3..3\"");
    int lo = std::stoi(w.substr(0, dots));
    int hi = std::stoi(w.substr(dots + 2));
    if (lo > hi) throw hodge::input_error("window bounds out of order");
    return std::max(std::abs(lo), std::abs(hi));
}

int cmd_compute(const std::string& input, bool json_out, int max_page) {
    hodge::Json doc = read_document(input);
    hodge::EmbeddingSpec spec = hodge::spec_from_json(doc);
    hodge::SSReport rep = hodge::hodge_derham_ss(spec);
    if (max_page > 0 && max_page < (int)rep.pages.size()) {
        rep.pages.resize(max_page);
        rep.r_stab = max_page;
    }
    if (json_out)
        std::cout << hodge::to_json(rep).dump(2) << "\n";
    else
        std::cout << hodge::render_tables(rep);
    return kExitOk;
}

int cmd_compare(const std::string& input, bool json_out, std::optional<int> shift) {
    hodge::Json doc = read_document(input);
    hodge::EmbeddingSpec a = hodge::spec_from_json(doc);
    if (!doc.contains("compare")) throw hodge::input_error("compare needs a \"compare\" document");
    hodge::EmbeddingSpec b = hodge::spec_from_json(doc["compare"]);
    if (!shift && doc.contains("shift")) shift = doc["shift"].get<int>();
    hodge::IndependenceReport rep = hodge::compare_embeddings(a, b, shift);
    if (json_out)
        std::cout << hodge::to_json(rep).dump(2) << "\n";
    else
        std::cout << hodge::render_comparison(rep);
    return rep.verdict ? kExitOk : kExitMismatch;
}

int cmd_verify(const std::string& suite, bool json_out, int window) {
    hodge::SuiteResult res;
    if (suite == "plus")
        res = hodge::verify_plus_suite(window);
    else if (suite == "koszul")
        res = hodge::verify_koszul_suite(window);
    else if (suite == "euler")
        res = hodge::verify_euler_suite();
    else if (suite == "bernstein")
        res = hodge::verify_bernstein_suite();
    else if (suite == "all")
        res = hodge::verify_all(window);
    else
        throw hodge::input_error("unknown suite: " + suite +
                                 " (expected plus|koszul|euler|bernstein|all)");
    if (json_out) {
        hodge::Json j;
        j["suite"] = suite;
        j["passed"] = res.passed();
        j["total"] = res.total();
        hodge::Json checks = hodge::Json::array();
        for (const auto& c : res.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
        j["checks"] = checks;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : res.checks)
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
        std::cout << res.passed() << "/" << res.total() << " checks passed\n";
    }
    return res.all_pass() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hodge-de Rham spectral sequences of monomial affine varieties"};
    app.require_subcommand(1);

    std::string input = "-";
    bool json_out = false;
    int max_page = 0;
    std::string window = "-3..3";
    std::optional<int> shift;
    std::string suite = "all";

    CLI::App* compute = app.add_subcommand("compute", "spectral sequence of one embedding");
    compute->add_option("--input", input, "input JSON file (default stdin)");
    compute->add_flag("--json", json_out, "emit JSON instead of tables");
    compute->add_option("--max-page", max_page, "truncate the reported pages");

    CLI::App* compare = app.add_subcommand("compare", "compare two embeddings up to shift");
    compare->add_option("--input", input, "input JSON file with a \"compare\" member");
    compare->add_flag("--json", json_out, "emit JSON instead of tables");
    int shift_arg = INT32_MIN;
    compare->add_option("--shift", shift_arg, "expected bidegree shift t (default n_B - n_A)");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite on the catalog");
    verify->add_option("suite", suite, "plus|koszul|euler|bernstein|all");
    verify->add_flag("--json", json_out, "emit JSON instead of a pass/fail list");
    verify->add_option("--window", window, "graded box, e.g. -3..3");

    try {
        app.parse(argc, argv);
        if (compare->parsed() && shift_arg != INT32_MIN) shift = shift_arg;
        if (compute->parsed()) return cmd_compute(input, json_out, max_page);
        if (compare->parsed()) return cmd_compare(input, json_out, shift);
        return cmd_verify(suite, json_out, parse_window(window));
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInput : kExitOk;
    } catch (const hodge::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const hodge::invariant_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
